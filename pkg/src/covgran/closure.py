"""Closure and interior operators generated by binary relations, and axiom
checking for arbitrary operator tables.

The closure of X under relation R adds to X every point whose successor set
meets X; the interior is its complement dual. Tables are checked against the
closure axioms: the empty set stays empty (C1), extensivity (C2), pairwise
additivity (C3), determination by singleton closures (C4, cross-checked on
two-set unions), and idempotence (C5). C1-C3 make a table a closure
operator, C1-C4 a quasi-discrete one, C1-C3 plus C5 a topological one.

Every C1-C4 table comes from a binary relation and
:func:`relation_from_table` recovers one; note the transposition: the
singleton row of x lists the elements whose successor sets reach x, so the
recovered relation reads columns, not rows. The *topological neighbourhood*
of u is {u} together with its successors, which is always the least set u
is interior to; it is unrelated to the covering granules of
:mod:`covgran.granulation`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AxiomPreconditionError
from .model import OperatorTable, Relation, Subset, _same_universe, bits


def cl_from_relation(relation: Relation, x: Subset) -> Subset:
    """X together with every point whose successor set meets X."""
    u = relation.universe
    _same_universe(u, x.universe)
    mask = x.mask
    for i, succ in enumerate(relation.successors):
        if succ & x.mask:
            mask |= 1 << i
    return Subset(u, mask)


def int_from_relation(relation: Relation, x: Subset) -> Subset:
    """Points of X whose successor sets stay inside X; dual of the closure."""
    u = relation.universe
    _same_universe(u, x.universe)
    mask = 0
    for i, succ in enumerate(relation.successors):
        if x.mask >> i & 1 and succ & ~x.mask == 0:
            mask |= 1 << i
    return Subset(u, mask)


def neighbourhood(relation: Relation, name: str) -> Subset:
    """The topological neighbourhood {u} together with the successors of u;
    the minimal neighbourhood of u under the closure the relation generates."""
    u = relation.universe
    i = u.index(name)
    return Subset(u, (1 << i) | relation.successors[i])


def closure_table(relation: Relation) -> OperatorTable:
    """Materialize the relation's closure operator into a total table."""
    u = relation.universe
    outputs = []
    for mask in range(1 << u.n):
        out = mask
        for i, succ in enumerate(relation.successors):
            if succ & mask:
                out |= 1 << i
        outputs.append(out)
    return OperatorTable(u, tuple(outputs))


@dataclass(frozen=True)
class ClosureReport:
    """Outcome of exhaustively checking the closure axioms on one table."""

    c1: bool
    c2: bool
    c3: bool
    c4: bool
    c5: bool

    @property
    def cech(self) -> bool:
        return self.c1 and self.c2 and self.c3

    @property
    def quasi_discrete(self) -> bool:
        return self.cech and self.c4

    @property
    def topological(self) -> bool:
        return self.cech and self.c5

    def flags(self) -> dict[str, bool]:
        return {"C1": self.c1, "C2": self.c2, "C3": self.c3, "C4": self.c4, "C5": self.c5}


def check_closure_axioms(table: OperatorTable) -> ClosureReport:
    """Check C1-C5, quantifying over all subsets and all subset pairs."""
    out = table.outputs
    size = len(out)
    c1 = out[0] == 0
    c2 = all(mask & ~out[mask] == 0 for mask in range(size))
    c3 = all(
        out[a | b] == out[a] | out[b] for a in range(size) for b in range(size)
    )
    # Singleton form of quasi-discreteness, cross-checked against additivity
    # over two-set unions (the pairwise c3 loop above already is that check).
    c4 = c3
    for mask in range(size):
        combined = 0
        for i in bits(mask):
            combined |= out[1 << i]
        if out[mask] != combined:
            c4 = False
            break
    c5 = all(out[out[mask]] == out[mask] for mask in range(size))
    return ClosureReport(c1, c2, c3, c4, c5)


def minimal_neighbourhood(table: OperatorTable, name: str) -> Subset | None:
    """The least X with u interior to X, or None when no least one exists.

    X is a neighbourhood of u when u avoids the closure of the complement of
    X. On a finite universe the minimum, if any, must be the intersection of
    all neighbourhoods, so that intersection is computed and then verified.
    Requires a table satisfying C1-C3.
    """
    report = check_closure_axioms(table)
    if not report.cech:
        raise AxiomPreconditionError(
            "minimal neighbourhoods are defined for closure operators (C1-C3)"
        )
    u = table.universe
    i = u.index(name)
    full = u.full_mask
    meet = full
    for mask in range(len(table.outputs)):
        if not table.outputs[full ^ mask] >> i & 1:
            meet &= mask
    if not table.outputs[full ^ meet] >> i & 1:
        return Subset(u, meet)
    return None


def relation_from_table(table: OperatorTable) -> Relation:
    """Recover a relation whose closure operator reproduces a C1-C4 table:
    x gains successor y exactly when x lies in the closure of {y}."""
    report = check_closure_axioms(table)
    if not report.quasi_discrete:
        raise AxiomPreconditionError(
            "only quasi-discrete tables (C1-C4) are generated by relations"
        )
    u = table.universe
    succ = [0] * u.n
    for j in range(u.n):
        row = table.outputs[1 << j]
        for i in bits(row):
            succ[i] |= 1 << j
    return Relation(u, tuple(succ))
