"""Exhaustive enumeration of small structures and machine verification of
the package's structural claims.

Every claim quantifies over a complete enumeration of its domain at the
requested universe size: all coverings (up to four elements), all tolerances,
all binary relations, all reflexive relations (equivalently, all
quasi-discrete closure tables), or all preorders. Subset quantifiers inside a
claim always range over the full power set; nothing is randomized. A few
expensive claim/domain combinations switch to a fixed-stride deterministic
sample at the largest size, marked as such in their results.

Positive claims are expected to hold everywhere; any failure is reported
with a fully serialized witness (a pasteable covering or relation document)
and is never patched over. Negative claims search for a counterexample and
report the first one in enumeration order; finding one is the expected
outcome wherever the property genuinely fails.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from math import comb
from typing import Any

from . import fileio
from .approx import (
    OperatorKind,
    covering_lower,
    covering_upper,
    kind_relation,
    literal_lower,
    literal_upper,
    lower_via_interior,
    upper_via_closure,
)
from .axioms import check_axioms, reconstruct
from .closure import (
    check_closure_axioms,
    cl_from_relation,
    closure_table,
    minimal_neighbourhood,
    relation_from_table,
)
from .errors import InputError
from .granulation import (
    core_system,
    granule_profile,
    induced_tolerance,
    point_closure_system,
    specialization_preorder,
    star_system,
)
from .model import (
    Covering,
    OperatorTable,
    Relation,
    Subset,
    SubsetFamily,
    Universe,
    bits,
    family_complement,
    refines,
)
from .tolerance import (
    Tolerance,
    blocks,
    cheng_condition,
    classes,
    kernel,
    kernel_system,
    kernel_system_masks,
    kernel_via_blocks,
)

MAX_COVERING_N = 4
MAX_TOLERANCE_N = 5
MAX_RELATION_N = 4


# ----------------------------------------------------------------------
# Closed-form counts and enumerations
# ----------------------------------------------------------------------

def covering_count(n: int) -> int:
    """Number of coverings of an n-element universe, by inclusion-exclusion
    over the elements missed by a family of nonempty subsets."""
    return sum((-1) ** k * comb(n, k) * 2 ** (2 ** (n - k) - 1) for k in range(n + 1))


def tolerance_count(n: int) -> int:
    """Number of tolerances: one free bit per unordered pair."""
    return 2 ** (n * (n - 1) // 2)


def enumerate_coverings(n: int) -> Iterator[Covering]:
    """Every covering of the numbered n-element universe, exactly once.

    Families are indexed by a bitmask over the nonempty block masks, so the
    order is deterministic; five elements would mean about two billion
    coverings, hence the hard cap.
    """
    if not 1 <= n <= MAX_COVERING_N:
        raise InputError(f"covering enumeration supports 1..{MAX_COVERING_N} elements")
    u = Universe.numbered(n)
    full = u.full_mask
    for selection in range(1, 1 << full):
        masks = []
        union = 0
        rest = selection
        while rest:
            low = rest & -rest
            block = low.bit_length()  # selection bit k stands for block mask k+1
            masks.append(block)
            union |= block
            rest ^= low
        if union == full:
            yield Covering(u, tuple(masks))


def enumerate_tolerances(n: int) -> Iterator[Tolerance]:
    """Every tolerance on the numbered n-element universe, by edge bitmask."""
    if not 1 <= n <= MAX_TOLERANCE_N:
        raise InputError(f"tolerance enumeration supports 1..{MAX_TOLERANCE_N} elements")
    u = Universe.numbered(n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for code in range(1 << len(pairs)):
        succ = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                succ[i] |= 1 << j
                succ[j] |= 1 << i
        yield Tolerance(Relation(u, tuple(succ)))


def enumerate_relations(n: int) -> Iterator[Relation]:
    """Every binary relation on the numbered n-element universe."""
    if not 1 <= n <= MAX_RELATION_N:
        raise InputError(f"relation enumeration supports 1..{MAX_RELATION_N} elements")
    u = Universe.numbered(n)
    full = u.full_mask
    for code in range(1 << (n * n)):
        yield Relation(u, tuple(code >> (i * n) & full for i in range(n)))


def enumerate_reflexive_relations(n: int) -> Iterator[Relation]:
    """Every reflexive relation; these parametrize the quasi-discrete
    closure tables bijectively through their singleton rows."""
    if not 1 <= n <= MAX_RELATION_N:
        raise InputError(f"relation enumeration supports 1..{MAX_RELATION_N} elements")
    u = Universe.numbered(n)
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for code in range(1 << len(off)):
        succ = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(off):
            if code >> k & 1:
                succ[i] |= 1 << j
        yield Relation(u, tuple(succ))


def enumerate_preorders(n: int) -> Iterator[Relation]:
    """Every reflexive transitive relation."""
    for rel in enumerate_reflexive_relations(n):
        if rel.is_transitive():
            yield rel


# ----------------------------------------------------------------------
# Shared table builders
# ----------------------------------------------------------------------

def upper_table(kind: OperatorKind, covering: SubsetFamily) -> OperatorTable:
    """Materialize one covering upper operator into a total table."""
    u = covering.universe
    succ = kind_relation(kind, covering).successors
    outputs = []
    for m in range(1 << u.n):
        out = 0
        for i, s in enumerate(succ):
            if s & m:
                out |= 1 << i
        outputs.append(out)
    return OperatorTable(u, tuple(outputs))


def additive_table(universe: Universe, rows: tuple[int, ...]) -> OperatorTable:
    """The additive extension of the given singleton rows."""
    outputs = []
    for m in range(1 << universe.n):
        out = 0
        for i in bits(m):
            out |= rows[i]
        outputs.append(out)
    return OperatorTable(universe, tuple(outputs))


# ----------------------------------------------------------------------
# Claim machinery
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    claim_id: str
    summary: str
    domain: str
    check: Callable[..., list[str]] | None = None
    witness: Callable[..., str | None] | None = None
    strides: dict[int, int] = field(default_factory=dict)

    @property
    def negative(self) -> bool:
        return self.witness is not None


@dataclass
class ClaimResult:
    """Outcome of one claim over one enumerated domain size."""

    claim_id: str
    summary: str
    negative: bool
    checked: int = 0
    sampled: bool = False
    failures: list[str] = field(default_factory=list)
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.negative or not self.failures

    @property
    def status(self) -> str:
        if self.negative:
            return "witness-found" if self.witness is not None else "no-witness"
        return "pass" if not self.failures else "fail"

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim_id,
            "summary": self.summary,
            "negative": self.negative,
            "status": self.status,
            "checked": self.checked,
            "sampled": self.sampled,
            "failures": self.failures,
            "witness": self.witness,
        }


def _serialize(domain: str, structure: Any) -> str:
    if domain == "covering":
        return fileio.covering_json(structure)
    if domain == "tolerance":
        return fileio.relation_json(structure.relation)
    return fileio.relation_json(structure)


# ----------------------------------------------------------------------
# Structural claims over coverings
# ----------------------------------------------------------------------

def _chk_refinement(cov: Covering) -> list[str]:
    fails = []
    if not refines(point_closure_system(cov), cov):
        fails.append("point closure system fails to refine the covering")
    if not refines(cov, star_system(cov)):
        fails.append("covering fails to refine the star system")
    return fails


def _chk_p_idempotent(cov: Covering) -> list[str]:
    p = point_closure_system(cov)
    if point_closure_system(p) != p:
        return ["point closure transformation is not idempotent"]
    return []


def _chk_point_structure(cov: Covering) -> list[str]:
    u = cov.universe
    n = u.n
    downs = granule_profile(cov).downs
    fails = []
    for x in range(n):
        dx = downs[x]
        for y in range(n):
            if bool(dx >> y & 1) != (downs[y] & ~dx == 0):
                fails.append(
                    f"membership of {u.name(y)} in the down granule of {u.name(x)}"
                    " disagrees with granule containment"
                )
        union = 0
        for z in bits(dx):
            union |= downs[z]
        meet = u.full_mask
        for z in range(n):
            if downs[z] >> x & 1:
                meet &= downs[z]
        if union != dx:
            fails.append(f"down granule of {u.name(x)} is not the union of its members' granules")
        if meet != dx:
            fails.append(f"down granule of {u.name(x)} is not the meet of the granules containing it")
    return fails


def _chk_dual_preorder(cov: Covering) -> list[str]:
    if specialization_preorder(family_complement(cov)) != specialization_preorder(cov).inverse():
        return ["the preorder of the complemented family is not the dual preorder"]
    return []


def _chk_relational(cov: Covering) -> list[str]:
    # Recompute every granule from the definitional quantifier forms and
    # compare with the profile routes.
    u = cov.universe
    n = u.n
    prof = granule_profile(cov)
    fails = []
    for x in range(n):
        up = 0
        down = 0
        for y in range(n):
            if all(m >> x & 1 for m in cov.masks if m >> y & 1):
                up |= 1 << y  # x below y: every block with y has x
            if all(m >> y & 1 for m in cov.masks if m >> x & 1):
                down |= 1 << y
        if up != prof.ups[x]:
            fails.append(f"up granule of {u.name(x)} differs from its preorder successor set")
        if down != prof.downs[x]:
            fails.append(f"down granule of {u.name(x)} differs from its preorder predecessor set")
        shared = 0
        for m in cov.masks:
            if m >> x & 1:
                shared |= m
        if shared != induced_tolerance(cov).successors[x]:
            fails.append(f"tolerance class of {u.name(x)} differs from its star")
    pre = specialization_preorder(cov)
    if not (pre.is_reflexive() and pre.is_transitive()):
        fails.append("specialization preorder is not a preorder")
    if point_closure_system(family_complement(cov)) != core_system(cov):
        fails.append("core system differs from the point closure system of the complement")
    if star_system(cov) != Covering(u, induced_tolerance(cov).successors):
        fails.append("star system differs from the tolerance class family")
    return fails


def _chk_core_upset(cov: Covering) -> list[str]:
    prof = granule_profile(cov)
    n = cov.universe.n
    fails = []
    for x in range(n):
        upset = 0
        for y in range(n):
            if prof.downs[y] >> x & 1:
                upset |= 1 << y
        if upset != prof.ups[x]:
            fails.append(
                f"up granule of {cov.universe.name(x)} differs from the"
                " elements whose down granule contains it"
            )
    return fails


def _chk_psbeta(cov: Covering) -> list[str]:
    t = Tolerance(induced_tolerance(cov))
    kernels = kernel_system(t)
    after_star = point_closure_system(star_system(cov))
    fails = []
    if after_star != kernels:
        fails.append("point closure system of the star system differs from the kernel system")
    if not refines(point_closure_system(cov), kernels):
        fails.append("kernel system is not refined by the point closure system")
    if cov == blocks(t) and after_star != point_closure_system(cov):
        fails.append("equality fails although the covering is its own block family")
    return fails


def _chk_spsbeta(alpha: Covering) -> list[str]:
    beta = point_closure_system(alpha)
    t_beta = induced_tolerance(beta)
    fails = []
    if induced_tolerance(kernel_system(Tolerance(t_beta))) != t_beta:
        fails.append("tolerance of a point-closure covering is not recovered from its kernels")
    sp = star_system(beta)
    if star_system(point_closure_system(sp)) != sp:
        fails.append("star-of-point-closure transformation is not idempotent")
    return fails


# ----------------------------------------------------------------------
# Tolerance claims
# ----------------------------------------------------------------------

def _chk_block_class(t: Tolerance) -> list[str]:
    u = t.universe
    n = u.n
    bl = blocks(t)
    fails = []
    for x in range(n):
        union = 0
        for b in bl.masks:
            if b >> x & 1:
                union |= b
        if union != t.class_mask(x):
            fails.append(f"class of {u.name(x)} is not the union of its blocks")
    for b in bl.masks:
        meet = u.full_mask
        for x in bits(b):
            meet &= t.class_mask(x)
        if meet != b:
            fails.append(f"block {Subset(u, b)} is not the meet of its members' classes")
    if classes(t) != star_system(bl):
        fails.append("class family differs from the star system of the block family")
    return fails


def _chk_kernel_routes(t: Tolerance) -> list[str]:
    fails = []
    for name in t.universe.elements:
        if kernel(t, name) != kernel_via_blocks(t, name):
            fails.append(f"class and block routes disagree on the kernel of {name}")
    ks = kernel_system(t)
    if ks != point_closure_system(blocks(t)):
        fails.append("kernel system differs from the point closure system of the blocks")
    if ks != point_closure_system(classes(t)):
        fails.append("kernel system differs from the point closure system of the classes")
    return fails


def _chk_pbc(t: Tolerance) -> list[str]:
    u = t.universe
    n = u.n
    kern = kernel_system_masks(t)
    fails = []
    for b in blocks(t).masks:
        union = 0
        for y in bits(b):
            union |= kern[y]
        if union != b:
            fails.append(f"block {Subset(u, b)} is not the union of its members' kernels")
    for x in range(n):
        cm = t.class_mask(x)
        union = 0
        for y in bits(cm):
            union |= kern[y]
        if union != cm:
            fails.append(f"class of {u.name(x)} is not the union of its members' kernels")
        cover = 0
        for y in range(n):
            if kern[y] >> x & 1:
                cover |= kern[y]
        if cover & ~cm:
            fails.append(f"kernels containing {u.name(x)} escape its class")
    return fails


def _recovered(t: Tolerance) -> bool:
    return induced_tolerance(kernel_system(t)) == t.relation


def _chk_cheng_forward(t: Tolerance) -> list[str]:
    if cheng_condition(t) and not _recovered(t):
        return ["kernel condition holds but the tolerance is not recovered from its kernels"]
    return []


def _chk_cheng_backward(t: Tolerance) -> list[str]:
    if _recovered(t) and not cheng_condition(t):
        return ["tolerance is recovered from its kernels but the kernel condition fails"]
    return []


def _chk_blocks_roundtrip(t: Tolerance) -> list[str]:
    if induced_tolerance(blocks(t)) != t.relation:
        return ["tolerance is not recovered from its block family"]
    return []


# ----------------------------------------------------------------------
# Operator form claims
# ----------------------------------------------------------------------

def _forms_check(kind: OperatorKind) -> Callable[[Covering], list[str]]:
    def chk(cov: Covering) -> list[str]:
        u = cov.universe
        for m in range(1 << u.n):
            x = Subset(u, m)
            up = covering_upper(kind, cov, x)
            if up != literal_upper(kind, cov, x):
                return [f"{kind.value} upper relational/literal mismatch at {x}"]
            if up != upper_via_closure(kind, cov, x):
                return [f"{kind.value} upper differs from the closure route at {x}"]
            lo = covering_lower(kind, cov, x)
            if lo != literal_lower(kind, cov, x):
                return [f"{kind.value} lower relational/literal mismatch at {x}"]
            if lo != lower_via_interior(kind, cov, x):
                return [f"{kind.value} lower differs from the interior route at {x}"]
            if lo != covering_upper(kind, cov, x.complement()).complement():
                return [f"{kind.value} duality fails at {x}"]
        return []

    return chk


def _chk_second_is_first(cov: Covering) -> list[str]:
    u = cov.universe
    p = point_closure_system(cov)
    for m in range(1 << u.n):
        x = Subset(u, m)
        if covering_upper(OperatorKind.SECOND, cov, x) != covering_upper(
            OperatorKind.FIRST, p, x
        ):
            return [f"second-kind upper differs from first-kind on the point closure system at {x}"]
    return []


def _chk_upper_idempotence(cov: Covering) -> list[str]:
    u = cov.universe
    fails = []
    for kind in (OperatorKind.THIRD, OperatorKind.FOURTH):
        for m in range(1 << u.n):
            x = Subset(u, m)
            h = covering_upper(kind, cov, x)
            if covering_upper(kind, cov, h) != h:
                fails.append(f"{kind.value} upper operator is not idempotent at {x}")
                break
    return fails


def _chk_adjunction(cov: Covering) -> list[str]:
    u = cov.universe
    size = 1 << u.n
    th = [covering_upper(OperatorKind.THIRD, cov, Subset(u, m)).mask for m in range(size)]
    xl = [covering_lower(OperatorKind.FOURTH, cov, Subset(u, m)).mask for m in range(size)]
    for a in range(size):
        for b in range(size):
            if (th[a] & ~b == 0) != (a & ~xl[b] == 0):
                return [
                    f"adjunction fails between {Subset(u, a)} and {Subset(u, b)}"
                ]
    return []


# ----------------------------------------------------------------------
# Axiomatization claims
# ----------------------------------------------------------------------

def _sound_check(kind: OperatorKind) -> Callable[[Covering], list[str]]:
    def chk(cov: Covering) -> list[str]:
        report = check_axioms(upper_table(kind, cov))
        if kind is OperatorKind.FIRST:
            ok = report.first_kind
        elif kind is OperatorKind.SECOND:
            ok = report.second_kind
        else:
            ok = report.closure_kind
        if not ok:
            bad = [tag for tag, v in report.flags().items() if not v]
            return [f"{kind.value} upper table fails {', '.join(bad)}"]
        return []

    return chk


def _chk_first_complete(t: Tolerance) -> list[str]:
    u = t.universe
    tbl = additive_table(u, t.relation.successors)
    report = check_axioms(tbl)
    fails = []
    if not report.first_kind:
        return ["additive symmetric extensive table fails its own axiom set"]
    for alt in (False, True):
        cov = reconstruct(OperatorKind.FIRST, tbl, alternative=alt)
        if upper_table(OperatorKind.FIRST, cov) != tbl:
            fails.append(f"first-kind round trip fails (alternative={alt})")
    return fails


def _chk_second_complete(t: Tolerance) -> list[str]:
    u = t.universe
    tbl = additive_table(u, t.relation.successors)
    report = check_axioms(tbl)
    fails = []
    if report.kernel_witnessed != cheng_condition(t):
        fails.append("kernel axiom flag disagrees with the kernel condition of the tolerance")
    if report.second_kind:
        for alt in (False, True):
            cov = reconstruct(OperatorKind.SECOND, tbl, alternative=alt)
            if upper_table(OperatorKind.SECOND, cov) != tbl:
                fails.append(f"second-kind round trip fails (alternative={alt})")
    return fails


def _chk_third_fourth_complete(pre: Relation) -> list[str]:
    tbl = closure_table(pre)
    report = check_axioms(tbl)
    if not report.closure_kind:
        return ["closure table of a preorder fails the idempotent axiom set"]
    fails = []
    cov3 = reconstruct(OperatorKind.THIRD, tbl)
    if upper_table(OperatorKind.THIRD, cov3) != tbl:
        fails.append("third-kind round trip fails")
    cov4 = reconstruct(OperatorKind.FOURTH, tbl)
    if upper_table(OperatorKind.FOURTH, cov4) != tbl:
        fails.append("fourth-kind round trip fails")
    return fails


def _chk_fh_5h_cheng(cov: Covering) -> list[str]:
    report = check_axioms(upper_table(OperatorKind.FIRST, cov))
    if report.kernel_witnessed != cheng_condition(Tolerance(induced_tolerance(cov))):
        return ["kernel axiom on the first-kind table disagrees with the kernel condition"]
    return []


# ----------------------------------------------------------------------
# Closure operator claims
# ----------------------------------------------------------------------

def _chk_closure_sound(rel: Relation) -> list[str]:
    report = check_closure_axioms(closure_table(rel))
    if not report.quasi_discrete:
        bad = [tag for tag, v in report.flags().items() if not v and tag != "C5"]
        return [f"closure generated by a relation fails {', '.join(bad)}"]
    return []


def _chk_closure_complete(rel: Relation) -> list[str]:
    # Reflexive singleton rows extended additively give exactly the
    # quasi-discrete tables; each must round-trip through a relation.
    tbl = additive_table(rel.universe, rel.successors)
    if not check_closure_axioms(tbl).quasi_discrete:
        return ["additive reflexive table is not quasi-discrete"]
    if closure_table(relation_from_table(tbl)) != tbl:
        return ["quasi-discrete table round trip fails"]
    return []


def _chk_symmetric_minimal(rel: Relation) -> list[str]:
    u = rel.universe
    tbl = closure_table(rel)
    characterized = all(
        minimal_neighbourhood(tbl, name) == cl_from_relation(rel, u.singleton(name))
        for name in u.elements
    )
    if rel.is_symmetric() != characterized:
        return [
            "symmetry disagrees with singleton closures being the minimal neighbourhoods"
        ]
    return []


def _chk_minimal_neighbourhood(rel: Relation) -> list[str]:
    tbl = additive_table(rel.universe, rel.successors)
    report = check_closure_axioms(tbl)
    existing = all(
        minimal_neighbourhood(tbl, name) is not None for name in rel.universe.elements
    )
    fails = []
    if report.c4 != existing:
        fails.append("singleton determination disagrees with minimal neighbourhood existence")
    if not (report.c4 and existing):
        fails.append("a finite closure table must be singleton-determined with minimal neighbourhoods")
    return fails


def _chk_interior_duality(rel: Relation) -> list[str]:
    u = rel.universe
    out = additive_table(u, rel.successors).outputs
    size = len(out)
    full = u.full_mask
    interior = [full ^ out[full ^ m] for m in range(size)]
    closure_additive = all(
        out[a | b] == out[a] | out[b] for a in range(size) for b in range(size)
    )
    interior_multiplicative = all(
        interior[a & b] == interior[a] & interior[b]
        for a in range(size)
        for b in range(size)
    )
    if closure_additive != interior_multiplicative:
        return ["union additivity of the closure disagrees with meet distribution of the interior"]
    if not closure_additive:
        return ["additive table unexpectedly fails pairwise additivity"]
    return []


def _chk_preorder_topological(pre: Relation) -> list[str]:
    report = check_closure_axioms(closure_table(pre))
    if not (report.quasi_discrete and report.topological):
        return ["closure of a preorder is not a quasi-discrete topological closure"]
    return []


# ----------------------------------------------------------------------
# Counting claims
# ----------------------------------------------------------------------

def _chk_count_coverings(n: int) -> tuple[int, list[str]]:
    total = sum(1 for _ in enumerate_coverings(n))
    expected = covering_count(n)
    if total != expected:
        return total, [f"enumerated {total} coverings, closed form gives {expected}"]
    return total, []


def _chk_count_tolerances(n: int) -> tuple[int, list[str]]:
    total = sum(1 for _ in enumerate_tolerances(n))
    expected = tolerance_count(n)
    if total != expected:
        return total, [f"enumerated {total} tolerances, closed form gives {expected}"]
    return total, []


# ----------------------------------------------------------------------
# Negative claims: counterexample searches
# ----------------------------------------------------------------------

def _wit_pbc_strictness(t: Tolerance) -> str | None:
    u = t.universe
    kern = kernel_system_masks(t)
    for x in range(u.n):
        cover = 0
        for y in range(u.n):
            if kern[y] >> x & 1:
                cover |= kern[y]
        cm = t.class_mask(x)
        if cover != cm:
            return (
                f"kernels containing {u.name(x)} union to {Subset(u, cover)},"
                f" strictly inside its class {Subset(u, cm)}"
            )
    return None


def _wit_psbeta_converse(cov: Covering) -> str | None:
    t = Tolerance(induced_tolerance(cov))
    if point_closure_system(star_system(cov)) == point_closure_system(cov):
        bl = blocks(t)
        if cov != bl:
            return (
                "point closure system survives the star transformation,"
                f" yet the covering differs from the block family {bl}"
            )
    return None


# ----------------------------------------------------------------------
# Registry
# ----------------------------------------------------------------------

_SAMPLED_COVERING = {4: 101}
_SAMPLED_RELATION = {4: 17}

CLAIMS: tuple[Claim, ...] = (
    Claim("count-coverings", "covering enumeration matches the closed-form count", "counts", _chk_count_coverings),
    Claim("count-tolerances", "tolerance enumeration matches the closed-form count", "counts", _chk_count_tolerances),
    Claim("prop-refinement", "star system refines the covering, covering refines the point closure system", "covering", _chk_refinement),
    Claim("prop-P-idempotent", "the point closure transformation is idempotent", "covering", _chk_p_idempotent),
    Claim("prop-point-structure", "down granules: membership equals containment, union and meet recover them", "covering", _chk_point_structure),
    Claim("prop-dual-preorder", "complementing the family dualizes the specialization preorder", "covering", _chk_dual_preorder),
    Claim("thm-relational", "granule systems match their relational characterizations", "covering", _chk_relational),
    Claim("prop-core-upset", "the up granule collects the elements whose down granule contains the point", "covering", _chk_core_upset),
    Claim("prop-PSBeta", "point closures of the star system are the kernels and refine into the point closures", "covering", _chk_psbeta),
    Claim("thm-SPSBeta", "point-closure coverings induce kernel-recoverable tolerances", "covering", _chk_spsbeta),
    Claim("prop-block-class", "classes and maximal blocks reconstruct each other", "tolerance", _chk_block_class),
    Claim("prop-kernel-routes", "kernels agree between the class route and the block route", "tolerance", _chk_kernel_routes),
    Claim("prop-PBC", "blocks and classes are unions of kernels; kernels containing a point stay in its class", "tolerance", _chk_pbc),
    Claim("thm-Cheng-forward", "the kernel condition implies recovery of the tolerance from its kernels", "tolerance", _chk_cheng_forward),
    Claim("thm-Cheng-backward", "recovery of the tolerance from its kernels implies the kernel condition", "tolerance", _chk_cheng_backward),
    Claim("blocks-roundtrip", "a tolerance is recovered from its maximal block family", "tolerance", _chk_blocks_roundtrip),
    Claim("prop-first-forms", "first-kind operators match their literal, relational and closure forms dually", "covering", _forms_check(OperatorKind.FIRST), strides=_SAMPLED_COVERING),
    Claim("prop-second-forms", "second-kind operators match their literal, relational and closure forms dually", "covering", _forms_check(OperatorKind.SECOND), strides=_SAMPLED_COVERING),
    Claim("prop-third-forms", "third-kind operators match their literal, relational and closure forms dually", "covering", _forms_check(OperatorKind.THIRD), strides=_SAMPLED_COVERING),
    Claim("prop-fourth-forms", "fourth-kind operators match their literal, relational and closure forms dually", "covering", _forms_check(OperatorKind.FOURTH), strides=_SAMPLED_COVERING),
    Claim("second-is-first-on-P", "the second kind is the first kind over the point closure system", "covering", _chk_second_is_first, strides=_SAMPLED_COVERING),
    Claim("upper-idempotence", "third- and fourth-kind upper operators are idempotent", "covering", _chk_upper_idempotence, strides=_SAMPLED_COVERING),
    Claim("adjunction-third-fourth", "third-kind upper and fourth-kind lower operators are adjoint", "covering", _chk_adjunction, strides=_SAMPLED_COVERING),
    Claim("thm-first-sound", "first-kind tables satisfy the additive symmetric axiom set", "covering", _sound_check(OperatorKind.FIRST), strides=_SAMPLED_COVERING),
    Claim("thm-second-sound", "second-kind tables satisfy the additive symmetric kernel axiom set", "covering", _sound_check(OperatorKind.SECOND), strides=_SAMPLED_COVERING),
    Claim("thm-third-sound", "third-kind tables satisfy the idempotent axiom set", "covering", _sound_check(OperatorKind.THIRD), strides=_SAMPLED_COVERING),
    Claim("thm-fourth-sound", "fourth-kind tables satisfy the idempotent axiom set", "covering", _sound_check(OperatorKind.FOURTH), strides=_SAMPLED_COVERING),
    Claim("thm-first-complete", "every table passing the first-kind axioms round-trips through a covering", "tolerance", _chk_first_complete),
    Claim("thm-second-complete", "every table passing the second-kind axioms round-trips through a covering", "tolerance", _chk_second_complete),
    Claim("thm-third-fourth-complete", "every idempotent-axiom table round-trips through both kinds of covering", "preorder", _chk_third_fourth_complete),
    Claim("fh-5H-cheng", "the kernel axiom on first-kind tables matches the kernel condition of the tolerance", "covering", _chk_fh_5h_cheng, strides=_SAMPLED_COVERING),
    Claim("thm-closure-relation-sound", "closures generated by relations are quasi-discrete", "relation", _chk_closure_sound, strides=_SAMPLED_RELATION),
    Claim("thm-closure-relation-complete", "every quasi-discrete table is generated by a recoverable relation", "reflexive_relation", _chk_closure_complete),
    Claim("prop-symmetric-minimal", "symmetry is equivalent to singleton closures being minimal neighbourhoods", "relation", _chk_symmetric_minimal, strides=_SAMPLED_RELATION),
    Claim("prop-minimal-neighbourhood", "singleton determination is equivalent to minimal neighbourhood existence", "reflexive_relation", _chk_minimal_neighbourhood),
    Claim("prop-interior-duality", "closure additivity over unions mirrors interior distribution over meets", "reflexive_relation", _chk_interior_duality),
    Claim("preorders-topological", "preorders generate quasi-discrete topological closures", "preorder", _chk_preorder_topological),
    Claim("prop-PBC-strictness", "search: union of kernels containing a point strictly inside its class", "tolerance", witness=_wit_pbc_strictness),
    Claim("prop-PSBeta-converse", "search: kernel-stable covering that is not a block family", "covering", witness=_wit_psbeta_converse),
)

CLAIMS_BY_ID: dict[str, Claim] = {c.claim_id: c for c in CLAIMS}

_DOMAIN_ENUM: dict[str, Callable[[int], Iterator[Any]]] = {
    "covering": enumerate_coverings,
    "tolerance": enumerate_tolerances,
    "relation": enumerate_relations,
    "reflexive_relation": enumerate_reflexive_relations,
    "preorder": enumerate_preorders,
}


def _select(claim_ids: Any) -> list[Claim]:
    if claim_ids is None:
        return list(CLAIMS)
    wanted = list(claim_ids)
    unknown = [i for i in wanted if i not in CLAIMS_BY_ID]
    if unknown:
        raise InputError(f"unknown claim id(s): {', '.join(sorted(unknown))}")
    keep = set(wanted)
    return [c for c in CLAIMS if c.claim_id in keep]


def run_suite(n: int, claim_ids: Any = None) -> list[ClaimResult]:
    """Run the selected claims (all by default) over every enumerated
    structure at universe size n, returning one result per claim in
    registry order. Deterministic: identical inputs give identical results.
    """
    if not 1 <= n <= MAX_COVERING_N:
        raise InputError(f"verification runs at universe sizes 1..{MAX_COVERING_N}")
    selected = _select(claim_ids)
    results = {
        c.claim_id: ClaimResult(c.claim_id, c.summary, c.negative) for c in selected
    }

    for claim in selected:
        if claim.domain == "counts":
            checked, failures = claim.check(n)
            results[claim.claim_id].checked = checked
            results[claim.claim_id].failures.extend(failures)

    for domain, enum_fn in _DOMAIN_ENUM.items():
        group = [c for c in selected if c.domain == domain]
        if not group:
            continue
        strides = {}
        active: dict[str, Claim] = {}
        for c in group:
            stride = c.strides.get(n, 1)
            strides[c.claim_id] = stride
            active[c.claim_id] = c
            if stride > 1:
                results[c.claim_id].sampled = True
        finished: set[str] = set()
        for index, structure in enumerate(enum_fn(n)):
            for claim_id, claim in active.items():
                if claim_id in finished or index % strides[claim_id]:
                    continue
                result = results[claim_id]
                result.checked += 1
                if claim.negative:
                    found = claim.witness(structure)
                    if found is not None:
                        result.witness = f"{_serialize(domain, structure)}: {found}"
                        finished.add(claim_id)
                else:
                    for message in claim.check(structure):
                        result.failures.append(
                            f"{_serialize(domain, structure)}: {message}"
                        )
    return [results[c.claim_id] for c in selected]


def find_counterexample(property_id: str, n: int) -> str | None:
    """First witness of a registered negative claim in enumeration order,
    or None when the property holds throughout the enumerated domain."""
    claim = CLAIMS_BY_ID.get(property_id)
    if claim is None or not claim.negative:
        known = ", ".join(c.claim_id for c in CLAIMS if c.negative)
        raise InputError(
            f"unknown negative property {property_id!r}; registered: {known}"
        )
    for structure in _DOMAIN_ENUM[claim.domain](n):
        found = claim.witness(structure)
        if found is not None:
            return f"{_serialize(claim.domain, structure)}: {found}"
    return None
