"""JSON file formats for coverings, relations and operator tables.

Covering:  {"universe": ["1","2","3"], "blocks": [["1","3"], ["2","3"], ["3"]]}
Relation:  {"universe": [...], "pairs": [["1","3"], ...]}
Table:     {"universe": [...], "map": [[[...input...], [...output...]], ...]}
           where the map lists all 2**n input subsets exactly once.

Malformed documents raise :class:`ParseError`; well-formed documents whose
content is invalid (unknown elements, non-covering block families,
non-total tables) raise :class:`InputError` from the model constructors.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InputError, ParseError
from .model import Covering, OperatorTable, Relation, SubsetFamily, Universe


def _load_document(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _universe_from(doc: Any) -> Universe:
    if not isinstance(doc, dict) or "universe" not in doc:
        raise ParseError("document must be an object with a 'universe' key")
    names = doc["universe"]
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        raise ParseError("'universe' must be a list of strings")
    return Universe(tuple(names))


def _name_list(value: Any, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise ParseError(f"{what} must be a list of element names")
    return value


def covering_from_dict(doc: Any) -> Covering:
    universe = _universe_from(doc)
    if "blocks" not in doc or not isinstance(doc["blocks"], list):
        raise ParseError("covering document needs a 'blocks' list")
    blocks = [_name_list(b, "each block") for b in doc["blocks"]]
    return Covering.from_names(universe, blocks)


def covering_to_dict(covering: SubsetFamily) -> dict[str, Any]:
    return {
        "universe": list(covering.universe.elements),
        "blocks": [list(block.names()) for block in covering.blocks],
    }


def relation_from_dict(doc: Any) -> Relation:
    universe = _universe_from(doc)
    if "pairs" not in doc or not isinstance(doc["pairs"], list):
        raise ParseError("relation document needs a 'pairs' list")
    pairs = []
    for entry in doc["pairs"]:
        if not (
            isinstance(entry, list)
            and len(entry) == 2
            and all(isinstance(s, str) for s in entry)
        ):
            raise ParseError("each pair must be a two-element list of names")
        pairs.append((entry[0], entry[1]))
    return Relation.from_pairs(universe, pairs)


def relation_to_dict(relation: Relation) -> dict[str, Any]:
    return {
        "universe": list(relation.universe.elements),
        "pairs": [[a, b] for a, b in relation.pairs()],
    }


def table_from_dict(doc: Any) -> OperatorTable:
    universe = _universe_from(doc)
    if "map" not in doc or not isinstance(doc["map"], list):
        raise ParseError("table document needs a 'map' list")
    outputs: dict[int, int] = {}
    for entry in doc["map"]:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ParseError("each map entry must be an [input, output] pair")
        key = universe.subset(_name_list(entry[0], "each map input")).mask
        if key in outputs:
            raise InputError("table map lists an input subset twice")
        outputs[key] = universe.subset(_name_list(entry[1], "each map output")).mask
    if len(outputs) != 1 << universe.n:
        raise InputError("table map must list all 2**n input subsets exactly once")
    return OperatorTable(universe, tuple(outputs[m] for m in range(1 << universe.n)))


def table_to_dict(table: OperatorTable) -> dict[str, Any]:
    return {
        "universe": list(table.universe.elements),
        "map": [
            [list(inp.names()), list(out.names())] for inp, out in table.rows()
        ],
    }


def load_covering(path: str | Path) -> Covering:
    return covering_from_dict(_load_document(path))


def load_relation(path: str | Path) -> Relation:
    return relation_from_dict(_load_document(path))


def load_table(path: str | Path) -> OperatorTable:
    return table_from_dict(_load_document(path))


def save_covering(covering: SubsetFamily, path: str | Path) -> None:
    Path(path).write_text(json.dumps(covering_to_dict(covering), indent=2) + "\n")


def save_relation(relation: Relation, path: str | Path) -> None:
    Path(path).write_text(json.dumps(relation_to_dict(relation), indent=2) + "\n")


def save_table(table: OperatorTable, path: str | Path) -> None:
    Path(path).write_text(json.dumps(table_to_dict(table), indent=2) + "\n")


def covering_json(covering: SubsetFamily) -> str:
    """One-line document for witness reports; pasteable into a covering file."""
    return json.dumps(covering_to_dict(covering))


def relation_json(relation: Relation) -> str:
    """One-line document for witness reports; pasteable into a relation file."""
    return json.dumps(relation_to_dict(relation))
