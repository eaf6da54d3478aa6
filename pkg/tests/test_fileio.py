import json

import pytest

from covgran import InputError, OperatorKind, ParseError
from covgran.fileio import (
    covering_json,
    load_covering,
    load_relation,
    load_table,
    relation_to_dict,
    save_covering,
    save_relation,
    save_table,
    table_from_dict,
)
from covgran.verify import upper_table

from conftest import DATA


class TestCoveringFiles:
    def test_load(self, beta0):
        assert load_covering(DATA / "beta0.json") == beta0

    def test_roundtrip(self, tmp_path, cycle4):
        path = tmp_path / "c.json"
        save_covering(cycle4, path)
        assert load_covering(path) == cycle4

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        with pytest.raises(ParseError):
            load_covering(path)

    def test_missing_key(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"universe": ["1"]}))
        with pytest.raises(ParseError):
            load_covering(path)

    def test_unknown_element_is_semantic(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"universe": ["1"], "blocks": [["2"]]}))
        with pytest.raises(InputError):
            load_covering(path)

    def test_invalid_covering_is_semantic(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"universe": ["1", "2"], "blocks": [["1"]]}))
        with pytest.raises(InputError):
            load_covering(path)

    def test_witness_json_is_loadable(self, tmp_path, beta0):
        path = tmp_path / "w.json"
        path.write_text(covering_json(beta0))
        assert load_covering(path) == beta0


class TestRelationFiles:
    def test_roundtrip(self, tmp_path, beta0):
        from covgran import induced_tolerance

        rel = induced_tolerance(beta0)
        path = tmp_path / "r.json"
        save_relation(rel, path)
        assert load_relation(path) == rel

    def test_pairs_document_shape(self, u3):
        from covgran import Relation

        rel = Relation.from_pairs(u3, [("1", "3")])
        assert relation_to_dict(rel) == {
            "universe": ["1", "2", "3"],
            "pairs": [["1", "3"]],
        }

    def test_bad_pair_shape(self, tmp_path):
        path = tmp_path / "r.json"
        path.write_text(json.dumps({"universe": ["1"], "pairs": [["1"]]}))
        with pytest.raises(ParseError):
            load_relation(path)


class TestTableFiles:
    def test_roundtrip(self, tmp_path, beta0):
        table = upper_table(OperatorKind.FIRST, beta0)
        path = tmp_path / "t.json"
        save_table(table, path)
        assert load_table(path) == table

    def test_fixture_files(self, beta0):
        assert load_table(DATA / "fh_beta0.json") == upper_table(
            OperatorKind.FIRST, beta0
        )
        assert load_table(DATA / "th_beta0.json") == upper_table(
            OperatorKind.THIRD, beta0
        )

    def test_rejects_non_total(self):
        doc = {"universe": ["1"], "map": [[[], []]]}
        with pytest.raises(InputError):
            table_from_dict(doc)

    def test_rejects_duplicate_inputs(self):
        doc = {"universe": ["1"], "map": [[[], []], [[], ["1"]]]}
        with pytest.raises(InputError):
            table_from_dict(doc)
