"""CLI behaviour: golden output files compared byte for byte, exit codes,
and JSON mode well-formedness."""

import json

import pytest

from covgran.cli import main

from conftest import DATA, GOLDEN


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


GOLDEN_CASES = [
    ("show_beta0.txt", ["show", str(DATA / "beta0.json")]),
    ("show_partition3.txt", ["show", str(DATA / "partition3.json")]),
    ("show_cycle4.txt", ["show", str(DATA / "cycle4.json")]),
    ("approx_beta0_fh_3.txt",
     ["approx", str(DATA / "beta0.json"), "--set", "3", "--op", "fh"]),
    ("approx_beta0_xh_1.txt",
     ["approx", str(DATA / "beta0.json"), "--set", "1", "--op", "xh"]),
    ("approx_beta0_fh_empty.txt",
     ["approx", str(DATA / "beta0.json"), "--set", "", "--op", "fh"]),
    ("approx_partition3_sl_13.txt",
     ["approx", str(DATA / "partition3.json"), "--set", "1,3", "--op", "sl"]),
    ("approx_cycle4_th_2.txt",
     ["approx", str(DATA / "cycle4.json"), "--set", "2", "--op", "th"]),
    ("approx_cycle4_fl_12.txt",
     ["approx", str(DATA / "cycle4.json"), "--set", "1,2", "--op", "fl"]),
]


@pytest.mark.parametrize("golden,argv", GOLDEN_CASES, ids=[g for g, _ in GOLDEN_CASES])
def test_golden(capsys, golden, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0 and err == ""
    assert out == (GOLDEN / golden).read_text()


def test_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "show", str(DATA / "beta0.json"))
    _, second, _ = run_cli(capsys, "show", str(DATA / "beta0.json"))
    assert first == second


class TestExitCodes:
    def test_unknown_op_is_usage(self, capsys):
        code, _, _ = run_cli(
            capsys, "approx", str(DATA / "beta0.json"), "--set", "1", "--op", "zz"
        )
        assert code == 2

    def test_unknown_element_is_semantic(self, capsys):
        code, _, err = run_cli(
            capsys, "approx", str(DATA / "beta0.json"), "--set", "9", "--op", "fh"
        )
        assert code == 3 and "unknown element" in err

    def test_parse_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        code, _, err = run_cli(capsys, "show", str(bad))
        assert code == 2 and "JSON" in err

    def test_invalid_covering(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"universe": ["1", "2"], "blocks": [["1"]]}))
        code, _, _ = run_cli(capsys, "show", str(bad))
        assert code == 3

    def test_axiom_precondition(self, capsys):
        code, out, _ = run_cli(
            capsys, "axioms", str(DATA / "th_beta0.json"), "--reconstruct", "first"
        )
        assert code == 4
        assert "4H" in out  # report still printed

    def test_verify_out_of_range_n(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--n", "5")
        assert code == 2

    def test_unknown_claim(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--n", "2", "--claims", "bogus")
        assert code == 2 and "bogus" in err


class TestAxiomsCommand:
    def test_first_kind_with_reconstruction(self, capsys):
        code, out, _ = run_cli(
            capsys, "axioms", str(DATA / "fh_beta0.json"), "--reconstruct", "first"
        )
        assert code == 0
        assert "reconstruction (first): {{1,3}, {2,3}}" in out
        assert "round trip: ok" in out

    def test_closure_kind_flags(self, capsys):
        code, out, _ = run_cli(capsys, "axioms", str(DATA / "th_beta0.json"))
        assert code == 0
        assert "4H singleton symmetric: fail" in out
        assert "closure-kind(H1-H4)=pass" in out

    def test_json_mode(self, capsys):
        code, out, _ = run_cli(capsys, "axioms", str(DATA / "fh_beta0.json"), "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["axioms"]["1H"] is True
        assert doc["axioms"]["H4"] is False
        assert "H4" in doc["witnesses"]

    def test_non_additive_table_localized(self, capsys, tmp_path):
        from covgran import OperatorTable, Universe
        from covgran.fileio import save_table

        u = Universe.of("1", "2", "3")
        outputs = list(OperatorTable.identity(u).outputs)
        outputs[0b011] = 0b111  # inflate one pair row, breaking additivity
        path = tmp_path / "t.json"
        save_table(OperatorTable(u, tuple(outputs)), path)
        code, out, _ = run_cli(capsys, "axioms", str(path))
        assert code == 0
        assert "3H additive: fail" in out
        assert "H({1} | {2})" in out or "singleton decomposition" in out


class TestVerifyCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "2")
        assert code == 0
        assert "0 failing" in out

    def test_json_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--n", "2", "--claims", "prop-refinement", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["claims"][0]["status"] == "pass"
        assert doc["claims"][0]["checked"] == 5

    def test_negative_claim_witness_is_success(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--n", "3", "--claims", "prop-PSBeta-converse"
        )
        assert code == 0
        assert "witness-found" in out


class TestEnumerateCommand:
    def test_counts(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "3", "--count-only")
        assert code == 0
        assert out == "n=3: 109 coverings, 8 tolerances\n"

    def test_tolerances_allow_n5_counts(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--n", "5", "--kind", "tolerances", "--count-only"
        )
        assert code == 0
        assert "1024 tolerances" in out

    def test_coverings_reject_n5(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--n", "5", "--count-only")
        assert code == 2

    def test_listing_is_replayable(self, capsys, tmp_path, beta0):
        from covgran.fileio import covering_from_dict

        code, out, _ = run_cli(capsys, "enumerate", "--n", "2", "--kind", "coverings")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        for line in lines:
            covering_from_dict(json.loads(line))

    def test_show_json_mode(self, capsys):
        code, out, _ = run_cli(capsys, "show", str(DATA / "beta0.json"), "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["granules"]["3"]["down"] == ["3"]
        assert doc["kernels"]["1"] == ["1", "3"]
        assert doc["refinement_chain_ok"] is True
