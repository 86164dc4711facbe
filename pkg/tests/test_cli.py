"""End-to-end tests of the command line front end.

Most cases drive main() in-process and read captured stdout; one test runs
the module as a real subprocess to cover the interpreter entry point.  The
exit-code contract under test: 0 all checks passed, 1 usage or input
error, 2 a mathematical check came back false.
"""

import io
import json
import subprocess
import sys

import pytest

from braidrep.cli import main


def run_cli(capsys, argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# construct


def test_construct_smallest_pair_frozen(capsys):
    code, out, _ = run_cli(capsys, ["construct", "--dim", "2", "--eig", "1", "--eig", "1"])
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 2
    assert data["family"] == "classified"
    assert data["A"] == [["1", "1"], ["0", "1"]]
    assert data["B"] == [["1", "0"], ["-1", "1"]]


def test_construct_rejects_zero_root(capsys):
    code, out, err = run_cli(capsys, [
        "construct", "--dim", "4", "--eig", "1", "--eig", "2", "--eig", "3",
        "--eig", "4", "--D", "0",
    ])
    assert code == 1
    assert out == ""
    assert "zero root parameter" in err


def test_construct_rejects_decimal_input(capsys):
    code, _, err = run_cli(capsys, ["construct", "--dim", "2", "--eig", "0.5", "--eig", "1"])
    assert code == 1
    assert "error:" in err


def test_construct_binomial_family(capsys):
    code, out, _ = run_cli(capsys, [
        "construct", "--family", "binomial", "--eig", "1", "--eig", "2", "--eig", "4",
    ])
    assert code == 0
    assert json.loads(out)["family"] == "binomial"


# ---------------------------------------------------------------------------
# verify


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_construct_verify_pipe(capsys, monkeypatch, d):
    code, out, _ = run_cli(capsys, ["construct", "--dim", str(d), "--symbolic"])
    assert code == 0
    code, out, _ = run_cli(capsys, ["verify"], stdin_text=out, monkeypatch=monkeypatch)
    assert code == 0
    report = json.loads(out)
    assert report["braid_ok"] is True
    assert report["structure_error"] is None


def test_verify_perturbed_entry_fails(capsys, monkeypatch):
    _, out, _ = run_cli(capsys, ["construct", "--dim", "2", "--eig", "1", "--eig", "1"])
    data = json.loads(out)
    data["A"][0][1] = "5"
    code, out, _ = run_cli(
        capsys, ["verify"], stdin_text=json.dumps(data), monkeypatch=monkeypatch
    )
    assert code == 2
    assert json.loads(out)["braid_ok"] is False


def test_verify_rejects_malformed_json(capsys, monkeypatch):
    code, _, err = run_cli(
        capsys, ["verify"], stdin_text="not json", monkeypatch=monkeypatch
    )
    assert code == 1
    assert "cannot parse" in err


def test_verify_braid_only_partial_report(capsys, monkeypatch):
    _, out, _ = run_cli(capsys, ["construct", "--dim", "3", "--symbolic"])
    code, out, _ = run_cli(
        capsys, ["verify", "--check", "braid"], stdin_text=out, monkeypatch=monkeypatch
    )
    assert code == 0
    assert list(json.loads(out)) == ["braid_ok", "triangular_ok"]


# ---------------------------------------------------------------------------
# classify


def test_classify_nonsimple_exit_and_witness(capsys):
    code, out, _ = run_cli(capsys, [
        "classify", "--dim", "3", "--eig", "1", "--eig", "1", "--eig", "-1",
    ])
    assert code == 2
    report = json.loads(out)
    assert report["simple"] is False
    labels = [item["generator"] for item in report["vanishing_factors"]]
    assert "l1^2+l2*l3" in labels


def test_classify_report_only_keeps_exit_zero(capsys):
    code, out, _ = run_cli(capsys, [
        "classify", "--dim", "3", "--eig", "1", "--eig", "1", "--eig", "-1",
        "--report-only",
    ])
    assert code == 0
    assert json.loads(out)["simple"] is False


def test_classify_with_span_oracle(capsys):
    code, out, _ = run_cli(capsys, [
        "classify", "--dim", "2", "--eig", "1", "--eig", "1", "--oracle", "burnside",
    ])
    assert code == 0
    report = json.loads(out)
    assert report["simple"] is True
    assert report["burnside"] is True


def test_classify_membership_flags(capsys):
    code, out, _ = run_cli(capsys, [
        "classify", "--dim", "2", "--eig", "1", "--eig", "-1", "--membership",
    ])
    assert code == 0
    report = json.loads(out)
    assert report["sl2z"] is True
    assert report["psl2z"] is True


def test_classify_certificate_flag(capsys):
    code, out, _ = run_cli(capsys, [
        "classify", "--dim", "2", "--eig", "1", "--eig", "2", "--certificate",
    ])
    assert code == 0
    assert json.loads(out)["deligne_certificate"] in (True, False)


def test_classify_bad_root_parameter(capsys):
    code, _, err = run_cli(capsys, [
        "classify", "--dim", "5", "--eig", "1", "--eig", "1", "--eig", "1",
        "--eig", "1", "--eig", "1", "--gamma", "2",
    ])
    assert code == 1
    assert "root parameter" in err


def test_classify_symbolic_generic_verdict(capsys):
    code, out, _ = run_cli(capsys, ["classify", "--dim", "4", "--symbolic"])
    assert code == 0
    report = json.loads(out)
    assert report["simple"] is True
    assert report["vanishing_factors"] == []


def test_classify_symbolic_membership_is_an_input_error(capsys):
    code, _, err = run_cli(capsys, ["classify", "--dim", "3", "--symbolic", "--membership"])
    assert code == 1
    assert "specialized" in err


# ---------------------------------------------------------------------------
# qpoly


def test_qpoly_frozen_values(capsys):
    code, out, _ = run_cli(capsys, [
        "qpoly", "--dim", "3", "--eig", "1", "--eig", "2", "--eig", "3",
    ])
    assert code == 0
    data = json.loads(out)
    values = {(item["r"], item["s"]): item["q"] for item in data["pairs"]}
    assert values == {(1, 2): "49", (1, 3): "77", (2, 3): "77"}


def test_qpoly_single_pair_symbolic(capsys):
    code, out, _ = run_cli(capsys, [
        "qpoly", "--dim", "2", "--symbolic", "--r", "1", "--s", "2",
    ])
    assert code == 0
    data = json.loads(out)
    assert data["pairs"] == [{"r": 1, "s": 2, "q": "-l1^2+l1*l2-l2^2"}]


def test_qpoly_rejects_equal_indices(capsys):
    code, _, err = run_cli(capsys, [
        "qpoly", "--dim", "2", "--symbolic", "--r", "1", "--s", "1",
    ])
    assert code == 1
    assert "distinct" in err


# ---------------------------------------------------------------------------
# scan


def test_scan_deterministic_bytes(capsys):
    argv = ["scan", "--dim", "3", "--count", "6", "--seed", "42"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second
    lines = first.splitlines()
    assert lines[0] == "index,eigenvalues,root_param,simple,vanishing,sl2z,psl2z,oracle,agree"
    assert len(lines) == 7


def test_scan_different_seeds_differ(capsys):
    _, first, _ = run_cli(capsys, ["scan", "--dim", "3", "--count", "6", "--seed", "1"])
    _, second, _ = run_cli(capsys, ["scan", "--dim", "3", "--count", "6", "--seed", "2"])
    assert first != second


def test_scan_empty_is_header_only(capsys):
    code, out, _ = run_cli(capsys, ["scan", "--dim", "2", "--count", "0"])
    assert code == 0
    assert out.splitlines() == [
        "index,eigenvalues,root_param,simple,vanishing,sl2z,psl2z,oracle,agree"
    ]


def test_scan_degenerate_rows_agree_with_oracle(capsys):
    code, out, _ = run_cli(capsys, [
        "scan", "--dim", "4", "--count", "4", "--seed", "7",
        "--kind", "degenerate", "--oracle", "burnside",
    ])
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert len(rows) == 4
    for row in rows:
        assert row[3] == "false"
        assert row[4] != ""
        assert row[8] == "agree"


def test_scan_rejects_unknown_dimension(capsys):
    code, _, err = run_cli(capsys, ["scan", "--dim", "7", "--count", "1"])
    assert code == 1
    assert "2..5" in err


# ---------------------------------------------------------------------------
# dims


def test_dims_bcd_passes(capsys):
    code, out, _ = run_cli(capsys, ["dims", "--series", "bcd"])
    assert code == 0
    payload = json.loads(out)
    assert [item["summand"] for item in payload] == ["alternating", "symmetric_traceless"]
    assert all(item["equal"] for item in payload)


def test_dims_exceptional_reports_catalog_mismatches(capsys):
    # the route disagrees with the catalog on three summands; the CLI
    # reports that honestly and signals it through the exit code
    code, out, _ = run_cli(capsys, ["dims", "--series", "exceptional", "--format", "text"])
    assert code == 2
    assert "adjoint: equal=false" in out
    assert "alternating_complement: equal=true" in out
    assert "gamma: u^4" in out


def test_dims_unknown_series(capsys):
    code, _, err = run_cli(capsys, ["dims", "--series", "foo"])
    assert code == 1
    assert "bcd" in err


# ---------------------------------------------------------------------------
# entry point and usage errors


def test_unknown_subcommand_exits_one(capsys):
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 1


def test_module_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "braidrep", "construct", "--dim", "2",
         "--eig", "1", "--eig", "1"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["dim"] == 2
