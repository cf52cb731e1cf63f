import json

import pytest

from mainspectra import parse_graph6, t_lambda_tree, write_graph6
from mainspectra.cli import main


def run_cli(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_t2(capsys, monkeypatch):
    g6 = write_graph6(t_lambda_tree(2))
    code, out, err = run_cli(capsys, ["analyze"], stdin=g6 + "\n", monkeypatch=monkeypatch)
    assert code == 0
    rec = json.loads(out.strip())
    assert rec["main_count"] == 2
    assert rec["two_walk"] == {"alpha": 2, "beta": 0}
    assert rec["harmonic_delta"] == 2


def test_analyze_regular_and_seidel(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys, ["analyze", "--seidel"], stdin="D~{\n", monkeypatch=monkeypatch
    )
    assert code == 0
    rec = json.loads(out.strip())
    assert rec["regular"] and rec["main_count"] == 1
    assert rec["seidel"]["n"] == 5


def test_analyze_malformed_line(capsys, monkeypatch):
    code, out, err = run_cli(
        capsys, ["analyze"], stdin="@\nnot graph6!!\n", monkeypatch=monkeypatch
    )
    assert code == 1
    assert "line 2" in err
    assert len(out.strip().splitlines()) == 1  # the good line still analyzed


def test_analyze_file_input(capsys, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text(write_graph6(t_lambda_tree(2)) + "\n")
    code = main(["analyze", str(f), "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0].startswith("n,edges")


def test_construct_biregular(capsys):
    code = main(["construct", "biregular", "--alpha", "8", "--beta", "-9"])
    out = capsys.readouterr().out.strip()
    assert code == 0
    g = parse_graph6(out)
    from mainspectra import degree_vector

    assert sorted(set(degree_vector(g))) == [5, 11]


def test_construct_biregular_boundary_error(capsys):
    code = main(["construct", "biregular", "--alpha", "2", "--beta", "0"])
    captured = capsys.readouterr()
    assert code == 1
    rec = json.loads(captured.err.strip())
    assert rec["impossibility_certificate"]["row_sums_equal"] is True


def test_construct_symplectic(capsys):
    code = main(["construct", "symplectic", "--r", "2"])
    out = capsys.readouterr().out.strip()
    assert code == 0
    assert parse_graph6(out).n == 16


def test_construct_t_lambda_json(capsys):
    code = main(["construct", "t-lambda", "--lam", "3", "--format", "json"])
    rec = json.loads(capsys.readouterr().out)
    assert code == 0
    assert rec["two_walk"] == {"alpha": 3, "beta": 0}
    assert rec["n"] == 22


def test_construct_splice_chain(capsys, tmp_path):
    from mainspectra import cone_over_regular, cycle

    seed = tmp_path / "cone.g6"
    seed.write_text(write_graph6(cone_over_regular(cycle(4))) + "\n")
    code = main(
        ["construct", "splice-chain", str(seed), "--edge", "4,0", "--k", "3", "--format", "json"]
    )
    rec = json.loads(capsys.readouterr().out)
    assert code == 0
    assert rec["n"] == 15
    assert rec["two_walk"] == {"alpha": 2, "beta": 4}
    assert len(rec["metadata"]["splice_log"]) == 2


def test_census_small_base(capsys, tmp_path):
    base = tmp_path / "base.g6"
    base.write_text("C~\n")  # K4
    code = main(["census", "--base", str(base)])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "alpha,beta,mu0,mu1,valencies,count,connected"
    assert any('"0^1,2^3"' in ln and ",4," in ln for ln in lines)


def test_census_workers_identical_output(capsys, tmp_path):
    base = tmp_path / "base.g6"
    base.write_text("C~\n")
    outs = []
    for w in ("1", "2"):
        code = main(["census", "--base", str(base), "--workers", w])
        outs.append(capsys.readouterr().out)
        assert code == 0
    assert outs[0] == outs[1]


def test_census_audit_file(capsys, tmp_path):
    audit_path = tmp_path / "audit.json"
    code = main(
        ["census", "--r", "2", "--reference", "bundled", "--audit", str(audit_path)]
    )
    capsys.readouterr()
    assert code == 0
    audit = json.loads(audit_path.read_text())
    assert audit["totals"]["verdict_match"] == 30


def test_workers_validation():
    with pytest.raises(SystemExit):
        main(["census", "--workers", "0"])
