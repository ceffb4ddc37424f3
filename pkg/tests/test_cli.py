"""Command-line surface: flows, formats, exit codes, error JSON."""

import json

import pytest

from posetdim import __version__, load_poset
from posetdim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- gen / dim / detect ------------------------------------------------------------


def test_gen_dim_detect_flow(tmp_path, capsys):
    f = str(tmp_path / "s3.poset")
    code, out, _ = run(capsys, "gen", "--type", "standard:3", "--seed", "1",
                       "-o", f)
    assert code == 0 and "n=6" in out
    code, out, _ = run(capsys, "dim", f, "--exact")
    assert code == 0
    assert "dimension 3" in out and "optimal true" in out
    code, out, _ = run(capsys, "detect", f, "--k", "3")
    assert code == 0
    assert "a: 0 1 2" in out and "b: 3 4 5" in out


def test_gen_output_reloads_and_echoes_seed(tmp_path, capsys):
    f = str(tmp_path / "r.poset")
    code, _, _ = run(capsys, "gen", "--type", "random:7,0.4", "--seed", "11",
                     "-o", f)
    assert code == 0
    text = open(f).read()
    assert "--seed 11" in text and f"v{__version__}" in text
    assert load_poset(f).n == 7


def test_detect_reports_none(tmp_path, capsys):
    f = str(tmp_path / "c.poset")
    run(capsys, "gen", "--type", "random:5,1.0", "--seed", "3", "-o", f)
    code, out, _ = run(capsys, "detect", f, "--k", "2")
    assert code == 0 and out.strip() == "none"


# -- peel / verify / split -----------------------------------------------------------


def test_peel_certificate_reverifies(tmp_path, capsys):
    f = str(tmp_path / "free.poset")
    cert = str(tmp_path / "cert.json")
    run(capsys, "gen", "--type", "skfree:10,10,0.25,3", "--seed", "7", "-o", f)
    code, out, _ = run(capsys, "peel", f, "--k", "3", "--q", "2",
                       "--threshold", "8", "--seed", "5", "--json", cert)
    assert code == 0 and "total_size" in out
    payload = json.loads(open(cert).read())
    assert payload["seed"] == 5
    assert payload["tool_version"] == __version__
    assert payload["parameters"]["k"] == 3
    assert payload["certificate"]["total_size"] >= 1
    code, out, _ = run(capsys, "dim", f, "--verify", cert)
    assert code == 0 and "verified" in out


def test_peel_requires_sides(tmp_path, capsys):
    f = str(tmp_path / "plain.poset")
    run(capsys, "gen", "--type", "random:6,0.3", "--seed", "2", "-o", f)
    code, _, err = run(capsys, "peel", f, "--k", "3", "--q", "2",
                       "--threshold", "6", "--seed", "1")
    assert code == 1
    assert json.loads(err)["error"] == "ArgumentError"


def test_split_then_peel(tmp_path, capsys):
    f = str(tmp_path / "p.poset")
    sp = str(tmp_path / "split.poset")
    run(capsys, "gen", "--type", "random:6,0.3", "--seed", "4", "-o", f)
    code, out, _ = run(capsys, "split", f, "-o", sp)
    assert code == 0 and "n=12" in out
    assert "A:" in open(sp).read()
    code, out, _ = run(capsys, "peel", sp, "--k", "3", "--q", "2",
                       "--threshold", "8", "--seed", "9")
    assert code == 0


def test_verify_rejects_wrong_realizer(tmp_path, capsys):
    f = str(tmp_path / "s3.poset")
    bad = str(tmp_path / "bad.json")
    run(capsys, "gen", "--type", "standard:3", "--seed", "1", "-o", f)
    with open(bad, "w") as fh:
        json.dump({"n": 6, "dimension": 1, "optimal": False,
                   "extensions": [[0, 1, 2, 3, 4, 5]]}, fh)
    code, _, err = run(capsys, "dim", f, "--verify", bad)
    assert code == 1
    assert json.loads(err)["error"] == "VerificationFailed"


# -- prob-lemma / experiment -----------------------------------------------------------


def test_prob_lemma_output(capsys):
    code, out, _ = run(capsys, "prob-lemma", "--t", "2", "--q", "4",
                       "--r", "12", "--trials", "500", "--seed", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("empirical ")
    assert lines[1] == "analytic 0.619884"
    assert "seed 3" in lines[2]


def test_experiment_growth_reproducible(tmp_path, capsys):
    csv1 = str(tmp_path / "a.csv")
    csv2 = str(tmp_path / "b.csv")
    js = str(tmp_path / "g.json")
    args = ["experiment", "growth", "--k", "3", "--sizes", "12,16",
            "--samples", "2", "--q", "2", "--edge-prob", "0.3",
            "--seed", "5"]
    code, out, _ = run(capsys, *args, "--csv", csv1, "--json", js)
    assert code == 0
    assert out.startswith("n,samples,mean_bound,max_bound,mean_exact,bound_over_n")
    code, _, _ = run(capsys, *args, "--csv", csv2)
    assert code == 0
    assert open(csv1).read() == open(csv2).read()
    payload = json.loads(open(js).read())
    assert payload["seed"] == 5
    assert payload["tool_version"] == __version__
    assert payload["parameters"]["sizes"] == [12, 16]
    assert len(payload["records"]) == 2


# -- exit codes -------------------------------------------------------------------------


def test_missing_file_is_a_domain_error(capsys):
    code, _, err = run(capsys, "dim", "does-not-exist.poset")
    assert code == 1
    assert json.loads(err)["error"] == "IOError"


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dim"])  # missing FILE
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--type", "nonsense:1", "--seed", "1", "-o", "x"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_domain_error_payload_carries_embedding(tmp_path, capsys):
    # peeling a poset that contains a standard example is impossible to
    # set up through `peel` (generators refuse), but `detect` plus a
    # hand-written file exercises the witness payload through gen types
    f = str(tmp_path / "s2.poset")
    run(capsys, "gen", "--type", "standard:2", "--seed", "1", "-o", f)
    code, out, _ = run(capsys, "detect", f, "--k", "2")
    assert code == 0 and "a: 0 1" in out
