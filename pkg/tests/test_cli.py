import json
from fractions import Fraction as F

import pytest

from golden import TABLES
from smdc import cli
from smdc.ratio import format_rational
from smdc.resolution import f_vector


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def expected_table_text(L):
    lines = ["\t".join(["lambda"] + [f"f{a}" for a in range(1, L + 1)] + ["theta"])]
    for lam, f, theta in TABLES[L]:
        cells = ["(" + ",".join(format_rational(c) for c in lam) + ")"]
        cells += [format_rational(v) for v in f]
        cells.append(str(theta))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def test_table_matches_golden(capsys):
    for L in range(1, 6):
        code, out, _ = run_cli(capsys, "table", "--levels", str(L))
        assert code == 0
        assert out == expected_table_text(L)


def test_count_output(capsys):
    code, out, _ = run_cli(capsys, "count", "--levels", "5")
    assert code == 0
    assert out == '{"S0": 23, "lower": 16, "upper": 120}\n'


def test_check_not_achievable(capsys):
    code, out, _ = run_cli(capsys, "check", "--levels", "2",
                           "--rates", "1,1", "--entropies", "1,1")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert [l["method"] for l in lines] == ["ineq", "lp"]
    assert not lines[0]["achievable"] and not lines[1]["achievable"]
    assert lines[0]["witness"]["lambda"] == ["1", "1"]


def test_check_single_method(capsys):
    code, out, _ = run_cli(capsys, "check", "--levels", "2",
                           "--rates", "2,1", "--entropies", "1,1", "--method", "lp")
    assert code == 0
    record = json.loads(out)
    assert record["achievable"] and record["witness"]["allocation"]


def test_gen_json_round_trip(capsys):
    for L in (2, 3, 4):
        code, out, _ = run_cli(capsys, "gen", "--levels", str(L), "--format", "json")
        assert code == 0
        for line in out.splitlines():
            record = json.loads(line)
            lam = tuple(F(s) for s in record["lambda"])
            f = tuple(F(s) for s in record["f"])
            assert f_vector(lam).values == f


def test_gen_csv_shape(capsys):
    code, out, _ = run_cli(capsys, "gen", "--levels", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "lambda,f1,f2,theta"
    assert out.splitlines()[1] == '"(1,0)",1,0,0'


def test_gen_all_perms(capsys):
    code, out, _ = run_cli(capsys, "gen", "--levels", "3", "--all-perms")
    assert code == 0
    assert len(out.splitlines()) == 10


def test_resolution_verb(capsys):
    code, out, _ = run_cli(capsys, "resolution", "--lambda", "2,1,1", "--alpha", "2")
    assert code == 0
    record = json.loads(out)
    assert record["total"] == "2" and record["verified"] is True
    assert sum(F(w) for w in record["weights"].values()) == 2


def test_verify_equivalence_deterministic(capsys):
    args = ("verify-equivalence", "--levels", "3", "--trials", "20", "--seed", "7")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["mismatches"] == 0


def test_redundancy_verb(capsys):
    code, out, _ = run_cli(capsys, "redundancy", "--levels", "2")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 3 and all(r["essential"] for r in records)
    code, out, _ = run_cli(capsys, "redundancy", "--levels", "3", "--index", "4")
    assert code == 0 and json.loads(out)["essential"]


def test_fm_compare_verb(capsys):
    code, out, _ = run_cli(capsys, "fm-compare", "--levels", "2")
    assert code == 0
    record = json.loads(out)
    assert record["sets_equal"] and record["polyhedra_equivalent"]


def test_subset_entropy_verb(capsys):
    args = ("subset-entropy", "--levels", "2", "--trials", "3", "--seed", "13")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2
    records = [json.loads(line) for line in out1.splitlines()]
    assert sum(1 for r in records if "han" in r) == 3
    assert all(r.get("han", True) and r.get("holds", True) for r in records)


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2
    code, _, err = run_cli(capsys, "check", "--levels", "2",
                           "--rates", "1", "--entropies", "1,1")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(capsys, "resolution", "--lambda", "0,0", "--alpha", "1")
    assert code == 2
