import io
import json

import pytest

from trmaps.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_weights, UsageError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_curve_gamma_series():
    code, out, _ = run("curve", "--model", "bipartite", "--weights", "t4", "--trunc", "4")
    assert code == EXIT_OK
    assert "gamma^2 = 1 + 3*t4 + 18*t4^2 + 135*t4^3 + 1134*t4^4" in out


def test_curve_dessins():
    code, out, _ = run("curve", "--model", "dessins")
    assert code == EXIT_OK
    assert "x = z + 1/z + 2" in out and "y = z/(1+z)" in out


@pytest.mark.parametrize("bad", ["t3", "t0", "x4", "t4=abc"])
def test_bad_weights_are_usage_errors(bad):
    code, out, err = run("curve", "--model", "bipartite", "--weights", bad)
    assert code == EXIT_USAGE and not out and "error" in err


def test_weight_parsing():
    assert parse_weights(["t4,t6=1/2"]) == ((4, 6), {4: 1, 6: 0.5})
    with pytest.raises(UsageError):
        parse_weights(["t4", "t4"])


def test_omega_examples():
    code, out, _ = run("omega", "--model", "bipartite", "--g", "1", "--n", "1", "--trunc", "0")
    assert code == EXIT_OK
    for line in ["(1/4) / (z-1)^4", "(1/4) / (z-1)^3", "(-1/16) / (z-1)^2", "(1/16) / (z+1)^2"]:
        assert line in out
    code, out, _ = run("omega", "--model", "ordinary", "--g", "1", "--n", "1", "--trunc", "0", "--format", "json")
    doc = json.loads(out)
    terms = {tuple(map(tuple, t["poles"])): t["series"][0]["coefficient"] for t in doc["terms"]}
    assert terms == {((1, 4),): "1/16", ((1, 3),): "1/16", ((1, 2),): "-1/32",
                     ((-1, 4),): "-1/16", ((-1, 3),): "1/16", ((-1, 2),): "1/32"}


def test_omega_unstable_guidance():
    code, out, err = run("omega", "--g", "0", "--n", "1")
    assert code == EXIT_USAGE
    assert "counts_disk" in err and "counts_cylinder" in err


def test_counts_examples():
    assert run("counts", "--model", "bipartite", "--g", "2", "--lengths", "2", "--weights", "t4",
               "--trunc", "5")[1] == "bipartite g=2 lengths=2: 21*t4^4 + 966*t4^5\n"
    assert run("counts", "--model", "bipartite", "--g", "0", "--lengths", "2", "--trunc", "0")[1].endswith(": 1\n")
    assert run("counts", "--model", "bipartite", "--g", "1", "--lengths", "6", "--trunc", "0")[1].endswith(": 1\n")


def test_counts_json_schema_and_stability():
    argv = ("counts", "--model", "ordinary", "--g", "1", "--lengths", "2", "--weights", "t4", "--trunc", "3",
            "--format", "json")
    first, second = run(*argv)[1], run(*argv)[1]
    assert first == second
    doc = json.loads(first)
    assert set(doc) == {"model", "genus", "lengths", "weights", "trunc", "series", "scales"}
    assert [s["coefficient"] for s in doc["series"]] == ["1", "15", "198"]
    assert list(json.loads(first)) == sorted(doc)


def test_counts_csv_layout():
    code, out, _ = run("counts", "--model", "bipartite,ordinary", "--g", "0", "1", "--lengths", "2",
                       "--weights", "t4", "--trunc", "2", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines() == [
        "monomial,bipartite g=0,bipartite g=1,ordinary g=0,ordinary g=1",
        "1,1,0,1,0", "t4,2,0,2,1", "t4^2,9,1,9,15"]


def test_counts_scaled_weight():
    code, out, _ = run("counts", "--model", "ordinary", "--g", "1", "--lengths", "2", "--weights", "t4=2",
                       "--trunc", "2")
    assert out.endswith(": 2*t4 + 60*t4^2\n")


def test_counts_insufficient_truncation():
    code, out, err = run("counts", "--model", "bipartite", "--g", "2", "--lengths", "2", "--weights", "t4",
                         "--trunc", "3")
    assert code == EXIT_USAGE and "admissible" in err


def test_counts_odd_length_rejected():
    assert run("counts", "--g", "0", "--lengths", "3")[0] == EXIT_USAGE


def test_out_file(tmp_path):
    path = tmp_path / "c.json"
    code, out, _ = run("counts", "--g", "0", "--lengths", "4", "--format", "json", "--out", str(path))
    assert code == EXIT_OK and out == ""
    assert json.loads(path.read_text())["series"][0]["coefficient"] == "2"


def test_verify_passing_suites():
    code, out, _ = run("verify", "--suite", "curve,anchors,omega11", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["ok"] and doc["failed"] == 0


def test_verify_fault_injection_fails_golden():
    code, out, _ = run("verify", "--suite", "golden", "--inject-kernel-sign-fault", "--format", "json")
    assert code == EXIT_FAIL
    row = json.loads(out)["suites"]["golden"]["quartic table bipartite g=1 t4^2"]
    assert not row["ok"] and row["computed"] == -1


def test_verify_unknown_suite():
    assert run("verify", "--suite", "nope")[0] == EXIT_USAGE


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "trmaps", "counts", "--g", "0", "--lengths", "2", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.endswith(": 1\n")
