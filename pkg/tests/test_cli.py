import io
import json
import math
import shutil
import subprocess
import sys

import pytest

from hsbound import __version__
from hsbound.cli import main, parse_dataset
from hsbound.errors import ParseError


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(argv, stdin=""):
    code, out, err = run(argv + ["--json"], stdin)
    return code, (json.loads(out) if out else None), err


class TestParse:
    @pytest.mark.parametrize(
        "text, want",
        [
            ("1 2 3", [1, 2, 3]),
            ("1,2,3", [1, 2, 3]),
            ("1\n\n 2.5e0 , -3\n", [1, 2.5, -3]),
            (".5 1.", [0.5, 1.0]),
        ],
    )
    def test_ok(self, text, want):
        assert parse_dataset(text) == want

    @pytest.mark.parametrize("text", ["", "5", "1 two 3", "1 nan", "1 inf", "1_000 2", "1,5;2"])
    def test_bad(self, text):
        with pytest.raises(ParseError):
            parse_dataset(text)

    def test_reads_extremal_document(self):
        doc = {"results": {"values": [0.0, 1.0, 1.0]}}
        assert parse_dataset(json.dumps(doc)) == [0, 1, 1]

    def test_bad_document(self):
        with pytest.raises(ParseError):
            parse_dataset('{"results": {}}')


class TestStats:
    def test_basic(self):
        code, doc, _ = run_json(["stats"], "1 2 3")
        assert code == 0
        r = doc["results"]
        assert r["mean"] == 2 and r["median"] == 2 and r["ratio"] == 0
        assert r["sd"] == pytest.approx(math.sqrt(2 / 3), abs=1e-14)
        assert set(r["chain_terms"]) == {"t1", "t2", "t3", "t4"}

    def test_too_short(self):
        code, out, err = run(["stats"], "5")
        assert code == 2 and out == "" and "ParseError" in err

    def test_degenerate(self):
        code, doc, _ = run_json(["stats"], "4 4 4")
        assert code == 0
        assert doc["results"]["degenerate"] is True
        assert doc["results"]["ratio"] is None

    def test_sample_divisor(self):
        code, doc, _ = run_json(["stats", "--divisor", "n-1"], "-1 1")
        assert code == 0
        assert doc["results"]["sd"] == pytest.approx(math.sqrt(2), abs=1e-14)

    def test_file_input(self, tmp_path):
        f = tmp_path / "d.txt"
        f.write_text("0 0 3 3\n")
        code, doc, _ = run_json(["stats", "--input", str(f)])
        assert code == 0 and doc["results"]["sd"] == 1.5
        assert doc["inputs"]["input"] == str(f)

    def test_missing_file(self, tmp_path):
        code, _, err = run(["stats", "--input", str(tmp_path / "nope")])
        assert code == 2


class TestCheck:
    def test_extremal_input(self):
        _, ext, _ = run(["extremal", "--n", "5", "--json"])
        code, doc, _ = run_json(["check"], ext)
        assert code == 0
        assert doc["results"]["is_extremal"] is True
        assert abs(doc["results"]["slack"]) <= 1e-9

    def test_outlier(self):
        code, doc, _ = run_json(["check"], "1 2 3 4 100")
        assert code == 0
        assert doc["results"]["slack"] > 0
        assert doc["results"]["is_extremal"] is False

    def test_empty(self):
        assert run(["check"], "")[0] == 2

    def test_small_n(self):
        assert run(["check"], "1 2")[0] == 2

    def test_degenerate(self):
        code, _, err = run(["check"], "3 3 3")
        assert code == 2 and "degenerate" in err

    def test_refuses_sample_divisor(self):
        code, _, err = run(["check", "--divisor", "n-1"], "1 2 3")
        assert code == 2 and "divisor" in err

    def test_human_output(self):
        code, out, _ = run(["check"], "1 2 3 4 100")
        assert code == 0
        assert "slack: 0.329477" in out


class TestExtremal:
    def test_n5(self):
        code, doc, _ = run_json(["extremal", "--n", "5", "--sign", "+1"])
        assert code == 0
        r = doc["results"]
        assert len(r["values"]) == 5
        assert r["ratio"] == pytest.approx(math.sqrt(2 / 3), abs=1e-12)

    def test_n6_minus(self):
        code, doc, _ = run_json(["extremal", "--n", "6", "--sign", "-1"])
        assert code == 0
        assert len(doc["results"]["values"]) == 6
        assert doc["results"]["ratio"] == pytest.approx(-math.sqrt(1 / 2), abs=1e-12)

    def test_shift_scale(self):
        _, base, _ = run_json(["extremal", "--n", "6", "--sign", "+1"])
        code, doc, _ = run_json(
            ["extremal", "--n", "6", "--sign", "+1", "--location", "100", "--scale", "15"]
        )
        assert code == 0
        assert doc["results"]["ratio"] == pytest.approx(base["results"]["ratio"], abs=1e-12)
        want = [100 + 15 * v for v in base["results"]["values"]]
        assert doc["results"]["values"] == pytest.approx(want, abs=1e-11)

    def test_errors(self):
        assert run(["extremal", "--n", "2"])[0] == 2
        assert run(["extremal", "--n", "5", "--scale", "0"])[0] == 2
        assert run(["extremal", "--n", "5", "--sign", "0"])[0] == 2


class TestSweep:
    def test_range(self):
        code, doc, _ = run_json(["sweep", "--nmin", "3", "--nmax", "10"])
        assert code == 0
        rows = doc["results"]["rows"]
        assert [r["n"] for r in rows] == list(range(3, 11))
        assert all(r["diff"] <= 1e-12 for r in rows)
        assert doc["results"]["pass"] is True

    def test_single(self):
        _, doc, _ = run_json(["sweep", "--nmin", "5", "--nmax", "5"])
        (row,) = doc["results"]["rows"]
        assert row["sharp"] == pytest.approx(math.sqrt(2 / 3), abs=1e-14)

    def test_bad_range(self):
        code, _, err = run(["sweep", "--nmin", "4", "--nmax", "3"])
        assert code == 2 and "InvalidRange" in err


class TestOptimize:
    def test_n5(self):
        code, doc, _ = run_json(
            ["optimize", "--n", "5", "--restarts", "200", "--iters", "2000", "--seed", "42"]
        )
        assert code == 0
        r = doc["results"]
        assert -1e-9 <= r["gap"] <= 1e-3
        assert r["status"] == "PASS"
        assert len(r["best_z"]) == 5

    def test_no_effort(self):
        code, doc, _ = run_json(["optimize", "--n", "3", "--restarts", "1", "--iters", "0", "--seed", "0"])
        assert code == 0 and doc["results"]["status"] == "PASS"

    def test_bad(self):
        assert run(["optimize", "--n", "2"])[0] == 2
        assert run(["optimize", "--n", "4", "--restarts", "0"])[0] == 2


class TestProb:
    def test_symmetric(self):
        code, doc, _ = run_json(["prob", "--p", "0.5", "--q", "0.5"])
        assert code == 0 and doc["results"]["majindar_bound"] == 1

    def test_asymmetric(self):
        _, doc, _ = run_json(["prob", "--p", "0.3", "--q", "0.2"])
        r = doc["results"]
        assert r["majindar_bound"] == pytest.approx(0.6928203, abs=1e-7)
        assert (r["lhs"], r["a1"], r["a2"], r["a3"]) == pytest.approx((0.12, 0.21, 0.16, 0.125))
        assert r["lhs_le_min"] is True

    def test_invalid(self):
        code, _, err = run(["prob", "--p", "0.7", "--q", "0.5"])
        assert code == 2 and "InvalidSplit" in err


class TestContract:
    def test_document_shape(self):
        _, doc, _ = run_json(["prob", "--p", "0.5", "--q", "0.5"])
        assert set(doc) == {"command", "version", "inputs", "results"}
        assert doc["command"] == "prob" and doc["version"] == __version__

    def test_fifteen_significant_digits(self):
        _, out, _ = run(["extremal", "--n", "7", "--json"])
        for v in json.loads(out)["results"]["values"]:
            digits = repr(abs(v)).replace(".", "").lstrip("0").split("e")[0]
            assert len(digits) <= 15

    @pytest.mark.parametrize(
        "argv, stdin",
        [
            (["stats"], "3 1 4 1 5 9 2 6"),
            (["optimize", "--n", "6", "--restarts", "10", "--iters", "200", "--seed", "5"], ""),
            (["sweep", "--nmin", "3", "--nmax", "12"], ""),
        ],
    )
    def test_byte_deterministic(self, argv, stdin):
        assert run(argv + ["--json"], stdin)[1] == run(argv + ["--json"], stdin)[1]

    def test_usage_error_is_two(self):
        assert run(["frobnicate"])[0] == 2
        assert run(["extremal"])[0] == 2

    def test_help_is_zero(self):
        assert run(["--help"])[0] == 0


@pytest.mark.skipif(shutil.which("hsbound") is None, reason="console script not installed")
def test_shell_pipeline():
    ext = subprocess.run(
        ["hsbound", "extremal", "--n", "8", "--sign", "-1", "--json"],
        capture_output=True, text=True, check=True,
    )
    chk = subprocess.run(
        ["hsbound", "check", "--json"], input=ext.stdout, capture_output=True, text=True
    )
    assert chk.returncode == 0
    assert json.loads(chk.stdout)["results"]["is_extremal"] is True


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hsbound.cli", "prob", "--p", "0.5", "--q", "0.5", "--json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["majindar_bound"] == 1
