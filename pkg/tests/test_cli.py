"""Tests for the fourmode command line."""

import csv
import io
import json
import math

import numpy as np
import pytest

from fourmode import __version__
from fourmode.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main

pytestmark = pytest.mark.integration

LADDER_534 = ["--v12", "5", "--v23", "3", "--v34", "4"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], np.array(rows[1:], dtype=float)


class TestSimulateCommand:
    """Test fourmode simulate."""

    def test_header(self, capsys):
        """CSV output starts with the amplitude column header."""
        code, out, _ = run(capsys, "simulate", *LADDER_534, "--t-max", "2", "--steps", "10")

        header, table = parse_csv(out)
        assert code == EXIT_OK
        assert header == [
            "t", "p1", "p2", "p3", "p4",
            "re_a1", "im_a1", "re_a2", "im_a2", "re_a3", "im_a3", "re_a4", "im_a4",
        ]
        assert table.shape == (11, 13)

    def test_complete_transfer(self, capsys, tau_534):
        """Level 3 is fully populated at the grid point that equals tau."""
        code, out, _ = run(
            capsys, "simulate", *LADDER_534, "--t-max", repr(2 * tau_534), "--steps", "2000"
        )

        _, table = parse_csv(out)
        assert code == EXIT_OK
        assert table.shape[0] == 2001
        assert table[1000, 3] >= 1 - 1e-9
        assert table[:, 3].max() == table[1000, 3]

    def test_populations_sum_to_one(self, capsys):
        """Every CSV row has populations summing to one."""
        _, out, _ = run(capsys, "simulate", *LADDER_534, "--t-max", "2")

        _, table = parse_csv(out)
        np.testing.assert_allclose(table[:, 1:5].sum(axis=1), 1.0, atol=1e-10)

    def test_zero_couplings(self, capsys):
        """Zero couplings leave level 1 fully populated."""
        _, out, _ = run(
            capsys, "simulate", "--v12", "0", "--v23", "0", "--v34", "0", "--t-max", "3"
        )

        _, table = parse_csv(out)
        np.testing.assert_allclose(table[:, 1], 1.0, atol=1e-15)

    def test_symmetric_diamond(self, capsys):
        """Symmetric diamond reaches level 3 at t = pi/2."""
        _, out, _ = run(
            capsys,
            "simulate",
            "--v12", "1", "--v23", "1", "--v34", "1", "--v14", "1",
            "--t-max", "1.5708",
        )

        _, table = parse_csv(out)
        assert table[-1, 3] >= 1 - 1e-9

    def test_json_format(self, capsys):
        """JSON output carries the schema version and every row."""
        _, out, _ = run(
            capsys, "simulate", *LADDER_534, "--t-max", "1", "--steps", "4", "--format", "json"
        )

        document = json.loads(out)
        assert document["schema"] == 1
        assert len(document["rows"]) == 5
        assert document["disconnected"] is False

    def test_verify(self, capsys):
        """Verification against the oracle passes for the 5:3:4 ladder."""
        code, _, _ = run(capsys, "simulate", *LADDER_534, "--t-max", "2", "--verify")
        assert code == EXIT_OK

    def test_verify_failure(self, capsys, mocker):
        """Oracle disagreement exits with a numerical failure."""
        mocker.patch(
            "fourmode.tools.simulate.oracle_series",
            side_effect=lambda h, psi0, times: np.zeros((len(times), 4), dtype=complex),
        )

        code, out, err = run(
            capsys, "simulate", *LADDER_534, "--t-max", "1", "--steps", "4", "--verify"
        )

        assert code == EXIT_FAILURE
        assert out == ""
        assert "failed" in err

    def test_deterministic(self, capsys):
        """Repeated runs produce byte-identical output."""
        _, first, _ = run(capsys, "simulate", *LADDER_534, "--t-max", "2", "--steps", "50")
        _, second, _ = run(capsys, "simulate", *LADDER_534, "--t-max", "2", "--steps", "50")
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        """--out writes the payload to a file instead of stdout."""
        target = tmp_path / "series.csv"

        code, out, _ = run(
            capsys, "simulate", *LADDER_534, "--t-max", "1", "--steps", "4", "--out", str(target)
        )

        assert code == EXIT_OK
        assert out == ""
        assert target.read_text().startswith("t,p1,p2,p3,p4,")
        assert len(target.read_text().splitlines()) == 6


class TestDesignCommand:
    """Test fourmode design."""

    def test_from_pair(self, capsys):
        """Pair (3, 1) gives couplings in the ratio 5:3:4."""
        code, out, _ = run(capsys, "design", "--p", "3", "--q", "1", "--tau", "1")

        document = json.loads(out)
        c = document["couplings"]
        assert code == EXIT_OK
        assert document["schema"] == 1
        assert c["v12"] / c["v23"] == pytest.approx(5 / 3)
        assert c["v12"] / c["v34"] == pytest.approx(5 / 4)
        assert c["v12"] == pytest.approx(math.pi / 2 * math.sqrt(10))
        assert document["fidelity"] >= 1 - 1e-12

    def test_pair_five_one(self, capsys):
        """Pair (5, 1) gives couplings in the ratio 13:5:12."""
        _, out, _ = run(capsys, "design", "--p", "5", "--q", "1", "--tau", "1")

        c = json.loads(out)["couplings"]
        assert c["v12"] / c["v23"] == pytest.approx(13 / 5)
        assert c["v12"] / c["v34"] == pytest.approx(13 / 12)

    def test_from_triple(self, capsys):
        """A primitive triple is inverted to its odd pair."""
        code, out, _ = run(capsys, "design", "--triple", "5,12,13", "--tau", "1")

        document = json.loads(out)
        assert code == EXIT_OK
        assert document["pair"] == {"p": 5, "q": 1}

    def test_invalid_pair(self, capsys):
        """Even or non-coprime pairs are a usage error."""
        code, out, err = run(capsys, "design", "--p", "4", "--q", "2", "--tau", "1")

        assert code == EXIT_USAGE
        assert out == ""
        assert "p,q must be odd and coprime" in err

    def test_missing_q(self, capsys):
        """--p without --q is a usage error."""
        code, _, _ = run(capsys, "design", "--p", "3", "--tau", "1")
        assert code == EXIT_USAGE

    def test_bad_triple_syntax(self, capsys):
        """A triple needs three comma-separated integers."""
        code, _, err = run(capsys, "design", "--triple", "3,4", "--tau", "1")

        assert code == EXIT_USAGE
        assert "expected a,b,c" in err


class TestDetectCommand:
    """Test fourmode detect."""

    def test_ladder_534(self, capsys, tau_534):
        """The 5:3:4 ladder matches the (4, 3, 5) triple."""
        code, out, _ = run(capsys, "detect", *LADDER_534)

        document = json.loads(out)
        assert code == EXIT_OK
        assert list(document) == ["schema", "xi", "frequencies", "reference_times", "match"]
        assert document["xi"] == [25, 15, 20, 0]
        assert document["match"]["triple"] == {"a": 4, "b": 3, "c": 5}
        assert document["match"]["tau"] == pytest.approx(tau_534, abs=1e-12)

    def test_no_match(self, capsys):
        """Broken xi3 matches no triple."""
        _, out, _ = run(capsys, "detect", "--v12", "5", "--v23", "3", "--v34", "4.0001")
        assert json.loads(out)["match"] is None

    def test_zero_couplings(self, capsys):
        """Zero couplings report xi only."""
        code, out, _ = run(capsys, "detect", "--v12", "0", "--v23", "0", "--v34", "0")

        document = json.loads(out)
        assert code == EXIT_OK
        assert document["frequencies"] is None
        assert document["match"] is None


class TestTriplesCommand:
    """Test fourmode triples."""

    def test_up_to_25(self, capsys):
        """Four primitive triples have hypotenuse up to 25."""
        code, out, _ = run(capsys, "triples", "--c-max", "25")

        assert code == EXIT_OK
        assert out.splitlines() == ["4 3 5", "12 5 13", "8 15 17", "24 7 25"]

    def test_ascending_legs(self, capsys):
        """--legs ascending prints the smaller leg first."""
        _, out, _ = run(capsys, "triples", "--c-max", "13", "--legs", "ascending")
        assert out.splitlines() == ["3 4 5", "5 12 13"]

    def test_below_smallest(self, capsys):
        """No triple has hypotenuse below 5."""
        code, out, _ = run(capsys, "triples", "--c-max", "4")

        assert code == EXIT_OK
        assert out == ""


class TestOptimizeCommand:
    """Test fourmode optimize."""

    @pytest.mark.slow
    def test_finds_534(self, capsys, tau_534):
        """Seed 7 over [0, 8] finds the 5:3:4 design."""
        code, out, _ = run(
            capsys, "optimize", "--tau", repr(tau_534), "--bounds", "0,8", "--seed", "7"
        )

        document = json.loads(out)
        assert code == EXIT_OK
        assert document["infidelity"] <= 1e-8
        assert document["matched"]["triple"] == {"a": 4, "b": 3, "c": 5}
        assert document["oracle_infidelity"] == pytest.approx(document["infidelity"], abs=1e-9)

    def test_output_keys(self, capsys, tau_534):
        """Optimize JSON keys come in a fixed order."""
        _, out, _ = run(
            capsys, "optimize", "--tau", repr(tau_534), "--bounds", "0,8", "--starts", "1"
        )

        assert list(json.loads(out)) == [
            "schema", "couplings", "infidelity", "oracle_infidelity", "hopf", "matched",
            "evaluations", "converged", "start_index", "tau_target",
        ]

    def test_bad_bounds(self, capsys):
        """A single bound value is a usage error."""
        code, _, err = run(capsys, "optimize", "--tau", "1", "--bounds", "8")

        assert code == EXIT_USAGE
        assert "expected lo,hi" in err

    def test_inverted_bounds(self, capsys):
        """An empty interval is a usage error."""
        code, _, _ = run(capsys, "optimize", "--tau", "1", "--bounds", "8,0")
        assert code == EXIT_USAGE

    def test_negative_lower_bound(self, capsys, tau_534):
        """A bounds value starting with a minus sign is read as LO,HI."""
        code, out, _ = run(
            capsys, "optimize", "--tau", repr(tau_534), "--bounds", "-1,8", "--starts", "1"
        )

        document = json.loads(out)
        assert code == EXIT_OK
        assert document["tau_target"] == pytest.approx(tau_534)
        assert all(-1.0 <= v <= 8.0 for v in document["couplings"].values())

    def test_negative_bounds_with_equals(self, capsys):
        """The --bounds=LO,HI spelling works as well."""
        code, _, _ = run(capsys, "optimize", "--tau", "1", "--bounds=-8,8", "--starts", "1")
        assert code == EXIT_OK


class TestMain:
    """Test argument handling and exit codes."""

    def test_version(self, capsys):
        """--version prints the package version."""
        code, out, _ = run(capsys, "--version")

        assert code == EXIT_OK
        assert __version__ in out

    def test_invalid_log_level(self, capsys):
        """An unknown loguru level is a usage error, not a traceback."""
        code, out, err = run(capsys, "--log-level", "bogus", "triples", "--c-max", "25")

        assert code == EXIT_USAGE
        assert out == ""
        assert "--log-level" in err

    def test_log_level_case_insensitive(self, capsys):
        """Log levels are accepted in any case."""
        code, out, _ = run(capsys, "--log-level", "debug", "triples", "--c-max", "5")

        assert code == EXIT_OK
        assert out == "4 3 5\n"

    def test_no_command(self, capsys):
        """A subcommand is required."""
        code, _, _ = run(capsys)
        assert code == EXIT_USAGE

    def test_unknown_flag(self, capsys):
        """Unknown flags are a usage error."""
        code, _, _ = run(capsys, "simulate", *LADDER_534, "--t-max", "1", "--bogus")
        assert code == EXIT_USAGE

    def test_missing_coupling(self, capsys):
        """Ladder couplings v12, v23 and v34 are required."""
        code, _, _ = run(capsys, "simulate", "--v12", "5", "--v23", "3", "--t-max", "1")
        assert code == EXIT_USAGE

    @pytest.mark.parametrize("t_max", ["0", "-1", "nan"])
    def test_invalid_time(self, capsys, t_max):
        """Non-positive or NaN t-max is a usage error."""
        code, out, _ = run(capsys, "simulate", *LADDER_534, "--t-max", t_max)

        assert code == EXIT_USAGE
        assert out == ""

    def test_unwritable_out(self, capsys, tmp_path):
        """An unwritable --out path exits with a failure."""
        target = tmp_path / "missing" / "out.json"

        code, _, err = run(capsys, "detect", *LADDER_534, "--out", str(target))

        assert code == EXIT_FAILURE
        assert "failed" in err
