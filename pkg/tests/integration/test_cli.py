"""
Integration tests for the graphex-sim command line.
"""
import json

import pytest

from graphex_sim.cli.main import main


@pytest.fixture
def leaves(write_sequence_file):
    return write_sequence_file("leaves.txt", [1] * 100)


@pytest.fixture
def small_degrees(write_sequence_file):
    return write_sequence_file("d.txt", [3, 3, 2, 2, 1, 1, 1, 1])


class TestGenerate:
    """Test the gen command."""

    def test_byte_identical(self, run_cli, tmp_path, small_degrees):
        """Test that the same seed writes identical files."""
        first, second = tmp_path / "a", tmp_path / "b"

        assert run_cli("gen", "--model", "cm", "--degrees", str(small_degrees), "--reps", "3", out=first) == 0
        assert run_cli("gen", "--model", "cm", "--degrees", str(small_degrees), "--reps", "3", out=second) == 0

        for name in ["summary.csv", "graphs/graph_00000.json", "graphs/graph_00002.json"]:
            assert (first / name).read_bytes() == (second / name).read_bytes()

    def test_summary_csv(self, run_cli, tmp_path, small_degrees):
        """Test the summary header and half-edge totals."""
        run_cli("--format", "csv", "gen", "--model", "cm", "--degrees", str(small_degrees), "--reps", "2")

        lines = (tmp_path / "out" / "summary.csv").read_text(encoding="utf-8").splitlines()

        assert lines[0] == "rep,vertices,edges,loops,half_edges"
        assert all(line.endswith(",14") for line in lines[1:])
        assert not (tmp_path / "out" / "graphs").exists()

    def test_missing_file(self, run_cli, tmp_path):
        """Test exit 2 for a missing sequence file."""
        assert run_cli("gen", "--model", "cm", "--degrees", str(tmp_path / "absent.txt")) == 2

    def test_odd_degrees(self, run_cli, write_sequence_file):
        """Test exit 2 for an odd half-edge total."""
        path = write_sequence_file("odd.txt", [1, 1, 1])

        assert run_cli("gen", "--model", "cm", "--degrees", str(path)) == 2

    def test_threads_checked(self, run_cli, small_degrees):
        """Test exit 2 for --threads 0."""
        assert run_cli("--threads", "0", "gen", "--model", "cm", "--degrees", str(small_degrees)) == 2

    def test_seed_required(self):
        """Test that argparse rejects a missing --seed."""
        with pytest.raises(SystemExit) as info:
            main(["gen", "--model", "cm"])

        assert info.value.code == 2


class TestSampleAndCensus:
    """Test the sample and census commands."""

    def test_rate_too_large(self, run_cli, write_sequence_file):
        """Test exit 2 when t exceeds sqrt(2 e(G))."""
        path = write_sequence_file("four.txt", [1, 1, 1, 1])

        assert run_cli("sample", "--model", "cm", "--degrees", str(path), "--t", "5") == 2

    def test_samples_csv(self, run_cli, tmp_path, leaves):
        """Test one CSV row per sample."""
        assert run_cli("--format", "csv", "sample", "--model", "cm", "--degrees", str(leaves), "--reps", "5") == 0

        lines = (tmp_path / "out" / "samples.csv").read_text(encoding="utf-8").splitlines()

        assert lines[0] == "rep,key,vertices,edges,loops"
        assert len(lines) == 6

    def test_census_of_graphex(self, run_cli, tmp_path, write_json_file):
        """Test a census of GP_t for a graphex file."""
        graphex = write_json_file("dust.json", {"type": "pure_dust", "I": 0.5})

        assert run_cli("census", "--graphex", str(graphex), "--reps", "50") == 0

        data = json.loads((tmp_path / "out" / "census.json").read_text(encoding="utf-8"))
        assert sum(entry["count"] for entry in data["classes"].values()) == 50

    def test_census_needs_source(self, run_cli):
        """Test exit 2 without --model or --graphex."""
        assert run_cli("census") == 2


class TestConverge:
    """Test the converge command."""

    @pytest.fixture
    def config(self, write_json_file):
        return write_json_file(
            "dust.json",
            {
                "name": "dust",
                "seed": 1,
                "model": {"family": "cm", "degrees": {"values": [1] * 200}},
                "graphex": {"type": "pure_dust", "I": 0.5},
                "t": 1.0,
                "reps": 300,
                "threshold": 0.5,
            },
        )

    def test_deterministic_report(self, run_cli, tmp_path, config):
        """Test that reports are byte-identical and timings are kept apart."""
        assert run_cli("converge", "--config", str(config), out=tmp_path / "a") == 0
        assert run_cli("converge", "--config", str(config), out=tmp_path / "b") == 0

        assert (tmp_path / "a" / "report.json").read_bytes() == (tmp_path / "b" / "report.json").read_bytes()
        assert (tmp_path / "a" / "timings.json").exists()
        report = json.loads((tmp_path / "a" / "report.json").read_text(encoding="utf-8"))
        assert report["pass"] is True
        assert report["config"]["seed"] == 7

    def test_threshold_failure(self, run_cli, leaves, write_json_file):
        """Test exit 1 when the TV is above the threshold."""
        graphex = write_json_file("far.json", {"type": "pure_dust", "I": 20.0})

        code = run_cli(
            "converge", "--model", "cm", "--degrees", str(leaves), "--graphex", str(graphex),
            "--reps", "200", "--threshold", "0.05",
        )

        assert code == 1


class TestValidate:
    """Test the validate command."""

    def test_constant_kernel_fails(self, run_cli, tmp_path, write_json_file):
        """Test exit 1 for W = 1 everywhere."""
        graphex = write_json_file("flat.json", {"type": "generic", "kernel": {"form": "constant", "p": 1.0}})

        assert run_cli("validate", "--graphex", str(graphex)) == 1

        report = json.loads((tmp_path / "out" / "validation.json").read_text(encoding="utf-8"))
        assert report["failed"] == ["a", "b", "c"]

    def test_model_limit_passes(self, run_cli, small_degrees):
        """Test exit 0 for the limit of a CM."""
        assert run_cli("validate", "--model", "cm", "--degrees", str(small_degrees)) == 0


class TestBlocksAndLevy:
    """Test the blocks and levy commands."""

    def test_blocks_inline(self, run_cli, tmp_path, leaves):
        """Test contiguous blocks given inline."""
        code = run_cli(
            "blocks", "--model", "cm", "--degrees", str(leaves), "--blocks", '{"sizes": [10, 10]}',
            "--reps", "200", "--threshold", "1.0",
        )

        assert code == 0
        data = json.loads((tmp_path / "out" / "blocks.json").read_text(encoding="utf-8"))
        assert data["rates"] == {"0,0": 0.5, "0,1": 1.0, "1,1": 0.5}

    def test_blocks_bad_json(self, run_cli, leaves):
        """Test exit 2 for unparseable blocks."""
        assert run_cli("blocks", "--model", "cm", "--degrees", str(leaves), "--blocks", "[[0,1]") == 2

    def test_levy_csv(self, run_cli, tmp_path, small_degrees):
        """Test the step-sample CSV."""
        assert run_cli("--format", "csv", "levy", "--degrees", str(small_degrees), "--points", "11") == 0

        lines = (tmp_path / "out" / "levy.csv").read_text(encoding="utf-8").splitlines()
        assert lines[0] == "t,y"
        assert len(lines) == 12

    def test_levy_needs_source(self, run_cli):
        """Test exit 2 without a sequence or measure."""
        assert run_cli("levy") == 2


class TestSuite:
    """Test the suite command."""

    def test_single_criterion(self, run_cli, tmp_path):
        """Test the tail-regularity criterion alone."""
        assert run_cli("suite", "--only", "16") == 0

        data = json.loads((tmp_path / "out" / "suite.json").read_text(encoding="utf-8"))
        assert [c["id"] for c in data["criteria"]] == [16]

    def test_unknown_selector(self, run_cli):
        """Test exit 2 for an unknown selector."""
        assert run_cli("suite", "--only", "nope") == 2


class TestGap:
    """Test the gap command."""

    def test_gap_report(self, run_cli, tmp_path, leaves):
        """Test one inner estimate per graph draw and the threshold verdict."""
        code = run_cli(
            "gap", "--model", "cm", "--degrees", str(leaves), "--outer", "6", "--inner", "10", "--threshold", "1.0"
        )

        assert code == 0
        data = json.loads((tmp_path / "out" / "gap.json").read_text(encoding="utf-8"))
        assert data["command"] == "gap"
        assert len(data["estimates"]) == 6
        assert data["inner_reps"] == 10
        assert data["pass"] is True
        assert data["config"]["A"] == "0,1"

    def test_gap_deterministic(self, run_cli, tmp_path, leaves):
        """Test that the same seed gives the same report."""
        args = ("gap", "--model", "cm", "--degrees", str(leaves), "--outer", "4", "--inner", "5")

        assert run_cli(*args, out=tmp_path / "a") == 0
        assert run_cli(*args, out=tmp_path / "b") == 0

        assert (tmp_path / "a" / "gap.json").read_bytes() == (tmp_path / "b" / "gap.json").read_bytes()

    @pytest.mark.parametrize("interval", ["1", "2,1", "a,b"])
    def test_bad_interval(self, run_cli, leaves, interval):
        """Test exit 2 for a malformed or empty interval."""
        assert run_cli("gap", "--model", "cm", "--degrees", str(leaves), "--A", interval) == 2

    def test_reps_checked(self, run_cli, leaves):
        """Test exit 2 for a non-positive replicate count."""
        assert run_cli("gap", "--model", "cm", "--degrees", str(leaves), "--outer", "0") == 2
