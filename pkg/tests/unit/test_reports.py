"""
Unit tests for report files and suite selection.
"""
import json

import numpy as np
import pytest

from graphex_sim import __version__
from graphex_sim.cli.reports import Timings, config_hash, dumps, envelope, write_json
from graphex_sim.cli.suite import CRITERIA, is_star_forest, reference_degrees, select_criteria
from graphex_sim.core.multigraph import Multigraph
from graphex_sim.exceptions import ConfigError
from tests.factories import GraphFactory


class TestReports:
    """Test JSON report helpers."""

    def test_dumps_numpy(self):
        """Test that numpy scalars, arrays, bytes and complex values serialize."""
        data = json.loads(dumps({"b": np.int64(3), "a": np.arange(2), "k": b"\x01", "z": 1 + 2j}))

        assert data == {"a": [0, 1], "b": 3, "k": "01", "z": [1.0, 2.0]}

    def test_sorted_keys(self):
        """Test deterministic key order."""
        assert dumps({"b": 1, "a": 2}).index('"a"') < dumps({"b": 1, "a": 2}).index('"b"')

    def test_hash_order_independent(self):
        """Test that key order does not change the hash."""
        assert config_hash({"a": 1, "b": 2}) == config_hash({"b": 2, "a": 1})

    def test_envelope(self):
        """Test the version and hash fields."""
        data = envelope("gen", {"seed": 1}, {"pass": True})

        assert data["version"] == __version__
        assert data["config_hash"] == config_hash({"seed": 1})
        assert data["pass"] is True
        assert data["config"] == {"seed": 1}

    def test_write_json(self, tmp_path):
        """Test that parent directories are created."""
        path = write_json(tmp_path / "nested" / "report.json", {"x": 1})

        assert json.loads(path.read_text(encoding="utf-8")) == {"x": 1}

    def test_timings(self, tmp_path):
        """Test that timings go to their own file."""
        timings = Timings()
        with timings.step("work"):
            pass

        path = timings.write(tmp_path)

        assert "work" in json.loads(path.read_text(encoding="utf-8"))["steps"]
        assert Timings().write(None) is None


class TestSuiteSelection:
    """Test criterion selection."""

    def test_all(self):
        """Test that no selector picks all sixteen criteria."""
        assert [c.id for c in select_criteria(None)] == list(range(1, 17))
        assert len(CRITERIA) == 16

    def test_groups_and_ids(self):
        """Test mixed group names and ids, returned in id order."""
        assert [c.id for c in select_criteria("13,grg")] == [9, 10, 13]
        assert [c.id for c in select_criteria("cm")] == [1, 3, 4, 5, 16]

    @pytest.mark.parametrize("only", ["17", "er", "cm,x"])
    def test_unknown(self, only):
        """Test ConfigError for unknown selectors."""
        with pytest.raises(ConfigError):
            select_criteria(only)

    def test_reference_family(self):
        """Test 50 hubs of degree 100 and 5000 leaves."""
        d = reference_degrees()

        assert d.size == 5050
        assert int(d.sum()) == 10000


class TestStarForest:
    """Test the star-forest predicate."""

    def test_star(self):
        """Test that stars qualify."""
        assert is_star_forest(GraphFactory.star(4))

    @pytest.mark.parametrize(
        "graph",
        [GraphFactory.path(4), GraphFactory.loop_and_double_edge(), Multigraph.from_edges(2, {(0, 1): 2})],
    )
    def test_not_star(self, graph):
        """Test paths, loops and multi-edges."""
        assert not is_star_forest(graph)
