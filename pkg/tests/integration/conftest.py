"""
Shared fixtures for integration tests.

This extends the base conftest.py with command-line fixtures:
- run_cli: invokes the graphex-sim entry point with an output directory
- write_sequence_file: writes a one-value-per-line sequence file
"""
import json
from pathlib import Path
from typing import Any, Callable, Iterable, List

import pytest

from graphex_sim.cli.main import main


@pytest.fixture
def write_sequence_file(tmp_path) -> Callable[[str, Iterable[float]], Path]:
    """Write values under tmp_path and return the path."""

    def _write(name: str, values: Iterable[float]) -> Path:
        path = tmp_path / name
        path.write_text("".join(f"{v}\n" for v in values), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def write_json_file(tmp_path) -> Callable[[str, Any], Path]:
    """Write a JSON document under tmp_path and return the path."""

    def _write(name: str, data: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def run_cli(tmp_path) -> Callable[..., int]:
    """Run the CLI with --seed and --out prepended; out defaults to tmp_path / "out"."""

    def _run(*args: str, seed: int = 7, out: Path = None) -> int:
        out = out or tmp_path / "out"
        argv: List[str] = ["--seed", str(seed), "--out", str(out), *args]
        return main(argv)

    return _run
