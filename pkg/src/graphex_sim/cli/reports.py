"""
Report files written by the command line.

Reports are plain JSON with sorted keys so that the same config and seed give
byte-identical files. Wall-clock timings never enter a report; they go to a
separate timings.json.
"""
import hashlib
import json
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, Optional, Union

import numpy as np

from ..exceptions import ConfigError
from ..log import get_component_logger

logger = get_component_logger("graphex_sim.cli")


def _default(value: Any) -> Any:
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (bytes, bytearray)):
        return value.hex()
    if isinstance(value, complex):
        return [value.real, value.imag]
    return str(value)


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, default=_default) + "\n"


def config_hash(data: Any) -> str:
    """sha256 of the canonical JSON form."""
    blob = json.dumps(data, sort_keys=True, separators=(",", ":"), default=_default)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def envelope(command: str, parameters: Dict[str, Any], body: Dict[str, Any]) -> Dict[str, Any]:
    """Wrap a command result with the library version, its configuration and the configuration hash."""
    from .. import __version__

    return {
        "command": command,
        "version": __version__,
        "config_hash": config_hash(parameters),
        "config": parameters,
        **body,
    }


def write_text(path: Union[str, Path], text: str) -> Path:
    """
    Write a file, creating parent directories.

    Raises:
        ConfigError: the file cannot be written
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot write {path}: {exc}") from exc
    logger.debug("Wrote file", path=str(path), size=len(text))
    return path


def write_json(path: Union[str, Path], data: Any) -> Path:
    return write_text(path, dumps(data))


class Timings:
    """Wall-clock seconds per named step."""

    def __init__(self):
        self.steps: Dict[str, float] = {}
        self._start = time.perf_counter()

    @contextmanager
    def step(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.steps[name] = time.perf_counter() - start
            logger.info("Step finished", step=name, seconds=round(self.steps[name], 3))

    def to_dict(self) -> Dict[str, Any]:
        return {"steps": dict(self.steps), "total": time.perf_counter() - self._start}

    def write(self, directory: Optional[Union[str, Path]]) -> Optional[Path]:
        if directory is None:
            return None
        return write_json(Path(directory) / "timings.json", self.to_dict())
