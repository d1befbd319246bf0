"""
Experiment configuration documents.

A config is a JSON file (or the equivalent command-line flags) naming a model,
a graphex and the Monte Carlo budget:

    {
        "name": "pure-dust",
        "seed": 7,
        "model": {"family": "cm", "degrees": {"family": {"leaves": {"count": 5000, "degree": 1}}}},
        "graphex": {"type": "pure_dust", "I": 0.5},
        "t": 1.0,
        "reps": 100000,
        "threshold": 0.05
    }

Sequences are given inline ("values"), by file ("file") or as a synthetic
block family ("family"). The graphex is "auto" (the model's finite-n limit),
an inline tagged object, or a path to a JSON file.
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..exceptions import ConfigError, InvalidParameterError
from ..generators.models import ModelSpec
from ..generators.sequences import expand_family, read_sequence
from ..graphex.limits import limit_of_bcm, limit_of_cm, limit_of_ecm, limit_of_grg, limit_of_pa
from ..graphex.multigraphex import Multigraphex, graphex_from_dict
from .reports import config_hash


class SequenceSource(BaseModel):
    """Exactly one of inline values, a sequence file or a block family."""

    model_config = ConfigDict(extra="forbid")

    values: Optional[List[float]] = None
    file: Optional[Path] = None
    family: Optional[Union[Dict[str, Any], List[Any]]] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "SequenceSource":
        given = [x is not None for x in (self.values, self.file, self.family)]
        if sum(given) != 1:
            raise ValueError("give exactly one of values, file or family")
        if self.file is not None and not self.file.is_file():
            raise ValueError(f"sequence file not found: {self.file}")
        return self

    def load(self) -> np.ndarray:
        if self.values is not None:
            return np.asarray(self.values, dtype=np.float64)
        if self.file is not None:
            return read_sequence(self.file)
        return expand_family(self.family)


class ModelConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    family: Literal["cm", "ecm", "pa", "grg", "bcm"]
    degrees: Optional[SequenceSource] = None
    weights: Optional[SequenceSource] = None
    side1: Optional[SequenceSource] = None
    side2: Optional[SequenceSource] = None
    m: Optional[int] = Field(default=None, ge=1)
    simultaneous: bool = True

    def build(self) -> ModelSpec:
        """
        Construct the ModelSpec.

        Raises:
            ConfigError: missing sequence or invalid values
        """
        try:
            if self.family in ("cm", "ecm"):
                source = self._require(self.degrees, "degrees")
                return ModelSpec.cm(source.load()) if self.family == "cm" else ModelSpec.ecm(source.load())
            if self.family == "pa":
                source = self._require(self.weights or self.degrees, "weights")
                if self.m is None:
                    raise ConfigError("pa needs m")
                return ModelSpec.pa(source.load(), self.m, self.simultaneous)
            if self.family == "grg":
                return ModelSpec.grg(self._require(self.weights or self.degrees, "weights").load())
            return ModelSpec.bcm(self._require(self.side1, "side1").load(), self._require(self.side2, "side2").load())
        except InvalidParameterError as exc:
            raise ConfigError(f"invalid {self.family} parameters: {exc}") from exc

    @staticmethod
    def _require(source: Optional[SequenceSource], name: str) -> SequenceSource:
        if source is None:
            raise ConfigError(f"model is missing {name}")
        return source


def limit_for(model: ModelSpec) -> Multigraphex:
    """The finite-n graphex associated with a model."""
    if model.family == "cm":
        return limit_of_cm(model.degrees)
    if model.family == "ecm":
        return limit_of_ecm(model.degrees)
    if model.family == "pa":
        return limit_of_pa(model.weights, model.m)
    if model.family == "grg":
        return limit_of_grg(model.weights)
    return limit_of_bcm(model.bipartite)


def load_graphex(spec: Union[str, Path, Dict[str, Any]], model: Optional[ModelSpec] = None) -> Multigraphex:
    """
    Resolve a graphex spec: "auto", an inline dict or a JSON file path.

    Raises:
        ConfigError: "auto" without a model, missing file or malformed JSON
    """
    if isinstance(spec, dict):
        return graphex_from_dict(spec)
    if str(spec) == "auto":
        if model is None:
            raise ConfigError('graphex "auto" needs a model')
        return limit_for(model)
    path = Path(spec)
    if not path.is_file():
        raise ConfigError(f"graphex file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
    return graphex_from_dict(data)


class ExperimentConfig(BaseModel):
    """A convergence experiment."""

    model_config = ConfigDict(extra="forbid")

    name: str = "experiment"
    seed: int
    model: ModelConfig
    graphex: Union[Literal["auto"], Dict[str, Any], Path] = "auto"
    t: float = Field(default=1.0, ge=0.0)
    reps: int = Field(default=1000, ge=1)
    threshold: Optional[float] = Field(default=None, ge=0.0)
    out: Optional[Path] = None

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "ExperimentConfig":
        """
        Load a JSON config.

        Raises:
            ConfigError: missing file, malformed JSON or schema violation
        """
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}")
        try:
            return cls.model_validate_json(path.read_text(encoding="utf-8"))
        except ValidationError as exc:
            raise ConfigError(f"invalid config {path}: {exc}") from exc

    @classmethod
    def from_mapping(cls, data: Dict[str, Any]) -> "ExperimentConfig":
        try:
            return cls.model_validate(data)
        except ValidationError as exc:
            raise ConfigError(f"invalid config: {exc}") from exc

    def config_hash(self) -> str:
        return config_hash(self.model_dump(mode="json", exclude={"out"}))
