"""
Finite atomic measures on (0, inf) and the functionals used by the limits.

The tail is taken open: rho_bar(x) = rho((x, inf)), which makes rho_bar
right-continuous and its generalized inverse cadlag.
"""
import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, Mapping, Optional, Tuple, Union

import numpy as np

from ..exceptions import ConfigError, InvalidParameterError

Kernel = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """
    sum_k m_k delta_{x_k} with strictly positive, strictly increasing locations.

    Equal locations passed to the constructor are merged with summed mass.
    """

    locations: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.locations, dtype=np.float64).ravel()
        m = np.asarray(self.masses, dtype=np.float64).ravel()
        if x.shape != m.shape:
            raise InvalidParameterError("locations and masses differ in length")
        if x.size:
            if not (np.all(np.isfinite(x)) and np.all(np.isfinite(m))):
                raise InvalidParameterError("atoms must be finite")
            if x.min() <= 0:
                raise InvalidParameterError("atom locations must be strictly positive")
            if m.min() <= 0:
                raise InvalidParameterError("atom masses must be strictly positive")
            x, inverse = np.unique(x, return_inverse=True)
            m = np.bincount(inverse, weights=m, minlength=x.size)
        x.setflags(write=False)
        m.setflags(write=False)
        object.__setattr__(self, "locations", x)
        object.__setattr__(self, "masses", m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiscreteMeasure):
            return NotImplemented
        return np.array_equal(self.locations, other.locations) and np.array_equal(self.masses, other.masses)

    def __hash__(self) -> int:
        return hash((self.locations.tobytes(), self.masses.tobytes()))

    @classmethod
    def empty(cls) -> "DiscreteMeasure":
        return cls(np.empty(0), np.empty(0))

    @classmethod
    def from_atoms(cls, atoms: Iterable[Tuple[float, float]]) -> "DiscreteMeasure":
        pairs = list(atoms)
        if not pairs:
            return cls.empty()
        x, m = zip(*pairs)
        return cls(np.asarray(x), np.asarray(m))

    @property
    def atoms(self):
        return list(zip(self.locations.tolist(), self.masses.tolist()))

    @property
    def n_atoms(self) -> int:
        return int(self.locations.size)

    @property
    def is_empty(self) -> bool:
        return self.n_atoms == 0

    def total_mass(self) -> float:
        return float(self.masses.sum())

    def first_moment(self) -> float:
        """Integral of x."""
        return float(np.dot(self.locations, self.masses))

    def scaled(self, location_factor: float = 1.0, mass_factor: float = 1.0) -> "DiscreteMeasure":
        return DiscreteMeasure(self.locations * location_factor, self.masses * mass_factor)

    def above(self, tau: float) -> "DiscreteMeasure":
        """Atoms with location > tau."""
        keep = self.locations > tau
        return DiscreteMeasure(self.locations[keep], self.masses[keep])

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_dict(self, a: Optional[float] = None) -> Dict[str, Any]:
        out: Dict[str, Any] = {"atoms": [[x, m] for x, m in self.atoms]}
        if a is not None:
            out["a"] = float(a)
        return out

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> Tuple["DiscreteMeasure", float]:
        """Returns (measure, drift a), with a = 0 when absent."""
        try:
            measure = cls.from_atoms((float(x), float(m)) for x, m in data.get("atoms", []))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"malformed atoms: {exc}") from exc
        return measure, float(data.get("a", 0.0))

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["x", "mass"])
        for x, m in self.atoms:
            writer.writerow([repr(x), repr(m)])
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "DiscreteMeasure":
        reader = csv.DictReader(io.StringIO(text))
        return cls.from_atoms((float(r["x"]), float(r["mass"])) for r in reader)


def read_measure(path: Union[str, Path]) -> Tuple[DiscreteMeasure, float]:
    """Load a measure from JSON ({atoms, a}) or CSV (x,mass); returns (measure, a)."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"measure file not found: {path}")
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".csv":
        return DiscreteMeasure.from_csv(text), 0.0
    try:
        return DiscreteMeasure.from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from exc


def write_measure(path: Union[str, Path], rho: DiscreteMeasure, a: Optional[float] = None) -> None:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        path.write_text(rho.to_csv(), encoding="utf-8")
    else:
        path.write_text(json.dumps(rho.to_dict(a), indent=2) + "\n", encoding="utf-8")


# ----------------------------------------------------------------------
# Empirical measures
# ----------------------------------------------------------------------


def empirical_measure(values: Iterable[float], total: Optional[float] = None) -> DiscreteMeasure:
    """
    (1/sqrt(T)) sum_i delta_{v_i / sqrt(T)} over the positive values.

    Args:
        values: Non-negative values (degrees, expected degrees, weights)
        total: Normalization T; defaults to sum(values)
    """
    v = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=np.float64)
    if v.size and v.min() < 0:
        raise InvalidParameterError("values must be non-negative")
    total = float(v.sum()) if total is None else float(total)
    if total <= 0:
        raise InvalidParameterError("normalization must be positive")
    v = v[v > 0]
    if v.size == 0:
        return DiscreteMeasure.empty()
    root = np.sqrt(total)
    locations, counts = np.unique(v, return_counts=True)
    return DiscreteMeasure(locations / root, counts / root)


def empirical_degree_measure(d: Iterable[float]) -> DiscreteMeasure:
    """rho_n for a degree sequence: atom d_i / sqrt(l_n) of mass 1 / sqrt(l_n) per vertex."""
    from ..generators.sequences import as_degree_sequence

    seq = as_degree_sequence(d)
    return empirical_measure(seq.degrees, seq.ell)


# ----------------------------------------------------------------------
# Functionals
# ----------------------------------------------------------------------


def b_value(rho: DiscreteMeasure) -> float:
    """Integral of min(x, 1)."""
    return float(np.dot(np.minimum(rho.locations, 1.0), rho.masses))


def tail_intensity(rho: DiscreteMeasure, x: float) -> float:
    """rho((x, inf))."""
    return float(rho.masses[rho.locations > x].sum())


def _suffix_masses(rho: DiscreteMeasure) -> np.ndarray:
    """S[j] = rho mass of atoms j.. (0-indexed), with S[K] = 0 exactly."""
    return np.concatenate([np.cumsum(rho.masses[::-1])[::-1], [0.0]])


def tail_inverse(rho: DiscreteMeasure, y):
    """
    Generalized inverse inf{x >= 0 : rho_bar(x) <= y}, with rho_bar^{-1}(0) = 0.

    Accepts a scalar or an array of y values.
    """
    y_arr = np.asarray(y, dtype=np.float64)
    if np.any(y_arr < 0):
        raise InvalidParameterError("tail_inverse needs y >= 0")
    suffix = _suffix_masses(rho)
    grid = np.concatenate([[0.0], rho.locations])
    # first j with suffix[j] <= y; suffix is non-increasing
    j = np.searchsorted(-suffix, -y_arr, side="left")
    out = np.where(y_arr == 0, 0.0, grid[np.minimum(j, grid.size - 1)])
    return float(out) if out.ndim == 0 else out


def low_mass_estimate(rho: DiscreteMeasure, eps: float) -> float:
    """Integral of x over [0, eps] (closed)."""
    if eps <= 0:
        raise InvalidParameterError("eps must be positive")
    keep = rho.locations <= eps
    return float(np.dot(rho.locations[keep], rho.masses[keep]))


def split_at(rho: DiscreteMeasure, tau: float) -> Tuple[DiscreteMeasure, float]:
    """(atoms above tau, low_mass_estimate at tau)."""
    return rho.above(tau), low_mass_estimate(rho, tau)


def ecm_kernel(z: np.ndarray) -> np.ndarray:
    return -np.expm1(-z)


def grg_kernel(z: np.ndarray) -> np.ndarray:
    return z / (1.0 + z)


KERNELS = {"ecm": ecm_kernel, "grg": grg_kernel}


def kernel_mass(rho: DiscreteMeasure, kernel: Union[str, Kernel]) -> float:
    """Double integral of kernel(x y) against rho x rho, diagonal included."""
    if isinstance(kernel, str):
        if kernel not in KERNELS:
            raise InvalidParameterError(f"unknown kernel: {kernel}")
        kernel = KERNELS[kernel]
    if rho.is_empty:
        return 0.0
    x, m = rho.locations, rho.masses
    total = 0.0
    block = 2048
    for start in range(0, x.size, block):
        stop = start + block
        values = kernel(np.outer(x[start:stop], x))
        total += float(m[start:stop] @ values @ m)
    return total
