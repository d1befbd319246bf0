"""
Multigraphex variants (W, S, I).

Each parametric variant carries a `scale` c produced by rescale(): the
rescaled graphex evaluates W(sqrt(c) x, sqrt(c) y, k), S(sqrt(c) x) / sqrt(c)
and I / c. ErasedRankOne and GRGKernel fold their own normalization constant
into the same factor, exposed as `kappa`.

Features of the Bipartite variant live on R+ x {1, 2}; its W, S and mu_W take
the side as an extra argument.
"""
import math
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, Mapping, Optional, Union

import numpy as np

from ..exceptions import ConfigError, InvalidParameterError
from ..measures.discrete import DiscreteMeasure, tail_inverse
from .poisson import poisson_pmf

KernelFn = Callable[[np.ndarray, np.ndarray, int], np.ndarray]
StarFn = Callable[[np.ndarray], np.ndarray]


def _check_nonneg(name: str, value: float) -> None:
    if not (value >= 0 and math.isfinite(value)):
        raise InvalidParameterError(f"{name} must be finite and non-negative, got {value}")


def _check_pos(name: str, value: float) -> None:
    if not (value > 0 and math.isfinite(value)):
        raise InvalidParameterError(f"{name} must be finite and positive, got {value}")


class Multigraphex:
    """Common interface of all variants."""

    kind: str = ""

    @property
    def kappa(self) -> float:
        """Combined feature scaling factor."""
        return 1.0

    def W(self, x, y, k: int):
        raise NotImplementedError

    def S(self, x):
        raise NotImplementedError

    @property
    def I(self) -> float:  # noqa: E743
        raise NotImplementedError

    def mu_w(self, x):
        """mu_W(x) = integral over y of 1 - W(x, y, 0)."""
        raise NotImplementedError

    def rescale(self, c: float) -> "Multigraphex":
        raise NotImplementedError

    def to_dict(self) -> Dict[str, Any]:
        raise NotImplementedError


def _rank_one_mu(rho: DiscreteMeasure, u: np.ndarray, kernel: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """sum_k m_k kernel(u x_k) for each entry of u."""
    u = np.asarray(u, dtype=np.float64)
    if rho.is_empty:
        return np.zeros(u.shape)
    return kernel(np.multiply.outer(u, rho.locations)) @ rho.masses


def _poisson_nonzero(z):
    return -np.expm1(-z)


def _grg_link(z):
    return z / (1.0 + z)


@dataclass(frozen=True)
class RankOne(Multigraphex):
    """Limit of CM and PA: Poisson(u v) multiplicities, stars a u, dust a^2 / 2."""

    rho: DiscreteMeasure
    a: float = 0.0
    scale: float = 1.0
    kind = "rank_one"

    def __post_init__(self):
        _check_nonneg("a", self.a)
        _check_pos("scale", self.scale)

    @property
    def kappa(self) -> float:
        return self.scale

    def weight(self, x):
        """rho_bar^{-1}(sqrt(kappa) x)."""
        return tail_inverse(self.rho, np.sqrt(self.kappa) * np.asarray(x, dtype=np.float64))

    def W(self, x, y, k: int):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        u, v = self.weight(x), self.weight(y)
        lam = np.where(x == y, np.square(u) / 2.0, np.multiply(u, v))
        return poisson_pmf(k, lam)

    def S(self, x):
        return self.a * self.weight(x) / math.sqrt(self.kappa)

    @property
    def I(self) -> float:  # noqa: E743
        return self.a**2 / (2.0 * self.kappa)

    def mu_w(self, x):
        return _rank_one_mu(self.rho, self.weight(x), _poisson_nonzero) / math.sqrt(self.kappa)

    def rescale(self, c: float) -> "RankOne":
        _check_pos("c", c)
        return replace(self, scale=self.scale * c)

    def to_dict(self) -> Dict[str, Any]:
        return {"type": self.kind, "rho": self.rho.to_dict(), "a": self.a, "scale": self.scale}


@dataclass(frozen=True)
class ErasedRankOne(Multigraphex):
    """Limit of the erased CM: Bernoulli(1 - exp(-u v)) edges, normalized by c."""

    rho: DiscreteMeasure
    a: float
    c: float
    scale: float = 1.0
    kind = "erased_rank_one"

    def __post_init__(self):
        _check_nonneg("a", self.a)
        _check_pos("c", self.c)
        _check_pos("scale", self.scale)

    @property
    def kappa(self) -> float:
        return self.c * self.scale

    def weight(self, x):
        return tail_inverse(self.rho, np.sqrt(self.kappa) * np.asarray(x, dtype=np.float64))

    def W(self, x, y, k: int):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        u, v = self.weight(x), self.weight(y)
        lam = np.where(x == y, np.square(u) / 2.0, np.multiply(u, v))
        p1 = -np.expm1(-lam)
        if k == 0:
            return 1.0 - p1
        if k == 1:
            return p1
        return np.zeros_like(p1)

    def S(self, x):
        return self.a * self.weight(x) / math.sqrt(self.kappa)

    @property
    def I(self) -> float:  # noqa: E743
        return self.a**2 / (2.0 * self.kappa)

    def mu_w(self, x):
        return _rank_one_mu(self.rho, self.weight(x), _poisson_nonzero) / math.sqrt(self.kappa)

    def rescale(self, c: float) -> "ErasedRankOne":
        _check_pos("c", c)
        return replace(self, scale=self.scale * c)

    def to_dict(self) -> Dict[str, Any]:
        return {"type": self.kind, "rho": self.rho.to_dict(), "a": self.a, "c": self.c, "scale": self.scale}


@dataclass(frozen=True)
class GRGKernel(Multigraphex):
    """Limit of the GRG: Bernoulli(u v / (1 + u v)) edges, no loops, normalized by C."""

    rho: DiscreteMeasure
    a: float
    C: float
    scale: float = 1.0
    kind = "grg"

    def __post_init__(self):
        _check_nonneg("a", self.a)
        _check_pos("C", self.C)
        _check_pos("scale", self.scale)

    @property
    def kappa(self) -> float:
        return self.C * self.scale

    def weight(self, x):
        return tail_inverse(self.rho, np.sqrt(self.kappa) * np.asarray(x, dtype=np.float64))

    def W(self, x, y, k: int):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        z = np.multiply(self.weight(x), self.weight(y))
        p1 = np.where(x == y, 0.0, _grg_link(z))
        if k == 0:
            return 1.0 - p1
        if k == 1:
            return p1
        return np.zeros_like(p1)

    def S(self, x):
        return self.a * self.weight(x) / math.sqrt(self.kappa)

    @property
    def I(self) -> float:  # noqa: E743
        return self.a**2 / (2.0 * self.kappa)

    def mu_w(self, x):
        return _rank_one_mu(self.rho, self.weight(x), _grg_link) / math.sqrt(self.kappa)

    def rescale(self, c: float) -> "GRGKernel":
        _check_pos("c", c)
        return replace(self, scale=self.scale * c)

    def to_dict(self) -> Dict[str, Any]:
        return {"type": self.kind, "rho": self.rho.to_dict(), "a": self.a, "C": self.C, "scale": self.scale}


@dataclass(frozen=True)
class Bipartite(Multigraphex):
    """Limit of the bipartite CM over features (x, side) with side in {1, 2}."""

    rho1: DiscreteMeasure
    rho2: DiscreteMeasure
    a1: float = 0.0
    a2: float = 0.0
    scale: float = 1.0
    kind = "bipartite"

    def __post_init__(self):
        _check_nonneg("a1", self.a1)
        _check_nonneg("a2", self.a2)
        _check_pos("scale", self.scale)

    @property
    def kappa(self) -> float:
        return self.scale

    def side_measure(self, side: int) -> DiscreteMeasure:
        return self.rho1 if side == 1 else self.rho2

    def side_drift(self, side: int) -> float:
        return self.a1 if side == 1 else self.a2

    def weight(self, x, side: int):
        return tail_inverse(self.side_measure(side), np.sqrt(self.kappa) * np.asarray(x, dtype=np.float64))

    def W(self, x, y, k: int, side_x: int = 1, side_y: int = 2):
        if side_x == side_y:
            lam = np.zeros(np.broadcast(np.asarray(x), np.asarray(y)).shape)
        else:
            lam = np.multiply(self.weight(x, side_x), self.weight(y, side_y))
        return poisson_pmf(k, lam)

    def S(self, x, side: int = 1):
        return self.side_drift(3 - side) * self.weight(x, side) / math.sqrt(self.kappa)

    @property
    def I(self) -> float:  # noqa: E743
        return self.a1 * self.a2 / self.kappa

    def mu_w(self, x, side: int = 1):
        other = self.side_measure(3 - side)
        return _rank_one_mu(other, self.weight(x, side), _poisson_nonzero) / math.sqrt(self.kappa)

    def rescale(self, c: float) -> "Bipartite":
        _check_pos("c", c)
        return replace(self, scale=self.scale * c)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": self.kind,
            "rho1": self.rho1.to_dict(),
            "rho2": self.rho2.to_dict(),
            "a1": self.a1,
            "a2": self.a2,
            "scale": self.scale,
        }


@dataclass(frozen=True)
class PureDust(Multigraphex):
    """Isolated edges only: W = 0, S = 0."""

    dust: float
    kind = "pure_dust"

    def __post_init__(self):
        _check_nonneg("I", self.dust)

    def W(self, x, y, k: int):
        shape = np.broadcast(np.asarray(x), np.asarray(y)).shape
        return np.full(shape, 1.0 if k == 0 else 0.0)

    def S(self, x):
        return np.zeros(np.shape(x))

    @property
    def I(self) -> float:  # noqa: E743
        return self.dust

    def mu_w(self, x):
        return np.zeros(np.shape(x))

    def rescale(self, c: float) -> "PureDust":
        _check_pos("c", c)
        return PureDust(self.dust / c)

    def to_dict(self) -> Dict[str, Any]:
        return {"type": self.kind, "I": self.dust}


# ----------------------------------------------------------------------
# Generic graphexes built from simple kernel forms
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class BoxKernel:
    """W(x, y, 1) = p on [0, width)^2 (width may be inf), else no edge."""

    p: float
    width: float = math.inf

    def __call__(self, x, y, k: int):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        inside = (x < self.width) & (y < self.width)
        p1 = np.where(inside, self.p, 0.0)
        if k == 0:
            return 1.0 - p1
        return p1 if k == 1 else np.zeros_like(p1)

    def tail_bound(self, cutoff: float) -> float:
        """Bound on the integral of mu_W beyond the cutoff."""
        if cutoff >= self.width:
            return 0.0
        return math.inf

    def to_dict(self) -> Dict[str, Any]:
        if math.isinf(self.width):
            return {"form": "constant", "p": self.p}
        return {"form": "box", "p": self.p, "width": self.width}


@dataclass(frozen=True)
class PoissonExpKernel:
    """Multiplicity Poisson(lam * exp(-rate x) * exp(-rate y))."""

    lam: float
    rate: float = 1.0

    def __call__(self, x, y, k: int):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        return poisson_pmf(k, self.lam * np.exp(-self.rate * (x + y)))

    def tail_bound(self, cutoff: float) -> float:
        return self.lam * math.exp(-self.rate * cutoff) / self.rate**2

    def to_dict(self) -> Dict[str, Any]:
        return {"form": "poisson_exp", "lam": self.lam, "rate": self.rate}


@dataclass(frozen=True)
class ExpStar:
    """S(x) = scale * exp(-rate x)."""

    scale: float
    rate: float = 1.0

    def __call__(self, x):
        return self.scale * np.exp(-self.rate * np.asarray(x, dtype=np.float64))

    def to_dict(self) -> Dict[str, Any]:
        return {"form": "exp", "scale": self.scale, "rate": self.rate}


@dataclass(frozen=True)
class ZeroStar:
    def __call__(self, x):
        return np.zeros(np.shape(x))

    def to_dict(self) -> Dict[str, Any]:
        return {"form": "zero"}


@dataclass(frozen=True)
class Generic(Multigraphex):
    """
    Arbitrary (W, S, I) sampled on [0, feature_cutoff].

    Attributes:
        kernel: W(x, y, k), vectorized over x and y
        star: S(x) for simple stars
        dust: I(1)
        feature_cutoff: Features above this value are not sampled
        tail_mass: Bound on the integral of mu_W beyond the cutoff; taken from
            kernel.tail_bound(feature_cutoff) when omitted, and required for
            kernels without one
        multi_stars: {k: S_k} for stars of multiplicity k >= 2
        multi_dust: {k: I(k)} for isolated edges of multiplicity k >= 2
    """

    kernel: KernelFn
    star: StarFn = field(default_factory=ZeroStar)
    dust: float = 0.0
    feature_cutoff: float = 10.0
    tail_mass: Optional[float] = None
    multi_stars: Mapping[int, StarFn] = field(default_factory=dict)
    multi_dust: Mapping[int, float] = field(default_factory=dict)
    scale: float = 1.0
    kind = "generic"

    def __post_init__(self):
        _check_nonneg("I", self.dust)
        _check_pos("feature_cutoff", self.feature_cutoff)
        if self.tail_mass is None:
            if not hasattr(self.kernel, "tail_bound"):
                raise InvalidParameterError("tail_mass is required for a kernel without tail_bound")
            object.__setattr__(self, "tail_mass", float(self.kernel.tail_bound(self.feature_cutoff)))
        if not self.tail_mass >= 0:
            raise InvalidParameterError("tail_mass must be non-negative")
        _check_pos("scale", self.scale)
        for k, rate in self.multi_dust.items():
            if int(k) < 2:
                raise InvalidParameterError("multi_dust keys must be >= 2")
            _check_nonneg(f"I({k})", rate)
        for k in self.multi_stars:
            if int(k) < 2:
                raise InvalidParameterError("multi_stars keys must be >= 2")

    @property
    def kappa(self) -> float:
        return self.scale

    def _feature(self, x):
        return np.sqrt(self.kappa) * np.asarray(x, dtype=np.float64)

    def W(self, x, y, k: int):
        return self.kernel(self._feature(x), self._feature(y), k)

    def S(self, x):
        return self.star(self._feature(x)) / math.sqrt(self.kappa)

    def S_k(self, x, k: int):
        if k == 1:
            return self.S(x)
        fn = self.multi_stars.get(k)
        if fn is None:
            return np.zeros(np.shape(x))
        return fn(self._feature(x)) / math.sqrt(self.kappa)

    @property
    def I(self) -> float:  # noqa: E743
        return self.dust / self.kappa

    def I_k(self, k: int) -> float:
        if k == 1:
            return self.I
        return float(self.multi_dust.get(k, 0.0)) / self.kappa

    def mu_w(self, x, resolution: int = 512):
        """Midpoint quadrature of the y-integral up to the feature cutoff."""
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        cutoff = self.feature_cutoff / math.sqrt(self.kappa)
        h = cutoff / resolution
        y = (np.arange(resolution) + 0.5) * h
        values = (1.0 - self.W(x[:, None], y[None, :], 0)).sum(axis=1) * h
        return values

    def rescale(self, c: float) -> "Generic":
        _check_pos("c", c)
        return replace(self, scale=self.scale * c)

    def to_dict(self) -> Dict[str, Any]:
        stars = [self.star, *self.multi_stars.values()]
        if not hasattr(self.kernel, "to_dict") or not all(hasattr(fn, "to_dict") for fn in stars):
            raise ConfigError("generic graphex with plain callables cannot be serialized")
        out: Dict[str, Any] = {
            "type": self.kind,
            "kernel": self.kernel.to_dict(),
            "star": self.star.to_dict(),
            "I": self.dust,
            "feature_cutoff": self.feature_cutoff,
            "tail_mass": self.tail_mass,
            "scale": self.scale,
        }
        if self.multi_dust:
            out["multi_dust"] = {str(k): v for k, v in self.multi_dust.items()}
        if self.multi_stars:
            out["multi_stars"] = {str(k): fn.to_dict() for k, fn in sorted(self.multi_stars.items())}
        return out


def kernel_from_dict(data: Mapping[str, Any]):
    form = data.get("form")
    if form == "constant":
        return BoxKernel(float(data["p"]))
    if form == "box":
        return BoxKernel(float(data["p"]), float(data["width"]))
    if form == "poisson_exp":
        return PoissonExpKernel(float(data["lam"]), float(data.get("rate", 1.0)))
    raise ConfigError(f"unknown kernel form: {form}")


def star_from_dict(data: Optional[Mapping[str, Any]]):
    if not data or data.get("form", "zero") == "zero":
        return ZeroStar()
    if data["form"] == "exp":
        return ExpStar(float(data["scale"]), float(data.get("rate", 1.0)))
    raise ConfigError(f"unknown star form: {data['form']}")


def _default_cutoff(kernel) -> float:
    if isinstance(kernel, BoxKernel) and math.isfinite(kernel.width):
        return 2.0 * kernel.width
    if isinstance(kernel, PoissonExpKernel):
        return 20.0 / kernel.rate
    return 10.0


def generic_from_dict(data: Mapping[str, Any]) -> Generic:
    kernel = kernel_from_dict(data.get("kernel", {}))
    cutoff = float(data.get("feature_cutoff", _default_cutoff(kernel)))
    tail = data.get("tail_mass")
    return Generic(
        kernel=kernel,
        star=star_from_dict(data.get("star")),
        dust=float(data.get("I", 0.0)),
        feature_cutoff=cutoff,
        tail_mass=None if tail is None else float(tail),
        multi_stars={int(k): star_from_dict(v) for k, v in data.get("multi_stars", {}).items()},
        multi_dust={int(k): float(v) for k, v in data.get("multi_dust", {}).items()},
        scale=float(data.get("scale", 1.0)),
    )


MultigraphexLike = Union[RankOne, ErasedRankOne, GRGKernel, Bipartite, PureDust, Generic]


def graphex_from_dict(data: Mapping[str, Any]) -> Multigraphex:
    """Inverse of Multigraphex.to_dict (tagged by "type")."""
    kind = data.get("type")
    try:
        if kind == "rank_one":
            rho, _ = DiscreteMeasure.from_dict(data["rho"])
            return RankOne(rho, float(data.get("a", 0.0)), float(data.get("scale", 1.0)))
        if kind == "erased_rank_one":
            rho, _ = DiscreteMeasure.from_dict(data["rho"])
            return ErasedRankOne(rho, float(data.get("a", 0.0)), float(data["c"]), float(data.get("scale", 1.0)))
        if kind == "grg":
            rho, _ = DiscreteMeasure.from_dict(data["rho"])
            return GRGKernel(rho, float(data.get("a", 0.0)), float(data["C"]), float(data.get("scale", 1.0)))
        if kind == "bipartite":
            rho1, _ = DiscreteMeasure.from_dict(data["rho1"])
            rho2, _ = DiscreteMeasure.from_dict(data["rho2"])
            return Bipartite(
                rho1, rho2, float(data.get("a1", 0.0)), float(data.get("a2", 0.0)), float(data.get("scale", 1.0))
            )
        if kind == "pure_dust":
            return PureDust(float(data["I"]))
        if kind == "generic":
            return generic_from_dict(data)
    except KeyError as exc:
        raise ConfigError(f"graphex spec of type {kind} is missing field {exc}") from exc
    raise ConfigError(f"unknown graphex type: {kind}")


def rescale(graphex: Multigraphex, c: float) -> Multigraphex:
    """The graphex with features scaled by sqrt(c): GP_t of the result is GP_{t/sqrt(c)} of the input."""
    return graphex.rescale(c)
