"""
Monte Carlo experiments comparing finite models with their graphex limits.

Every experiment draws one sampled subgraph per fresh model draw and tallies
canonical classes in per-chunk censuses that are merged in replicate order, so
results depend only on the generator handed in.
"""
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core.census import Census, classify
from ..core.multigraph import Multigraph
from ..exceptions import InvalidParameterError
from ..generators.models import ModelSpec
from ..generators.sequences import SequenceLike, as_degree_sequence
from ..graphex.multigraphex import Multigraphex, rescale
from ..graphex.samplers import sample_gp
from ..graphex.validate import validate
from ..log import get_component_logger
from ..measures.crm import crm_char_function, sample_crm
from ..measures.discrete import DiscreteMeasure, empirical_measure
from ..measures.levy import levy_path_from_sequence
from ..rng import derive_key
from ..sampling.adjacency import count, extract_graph
from ..sampling.psample import canonical_sample, label
from ..services.runner import ReplicateRunner
from .statistics import CharFunctionEstimate, MeanEstimate, empirical_char_function
from .tv import TVEstimate, tv_between

logger = get_component_logger("graphex_sim.analysis.experiments")


@dataclass
class ExperimentReport:
    """Machine-readable outcome of one experiment."""

    experiment: str
    parameters: Dict[str, Any]
    statistic: float
    ci: Tuple[float, float]
    reference: Optional[float]
    passed: Optional[bool]
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "experiment": self.experiment,
            "parameters": self.parameters,
            "statistic": self.statistic,
            "ci": list(self.ci),
            "reference": self.reference,
            "pass": self.passed,
            "details": self.details,
        }


@dataclass
class ConvergenceResult:
    tv: TVEstimate
    left: Census
    right: Census
    report: ExperimentReport


def census_run(
    draw: Callable[[np.random.Generator], Multigraph],
    reps: int,
    rng: np.random.Generator,
    runner: Optional[ReplicateRunner] = None,
    key_vertex_limit: Optional[int] = None,
) -> Census:
    """
    Census of `reps` independent draws.

    Args:
        draw: Produces one graph from a replicate generator
        reps: Number of draws
        rng: Source of the experiment key
        runner: Replicate runner (a default one when omitted)
        key_vertex_limit: Canonicalization ceiling

    Returns:
        Census with total == reps
    """
    runner = runner or ReplicateRunner()

    def one(rep_rng: np.random.Generator):
        graph = draw(rep_rng)
        return classify(graph, key_vertex_limit), graph

    def fold(census: Census, item) -> Census:
        census.record(*item)
        return census

    merged = Census()
    for partial in runner.run_partial(one, reps, derive_key(rng), Census, fold):
        merged = merged.merge(partial)
    return merged


def model_census(
    model: ModelSpec,
    t: float,
    reps: int,
    rng: np.random.Generator,
    runner: Optional[ReplicateRunner] = None,
    key_vertex_limit: Optional[int] = None,
) -> Census:
    """Census of canonical_sample(G, t), one sample per fresh model draw."""
    return census_run(lambda r: canonical_sample(model.draw(r), t, r), reps, rng, runner, key_vertex_limit)


def graphex_census(
    graphex: Multigraphex,
    t: float,
    reps: int,
    rng: np.random.Generator,
    runner: Optional[ReplicateRunner] = None,
    key_vertex_limit: Optional[int] = None,
) -> Census:
    """Census of sample_gp(graphex, t)."""
    return census_run(lambda r: sample_gp(graphex, t, r), reps, rng, runner, key_vertex_limit)


def _tv_report(
    name: str,
    parameters: Dict[str, Any],
    left: Census,
    right: Census,
    rng: np.random.Generator,
    threshold: Optional[float],
) -> ConvergenceResult:
    tv = tv_between(left, right, rng)
    passed = None if threshold is None else tv.value <= threshold
    report = ExperimentReport(
        experiment=name,
        parameters=parameters,
        statistic=tv.value,
        ci=tv.ci,
        reference=threshold,
        passed=passed,
        details={"half_width": tv.half_width, "classes": len(set(left.counts) | set(right.counts))},
    )
    logger.info("Experiment finished", experiment=name, tv=tv.value, half_width=tv.half_width, passed=passed)
    return ConvergenceResult(tv, left, right, report)


def convergence_experiment(
    model: ModelSpec,
    graphex: Multigraphex,
    t: float,
    reps: int,
    rng: np.random.Generator,
    threshold: Optional[float] = None,
    runner: Optional[ReplicateRunner] = None,
    key_vertex_limit: Optional[int] = None,
) -> ConvergenceResult:
    """
    TV between the census of canonical samples of a model and the census of GP_t(graphex).

    The graphex is validated first.

    Raises:
        ValidationFailure: graphex violates an integrability condition
        RateExceedsOne: t / sqrt(2 e(G)) > 1 for a realized graph
    """
    validate(graphex)
    runner = runner or ReplicateRunner()
    logger.info("Convergence experiment", family=model.family, graphex=graphex.kind, t=t, reps=reps)
    regime = model.check_regime()
    left = model_census(model, t, reps, rng, runner, key_vertex_limit)
    right = graphex_census(graphex, t, reps, rng, runner, key_vertex_limit)
    parameters = {"model": model.describe(), "graphex": graphex.kind, "t": t, "reps": reps}
    result = _tv_report("convergence", parameters, left, right, rng, threshold)
    result.report.details["regime_warnings"] = regime
    return result


def null_experiment(
    model: ModelSpec,
    t: float,
    reps: int,
    rng: np.random.Generator,
    runner: Optional[ReplicateRunner] = None,
    key_vertex_limit: Optional[int] = None,
) -> ConvergenceResult:
    """
    TV between two independent model censuses.

    Passes when the TV is within twice its bootstrap half-width, which calibrates
    thresholds for convergence_experiment.
    """
    runner = runner or ReplicateRunner()
    left = model_census(model, t, reps, rng, runner, key_vertex_limit)
    right = model_census(model, t, reps, rng, runner, key_vertex_limit)
    result = _tv_report("null", {"model": model.describe(), "t": t, "reps": reps}, left, right, rng, None)
    result.report.reference = 2.0 * result.tv.half_width
    result.report.passed = result.tv.value <= result.report.reference
    return result


def rescaling_experiment(
    graphex: Multigraphex,
    c: float,
    t: float,
    reps: int,
    rng: np.random.Generator,
    threshold: Optional[float] = None,
    runner: Optional[ReplicateRunner] = None,
    key_vertex_limit: Optional[int] = None,
) -> ConvergenceResult:
    """TV between GP_t(graphex rescaled by c) and GP_{t / sqrt(c)}(graphex)."""
    if c <= 0:
        raise InvalidParameterError("rescaling factor must be positive")
    runner = runner or ReplicateRunner()
    left = graphex_census(rescale(graphex, c), t, reps, rng, runner, key_vertex_limit)
    right = graphex_census(graphex, t / math.sqrt(c), reps, rng, runner, key_vertex_limit)
    parameters = {"graphex": graphex.kind, "c": c, "t": t, "reps": reps}
    return _tv_report("rescaling", parameters, left, right, rng, threshold)


def sampling_equivalence_experiment(
    graph: Multigraph,
    r: float,
    reps: int,
    rng: np.random.Generator,
    threshold: Optional[float] = None,
    runner: Optional[ReplicateRunner] = None,
    key_vertex_limit: Optional[int] = None,
) -> ConvergenceResult:
    """TV between extract_graph(Lbl_{sqrt(2e)}(G), r) and canonical_sample(G, r) on a fixed graph."""
    runner = runner or ReplicateRunner()
    s = math.sqrt(2.0 * graph.non_loop_edge_count())
    if r > s:
        raise InvalidParameterError(f"window {r} exceeds sqrt(2 e(G)) = {s}")
    left = census_run(lambda q: extract_graph(label(graph, s, q), r), reps, rng, runner, key_vertex_limit)
    right = census_run(lambda q: canonical_sample(graph, r, q), reps, rng, runner, key_vertex_limit)
    parameters = {"vertices": graph.n_vertices, "edges": graph.non_loop_edge_count(), "r": r, "reps": reps}
    return _tv_report("sampling_equivalence", parameters, left, right, rng, threshold)


@dataclass
class GapResult:
    """Per-graph inner estimates of P(xi(A x B) = l) and their spread around the pooled value."""

    estimates: np.ndarray
    pooled: float
    max_gap: float
    inner_reps: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "estimates": self.estimates.tolist(),
            "pooled": self.pooled,
            "max_gap": self.max_gap,
            "inner_reps": self.inner_reps,
        }


def quenched_annealed_gap(
    model: ModelSpec,
    A,
    B,
    l: int,
    reps_outer: int,
    reps_inner: int,
    rng: np.random.Generator,
    runner: Optional[ReplicateRunner] = None,
) -> GapResult:
    """
    Spread of the quenched probability P(xi(A x B) = l | G) over graph draws.

    For each outer graph the probability is estimated from reps_inner fresh
    labelings at scale sqrt(2 e(G)); the pooled value is the mean of the inner
    estimates and the gap is the largest deviation from it.
    """
    if reps_outer < 1 or reps_inner < 1:
        raise InvalidParameterError("reps_outer and reps_inner must be >= 1")
    runner = runner or ReplicateRunner()

    def outer(rep_rng: np.random.Generator) -> float:
        graph = model.draw(rep_rng)
        s = math.sqrt(2.0 * graph.non_loop_edge_count())
        hits = sum(count(label(graph, s, rep_rng), A, B) == l for _ in range(reps_inner))
        return hits / reps_inner

    estimates = np.asarray(runner.run_from(outer, reps_outer, rng), dtype=np.float64)
    pooled = float(estimates.mean())
    gap = float(np.max(np.abs(estimates - pooled)))
    logger.info("Quenched/annealed gap", family=model.family, l=l, pooled=pooled, max_gap=gap)
    return GapResult(estimates, pooled, gap, reps_inner)


@dataclass
class CharFunctionRow:
    estimate: CharFunctionEstimate
    exact: complex
    tolerance: float

    @property
    def distance(self) -> float:
        return self.estimate.distance(self.exact)

    @property
    def passed(self) -> bool:
        return self.distance <= self.tolerance

    def to_dict(self) -> Dict[str, Any]:
        out = self.estimate.to_dict()
        out.update(
            exact_re=self.exact.real,
            exact_im=self.exact.imag,
            distance=self.distance,
            tolerance=self.tolerance,
            passed=self.passed,
        )
        return out


def _cf_rows(samples: np.ndarray, thetas: Iterable[float], exact: Callable[[float], complex], slack: float) -> List[CharFunctionRow]:
    rows = []
    for theta in thetas:
        estimate = empirical_char_function(samples, float(theta))
        rows.append(CharFunctionRow(estimate, exact(float(theta)), 3.0 * estimate.stderr + slack))
    return rows


def char_function_check(
    d: SequenceLike,
    t: float,
    thetas: Sequence[float],
    reps: int,
    rng: np.random.Generator,
    runner: Optional[ReplicateRunner] = None,
) -> List[CharFunctionRow]:
    """
    Empirical E[exp(i theta Y_n(t))] over label draws against exp(t * integral of (e^{i theta x} - 1) d rho_n).

    Tolerance per theta is 3 sigma + sum d_i^2 / l_n^2.
    """
    seq = as_degree_sequence(d)
    rho = empirical_measure(seq.degrees, seq.ell)
    runner = runner or ReplicateRunner()
    samples = np.asarray(runner.run_from(lambda r: levy_path_from_sequence(seq, r)(t), reps, rng))
    slack = seq.sum_of_squares() / seq.ell**2
    return _cf_rows(samples, thetas, lambda theta: crm_char_function(rho, 0.0, t, theta), slack)


def crm_char_function_check(
    rho: DiscreteMeasure,
    a: float,
    t: float,
    thetas: Sequence[float],
    reps: int,
    rng: np.random.Generator,
    slack: float = 0.0,
    runner: Optional[ReplicateRunner] = None,
) -> List[CharFunctionRow]:
    """Empirical characteristic function of mu([0, t]) for sample_crm against the closed form."""
    runner = runner or ReplicateRunner()
    samples = np.asarray(runner.run_from(lambda r: sample_crm(rho, a, t, r).total_mass(), reps, rng))
    return _cf_rows(samples, thetas, lambda theta: crm_char_function(rho, a, t, theta), slack)


def edge_fraction_report(name: str, estimate: MeanEstimate, lo: float, hi: float, parameters: Dict[str, Any]) -> ExperimentReport:
    """Report for a mean that must land in [lo, hi]."""
    return ExperimentReport(
        experiment=name,
        parameters=parameters,
        statistic=estimate.mean,
        ci=(estimate.mean - estimate.half_width, estimate.mean + estimate.half_width),
        reference=None,
        passed=lo <= estimate.mean <= hi,
        details={"range": [lo, hi], **estimate.to_dict()},
    )
