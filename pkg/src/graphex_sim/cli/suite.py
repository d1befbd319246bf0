"""
Acceptance suite.

Sixteen property-based Monte Carlo criteria on a reference family (50 hubs of
degree 100 plus 5000 leaves of degree 1, l_n = 10000). Every criterion draws
from its own stream keyed by (seed, criterion id), so a subset run with --only
reproduces the numbers of a full run.
"""
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from ..analysis.blocks import BlockSpec, bcm_block_edge_counts, cm_block_edge_counts, pa_block_edge_counts
from ..analysis.edges import (
    cm_edge_fraction,
    ecm_edge_mean,
    ecm_expected_edges,
    grg_diagonal_correction,
    grg_edge_mean,
    grg_expected_edges,
    grg_integral_edges,
    pa_nonloop_fraction,
)
from ..analysis.experiments import (
    char_function_check,
    convergence_experiment,
    crm_char_function_check,
    model_census,
    rescaling_experiment,
    sampling_equivalence_experiment,
)
from ..analysis.oracle import grg_zero_point_oracle, grg_zero_point_probability
from ..core.multigraph import Multigraph
from ..exceptions import ConfigError
from ..generators.configuration import configuration_model
from ..generators.models import ModelSpec
from ..generators.sequences import DegreeSequence, expand_family
from ..graphex.limits import limit_of_cm
from ..graphex.multigraphex import PureDust
from ..log import get_component_logger
from ..measures.discrete import empirical_measure
from ..measures.regularity import tail_regularity_deficit
from ..rng import experiment_key, replicate_stream
from ..services.runner import ReplicateRunner
from .reports import Timings

logger = get_component_logger("graphex_sim.cli.suite")

REFERENCE_FAMILY = {"hubs": {"count": 50, "degree": 100}, "leaves": {"count": 5000, "degree": 1}}
THETAS = (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)


def reference_degrees() -> np.ndarray:
    return expand_family(REFERENCE_FAMILY).astype(np.int64)


@dataclass
class SuiteContext:
    seed: int
    runner: ReplicateRunner
    reduced: bool = False

    def rng(self, criterion_id: int) -> np.random.Generator:
        return replicate_stream(experiment_key(self.seed, f"criterion-{criterion_id}"), 0)

    def reps(self, full: int) -> int:
        """Replicate count, cut tenfold (but not below 200) for reduced runs."""
        return max(200, full // 10) if self.reduced else full


Outcome = Dict[str, Any]


@dataclass(frozen=True)
class Criterion:
    id: int
    name: str
    group: str
    run: Callable[[SuiteContext], Outcome]


def _outcome(statistic: float, reference: Any, passed: bool, **details: Any) -> Outcome:
    return {"statistic": float(statistic), "reference": reference, "pass": bool(passed), "details": details}


def _cm_edge_fraction(ctx: SuiteContext) -> Outcome:
    est = cm_edge_fraction(reference_degrees(), ctx.reps(500), ctx.rng(1), ctx.runner)
    return _outcome(est.mean, [0.4965, 0.5], 0.4965 <= est.mean <= 0.5, **est.to_dict())


def _ecm_edges(ctx: SuiteContext) -> Outcome:
    d = reference_degrees()
    predicted = ecm_expected_edges(d)
    est = ecm_edge_mean(d, ctx.reps(500), ctx.rng(2), ctx.runner)
    slack = float(d.max())
    passed = est.within(predicted, sigmas=3.0, slack=slack)
    return _outcome(est.mean, predicted, passed, slack=slack, **est.to_dict())


def _cm_blocks(ctx: SuiteContext) -> Outcome:
    result = cm_block_edge_counts(reference_degrees(), BlockSpec.contiguous([100, 100]), ctx.reps(10_000), ctx.rng(3), ctx.runner)
    return _outcome(result.tv, 0.05, result.tv <= 0.05, **result.to_dict())


def _pure_dust(ctx: SuiteContext) -> Outcome:
    model = ModelSpec.cm(np.ones(5000, dtype=np.int64))
    result = convergence_experiment(model, PureDust(0.5), 1.0, ctx.reps(100_000), ctx.rng(4), 0.05, ctx.runner)
    return _outcome(result.tv.value, 0.05, result.report.passed, half_width=result.tv.half_width)


def _rank_one(ctx: SuiteContext) -> Outcome:
    d = reference_degrees()
    result = convergence_experiment(ModelSpec.cm(d), limit_of_cm(d), 1.0, ctx.reps(100_000), ctx.rng(5), 0.08, ctx.runner)
    return _outcome(result.tv.value, 0.08, result.report.passed, half_width=result.tv.half_width)


def _pa_vs_cm(ctx: SuiteContext) -> Outcome:
    d = reference_degrees()
    model = ModelSpec.pa(d, 5000)
    result = convergence_experiment(model, limit_of_cm(d), 1.0, ctx.reps(50_000), ctx.rng(6), 0.10, ctx.runner)
    return _outcome(result.tv.value, 0.10, result.report.passed, half_width=result.tv.half_width)


def _pa_nonloop(ctx: SuiteContext) -> Outcome:
    est = pa_nonloop_fraction(reference_degrees(), 5000, ctx.reps(200), ctx.rng(7), runner=ctx.runner)
    return _outcome(est.mean, 0.99, est.mean >= 0.99, **est.to_dict())


def _pa_blocks(ctx: SuiteContext) -> Outcome:
    # one hub (delta mass 100) and 100 leaves (delta mass 100); l / sqrt(2m) = 100
    blocks = BlockSpec([np.arange(100) + 50, [0]])
    result = pa_block_edge_counts(reference_degrees(), 5000, blocks, ctx.reps(10_000), ctx.rng(8), runner=ctx.runner)
    return _outcome(result.tv, 0.05, result.tv <= 0.05, **result.to_dict())


def _grg_zero_point(ctx: SuiteContext) -> Outcome:
    w = reference_degrees().astype(np.float64)
    total = float(w.sum())
    c = grg_expected_edges(w) / (total / 2.0)
    r = math.sqrt(c)
    rng = ctx.rng(9)
    reps = ctx.reps(100_000)
    empirical = grg_zero_point_probability(w, r, reps, rng, ctx.runner)
    rho = empirical_measure(w, total)
    oracle = grg_zero_point_oracle(rho, 0.0, r, 0.5 * float(rho.locations.min()), reps, rng)
    gap = abs(empirical.mean - oracle.mean)
    return _outcome(gap, 0.02, gap <= 0.02, c=c, r=r, empirical=empirical.to_dict(), oracle=oracle.to_dict())


def _grg_edges(ctx: SuiteContext) -> Outcome:
    w = reference_degrees().astype(np.float64)
    exact = grg_expected_edges(w)
    integral = grg_integral_edges(w)
    bound = grg_diagonal_correction(w)
    est = grg_edge_mean(w, ctx.reps(500), ctx.rng(10), ctx.runner)
    passed = abs(exact - integral) <= bound and est.within(exact, sigmas=3.0)
    return _outcome(est.mean, exact, passed, integral=integral, diagonal_bound=bound, **est.to_dict())


def _bipartite_reference():
    side = np.concatenate([np.ones(2500, dtype=np.int64), np.full(25, 100, dtype=np.int64)])
    return ModelSpec.bcm(side, side).bipartite


def _bcm_blocks(ctx: SuiteContext) -> Outcome:
    d = _bipartite_reference()
    half = d.ell // 2
    blocks = BlockSpec(
        [
            np.concatenate([np.arange(0, 50), half + np.arange(0, 50)]),
            np.concatenate([np.arange(50, 100), half + np.arange(50, 100)]),
        ]
    )
    result = bcm_block_edge_counts(d, blocks, ctx.reps(10_000), ctx.rng(11), ctx.runner)
    return _outcome(result.tv, 0.05, result.tv <= 0.05, **result.to_dict())


def is_star_forest(graph: Multigraph) -> bool:
    """Simple, loop-free and every edge has an endpoint of degree one."""
    if graph.loop_count() or (graph.mult > 1).any():
        return False
    degrees = graph.degrees()
    return bool(np.all(np.minimum(degrees[graph.u], degrees[graph.v]) == 1))


def _bcm_pure_star(ctx: SuiteContext) -> Outcome:
    model = ModelSpec.bcm(np.full(50, 100), np.ones(5000))
    census = model_census(model, 1.0, ctx.reps(10_000), ctx.rng(12), ctx.runner)
    bad = sum(
        count
        for key, count in census.counts.items()
        if key not in census.representatives or not is_star_forest(census.representatives[key])
    )
    frequency = bad / census.total
    return _outcome(frequency, 0.01, frequency <= 0.01, classes=len(census.counts))


def _char_function(ctx: SuiteContext) -> Outcome:
    d = reference_degrees()
    rng = ctx.rng(13)
    reps = ctx.reps(10_000)
    levy_rows = char_function_check(d, 1.0, THETAS, reps, rng, ctx.runner)
    seq = DegreeSequence(d)
    slack = seq.sum_of_squares() / seq.ell**2
    crm_rows = crm_char_function_check(empirical_measure(d, seq.ell), 0.0, 1.0, THETAS, reps, rng, slack, ctx.runner)
    rows = levy_rows + crm_rows
    worst = max(row.distance - row.tolerance for row in rows)
    return _outcome(
        worst,
        0.0,
        all(row.passed for row in rows),
        levy=[row.to_dict() for row in levy_rows],
        crm=[row.to_dict() for row in crm_rows],
    )


def _rescaling(ctx: SuiteContext) -> Outcome:
    graphex = limit_of_cm(reference_degrees())
    result = rescaling_experiment(graphex, 4.0, 1.0, ctx.reps(100_000), ctx.rng(14), 0.03, ctx.runner)
    return _outcome(result.tv.value, 0.03, result.report.passed, half_width=result.tv.half_width)


def fixed_graph(seed: int = 15, n: int = 50, degree: int = 3) -> Multigraph:
    """Deterministic 50-vertex multigraph (a CM draw with all degrees 3 under a fixed stream)."""
    rng = replicate_stream(experiment_key(seed, "fixed-graph"), 0)
    return configuration_model(np.full(n, degree), rng)


def _sampling_equivalence(ctx: SuiteContext) -> Outcome:
    result = sampling_equivalence_experiment(fixed_graph(), 1.0, ctx.reps(100_000), ctx.rng(15), 0.02, ctx.runner)
    return _outcome(result.tv.value, 0.02, result.report.passed, half_width=result.tv.half_width)


def _tail_regularity(ctx: SuiteContext) -> Outcome:
    rng = ctx.rng(16)
    mixed = tail_regularity_deficit(configuration_model(reference_degrees(), rng), 0.05) / 2.0
    hubs = tail_regularity_deficit(configuration_model(np.full(50, 100), rng), 0.05) / 2.0
    passed = abs(mixed - 0.5) <= 0.02 and hubs <= 0.02
    return _outcome(mixed, 0.5, passed, all_hub=hubs)


CRITERIA: List[Criterion] = [
    Criterion(1, "CM edge fraction", "cm", _cm_edge_fraction),
    Criterion(2, "ECM expected edges", "ecm", _ecm_edges),
    Criterion(3, "CM Poisson blocks", "cm", _cm_blocks),
    Criterion(4, "pure-dust convergence", "cm", _pure_dust),
    Criterion(5, "rank-one convergence", "cm", _rank_one),
    Criterion(6, "PA vs CM limit", "pa", _pa_vs_cm),
    Criterion(7, "PA non-loop fraction", "pa", _pa_nonloop),
    Criterion(8, "PA Poisson blocks", "pa", _pa_blocks),
    Criterion(9, "GRG zero-point probability", "grg", _grg_zero_point),
    Criterion(10, "GRG expected edges", "grg", _grg_edges),
    Criterion(11, "BipCM Poisson blocks", "bcm", _bcm_blocks),
    Criterion(12, "BipCM pure-star regime", "bcm", _bcm_pure_star),
    Criterion(13, "characteristic functions", "cf", _char_function),
    Criterion(14, "rescaling law", "rescale", _rescaling),
    Criterion(15, "sampling/labeling equivalence", "sampling", _sampling_equivalence),
    Criterion(16, "tail-regularity statistic", "cm", _tail_regularity),
]


def select_criteria(only: Optional[str]) -> List[Criterion]:
    """
    Criteria named by a comma list of groups or ids ("cm", "grg,13"); all when empty.

    Raises:
        ConfigError: unknown group or id
    """
    if not only:
        return list(CRITERIA)
    groups = {c.group for c in CRITERIA}
    chosen = set()
    for token in (t.strip() for t in only.split(",") if t.strip()):
        if token.isdigit() and any(c.id == int(token) for c in CRITERIA):
            chosen.add(int(token))
        elif token in groups:
            chosen.update(c.id for c in CRITERIA if c.group == token)
        else:
            raise ConfigError(f"unknown suite selector: {token}")
    return [c for c in CRITERIA if c.id in chosen]


def run_suite(
    criteria: List[Criterion],
    seed: int,
    runner: Optional[ReplicateRunner] = None,
    reduced: bool = False,
    timings: Optional[Timings] = None,
) -> List[Outcome]:
    """Run criteria in id order; returns one outcome dict per criterion."""
    ctx = SuiteContext(seed, runner or ReplicateRunner(), reduced)
    timings = timings or Timings()
    results = []
    for criterion in criteria:
        logger.info("Running criterion", id=criterion.id, name=criterion.name, reduced=reduced)
        with timings.step(f"{criterion.id:02d} {criterion.name}"):
            outcome = criterion.run(ctx)
        results.append({"id": criterion.id, "name": criterion.name, "group": criterion.group, **outcome})
    return results
