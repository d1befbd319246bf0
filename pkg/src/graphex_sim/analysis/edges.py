"""
Edge-count formulas and their Monte Carlo counterparts.
"""
from typing import Optional

import numpy as np

from ..generators.configuration import configuration_model, erased_configuration_model
from ..generators.grg import generalized_random_graph
from ..generators.preferential import preferential_attachment
from ..generators.sequences import SequenceLike, as_degree_sequence, as_weight_sequence
from ..log import get_component_logger
from ..measures.discrete import empirical_measure, grg_kernel, kernel_mass
from ..services.runner import ReplicateRunner
from .statistics import MeanEstimate, mean_estimate

logger = get_component_logger("graphex_sim.analysis.edges")


def cm_edge_fraction(
    d: SequenceLike, reps: int, rng: np.random.Generator, runner: Optional[ReplicateRunner] = None
) -> MeanEstimate:
    """Mean of e(CM_n(d)) / l_n over reps draws."""
    seq = as_degree_sequence(d)
    runner = runner or ReplicateRunner()
    values = runner.run_from(lambda r: configuration_model(seq, r).non_loop_edge_count() / seq.ell, reps, rng)
    return mean_estimate(values)


def cm_loop_correction(d: SequenceLike) -> float:
    """Upper bound sum d_i^2 / (2 l_n^2) on the expected loop share of e/l_n."""
    seq = as_degree_sequence(d)
    return seq.sum_of_squares() / (2.0 * seq.ell**2)


def ecm_expected_edges(d: SequenceLike) -> float:
    """
    l_n / 2 times the double integral of 1 - exp(-xy) against rho_n x rho_n.

    The double sum runs over all ordered pairs of atoms, the diagonal included.
    """
    seq = as_degree_sequence(d)
    return seq.ell / 2.0 * kernel_mass(empirical_measure(seq.degrees, seq.ell), "ecm")


def ecm_edge_mean(
    d: SequenceLike, reps: int, rng: np.random.Generator, runner: Optional[ReplicateRunner] = None
) -> MeanEstimate:
    """Mean of e(erase(CM_n(d))) over reps draws."""
    seq = as_degree_sequence(d)
    runner = runner or ReplicateRunner()
    return mean_estimate(runner.run_from(lambda r: erased_configuration_model(seq, r).non_loop_edge_count(), reps, rng))


def grg_expected_edges(w: SequenceLike) -> float:
    """Exact E[e(GRG_n(w))] = sum over i < j of w_i w_j / (L_n + w_i w_j)."""
    seq = as_weight_sequence(w).require_positive()
    total = seq.total
    values, counts = np.unique(seq.weights, return_counts=True)
    c = counts.astype(np.float64)
    full = 0.0
    block = 2048
    for start in range(0, values.size, block):
        stop = start + block
        p = grg_kernel(np.outer(values[start:stop], values) / total)
        full += float(c[start:stop] @ p @ c)
    diagonal = float(np.dot(c, grg_kernel(values**2 / total)))
    return (full - diagonal) / 2.0


def grg_integral_edges(w: SequenceLike) -> float:
    """L_n / 2 times the double integral of xy / (1 + xy) against rho_w x rho_w."""
    seq = as_weight_sequence(w).require_positive()
    return seq.total / 2.0 * kernel_mass(empirical_measure(seq.weights, seq.total), "grg")


def grg_diagonal_correction(w: SequenceLike) -> float:
    """sum_i w_i^2 / (L_n + w_i^2); bounds the gap between the integral form and the exact sum."""
    seq = as_weight_sequence(w).require_positive()
    return float(grg_kernel(seq.weights**2 / seq.total).sum())


def grg_edge_mean(
    w: SequenceLike, reps: int, rng: np.random.Generator, runner: Optional[ReplicateRunner] = None
) -> MeanEstimate:
    """Mean of e(GRG_n(w)) over reps draws."""
    seq = as_weight_sequence(w).require_positive()
    runner = runner or ReplicateRunner()
    return mean_estimate(runner.run_from(lambda r: generalized_random_graph(seq, r).non_loop_edge_count(), reps, rng))


def pa_nonloop_fraction(
    delta: SequenceLike,
    m: int,
    reps: int,
    rng: np.random.Generator,
    simultaneous: bool = True,
    runner: Optional[ReplicateRunner] = None,
) -> MeanEstimate:
    """Mean of e(PA_n(delta, m)) / m over reps draws."""
    seq = as_weight_sequence(delta)
    runner = runner or ReplicateRunner()
    values = runner.run_from(
        lambda r: preferential_attachment(seq, m, r, simultaneous).non_loop_edge_count() / m, reps, rng
    )
    return mean_estimate(values)
