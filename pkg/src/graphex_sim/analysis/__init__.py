"""
Statistical verification: TV estimates, block tests, edge formulas, GRG oracle and experiments.
"""
from .blocks import BlockCountResult, BlockSpec, bcm_block_edge_counts, cm_block_edge_counts, pa_block_edge_counts
from .edges import (
    cm_edge_fraction,
    cm_loop_correction,
    ecm_edge_mean,
    ecm_expected_edges,
    grg_diagonal_correction,
    grg_edge_mean,
    grg_expected_edges,
    grg_integral_edges,
    pa_nonloop_fraction,
)
from .experiments import (
    ConvergenceResult,
    ExperimentReport,
    GapResult,
    census_run,
    char_function_check,
    convergence_experiment,
    crm_char_function_check,
    graphex_census,
    model_census,
    null_experiment,
    quenched_annealed_gap,
    rescaling_experiment,
    sampling_equivalence_experiment,
)
from .oracle import grg_zero_point_oracle, grg_zero_point_probability, single_atom_zero_probability
from .statistics import MeanEstimate, mean_estimate
from .tv import TVEstimate, tv_against_pmf, tv_between

__all__ = [
    "TVEstimate",
    "tv_between",
    "tv_against_pmf",
    "MeanEstimate",
    "mean_estimate",
    "BlockSpec",
    "BlockCountResult",
    "cm_block_edge_counts",
    "pa_block_edge_counts",
    "bcm_block_edge_counts",
    "cm_edge_fraction",
    "cm_loop_correction",
    "ecm_expected_edges",
    "ecm_edge_mean",
    "grg_expected_edges",
    "grg_integral_edges",
    "grg_diagonal_correction",
    "grg_edge_mean",
    "pa_nonloop_fraction",
    "grg_zero_point_oracle",
    "grg_zero_point_probability",
    "single_atom_zero_probability",
    "ExperimentReport",
    "ConvergenceResult",
    "GapResult",
    "census_run",
    "model_census",
    "graphex_census",
    "convergence_experiment",
    "null_experiment",
    "rescaling_experiment",
    "sampling_equivalence_experiment",
    "quenched_annealed_gap",
    "char_function_check",
    "crm_char_function_check",
]
