"""
Degree measures, completely random measures and Levy paths.
"""

from .crm import CRMSample, LevyTriplet, crm_char_function, levy_triplet, sample_crm
from .discrete import (
    DiscreteMeasure,
    b_value,
    empirical_degree_measure,
    empirical_measure,
    kernel_mass,
    low_mass_estimate,
    read_measure,
    split_at,
    tail_intensity,
    tail_inverse,
    write_measure,
)
from .levy import LevyPath, levy_path_from_crm, levy_path_from_sequence, levy_path_from_weights
from .regularity import tail_regularity_deficit

__all__ = [
    "DiscreteMeasure",
    "empirical_measure",
    "empirical_degree_measure",
    "b_value",
    "tail_intensity",
    "tail_inverse",
    "low_mass_estimate",
    "split_at",
    "kernel_mass",
    "read_measure",
    "write_measure",
    "CRMSample",
    "sample_crm",
    "crm_char_function",
    "LevyTriplet",
    "levy_triplet",
    "LevyPath",
    "levy_path_from_sequence",
    "levy_path_from_weights",
    "levy_path_from_crm",
    "tail_regularity_deficit",
]
