"""
Command-line interface: batch experiments and data plumbing around the library.
"""
from .experiment_config import ExperimentConfig, ModelConfig, SequenceSource, limit_for, load_graphex
from .main import build_parser, main

__all__ = ["ExperimentConfig", "ModelConfig", "SequenceSource", "limit_for", "load_graphex", "build_parser", "main"]
