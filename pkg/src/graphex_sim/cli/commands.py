"""
Subcommand implementations.

Each command takes the parsed argparse namespace and returns an exit code:
0 pass, 1 statistical or validation failure, 2 configuration or IO error.
Configuration problems are raised as ConfigError and mapped to 2 by main().
"""
import argparse
import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import ValidationError

from ..analysis.blocks import BlockSpec, bcm_block_edge_counts, cm_block_edge_counts, pa_block_edge_counts
from ..analysis.experiments import convergence_experiment, graphex_census, model_census, quenched_annealed_gap
from ..core.census import classify
from ..core.multigraph import Multigraph
from ..exceptions import ConfigError, RateExceedsOne, ValidationFailure
from ..generators.models import ModelSpec
from ..generators.sequences import as_weight_sequence, read_sequence
from ..graphex.validate import validate
from ..log import get_component_logger
from ..measures.crm import sample_crm
from ..measures.discrete import read_measure
from ..measures.levy import levy_path_from_crm, levy_path_from_sequence, levy_path_from_weights
from ..rng import experiment_key, replicate_stream
from ..sampling.psample import canonical_sample
from ..services.runner import ReplicateRunner
from .experiment_config import ExperimentConfig, ModelConfig, SequenceSource, load_graphex
from .reports import Timings, envelope, write_json, write_text

logger = get_component_logger("graphex_sim.cli")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


# ----------------------------------------------------------------------
# Shared helpers
# ----------------------------------------------------------------------


def master_rng(seed: int, command: str) -> np.random.Generator:
    """Generator for one command run, keyed by (seed, command)."""
    return replicate_stream(experiment_key(seed, command), 0)


def out_dir(args: argparse.Namespace) -> Path:
    return Path(args.out) if args.out else Path(".")


def _source(path: Optional[str]) -> Optional[SequenceSource]:
    return None if path is None else SequenceSource(file=Path(path))


def model_config_from_args(args: argparse.Namespace) -> ModelConfig:
    """
    ModelConfig from --model and the sequence flags.

    Raises:
        ConfigError: no --model given or a sequence file is missing
    """
    if not getattr(args, "model", None):
        raise ConfigError("--model is required")
    try:
        return ModelConfig(
            family=args.model,
            degrees=_source(args.degrees),
            weights=_source(args.weights),
            side1=_source(args.side1),
            side2=_source(args.side2),
            m=args.m,
            simultaneous=not args.sequential,
        )
    except ValidationError as exc:
        raise ConfigError(f"invalid model arguments: {exc}") from exc


def model_from_args(args: argparse.Namespace) -> ModelSpec:
    return model_config_from_args(args).build()


def summary_csv(graphs: List[Multigraph]) -> str:
    """One row per graph: rep, vertices, edges, loops, half_edges."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["rep", "vertices", "edges", "loops", "half_edges"])
    for r, graph in enumerate(graphs):
        writer.writerow([r, graph.n_vertices, graph.non_loop_edge_count(), graph.loop_count(), graph.total_half_edges()])
    return buffer.getvalue()


def _parameters(args: argparse.Namespace, **extra: Any) -> Dict[str, Any]:
    params = {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in ("func", "threads", "out", "log_level") and value is not None
    }
    params.update(extra)
    return params


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------


def cmd_generate(args: argparse.Namespace) -> int:
    """Write one Multigraph JSON per replicate plus a summary CSV."""
    model = model_from_args(args)
    model.check_regime()
    runner = ReplicateRunner(args.threads)
    graphs = runner.run(model.draw, args.reps, experiment_key(args.seed, "gen"))
    directory = out_dir(args)
    write_text(directory / "summary.csv", summary_csv(graphs))
    if args.format == "json":
        for r, graph in enumerate(graphs):
            write_json(directory / "graphs" / f"graph_{r:05d}.json", graph.to_dict())
    logger.info("Generated graphs", family=model.family, reps=args.reps, out=str(directory))
    return EXIT_PASS


def cmd_sample(args: argparse.Namespace) -> int:
    """Write canonical samples Smpl(G, t / sqrt(2 e(G))), one per fresh model draw."""
    model = model_from_args(args)
    model.check_regime()
    runner = ReplicateRunner(args.threads)
    try:
        samples = runner.run(
            lambda r: canonical_sample(model.draw(r), args.t, r), args.reps, experiment_key(args.seed, "sample")
        )
    except RateExceedsOne as exc:
        raise ConfigError(str(exc)) from exc
    directory = out_dir(args)
    if args.format == "json":
        write_json(directory / "samples.json", [g.to_dict() for g in samples])
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["rep", "key", "vertices", "edges", "loops"])
        for r, graph in enumerate(samples):
            writer.writerow([r, classify(graph).hex(), graph.n_vertices, graph.non_loop_edge_count(), graph.loop_count()])
        write_text(directory / "samples.csv", buffer.getvalue())
    return EXIT_PASS


def cmd_census(args: argparse.Namespace) -> int:
    """Census of canonical samples of a model, or of GP_t of a graphex file."""
    runner = ReplicateRunner(args.threads)
    rng = master_rng(args.seed, "census")
    try:
        if args.model:
            model = model_from_args(args)
            model.check_regime()
            census = model_census(model, args.t, args.reps, rng, runner)
        elif args.graphex:
            census = graphex_census(load_graphex(args.graphex), args.t, args.reps, rng, runner)
        else:
            raise ConfigError("census needs --model or --graphex")
    except RateExceedsOne as exc:
        raise ConfigError(str(exc)) from exc
    directory = out_dir(args)
    if args.format == "json":
        write_json(directory / "census.json", census.to_dict())
    else:
        write_text(directory / "census.csv", census.to_csv())
    logger.info("Census written", total=census.total, classes=len(census.counts))
    return EXIT_PASS


def _experiment_config(args: argparse.Namespace) -> ExperimentConfig:
    if args.config:
        config = ExperimentConfig.from_file(args.config)
        if config.seed != args.seed:
            logger.info("Seed flag overrides config seed", config_seed=config.seed, seed=args.seed)
            config = config.model_copy(update={"seed": args.seed})
        return config
    try:
        return ExperimentConfig(
            name="converge",
            seed=args.seed,
            model=model_config_from_args(args),
            graphex=args.graphex or "auto",
            t=args.t,
            reps=args.reps,
            threshold=args.threshold,
        )
    except ValidationError as exc:
        raise ConfigError(f"invalid experiment: {exc}") from exc


def cmd_converge(args: argparse.Namespace) -> int:
    """Convergence experiment; exit 0 iff TV <= threshold (or no threshold given)."""
    config = _experiment_config(args)
    model = config.model.build()
    graphex = load_graphex(config.graphex, model)
    runner = ReplicateRunner(args.threads)
    timings = Timings()
    try:
        with timings.step("converge"):
            result = convergence_experiment(
                model, graphex, config.t, config.reps, master_rng(config.seed, config.name), config.threshold, runner
            )
    except RateExceedsOne as exc:
        raise ConfigError(str(exc)) from exc
    except ValidationFailure as exc:
        logger.error("Graphex failed validation", conditions=exc.conditions)
        return EXIT_FAIL

    directory = Path(args.out) if args.out else (config.out or Path("."))
    parameters = config.model_dump(mode="json", exclude={"out"})
    write_json(directory / "report.json", envelope("converge", parameters, result.report.to_dict()))
    write_text(directory / "census_model.csv", result.left.to_csv())
    write_text(directory / "census_graphex.csv", result.right.to_csv())
    timings.write(directory)
    print(f"TV = {result.tv.value:.4f} +/- {result.tv.half_width:.4f}")
    return EXIT_FAIL if result.report.passed is False else EXIT_PASS


def cmd_validate(args: argparse.Namespace) -> int:
    """Condition-by-condition validation report; exit 1 on failure."""
    model = model_from_args(args) if args.model else None
    graphex = load_graphex(args.graphex or "auto", model)
    report = validate(graphex, raise_on_failure=False)
    write_json(out_dir(args) / "validation.json", envelope("validate", _parameters(args), report.to_dict()))
    for name, ok in report.conditions.items():
        print(f"{name:>5}: {'ok' if ok else 'FAILED'}")
    return EXIT_PASS if report.passed else EXIT_FAIL


def _load_blocks(spec: str) -> BlockSpec:
    """--blocks: inline JSON or a JSON file; a list of index lists or {"sizes": [...]} for contiguous blocks."""
    path = Path(spec)
    text = path.read_text(encoding="utf-8") if path.is_file() else spec
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"--blocks is neither a JSON file nor inline JSON: {exc}") from exc
    if isinstance(data, dict):
        if "sizes" in data:
            return BlockSpec.contiguous(data["sizes"], int(data.get("start", 0)))
        data = data.get("blocks")
    if not isinstance(data, list):
        raise ConfigError("--blocks must list index sets")
    return BlockSpec(data)


def cmd_blocks(args: argparse.Namespace) -> int:
    """Block Poisson test; exit 1 when TV exceeds the threshold."""
    model = model_from_args(args)
    blocks = _load_blocks(args.blocks)
    runner = ReplicateRunner(args.threads)
    rng = master_rng(args.seed, "blocks")
    if model.family == "cm":
        result = cm_block_edge_counts(model.degrees, blocks, args.reps, rng, runner)
    elif model.family == "pa":
        result = pa_block_edge_counts(model.weights, model.m, blocks, args.reps, rng, model.simultaneous, runner)
    elif model.family == "bcm":
        result = bcm_block_edge_counts(model.bipartite, blocks, args.reps, rng, runner)
    else:
        raise ConfigError("blocks supports cm, pa and bcm")
    passed = result.tv <= args.threshold
    body = {**result.to_dict(), "threshold": args.threshold, "pass": passed}
    write_json(out_dir(args) / "blocks.json", envelope("blocks", _parameters(args), body))
    print(f"TV = {result.tv:.4f} (threshold {args.threshold})")
    return EXIT_PASS if passed else EXIT_FAIL


def _interval(text: str, flag: str) -> Tuple[float, float]:
    try:
        lo, hi = (float(part) for part in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"{flag} must be two numbers a,b: {text}") from exc
    if not 0.0 <= lo < hi:
        raise ConfigError(f"{flag} must satisfy 0 <= a < b: {text}")
    return lo, hi


def cmd_gap(args: argparse.Namespace) -> int:
    """Quenched vs annealed spread of P(xi(A x B) = l); exit 1 when the gap exceeds the threshold."""
    model = model_from_args(args)
    model.check_regime()
    A = _interval(args.A, "--A")
    B = _interval(args.B, "--B")
    if args.l < 0:
        raise ConfigError("--l must be >= 0")
    result = quenched_annealed_gap(
        model, A, B, args.l, args.outer, args.inner, master_rng(args.seed, "gap"), ReplicateRunner(args.threads)
    )
    passed = None if args.threshold is None else result.max_gap <= args.threshold
    body = {**result.to_dict(), "threshold": args.threshold, "pass": passed}
    write_json(out_dir(args) / "gap.json", envelope("gap", _parameters(args), body))
    print(f"pooled = {result.pooled:.4f}, max gap = {result.max_gap:.4f}")
    return EXIT_FAIL if passed is False else EXIT_PASS


def cmd_levy(args: argparse.Namespace) -> int:
    """Levy path step samples as CSV."""
    rng = master_rng(args.seed, "levy")
    if args.degrees:
        path = levy_path_from_sequence(read_sequence(args.degrees), rng)
    elif args.weights:
        if args.m is None:
            raise ConfigError("--weights needs --m")
        path = levy_path_from_weights(as_weight_sequence(read_sequence(args.weights)), args.m, rng)
    elif args.measure:
        rho, a = read_measure(args.measure)
        path = levy_path_from_crm(sample_crm(rho, a, args.t, rng))
    else:
        raise ConfigError("levy needs --degrees, --weights or --measure")
    grid = None if args.points is None else np.linspace(0.0, path.horizon, args.points)
    directory = out_dir(args)
    if args.format == "json":
        write_json(directory / "levy.json", {"horizon": path.horizon, "samples": path.step_samples(grid).tolist()})
    else:
        write_text(directory / "levy.csv", path.to_csv(grid))
    return EXIT_PASS


def cmd_suite(args: argparse.Namespace) -> int:
    """Acceptance suite; exit 1 if any selected criterion fails."""
    from .suite import run_suite, select_criteria

    selected = select_criteria(args.only)
    runner = ReplicateRunner(args.threads)
    timings = Timings()
    results = run_suite(selected, args.seed, runner, reduced=args.reduced, timings=timings)
    all_passed = all(r["pass"] for r in results)
    parameters = {"seed": args.seed, "only": args.only, "reduced": args.reduced}
    directory = out_dir(args)
    write_json(directory / "suite.json", envelope("suite", parameters, {"criteria": results, "pass": all_passed}))
    timings.write(directory)
    for r in results:
        print(f"[{'PASS' if r['pass'] else 'FAIL'}] {r['id']:>2} {r['name']}")
    return EXIT_PASS if all_passed else EXIT_FAIL
