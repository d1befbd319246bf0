"""
graphex-sim command line.

Usage:
    graphex-sim --seed 7 gen --model cm --degrees d.txt
    graphex-sim --seed 7 converge --config pure_dust.json
    graphex-sim --seed 7 validate --graphex g.json
    graphex-sim --seed 7 suite --only cm --reduced
"""
import argparse
import sys
from typing import List, Optional

from ..exceptions import ConfigError, GraphexSimError, InvalidParameterError
from ..log import configure_logger, get_component_logger
from . import commands

logger = get_component_logger("graphex_sim.cli")


def _add_model_arguments(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument("--model", choices=["cm", "ecm", "pa", "grg", "bcm"], required=required, help="Model family")
    parser.add_argument("--degrees", help="Degree sequence file (cm, ecm)")
    parser.add_argument("--weights", "--delta", dest="weights", help="Weight file (pa delta, grg w)")
    parser.add_argument("--side1", help="Side-1 degree file (bcm)")
    parser.add_argument("--side2", help="Side-2 degree file (bcm)")
    parser.add_argument("--m", type=int, help="Number of PA steps")
    parser.add_argument("--sequential", action="store_true", help="Sequential PA urn instead of simultaneous draws")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphex-sim",
        description="graphex-sim - sparse random multigraphs and their graphex limits",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  graphex-sim --seed 7 gen --model cm --degrees d.txt             # one CM draw
  graphex-sim --seed 7 gen --model grg --weights w.json --reps 100
  graphex-sim --seed 7 census --model cm --degrees d.txt --reps 1000 --format csv
  graphex-sim --seed 7 converge --config pure_dust.json --out runs/dust
  graphex-sim --seed 7 validate --model cm --degrees d.txt        # RankOne limit
  graphex-sim --seed 7 blocks --model cm --degrees d.txt --blocks '{"sizes": [100, 100]}'
  graphex-sim --seed 7 levy --degrees d.txt --points 500
  graphex-sim --seed 7 gap --model cm --degrees d.txt --outer 100 --inner 200
  graphex-sim --seed 7 suite --only cm,13 --reduced

Exit codes: 0 pass, 1 statistical or validation failure, 2 configuration or IO error.
        """,
    )
    parser.add_argument("--seed", type=int, required=True, help="Master seed")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads (default: GRAPHEX_THREADS or 1)")
    parser.add_argument("--out", default=None, help="Output directory (default: current directory)")
    parser.add_argument("--format", choices=["json", "csv"], default="json", help="Output format")
    parser.add_argument("--log-level", default=None, help="Override GRAPHEX_LOG_LEVEL")

    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate graphs")
    _add_model_arguments(gen, required=True)
    gen.add_argument("--reps", type=int, default=1, help="Number of graphs (default: 1)")
    gen.set_defaults(func=commands.cmd_generate)

    sample = sub.add_parser("sample", help="Canonical samples of generated graphs")
    _add_model_arguments(sample, required=True)
    sample.add_argument("--t", type=float, default=1.0, help="Sampling time (default: 1)")
    sample.add_argument("--reps", type=int, default=1, help="Number of samples (default: 1)")
    sample.set_defaults(func=commands.cmd_sample)

    census = sub.add_parser("census", help="Isomorphism-class census of samples")
    _add_model_arguments(census)
    census.add_argument("--graphex", help="Graphex JSON file (census of GP_t instead of a model)")
    census.add_argument("--t", type=float, default=1.0, help="Sampling time (default: 1)")
    census.add_argument("--reps", type=int, default=1000, help="Number of samples (default: 1000)")
    census.set_defaults(func=commands.cmd_census)

    converge = sub.add_parser("converge", help="Model vs graphex census TV")
    converge.add_argument("--config", help="Experiment config JSON")
    _add_model_arguments(converge)
    converge.add_argument("--graphex", help='Graphex JSON file or "auto" (default: auto)')
    converge.add_argument("--t", type=float, default=1.0, help="Sampling time (default: 1)")
    converge.add_argument("--reps", type=int, default=1000, help="Replicates per side (default: 1000)")
    converge.add_argument("--threshold", type=float, default=None, help="Pass iff TV <= threshold")
    converge.set_defaults(func=commands.cmd_converge)

    validate = sub.add_parser("validate", help="Check multigraphex conditions")
    _add_model_arguments(validate)
    validate.add_argument("--graphex", help='Graphex JSON file or "auto" with --model')
    validate.set_defaults(func=commands.cmd_validate)

    suite = sub.add_parser("suite", help="Run the acceptance suite")
    suite.add_argument("--only", default=None, help="Comma list of groups (cm, ecm, pa, grg, bcm, cf, rescale, sampling) or ids")
    suite.add_argument("--reduced", action="store_true", help="Tenfold fewer replicates")
    suite.set_defaults(func=commands.cmd_suite)

    blocks = sub.add_parser("blocks", help="Poisson block test (cm, pa, bcm)")
    _add_model_arguments(blocks, required=True)
    blocks.add_argument("--blocks", required=True, help='JSON file or inline JSON: index lists or {"sizes": [...]}')
    blocks.add_argument("--reps", type=int, default=10_000, help="Replicates (default: 10000)")
    blocks.add_argument("--threshold", type=float, default=0.05, help="TV threshold (default: 0.05)")
    blocks.set_defaults(func=commands.cmd_blocks)

    gap = sub.add_parser("gap", help="Quenched vs annealed sampling gap")
    _add_model_arguments(gap, required=True)
    gap.add_argument("--A", default="0,1", help="Interval a,b on the first axis (default: 0,1)")
    gap.add_argument("--B", default="1,2", help="Interval a,b on the second axis (default: 1,2)")
    gap.add_argument("--l", type=int, default=0, help="Point count whose probability is estimated (default: 0)")
    gap.add_argument("--outer", type=int, default=200, help="Graph draws (default: 200)")
    gap.add_argument("--inner", type=int, default=200, help="Labelings per graph (default: 200)")
    gap.add_argument("--threshold", type=float, default=None, help="Pass iff max gap <= threshold")
    gap.set_defaults(func=commands.cmd_gap)

    levy = sub.add_parser("levy", help="Levy path step samples")
    levy.add_argument("--degrees", help="Degree sequence file")
    levy.add_argument("--weights", "--delta", dest="weights", help="PA delta file (with --m)")
    levy.add_argument("--m", type=int, help="Number of PA steps")
    levy.add_argument("--measure", help="Levy measure file (CSV or JSON) for a CRM path")
    levy.add_argument("--t", type=float, default=1.0, help="CRM horizon (default: 1)")
    levy.add_argument("--points", type=int, default=None, help="Uniform grid size (default: grid plus jump times)")
    levy.set_defaults(func=commands.cmd_levy)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.log_level:
        from ..config import settings

        configure_logger(
            level=args.log_level,
            fmt=settings.log_format,
            console=settings.log_console,
            colors=settings.log_colors,
            file_path=settings.log_file_path,
        )
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return commands.EXIT_CONFIG

    try:
        return args.func(args)
    except (ConfigError, InvalidParameterError, OSError) as exc:
        logger.error("Configuration error", command=args.command, error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return commands.EXIT_CONFIG
    except GraphexSimError as exc:
        logger.error("Command failed", command=args.command, error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return commands.EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
