"""
Main entry point for graphex-sim.

Usage:
    graphex-sim --seed 7 suite
    # or
    python -m graphex_sim.main --seed 7 suite
"""
import sys

from graphex_sim.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
