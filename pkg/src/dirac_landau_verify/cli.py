"""CLI entry point for dirac-landau-verify."""

import sys

from .runner import main as runner_main


def main():
    """Main CLI entry point."""
    return runner_main()


if __name__ == "__main__":
    sys.exit(main())
