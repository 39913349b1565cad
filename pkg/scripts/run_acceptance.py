"""Run the acceptance gate and print one PASS/FAIL line per criterion.

    python3 scripts/run_acceptance.py            # acceptance module only
    python3 scripts/run_acceptance.py --all      # whole suite
"""

import argparse
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--all", action="store_true", help="run every test module")
    p.add_argument("--hypothesis-profile", default="ci", choices=("ci", "fast"))
    args, extra = p.parse_known_args()
    target = ROOT / "tests" if args.all else ROOT / "tests" / "test_acceptance.py"
    return pytest.main(["-q", str(target), f"--hypothesis-profile={args.hypothesis_profile}",
                        *extra])


if __name__ == "__main__":
    sys.exit(main())
