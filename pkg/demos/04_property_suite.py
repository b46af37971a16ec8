"""Seeded falsification run over random self-maps of the disk.

Samples are finite Blaschke products and convex combinations with constants.
Every lemma is checked on the same deterministic set.
"""
import sys

from bohrkit.verify import run_suite


def main(seed=42):
    rep = run_suite(seed)
    print(rep.to_text())
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 42))
