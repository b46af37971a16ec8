"""Sharpness probes along the extremal families.

Below the radius every member must satisfy the bound; just above it some
member should break it. The refined inequality is attained exactly by the
Blaschke factor f_a at r = 1/(2+a).
"""
from bohrkit.extremal import (
    classical_probe,
    generalized_probe,
    refined_functional_closed,
    refined_probe,
    sharpness_probe,
    table1_probe,
)
from bohrkit.functionals import MONOMIAL, AnalyticInstance
from bohrkit.radii import generalized_residual, solve_min_root
from bohrkit.seqcore import WeightSeq


def main():
    for a in (0.0, 0.3, 0.6, 0.9):
        print(f"refined functional of f_{a} at 1/(2+a): {refined_functional_closed(a, 1 / (2 + a)):.15f}")
    print()
    for probe in (classical_probe(), refined_probe(0.5), table1_probe("R1", 0.5), table1_probe("R2", 0.5, "paper-printed")):
        rep = sharpness_probe(probe)
        print(f"{rep.instance:<32} radius={rep.radius:.6f} below={rep.below:+.2e} above={rep.above:+.2e} -> {rep.verdict}")

    # the generic radius for an area-weighted functional is valid but not sharp
    inst = AnalyticInstance(1.0, MONOMIAL, WeightSeq("linear_k", {"c": 16 / 9}, 1))
    R = solve_min_root(generalized_residual(inst)).value
    rep = sharpness_probe(generalized_probe(inst), grid=(0.9, 0.99, 0.999))
    print(f"\ngeneric radius with Phi_k = 16k/9: R={R:.6f} -> {rep.verdict} (the sharp radius is 1/3)")


if __name__ == "__main__":
    main()
