"""Classical and prior radii from the generic root solver.

Each radius is the smallest root of a residual, found by a grid scan and
then bisection. The classical case has the closed form p/(p+2).
"""
import math

from bohrkit.functionals import AnalyticInstance
from bohrkit.radii import generalized_residual, prior_radius, r_f_closed, solve_min_root


def main():
    print("classical radius p/(p+2)")
    for p in (0.25, 0.5, 1.0, 1.5, 2.0):
        res = solve_min_root(generalized_residual(AnalyticInstance(p)))
        print(f"  p={p:<5g} R={res.value:.12f}  closed={p / (p + 2):.12f}  iters={res.iterations}")

    print("\nBohr-Rogosinski type radii")
    print(f"  R_1  = {prior_radius('R_N', N=1):.12f}  (sqrt5 - 2 = {math.sqrt(5) - 2:.12f})")
    print(f"  R'_1 = {prior_radius('R_prime_N', N=1):.12f}")
    for N in (2, 3, 5):
        print(f"  R_{N}  = {prior_radius('R_N', N=N):.12f}")

    print("\nharmonic r_f(beta): numeric root against the quadratic's closed form")
    for beta in (0.05, 0.25, 0.45):
        num = prior_radius("r_f", beta=beta)
        print(f"  beta={beta:<4g} numeric={num:.12f} closed={r_f_closed(beta):.12f}")


if __name__ == "__main__":
    main()
