"""Reproducing the table of F_beta radii.

The table is computed twice. The paper-printed mode uses the printed closed
form for the alpha = 1 series, which drops a factor of r. The verified mode
uses the exact series. Row R2 is the one built on that series, so it moves.
"""
from bohrkit.radii import table1
from bohrkit.seqcore import closed_sum_power, paper_printed_sum


def show(result, tol=5e-4):
    print(f"mode={result.mode}  max |delta|={result.max_abs_delta:.2e}")
    for rec in result.records():
        flag = "  <-- over tol" if abs(rec["delta"]) > tol else ""
        print(f"  {rec['row']} beta={rec['beta']:.1f} computed={rec['computed']:.4f} printed={rec['paper']:.4f}{flag}")


def main():
    r = 0.5
    print(f"sum_(n>=2) n r^n at r={r}: exact {closed_sum_power(1, r):.6f}, printed form {paper_printed_sum(1, r):.6f}\n")
    show(table1("paper-printed"))
    print()
    show(table1("verified-series"))


if __name__ == "__main__":
    main()
