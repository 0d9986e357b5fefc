"""Explore the lower-bound calculator for grid-direction line families.

For a family of N^(n-1) lines whose directions form a full grid, any
point set meeting every line in at least N points has size at least
C(rN+n-1, n) / C(2r+n-2, n) for each multiplicity parameter r.  As r
grows the ratio tends to (N/2)^n, but it does not climb there
monotonically, so the best single r is worth finding.
"""

from kakeya.polymethod import bound_best, bound_grid


def main():
    print("fixed r = 1:")
    for N, n in [(7, 3), (16, 4), (8, 2)]:
        rep = bound_grid(N, n, 1)
        print(f"  N={N:2d} n={n}: bound {rep.bound} (~{float(rep.bound):.1f}), "
              f"limit {rep.limit}")

    print()
    print("sweep over r for N=16, n=4:")
    for r in (1, 2, 3, 4):
        rep = bound_grid(16, 4, r)
        print(f"  r={r}: {rep.bound} (~{float(rep.bound):.2f})")

    rep = bound_best(16, 4, 64)
    print(f"chosen r = {rep.best_r}: bound {rep.bound}, limit {rep.limit}")


if __name__ == "__main__":
    main()
