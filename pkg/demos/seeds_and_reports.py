"""Inspect the two built-in planar seeds and their health reports.

A seed is a plane family of N lines plus marked points, together with
per-line defect numbers epsilon_i measuring how far each line's point
count sits below (N + 1)/2 plus the shared points.  The dual conic seed
works over any odd prime field; the regular n-gon seed works over the
reals and shows both parities of N.
"""

import json

from kakeya.seeds import dual_conic_seed, regular_ngon_seed, seed_report


def show(name, seed):
    rep = seed_report(seed)
    eps = ", ".join(str(e) for e in rep.epsilon_measured)
    print(f"{name}: verdict {rep.verdict}")
    print(f"  lines {len(seed.lines)}, points {len(seed.points)}")
    print(f"  epsilon: [{eps}]")
    if rep.problems:
        for p in rep.problems:
            print(f"  problem: {p}")
    print()


def main():
    show("dual conic, q=5", dual_conic_seed(5))
    show("dual conic, q=7", dual_conic_seed(7))
    show("regular 8-gon", regular_ngon_seed(8))
    show("regular 9-gon", regular_ngon_seed(9))

    print("report JSON for the 8-gon:")
    print(json.dumps(seed_report(regular_ngon_seed(8)).to_json(),
                     indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
