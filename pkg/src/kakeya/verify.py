"""Independent re-verification of a constructed or loaded line set.

Every check here recomputes incidence and membership from raw
coordinates: stored directions are compared against the actual
intersection of each line with the hyperplane at infinity, grid
membership is recomputed through the published change of basis, and
point counts come from direct containment tests.  Provenance labels are
consulted only to classify points for the reported construction
claims (how many points a line acquired before padding); they never
shortcut a geometric test.

A line is recognized as a lifted line when its recovered grid
coordinates are pairwise distinct; the completion lines added to fill
the diagonal cells of the grid all carry a repeated coordinate, so the
distinction is visible in coordinates alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .construction import KakeyaSet, grid_values_from_direction
from .errors import GridMissing
from .projgeom import ProjPoint, Subspace, meet
from .scalar import Scalar, binomial

WITNESS_LIMIT = 10


@dataclass
class VerifyReport:
    check: str
    verdict: str
    witnesses: list = dc_field(default_factory=list)
    measured: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "verdict": self.verdict,
            "witnesses": list(self.witnesses),
            "measured": dict(self.measured),
        }


def _finish(check: str, witnesses: list, measured: dict, verbose: bool) -> VerifyReport:
    verdict = "pass" if not witnesses else "fail"
    if not verbose and len(witnesses) > WITNESS_LIMIT:
        kept = witnesses[:WITNESS_LIMIT]
        kept.append(f"... {len(witnesses) - WITNESS_LIMIT} more suppressed")
        witnesses = kept
    return VerifyReport(check=check, verdict=verdict, witnesses=witnesses, measured=measured)


def _infinity_hyperplane(K: KakeyaSet) -> Subspace:
    fld = K.field
    eq = [[fld.zero] * K.n + [fld.one]]
    return Subspace.from_equations(fld, K.n, eq)


def _recovered_cells(K: KakeyaSet):
    """Per-line grid coordinates resolved to axis indices, None when off-grid."""
    cells = []
    for kl in K.lines:
        values = grid_values_from_direction(kl.direction)
        if values is None:
            cells.append(None)
            continue
        cell = []
        for axis, v in zip(K.grid, values):
            idx = next((i for i, a in enumerate(axis) if a == v), None)
            if idx is None:
                cell = None
                break
            cell.append(idx)
        cells.append(tuple(cell) if cell is not None else None)
    return cells


def _lifted_line_flags(K: KakeyaSet) -> list[bool]:
    cells = _recovered_cells(K)
    return [c is not None and len(set(c)) == len(c) for c in cells]


def _lifted_point_flags(K: KakeyaSet) -> list[bool]:
    return [kp.provenance.get("kind") == "lifted" for kp in K.points]


def verify_incidence(K: KakeyaSet, verbose: bool = False) -> VerifyReport:
    """Every line must carry at least N points of the point set.

    Also audits the construction claim that no line picked up more than
    N points before padding, using the lifted provenance labels when
    they are present.
    """
    witnesses: list = []
    counts = []
    lifted_flags = _lifted_point_flags(K)
    have_lifted = any(lifted_flags)
    lifted_counts = []
    for idx, kl in enumerate(K.lines):
        total = 0
        lifted = 0
        for kp, is_lifted in zip(K.points, lifted_flags):
            if kl.line.contains(kp.point):
                total += 1
                if is_lifted:
                    lifted += 1
        counts.append(total)
        lifted_counts.append(lifted)
        if total < K.N:
            witnesses.append(f"line {idx} carries {total} points, needs {K.N}")
        if have_lifted and lifted > K.N:
            witnesses.append(f"line {idx} carries {lifted} lifted points, claim allows {K.N}")
    measured = {
        "lines": len(K.lines),
        "points": len(K.points),
        "min_count": min(counts) if counts else 0,
        "max_count": max(counts) if counts else 0,
        "incidence_total": sum(counts),
    }
    if have_lifted:
        measured["max_lifted_on_line"] = max(lifted_counts)
    return _finish("incidence", witnesses, measured, verbose)


def verify_directions(K: KakeyaSet, verbose: bool = False) -> VerifyReport:
    """Directions must be distinct, honest, inside the grid, and cover it.

    Honest means each stored direction equals the actual meet of its
    line with the hyperplane at infinity.  Coverage asks for every cell
    of the N^(n-1) grid; the count of lines whose recovered coordinates
    are pairwise distinct is compared with N(N-1)...(N-n+2).
    """
    witnesses: list = []
    fld = K.field
    n = K.n
    infinity = _infinity_hyperplane(K)

    for idx, kl in enumerate(K.lines):
        cut = meet(kl.line, infinity)
        if cut.proj_dim != 0:
            witnesses.append(f"line {idx} meets infinity in dimension {cut.proj_dim}")
            continue
        actual = ProjPoint(cut.basis[0])
        if actual != kl.direction:
            witnesses.append(f"line {idx} stores a direction it does not have")

    dirs = [kl.direction for kl in K.lines]
    if fld.exact:
        seen: dict = {}
        for idx, d in enumerate(dirs):
            key = tuple(c.value for c in d.coords)
            if key in seen:
                witnesses.append(f"lines {seen[key]} and {idx} share a direction")
            else:
                seen[key] = idx
    else:
        for i in range(len(dirs)):
            for j in range(i + 1, len(dirs)):
                if dirs[i] == dirs[j]:
                    witnesses.append(f"lines {i} and {j} share a direction")

    cells = _recovered_cells(K)
    for idx, cell in enumerate(cells):
        if cell is None:
            witnesses.append(f"direction of line {idx} lies outside the grid")

    expected_cells = len(K.grid[0]) ** (n - 1) if K.grid else 0
    covered = {c for c in cells if c is not None}
    if len(covered) < expected_cells:
        witnesses.append(
            f"grid covers {len(covered)} of {expected_cells} cells"
        )

    distinct_tuple_lines = sum(
        1 for c in cells if c is not None and len(set(c)) == len(c)
    )
    expected_lifted = 1
    for k in range(n - 1):
        expected_lifted *= K.N - k
    if distinct_tuple_lines != expected_lifted:
        witnesses.append(
            f"{distinct_tuple_lines} lines have pairwise distinct grid coordinates, "
            f"expected {expected_lifted}"
        )

    measured = {
        "directions": len(dirs),
        "grid_cells": expected_cells,
        "covered_cells": len(covered),
        "distinct_coordinate_lines": distinct_tuple_lines,
        "expected_distinct_coordinate_lines": expected_lifted,
    }
    return _finish("directions", witnesses, measured, verbose)


def verify_size(K: KakeyaSet, verbose: bool = False) -> VerifyReport:
    """Size accounting: leading term, measured constant, lifted-point counts.

    The point total is compared with the leading term N^n / 2^(n-1) and
    the overshoot constant c = (|S| - leading) / N^(n-1) is reported.
    When lifted points are present their count must match the sum over
    measuring lines of falling products (N/2 - eps_i)...(N/2 - eps_i - n + 2),
    and each lifted point must lie on exactly 2^(n-1) lifted lines.
    """
    witnesses: list = []
    n, N = K.n, K.N
    size = len(K.points)
    leading = Fraction(2) * Fraction(N, 2) ** n
    c_measured = Fraction(size - leading) / Fraction(N) ** (n - 1)
    measured = {
        "size": size,
        "leading_term": str(leading),
        "leading_term_approx": float(leading),
        "c_measured": str(c_measured),
        "c_measured_approx": float(c_measured),
    }

    lifted_flags = _lifted_point_flags(K)
    lifted_total = sum(lifted_flags)
    measured["lifted_points"] = lifted_total
    if lifted_total:
        epsilon_raw = K.seed_meta.get("epsilon")
        if epsilon_raw is not None:
            expected = Fraction(0)
            for e in epsilon_raw:
                eps = Fraction(e)
                term = Fraction(1)
                for k in range(n - 1):
                    term *= Fraction(N, 2) - eps - k
                expected += term
            measured["lifted_expected"] = str(expected)
            if expected != lifted_total:
                witnesses.append(
                    f"{lifted_total} lifted points, the deficiency formula gives {expected}"
                )

        line_flags = _lifted_line_flags(K)
        want = 2 ** (n - 1)
        bad = 0
        for idx, (kp, is_lifted) in enumerate(zip(K.points, lifted_flags)):
            if not is_lifted:
                continue
            on = sum(
                1
                for kl, line_ok in zip(K.lines, line_flags)
                if line_ok and kl.line.contains(kp.point)
            )
            if on != want:
                bad += 1
                witnesses.append(
                    f"lifted point {idx} lies on {on} lifted lines, expected {want}"
                )
        measured["lifted_incidence_violations"] = bad
    return _finish("size", witnesses, measured, verbose)


def verify_bound_consistency(K: KakeyaSet, r: int, verbose: bool = False) -> VerifyReport:
    """The grid bound must hold for the actual point count at the given r."""
    if r < 1:
        raise ValueError("r must be at least 1")
    directions_report = verify_directions(K)
    if directions_report.measured["covered_cells"] < directions_report.measured["grid_cells"]:
        raise GridMissing(
            "direction set does not cover the full grid; the bound does not apply"
        )
    n = K.n
    N = len(K.grid[0])
    size = len(K.points)
    lhs = binomial(2 * r + n - 2, n) * size
    rhs = binomial(r * N + n - 1, n)
    witnesses: list = []
    if lhs < rhs:
        witnesses.append(
            f"binomial(2r+n-2, n)*|S| = {lhs} < binomial(rN+n-1, n) = {rhs}"
        )
    measured = {
        "r": r,
        "size": size,
        "lhs": lhs,
        "rhs": rhs,
        "bound": str(Fraction(rhs, binomial(2 * r + n - 2, n))),
    }
    return _finish("bound_consistency", witnesses, measured, verbose)


def verify_all(K: KakeyaSet, r: int | None = None, verbose: bool = False) -> list[VerifyReport]:
    """Run every check; bound consistency only when r is given."""
    reports = [
        verify_incidence(K, verbose),
        verify_directions(K, verbose),
        verify_size(K, verbose),
    ]
    if r is not None:
        reports.append(verify_bound_consistency(K, r, verbose))
    return reports
