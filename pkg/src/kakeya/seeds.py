"""Planar seed configurations feeding the higher-dimensional construction.

A seed lives in a projective plane with coordinates (c1, c2, c0): the
line at infinity is c0 = 0 and the distinguished point (0, 1, 0) is the
common infinite point of the N parallel measuring lines m_1..m_N.  A
valid seed provides N affine lines with N pairwise distinct infinite
points (none equal to (0, 1, 0)), a point set giving each line at least
N points, and the deficiency numbers epsilon_i defined by

    #(double points of S on m_i) = N/2 - epsilon_i

where a double point is a core point of S lying on two seed lines.
Points added only to top up a line's count are flagged "extra" and stay
out of the epsilon statistics.

Two ready-made families are provided: the tangent lines of a conic over
an odd prime field, and the lines dual to the vertices of a regular
N-gon over the reals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import DegenerateSeed, UnsupportedField
from .projgeom import (
    ProjPoint,
    Subspace,
    meet,
)
from .scalar import DEFAULT_REAL_TOLERANCE, Field, PrimeField, RealField, Scalar, field_from_json


@dataclass
class SeedPoint:
    point: ProjPoint
    extra: bool = False


@dataclass
class PlanarSeed:
    field: Field
    N: int
    lines: list[Subspace]
    infinite_points: list[ProjPoint]
    m_lines: list[Subspace]
    points: list[SeedPoint]
    epsilon: list[Fraction]
    meta: dict = dc_field(default_factory=dict)


@dataclass
class SeedReport:
    N: int
    line_point_counts: list[int]
    directions_distinct: bool
    epsilon_stored: list[Fraction]
    epsilon_measured: list[Fraction]
    epsilon_sorted: list[Fraction]
    epsilon_sum: Fraction
    density: Fraction
    problems: list[str]
    verdict: str

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "line_point_counts": self.line_point_counts,
            "directions_distinct": self.directions_distinct,
            "epsilon_stored": [str(e) for e in self.epsilon_stored],
            "epsilon_measured": [str(e) for e in self.epsilon_measured],
            "epsilon_sorted": [str(e) for e in self.epsilon_sorted],
            "epsilon_sum": str(self.epsilon_sum),
            "density": str(self.density),
            "problems": list(self.problems),
            "verdict": self.verdict,
        }


def _infinity_line(fld: Field) -> Subspace:
    z = fld.zero
    return Subspace.from_equations(fld, 2, [[z, z, fld.one]])


def _m_common_point(fld: Field) -> ProjPoint:
    return ProjPoint([fld.zero, fld.one, fld.zero])


def dual_conic_seed(q: int) -> PlanarSeed:
    """Tangent lines of the conic y = x^2 over F_q (q an odd prime >= 5).

    The tangent at parameter t is y = 2tx - t^2, with infinite point
    (1, 2t, 0); the measuring lines are the verticals x = c through
    (0, 1, 0).  S is the set of all affine points on tangents.  Tangents
    at t1 != t2 meet at ((t1+t2)/2, t1*t2), so the vertical x = c holds
    (q-1)/2 double points and every epsilon_i is 1/2.
    """
    if q < 5 or q % 2 == 0:
        raise UnsupportedField(f"need an odd prime q >= 5, got {q}")
    fld = PrimeField(q)  # raises UnsupportedField when q is composite
    one, zero = fld.one, fld.zero

    lines = []
    infinite_points = []
    for t in range(q):
        ft = fld(t)
        lines.append(
            Subspace.from_equations(fld, 2, [[-(ft + ft), one, ft * ft]])
        )
        infinite_points.append(ProjPoint([one, ft + ft, zero]))

    m_lines = [
        Subspace.from_equations(fld, 2, [[one, zero, -fld(c)]]) for c in range(q)
    ]

    points: list[SeedPoint] = []
    seen: set = set()
    for t in range(q):
        ft = fld(t)
        for x in range(q):
            fx = fld(x)
            y = (ft + ft) * fx - ft * ft
            key = (fx.value, y.value)
            if key in seen:
                continue
            seen.add(key)
            points.append(SeedPoint(ProjPoint([fx, y, one])))

    seed = PlanarSeed(
        field=fld,
        N=q,
        lines=lines,
        infinite_points=infinite_points,
        m_lines=m_lines,
        points=points,
        epsilon=[],
        meta={"kind": "dual_conic", "q": q},
    )
    seed.epsilon = _measure_epsilon(seed)
    return seed


def ngon_bisecant_direction(N: int, a: int, b: int) -> tuple[float, float, float]:
    """Infinite point of the chord joining vertices a and b of a regular N-gon.

    Proportional to (-tan(pi*(a+b)/N), 1, 0); returned in the always
    finite form (-sin(psi), cos(psi), 0) with psi = pi*(a+b)/N.
    """
    psi = math.pi * (a + b) / N
    return (-math.sin(psi), math.cos(psi), 0.0)


def _ngon_change_of_frame(N: int) -> list[list[float]]:
    # Orthogonal map sending the dual of the primal infinity line to
    # (0,1,0) and the duals of a safe infinite direction to the new
    # infinity line.  Orthogonality means the same matrix transports
    # both points and line coefficients.
    alpha = math.pi / (4 * N)
    s, c = math.sin(alpha), math.cos(alpha)
    return [[-s, c, 0.0], [0.0, 0.0, 1.0], [c, s, 0.0]]


def _apply(mat: list[list[float]], v: tuple[float, float, float]) -> list[float]:
    return [sum(row[i] * v[i] for i in range(3)) for row in mat]


def regular_ngon_seed(N: int, field: RealField | None = None) -> PlanarSeed:
    """Lines dual to the vertices of a regular N-gon (N >= 5) over the reals.

    Vertices dualize to N lines under the polarity (a, b, c) -> line
    aX + bY + cZ = 0; chords dualize to the pairwise intersections of
    those lines (N - 1 core points per line, one extra point is added
    per line).  The N chord directions dualize to N concurrent lines;
    a change of frame makes them parallel, with common infinite point
    (0, 1, 0).  With the measuring lines ordered by double-point count,
    epsilon is (0,..,0,1,..,1) for even N and constant 1/2 for odd N.
    """
    if not isinstance(N, int) or N < 5:
        raise ValueError(f"need an integer N >= 5, got {N}")
    if field is None:
        field = RealField(DEFAULT_REAL_TOLERANCE)
    if field.kind != "real":
        raise UnsupportedField("the regular polygon seed needs the real field")
    fld = field

    frame = _ngon_change_of_frame(N)
    verts = [
        (math.cos(2 * math.pi * k / N), math.sin(2 * math.pi * k / N), 1.0)
        for k in range(N)
    ]

    def eq_line(old_coeffs):
        w = _apply(frame, old_coeffs)
        return Subspace.from_equations(fld, 2, [[fld(x) for x in w]])

    lines = [eq_line(v) for v in verts]

    infinity = _infinity_line(fld)
    infinite_points = []
    for line in lines:
        p = meet(line, infinity)
        if p.proj_dim != 0:
            raise DegenerateSeed("seed line coincides with the line at infinity")
        infinite_points.append(ProjPoint(p.basis[0]))

    m_lines = [eq_line(ngon_bisecant_direction(N, s, 0)) for s in range(N)]

    def cross(u, v):
        return (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )

    points: list[SeedPoint] = []
    for a in range(N):
        for b in range(a + 1, N):
            w = _apply(frame, cross(verts[a], verts[b]))
            points.append(SeedPoint(ProjPoint([fld(x) for x in w])))

    # one arbitrary additional point per line, chosen deterministically
    for line in lines:
        base, step = line_walk_start(line)
        lam = 0
        while True:
            cand = ProjPoint(
                [b + fld(lam) * s for b, s in zip(base, step)] + [fld.one]
            )
            if all(cand != sp.point for sp in points):
                points.append(SeedPoint(cand, extra=True))
                break
            lam += 1

    seed = PlanarSeed(
        field=fld,
        N=N,
        lines=lines,
        infinite_points=infinite_points,
        m_lines=m_lines,
        points=points,
        epsilon=[],
        meta={"kind": "regular_ngon", "N": N},
    )
    seed.epsilon = _measure_epsilon(seed)
    return seed


def line_walk_start(line: Subspace) -> tuple[list[Scalar], list[Scalar]]:
    """Affine base point and direction step vector for walking along a line.

    The base is the first echelon basis row with a nonzero last
    coordinate, dehomogenized; the step is the affine part of the line's
    infinite point.  Together they parametrize the affine points of the
    line as base + lam * step.
    """
    fld = line.field
    dim = line.ambient_dim
    base = None
    for row in line.basis:
        if not row[-1].is_zero:
            inv = row[-1].inverse()
            base = [c * inv for c in row[:-1]]
            break
    if base is None:
        raise ValueError("line lies at infinity")
    z = fld.zero
    eq = [[z] * dim + [fld.one]]
    direction = meet(line, Subspace.from_equations(fld, dim, eq))
    if direction.proj_dim != 0:
        raise ValueError("not an affine line")
    step = list(ProjPoint(direction.basis[0]).coords[:-1])
    return base, step


def _measure_epsilon(seed: PlanarSeed) -> list[Fraction]:
    counts = _double_point_counts(seed)
    half = Fraction(seed.N, 2)
    return [half - c for c in counts]


def _double_point_counts(seed: PlanarSeed) -> list[int]:
    core = [sp.point for sp in seed.points if not sp.extra]
    on_two = []
    for p in core:
        hits = 0
        for line in seed.lines:
            if line.contains(p):
                hits += 1
                if hits >= 2:
                    break
        if hits >= 2:
            on_two.append(p)
    return [sum(1 for p in on_two if m.contains(p)) for m in seed.m_lines]


def seed_report(seed: PlanarSeed) -> SeedReport:
    """Audit a planar seed, recomputing every invariant from its raw data."""
    fld = seed.field
    problems: list[str] = []
    infinity = _infinity_line(fld)
    x_point = _m_common_point(fld)

    directions = []
    for i, line in enumerate(seed.lines):
        p = meet(line, infinity)
        if p.proj_dim != 0:
            problems.append(f"line {i} is the line at infinity")
            directions.append(None)
            continue
        d = ProjPoint(p.basis[0])
        directions.append(d)
        if i < len(seed.infinite_points) and d != seed.infinite_points[i]:
            problems.append(f"stored infinite point of line {i} is wrong")
        if d == x_point:
            problems.append(f"line {i} passes through the measuring direction (0,1,0)")
        elif d.coords[0].is_zero:
            problems.append(f"line {i} has no finite slope coordinate")
    if len(seed.lines) != seed.N:
        problems.append(f"expected {seed.N} lines, found {len(seed.lines)}")

    distinct = True
    for i in range(len(directions)):
        for j in range(i + 1, len(directions)):
            if directions[i] is not None and directions[i] == directions[j]:
                distinct = False
                problems.append(f"lines {i} and {j} share an infinite point")

    for i, m in enumerate(seed.m_lines):
        if not m.contains(x_point):
            problems.append(f"measuring line {i} misses the common point (0,1,0)")
    if len(seed.m_lines) != seed.N:
        problems.append(f"expected {seed.N} measuring lines, found {len(seed.m_lines)}")

    counts = []
    for i, line in enumerate(seed.lines):
        c = sum(1 for sp in seed.points if line.contains(sp.point))
        counts.append(c)
        if c < seed.N:
            problems.append(f"line {i} holds only {c} points, needs {seed.N}")

    measured = _measure_epsilon(seed)
    if len(seed.epsilon) != len(measured):
        problems.append("epsilon list length does not match the measuring lines")
    else:
        for i, (a, b) in enumerate(zip(seed.epsilon, measured)):
            if a != b:
                problems.append(f"epsilon[{i}] stored as {a}, measured {b}")

    eps_sum = sum(measured, Fraction(0))
    report = SeedReport(
        N=seed.N,
        line_point_counts=counts,
        directions_distinct=distinct,
        epsilon_stored=list(seed.epsilon),
        epsilon_measured=measured,
        epsilon_sorted=sorted(measured),
        epsilon_sum=eps_sum,
        density=eps_sum / seed.N,
        problems=problems,
        verdict="pass" if not problems else "fail",
    )
    return report


def _scalars_to_json(xs) -> list[str]:
    return [x.to_str() for x in xs]


def _subspace_to_json(s: Subspace) -> list[list[str]]:
    return [_scalars_to_json(row) for row in s.basis]


def _subspace_from_json(fld: Field, ambient: int, rows) -> Subspace:
    vecs = [[fld.scalar_from_str(x) for x in row] for row in rows]
    return Subspace.from_vectors(fld, ambient, vecs)


def seed_to_json(seed: PlanarSeed) -> dict:
    return {
        "field": seed.field.to_json(),
        "N": seed.N,
        "lines": [_subspace_to_json(s) for s in seed.lines],
        "m_lines": [_subspace_to_json(s) for s in seed.m_lines],
        "points": [
            {"coords": _scalars_to_json(sp.point.coords), "extra": sp.extra}
            for sp in seed.points
        ],
        "epsilon": [str(e) for e in seed.epsilon],
        "meta": dict(seed.meta),
    }


def seed_from_json(doc: dict) -> PlanarSeed:
    fld = field_from_json(doc["field"])
    infinity = _infinity_line(fld)
    lines = [_subspace_from_json(fld, 2, rows) for rows in doc["lines"]]
    infinite_points = []
    for line in lines:
        p = meet(line, infinity)
        if p.proj_dim != 0:
            raise DegenerateSeed("seed line coincides with the line at infinity")
        infinite_points.append(ProjPoint(p.basis[0]))
    points = [
        SeedPoint(
            ProjPoint([fld.scalar_from_str(x) for x in entry["coords"]]),
            bool(entry.get("extra", False)),
        )
        for entry in doc["points"]
    ]
    return PlanarSeed(
        field=fld,
        N=int(doc["N"]),
        lines=lines,
        infinite_points=infinite_points,
        m_lines=[_subspace_from_json(fld, 2, rows) for rows in doc["m_lines"]],
        points=points,
        epsilon=[Fraction(e) for e in doc["epsilon"]],
        meta=dict(doc.get("meta", {})),
    )
