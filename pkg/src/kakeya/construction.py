"""Lifting a planar seed into an n-dimensional Kakeya-type line set.

Ambient coordinates have length n+1.  Code index j (0-based) for
j < n carries the frame point x_{j+1} = e_j; the last coordinate is the
homogenizing one, so the hyperplane at infinity is the span of
x_1..x_n.  The frame is completed by the all-ones point x_0, and the
seed plane embeds as the span of x_0, x_1, x_2 via

    (c1, c2, c0)  ->  c1*e_0 + c2*e_1 + c0*x_0.

Ordered index tuples J over the seed lines drive three parallel
recursions: lifted lines ell_J, their infinite points p_J, and lifted
intersection points z_{J, Jbar, m}.  Each step spans the previous
objects with the next frame points x_{|J|+1} and y_{|J|+1} and
intersects the two resulting flats.  The infinite points admit a closed
form: after the unitriangular change of basis implemented by
grid_values_from_direction they become (1, d_1, ..., d_{|J|}) where d_i
is the slope of seed line J[i-1], so the lifted directions fill the
off-diagonal part of a grid and assemble() completes the diagonal with
one extra line per missing cell.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from itertools import permutations, product

from .errors import (
    DegenerateSeed,
    SeedTooSmall,
    UndefinedBasePoint,
    UnsupportedDimension,
)
from .projgeom import ProjPoint, Subspace, meet, span_point
from .scalar import Field, Scalar, field_from_json
from .seeds import PlanarSeed, line_walk_start, seed_from_json, seed_to_json


@dataclass
class ConstructionFrame:
    n: int
    field: Field
    x: dict[int, ProjPoint]
    y: dict[int, ProjPoint]
    sigma: dict[int, Subspace]
    pi: dict[int, Subspace]


def build_frame(n: int, fld: Field) -> ConstructionFrame:
    """Frame points and the nested flats they span, for ambient dimension n."""
    if n < 2:
        raise UnsupportedDimension(f"need n >= 2, got {n}")
    one, zero = fld.one, fld.zero

    def unit(i: int) -> ProjPoint:
        v = [zero] * (n + 1)
        v[i] = one
        return ProjPoint(v)

    x = {0: ProjPoint([one] * (n + 1))}
    for j in range(1, n + 1):
        x[j] = unit(j - 1)

    y = {}
    for i in range(3, n + 1):
        v = [zero] * (n + 1)
        v[i - 2] = one
        v[i - 1] = one
        y[i] = ProjPoint(v)

    sigma = {}
    pi = {}
    for i in range(1, n + 1):
        pi[i] = Subspace.from_points([x[j] for j in range(1, i + 1)])
        sigma[i] = Subspace.from_points([x[0]] + [x[j] for j in range(1, i + 1)])
    return ConstructionFrame(n=n, field=fld, x=x, y=y, sigma=sigma, pi=pi)


@dataclass
class EmbeddedSeed:
    lines: list[Subspace]
    infinite_points: list[ProjPoint]
    m_lines: list[Subspace]
    points: list[tuple[ProjPoint, bool]]
    d_values: list[Scalar]


def _embed_vector(fld: Field, n: int, c) -> list[Scalar]:
    c1, c2, c0 = c
    v = [c0] * (n + 1)
    v[0] = c1 + c0
    v[1] = c2 + c0
    return v


def embed_seed(frame: ConstructionFrame, seed: PlanarSeed) -> EmbeddedSeed:
    fld, n = frame.field, frame.n
    if seed.field != fld:
        raise DegenerateSeed("seed field does not match the frame field")

    def embed_point(p: ProjPoint) -> ProjPoint:
        return ProjPoint(_embed_vector(fld, n, p.coords))

    def embed_flat(s: Subspace) -> Subspace:
        rows = [_embed_vector(fld, n, row) for row in s.basis]
        return Subspace.from_vectors(fld, n, rows)

    d_values = []
    for i, p in enumerate(seed.infinite_points):
        if p.coords[0].is_zero:
            raise DegenerateSeed(f"seed line {i} runs through the measuring direction")
        d_values.append(p.coords[1])
    for i in range(len(d_values)):
        for j in range(i + 1, len(d_values)):
            if d_values[i] == d_values[j]:
                raise DegenerateSeed(f"seed lines {i} and {j} share a direction")

    return EmbeddedSeed(
        lines=[embed_flat(s) for s in seed.lines],
        infinite_points=[embed_point(p) for p in seed.infinite_points],
        m_lines=[embed_flat(s) for s in seed.m_lines],
        points=[(embed_point(sp.point), sp.extra) for sp in seed.points],
        d_values=d_values,
    )


def direction_from_grid_values(fld: Field, n: int, values) -> ProjPoint:
    """Infinite point whose recovered grid coordinates are the given values.

    Inverse of grid_values_from_direction, truncated to len(values)
    leading cells; cells beyond the values (and the affine slot) are
    zero.
    """
    values = list(values)
    if not 1 <= len(values) <= n - 1:
        raise ValueError("need between 1 and n-1 grid values")
    v = [fld.zero] * (n + 1)
    v[0] = fld.one
    v[1] = values[0]
    for k in range(2, len(values) + 1):
        delta = values[k - 1] - values[k - 2]
        v[k] = delta if k % 2 == 1 else -delta
    return ProjPoint(v)


def grid_values_from_direction(p: ProjPoint) -> list[Scalar] | None:
    """Grid coordinates (d_1, ..., d_{n-1}) of an infinite point.

    Applies the unitriangular change of basis d_1 = v_1 and
    d_k = d_{k-1} + (-1)^{k+1} v_k to the normalized coordinates
    (1, v_1, ..., v_{n-1}, 0).  Returns None when the point is affine or
    its first coordinate vanishes, in which case it lies in no grid.
    """
    coords = p.coords
    n = len(coords) - 1
    if not coords[-1].is_zero:
        return None
    if coords[0].is_zero or not (coords[0] == coords[0].field.one):
        return None
    out = [coords[1]]
    for k in range(2, n):
        delta = coords[k] if k % 2 == 1 else -coords[k]
        out.append(out[-1] + delta)
    return out


def _validate_tuple(J, N: int, n: int):
    if not 1 <= len(J) <= n - 1:
        raise ValueError(f"index tuple length must be in 1..{n - 1}")
    if len(set(J)) != len(J):
        raise ValueError("index tuple entries must be distinct")
    for a in J:
        if not 0 <= a < N:
            raise ValueError(f"index {a} outside the seed line range")


class Lifting:
    """Memoized evaluation of the three lifting recursions over one seed."""

    def __init__(self, frame: ConstructionFrame, seed: PlanarSeed, memoize: bool = True):
        self.frame = frame
        self.seed = seed
        self.emb = embed_seed(frame, seed)
        self.memoize = memoize
        self._lines: dict = {}
        self._dirs: dict = {}
        self._zs: dict = {}

    def line(self, J) -> Subspace:
        """The lifted line ell_J."""
        J = tuple(J)
        _validate_tuple(J, self.seed.N, self.frame.n)
        return self._line(J)

    def _line(self, J) -> Subspace:
        if len(J) == 1:
            return self.emb.lines[J[0]]
        if self.memoize and J in self._lines:
            return self._lines[J]
        j = len(J)
        left = span_point(self.frame.x[j + 1], self._line(J[:-1]))
        right = span_point(self.frame.y[j + 1], self._line(J[:-2] + (J[-1],)))
        out = meet(left, right)
        if out.proj_dim != 1:
            raise DegenerateSeed(
                f"lifting {J} produced a flat of projective dimension {out.proj_dim}"
            )
        if self.memoize:
            self._lines[J] = out
        return out

    def direction(self, J) -> ProjPoint:
        """The infinite point p_J of the lifted line ell_J."""
        J = tuple(J)
        _validate_tuple(J, self.seed.N, self.frame.n)
        return self._direction(J)

    def _direction(self, J) -> ProjPoint:
        if len(J) == 1:
            return self.emb.infinite_points[J[0]]
        if self.memoize and J in self._dirs:
            return self._dirs[J]
        j = len(J)
        left = Subspace.from_points([self.frame.x[j + 1], self._direction(J[:-1])])
        right = Subspace.from_points([self.frame.y[j + 1], self._direction(J[:-2] + (J[-1],))])
        out = meet(left, right)
        if out.proj_dim != 0:
            raise DegenerateSeed(
                f"direction lift of {J} produced dimension {out.proj_dim}"
            )
        p = ProjPoint(out.basis[0])
        if self.memoize:
            self._dirs[J] = p
        return p

    def grid_direction(self, J) -> ProjPoint:
        """Closed form for direction(J) in terms of the seed slopes."""
        J = tuple(J)
        _validate_tuple(J, self.seed.N, self.frame.n)
        values = [self.emb.d_values[a] for a in J]
        return direction_from_grid_values(self.frame.field, self.frame.n, values)

    def intersection(self, J, Jbar, m_index: int) -> ProjPoint:
        """The lifted point z_{J, Jbar, m}.

        Requires that for each position the two seed lines meet on the
        measuring line m; the result is an affine point on ell_J.
        """
        J, Jbar = tuple(J), tuple(Jbar)
        _validate_tuple(J, self.seed.N, self.frame.n)
        _validate_tuple(Jbar, self.seed.N, self.frame.n)
        if len(J) != len(Jbar):
            raise ValueError("paired index tuples must have equal length")
        if set(J) & set(Jbar):
            raise ValueError("paired index tuples must be disjoint")
        if not 0 <= m_index < len(self.emb.m_lines):
            raise ValueError(f"no measuring line {m_index}")
        return self._intersection(J, Jbar, m_index)

    def _intersection(self, J, Jbar, m_index: int) -> ProjPoint:
        key = (J, Jbar, m_index)
        if self.memoize and key in self._zs:
            return self._zs[key]
        if len(J) == 1:
            base = meet(self.emb.lines[J[0]], self.emb.lines[Jbar[0]])
            if base.proj_dim != 0:
                raise UndefinedBasePoint(
                    f"seed lines {J[0]} and {Jbar[0]} do not meet in a point"
                )
            pt = ProjPoint(base.basis[0])
            if not self.emb.m_lines[m_index].contains(pt):
                raise UndefinedBasePoint(
                    f"seed lines {J[0]} and {Jbar[0]} miss measuring line {m_index}"
                )
            out = pt
        else:
            j = len(J)
            z1 = self._intersection(J[:-1], Jbar[:-1], m_index)
            z2 = self._intersection(J[:-2] + (J[-1],), Jbar[:-2] + (Jbar[-1],), m_index)
            left = Subspace.from_points([self.frame.x[j + 1], z1])
            right = Subspace.from_points([self.frame.y[j + 1], z2])
            cut = meet(left, right)
            if cut.proj_dim != 0:
                raise DegenerateSeed(
                    f"intersection lift of {J} produced dimension {cut.proj_dim}"
                )
            out = ProjPoint(cut.basis[0])
        if self.memoize:
            self._zs[key] = out
        return out


@dataclass
class KLine:
    line: Subspace
    direction: ProjPoint


@dataclass
class KPoint:
    point: ProjPoint
    provenance: dict


@dataclass
class KakeyaSet:
    field: Field
    n: int
    N: int
    grid: list[list[Scalar]]
    lines: list[KLine]
    points: list[KPoint]
    seed_meta: dict = dc_field(default_factory=dict)


class _PointRegistry:
    """Deduplication of canonical points; linear scan for the real kind."""

    def __init__(self, fld: Field):
        self.fld = fld
        self.items: list[ProjPoint] = []
        self._keys: dict | None = {} if fld.exact else None

    def __contains__(self, p: ProjPoint) -> bool:
        if self._keys is not None:
            return tuple(c.value for c in p.coords) in self._keys
        return any(p == q for q in self.items)

    def add(self, p: ProjPoint) -> bool:
        if p in self:
            return False
        if self._keys is not None:
            self._keys[tuple(c.value for c in p.coords)] = len(self.items)
        self.items.append(p)
        return True


def _sorted_slopes(d_values: list[Scalar]) -> list[Scalar]:
    return sorted(d_values, key=lambda s: s.value)


def assemble(seed: PlanarSeed, n: int) -> KakeyaSet:
    """Build the n-dimensional line family and point set from a planar seed.

    For n = 2 the seed passes through unchanged (up to the embedding).
    Otherwise the lines are the lifts of all ordered (n-1)-tuples of
    seed lines, the lifted points are the z-lifts of ordered runs of
    disjoint double points on each measuring line, every deficient line
    is padded to N points by walking integer steps along it, and one
    padded line through the affine origin is added for every grid cell
    missed by the lifted directions.
    """
    if n < 2:
        raise UnsupportedDimension(f"need n >= 2, got {n}")
    if seed.N < 2 * (n - 1):
        raise SeedTooSmall(
            f"need N >= 2(n-1) = {2 * (n - 1)} seed lines for dimension {n}, got {seed.N}"
        )
    fld = seed.field
    frame = build_frame(n, fld)
    lifting = Lifting(frame, seed)
    emb = lifting.emb
    N = seed.N
    slopes = _sorted_slopes(emb.d_values)
    grid = [list(slopes) for _ in range(n - 1)]
    seed_meta = dict(seed.meta)
    seed_meta["N"] = N
    seed_meta["epsilon"] = [str(e) for e in seed.epsilon]

    if n == 2:
        lines = [KLine(l, p) for l, p in zip(emb.lines, emb.infinite_points)]
        points = [
            KPoint(p, {"kind": "seed", "extra": extra}) for p, extra in emb.points
        ]
        return KakeyaSet(fld, n, N, grid, lines, points, seed_meta)

    tuples = list(permutations(range(N), n - 1))
    lines = [KLine(lifting.line(J), lifting.direction(J)) for J in tuples]

    # double points of the embedded seed, grouped by measuring line
    per_m: dict[int, list[tuple[tuple[int, int], ProjPoint]]] = {}
    for a in range(N):
        for b in range(a + 1, N):
            cut = meet(emb.lines[a], emb.lines[b])
            if cut.proj_dim != 0:
                continue
            pt = ProjPoint(cut.basis[0])
            if pt.coords[-1].is_zero:
                continue
            for m_idx, m in enumerate(emb.m_lines):
                if m.contains(pt):
                    per_m.setdefault(m_idx, []).append(((a, b), pt))
                    break

    registry = _PointRegistry(fld)
    points: list[KPoint] = []
    for m_idx in range(N):
        entries = per_m.get(m_idx, [])
        for seq in permutations(entries, n - 1):
            used: set[int] = set()
            for (a, b), _ in seq:
                used.update((a, b))
            if len(used) != 2 * (n - 1):
                continue
            J = tuple(pair[0] for pair, _ in seq)
            Jbar = tuple(pair[1] for pair, _ in seq)
            z = lifting.intersection(J, Jbar, m_idx)
            if z.coords[-1].is_zero:
                raise DegenerateSeed("a lifted intersection point fell at infinity")
            if registry.add(z):
                points.append(
                    KPoint(
                        z,
                        {"kind": "lifted", "J": list(J), "Jbar": list(Jbar), "m": m_idx},
                    )
                )

    # one line through the affine origin per grid cell with repeats
    origin = ProjPoint([fld.zero] * n + [fld.one])
    completion_cells = [
        cell
        for cell in product(range(N), repeat=n - 1)
        if len(set(cell)) < n - 1
    ]
    completion_start = len(lines)
    for cell in completion_cells:
        values = [slopes[i] for i in cell]
        direction = direction_from_grid_values(fld, n, values)
        line = Subspace.from_points([origin, direction])
        lines.append(KLine(line, direction))

    # pad every line to N points by walking integer steps along it
    for idx, kline in enumerate(lines):
        count = sum(1 for p in registry.items if kline.line.contains(p))
        if count >= N:
            continue
        base, step = line_walk_start(kline.line)
        lam = 0
        limit = 4 * N + (fld.p if fld.kind == "prime" else 0)
        while count < N:
            if lam > limit:
                raise DegenerateSeed(f"cannot pad line {idx} up to {N} points")
            cand = ProjPoint(
                [c + fld(lam) * s for c, s in zip(base, step)] + [fld.one]
            )
            if registry.add(cand):
                if idx >= completion_start:
                    cell = completion_cells[idx - completion_start]
                    prov = {
                        "kind": "grid_completion",
                        "cell": [slopes[i].to_str() for i in cell],
                        "lam": lam,
                    }
                else:
                    prov = {"kind": "padding", "line": idx, "lam": lam}
                points.append(KPoint(cand, prov))
                count += 1
            lam += 1

    return KakeyaSet(fld, n, N, grid, lines, points, seed_meta)


def kakeya_to_json(K: KakeyaSet) -> dict:
    return {
        "field": K.field.to_json(),
        "n": K.n,
        "N": K.N,
        "grid": [[s.to_str() for s in axis] for axis in K.grid],
        "lines": [
            {
                "basis": [[c.to_str() for c in row] for row in kl.line.basis],
                "direction": [c.to_str() for c in kl.direction.coords],
            }
            for kl in K.lines
        ],
        "points": [
            {"coords": [c.to_str() for c in kp.point.coords], "provenance": kp.provenance}
            for kp in K.points
        ],
        "seed_meta": K.seed_meta,
    }


def kakeya_from_json(doc: dict) -> KakeyaSet:
    fld = field_from_json(doc["field"])
    n = int(doc["n"])
    lines = []
    for entry in doc["lines"]:
        rows = [[fld.scalar_from_str(x) for x in row] for row in entry["basis"]]
        lines.append(
            KLine(
                Subspace.from_vectors(fld, n, rows),
                ProjPoint([fld.scalar_from_str(x) for x in entry["direction"]]),
            )
        )
    points = [
        KPoint(
            ProjPoint([fld.scalar_from_str(x) for x in entry["coords"]]),
            dict(entry["provenance"]),
        )
        for entry in doc["points"]
    ]
    return KakeyaSet(
        field=fld,
        n=n,
        N=int(doc["N"]),
        grid=[[fld.scalar_from_str(x) for x in axis] for axis in doc["grid"]],
        lines=lines,
        points=points,
        seed_meta=dict(doc.get("seed_meta", {})),
    )


def save_kakeya(K: KakeyaSet, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(kakeya_to_json(K), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_kakeya(path: str) -> KakeyaSet:
    with open(path, "r", encoding="utf-8") as fh:
        return kakeya_from_json(json.load(fh))


def save_seed(seed: PlanarSeed, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(seed_to_json(seed), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_seed(path: str) -> PlanarSeed:
    with open(path, "r", encoding="utf-8") as fh:
        return seed_from_json(json.load(fh))
