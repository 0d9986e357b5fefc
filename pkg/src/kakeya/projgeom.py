"""Projective points and flats with canonical coordinates.

Points are homogeneous coordinate vectors scaled so the first nonzero
coordinate is one.  Flats (subspaces) are stored as the reduced row
echelon basis of their span, which is unique for a given flat, so two
flats are equal exactly when their stored bases match.  The empty flat
(projective dimension -1) is a first-class value returned by meets of
disjoint flats.

The affine chart used throughout the package treats the last coordinate
as the homogenizing one: points with last coordinate zero are "at
infinity", all others correspond to affine points.
"""

from __future__ import annotations

from .errors import AmbientMismatch, FieldMismatch, ZeroVector
from .linalg import reduce_vector, rref
from .linalg import nullspace as _nullspace
from .scalar import Field, Scalar


class ProjPoint:
    """A projective point; construction normalizes the coordinates."""

    __slots__ = ("coords", "field")

    def __init__(self, coords):
        coords = tuple(coords)
        if not coords:
            raise ZeroVector("a projective point needs at least one coordinate")
        field = coords[0].field
        lead = None
        for i, c in enumerate(coords):
            if c.field != field:
                raise FieldMismatch("mixed fields in one coordinate vector")
            if lead is None and not c.is_zero:
                lead = i
        if lead is None:
            raise ZeroVector("all coordinates are zero")
        inv = coords[lead].inverse()
        normalized = [field.zero] * lead + [field.one]
        normalized.extend(c * inv for c in coords[lead + 1 :])
        object.__setattr__(self, "coords", tuple(normalized))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    @property
    def ambient_dim(self) -> int:
        return len(self.coords) - 1

    def _peer(self, other: "ProjPoint"):
        if other.field != self.field:
            raise FieldMismatch("points from different fields")
        if len(other.coords) != len(self.coords):
            raise AmbientMismatch("points from different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        self._peer(other)
        return all(a == b for a, b in zip(self.coords, other.coords))

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.field, tuple(c.value for c in self.coords)))

    def __repr__(self):
        return "ProjPoint(" + ", ".join(c.to_str() for c in self.coords) + ")"


def point_normalize(coords) -> ProjPoint:
    """Canonical projective point for a homogeneous coordinate vector."""
    return ProjPoint(coords)


def is_affine(p: ProjPoint) -> bool:
    return not p.coords[-1].is_zero


def affine_coords(p: ProjPoint) -> tuple[Scalar, ...]:
    """Dehomogenize against the last coordinate."""
    last = p.coords[-1]
    if last.is_zero:
        raise ZeroVector("point at infinity has no affine coordinates")
    inv = last.inverse()
    return tuple(c * inv for c in p.coords[:-1])


def point_from_affine(field: Field, coords) -> ProjPoint:
    vec = [field(c) if not isinstance(c, Scalar) else c for c in coords]
    vec.append(field.one)
    return ProjPoint(vec)


class Subspace:
    """A projective flat stored by its canonical row-echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, rows, pivots):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, field: Field, ambient_dim: int, vectors) -> "Subspace":
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim + 1:
                raise AmbientMismatch("vector length does not match ambient dimension")
        rows, pivots = rref(vectors, field)
        return cls(field, ambient_dim, rows, pivots)

    @classmethod
    def from_points(cls, points) -> "Subspace":
        points = list(points)
        if not points:
            raise ZeroVector("need at least one point to span a flat")
        field = points[0].field
        dim = points[0].ambient_dim
        for p in points:
            if p.field != field:
                raise FieldMismatch("mixed fields")
            if p.ambient_dim != dim:
                raise AmbientMismatch("mixed ambient dimensions")
        return cls.from_vectors(field, dim, [list(p.coords) for p in points])

    @classmethod
    def empty(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [], [])

    @classmethod
    def from_equations(cls, field: Field, ambient_dim: int, eq_rows) -> "Subspace":
        """Flat cut out by homogeneous linear equations (coefficient rows)."""
        rows = [list(r) for r in eq_rows]
        vectors = _nullspace(rows, field, ambient_dim + 1)
        if not vectors:
            return cls.empty(field, ambient_dim)
        return cls.from_vectors(field, ambient_dim, vectors)

    @property
    def proj_dim(self) -> int:
        return len(self.basis) - 1

    @property
    def is_empty(self) -> bool:
        return not self.basis

    def basis_points(self) -> list[ProjPoint]:
        return [ProjPoint(row) for row in self.basis]

    def contains(self, p: ProjPoint) -> bool:
        if p.field != self.field:
            raise FieldMismatch("point from a different field")
        if p.ambient_dim != self.ambient_dim:
            raise AmbientMismatch("point from a different ambient space")
        if self.is_empty:
            return False
        residual = reduce_vector(list(p.coords), [list(r) for r in self.basis], list(self.pivots), self.field)
        return all(c.is_zero for c in residual)

    def equations(self) -> list[list[Scalar]]:
        """Coefficient rows of the linear equations cutting out this flat."""
        return _nullspace([list(r) for r in self.basis], self.field, self.ambient_dim + 1)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch("flats from different fields")
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch("flats from different ambient spaces")
        if len(other.basis) != len(self.basis) or other.pivots != self.pivots:
            return False
        return all(
            a == b for ra, rb in zip(self.basis, other.basis) for a, b in zip(ra, rb)
        )

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(
            (
                self.field,
                self.ambient_dim,
                tuple(tuple(c.value for c in row) for row in self.basis),
            )
        )

    def __repr__(self):
        rows = "; ".join(
            " ".join(c.to_str() for c in row) for row in self.basis
        )
        return f"Subspace(dim={self.proj_dim}: {rows})"


def _check_pair(a: Subspace, b: Subspace):
    if a.field != b.field:
        raise FieldMismatch("flats from different fields")
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("flats from different ambient spaces")


def span(a: Subspace, b: Subspace) -> Subspace:
    """Smallest flat containing both arguments."""
    _check_pair(a, b)
    rows = [list(r) for r in a.basis] + [list(r) for r in b.basis]
    return Subspace.from_vectors(a.field, a.ambient_dim, rows)


def span_point(a: ProjPoint, b: Subspace) -> Subspace:
    return span(Subspace.from_points([a]), b)


def meet(a: Subspace, b: Subspace) -> Subspace:
    """Intersection of two flats (possibly the empty flat).

    Uses the doubled-block elimination trick: rows [u | u] for u in a and
    [v | 0] for v in b are reduced together; reduced rows whose pivot
    falls in the right block have left half zero, and their right halves
    span the intersection.
    """
    _check_pair(a, b)
    d = a.ambient_dim + 1
    zero = a.field.zero
    rows = [list(r) + list(r) for r in a.basis]
    rows += [list(r) + [zero] * d for r in b.basis]
    red, pivots = rref(rows, a.field)
    inter = [row[d:] for row, p in zip(red, pivots) if p >= d]
    if not inter:
        return Subspace.empty(a.field, a.ambient_dim)
    return Subspace.from_vectors(a.field, a.ambient_dim, inter)


def incident(p: ProjPoint, a: Subspace) -> bool:
    return a.contains(p)


def in_general_position(points) -> bool:
    """True when the points' coordinate matrix has full rank len(points).

    Only defined for at most ambient_dim + 1 points.
    """
    points = list(points)
    if not points:
        return True
    dim = points[0].ambient_dim
    field = points[0].field
    for p in points:
        if p.field != field:
            raise FieldMismatch("mixed fields")
        if p.ambient_dim != dim:
            raise AmbientMismatch("mixed ambient dimensions")
    if len(points) > dim + 1:
        raise ValueError("more points than ambient dimension + 1")
    rows, _ = rref([list(p.coords) for p in points], field)
    return len(rows) == len(points)
