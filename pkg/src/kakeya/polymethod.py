"""Multivariate polynomials, Hasse derivatives and the grid lower bounds.

Polynomials are sparse maps from exponent tuples to nonzero scalars.
The Hasse derivative acts on monomials by

    d^j (X^e) = prod_i binomial(e_i, j_i) X^(e - j)

which differs from the iterated formal derivative in positive
characteristic and is the right notion for counting zero multiplicity
over any field.  A polynomial has a zero of multiplicity at least m at
a point exactly when every Hasse derivative of weight below m vanishes
there, so the space of polynomials of bounded degree vanishing to a
prescribed multiplicity on a finite point set is the nullspace of one
linear system per (point, derivative) pair.

The bound calculators evaluate the exact rational

    binomial(r*N + n - 1, n) / binomial(2r + n - 2, n)

which lower-bounds the size of any point set whose line family covers
an N^(n-1) grid of directions, together with its large-r limit (N/2)^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    HypothesisViolation,
    NotHomogeneous,
    UnsupportedField,
    ZeroPolynomial,
)
from .linalg import nullspace
from .projgeom import ProjPoint, affine_coords
from .scalar import Field, Scalar, binomial


def exponent_tuples(nvars: int, total: int):
    """All exponent tuples of the given length summing to total, in lex order."""
    if nvars == 0:
        if total == 0:
            yield ()
        return
    if nvars == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in exponent_tuples(nvars - 1, total - first):
            yield (first,) + rest


def monomial_basis(nvars: int, deg_bound: int) -> list[tuple[int, ...]]:
    """Exponent tuples of degree at most deg_bound, graded then lex."""
    out: list[tuple[int, ...]] = []
    for w in range(deg_bound + 1):
        out.extend(exponent_tuples(nvars, w))
    return out


class Poly:
    """Sparse polynomial in nvars variables over one field; immutable."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms=None):
        clean: dict[tuple[int, ...], Scalar] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise DimensionMismatch(
                    f"exponent tuple {exps} does not have {nvars} entries"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = coeff if isinstance(coeff, Scalar) else field(coeff)
            if c.field != field:
                raise DimensionMismatch("coefficient from a different field")
            if exps in clean:
                c = clean[exps] + c
            if c.is_zero:
                clean.pop(exps, None)
            else:
                clean[exps] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", dict(clean))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "Poly":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: Field, nvars: int, value) -> "Poly":
        return cls(field, nvars, {(0,) * nvars: field(value)})

    @classmethod
    def variable(cls, field: Field, nvars: int, index: int) -> "Poly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(field, nvars, {tuple(exps): field.one})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exps) -> Scalar:
        return self.terms.get(tuple(exps), self.field.zero)

    def _check_peer(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {other!r}")
        if other.nvars != self.nvars or other.field != self.field:
            raise DimensionMismatch("polynomials live in different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_peer(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return Poly(self.field, self.nvars, terms)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.field, self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            c = other if isinstance(other, Scalar) else self.field(other)
            return Poly(
                self.field, self.nvars, {e: v * c for e, v in self.terms.items()}
            )
        self._check_peer(other)
        terms: dict[tuple[int, ...], Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                terms[e] = terms[e] + prod if e in terms else prod
        return Poly(self.field, self.nvars, terms)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly.constant(self.field, self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.nvars != self.nvars or other.field != self.field:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(other.terms[e] == c for e, c in self.terms.items())

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        bits = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t)):
            mono = "*".join(
                f"X{i}" if k == 1 else f"X{i}^{k}"
                for i, k in enumerate(e)
                if k
            )
            c = self.terms[e].to_str()
            bits.append(f"{c}*{mono}" if mono else c)
        return "Poly(" + " + ".join(bits) + ")"

    def evaluate(self, point) -> Scalar:
        """Value at an affine point given by nvars scalars."""
        point = list(point)
        if len(point) != self.nvars:
            raise DimensionMismatch(
                f"point has {len(point)} coordinates, polynomial has {self.nvars} variables"
            )
        total = self.field.zero
        for e, c in self.terms.items():
            v = c
            for coord, k in zip(point, e):
                if k:
                    v = v * coord**k
            total = total + v
        return total


def hasse_derivative(f: Poly, j) -> Poly:
    """Hasse derivative of f with respect to the multi-index j."""
    j = tuple(int(x) for x in j)
    if len(j) != f.nvars:
        raise DimensionMismatch(
            f"multi-index {j} does not have {f.nvars} entries"
        )
    if any(x < 0 for x in j):
        raise ValueError(f"negative entry in multi-index {j}")
    fld = f.field
    terms: dict[tuple[int, ...], Scalar] = {}
    for e, c in f.terms.items():
        if any(ei < ji for ei, ji in zip(e, j)):
            continue
        factor = 1
        for ei, ji in zip(e, j):
            factor *= binomial(ei, ji)
        coeff = c * fld(factor)
        if coeff.is_zero:
            continue
        shifted = tuple(ei - ji for ei, ji in zip(e, j))
        terms[shifted] = terms[shifted] + coeff if shifted in terms else coeff
    return Poly(fld, f.nvars, terms)


def multiplicity_at(f: Poly, point) -> int:
    """Largest m with every Hasse derivative of weight < m vanishing at the point.

    The search is capped at deg f + 1, which is only reached under
    tolerance arithmetic: over an exact field some derivative of weight
    at most deg f is a nonzero constant.
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no multiplicity")
    point = list(point)
    deg = f.degree
    for w in range(deg + 1):
        for j in exponent_tuples(f.nvars, w):
            if not hasse_derivative(f, j).evaluate(point).is_zero:
                return w
    return deg + 1


def top_part(f: Poly) -> Poly:
    """The homogeneous part of f of top degree."""
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no top part")
    deg = f.degree
    return Poly(
        f.field, f.nvars, {e: c for e, c in f.terms.items() if sum(e) == deg}
    )


def restrict_to_line(f: Poly, base, step) -> Poly:
    """The univariate polynomial lam -> f(base + lam * step)."""
    base, step = list(base), list(step)
    if len(base) != f.nvars or len(step) != f.nvars:
        raise DimensionMismatch("base and step must have one entry per variable")
    fld = f.field
    out = Poly.zero(fld, 1)
    for e, c in f.terms.items():
        term = Poly.constant(fld, 1, c)
        for i, k in enumerate(e):
            if k:
                lin = Poly(fld, 1, {(0,): base[i], (1,): step[i]})
                term = term * lin**k
        out = out + term
    return out


def grid_generator(fld: Field, nvars: int, axis: int, values) -> Poly:
    """The product of (X_axis - a * X_last) over the given values a.

    Homogeneous of degree len(values); vanishes on every point of a
    grid whose axis coordinates run over the values.
    """
    if not 0 <= axis < nvars - 1:
        raise ValueError(f"axis must be in 0..{nvars - 2}")
    out = Poly.constant(fld, nvars, 1)
    x_axis = Poly.variable(fld, nvars, axis)
    x_last = Poly.variable(fld, nvars, nvars - 1)
    for a in values:
        out = out * (x_axis - x_last * a)
    return out


def vanishing_space(
    points, deg_bound: int, mult: int, nvars: int, fld: Field
) -> list[Poly]:
    """Basis of polynomials of degree <= deg_bound with multiplicity >= mult on points.

    One linear constraint per point and multi-index of weight below
    mult; the basis is the exact nullspace of that system over the
    monomials of degree at most deg_bound.
    """
    if deg_bound < 0:
        raise ValueError("deg_bound must be nonnegative")
    if mult < 1:
        raise ValueError("mult must be at least 1")
    monos = monomial_basis(nvars, deg_bound)
    col = {e: i for i, e in enumerate(monos)}
    deriv_indices = [
        j for w in range(mult) for j in exponent_tuples(nvars, w)
    ]
    rows: list[list[Scalar]] = []
    zero = fld.zero
    for raw in points:
        u = [c if isinstance(c, Scalar) else fld(c) for c in raw]
        if len(u) != nvars:
            raise DimensionMismatch(
                f"point has {len(u)} coordinates, expected {nvars}"
            )
        powers = [[fld.one] for _ in range(nvars)]
        for i in range(nvars):
            for _ in range(deg_bound):
                powers[i].append(powers[i][-1] * u[i])
        for j in deriv_indices:
            row = [zero] * len(monos)
            for e in monos:
                if any(ei < ji for ei, ji in zip(e, j)):
                    continue
                factor = 1
                for ei, ji in zip(e, j):
                    factor *= binomial(ei, ji)
                entry = fld(factor)
                if entry.is_zero:
                    continue
                for i in range(nvars):
                    entry = entry * powers[i][e[i] - j[i]]
                row[col[e]] = entry
            rows.append(row)
    basis_vectors = nullspace(rows, fld, len(monos))
    out = []
    for vec in basis_vectors:
        terms = {e: vec[col[e]] for e in monos if not vec[col[e]].is_zero}
        out.append(Poly(fld, nvars, terms))
    return out


def direction_multiplicity(f_hom: Poly, directions) -> int:
    """Minimum multiplicity of a homogeneous polynomial over a direction set.

    Each direction is a projective point with last coordinate zero,
    evaluated at its canonical representative; homogeneity makes the
    answer independent of the representative chosen.
    """
    if f_hom.is_zero:
        raise ZeroPolynomial("the zero polynomial has no direction multiplicity")
    if not f_hom.is_homogeneous():
        raise NotHomogeneous("direction multiplicity needs a homogeneous polynomial")
    best = None
    for d in directions:
        if isinstance(d, ProjPoint):
            coords = d.coords
            if not coords[-1].is_zero:
                raise ValueError("directions must lie at infinity")
            rep = list(coords[:-1])
        else:
            rep = list(d)
        m = multiplicity_at(f_hom, rep)
        if best is None or m < best:
            best = m
    if best is None:
        raise ValueError("empty direction set")
    return best


@dataclass
class BoundReport:
    N: int
    n: int
    r: int
    bound: Fraction
    limit: Fraction
    r_max: int | None = None
    best_r: int | None = None

    def to_json(self) -> dict:
        doc = {
            "N": self.N,
            "n": self.n,
            "r": self.r,
            "bound": str(self.bound),
            "bound_approx": float(self.bound),
            "limit": str(self.limit),
            "limit_approx": float(self.limit),
        }
        if self.r_max is not None:
            doc["r_max"] = self.r_max
            doc["best_r"] = self.best_r
        return doc


def _grid_ratio(N: int, n: int, r: int) -> Fraction:
    return Fraction(binomial(r * N + n - 1, n), binomial(2 * r + n - 2, n))


def bound_grid(N: int, n: int, r: int) -> BoundReport:
    """Exact size lower bound for a point set whose directions fill an N^(n-1) grid."""
    if N < 1 or n < 1 or r < 1:
        raise ValueError("N, n and r must be positive")
    return BoundReport(
        N=N, n=n, r=r, bound=_grid_ratio(N, n, r), limit=Fraction(N, 2) ** n
    )


def bound_best(N: int, n: int, r_max: int = 64) -> BoundReport:
    """Walk r upward and keep the bound at the first local maximum of the ratio.

    The walk stops as soon as increasing r fails to improve the bound,
    or at r_max; the limiting value (N/2)^n is reported alongside so the
    large-r behavior stays visible.
    """
    if N < 1 or n < 1 or r_max < 1:
        raise ValueError("N, n and r_max must be positive")
    best_r, best = 1, _grid_ratio(N, n, 1)
    for r in range(2, r_max + 1):
        value = _grid_ratio(N, n, r)
        if value <= best:
            break
        best_r, best = r, value
    return BoundReport(
        N=N,
        n=n,
        r=best_r,
        bound=best,
        limit=Fraction(N, 2) ** n,
        r_max=r_max,
        best_r=best_r,
    )


@dataclass
class Certificate:
    N: int
    n: int
    r: int
    size: int
    guaranteed: bool
    f: Poly | None
    s_attestations: list[dict]
    d_attestations: list[dict]
    verdict: str

    def to_json(self) -> dict:
        if self.f is None:
            f_doc = None
        else:
            f_doc = {
                "terms": [
                    {"exponents": list(e), "coeff": self.f.terms[e].to_str()}
                    for e in sorted(self.f.terms, key=lambda t: (sum(t), t))
                ]
            }
        return {
            "N": self.N,
            "n": self.n,
            "r": self.r,
            "size": self.size,
            "guaranteed": self.guaranteed,
            "f": f_doc,
            "s_attestations": self.s_attestations,
            "d_attestations": self.d_attestations,
            "verdict": self.verdict,
        }


def certify(K, r: int) -> Certificate:
    """Find a low-degree polynomial crushed to high multiplicity on the point set
    and check that its top part vanishes to order r at every direction.

    The pipeline solves for a nonzero f of degree at most rN - 1 with
    multiplicity at least 2r - 1 at every point, then re-verifies both
    the point multiplicities and the induced direction multiplicities
    independently.  When the dimension count does not force a nonzero f
    and none exists, the verdict is pass-vacuous.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    fld = K.field
    if not fld.exact:
        raise UnsupportedField(
            "certificates need exact arithmetic; tolerance fields are refused"
        )
    n, N = K.n, K.N
    for idx, kline in enumerate(K.lines):
        count = sum(1 for kp in K.points if kline.line.contains(kp.point))
        if count < N:
            raise HypothesisViolation(
                f"line {idx} carries {count} points, needs at least {N}"
            )

    seen = set()
    affine_points = []
    for kp in K.points:
        coords = affine_coords(kp.point)
        key = tuple(c.value for c in coords)
        if key not in seen:
            seen.add(key)
            affine_points.append(coords)
    size = len(affine_points)

    directions = []
    dir_seen = set()
    for kline in K.lines:
        key = tuple(c.value for c in kline.direction.coords)
        if key not in dir_seen:
            dir_seen.add(key)
            directions.append(kline.direction)

    deg_bound = r * N - 1
    mult = 2 * r - 1
    guaranteed = binomial(n + 2 * r - 2, n) * size < binomial(n + deg_bound, n)
    basis = vanishing_space(affine_points, deg_bound, mult, n, fld)

    if not basis:
        verdict = "fail" if guaranteed else "pass-vacuous"
        return Certificate(N, n, r, size, guaranteed, None, [], [], verdict)

    f = basis[0]
    ok = not f.is_zero and f.degree <= deg_bound
    s_attestations = []
    for coords in affine_points:
        m = multiplicity_at(f, coords)
        good = m >= mult
        ok = ok and good
        s_attestations.append(
            {
                "point": [c.to_str() for c in coords],
                "multiplicity": m,
                "required": mult,
                "ok": good,
            }
        )
    f_top = top_part(f)
    d_attestations = []
    for d in directions:
        m = multiplicity_at(f_top, list(d.coords[:-1]))
        good = m >= r
        ok = ok and good
        d_attestations.append(
            {
                "direction": [c.to_str() for c in d.coords],
                "multiplicity": m,
                "required": r,
                "ok": good,
            }
        )
    verdict = "pass" if ok else "fail"
    return Certificate(N, n, r, size, guaranteed, f, s_attestations, d_attestations, verdict)


def poly_to_json(f: Poly) -> dict:
    return {
        "nvars": f.nvars,
        "terms": [
            {"exponents": list(e), "coeff": f.terms[e].to_str()}
            for e in sorted(f.terms, key=lambda t: (sum(t), t))
        ],
    }


def poly_from_json(fld: Field, doc: dict) -> Poly:
    nvars = int(doc["nvars"])
    terms = {
        tuple(entry["exponents"]): fld.scalar_from_str(entry["coeff"])
        for entry in doc["terms"]
    }
    return Poly(fld, nvars, terms)
