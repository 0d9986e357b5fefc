"""Scalar arithmetic over the three supported coordinate fields.

A Field object fixes the kind of arithmetic: a prime field F_p with
canonical residues 0..p-1, the rational numbers with exact Fraction
values in lowest terms, or floating-point reals compared up to an
absolute tolerance.  Scalars wrap a canonical raw value together with
their field and overload the usual operators.  Arithmetic between
scalars of different fields raises FieldMismatch rather than guessing
a coercion.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

from .errors import DivisionByZero, FieldMismatch, UnsupportedField

DEFAULT_REAL_TOLERANCE = 1e-9


def binomial(a: int, b: int) -> int:
    """Binomial coefficient as an arbitrary-precision integer.

    Follows the convention binomial(a, b) = 0 whenever b > a, which the
    dimension-counting formulas below rely on.  Negative arguments are
    rejected.
    """
    if a < 0 or b < 0:
        raise ValueError("binomial requires nonnegative arguments")
    return math.comb(a, b)


class Field:
    """Common interface of the three coordinate fields."""

    kind = "abstract"

    def __call__(self, value: Any) -> "Scalar":
        return Scalar(self.canon(self.coerce(value)), self)

    # raw-value protocol implemented by subclasses
    def coerce(self, value: Any):
        raise NotImplementedError

    def canon(self, raw):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def to_str(self, a) -> str:
        raise NotImplementedError

    def from_str(self, s: str):
        raise NotImplementedError

    @property
    def zero(self) -> "Scalar":
        return self(0)

    @property
    def one(self) -> "Scalar":
        return self(1)

    def scalar_from_str(self, s: str) -> "Scalar":
        return Scalar(self.canon(self.from_str(s)), self)

    def to_json(self) -> dict:
        raise NotImplementedError

    @property
    def exact(self) -> bool:
        return True


class PrimeField(Field):
    """F_p for a prime p; raw values are canonical residues 0..p-1."""

    kind = "prime"

    def __init__(self, p: int):
        if p < 2:
            raise UnsupportedField(f"modulus must be at least 2, got {p}")
        # trial division is plenty for the moduli used here
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise UnsupportedField(f"modulus {p} is not prime")
            d += 1
        self.p = p

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch("scalar belongs to a different field")
            return value.value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into F_{self.p}")
        return value

    def canon(self, raw: int) -> int:
        return raw % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return pow(a, -1, self.p)

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def is_zero(self, a):
        return a % self.p == 0

    def to_str(self, a):
        return str(a % self.p)

    def from_str(self, s):
        return int(s, 10)

    def to_json(self):
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField(Field):
    """The rationals; raw values are Fractions in lowest terms."""

    kind = "rational"

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch("scalar belongs to a different field")
            return value.value
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into the rationals")

    def canon(self, raw):
        return Fraction(raw)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("0 has no rational inverse")
        return 1 / a

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return a == 0

    def to_str(self, a):
        return f"{a.numerator}/{a.denominator}"

    def from_str(self, s):
        return Fraction(s)

    def to_json(self):
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class RealField(Field):
    """Floating-point reals compared up to an absolute tolerance."""

    kind = "real"

    def __init__(self, tol: float = DEFAULT_REAL_TOLERANCE):
        if not (tol > 0):
            raise UnsupportedField(f"tolerance must be positive, got {tol}")
        self.tol = float(tol)

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch("scalar belongs to a different field")
            return value.value
        if isinstance(value, (int, float, Fraction)):
            return float(value)
        raise TypeError(f"cannot coerce {value!r} into the reals")

    def canon(self, raw):
        return float(raw)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if abs(a) <= self.tol:
            raise DivisionByZero(f"value {a} is zero up to tolerance {self.tol}")
        return 1.0 / a

    def eq(self, a, b):
        return abs(a - b) <= self.tol

    def is_zero(self, a):
        return abs(a) <= self.tol

    def to_str(self, a):
        return repr(float(a))

    def from_str(self, s):
        return float(s)

    def to_json(self):
        return {"kind": "real", "tol": self.tol}

    @property
    def exact(self):
        return False

    def __eq__(self, other):
        return isinstance(other, RealField) and other.tol == self.tol

    def __hash__(self):
        return hash(("real", self.tol))

    def __repr__(self):
        return f"RealField(tol={self.tol})"


def field_from_json(doc: dict) -> Field:
    kind = doc.get("kind")
    if kind == "prime":
        return PrimeField(int(doc["p"]))
    if kind == "rational":
        return RationalField()
    if kind == "real":
        return RealField(float(doc.get("tol", DEFAULT_REAL_TOLERANCE)))
    raise UnsupportedField(f"unknown field kind {kind!r}")


class Scalar:
    """A canonical field element; immutable, with operator overloads."""

    __slots__ = ("value", "field")

    def __init__(self, value, field: Field):
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _peer(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {other!r}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._peer(other)
        return Scalar(self.field.add(self.value, other.value), self.field)

    def __sub__(self, other):
        other = self._peer(other)
        return Scalar(self.field.sub(self.value, other.value), self.field)

    def __mul__(self, other):
        other = self._peer(other)
        return Scalar(self.field.mul(self.value, other.value), self.field)

    def __truediv__(self, other):
        other = self._peer(other)
        if self.field.is_zero(other.value):
            raise DivisionByZero("division by zero scalar")
        return Scalar(self.field.div(self.value, other.value), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "Scalar":
        return Scalar(self.field.inv(self.value), self.field)

    @property
    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return self.field.eq(self.value, other.value)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if not self.field.exact:
            raise TypeError("real-kind scalars compare up to tolerance and are unhashable")
        return hash((self.field, self.value))

    def to_str(self) -> str:
        return self.field.to_str(self.value)

    def __repr__(self):
        return f"Scalar({self.to_str()})"


def scalar_eq(a: Scalar, b: Scalar) -> bool:
    """Field-aware equality: exact for prime/rational, tolerance for real."""
    return a == b
