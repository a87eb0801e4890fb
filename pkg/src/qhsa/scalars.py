"""Exact scalars: arbitrary-precision rationals and cyclotomic extensions Q(zeta_n).

Every structure document declares a single field up front, either Q (plain
``fractions.Fraction``) or Q(zeta_n) (``Cyclotomic``).  Cyclotomic values are
polynomials in zeta_n reduced modulo the n-th cyclotomic polynomial Phi_n,
which is irreducible over Q, so representations are canonical and every
nonzero element is invertible.  All equality tests downstream reduce to
comparing these canonical forms, bit for bit.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Union


class ScalarError(ValueError):
    """Malformed scalar text, zero division, or field mismatch."""


_ZERO = Fraction(0)
_ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?\Z")


def _poly_trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_div_exact(num, den):
    """Divide polynomials (little-endian Fraction tuples); remainder must vanish."""
    num = list(num)
    out = [_ZERO] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] / lead
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    if any(c != 0 for c in num[: len(den) - 1]):
        raise ScalarError("polynomial division left a remainder")
    return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients of Phi_n, little-endian, via x^n - 1 = prod_{d|n} Phi_d."""
    if n < 1:
        raise ScalarError("cyclotomic order must be >= 1")
    poly = tuple([-_ONE] + [_ZERO] * (n - 1) + [_ONE])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return poly


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def reduce_mod_cyclotomic(coeffs, n: int) -> tuple:
    """Reduce a polynomial in zeta_n modulo Phi_n; returns exactly phi(n) coefficients."""
    modulus = cyclotomic_polynomial(n)
    deg = len(modulus) - 1
    work = [Fraction(c) for c in coeffs]
    lead = modulus[-1]  # always 1
    for i in range(len(work) - 1, deg - 1, -1):
        q = work[i] / lead
        if q:
            for j, c in enumerate(modulus):
                work[i - deg + j] -= q * c
    work = work[:deg]
    work.extend([_ZERO] * (deg - len(work)))
    return tuple(work)


class Cyclotomic:
    """An element of Q(zeta_n), stored reduced modulo Phi_n."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        self.order = order
        self.coeffs = reduce_mod_cyclotomic(coeffs, order)

    @staticmethod
    def constant(order: int, value) -> "Cyclotomic":
        return Cyclotomic(order, (Fraction(value),))

    @staticmethod
    def zeta(order: int) -> "Cyclotomic":
        return Cyclotomic(order, (_ZERO, _ONE))

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ScalarError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.constant(self.order, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        deg = len(self.coeffs)
        prod = [_ZERO] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        return Cyclotomic(self.order, prod)

    __rmul__ = __mul__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-a for a in self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def inverse(self) -> "Cyclotomic":
        """Extended Euclid against Phi_n; Phi_n irreducible, so any nonzero inverts."""
        if not self:
            raise ScalarError("zero has no inverse")
        # invariants: r0 = s0 * self (mod Phi_n), r1 = s1 * self (mod Phi_n)
        r0 = list(cyclotomic_polynomial(self.order))
        r1 = _poly_trim(list(self.coeffs))
        s0 = [_ZERO]
        s1 = [_ONE]
        while True:
            if len(r1) == 1:
                inv = r1[0]
                return Cyclotomic(self.order, tuple(c / inv for c in s1))
            # one long-division step: r0 = q * r1 + r
            q = [_ZERO] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            lead = r1[-1]
            for i in range(len(q) - 1, -1, -1):
                f = rem[i + len(r1) - 1] / lead
                q[i] = f
                if f:
                    for j, c in enumerate(r1):
                        rem[i + j] -= f * c
            rem = _poly_trim(rem[: len(r1) - 1])
            if not rem:
                raise ScalarError("element shares a factor with the modulus")
            # s = s0 - q * s1
            s = list(s0) + [_ZERO] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qa in enumerate(q):
                if qa:
                    for j, sb in enumerate(s1):
                        s[i + j] -= qa * sb
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_trim(s)

    def __repr__(self):
        return f"Cyclotomic({self.order}, {list(self.coeffs)})"


Scalar = Union[Fraction, Cyclotomic]


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ScalarError(f"invalid rational {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ScalarError(f"invalid scalar {text!r}: zero denominator")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


class FieldSpec:
    """The single scalar field of a structure document: Q or Q(zeta_n)."""

    def __init__(self, kind: str, order: int | None = None):
        if kind == "rational":
            if order is not None:
                raise ScalarError("rational field takes no order")
        elif kind == "cyclotomic":
            if not isinstance(order, int) or order < 1:
                raise ScalarError("cyclotomic field needs a positive integer order")
            cyclotomic_polynomial(order)
        else:
            raise ScalarError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.order = order

    @staticmethod
    def rational() -> "FieldSpec":
        return FieldSpec("rational")

    @staticmethod
    def cyclotomic(order: int) -> "FieldSpec":
        return FieldSpec("cyclotomic", order)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.kind, self.order))

    def __repr__(self):
        if self.kind == "rational":
            return "FieldSpec.rational()"
        return f"FieldSpec.cyclotomic({self.order})"

    def zero(self) -> Scalar:
        return self.from_int(0)

    def one(self) -> Scalar:
        return self.from_int(1)

    def from_int(self, value: int) -> Scalar:
        if self.kind == "rational":
            return Fraction(value)
        return Cyclotomic.constant(self.order, value)

    def from_fraction(self, value: Fraction) -> Scalar:
        if self.kind == "rational":
            return Fraction(value)
        return Cyclotomic.constant(self.order, value)

    def invert(self, value: Scalar) -> Scalar:
        if self.kind == "rational":
            if value == 0:
                raise ScalarError("zero has no inverse")
            return _ONE / value
        if not isinstance(value, Cyclotomic):
            return Cyclotomic.constant(self.order, value).inverse()
        return value.inverse()

    def parse(self, text: str) -> Scalar:
        """Parse the canonical text encoding; cyclotomic documents also accept
        a bare rational as a degree-0 element."""
        if not isinstance(text, str):
            raise ScalarError(f"scalar must be a string, got {text!r}")
        text = text.strip()
        if self.kind == "rational":
            return parse_rational(text)
        if text.startswith("["):
            if not text.endswith("]"):
                raise ScalarError(f"unterminated coefficient list {text!r}")
            body = text[1:-1].strip()
            parts = [p for p in body.split(",")] if body else []
            coeffs = [parse_rational(p) for p in parts]
            if len(coeffs) > euler_phi(self.order):
                raise ScalarError(
                    f"coefficient list {text!r} longer than phi({self.order})"
                )
            return Cyclotomic(self.order, coeffs)
        return Cyclotomic.constant(self.order, parse_rational(text))

    def format(self, value: Scalar) -> str:
        """Canonical text encoding; bit-exact round trip with parse."""
        if self.kind == "rational":
            return str(value)
        if not isinstance(value, Cyclotomic):
            value = Cyclotomic.constant(self.order, value)
        return "[" + ", ".join(str(c) for c in value.coeffs) + "]"

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"kind": "rational"}
        return {"kind": "cyclotomic", "order": self.order}

    @staticmethod
    def from_json(data) -> "FieldSpec":
        if not isinstance(data, dict) or "kind" not in data:
            raise ScalarError(f"invalid field spec {data!r}")
        kind = data["kind"]
        extra = set(data) - {"kind", "order"}
        if extra:
            raise ScalarError(f"unknown field spec keys {sorted(extra)}")
        return FieldSpec(kind, data.get("order"))
