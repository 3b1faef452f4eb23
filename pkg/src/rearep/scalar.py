"""Exact scalars: rational functions in a formal parameter ``q``.

A value is stored as ``q**shift * num(q) / den(q)`` where ``num`` and ``den``
are integer polynomials (``flint.fmpz_poly``) with nonzero constant terms.
Every constructor returns the canonical form:

* ``gcd(num, den) == 1`` over the integers (this also makes the integer
  contents coprime),
* ``den(0) > 0``,
* all powers of ``q`` live in ``shift``.

Two values are equal iff their canonical triples coincide, so ``__eq__`` and
``__hash__`` are structural.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

import flint

__all__ = [
    "LaurentRational",
    "GenericityError",
    "PoleError",
    "ZERO",
    "ONE",
    "q",
    "lam",
    "qpow",
    "q_int",
    "specialize",
    "parse_scalar",
    "dot",
    "lsum",
]

_Poly = flint.fmpz_poly
_P_ONE = _Poly([1])
_P_ZERO = _Poly([])


class GenericityError(ValueError):
    """Specialization at a value of q where q-integers may vanish."""


class PoleError(ZeroDivisionError):
    """The denominator vanishes at the requested specialization point."""


def _valuation(p: flint.fmpz_poly) -> int:
    v = 0
    while p[v] == 0:
        v += 1
    return v


class LaurentRational:
    __slots__ = ("shift", "num", "den", "_hash")

    # Use the factory helpers; the raw constructor trusts its arguments.
    def __init__(self, shift: int, num: flint.fmpz_poly, den: flint.fmpz_poly):
        self.shift = shift
        self.num = num
        self.den = den
        self._hash = None

    # -- construction -----------------------------------------------------
    @staticmethod
    def canon(shift: int, num: flint.fmpz_poly, den: flint.fmpz_poly) -> "LaurentRational":
        if num.is_zero():
            return ZERO
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num[0] == 0:
            v = _valuation(num)
            num = num.right_shift(v)
            shift += v
        if den[0] == 0:
            v = _valuation(den)
            den = den.right_shift(v)
            shift -= v
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
            if den[0] < 0:
                num = -num
                den = -den
        return LaurentRational(shift, num, den)

    @classmethod
    def from_int(cls, k: int) -> "LaurentRational":
        if k == 0:
            return ZERO
        return cls(0, _Poly([k]), _P_ONE)

    @classmethod
    def from_fraction(cls, x) -> "LaurentRational":
        x = Fraction(x)
        return cls.canon(0, _Poly([x.numerator]), _Poly([x.denominator]))

    @classmethod
    def laurent(cls, coeffs: dict[int, int]) -> "LaurentRational":
        """Laurent polynomial from an ``{exponent: coefficient}`` mapping."""
        coeffs = {e: c for e, c in coeffs.items() if c}
        if not coeffs:
            return ZERO
        lo = min(coeffs)
        dense = [0] * (max(coeffs) - lo + 1)
        for e, c in coeffs.items():
            dense[e - lo] = c
        return cls.canon(lo, _Poly(dense), _P_ONE)

    @staticmethod
    def coerce(x) -> "LaurentRational":
        if isinstance(x, LaurentRational):
            return x
        if isinstance(x, int):
            return LaurentRational.from_int(x)
        if isinstance(x, Fraction):
            return LaurentRational.from_fraction(x)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot convert {type(x).__name__} to LaurentRational")

    # -- predicates -------------------------------------------------------
    def __bool__(self) -> bool:
        return self is not ZERO

    def is_laurent_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, LaurentRational):
            try:
                other = LaurentRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self.shift == other.shift and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shift, tuple(int(c) for c in self.num.coeffs()),
                               tuple(int(c) for c in self.den.coeffs())))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def __neg__(self) -> "LaurentRational":
        if self is ZERO:
            return ZERO
        return LaurentRational(self.shift, -self.num, self.den)

    def __add__(self, other) -> "LaurentRational":
        if not isinstance(other, LaurentRational):
            other = LaurentRational.coerce(other)
        if self is ZERO:
            return other
        if other is ZERO:
            return self
        s1, s2 = self.shift, other.shift
        m = min(s1, s2)
        n1 = self.num.left_shift(s1 - m) if s1 > m else self.num
        n2 = other.num.left_shift(s2 - m) if s2 > m else other.num
        if self.den == other.den:
            return LaurentRational.canon(m, n1 + n2, self.den)
        return LaurentRational.canon(m, n1 * other.den + n2 * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentRational":
        if not isinstance(other, LaurentRational):
            other = LaurentRational.coerce(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentRational":
        return LaurentRational.coerce(other) - self

    def __mul__(self, other) -> "LaurentRational":
        if not isinstance(other, LaurentRational):
            other = LaurentRational.coerce(other)
        if self is ZERO or other is ZERO:
            return ZERO
        shift = self.shift + other.shift
        d1, d2 = self.den, other.den
        if d1.is_one() and d2.is_one():
            # constant terms stay nonzero, so the product is already canonical
            return LaurentRational(shift, self.num * other.num, _P_ONE)
        n1, n2 = self.num, other.num
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 // g, d2 // g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 // g, d1 // g
        num, den = n1 * n2, d1 * d2
        if den[0] < 0:
            num, den = -num, -den
        return LaurentRational(shift, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentRational":
        if self is ZERO:
            raise ZeroDivisionError("division by zero in Q(q)")
        num, den = self.den, self.num
        if den[0] < 0:
            num, den = -num, -den
        return LaurentRational(-self.shift, num, den)

    def __truediv__(self, other) -> "LaurentRational":
        if not isinstance(other, LaurentRational):
            other = LaurentRational.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "LaurentRational":
        return LaurentRational.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "LaurentRational":
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return ONE
        if self.den.is_one():
            return LaurentRational(self.shift * e, self.num ** e, _P_ONE)
        num, den = self.num ** e, self.den ** e
        return LaurentRational(self.shift * e, num, den)

    # -- evaluation -------------------------------------------------------
    def evaluate(self, q0) -> Fraction:
        """Plain rational evaluation; no genericity checks (see ``specialize``)."""
        x = flint.fmpq(Fraction(q0).numerator, Fraction(q0).denominator)
        d = self.den(x)
        if d == 0:
            raise PoleError(f"denominator vanishes at q = {q0}")
        val = self.num(x) / d
        if self.shift:
            if x == 0:
                raise PoleError("q = 0")
            val = val * x ** self.shift
        return Fraction(int(val.p), int(val.q))

    # -- printing ---------------------------------------------------------
    def __str__(self) -> str:
        top = _format_laurent(self.shift, self.num)
        if self.den.is_one():
            return top
        return f"{top} / {_format_laurent(0, self.den)}"

    def __repr__(self) -> str:
        return f"LaurentRational({str(self)!r})"


def _format_laurent(shift: int, poly: flint.fmpz_poly) -> str:
    coeffs = [int(c) for c in poly.coeffs()]
    terms = [(shift + i, c) for i, c in enumerate(coeffs) if c]
    if not terms:
        return "0"
    out = []
    for e, c in reversed(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not out:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TERM = re.compile(r"([+-]?)(\d*)\*?(q(?:\^(-?\d+))?)?")


def _parse_laurent(text: str) -> LaurentRational:
    s = text.replace(" ", "")
    while s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty scalar")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r} at position {pos}")
        sign, digits, mono, exp = m.groups()
        if not digits and not mono:
            raise ValueError(f"dangling sign in {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = 0 if not mono else (int(exp) if exp is not None else 1)
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"unexpected {s[pos]!r} in {text!r}")
    return LaurentRational.laurent(coeffs)


def parse_scalar(text: str) -> LaurentRational:
    """Inverse of ``str``: ``"2*q^3 - 1 + q^-2"`` or ``"P / Q"``."""
    parts = text.split(" / ")
    if len(parts) == 1 and "/" in text:
        parts = text.split("/")
    if len(parts) == 1:
        return _parse_laurent(parts[0])
    if len(parts) != 2:
        raise ValueError(f"cannot parse scalar {text!r}")
    return _parse_laurent(parts[0]) / _parse_laurent(parts[1])


ZERO = LaurentRational(0, _P_ZERO, _P_ONE)
ONE = LaurentRational(0, _P_ONE, _P_ONE)
q = LaurentRational(1, _P_ONE, _P_ONE)
lam = q - q.inverse()


def qpow(e: int) -> LaurentRational:
    return LaurentRational(e, _P_ONE, _P_ONE)


def q_int(k: int) -> LaurentRational:
    """The q-number (q^k - q^-k)/(q - q^-1); zero for k == 0."""
    if k < 0:
        raise ValueError("q_int expects k >= 0")
    if k == 0:
        return ZERO
    # q^(k-1) + q^(k-3) + ... + q^(1-k)
    dense = [0] * (2 * k - 1)
    for i in range(0, 2 * k - 1, 2):
        dense[i] = 1
    return LaurentRational(1 - k, _Poly(dense), _P_ONE)


def specialize(s: LaurentRational, q0, classical_limit: bool = False) -> Fraction:
    """Evaluate ``s`` at a rational point ``q0``.

    ``q0`` must be generic: for rational values that means ``q0`` is not 0, 1
    or -1. The points +-1 are admitted only with ``classical_limit=True``.
    """
    q0 = Fraction(q0)
    if q0 == 0:
        raise GenericityError("q = 0 is not admissible")
    if q0 in (1, -1) and not classical_limit:
        raise GenericityError(f"q = {q0} is a root of unity; pass classical_limit=True")
    return LaurentRational.coerce(s).evaluate(q0)


def _combine(terms: list[tuple[int, flint.fmpz_poly, flint.fmpz_poly]]) -> LaurentRational:
    """Sum of ``q**s * N / D`` triples with a single canonicalization per denominator."""
    if not terms:
        return ZERO
    groups: list[list] = []  # [den, [(shift, num), ...]]
    for s, n, d in terms:
        for g in groups:
            if g[0] == d:
                g[1].append((s, n))
                break
        else:
            groups.append([d, [(s, n)]])
    total = ZERO
    for d, items in groups:
        m = min(s for s, _ in items)
        acc = _P_ZERO
        for s, n in items:
            acc = acc + (n.left_shift(s - m) if s > m else n)
        total = total + LaurentRational.canon(m, acc, d)
    return total


def dot(pairs: Iterable[tuple[LaurentRational, LaurentRational]]) -> LaurentRational:
    """``sum(a * b for a, b in pairs)`` without intermediate gcds."""
    terms = []
    for a, b in pairs:
        if a is ZERO or b is ZERO:
            continue
        da, db = a.den, b.den
        if da.is_one():
            d = db
        elif db.is_one():
            d = da
        else:
            d = da * db
        terms.append((a.shift + b.shift, a.num * b.num, d))
    if len(terms) == 1:
        s, n, d = terms[0]
        return LaurentRational.canon(s, n, d)
    return _combine(terms)


def lsum(values: Iterable[LaurentRational]) -> LaurentRational:
    return _combine([(v.shift, v.num, v.den) for v in map(LaurentRational.coerce, values)
                     if v is not ZERO])
