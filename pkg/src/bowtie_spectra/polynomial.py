"""Exact univariate polynomials over the integers / rationals.

Coefficients are stored in ascending degree order as ``int`` or
``Fraction``; trailing zeros are stripped so ``coeffs[-1]`` is the
leading coefficient (the zero polynomial has no coefficients).
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_norm(c) for c in coeffs]
        for c in cs:
            if not isinstance(c, (int, Fraction)):
                raise TypeError(f"exact coefficients required, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Number, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @classmethod
    def from_descending(cls, coeffs: Sequence[Number]) -> "Polynomial":
        return cls(list(reversed(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = "x" if k == 1 else f"x^{k}" if k else ""
            if a != 1 or not body:
                body = f"{a}{'*' if body else ''}{body}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, b in terms[1:]:
            out += f" {s} {b}"
        return out

    # arithmetic ------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial([Fraction(other)])
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return Polynomial([p + q for p, q in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Euclidean division over the rationals."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        d = divisor.degree
        lead = Fraction(divisor.lead)
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - d] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[k - d + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:d] if d > 0 else [])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """True iff ``self`` divides ``other`` exactly."""
        return other.divmod(self)[1].is_zero()

    def exact_div_x(self) -> "Polynomial":
        if self.coeffs and self.coeffs[0] != 0:
            raise ArithmeticError("polynomial is not divisible by x")
        return Polynomial(self.coeffs[1:])

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = Fraction(self.lead)
        return Polynomial([Fraction(c) / lead for c in self.coeffs])

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree(self) -> "Polynomial":
        """Product of the distinct irreducible factors (monic)."""
        g = self.gcd(self.derivative())
        return (self // g).monic() if g.degree > 0 else self.monic()

    # evaluation --------------------------------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def descending(self) -> list[Number]:
        return list(reversed(self.coeffs))

    def to_strings(self) -> list[str]:
        """Descending coefficients as decimal strings (JSON friendly)."""
        return [str(c) for c in self.descending()]


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign_changes(seq: Sequence[Polynomial], x: Number) -> int:
    changes = 0
    last = 0
    for q in seq:
        v = q(x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            changes += 1
        last = s
    return changes


def _sign_changes_at_inf(seq: Sequence[Polynomial]) -> int:
    changes = 0
    last = 0
    for q in seq:
        if q.is_zero():
            continue
        s = 1 if q.lead > 0 else -1
        if last and s != last:
            changes += 1
        last = s
    return changes


def count_roots_above(p: Polynomial, x: Number, seq: Sequence[Polynomial] | None = None) -> int:
    """Number of distinct real roots of ``p`` in ``(x, inf)``."""
    seq = sturm_sequence(p.squarefree()) if seq is None else seq
    return _sign_changes(seq, x) - _sign_changes_at_inf(seq)


def cauchy_bound(p: Polynomial) -> Fraction:
    """All complex roots satisfy ``|z| < 1 + max |c_i / c_d|``."""
    lead = Fraction(p.lead)
    return 1 + max((abs(Fraction(c) / lead) for c in p.coeffs[:-1]), default=Fraction(0))
