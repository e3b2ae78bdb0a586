"""Exact scalars: rationals and elements of a real quadratic field Q(sqrt(d)).

A Scalar is a + b*sqrt(d) with a, b rational and d a square-free
non-negative integer.  d == 0 encodes a plain rational (b is forced to 0).
Two scalars from distinct irrational fields never interoperate; mixing
them raises FieldMismatch.  All comparisons are decided exactly from the
signs of a, b and a^2 - b^2 d, never through floating point.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, InputError


def squarefree_split(n: int) -> tuple[int, int]:
    """Write n = s^2 * d with d square-free; return (s, d)."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1):
        return (1, n)
    s, d, p = 1, 1, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    return (s, d * n)


class Scalar:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if d < 0:
            raise ValueError("d must be non-negative")
        if d in (0, 1):
            a += b * d  # sqrt(0)=0, sqrt(1)=1
            b = Fraction(0)
            d = 0
        elif b == 0:
            d = 0
        else:
            s, d0 = squarefree_split(d)
            if d0 in (0, 1):
                a += b * s * d0
                b = Fraction(0)
                d = 0
            else:
                b *= s
                d = d0
        self.a, self.b, self.d = a, b, d

    @staticmethod
    def sqrt_int(n: int) -> "Scalar":
        """Exact sqrt of a non-negative integer."""
        s, d = squarefree_split(int(n))
        if d in (0, 1):
            return Scalar(s * d)
        return Scalar(0, s, d)

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    def _join(self, other: "Scalar") -> int:
        """Common field discriminant, or raise FieldMismatch."""
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise FieldMismatch(f"cannot mix Q(sqrt({self.d})) and Q(sqrt({other.d}))")

    @staticmethod
    def _coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar(x)

    def __add__(self, other):
        o = Scalar._coerce(other)
        d = self._join(o)
        return Scalar(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-Scalar._coerce(other))

    def __rsub__(self, other):
        return Scalar._coerce(other) + (-self)

    def __mul__(self, other):
        o = Scalar._coerce(other)
        d = self._join(o)
        return Scalar(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        n = self.a * self.a - self.b * self.b * self.d
        return Scalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        return self * Scalar._coerce(other).inverse()

    def __rtruediv__(self, other):
        return Scalar._coerce(other) * self.inverse()

    def conjugate(self) -> "Scalar":
        """Galois conjugate a + b sqrt(d) -> a - b sqrt(d)."""
        return Scalar(self.a, -self.b, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sign(self) -> int:
        """Exact sign of the real number a + b sqrt(d)."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        sa = 1 if self.a > 0 else -1
        sb = 1 if self.b > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: sign decided by |a| vs |b|sqrt(d), i.e. a^2 - b^2 d
        n = self.a * self.a - self.b * self.b * self.d
        if n == 0:
            return 0
        return sa if n > 0 else sb

    def __eq__(self, other):
        try:
            o = Scalar._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.d == o.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def floor(self) -> int:
        if self.b == 0:
            return self.a.numerator // self.a.denominator
        # seed from float, then correct exactly
        n = math.floor(float(self))
        while Scalar(n + 1) <= self:
            n += 1
        while Scalar(n) > self:
            n -= 1
        return n

    def ceil(self) -> int:
        return -((-self).floor())

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        bt = f"{self.b}*sqrt({self.d})"
        if self.a == 0:
            return bt
        sign = "+" if self.b > 0 else "-"
        babs = abs(self.b)
        bt = f"sqrt({self.d})" if babs == 1 else f"{babs}*sqrt({self.d})"
        return f"{self.a}{sign}{bt}"

    # -- JSON wire format: {"a": "p/q", "b": "r/s", "d": n} --

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "d": self.d}

    @staticmethod
    def from_json(obj) -> "Scalar":
        if isinstance(obj, dict):
            return Scalar(Fraction(obj["a"]), Fraction(obj.get("b", 0)), obj.get("d", 0))
        if isinstance(obj, (int, str)):
            return Scalar(Fraction(obj))
        raise InputError(f"not a scalar: {obj!r}")


ZERO = Scalar(0)
ONE = Scalar(1)

_TOKEN = re.compile(r"\s*(sqrt\(\d+\)|\d+/\d+|\d+|[+\-*()])")


def parse_scalar(text: str) -> Scalar:
    """Parse the exact-literal grammar: p/q, sqrt(d), and +,-,* combinations.

    Decimal literals are rejected on purpose; parenthesized subexpressions
    are allowed.  Examples: "7/5", "sqrt(2)", "1+sqrt(2)", "3/2*sqrt(5)-1".
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise InputError(f"bad scalar literal at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append("$")
    idx = [0]

    def peek():
        return tokens[idx[0]]

    def eat(tok=None):
        t = tokens[idx[0]]
        if tok is not None and t != tok:
            raise InputError(f"expected {tok!r}, found {t!r} in {text!r}")
        idx[0] += 1
        return t

    def atom() -> Scalar:
        t = peek()
        if t == "(":
            eat()
            v = expr()
            eat(")")
            return v
        if t.startswith("sqrt("):
            eat()
            return Scalar.sqrt_int(int(t[5:-1]))
        if "/" in t:
            eat()
            return Scalar(Fraction(t))
        if t.isdigit():
            eat()
            return Scalar(int(t))
        raise InputError(f"bad token {t!r} in scalar literal {text!r}")

    def term() -> Scalar:
        v = atom()
        while peek() == "*":
            eat()
            v = v * atom()
        return v

    def expr() -> Scalar:
        neg = False
        while peek() in ("+", "-"):
            if eat() == "-":
                neg = not neg
        v = term()
        if neg:
            v = -v
        while peek() in ("+", "-"):
            op = eat()
            w = term()
            v = v - w if op == "-" else v + w
        return v

    v = expr()
    if peek() != "$":
        raise InputError(f"trailing tokens in scalar literal {text!r}")
    return v


def common_field(values) -> int:
    """Discriminant shared by an iterable of Scalars (FieldMismatch if mixed)."""
    d = 0
    for v in values:
        if v.d != 0:
            if d == 0:
                d = v.d
            elif d != v.d:
                raise FieldMismatch(f"mixed fields sqrt({d}) and sqrt({v.d})")
    return d
