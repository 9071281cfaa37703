"""Exact integer polynomial arithmetic.

A polynomial is a dense list of arbitrary-precision integer coefficients in
ascending degree order: ``IntPoly((1, 0, -2))`` is ``1 - 2x^2``.  The zero
polynomial is the empty tuple and its degree is ``float("-inf")``, so degree
comparisons behave correctly without a sentinel integer colliding with
degree 0.

The module also provides the characteristic polynomials ``det(A - xI)`` of
path graphs (:func:`path_charpoly`), built from the three-term recurrence
``q_n = -x * q_{n-1} - q_{n-2}``.  Under this determinant convention the
leading coefficient of the n-vertex path polynomial is ``(-1)**n``, not +1;
that fact is asserted on every cached value rather than assumed.
"""
from __future__ import annotations

import enum
import json
import math
import threading
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

NEG_INFINITY = float("-inf")


class Parity(enum.Enum):
    """Coefficient-support classification of a polynomial.

    EVEN means every odd-degree coefficient vanishes, ODD the reverse; the
    zero polynomial counts as EVEN by convention.
    """

    EVEN = "even"
    ODD = "odd"
    NEITHER = "neither"


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; ``coeffs[i]`` multiplies ``x**i``.

    Always normalized: the highest stored coefficient is nonzero, and the
    zero polynomial stores no coefficients at all.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @staticmethod
    def monomial(degree: int, coefficient: int = 1) -> "IntPoly":
        """``coefficient * x**degree``."""
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        return IntPoly((0,) * degree + (coefficient,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def leading_coefficient(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return IntPoly(tuple(summed))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "IntPoly | int") -> "IntPoly":
        return (-self) + other

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        if exponent < 0:
            raise ValueError("polynomial exponent must be >= 0")
        result = ONE
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Evaluate at a scalar (int, float, ...) by Horner's rule."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)


ZERO = IntPoly(())
ONE = IntPoly((1,))
X = IntPoly((0, 1))

_MINUS_X = IntPoly((0, -1))

_charpoly_lock = threading.Lock()
_charpoly_cache: list[IntPoly] = []


def path_charpoly(n: int) -> IntPoly:
    """Characteristic polynomial ``det(A - xI)`` of the path on n vertices.

    The sequence starts from the empty-matrix determinant (n=0 gives 1,
    n=1 gives -x) and extends by ``q_n = -x * q_{n-1} - q_{n-2}``.  Values
    are cached under a lock, so concurrent callers are safe.
    """
    if n < 0:
        raise ValueError(f"vertex count must be >= 0, got {n}")
    with _charpoly_lock:
        if not _charpoly_cache:
            _charpoly_cache.append(ONE)
            _charpoly_cache.append(_MINUS_X)
        while len(_charpoly_cache) <= n:
            k = len(_charpoly_cache)
            q = _MINUS_X * _charpoly_cache[k - 1] - _charpoly_cache[k - 2]
            assert q.degree == k and q.leading_coefficient == (-1) ** k
            _charpoly_cache.append(q)
        return _charpoly_cache[n]


def parity(p: IntPoly) -> Parity:
    """Classify p as EVEN, ODD, or NEITHER by its coefficient support."""
    even = all(c == 0 for c in p.coeffs[1::2])
    odd = all(c == 0 for c in p.coeffs[0::2])
    if even:
        return Parity.EVEN
    if odd:
        return Parity.ODD
    return Parity.NEITHER


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact remainder of a modulo b when b has a unit leading coefficient.

    Because lc(b) is +1 or -1, schoolbook division stays in the integers and
    the remainder r is the unique polynomial with deg r < deg b and
    a = q*b + r over the integers.  Divisibility of a by b is then just
    ``pseudo_rem(a, b).is_zero``.
    """
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if b.leading_coefficient not in (1, -1):
        raise ValueError(
            f"divisor leading coefficient must be +1 or -1, got {b.leading_coefficient}"
        )
    db = len(b.coeffs) - 1
    lead_inv = b.leading_coefficient  # its own inverse
    r = list(a.coeffs)
    while r and len(r) - 1 >= db:
        if r[-1] == 0:
            r.pop()
            continue
        factor = r[-1] * lead_inv
        shift = len(r) - 1 - db
        for i, c in enumerate(b.coeffs):
            r[shift + i] -= factor * c
        r.pop()  # top coefficient cancelled exactly
    return IntPoly(tuple(r))


def _content(coeffs: Sequence[int]) -> int:
    return reduce(math.gcd, coeffs)


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of lc(b)**(deg a - deg b + 1) * a modulo b.

    Coefficient lists, ascending, a and b nonzero with deg a >= deg b.
    """
    db = len(b) - 1
    lb = b[-1]
    scale = len(a) - 1 - db + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        if r[-1] == 0:
            r.pop()
            continue
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[shift + i] -= lead * c
        r.pop()
        scale -= 1
    while r and r[-1] == 0:
        r.pop()
    factor = lb**scale
    return [c * factor for c in r]


def _exact_div(values: Iterable[int], divisor: int) -> list[int]:
    out = []
    for v in values:
        q, rem = divmod(v, divisor)
        if rem:
            raise ArithmeticError(
                f"inexact division {v} / {divisor} in the remainder sequence"
            )
        out.append(q)
    return out


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant of two nonzero integer polynomials.

    Res(f, g) = lc(f)**deg(g) * product of g over the roots of f, computed
    exactly over the integers by the subresultant polynomial remainder
    sequence (no root is ever evaluated).  Zero exactly when f and g share
    a root.  The Sylvester-determinant route lives in exact_linalg as an
    independent cross-check.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant requires nonzero polynomials")
    a, b = f, g
    sign = 1
    if a.degree < b.degree:
        if a.degree % 2 and b.degree % 2:
            sign = -sign
        a, b = b, a
    if b.degree == 0:
        return sign * b.coeffs[0] ** int(a.degree)

    ca = _content(a.coeffs)
    cb = _content(b.coeffs)
    acoeffs = [c // ca for c in a.coeffs]
    bcoeffs = [c // cb for c in b.coeffs]
    factor = ca ** (len(bcoeffs) - 1) * cb ** (len(acoeffs) - 1)

    g_ = 1
    h = 1
    while True:
        da = len(acoeffs) - 1
        db = len(bcoeffs) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        rem = _prem(acoeffs, bcoeffs)
        if not rem:
            return 0  # common factor
        acoeffs = bcoeffs
        bcoeffs = _exact_div(rem, g_ * h**delta)
        g_ = acoeffs[-1]
        if delta:
            h = _exact_div([g_**delta], h ** (delta - 1))[0]
        if len(bcoeffs) - 1 == 0:
            break

    da = len(acoeffs) - 1
    tail = _exact_div([bcoeffs[-1] ** da], h ** (da - 1))[0]
    return sign * factor * tail


def poly_to_json(p: IntPoly) -> str:
    """Ascending coefficients as a JSON array of decimal strings.

    Strings, not numbers, so arbitrarily large coefficients survive any
    JSON reader bit-exactly.  The zero polynomial serializes as ``[]``.
    """
    return json.dumps([str(c) for c in p.coeffs])


def poly_from_json(text: str) -> IntPoly:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("polynomial JSON must be an array of decimal strings")
    return IntPoly(tuple(int(item) for item in data))
