"""Exact integer polynomial arithmetic and characteristic-polynomial values.

Polynomials are lists of Python ints in ascending order: ``p[i]`` is the
coefficient of ``t^i``.  ``CharPoly`` wraps the coefficient vector of a monic
characteristic polynomial; it is the exact cospectrality certificate, so its
JSON form keeps coefficients as decimal strings (arbitrary precision survives
JSON round trips).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DivisibilityError


@dataclass(frozen=True)
class CharPoly:
    """Monic integer characteristic polynomial; coeffs[i] multiplies t^i."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, t0: int) -> int:
        """Exact value at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    def to_json_list(self) -> list:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json_list(cls, items: Sequence[str]) -> "CharPoly":
        return cls(tuple(int(s) for s in items))

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        head = terms[0].replace("+ ", "").replace("- ", "-")
        return " ".join([head] + terms[1:])


# ---------------------------------------------------------------------------
# plain list-of-int polynomial helpers (ascending coefficients)
# ---------------------------------------------------------------------------


def poly_trim(p: Sequence[int]) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_equal(p: Sequence[int], q: Sequence[int]) -> bool:
    return poly_trim(p) == poly_trim(q)


def poly_add(p: Sequence[int], q: Sequence[int]) -> list:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_scale(p: Sequence[int], c: int) -> list:
    return poly_trim([c * x for x in p])


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list:
    p, q = poly_trim(p), poly_trim(q)
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_pow(p: Sequence[int], e: int) -> list:
    if e < 0:
        raise ValueError("negative exponent")
    out = [1]
    base = poly_trim(p)
    while e:
        if e & 1:
            out = poly_mul(out, base)
        base = poly_mul(base, base)
        e >>= 1
    return out


def poly_divide_exact(p: Sequence[int], q: Sequence[int]) -> list:
    """Quotient p/q when q divides p exactly over Z, else DivisibilityError."""
    p, q = poly_trim(p), poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return []
    if len(p) < len(q):
        raise DivisibilityError("degree of dividend below divisor")
    rem = list(p)
    lead = q[-1]
    quot = [0] * (len(p) - len(q) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(q) - 1]
        if c % lead != 0:
            raise DivisibilityError("non-exact polynomial division")
        quot[i] = c // lead
        if quot[i]:
            for j, b in enumerate(q):
                rem[i + j] -= quot[i] * b
    if any(rem):
        raise DivisibilityError("non-exact polynomial division (remainder != 0)")
    return poly_trim(quot)


def poly_derivative(p: Sequence[int]) -> list:
    return poly_trim([i * c for i, c in enumerate(p)][1:])


def poly_content(p: Sequence[int]) -> int:
    c = 0
    for x in p:
        c = math.gcd(c, x)
    return c


def poly_primitive(p: Sequence[int]) -> list:
    p = poly_trim(p)
    if not p:
        return []
    c = poly_content(p)
    if p[-1] < 0:
        c = -c
    return [x // c for x in p]


def poly_gcd(p: Sequence[int], q: Sequence[int]) -> list:
    """Primitive gcd over Z via the primitive pseudo-remainder sequence."""
    a, b = poly_trim(p), poly_trim(q)
    if not a:
        return poly_primitive(b)
    if not b:
        return poly_primitive(a)
    if len(a) < len(b):
        a, b = b, a
    a, b = poly_primitive(a), poly_primitive(b)
    while True:
        delta = len(a) - len(b)
        # pseudo-remainder of lc(b)^(delta+1) * a by b
        rem = [x * b[-1] ** (delta + 1) for x in a]
        for i in range(len(rem) - len(b), -1, -1):
            factor, r = divmod(rem[i + len(b) - 1], b[-1])
            assert r == 0
            if factor:
                for j, c in enumerate(b):
                    rem[i + j] -= factor * c
        rem = poly_trim(rem)
        if not rem:
            return b
        a, b = b, poly_primitive(rem)
        if len(b) == 1:
            return [1]


def squarefree_decomposition(p: Sequence[int]) -> list:
    """Yun's algorithm: [(factor, multiplicity)] with factors squarefree.

    The product of factor^multiplicity recovers the primitive part of p.
    """
    p = poly_primitive(p)
    if len(p) <= 1:
        return []
    dp = poly_derivative(p)
    g = poly_gcd(p, dp)
    c = poly_divide_exact(p, g)
    d = poly_add(poly_divide_exact(dp, g), poly_scale(poly_derivative(c), -1))
    out = []
    mult = 1
    while True:
        if len(c) == 1:
            break
        a = poly_gcd(c, d)
        if len(a) > 1:
            out.append((a, mult))
        c = poly_divide_exact(c, a)
        d = poly_add(poly_divide_exact(d, a), poly_scale(poly_derivative(c), -1))
        mult += 1
    return out


def poly_roots(p: Sequence[int]) -> list:
    """Numeric root multiset of an integer polynomial.

    High-multiplicity roots make direct floating-point root extraction
    hopeless (perturbations of size eps scatter an m-fold root over a disc of
    radius eps^(1/m)), so the multiplicity structure is first resolved
    exactly by a squarefree decomposition; numpy then only ever sees simple,
    well-separated roots.
    """
    p = poly_trim(p)
    if len(p) <= 1:
        return []
    roots: list = []
    for factor, mult in squarefree_decomposition(p):
        vals = np.roots(np.array(factor[::-1], dtype=float))
        for v in vals:
            roots.extend([complex(v)] * mult)
    return roots
