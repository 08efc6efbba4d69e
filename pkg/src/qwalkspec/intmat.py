"""Dense exact integer matrices and division-free characteristic polynomials.

Matrices are numpy arrays with ``dtype=object`` holding Python ints, so all
arithmetic is arbitrary precision.  ``mat_mul`` transparently drops to an
int64 kernel when an a-priori bound proves the product cannot overflow, which
keeps the sign-exact pipeline fast without ever risking silent wraparound.

Two exact characteristic-polynomial backends are provided:

* ``berkowitz_charpoly`` -- the division-free Berkowitz algorithm over the
  integers, O(n^4).  Reference implementation, fine up to dimension ~40.
* ``modular_charpoly``  -- Hessenberg reduction + the Hessenberg determinant
  recurrence modulo a batch of word-sized primes, recombined by CRT.  The
  prime batch is sized from a rigorous Hadamard-style coefficient bound, so
  the result is exact, not probabilistic.  This is the fast path for the
  96x96 arc matrices that dominate corpus experiments.

``char_poly`` dispatches between the two; they are cross-checked in tests.
"""

from __future__ import annotations

import math
from operator import index
from typing import Iterable

import numpy as np

from .polynomials import CharPoly

_INT64_SAFE = 1 << 62


def int_matrix(rows: Iterable[Iterable[int]]) -> np.ndarray:
    """Build an exact integer matrix (dtype=object) from nested iterables.

    Entries must be integral (floats are rejected, not truncated).
    """
    data = [[index(x) for x in row] for row in rows]
    m = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        if len(row) != m.shape[1]:
            raise ValueError("ragged rows")
        m[i, :] = row
    return m


def int_zeros(rows: int, cols: int) -> np.ndarray:
    m = np.empty((rows, cols), dtype=object)
    m[:, :] = 0
    return m


def int_eye(n: int) -> np.ndarray:
    m = int_zeros(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def _as_object(a: np.ndarray) -> np.ndarray:
    """int64 array -> object array of Python ints."""
    return np.array(a.tolist(), dtype=object).reshape(a.shape)


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(x) for x in a.flat))


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact matrix product."""
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} x {b.shape}")
    inner = a.shape[1]
    if inner == 0:
        return int_zeros(a.shape[0], b.shape[1])
    bound = inner * _max_abs(a) * _max_abs(b)
    if bound < _INT64_SAFE:
        a64 = np.array(a.tolist(), dtype=np.int64).reshape(a.shape)
        b64 = np.array(b.tolist(), dtype=np.int64).reshape(b.shape)
        return _as_object(a64 @ b64)
    return np.dot(a, b)


def mat_pow(a: np.ndarray, e: int) -> np.ndarray:
    """Exact e-th power of a square matrix, e >= 1."""
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix not square: {a.shape}")
    if e < 1:
        raise ValueError("exponent must be a positive integer")
    out = a
    for _ in range(e - 1):
        out = mat_mul(out, a)
    return out


def positive_support(m: np.ndarray) -> np.ndarray:
    """0/1 matrix marking the strictly positive entries of m."""
    out = np.empty(m.shape, dtype=object)
    flat_in = m.flat
    flat_out = out.flat
    for i in range(m.size):
        flat_out[i] = 1 if flat_in[i] > 0 else 0
    return out


def mat_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool(np.array_equal(a, b))


def mat_trace(a: np.ndarray) -> int:
    return int(sum(a[i, i] for i in range(min(a.shape))))


def format_matrix(a: np.ndarray) -> str:
    """Debug text format: one row per line, entries space-separated."""
    return "\n".join(" ".join(str(x) for x in row) for row in a)


# ---------------------------------------------------------------------------
# Berkowitz (division-free, arbitrary precision)
# ---------------------------------------------------------------------------


def berkowitz_charpoly(m: np.ndarray) -> CharPoly:
    """char poly det(tI - M) by the Berkowitz algorithm, exact over Z."""
    n = _require_square(m)
    if n == 0:
        return CharPoly((1,))
    a = m if m.dtype == object else _as_object(m)
    # c holds the coefficients of det(tI - leading submatrix), descending.
    c = [1, -int(a[0, 0])]
    for i in range(1, n):
        row = a[i, :i]
        col = a[:i, i]
        sub = a[:i, :i]
        s = [1, -int(a[i, i])]
        v = col
        for _ in range(i):
            s.append(-int(np.dot(row, v)))
            v = np.dot(sub, v)
        # apply the lower-triangular Toeplitz matrix built from s
        cn = [0] * (i + 2)
        for q, cq in enumerate(c):
            for d, sd in enumerate(s):
                p = q + d
                if p < i + 2:
                    cn[p] += sd * cq
        c = cn
    return CharPoly(tuple(c[::-1]))


# ---------------------------------------------------------------------------
# Bareiss fraction-free determinant (independent cross-check oracle)
# ---------------------------------------------------------------------------


def bareiss_determinant(m: np.ndarray) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = _require_square(m)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Modular charpoly: Hessenberg mod p + CRT, exact via Hadamard bound
# ---------------------------------------------------------------------------

_PRIME_CEILING = (1 << 26) - 1  # keeps all int64 dot products far from overflow
_primes_cache: list = []


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 23, 29, 31, 37):
        x = pow(base, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _primes(count: int) -> list:
    x = _primes_cache[-1] - 2 if _primes_cache else _PRIME_CEILING
    while len(_primes_cache) < count:
        if _is_prime(x):
            _primes_cache.append(x)
        x -= 2
    return _primes_cache[:count]


def _coefficient_bound_bits(m: np.ndarray) -> float:
    """log2 bound on |coefficients| of det(tI - M).

    The coefficient of t^(n-i) is (up to sign) the sum of the C(n, i)
    principal i x i minors; each minor is Hadamard-bounded by the product of
    the i largest row norms of M.
    """
    n = m.shape[0]
    row_sq = [max(1, sum(int(x) * int(x) for x in m[i, :])) for i in range(n)]
    half_logs = sorted((0.5 * math.log2(r) for r in row_sq), reverse=True)
    acc = 0.0
    best = 0.0
    for i in range(1, n + 1):
        acc += half_logs[i - 1]
        log_binom = (
            math.lgamma(n + 1) - math.lgamma(i + 1) - math.lgamma(n - i + 1)
        ) / math.log(2)
        best = max(best, log_binom + acc)
    return best


def _hessenberg_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Reduce to upper Hessenberg form mod p by a similarity transform."""
    h = np.mod(a, p).astype(np.int64)
    n = h.shape[0]
    for j in range(n - 2):
        col = h[j + 1 :, j]
        nz = np.nonzero(col)[0]
        if len(nz) == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[j + 1, piv], :] = h[[piv, j + 1], :]
            h[:, [j + 1, piv]] = h[:, [piv, j + 1]]
        inv = pow(int(h[j + 1, j]), p - 2, p)
        if j + 2 < n:
            mults = (h[j + 2 :, j] * inv) % p
            h[j + 2 :, :] = (h[j + 2 :, :] - np.outer(mults, h[j + 1, :])) % p
            h[:, j + 1] = (h[:, j + 1] + h[:, j + 2 :] @ mults) % p
    return h


def _charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Coefficients (ascending) of det(tI - A) mod p."""
    h = _hessenberg_mod(a, p)
    n = h.shape[0]
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    beta = np.zeros(0, dtype=np.int64)  # running subdiagonal products
    for i in range(1, n + 1):
        prev = polys[i - 1, :i]
        cur = np.zeros(i + 1, dtype=np.int64)
        cur[1:] = prev
        cur[:i] = (cur[:i] - h[i - 1, i - 1] * prev) % p
        if i >= 2:
            sub = int(h[i - 1, i - 2])
            grown = np.empty(i - 1, dtype=np.int64)
            grown[0] = sub
            if i > 2:
                grown[1:] = (sub * beta) % p
            beta = grown
            # weight for p_{i-1-j} is H[i-1-j, i-1] * prod of subdiagonals
            w = (h[i - 2 :: -1, i - 1] * beta) % p
            contrib = (w @ polys[i - 2 :: -1, :i]) % p
            cur[:i] = (cur[:i] - contrib) % p
        polys[i, : i + 1] = cur % p
    return polys[n]


def modular_charpoly(m: np.ndarray) -> CharPoly:
    """char poly det(tI - M) via CRT over word-sized primes, exact."""
    n = _require_square(m)
    if n == 0:
        return CharPoly((1,))
    bits = _coefficient_bound_bits(m) + 12  # guard bits
    primes = []
    total = 0.0
    for p in _primes(max(1, int(bits / 25) + 2)):
        primes.append(p)
        total += math.log2(p)
        if total > bits + 1:
            break
    while total <= bits + 1:
        p = _primes(len(primes) + 1)[-1]
        primes.append(p)
        total += math.log2(p)

    big = _max_abs(m) >= _INT64_SAFE
    if big:
        ints = [[int(x) for x in row] for row in m]
    else:
        a64 = np.array(m.tolist(), dtype=np.int64).reshape(m.shape)

    residues = []
    for p in primes:
        if big:
            ap = np.array([[x % p for x in row] for row in ints], dtype=np.int64)
        else:
            ap = a64 % p
        residues.append(_charpoly_mod(ap, p))

    coeffs = []
    for idx in range(n + 1):
        x, mod = int(residues[0][idx]), primes[0]
        for j in range(1, len(primes)):
            pj = primes[j]
            inv = pow(mod % pj, pj - 2, pj)
            x = x + mod * (((int(residues[j][idx]) - x) * inv) % pj)
            mod *= pj
        x %= mod
        if x > mod // 2:
            x -= mod
        coeffs.append(x)
    return CharPoly(tuple(coeffs))


_AUTO_MODULAR_DIM = 24


def char_poly(m: np.ndarray, method: str = "auto") -> CharPoly:
    """Exact characteristic polynomial det(tI - M), monic, integer coefficients.

    method: "berkowitz", "modular", or "auto" (Berkowitz for small matrices,
    the modular CRT backend above dimension 24; both are exact).
    """
    n = _require_square(m)
    if method == "berkowitz":
        return berkowitz_charpoly(m)
    if method == "modular":
        return modular_charpoly(m)
    if method != "auto":
        raise ValueError(f"unknown charpoly method {method!r}")
    if n <= _AUTO_MODULAR_DIM:
        return berkowitz_charpoly(m)
    return modular_charpoly(m)


def _require_square(m: np.ndarray) -> int:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix not square: {m.shape}")
    return m.shape[0]
