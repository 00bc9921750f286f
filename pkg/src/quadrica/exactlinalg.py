"""Exact dense linear algebra over a word-size prime field or over the integers.

Prime-field matrices are ``numpy.int64`` arrays with entries in ``[0, p)``.
Every product of two residues is below ``2**62`` so row updates never
overflow.  Passing ``p=None`` switches to exact integer mode: the matrix is
converted to nested lists of Python ints and reduced with Bareiss'
fraction-free elimination; solutions are returned as ``Fraction`` vectors.

Pivoting is deterministic everywhere: leftmost column first, topmost
nonzero row within that column.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import numpy as np

DEFAULT_PRIME = 2147483647
MAX_PRIME = 2**31 - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


_checked_primes: set[int] = set()


def check_prime(p: int) -> int:
    """Validate a modulus for prime-field mode and return it as an int."""
    p = int(p)
    if p in _checked_primes:
        return p
    if not 2 <= p <= MAX_PRIME:
        raise ValueError(f"modulus {p} outside [2, 2**31 - 1]")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    _checked_primes.add(p)
    return p


def as_field_matrix(M, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Return a fresh int64 copy of ``M`` with entries reduced into ``[0, p)``.

    Python ints of any size are reduced before the cast, so arbitrary integer
    input is accepted.
    """
    p = check_prime(p)
    if isinstance(M, np.ndarray) and M.dtype != object:
        A = np.array(M, dtype=np.int64, copy=True)
        if A.ndim == 1:
            A = A.reshape(1, -1) if A.size else A.reshape(0, 0)
        return np.mod(A, p)
    rows = [[int(x) % p for x in row] for row in M]
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array(rows, dtype=np.int64).reshape(len(rows), -1)


def _as_int_rows(M) -> list[list[int]]:
    if isinstance(M, np.ndarray):
        return [[int(x) for x in row] for row in M.tolist()] if M.ndim == 2 else []
    return [[int(x) for x in row] for row in M]


def _shape(M) -> tuple[int, int]:
    if isinstance(M, np.ndarray):
        if M.ndim != 2:
            raise ValueError("expected a 2-d matrix")
        return M.shape
    rows = len(M)
    return rows, (len(M[0]) if rows else 0)


# prime field


def row_reduce(A: np.ndarray, p: int, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``A`` over GF(p), computed in place.

    Only the first ``ncols`` columns are eligible as pivots (the rest are
    carried along, e.g. an augmented right-hand side).  Returns the reduced
    matrix and the pivot column list.
    """
    rows, cols = A.shape
    if ncols is None:
        ncols = cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit] = (A[hit] - (col[hit, None] * A[r]) % p) % p
        pivots.append(c)
        r += 1
    return A, pivots


def _forward_rank(A: np.ndarray, p: int) -> int:
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        below = A[r + 1:]
        hit = np.flatnonzero(below[:, c])
        if hit.size:
            inv = pow(int(A[r, c]), p - 2, p)
            factors = (below[hit, c] * inv) % p
            below[hit] = (below[hit] - (factors[:, None] * A[r]) % p) % p
        r += 1
    return r


# integer mode


def bareiss_echelon(M) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix (Bareiss).

    All intermediate entries are exact minors of the input, so they stay
    integral.  Rows below the rank are zero.  Returns ``(E, pivots)``.
    """
    A = _as_int_rows(M)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        k = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if k is None:
            continue
        if k != r:
            A[r], A[k] = A[k], A[r]
        piv = A[r][c]
        for i in range(r + 1, rows):
            a = A[i][c]
            Ai = A[i]
            Ar = A[r]
            for j in range(cols):
                Ai[j] = (piv * Ai[j] - a * Ar[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return A, pivots


def _rational_rref(M, ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    E, _ = bareiss_echelon(M)
    R = [[Fraction(x) for x in row] for row in E]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    if ncols is None:
        ncols = cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        k = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if k is None:
            continue
        if k != r:
            R[r], R[k] = R[k], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                a = R[i][c]
                R[i] = [x - a * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


# public operations


def rank(M, p: int | None = DEFAULT_PRIME) -> int:
    """Rank of ``M`` over GF(p), or over the rationals when ``p`` is None."""
    rows, cols = _shape(M)
    if rows == 0 or cols == 0:
        return 0
    if p is None:
        return len(bareiss_echelon(M)[1])
    p = check_prime(p)
    return _forward_rank(as_field_matrix(M, p), p)


def kernel_basis(M, p: int | None = DEFAULT_PRIME):
    """Basis of the right null space, one vector per column.

    Prime-field mode returns an int64 array of shape ``(cols, cols - rank)``.
    Integer mode returns a list of columns as lists of ints (denominators
    cleared, so the columns are primitive integer vectors up to sign).
    """
    rows, cols = _shape(M)
    if p is None:
        if rows == 0:
            return [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
        R, pivots = _rational_rref(M)
        basis = []
        for f in (c for c in range(cols) if c not in set(pivots)):
            x = [Fraction(0)] * cols
            x[f] = Fraction(1)
            for i, pc in enumerate(pivots):
                x[pc] = -R[i][f]
            den = 1
            for v in x:
                den = den * v.denominator // _gcd(den, v.denominator)
            basis.append([int(v * den) for v in x])
        return basis
    p = check_prime(p)
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = row_reduce(as_field_matrix(M, p), p)
    free = [c for c in range(cols) if c not in set(pivots)]
    K = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        K[f, j] = 1
        for i, pc in enumerate(pivots):
            K[pc, j] = (-R[i, f]) % p
    return K


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def solve(M, b, p: int | None = DEFAULT_PRIME):
    """Solve ``M x = b``; return one solution or None if inconsistent.

    Free variables are set to zero, so the result is deterministic.  Integer
    mode returns a list of ``Fraction``.
    """
    rows, cols = _shape(M)
    b = list(b) if not isinstance(b, np.ndarray) else b.reshape(-1).tolist()
    if len(b) != rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {rows}")
    if p is None:
        aug = [list(row) + [bi] for row, bi in zip(_as_int_rows(M), b)]
        R, pivots = _rational_rref(aug, ncols=cols)
        if any(all(x == 0 for x in row[:cols]) and row[cols] != 0 for row in R):
            return None
        x = [Fraction(0)] * cols
        for i, pc in enumerate(pivots):
            x[pc] = R[i][cols]
        return x
    p = check_prime(p)
    x = np.zeros(cols, dtype=np.int64)
    if rows == 0:
        return x
    aug = np.concatenate([as_field_matrix(M, p).reshape(rows, cols),
                          as_field_matrix([b], p).reshape(rows, 1)], axis=1)
    R, pivots = row_reduce(aug, p, ncols=cols)
    if np.any(R[len(pivots):, cols]):
        return None
    for i, pc in enumerate(pivots):
        x[pc] = R[i, cols]
    return x


def inverse(M, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Inverse of a square matrix over GF(p); raises if singular."""
    p = check_prime(p)
    A = as_field_matrix(M, p)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    aug = np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1)
    R, pivots = row_reduce(aug, p, ncols=n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return R[:, n:].copy()


def column_basis(M, p: int = DEFAULT_PRIME) -> np.ndarray:
    """The pivot columns of ``M`` (a basis of its column space, taken from M)."""
    A = as_field_matrix(M, p)
    _, pivots = row_reduce(A.copy(), check_prime(p))
    return A[:, pivots]


def matmul(A, B, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Product over GF(p) without int64 overflow.

    Splits ``B`` into 16-bit halves so each partial dot product stays below
    ``2**63`` for inner dimensions up to 2**15.
    """
    p = check_prime(p)
    A = np.mod(np.asarray(A, dtype=np.int64), p)
    B = np.mod(np.asarray(B, dtype=np.int64), p)
    if A.shape[-1] > 2**15:
        raise ValueError("inner dimension too large for split multiplication")
    lo = B & 0xFFFF
    hi = B >> 16
    prod_lo = np.mod(A @ lo, p)
    prod_hi = np.mod(A @ hi, p)
    return np.mod(prod_hi * 65536 % p + prod_lo, p)
