"""Configurations of linear spaces in projective space.

A linear space is stored by a matrix whose columns span the underlying
vector subspace of ``k^(n+1)``; intersections and the quadric constraints
both consume spans directly.  Random configurations are drawn from a
counter-based generator (Philox) keyed by ``(seed, component, attempt)`` so
every sample is reproducible on its own.

"Generic" is operational here: a uniform sample over GF(p) with p around
2**31 lands in any fixed dense open subset with overwhelming probability.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .exactlinalg import (
    DEFAULT_PRIME,
    as_field_matrix,
    check_prime,
    column_basis,
    inverse,
    kernel_basis,
    matmul,
    rank,
)

SEED_MASK = 2**64 - 1
MAX_RETRIES = 16


@dataclass(frozen=True)
class WeightVector:
    """Ambient dimension ``n`` and component dimensions, sorted non-increasing."""

    n: int
    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(sorted((int(m) for m in self.weights), reverse=True))
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "n", int(self.n))
        if self.n < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.n}")
        if not ws:
            raise ValueError("weight vector needs at least one component")
        if ws[-1] < 0 or ws[0] > self.n - 1:
            raise ValueError(f"component dimensions must lie in [0, {self.n - 1}], got {list(ws)}")

    @property
    def s(self) -> int:
        return len(self.weights)

    def __str__(self):
        return f"(n={self.n}; {','.join(map(str, self.weights))})"


@dataclass(frozen=True, eq=False)
class LinearSpace:
    """A projective linear space given by spanning columns over GF(prime)."""

    span: np.ndarray
    prime: int = DEFAULT_PRIME

    def __post_init__(self):
        p = check_prime(self.prime)
        B = as_field_matrix(self.span, p)
        if B.ndim != 2 or B.shape[1] == 0:
            raise ValueError("a linear space needs at least one spanning column")
        if rank(B, p) != B.shape[1]:
            raise ValueError("spanning columns are not linearly independent")
        B.setflags(write=False)
        object.__setattr__(self, "span", B)

    @property
    def ambient_n(self) -> int:
        return self.span.shape[0] - 1

    @property
    def dim(self) -> int:
        return self.span.shape[1] - 1

    def __eq__(self, other):
        if not isinstance(other, LinearSpace):
            return NotImplemented
        return (self.prime == other.prime and self.ambient_n == other.ambient_n
                and self.dim == other.dim and intersection_dim(self, other) == self.dim)

    __hash__ = None


@dataclass(frozen=True)
class Configuration:
    ambient_n: int
    spaces: tuple[LinearSpace, ...]
    prime: int = DEFAULT_PRIME

    def __post_init__(self):
        object.__setattr__(self, "spaces", tuple(self.spaces))
        if not self.spaces:
            raise ValueError("configuration needs at least one component")
        for L in self.spaces:
            if L.ambient_n != self.ambient_n:
                raise ValueError(f"component lives in P^{L.ambient_n}, expected P^{self.ambient_n}")
            if L.prime != self.prime:
                raise ValueError("components defined over different primes")
        for i, A in enumerate(self.spaces):
            for B in self.spaces[i + 1:]:
                if A == B:
                    raise ValueError("configuration components must be pairwise distinct")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(L.dim for L in self.spaces)

    def to_json(self) -> dict:
        return {
            "n": self.ambient_n,
            "prime": self.prime,
            "spaces": [{"basis": L.span.T.tolist()} for L in self.spaces],
        }


def configuration_from_json(data) -> Configuration:
    """Build a configuration from the JSON schema (dict, JSON text or path).

    Each basis is a list of spanning points (rows of length n+1); entries are
    reduced modulo the prime on load.
    """
    if isinstance(data, (str, Path)) and not str(data).lstrip().startswith("{"):
        data = json.loads(Path(data).read_text())
    elif isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["n"])
        p = int(data.get("prime", DEFAULT_PRIME))
        bases = [sp["basis"] for sp in data["spaces"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed configuration JSON: {exc}") from exc
    spaces = []
    for basis in bases:
        if not basis or any(len(row) != n + 1 for row in basis):
            raise ValueError(f"every basis row must have n+1 = {n + 1} entries")
        spaces.append(LinearSpace(as_field_matrix(basis, p).T, p))
    return Configuration(n, tuple(spaces), p)


def _rng(seed: int, *key: int) -> np.random.Generator:
    ss = np.random.SeedSequence([int(seed) & SEED_MASK, *key])
    return np.random.Generator(np.random.Philox(ss))


def random_span(n: int, m: int, prime: int, seed: int, index: int) -> np.ndarray:
    """Full-rank (n+1) x (m+1) matrix of uniform residues for one component."""
    for attempt in range(MAX_RETRIES):
        B = _rng(seed, index, attempt).integers(0, prime, size=(n + 1, m + 1), dtype=np.int64)
        if rank(B, prime) == m + 1:
            return B
    raise RuntimeError(f"could not sample a full-rank span after {MAX_RETRIES} attempts")


def random_configuration(w: WeightVector, prime: int = DEFAULT_PRIME, seed: int = 0) -> Configuration:
    prime = check_prime(prime)
    spaces = tuple(LinearSpace(random_span(w.n, m, prime, seed, i), prime)
                   for i, m in enumerate(w.weights))
    return Configuration(w.n, spaces, prime)


def _check_same_ambient(A: LinearSpace, B: LinearSpace):
    if A.ambient_n != B.ambient_n:
        raise ValueError(f"ambient mismatch: P^{A.ambient_n} vs P^{B.ambient_n}")
    if A.prime != B.prime:
        raise ValueError("linear spaces defined over different primes")


def intersection_dim(A: LinearSpace, B: LinearSpace) -> int:
    """Projective dimension of A ∩ B; -1 means empty."""
    _check_same_ambient(A, B)
    stacked = np.concatenate([A.span, B.span], axis=1)
    return (A.dim + 1) + (B.dim + 1) - rank(stacked, A.prime) - 1


def intersection_span(A: LinearSpace, B: LinearSpace) -> np.ndarray:
    """Columns spanning A ∩ B (zero columns when the intersection is empty)."""
    _check_same_ambient(A, B)
    p = A.prime
    K = kernel_basis(np.concatenate([A.span, B.span], axis=1), p)
    # A has full column rank, so alpha -> A alpha is injective on the kernel.
    return matmul(A.span, K[: A.dim + 1], p)


def pairwise_vertex(c: Configuration, tau: int) -> LinearSpace | None:
    """Span of the intersections of the first component with components 2..tau.

    Every point there is singular on every quadric through the configuration
    when the pairs span the ambient space.  Returns None when all the
    intersections are empty.
    """
    if tau < 2 or tau > len(c.spaces):
        raise ValueError(f"tau must lie in [2, {len(c.spaces)}], got {tau}")
    first = c.spaces[0]
    parts = [intersection_span(first, c.spaces[i]) for i in range(1, tau)]
    stacked = np.concatenate(parts, axis=1)
    if stacked.shape[1] == 0 or rank(stacked, c.prime) == 0:
        return None
    return LinearSpace(column_basis(stacked, c.prime), c.prime)


def random_complement(V: LinearSpace, seed: int = 0) -> np.ndarray:
    """Columns C such that [V | C] is invertible."""
    p = V.prime
    n1 = V.ambient_n + 1
    k = n1 - V.dim - 1
    for attempt in range(MAX_RETRIES):
        C = _rng(seed, 2**32 - 1, attempt).integers(0, p, size=(n1, k), dtype=np.int64)
        if rank(np.concatenate([V.span, C], axis=1), p) == n1:
            return C
    raise RuntimeError("could not sample a complement")


def project_from(c: Configuration, V: LinearSpace | None, seed: int = 0) -> Configuration:
    """Project every component from V onto a random complement H.

    The image of Λ_i has dimension m_i - dim(V ∩ Λ_i) - 1 and lives in
    P^(n - dim V - 1).  Components that become equal are merged, keeping the
    first occurrence.
    """
    if V is None:
        return c
    if V.ambient_n != c.ambient_n or V.prime != c.prime:
        raise ValueError("projection centre does not live in the configuration's space")
    if V.dim > c.ambient_n - 1:
        raise ValueError("projection centre must be a proper linear subspace")
    p = c.prime
    d = V.dim
    T_inv = inverse(np.concatenate([V.span, random_complement(V, seed)], axis=1), p)
    new_n = c.ambient_n - d - 1
    out: list[LinearSpace] = []
    for i, L in enumerate(c.spaces):
        coords = matmul(T_inv, L.span, p)[d + 1:]
        if rank(coords, p) == 0:
            raise ValueError(f"projection annihilates a component (index {i})")
        image = LinearSpace(column_basis(coords, p), p)
        if not any(image == prev for prev in out):
            out.append(image)
    return Configuration(new_n, tuple(out), p)
