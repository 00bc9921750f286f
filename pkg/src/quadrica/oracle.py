"""Exact count of the quadrics through a configuration.

A quadratic form ``q = sum_{i<=j} q_ij x_i x_j`` contains a linear space
with spanning matrix ``B`` iff its pullback ``q(B t)`` vanishes identically.
Each coefficient of the pullback is a linear functional in the ``q_ij``, so
stacking them over all components gives a matrix whose kernel is the degree
two part of the ideal.  The pullback is expanded directly (no polarisation),
so nothing is ever divided by two.

Coefficient vectors are ordered by monomials ``x_i x_j`` with ``i <= j`` in
lexicographic order on ``(i, j)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import exactlinalg as xla
from .arrangement import Configuration, WeightVector, random_configuration
from .exactlinalg import DEFAULT_PRIME
from .formula import expected_dim_I2, n_quadrics

DEFAULT_TRIALS = 3


@lru_cache(maxsize=None)
def monomial_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Index arrays (I, J), I <= J, of the degree-2 monomials in n+1 variables."""
    I, J = np.triu_indices(n + 1)
    I.setflags(write=False)
    J.setflags(write=False)
    return I, J


def monomial_index(n: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    # rows 0..i-1 contribute (n+1) + n + ... + (n+2-i) monomials
    return i * (n + 1) - i * (i - 1) // 2 + (j - i)


@dataclass(frozen=True)
class QuadricCoeffs:
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != n_quadrics(self.n):
            raise ValueError(f"expected {n_quadrics(self.n)} coefficients, got {len(self.coeffs)}")

    def doubled_gram(self, p: int = DEFAULT_PRIME) -> np.ndarray:
        """The symmetric matrix 2G with x^T G x = q (diagonal 2 q_ii, off-diagonal q_ij)."""
        I, J = monomial_pairs(self.n)
        c = np.mod(np.array(self.coeffs, dtype=np.int64), p)
        G = np.zeros((self.n + 1, self.n + 1), dtype=np.int64)
        G[I, J] = c
        G[J, I] = c
        d = np.arange(self.n + 1)
        G[d, d] = (2 * G[d, d]) % p
        return G

    def gram_rank(self, p: int = DEFAULT_PRIME) -> int:
        """Rank of the quadric (p must be odd)."""
        return xla.rank(self.doubled_gram(p), p)


def pullback_matrix(B: np.ndarray, n: int, p: int) -> np.ndarray:
    """Rows of the linear map q -> coefficients of q(B t), monomials t_a t_b, a <= b."""
    I, J = monomial_pairs(n)
    a, b = monomial_pairs(B.shape[1] - 1)
    BI_a = B[I][:, a].T  # rows indexed by (a,b), columns by (i,j)
    BJ_b = B[J][:, b].T
    BI_b = B[I][:, b].T
    BJ_a = B[J][:, a].T
    M = (BI_a * BJ_b) % p
    cross = (BI_b * BJ_a) % p
    off = a != b
    M[off] = (M[off] + cross[off]) % p
    return M


def constraint_matrix(c: Configuration) -> np.ndarray:
    """Stacked pullback functionals; the kernel is the space of quadrics through c."""
    blocks = [pullback_matrix(L.span, c.ambient_n, c.prime) for L in c.spaces]
    return np.concatenate(blocks, axis=0)


def dim_I2_exact(c: Configuration) -> int:
    return n_quadrics(c.ambient_n) - xla.rank(constraint_matrix(c), c.prime)


def pullback(q: QuadricCoeffs, B: np.ndarray, p: int) -> np.ndarray:
    return xla.matmul(pullback_matrix(np.asarray(B), q.n, p), np.array(q.coeffs, dtype=np.int64), p)


def kernel_quadrics(c: Configuration) -> list[QuadricCoeffs]:
    """A basis of the quadrics through c, each checked to vanish on every component."""
    K = xla.kernel_basis(constraint_matrix(c), c.prime)
    out = [QuadricCoeffs(c.ambient_n, K[:, j].tolist()) for j in range(K.shape[1])]
    for q in out:
        for L in c.spaces:
            if np.any(pullback(q, L.span, c.prime)):
                raise AssertionError("kernel quadric does not vanish on a component")
    return out


@dataclass(frozen=True)
class OracleReport:
    weight: WeightVector
    prime: int
    seed: int
    trials: int
    per_trial_dims: tuple[int, ...]
    formula_dim: int

    @property
    def oracle_dim(self) -> int:
        return min(self.per_trial_dims)

    @property
    def agree(self) -> bool:
        return self.oracle_dim == self.formula_dim

    def to_json(self) -> dict:
        return {
            "n": self.weight.n,
            "weights": list(self.weight.weights),
            "prime": self.prime,
            "seed": self.seed,
            "trials": self.trials,
            "per_trial_dims": list(self.per_trial_dims),
            "oracle_dim": self.oracle_dim,
            "formula_dim": self.formula_dim,
            "agree": self.agree,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def generic_dim_I2(w: WeightVector, trials: int = DEFAULT_TRIALS,
                   prime: int = DEFAULT_PRIME, seed: int = 0) -> OracleReport:
    """Estimate the generic dimension as the minimum over seeded random samples.

    The kernel dimension is upper semicontinuous, so each sample can only
    over-estimate the generic value.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    dims = tuple(dim_I2_exact(random_configuration(w, prime, seed + t)) for t in range(trials))
    return OracleReport(w, prime, seed, trials, dims, expected_dim_I2(w).dim_I2)
