"""Sums of quadratic forms in prescribed families of linear forms.

Given families of linear forms ``l_{i,j}`` in ``y_0..y_n``, the question is
whether every quadratic form is a sum ``f_1(l_{1,*}) + ... + f_s(l_{s,*})``.
The degree-2 pieces of the subrings generated by each family are spanned by
the pairwise products of that family's forms, so the answer is a rank
computation.  Under apolarity the same number is the dimension of the
quadrics through the configuration whose i-th component is spanned by the
coefficient vectors of family i.

Coefficient vectors of quadratic forms use the monomial order of
:class:`quadrica.oracle.QuadricCoeffs`.  With ``exact=True`` the verdict is
computed over the rationals (Bareiss) after a prime-field pre-pass; when the
two disagree the rational answer wins and a warning is logged.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import exactlinalg as xla
from .arrangement import Configuration, LinearSpace
from .exactlinalg import DEFAULT_PRIME
from .formula import n_quadrics
from .oracle import QuadricCoeffs, monomial_index

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormFamily:
    """Linear forms in n+1 variables, one integer coefficient vector per form."""

    n: int
    forms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        forms = tuple(tuple(int(c) for c in f) for f in self.forms)
        object.__setattr__(self, "forms", forms)
        if not forms:
            raise ValueError("a form family needs at least one form")
        if any(len(f) != self.n + 1 for f in forms):
            raise ValueError(f"every linear form needs n+1 = {self.n + 1} coefficients")


def product_coeffs(l1, l2, n: int) -> list:
    """Coefficient vector of the product of two linear forms (exact, any number type)."""
    out = [0] * n_quadrics(n)
    for i in range(n + 1):
        if l1[i] == 0 and l2[i] == 0:
            continue
        for j in range(i, n + 1):
            c = l1[i] * l2[j] + (l1[j] * l2[i] if i != j else 0)
            if c:
                out[monomial_index(n, i, j)] += c
    return out


def _check_families(families) -> int:
    families = list(families)
    if not families:
        raise ValueError("need at least one form family")
    n = families[0].n
    if any(f.n != n for f in families):
        raise ValueError("form families live in different numbers of variables")
    return n


def annihilator_space(fam: FormFamily, prime: int = DEFAULT_PRIME) -> LinearSpace:
    """The linear space whose ideal is generated by the forms killed by the family.

    Its span is the span of the family's coefficient vectors.
    """
    F = xla.as_field_matrix(fam.forms, prime).T
    if not np.any(F):
        raise ValueError("all forms in the family are zero")
    return LinearSpace(xla.column_basis(F, prime), prime)


def annihilator_configuration(families, prime: int = DEFAULT_PRIME) -> Configuration:
    n = _check_families(families)
    spaces: list[LinearSpace] = []
    for fam in families:
        L = annihilator_space(fam, prime)
        if not any(L == prev for prev in spaces):
            spaces.append(L)
    return Configuration(n, tuple(spaces), prime)


def product_matrix(families, prime: int | None = DEFAULT_PRIME):
    """Columns are the products l_a * l_b, a <= b, within each family.

    Returned as rows of Python ints (integer mode) or an int64 array mod prime.
    """
    n = _check_families(families)
    cols = []
    for fam in families:
        for a in range(len(fam.forms)):
            for b in range(a, len(fam.forms)):
                cols.append(product_coeffs(fam.forms[a], fam.forms[b], n))
    rows = [list(r) for r in zip(*cols)]
    return rows if prime is None else xla.as_field_matrix(rows, prime)


def star_holds_d2(families, prime: int = DEFAULT_PRIME, exact: bool = False) -> tuple[bool, int]:
    """Whether the families' quadratic subrings span all quadratic forms.

    Returns ``(holds, defect)`` where defect is the codimension of their sum.
    """
    n = _check_families(families)
    N = n_quadrics(n)
    defect = N - xla.rank(product_matrix(families, prime), prime)
    if exact:
        exact_defect = N - xla.rank(product_matrix(families, None), None)
        if exact_defect != defect:
            log.warning("prime-field defect %d differs from rational defect %d; using rational",
                        defect, exact_defect)
        defect = exact_defect
    return defect == 0, defect


@dataclass(frozen=True)
class DecompositionWitness:
    """Per-family Gram matrices G_i with target = sum_i z_i^T G_i z_i, z_i = the family's forms.

    ``forms`` holds the linearly independent forms used for each family.
    Entries are residues mod ``prime`` or, in exact mode (prime None),
    Fractions.
    """

    n: int
    forms: tuple
    grams: tuple
    target: tuple
    reconstruction: tuple
    prime: int | None

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return int(x) if x.denominator == 1 else str(x)
            return int(x)

        return {
            "n": self.n,
            "field": "rational" if self.prime is None else self.prime,
            "families": [[list(map(int, f)) for f in fam] for fam in self.forms],
            "grams": [[[enc(x) for x in row] for row in G] for G in self.grams],
            "target": [enc(x) for x in self.target],
            "reconstruction": [enc(x) for x in self.reconstruction],
        }


def _independent_forms(fam: FormFamily, prime: int | None):
    """The forms of ``fam`` at the pivot positions (a maximal independent subset)."""
    M = [list(f) for f in fam.forms]
    T = [list(col) for col in zip(*M)]  # forms as columns
    if prime is None:
        _, pivots = xla.bareiss_echelon(T)
    else:
        _, pivots = xla.row_reduce(xla.as_field_matrix(T, prime), xla.check_prime(prime))
    return tuple(fam.forms[k] for k in pivots)


def expand_gram(forms, G, n: int, prime: int | None) -> list:
    """Coefficient vector of z^T G z with z the given linear forms."""
    out = [0] * n_quadrics(n)
    k = len(forms)
    for a in range(k):
        for b in range(k):
            if G[a][b] == 0:
                continue
            prod = product_coeffs(forms[a], forms[b], n)
            for idx, c in enumerate(prod):
                if c:
                    out[idx] += G[a][b] * c
    if prime is not None:
        out = [int(x) % prime for x in out]
    return out


def decompose_quadric(target, families, prime: int = DEFAULT_PRIME,
                      exact: bool = False) -> DecompositionWitness | None:
    """Write ``target`` as a sum of quadratic forms in each family, or return None."""
    families = list(families)
    n = _check_families(families)
    if isinstance(target, QuadricCoeffs):
        if target.n != n:
            raise ValueError("target and families live in different numbers of variables")
        target = target.coeffs
    target = [int(c) for c in target]
    if len(target) != n_quadrics(n):
        raise ValueError(f"target needs {n_quadrics(n)} coefficients, got {len(target)}")
    mod = None if exact else xla.check_prime(prime)
    if exact:
        holds_mod = xla.solve(product_matrix(families, prime), target, prime) is not None
    reduced = [FormFamily(n, _independent_forms(f, mod)) for f in families]
    x = xla.solve(product_matrix(reduced, mod), target if exact else [t % mod for t in target], mod)
    if exact and holds_mod != (x is not None):
        log.warning("prime-field and rational solvability disagree; using rational verdict")
    if x is None:
        return None
    half = Fraction(1, 2) if exact else pow(2, mod - 2, mod)
    grams = []
    pos = 0
    for fam in reduced:
        k = len(fam.forms)
        G = [[0] * k for _ in range(k)]
        for a in range(k):
            for b in range(a, k):
                val = x[pos]
                pos += 1
                if a == b:
                    G[a][a] = val if exact else int(val)
                else:
                    h = val * half if exact else int(val) * half % mod
                    G[a][b] = G[b][a] = h
        grams.append(tuple(tuple(row) for row in G))
    recon = [0] * n_quadrics(n)
    for fam, G in zip(reduced, grams):
        part = expand_gram(fam.forms, G, n, mod)
        recon = [r + c for r, c in zip(recon, part)]
    if mod is not None:
        recon = [r % mod for r in recon]
        expected = [t % mod for t in target]
    else:
        expected = target
    if recon != expected:
        raise AssertionError("decomposition witness does not reconstruct the target")
    return DecompositionWitness(n, tuple(f.forms for f in reduced), tuple(grams),
                                tuple(expected), tuple(recon), mod)


def load_decomposition_input(source) -> tuple[list[FormFamily], list[int] | None]:
    """Parse ``{"n", "families", "target"?}`` from a path, JSON text or dict."""
    data = source
    if isinstance(source, (str, Path)):
        text = source if str(source).lstrip().startswith("{") else Path(source).read_text()
        data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "families" not in data:
        raise ValueError("decomposition input needs 'n' and 'families'")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("'n' must be a non-negative integer")
    fams = data["families"]
    if not isinstance(fams, list) or not fams:
        raise ValueError("'families' must be a non-empty list")
    families = []
    for fam in fams:
        if not isinstance(fam, list) or not all(
                isinstance(f, list) and all(isinstance(c, int) for c in f) for f in fam):
            raise ValueError("each family must be a list of integer coefficient lists")
        families.append(FormFamily(n, fam))
    target = data.get("target")
    if target is not None:
        if not isinstance(target, list) or not all(isinstance(c, int) for c in target):
            raise ValueError("'target' must be a list of integers")
        if len(target) != n_quadrics(n):
            raise ValueError(f"'target' needs {n_quadrics(n)} coefficients")
    return families, target
