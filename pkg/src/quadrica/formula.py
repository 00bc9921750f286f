"""Closed-form dimension counts for quadrics through generic linear spaces.

The central entry point is :func:`expected_dim_I2`, which returns the
dimension of the space of quadrics containing a generic configuration with
a given weight vector, together with the case of the classification it
falls in.  The remaining functions are the numerical ingredients: Fano
dimensions of planes on quadrics, the largest plane on a rank-r quadric,
the condition counts used to rule out quadrics of each rank in the
disjoint regime, and the parameter-space dimension.

Binomials ``C(a, 2)`` with ``a <= 1`` are 0 throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import WeightVector


def c2(a: int) -> int:
    """C(a, 2), zero for a <= 1."""
    return a * (a - 1) // 2 if a > 1 else 0


def n_quadrics(n: int) -> int:
    """Dimension of the space of quadratic forms on P^n."""
    return c2(n + 2)


class CaseLabel(str, enum.Enum):
    DISJOINT = "Disjoint"
    I = "I"
    IIA = "IIa"
    IIB = "IIb"
    IIC = "IIc"
    III = "III"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Expectation:
    weight: WeightVector
    label: CaseLabel
    dim_I2: int
    tau: int | None = None
    v: int | None = None

    @property
    def hf2(self) -> int:
        return n_quadrics(self.weight.n) - self.dim_I2

    def to_json(self) -> dict:
        return {
            "n": self.weight.n,
            "weights": list(self.weight.weights),
            "case": self.label.value,
            "tau": self.tau,
            "v": self.v,
            "dim_I2": self.dim_I2,
            "hf2": self.hf2,
        }


def is_disjoint_regime(w: WeightVector) -> bool:
    return w.s == 1 or w.weights[0] + w.weights[1] < w.n


def tau_v(w: WeightVector) -> tuple[int, int]:
    """Number of components forced to meet the largest one, and the sum of
    the vector dimensions of those intersections."""
    if is_disjoint_regime(w):
        raise ValueError(f"{w} is in the disjoint regime; tau and v are undefined")
    m1 = w.weights[0]
    meeting = [m for m in w.weights[1:] if m1 + m >= w.n]
    tau = 1 + len(meeting)
    v = sum(m1 + m - w.n + 1 for m in meeting)
    return tau, v


def disjoint_dim(w: WeightVector) -> int:
    if not is_disjoint_regime(w):
        raise ValueError(f"{w} has intersecting components")
    return max(n_quadrics(w.n) - sum(c2(m + 2) for m in w.weights), 0)


def _naive_count(w: WeightVector) -> int:
    return n_quadrics(w.n) - sum(c2(m + 2) for m in w.weights)


def expected_dim_I2(w: WeightVector) -> Expectation:
    if is_disjoint_regime(w):
        return Expectation(w, CaseLabel.DISJOINT, disjoint_dim(w))
    n, ms, s = w.n, w.weights, w.s
    m1 = ms[0]
    tau, v = tau_v(w)
    if v >= m1 + 1:
        return Expectation(w, CaseLabel.I, 0, tau, v)
    if v <= 2 * m1 - n + 1:
        correction = sum(c2(m1 + ms[i] - n + 2) for i in range(1, tau))
        return Expectation(w, CaseLabel.III, max(_naive_count(w) + correction, 0), tau, v)
    # 2*m1 - n + 2 <= v <= m1
    assert tau >= 3, f"middle range with tau={tau} is impossible ({w})"
    if tau >= 4:
        return Expectation(w, CaseLabel.IIA, 0, tau, v)
    if s == 3 or 2 * n >= sum(ms[:4]) + 2:
        pairs = c2(ms[0] + ms[1] - n + 2) + c2(ms[0] + ms[2] - n + 2) + c2(ms[1] + ms[2] - n + 2)
        return Expectation(w, CaseLabel.IIC, max(_naive_count(w) + pairs, 0), tau, v)
    return Expectation(w, CaseLabel.IIB, 0, tau, v)


def fano_dim(m: int, n: int) -> int | None:
    """Dimension of the family of m-planes on a smooth quadric in P^n.

    None when the quadric contains no m-plane.
    """
    if m < 0 or n < 2:
        raise ValueError(f"need m >= 0 and n >= 2, got m={m}, n={n}")
    if 2 * m > n - 1:
        return None
    d = (m + 1) * (n - 1 - Fraction(3 * m, 2))
    assert d.denominator == 1, f"non-integral Fano dimension for m={m}, n={n}"
    return int(d)


def max_plane_dim_on_rank_r(n: int, r: int) -> int:
    """Largest m such that a rank-r quadric in P^n contains an m-plane."""
    if not 1 <= r <= n + 1:
        raise ValueError(f"rank must lie in [1, {n + 1}], got {r}")
    return n - (r + 1) // 2


def bound_even(weights, p: int) -> int:
    """Condition count f(p) for quadrics of rank 2p."""
    small = sum(c2(m + 2) for m in weights if m <= p - 1)
    big = Fraction(p, 2) * sum(2 * m + 3 - p for m in weights if m >= p)
    total = small + big
    assert total.denominator == 1
    return int(total)


def bound_odd(weights, p: int) -> int:
    """Condition count f(p) for quadrics of rank 2p + 1."""
    small = sum(c2(m + 2) for m in weights if m <= p - 1)
    big = Fraction(1, 2) * sum(2 * m + 2 + p * (2 * m + 1 - p) for m in weights if m >= p)
    total = small + big
    assert total.denominator == 1
    return int(total)


def _check_lemma_range(w: WeightVector, r: int):
    if not is_disjoint_regime(w):
        raise ValueError(f"{w}: the rank bounds need m_1 + m_2 < n")
    if not 1 <= r <= 2 * w.n - 2 * w.weights[0]:
        raise ValueError(f"rank {r} outside [1, {2 * w.n - 2 * w.weights[0]}]")


def lemma_bound(w: WeightVector, r: int) -> int:
    _check_lemma_range(w, r)
    return bound_even(w.weights, r // 2) if r % 2 == 0 else bound_odd(w.weights, (r - 1) // 2)


def dim_DL(w: WeightVector) -> int:
    """Dimension of the product of Grassmannians parametrising the configuration."""
    return sum((m + 1) * (w.n - m) for m in w.weights)


@dataclass(frozen=True)
class FiberReport:
    r: int
    family_dim: int
    fiber_over_one: int
    dim_DL: int
    bound: int
    deficiency: int
    lemma_applies: bool

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "family_dim": self.family_dim,
            "fiber_over_one": self.fiber_over_one,
            "dim_DL": self.dim_DL,
            "bound": self.bound,
            "deficiency": self.deficiency,
            "lemma_applies": self.lemma_applies,
        }


def rank_r_family_dim(n: int, r: int) -> int:
    """Dimension of the variety of quadrics of rank r in P^n."""
    return n_quadrics(n) - c2(n - r + 2) - 1


def fiber_over_quadric(w: WeightVector, r: int) -> int:
    """Dimension of the configurations with weight w lying on one fixed rank-r quadric.

    Components small enough to sit on the smooth base keep their dimension
    under projection from the vertex; larger ones project onto a maximal
    plane of the base, of dimension floor((r - 2) / 2).
    """
    n = w.n
    mp = (r - 2) // 2
    total = Fraction(0)
    for m in w.weights:
        if 2 * m <= r - 2:
            total += (m + 1) * (n - Fraction(3 * m, 2) - 1)
        else:
            total += (mp + 1) * (r - 1 - Fraction(3 * mp, 2) + m) + (m + 1) * (n - r - m)
    assert total.denominator == 1
    return int(total)


def fiber_deficiency(w: WeightVector, r: int) -> FiberReport:
    bound = lemma_bound(w, r)
    n = w.n
    family = rank_r_family_dim(n, r)
    fiber = fiber_over_quadric(w, r)
    ddl = dim_DL(w)
    deficiency = n_quadrics(n) - c2(n - r + 2) - bound - 1
    assert deficiency == family + fiber - ddl, "fiber count disagrees with the condition count"
    applies = n_quadrics(n) - c2(n + 2 - r) <= bound
    return FiberReport(r, family, fiber, ddl, bound, deficiency, applies)
