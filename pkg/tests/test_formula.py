import random
from fractions import Fraction

import pytest

from quadrica.arrangement import WeightVector
from quadrica.formula import (
    CaseLabel,
    bound_even,
    bound_odd,
    c2,
    dim_DL,
    disjoint_dim,
    expected_dim_I2,
    fano_dim,
    fiber_deficiency,
    lemma_bound,
    max_plane_dim_on_rank_r,
    n_quadrics,
    tau_v,
)

from .conftest import acceptance_grid
from .oracles import points_of, quadric_dim_sympy, subspaces

P = 2147483647
W = WeightVector


def sampled_dim(w, seed, p=P):
    """Minimum over a few random integer configurations, via symbolic expansion."""
    rng = random.Random(seed)
    best = None
    for _ in range(2):
        spans = [[[rng.randrange(p) for _ in range(m + 1)] for _ in range(w.n + 1)] for m in w.weights]
        d = quadric_dim_sympy(spans, w.n, p)
        best = d if best is None else min(best, d)
    return best


# values


@pytest.mark.parametrize("w, expected", [
    (W(4, [3, 1]), (2, 1)),
    (W(9, [5, 5, 5]), (3, 4)),
    (W(7, [4, 3, 3, 3]), (4, 3)),
])
def test_tau_v(w, expected):
    assert tau_v(w) == expected


def test_tau_v_rejects_disjoint():
    with pytest.raises(ValueError):
        tau_v(W(5, [2, 2]))


def test_disjoint_dim_values():
    assert disjoint_dim(W(3, [1, 1, 1, 1])) == 0
    assert disjoint_dim(W(5, [2])) == 15
    with pytest.raises(ValueError):
        disjoint_dim(W(3, [2, 2]))


def test_disjoint_two_lines_in_p4():
    assert sampled_dim(W(4, [1, 1]), 0) == 9
    assert disjoint_dim(W(4, [1, 1])) == 9


@pytest.mark.parametrize("w, label, dim", [
    (W(9, [5, 5, 5]), CaseLabel.IIC, 1),
    (W(4, [3, 1]), CaseLabel.III, 3),
    (W(3, [2, 2, 2]), CaseLabel.I, 0),
    (W(7, [4, 3, 3, 3]), CaseLabel.IIA, 0),
    (W(3, [2, 2]), CaseLabel.III, 1),
    (W(7, [4, 4, 4, 1]), CaseLabel.IIB, 0),
    (W(3, [1, 1, 1, 1]), CaseLabel.DISJOINT, 0),
])
def test_expected_dim_examples(w, label, dim):
    e = expected_dim_I2(w)
    assert (e.label, e.dim_I2) == (label, dim)
    assert e.hf2 == n_quadrics(w.n) - dim


@pytest.mark.parametrize("w", [W(9, [5, 5, 5]), W(4, [3, 1]), W(3, [2, 2])])
def test_expected_dim_against_symbolic_oracle(w):
    assert sampled_dim(w, 1) == expected_dim_I2(w).dim_I2


def test_expectation_json():
    d = expected_dim_I2(W(9, [5, 5, 5])).to_json()
    assert d == {"n": 9, "weights": [5, 5, 5], "case": "IIc", "tau": 3, "v": 4, "dim_I2": 1, "hf2": 54}
    d = expected_dim_I2(W(4, [1, 1])).to_json()
    assert d["tau"] is None and d["v"] is None


def test_fano_values():
    assert fano_dim(1, 3) == 1
    assert fano_dim(2, 3) is None
    assert fano_dim(0, 2) == 1
    assert fano_dim(0, 5) == 4  # a quadric hypersurface in P^5 has dimension 4
    assert fano_dim(2, 5) == 3  # planes on a smooth quadric fourfold
    with pytest.raises(ValueError):
        fano_dim(-1, 3)


def test_fano_integrality_and_emptiness():
    for n in range(2, 40):
        for m in range(0, 40):
            d = fano_dim(m, n)
            assert (d is None) == (2 * m > n - 1)
            if d is not None:
                assert Fraction(d) == (m + 1) * (n - 1 - Fraction(3 * m, 2))


def test_max_plane_values():
    assert max_plane_dim_on_rank_r(3, 4) == 1
    assert max_plane_dim_on_rank_r(3, 2) == 2
    assert max_plane_dim_on_rank_r(3, 1) == 2
    assert max_plane_dim_on_rank_r(9, 6) == 6
    for bad in (0, 5):
        with pytest.raises(ValueError):
            max_plane_dim_on_rank_r(3, bad)


def test_max_plane_threshold_form():
    for n in range(2, 15):
        for r in range(1, n + 2):
            m = max_plane_dim_on_rank_r(n, r)
            assert r <= 2 * n - 2 * m and not r <= 2 * n - 2 * (m + 1)
            if r == n + 1:
                # smooth case agrees with the Fano emptiness threshold
                assert fano_dim(m, n) is not None and fano_dim(m + 1, n) is None


def test_lemma_bound_values():
    assert lemma_bound(W(4, [1, 1]), 2) == 4
    assert lemma_bound(W(5, [1, 1]), 2) == 4
    assert lemma_bound(W(5, [1, 1, 1]), 4) == 9
    for w in [W(6, [2, 1, 0]), W(9, [4, 3, 3, 0])]:
        assert lemma_bound(w, 1) == sum(m + 1 for m in w.weights)
    with pytest.raises(ValueError):
        lemma_bound(W(3, [2, 2]), 1)
    with pytest.raises(ValueError):
        lemma_bound(W(4, [1, 1]), 7)


def test_fiber_examples():
    rep = fiber_deficiency(W(4, [1, 1]), 1)
    assert (rep.family_dim, rep.bound) == (4, 4)
    assert not rep.lemma_applies and rep.deficiency == 0
    rep = fiber_deficiency(W(5, [1, 1]), 2)
    assert rep.bound == 4 and not rep.lemma_applies
    assert rep.deficiency == rep.family_dim + rep.fiber_over_one - rep.dim_DL
    seven_lines = W(4, [1] * 7)
    for r in range(1, 7):
        rep = fiber_deficiency(seven_lines, r)
        assert rep.lemma_applies and rep.deficiency < 0


def test_double_hyperplane_through_two_lines():
    # two disjoint lines in P^4 span a P^3: the squared hyperplane is a rank-1 quadric through them
    from quadrica.arrangement import random_configuration
    from quadrica.exactlinalg import kernel_basis, matmul
    c = random_configuration(W(4, [1, 1]), P, 0)
    import numpy as np
    both = np.concatenate([L.span for L in c.spaces], axis=1)
    h = kernel_basis(both.T)
    assert h.shape[1] == 1
    assert not np.any(matmul(h.T, both))


def test_dim_DL_values():
    assert dim_DL(W(3, [1, 1])) == 8
    assert dim_DL(W(5, [0])) == 5
    assert dim_DL(W(4, [3])) == 4


# properties


def classify(w):
    """Independent restatement of the case hypotheses; returns every label whose hypotheses hold."""
    n, ms, s = w.n, list(w.weights), w.s
    if s == 1 or ms[0] + ms[1] < n:
        return {CaseLabel.DISJOINT}
    m1 = ms[0]
    tau = max(i + 1 for i in range(s) if m1 + ms[i] >= n)
    v = sum(m1 + ms[i] - n + 1 for i in range(1, tau))
    out = set()
    if v >= m1 + 1:
        out.add(CaseLabel.I)
    if 2 * m1 - n + 2 <= v <= m1:
        if tau >= 4:
            out.add(CaseLabel.IIA)
        if tau == 3 and s >= 4 and 2 * n <= sum(ms[:4]) + 2:
            out.add(CaseLabel.IIB)
        if (tau == 3 and s >= 4 and 2 * n >= sum(ms[:4]) + 2) or tau == s == 3:
            out.add(CaseLabel.IIC)
    if v <= 2 * m1 - n + 1:
        out.add(CaseLabel.III)
    return out


def test_dispatch_is_total():
    overlaps = 0
    for w in acceptance_grid(2, 10, 6):
        labels = classify(w)
        e = expected_dim_I2(w)
        assert e.label in labels
        assert e.dim_I2 >= 0
        if len(labels) > 1:
            assert labels == {CaseLabel.IIB, CaseLabel.IIC} and e.label == CaseLabel.IIC
            assert e.dim_I2 == 0
            overlaps += 1
    assert overlaps > 0


def test_disjoint_branch_matches_disjoint_formula():
    for w in acceptance_grid(2, 10, 6):
        if w.s == 1 or w.weights[0] + w.weights[1] < w.n:
            assert expected_dim_I2(w).dim_I2 == disjoint_dim(w)


def test_case_iii_correction_positive():
    for w in acceptance_grid(2, 10, 6):
        e = expected_dim_I2(w)
        if e.label == CaseLabel.III:
            m1 = w.weights[0]
            assert sum(c2(m1 + m - w.n + 2) for m in w.weights[1:e.tau]) > 0


def test_appending_a_component_never_adds_quadrics():
    for w in acceptance_grid(2, 10, 5):
        d = expected_dim_I2(w).dim_I2
        for m in range(w.n):
            assert expected_dim_I2(W(w.n, w.weights + (m,))).dim_I2 <= d


def _naive(n, ms):
    return c2(n + 2) - sum(c2(m + 2) for m in ms)


def test_case_iii_matches_projected_disjoint_count():
    checked = 0
    for w in acceptance_grid(2, 10, 6):
        e = expected_dim_I2(w)
        if e.label != CaseLabel.III:
            continue
        n, ms, tau, v = w.n, w.weights, e.tau, e.v
        m1 = ms[0]
        projected = [m1 - v] + [n - m1 - 1] * (tau - 1) + list(ms[tau:])
        n2 = n - v
        assert all(a + b < n2 for i, a in enumerate(projected) for b in projected[i + 1:])
        assert e.dim_I2 == max(_naive(n2, projected), 0)
        checked += 1
    assert checked > 100


def test_case_iic_matches_projected_disjoint_count():
    checked = 0
    for w in acceptance_grid(2, 10, 6):
        e = expected_dim_I2(w)
        if e.label != CaseLabel.IIC:
            continue
        n, ms = w.n, w.weights
        n2 = 4 * n - 2 * sum(ms[:3]) - 3
        m_small = 2 * n - sum(ms[:3]) - 2
        assert e.dim_I2 == max(_naive(n2, [m_small] * 3 + list(ms[3:])), 0)
        checked += 1
    assert checked > 10


@pytest.mark.parametrize("seed", range(40))
def test_bound_recurrences(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 14)
    ws = [rng.randint(0, n - 1) for _ in range(rng.randint(1, 7))]
    for p in range(0, n + 1):
        assert bound_even(ws, p + 1) - bound_even(ws, p) == sum(m - p + 1 for m in ws if m >= p)
        assert bound_odd(ws, p + 1) - bound_odd(ws, p) == sum(m - p for m in ws if m >= p)


def test_fiber_identity_over_grid():
    for w in acceptance_grid(2, 9, 5):
        if not (w.s == 1 or w.weights[0] + w.weights[1] < w.n):
            continue
        for r in range(1, 2 * w.n - 2 * w.weights[0] + 1):
            rep = fiber_deficiency(w, r)
            assert rep.deficiency == rep.family_dim + rep.fiber_over_one - rep.dim_DL
            if rep.lemma_applies:
                assert rep.deficiency < 0


def _split_form(r):
    """x0 x1 + x2 x3 + ... (+ x_{r-1}^2 when r is odd): rank r, maximal Witt index."""
    def q(x):
        val = sum(x[2 * k] * x[2 * k + 1] for k in range(r // 2))
        if r % 2:
            val += x[r - 1] ** 2
        return val
    return q


@pytest.mark.parametrize("n", [2, 3, 4])
def test_max_plane_brute_force_gf3(n):
    q = 3
    for r in range(1, n + 2):
        form = _split_form(r)
        best = -1
        for k in range(1, n + 2):
            if any(all(form(x) % q == 0 for x in points_of(S, q)) for S in subspaces(q, n + 1, k)):
                best = k - 1
        assert best == max_plane_dim_on_rank_r(n, r), (n, r)
