import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from causalprod.coefficients import (
    CoeffKey,
    anticausal_series,
    causal_series,
    forward_count_brute,
    forward_count_closed,
    reversed_count_brute,
    reversed_count_closed,
    truncated_kernel,
    unitarity_identity_residual,
)
from causalprod.combinatorics import catalan_general
from series_oracle import isometry_series_defects

# degree-1..3 series slices, frozen as (m, n, p) -> {q: coefficient}
EXPECTED_CAUSAL = {
    1: {(0, 0, 0): {1: 1}},
    2: {(0, 0, 1): {1: 1}, (1, 0, 0): {1: 1}, (0, 1, 0): {2: 1}},
    3: {(0, 2, 0): {2: 1, 3: 1}, (0, 1, 1): {2: 1}, (1, 1, 0): {2: 1}, (1, 0, 1): {1: 1}},
}
EXPECTED_ANTICAUSAL = {
    1: {(0, 0, 0): {0: 1}},
    2: {},
    3: {(1, 0, 1): {1: 1}},
}


def test_closed_form_examples():
    assert forward_count_closed(0, 0, 0, 1) == 1
    assert forward_count_closed(0, 1, 0, 2) == 1
    assert forward_count_closed(1, 0, 1, 1) == 1  # 2q == m+n+p branch
    assert forward_count_closed(0, 0, 0, 0) == 0
    assert reversed_count_closed(1, 0, 1, 1) == 1
    assert reversed_count_closed(0, 0, 0, 0) == 1
    assert reversed_count_closed(1, 1, 1, 1) == 0


def test_brute_examples():
    assert forward_count_brute(0, 0, 0, 1) == 1
    assert forward_count_brute(1, 2, 1, 2) == 1
    assert forward_count_brute(0, 2, 0, 2) == 1
    assert reversed_count_brute(0, 0, 0, 0) == 1
    assert reversed_count_brute(1, 0, 1, 1) == 1
    assert all(reversed_count_brute(0, 1, 0, q) == 0 for q in range(0, 3))


def test_brute_matches_closed_small():
    for w in range(0, 6):
        for m in range(w + 1):
            for n in range(w + 1 - m):
                p = w - m - n
                for q in range(0, w + 2):
                    assert forward_count_brute(m, n, p, q) == forward_count_closed(m, n, p, q)
                    assert reversed_count_brute(m, n, p, q) == reversed_count_closed(m, n, p, q)


@settings(max_examples=200)
@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7), st.integers(0, 8))
def test_mirror_symmetry(m, n, p, q):
    if m + n + p <= 7:
        assert forward_count_closed(m, n, p, q) == forward_count_closed(p, n, m, q)
        assert forward_count_brute(m, n, p, q) == forward_count_brute(p, n, m, q)


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10), st.integers(-2, 12))
def test_vanishing_below_half_weight(m, n, p, q):
    if 2 * q < m + n + p:
        assert forward_count_closed(m, n, p, q) == 0


def test_case_identities_closed_form():
    for k in range(0, 7):
        assert forward_count_closed(0, 2 * k, 0, k + 1) == catalan_general(k, k, 0)
        for n in range(0, 2 * k + 2):
            assert forward_count_closed(0, n, 2 * k - n + 1, k + 1) == catalan_general(k, n - k, 0)
            assert forward_count_closed(2 * k - n + 1, n, 0, k + 1) == catalan_general(k, n - k, 0)
        for r in range(0, k + 2):
            for r_prime in range(0, 2 * k - r + 1):
                assert forward_count_closed(r, 2 * k - r - r_prime, r_prime, k) == \
                    catalan_general(k - r, k - r_prime, r - 1)
                assert catalan_general(k - r, k - r_prime, r - 1) == \
                    catalan_general(k - r_prime, k - r, r_prime - 1)


def test_case_identities_brute_small():
    for k in range(0, 3):
        assert forward_count_brute(0, 2 * k, 0, k + 1) == catalan_general(k, k, 0)
        for r in range(0, k + 1):
            for r_prime in range(0, 2 * k - r + 1):
                assert forward_count_brute(r, 2 * k - r - r_prime, r_prime, k) == \
                    catalan_general(k - r, k - r_prime, r - 1)


def test_brute_bounds():
    with pytest.raises(ValueError):
        forward_count_brute(4, 4, 4, 6)
    with pytest.raises(ValueError):
        reversed_count_brute(-1, 0, 0, 0)


def test_coeff_key_validation():
    key = CoeffKey(1, 2, 1, 2)
    assert key.degree == 5
    with pytest.raises(ValueError):
        CoeffKey(-1, 0, 0, 0)
    with pytest.raises(ValueError):
        CoeffKey(0, 0, 0, 2)


def test_series_slices_match_frozen_tables():
    for s, expected in EXPECTED_CAUSAL.items():
        assert causal_series(s).coeff_map() == expected
    for s, expected in EXPECTED_ANTICAUSAL.items():
        assert anticausal_series(s).coeff_map() == expected
    assert not anticausal_series(2).terms  # no even-degree anticausal slice


def test_series_polynomial_evaluation():
    # degree-1 causal slice is the constant -conj(nu)
    nu = 0.8 + 0.3j
    val = causal_series(1).evaluate(0.2, 0.7, 0.0, 1.0, nu)
    assert abs(val - (-nu.conjugate())) < 1e-15
    # degree-1 anticausal slice is the constant +nu
    val = anticausal_series(1).evaluate(0.7, 0.2, 0.0, 1.0, nu)
    assert abs(val - nu) < 1e-15


def test_truncated_kernel_diagonal_zero():
    assert truncated_kernel(0.4, 0.4, 0.0, 1.0, 1 + 0.5j, 10) == 0j


def test_identity_residual_examples():
    assert unitarity_identity_residual(0, 0, 1, 1) == 0
    assert unitarity_identity_residual(1, 0, 1, 1) == 0
    assert unitarity_identity_residual(2, 1, 2, 3) == 0


def test_identity_residual_rejects_negative_indices():
    with pytest.raises(ValueError):
        unitarity_identity_residual(-1, 0, 0, 0)


def test_identity_residual_detects_corruption():
    def corrupted(m, n, p, q):
        val = forward_count_closed(m, n, p, q)
        return val + 1 if (m, n, p, q) == (1, 0, 1, 1) else val

    assert unitarity_identity_residual(1, 0, 1, 1, forward_count=corrupted) != 0


def test_isometry_series_oracle_exact():
    """Truncated series satisfies the isometry identity exactly through degree 7."""
    assert isometry_series_defects(8) == []
