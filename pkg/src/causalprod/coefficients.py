"""Integer coefficient tables behind the series expansion of the limit kernel.

A path with s = m + n + p + 1 vertices and q upper vertices contributes, per
linear extension of rank (r, r'), one monomial to the degree-s term of the
kernel series.  Forward extensions (first endpoint below last) feed the
strictly-causal part; reversed extensions feed the anticausal part.  The
brute-force counters walk the path/extension model from :mod:`.lattice`; the
closed forms are independent binomial formulas.  Keeping the two code paths
disjoint is the point: each validates the other.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .combinatorics import binomial
from .lattice import enumerate_linear_extensions, enumerate_paths, essential_order

MAX_BRUTE_WEIGHT = 8


@dataclass(frozen=True)
class CoeffKey:
    """Table index (m, n, p; q) with 0 <= q <= m + n + p + 1."""

    m: int
    n: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if min(self.m, self.n, self.p) < 0:
            raise ValueError(f"m, n, p must be >= 0 in {self}")
        if not 0 <= self.q <= self.m + self.n + self.p + 1:
            raise ValueError(f"q out of range in {self}")

    @property
    def degree(self) -> int:
        return self.m + self.n + self.p + 1


def forward_count_closed(m: int, n: int, p: int, q: int) -> int:
    """Closed form for the forward-extension count at rank (m, p), q uppers.

    Piecewise in the sign of 2q - (m+n+p): zero below, C(n, q-m) - C(n, q) at
    equality, C(n, q-1) - C(n, q) above.  Total in q via the zero-convention
    binomial, so out-of-range q simply yields 0.
    """
    if min(m, n, p) < 0:
        raise ValueError(f"m, n, p must be >= 0, got {(m, n, p)}")
    w = m + n + p
    if 2 * q < w:
        return 0
    if 2 * q == w:
        return binomial(n, q - m) - binomial(n, q)
    return binomial(n, q - 1) - binomial(n, q)


def reversed_count_closed(m: int, n: int, p: int, q: int) -> int:
    """Closed form for the reversed-extension count: 1 iff m == p == q and n == 0."""
    if min(m, n, p) < 0:
        raise ValueError(f"m, n, p must be >= 0, got {(m, n, p)}")
    return 1 if (m == p == q and n == 0) else 0


@lru_cache(maxsize=None)
def _rank_census(s: int) -> Counter:
    """(q, rank, forward) -> number of linear extensions over all s-vertex paths."""
    census: Counter = Counter()
    for path in enumerate_paths(s):
        q = path.upper_count
        for ext in enumerate_linear_extensions(essential_order(path)):
            census[(q, ext.rank, ext.forward)] += 1
    return census


def _check_brute_bounds(m: int, n: int, p: int, max_weight: int) -> None:
    if min(m, n, p) < 0:
        raise ValueError(f"m, n, p must be >= 0, got {(m, n, p)}")
    if m + n + p > max_weight:
        raise ValueError(f"m+n+p={m + n + p} exceeds brute-force cap {max_weight}")


def forward_count_brute(m: int, n: int, p: int, q: int, max_weight: int = MAX_BRUTE_WEIGHT) -> int:
    """Count forward extensions of rank (m, p) over paths with q upper vertices."""
    _check_brute_bounds(m, n, p, max_weight)
    return _rank_census(m + n + p + 1)[(q, (m, p), True)]


def reversed_count_brute(m: int, n: int, p: int, q: int, max_weight: int = MAX_BRUTE_WEIGHT) -> int:
    """Count reversed extensions of rank (m+n+1, n+p+1) over paths with q uppers."""
    _check_brute_bounds(m, n, p, max_weight)
    return _rank_census(m + n + p + 1)[(q, (m + n + 1, n + p + 1), False)]


@dataclass(frozen=True)
class SeriesPolynomial:
    """Degree-s slice of the kernel series.

    Each term (m, n, p, q, c) stands for
    c * (-conj(nu))**q * nu**(s-q) * (x-a)^m (y-x)^n (b-y)^p / (m! n! p!),
    with (x, y) swapped when ``dagger`` is set (anticausal slice).  The complex
    prefactor is attached only at evaluation time; the stored data is exact.
    """

    degree: int
    dagger: bool
    terms: tuple[tuple[int, int, int, int, int], ...]

    def coeff_map(self) -> dict[tuple[int, int, int], dict[int, int]]:
        out: dict[tuple[int, int, int], dict[int, int]] = {}
        for m, n, p, q, c in self.terms:
            out.setdefault((m, n, p), {})[q] = c
        return out

    def evaluate(self, x: float, y: float, a: float, b: float, nu: complex) -> complex:
        if self.dagger:
            x, y = y, x
        nubar = nu.conjugate()
        total = 0j
        for m, n, p, q, c in self.terms:
            mono = (x - a) ** m * (y - x) ** n * (b - y) ** p
            mono /= math.factorial(m) * math.factorial(n) * math.factorial(p)
            total += c * (-nubar) ** q * nu ** (self.degree - q) * mono
        return total


def _series(s: int, count: Callable[[int, int, int, int], int], dagger: bool) -> SeriesPolynomial:
    if s < 1:
        raise ValueError(f"need degree s >= 1, got {s}")
    terms = []
    for m in range(s):
        for n in range(s - m):
            p = s - 1 - m - n
            for q in range(0, s + 1):
                c = count(m, n, p, q)
                if c != 0:
                    terms.append((m, n, p, q, c))
    return SeriesPolynomial(degree=s, dagger=dagger, terms=tuple(terms))


def causal_series(s: int) -> SeriesPolynomial:
    """All nonzero degree-s terms of the causal (x < y) kernel series."""
    return _series(s, forward_count_closed, dagger=False)


def anticausal_series(s: int) -> SeriesPolynomial:
    """All nonzero degree-s terms of the anticausal (y < x) kernel series."""
    return _series(s, reversed_count_closed, dagger=True)


@lru_cache(maxsize=None)
def _cached_series(s: int, dagger: bool) -> SeriesPolynomial:
    return anticausal_series(s) if dagger else causal_series(s)


def truncated_kernel(x: float, y: float, a: float, b: float, nu: complex,
                     s_max: int) -> complex:
    """Kernel value rebuilt from the coefficient tables, summed over degrees <= s_max.

    Independent of the closed Bessel form: this is the polynomial route, and
    its agreement with the closed form is one of the main cross-checks.
    """
    if x == y:
        return 0j
    total = 0j
    for s in range(1, s_max + 1):
        total += _cached_series(s, y < x).evaluate(x, y, a, b, nu)
    return total


def unitarity_identity_residual(
    alpha: int,
    beta: int,
    gamma: int,
    xi: int,
    forward_count: Callable[[int, int, int, int], int] | None = None,
) -> int:
    """Exact evaluation of the coefficient identity implied by unitarity.

    The identity pins, for every monomial index (alpha, beta, gamma) and every
    power index xi, a multi-sum of forward counts and binomials that must
    vanish.  Empty ranges (negative upper bounds) contribute nothing.  The
    ``forward_count`` hook exists so verification runs can inject a corrupted
    table as a negative control.
    """
    if min(alpha, beta, gamma) < 0 or xi < 0:
        raise ValueError("indices must be >= 0")
    count = forward_count if forward_count is not None else forward_count_closed

    total = count(alpha, beta, gamma, xi)
    if beta == 0 and alpha == gamma == xi - 1:
        total -= 1
    if alpha == xi and alpha == beta + gamma + 1:
        total -= binomial(alpha + gamma - 1, gamma)

    for m in range(alpha + 1):
        for p in range(gamma - alpha + m + 1):
            for n in range(alpha + beta - gamma - m + p):
                total -= (
                    count(m, n, alpha + beta - gamma - m - n + 2 * p - 1, xi - gamma + p - 1)
                    * binomial(alpha, m)
                    * binomial(gamma - alpha + m + n - p, n)
                    * binomial(gamma, p)
                )

    for m1 in range(alpha + 1):
        ca = binomial(alpha, m1)
        for m2 in range(beta + 1):
            cb = ca * binomial(beta, m2)
            sign_base = alpha + gamma - m1 + m2
            for n1 in range(gamma):
                for n2 in range(gamma - n1):
                    cn = cb * binomial(n1 + n2, n1)
                    for p1 in range(gamma - n1 - n2):
                        sign = -1 if (sign_base - n1 - p1) % 2 else 1
                        cp = sign * cn * binomial(gamma - 1 - n1 - n2, p1)
                        for t1 in range(xi + 1):
                            left = count(m1, n1 + beta - m2, p1, t1)
                            if left == 0:
                                continue
                            right = count(
                                m2 + alpha - m1,
                                n2,
                                gamma - 1 - n1 - n2 - p1,
                                alpha + gamma - xi - m1 - n1 - p1 + m2 + t1,
                            )
                            total += cp * left * right
    return total
