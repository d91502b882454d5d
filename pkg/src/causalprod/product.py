"""Ordered double products of plane rotations and their continuum-kernel estimates.

The N-point approximation is the product over all index pairs 1 <= j < k <= N
of the unitary that rotates the (j, k) coordinate plane by the angle
(b-a)|nu|/N, with phase nu/|nu| on the lower off-diagonal entry.  Factors with
disjoint index pairs commute, so the product is well defined once the pair
sequence is *allowed*: any pair must come before every pair that dominates it
componentwise.  Entries of (product - identity), scaled by N/(b-a), estimate
the limit kernel at cell midpoints to first order in 1/N.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .combinatorics import binomial
from .kernel import (
    ComplexParam,
    Interval,
    gauss_legendre,
    kernel_anticausal,
    kernel_causal,
    limit_kernel,
)

MAX_PRODUCT_DIM = 512


@dataclass(frozen=True)
class PairOrdering:
    """A sequencing of all pairs (j, k), 1 <= j < k <= N."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def row_major(cls, n: int) -> "PairOrdering":
        return cls(n, tuple((j, k) for j in range(1, n) for k in range(j + 1, n + 1)))

    @classmethod
    def column_major(cls, n: int) -> "PairOrdering":
        return cls(n, tuple((j, k) for k in range(2, n + 1) for j in range(1, k)))

    @classmethod
    def random_allowed(cls, n: int, seed: int) -> "PairOrdering":
        """Sample an allowed ordering by repeatedly popping a random minimal pair."""
        rng = random.Random(seed)
        remaining = {(j, k) for j in range(1, n) for k in range(j + 1, n + 1)}
        out: list[tuple[int, int]] = []
        while remaining:
            minimal = sorted(
                (j, k)
                for (j, k) in remaining
                if (j - 1, k) not in remaining and (j, k - 1) not in remaining
            )
            out.append(minimal[rng.randrange(len(minimal))])
            remaining.remove(out[-1])
        return cls(n, tuple(out))

    def is_allowed(self) -> bool:
        """True iff every pair precedes its componentwise successors.

        Checking the two covering moves (j, k) -> (j+1, k) and (j, k) -> (j, k+1)
        suffices by transitivity.
        """
        if sorted(self.pairs) != [(j, k) for j in range(1, self.n) for k in range(j + 1, self.n + 1)]:
            return False
        pos = {pair: i for i, pair in enumerate(self.pairs)}
        for (j, k), i in pos.items():
            if (j + 1, k) in pos and pos[(j + 1, k)] < i:
                return False
            if (j, k + 1) in pos and pos[(j, k + 1)] < i:
                return False
        return True


@dataclass
class DenseUnitary:
    """Dense N x N unitary carrying its interval and generator parameter."""

    matrix: np.ndarray
    interval: Interval
    param: ComplexParam

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def unitarity_defect(self) -> float:
        m = self.matrix
        return float(np.max(np.abs(m.conj().T @ m - np.eye(self.dim))))


def rotation_factor(n: int, j: int, k: int, iv: Interval, nu: ComplexParam) -> DenseUnitary:
    """The plane rotation acting on coordinates j < k.

    Diagonal cos((b-a)|nu|/n) on rows j and k, -conj(nu)/|nu| * sin at (j, k)
    and +nu/|nu| * sin at (k, j); identity elsewhere.
    """
    if not 1 <= j < k <= n:
        raise ValueError(f"need 1 <= j < k <= n, got j={j}, k={k}, n={n}")
    if nu.modulus == 0.0:
        raise ValueError("rotation factor undefined for nu = 0")
    theta = iv.width * nu.modulus / n
    c, s = math.cos(theta), math.sin(theta)
    phase = nu.value / nu.modulus
    m = np.eye(n, dtype=complex)
    m[j - 1, j - 1] = c
    m[k - 1, k - 1] = c
    m[j - 1, k - 1] = -phase.conjugate() * s
    m[k - 1, j - 1] = phase * s
    return DenseUnitary(matrix=m, interval=iv, param=nu)


def _resolve_ordering(n: int, ordering: PairOrdering | None) -> PairOrdering:
    if ordering is None:
        return PairOrdering.row_major(n)
    if ordering.n != n:
        raise ValueError(f"ordering built for n={ordering.n}, product needs n={n}")
    if not ordering.is_allowed():
        raise ValueError("pair ordering is not allowed")
    return ordering


def double_product(n: int, iv: Interval, nu: ComplexParam,
                   ordering: PairOrdering | None = None) -> DenseUnitary:
    """Ordered product of all rotation factors, identical for every allowed ordering.

    Each factor is applied as a two-column update of the accumulated matrix
    (O(n) per factor), never as a dense multiply.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n > MAX_PRODUCT_DIM:
        raise ValueError(f"n={n} exceeds cap {MAX_PRODUCT_DIM}")
    m = np.eye(n, dtype=complex)
    if nu.modulus == 0.0:
        return DenseUnitary(matrix=m, interval=iv, param=nu)
    resolved = _resolve_ordering(n, ordering)
    theta = iv.width * nu.modulus / n
    c, s = math.cos(theta), math.sin(theta)
    phase = nu.value / nu.modulus
    up, lo = -phase.conjugate() * s, phase * s
    for j, k in resolved.pairs:
        cj = m[:, j - 1].copy()
        ck = m[:, k - 1]
        m[:, j - 1] = c * cj + lo * ck
        m[:, k - 1] = up * cj + c * ck
    return DenseUnitary(matrix=m, interval=iv, param=nu)


def linearized_product(n: int, iv: Interval, nu: ComplexParam,
                       ordering: PairOrdering | None = None) -> np.ndarray:
    """Ordered product of the first-order factors I + ((b-a)/n) Z(j, k).

    Z(j, k) has -conj(nu) at (j, k) and +nu at (k, j).  Differs from the full
    rotation product by O(1/n) in max norm.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n > MAX_PRODUCT_DIM:
        raise ValueError(f"n={n} exceeds cap {MAX_PRODUCT_DIM}")
    m = np.eye(n, dtype=complex)
    if nu.modulus == 0.0:
        return m
    resolved = _resolve_ordering(n, ordering)
    step = iv.width / n
    up, lo = -nu.value.conjugate() * step, nu.value * step
    for j, k in resolved.pairs:
        cj = m[:, j - 1].copy()
        m[:, j - 1] += lo * m[:, k - 1]
        m[:, k - 1] += up * cj
    return m


def chain_count_matrix(n: int, s: int, r: int, r_prime: int, iv: Interval) -> np.ndarray:
    """Scaled matrix counting increasing index chains with a given rank profile.

    Entry (j, k) with j < k counts, times ((b-a)/n)^s, the chains with r
    indices below j, s-1-r-r' strictly between j and k, and r' above k; with
    r + r' > s the roles reverse and the support moves to k < j.  The split
    case r + r' == s is empty and rejected.
    """
    if r < 0 or r_prime < 0 or r > s or r_prime > s:
        raise ValueError(f"rank ({r}, {r_prime}) out of range for s={s}")
    if r + r_prime == s:
        raise ValueError(f"rank ({r}, {r_prime}) with r + r' == s is infeasible")
    if s > n - 1:
        raise ValueError(f"need s <= n - 1, got s={s}, n={n}")
    scale = (iv.width / n) ** s
    m = np.zeros((n, n))
    if r + r_prime < s:
        mid = s - 1 - r - r_prime
        for j in range(1, n + 1):
            left = binomial(j - 1, r)
            if left == 0:
                continue
            for k in range(j + 1, n + 1):
                m[j - 1, k - 1] = scale * left * binomial(k - j - 1, mid) * binomial(n - k, r_prime)
    else:
        mid = r + r_prime - s - 1
        for k in range(1, n + 1):
            left = binomial(k - 1, s - r_prime)
            if left == 0:
                continue
            for j in range(k + 1, n + 1):
                m[j - 1, k - 1] = scale * left * binomial(j - k - 1, mid) * binomial(n - j, s - r)
    return m


def midpoints(n: int, iv: Interval) -> np.ndarray:
    """Cell midpoints a + (j - 1/2)(b - a)/n for j = 1..n."""
    return iv.a + (np.arange(1, n + 1) - 0.5) * (iv.width / n)


def kernel_estimate(w: DenseUnitary) -> tuple[np.ndarray, np.ndarray]:
    """Midpoint grid and entrywise kernel estimate (W - I) * n / (b - a)."""
    n = w.dim
    est = (w.matrix - np.eye(n)) * (n / w.interval.width)
    return midpoints(n, w.interval), est


def sample_points(iv: Interval, per_side: int = 8, margin: float = 0.12,
                  min_gap: float = 0.08) -> tuple[tuple[float, float], ...]:
    """Deterministic interior sample grid keeping clear of the boundary and diagonal."""
    w = iv.width
    xs = np.linspace(iv.a + margin * w, iv.b - margin * w, per_side)
    return tuple(
        (float(x), float(y))
        for x in xs
        for y in xs
        if abs(x - y) >= min_gap * w
    )


@dataclass(frozen=True)
class PiecewisePolynomial:
    """Polynomial on [lo, hi), zero elsewhere; coeffs are ascending powers of x."""

    lo: float
    hi: float
    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi})")

    def __call__(self, x: float) -> float:
        if not self.lo <= x < self.hi:
            return 0.0
        return sum(c * x**e for e, c in enumerate(self.coeffs))

    def integral(self, lo: float, hi: float) -> float:
        """Exact integral over [lo, hi) intersected with the support."""
        lo, hi = max(lo, self.lo), min(hi, self.hi)
        if hi <= lo:
            return 0.0
        return sum(c * (hi ** (e + 1) - lo ** (e + 1)) / (e + 1)
                   for e, c in enumerate(self.coeffs))


def indicator_components(fn: PiecewisePolynomial, n: int, iv: Interval) -> np.ndarray:
    """Exact coefficients of fn against the normalized cell indicators."""
    step = iv.width / n
    scale = math.sqrt(n / iv.width)
    return np.array([
        scale * fn.integral(iv.a + j * step, iv.a + (j + 1) * step)
        for j in range(n)
    ])


def bilinear_form(w: DenseUnitary, left: PiecewisePolynomial,
                  right: PiecewisePolynomial) -> complex:
    """<left, (W - I) right> computed exactly in the indicator basis.

    W - I kills the orthogonal complement of the cell indicators and maps
    their span to itself, so the exact function components suffice.
    """
    n = w.dim
    vl = indicator_components(left, n, w.interval)
    vr = indicator_components(right, n, w.interval)
    return complex(vl @ ((w.matrix - np.eye(n)) @ vr))


def limit_bilinear_form(left: PiecewisePolynomial, right: PiecewisePolynomial,
                        iv: Interval, nu: ComplexParam, quad_n: int = 48,
                        tol: float = 1e-12) -> complex:
    """<left, K right> for the limit kernel K, by nested Gauss-Legendre.

    The inner integral is split at the diagonal, where the kernel switches
    between its causal and anticausal branches.
    """
    if nu.modulus == 0.0:
        return 0j

    def inner(x: float) -> complex:
        total = 0j
        lo, hi = right.lo, right.hi
        if x > lo:
            total += gauss_legendre(
                lambda y: kernel_anticausal(x, y, iv, nu, tol) * right(y),
                lo, min(x, hi), quad_n)
        if x < hi:
            total += gauss_legendre(
                lambda y: kernel_causal(x, y, iv, nu, tol) * right(y),
                max(x, lo), hi, quad_n)
        return total

    return gauss_legendre(lambda x: left(x) * inner(x), left.lo, left.hi, quad_n)


def first_excluded_term_bound(n: int, iv: Interval, nu: ComplexParam) -> float:
    """Heuristic O(1/n) cap on the midpoint estimate error.

    Each factor's linearization drops a term quadratic in the rotation angle
    (b-a)|nu|/n and an entry is touched by O(n) factors; the remaining
    index-count vs monomial defect carries the same 1/n order with constants
    controlled by e^{(b-a)|nu|}.  Generous by design: used as an upper fence
    in convergence studies, not as an error model.
    """
    u = iv.width * nu.modulus
    return u * u * (1.0 + u) * math.exp(u) / n


@dataclass(frozen=True)
class ConvergenceStudy:
    """Max midpoint errors against the limit kernel for a ladder of sizes."""

    ns: tuple[int, ...]
    max_errors: tuple[float, ...]
    bounds: tuple[float, ...]
    fitted_rate: float

    def ratios(self) -> tuple[float, ...]:
        return tuple(
            self.max_errors[i] / self.max_errors[i + 1]
            for i in range(len(self.ns) - 1)
            if self.max_errors[i + 1] > 0
        )


def convergence_study(ns: Sequence[int], samples: Iterable[tuple[float, float]],
                      iv: Interval, nu: ComplexParam, tol: float = 1e-12) -> ConvergenceStudy:
    """Per-n max error between the product's kernel estimate and the limit kernel.

    Each sample point is mapped to its containing cell pair; the comparison
    happens at that cell's midpoints.  The fitted rate is the slope of
    log(error) against log(n); errors that are exactly zero (nu = 0) give a
    fitted rate of 0 by convention.
    """
    ns = tuple(ns)
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError(f"sizes must be strictly increasing, got {ns}")
    samples = tuple(samples)
    errors = []
    for n in ns:
        w = double_product(n, iv, nu)
        mids, est = kernel_estimate(w)
        step = iv.width / n
        worst = 0.0
        for x, y in samples:
            j = min(int((x - iv.a) / step), n - 1)
            k = min(int((y - iv.a) / step), n - 1)
            if j == k:
                continue
            exact = limit_kernel(float(mids[j]), float(mids[k]), iv, nu, tol)
            worst = max(worst, abs(est[j, k] - exact))
        errors.append(worst)
    bounds = tuple(first_excluded_term_bound(n, iv, nu) for n in ns)
    if all(e > 0 for e in errors):
        slope = np.polyfit(np.log(ns), np.log(errors), 1)[0]
        rate = float(-slope)
    else:
        rate = 0.0
    return ConvergenceStudy(ns=ns, max_errors=tuple(errors), bounds=bounds, fitted_rate=rate)
