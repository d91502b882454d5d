"""Bessel-type series and the closed-form kernel of the limit operator.

The building block is the entire two-variable series

    B_j(x, y) = sum_{n>=0} (-1)^{n+j} x^{n+j} y^n / ((n+j)! n!)
              = (-1)^j (x/y)^{j/2} J_j(2 sqrt(xy)),

together with its one-variable profile G_j(x) = J_j(2 sqrt(x)) / x^{j/2}.
All evaluations are truncated partial sums with a rigorous factorial tail
bound: once the term ratio drops below 1/2 the remaining tail is dominated by
the last term, so stopping at |term| <= tol * max(1, |sum|) keeps the
truncation error below the requested tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

DEFAULT_TOL = 1e-12
_MAX_TERMS = 600


@dataclass(frozen=True)
class ComplexParam:
    """Generator parameter nu = lam + i*mu with modulus and phase."""

    lam: float
    mu: float

    @property
    def value(self) -> complex:
        return complex(self.lam, self.mu)

    @property
    def modulus(self) -> float:
        return math.hypot(self.lam, self.mu)

    @property
    def phase(self) -> float:
        if self.modulus == 0.0:
            raise ValueError("phase undefined for nu = 0")
        return math.atan2(self.mu, self.lam)


@dataclass(frozen=True)
class Interval:
    """Half-open carrier interval [a, b)."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not self.a < self.b:
            raise ValueError(f"need a < b, got [{self.a}, {self.b})")

    @property
    def width(self) -> float:
        return self.b - self.a


def bessel_series(j: int, x: float, y: float, tol: float = DEFAULT_TOL) -> float:
    """Partial sum of B_j(x, y) with truncation error below tol.

    j = -1 is understood as B_{-1}(x, y) = -B_1(y, x), which is the value of
    d/dx B_0 with the opposite sign.
    """
    if tol <= 0:
        raise ValueError(f"need tol > 0, got {tol}")
    if j == -1:
        return -bessel_series(1, y, x, tol)
    if j < 0:
        raise ValueError(f"order must be >= -1, got {j}")
    term = (-1.0) ** j * x**j / math.factorial(j)
    total = term
    for n in range(1, _MAX_TERMS):
        term *= -x * y / ((n + j) * n)
        total += term
        ratio = abs(x * y) / ((n + j + 1) * (n + 1))
        if ratio < 0.5 and abs(term) <= tol * max(1.0, abs(total)):
            return total
    raise ArithmeticError(f"series for B_{j}({x}, {y}) did not settle in {_MAX_TERMS} terms")


def bessel_profile(j: int, x: float, tol: float = DEFAULT_TOL) -> float:
    """Partial sum of G_j(x) = sum_{k>=0} (-1)^k x^k / (k! (k+j)!)."""
    if tol <= 0:
        raise ValueError(f"need tol > 0, got {tol}")
    if j < 0:
        raise ValueError(f"order must be >= 0, got {j}")
    term = 1.0 / math.factorial(j)
    total = term
    for k in range(1, _MAX_TERMS):
        term *= -x / (k * (k + j))
        total += term
        ratio = abs(x) / ((k + 1) * (k + j + 1))
        if ratio < 0.5 and abs(term) <= tol * max(1.0, abs(total)):
            return total
    raise ArithmeticError(f"series for G_{j}({x}) did not settle in {_MAX_TERMS} terms")


def kernel_causal(x: float, y: float, iv: Interval, nu: ComplexParam,
                  tol: float = DEFAULT_TOL) -> complex:
    """Kernel value on the causal region a <= x < y < b.

    nu*B_0((y-a)|nu|, (b-x)|nu|) + |nu|*B_1((b-a)|nu|, (y-x)|nu|)
    - (nu + conj(nu)) * sum_q B_q((y-x)|nu|, (b-a)|nu|) (conj(nu)/|nu|)^q.

    The q-sum's weights are unimodular, so its truncation relies on the decay
    of B_q in the order; it stops after three consecutive |B_q| < tol.
    """
    if not (iv.a <= x < y < iv.b):
        raise ValueError(f"({x}, {y}) not in the causal region of {iv}")
    r = nu.modulus
    if r == 0.0:
        return 0j
    v = nu.value
    total = v * bessel_series(0, (y - iv.a) * r, (iv.b - x) * r, tol)
    total += r * bessel_series(1, iv.width * r, (y - x) * r, tol)
    two_lam = v + v.conjugate()
    if two_lam != 0:
        phase_bar = v.conjugate() / r
        acc = 0j
        weight = 1.0 + 0j
        quiet = 0
        q = 0
        while quiet < 3:
            if q > _MAX_TERMS:
                raise ArithmeticError("order sum did not settle")
            bq = bessel_series(q, (y - x) * r, iv.width * r, tol)
            acc += bq * weight
            quiet = quiet + 1 if abs(bq) < tol else 0
            weight *= phase_bar
            q += 1
        total -= two_lam * acc
    return total


def kernel_anticausal(x: float, y: float, iv: Interval, nu: ComplexParam,
                      tol: float = DEFAULT_TOL) -> complex:
    """Kernel value on the anticausal region a <= y < x < b: nu*B_0((y-a)|nu|, (b-x)|nu|)."""
    if not (iv.a <= y < x < iv.b):
        raise ValueError(f"({x}, {y}) not in the anticausal region of {iv}")
    r = nu.modulus
    if r == 0.0:
        return 0j
    return nu.value * bessel_series(0, (y - iv.a) * r, (iv.b - x) * r, tol)


def limit_kernel(x: float, y: float, iv: Interval, nu: ComplexParam,
                 tol: float = DEFAULT_TOL) -> complex:
    """Kernel of (limit operator - identity) on [a, b)^2; zero on the diagonal."""
    if not (iv.a <= x < iv.b and iv.a <= y < iv.b):
        raise ValueError(f"({x}, {y}) outside {iv} square")
    if x < y:
        return kernel_causal(x, y, iv, nu, tol)
    if y < x:
        return kernel_anticausal(x, y, iv, nu, tol)
    return 0j


@dataclass(frozen=True)
class KernelField:
    """Callable kernel of (limit operator - identity) for fixed interval and parameter."""

    interval: Interval
    param: ComplexParam
    tol: float = DEFAULT_TOL

    def __call__(self, x: float, y: float) -> complex:
        return limit_kernel(x, y, self.interval, self.param, self.tol)


@lru_cache(maxsize=None)
def _gl_nodes(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return tuple(nodes), tuple(weights)


def gauss_legendre(fn: Callable[[float], complex], lo: float, hi: float, n: int) -> complex:
    """n-node Gauss-Legendre quadrature of fn over (lo, hi)."""
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    nodes, weights = _gl_nodes(n)
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    return half * sum(w * fn(mid + half * t) for t, w in zip(nodes, weights))


def isometry_residual(x: float, y: float, iv: Interval, nu: ComplexParam,
                      quad_n: int = 64, tol: float = DEFAULT_TOL) -> complex:
    """Defect of the isometry identity at a < x < y < b; zero when the operator is unitary.

    f(x,y) + conj(g(y,x)) + int_a^x g(x,z)conj(g(y,z)) dz
    + int_x^y f(x,z)conj(g(y,z)) dz + int_y^b f(x,z)conj(f(y,z)) dz,

    with f the causal and g the anticausal kernel part.  Each panel gets
    quad_n Gauss-Legendre nodes; the panel split at x and y matters because
    the kernel switches branch there.
    """
    if not (iv.a < x < y < iv.b):
        raise ValueError(f"need a < x < y < b, got x={x}, y={y} in {iv}")
    if quad_n < 2:
        raise ValueError(f"need quad_n >= 2, got {quad_n}")

    def f(u: float, z: float) -> complex:
        return kernel_causal(u, z, iv, nu, tol)

    def g(u: float, z: float) -> complex:
        return kernel_anticausal(u, z, iv, nu, tol)

    total = f(x, y) + g(y, x).conjugate()
    total += gauss_legendre(lambda z: g(x, z) * g(y, z).conjugate(), iv.a, x, quad_n)
    total += gauss_legendre(lambda z: f(x, z) * g(y, z).conjugate(), x, y, quad_n)
    total += gauss_legendre(lambda z: f(x, z) * f(y, z).conjugate(), y, iv.b, quad_n)
    return total


def lommel_residual(alpha: float, beta: float, x: float, quad_n: int = 64,
                    tol: float = DEFAULT_TOL) -> float:
    """|int_0^x G_0(alpha z) G_0(beta z) dz - closed form| (Lommel integral).

    Closed form: (alpha x G_1(alpha x) G_0(beta x) - beta x G_1(beta x)
    G_0(alpha x)) / (alpha - beta); requires alpha != beta.
    """
    if alpha <= 0 or beta <= 0:
        raise ValueError("need alpha, beta > 0")
    if alpha == beta:
        raise ValueError("closed form needs alpha != beta")
    if x < 0:
        raise ValueError("need x >= 0")
    lhs = gauss_legendre(
        lambda z: bessel_profile(0, alpha * z, tol) * bessel_profile(0, beta * z, tol),
        0.0, x, quad_n,
    )
    rhs = (
        alpha * x * bessel_profile(1, alpha * x, tol) * bessel_profile(0, beta * x, tol)
        - beta * x * bessel_profile(1, beta * x, tol) * bessel_profile(0, alpha * x, tol)
    ) / (alpha - beta)
    return abs(lhs - rhs)


def sonine_gegenbauer_residual(beta: float, z: float, quad_n: int = 64,
                               tol: float = DEFAULT_TOL) -> float:
    """|int_0^z G_1(w) G_1(w + beta) dw - closed form| (Sonine-Gegenbauer type).

    Closed form: (z G_1(z) G_0(z+beta) - (z+beta) G_1(z+beta) G_0(z)) / beta
    + G_1(beta).
    """
    if beta <= 0:
        raise ValueError("need beta > 0")
    if z < 0:
        raise ValueError("need z >= 0")
    lhs = gauss_legendre(
        lambda w: bessel_profile(1, w, tol) * bessel_profile(1, w + beta, tol),
        0.0, z, quad_n,
    )
    rhs = (
        z * bessel_profile(1, z, tol) * bessel_profile(0, z + beta, tol)
        - (z + beta) * bessel_profile(1, z + beta, tol) * bessel_profile(0, z, tol)
    ) / beta + bessel_profile(1, beta, tol)
    return abs(lhs - rhs)
