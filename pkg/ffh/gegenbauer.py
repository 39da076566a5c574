"""
Gegenbauer polynomials, exact weighted moments, sphere areas and Gauss-Jacobi
quadrature for the weight (1 - t^2)^((p-3)/2).
"""

import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Tuple, Union

import numpy as np

from ffh.clifford import Multivector
from ffh.errors import DimensionMismatchError, DomainError, QuadratureError
from ffh.polyalg import CartesianPoly, SphericalMonogenic
from ffh.radial import ScalarExt

logger = logging.getLogger(__name__)

UNIT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class GegenbauerPoly:
    """C_k^lambda(t) with exact rational coefficients (index = power of t)."""

    k: int
    lam: Fraction
    coeffs: Tuple[Fraction, ...]

    def evaluate(self, t):
        if isinstance(t, (Fraction, int)):
            value = Fraction(0)
            for c in reversed(self.coeffs):
                value = value * t + c
            return value
        return np.polynomial.polynomial.polyval(t, [float(c) for c in self.coeffs])

    def value_at_one(self) -> Fraction:
        return self.evaluate(Fraction(1))

    def text(self) -> str:
        pieces = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            monomial = "" if power == 0 else ("t" if power == 1 else f"t^{power}")
            if not monomial:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(monomial)
            elif c == -1:
                pieces.append(f"-{monomial}")
            else:
                pieces.append(f"{c}*{monomial}")
        return " + ".join(pieces).replace("+ -", "- ") or "0"


def lambda_for(p: int) -> Fraction:
    return Fraction(p - 2, 2)


@lru_cache(maxsize=None)
def gegenbauer(k: int, lam) -> GegenbauerPoly:
    """C_0 = 1, C_1 = 2 lam t, k C_k = 2(k + lam - 1) t C_{k-1} - (k + 2 lam - 2) C_{k-2}."""
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"Gegenbauer parameter must be positive (p >= 3), got lambda = {lam}")
    if k < 0:
        raise DomainError(f"degree must be non-negative, got {k}")
    previous = [Fraction(1)]
    if k == 0:
        return GegenbauerPoly(0, lam, tuple(previous))
    current = [Fraction(0), 2 * lam]
    for n in range(2, k + 1):
        shifted = [Fraction(0)] + [2 * (n + lam - 1) * c for c in current]
        for i, c in enumerate(previous):
            shifted[i] -= (n + 2 * lam - 2) * c
        previous, current = current, [c / n for c in shifted]
    return GegenbauerPoly(k, lam, tuple(current))


def _gamma_half(twice: int) -> Tuple[Fraction, int]:
    """Gamma(twice / 2) as (rational, number of sqrt(pi) factors)."""
    if twice <= 0:
        raise DomainError(f"Gamma({twice}/2) is not defined here")
    if twice % 2 == 0:
        return Fraction(math.factorial(twice // 2 - 1)), 0
    n = (twice - 1) // 2
    # Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
    return Fraction(math.factorial(2 * n), 4**n * math.factorial(n)), 1


@lru_cache(maxsize=None)
def monomial_moment(j: int, p: int) -> ScalarExt:
    """Integral of t^j (1 - t^2)^((p-3)/2) over [-1, 1]."""
    if p < 3:
        raise DomainError(f"weight exponent needs p >= 3, got p = {p}")
    if j % 2:
        return ScalarExt()
    # Beta((j+1)/2, (p-1)/2)
    a, sa = _gamma_half(j + 1)
    b, sb = _gamma_half(p - 1)
    c, sc = _gamma_half(j + p)
    half_pi = sa + sb - sc
    return ScalarExt(a * b / c, half_pi // 2)


@lru_cache(maxsize=None)
def moment(n: int, k: int, p: int) -> ScalarExt:
    """Integral of t^n C_k(t) (1 - t^2)^((p-3)/2) over [-1, 1], exact."""
    if n < 0 or k < 0:
        raise DomainError(f"moment indices must be non-negative, got n={n}, k={k}")
    if n < k or (n - k) % 2:
        return ScalarExt()
    ck = gegenbauer(k, lambda_for(p))
    total = ScalarExt()
    for i, c in enumerate(ck.coeffs):
        if c:
            total = total + monomial_moment(n + i, p) * c
    return total


def surface_area(d: int) -> ScalarExt:
    """|S^(d-1)| = 2 pi^(d/2) / Gamma(d/2)."""
    if d <= 0:
        raise DomainError(f"sphere dimension must be positive, got d = {d}")
    rat, half = _gamma_half(d)
    # the sqrt(pi) of an odd d cancels one from pi^(d/2)
    return ScalarExt(2 / rat, (d - half) // 2)


@dataclass(frozen=True)
class QuadratureRule:
    p: int
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def order(self) -> int:
        return len(self.nodes)

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        return float(np.dot(self.weights, f(self.nodes)))


@lru_cache(maxsize=64)
def gauss_jacobi_rule(order: int, p: int) -> QuadratureRule:
    """Golub-Welsch rule for (1 - t^2)^a with a = (p - 3) / 2."""
    if order < 1:
        raise DomainError(f"quadrature order must be positive, got {order}")
    if p < 3:
        raise DomainError(f"weight exponent needs p >= 3, got p = {p}")
    start = time.time()
    mu0 = float(monomial_moment(0, p))
    if order == 1:
        return QuadratureRule(p, np.zeros(1), np.array([mu0]))

    a = (p - 3) / 2
    n = np.arange(1, order, dtype=float)
    off = np.sqrt(n * (n + 2 * a) / ((2 * n + 2 * a + 1) * (2 * n + 2 * a - 1)))
    try:
        nodes, vectors = np.linalg.eigh(np.diag(off, -1))
    except np.linalg.LinAlgError as e:
        raise QuadratureError(f"eigen-solver failed for order {order}, p = {p}: {e}") from e
    weights = mu0 * vectors[0, :] ** 2

    if not (np.all(np.isfinite(nodes)) and np.all(np.abs(nodes) < 1) and np.all(weights > 0)):
        raise QuadratureError(f"degenerate Gauss-Jacobi rule for order {order}, p = {p}")
    if abs(weights.sum() - mu0) > 1e-10 * mu0:
        raise QuadratureError(f"weights of order {order}, p = {p} sum to {weights.sum()}, expected {mu0}")
    # symmetric weight: enforce exact symmetry of nodes
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    logger.debug(f"[⏱️] Gauss-Jacobi rule order={order} p={p} built in {time.time() - start:.4f}s")
    return QuadratureRule(p, nodes, weights)


def funk_hecke_oracle(
    F: Callable[[np.ndarray], np.ndarray],
    Yk: Union[SphericalMonogenic, CartesianPoly],
    xi,
    p: int = 3,
    polar: int = 64,
    azimuth: int = 128,
    quad_order: int = 64,
) -> Tuple[Multivector, Multivector]:
    """Brute-force sphere integral of F(<xi, eta>) Y_k(eta) against the one-dimensional formula.

    Returns ``(lhs, rhs)`` as float multivectors.
    """
    if p != 3:
        raise DomainError(f"the sphere oracle integrates over S^2 only, got p = {p}")
    poly = Yk.poly if isinstance(Yk, SphericalMonogenic) else Yk
    if poly.nvars != 3 or poly.axis:
        raise DimensionMismatchError(f"Y_k must be a polynomial in three variables, got {poly.variables}")
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (3,) or abs(np.linalg.norm(xi) - 1) > UNIT_TOLERANCE:
        raise DomainError(f"xi must be a unit vector in R^3, got {xi.tolist()}")
    degree = poly.homogeneous_degree()
    if not isinstance(degree, int):
        raise DomainError(f"Y_k must be homogeneous, got degree {degree}")

    start = time.time()
    # polar direction: Gauss-Legendre in u = cos(theta); azimuth: trapezoid
    legendre = gauss_jacobi_rule(polar, 3)
    u = legendre.nodes
    phi = 2 * np.pi * np.arange(azimuth) / azimuth
    uu, pp = np.meshgrid(u, phi, indexing="ij")
    s = np.sqrt(1 - uu**2)
    eta = np.stack([s * np.cos(pp), s * np.sin(pp), uu]).reshape(3, -1)
    dS = (legendre.weights[:, None] * np.full((1, azimuth), 2 * np.pi / azimuth)).reshape(-1)
    f = np.asarray(F(xi @ eta), dtype=float) * dS
    lhs = Multivector(poly.dim, {mask: float(np.dot(f, values)) for mask, values in poly.evaluate_grid(eta).items()})

    ck = gegenbauer(degree, lambda_for(p))
    rule = gauss_jacobi_rule(quad_order, p)
    radial = rule.integrate(lambda t: np.asarray(F(t), dtype=float) * ck.evaluate(t))
    factor = float(surface_area(p - 1)) * radial / float(ck.value_at_one())
    rhs = poly.evaluate([float(c) for c in xi]).scale(factor)
    logger.info(f"[⏱️] Funk-Hecke oracle k={degree} on a {polar}x{azimuth} grid in {time.time() - start:.3f}s")
    return lhs, rhs


def relative_gap(lhs: Multivector, rhs: Multivector, floor: float = 1e-300) -> float:
    """Max-norm distance relative to the larger operand (absolute when both vanish)."""
    scale = max(lhs.max_norm(), rhs.max_norm())
    gap = (lhs - rhs).max_norm()
    return gap if scale < floor else gap / scale

