"""
The Fueter-Funk-Hecke constructions end to end.

Exact path: a polynomial seed h(z) = sum c_n z^n with Gaussian-rational
coefficients is split into u + i v, pushed through the Gegenbauer-weighted
profile integrals, placed into the sectors ``1`` and ``wn`` and hit with the
iterated radial Laplacian.  Numeric path: the same integrals by Gauss-Jacobi
quadrature and the Laplacian by central finite differences.
"""

import logging
import math
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ffh.clifford import mask_product
from ffh.config import Config
from ffh.errors import DomainError, NotCartesianConvertible, StencilOutsideDomainError
from ffh.gegenbauer import gauss_jacobi_rule, gegenbauer, lambda_for, moment
from ffh.polyalg import BLOCK_X, BLOCK_Y, CartesianPoly, SphericalMonogenic, monogenic_or_default
from ffh.radial import (
    AXIAL_VARS,
    PROFILE_VARS,
    RADIAL_VARS,
    SN,
    SW,
    SWN,
    LaurentBi,
    RadialElement,
    ScalarExt,
    harmonic_seed_parts,
    iterated_radial_laplacian,
    ladder_I,
    ladder_II,
    to_cartesian,
    vekua_residual_biaxial,
)

logger = logging.getLogger(__name__)

EXACT = "exact"
NUMERIC = "numeric"

Gaussian = Tuple[Fraction, Fraction]


def _always_valid(theta, rho):
    return np.ones(np.broadcast(theta, rho).shape, dtype=bool)


@dataclass(frozen=True)
class HolomorphicInput:
    """Seed h(z): exact Gaussian-rational coefficients or a numeric callable.

    ``valid(theta, rho)`` declares where the numeric callable may be sampled
    at z = theta + i rho.
    """

    kind: str
    coefficients: Mapping[int, Gaussian] = field(default_factory=dict)
    function: Optional[Callable[[np.ndarray], np.ndarray]] = None
    valid: Callable = _always_valid
    label: str = ""

    @classmethod
    def exact(cls, coefficients: Mapping[int, object]) -> "HolomorphicInput":
        clean: Dict[int, Gaussian] = {}
        for n, c in coefficients.items():
            if n < 0:
                raise DomainError(f"negative power z^{n} is not a polynomial seed")
            re, im = _gaussian(c)
            old = clean.get(n, (Fraction(0), Fraction(0)))
            re, im = old[0] + re, old[1] + im
            if re or im:
                clean[n] = (re, im)
            else:
                clean.pop(n, None)
        return cls(EXACT, dict(sorted(clean.items())))

    @classmethod
    def power(cls, n: int, re=1, im=0) -> "HolomorphicInput":
        return cls.exact({n: (re, im)})

    @classmethod
    def numeric(cls, function: Callable, valid: Optional[Callable] = None, label: str = "") -> "HolomorphicInput":
        return cls(NUMERIC, {}, function, valid or _always_valid, label)

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    @property
    def degree(self) -> Optional[int]:
        if not self.is_exact:
            return None
        return max(self.coefficients, default=0)

    def __add__(self, other: "HolomorphicInput") -> "HolomorphicInput":
        if not (self.is_exact and other.is_exact):
            raise DomainError("only exact seeds can be added")
        merged: Dict[int, Gaussian] = dict(self.coefficients)
        for n, (re, im) in other.coefficients.items():
            old = merged.get(n, (Fraction(0), Fraction(0)))
            merged[n] = (old[0] + re, old[1] + im)
        return HolomorphicInput.exact(merged)

    def scale(self, re=1, im=0) -> "HolomorphicInput":
        """Multiply by the Gaussian rational re + i im."""
        if not self.is_exact:
            raise DomainError("only exact seeds can be scaled")
        a, b = Fraction(re), Fraction(im)
        return HolomorphicInput.exact({n: (a * c - b * d, a * d + b * c) for n, (c, d) in self.coefficients.items()})

    def __rmul__(self, factor) -> "HolomorphicInput":
        return self.scale(factor)

    def to_numeric(self) -> "HolomorphicInput":
        if not self.is_exact:
            return self
        degree = self.degree
        coeffs = [complex(float(re), float(im)) for re, im in (self.coefficients.get(n, (0, 0)) for n in range(degree + 1))]
        return HolomorphicInput.numeric(lambda z: np.polynomial.polynomial.polyval(z, coeffs), label=self.text())

    def text(self) -> str:
        if not self.is_exact:
            return self.label or "<numeric>"
        pieces = []
        for n in sorted(self.coefficients, reverse=True):
            re, im = self.coefficients[n]
            z = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
            for value, unit in ((re, ""), (im, "i")):
                if not value:
                    continue
                magnitude = abs(value)
                factors = [f for f in (unit, z) if f]
                if magnitude != 1 or not factors:
                    factors.insert(0, str(magnitude))
                pieces.append(("-" if value < 0 else "+", "*".join(factors)))
        if not pieces:
            return "0"
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"HolomorphicInput({self.kind}: {self.text()})"


def _gaussian(c) -> Gaussian:
    if isinstance(c, tuple):
        return Fraction(c[0]), Fraction(c[1])
    if isinstance(c, complex):
        raise DomainError("complex floats are not exact; pass a (re, im) pair of rationals")
    return Fraction(c), Fraction(0)


def _above_unit_strip(theta, rho):
    return np.broadcast_to(np.asarray(rho) > 1, np.broadcast(theta, rho).shape)


NUMERIC_SEEDS: Dict[str, HolomorphicInput] = {
    "1/(1+z^2)": HolomorphicInput.numeric(lambda z: 1 / (1 + z**2), _above_unit_strip, "1/(1+z^2)"),
    "exp(z)": HolomorphicInput.numeric(np.exp, None, "exp(z)"),
}


# ----- exact profiles -----


def extract_uv(
    h: HolomorphicInput, n: Optional[int] = None, var_names: Tuple[str, str] = PROFILE_VARS
) -> Tuple[LaurentBi, LaurentBi]:
    """Real and imaginary parts of h(theta + i rho), optionally of the z^n term alone."""
    if not h.is_exact:
        raise DomainError(f"numeric seed {h.text()} has no exact real and imaginary parts")
    u = LaurentBi.zero(var_names)
    v = LaurentBi.zero(var_names)
    for power, (re, im) in h.coefficients.items():
        if n is not None and power != n:
            continue
        x, y = harmonic_seed_parts(power, var_names)
        u = u + x * re - y * im
        v = v + y * re + x * im
    return u, v


@dataclass(frozen=True)
class FunkHeckeProfile:
    p: int
    k: int
    A: LaurentBi
    B: LaurentBi


def funk_hecke_profile(h: HolomorphicInput, p: int, k: int) -> FunkHeckeProfile:
    """A = C_k(1)^-1 r^-k int u(rt, rho) C_k(t) w(t) dt and B likewise with v and C_{k+1}."""
    if p < 3:
        raise DomainError(f"the Funk-Hecke profile needs p >= 3, got p = {p}")
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    u, v = extract_uv(h)
    lam = lambda_for(p)
    ck_one = gegenbauer(k, lam).value_at_one()
    ck1_one = gegenbauer(k + 1, lam).value_at_one()
    A = _integrate_theta(u, k, p, ck_one, k)
    B = _integrate_theta(v, k + 1, p, ck1_one, k)
    return FunkHeckeProfile(p, k, A, B)


def _integrate_theta(f: LaurentBi, degree: int, p: int, c_one: Fraction, k: int) -> LaurentBi:
    terms: Dict[Tuple[int, int], ScalarExt] = {}
    for (a, b), c in f.items():
        m = moment(a, degree, p)
        if m.is_zero():
            continue
        key = (a - k, b)
        terms[key] = terms.get(key, ScalarExt()) + c * m / c_one
    return LaurentBi(terms, RADIAL_VARS)


# ----- results -----

ZERO = "Zero"
HOMOGENEOUS = "Homogeneous"
INHOMOGENEOUS = "Inhomogeneous"
NON_POLYNOMIAL = "NonPolynomial"


@dataclass(frozen=True)
class Classification:
    kind: str
    degree: Optional[int] = None

    def text(self) -> str:
        return f"{self.kind}({self.degree})" if self.kind == HOMOGENEOUS else self.kind


@dataclass(frozen=True)
class TransformRequest:
    h: HolomorphicInput
    p: int
    q: int
    k: int
    l: int
    pk: SphericalMonogenic
    pl: SphericalMonogenic


@dataclass(frozen=True)
class TransformResult:
    """Raw transform value plus its canonical (normalised) view."""

    request: TransformRequest
    radial: RadialElement
    normalized: RadialElement
    normalization: ScalarExt
    cartesian: Optional[CartesianPoly]
    classification: Classification
    notes: Tuple[str, ...] = ()

    @property
    def M(self) -> LaurentBi:
        return self.radial.s1

    @property
    def N(self) -> LaurentBi:
        return self.radial.s_wn


def _require_biaxial(p: int, q: int) -> None:
    if q % 2 == 0:
        raise DomainError(f"the biaxial transform needs odd q, got q = {q}")
    if p < 3:
        raise DomainError(f"the biaxial transform needs p >= 3, got p = {p}")


def laplacian_power(q: int, l: int) -> int:
    return l + (q - 1) // 2


def biaxial_transform(
    h: HolomorphicInput,
    p: int,
    q: int,
    k: int,
    l: int,
    pk: Optional[SphericalMonogenic] = None,
    pl: Optional[SphericalMonogenic] = None,
) -> TransformResult:
    _require_biaxial(p, q)
    if not h.is_exact:
        raise DomainError(f"numeric seed {h.text()} needs biaxial_transform_numeric")
    pk = monogenic_or_default(pk, BLOCK_X, p, k)
    pl = monogenic_or_default(pl, BLOCK_Y, q, l)

    start = time.time()
    profile = funk_hecke_profile(h, p, k)
    seed = RadialElement((p, q, k, l), s1=profile.A, s_wn=-profile.B)
    raw = iterated_radial_laplacian(seed, laplacian_power(q, l))
    request = TransformRequest(h, p, q, k, l, pk, pl)
    result = normalize(
        TransformResult(request, raw, raw, ScalarExt(1), None, Classification(ZERO))
    )
    logger.info(f"[⏱️] Ft_{p},{q}[{h.text()}] k={k} l={l} took {time.time() - start:.4f}s -> {result.classification.text()}")
    return result


def normalize(res: TransformResult) -> TransformResult:
    """Divide the raw radial element by its first coefficient in canonical order."""
    req = res.request
    notes: List[str] = []
    lead = res.radial.leading_coefficient()
    if lead is None:
        normalized, scalar = res.radial, ScalarExt(1)
        notes.append("zero result; normalization is the identity")
    else:
        normalized, scalar = res.radial / lead, lead
    try:
        cartesian = to_cartesian(normalized, req.pk, req.pl)
    except NotCartesianConvertible as e:
        cartesian = None
        notes.append(str(e))
    return replace(
        res,
        normalized=normalized,
        normalization=scalar,
        cartesian=cartesian,
        classification=_classify_result(res.radial, cartesian, req.k, req.l),
        notes=tuple(notes),
    )


def _classify_result(radial: RadialElement, cartesian: Optional[CartesianPoly], k: int, l: int) -> Classification:
    if radial.is_zero():
        return Classification(ZERO)
    if cartesian is None:
        return Classification(NON_POLYNOMIAL)
    degree = cartesian.homogeneous_degree()
    if isinstance(degree, int):
        return Classification(HOMOGENEOUS, degree - k - l)
    return Classification(INHOMOGENEOUS)


def classify_power(n: int, k: int, l: int, p: int, q: int) -> Classification:
    """Predicted class of Ft_{p,q}[z^n, P_k, P_l]."""
    _require_biaxial(p, q)
    threshold = k + 2 * l + q - 1
    if (k - n) % 2 or n < threshold:
        return Classification(ZERO)
    return Classification(HOMOGENEOUS, n - threshold)


# ----- axial constructions -----


def fuesom_profiles(h: HolomorphicInput, q: int, l: int) -> Tuple[LaurentBi, LaurentBi]:
    """M = (rho^-1 d_rho)^n u and N = (d_rho rho^-1)^n v with n = l + (q-1)/2."""
    if q % 2 == 0:
        raise DomainError(f"the embedded axial map needs odd q, got q = {q}")
    u, v = extract_uv(h)
    n = laplacian_power(q, l)
    return ladder_I(u, 1, n), ladder_II(v, 1, n)


def fueter_axial(h: HolomorphicInput, m: int, pk: Optional[SphericalMonogenic] = None, k: Optional[int] = None) -> RadialElement:
    """Delta^(k+(m-1)/2) of (u(x0, R) + (X/R) v(x0, R)) P_k(X)."""
    if m % 2 == 0 or m < 1:
        raise DomainError(f"Fueter's construction needs odd m, got m = {m}")
    if k is None:
        k = pk.degree if pk is not None else 0
    pk = monogenic_or_default(pk, BLOCK_X, m, k)
    u, v = extract_uv(h, var_names=AXIAL_VARS)
    start = time.time()
    e = iterated_radial_laplacian(RadialElement.axial_element(m, pk.degree, u, v), pk.degree + (m - 1) // 2)
    logger.info(f"[⏱️] Fueter map of {h.text()} with m={m} P_k={pk.poly.text()} took {time.time() - start:.4f}s")
    return e


# ----- numeric path -----

_OFFSETS = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])


def _first(fm2, fm1, fp1, fp2, h):
    return (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)


def _second(fm2, fm1, f0, fp1, fp2, h):
    return (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)


def _fd_laplacian(g: Callable, cx: int, cy: int, unit_x: bool, unit_y: bool, step: float) -> Callable:
    """Finite-difference version of one radial Laplacian on a sector coefficient."""

    def apply(r: np.ndarray, rho: np.ndarray) -> np.ndarray:
        hr = step * np.maximum(1.0, r)
        hs = step * np.maximum(1.0, rho)
        if np.any(r - 2 * hr <= 0) or np.any(rho - 2 * hs <= 0):
            raise StencilOutsideDomainError(f"finite-difference stencil leaves r > 0, rho > 0 near r={r.min()}, rho={rho.min()}")
        rs = [r + o * hr for o in _OFFSETS] + [r] * 4
        ss = [rho] * 5 + [rho + o * hs for o in (-2.0, -1.0, 1.0, 2.0)]
        vals = g(np.concatenate(rs), np.concatenate(ss)).reshape(9, -1)
        f0 = vals[2]
        gr = _first(vals[0], vals[1], vals[3], vals[4], hr)
        grr = _second(vals[0], vals[1], f0, vals[3], vals[4], hr)
        gs = _first(vals[5], vals[6], vals[7], vals[8], hs)
        gss = _second(vals[5], vals[6], f0, vals[7], vals[8], hs)
        lx = grr + cx * (gr / r - f0 / r**2 if unit_x else gr / r)
        ly = gss + cy * (gs / rho - f0 / rho**2 if unit_y else gs / rho)
        return lx + ly

    return apply


@dataclass(frozen=True)
class NumericSample:
    r: float
    rho: float
    M: float
    N: float
    flagged: bool
    discrepancy: float


class NumericField:
    """Ft_{p,q}[h, P_k, P_l] evaluated by quadrature and finite differences."""

    def __init__(
        self,
        h: HolomorphicInput,
        p: int,
        q: int,
        k: int,
        l: int,
        pk: Optional[SphericalMonogenic] = None,
        pl: Optional[SphericalMonogenic] = None,
        quad_order: Optional[int] = None,
        fd_step: Optional[float] = None,
    ):
        _require_biaxial(p, q)
        settings = Config()
        self.h = h.to_numeric()
        self.p, self.q, self.k, self.l = p, q, k, l
        self.pk = monogenic_or_default(pk, BLOCK_X, p, k)
        self.pl = monogenic_or_default(pl, BLOCK_Y, q, l)
        self.rule = gauss_jacobi_rule(quad_order or settings.QUAD_ORDER, p)
        self.fd_step = fd_step or settings.FD_STEP
        lam = lambda_for(p)
        ck, ck1 = gegenbauer(k, lam), gegenbauer(k + 1, lam)
        self._ck_nodes = ck.evaluate(self.rule.nodes) / float(ck.value_at_one())
        self._ck1_nodes = ck1.evaluate(self.rule.nodes) / float(ck1.value_at_one())
        self.iterations = laplacian_power(q, l)

    @property
    def params(self) -> Tuple[int, int, int, int]:
        return self.p, self.q, self.k, self.l

    def profile(self, r, rho) -> Tuple[np.ndarray, np.ndarray]:
        """A and B at points (r, rho) by Gauss-Jacobi quadrature."""
        r = np.atleast_1d(np.asarray(r, dtype=float))
        rho = np.atleast_1d(np.asarray(rho, dtype=float))
        theta = r[:, None] * self.rule.nodes[None, :]
        rr = np.broadcast_to(rho[:, None], theta.shape)
        if not np.all(self.h.valid(theta, rr)):
            bad = ~np.asarray(self.h.valid(theta, rr), dtype=bool)
            raise StencilOutsideDomainError(
                f"{self.h.text()} is not valid at theta={theta[bad][0]:.6g}, rho={rr[bad][0]:.6g}"
            )
        values = np.asarray(self.h.function(theta + 1j * rr), dtype=complex)
        scale = r ** (-self.k)
        A = (values.real * self._ck_nodes) @ self.rule.weights * scale
        B = (values.imag * self._ck1_nodes) @ self.rule.weights * scale
        return A, B

    def step(self) -> float:
        return self.fd_step ** (3 / (self.iterations + 2))

    def sectors(self, r, rho, step: Optional[float] = None) -> Tuple[np.ndarray, np.ndarray]:
        """M and N (sectors 1 and wn) of the result at points (r, rho)."""
        r = np.atleast_1d(np.asarray(r, dtype=float))
        rho = np.atleast_1d(np.asarray(rho, dtype=float))
        step = step or self.step()
        cx = 2 * self.k + self.p - 1
        cy = 2 * self.l + self.q - 1
        m_op = lambda a, b: self.profile(a, b)[0]
        n_op = lambda a, b: -self.profile(a, b)[1]
        for _ in range(self.iterations):
            m_op = _fd_laplacian(m_op, cx, cy, False, False, step)
            n_op = _fd_laplacian(n_op, cx, cy, True, True, step)
        return m_op(r, rho), n_op(r, rho)

    def sample(self, r: float, rho: float, tol: Optional[float] = None) -> NumericSample:
        """Values at one point with a Richardson check at half the step."""
        if r <= 0 or rho <= 0:
            raise DomainError(f"numeric evaluation needs r > 0 and rho > 0, got ({r}, {rho})")
        tol = tol or Config().TOL
        step = self.step()
        M, N = (float(x[0]) for x in self.sectors(r, rho, step))
        M2, N2 = (float(x[0]) for x in self.sectors(r, rho, step / 2))
        scale = max(1.0, abs(M), abs(N))
        discrepancy = max(abs(M - M2), abs(N - N2)) / scale
        flagged = discrepancy > 10 * tol
        if flagged:
            logger.warning(f"❌ Richardson check flagged ({r}, {rho}): discrepancy {discrepancy:.3e}")
        return NumericSample(r, rho, M, N, flagged, discrepancy)

    def field(self, points: np.ndarray) -> Dict[int, np.ndarray]:
        """Multivector field (M + w n N) P_k P_l at Cartesian points of shape (P, p + q)."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        p, q = self.p, self.q
        r = np.linalg.norm(points[:, :p], axis=1)
        rho = np.linalg.norm(points[:, p:], axis=1)
        M, N = self.sectors(r, rho)
        tail = self.pk.embed(p, q) * self.pl.embed(p, q)
        xy = CartesianPoly.vector_variable(p, q, BLOCK_X) * CartesianPoly.vector_variable(p, q, BLOCK_Y)
        out: Dict[int, np.ndarray] = {}
        for mask, values in tail.evaluate_grid(points.T).items():
            out[mask] = out.get(mask, 0.0) + M * values
        for mask, values in (xy * tail).evaluate_grid(points.T).items():
            out[mask] = out.get(mask, 0.0) + N / (r * rho) * values
        return out

    def dirac_residual(self, points: np.ndarray) -> Tuple[float, float]:
        """Max-norm of the finite-difference Dirac operator on the field, absolute and relative."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        dim = self.p + self.q
        h = self.fd_step * np.maximum(1.0, np.linalg.norm(points, axis=1))
        center = self.field(points)
        total: Dict[int, np.ndarray] = {}
        for j in range(dim):
            shifted = []
            for o in (-2.0, -1.0, 1.0, 2.0):
                moved = points.copy()
                moved[:, j] += o * h
                shifted.append(self.field(moved))
            masks = set().union(*(s.keys() for s in shifted))
            for mask in masks:
                fm2, fm1, fp1, fp2 = (np.broadcast_to(s.get(mask, 0.0), h.shape) for s in shifted)
                derivative = _first(fm2, fm1, fp1, fp2, h)
                sign, target = mask_product(1 << j, mask)
                total[target] = total.get(target, 0.0) + sign * derivative
        residual = max((float(np.max(np.abs(v))) for v in total.values()), default=0.0)
        scale = max((float(np.max(np.abs(v))) for v in center.values()), default=0.0)
        return residual, residual / max(1.0, scale)


def biaxial_transform_numeric(
    h: HolomorphicInput,
    p: int,
    q: int,
    k: int,
    l: int,
    point: Tuple[float, float],
    quad_order: Optional[int] = None,
    fd_step: Optional[float] = None,
    tol: Optional[float] = None,
) -> NumericSample:
    start = time.time()
    sample = NumericField(h, p, q, k, l, quad_order=quad_order, fd_step=fd_step).sample(*point, tol=tol)
    logger.info(f"[⏱️] numeric Ft_{p},{q}[{h.text()}] at {point} took {time.time() - start:.4f}s")
    return sample


# ----- verification -----


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: str
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    checks: Tuple[CheckResult, ...]


DEFAULT_SAMPLE_POINTS = ((0.5, 2.0), (1.0, 1.5), (1.5, 2.5))


def sample_cartesian_points(p: int, q: int, radial_points: Sequence[Tuple[float, float]], seed: int = 0) -> np.ndarray:
    """Cartesian points with prescribed (r, rho) along fixed generic directions."""
    rng = np.random.default_rng(seed)
    rows = []
    for r, rho in radial_points:
        a = rng.normal(size=p)
        b = rng.normal(size=q)
        rows.append(np.concatenate([r * a / np.linalg.norm(a), rho * b / np.linalg.norm(b)]))
    return np.array(rows)


def verify_monogenic(
    res: Union[TransformResult, NumericField],
    points: Optional[Sequence[Tuple[float, float]]] = None,
    tol: Optional[float] = None,
) -> VerificationReport:
    if isinstance(res, NumericField):
        return _verify_numeric(res, points or DEFAULT_SAMPLE_POINTS, tol or 1e-5)
    checks = []
    stray = [name for name in (SW, SN) if not res.radial.sectors[name].is_zero()]
    first, second = vekua_residual_biaxial(res.radial.s1, res.radial.s_wn, res.radial.params)
    vekua_ok = first.is_zero() and second.is_zero() and not stray
    checks.append(
        CheckResult(
            "vekua",
            vekua_ok,
            f"({first.text()}, {second.text()})",
            f"unexpected sectors {stray}" if stray else "",
        )
    )
    if res.cartesian is not None:
        residual = res.cartesian.dirac()
        checks.append(CheckResult("dirac", residual.is_zero(), residual.text()))
    else:
        checks.append(CheckResult("dirac", True, "n/a", "not Cartesian-convertible; Vekua system is authoritative"))
    passed = all(c.passed for c in checks)
    if passed:
        logger.info(f"✅ verification of {res.request.h.text()} passed")
    else:
        logger.warning(f"❌ verification of {res.request.h.text()} failed: {[c.name for c in checks if not c.passed]}")
    return VerificationReport(passed, tuple(checks))


def _verify_numeric(field_: NumericField, radial_points, tol: float) -> VerificationReport:
    start = time.time()
    points = sample_cartesian_points(field_.p, field_.q, radial_points)
    absolute, relative = field_.dirac_residual(points)
    passed = relative <= tol
    check = CheckResult("fd-dirac", passed, f"{relative:.3e}", f"absolute {absolute:.3e} at {len(points)} points, tol {tol:g}")
    logger.info(f"[⏱️] numeric Dirac residual {relative:.3e} in {time.time() - start:.3f}s")
    return VerificationReport(passed, (check,))


# ----- sweeps and worked examples -----


@dataclass(frozen=True)
class SweepCase:
    n: int
    p: int
    q: int
    k: int
    l: int
    observed: Classification
    predicted: Classification
    vekua_ok: bool
    dirac_ok: Optional[bool]

    @property
    def passed(self) -> bool:
        return self.vekua_ok and self.dirac_ok is not False and self.observed == self.predicted


def monogenicity_sweep(
    n_max: int = 10,
    k_max: int = 2,
    l_max: int = 1,
    ps: Sequence[int] = (3, 4, 5),
    qs: Sequence[int] = (3, 5),
) -> List[SweepCase]:
    start = time.time()
    cases = []
    for p in ps:
        for q in qs:
            for k in range(k_max + 1):
                for l in range(l_max + 1):
                    pk = monogenic_or_default(None, BLOCK_X, p, k)
                    pl = monogenic_or_default(None, BLOCK_Y, q, l)
                    for n in range(n_max + 1):
                        res = biaxial_transform(HolomorphicInput.power(n), p, q, k, l, pk, pl)
                        report = verify_monogenic(res)
                        checks = {c.name: c for c in report.checks}
                        dirac_ok = checks["dirac"].passed if res.cartesian is not None else None
                        cases.append(
                            SweepCase(n, p, q, k, l, res.classification, classify_power(n, k, l, p, q), checks["vekua"].passed, dirac_ok)
                        )
    failed = sum(not c.passed for c in cases)
    logger.info(f"[⏱️] sweep of {len(cases)} cases in {time.time() - start:.2f}s, {failed} failed")
    return cases


@dataclass(frozen=True)
class WorkedExample:
    name: str
    passed: bool
    scalar: str
    detail: str


def _radial(params, s1: Mapping[Tuple[int, int], object], s_wn: Mapping[Tuple[int, int], object]) -> RadialElement:
    return RadialElement(params, s1=LaurentBi(s1), s_wn=LaurentBi(s_wn))


def _compare_exact(name: str, res: TransformResult, expected: RadialElement, cartesian: Optional[CartesianPoly] = None) -> WorkedExample:
    lead = expected.leading_coefficient()
    target = expected / lead
    ok = res.normalized == target
    detail = f"normalized {res.normalized.text()}"
    if not ok:
        detail += f"; expected {target.text()}"
    if cartesian is not None:
        cartesian_ok = res.cartesian is not None and res.cartesian == cartesian * (1 / lead.rat)
        ok = ok and cartesian_ok
        if not cartesian_ok:
            detail += "; Cartesian form differs"
    return WorkedExample(name, ok, res.normalization.text(), detail)


def _closed_form(r: np.ndarray, rho: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    D = (r**2 + (rho + 1) ** 2) * (r**2 + (rho - 1) ** 2)
    M = 4 / D
    N = -(2 * (r**2 - rho**2 + 1) / (r * rho * D) + (np.arctan(r / (rho + 1)) + np.arctan(r / (rho - 1))) / (r**2 * rho**2))
    return M, N


def worked_examples(quad_order: int = 512, tol: float = 1e-6) -> List[WorkedExample]:
    """The worked examples: four exact, one numeric with a single fitted scalar."""
    start = time.time()
    out = []
    iz = HolomorphicInput.power(1, 0, 1)
    out.append(
        _compare_exact(
            "Ft_3,3[iz, 1, 1]",
            biaxial_transform(iz, 3, 3, 0, 0),
            _radial((3, 3, 0, 0), {(0, -1): 1}, {(1, -2): Fraction(-1, 3)}),
        )
    )

    iz4 = HolomorphicInput.power(4, 0, 1)
    out.append(
        _compare_exact(
            "Ft_4,3[iz^4, P_1(x), 1]",
            biaxial_transform(iz4, 4, 3, 1, 0),
            _radial((4, 3, 1, 0), {(2, -1): 1, (0, 1): -6}, {(3, -2): Fraction(-1, 8), (1, 0): -1}),
        )
    )

    x = CartesianPoly.vector_variable(3, 3, BLOCK_X)
    y = CartesianPoly.vector_variable(3, 3, BLOCK_Y)
    z4_cartesian = x * x + (x * y) * Fraction(2, 3) - y * y
    out.append(
        _compare_exact(
            "Ft_3,3[z^4, 1, 1]",
            biaxial_transform(HolomorphicInput.power(4), 3, 3, 0, 0),
            _radial((3, 3, 0, 0), {(2, 0): -1, (0, 2): 1}, {(1, 1): Fraction(2, 3)}),
            z4_cartesian,
        )
    )

    p1 = monogenic_or_default(None, BLOCK_X, 3, 1).embed(3, 3)
    x2, y2 = x * x, y * y
    z7_cartesian = (
        x2 * x2 * 3 + x2 * x * y * 4 - x2 * y2 * 14 - x * y * y2 * Fraction(28, 5) + y2 * y2 * 7
    ) * p1
    out.append(
        _compare_exact(
            "Ft_3,3[z^7, P_1(x), 1]",
            biaxial_transform(HolomorphicInput.power(7), 3, 3, 1, 0),
            _radial((3, 3, 1, 0), {(4, 0): 3, (2, 2): -14, (0, 4): 7}, {(3, 1): -4, (1, 3): Fraction(28, 5)}),
            z7_cartesian,
        )
    )

    out.append(_numeric_example(quad_order, tol))
    passed = sum(e.passed for e in out)
    logger.info(f"[⏱️] worked examples: {passed}/{len(out)} passed in {time.time() - start:.2f}s")
    return out


def _numeric_example(quad_order: int, tol: float) -> WorkedExample:
    name = "Ft_3,3[1/(1+z^2), 1, 1]"
    field_ = NumericField(NUMERIC_SEEDS["1/(1+z^2)"], 3, 3, 0, 0, quad_order=quad_order)
    rr, ss = np.meshgrid(np.linspace(0.2, 2.0, 5), np.linspace(1.2, 3.0, 4), indexing="ij")
    r, rho = rr.ravel(), ss.ravel()
    M, N = field_.sectors(r, rho)
    M_ref, N_ref = _closed_form(r, rho)
    scalar = M[0] / M_ref[0]
    errors = np.concatenate([np.abs(M - scalar * M_ref) / np.abs(scalar * M_ref), np.abs(N - scalar * N_ref) / np.abs(scalar * N_ref)])
    worst = float(np.max(errors))
    passed = bool(worst <= tol) and math.isfinite(worst)
    return WorkedExample(name, passed, f"{scalar:.12g}", f"max relative error {worst:.3e} over {len(r)} points")
