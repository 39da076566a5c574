"""
Closed radial representation of biaxial and axial functions.

A ``RadialElement`` stands for ``(s1 + sw*w + sn*n + swn*w*n) P_k(x) P_l(y)``
with ``w = x/r`` and ``n = y/rho``.  Sector coefficients are ``LaurentBi``
values: Laurent polynomials in two radial variables whose coefficients are
``ScalarExt`` numbers ``rat * pi^s``.

Axial elements reuse the machinery with variables ``(x0, R)``: the axis is a
``p = 1, k = 0`` block, whose reduction rule collapses to ``d^2/dx0^2``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple, Union

from ffh.clifford import format_scalar, join_signed
from ffh.errors import DomainError, MixedPiPowerError, NotCartesianConvertible
from ffh.polyalg import BLOCK_X, BLOCK_Y, CartesianPoly, SphericalMonogenic

RADIAL_VARS = ("r", "rho")
PROFILE_VARS = ("theta", "rho")
AXIAL_VARS = ("x0", "R")

FIRST = "first"
SECOND = "second"

Pair = Tuple[int, int]


@dataclass(frozen=True)
class ScalarExt:
    """Exact number rat * pi^pi_pow."""

    rat: Fraction = Fraction(0)
    pi_pow: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rat", Fraction(self.rat))
        if self.pi_pow < 0:
            raise DomainError(f"negative power of pi: {self.pi_pow}")
        if self.rat == 0:
            object.__setattr__(self, "pi_pow", 0)

    @classmethod
    def of(cls, value) -> "ScalarExt":
        if isinstance(value, ScalarExt):
            return value
        if isinstance(value, float):
            raise TypeError("ScalarExt is exact; got a float")
        return cls(Fraction(value), 0)

    def is_zero(self) -> bool:
        return self.rat == 0

    def __add__(self, other) -> "ScalarExt":
        other = ScalarExt.of(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.pi_pow != other.pi_pow:
            raise MixedPiPowerError(f"cannot add {self.text()} and {other.text()}")
        return ScalarExt(self.rat + other.rat, self.pi_pow)

    __radd__ = __add__

    def __neg__(self) -> "ScalarExt":
        return ScalarExt(-self.rat, self.pi_pow)

    def __sub__(self, other) -> "ScalarExt":
        return self + (-ScalarExt.of(other))

    def __mul__(self, other) -> "ScalarExt":
        other = ScalarExt.of(other)
        return ScalarExt(self.rat * other.rat, self.pi_pow + other.pi_pow)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ScalarExt":
        other = ScalarExt.of(other)
        if other.is_zero():
            raise ZeroDivisionError("division by a zero ScalarExt")
        if self.is_zero():
            return self
        return ScalarExt(self.rat / other.rat, self.pi_pow - other.pi_pow)

    def __float__(self) -> float:
        return float(self.rat) * math.pi**self.pi_pow

    def __lt__(self, other) -> bool:
        return float(self) < float(ScalarExt.of(other))

    def text(self) -> str:
        if self.pi_pow == 0 or self.is_zero():
            return format_scalar(self.rat)
        pi = "pi" if self.pi_pow == 1 else f"pi^{self.pi_pow}"
        if self.rat == 1:
            return pi
        if self.rat == -1:
            return f"-{pi}"
        return f"{format_scalar(self.rat)}*{pi}"

    def to_json(self) -> dict:
        return {"rat": str(self.rat), "pi_pow": self.pi_pow}

    def __repr__(self) -> str:
        return f"ScalarExt({self.text()})"


class LaurentBi:
    """Finite sum of c * a^i * b^j over two named radial variables, i and j any integers."""

    __slots__ = ("var_names", "_terms")

    def __init__(self, terms: Optional[Mapping[Pair, object]] = None, var_names: Tuple[str, str] = RADIAL_VARS):
        self.var_names = tuple(var_names)
        clean: Dict[Pair, ScalarExt] = {}
        for (a, b), c in (terms or {}).items():
            _accumulate(clean, (int(a), int(b)), ScalarExt.of(c))
        self._terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Pair, ScalarExt], var_names: Tuple[str, str]) -> "LaurentBi":
        f = object.__new__(cls)
        f.var_names, f._terms = var_names, terms
        return f

    @classmethod
    def zero(cls, var_names: Tuple[str, str] = RADIAL_VARS) -> "LaurentBi":
        return cls(var_names=var_names)

    @classmethod
    def constant(cls, value, var_names: Tuple[str, str] = RADIAL_VARS) -> "LaurentBi":
        return cls({(0, 0): value}, var_names)

    @classmethod
    def monomial(cls, a: int, b: int, coef=1, var_names: Tuple[str, str] = RADIAL_VARS) -> "LaurentBi":
        return cls({(a, b): coef}, var_names)

    def items(self) -> List[Tuple[Pair, ScalarExt]]:
        """Terms in canonical order: lexicographic on the exponent pair."""
        return sorted(self._terms.items())

    def coefficient(self, a: int, b: int) -> ScalarExt:
        return self._terms.get((a, b), ScalarExt())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def pi_powers(self) -> List[int]:
        return sorted({c.pi_pow for c in self._terms.values()})

    def has_negative_powers(self, which: int) -> bool:
        return any(pair[which] < 0 for pair in self._terms)

    def renamed(self, var_names: Tuple[str, str]) -> "LaurentBi":
        return LaurentBi._raw(dict(self._terms), tuple(var_names))

    # ----- arithmetic -----

    def _check(self, other: "LaurentBi") -> None:
        if self.var_names != other.var_names:
            raise DomainError(f"Laurent polynomials in {self.var_names} and {other.var_names} do not mix")

    def __add__(self, other: "LaurentBi") -> "LaurentBi":
        if not isinstance(other, LaurentBi):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for pair, c in other._terms.items():
            _accumulate(out, pair, c)
        return LaurentBi._raw(out, self.var_names)

    def __neg__(self) -> "LaurentBi":
        return LaurentBi._raw({pair: -c for pair, c in self._terms.items()}, self.var_names)

    def __sub__(self, other: "LaurentBi") -> "LaurentBi":
        if not isinstance(other, LaurentBi):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "LaurentBi":
        if isinstance(other, LaurentBi):
            self._check(other)
            out: Dict[Pair, ScalarExt] = {}
            for (a1, b1), c1 in self._terms.items():
                for (a2, b2), c2 in other._terms.items():
                    _accumulate(out, (a1 + a2, b1 + b2), c1 * c2)
            return LaurentBi._raw(out, self.var_names)
        factor = ScalarExt.of(other)
        if factor.is_zero():
            return LaurentBi.zero(self.var_names)
        return LaurentBi._raw({pair: c * factor for pair, c in self._terms.items()}, self.var_names)

    def __rmul__(self, other) -> "LaurentBi":
        return self.__mul__(other)

    def __truediv__(self, other) -> "LaurentBi":
        factor = ScalarExt.of(other)
        return LaurentBi._raw({pair: c / factor for pair, c in self._terms.items()}, self.var_names)

    def shift(self, da: int, db: int) -> "LaurentBi":
        """Multiply by a^da * b^db."""
        return LaurentBi._raw({(a + da, b + db): c for (a, b), c in self._terms.items()}, self.var_names)

    def derivative(self, which: Union[str, int]) -> "LaurentBi":
        i = self.axis_of(which)
        out: Dict[Pair, ScalarExt] = {}
        for pair, c in self._terms.items():
            e = pair[i]
            if e:
                new = (pair[0] - 1, pair[1]) if i == 0 else (pair[0], pair[1] - 1)
                _accumulate(out, new, c * e)
        return LaurentBi._raw(out, self.var_names)

    def axis_of(self, which: Union[str, int]) -> int:
        if which in (FIRST, 0):
            return 0
        if which in (SECOND, 1):
            return 1
        if which in self.var_names:
            return self.var_names.index(which)
        raise ValueError(f"unknown variable {which!r}; expected first/second or one of {self.var_names}")

    # ----- evaluation / output -----

    def evaluate(self, a: float, b: float) -> float:
        if a <= 0 and self.has_negative_powers(0):
            raise DomainError(f"{self.var_names[0]} = {a} with a negative power of {self.var_names[0]}")
        if b <= 0 and self.has_negative_powers(1):
            raise DomainError(f"{self.var_names[1]} = {b} with a negative power of {self.var_names[1]}")
        return sum(float(c) * float(a) ** i * float(b) ** j for (i, j), c in self._terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentBi):
            return NotImplemented
        return self.var_names == other.var_names and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.var_names, frozenset(self._terms.items())))

    def text(self) -> str:
        """Terms like ``-8/3*r^-2*rho^4*pi``; zero prints as ``0``."""
        pieces = []
        for (a, b), c in self.items():
            negative = c.rat < 0
            magnitude = -c.rat if negative else c.rat
            parts = []
            for name, e in zip(self.var_names, (a, b)):
                if e == 1:
                    parts.append(name)
                elif e:
                    parts.append(f"{name}^{e}")
            if c.pi_pow:
                parts.append("pi" if c.pi_pow == 1 else f"pi^{c.pi_pow}")
            if magnitude != 1 or not parts:
                parts.insert(0, format_scalar(magnitude))
            pieces.append(("-" if negative else "+", "*".join(parts)))
        return join_signed(pieces)

    def to_json(self) -> List[dict]:
        return [{"exps": [a, b], "coef": c.to_json()} for (a, b), c in self.items()]

    def __repr__(self) -> str:
        return f"LaurentBi({self.text()})"


def _accumulate(out: Dict[Pair, ScalarExt], pair: Pair, coef: ScalarExt) -> None:
    if coef.is_zero():
        return
    value = out[pair] + coef if pair in out else coef
    if value.is_zero():
        out.pop(pair, None)
    else:
        out[pair] = value


def laurent_derivative(f: LaurentBi, which: Union[str, int]) -> LaurentBi:
    return f.derivative(which)


def ladder_I(f: LaurentBi, which: Union[str, int], n: int) -> LaurentBi:
    """(v^-1 d/dv)^n f."""
    if n < 0:
        raise ValueError("ladder order must be non-negative")
    i = f.axis_of(which)
    for _ in range(n):
        f = f.derivative(i).shift(*_down(i))
    return f


def ladder_II(f: LaurentBi, which: Union[str, int], n: int) -> LaurentBi:
    """(d/dv v^-1)^n f."""
    if n < 0:
        raise ValueError("ladder order must be non-negative")
    i = f.axis_of(which)
    for _ in range(n):
        f = f.shift(*_down(i)).derivative(i)
    return f


def _down(i: int) -> Pair:
    return (-1, 0) if i == 0 else (0, -1)


# ----- sectors -----

S1 = "1"
SW = "w"
SN = "n"
SWN = "wn"
SECTORS = (S1, SW, SN, SWN)
# sector -> (omega power, nu power)
SECTOR_POWERS = {S1: (0, 0), SW: (1, 0), SN: (0, 1), SWN: (1, 1)}
_BY_POWERS = {v: k for k, v in SECTOR_POWERS.items()}


def sector_product(a: str, b: str) -> Tuple[int, str]:
    """Product of two sector symbols as (sign, sector); w^2 = n^2 = -1, wn = -nw."""
    e1, d1 = SECTOR_POWERS[a]
    e2, d2 = SECTOR_POWERS[b]
    # move n^d1 past w^e2, then square what doubles up
    flips = d1 * e2 + e1 * e2 + d1 * d2
    return (-1 if flips % 2 else 1), _BY_POWERS[((e1 + e2) % 2, (d1 + d2) % 2)]


SECTOR_TABLE: Dict[Tuple[str, str], Tuple[int, str]] = {(a, b): sector_product(a, b) for a in SECTORS for b in SECTORS}


class RadialElement:
    """(s1 + sw w + sn n + swn w n) P_k(x) P_l(y) with params (p, q, k, l)."""

    __slots__ = ("params", "axial", "sectors")

    def __init__(
        self,
        params: Tuple[int, int, int, int],
        s1: Optional[LaurentBi] = None,
        s_w: Optional[LaurentBi] = None,
        s_n: Optional[LaurentBi] = None,
        s_wn: Optional[LaurentBi] = None,
        axial: bool = False,
    ):
        p, q, k, l = params
        if min(p, q) < 1 or min(k, l) < 0:
            raise DomainError(f"invalid radial parameters {params}")
        self.params = (p, q, k, l)
        self.axial = axial
        names = AXIAL_VARS if axial else RADIAL_VARS
        sectors = {}
        for name, value in zip(SECTORS, (s1, s_w, s_n, s_wn)):
            value = LaurentBi.zero(names) if value is None else value
            if value.var_names != names:
                value = value.renamed(names)
            sectors[name] = value
        if axial:
            if (p, k) != (1, 0):
                raise DomainError(f"axial elements carry the axis as a (p=1, k=0) block, got {params}")
            if not (sectors[SW].is_zero() and sectors[SWN].is_zero()):
                raise DomainError("axial elements have no omega sectors")
            for sector in (S1, SN):
                if sectors[sector].has_negative_powers(0):
                    raise DomainError("the axis variable x0 takes no negative powers")
        self.sectors = sectors

    @classmethod
    def axial_element(cls, m: int, k: int, A: LaurentBi, B: LaurentBi) -> "RadialElement":
        """(A(x0, R) + (X/R) B(x0, R)) P_k(X) over R^m."""
        return cls((1, m, 0, k), s1=A, s_n=B, axial=True)

    @property
    def var_names(self) -> Tuple[str, str]:
        return AXIAL_VARS if self.axial else RADIAL_VARS

    @property
    def s1(self) -> LaurentBi:
        return self.sectors[S1]

    @property
    def s_w(self) -> LaurentBi:
        return self.sectors[SW]

    @property
    def s_n(self) -> LaurentBi:
        return self.sectors[SN]

    @property
    def s_wn(self) -> LaurentBi:
        return self.sectors[SWN]

    def with_sectors(self, sectors: Mapping[str, LaurentBi]) -> "RadialElement":
        return RadialElement(
            self.params, *(sectors.get(name) for name in SECTORS), axial=self.axial
        )

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.sectors.values())

    def leading_coefficient(self) -> Optional[ScalarExt]:
        """First non-zero coefficient in canonical order (sector order, then exponents)."""
        for name in SECTORS:
            for _, c in self.sectors[name].items():
                return c
        return None

    def __add__(self, other: "RadialElement") -> "RadialElement":
        self._check(other)
        return self.with_sectors({n: self.sectors[n] + other.sectors[n] for n in SECTORS})

    def __sub__(self, other: "RadialElement") -> "RadialElement":
        self._check(other)
        return self.with_sectors({n: self.sectors[n] - other.sectors[n] for n in SECTORS})

    def __mul__(self, factor) -> "RadialElement":
        return self.with_sectors({n: self.sectors[n] * factor for n in SECTORS})

    __rmul__ = __mul__

    def __truediv__(self, factor) -> "RadialElement":
        return self.with_sectors({n: self.sectors[n] / factor for n in SECTORS})

    def _check(self, other: "RadialElement") -> None:
        if self.params != other.params or self.axial != other.axial:
            raise DomainError(f"radial elements with params {self.params} and {other.params} do not mix")

    def evaluate(self, a: float, b: float) -> Dict[str, float]:
        return {name: self.sectors[name].evaluate(a, b) for name in SECTORS}

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadialElement):
            return NotImplemented
        return self.params == other.params and self.axial == other.axial and self.sectors == other.sectors

    def __hash__(self) -> int:
        return hash((self.params, self.axial, tuple(self.sectors[n] for n in SECTORS)))

    def text(self) -> str:
        parts = []
        for name in SECTORS:
            s = self.sectors[name]
            if s.is_zero():
                continue
            parts.append(f"({s.text()})" if name == S1 else f"({s.text()})*{name}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        p, q, k, l = self.params
        return {
            "params": {"p": p, "q": q, "k": k, "l": l},
            "axial": self.axial,
            "variables": list(self.var_names),
            "sectors": {name: self.sectors[name].to_json() for name in SECTORS},
        }

    def __repr__(self) -> str:
        return f"RadialElement({self.params}: {self.text()})"


# ----- reduction rules -----


def _block_rule(g: LaurentBi, axis: int, c: int, with_unit: bool) -> LaurentBi:
    """d^2 g + c * (dg)/v, or d^2 g + c * d(g/v) when the sector carries the unit vector."""
    first = g.derivative(axis)
    second = first.derivative(axis)
    if with_unit:
        return second + g.shift(*_down(axis)).derivative(axis) * c
    return second + first.shift(*_down(axis)) * c


def radial_laplacian(e: RadialElement) -> RadialElement:
    p, q, k, l = e.params
    cx = 2 * k + p - 1
    cy = 2 * l + q - 1
    out = {}
    for name in SECTORS:
        g = e.sectors[name]
        if g.is_zero():
            out[name] = g
            continue
        eps, delta = SECTOR_POWERS[name]
        out[name] = _block_rule(g, 0, cx, bool(eps)) + _block_rule(g, 1, cy, bool(delta))
    return e.with_sectors(out)


def iterated_radial_laplacian(e: RadialElement, n: int) -> RadialElement:
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    for _ in range(n):
        e = radial_laplacian(e)
    return e


def embedded_laplacian(g: LaurentBi, q: int, l: int, with_nu: bool = False) -> LaurentBi:
    """<t, d_x>^2 + Delta_y on g(theta, rho) P_l(y), or on g nu P_l(y) when ``with_nu``."""
    return g.derivative(0).derivative(0) + _block_rule(g, 1, 2 * l + q - 1, with_nu)


# ----- Vekua systems -----


def vekua_residual_biaxial(M: LaurentBi, N: LaurentBi, params: Tuple[int, int, int, int]) -> Tuple[LaurentBi, LaurentBi]:
    """Residuals of d_r M + d_rho N + cy N/rho and d_rho M - d_r N - cx N/r."""
    p, q, k, l = params
    cx = 2 * k + p - 1
    cy = 2 * l + q - 1
    first = M.derivative(0) + N.derivative(1) + N.shift(0, -1) * cy
    second = M.derivative(1) - N.derivative(0) - N.shift(-1, 0) * cx
    return first, second


def vekua_residual_axial(A: LaurentBi, B: LaurentBi, k: int, m: int) -> Tuple[LaurentBi, LaurentBi]:
    """Residuals of d0 A - dR B - c B/R and dR A + d0 B with c = 2k + m - 1."""
    c = 2 * k + m - 1
    first = A.derivative(0) - B.derivative(1) - B.shift(0, -1) * c
    second = A.derivative(1) + B.derivative(0)
    return first, second


# ----- Cartesian bridge -----


def _radial_power(shell: CartesianPoly, block: str, exponent: int, with_unit: bool, sector: str, term) -> CartesianPoly:
    """v^exponent (times the unit vector) as a polynomial in the block."""
    if with_unit:
        if exponent < 1 or exponent % 2 == 0:
            raise NotCartesianConvertible("unit-vector sector needs an odd positive power", sector, term)
        vector = CartesianPoly.vector_variable(shell.p, shell.q, block, shell.axis)
        return vector * CartesianPoly.norm_squared(shell.p, shell.q, block, shell.axis) ** ((exponent - 1) // 2)
    if exponent < 0 or exponent % 2:
        raise NotCartesianConvertible("scalar sector needs an even non-negative power", sector, term)
    return CartesianPoly.norm_squared(shell.p, shell.q, block, shell.axis) ** (exponent // 2)


def _axis_power(shell: CartesianPoly, exponent: int, sector: str, term) -> CartesianPoly:
    if exponent < 0:
        raise NotCartesianConvertible("negative power of the axis variable", sector, term)
    return CartesianPoly.variable(shell.p, shell.q, "x0", axis=True) ** exponent


def to_cartesian(
    e: RadialElement,
    pk: Optional[SphericalMonogenic] = None,
    pl: Optional[SphericalMonogenic] = None,
) -> CartesianPoly:
    """Exact Cartesian polynomial of a radial element; ``None`` monogenics mean the constant 1.

    For axial elements the sphere monogenic P_k(X) is passed as ``pk`` and the
    result lives in ``CartesianPoly(m, 0, axis=True)``.
    """
    p, q, k, l = e.params
    if e.axial:
        if pl is not None:
            raise DomainError("axial elements take a single monogenic (pk)")
        shell = CartesianPoly.zero(q, 0, axis=True)
        tail = _monogenic_factor(pk, BLOCK_X, l, shell)
    else:
        shell = CartesianPoly.zero(p, q)
        tail = _monogenic_factor(pk, BLOCK_X, k, shell) * _monogenic_factor(pl, BLOCK_Y, l, shell)
    total = CartesianPoly.zero(shell.p, shell.q, shell.axis)
    for name in SECTORS:
        eps, delta = SECTOR_POWERS[name]
        for (a, b), c in e.sectors[name].items():
            term = f"{c.text()}*{e.var_names[0]}^{a}*{e.var_names[1]}^{b}"
            if c.pi_pow:
                raise NotCartesianConvertible("coefficient carries a power of pi; normalise first", name, term)
            if e.axial:
                left = _axis_power(shell, a, name, term)
                right = _radial_power(shell, BLOCK_X, b, bool(delta), name, term)
            else:
                left = _radial_power(shell, BLOCK_X, a, bool(eps), name, term)
                right = _radial_power(shell, BLOCK_Y, b, bool(delta), name, term)
            total = total + (left * right) * c.rat
    return total * tail


def _monogenic_factor(pm: Optional[SphericalMonogenic], block: str, degree: int, shell: CartesianPoly) -> CartesianPoly:
    if pm is None:
        if degree:
            raise DomainError(f"a degree-{degree} monogenic is required for the {block}-block")
        return CartesianPoly.constant(shell.p, shell.q, 1, shell.axis)
    if pm.block != block or pm.degree != degree:
        raise DomainError(f"expected a degree-{degree} {block}-block monogenic, got degree {pm.degree} in block {pm.block}")
    return pm.embed(shell.p, shell.q, shell.axis)


def harmonic_seed_parts(n: int, var_names: Tuple[str, str] = PROFILE_VARS) -> Tuple[LaurentBi, LaurentBi]:
    """Real and imaginary parts of (a + i b)^n."""
    real: Dict[Pair, Fraction] = {}
    imag: Dict[Pair, Fraction] = {}
    for j in range(n + 1):
        c = Fraction(math.comb(n, j))
        target, sign = ((real, 1), (imag, 1), (real, -1), (imag, -1))[j % 4]
        target[(n - j, j)] = sign * c
    return LaurentBi(real, var_names), LaurentBi(imag, var_names)

