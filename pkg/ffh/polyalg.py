"""
Cartesian polynomials with Clifford coefficients and the exact differential
operators acting on them.

Variable layout of a ``CartesianPoly``: the optional scalar axis ``x0`` (axial
mode), then ``x1..xp`` attached to generators ``e1..ep``, then ``y1..yq``
attached to ``e{p+1}..e{p+q}``.  Operators multiply by ``e_j`` on the left.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ffh.clifford import Blade, Multivector, format_scalar, is_even_over, join_signed
from ffh.errors import DimensionMismatchError, DomainError, SphericalMonogenicError, UnknownVariableError

Exps = Tuple[int, ...]

BLOCK_X = "x"
BLOCK_Y = "y"
BLOCK_FULL = "full"
BLOCKS = (BLOCK_X, BLOCK_Y, BLOCK_FULL)

ZERO = "zero"
INHOMOGENEOUS = "inhomogeneous"


class CartesianPoly:
    """Polynomial in (x0?, x1..xp, y1..yq) with coefficients in R_{0,p+q}."""

    __slots__ = ("p", "q", "axis", "_terms")

    def __init__(self, p: int, q: int, terms: Optional[Mapping[Exps, object]] = None, axis: bool = False):
        if p < 0 or q < 0 or p + q < 1:
            raise DimensionMismatchError(f"need p + q >= 1, got p={p}, q={q}")
        self.p = p
        self.q = q
        self.axis = axis
        nvars = self.nvars
        clean: Dict[Exps, Multivector] = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DimensionMismatchError(f"exponent vector {exps} does not fit {nvars} variables")
            if not isinstance(coef, Multivector):
                coef = Multivector.scalar(self.dim, coef)
            elif coef.dim != self.dim:
                raise DimensionMismatchError(f"coefficient in R_0,{coef.dim}, polynomial over R_0,{self.dim}")
            _accumulate(clean, exps, coef)
        self._terms = clean

    @classmethod
    def _raw(cls, p: int, q: int, axis: bool, terms: Dict[Exps, Multivector]) -> "CartesianPoly":
        poly = object.__new__(cls)
        poly.p, poly.q, poly.axis, poly._terms = p, q, axis, terms
        return poly

    # ----- layout -----

    @property
    def dim(self) -> int:
        return self.p + self.q

    @property
    def nvars(self) -> int:
        return self.p + self.q + (1 if self.axis else 0)

    @property
    def variables(self) -> List[str]:
        names = ["x0"] if self.axis else []
        names += [f"x{j}" for j in range(1, self.p + 1)]
        names += [f"y{j}" for j in range(1, self.q + 1)]
        return names

    def index_of(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(f"unknown variable {name!r}; polynomial has {self.variables}") from None

    def generator_of(self, index: int) -> Optional[int]:
        """Clifford generator attached to a variable; None for the scalar axis."""
        if self.axis:
            if index == 0:
                return None
            index -= 1
        return index + 1

    def block_indices(self, block: str) -> List[int]:
        offset = 1 if self.axis else 0
        if block == BLOCK_X:
            return list(range(offset, offset + self.p))
        if block == BLOCK_Y:
            return list(range(offset + self.p, offset + self.p + self.q))
        if block == BLOCK_FULL:
            return list(range(self.nvars))
        raise ValueError(f"unknown block {block!r}; expected one of {BLOCKS}")

    def block_generators(self, block: str) -> List[int]:
        return [g for g in (self.generator_of(i) for i in self.block_indices(block)) if g is not None]

    def same_layout(self, other: "CartesianPoly") -> bool:
        return (self.p, self.q, self.axis) == (other.p, other.q, other.axis)

    def _check(self, other: "CartesianPoly") -> None:
        if not self.same_layout(other):
            raise DimensionMismatchError(
                f"layouts differ: (p={self.p}, q={self.q}, axis={self.axis}) vs "
                f"(p={other.p}, q={other.q}, axis={other.axis})"
            )

    # ----- constructors -----

    @classmethod
    def zero(cls, p: int, q: int, axis: bool = False) -> "CartesianPoly":
        return cls(p, q, axis=axis)

    @classmethod
    def constant(cls, p: int, q: int, value=1, axis: bool = False) -> "CartesianPoly":
        nvars = p + q + (1 if axis else 0)
        return cls(p, q, {(0,) * nvars: value}, axis=axis)

    @classmethod
    def variable(cls, p: int, q: int, name: str, axis: bool = False) -> "CartesianPoly":
        zero = cls.zero(p, q, axis)
        exps = [0] * zero.nvars
        exps[zero.index_of(name)] = 1
        return cls(p, q, {tuple(exps): 1}, axis=axis)

    @classmethod
    def vector_variable(cls, p: int, q: int, block: str, axis: bool = False) -> "CartesianPoly":
        """x = sum x_j e_j or y = sum y_j e_{p+j}."""
        shell = cls.zero(p, q, axis)
        terms = {}
        for i in shell.block_indices(block):
            exps = [0] * shell.nvars
            exps[i] = 1
            terms[tuple(exps)] = Multivector.generator(shell.dim, shell.generator_of(i))
        return cls(p, q, terms, axis=axis)

    @classmethod
    def norm_squared(cls, p: int, q: int, block: str, axis: bool = False) -> "CartesianPoly":
        """r^2 = sum x_j^2 (block x) or rho^2 = sum y_j^2 (block y)."""
        shell = cls.zero(p, q, axis)
        terms = {}
        for i in shell.block_indices(block):
            exps = [0] * shell.nvars
            exps[i] = 2
            terms[tuple(exps)] = 1
        return cls(p, q, terms, axis=axis)

    # ----- inspection -----

    def items(self) -> List[Tuple[Exps, Multivector]]:
        """Terms in canonical order (exponent vectors descending)."""
        return sorted(self._terms.items(), key=lambda item: item[0], reverse=True)

    def coefficient(self, exps: Exps) -> Multivector:
        return self._terms.get(tuple(exps), Multivector.zero(self.dim))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def total_degrees(self) -> List[int]:
        return sorted({sum(exps) for exps in self._terms})

    def uses_only(self, block: str) -> bool:
        allowed = set(self.block_indices(block))
        return all(i in allowed for exps in self._terms for i, e in enumerate(exps) if e)

    # ----- ring structure -----

    def __add__(self, other: "CartesianPoly") -> "CartesianPoly":
        if not isinstance(other, CartesianPoly):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for exps, coef in other._terms.items():
            _accumulate(out, exps, coef)
        return CartesianPoly._raw(self.p, self.q, self.axis, out)

    def __neg__(self) -> "CartesianPoly":
        return CartesianPoly._raw(self.p, self.q, self.axis, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "CartesianPoly") -> "CartesianPoly":
        if not isinstance(other, CartesianPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "CartesianPoly":
        if isinstance(other, CartesianPoly):
            self._check(other)
            out: Dict[Exps, Multivector] = {}
            for ea, ca in self._terms.items():
                for eb, cb in other._terms.items():
                    _accumulate(out, tuple(a + b for a, b in zip(ea, eb)), ca * cb)
            return CartesianPoly._raw(self.p, self.q, self.axis, out)
        if isinstance(other, Multivector):
            return CartesianPoly(self.p, self.q, {e: c * other for e, c in self._terms.items()}, axis=self.axis)
        return CartesianPoly(self.p, self.q, {e: c.scale(other) for e, c in self._terms.items()}, axis=self.axis)

    def __rmul__(self, other) -> "CartesianPoly":
        if isinstance(other, Multivector):
            return CartesianPoly(self.p, self.q, {e: other * c for e, c in self._terms.items()}, axis=self.axis)
        return self.__mul__(other)

    def __pow__(self, n: int) -> "CartesianPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = CartesianPoly.constant(self.p, self.q, 1, self.axis)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ----- calculus -----

    def partial_derivative(self, var: Union[str, int]) -> "CartesianPoly":
        i = self.index_of(var) if isinstance(var, str) else var
        if not 0 <= i < self.nvars:
            raise UnknownVariableError(f"variable index {i} outside 0..{self.nvars - 1}")
        out: Dict[Exps, Multivector] = {}
        for exps, coef in self._terms.items():
            e = exps[i]
            if e:
                _accumulate(out, exps[:i] + (e - 1,) + exps[i + 1:], coef.scale(e))
        return CartesianPoly._raw(self.p, self.q, self.axis, out)

    def dirac(self, block: str = BLOCK_FULL) -> "CartesianPoly":
        out: Dict[Exps, Multivector] = {}
        for i in self.block_indices(block):
            gen = self.generator_of(i)
            for exps, coef in self._terms.items():
                e = exps[i]
                if not e:
                    continue
                term = coef if gen is None else coef.left_generator(gen)
                _accumulate(out, exps[:i] + (e - 1,) + exps[i + 1:], term.scale(e))
        return CartesianPoly._raw(self.p, self.q, self.axis, out)

    def laplacian(self, block: str = BLOCK_FULL) -> "CartesianPoly":
        out: Dict[Exps, Multivector] = {}
        for i in self.block_indices(block):
            for exps, coef in self._terms.items():
                e = exps[i]
                if e >= 2:
                    _accumulate(out, exps[:i] + (e - 2,) + exps[i + 1:], coef.scale(e * (e - 1)))
        return CartesianPoly._raw(self.p, self.q, self.axis, out)

    def euler_operator(self, block: str = BLOCK_FULL) -> "CartesianPoly":
        """sum_j v_j d/dv_j over the block."""
        out: Dict[Exps, Multivector] = {}
        indices = self.block_indices(block)
        for exps, coef in self._terms.items():
            weight = sum(exps[i] for i in indices)
            if weight:
                _accumulate(out, exps, coef.scale(weight))
        return CartesianPoly._raw(self.p, self.q, self.axis, out)

    def homogeneous_degree(self) -> Union[int, str]:
        degrees = self.total_degrees()
        if not degrees:
            return ZERO
        if len(degrees) > 1:
            return INHOMOGENEOUS
        return degrees[0]

    # ----- evaluation -----

    def evaluate(self, point: Union[Sequence, Mapping[str, object]]) -> Multivector:
        """Value at a point; Fractions give an exact result, floats a float one."""
        if isinstance(point, Mapping):
            values = [point.get(name, 0) for name in self.variables]
        else:
            values = list(point)
        if len(values) != self.nvars:
            raise DimensionMismatchError(f"point has {len(values)} coordinates, polynomial has {self.nvars} variables")
        numeric = any(isinstance(v, float) for v in values)
        if numeric:
            values = [float(v) for v in values]
        else:
            values = [Fraction(v) for v in values]
        total = Multivector.zero(self.dim)
        for exps, coef in self._terms.items():
            monomial = Fraction(1) if not numeric else 1.0
            for v, e in zip(values, exps):
                if e:
                    monomial *= v**e
            total = total + (coef.to_float() if numeric else coef).scale(monomial)
        return total

    def evaluate_grid(self, coords: np.ndarray) -> Dict[int, np.ndarray]:
        """Float values on a grid; ``coords`` has shape (nvars, N).

        Returns blade-mask -> array of N values.
        """
        coords = np.asarray(coords, dtype=float)
        if coords.shape[0] != self.nvars:
            raise DimensionMismatchError(f"grid has {coords.shape[0]} coordinates, polynomial has {self.nvars} variables")
        out: Dict[int, np.ndarray] = {}
        for exps, coef in self._terms.items():
            monomial = np.prod(coords ** np.asarray(exps, dtype=float)[:, None], axis=0)
            for mask, c in coef.items():
                out[mask] = out.get(mask, 0.0) + float(c) * monomial
        return out

    # ----- comparison / printing -----

    def __eq__(self, other) -> bool:
        if not isinstance(other, CartesianPoly):
            return NotImplemented
        return self.same_layout(other) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.axis, frozenset(self._terms.items())))

    def monomial_text(self, exps: Exps) -> List[str]:
        factors = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return factors

    def text(self) -> str:
        """Canonical text in the polynomial grammar, e.g. ``x1 - x2*e12``."""
        pieces = []
        for exps, coef in self.items():
            factors = self.monomial_text(exps)
            for blade, c in coef.terms():
                negative = c < 0
                magnitude = -c if negative else c
                parts = list(factors)
                if blade.indices:
                    parts.append(blade.text())
                if magnitude != 1 or not parts:
                    parts.insert(0, format_scalar(magnitude))
                pieces.append(("-" if negative else "+", "*".join(parts)))
        return join_signed(pieces)

    def to_json(self) -> List[dict]:
        return [{"exps": list(exps), "coef": coef.to_json()} for exps, coef in self.items()]

    def __repr__(self) -> str:
        return f"CartesianPoly(p={self.p}, q={self.q}, axis={self.axis}: {self.text()})"


def _accumulate(out: Dict[Exps, Multivector], exps: Exps, coef: Multivector) -> None:
    if coef.is_zero():
        return
    current = out.get(exps)
    value = coef if current is None else current + coef
    if value.is_zero():
        out.pop(exps, None)
    else:
        out[exps] = value


# ----- module-level operations -----


def partial_derivative(f: CartesianPoly, v: Union[str, int]) -> CartesianPoly:
    return f.partial_derivative(v)


def dirac(f: CartesianPoly, block: str = BLOCK_FULL) -> CartesianPoly:
    return f.dirac(block)


def laplacian(f: CartesianPoly, block: str = BLOCK_FULL) -> CartesianPoly:
    return f.laplacian(block)


def homogeneous_degree(f: CartesianPoly) -> Union[int, str]:
    return f.homogeneous_degree()


@dataclass(frozen=True)
class SphericalMonogenic:
    """Homogeneous, monogenic, even-valued polynomial in one variable block.

    ``poly`` lives in block-local coordinates: ``CartesianPoly(dim, 0)`` for the
    x-block and ``CartesianPoly(0, dim)`` for the y-block.
    """

    block: str
    degree: int
    poly: CartesianPoly

    @property
    def dim(self) -> int:
        return self.poly.dim

    def embed(self, p: int, q: int, axis: bool = False) -> CartesianPoly:
        """The same polynomial in the ambient (x0?, x, y) layout."""
        expected = p if self.block == BLOCK_X else q
        if self.dim != expected:
            raise DimensionMismatchError(f"{self.block}-block monogenic over {self.dim} variables used with {self.block}-dimension {expected}")
        lead = (0,) if axis else ()
        offset = 0 if self.block == BLOCK_X else p
        terms = {}
        for exps, coef in self.poly.items():
            if self.block == BLOCK_X:
                ambient = lead + exps + (0,) * q
            else:
                ambient = lead + (0,) * p + exps
            terms[ambient] = coef.embed(p + q, offset)
        return CartesianPoly(p, q, terms, axis=axis)


def _localize(f: CartesianPoly, block: str) -> CartesianPoly:
    """Restrict a polynomial that only involves one block to that block's local layout."""
    indices = f.block_indices(block)
    gens = f.block_generators(block)
    offset = (gens[0] - 1) if gens else 0
    dim = len(indices)
    terms = {}
    for exps, coef in f.items():
        local = tuple(exps[i] for i in indices)
        terms[local] = Multivector(dim, {mask >> offset: c for mask, c in coef.items()})
    if block == BLOCK_X:
        return CartesianPoly(dim, 0, terms)
    return CartesianPoly(0, dim, terms)


def validate_spherical_monogenic(f: CartesianPoly, block: str, k: int) -> SphericalMonogenic:
    if block not in (BLOCK_X, BLOCK_Y):
        raise ValueError(f"spherical monogenics live in block 'x' or 'y', not {block!r}")
    if not f.uses_only(block):
        raise SphericalMonogenicError(SphericalMonogenicError.WRONG_BLOCK, f"{f.text()} involves variables outside the {block}-block")
    gens = f.block_generators(block)
    if not gens:
        raise SphericalMonogenicError(SphericalMonogenicError.WRONG_BLOCK, f"the {block}-block of {f!r} is empty")
    degree = f.homogeneous_degree()
    if degree != k:
        witness = "zero polynomial" if degree == ZERO else _first_term_text(f, lambda exps: sum(exps) != k)
        raise SphericalMonogenicError(SphericalMonogenicError.NOT_HOMOGENEOUS, f"expected degree {k}, got {degree}; term {witness}")
    for exps, coef in f.items():
        if not is_even_over(coef, gens):
            raise SphericalMonogenicError(SphericalMonogenicError.NOT_EVEN, f"coefficient {coef.text()} of {'*'.join(f.monomial_text(exps)) or '1'}")
    residual = f.dirac(block)
    if not residual.is_zero():
        raise SphericalMonogenicError(SphericalMonogenicError.NOT_MONOGENIC, f"dirac = {residual.text()}")
    local = f if (f.q == 0 if block == BLOCK_X else f.p == 0) and not f.axis else _localize(f, block)
    return SphericalMonogenic(block=block, degree=k, poly=local)


def _first_term_text(f: CartesianPoly, predicate) -> str:
    for exps, coef in f.items():
        if predicate(exps):
            return f"{coef.text()} * {'*'.join(f.monomial_text(exps)) or '1'}"
    return "?"


def builtin_monogenic(block: str, dim: int, k: int) -> SphericalMonogenic:
    """(v1 - v2 e12)^k in block-local coordinates."""
    if k < 0:
        raise DomainError(f"degree must be non-negative, got {k}")
    if block not in (BLOCK_X, BLOCK_Y):
        raise ValueError(f"unknown block {block!r}")
    p, q = (dim, 0) if block == BLOCK_X else (0, dim)
    if dim < 1:
        raise DomainError(f"block dimension must be positive, got {dim}")
    if k == 0:
        return validate_spherical_monogenic(CartesianPoly.constant(p, q), block, 0)
    if dim < 2:
        raise DomainError(f"the built-in family needs a block of dimension >= 2 for k >= 1, got {dim}")
    v1 = CartesianPoly.variable(p, q, f"{block}1")
    v2 = CartesianPoly.variable(p, q, f"{block}2")
    base = v1 - v2 * Multivector.basis(dim, (1, 2))
    return validate_spherical_monogenic(base**k, block, k)


def monogenic_or_default(candidate: Optional[SphericalMonogenic], block: str, dim: int, k: int) -> SphericalMonogenic:
    if candidate is None:
        return builtin_monogenic(block, dim, k)
    if candidate.block != block or candidate.degree != k or candidate.dim != dim:
        raise DomainError(
            f"monogenic ({candidate.block}, degree {candidate.degree}, dim {candidate.dim}) "
            f"does not match ({block}, degree {k}, dim {dim})"
        )
    return candidate
