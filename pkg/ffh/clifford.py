"""
Exact arithmetic in the real Clifford algebra R_{0,m}.

Blades are stored as bitmasks (bit j-1 set for generator e_j); the public
``Blade`` type keeps the index-tuple view.  Scalars are ``Fraction`` in exact
mode and ``float`` in numeric mode; one multivector never holds both.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from ffh.errors import DimensionMismatchError, InvalidBladeError, ScalarModeError

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"


def as_scalar(value) -> Scalar:
    """Coerce ints, strings and Fractions to Fraction; floats stay floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a Clifford scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return value
    # numpy scalars and friends
    try:
        return float(value)
    except (TypeError, ValueError) as e:
        raise TypeError(f"unsupported scalar {value!r}") from e


def scalar_mode(value: Scalar) -> str:
    return FLOAT if isinstance(value, float) else EXACT


@dataclass(frozen=True)
class Blade:
    """Basis blade e_A with A a strictly increasing tuple of generator indices."""

    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        previous = 0
        for j in self.indices:
            if not isinstance(j, int) or j <= previous:
                raise InvalidBladeError(f"blade indices must be strictly increasing positive integers: {self.indices}")
            previous = j

    @classmethod
    def from_mask(cls, mask: int) -> "Blade":
        indices = []
        j = 1
        while mask:
            if mask & 1:
                indices.append(j)
            mask >>= 1
            j += 1
        return cls(tuple(indices))

    @property
    def mask(self) -> int:
        return sum(1 << (j - 1) for j in self.indices)

    @property
    def grade(self) -> int:
        return len(self.indices)

    def validate(self, m: int) -> "Blade":
        if self.indices and self.indices[-1] > m:
            raise InvalidBladeError(f"blade {self.text() or '1'} has an index outside 1..{m}")
        return self

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.grade, self.indices)

    def text(self) -> str:
        """``e12`` style name; the identity blade prints as the empty string."""
        if not self.indices:
            return ""
        if all(j <= 9 for j in self.indices):
            return "e" + "".join(str(j) for j in self.indices)
        return "e[" + ",".join(str(j) for j in self.indices) + "]"


def mask_sort_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    return Blade.from_mask(mask).sort_key()


@lru_cache(maxsize=None)
def mask_product(a: int, b: int) -> Tuple[int, int]:
    """Sign and result mask of e_A e_B in R_{0,m}.

    The sign counts the transpositions needed to merge B into A, times -1 for
    every generator shared by both blades (e_j^2 = -1).
    """
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += (shifted & b).bit_count()
        shifted >>= 1
    swaps += (a & b).bit_count()
    return (-1 if swaps & 1 else 1), a ^ b


def blade_product(a: Blade, b: Blade, m: int) -> Tuple[int, Blade]:
    a.validate(m)
    b.validate(m)
    sign, mask = mask_product(a.mask, b.mask)
    return sign, Blade.from_mask(mask)


class Multivector:
    """Element of R_{0,dim}: a canonical map blade-mask -> non-zero scalar."""

    __slots__ = ("dim", "_coeffs", "_mode")

    def __init__(self, dim: int, coeffs: Optional[Mapping[Union[int, Blade], object]] = None):
        if not isinstance(dim, int) or dim < 1:
            raise DimensionMismatchError(f"algebra dimension must be a positive integer, got {dim!r}")
        self.dim = dim
        clean: Dict[int, Scalar] = {}
        mode = None
        limit = 1 << dim
        for key, raw in (coeffs or {}).items():
            mask = key.mask if isinstance(key, Blade) else key
            if not 0 <= mask < limit:
                raise InvalidBladeError(f"blade {Blade.from_mask(mask).text()} is outside R_0,{dim}")
            value = as_scalar(raw)
            if value == 0:
                continue
            value_mode = scalar_mode(value)
            if mode is not None and value_mode != mode:
                raise ScalarModeError("exact and float coefficients in one multivector")
            mode = value_mode
            clean[mask] = clean.get(mask, 0) + value
            if clean[mask] == 0:
                del clean[mask]
        self._coeffs = clean
        self._mode = mode if clean else None

    @classmethod
    def _raw(cls, dim: int, coeffs: Dict[int, Scalar], mode: Optional[str]) -> "Multivector":
        # trusted constructor: coeffs already canonical
        mv = object.__new__(cls)
        mv.dim = dim
        mv._coeffs = coeffs
        mv._mode = mode if coeffs else None
        return mv

    # ----- constructors -----

    @classmethod
    def zero(cls, dim: int) -> "Multivector":
        return cls(dim)

    @classmethod
    def scalar(cls, dim: int, value=1) -> "Multivector":
        return cls(dim, {0: value})

    @classmethod
    def basis(cls, dim: int, blade: Union[Blade, Iterable[int]], value=1) -> "Multivector":
        if not isinstance(blade, Blade):
            blade = Blade(tuple(blade))
        blade.validate(dim)
        return cls(dim, {blade.mask: value})

    @classmethod
    def generator(cls, dim: int, j: int) -> "Multivector":
        return cls.basis(dim, (j,))

    @classmethod
    def vector(cls, dim: int, components: Mapping[int, object]) -> "Multivector":
        return cls(dim, {1 << (j - 1): c for j, c in components.items()})

    # ----- inspection -----

    @property
    def mode(self) -> Optional[str]:
        return self._mode

    def items(self) -> Iterator[Tuple[int, Scalar]]:
        """Mask/coefficient pairs in canonical order (grade, then indices)."""
        for mask in sorted(self._coeffs, key=mask_sort_key):
            yield mask, self._coeffs[mask]

    def terms(self) -> List[Tuple[Blade, Scalar]]:
        return [(Blade.from_mask(mask), c) for mask, c in self.items()]

    def coefficient(self, blade: Union[Blade, int] = 0) -> Scalar:
        mask = blade.mask if isinstance(blade, Blade) else blade
        return self._coeffs.get(mask, Fraction(0) if self._mode != FLOAT else 0.0)

    def scalar_part(self) -> Scalar:
        return self.coefficient(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def grades(self) -> List[int]:
        return sorted({mask.bit_count() for mask in self._coeffs})

    def leading(self) -> Tuple[Blade, Scalar]:
        """First non-zero term in canonical order."""
        for mask, c in self.items():
            return Blade.from_mask(mask), c
        raise ValueError("zero multivector has no leading term")

    # ----- arithmetic -----

    def _check(self, other: "Multivector") -> Optional[str]:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"R_0,{self.dim} and R_0,{other.dim} operands")
        if self._mode and other._mode and self._mode != other._mode:
            raise ScalarModeError("exact and float multivectors mixed in one expression")
        return self._mode or other._mode

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        mode = self._check(other)
        out = dict(self._coeffs)
        for mask, c in other._coeffs.items():
            value = out.get(mask, 0) + c
            if value == 0:
                out.pop(mask, None)
            else:
                out[mask] = value
        return Multivector._raw(self.dim, out, mode)

    def __neg__(self) -> "Multivector":
        return Multivector._raw(self.dim, {m: -c for m, c in self._coeffs.items()}, self._mode)

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "Multivector":
        if isinstance(factor, int) and self._mode == FLOAT:
            factor = float(factor)
        factor = as_scalar(factor)
        if self._mode and scalar_mode(factor) != self._mode:
            raise ScalarModeError("exact and float scalars mixed in one expression")
        if factor == 0:
            return Multivector.zero(self.dim)
        return Multivector._raw(self.dim, {m: c * factor for m, c in self._coeffs.items()}, self._mode)

    def __mul__(self, other) -> "Multivector":
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "Multivector":
        return self.scale(other)

    def left_generator(self, j: int) -> "Multivector":
        """e_j * self, the building block of every Dirac operator."""
        if not 1 <= j <= self.dim:
            raise InvalidBladeError(f"generator e{j} outside R_0,{self.dim}")
        g = 1 << (j - 1)
        out = {}
        for mask, c in self._coeffs.items():
            sign, result = mask_product(g, mask)
            out[result] = c if sign > 0 else -c
        return Multivector._raw(self.dim, out, self._mode)

    def embed(self, dim: int, offset: int = 0) -> "Multivector":
        """Relabel generator e_j as e_{j+offset} inside R_{0,dim}."""
        if self.dim + offset > dim:
            raise DimensionMismatchError(f"cannot embed R_0,{self.dim} at offset {offset} into R_0,{dim}")
        return Multivector._raw(dim, {m << offset: c for m, c in self._coeffs.items()}, self._mode)

    def to_float(self) -> "Multivector":
        return Multivector._raw(self.dim, {m: float(c) for m, c in self._coeffs.items()}, FLOAT)

    def max_norm(self) -> float:
        return max((abs(float(c)) for c in self._coeffs.values()), default=0.0)

    # ----- comparison / printing -----

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dim == other.dim and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self._coeffs.items())))

    def text(self) -> str:
        """Canonical text such as ``2 - e1 + 3/5*e12``; zero prints as ``0``."""
        pieces = []
        for mask, c in self.items():
            name = Blade.from_mask(mask).text()
            negative = c < 0
            magnitude = -c if negative else c
            if not name:
                body = format_scalar(magnitude)
            elif magnitude == 1:
                body = name
            else:
                body = f"{format_scalar(magnitude)}*{name}"
            pieces.append(("-" if negative else "+", body))
        return join_signed(pieces)

    def to_json(self) -> List[dict]:
        return [{"blade": list(Blade.from_mask(mask).indices), "coef": format_scalar(c)} for mask, c in self.items()]

    def __repr__(self) -> str:
        return f"Multivector({self.dim}, {self.text()})"


def format_scalar(value: Scalar) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def join_signed(pieces: List[Tuple[str, str]]) -> str:
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    mode = a._check(b)
    out: Dict[int, Scalar] = {}
    for ma, ca in a._coeffs.items():
        for mb, cb in b._coeffs.items():
            sign, mask = mask_product(ma, mb)
            value = ca * cb
            out[mask] = out.get(mask, 0) + (value if sign > 0 else -value)
    return Multivector._raw(a.dim, {m: c for m, c in out.items() if c != 0}, mode)


def grade_project(a: Multivector, g: int) -> Multivector:
    if not 0 <= g <= a.dim:
        raise ValueError(f"grade {g} outside 0..{a.dim}")
    return Multivector._raw(a.dim, {m: c for m, c in a._coeffs.items() if m.bit_count() == g}, a.mode)


def is_even(a: Multivector) -> bool:
    return all(mask.bit_count() % 2 == 0 for mask, _ in a.items())


def is_even_over(a: Multivector, generators: Iterable[int]) -> bool:
    """Even grade and supported on the given generator set."""
    allowed = sum(1 << (j - 1) for j in generators)
    return all(mask.bit_count() % 2 == 0 and mask & ~allowed == 0 for mask, _ in a.items())
