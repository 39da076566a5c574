import logging
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ffh.config import Config
from ffh.errors import DomainError
from ffh.gegenbauer import funk_hecke_oracle, gauss_jacobi_rule, relative_gap
from ffh.parsing import parse_holomorphic, parse_monogenic, parse_poly
from ffh.polyalg import BLOCK_X, BLOCK_Y, SphericalMonogenic, builtin_monogenic
from ffh.transform import (
    Classification,
    HolomorphicInput,
    NumericField,
    NumericSample,
    WorkedExample,
    SweepCase,
    TransformResult,
    VerificationReport,
    biaxial_transform,
    classify_power,
    monogenicity_sweep,
    worked_examples,
    verify_monogenic,
)

logger = logging.getLogger(__name__)

ORACLE_FUNCTIONS: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "1": lambda t: np.ones_like(np.asarray(t, dtype=float)),
    "t": lambda t: np.asarray(t, dtype=float),
    "t^2": lambda t: np.asarray(t, dtype=float) ** 2,
    "exp": np.exp,
    "cos": np.cos,
}

ORACLE_TOLERANCE = 1e-8


class TransformService:
    _initialized = False

    @staticmethod
    def initialize():
        """Warm the quadrature cache for the configured order."""
        settings = Config()
        try:
            for p in (3, 4, 5):
                gauss_jacobi_rule(settings.QUAD_ORDER, p)
            TransformService._initialized = True
            print("✅ TransformService initialized successfully")
        except Exception as e:
            print(f"❌ Error initializing TransformService: {e}")
            raise

    @staticmethod
    def get_service_status() -> Dict[str, Any]:
        info = gauss_jacobi_rule.cache_info()
        return {
            "initialized": TransformService._initialized,
            "quad_order": Config().QUAD_ORDER,
            "cached_rules": info.currsize,
        }

    @staticmethod
    def monogenics(
        p: int, q: int, k: int, l: int, pk_text: Optional[str] = None, pl_text: Optional[str] = None
    ) -> Tuple[SphericalMonogenic, SphericalMonogenic]:
        """Validated P_k and P_l; the built-in ones when no text is given."""
        pk = parse_monogenic(pk_text, BLOCK_X, p, k) if pk_text else builtin_monogenic(BLOCK_X, p, k)
        pl = parse_monogenic(pl_text, BLOCK_Y, q, l) if pl_text else builtin_monogenic(BLOCK_Y, q, l)
        return pk, pl

    @staticmethod
    def transform(
        h_text: str, p: int, q: int, k: int, l: int, pk_text: Optional[str] = None, pl_text: Optional[str] = None
    ) -> TransformResult:
        h = parse_holomorphic(h_text)
        if not h.is_exact:
            raise DomainError(f"{h.text()} has no exact transform; request the numeric path with a point (r, rho)")
        pk, pl = TransformService.monogenics(p, q, k, l, pk_text, pl_text)
        return biaxial_transform(h, p, q, k, l, pk, pl)

    @staticmethod
    def numeric(
        h_text: str,
        p: int,
        q: int,
        k: int,
        l: int,
        point: Tuple[float, float],
        pk_text: Optional[str] = None,
        pl_text: Optional[str] = None,
        quad_order: Optional[int] = None,
        tol: Optional[float] = None,
    ) -> NumericSample:
        h = parse_holomorphic(h_text)
        pk, pl = TransformService.monogenics(p, q, k, l, pk_text, pl_text)
        field_ = NumericField(h, p, q, k, l, pk, pl, quad_order=quad_order)
        return field_.sample(*point, tol=tol if tol is not None else Config().TOL)

    @staticmethod
    def verify(
        h_text: str,
        p: int,
        q: int,
        k: int,
        l: int,
        pk_text: Optional[str] = None,
        pl_text: Optional[str] = None,
        numeric: bool = False,
        points: Optional[Sequence[Tuple[float, float]]] = None,
        quad_order: Optional[int] = None,
        tol: Optional[float] = None,
    ) -> VerificationReport:
        h = parse_holomorphic(h_text)
        pk, pl = TransformService.monogenics(p, q, k, l, pk_text, pl_text)
        if numeric or not h.is_exact:
            field_ = NumericField(h, p, q, k, l, pk, pl, quad_order=quad_order)
            return verify_monogenic(field_, points, tol)
        return verify_monogenic(biaxial_transform(h, p, q, k, l, pk, pl))

    @staticmethod
    def sweep(n_max: int = 10, k_max: int = 2, l_max: int = 1) -> List[SweepCase]:
        return monogenicity_sweep(n_max, k_max, l_max)

    @staticmethod
    def classify(n: int, k: int, l: int, p: int, q: int) -> Classification:
        return classify_power(n, k, l, p, q)

    @staticmethod
    def oracle(
        F_name: str, yk_text: Optional[str], k: int, xi: Sequence[float], tol: float = ORACLE_TOLERANCE
    ) -> Dict[str, Any]:
        """Sphere integral against the one-dimensional Funk-Hecke formula on S^2."""
        if F_name not in ORACLE_FUNCTIONS:
            raise DomainError(f"unknown F {F_name!r}; choose one of {sorted(ORACLE_FUNCTIONS)}")
        yk = parse_poly(yk_text, 3, 0) if yk_text else builtin_monogenic(BLOCK_X, 3, k).poly
        settings = Config()
        lhs, rhs = funk_hecke_oracle(
            ORACLE_FUNCTIONS[F_name],
            yk,
            xi,
            p=3,
            polar=settings.ORACLE_POLAR,
            azimuth=settings.ORACLE_AZIMUTH,
            quad_order=settings.QUAD_ORDER,
        )
        gap = relative_gap(lhs, rhs)
        return {"F": F_name, "Yk": yk.text(), "xi": [float(c) for c in xi], "lhs": lhs, "rhs": rhs, "relative_gap": gap, "passed": gap <= tol}

    @staticmethod
    def worked_examples(tol: Optional[float] = None, quad_order: Optional[int] = None) -> List[WorkedExample]:
        """Run the worked examples; `FFH_QUAD_ORDER`, when set, replaces the default 512 nodes."""
        settings = Config()
        return worked_examples(
            quad_order=quad_order if quad_order is not None else settings.EXAMPLE_QUAD_ORDER,
            tol=tol if tol is not None else settings.TOL,
        )
