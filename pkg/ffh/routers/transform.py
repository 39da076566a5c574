from fastapi import APIRouter, HTTPException, Query
from fastapi.responses import JSONResponse

from ffh.errors import SphericalMonogenicError
from ffh.formatting import (
    classification_response,
    moment_rows,
    numeric_response,
    worked_examples_response,
    transform_response,
    verification_response,
)
from ffh.models.transform_models import (
    ClassificationResponse,
    MomentRow,
    NumericResponse,
    WorkedExamplesResponse,
    TransformRequestModel,
    TransformResponse,
    VerificationResponse,
)
from ffh.services.transform_service import TransformService

router = APIRouter()


def _http_error(e: Exception) -> HTTPException:
    if isinstance(e, SphericalMonogenicError):
        print(f"[422] Rejected spherical monogenic: {str(e)}")
        return HTTPException(status_code=422, detail={"reason": e.reason, "witness": e.witness})
    if isinstance(e, ValueError):
        # ParseError, DomainError and the other value-type engine errors
        print(f"[400] Validation error: {str(e)}")
        return HTTPException(status_code=400, detail=str(e))
    print(f"[500] Internal error: {str(e)}")
    return HTTPException(status_code=500, detail=f"Internal error: {str(e)}")


def _point(req: TransformRequestModel):
    if req.r is None or req.rho is None:
        raise ValueError("the numeric path needs both r and rho")
    return req.r, req.rho


@router.post("/transform", response_model=TransformResponse | NumericResponse)
def transform(req: TransformRequestModel, latex: bool = False):
    """
    Apply Ft_{p,q}[h, P_k, P_l].

    - **h**: polynomial seed like `i*z^4`, or a named numeric seed like `1/(1+z^2)`
    - **Pk / Pl**: spherical monogenics in block-local variables (built-in ones when omitted)
    - **numeric**: evaluate M and N at (r, rho) by quadrature and finite differences
    """
    try:
        if req.numeric:
            sample = TransformService.numeric(
                req.h, req.p, req.q, req.k, req.l, _point(req), req.Pk, req.Pl, req.quad_order, req.tol
            )
            return numeric_response(req.h, (req.p, req.q, req.k, req.l), sample)
        res = TransformService.transform(req.h, req.p, req.q, req.k, req.l, req.Pk, req.Pl)
        return transform_response(res, with_latex=latex)
    except Exception as e:
        raise _http_error(e)


@router.post("/verify", response_model=VerificationResponse)
def verify(req: TransformRequestModel):
    """
    Check monogenicity: Vekua residuals and the exact Cartesian Dirac operator,
    or a finite-difference Dirac residual on the numeric path.
    """
    try:
        points = [_point(req)] if req.numeric and req.r is not None else None
        report = TransformService.verify(
            req.h, req.p, req.q, req.k, req.l, req.Pk, req.Pl, req.numeric, points, req.quad_order, req.tol
        )
        return verification_response(req.h, (req.p, req.q, req.k, req.l), report)
    except Exception as e:
        raise _http_error(e)


@router.get("/classify", response_model=ClassificationResponse)
def classify(
    n: int = Query(..., ge=0),
    k: int = Query(0, ge=0),
    l: int = Query(0, ge=0),
    p: int = 3,
    q: int = 3,
):
    """Predicted class of Ft_{p,q}[z^n, P_k, P_l]."""
    try:
        return classification_response(n, k, l, p, q, TransformService.classify(n, k, l, p, q))
    except Exception as e:
        raise _http_error(e)


@router.get("/moments", response_model=list[MomentRow])
def moments(n_max: int = Query(6, ge=0), k_max: int = Query(3, ge=0), p: int = Query(3, ge=3)):
    """Exact Gegenbauer moments as rational times a power of pi."""
    try:
        return moment_rows(n_max, k_max, p)
    except Exception as e:
        raise _http_error(e)


@router.get("/paper-examples", response_model=WorkedExamplesResponse)
def get_worked_examples():
    """Reproduce the five worked examples, four exact and one numeric."""
    try:
        return worked_examples_response(TransformService.worked_examples())
    except Exception as e:
        raise _http_error(e)


@router.get("/health")
async def health_check():
    """
    Check if the transform service is working.
    """
    try:
        status = TransformService.get_service_status()
        if not status["initialized"]:
            return JSONResponse(
                status_code=503,
                content={"status": "unhealthy", "reason": "Service not initialized"}
            )
        return {
            "status": "healthy",
            "message": "Transform service operational",
            "stats": {"quad_order": status["quad_order"], "cached_rules": status["cached_rules"]},
        }
    except Exception as e:
        return JSONResponse(
            status_code=503,
            content={"status": "unhealthy", "reason": f"Error: {str(e)}"}
        )
