from pydantic import BaseModel, Field
from typing import Dict, List, Optional


class BladeTerm(BaseModel):
    blade: List[int]
    coef: str


class ScalarExtModel(BaseModel):
    rat: str
    pi_pow: int


class LaurentTerm(BaseModel):
    exps: List[int]
    coef: ScalarExtModel


class RadialModel(BaseModel):
    params: Dict[str, int]
    axial: bool
    variables: List[str]
    sectors: Dict[str, List[LaurentTerm]]
    text: str


class PolyTerm(BaseModel):
    exps: List[int]
    coef: List[BladeTerm]


class CartesianModel(BaseModel):
    p: int
    q: int
    axis: bool
    variables: List[str]
    terms: List[PolyTerm]
    text: str


class TransformRequestModel(BaseModel):
    h: str = Field(..., description="Holomorphic seed, e.g. 'i*z^4' or '1/(1+z^2)'")
    p: int = 3
    q: int = 3
    k: int = 0
    l: int = 0
    Pk: Optional[str] = Field(None, description="P_k in local x-variables, e.g. 'x1 - x2*e12'")
    Pl: Optional[str] = Field(None, description="P_l in local y-variables, e.g. 'y1 - y2*e12'")
    numeric: bool = False
    r: Optional[float] = None
    rho: Optional[float] = None
    quad_order: Optional[int] = None
    tol: Optional[float] = None


class TransformResponse(BaseModel):
    h: str
    params: Dict[str, int]
    raw: RadialModel
    normalized: RadialModel
    normalization: ScalarExtModel
    normalization_text: str
    cartesian: Optional[CartesianModel] = None
    classification: str
    degree: Optional[int] = None
    notes: List[str] = []
    latex: Optional[str] = None


class NumericResponse(BaseModel):
    h: str
    params: Dict[str, int]
    r: float
    rho: float
    M: float
    N: float
    flagged: bool
    discrepancy: float


class CheckModel(BaseModel):
    name: str
    passed: bool
    residual: str
    detail: str = ""


class VerificationResponse(BaseModel):
    h: str
    params: Dict[str, int]
    passed: bool
    checks: List[CheckModel]


class SweepCaseModel(BaseModel):
    n: int
    p: int
    q: int
    k: int
    l: int
    observed: str
    predicted: str
    vekua_ok: bool
    dirac_ok: Optional[bool] = None
    passed: bool


class SweepResponse(BaseModel):
    passed: bool
    total: int
    failed: int
    cases: List[SweepCaseModel]


class MomentRow(BaseModel):
    n: int
    k: int
    p: int
    rat: str
    pi_pow: int


class ClassificationResponse(BaseModel):
    n: int
    k: int
    l: int
    p: int
    q: int
    classification: str
    degree: Optional[int] = None


class OracleResponse(BaseModel):
    F: str
    Yk: str
    xi: List[float]
    lhs: List[BladeTerm]
    rhs: List[BladeTerm]
    relative_gap: float
    passed: bool


class WorkedExampleModel(BaseModel):
    name: str
    passed: bool
    scalar: str
    detail: str


class WorkedExamplesResponse(BaseModel):
    passed: bool
    examples: List[WorkedExampleModel]


class ErrorResponse(BaseModel):
    error: str
    detail: Optional[str] = None
