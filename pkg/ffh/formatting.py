"""
Rendering of engine objects: pydantic documents for JSON, plain text, and
LaTeX through sympy with non-commutative ``\\underline{x}``, ``\\underline{y}``.
"""

import json
from typing import List, Sequence, Tuple

import sympy
from pydantic import BaseModel

from ffh.clifford import Multivector
from ffh.gegenbauer import moment
from ffh.models.transform_models import (
    BladeTerm,
    CartesianModel,
    CheckModel,
    ClassificationResponse,
    MomentRow,
    NumericResponse,
    OracleResponse,
    WorkedExampleModel,
    WorkedExamplesResponse,
    RadialModel,
    ScalarExtModel,
    SweepCaseModel,
    SweepResponse,
    TransformResponse,
    VerificationResponse,
)
from ffh.polyalg import CartesianPoly
from ffh.radial import SECTOR_POWERS, SECTORS, LaurentBi, RadialElement, ScalarExt
from ffh.transform import (
    Classification,
    NumericSample,
    WorkedExample,
    SweepCase,
    TransformResult,
    VerificationReport,
)

_SYMPY_NAMES = {"r": "r", "rho": "rho", "theta": "theta", "x0": "x_0", "R": "R"}


def dump_json(model: BaseModel) -> str:
    """Deterministic JSON: sorted keys, two-space indent."""
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2)


def params_dict(p: int, q: int, k: int, l: int) -> dict:
    return {"p": p, "q": q, "k": k, "l": l}


def scalar_model(s: ScalarExt) -> ScalarExtModel:
    return ScalarExtModel(**s.to_json())


def radial_model(e: RadialElement) -> RadialModel:
    return RadialModel(text=e.text(), **e.to_json())


def cartesian_model(f: CartesianPoly) -> CartesianModel:
    return CartesianModel(p=f.p, q=f.q, axis=f.axis, variables=f.variables, terms=f.to_json(), text=f.text())


def blade_terms(mv: Multivector) -> List[BladeTerm]:
    return [BladeTerm(**term) for term in mv.to_json()]


def transform_response(res: TransformResult, with_latex: bool = False) -> TransformResponse:
    req = res.request
    return TransformResponse(
        h=req.h.text(),
        params=params_dict(req.p, req.q, req.k, req.l),
        raw=radial_model(res.radial),
        normalized=radial_model(res.normalized),
        normalization=scalar_model(res.normalization),
        normalization_text=res.normalization.text(),
        cartesian=cartesian_model(res.cartesian) if res.cartesian is not None else None,
        classification=res.classification.text(),
        degree=res.classification.degree,
        notes=list(res.notes),
        latex=latex_radial(res.normalized) if with_latex else None,
    )


def numeric_response(h_text: str, params: Tuple[int, int, int, int], sample: NumericSample) -> NumericResponse:
    return NumericResponse(
        h=h_text,
        params=params_dict(*params),
        r=sample.r,
        rho=sample.rho,
        M=sample.M,
        N=sample.N,
        flagged=sample.flagged,
        discrepancy=sample.discrepancy,
    )


def verification_response(h_text: str, params: Tuple[int, int, int, int], report: VerificationReport) -> VerificationResponse:
    return VerificationResponse(
        h=h_text,
        params=params_dict(*params),
        passed=report.passed,
        checks=[CheckModel(name=c.name, passed=c.passed, residual=c.residual, detail=c.detail) for c in report.checks],
    )


def sweep_response(cases: Sequence[SweepCase]) -> SweepResponse:
    models = [
        SweepCaseModel(
            n=c.n,
            p=c.p,
            q=c.q,
            k=c.k,
            l=c.l,
            observed=c.observed.text(),
            predicted=c.predicted.text(),
            vekua_ok=c.vekua_ok,
            dirac_ok=c.dirac_ok,
            passed=c.passed,
        )
        for c in cases
    ]
    failed = sum(not m.passed for m in models)
    return SweepResponse(passed=failed == 0, total=len(models), failed=failed, cases=models)


def moment_rows(n_max: int, k_max: int, p: int) -> List[MomentRow]:
    rows = []
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            m = moment(n, k, p)
            rows.append(MomentRow(n=n, k=k, p=p, rat=str(m.rat), pi_pow=m.pi_pow))
    return rows


def oracle_response(doc: dict) -> OracleResponse:
    return OracleResponse(
        F=doc["F"],
        Yk=doc["Yk"],
        xi=doc["xi"],
        lhs=blade_terms(doc["lhs"]),
        rhs=blade_terms(doc["rhs"]),
        relative_gap=doc["relative_gap"],
        passed=doc["passed"],
    )


def classification_response(n: int, k: int, l: int, p: int, q: int, c: Classification) -> ClassificationResponse:
    return ClassificationResponse(n=n, k=k, l=l, p=p, q=q, classification=c.text(), degree=c.degree)


def worked_examples_response(examples: Sequence[WorkedExample]) -> WorkedExamplesResponse:
    models = [WorkedExampleModel(name=e.name, passed=e.passed, scalar=e.scalar, detail=e.detail) for e in examples]
    return WorkedExamplesResponse(passed=all(m.passed for m in models), examples=models)


# ----- plain text -----


def plain_transform(res: TransformResult) -> str:
    req = res.request
    lines = [
        f"Ft_{req.p},{req.q}[{req.h.text()}, P_{req.k}, P_{req.l}]",
        f"  P_k: {req.pk.poly.text()}",
        f"  P_l: {req.pl.poly.text()}",
        f"  raw:            {res.radial.text()}",
        f"  normalization:  {res.normalization.text()}",
        f"  normalized:     {res.normalized.text()}",
    ]
    if res.cartesian is not None:
        lines.append(f"  cartesian:      {res.cartesian.text()}")
    lines.append(f"  classification: {res.classification.text()}")
    lines.extend(f"  note: {note}" for note in res.notes)
    return "\n".join(lines)


def plain_report(report: VerificationReport) -> str:
    lines = [f"{'PASS' if report.passed else 'FAIL'}"]
    for c in report.checks:
        tail = f" ({c.detail})" if c.detail else ""
        lines.append(f"  {'PASS' if c.passed else 'FAIL'} {c.name}: {c.residual}{tail}")
    return "\n".join(lines)


# ----- LaTeX -----


def _sympy_laurent(f: LaurentBi) -> sympy.Expr:
    a, b = (sympy.Symbol(_SYMPY_NAMES.get(n, n), positive=True) for n in f.var_names)
    expr = sympy.Integer(0)
    for (i, j), c in f.items():
        expr += sympy.Rational(c.rat.numerator, c.rat.denominator) * sympy.pi**c.pi_pow * a**i * b**j
    return expr


def latex_radial(e: RadialElement) -> str:
    """LaTeX with w = x/r and n = y/rho written through the vector variables."""
    p, q, k, l = e.params
    a, b = (sympy.Symbol(_SYMPY_NAMES.get(n, n), positive=True) for n in e.var_names)
    if e.axial:
        x_vec, y_vec = None, sympy.Symbol(r"\underline{X}", commutative=False)
        tail_names = [(l, r"P_{%d}(\underline{X})" % l)]
    else:
        x_vec = sympy.Symbol(r"\underline{x}", commutative=False)
        y_vec = sympy.Symbol(r"\underline{y}", commutative=False)
        tail_names = [(k, r"P_{%d}(\underline{x})" % k), (l, r"P_{%d}(\underline{y})" % l)]
    expr = sympy.Integer(0)
    for name in SECTORS:
        g = e.sectors[name]
        if g.is_zero():
            continue
        eps, delta = SECTOR_POWERS[name]
        coef = sympy.expand(_sympy_laurent(g) / (a**eps * b**delta))
        unit = sympy.Integer(1)
        if eps:
            unit = unit * x_vec
        if delta:
            unit = unit * y_vec
        expr += coef * unit
    if expr == 0:
        return "0"
    tail = sympy.Integer(1)
    for degree, label in tail_names:
        if degree:
            tail = tail * sympy.Symbol(label, commutative=False)
    body = sympy.latex(expr)
    if tail == 1:
        return body
    return rf"\left({body}\right) {sympy.latex(tail)}"
