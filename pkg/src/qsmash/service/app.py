"""HTTP facade over the exact computation core.

Every endpoint parses its inputs with the shared expression front end
and answers with canonical forms; bad input comes back as a 400 with
the offending 1-based column when one is known.
"""

from __future__ import annotations

from typing import List, Tuple, Union

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import __version__
from ..algebra import AlgebraElement, GENERATORS, centralizer_basis
from ..modules import WeightModule
from ..parser import (
    ParseError,
    parse_aut,
    parse_context,
    parse_element,
    parse_label,
    parse_module_spec,
)
from ..presented import quotient
from ..spectrum import adjacency, to_dot
from ..verify import all_passed, check_gwa, run_suite
from . import models


def _terms_of(el) -> List[dict]:
    if isinstance(el, AlgebraElement):
        return el.to_records()
    return [
        {
            "exponents": {name: e for name, e in zip(el.algebra.names, u) if e},
            "numerator": list(el.coeff(u).num),
            "denominator": list(el.coeff(u).den),
        }
        for u in el.support()
    ]


def _parse_start(text: str) -> Union[int, Tuple[int, int]]:
    stripped = text.strip()
    if stripped.startswith("("):
        return parse_label(stripped)
    try:
        return int(stripped)
    except ValueError:
        raise ParseError("expected '(i,m)' or an integer label", 1) from None


def create_app() -> FastAPI:
    app = FastAPI(
        title="qsmash",
        version=__version__,
        description="Exact computations in a q-deformed smash product algebra.",
    )

    @app.exception_handler(ParseError)
    async def _on_parse_error(_: Request, exc: ParseError) -> JSONResponse:
        return JSONResponse(
            status_code=400, content={"message": exc.message, "column": exc.column}
        )

    @app.exception_handler(ValueError)
    async def _on_value_error(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"message": str(exc), "column": None})

    @app.get("/health", response_model=models.HealthResponse)
    async def health() -> models.HealthResponse:
        return models.HealthResponse(status="ok", version=__version__)

    @app.post(
        "/normalize",
        response_model=models.NormalizeResponse,
        responses={400: {"model": models.Problem}},
    )
    async def normalize(req: models.NormalizeRequest) -> models.NormalizeResponse:
        name, param = parse_context(req.algebra)
        el = parse_element(req.text, name, param)
        return models.NormalizeResponse(
            algebra=req.algebra, text=el.to_text(), terms=_terms_of(el)
        )

    @app.post(
        "/verify",
        response_model=models.VerifyResponse,
        responses={400: {"model": models.Problem}},
    )
    async def verify(req: models.VerifyRequest) -> models.VerifyResponse:
        rows = run_suite(req.suite)
        return models.VerifyResponse(
            suite=req.suite,
            passed=all_passed(rows),
            checks=[models.CheckRow(name=r.name, passed=r.passed, detail=r.detail) for r in rows],
        )

    @app.get("/spectrum/dot", response_class=PlainTextResponse)
    async def spectrum_dot() -> str:
        return to_dot()

    @app.get("/spectrum/adjacency")
    async def spectrum_adjacency() -> dict:
        return adjacency()

    @app.post(
        "/aut/apply",
        response_model=models.NormalizeResponse,
        responses={400: {"model": models.Problem}},
    )
    async def aut_apply(req: models.AutApplyRequest) -> models.NormalizeResponse:
        aut = parse_aut(req.aut)
        el = parse_element(req.text)
        image = aut.apply(el)
        return models.NormalizeResponse(algebra="A", text=image.to_text(), terms=_terms_of(image))

    @app.post(
        "/aut/compose",
        response_model=models.AutResponse,
        responses={400: {"model": models.Problem}},
    )
    async def aut_compose(req: models.AutPairRequest) -> models.AutResponse:
        composed = parse_aut(req.first).compose(parse_aut(req.second))
        return models.AutResponse(literal=composed.literal())

    @app.post(
        "/aut/inverse",
        response_model=models.AutResponse,
        responses={400: {"model": models.Problem}},
    )
    async def aut_inverse(req: models.AutRequest) -> models.AutResponse:
        return models.AutResponse(literal=parse_aut(req.aut).inverse().literal())

    @app.post(
        "/act",
        response_model=models.ActResponse,
        responses={400: {"model": models.Problem}},
    )
    async def act(req: models.ActRequest) -> models.ActResponse:
        module = parse_module_spec(req.module)
        start = _parse_start(req.start)
        if isinstance(module, WeightModule) != isinstance(start, tuple):
            expected = "'(i,m)'" if isinstance(module, WeightModule) else "integer"
            raise ParseError(f"this module family uses {expected} labels", 1)
        word = parse_element(req.word)
        vec = module.act(word, module.basis_vector(start))
        entries = [
            models.VectorEntry(
                label=str(label),
                coeff=vec[label].text(),
                numerator=list(vec[label].num),
                denominator=list(vec[label].den),
            )
            for label in sorted(vec)
        ]
        return models.ActResponse(module=req.module, start=req.start, vector=entries)

    @app.post(
        "/center",
        response_model=models.CenterResponse,
        responses={400: {"model": models.Problem}},
    )
    async def center(req: models.CenterRequest) -> models.CenterResponse:
        name, param = parse_context(req.algebra)
        if name == "A":
            basis = centralizer_basis(GENERATORS.values(), req.degree)
        else:
            basis = quotient(name, param).target.center_basis(req.degree)
        return models.CenterResponse(
            algebra=req.algebra,
            degree=req.degree,
            dimension=len(basis),
            basis=[el.to_text() for el in basis],
        )

    @app.post(
        "/gwa-check",
        response_model=models.VerifyResponse,
        responses={400: {"model": models.Problem}},
    )
    async def gwa_check(req: models.GwaCheckRequest) -> models.VerifyResponse:
        rows = check_gwa(seed=req.seed, triples=req.triples, pairs=req.pairs)
        return models.VerifyResponse(
            suite="gwa",
            passed=all_passed(rows),
            checks=[models.CheckRow(name=r.name, passed=r.passed, detail=r.detail) for r in rows],
        )

    return app
