"""HTTP facade over the library.

Every endpoint is a thin wrapper around one library call; requests and
responses are pydantic models so the wire format is validated and
self-documenting.  Run with ``digiconvex serve`` or
``uvicorn digiconvex.service:app``.
"""

from __future__ import annotations

from typing import Annotated, Literal, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse, Response
from pydantic import BaseModel, Field, model_validator

from . import __version__
from .christoffel import (
    central_word,
    christoffel_lower,
    christoffel_upper,
    classify_christoffel,
    is_central,
)
from .convexity import (
    DOWNWARD,
    UPWARD,
    is_balanced,
    is_digitally_convex,
    mfw_balanced,
    mfw_dc,
    mfw_of_word,
)
from .counting import OEIS_IDS, count_table
from .errors import CapExceeded, ContractError, ParseError
from .lattice import (
    cover_relations,
    deflate,
    deflation_chain,
    deflation_sites,
    enumerate_dc,
    inflate,
    inflation_chain,
    inflation_sites,
    join,
    meet,
)
from .lyndon import is_lyndon, lyndon_factorization, standard_factorization
from .render import render_ascii, render_svg
from .words import ORDER_01, parikh, two_palindrome_factorization

DEFAULT_CAP = 24

Word = Annotated[str, Field(pattern=r"^[01]*$")]
NonEmptyWord = Annotated[str, Field(pattern=r"^[01]+$")]

app = FastAPI(
    title="digiconvex",
    version=__version__,
    description="Christoffel words, Lyndon factorizations, and digitally convex paths.",
)


@app.exception_handler(ParseError)
@app.exception_handler(ContractError)
async def _domain_error(request: Request, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(CapExceeded)
async def _cap_error(request: Request, exc: CapExceeded) -> JSONResponse:
    return JSONResponse(status_code=413, content={"detail": str(exc)})


def _check_cap(a: int, b: int, cap: int) -> None:
    if a + b > cap:
        raise CapExceeded(
            f"a+b = {a + b} exceeds the enumeration cap {cap}; raise `cap` to proceed"
        )


class WordResponse(BaseModel):
    word: str
    parikh: tuple[int, int]


class WordsResponse(BaseModel):
    words: list[str]


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


class ChristoffelRequest(BaseModel):
    a: int = Field(ge=0)
    b: int = Field(ge=0)
    variant: Literal["lower", "upper", "central"] = "lower"


@app.post("/christoffel", response_model=WordResponse)
def make_christoffel(req: ChristoffelRequest) -> WordResponse:
    if req.variant == "lower":
        word = christoffel_lower(req.a, req.b)
    elif req.variant == "upper":
        word = christoffel_upper(req.a, req.b)
    else:
        word = central_word(req.a, req.b)
    return WordResponse(word=word, parikh=tuple(parikh(word)))


CheckName = Literal[
    "balanced", "convex-up", "convex-down", "lyndon", "central", "christoffel"
]


class CheckRequest(BaseModel):
    word: Word
    checks: list[CheckName] = Field(min_length=1)
    order: Literal["01", "10"] = "01"


class WitnessModel(BaseModel):
    start: int
    end: int
    factor: str


class CheckResponse(BaseModel):
    word: str
    parikh: tuple[int, int]
    results: dict[str, bool]
    witness: Optional[WitnessModel] = None
    ok: bool


def run_checks(word: str, checks, order: str = ORDER_01):
    """Evaluate the requested predicates; shared by the service and the CLI."""
    results: dict[str, bool] = {}
    witness = None
    for check in checks:
        if check == "balanced":
            results[check] = is_balanced(word)
        elif check in ("convex-up", "convex-down"):
            direction = UPWARD if check == "convex-up" else DOWNWARD
            report = is_digitally_convex(word, direction)
            results[check] = report.convex
            if witness is None and report.witness is not None:
                witness = report.witness
        elif check == "lyndon":
            results[check] = bool(word) and is_lyndon(word, order)
        elif check == "central":
            results[check] = is_central(word)
        elif check == "christoffel":
            results[check] = bool(word) and classify_christoffel(word).is_christoffel
        else:  # pragma: no cover - schema rejects unknown names
            raise ContractError(f"unknown check {check!r}")
    return results, witness


@app.post("/check", response_model=CheckResponse)
def check(req: CheckRequest) -> CheckResponse:
    results, witness = run_checks(req.word, req.checks, req.order)
    return CheckResponse(
        word=req.word,
        parikh=tuple(parikh(req.word)),
        results=results,
        witness=WitnessModel(**witness.__dict__) if witness else None,
        ok=all(results.values()),
    )


class FactorizeRequest(BaseModel):
    word: NonEmptyWord
    mode: Literal["lyndon", "lyndon-rev", "standard", "palindromic"] = "lyndon"


class FactorsResponse(BaseModel):
    word: str
    mode: str
    factors: Optional[list[str]]  # None when a palindromic split does not exist


def factorize_word(word: str, mode: str) -> list[str] | None:
    """Factor list for each mode; shared by the service and the CLI."""
    if mode == "lyndon":
        return list(lyndon_factorization(word, "01").factors)
    if mode == "lyndon-rev":
        return list(lyndon_factorization(word, "10").factors)
    if mode == "standard":
        return list(standard_factorization(word))
    if mode == "palindromic":
        pair = two_palindrome_factorization(word)
        return list(pair) if pair is not None else None
    raise ContractError(f"unknown factorization mode {mode!r}")


@app.post("/factorize", response_model=FactorsResponse)
def factorize(req: FactorizeRequest) -> FactorsResponse:
    return FactorsResponse(
        word=req.word, mode=req.mode, factors=factorize_word(req.word, req.mode)
    )


class MfwRequest(BaseModel):
    source: Literal["word", "balanced", "dc"]
    word: Optional[Word] = None
    max_len: Optional[int] = Field(default=None, ge=1)
    n: Optional[int] = Field(default=None, ge=2)
    construction: Literal["complement", "provencal"] = "complement"

    @model_validator(mode="after")
    def _complete(self):
        if self.source == "word" and self.word is None:
            raise ValueError("source 'word' needs the `word` field")
        if self.source in ("balanced", "dc") and self.n is None:
            raise ValueError(f"source {self.source!r} needs the `n` field")
        return self


@app.post("/mfw", response_model=WordsResponse)
def mfw(req: MfwRequest) -> WordsResponse:
    if req.source == "word":
        words = mfw_of_word(req.word, req.max_len)
    elif req.source == "balanced":
        words = mfw_balanced(req.n)
    else:
        words = mfw_dc(req.n, req.construction)
    return WordsResponse(words=words)


class LatticePairRequest(BaseModel):
    a: int = Field(ge=0)
    b: int = Field(ge=0)
    cap: int = Field(default=DEFAULT_CAP, ge=0)


@app.post("/lattice/enumerate", response_model=WordsResponse)
def lattice_enumerate(req: LatticePairRequest) -> WordsResponse:
    _check_cap(req.a, req.b, req.cap)
    return WordsResponse(words=enumerate_dc(req.a, req.b))


class CoversResponse(BaseModel):
    inflation: list[tuple[str, str]]
    dominance: list[tuple[str, str]]


@app.post("/lattice/covers", response_model=CoversResponse)
def lattice_covers(req: LatticePairRequest) -> CoversResponse:
    _check_cap(req.a, req.b, req.cap)
    covers = cover_relations(req.a, req.b)
    return CoversResponse(inflation=covers.inflation, dominance=covers.dominance)


class WordPairRequest(BaseModel):
    u: Word
    v: Word


class MeetJoinResponse(BaseModel):
    word: str
    convex_up: bool


@app.post("/lattice/meet", response_model=MeetJoinResponse)
def lattice_meet(req: WordPairRequest) -> MeetJoinResponse:
    word = meet(req.u, req.v)
    return MeetJoinResponse(word=word, convex_up=is_digitally_convex(word).convex)


@app.post("/lattice/join", response_model=MeetJoinResponse)
def lattice_join(req: WordPairRequest) -> MeetJoinResponse:
    word = join(req.u, req.v)
    return MeetJoinResponse(word=word, convex_up=is_digitally_convex(word).convex)


class SitesRequest(BaseModel):
    word: Word
    kind: Literal["inflation", "deflation"]


class SiteModel(BaseModel):
    kind: str
    position: int
    factor_index: int


class SitesResponse(BaseModel):
    word: str
    sites: list[SiteModel]


@app.post("/lattice/sites", response_model=SitesResponse)
def lattice_sites(req: SitesRequest) -> SitesResponse:
    finder = inflation_sites if req.kind == "inflation" else deflation_sites
    sites = [SiteModel(**s.__dict__) for s in finder(req.word)]
    return SitesResponse(word=req.word, sites=sites)


class StepRequest(BaseModel):
    word: NonEmptyWord
    kind: Literal["inflation", "deflation"]
    position: Optional[int] = Field(default=None, ge=0)


class StepResponse(BaseModel):
    word: str
    position: int


@app.post("/lattice/step", response_model=StepResponse)
def lattice_step(req: StepRequest) -> StepResponse:
    finder = inflation_sites if req.kind == "inflation" else deflation_sites
    apply = inflate if req.kind == "inflation" else deflate
    position = req.position
    if position is None:
        sites = finder(req.word)
        if not sites:
            raise ContractError(f"word has no {req.kind} site")
        position = sites[0].position
    return StepResponse(word=apply(req.word, position), position=position)


class ChainRequest(BaseModel):
    word: Word
    direction: Literal["inflation", "deflation"]


@app.post("/lattice/chain", response_model=WordsResponse)
def lattice_chain(req: ChainRequest) -> WordsResponse:
    chain = (
        inflation_chain(req.word)
        if req.direction == "inflation"
        else deflation_chain(req.word)
    )
    return WordsResponse(words=chain)


class CountRequest(BaseModel):
    kind: Literal["dc0", "dc", "balanced", "mfw-dc"]
    n_max: int = Field(ge=0, le=10_000)


class CountResponse(BaseModel):
    kind: str
    values: list[int]
    oeis: Optional[str] = None


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest) -> CountResponse:
    table = count_table(req.kind, req.n_max)
    return CountResponse(
        kind=table.kind, values=list(table.values), oeis=OEIS_IDS.get(table.kind)
    )


class RenderRequest(BaseModel):
    word: Word
    format: Literal["ascii", "svg"] = "ascii"
    segment: bool = False
    marks: list[Literal["S", "S'", "boundaries"]] = Field(default_factory=list)
    cell_size: int = Field(default=24, ge=1, le=256)


@app.post("/render")
def render_path(req: RenderRequest) -> Response:
    if req.format == "svg":
        svg = render_svg(req.word, req.segment, tuple(req.marks), req.cell_size)
        return Response(content=svg, media_type="image/svg+xml")
    text = render_ascii(req.word, req.segment, tuple(req.marks))
    return PlainTextResponse(content=text + "\n")
