"""HTTP service wrapping the core package.

The expensive state (a sieve, derived sequence prefixes) is built lazily and
kept in process memory, so one long-running server amortizes construction
across many queries.  Domain outcomes that are legitimate answers --
"no representation exists", "no pairing exists" -- travel in the response
body; HTTP errors are reserved for unusable requests.
"""

import math
import threading
import time

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel, Field

from . import additive, derivation, verification
from .bfile import BFileEntry, crosscheck
from .errors import (
    EmptyLevel,
    Infeasible,
    InvalidLimit,
    NoRepresentation,
    OracleTooLarge,
    OutOfRange,
    RkitError,
)
from .sequences import MonotoneCounter, PrimeSet, build_prime_set, window

API_VERSION = "0.1.0"


class ServiceState:
    """Grow-only sieve plus memoized derived sequences, lock-guarded."""

    def __init__(self):
        self._lock = threading.RLock()
        self._prime_set: PrimeSet | None = None
        self._sequences: dict[tuple[int, int], derivation.DerivedSequence] = {}

    def prime_set(self, limit: int) -> PrimeSet:
        with self._lock:
            if self._prime_set is None or self._prime_set.limit < limit:
                self._prime_set = build_prime_set(max(limit, 1000))
            return self._prime_set

    def sequence(self, level: int, limit: int) -> derivation.DerivedSequence:
        with self._lock:
            key = (level, limit)
            if key not in self._sequences:
                ps = self.prime_set(limit)
                self._sequences[key] = derivation.level_k_sequence(limit, level, prime_set=ps)
            return self._sequences[key]

    def level1_counter(self, complete_to: int) -> MonotoneCounter:
        seq = self.sequence(1, 2 * complete_to + 64)
        return seq.to_counter()


# -- request / response models ---------------------------------------------


class SieveRequest(BaseModel):
    limit: int = Field(ge=2, le=2_000_000_000)


class SieveResponse(BaseModel):
    limit: int
    prime_count: int
    elapsed_s: float


class ValueResponse(BaseModel):
    value: int


class SequenceRequest(BaseModel):
    level: int = Field(ge=1, le=8)
    limit: int = Field(ge=4, le=2_000_000_000)
    max_terms: int | None = Field(default=None, ge=1)


class SequenceResponse(BaseModel):
    level: int
    source_limit: int
    certified_count: int
    truncated: bool
    heuristic: bool
    elements: list[int]


class CRamanujanRequest(BaseModel):
    c_num: int = Field(ge=1)
    c_den: int = Field(ge=2)
    n: int = Field(ge=1)
    limit: int = Field(ge=4, le=100_000_000)


class CRamanujanResponse(BaseModel):
    c_num: int
    c_den: int
    n: int
    value: int


class RepresentRequest(BaseModel):
    n: int = Field(ge=1)


class RepresentResponse(BaseModel):
    n: int
    found: bool
    parts: list[int] | None = None
    reason: str | None = None


class UnrepresentableRequest(BaseModel):
    scan_limit: int = Field(ge=500, le=10_000_000)


class UnrepresentableResponse(BaseModel):
    scan_limit: int
    largest_unrepresentable: int


class PairingRequest(BaseModel):
    k: int = Field(ge=1)
    oracle: bool = False


class PairingResponse(BaseModel):
    k: int
    feasible: bool
    pairs: list[tuple[int, int]] | None = None
    sums: list[int] | None = None
    reason: str | None = None


class VerifyRequest(BaseModel):
    case: str
    x_max: int | None = Field(default=None, ge=2)
    n_max: int | None = Field(default=None, ge=1)
    full: bool = False
    c_num: int = Field(default=3, ge=1)
    c_den: int = Field(default=4, ge=2)
    eps_num: int = Field(default=1, ge=1)
    eps_den: int = Field(default=1, ge=1)
    n_levels: int = Field(default=12, ge=1, le=10_000)


class CrosscheckRequest(BaseModel):
    level: int = Field(ge=1, le=8)
    entries: list[tuple[int, int]]
    max_n: int | None = Field(default=None, ge=1)
    limit: int | None = Field(default=None, ge=4)


class RatioTrendRequest(BaseModel):
    n_max: int | None = Field(default=None, ge=2)
    limit: int = Field(default=2_000_000, ge=1000, le=100_000_000)


def create_app() -> FastAPI:
    app = FastAPI(title="rkit", version=API_VERSION)
    state = ServiceState()
    app.state.rkit = state

    def usage_error(exc: Exception) -> HTTPException:
        return HTTPException(status_code=422, detail=str(exc))

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": API_VERSION}

    @app.get("/cases")
    def cases() -> list[dict]:
        return [
            {
                "id": c.case_id,
                "description": c.description,
                "kind": c.kind,
                "threshold": c.stated_threshold,
                "desk_default": c.desk_default,
                "full_default": c.full_default,
            }
            for c in verification.CASES.values()
        ]

    @app.post("/sieve", response_model=SieveResponse)
    def sieve(req: SieveRequest) -> SieveResponse:
        t0 = time.time()
        try:
            ps = state.prime_set(req.limit)
        except InvalidLimit as exc:
            raise usage_error(exc)
        return SieveResponse(
            limit=req.limit, prime_count=ps.pi(req.limit), elapsed_s=time.time() - t0
        )

    @app.get("/pi", response_model=ValueResponse)
    def pi(x: float = Query(ge=0)) -> ValueResponse:
        ps = state.prime_set(max(int(math.ceil(x)), 2))
        return ValueResponse(value=ps.pi(x))

    @app.get("/nth-prime", response_model=ValueResponse)
    def nth_prime(n: int = Query(ge=1)) -> ValueResponse:
        est = 16 if n < 6 else int(n * (math.log(n) + math.log(math.log(n)))) + 16
        ps = state.prime_set(est)
        return ValueResponse(value=ps.nth_prime(n))

    @app.get("/window", response_model=ValueResponse)
    def window_count(level: int = Query(ge=0, le=8), x: int = Query(ge=0)) -> ValueResponse:
        if level == 0:
            ps = state.prime_set(max(x, 2))
            return ValueResponse(value=ps.pi(x) - ps.pi(x // 2))
        # level-k completeness halves per derivation step, so oversize by 2^level
        seq = state.sequence(level, max((x + 32) << level, 1000))
        return ValueResponse(value=window(seq.to_counter(), x))

    @app.post("/sequence", response_model=SequenceResponse)
    def sequence(req: SequenceRequest) -> SequenceResponse:
        try:
            seq = state.sequence(req.level, req.limit)
        except (EmptyLevel, OutOfRange, InvalidLimit) as exc:
            raise usage_error(exc)
        elements = seq.elements
        truncated = req.max_terms is not None and req.max_terms > len(elements)
        if req.max_terms is not None:
            elements = elements[: req.max_terms]
        return SequenceResponse(
            level=seq.level,
            source_limit=seq.source_limit,
            certified_count=min(seq.certified_count, len(elements)),
            truncated=truncated,
            heuristic=seq.heuristic,
            elements=[int(v) for v in elements],
        )

    @app.post("/c-ramanujan", response_model=CRamanujanResponse)
    def c_ram(req: CRamanujanRequest) -> CRamanujanResponse:
        try:
            query = derivation.CRamanujanQuery(req.c_num, req.c_den, req.n)
            ps = state.prime_set(req.limit)
            value = derivation.c_ramanujan(query, req.limit, prime_set=ps)
        except (ValueError, OutOfRange) as exc:
            raise usage_error(exc)
        return CRamanujanResponse(c_num=query.c_num, c_den=query.c_den, n=req.n, value=value)

    @app.get("/interval-count", response_model=ValueResponse)
    def interval_count(
        c_num: int = Query(ge=1), c_den: int = Query(ge=2), x: int = Query(ge=0)
    ) -> ValueResponse:
        try:
            ps = state.prime_set(max(x, 2))
            return ValueResponse(value=derivation.interval_prime_count(ps, c_num, c_den, x))
        except (ValueError, OutOfRange) as exc:
            raise usage_error(exc)

    @app.post("/represent", response_model=RepresentResponse)
    def represent(req: RepresentRequest) -> RepresentResponse:
        ram = state.level1_counter(max(req.n, 300))
        try:
            rep = additive.richert_represent(req.n, ram)
        except NoRepresentation as exc:
            return RepresentResponse(n=req.n, found=False, reason=str(exc))
        return RepresentResponse(n=req.n, found=True, parts=list(rep.parts))

    @app.post("/unrep", response_model=UnrepresentableResponse)
    def unrep(req: UnrepresentableRequest) -> UnrepresentableResponse:
        ram = state.level1_counter(req.scan_limit)
        value = additive.largest_unrepresentable(req.scan_limit, ram)
        return UnrepresentableResponse(scan_limit=req.scan_limit, largest_unrepresentable=value)

    @app.post("/pair", response_model=PairingResponse)
    def pair(req: PairingRequest) -> PairingResponse:
        ram = state.level1_counter(max(4 * req.k, 300))
        try:
            if req.oracle:
                pairing = additive.pairing_oracle(req.k, ram)
            else:
                pairing = additive.greenfield_pairing(req.k, ram)
        except Infeasible as exc:
            return PairingResponse(k=req.k, feasible=False, reason=str(exc))
        except OracleTooLarge as exc:
            raise usage_error(exc)
        return PairingResponse(k=req.k, feasible=True, pairs=pairing.pairs, sums=pairing.sums)

    @app.post("/verify")
    def verify(req: VerifyRequest) -> dict:
        try:
            report = verification.run_case(
                req.case,
                x_max=req.x_max,
                n_max=req.n_max,
                full=req.full,
                c_num=req.c_num,
                c_den=req.c_den,
                eps_num=req.eps_num,
                eps_den=req.eps_den,
                n_levels=req.n_levels,
            )
        except KeyError as exc:
            raise usage_error(exc)
        except (OutOfRange, InvalidLimit) as exc:
            raise usage_error(exc)
        return report.to_dict()

    @app.post("/crosscheck")
    def crosscheck_endpoint(req: CrosscheckRequest) -> dict:
        entries = [BFileEntry(i, v) for i, v in req.entries]
        want = req.max_n if req.max_n is not None else len(entries)
        limit = req.limit
        if limit is None:
            est = verification._est_nth_prime(max(3 * want * (3 ** (req.level - 1)), 64))
            limit = 4 * est
        try:
            seq = state.sequence(req.level, limit)
        except (EmptyLevel, OutOfRange) as exc:
            raise usage_error(exc)
        return crosscheck(seq, entries, req.max_n)

    @app.post("/ratio-trend")
    def ratio_trend(req: RatioTrendRequest) -> dict:
        ps = state.prime_set(req.limit)
        lv2 = state.sequence(2, req.limit)
        return verification.dyadic_ratio_trend(lv2.to_counter(), ps, req.n_max)

    @app.exception_handler(RkitError)
    def on_domain_error(request, exc: RkitError):  # pragma: no cover - safety net
        from fastapi.responses import JSONResponse

        return JSONResponse(status_code=422, content={"detail": str(exc)})

    return app


app = create_app()
