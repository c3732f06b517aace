"""HTTP facade over the two algorithms, mirroring the online portal backend.

Single process, JSON only.  Sessions live in memory with a TTL; mutations on
one session are serialized by a per-session lock, and identical request
bodies always produce identical responses (no hidden randomness).

Environment:
    HFLGDM_TTL_SECONDS   session lifetime (default 86400)
    HFLGDM_CORS_ORIGIN   allowed browser origin (default "*")
    HFLGDM_MAX_N / HFLGDM_MAX_DMS   portal size limits (defaults 5 / 5)
    HFLGDM_USERNAME / HFLGDM_PASSWORD   optional shared credential pair
"""

import logging
import os
import secrets
import threading
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from fastapi import Depends, FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.security import HTTPBasic, HTTPBasicCredentials

from .consensus import GroupProblem, algorithm2
from .consistency import (
    ConsistencyParams,
    StopMode,
    algorithm1,
    critical_value,
)
from .errors import (
    HflprError,
    IterationCapExceeded,
    OutOfTable,
    ReciprocityViolation,
    UndefinedForN,
    ValidationError,
)
from .hflpr import Hflpr, hflpr_from_json_dict, hflpr_to_json_dict

logger = logging.getLogger("hflgdm.service")

TTL_SECONDS = float(os.environ.get("HFLGDM_TTL_SECONDS", 86400))
MAX_N = int(os.environ.get("HFLGDM_MAX_N", 5))
MAX_DMS = int(os.environ.get("HFLGDM_MAX_DMS", 5))


@dataclass
class Session:
    id: str
    n: int
    tau: int
    gamma: float
    params: dict
    created_at: float = field(default_factory=time.time)
    submitted: List[Hflpr] = field(default_factory=list)
    state: str = "collecting"
    result: Optional[dict] = None
    lock: threading.Lock = field(default_factory=threading.Lock)


_sessions: Dict[str, Session] = {}
_sessions_lock = threading.Lock()

app = FastAPI(title="hflgdm portal service")
app.add_middleware(
    CORSMiddleware,
    allow_origins=[os.environ.get("HFLGDM_CORS_ORIGIN", "*")],
    allow_methods=["*"],
    allow_headers=["*"],
)

_basic = HTTPBasic(auto_error=False)


def _authenticate(credentials: Optional[HTTPBasicCredentials] = Depends(_basic)):
    """Shared static credential pair; open access when unconfigured."""
    user = os.environ.get("HFLGDM_USERNAME")
    password = os.environ.get("HFLGDM_PASSWORD")
    if not user:
        return
    supplied_ok = (
        credentials is not None
        and secrets.compare_digest(credentials.username, user)
        and secrets.compare_digest(credentials.password, password or "")
    )
    if not supplied_ok:
        raise HTTPException(
            status_code=401,
            detail="authentication required",
            headers={"WWW-Authenticate": "Basic"},
        )


@app.middleware("http")
async def _log_requests(request: Request, call_next):
    start = time.time()
    response = await call_next(request)
    logger.info(
        "%s %s -> %d (%.1f ms)",
        request.method,
        request.url.path,
        response.status_code,
        1000 * (time.time() - start),
    )
    return response


def _validation_detail(exc: ValidationError) -> dict:
    detail = {"message": str(exc), "i": exc.i, "j": exc.j}
    if isinstance(exc, ReciprocityViolation):
        detail["rule"] = "HFLE(i,j)max + HFLE(j,i)min = s_{2tau}"
    return detail


def _parse_matrix(doc: dict) -> Hflpr:
    try:
        return hflpr_from_json_dict(doc)
    except ValidationError as exc:
        raise HTTPException(status_code=400, detail=_validation_detail(exc))
    except (HflprError, KeyError, TypeError, ValueError) as exc:
        raise HTTPException(status_code=400, detail={"message": str(exc)})


def _parse_params(doc: dict, n: int) -> ConsistencyParams:
    alpha = doc.get("alpha")
    if alpha is None:
        alpha = ConsistencyParams.default_alpha(n)
    threshold = doc.get("threshold")
    try:
        # generous default cap: rare extreme matrices converge slowly and a
        # portal user cannot retune parameters the way a library caller can
        params = ConsistencyParams(
            alpha=float(alpha),
            beta=float(doc.get("beta", 0.5)),
            threshold=float(threshold) if threshold is not None else 0.0,
            epsilon=float(doc.get("epsilon", 1e-4)),
            max_iterations=int(doc.get("max_iterations", 1000)),
            zeta=float(doc.get("zeta", 0.5)),
            stop_mode=StopMode.THRESHOLD
            if threshold is not None
            else StopMode.CONVERGENCE,
        )
        params.check_alpha(n)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail={"message": str(exc)})
    return params


@app.post("/api/consistency", dependencies=[Depends(_authenticate)])
def consistency_endpoint(body: dict):
    """Consistency checking and repair for one matrix."""
    matrix = _parse_matrix(body)
    if matrix.n < 3:
        raise HTTPException(
            status_code=400,
            detail={"message": f"the consistency index is undefined for n={matrix.n}"},
        )
    params = _parse_params(body, matrix.n)
    try:
        report = algorithm1(matrix, params)
    except UndefinedForN as exc:
        raise HTTPException(status_code=400, detail={"message": str(exc)})
    except IterationCapExceeded as exc:
        raise HTTPException(status_code=422, detail={"message": str(exc)})
    return {
        "input": hflpr_to_json_dict(matrix),
        "accepted": report.accepted,
        "iterations": report.iterations,
        "adjustments": report.adjustments,
        "hflgci": report.hflgci,
        "hflgci_trace": list(report.hflgci_trace),
        "optimal_slice": report.optimal_slice + 1,
        "priority": [round(w, 6) for w in report.priority],
        "revised": hflpr_to_json_dict(report.final_matrix),
        "message": (
            f"After adjusting the individual HFLPR {report.adjustments} times, "
            "the HFLPR with acceptable consistency can be obtained."
        ),
    }


def summary_string(matrix: Hflpr) -> str:
    """Portal "Person h information" digest.

    The first two numbers are the alternative count and the maximum term-set
    length; then the min and max subscript of every cell in row-major order.
    """
    digits = [str(matrix.n), str(matrix.max_cell_len())]
    for row in matrix.cells:
        for cell in row:
            digits.append(f"{cell.lower:g}")
            digits.append(f"{cell.upper:g}")
    return "".join(digits)


def _get_session(session_id: str) -> Session:
    _expire_sessions()
    session = _sessions.get(session_id)
    if session is None:
        raise HTTPException(status_code=404, detail={"message": "unknown session"})
    return session


def _expire_sessions():
    now = time.time()
    with _sessions_lock:
        dead = [k for k, s in _sessions.items() if now - s.created_at > TTL_SECONDS]
        for k in dead:
            del _sessions[k]


@app.post("/api/sessions", dependencies=[Depends(_authenticate)])
def create_session(body: dict):
    try:
        n = int(body["n"])
        tau = int(body.get("tau", 4))
        gamma = float(body.get("gamma", 0.9))
    except (KeyError, TypeError, ValueError) as exc:
        raise HTTPException(status_code=400, detail={"message": f"bad session spec: {exc}"})
    if not 3 <= n <= MAX_N:
        raise HTTPException(
            status_code=400,
            detail={"message": f"number of alternatives must be in [3, {MAX_N}]"},
        )
    if not 0.0 < gamma <= 1.0:
        raise HTTPException(status_code=400, detail={"message": "gamma must lie in (0, 1]"})
    params = {
        k: body[k]
        for k in ("alpha", "beta", "zeta", "threshold", "epsilon", "max_iterations")
        if k in body
    }
    session = Session(
        id=secrets.token_urlsafe(16), n=n, tau=tau, gamma=gamma, params=params
    )
    with _sessions_lock:
        _sessions[session.id] = session
    return {"id": session.id, "n": n, "tau": tau, "gamma": gamma}


@app.post("/api/sessions/{session_id}/hflpr", dependencies=[Depends(_authenticate)])
def submit_matrix(session_id: str, body: dict):
    session = _get_session(session_id)
    with session.lock:
        if session.state != "collecting":
            raise HTTPException(status_code=409, detail={"message": "session already solved"})
        if len(session.submitted) >= MAX_DMS:
            raise HTTPException(
                status_code=400,
                detail={"message": f"at most {MAX_DMS} decision makers per session"},
            )
        body.setdefault("tau", session.tau)
        matrix = _parse_matrix(body)
        if matrix.n != session.n or matrix.scale.tau != session.tau:
            raise HTTPException(
                status_code=400,
                detail={
                    "message": f"matrix must be {session.n} x {session.n} over tau={session.tau}"
                },
            )
        session.submitted.append(matrix)
        return {
            "person": len(session.submitted),
            "summary": summary_string(matrix),
        }


@app.post("/api/sessions/{session_id}/solve", dependencies=[Depends(_authenticate)])
def solve_session(session_id: str):
    session = _get_session(session_id)
    with session.lock:
        if len(session.submitted) < 2:
            raise HTTPException(
                status_code=409,
                detail={"message": "need at least 2 decision makers before solving"},
            )
        params = _parse_params(session.params, session.n)
        problem = GroupProblem(
            matrices=tuple(session.submitted),
            gamma=session.gamma,
            zeta_mod=params.zeta,
            consistency_params=params,
        )
        try:
            trace = algorithm2(problem)
        except IterationCapExceeded as exc:
            raise HTTPException(status_code=422, detail={"message": str(exc)})
        result = {
            "ranking_weights": [round(w, 6) for w in trace.final_priority],
            "ranking": [i + 1 for i in trace.ranking],
            "ranking_string": trace.ranking_string(),
            "rounds_to_consensus": trace.modification_rounds,
            "dm_weights": [round(w, 6) for w in trace.dm_weights],
            "collective": hflpr_to_json_dict(trace.collective),
            "consistency_iterations": [r.iterations for r in trace.consistency_reports],
            "message": (
                "Ranking weight:"
                + ",".join(f"{w:.4f}" for w in trace.final_priority)
                + f"\nThe numbers of iterations for this method to reach consensus is "
                f"{trace.modification_rounds}"
            ),
        }
        session.result = result
        session.state = "solved"
        return result


@app.get("/api/sessions/{session_id}", dependencies=[Depends(_authenticate)])
def get_session(session_id: str):
    session = _get_session(session_id)
    with session.lock:
        return {
            "id": session.id,
            "n": session.n,
            "tau": session.tau,
            "gamma": session.gamma,
            "state": session.state,
            "submitted": len(session.submitted),
            "summaries": [summary_string(m) for m in session.submitted],
            "result": session.result,
        }


@app.get("/api/critical-values", dependencies=[Depends(_authenticate)])
def critical_values_endpoint(n: int, offset: float = 0.0):
    try:
        value = critical_value(n, offset)
    except OutOfTable as exc:
        raise HTTPException(status_code=404, detail={"message": str(exc)})
    return {"n": n, "offset": offset, "alpha": (n - 1) / 2 + offset, "value": value}


def run(host: str = "127.0.0.1", port: int = 8000):
    import uvicorn

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    run(
        host=os.environ.get("HFLGDM_BIND", "127.0.0.1"),
        port=int(os.environ.get("HFLGDM_PORT", 8000)),
    )
