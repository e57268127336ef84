"""HTTP play service: a human robber against the Gyarfas cops.

Sessions live in memory with an idle TTL.  The cop response to a robber
action is computed synchronously inside the same request, so every reply
carries both half-turns.  The server is authoritative: every mutation goes
through the referee, and clients are handed the legal move set each turn.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .engine import (GameState, Transcript, apply_cop_turn, apply_robber_turn,
                     new_game, place_cops, place_robber, legal_robber_targets, Turn)
from .graph import Graph, GraphError, generate, is_connected, parse_graph, serialize_graph
from .gyarfas import (Confinement, GyarfasCopStrategy, V0Rule, confinement_check,
                      extract_long_hole)
from .structure import HoleCertificate


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, legal: list[int] | None = None):
        self.status = status
        self.code = code
        self.message = message
        self.legal = legal
        super().__init__(message)


class CreatePayload(BaseModel):
    graph: dict | None = None
    generator: dict | None = None
    t: int
    v0_rule: str = "first-vertex"
    analysis: bool = True


class RobberPayload(BaseModel):
    vertex: int


@dataclass
class Session:
    id: str
    graph: Graph
    t: int
    strategy: GyarfasCopStrategy
    game: GameState
    transcript: Transcript | None = None
    robber_placed: bool = False
    analysis_enabled: bool = True
    last_confinement: str | None = None
    certificate: HoleCertificate | None = None
    aborted: bool = False
    last_touch: float = field(default_factory=time.monotonic)
    _z: int | None = None

    @property
    def z(self) -> int:
        if self._z is None:
            from .structure import z_of_graph
            self._z = z_of_graph(self.graph)[0]
        return self._z

    @property
    def phase(self) -> str:
        if self.aborted:
            return "aborted"
        if self.game.captured:
            return "captured"
        if not self.robber_placed:
            return "robber_to_place"
        return "robber_to_move"

    def state_json(self) -> dict:
        g = self.game
        legal: list[int] = []
        if self.phase == "robber_to_place":
            legal = list(range(self.graph.n))
        elif self.phase == "robber_to_move":
            assert g.robber is not None
            legal = sorted(self.graph.closed_sets[g.robber])
        return {
            "id": self.id,
            "t": self.t,
            "k": self.strategy.k,
            "phase": self.phase,
            "cops": list(g.cops) if g.cops else [],
            "robber": g.robber,
            "cop_turns": g.cop_turns,
            "legal": legal,
            "outcome": {
                "captured": g.captured,
                "violation": self.certificate is not None,
                "certificate": self.certificate.to_json() if self.certificate else None,
            },
        }

    def analysis_json(self) -> dict:
        st = self.strategy.state
        return {
            "t": self.t,
            "v0": self.strategy.v0,
            "path": list(st.path),
            "component": sorted(st.component(self.graph)),
            "tip_stack": st.tip_stack,
            "cop_lo": st.cop_lo,
            "phase": st.phase,
            "confinement": self.last_confinement,
            "z": self.z,
            "n": self.graph.n,
        }


def create_app(ttl_seconds: float = 3600.0, transcript_dir: str | None = None,
               frontend_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="copsrobbers game service")
    sessions: dict[str, Session] = {}
    lock = threading.Lock()

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError) -> JSONResponse:
        body: dict = {"error": exc.code, "message": exc.message}
        if exc.legal is not None:
            body["legal"] = exc.legal
        return JSONResponse(status_code=exc.status, content=body)

    def purge() -> None:
        now = time.monotonic()
        stale = [sid for sid, s in sessions.items() if now - s.last_touch > ttl_seconds]
        for sid in stale:
            del sessions[sid]

    def get_session(sid: str) -> Session:
        purge()
        session = sessions.get(sid)
        if session is None:
            raise ApiError(404, "unknown_session", f"no session {sid!r}")
        session.last_touch = time.monotonic()
        return session

    def persist(session: Session) -> None:
        if transcript_dir is None or session.transcript is None:
            return
        path = Path(transcript_dir)
        path.mkdir(parents=True, exist_ok=True)
        (path / f"{session.id}.json").write_text(
            json.dumps(session.transcript.to_json(), indent=2) + "\n", encoding="utf-8")

    @app.get("/healthz")
    def healthz() -> dict:
        return {"ok": True}

    @app.post("/sessions", status_code=201)
    def create_session(payload: CreatePayload) -> dict:
        if payload.t < 4:
            raise ApiError(400, "bad_t", f"hole threshold t must be >= 4, got {payload.t}")
        if (payload.graph is None) == (payload.generator is None):
            raise ApiError(400, "bad_graph", "provide exactly one of 'graph' or 'generator'")
        try:
            if payload.graph is not None:
                G = parse_graph(json.dumps(payload.graph))
            else:
                spec = dict(payload.generator or {})
                G = generate(spec.get("kind", ""), spec.get("params", {}),
                             int(spec.get("seed", 0)))
        except GraphError as exc:
            raise ApiError(400, "bad_graph", str(exc))
        if not is_connected(G):
            raise ApiError(422, "disconnected", "pursuit needs a connected graph")
        try:
            rule = V0Rule(payload.v0_rule)
        except ValueError:
            raise ApiError(400, "bad_v0_rule",
                           f"v0_rule must be one of {[r.value for r in V0Rule]}")
        strategy = GyarfasCopStrategy(G, payload.t, rule)
        game = new_game(G, strategy.k)
        game = place_cops(game, strategy.place(G))
        sid = secrets.token_hex(8)
        with lock:
            purge()
            sessions[sid] = Session(sid, G, payload.t, strategy, game,
                                    analysis_enabled=payload.analysis)
            session = sessions[sid]
        doc = session.state_json()
        doc["graph"] = json.loads(serialize_graph(G))
        return doc

    @app.get("/sessions/{sid}")
    def get_state(sid: str) -> dict:
        with lock:
            session = get_session(sid)
            doc = session.state_json()
            doc["graph"] = json.loads(serialize_graph(session.graph))
            return doc

    @app.get("/sessions/{sid}/analysis")
    def get_analysis(sid: str) -> dict:
        with lock:
            session = get_session(sid)
            if not session.analysis_enabled:
                raise ApiError(409, "analysis_disabled",
                               "this session was created without analysis")
            return session.analysis_json()

    @app.delete("/sessions/{sid}")
    def delete_session(sid: str) -> dict:
        with lock:
            get_session(sid)
            del sessions[sid]
        return {"deleted": sid}

    @app.post("/sessions/{sid}/robber")
    def robber_action(sid: str, payload: RobberPayload) -> dict:
        with lock:
            session = get_session(sid)
            g = session.game
            if session.phase not in ("robber_to_place", "robber_to_move"):
                raise ApiError(409, "wrong_phase",
                               f"no robber action possible during {session.phase}")
            legal = legal_robber_targets(g)
            v = payload.vertex
            if v not in legal:
                raise ApiError(422, "illegal_vertex",
                               f"vertex {v} is not a legal robber target", legal=legal)
            G = session.graph
            if not session.robber_placed:
                g = place_robber(g, v)
                session.robber_placed = True
                assert g.cops is not None
                session.transcript = Transcript(G, session.strategy.k, g.cops, v)
                robber_from = v
            else:
                robber_from = g.robber
                assert robber_from is not None
                g = apply_robber_turn(g, v)
                assert session.transcript is not None
                session.transcript.turns.append({"side": "robber", "target": v})
            session.game = g
            cop_reply: list[int] | None = None
            if not g.captured:
                conf = confinement_check(G, session.strategy.state, robber_from, v)
                session.last_confinement = conf.value
                if conf is Confinement.VIOLATION:
                    session.certificate = extract_long_hole(
                        G, session.strategy.state, robber_from, v)
                    session.aborted = True
                    if session.transcript is not None:
                        session.transcript.aborted = "confinement-violation"
                else:
                    targets = session.strategy.respond(g)
                    g = apply_cop_turn(g, targets)
                    session.game = g
                    cop_reply = list(targets)
                    assert session.transcript is not None
                    session.transcript.turns.append({"side": "cops", "targets": cop_reply})
            else:
                session.last_confinement = "captured"
            if session.transcript is not None:
                session.transcript.captured = g.captured
                session.transcript.cop_turns = g.cop_turns
            doc = session.state_json()
            doc["robber_action"] = v
            doc["cop_reply"] = cop_reply
            doc["confinement"] = session.last_confinement
            if session.phase in ("captured", "aborted"):
                persist(session)
            return doc

    if frontend_dir is not None and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="frontend")

    return app
