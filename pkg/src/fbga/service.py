"""HTTP JSON API for the interactive explorer.

Sessions are in-memory with LRU eviction; every session carries a version
counter and mutations are compare-and-set, so concurrent edits cannot
interleave: exactly one of two racing mutations succeeds.
"""

from __future__ import annotations

import itertools
import threading
import uuid
from collections import OrderedDict

from fastapi import Body, FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware

from . import errors
from .fbg import BiserialFBG, check_si
from .fixtures import fixture_names, load_fixture
from .mutation import kauer_move
from .reduction import orbit_graph, reduced_form
from .ribbon import graph_isomorphic, parse_graph
from .walks import complete_sets, default_cap, enumerate_signed_walks, tilting_discrete

MAX_SESSIONS = 64


class Session:
    def __init__(self, sid, fbg: BiserialFBG):
        self.sid = sid
        self.fbg = fbg
        self.history = []  # (fbg, move description)
        self.version = 0
        self.lock = threading.Lock()


class SessionStore:
    def __init__(self, cap=MAX_SESSIONS):
        self.cap = cap
        self.sessions = OrderedDict()
        self.lock = threading.Lock()

    def create(self, fbg):
        sid = uuid.uuid4().hex[:12]
        with self.lock:
            self.sessions[sid] = Session(sid, fbg)
            self.sessions.move_to_end(sid)
            while len(self.sessions) > self.cap:
                self.sessions.popitem(last=False)
        return self.sessions[sid]

    def get(self, sid) -> Session:
        with self.lock:
            if sid not in self.sessions:
                raise HTTPException(status_code=404, detail="unknown session")
            self.sessions.move_to_end(sid)
            return self.sessions[sid]


def graph_payload(f: BiserialFBG):
    adm, witness = f.is_admissible()
    flag, reason, census = tilting_discrete(f)
    edges = []
    for e in f.graph.edges():
        orbit = f.edge_orbit_of(e)
        edges.append(
            {
                "id": e,
                "halves": list(f.graph.edge_halves(e)),
                "endpoints": list(f.graph.edge_endpoints(e)),
                "loop": f.graph.is_loop(e),
                "orbit": list(orbit),
                "case": f.classify_nu_orbit(orbit),
            }
        )
    matches = []
    for name in fixture_names():
        if name.endswith("2k"):
            continue
        try:
            other = load_fixture(name)
        except Exception:
            continue
        try:
            if graph_isomorphic(f.graph, other.graph, f.degree, other.degree):
                matches.append(f"fixtures:{name}")
        except errors.FbgaError:
            continue
    return {
        "graph": f.to_json(),
        "edges": edges,
        "invariants": f.invariant_report(),
        "nu_order": f.nu_order,
        "admissible": adm,
        "orbifold_witness": witness,
        "tilting_discrete": {"flag": flag, "reason": reason, "census": census.as_json()},
        "isomorphic_fixtures": matches,
    }


def summary(session: Session):
    payload = graph_payload(session.fbg)
    payload["session_id"] = session.sid
    payload["version"] = session.version
    payload["history_length"] = len(session.history)
    return payload


def create_app(cors=False, session_cap=MAX_SESSIONS):
    app = FastAPI(title="fbga explorer service")
    if cors:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )
    store = SessionStore(session_cap)

    def domain(exc):
        if isinstance(exc, errors.StructureViolation):
            detail = {"error": "structure", "violations": exc.violations}
        elif isinstance(exc, errors.SIViolation):
            detail = {
                "error": "si",
                "failures": [
                    {"half_edge": h, "lhs": a, "rhs": b} for h, a, b in exc.failures
                ],
            }
        else:
            detail = {"error": type(exc).__name__, "detail": str(exc)}
        return HTTPException(status_code=422, detail=detail)

    @app.post("/sessions")
    def create_session(body: dict = Body(...)):
        try:
            if "fixture" in body:
                fbg = load_fixture(body["fixture"])
            elif "graph" in body:
                graph, degree = parse_graph(body["graph"])
                if degree is None:
                    raise errors.MalformedInput("vertex degrees are required")
                fbg = check_si(graph, degree)
            else:
                raise HTTPException(status_code=400, detail="need 'fixture' or 'graph'")
        except KeyError as exc:
            raise HTTPException(status_code=400, detail=f"unknown fixture {exc}")
        except errors.MalformedInput as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except errors.FbgaError as exc:
            raise domain(exc)
        session = store.create(fbg)
        return {"session_id": session.sid, "summary": summary(session)}

    @app.get("/sessions/{sid}/graph")
    def get_graph(sid: str):
        return summary(store.get(sid))

    @app.get("/sessions/{sid}/orbits")
    def get_orbits(sid: str):
        session = store.get(sid)
        f = session.fbg
        out = []
        for orbit in f.edge_orbits:
            out.append(
                {
                    "edges": list(orbit),
                    "case": f.classify_nu_orbit(orbit),
                    "halves": sorted(
                        itertools.chain.from_iterable(
                            f.graph.edge_halves(e) for e in orbit
                        )
                    ),
                }
            )
        return {"orbits": out, "version": session.version}

    @app.post("/sessions/{sid}/mutate")
    def mutate(sid: str, body: dict = Body(...)):
        session = store.get(sid)
        direction = body.get("direction", "left")
        if direction not in ("left", "right"):
            raise HTTPException(status_code=400, detail="direction must be left or right")
        if "orbit" not in body:
            raise HTTPException(status_code=400, detail="need 'orbit': an edge id")
        with session.lock:
            expected = body.get("version", session.version)
            if expected != session.version:
                raise HTTPException(status_code=409, detail="version conflict")
            try:
                orbit = session.fbg.edge_orbit_of(body["orbit"])
                result = kauer_move(session.fbg, orbit, direction)
            except errors.FbgaError as exc:
                raise domain(exc)
            session.history.append((session.fbg, {"orbit": list(orbit), "direction": direction}))
            session.fbg = result.fbg
            session.version += 1
        payload = summary(session)
        payload["trace"] = result.trace
        payload["case"] = result.case
        payload["extended"] = result.extended
        return payload

    @app.post("/sessions/{sid}/undo")
    def undo(sid: str):
        session = store.get(sid)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=422, detail={"error": "nothing to undo"})
            fbg, _ = session.history.pop()
            session.fbg = fbg
            session.version += 1
        return summary(session)

    @app.get("/sessions/{sid}/reduced")
    def reduced(sid: str):
        session = store.get(sid)
        f = session.fbg
        og = orbit_graph(f)
        red = reduced_form(f)
        return {
            "admissible": red.admissible,
            "orbit_graph": og.graph.to_json(og.degree),
            "orbifold_edges": list(og.graph.fixed_set),
            "loops_above": {k: list(v) for k, v in og.loops_above.items()},
            "reduced_form": red.fbg.to_json(),
            "reduced_multiplicities": {
                v: str(red.fbg.multiplicity(v)) for v in red.graph.vertices
            },
            "version": session.version,
        }

    @app.get("/sessions/{sid}/walks")
    def walks(
        sid: str,
        max_len: int | None = Query(default=None),
        complete: bool = Query(default=False),
        max_count: int | None = Query(default=2000),
    ):
        session = store.get(sid)
        f = session.fbg
        cap = max_len or default_cap(f)
        if complete:
            result = complete_sets(f, cap, max_count)
            payload = result.counts()
            payload["complete_sets"] = [[w.as_json() for w in ws] for ws in result.sets]
        else:
            ws, truncated = enumerate_signed_walks(f, cap, max_count)
            payload = {
                "cap": cap,
                "truncated": truncated,
                "count": len(ws),
                "walks": [w.as_json() for w in ws],
            }
        payload["version"] = session.version
        return payload

    @app.get("/sessions/{sid}/tilt-discrete")
    def tilt(sid: str):
        session = store.get(sid)
        flag, reason, census = tilting_discrete(session.fbg)
        return {
            "tilting_discrete": flag,
            "reason": reason,
            "census": census.as_json(),
            "version": session.version,
        }

    return app
