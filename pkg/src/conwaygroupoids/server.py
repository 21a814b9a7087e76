"""HTTP JSON service backing the interactive puzzle explorer.

All game mathematics stays here: the client only renders states and posts
intents. Sessions are in-memory and exploratory; the math kernels (designs
and groupoids) are immutable and shared across sessions.

Endpoints:
  GET  /designs                     playable catalog
  POST /session {"design": label}   new session, returns id + state
  GET  /session/<id>                current state
  POST /session/<id>/move {"point": p}  apply [hole, p]; 409 if not collinear
  POST /session/<id>/undo           drop the last move
  GET  /session/<id>/preview?point=p    what-if state, no commit
"""

from __future__ import annotations

import json
import threading
import uuid
from functools import lru_cache
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from . import catalog
from .designs import collinearity_neighbors
from .groupoid import _hypergraph_moves
from .perms import Permutation

PLAYABLE = (
    "pg23",
    "boolean:2",
    "boolean:3",
    "boolean:4",
    "symplectic:2",
    "quadratic:2:0",
    "pairs:3",
    "pairs:4",
    "pairs:5",
)


@lru_cache(maxsize=32)
def _membership_group(label: str):
    return catalog.groupoid_for(label).hole_stabilizer


class PuzzleSession:
    """One player's walk: a design, the hole position and the move history."""

    def __init__(self, label: str):
        self.id = uuid.uuid4().hex[:12]
        self.label = label
        self.design = catalog.get_design(label)
        self.source = _hypergraph_moves(self.design)
        self.base = 0
        self.history: list[int] = []
        self.permutation = Permutation.identity(self.design.n)

    @property
    def hole(self) -> int:
        return self.permutation(self.base)

    def legal_moves(self) -> list[int]:
        return list(collinearity_neighbors(self.design)[self.hole])

    def state(self, preview_with: Permutation | None = None, extra_history=None) -> dict:
        perm = preview_with if preview_with is not None else self.permutation
        history = self.history if extra_history is None else extra_history
        hole = perm(self.base)
        is_home = hole == self.base
        in_stabilizer = None
        if is_home:
            in_stabilizer = _membership_group(self.label).contains(perm)
        return {
            "session": self.id,
            "design": self.label,
            "n": self.design.n,
            "blocks": [list(b) for b in self.design.blocks],
            "base_point": self.base,
            "hole": hole,
            "history": list(history),
            "permutation": perm.to_json(),
            "cycles": perm.cycle_string(),
            "legal_moves": list(collinearity_neighbors(self.design)[hole]),
            "is_home": is_home,
            "is_identity": perm.is_identity(),
            "in_hole_stabilizer": in_stabilizer,
        }

    def move_permutation(self, point: int) -> tuple[Permutation | None, str]:
        """The state permutation after moving the counter at `point` into
        the hole, or (None, reason) if the move is illegal.

        The math layer treats [a,a] as the identity, but as a puzzle move
        clicking the hole is illegal: there is no counter there to slide.
        """
        hole = self.hole
        if point == hole:
            return None, "point is the current hole"
        if point not in collinearity_neighbors(self.design)[hole]:
            return None, "not collinear with the hole"
        return self.permutation * self.source.move_perm(hole, point), ""

    def apply(self, point: int) -> str:
        """Empty string on success, else the reason the move is illegal."""
        after, reason = self.move_permutation(point)
        if after is None:
            return reason
        self.permutation = after
        self.history.append(point)
        return ""

    def undo(self) -> bool:
        if not self.history:
            return False
        self.history.pop()
        perm = Permutation.identity(self.design.n)
        at = self.base
        for point in self.history:
            perm = perm * self.source.move_perm(at, point)
            at = point
        self.permutation = perm
        return True


class PuzzleService:
    def __init__(self):
        self.sessions: dict[str, PuzzleSession] = {}
        self.lock = threading.Lock()

    def designs(self) -> list[dict]:
        out = []
        for label in PLAYABLE:
            h = catalog.get_design(label)
            out.append({"label": label, "n": h.n, "blocks": len(h.blocks)})
        return out

    def create(self, label: str) -> PuzzleSession:
        if label not in PLAYABLE:
            raise KeyError(label)
        session = PuzzleSession(label)
        with self.lock:
            self.sessions[session.id] = session
        return session

    def get(self, session_id: str) -> PuzzleSession | None:
        with self.lock:
            return self.sessions.get(session_id)


def make_handler(service: PuzzleService):
    class Handler(BaseHTTPRequestHandler):
        def _send(self, status: int, payload: dict) -> None:
            body = json.dumps(payload).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _read_json(self) -> dict:
            length = int(self.headers.get("Content-Length") or 0)
            if not length:
                return {}
            try:
                return json.loads(self.rfile.read(length))
            except json.JSONDecodeError:
                return {}

        def log_message(self, fmt, *args):  # keep test output quiet
            pass

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()

        def do_GET(self):
            url = urlparse(self.path)
            parts = [p for p in url.path.split("/") if p]
            if parts == ["designs"]:
                self._send(200, {"designs": service.designs()})
                return
            if len(parts) >= 2 and parts[0] == "session":
                session = service.get(parts[1])
                if session is None:
                    self._send(404, {"error": "unknown session"})
                    return
                if len(parts) == 2:
                    with service.lock:
                        self._send(200, session.state())
                    return
                if len(parts) == 3 and parts[2] == "preview":
                    query = parse_qs(url.query)
                    try:
                        point = int(query.get("point", [""])[0])
                    except ValueError:
                        self._send(400, {"error": "preview needs ?point=<int>"})
                        return
                    with service.lock:
                        if not 0 <= point < session.design.n:
                            self._send(400, {"error": "point out of range"})
                            return
                        after, reason = session.move_permutation(point)
                        if after is None:
                            self._send(
                                409,
                                {
                                    "error": "illegal move",
                                    "reason": reason,
                                    "hole": session.hole,
                                    "point": point,
                                },
                            )
                            return
                        self._send(
                            200,
                            session.state(
                                preview_with=after,
                                extra_history=session.history + [point],
                            ),
                        )
                    return
            self._send(404, {"error": "unknown path"})

        def do_POST(self):
            url = urlparse(self.path)
            parts = [p for p in url.path.split("/") if p]
            if parts == ["session"]:
                body = self._read_json()
                label = body.get("design", "pg23")
                try:
                    session = service.create(label)
                except KeyError:
                    self._send(404, {"error": f"unknown design {label!r}"})
                    return
                with service.lock:
                    self._send(201, session.state())
                return
            if len(parts) == 3 and parts[0] == "session":
                session = service.get(parts[1])
                if session is None:
                    self._send(404, {"error": "unknown session"})
                    return
                if parts[2] == "move":
                    body = self._read_json()
                    point = body.get("point")
                    with service.lock:
                        if not isinstance(point, int) or not 0 <= point < session.design.n:
                            self._send(400, {"error": "move needs a point index"})
                            return
                        reason = session.apply(point)
                        if reason:
                            self._send(
                                409,
                                {
                                    "error": "illegal move",
                                    "reason": reason,
                                    "hole": session.hole,
                                    "point": point,
                                },
                            )
                            return
                        self._send(200, session.state())
                    return
                if parts[2] == "undo":
                    with service.lock:
                        session.undo()
                        self._send(200, session.state())
                    return
            self._send(404, {"error": "unknown path"})

    return Handler


def make_server(host: str = "127.0.0.1", port: int = 8000) -> ThreadingHTTPServer:
    service = PuzzleService()
    return ThreadingHTTPServer((host, port), make_handler(service))


def serve(host: str = "127.0.0.1", port: int = 8000) -> None:
    server = make_server(host, port)
    bound = server.server_address[1]
    print(f"puzzle service on http://{host}:{bound}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
