"""Small HTTP facade over the strength meter.

Two endpoints: POST /assess rates one password, GET /health reports the
loaded weak lists. The service adds no scoring logic of its own and never
writes passwords to logs or disk. It speaks plaintext HTTP and is meant to
sit behind TLS when exposed anywhere real.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Sequence

from .corpus import CompositionPolicy, Corpus, load_wordlist
from .matcher import CorpusIndex
from .meter import assess, verdict_to_dict

MAX_PASSWORD_CHARS = 256


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    weak_paths: Sequence[str] = ()
    threshold: float = 0.5
    max_body_bytes: int = 64 * 1024
    cors_origin: str = "*"
    policy: CompositionPolicy | None = None


class MeterService:
    """Loaded weak lists plus the request-independent assessment state."""

    def __init__(self, weak_sets: Sequence[Corpus], threshold: float = 0.5,
                 policy: CompositionPolicy | None = None,
                 max_body_bytes: int = 64 * 1024, cors_origin: str = "*"):
        weak_sets = [c for c in weak_sets if c.entries]
        if not weak_sets:
            raise ValueError("no weak list loaded: the service needs at least one nonempty list")
        if not (0.0 <= threshold <= 1.0):
            raise ValueError(f"threshold must be in [0, 1], got {threshold}")
        self.weak_sets = weak_sets
        self.indexes = [CorpusIndex(c.entries) for c in weak_sets]
        self.threshold = threshold
        self.policy = policy
        self.max_body_bytes = max_body_bytes
        self.cors_origin = cors_origin

    def health(self) -> dict:
        return {
            "status": "ok",
            "weak_list_sizes": [len(c) for c in self.weak_sets],
            "threshold": self.threshold,
        }

    def assess_request(self, body: bytes) -> tuple[int, dict]:
        """Validate one /assess body and produce (status, payload)."""
        try:
            payload = json.loads(body.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            return 400, {"error": "body must be valid UTF-8 JSON"}
        if not isinstance(payload, dict):
            return 400, {"error": "body must be a JSON object"}
        password = payload.get("password")
        if not isinstance(password, str):
            return 400, {"error": "password must be a string"}
        if not password:
            return 400, {"error": "password must be nonempty"}
        if len(password) > MAX_PASSWORD_CHARS:
            return 400, {"error": f"password longer than {MAX_PASSWORD_CHARS} characters"}
        threshold = self.threshold
        if "threshold" in payload:
            raw = payload["threshold"]
            if not isinstance(raw, (int, float)) or isinstance(raw, bool):
                return 400, {"error": "threshold must be a number"}
            threshold = min(1.0, max(0.0, float(raw)))
        verdict = assess(password, self.weak_sets, threshold,
                         self.policy, indexes=self.indexes)
        return 200, verdict_to_dict(verdict)


class _Handler(BaseHTTPRequestHandler):
    service: MeterService  # set by create_server on the subclass

    # quiet by default; request lines and bodies are never logged
    def log_message(self, format: str, *args) -> None:
        pass

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", self.service.cors_origin)
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", self.service.cors_origin)
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        if self.path.split("?")[0] == "/health":
            self._send_json(200, self.service.health())
        else:
            self._send_json(404, {"error": "not found"})

    def do_POST(self) -> None:
        if self.path.split("?")[0] != "/assess":
            self._send_json(404, {"error": "not found"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            self._send_json(400, {"error": "bad Content-Length"})
            return
        if length > self.service.max_body_bytes:
            self._send_json(413, {"error": "request body too large"})
            return
        body = self.rfile.read(length)
        try:
            status, payload = self.service.assess_request(body)
        except Exception:
            # no request details in the response or anywhere else
            self._send_json(500, {"error": "internal error"})
            return
        self._send_json(status, payload)


def create_server(config: ServiceConfig,
                  weak_sets: Sequence[Corpus] | None = None) -> ThreadingHTTPServer:
    """Build a ready-to-serve HTTP server; weak lists load from config paths
    unless passed directly."""
    if weak_sets is None:
        weak_sets = [load_wordlist(p, label=p) for p in config.weak_paths]
    service = MeterService(
        weak_sets,
        threshold=config.threshold,
        policy=config.policy,
        max_body_bytes=config.max_body_bytes,
        cors_origin=config.cors_origin,
    )
    handler = type("BoundHandler", (_Handler,), {"service": service})
    server = ThreadingHTTPServer((config.host, config.port), handler)
    server.daemon_threads = True
    return server


def serve_forever(config: ServiceConfig) -> None:
    server = create_server(config)
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port} "
          f"(weak lists: {', '.join(config.weak_paths) or 'inline'})")
    try:
        server.serve_forever()
    finally:
        server.server_close()
