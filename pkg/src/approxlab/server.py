"""Local HTTP transport for the solve/trace/compare API.

Single-user teaching server: loopback only, no auth, no state between
requests.  Handlers call the same request cores as the CLI, so responses
equal file-mode outputs byte for byte.

Endpoints:
    GET  /problems
    POST /solve/{algorithm}     body = instance document
    POST /trace/{algorithm}     body = instance document
    POST /compare/{algorithm}   body = instance document
Optional query parameters: epsilon, root, force.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from . import api
from .errors import (
    ApproxLabError,
    BoundViolationError,
    CapExceededError,
    DisconnectedGraphError,
    InvalidInstanceError,
    MetricViolationError,
    UnknownAlgorithmError,
)
from .instances import parse_instance

_INPUT_ERRORS = (InvalidInstanceError, UnknownAlgorithmError)
_REFUSAL_ERRORS = (
    CapExceededError,
    MetricViolationError,
    DisconnectedGraphError,
    BoundViolationError,
)


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    def log_message(self, *args) -> None:  # keep test output quiet
        pass

    def _send_json(self, status: int, document: dict) -> None:
        body = json.dumps(document, separators=(",", ":")).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_error_doc(self, status: int, category: str, message: str) -> None:
        self._send_json(status, {"error": message, "category": category})

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        if urlparse(self.path).path == "/problems":
            self._send_json(200, api.problems_document())
        else:
            self._send_error_doc(404, "input", f"no such endpoint: {self.path}")

    def do_POST(self) -> None:
        parsed = urlparse(self.path)
        parts = parsed.path.strip("/").split("/")
        if len(parts) != 2 or parts[0] not in ("solve", "trace", "compare"):
            self._send_error_doc(404, "input", f"no such endpoint: {parsed.path}")
            return
        action, algorithm = parts

        try:
            length = int(self.headers.get("Content-Length", "0"))
            body = self.rfile.read(length).decode("utf-8")
            query = parse_qs(parsed.query)
            epsilon = float(query["epsilon"][0]) if "epsilon" in query else None
            root = int(query["root"][0]) if "root" in query else None
            force = query.get("force", ["false"])[0].lower() in ("1", "true", "yes")
            instance = parse_instance(body)
            options = {"epsilon": epsilon, "root": root, "force": force}
            if action == "solve":
                document = api.solve_document(algorithm, instance, **options)
            elif action == "trace":
                document = api.trace_document(algorithm, instance, **options)
            else:
                document = api.compare_document(algorithm, instance, **options)
        except _INPUT_ERRORS as exc:
            self._send_error_doc(400, "input", str(exc))
            return
        except _REFUSAL_ERRORS as exc:
            self._send_error_doc(422, "cap", str(exc))
            return
        except (ValueError, KeyError) as exc:
            self._send_error_doc(400, "input", str(exc))
            return
        except ApproxLabError as exc:
            self._send_error_doc(500, "internal", str(exc))
            return
        self._send_json(200, document)


def make_server(port: int, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    """Bind and return the server; raises OSError when the port is busy."""
    return ThreadingHTTPServer((host, port), _Handler)


def serve_forever(port: int, host: str = "127.0.0.1") -> None:
    with make_server(port, host) as server:
        server.serve_forever()
