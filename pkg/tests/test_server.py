from __future__ import annotations

import json
import threading
import urllib.error
import urllib.request

import pytest

from approxlab import parse_instance, replay_trace
from approxlab.api import solve_document
from approxlab.server import make_server
from approxlab.trace import parse_trace

P3 = '{"kind":"graph","n":3,"edges":[[0,1,1],[1,2,1]]}'


@pytest.fixture(scope="module")
def base_url():
    server = make_server(0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()
    server.server_close()


def get(url: str):
    with urllib.request.urlopen(url) as resp:
        return resp.status, json.loads(resp.read())


def post(url: str, body: str):
    req = urllib.request.Request(url, data=body.encode(), method="POST")
    req.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read())


def test_problems_catalog_has_five_kinds(base_url):
    status, doc = get(f"{base_url}/problems")
    assert status == 200
    kinds = [p["kind"] for p in doc["problems"]]
    assert kinds == ["vertex_cover", "tsp", "subset_sum", "knapsack", "hamiltonian"]
    vc = doc["problems"][0]
    assert vc["algorithms"] == ["vertex-cover-approx", "vertex-cover-exact"]
    assert vc["instance_kind"] == "graph"


def test_solve_p3_over_http(base_url):
    status, doc = post(f"{base_url}/solve/vertex-cover-approx", P3)
    assert status == 200
    assert doc["value"] == 2
    assert doc["certificate"] == {"cover": [0, 1]}


def test_http_equals_file_mode(base_url):
    _, doc = post(f"{base_url}/solve/vertex-cover-approx", P3)
    assert doc == solve_document("vertex-cover-approx", parse_instance(P3))


def test_trace_endpoint_replays(base_url):
    status, doc = post(f"{base_url}/trace/vertex-cover-approx", P3)
    assert status == 200
    log = parse_trace(json.dumps(doc))
    assert replay_trace(log) == doc["outcome"]["certificate"]


def test_compare_endpoint(base_url):
    status, doc = post(f"{base_url}/compare/vertex-cover-approx", P3)
    assert status == 200
    assert doc["ratio"] == 2.0
    assert doc["within_bound"] is True
    assert doc["seed"] is None


def test_epsilon_via_query_parameter(base_url):
    body = '{"kind":"subset_sum","set":[104,102,201,101],"t":308}'
    status, doc = post(f"{base_url}/solve/subset-sum-fptas?epsilon=0.4", body)
    assert status == 200
    assert doc["value"] == 302


def test_invalid_instance_is_400(base_url):
    status, doc = post(f"{base_url}/solve/vertex-cover-approx", '{"kind":"graph"')
    assert status == 400
    assert doc["category"] == "input"


def test_unknown_algorithm_is_400(base_url):
    status, doc = post(f"{base_url}/solve/warp-drive", P3)
    assert status == 400
    assert "warp-drive" in doc["error"]


def test_cap_errors_are_422_with_message(base_url):
    n = 19
    cost = [[abs(i - j) for j in range(n)] for i in range(n)]
    body = json.dumps({"kind": "metric", "n": n, "cost": cost})
    status, doc = post(f"{base_url}/compare/tsp-approx", body)
    assert status == 422
    assert doc["category"] == "cap"
    assert "cap is 18" in doc["error"]


def test_unknown_endpoint_is_404(base_url):
    status, doc = post(f"{base_url}/mystery/thing", P3)
    assert status == 404


def test_port_busy_is_input_error(base_url):
    port = int(base_url.rsplit(":", 1)[1])
    from approxlab.cli import main

    assert main(["serve", "--port", str(port)]) == 2
