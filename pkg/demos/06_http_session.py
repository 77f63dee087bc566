#!/usr/bin/env python3
"""Drive the HTTP API the way the web UI does: judgments in, analysis out.

Starts `pcrank serve` on an OS-assigned port, enters three judgments one by
one (watching K and D react), asks for a suggestion, applies it, and shuts
the server down.
"""

import json
import re
import subprocess
import sys
import time
import urllib.request


def call(method, url, body=None):
    data = json.dumps(body).encode() if body is not None else None
    request = urllib.request.Request(url, data=data, method=method)
    request.add_header("Content-Type", "application/json")
    with urllib.request.urlopen(request, timeout=5) as response:
        return json.loads(response.read())


server = subprocess.Popen(
    [sys.executable, "-m", "pcrank.cli", "serve", "--port", "0"],
    stdout=subprocess.PIPE,
    stderr=subprocess.STDOUT,
    text=True,
)
try:
    announced = server.stdout.readline()
    port = int(re.search(r":(\d+)", announced).group(1))
    base = f"http://127.0.0.1:{port}/api"
    for _ in range(100):
        try:
            call("GET", f"{base}/health")
            break
        except OSError:
            time.sleep(0.1)
    print("server up at", base)

    session = call("POST", f"{base}/sessions",
                   {"n": 3, "labels": ["price", "quality", "service"]})
    sid = session["id"]
    print(f"session {sid[:8]}… starts consistent: K =",
          session["analysis"]["koczkodaj"])

    print("\nentering judgments:")
    for i, j, value in [(0, 1, 2), (0, 2, 2), (1, 2, 2)]:
        analysis = call("PUT", f"{base}/sessions/{sid}/judgments/{i}/{j}",
                        {"value": value})
        print(f"  ({i},{j}) <- {value}:  K = {analysis['koczkodaj']:.4f},  "
              f"D = {analysis['discrepancy']['global']:.5f}")

    suggestion = call("GET", f"{base}/sessions/{sid}/suggestion?theta=1.0")
    print(f"\nsuggestion: m[{suggestion['i']}][{suggestion['j']}] "
          f"{suggestion['oldValue']} -> {suggestion['newValue']} "
          f"(predicted K {suggestion['predictedK']})")

    analysis = call("POST", f"{base}/sessions/{sid}/suggestion/apply", {"theta": 1.0})
    print("after applying: K =", analysis["koczkodaj"],
          " ranking =", [round(v, 5) for v in analysis["ranking"]["values"]])

    history = call("GET", f"{base}/sessions/{sid}")["history"]
    print("\nhistory:", [h["type"] for h in history])
finally:
    server.terminate()
    server.wait(timeout=10)
    print("server stopped")
