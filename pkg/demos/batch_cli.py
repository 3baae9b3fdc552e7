"""Driving the batch command line interface.

Writes a job description to a temporary file and runs the installed CLI on
it, once for human-readable text and once for JSON.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

TORUS_JOB = {
    "field": {"type": "Q"},
    "variables": ["x_1", "x_2", "x_3", "x_4"],
    "action": {
        "kind": "diagonal",
        "torusRank": 3,
        "cyclicOrders": [],
        "weights": [[5, -3, -1, 4], [-3, 1, 1, 5], [0, -4, 2, 6]],
    },
}

GROUP_JOB = {
    "field": {"type": "Q"},
    "variables": ["x_1", "x_2", "x_3", "x_4"],
    "action": {"kind": "finite", "generators": ["2314", "2143"]},
}


def run(argv):
    print("$", "python3 -m invtheory", *argv)
    out = subprocess.run([sys.executable, "-m", "invtheory", *argv],
                         capture_output=True, text=True, check=True)
    print(out.stdout)
    return out.stdout


def main():
    with tempfile.TemporaryDirectory() as tmp:
        torus = Path(tmp) / "torus.json"
        torus.write_text(json.dumps(TORUS_JOB))
        group = Path(tmp) / "a4.json"
        group.write_text(json.dumps(GROUP_JOB))

        run(["invariants", str(torus)])
        payload = json.loads(run(["invariants", str(group), "--output", "json"]))
        print("parsed payload keys:", sorted(payload))

        run(["molien", str(group)])
        run(["verify", str(group), "--max-degree", "4"])


if __name__ == "__main__":
    main()
