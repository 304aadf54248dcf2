# The batch front-end: one JSON document in, one JSON report out.
#
# Writes a small fixture to a temporary file and drives every subcommand
# the way a verification pipeline would.

import json
import subprocess
import sys
import tempfile
from pathlib import Path

DOC = {
    "space": {"atoms": ["w1", "w2"], "probs": ["1/2", "1/2"]},
    "grid": ["0", "1"],
    "filtration": [[["w1", "w2"]], [["w1"], ["w2"]]],
    "sets": {
        "P": [["w1", 1], ["w2", 1]],
        "O": [["w1", 1]],
    },
    "times": {"tau": {"w1": 1, "w2": "inf"}},
}


def run(*argv):
    cmd = [sys.executable, "-m", "finsection", *argv]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    print("$ finsection", " ".join(argv))
    print(" ", proc.stdout.strip() or proc.stderr.strip(), f"(exit {proc.returncode})")
    return proc


with tempfile.TemporaryDirectory() as tmp:
    path = str(Path(tmp) / "doc.json")
    Path(path).write_text(json.dumps(DOC))

    run("theta", "1", "2")
    run("validate", path)
    run("section", "--kind", "predictable", "--set", "P", "--epsilon", "0/1", path)
    run("section", "--kind", "optional", "--set", "O", "--epsilon", "1/8", path)
    run("section", "--kind", "measurable", "--set", "O", path)
    run("classify-time", "--time", "tau", path)

    # a set that is not predictable trips the documented exit code 4
    run("section", "--kind", "predictable", "--set", "O", path)
