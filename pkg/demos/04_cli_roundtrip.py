"""Build a problem in code, write it as a spec file and drive the command line on it.

    python3 demos/04_cli_roundtrip.py
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

problem = {
    "name": "two_odd_one_even",
    "group": {"orders": [2]},
    "bicharacter": {"root_order": 2, "exponents": [[1]]},
    "lie": {
        "basis": [{"name": "a", "degree": [1]}, {"name": "b", "degree": [1]}, {"name": "c", "degree": [0]}],
        "brackets": [{"left": "a", "right": "a", "value": {"c": "2"}}],
    },
    "modules": {"trivial": {"kind": "trivial"}},
}

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "problem.json"
    path.write_text(json.dumps(problem, indent=2))
    for cmd in (["validate"], ["koszul-check", "--n-max", "2", "--p-max", "2"], ["lie-cohomology", "--n-max", "2"]):
        print("$ colorhom", cmd[0], "problem.json", *cmd[1:])
        res = subprocess.run([sys.executable, "-m", "colorhom.cli", cmd[0], str(path), *cmd[1:], "--pretty"],
                             capture_output=True, text=True)
        print(res.stdout.rstrip())
        print(f"(exit {res.returncode})\n")
