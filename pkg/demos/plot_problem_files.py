"""
Problem files and the command line
==================================

The ``circumcone`` command reads a JSON problem and writes a JSON report.
Here the same thing is done in-process through ``cli.run``.
"""

import json
import tempfile

from circumcone.cli import dumps_report, run

problem = {"kind": "polyhedron", "A": [[-1, 0], [0, -1], [1, 1]], "b": [0, 0, 1],
           "point": [0, 0]}
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(problem, fh)

code, report = run(["feasible", fh.name, "--perturb", "3", "--seed", "1"])
print("exit code", code)
print(dumps_report(report))
