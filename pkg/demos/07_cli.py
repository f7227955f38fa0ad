"""
Command line
============

The ``loopcrystal`` command evaluates, applies and displays the same
objects through JSON, and runs the randomised verification suites.
"""

# %%
import json
import subprocess
import sys

point = {"n": 2, "m": 2, "factors": [["2", "3"], ["5", "7"]]}


def run(*args, request=None):
    res = subprocess.run([sys.executable, "-m", "loopcrystal", *args], input=request, capture_output=True, text=True)
    print("$ loopcrystal", " ".join(args))
    print(res.stdout.rstrip() or res.stderr.rstrip(), f"\n(exit {res.returncode})\n")


run("eval", "-", request=json.dumps({"kind": "energy", "point": point}))
run("apply", "-", request=json.dumps({"target": "point", "k": 1, "c": "2", "point": point}))
run("matrix", "-", "--rows", "1:2", "--cols", "1:4", request=json.dumps(point))

# %%
run("verify", "quotient", "--n", "2..3", "--m", "2", "--trials", "5")
run("limits", "--n", "2", "--curl", "0.5,0.7")
run("verify", "axioms", "--n", "1")
