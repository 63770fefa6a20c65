"""Validate fixtures and live CLI output against the JSON schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text())
           for p in (root / "schemas").glob("*.schema.json")}
fixtures = root / "fixtures"
failures = 0


def check(kind, doc, label):
    global failures
    validator = jsonschema.Draft202012Validator(schemas[kind])
    errors = list(validator.iter_errors(doc))
    for e in errors:
        print(f"FAIL {label}: {e.message} at {list(e.absolute_path)}")
    failures += bool(errors)
    if not errors:
        print(f"ok   {label}")


def run(*args):
    out = subprocess.run([cli, *args], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


for path in sorted(fixtures.glob("*.json")):
    check("game-document", json.loads(path.read_text()), path.name)

f = lambda name: str(fixtures / name)
check("robustness-report", run("margin", f("prisoner.json"), "-1,-1"), "margin prisoner")
check("robustness-report", run("margin", f("public-good-path3.json"), "1,0,1"), "margin public good")
check("robustness-report", run("margin", f("battle-3x2.json"), *[
    ",".join(map(str, e["profile"])) for e in run("nash", f("battle-3x2.json"))["equilibria"][:1]]),
    "margin normal-form")
check("fuzz-report", run("fuzz", f("prisoner.json"), "-1,-1", "--samples", "50", "--seed", "3"),
      "fuzz prisoner")
check("certificate-result", run("uniform-check", f("discoordination.json"), "--partition", "0",
                                "--y", "+1", "--mode", "brute-force"), "uniform-check brute force")
check("certificate-result", run("uniform-check", f("k3-coordination.json"), "--partition", "0,1",
                                "--y", "+1,+1"), "uniform-check sufficient")
check("certificate-result", run("coupling", f("clique-pendants.json"), "--partition", "0,1,2,3",
                                "--y", "+1,+1,+1,+1"), "coupling")
sys.exit(1 if failures else 0)
