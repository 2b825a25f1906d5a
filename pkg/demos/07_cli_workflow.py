"""The batch CLI: JSON manifests in, byte-stable JSON reports out.

Reports embed the normalized manifest, so a report can be fed back as
input and reproduces itself.  The --oracle flag re-derives every value
by truncated linear algebra and refuses to report success on a mismatch.
"""

import json
import os
import subprocess
import sys
import tempfile

HERE = os.path.dirname(os.path.abspath(__file__))
MANIFESTS = os.path.join(HERE, os.pardir, "manifests")


def run(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "detindex.cli", *argv],
        capture_output=True, text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


code, out, _ = run("check", os.path.join(MANIFESTS, "surface-232.json"))
print("check ->", json.loads(out)["result"])

code, out, _ = run("alg-index", os.path.join(MANIFESTS, "surface-232.json"), "--oracle")
report = json.loads(out)
print("alg-index ->", report["result"], "| oracle:", report["provenance"]["oracle"])

code, out, _ = run("tables", "--type", "2,3,2")
print("tables ->", json.loads(out)["result"]["nmat"])

with tempfile.TemporaryDirectory() as tmp:
    first = os.path.join(tmp, "report.json")
    second = os.path.join(tmp, "again.json")
    run("hom-index", os.path.join(MANIFESTS, "surface-232.json"), "--output", first)
    run("hom-index", first, "--output", second)
    with open(first, "rb") as a, open(second, "rb") as b:
        print("report round trip byte-stable:", a.read() == b.read())
