"""
Witness documents from the command line
=======================================

Every result can be written as a JSON document with exact numbers, checked
again later from the file alone, and drawn as SVG.
"""

import json
import tempfile
from pathlib import Path

from gallai.cli import main

out = Path(tempfile.mkdtemp(prefix="gallai-demo-"))
doc = out / "family.json"

code = main(["family", "--set", "0,0;1,0;0,1", "--coloring", "(floor(x) + floor(y)) mod 2", "--k", "6", "--out", str(doc)])
print("family exit code:", code)

# Scalars are [p, q] or [[p, q], [p', q'], d]
obj = json.loads(doc.read_text())
print("first member:", obj["result"]["members"][0]["points"])

# verify recomputes everything from the document
main(["verify", str(doc), "--out", str(out / "checked.json")])
print("re-verified:", json.loads((out / "checked.json").read_text())["verification"]["ok"])

# Tampering is caught: overlap two members
obj["result"]["members"][1] = obj["result"]["members"][0]
bad = out / "tampered.json"
bad.write_text(json.dumps(obj))
print("tampered exit code:", main(["verify", str(bad), "--out", str(out / "bad-check.json")]))

main(["render", str(doc), "--out", str(out / "family.svg")])
print("figure written to", out / "family.svg")
