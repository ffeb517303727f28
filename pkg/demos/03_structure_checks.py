"""
Structure of Half(M(G, 2))
==========================

The analysis pipeline runs every structural check and returns a
report with counts and one verdict per claim.
"""

from loopsmith import analyze, preset
from loopsmith.io import dumps

report = analyze(preset("c4_semidirect_c3"), "c4_semidirect_c3")
print(report.to_text())

# each claim either holds, fails, or lies outside its hypotheses
for claim in report.verdict.claims[:8]:
    print(claim.claim, claim.status, claim.passed)

# the JSON form is canonical, so repeated runs give identical bytes
doc = report.to_json()
print(len(dumps(doc)), sorted(doc["counts"].items()))

# generalized dihedral groups only ever have trivial half-automorphisms
for name in ("s3", "dihedral(4)", "dihedral(5)"):
    c = analyze(preset(name), name).counts
    print(name, c["half"], c["nontrivial"])
