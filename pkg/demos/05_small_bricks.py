"""Every brick with at most 8 vertices: which are solid, and where the wheels sit."""

from matchcover.corpus import CorpusSource
from matchcover.harness import all_solitary_graphs, emit_report, verify_claim, verify_main_theorem

bricks = CorpusSource.builtin(8, filters=["brick"])

report = verify_main_theorem(bricks)  # a few seconds, mostly enumeration
print(emit_report(report))
print("all b-invariant edges solitary:", all_solitary_graphs(report))

for claim in ("lemma-solid-removable-b", "lemma-two-nonremovable", "lemma-two-nonsolitary"):
    r = verify_claim(claim, bricks.with_filters("solid"))
    print(f"{claim:26} {r.verdict}  checked={r.counts['checked']}")
