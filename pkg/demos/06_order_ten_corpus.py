"""Run the main check over a graph6 corpus made by an external generator.

    python demos/06_order_ten_corpus.py tests/data/order10_sparse.g6
"""

import sys
import time

from matchcover.corpus import CorpusSource, ingest
from matchcover.harness import all_solitary_graphs, verify_main_theorem

path = sys.argv[1] if len(sys.argv) > 1 else "tests/data/order10_sparse.g6"

stream = ingest(CorpusSource.file(path, ["3-connected", "brick"]))
t0 = time.perf_counter()
bricks = list(stream)
print(stream.stage_counts, f"{time.perf_counter() - t0:.1f} s")

report = verify_main_theorem(CorpusSource.from_graphs(bricks, path))
print(report.verdict, report.counts)
print("all b-invariant edges solitary:", all_solitary_graphs(report))
