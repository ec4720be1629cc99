"""Search for empty-ply layouts of K_3 ... K_8 with the default budget.

K_8 has none, so its run is expected to end with budget_exhausted.  The
K_8 run takes a little over a minute.
"""
import time

from emptyply.constructions import abstract_family
from emptyply.plycore import is_empty_ply
from emptyply.search import SearchConfig, optimize_empty_ply

for n in range(3, 9):
    start = time.perf_counter()
    res = optimize_empty_ply(abstract_family("complete", n=n), SearchConfig(seed=0))
    verified = bool(is_empty_ply(res.drawing))
    print(f"K_{n}: {res.status:17s} penalty={res.penalty:.3g} restart={res.restart} "
          f"iterations={res.iterations} verified={verified} ({time.perf_counter() - start:.1f}s)")
