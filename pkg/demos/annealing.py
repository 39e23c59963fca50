"""Searching for gain functions with a symmetric spectrum.

The spanning tree is fixed at gain 1, so every candidate is a different
assignment of fundamental cycle gains. A sparse graph (the bowtie with a
pendant) has one solution up to switching; a graph with a larger cycle
space has a continuum of them.
"""
import time

import numpy as np

from gainsym import AnnealConfig, anneal_search, distinct_solutions, fig3a, fig3b, random_gain_graph
from gainsym.cycles import cycle_gain, cycle_space_dimension

res = anneal_search(fig3a())
print("bowtie: objective %.2e" % res.objective)
for c, gain in res.basis_gains:
    print("  cycle", list(c), "gain", np.round(complex(gain), 6))
print("  classes in 20 runs:", len(distinct_solutions(fig3a(), runs=20)))

reps = distinct_solutions(fig3b(), runs=10)
print("two triangles and a square: %d distinct classes in 10 runs" % len(reps))
for r in reps[:4]:
    a, b, g = (complex(cycle_gain(r.gains, c)) for c in ([0, 1, 2], [3, 1, 2], [5, 3, 2, 4]))
    print(f"  Re alpha {a.real:+.4f}  Re beta {b.real:+.4f}  Re gamma {g.real:+.4f}")

# denser graphs need slower cooling: 76 free angles here
g = random_gain_graph(20, 0.5, rng=1, gains="ones")
t = time.perf_counter()
res = anneal_search(g, AnnealConfig(iterations=60000, cooling=0.9995, restarts=1))
print(f"G(20, 1/2) with cycle space dimension {cycle_space_dimension(g)}: "
      f"objective {res.objective:.1e} in {time.perf_counter() - t:.1f}s")
