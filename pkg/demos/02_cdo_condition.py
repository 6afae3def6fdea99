"""
Which sign systems satisfy the CDO condition?
=============================================

Dense edges at infinity are the places where the condition bites. Two
parallel lines meet at a point at infinity together with the line at
infinity; the monodromy there is (t1 t2)^2 = 1, so no sign system passes.
Adding a transversal line leaves exactly two passing systems.
"""

from arrcoh import ProjectiveClosure, SignLocalSystem, cdo_check, load_corpus
from itertools import product

corpus = load_corpus()

for name in ("triangle", "parallel_pair", "parallel_pair_transversal", "pencil_plus_line"):
    arr = corpus[name].arrangement
    pc = ProjectiveClosure(arr)
    print(f"{name}: {corpus[name].description}")
    for r in pc.dense_edges(at_infinity_only=False):
        labels = ",".join(f"H{i}" for i in r.labels)
        print(f"    dense edge {{{labels}}}  projective dim {r.projective_dim}  at infinity: {r.at_infinity}")
    passing = [s for s in product((1, -1), repeat=len(arr)) if cdo_check(arr, SignLocalSystem(s), pc)[0]]
    print(f"    {len(passing)} of {2 ** len(arr)} sign systems pass: {passing}")
