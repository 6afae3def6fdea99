"""
The Salvetti complex as an independent check
============================================

Cells of the Salvetti complex are (chamber, face) pairs of the real
arrangement. Twisting the boundary by the sign local system and reducing
with Smith normal form gives the integral cohomology without any use of the
combinatorial formula. Here we compare both on every sign system of a few
arrangements, including sign systems where the formula is not asserted.
"""

from itertools import product

from arrcoh import ProjectiveClosure, SalvettiComplex, SignLocalSystem, cdo_check, load_corpus, theorem_cohomology
from arrcoh.arrangement import betti_numbers, intersection_poset

corpus = load_corpus()

for name in ("triangle", "generic_planes_4", "reflection_a3"):
    arr = corpus[name].arrangement
    sc = SalvettiComplex(arr)
    pc = ProjectiveClosure(arr)
    b = betti_numbers(intersection_poset(arr))
    print(f"{name}: cells per dimension {sc.cell_counts()}, Betti numbers {b}")
    inside, outside = 0, {}
    for s in product((1, -1), repeat=len(arr)):
        ls = SignLocalSystem(s)
        groups = sc.twisted(ls).cohomology()
        if cdo_check(arr, ls, pc)[0]:
            assert list(theorem_cohomology(arr, ls, closure=pc).groups) == groups
            inside += 1
        else:
            key = ", ".join(str(g) for g in groups)
            outside[key] = outside.get(key, 0) + 1
    print(f"    {inside} CDO sign systems, all matching the formula")
    for key, count in sorted(outside.items()):
        print(f"    outside CDO ({count}x): {key}")
