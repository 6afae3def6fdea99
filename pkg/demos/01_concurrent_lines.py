"""
Lines through the origin of the plane
=====================================

For d distinct lines through the origin and a sign local system whose
monodromies multiply to -1, the twisted cohomology is Z_2 in degree 1 and
Z_2^(d-1) in degree 2. We get it three ways: the closed formula, the central
(Hopf fibration) formula, and the Salvetti complex with Smith normal form.
"""

from arrcoh import (
    SignLocalSystem,
    betti_numbers,
    beta_sequence,
    dense_edges_at_infinity,
    intersection_poset,
    lemma_central_cohomology,
    load_corpus,
    oracle_cohomology,
    theorem_cohomology,
)

corpus = load_corpus()

for d in range(2, 7):
    arr = corpus[f"concurrent_{d}"].arrangement
    b = betti_numbers(intersection_poset(arr))
    ls = SignLocalSystem((-1,) + (1,) * (d - 1))

    # the only dense edge inside the line at infinity is that line itself
    dense = [sorted(r.edge.hyperplane_set) for r in dense_edges_at_infinity(arr, ls)]

    th = theorem_cohomology(arr, ls)
    lem = lemma_central_cohomology(arr, ls)
    orc = oracle_cohomology(arr, ls)
    print(f"d={d}  b={b}  beta={beta_sequence(b)}  dense at infinity={dense}")
    print(f"    theorem: {th}")
    print(f"    lemma:   {lem}")
    print(f"    oracle:  {orc}")
    assert th.same_groups(lem) and th.same_groups(orc)
