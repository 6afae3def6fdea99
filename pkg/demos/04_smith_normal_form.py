"""
Smith normal form and cochain cohomology
========================================

The building block of the oracle: H = ker(d_out) / im(d_in) read off from
invariant factors. The twisted circle (monodromy -1) is the smallest case.
"""

from arrcoh import AbelianGroup, cohomology_of_pair, smith_normal_form

m = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
print("invariant factors:", smith_normal_form(m))

# circle with one 0-cell and one 1-cell; coboundary t - 1 = -2
h0 = cohomology_of_pair([], [[-2]], dim=1)
h1 = cohomology_of_pair([[-2]], [], dim=1)
print("twisted circle:", h0, "|", h1)
assert (h0, h1) == (AbelianGroup(), AbelianGroup(0, (2,)))
