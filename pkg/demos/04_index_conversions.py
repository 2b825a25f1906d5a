"""Converting between the indices of a 1-form on a determinantal germ.

The topological inputs (radial indices and Euler characteristics of the
essential smoothings of the rank strata) are supplied by the user; all
the conversions between them are exact integer combinatorics: the
resolution-fiber Euler characteristics, a hyperplane-section count, and
an upper-triangular coefficient matrix with an integer inverse.
"""

from detindex import (
    StrataIndexData,
    chi_bar_hyperplane,
    chi_fiber,
    coeff_matrices,
    isolated_indices,
    ph_index,
    phn_from_radial,
    radial_from_phn,
)

m, n, t, N = 2, 3, 2, 6

mats = coeff_matrices(m, n, t)
print("conversion matrix:", mats.nmat, "inverse:", mats.mmat)
print("hyperplane-section reduced Euler characteristic:", chi_bar_hyperplane(m, n, t))
for k in (1, 2, 3):
    print("resolution %d fiber Euler characteristics per stratum:" % k,
          [chi_fiber(i, k, m, n, t) for i in (1, 2)])

# per-stratum data: the deepest smoothing keeps one rank-deficient point
radial = [1, 3]
chi = [1, 4]
data = StrataIndexData(m, n, t, N, tuple(radial), tuple(chi))
for k in (1, 2, 3):
    print("index on resolution %d:" % k, ph_index(data, k))

chibar = [c - 1 for c in chi]
phn = [phn_from_radial(radial[:j], chibar[:j], m, n, j, N) for j in (1, 2)]
print("Nash-bundle indices per stratum:", phn)
print("radial index recovered from them:", radial_from_phn(phn, m, n, t, N, chibar[-1]))

# the isolated non-smoothable case collapses to two-term formulas
ph1, phn_top = isolated_indices(m, n, t, N, radial[-1], chibar[-1], chi[0], 1)
print("reduced formulas (resolution 1):", ph1, "| Nash-bundle:", phn_top)
assert ph1 == ph_index(data, 1) and phn_top == phn[-1]
print("they agree with the stratified formulas on this data")
