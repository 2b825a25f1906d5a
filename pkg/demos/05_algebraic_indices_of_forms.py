"""Algebraic indices of a 1-form with an isolated zero on a germ.

Two colength-style invariants are computed for the running example, the
(2,3,2) surface in C^4 with the coordinate form du:

* the minors-algebra dimension: the defining minors plus the maximal
  minors of the gradients-with-form matrix (here 5);
* the dimension of top-degree differential forms modulo wedging with
  the form (here 6).

Both dominate the count of zeros a generic deformation of the form has
on a smoothing (3 for this example); the gap is real and neither
invariant determines the other.
"""

from detindex import (
    DetSingularity,
    OneForm,
    RingContext,
    algebra_index,
    gmvs_index,
    icis_index,
    omega_quotient_dim,
    parse_poly,
)

ring = RingContext(("x", "y", "z", "u"))
P = lambda s: parse_poly(s, ring)

surface = DetSingularity.create(
    ring,
    [[P("z"), P("y+u"), P("x")],
     [P("u"), P("x"), P("y")]],
    2,
)
du = OneForm.coordinate(ring, "u")

print("minors-algebra dimension:", algebra_index(surface, du))
print("top-form quotient dimension:", omega_quotient_dim(surface, du))
print("both are >= 3, the zero count on a smoothing")

# complete intersections: one-row matrices; both routes agree
r3 = RingContext(("x", "y", "z"))
Q = lambda s: parse_poly(s, r3)
quadric = Q("x^2 + y^2 + z^2")
dz = OneForm.coordinate(r3, "z")
print("quadric surface with dz:", icis_index([quadric], dz))
cone = DetSingularity.create(r3, [[quadric]], 1)
print("same through the top-form quotient:", omega_quotient_dim(cone, dz))

# space curves: type (m, m+1, m) in three variables
curve = DetSingularity.create(
    r3,
    [[Q("z"), Q("y"), Q("x")], [Q("0"), Q("x"), Q("y")]],
    2,
)
form = OneForm([Q("1"), Q("0"), Q("1")])
print("space-curve index of d(x+z):", gmvs_index(curve, form))
