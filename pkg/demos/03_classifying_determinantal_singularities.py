"""The determinantal data model: minors, strata, classification.

A germ of type (m, n, t) is cut out by the t x t minors of an m x n
matrix of polynomials vanishing at the origin.  The rank strata X_i
(matrix rank below i) are cut out by the i x i minors.  Whether a
generic deformation is smooth, and whether the germ can be isolated at
all, are pure inequalities in (m, n, t, N).
"""

from detindex import (
    DetSingularity,
    RingContext,
    chi_singular_stratum,
    classify,
    minors,
    parse_poly,
    stratum_ideal,
)

ring = RingContext(("x", "y", "z", "u"))
P = lambda s: parse_poly(s, ring)

surface = DetSingularity.create(
    ring,
    [[P("z"), P("y+u"), P("x")],
     [P("u"), P("x"), P("y")]],
    2,
)
print("defining 2x2 minors:", [p.render() for p in surface.defining_minors()])
print("rank-one stratum ideal:", [p.render() for p in stratum_ideal(surface, 1).generators])

cls = classify(surface)
print("type (2,3,2) in C^4: dim =", surface.dim, "| smoothable:", cls.smoothable,
      "| isolated:", cls.isolated, "| stratum dims:", cls.stratum_dims)

# the borderline case: N equals (m-t+2)(n-t+2), so an essential smoothing
# keeps finitely many rank-deficient points, counted by a colength
ring6 = RingContext(tuple("abcdef"))
generic = DetSingularity.create(
    ring6,
    [[ring6.variable(i) for i in range(3)], [ring6.variable(i) for i in range(3, 6)]],
    2,
)
cls6 = classify(generic)
print("generic (2,3,2) in C^6: smoothable:", cls6.smoothable, "| isolated:", cls6.isolated)
print("rank-deficient points on an essential smoothing:", chi_singular_stratum(generic))

squared = DetSingularity.create(
    ring6,
    [[ring6.variable(0), ring6.variable(1), ring6.variable(2)],
     [ring6.variable(3), ring6.variable(4), ring6.variable(5) ** 2]],
    2,
)
print("same with one entry squared:", chi_singular_stratum(squared))
