"""Exact polynomials and the local monomial order.

The ring holds named variables over exact rational coefficients.  The
single term order is anti-graded reverse lexicographic: the constant 1
is the greatest monomial, so a polynomial's leading term is its lowest
degree part.  That convention is what makes division behave like
division of power series at the origin.
"""

from detindex import GT, LOCAL_ORDER, RingContext, monomial_compare, parse_poly

ring = RingContext(("x", "y", "z", "u"))

f = parse_poly("(x+y)^2 - x^2 - 2*x*y", ring)
print("(x+y)^2 - x^2 - 2*x*y  simplifies to:", f.render())

g = parse_poly("1/2*x*y - 3*z^4 + 7", ring)
print("rational coefficients survive round trips:", g.render())
assert parse_poly(g.render(), ring) == g

# 1 beats x, and x beats x^2: lower degree is greater
print("compare(1, x):", monomial_compare((0, 0, 0, 0), (1, 0, 0, 0)) == GT)
print("compare(x, x^2):", monomial_compare((1, 0, 0, 0), (2, 0, 0, 0)) == GT)

h = parse_poly("x + x^2 + y^3", ring)
lead, _ = h.leading()
print("leading monomial of x + x^2 + y^3 is x:", lead == (1, 0, 0, 0))
print("its ecart (degree spread above the lead) is", h.ecart())

# derivatives are formal and exact
p = parse_poly("z*x - u*(y+u)", ring)
print("d/du of z*x - u*(y+u):", p.partial_derivative(3).render())
