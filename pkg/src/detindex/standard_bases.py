"""Standard bases and colengths in the local ring at the origin.

Division (normal_form) is Mora's variant of polynomial division: the
reducer with the least écart is preferred, and whenever the écart of the
chosen reducer exceeds that of the partial remainder, the partial
remainder itself is kept as a future reducer.  This multiplies the input
by an (implicit) unit of the local ring but terminates on polynomial
input, which plain division under an anti-graded order does not.

Basis completion works on homogenized input: generators are made
homogeneous with one extra variable, a plain Buchberger loop runs under
the matched graded order (total degree first, then the local order on
the original variables), and the result is dehomogenized.  Setting the
extra variable to 1 in such a basis yields a standard basis for the
local order.  This route avoids the long écart-driven reduction chains
of a direct Mora completion, whose exact rational coefficients blow up
badly on dense input.  Critical pairs are processed smallest-lcm-degree
first; coprime leading terms are discarded in the ideal case (the
product criterion is not sound for submodules of free modules and is
skipped there), and the classical chain criterion prunes pairs dominated
by an already-treated element.

Both ideals in the ring and submodules of a free module O^r are handled
by one engine; module terms are keyed by (component, exponent tuple)
with position-over-term order, earlier components first.

Colength queries read the staircase off the leading terms: the quotient
is finite-dimensional exactly when every component sees a pure power of
every variable among the leading terms, and the dimension is the number
of standard monomials under the staircase.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from .rings import (
    LOCAL_ORDER,
    LocalOrder,
    Monomial,
    Poly,
    RingContext,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

INFINITE = float("inf")


@dataclass(frozen=True)
class Ideal:
    """Ideal of the local ring, given by generators (zero generators dropped)."""

    generators: Tuple[Poly, ...]

    def __init__(self, generators: Sequence[Poly]):
        gens = tuple(generators)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise ValueError("mixed ring contexts in ideal generators")
        object.__setattr__(self, "generators", tuple(g for g in gens if g))
        object.__setattr__(self, "_ring", ring)

    @property
    def ring(self) -> RingContext:
        return self._ring  # type: ignore[attr-defined]


@dataclass(frozen=True)
class FreeModuleElement:
    """Element of a free module O^r, as a vector of r polynomials."""

    rank: int
    components: Tuple[Poly, ...]

    def __init__(self, rank: int, components: Sequence[Poly]):
        if rank < 1:
            raise ValueError("rank must be positive")
        comps = tuple(components)
        if len(comps) != rank:
            raise ValueError("component count does not match rank")
        ring = comps[0].ring
        for c in comps:
            if c.ring != ring:
                raise ValueError("mixed ring contexts in module element")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "components", comps)

    @property
    def ring(self) -> RingContext:
        return self.components[0].ring

    def is_zero(self) -> bool:
        return all(not c for c in self.components)


@dataclass(frozen=True)
class StandardBasis:
    """Reduced local standard basis with its leading-term staircase.

    Elements are monic, pairwise reduced (no leading monomial divides
    another) and listed from greatest to least leading monomial, so the
    output is canonical for a given generating set.
    """

    ring: RingContext
    order: LocalOrder
    elements: Tuple[Poly, ...]
    staircase: Tuple[Monomial, ...]

    def normal_form(self, f: Poly) -> Poly:
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Poly) -> bool:
        return not self.normal_form(f)

    def colength(self):
        return _staircase_count([self.staircase], self.ring.nvars)


# ---------------------------------------------------------------------------
# internal vector representation: dict[(component, exponent tuple)] -> coeff

class _Vec:
    __slots__ = ("terms", "_lead", "_maxdeg")

    def __init__(self, terms: dict):
        self.terms = terms
        self._lead = None
        self._maxdeg = None

    def __bool__(self):
        return bool(self.terms)

    def lead(self, okey):
        # Greatest term: least (component, order key).
        if self._lead is None and self.terms:
            key = min(self.terms, key=lambda cm: (cm[0], okey(cm[1])))
            self._lead = (key, self.terms[key])
        return self._lead

    def maxdeg(self):
        if self._maxdeg is None:
            self._maxdeg = max(sum(m) for _, m in self.terms) if self.terms else 0
        return self._maxdeg

    def ecart(self, okey):
        if not self.terms:
            return 0
        return self.maxdeg() - sum(self.lead(okey)[0][1])


def _vec_from_components(components: Sequence[Poly]) -> _Vec:
    terms = {}
    for comp, poly in enumerate(components):
        for m, c in poly.terms.items():
            terms[(comp, m)] = c
    return _Vec(terms)


def _vec_to_element(vec: _Vec, rank: int, ring: RingContext) -> FreeModuleElement:
    buckets: List[dict] = [dict() for _ in range(rank)]
    for (comp, m), c in vec.terms.items():
        buckets[comp][m] = c
    return FreeModuleElement(rank, [Poly(ring, b) for b in buckets])


def _vec_scale(v: _Vec, coeff) -> _Vec:
    return _Vec({k: c * coeff for k, c in v.terms.items()})


def _vec_primitive(v: _Vec, okey) -> _Vec:
    """Scale by a nonzero constant to a canonical representative.

    Over the rationals: integer coefficients with content 1 and positive
    leading coefficient (keeps coefficient growth in check during long
    reduction chains).  Over a prime field: leading coefficient 1.
    """
    if not v.terms:
        return v
    lead_key, lead_coeff = v.lead(okey)
    if isinstance(lead_coeff, Fraction):
        den = 1
        for c in v.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in v.terms.values():
            num = gcd(num, c.numerator * (den // c.denominator))
        if lead_coeff < 0:
            num = -num
        scale = Fraction(den, num)
        if scale == 1:
            return v
    else:
        one = lead_coeff / lead_coeff
        if lead_coeff == one:
            return v
        scale = one / lead_coeff
    out = _Vec({k: c * scale for k, c in v.terms.items()})
    out._lead = (lead_key, lead_coeff * scale)
    out._maxdeg = v._maxdeg
    return out


def _reduce_step(h: _Vec, g: _Vec, okey) -> _Vec:
    """Cancel the lead of h against g: gc * h - hc * x^shift * g,
    followed by content normalization (fraction-free over Q)."""
    (hcomp, hmono), hc = h.lead(okey)
    (gcomp, gmono), gc = g.lead(okey)
    shift = mono_div(hmono, gmono)
    out = {k: c * gc for k, c in h.terms.items()}
    for (comp, m), c in g.terms.items():
        key = (comp, mono_mul(m, shift))
        delta = c * hc
        if key in out:
            s = out[key] - delta
            if s:
                out[key] = s
            else:
                del out[key]
        else:
            out[key] = -delta
    return _vec_primitive(_Vec(out), okey)


def _mora_normal_form(f: _Vec, reducers: Sequence[_Vec], okey) -> _Vec:
    """Weak normal form: u*f = sum q_i g_i + r for a unit u of the local
    ring (the remainder is returned up to a nonzero constant factor)."""
    T = list(reducers)
    h = f
    while h:
        (hcomp, hmono), hc = h.lead(okey)
        best = None
        best_key = None
        for idx, g in enumerate(T):
            glead = g.lead(okey)
            (gcomp, gmono), _ = glead
            if gcomp != hcomp or not mono_divides(gmono, hmono):
                continue
            # least écart first; ties go to the smaller leading monomial
            # (the larger order key), then first found.
            gk = okey(gmono)
            key = (g.ecart(okey), -gk[0], tuple(-x for x in gk[1]), idx)
            if best is None or key < best_key:
                best, best_key = g, key
        if best is None:
            return h
        if best.ecart(okey) > h.ecart(okey):
            T.append(h)
        h = _reduce_step(h, best, okey)
    return h


def _spair(gi: _Vec, gj: _Vec, okey) -> _Vec:
    (comp, mi), ci = gi.lead(okey)
    (_, mj), cj = gj.lead(okey)
    lcm = mono_lcm(mi, mj)
    si = mono_div(lcm, mi)
    out = {(c, mono_mul(m, si)): coeff * cj for (c, m), coeff in gi.terms.items()}
    sj = mono_div(lcm, mj)
    for (c, m), coeff in gj.terms.items():
        key = (c, mono_mul(m, sj))
        delta = coeff * ci
        if key in out:
            s = out[key] - delta
            if s:
                out[key] = s
            else:
                del out[key]
        else:
            out[key] = -delta
    return _vec_primitive(_Vec(out), okey)


def _hom_sort_key(mono: Monomial):
    """Graded order on homogenized monomials (extra variable in the last
    slot): higher total degree is greater; ties follow the local order on
    the original variables.  Smaller key means greater monomial."""
    return (-sum(mono), sum(mono[:-1]), mono[-2::-1])


def _homogenize(v: _Vec) -> _Vec:
    degree = v.maxdeg()
    return _Vec({(c, m + (degree - sum(m),)): coeff for (c, m), coeff in v.terms.items()})


def _dehomogenize(v: _Vec) -> _Vec:
    return _Vec({(c, m[:-1]): coeff for (c, m), coeff in v.terms.items()})


def _global_normal_form(f: _Vec, reducers: Sequence[_Vec], okey) -> _Vec:
    """Plain lead reduction under a well-ordering; terminates as is."""
    h = f
    while h:
        (hcomp, hmono), _ = h.lead(okey)
        best = None
        best_key = None
        for idx, g in enumerate(reducers):
            (gcomp, gmono), _ = g.lead(okey)
            if gcomp != hcomp or not mono_divides(gmono, hmono):
                continue
            key = (len(g.terms), okey(gmono), idx)
            if best is None or key < best_key:
                best, best_key = g, key
        if best is None:
            return h
        h = _reduce_step(h, best, okey)
    return h


def _buchberger(gens: Sequence[_Vec], rank: int, okey) -> List[_Vec]:
    """Buchberger completion under the given (well-)order key."""
    G: List[_Vec] = []
    for g in gens:
        if g:
            G.append(_vec_primitive(g, okey))

    def lead_of(i):
        return G[i].lead(okey)[0]

    pairs = set()
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if lead_of(i)[0] == lead_of(j)[0]:
                pairs.add((i, j))
    done = set()

    def pair_sort_key(pair):
        i, j = pair
        (comp, mi) = lead_of(i)
        mj = lead_of(j)[1]
        lcm = mono_lcm(mi, mj)
        return (sum(lcm), comp, okey(lcm), i, j)

    while pairs:
        i, j = min(pairs, key=pair_sort_key)
        pairs.discard((i, j))
        done.add((i, j))
        (comp, mi) = lead_of(i)
        mj = lead_of(j)[1]
        lcm = mono_lcm(mi, mj)
        if rank == 1 and lcm == mono_mul(mi, mj):
            continue  # product criterion; sound for ideals only
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            (kcomp, mk) = lead_of(k)
            if kcomp != comp or not mono_divides(mk, lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik in done and pjk in done:
                skip = True
                break
        if skip:
            continue
        h = _global_normal_form(_spair(G[i], G[j], okey), G, okey)
        if not h:
            continue
        G.append(h)
        new = len(G) - 1
        (ncomp, _) = lead_of(new)
        for k in range(new):
            if lead_of(k)[0] == ncomp:
                pairs.add((k, new))
    return G


def _complete_basis(gens: Sequence[_Vec], rank: int, okey) -> List[_Vec]:
    """Reduced standard basis via homogenization (see module docstring)."""
    hom = [_homogenize(v) for v in gens if v]
    basis = _buchberger(hom, rank, _hom_sort_key)
    return _minimalize([_dehomogenize(v) for v in basis], okey)


def _absorb_unit_factor(v: _Vec, okey) -> _Vec:
    """Replace unit * leading term by the leading term alone.

    Sound exactly when every tail term sits in the lead component and is
    divisible by the leading monomial: then v = (1 + q) * lead with q a
    non-unit, so the ideal (module) generated is unchanged.
    """
    (comp, mono), coeff = v.lead(okey)
    for (c, m) in v.terms:
        if c != comp or not mono_divides(mono, m):
            return v
    return _Vec({(comp, mono): coeff})


def _minimalize(G: List[_Vec], okey) -> List[_Vec]:
    kept: List[_Vec] = []
    kept_leads: List[Tuple[int, Monomial]] = []
    # A divisor has smaller or equal degree, so scan low degree first
    # within each component; ties resolved by the order key.
    by_degree = sorted(
        range(len(G)),
        key=lambda i: (
            G[i].lead(okey)[0][0],
            sum(G[i].lead(okey)[0][1]),
            okey(G[i].lead(okey)[0][1]),
        ),
    )
    for i in by_degree:
        comp, mono = G[i].lead(okey)[0]
        if any(c == comp and mono_divides(m, mono) for c, m in kept_leads):
            continue
        kept.append(_absorb_unit_factor(G[i], okey))
        kept_leads.append((comp, mono))
    kept.sort(key=lambda v: (v.lead(okey)[0][0], okey(v.lead(okey)[0][1])))
    # canonical presentation: leading coefficient 1
    return [_monic(v, okey) for v in kept]


def _monic(v: _Vec, okey) -> _Vec:
    lc = v.lead(okey)[1]
    one = lc / lc
    if lc == one:
        return v
    return _vec_scale(v, one / lc)


# ---------------------------------------------------------------------------
# public operations

def normal_form(f: Poly, basis: Iterable[Poly], order: LocalOrder = LOCAL_ORDER) -> Poly:
    """Mora remainder of f against the given polynomials.

    The result r satisfies u*f = sum q_i g_i + r for some unit u of the
    local ring, and no leading monomial of the basis divides the leading
    monomial of r.
    """
    if isinstance(basis, StandardBasis):
        basis = basis.elements
    reducers = [_vec_from_components([g]) for g in basis if g]
    out = _mora_normal_form(_vec_from_components([f]), reducers, order.sort_key)
    terms = {m: c for (_, m), c in out.terms.items()}
    return Poly(f.ring, terms)


def standard_basis(ideal: Ideal, order: LocalOrder = LOCAL_ORDER) -> StandardBasis:
    """Reduced standard basis of the ideal in the local ring."""
    okey = order.sort_key
    ring = ideal.ring
    gens = [_vec_from_components([g]) for g in ideal.generators]
    basis = _complete_basis(gens, 1, okey)
    elements = []
    staircase = []
    for v in basis:
        terms = {m: c for (_, m), c in v.terms.items()}
        poly = Poly(ring, terms)
        elements.append(poly)
        staircase.append(poly.leading_monomial(order))
    return StandardBasis(ring, order, tuple(elements), tuple(staircase))


def _staircase_count(lead_sets: Sequence[Sequence[Monomial]], nvars: int):
    """Count monomials outside the staircase, per component, summed."""
    total = 0
    for leads in lead_sets:
        caps = []
        for i in range(nvars):
            pure = [
                m[i]
                for m in leads
                if all(e == 0 for k, e in enumerate(m) if k != i)
            ]
            if not pure:
                return INFINITE
            caps.append(min(pure))
        for expt in iter_product(*(range(c) for c in caps)):
            if not any(mono_divides(m, expt) for m in leads):
                total += 1
    return total


def colength(ideal: Ideal, order: LocalOrder = LOCAL_ORDER):
    """Dimension of O_local / ideal over the coefficient field, or INFINITE."""
    basis = standard_basis(ideal, order)
    return _staircase_count([basis.staircase], ideal.ring.nvars)


def module_standard_basis(
    rank: int, gens: Sequence[FreeModuleElement], order: LocalOrder = LOCAL_ORDER
) -> List[FreeModuleElement]:
    """Standard basis of a submodule of O^r under position-over-term order."""
    for g in gens:
        if g.rank != rank:
            raise ValueError("module generators of mixed rank")
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return []
    ring = nonzero[0].ring
    vecs = [_vec_from_components(g.components) for g in nonzero]
    basis = _complete_basis(vecs, rank, order.sort_key)
    return [_vec_to_element(v, rank, ring) for v in basis]


def module_colength(
    rank: int, gens: Sequence[FreeModuleElement], order: LocalOrder = LOCAL_ORDER
):
    """Dimension of O^rank / <gens>, or INFINITE."""
    if rank < 1:
        raise ValueError("rank must be positive")
    for g in gens:
        if g.rank != rank:
            raise ValueError("module generators of mixed rank")
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return INFINITE
    ring = nonzero[0].ring
    okey = order.sort_key
    basis = _complete_basis(
        [_vec_from_components(g.components) for g in nonzero], rank, okey
    )
    per_component: List[List[Monomial]] = [[] for _ in range(rank)]
    for v in basis:
        (comp, mono) = v.lead(okey)[0]
        per_component[comp].append(mono)
    return _staircase_count(per_component, ring.nvars)
