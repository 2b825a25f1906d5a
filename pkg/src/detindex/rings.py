"""Exact sparse multivariate polynomials with a local monomial ordering.

A polynomial is a map from exponent tuples to nonzero exact coefficients
(``fractions.Fraction`` by default, or elements of a prime field in the
optional modular mode).  The zero polynomial has an empty term map, so
equality of canonical forms is plain dict equality.

The single supported term order is anti-graded reverse lexicographic:
lower total degree wins, ties are broken reverse-lexicographically.  Under
this order the constant monomial 1 is the greatest monomial, which is what
makes division behave like division in the local ring at the origin.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Tuple

Monomial = Tuple[int, ...]

LT, EQ, GT = -1, 0, 1

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class ModP:
    """Element of the prime field Z/p, used only in the modular fast mode."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _check(self, other: "ModP") -> None:
        if not isinstance(other, ModP) or other.p != self.p:
            raise TypeError("mixed coefficient fields")

    def __add__(self, other):
        self._check(other)
        return ModP(self.value + other.value, self.p)

    def __sub__(self, other):
        self._check(other)
        return ModP(self.value - other.value, self.p)

    def __mul__(self, other):
        self._check(other)
        return ModP(self.value * other.value, self.p)

    def __truediv__(self, other):
        self._check(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModP(self.value * pow(other.value, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __eq__(self, other):
        return isinstance(other, ModP) and other.p == self.p and other.value == self.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "ModP(%d, %d)" % (self.value, self.p)


@dataclass(frozen=True)
class RingContext:
    """Ambient polynomial ring: ordered variable names plus coefficient field.

    ``characteristic`` is 0 for the rationals (the default and the only mode
    whose results are authoritative) or a prime p for the modular pre-check
    mode.
    """

    variables: Tuple[str, ...]
    characteristic: int = 0

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError("invalid variable name %r" % (name,))
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError("characteristic must be 0 or a prime")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def variable_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError("unknown variable name %r" % (name,)) from None

    def coeff(self, numerator: int, denominator: int = 1):
        if self.characteristic == 0:
            return Fraction(numerator, denominator)
        num = ModP(numerator, self.characteristic)
        if denominator == 1:
            return num
        return num / ModP(denominator, self.characteristic)

    def zero_poly(self) -> "Poly":
        return Poly(self, {})

    def one_poly(self) -> "Poly":
        return self.constant(1)

    def constant(self, value) -> "Poly":
        c = value if isinstance(value, (Fraction, ModP)) else self.coeff(value)
        if not c:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def variable(self, index) -> "Poly":
        if isinstance(index, str):
            index = self.variable_index(index)
        if not 0 <= index < self.nvars:
            raise IndexError("variable index out of range")
        expt = [0] * self.nvars
        expt[index] = 1
        return Poly(self, {tuple(expt): self.coeff(1)})


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def monomials_up_to(nvars: int, maxdeg: int) -> Iterator[Monomial]:
    """All exponent tuples of total degree <= maxdeg, degree by degree."""
    def rec(remaining: int, budget: int):
        if remaining == 1:
            yield (budget,)
            return
        for head in range(budget + 1):
            for tail in rec(remaining - 1, budget - head):
                yield (head,) + tail

    for deg in range(maxdeg + 1):
        yield from rec(nvars, deg)


@dataclass(frozen=True)
class LocalOrder:
    """Anti-graded reverse lexicographic order; 1 is the greatest monomial."""

    kind: str = "antigraded-revlex"

    @staticmethod
    def sort_key(mono: Monomial):
        # Smaller key means greater monomial, so ascending-key iteration
        # walks monomials from greatest to least.
        return (sum(mono), mono[::-1])

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.sort_key(a), self.sort_key(b)
        if ka == kb:
            return EQ
        return GT if ka < kb else LT


LOCAL_ORDER = LocalOrder()


def monomial_compare(a: Monomial, b: Monomial, order: LocalOrder = LOCAL_ORDER) -> int:
    """Three-way comparison under the local order: GT means a > b."""
    if len(a) != len(b):
        raise ValueError("monomials from different rings")
    return order.compare(a, b)


class Poly:
    """Immutable multivariate polynomial in canonical form (no zero terms)."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: RingContext, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # -- basic queries ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def total_degree(self) -> int:
        """Max total degree of a term; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            return 0
        return min(sum(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.coeff(0))

    def leading(self, order: LocalOrder = LOCAL_ORDER):
        """(monomial, coefficient) of the greatest term; None for zero."""
        if not self.terms:
            return None
        if self._lead is None:
            m = min(self.terms, key=order.sort_key)
            self._lead = (m, self.terms[m])
        return self._lead

    def leading_monomial(self, order: LocalOrder = LOCAL_ORDER) -> Monomial:
        lead = self.leading(order)
        if lead is None:
            raise ValueError("zero polynomial has no leading monomial")
        return lead[0]

    def ecart(self, order: LocalOrder = LOCAL_ORDER) -> int:
        """Total degree spread above the leading monomial; >= 0, 0 for zero."""
        if not self.terms:
            return 0
        return self.total_degree() - sum(self.leading(order)[0])

    # -- arithmetic ----------------------------------------------------------

    def _check_ring(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise ValueError("mixed ring contexts")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                s = out[m] + c
                if s:
                    out[m] = s
                else:
                    del out[m]
            else:
                out[m] = c
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        if not self.terms or not other.terms:
            return Poly(self.ring, {})
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                prod = ca * cb
                if m in out:
                    s = out[m] + prod
                    if s:
                        out[m] = s
                    else:
                        del out[m]
                else:
                    out[m] = prod
        return Poly(self.ring, out)

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one_poly()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, coeff) -> "Poly":
        if not coeff:
            return Poly(self.ring, {})
        return Poly(self.ring, {m: c * coeff for m, c in self.terms.items()})

    def mul_term(self, coeff, mono: Monomial) -> "Poly":
        if not coeff:
            return Poly(self.ring, {})
        return Poly(self.ring, {mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    def monic(self, order: LocalOrder = LOCAL_ORDER) -> "Poly":
        lead = self.leading(order)
        if lead is None:
            return self
        lc = lead[1]
        one = self.ring.coeff(1)
        if lc == one:
            return self
        return self.scale(one / lc)

    def partial_derivative(self, index: int) -> "Poly":
        if not 0 <= index < self.ring.nvars:
            raise IndexError("variable index out of range")
        out: dict = {}
        for m, c in self.terms.items():
            e = m[index]
            if e == 0:
                continue
            dm = list(m)
            dm[index] = e - 1
            dc = c * self.ring.coeff(e)
            key = tuple(dm)
            if key in out:
                s = out[key] + dc
                if s:
                    out[key] = s
                else:
                    del out[key]
            else:
                out[key] = dc
        return Poly(self.ring, out)

    # -- rendering -----------------------------------------------------------

    def _mono_str(self, mono: Monomial) -> str:
        parts = []
        for name, e in zip(self.ring.variables, mono):
            if e == 0:
                continue
            parts.append(name if e == 1 else "%s^%d" % (name, e))
        return "*".join(parts)

    def render(self, order: LocalOrder = LOCAL_ORDER) -> str:
        """Canonical text form: terms in decreasing order under the order."""
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=order.sort_key):
            c = self.terms[mono]
            if isinstance(c, Fraction) and c < 0:
                sign, mag = "-", -c
            else:
                sign, mag = "+", c
            mono_s = self._mono_str(mono)
            if isinstance(mag, Fraction):
                coeff_s = str(mag.numerator) if mag.denominator == 1 else "%d/%d" % (
                    mag.numerator,
                    mag.denominator,
                )
                is_one = mag == 1
            else:
                coeff_s = str(mag.value)
                is_one = mag.value == 1
            if not mono_s:
                body = coeff_s
            elif is_one:
                body = mono_s
            else:
                body = coeff_s + "*" + mono_s
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "Poly(%s)" % self.render()


def poly_add(f: Poly, g: Poly) -> Poly:
    return f + g


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def partial_derivative(f: Poly, index: int) -> Poly:
    return f.partial_derivative(index)


# ---------------------------------------------------------------------------
# parser

class PolyParseError(ValueError):
    """Syntax or name error in a polynomial expression, with position."""

    def __init__(self, message: str, position: int):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            stripped = src[pos:].lstrip()
            if not stripped:
                break
            raise PolyParseError(
                "unexpected character %r" % stripped[0], len(src) - len(stripped)
            )
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: RingContext):
        self.src = src
        self.ring = ring
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise PolyParseError("expected %r" % op, pos)
        return self.advance()

    def parse(self) -> Poly:
        poly = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise PolyParseError("unexpected trailing input", pos)
        return poly

    def expr(self) -> Poly:
        poly = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                poly = poly + rhs if value == "+" else poly - rhs
            else:
                return poly

    def term(self) -> Poly:
        poly = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self) -> Poly:
        negate = False
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                if value == "-":
                    negate = not negate
            else:
                break
        poly = self.atom()
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, pos = self.peek()
            if kind != "int":
                raise PolyParseError("exponent must be a nonnegative integer", pos)
            self.advance()
            poly = poly ** value
        return -poly if negate else poly

    def atom(self) -> Poly:
        kind, value, pos = self.advance()
        if kind == "int":
            nkind, nvalue, npos = self.peek()
            if nkind == "op" and nvalue == "/":
                self.advance()
                dkind, dvalue, dpos = self.peek()
                if dkind != "int":
                    raise PolyParseError("expected integer denominator", dpos)
                self.advance()
                if dvalue == 0:
                    raise PolyParseError("zero denominator", dpos)
                return self.ring.constant(self.ring.coeff(value, dvalue))
            return self.ring.constant(value)
        if kind == "name":
            try:
                return self.ring.variable(value)
            except KeyError:
                raise PolyParseError("unknown variable name %r" % value, pos) from None
        if kind == "op" and value == "(":
            poly = self.expr()
            self.expect_op(")")
            return poly
        raise PolyParseError("expected a number, variable, or parenthesis", pos)


def parse_poly(src: str, ring: RingContext) -> Poly:
    """Parse an expression over + - * ^, integer and a/b literals, and
    the ring's variables into a canonical Poly."""
    return _Parser(src, ring).parse()


def parse_polys(sources: Iterable[str], ring: RingContext) -> list:
    return [parse_poly(s, ring) for s in sources]
