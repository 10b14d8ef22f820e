"""Sparse multivariate polynomials over an exact field.

A monomial is an exponent tuple, a polynomial is a dict mapping exponent
tuples to nonzero coefficients, and a ring bundles the field, the variable
names and the monomial order. Polynomials are immutable by convention: all
arithmetic returns fresh objects and the term dict is never mutated after
construction.
"""

from __future__ import annotations

from fractions import Fraction

from .orders import DegRevLex


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b) -> bool:
    """True when a | b, i.e. every exponent of a is <= that of b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a, b):
    """Exponent vector of a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def monomial_deg(a) -> int:
    return sum(a)


class Ring:
    """A polynomial ring: field, ordered variable names, monomial order."""

    def __init__(self, field, names, order=None):
        self.field = field
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self.order = order if order is not None else DegRevLex(self.nvars)
        if self.order.nvars != self.nvars:
            raise ValueError("order arity does not match variable count")
        self._index = {n: i for i, n in enumerate(self.names)}
        self.zero = Polynomial(self, {})
        self.one = Polynomial(self, {(0,) * self.nvars: field.one})

    def index(self, name: str) -> int:
        return self._index[name]

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self._index[i]
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exps: self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def const(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == self.field.zero:
            return self.zero
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps, coeff=None) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent arity mismatch")
        c = self.field.one if coeff is None else self.field.coerce(coeff)
        if c == self.field.zero:
            return self.zero
        return Polynomial(self, {exps: c})

    def poly(self, terms: dict) -> "Polynomial":
        """Build a polynomial from {exponent tuple: coefficient}, dropping zeros."""
        clean = {}
        for exps, c in terms.items():
            c = self.field.coerce(c)
            if c != self.field.zero:
                clean[tuple(exps)] = c
        return Polynomial(self, clean)

    def change_order(self, order) -> "Ring":
        return Ring(self.field, self.names, order)

    def change_field(self, field) -> "Ring":
        return Ring(field, self.names, self.order)

    def convert(self, p: "Polynomial") -> "Polynomial":
        """Map a polynomial into this ring, matching variables by name.

        Every variable of the source ring must exist here; coefficients are
        coerced through this ring's field. Covers order changes, coefficient
        reduction mod p, and embeddings into rings with extra variables.
        """
        if p.ring is self:
            return p
        src = p.ring
        if src.names == self.names:
            positions = None
        else:
            positions = [self._index[n] for n in src.names]
        out = {}
        for exps, c in p.terms.items():
            if positions is None:
                e = exps
            else:
                buf = [0] * self.nvars
                for pos, v in zip(positions, exps):
                    buf[pos] = v
                e = tuple(buf)
            c = self.field.coerce(c)
            if c != self.field.zero:
                out[e] = c
        return Polynomial(self, out)

    def __call__(self, source: str) -> "Polynomial":
        from .parse import parse_poly

        return parse_poly(self, source)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and other.field == self.field
            and other.names == self.names
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"{self.field.name}[{', '.join(self.names)}; {self.order}]"


class Polynomial:
    """Immutable sparse polynomial; `terms` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_sorted", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._sorted = None
        self._hash = None

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, indices) -> int:
        """Max combined exponent over the given variable positions; -1 if zero."""
        if not self.terms:
            return -1
        return max(sum(e[i] for i in indices) for e in self.terms)

    def weighted_degree(self, weights):
        """Common weighted degree of all terms, or None if terms disagree."""
        degs = {sum(w * e for w, e in zip(weights, exps)) for exps in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def sorted_terms(self):
        """Terms as (exps, coeff) pairs, descending in the ring's order."""
        if self._sorted is None:
            key = self.ring.order.key
            self._sorted = sorted(
                self.terms.items(), key=lambda t: key(t[0]), reverse=True
            )
        return self._sorted

    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        return self.sorted_terms()[0][0]

    def lead_coeff(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead coefficient")
        return self.sorted_terms()[0][1]

    def lead_key(self):
        return self.ring.order.key(self.lead_monomial())

    # -- arithmetic --------------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("mixing polynomials from different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce_other(other)
        field = self.ring.field
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = field.add(out.get(exps, field.zero), c)
            if s == field.zero:
                out.pop(exps, None)
            else:
                out[exps] = s
        return Polynomial(self.ring, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce_other(other)
        field = self.ring.field
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = field.sub(out.get(exps, field.zero), c)
            if s == field.zero:
                out.pop(exps, None)
            else:
                out[exps] = s
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        return self.ring.const(other).__sub__(self)

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field.coerce(other)
            if c == self.ring.field.zero:
                return self.ring.zero
            mul = self.ring.field.mul
            return Polynomial(self.ring, {e: mul(v, c) for e, v in self.terms.items()})
        if other.ring != self.ring:
            raise ValueError("mixing polynomials from different rings")
        field = self.ring.field
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = field.add(out.get(e, field.zero), field.mul(ca, cb))
                if s == field.zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def term_mul(self, coeff, exps) -> "Polynomial":
        """Multiply by a single term coeff * x^exps."""
        field = self.ring.field
        if coeff == field.zero:
            return self.ring.zero
        out = {}
        for e, c in self.terms.items():
            out[tuple(x + y for x, y in zip(e, exps))] = field.mul(c, coeff)
        return Polynomial(self.ring, out)

    def divexact(self, d: "Polynomial") -> "Polynomial":
        """Quotient self / d when d divides exactly; raises otherwise."""
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.ring.field
        dl, dc = d.lead_monomial(), d.lead_coeff()
        work = dict(self.terms)
        quot: dict = {}
        key = self.ring.order.key
        while work:
            m = max(work, key=key)
            c = work[m]
            if not all(a >= b for a, b in zip(m, dl)):
                raise ArithmeticError("inexact polynomial division")
            t = tuple(a - b for a, b in zip(m, dl))
            q = field.div(c, dc)
            quot[t] = q
            for e, gc in d.terms.items():
                e2 = tuple(a + b for a, b in zip(e, t))
                s = field.sub(work.get(e2, field.zero), field.mul(q, gc))
                if s == field.zero:
                    work.pop(e2, None)
                else:
                    work[e2] = s
        return Polynomial(self.ring, quot)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.lead_coeff()
        if lc == self.ring.field.one:
            return self
        inv = self.ring.field.inv(lc)
        mul = self.ring.field.mul
        return Polynomial(self.ring, {e: mul(c, inv) for e, c in self.terms.items()})

    def substitute(self, images, target_ring: Ring) -> "Polynomial":
        """Evaluate at images[i] in place of variable i; images live in target_ring."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        result = target_ring.zero
        cache: dict = {}

        def power(i, n):
            if (i, n) not in cache:
                cache[(i, n)] = images[i] ** n
            return cache[(i, n)]

        for exps, c in self.terms.items():
            term = target_ring.const(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    # -- equality and printing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _mono_str(self, exps) -> str:
        parts = []
        for name, e in zip(self.ring.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        pieces = []
        for exps, c in self.sorted_terms():
            mono = self._mono_str(exps)
            cs = field.to_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono and cs == "1":
                body = mono
            elif mono:
                body = f"{cs}*{mono}"
            else:
                body = cs
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"<{self}>"
