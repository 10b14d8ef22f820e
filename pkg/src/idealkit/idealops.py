"""Ideal-level operations built on Groebner bases.

Membership, equality, colon, product, intersection, elimination, saturation,
ring-map kernels, Rees ideals, Krull dimension of the quotient, colength, and
the localization-at-origin predicate. The ambient regular local ring is
modeled by a polynomial ring: global identities are computed with Groebner
bases and local claims are decided through colon ideals and constant terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .groebner import buchberger, normal_form
from .orders import Block, DegRevLex
from .poly import Polynomial, Ring, monomial_divides


@dataclass
class LocalPredicateResult:
    """Outcome of a membership test in the localization at the origin.

    When the verdict is true, `witness` is a colon-basis element u with
    nonzero constant term and u*f in I: a unit at the origin certifying
    that f lies in the localized ideal.
    """

    verdict: bool
    witness: Polynomial | None = None

    def __bool__(self):
        return self.verdict


class Ideal:
    """An ideal given by generators, with cached reduced Groebner bases."""

    def __init__(self, ring: Ring, gens):
        self.ring = ring
        conv = []
        for g in gens:
            if isinstance(g, Polynomial):
                conv.append(ring.convert(g))
            else:
                conv.append(ring.const(g))
        self.gens = tuple(conv)
        self._gb_cache: dict = {}

    # -- basics -------------------------------------------------------------

    def nonzero_gens(self):
        return [g for g in self.gens if not g.is_zero()]

    def is_zero(self) -> bool:
        return not self.nonzero_gens()

    def groebner(self, order=None):
        """Reduced Groebner basis as a list; empty for the zero ideal."""
        key = self.ring.order if order is None else order
        if key not in self._gb_cache:
            self._gb_cache[key] = buchberger(self.gens, order=order) if not self.is_zero() else []
        return self._gb_cache[key]

    def _prime_cache(self, basis):
        """Install an externally computed reduced basis for the ring order."""
        self._gb_cache[self.ring.order] = basis

    def contains(self, f) -> bool:
        f = self.ring.convert(f)
        if f.is_zero():
            return True
        gb = self.groebner()
        if not gb:
            return False
        return normal_form(f, gb).is_zero()

    def membership_witness(self, f):
        """(quotients, basis) with f = sum q_i b_i, or None when f not in I."""
        f = self.ring.convert(f)
        gb = self.groebner()
        if not gb:
            return ([], []) if f.is_zero() else None
        r, qs = normal_form(f, gb, with_quotients=True)
        if not r.is_zero():
            return None
        return qs, gb

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            return False
        return self.groebner() == other.groebner()

    def __eq__(self, other):
        if isinstance(other, Ideal):
            return self.equals(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, tuple(self.groebner())))

    def is_proper(self) -> bool:
        gb = self.groebner()
        return not (gb and gb[0].degree() == 0)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise ValueError("ideal sum over mismatched rings")
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise ValueError("ideal product over mismatched rings")
        gens = [a * b for a in self.nonzero_gens() for b in other.nonzero_gens()]
        return Ideal(self.ring, gens)

    # -- colon / intersection / elimination ---------------------------------

    def intersect(self, other: "Ideal") -> "Ideal":
        """I cap J, by eliminating u from u*I + (1-u)*J."""
        if other.ring != self.ring:
            raise ValueError("intersection over mismatched rings")
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, [])
        ring = self.ring
        ext = Ring(
            ring.field,
            ("@u",) + ring.names,
            Block((DegRevLex(1), ring.order)),
        )
        u = ext.var(0)
        one_minus_u = ext.one - u
        ext_gens = [u * ext.convert(g) for g in self.nonzero_gens()]
        ext_gens += [one_minus_u * ext.convert(g) for g in other.nonzero_gens()]
        gb = buchberger(ext_gens)
        kept = []
        for g in gb:
            if all(e[0] == 0 for e in g.terms):
                kept.append(ring.poly({e[1:]: c for e, c in g.terms.items()}))
        result = Ideal(ring, kept)
        # the u-free slice of the reduced basis is itself a reduced basis
        # because the block order restricts to the ring's own order
        result._prime_cache(kept)
        return result

    def colon(self, f) -> "Ideal":
        """(I : f) = {g : g*f in I}, via intersection with (f)."""
        f = self.ring.convert(f)
        if f.is_zero():
            raise ValueError("colon by the zero polynomial")
        if self.is_zero():
            return Ideal(self.ring, [])
        inter = self.intersect(Ideal(self.ring, [f]))
        gens = [g.divexact(f) for g in inter.gens]
        return Ideal(self.ring, gens)

    def colon_ideal(self, other: "Ideal") -> "Ideal":
        """(I : J), the intersection of (I : g) over the generators of J."""
        gens = other.nonzero_gens()
        if not gens:
            raise ValueError("colon by the zero ideal")
        result = self.colon(gens[0])
        for g in gens[1:]:
            result = result.intersect(self.colon(g))
        return result

    def saturate(self, f) -> "Ideal":
        """(I : f^inf), iterating colon until it stabilizes."""
        current = self
        while True:
            nxt = current.colon(f)
            if nxt.equals(current):
                return current
            current = nxt

    def eliminate(self, names) -> "Ideal":
        """I cap k[remaining variables], as an ideal of the smaller ring."""
        names = [names] if isinstance(names, str) else list(names)
        drop = {self.ring.index(n) for n in names}
        keep = [i for i in range(self.ring.nvars) if i not in drop]
        if not keep:
            raise ValueError("cannot eliminate every variable")
        small = Ring(self.ring.field, [self.ring.names[i] for i in keep])
        if self.is_zero():
            return Ideal(small, [])
        ext = Ring(
            self.ring.field,
            tuple(self.ring.names[i] for i in sorted(drop)) + tuple(small.names),
            Block((DegRevLex(len(drop)), small.order)),
        )
        gb = buchberger([ext.convert(g) for g in self.nonzero_gens()])
        k = len(drop)
        kept = []
        for g in gb:
            if all(sum(e[:k]) == 0 for e in g.terms):
                kept.append(small.poly({e[k:]: c for e, c in g.terms.items()}))
        result = Ideal(small, kept)
        result._prime_cache(kept)
        return result

    # -- localization-at-origin predicate ------------------------------------

    def locally_contains_at_origin(self, f) -> LocalPredicateResult:
        """Whether f lies in I after localizing at the origin.

        True iff (I : f) contains a unit at the origin, i.e. some reduced
        basis element of the colon has nonzero constant term.
        """
        f = self.ring.convert(f)
        if f.is_zero():
            raise ValueError("local membership of the zero polynomial is trivial")
        colon = self.colon(f)
        for g in colon.groebner():
            if g.constant_term() != self.ring.field.zero:
                return LocalPredicateResult(True, g)
        return LocalPredicateResult(False, None)

    # -- numerical invariants -------------------------------------------------

    def krull_dim_quotient(self) -> int:
        """Krull dimension of R/I; -1 for the unit ideal.

        Computed combinatorially from the leading-term ideal: the dimension
        is the largest size of a variable subset that supports no leading
        monomial entirely.
        """
        gb = self.groebner()
        if not gb:
            return self.ring.nvars
        if gb[0].degree() == 0:
            return -1
        leads = [g.lead_monomial() for g in gb]
        n = self.ring.nvars
        for size in range(n, 0, -1):
            for subset in combinations(range(n), size):
                inside = set(subset)
                if not any(
                    all(i in inside for i, e in enumerate(lm) if e) for lm in leads
                ):
                    return size
        return 0

    def _pure_power_bounds(self):
        """Per-variable minimal pure-power exponent in LT(I), or None."""
        gb = self.groebner()
        leads = [g.lead_monomial() for g in gb]
        n = self.ring.nvars
        bounds: list = [None] * n
        for lm in leads:
            support = [i for i, e in enumerate(lm) if e]
            if len(support) == 1:
                i = support[0]
                if bounds[i] is None or lm[i] < bounds[i]:
                    bounds[i] = lm[i]
        return bounds, leads

    def standard_monomials(self):
        """Monomials outside LT(I), ascending; None when infinitely many."""
        gb = self.groebner()
        if not gb:
            return None
        if gb[0].degree() == 0:
            return []
        bounds, leads = self._pure_power_bounds()
        if any(b is None for b in bounds):
            return None
        out = []

        def scan(prefix, i):
            if i == len(bounds):
                exps = tuple(prefix)
                if not any(monomial_divides(lm, exps) for lm in leads):
                    out.append(exps)
                return
            for e in range(bounds[i]):
                scan(prefix + [e], i + 1)

        scan([], 0)
        key = self.ring.order.key
        out.sort(key=key)
        return [self.ring.monomial(e) for e in out]

    def colength(self):
        """Vector-space dimension of R/I over the base field; may be infinite."""
        std = self.standard_monomials()
        if std is None:
            return math.inf
        return len(std)

    def min_generators_at_origin(self) -> int:
        """Minimal generator count after localizing at the origin.

        This is dim_k I/mI with m the ideal of the variables, computed as
        the rank of the generators' normal forms modulo a basis of m*I.
        Requires a proper ideal.
        """
        gens = self.nonzero_gens()
        if not gens:
            return 0
        if not self.is_proper():
            raise ValueError("minimal generators at the origin need a proper ideal")
        ring = self.ring
        mi = [v * g for v in ring.gens() for g in gens]
        gb_mi = buchberger(mi)
        vectors = [dict(normal_form(g, gb_mi).terms) for g in gens]
        return _rank_of_sparse_vectors(vectors, ring.field)

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({inside})"


def _rank_of_sparse_vectors(vectors, field) -> int:
    """Rank over the field of vectors given as {coordinate: coefficient}."""
    pivots: dict = {}
    rank = 0
    for vec in vectors:
        v = dict(vec)
        while v:
            lead = max(v)
            if lead not in pivots:
                pivots[lead] = v
                rank += 1
                break
            pivot = pivots[lead]
            c = field.div(v[lead], pivot[lead])
            for k, pc in pivot.items():
                s = field.sub(v.get(k, field.zero), field.mul(c, pc))
                if s == field.zero:
                    v.pop(k, None)
                else:
                    v[k] = s
        # empty v: dependent vector, contributes nothing
    return rank


def kernel_of_map(images, target_names=None) -> Ideal:
    """Kernel of the ring map X_i -> images[i] from a fresh target ring.

    The images live in a common parameter ring k[params]; the result is an
    ideal of k[target_names]. Up to four images default to the names
    x, y, z, t; more get X1, X2, ...
    """
    images = list(images)
    if not images:
        raise ValueError("kernel of a map needs at least one image")
    pring = images[0].ring
    for p in images:
        if p.ring != pring:
            raise ValueError("images must share one parameter ring")
    n = len(images)
    if target_names is None:
        if n <= 4:
            target_names = ("x", "y", "z", "t")[:n]
        else:
            target_names = tuple(f"X{i+1}" for i in range(n))
    else:
        target_names = tuple(target_names)
        if len(target_names) != n:
            raise ValueError("need one target name per image")
    clash = set(target_names) & set(pring.names)
    if clash:
        raise ValueError(f"target names collide with parameters: {sorted(clash)}")
    target = Ring(pring.field, target_names)
    ext = Ring(
        pring.field,
        pring.names + target_names,
        Block((DegRevLex(pring.nvars), target.order)),
    )
    gens = [ext.var(pring.nvars + i) - ext.convert(images[i]) for i in range(n)]
    gb = buchberger(gens)
    k = pring.nvars
    kept = []
    for g in gb:
        if all(sum(e[:k]) == 0 for e in g.terms):
            kept.append(target.poly({e[k:]: c for e, c in g.terms.items()}))
    result = Ideal(target, kept)
    result._prime_cache(kept)
    return result


def rees_ring(ring: Ring, n: int) -> Ring:
    """R[T1..Tn] under a block order that weighs T-degree first."""
    tnames = tuple(f"T{i+1}" for i in range(n))
    clash = set(tnames) & set(ring.names)
    if clash:
        raise ValueError(f"Rees variables collide with ring names: {sorted(clash)}")
    return Ring(
        ring.field,
        tnames + ring.names,
        Block((DegRevLex(n), ring.order)),
    )


def rees_ideal(ideal: Ideal) -> Ideal:
    """Defining ideal of the Rees algebra R[It] on the chosen generators.

    Kernel of R[T1..Tn] -> R[It], T_i -> t*f_i, computed by eliminating an
    auxiliary variable. The result lives in `rees_ring` and is homogeneous
    in the T-variables (T-degree = t-power grading of the image).
    """
    ring = ideal.ring
    gens = ideal.nonzero_gens()
    n = len(gens)
    rring = rees_ring(ring, n)
    if n == 0:
        return Ideal(rring, [])
    ext = Ring(
        ring.field,
        ("@t",) + rring.names,
        Block((DegRevLex(1), rring.order)),
    )
    tau = ext.var(0)
    ext_gens = [
        ext.var(1 + i) - tau * ext.convert(gens[i]) for i in range(n)
    ]
    gb = buchberger(ext_gens)
    kept = []
    for g in gb:
        if all(e[0] == 0 for e in g.terms):
            kept.append(rring.poly({e[1:]: c for e, c in g.terms.items()}))
    result = Ideal(rring, kept)
    result._prime_cache(kept)
    return result


def linear_type_by_rees(ideal: Ideal) -> bool:
    """Whether the Rees ideal is generated by its T-degree-1 part."""
    rees = rees_ideal(ideal)
    basis = rees.groebner()
    if not basis:
        return True
    n = len(ideal.nonzero_gens())
    t_indices = range(n)
    linear_part = [g for g in basis if g.degree_in(t_indices) == 1]
    if not linear_part:
        return False
    linear_ideal = Ideal(rees.ring, linear_part)
    return all(linear_ideal.contains(g) for g in basis)
