"""Certificate layer over the ideal engine.

Every public function returns a CertificateReport whose status is one of
`verified`, `refuted`, or `inconclusive` and whose witness payload is enough
to replay the verdict: membership quotients, colon bases, minor index sets,
and regular-sequence steps. Grade bounds are only ever certified through
explicit regular sequences; rank facts through explicit minors.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

from .idealops import Ideal
from .matrix import PolyMatrix, parallel_map
from .poly import Polynomial

VERIFIED = "verified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"

# materialization ceiling for minor ideals without index hints
MAX_MATERIALIZED_MINORS = 512


@dataclass
class CertificateReport:
    """Outcome of one certified claim, with a replayable witness."""

    claim: str
    status: str
    witness: dict = field(default_factory=dict)
    anchor: str = ""
    millis: int = 0

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status,
            "witness": self.witness,
            "anchor": self.anchor,
            "millis": self.millis,
        }


def _finish(report: CertificateReport, t0: float) -> CertificateReport:
    report.millis = int((time.perf_counter() - t0) * 1000)
    return report


@dataclass
class ComplexData:
    """A chain of differentials in application order, first map first.

    matrices[0] presents the quotient (its columns are the generators);
    consecutive products matrices[k] * matrices[k+1] must vanish. ranks are
    the expected Buchsbaum-Eisenbud ranks r_1 ... r_n.
    """

    matrices: tuple
    ranks: tuple

    def __post_init__(self):
        self.matrices = tuple(self.matrices)
        self.ranks = tuple(self.ranks)
        if len(self.matrices) != len(self.ranks):
            raise ValueError("one expected rank per differential")
        if not self.matrices:
            raise ValueError("empty complex")


@dataclass(frozen=True)
class MinorWitness:
    """Row/column selection locating a named minor, with its sign."""

    rows: tuple
    cols: tuple
    sign: int = 1


@dataclass
class MinorIdeal:
    """The ideal of all size x size minors of a matrix, kept symbolic."""

    matrix: PolyMatrix
    size: int

    @property
    def count(self) -> int:
        return comb(self.matrix.nrows, self.size) * comb(self.matrix.ncols, self.size)

    def materialize(self) -> Ideal:
        return Ideal(self.matrix.ring, self.matrix.maximal_minors()
                     if self.size == min(self.matrix.shape)
                     else list(self.matrix.minors(self.size).values()))


@dataclass
class GradeCertificate:
    """Witness data for a grade lower bound on a (minor) ideal.

    witnesses is a regular sequence inside the target; minor_hints locates
    each witness as a signed minor when the target is a minor ideal; aux and
    expected record a simplification check ideal(witnesses + aux) == expected.
    """

    bound: int
    witnesses: tuple
    minor_hints: tuple | None = None
    aux: Polynomial | None = None
    expected: Ideal | None = None


def _combine(statuses):
    if REFUTED in statuses:
        return REFUTED
    if INCONCLUSIVE in statuses:
        return INCONCLUSIVE
    return VERIFIED


def is_regular_sequence(seq, claim="regular_sequence", anchor="") -> CertificateReport:
    """Certify a regular sequence in the localization at the origin.

    Each step demands the global colon equality ((s_1..s_i) : s_{i+1}) =
    (s_1..s_i), which localizes. A colon element that is a unit at the
    origin refutes the step; a strict global inclusion inside the maximal
    ideal leaves the local statement undecided.
    """
    t0 = time.perf_counter()
    seq = list(seq)
    if not seq:
        raise ValueError("empty sequence")
    ring = seq[0].ring
    steps = []
    for i, s in enumerate(seq):
        if s.is_zero():
            return _finish(CertificateReport(
                claim, REFUTED,
                {"reason": "zero element", "index": i, "steps": steps},
                anchor), t0)
        if s.constant_term() != ring.field.zero:
            return _finish(CertificateReport(
                claim, REFUTED,
                {"reason": "unit at the origin", "index": i,
                 "element": str(s), "steps": steps},
                anchor), t0)
        prefix = Ideal(ring, seq[:i])
        col = prefix.colon(s)
        if col.equals(prefix):
            steps.append({"index": i, "colon_equals_prefix": True})
            continue
        for g in col.groebner():
            if g.constant_term() != ring.field.zero:
                return _finish(CertificateReport(
                    claim, REFUTED,
                    {"reason": "colon contains a unit at the origin",
                     "index": i, "element": str(g), "steps": steps},
                    anchor), t0)
        return _finish(CertificateReport(
            claim, INCONCLUSIVE,
            {"reason": "global colon grows but stays inside the maximal ideal",
             "index": i, "steps": steps},
            anchor), t0)
    return _finish(CertificateReport(
        claim, VERIFIED, {"length": len(seq), "steps": steps}, anchor), t0)


def _witness_membership(target, w, hint):
    """Check one grade witness lies in the target; returns (status, info)."""
    if hint is not None:
        if not isinstance(target, MinorIdeal):
            return INCONCLUSIVE, {"reason": "minor hint without a minor ideal"}
        value = target.matrix.minor(hint.rows, hint.cols)
        expected = w if hint.sign >= 0 else -w
        if value == expected:
            return VERIFIED, {
                "minor_rows": list(hint.rows),
                "minor_cols": list(hint.cols),
                "sign": hint.sign,
            }
        return REFUTED, {
            "reason": "minor does not match witness",
            "minor_rows": list(hint.rows),
            "minor_cols": list(hint.cols),
        }
    if isinstance(target, MinorIdeal):
        if target.count > MAX_MATERIALIZED_MINORS:
            return INCONCLUSIVE, {
                "reason": "minor ideal too large to materialize without a hint",
                "count": target.count,
            }
        target = target.materialize()
    if target.contains(w):
        return VERIFIED, {"membership": "normal form vanishes"}
    return REFUTED, {"reason": "witness not in target ideal"}


def grade_at_least(target, k: int, cert: GradeCertificate,
                   claim="grade_at_least", anchor="") -> CertificateReport:
    """Certify grade(target) >= k through cert's explicit regular sequence."""
    t0 = time.perf_counter()
    if cert.bound != k:
        raise ValueError("certificate bound does not match the claim")
    witnesses = list(cert.witnesses)
    if len(witnesses) < k:
        return _finish(CertificateReport(
            claim, INCONCLUSIVE,
            {"reason": f"need at least {k} witnesses, got {len(witnesses)}"},
            anchor), t0)
    hints = list(cert.minor_hints) if cert.minor_hints is not None else [None] * len(witnesses)
    member_info = []
    for w, hint in zip(witnesses, hints):
        status, info = _witness_membership(target, w, hint)
        member_info.append(info)
        if status != VERIFIED:
            return _finish(CertificateReport(
                claim, status, {"membership": member_info}, anchor), t0)
    reg = is_regular_sequence(witnesses)
    if reg.status != VERIFIED:
        return _finish(CertificateReport(
            claim, reg.status,
            {"membership": member_info, "regular_sequence": reg.witness},
            anchor), t0)
    witness = {"membership": member_info, "regular_sequence": reg.witness}
    if cert.expected is not None:
        ring = witnesses[0].ring
        gens = witnesses + ([cert.aux] if cert.aux is not None else [])
        simplified = Ideal(ring, gens)
        if not simplified.equals(cert.expected):
            return _finish(CertificateReport(
                claim, REFUTED,
                {**witness, "simplification": "ideal mismatch"},
                anchor), t0)
        witness["simplification"] = {
            "ideal": [str(g) for g in simplified.groebner()],
        }
    return _finish(CertificateReport(claim, VERIFIED, witness, anchor), t0)


def verify_complex(cd: ComplexData, claim="complex", anchor="") -> CertificateReport:
    """Check that consecutive differentials compose to zero."""
    t0 = time.perf_counter()
    mats = cd.matrices
    products = []
    for k in range(len(mats) - 1):
        a, b = mats[k], mats[k + 1]
        if a.ncols != b.nrows:
            return _finish(CertificateReport(
                claim, INCONCLUSIVE,
                {"reason": "dimension mismatch",
                 "position": k + 1,
                 "shapes": [list(a.shape), list(b.shape)]},
                anchor), t0)
        if not a.mul(b).is_zero():
            return _finish(CertificateReport(
                claim, REFUTED,
                {"reason": "nonzero composite", "position": k + 1},
                anchor), t0)
        products.append(f"M{k+1}*M{k+2} = 0")
    return _finish(CertificateReport(
        claim, VERIFIED, {"products": products}, anchor), t0)


def _find_nonzero_minor(matrix: PolyMatrix, size: int, hints):
    """First nonzero size x size minor, trying hinted index sets first."""
    tried = []
    for hint in hints or []:
        if len(hint.rows) == size and len(hint.cols) == size:
            value = matrix.minor(hint.rows, hint.cols)
            if not value.is_zero():
                return hint.rows, hint.cols
            tried.append((hint.rows, hint.cols))
    for rows in combinations(range(matrix.nrows), size):
        for cols in combinations(range(matrix.ncols), size):
            if (rows, cols) in tried:
                continue
            if not matrix.minor(rows, cols).is_zero():
                return rows, cols
    return None


def _all_minors_vanish(matrix: PolyMatrix, size: int):
    """(ok, first offending (rows, cols) or None); vacuous when too large."""
    if size > min(matrix.shape):
        return True, None
    keys = [
        (rows, cols)
        for rows in combinations(range(matrix.nrows), size)
        for cols in combinations(range(matrix.ncols), size)
    ]
    values = parallel_map(lambda rc: matrix.minor(*rc), keys)
    for key, value in zip(keys, values):
        if not value.is_zero():
            return False, key
    return True, None


def buchsbaum_eisenbud(cd: ComplexData, certs,
                       claim="buchsbaum_eisenbud", anchor="") -> CertificateReport:
    """Acyclicity certificate: rank sums, exact ranks, and grade bounds.

    certs maps the 1-based differential index k to a GradeCertificate for
    grade(I_{r_k}(M_k)) >= k, or to None, which leaves that grade clause
    inconclusive. The rank-sum arithmetic is checked before any minor is
    evaluated.
    """
    t0 = time.perf_counter()
    mats = cd.matrices
    ranks = cd.ranks
    n = len(mats)
    detail: dict = {}
    for k in range(n):
        expect = ranks[k] + (ranks[k + 1] if k + 1 < n else 0)
        if mats[k].ncols != expect:
            return _finish(CertificateReport(
                claim, REFUTED,
                {"clause": "rank_sum", "position": k + 1,
                 "cols": mats[k].ncols, "expected": expect},
                anchor), t0)
    detail["rank_sums"] = [
        f"cols(M{k+1}) = {ranks[k]} + {ranks[k+1] if k+1 < n else 0}"
        for k in range(n)
    ]
    statuses = []
    per_k = []
    for k in range(n):
        m, r = mats[k], ranks[k]
        cert = certs.get(k + 1) if hasattr(certs, "get") else certs[k]
        entry: dict = {"position": k + 1, "rank": r}
        hints = cert.minor_hints if cert is not None else None
        found = _find_nonzero_minor(m, r, hints)
        if found is None:
            return _finish(CertificateReport(
                claim, REFUTED,
                {**detail, "clause": "nonzero_minor", "position": k + 1,
                 "detail": per_k},
                anchor), t0)
        entry["nonzero_minor"] = {"rows": list(found[0]), "cols": list(found[1])}
        ok, offender = _all_minors_vanish(m, r + 1)
        if not ok:
            return _finish(CertificateReport(
                claim, REFUTED,
                {**detail, "clause": "vanishing_minors", "position": k + 1,
                 "offender": [list(offender[0]), list(offender[1])],
                 "detail": per_k},
                anchor), t0)
        entry["vanishing_minors"] = (
            "vacuous" if r + 1 > min(m.shape)
            else f"all {comb(m.nrows, r+1) * comb(m.ncols, r+1)} of size {r+1} vanish"
        )
        if cert is None:
            entry["grade"] = "no certificate provided"
            statuses.append(INCONCLUSIVE)
        else:
            g = grade_at_least(MinorIdeal(m, r), k + 1, cert)
            entry["grade"] = {"status": g.status, "witness": g.witness}
            statuses.append(g.status)
        per_k.append(entry)
    detail["detail"] = per_k
    return _finish(CertificateReport(claim, _combine(statuses), detail, anchor), t0)


def resolution_minimal(cd: ComplexData, claim="resolution_minimal",
                       anchor="") -> CertificateReport:
    """Minimality: every differential entry vanishes at the origin.

    When verified, the minimal generator count of the presented quotient's
    first syzygy module input, mu, equals the column count of the first
    differential.
    """
    t0 = time.perf_counter()
    for k, m in enumerate(cd.matrices):
        field_zero = m.ring.field.zero
        for i in range(m.nrows):
            for j in range(m.ncols):
                if m[i, j].constant_term() != field_zero:
                    return _finish(CertificateReport(
                        claim, REFUTED,
                        {"matrix": k + 1, "row": i, "col": j,
                         "entry": str(m[i, j])},
                        anchor), t0)
    return _finish(CertificateReport(
        claim, VERIFIED, {"mu": cd.matrices[0].ncols}, anchor), t0)


def linear_type_obstruction(mu: int, ambient_dim: int,
                            claim="linear_type", anchor="") -> CertificateReport:
    """Refute linear type when mu exceeds the ambient dimension."""
    t0 = time.perf_counter()
    witness = {"mu": mu, "ambient_dim": ambient_dim}
    if mu > ambient_dim:
        witness["obstruction"] = f"{mu} generators > dimension {ambient_dim}"
        return _finish(CertificateReport(claim, REFUTED, witness, anchor), t0)
    witness["obstruction"] = "none"
    return _finish(CertificateReport(claim, INCONCLUSIVE, witness, anchor), t0)


def syzygetic_obstruction(H: Ideal, f: Polynomial, I: Ideal,
                          claim="syzygetic", anchor="") -> CertificateReport:
    """Refute syzygetic-ness of I = H + (f) by a colon jump at the origin.

    Fast path: f^2 in H*I while (H : f) stays inside the maximal ideal;
    then H:f is strictly smaller than HI:f^2 locally. General path: scan
    the reduced basis of (H*I : f^2) for an element outside (H : f) at the
    origin.
    """
    t0 = time.perf_counter()
    ring = I.ring
    f = ring.convert(f)
    if f.is_zero():
        raise ValueError("obstruction element must be nonzero")
    presented = Ideal(ring, list(H.gens) + [f])
    if not presented.equals(I):
        return _finish(CertificateReport(
            claim, INCONCLUSIVE,
            {"reason": "H + (f) differs from I"},
            anchor), t0)
    hi = H * I
    f2 = f * f
    witness: dict = {}
    if hi.contains(f2):
        local = H.locally_contains_at_origin(f)
        if not local.verdict:
            colon_basis = H.colon(f).groebner()
            witness = {
                "path": "fast",
                "f_squared_in_HI": True,
                "colon_H_f_constant_terms_zero": all(
                    g.constant_term() == ring.field.zero for g in colon_basis
                ),
                "colon_H_f_basis": [str(g) for g in colon_basis],
            }
            return _finish(CertificateReport(claim, REFUTED, witness, anchor), t0)
    hf = H.colon(f)
    scanned = []
    for g in (hi.colon(f2)).groebner():
        local = hf.locally_contains_at_origin(g)
        scanned.append(str(g))
        if not local.verdict:
            if not hi.contains(g * f2):
                return _finish(CertificateReport(
                    claim, INCONCLUSIVE,
                    {"reason": "internal witness replay failed", "element": str(g)},
                    anchor), t0)
            witness = {
                "path": "colon-scan",
                "element": str(g),
                "element_times_f2_in_HI": True,
            }
            return _finish(CertificateReport(claim, REFUTED, witness, anchor), t0)
    return _finish(CertificateReport(
        claim, INCONCLUSIVE,
        {"reason": "no obstruction found", "scanned": scanned},
        anchor), t0)


def smallest_valuation_vector(relations, nsyms: int):
    """Componentwise-smallest strictly positive integer solution.

    relations are integer coefficient vectors a with a . v = 0. The solution
    cone must be one-dimensional; the result is primitive (gcd 1).
    """
    rows = [list(map(Fraction, r)) for r in relations]
    for r in rows:
        if len(r) != nsyms:
            raise ValueError("relation arity mismatch")
    # row reduce
    pivots = []
    row = 0
    for col in range(nsyms):
        sel = None
        for r in range(row, len(rows)):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        rows[row], rows[sel] = rows[sel], rows[row]
        pv = rows[row][col]
        rows[row] = [v / pv for v in rows[row]]
        for r in range(len(rows)):
            if r != row and rows[r][col] != 0:
                c = rows[r][col]
                rows[r] = [a - c * b for a, b in zip(rows[r], rows[row])]
        pivots.append(col)
        row += 1
    rank = len(pivots)
    if nsyms - rank != 1:
        raise ValueError(
            f"solution space has dimension {nsyms - rank}, expected 1"
        )
    free = next(c for c in range(nsyms) if c not in pivots)
    sol = [Fraction(0)] * nsyms
    sol[free] = Fraction(1)
    for r, col in enumerate(pivots):
        sol[col] = -rows[r][free]
    denom_lcm = 1
    for v in sol:
        denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    ints = [int(v * denom_lcm) for v in sol]
    if all(v < 0 for v in ints):
        ints = [-v for v in ints]
    if any(v <= 0 for v in ints):
        raise ValueError("no strictly positive solution")
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)
