"""Embedded worked examples and their end-to-end verification bundles.

Each entry carries a session text (the rings, generators, and matrices
written out term by term) plus a bundle function that runs the full
certificate chain for that example. Bundles never raise on a failed
check; they return reports whose status records what happened, so the
same chain can be replayed over other coefficient fields.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .certify import (
    INCONCLUSIVE,
    REFUTED,
    VERIFIED,
    CertificateReport,
    ComplexData,
    GradeCertificate,
    MinorWitness,
    buchsbaum_eisenbud,
    linear_type_obstruction,
    resolution_minimal,
    smallest_valuation_vector,
    syzygetic_obstruction,
    verify_complex,
)
from .groebner import normal_form
from .idealops import Ideal, kernel_of_map
from .parse import SessionInput, parse_session
from .poly import Ring

LEMMA2_TEXT = """\
ring Q[x,y];
poly f = x*y;
ideal J = x^2, y^2;
ideal I = x^2, x*y, y^2;
"""

LEMMA3_TEXT = """\
ring Q[x,y,z];
poly f1 = y^3 - x^4;
poly f2 = x*y*z - z^3 + x^4 - x*y^3;
poly f3 = x^2*y + y^2*z - x*z^2 - x^3*y;
poly f4 = x*y^2 - y*z^2 - x^2*y^2 + x^3*z;
ideal I = f1, f2, f3, f4;
matrix phi1 1x4 = [ f1, f2, f3, f4 ];
matrix phi2 4x3 = [
  x, x*y, z ;
  x, y, 0 ;
  -z, -x^2, -y ;
  -y, -z, x
];
"""

LEMMA4_TEXT = """\
ring Q[x,y,z,t];
poly f1 = y*z - x*t;
poly f2 = z^3 - x^5;
poly f3 = z^2*t - x^4*y;
poly f4 = z*t^2 - x^3*y^2;
poly f5 = t^3 - x^2*y^3;
poly f6 = y^4 - x^5;
poly f7 = y^3*t - x^4*z;
poly f8 = y^2*t^2 - x^3*z^2;
poly g1 = y^10 - 2*x^5*y^6 + x^10*y^2;
poly g2 = z^8 - 2*x^5*z^5 + x^10*z^2;
poly h1 = y^6 - x^5*y^2;
poly h2 = z^5 - x^5*z^2;
poly h3 = t^5 - x^2*y^3*t^2;
ideal I = f1, f2, f3, f4, f5, f6, f7, f8;
ideal H = f1, f2, f3, f4, f5, f6, f7;
matrix phi1 1x8 = [ f1, f2, f3, f4, f5, f6, f7, f8 ];
matrix phi2 8x12 = [
  y^2*t, y^3, t^2, z*t, z^2, x^3*z, x^4, -y*t^2, x^2*y^2, x^3*y, x^4, 0 ;
  0, 0, 0, 0, -y, 0, 0, x^3, 0, 0, -t, 0 ;
  0, 0, 0, -y, x, 0, 0, 0, 0, -t, z, x^3 ;
  0, 0, -y, x, 0, 0, 0, 0, -t, z, 0, 0 ;
  0, 0, x, 0, 0, 0, 0, -x*y, z, 0, 0, -y^2 ;
  0, -z, 0, 0, 0, 0, -t, -x^3, 0, 0, 0, -x^2*y ;
  -z, x, 0, 0, 0, -t, y, 0, 0, 0, 0, 0 ;
  x, 0, 0, 0, 0, y, 0, z, 0, 0, 0, t
];
matrix phi3 12x5 = [
  -t, 0, 0, -y, 0 ;
  0, 0, 0, t, -x^2*y ;
  0, 0, -z, 0, -y*t ;
  0, -z, t, 0, 0 ;
  -x^3, t, 0, 0, 0 ;
  z, 0, 0, x, 0 ;
  0, 0, 0, -z, x^3 ;
  -y, 0, 0, 0, -t ;
  0, 0, x, 0, y^2 ;
  0, x, -y, 0, 0 ;
  0, -y, 0, 0, -x^3 ;
  x, 0, 0, 0, z
];
"""

HUNEKE_TEXT = """\
ring Q[s];
poly cx = s^6;
poly cy = s^7 + s^10;
poly cz = s^8;
"""

# Signed row/column selections locating each named generator as a minor.
L3_MINORS = (
    ("f1", (1, 2, 3), (0, 1, 2), 1),
    ("f2", (0, 2, 3), (0, 1, 2), -1),
    ("f3", (0, 1, 3), (0, 1, 2), 1),
    ("f4", (0, 1, 2), (0, 1, 2), -1),
)
L4_MINORS = (
    ("phi2", "g1", (0, 1, 2, 3, 4, 6, 7), (1, 2, 3, 4, 5, 6, 11), 1),
    ("phi2", "g2", (0, 2, 3, 4, 5, 6, 7), (0, 1, 4, 7, 8, 9, 10), -1),
    ("phi3", "h1", (0, 7, 8, 9, 10), (0, 1, 2, 3, 4), 1),
    ("phi3", "h2", (2, 3, 5, 6, 11), (0, 1, 2, 3, 4), 1),
    ("phi3", "h3", (0, 1, 3, 4, 7), (0, 1, 2, 3, 4), -1),
)

# Valuation relations: coefficient rows a with a . (v_x, v_y, v_z, v_t) = 0,
# read off the pure binomials z^3 - x^5, t^3 - x^2*y^3, y^4 - x^5.
L4_VALUATION_RELATIONS = ((-5, 0, 3, 0), (-2, -3, 0, 3), (-5, 4, 0, 0))
L4_VALUATION_TEXT = ("3*v_z = 5*v_x", "3*v_t = 2*v_x + 3*v_y", "4*v_y = 5*v_x")
L4_VALUATION_EXPECTED = (12, 15, 20, 23)
# A variant of the same vector that sometimes gets quoted; it violates the
# first relation (3*29 = 87, 5*12 = 60), so the bundle flags it.
L4_VALUATION_DISPUTED = (12, 15, 29, 23)

L3_STANDARD_MONOMIALS = ("1", "z", "y", "z^2", "y*z", "y^2")
L4_STANDARD_MONOMIALS = (
    "1", "t", "z", "y", "t^2", "z*t", "y*t", "z^2", "y^2",
    "y*t^2", "y^2*t", "y^3",
)

TORIC_EXPONENTS = (12, 15, 20, 23)
HUNEKE_EXPONENTS = (6, (7, 10), 8)


@dataclass(frozen=True)
class LemmaCorpusEntry:
    """One embedded example: id, session text, and its claim chain."""

    lemma_id: str
    text: str
    claims: tuple

    def session(self, field_override=None) -> SessionInput:
        return parse_session(self.text, field_override)


def _report(claim, ok, witness, anchor, t0,
            failure=REFUTED) -> CertificateReport:
    status = VERIFIED if ok else failure
    report = CertificateReport(claim, status, witness, anchor)
    report.millis = int((time.perf_counter() - t0) * 1000)
    return report


def _negate(inner: CertificateReport, claim: str,
            anchor: str) -> CertificateReport:
    """Rephrase an obstruction report as the negated property claim."""
    flip = {REFUTED: VERIFIED, VERIFIED: REFUTED,
            INCONCLUSIVE: INCONCLUSIVE}
    witness = dict(inner.witness)
    witness["refuted_property"] = inner.claim
    return CertificateReport(claim, flip[inner.status], witness, anchor,
                             inner.millis)


def _rebrand(inner: CertificateReport, claim: str,
             anchor: str) -> CertificateReport:
    return CertificateReport(claim, inner.status, inner.witness, anchor,
                             inner.millis)


def _verify_lemma2(session: SessionInput):
    ring = session.ring
    f = session.polys["f"]
    J = Ideal(ring, session.ideals["J"])
    I = Ideal(ring, session.ideals["I"])
    reports = []

    t0 = time.perf_counter()
    remainder = normal_form(f, J.groebner())
    outside_global = not remainder.is_zero()
    outside_local = not J.locally_contains_at_origin(f).verdict
    reports.append(_report(
        "element_outside_subideal",
        outside_global and outside_local,
        {"normal_form": str(remainder),
         "outside_globally": outside_global,
         "outside_at_origin": outside_local},
        "x*y lies outside (x^2, y^2), globally and after localizing "
        "at the origin", t0))

    t0 = time.perf_counter()
    JI = J * I
    witness = JI.membership_witness(f * f)
    ok = witness is not None
    combo = {}
    if ok:
        quotients, basis = witness
        combo = {str(b): str(q) for b, q in zip(basis, quotients)
                 if not q.is_zero()}
    reports.append(_report(
        "square_in_product", ok,
        {"membership": ok, "combination": combo},
        "(x*y)^2 lies in the product ideal (x^2, y^2) * (x^2, x*y, y^2)",
        t0))

    t0 = time.perf_counter()
    colon = J.colon(f).groebner()
    zero = ring.field.zero
    colon_in_m = bool(colon) and all(
        g.constant_term() == zero for g in colon)
    saturated = not JI.colon(f * f).is_proper()
    reports.append(_report(
        "colon_strictness", colon_in_m and saturated,
        {"colon_basis": [str(g) for g in colon],
         "colon_inside_maximal_ideal": colon_in_m,
         "product_colon_is_unit_ideal": saturated},
        "(J : x*y) stays inside (x, y) while (J*I : (x*y)^2) is the "
        "unit ideal", t0))

    reports.append(_negate(
        syzygetic_obstruction(J, f, I),
        "not_syzygetic",
        "the colon jump (J : x*y) != (J*I : (x*y)^2) at the origin "
        "refutes syzygetic-ness of the squared maximal ideal"))
    return reports


def _l3_complex(session: SessionInput) -> ComplexData:
    return ComplexData(
        [session.matrices["phi1"], session.matrices["phi2"]], [1, 3])


def _l3_certs(session: SessionInput):
    ring = session.ring
    f1, f2 = session.polys["f1"], session.polys["f2"]
    x, y, z = (ring.var(n) for n in ("x", "y", "z"))
    return {
        1: GradeCertificate(1, (f1,), (MinorWitness((0,), (0,)),)),
        2: GradeCertificate(
            2, (f1, f2),
            (MinorWitness((1, 2, 3), (0, 1, 2), 1),
             MinorWitness((0, 2, 3), (0, 1, 2), -1)),
            aux=x,
            expected=Ideal(ring, [x, y**3, z**3])),
    }


def _minor_match_report(claim, matrices, assignments, polys, anchor):
    t0 = time.perf_counter()
    checked = []
    ok = True
    for mat_name, poly_name, rows, cols, sign in assignments:
        minor = matrices[mat_name].minor(rows, cols)
        target = polys[poly_name]
        match = minor == (target if sign == 1 else -target)
        ok = ok and match
        checked.append({
            "generator": poly_name, "matrix": mat_name,
            "rows": list(rows), "cols": list(cols), "sign": sign,
            "match": match,
        })
    return _report(claim, ok, {"assignments": checked}, anchor, t0)


def _slice_report(claim, I, aux, expected_monomials, anchor):
    """Colength and standard monomials of I + (aux)."""
    t0 = time.perf_counter()
    sliced = Ideal(I.ring, list(I.gens) + [aux])
    std = sliced.standard_monomials()
    if std is None:
        return _report(claim, False,
                       {"colength": "infinite"}, anchor, t0)
    got = [str(m) for m in std]
    expected = sorted(expected_monomials)
    ok = len(got) == len(expected_monomials) and sorted(got) == expected
    return _report(claim, ok,
                   {"colength": len(got), "standard_monomials": got,
                    "expected_count": len(expected_monomials)},
                   anchor, t0)


def _dimension_report(I: Ideal, expected: int, anchor: str):
    t0 = time.perf_counter()
    dim = I.krull_dim_quotient()
    return _report("dimension", dim == expected,
                   {"dim": dim, "expected": expected}, anchor, t0)


def _verify_lemma3(session: SessionInput):
    ring = session.ring
    polys = session.polys
    x, y, z = (ring.var(n) for n in ("x", "y", "z"))
    I = Ideal(ring, session.ideals["I"])
    cd = _l3_complex(session)
    reports = []

    reports.append(_minor_match_report(
        "minors_match", session.matrices,
        tuple(("phi2",) + a for a in L3_MINORS), polys,
        "the four 3x3 minors of the 4x3 presentation matrix are the "
        "four generators up to sign"))

    reports.append(_rebrand(
        verify_complex(cd), "complex",
        "the composite of the two differentials is the zero matrix"))

    reports.append(_rebrand(
        buchsbaum_eisenbud(cd, _l3_certs(session)), "acyclic",
        "rank and grade clauses hold with expected ranks (1, 3)"))

    t0 = time.perf_counter()
    lhs = Ideal(ring, [polys["f1"], polys["f2"], x])
    rhs = Ideal(ring, [x, y**3, z**3])
    equal = lhs.equals(rhs)
    reports.append(_report(
        "grade_simplification", equal,
        {"lhs_basis": [str(g) for g in lhs.groebner()],
         "rhs_basis": [str(g) for g in rhs.groebner()]},
        "(f1, f2, x) = (x, y^3, z^3) as ideals", t0))

    minimal = _rebrand(
        resolution_minimal(cd), "minimal",
        "every differential entry vanishes at the origin, so the "
        "resolution is minimal and mu equals the generator count")
    reports.append(minimal)

    mu = minimal.witness.get("mu", 0) if minimal.verified else 0
    reports.append(_negate(
        linear_type_obstruction(mu, ring.nvars),
        "not_linear_type",
        "an ideal of linear type needs at most dim-many generators; "
        "mu = 4 > 3 rules it out"))

    reports.append(_dimension_report(
        I, 1, "the quotient by the ideal has Krull dimension 1"))

    reports.append(_slice_report(
        "colength_slice", I, x, L3_STANDARD_MONOMIALS,
        "the quotient by (x) + I is a 6-dimensional vector space "
        "spanned by 1, y, z, y^2, y*z, z^2"))
    return reports


def _l4_complex(session: SessionInput) -> ComplexData:
    return ComplexData(
        [session.matrices["phi1"], session.matrices["phi2"],
         session.matrices["phi3"]], [1, 7, 5])


def _l4_certs(session: SessionInput):
    ring = session.ring
    p = session.polys
    x, y, z, t = (ring.var(n) for n in ("x", "y", "z", "t"))
    return {
        1: GradeCertificate(
            1, (p["f2"], p["f5"], p["f6"]),
            (MinorWitness((0,), (1,)), MinorWitness((0,), (4,)),
             MinorWitness((0,), (5,))),
            aux=x, expected=Ideal(ring, [x, y**4, z**3, t**3])),
        2: GradeCertificate(
            2, (p["g1"], p["g2"]),
            (MinorWitness((0, 1, 2, 3, 4, 6, 7),
                          (1, 2, 3, 4, 5, 6, 11), 1),
             MinorWitness((0, 2, 3, 4, 5, 6, 7),
                          (0, 1, 4, 7, 8, 9, 10), -1)),
            aux=x, expected=Ideal(ring, [x, y**10, z**8])),
        3: GradeCertificate(
            3, (p["h1"], p["h2"], p["h3"]),
            (MinorWitness((0, 7, 8, 9, 10), (0, 1, 2, 3, 4), 1),
             MinorWitness((2, 3, 5, 6, 11), (0, 1, 2, 3, 4), 1),
             MinorWitness((0, 1, 3, 4, 7), (0, 1, 2, 3, 4), -1)),
            aux=x, expected=Ideal(ring, [x, y**6, z**5, t**5])),
    }


def _verify_lemma4(session: SessionInput):
    ring = session.ring
    p = session.polys
    x, y, z, t = (ring.var(n) for n in ("x", "y", "z", "t"))
    I = Ideal(ring, session.ideals["I"])
    H = Ideal(ring, session.ideals["H"])
    cd = _l4_complex(session)
    reports = []

    reports.append(_rebrand(
        verify_complex(cd), "complex",
        "both consecutive composites of the three differentials vanish"))

    reports.append(_minor_match_report(
        "minors_located", session.matrices, L4_MINORS, p,
        "g1, g2 appear as signed 7x7 minors of the second differential "
        "and h1, h2, h3 as signed 5x5 minors of the third"))

    reports.append(_rebrand(
        buchsbaum_eisenbud(cd, _l4_certs(session)), "acyclic",
        "rank and grade clauses hold with expected ranks (1, 7, 5); "
        "in particular all 8x8 minors of the middle differential vanish"))

    minimal = _rebrand(
        resolution_minimal(cd), "minimal",
        "every differential entry vanishes at the origin, so the "
        "resolution is minimal and mu = 8")
    reports.append(minimal)

    reports.append(_dimension_report(
        I, 1, "the quotient by the ideal has Krull dimension 1"))

    reports.append(_slice_report(
        "colength_slice", I, x, L4_STANDARD_MONOMIALS,
        "the quotient by (x) + I is a 12-dimensional vector space "
        "spanned by 1, y, y*t, y*t^2, y^2, y^2*t, y^3, z, z*t, z^2, "
        "t, t^2"))

    t0 = time.perf_counter()
    f1, f2, f5, f6, f7, f8 = (p[n] for n in
                              ("f1", "f2", "f5", "f6", "f7", "f8"))
    combo = (x**2 * y * z * t * f1 * f1 - x**4 * f1 * f5
             - x**2 * f2 * f7 + t * f5 * f6 + x**2 * f6 * f7)
    reports.append(_report(
        "square_identity", (f8 * f8 - combo).is_zero(),
        {"identity": "f8^2 = x^2*y*z*t*f1^2 - x^4*f1*f5 - x^2*f2*f7 "
                      "+ t*f5*f6 + x^2*f6*f7"},
        "f8^2 decomposes exactly as the stated combination of products "
        "f_i*f_j, hence f8^2 lies in H*I", t0))

    reports.append(_negate(
        syzygetic_obstruction(H, f8, I),
        "not_syzygetic",
        "(H : f8) stays inside the maximal ideal while f8^2 already "
        "lies in H*I, so the colon jumps and the ideal is not syzygetic"))

    t0 = time.perf_counter()
    sring = Ring(ring.field, ("s",))
    s = sring.var(0)
    kernel = kernel_of_map([s**e for e in TORIC_EXPONENTS],
                           ("x", "y", "z", "t"))
    equal = kernel.equals(I)
    reports.append(_report(
        "toric_kernel", equal,
        {"exponents": list(TORIC_EXPONENTS),
         "kernel_basis_size": len(kernel.gens),
         "equals_ideal": equal},
        "the kernel of x,y,z,t -> s^12, s^15, s^20, s^23 equals the "
        "ideal of the eight generators", t0))

    t0 = time.perf_counter()
    vector = smallest_valuation_vector(L4_VALUATION_RELATIONS, 4)
    satisfied = all(
        sum(a * v for a, v in zip(rel, vector)) == 0
        for rel in L4_VALUATION_RELATIONS)
    disputed_fails = [
        text for rel, text in zip(L4_VALUATION_RELATIONS, L4_VALUATION_TEXT)
        if sum(a * v for a, v in zip(rel, L4_VALUATION_DISPUTED)) != 0
    ]
    ok = (tuple(vector) == L4_VALUATION_EXPECTED and satisfied
          and bool(disputed_fails))
    reports.append(_report(
        "valuation_vector", ok,
        {"relations": list(L4_VALUATION_TEXT),
         "vector": list(vector),
         "also_reported": list(L4_VALUATION_DISPUTED),
         "also_reported_violates": disputed_fails},
        "the relations force (12, 15, 20, 23); the value (12, 15, 29, "
        "23) reported elsewhere violates 3*v_z = 5*v_x", t0))
    return reports


def _verify_huneke(session: SessionInput):
    ring = session.ring
    images = [session.polys[n] for n in ("cx", "cy", "cz")]
    reports = []

    t0 = time.perf_counter()
    kernel = kernel_of_map(images, ("x", "y", "z"))
    basis = kernel.groebner()
    sound = bool(basis) and all(
        g.substitute(images, ring).is_zero() for g in basis)
    reports.append(_report(
        "kernel_sound", sound,
        {"basis_size": len(basis),
         "substitution_vanishes": sound},
        "every kernel basis element vanishes under x,y,z -> s^6, "
        "s^7 + s^10, s^8", t0))

    reports.append(_dimension_report(
        kernel, 1, "the coordinate ring of the curve has dimension 1"))

    t0 = time.perf_counter()
    mu = kernel.min_generators_at_origin()
    reports.append(_report(
        "minimal_generators", mu == 4, {"mu": mu, "expected": 4},
        "the kernel needs exactly four generators at the origin", t0))

    reports.append(_negate(
        linear_type_obstruction(mu, kernel.ring.nvars),
        "not_linear_type",
        "mu = 4 exceeds the ambient dimension 3, which no ideal of "
        "linear type allows"))
    return reports


CORPUS = {
    "lemma2": LemmaCorpusEntry(
        "lemma2", LEMMA2_TEXT,
        ("element_outside_subideal", "square_in_product",
         "colon_strictness", "not_syzygetic")),
    "lemma3": LemmaCorpusEntry(
        "lemma3", LEMMA3_TEXT,
        ("minors_match", "complex", "acyclic", "grade_simplification",
         "minimal", "not_linear_type", "dimension", "colength_slice")),
    "lemma4": LemmaCorpusEntry(
        "lemma4", LEMMA4_TEXT,
        ("complex", "minors_located", "acyclic", "minimal", "dimension",
         "colength_slice", "square_identity", "not_syzygetic",
         "toric_kernel", "valuation_vector")),
    "huneke": LemmaCorpusEntry(
        "huneke", HUNEKE_TEXT,
        ("kernel_sound", "dimension", "minimal_generators",
         "not_linear_type")),
}

_BUNDLES = {
    "lemma2": _verify_lemma2,
    "lemma3": _verify_lemma3,
    "lemma4": _verify_lemma4,
    "huneke": _verify_huneke,
}


def verify_lemma(lemma_id: str, field=None):
    """Run the certificate chain for one corpus entry.

    Returns the list of CertificateReport in chain order. `field`
    overrides the session's declared coefficient field.
    """
    if lemma_id not in CORPUS:
        raise KeyError(
            f"unknown lemma {lemma_id!r}; choose from "
            f"{sorted(CORPUS)}")
    session = CORPUS[lemma_id].session(field)
    return _BUNDLES[lemma_id](session)
