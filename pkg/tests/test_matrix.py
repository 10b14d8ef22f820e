"""Polynomial matrices: products, determinants, minors, canonical sets."""

import random
from fractions import Fraction

import pytest

from idealkit.fields import GF, QQ
from idealkit.matrix import PolyMatrix, canonical_sign
from idealkit.poly import Polynomial, Ring

R3 = Ring(QQ, ("x", "y", "z"))


def lemma3_data():
    x, y, z = R3.gens()
    f1 = y**3 - x**4
    f2 = x * y * z - z**3 + x**4 - x * y**3
    f3 = x**2 * y + y**2 * z - x * z**2 - x**3 * y
    f4 = x * y**2 - y * z**2 - x**2 * y**2 + x**3 * z
    phi1 = PolyMatrix(R3, [[f1, f2, f3, f4]])
    phi2 = PolyMatrix(R3, [
        [x, x * y, z],
        [x, y, 0],
        [-z, -(x**2), -y],
        [-y, -z, x],
    ])
    return (f1, f2, f3, f4), phi1, phi2


def random_matrix(ring, n, m, rng, maxdeg=1, terms=2):
    nv = ring.nvars

    def poly():
        out = {}
        for _ in range(terms):
            e = [0] * nv
            for _ in range(maxdeg):
                e[rng.randrange(nv)] += rng.randrange(2)
            c = rng.randrange(-3, 4)
            if c:
                e = tuple(e)
                out[e] = out.get(e, 0) + c
        return Polynomial(ring, {e: Fraction(c) for e, c in out.items() if c})

    return PolyMatrix(ring, [[poly() for _ in range(m)] for _ in range(n)])


def test_shapes_and_entries():
    _, phi1, phi2 = lemma3_data()
    assert phi1.shape == (1, 4)
    assert phi2.shape == (4, 3)
    assert phi2[1, 1] == R3.var("y")
    assert phi2[2, 2] == -R3.var("y")
    with pytest.raises(ValueError):
        PolyMatrix(R3, [[R3.one], [R3.one, R3.one]])


def test_composite_vanishes():
    _, phi1, phi2 = lemma3_data()
    prod = phi1.mul(phi2)
    assert prod.shape == (1, 3)
    assert prod.is_zero()


def test_identity_product():
    rng = random.Random(5)
    a = random_matrix(R3, 3, 3, rng)
    eye = PolyMatrix(R3, [[1 if i == j else 0 for j in range(3)]
                          for i in range(3)])
    assert eye.mul(a) == a
    assert a.mul(eye) == a


def test_dimension_mismatch():
    rng = random.Random(6)
    a = random_matrix(R3, 2, 3, rng)
    b = random_matrix(R3, 2, 3, rng)
    with pytest.raises(ValueError):
        a.mul(b)


def test_det_small_vs_bareiss():
    # 4x4 uses Bareiss; deleting a row/col pair gives 3x3 cofactor dets.
    # Laplace expansion along two different rows must agree with both.
    rng = random.Random(1)
    for _ in range(8):
        m = random_matrix(R3, 4, 4, rng)
        det = m.det()
        for row in (0, 2):
            acc = R3.zero
            for j in range(4):
                entry = m[row, j]
                if entry.is_zero():
                    continue
                rows = tuple(i for i in range(4) if i != row)
                cols = tuple(c for c in range(4) if c != j)
                cof = m.minor(rows, cols)
                term = entry * cof
                if (row + j) % 2:
                    term = -term
                acc = acc + term
            assert acc == det, "Laplace expansion disagrees with det"


def test_det_transpose_invariance():
    rng = random.Random(2)
    for n in (1, 2, 3, 4, 5):
        m = random_matrix(R3, n, n, rng)
        assert m.det() == m.transpose().det()


def test_minor_transpose_invariance():
    rng = random.Random(3)
    m = random_matrix(R3, 4, 5, rng)
    mt = m.transpose()
    for rows, cols in (((0, 1), (1, 2)), ((1, 2, 3), (0, 2, 4))):
        assert m.minor(rows, cols) == mt.minor(cols, rows)


def test_minor_1x1_is_entry():
    _, _, phi2 = lemma3_data()
    assert phi2.minor((2,), (1,)) == phi2[2, 1]


def test_minor_validation():
    _, _, phi2 = lemma3_data()
    with pytest.raises(ValueError):
        phi2.minor((0, 1), (0,))
    with pytest.raises((ValueError, IndexError)):
        phi2.minor((0, 9), (0, 1))
    with pytest.raises(ValueError):
        phi2.submatrix((0, 0), (0, 1))


def test_maximal_minors_lemma3():
    (f1, f2, f3, f4), _, phi2 = lemma3_data()
    minors = phi2.maximal_minors()
    assert len(minors) == 4
    expected = {canonical_sign(f) for f in (f1, f2, f3, f4)}
    assert set(minors) == expected


def test_maximal_minors_zero_matrix():
    z = PolyMatrix(R3, [[0, 0], [0, 0], [0, 0]])
    assert z.maximal_minors() == [R3.zero]


def test_minors_keyed():
    _, _, phi2 = lemma3_data()
    table = phi2.minors(3)
    assert len(table) == 4  # four row choices, one column choice
    assert ((0, 1, 2), (0, 1, 2)) in table


def test_canonical_sign():
    x, y, _ = R3.gens()
    p = -(x**2) + y
    assert canonical_sign(p) == x**2 - y
    assert canonical_sign(x**2 - y) == x**2 - y
    assert canonical_sign(R3.zero).is_zero()
    f5 = Ring(GF(5), ("x",))
    q = f5.poly({(1,): 4})  # 4 = -1 mod 5, canonical lead <= 2
    assert canonical_sign(q) == f5.poly({(1,): 1})


def test_det_prime_field_consistency():
    rng = random.Random(4)
    f7 = Ring(GF(7), ("x", "y", "z"))
    for _ in range(6):
        m = random_matrix(R3, 4, 4, rng)
        dq = m.det()
        mp = PolyMatrix(f7, [[f7.convert(e) for e in row] for row in m.rows])
        assert f7.convert(dq) == mp.det()
