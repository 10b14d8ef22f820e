"""Session-file parsing: statements, expressions, rendering, diagnostics."""

from fractions import Fraction

import pytest

from idealkit.fields import GF, QQ
from idealkit.parse import InputError, parse_poly, parse_session, render_session
from idealkit.poly import Ring

BASIC = """\
# demo session
ring Q[x, y];
poly f = x^2 - 2*x*y + y^2;
poly g = f * (x + y);
ideal I = f, g, x^3;
matrix M 2x2 = [ x, y ; -y, x ];
"""


def test_parse_statements():
    s = parse_session(BASIC)
    assert s.ring.names == ("x", "y")
    assert s.ring.field is QQ
    x, y = s.ring.gens()
    assert s.polys["f"] == (x - y) ** 2
    assert s.polys["g"] == (x - y) ** 2 * (x + y)
    assert [p for p in s.ideals["I"]] == [s.polys["f"], s.polys["g"], x**3]
    assert s.matrices["M"].shape == (2, 2)
    assert s.matrices["M"].rows[1][0] == -y


def test_lookup():
    s = parse_session(BASIC)
    assert s.lookup("f") == s.polys["f"]
    assert s.lookup("I") is s.ideals["I"]
    assert s.lookup("M") is s.matrices["M"]
    with pytest.raises(KeyError):
        s.lookup("missing")


def test_fraction_literals():
    s = parse_session("ring Q[x];\npoly f = 1/2*x + 3/4;\n")
    x, = s.ring.gens()
    f = s.polys["f"]
    assert f.coeff((1,)) == Fraction(1, 2)
    assert f.coeff((0,)) == Fraction(3, 4)


def test_prime_field_ring():
    s = parse_session("ring Fp(7)[x, y];\npoly f = 8*x + 1/2;\n")
    assert s.ring.field == GF(7)
    f = s.polys["f"]
    assert f.coeff((1, 0)) == GF(7).coerce(1)
    assert f.coeff((0, 0)) == GF(7).coerce(Fraction(1, 2))


def test_field_override():
    s = parse_session("ring Q[x];\npoly f = 7*x + 1/3;\n", field_override=GF(5))
    assert s.ring.field == GF(5)
    f = s.polys["f"]
    assert f.coeff((1,)) == GF(5).coerce(2)
    assert f.coeff((0,)) == GF(5).coerce(2)  # 1/3 = 2 mod 5


def test_matrix_dims_glued_and_spaced():
    glued = parse_session("ring Q[x];\nmatrix A 1x2 = [ x, x^2 ];\n")
    spaced = parse_session("ring Q[x];\nmatrix A 1 x 2 = [ x, x^2 ];\n")
    assert glued.matrices["A"].rows == spaced.matrices["A"].rows


def test_render_round_trip():
    s = parse_session(BASIC)
    text = render_session(s)
    again = parse_session(text)
    assert again.ring == s.ring
    assert again.polys == s.polys
    assert {k: list(v) for k, v in again.ideals.items()} == \
        {k: list(v) for k, v in s.ideals.items()}
    assert {k: v.rows for k, v in again.matrices.items()} == \
        {k: v.rows for k, v in s.matrices.items()}


def test_render_prime_field():
    s = parse_session("ring Fp(7)[x];\npoly f = 3*x;\n")
    text = render_session(s)
    assert "Fp(7)" in text
    assert parse_session(text).ring.field == GF(7)


def test_parse_poly_helper():
    ring = Ring(QQ, ("x", "y"))
    x, y = ring.gens()
    assert parse_poly(ring, "x^2 - y") == x**2 - y
    assert parse_poly(ring, "-(x + y)*(x - y)") == y**2 - x**2
    assert parse_poly(ring, "2") == ring.one * 2


def test_parse_poly_rejects_unknown_names():
    ring = Ring(QQ, ("x", "y"))
    with pytest.raises(InputError):
        parse_poly(ring, "x + w")


def test_expression_power_of_sum():
    s = parse_session("ring Q[x, y];\npoly f = (x + y)^3;\n")
    x, y = s.ring.gens()
    assert s.polys["f"] == x**3 + 3 * x**2 * y + 3 * x * y**2 + y**3


def test_unary_minus_and_precedence():
    s = parse_session("ring Q[x];\npoly f = -x^2;\npoly g = (-x)^2;\n")
    x, = s.ring.gens()
    assert s.polys["f"] == -(x**2)
    assert s.polys["g"] == x**2


def test_comments_and_blank_lines():
    src = "# leading comment\n\nring Q[x];  # trailing\n\npoly f = x;\n"
    assert "f" in parse_session(src).polys


@pytest.mark.parametrize("src, line, col, fragment", [
    ("poly f = x;", 1, 8, "ring"),
    ("ring Q[x];\nring Q[y];", 2, 1, "one ring"),
    ("ring Q[x];\npoly f = y;", 2, 10, "unknown name"),
    ("ring Q[x];\npoly x = x;", 2, 6, "already"),
    ("ring Q[x];\npoly f = x;\npoly f = x;", 3, 6, "already"),
    ("ring Q[x];\npoly f = x + ;", 2, 14, "expected"),
    ("ring Q[x];\npoly f = x^y;", 2, 12, "exponent"),
    ("ring Q[x];\nmatrix M 2x2 = [ x ; x ];", 2, 8, "sizes [1, 1]"),
    ("ring Q[x];\nmatrix M 1x1 = [ x ; x ];", 2, 8, "given 2 rows"),
    ("ring Q[x];\npoly f = 1/0;", 2, 12, "zero"),
    ("ring Fp(4)[x];", 1, 9, "prime"),
    ("ring Q[x];\nideal I = x;\npoly f = I;", 3, 10, "not a polynomial"),
    ("ring Q[x] poly f = x;", 1, 11, "expected"),
    ("ring Q[x];\nfrobnicate f;", 2, 1, "statement"),
    ("ring Q[x];\npoly f = x $ x;", 2, 12, "character"),
])
def test_error_positions(src, line, col, fragment):
    with pytest.raises(InputError) as exc:
        parse_session(src)
    err = exc.value
    assert err.line == line
    assert err.col == col
    assert fragment in err.reason
    assert f"line {line}, column {col}" in str(err)


def test_unterminated_statement():
    with pytest.raises(InputError):
        parse_session("ring Q[x];\npoly f = x")


def test_big_exponent_guard():
    with pytest.raises(InputError):
        parse_session("ring Q[x, y];\npoly f = (x + y)^100;\n")
    # single variables may use large exponents
    s = parse_session("ring Q[x];\npoly f = x^100;\n")
    assert s.polys["f"].degree() == 100
