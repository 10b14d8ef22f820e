"""Line-oriented textual input format for rings, polynomials, ideals, matrices.

Grammar (statements end with `;`, whitespace is free):

    ring Q[x,y,z];            ring Fp(7)[x,y];
    poly g = x^2*y - 3*z + 1;
    ideal I = f1, f2, x*y - z;
    matrix M 2x3 = [ x, y, 0 ; -z, x^2, g ];

Multiplication is always explicit (`*`), powers use `^`, and rational
coefficients may be written `p/q`. Expressions may reference previously
declared polynomials by name. All declared names share one namespace and
must be unique. Errors carry line and column.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .fields import GF, QQ
from .matrix import PolyMatrix
from .poly import Polynomial, Ring


class InputError(Exception):
    """Parse or validation failure, locating the offending input."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.reason = message


@dataclass
class Token:
    kind: str  # IDENT, INT, or a literal symbol
    text: str
    line: int
    col: int


_SYMBOLS = set("+-*^()[]=,;/")


def _tokenize(source: str):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token("INT", source[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", source[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(ch, ch, line, start_col))
            col += 1
            i += 1
            continue
        raise InputError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


@dataclass
class SessionInput:
    """Parsed session: one ring plus named polynomials, ideals, matrices."""

    ring: Ring
    polys: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)
    matrices: dict = field(default_factory=dict)

    def lookup(self, name: str):
        if name in self.polys:
            return self.polys[name]
        if name in self.ideals:
            return self.ideals[name]
        if name in self.matrices:
            return self.matrices[name]
        raise KeyError(name)


def render_session(session: SessionInput) -> str:
    """Canonical text for a session; parsing it back reproduces the data."""
    f = session.ring.field
    head = "Q" if f.char == 0 else f"Fp({f.char})"
    lines = [f"ring {head}[{', '.join(session.ring.names)}];"]
    for name, p in session.polys.items():
        lines.append(f"poly {name} = {p};")
    for name, gens in session.ideals.items():
        body = ", ".join(str(g) for g in gens)
        lines.append(f"ideal {name} = {body};")
    for name, m in session.matrices.items():
        rows = " ; ".join(", ".join(str(e) for e in row) for row in m.rows)
        lines.append(f"matrix {name} {m.nrows}x{m.ncols} = [ {rows} ];")
    return "\n".join(lines) + "\n"


class _Parser:
    def __init__(self, tokens, field_override=None):
        self.tokens = tokens
        self.pos = 0
        self.session: SessionInput | None = None
        self.field_override = field_override

    # -- token plumbing ---------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            want = what or kind
            raise InputError(
                f"expected {want}, found {tok.text!r}" if tok.kind != "EOF"
                else f"expected {want}, found end of input",
                tok.line, tok.col)
        return self.next()

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise InputError(message, tok.line, tok.col)

    # -- statements --------------------------------------------------------

    def parse_session(self) -> SessionInput:
        while self.peek().kind != "EOF":
            tok = self.peek()
            if tok.kind != "IDENT":
                self.error("expected a statement keyword")
            if tok.text == "ring":
                self._ring_stmt()
            elif tok.text == "poly":
                self._poly_stmt()
            elif tok.text == "ideal":
                self._ideal_stmt()
            elif tok.text == "matrix":
                self._matrix_stmt()
            else:
                self.error(
                    f"unknown statement {tok.text!r} "
                    "(expected ring, poly, ideal, or matrix)")
        if self.session is None:
            tok = self.peek()
            raise InputError("input declares no ring", tok.line, tok.col)
        return self.session

    def _require_ring(self) -> SessionInput:
        if self.session is None:
            self.error("a ring declaration must come first")
        return self.session

    def _declare(self, name_tok: Token):
        session = self._require_ring()
        name = name_tok.text
        if name in session.ring._index:
            self.error(f"name {name!r} is already a ring variable", name_tok)
        for table in (session.polys, session.ideals, session.matrices):
            if name in table:
                self.error(f"name {name!r} is already defined", name_tok)
        return name

    def _ring_stmt(self):
        tok = self.next()
        if self.session is not None:
            self.error("only one ring declaration is allowed", tok)
        field_tok = self.expect("IDENT", "a coefficient field (Q or Fp(p))")
        if field_tok.text == "Q":
            coeff_field = QQ
        elif field_tok.text == "Fp":
            self.expect("(")
            p_tok = self.expect("INT", "a prime modulus")
            self.expect(")")
            try:
                coeff_field = GF(int(p_tok.text))
            except ValueError as exc:
                raise InputError(str(exc), p_tok.line, p_tok.col) from None
        else:
            self.error(
                f"unknown field {field_tok.text!r} (expected Q or Fp(p))",
                field_tok)
        if self.field_override is not None:
            coeff_field = self.field_override
        self.expect("[")
        names = [self.expect("IDENT", "a variable name").text]
        while self.peek().kind == ",":
            self.next()
            names.append(self.expect("IDENT", "a variable name").text)
        close = self.expect("]")
        if len(set(names)) != len(names):
            raise InputError("duplicate variable name", close.line, close.col)
        self.expect(";")
        self.session = SessionInput(Ring(coeff_field, names))

    def _poly_stmt(self):
        self.next()
        name_tok = self.expect("IDENT", "a polynomial name")
        name = self._declare(name_tok)
        self.expect("=")
        value = self._expr()
        self.expect(";")
        self.session.polys[name] = value

    def _ideal_stmt(self):
        self.next()
        name_tok = self.expect("IDENT", "an ideal name")
        name = self._declare(name_tok)
        self.expect("=")
        gens = [self._expr()]
        while self.peek().kind == ",":
            self.next()
            gens.append(self._expr())
        self.expect(";")
        self.session.ideals[name] = gens

    def _matrix_stmt(self):
        self.next()
        name_tok = self.expect("IDENT", "a matrix name")
        name = self._declare(name_tok)
        rows, cols = self._dims()
        self.expect("=")
        self.expect("[")
        data = [self._expr_list()]
        while self.peek().kind == ";":
            self.next()
            data.append(self._expr_list())
        self.expect("]")
        self.expect(";")
        if len(data) != rows or any(len(r) != cols for r in data):
            self.error(
                f"matrix {name!r} declared {rows}x{cols} but "
                f"given {len(data)} rows of sizes {[len(r) for r in data]}",
                name_tok)
        self.session.matrices[name] = PolyMatrix(self.session.ring, data)

    def _dims(self):
        """Parse `4x3` (lexed INT IDENT) or `4 x 3` (INT IDENT INT)."""
        rows_tok = self.expect("INT", "matrix dimensions like 4x3")
        rows = int(rows_tok.text)
        tok = self.expect("IDENT", "matrix dimensions like 4x3")
        if tok.text == "x":
            cols_tok = self.expect("INT", "a column count")
            return rows, int(cols_tok.text)
        if tok.text.startswith("x") and tok.text[1:].isdigit():
            return rows, int(tok.text[1:])
        self.error("expected matrix dimensions like 4x3", tok)

    def _expr_list(self):
        out = [self._expr()]
        while self.peek().kind == ",":
            self.next()
            out.append(self._expr())
        return out

    # -- expressions ------------------------------------------------------

    def _expr(self) -> Polynomial:
        negate = False
        if self.peek().kind == "-":
            self.next()
            negate = True
        value = self._term()
        if negate:
            value = -value
        while self.peek().kind in ("+", "-"):
            op = self.next()
            rhs = self._term()
            value = value + rhs if op.kind == "+" else value - rhs
        return value

    def _term(self) -> Polynomial:
        value = self._factor()
        while self.peek().kind == "*":
            self.next()
            value = value * self._factor()
        return value

    def _factor(self) -> Polynomial:
        base = self._base()
        if self.peek().kind == "^":
            caret = self.next()
            exp_tok = self.expect("INT", "an exponent")
            exp = int(exp_tok.text)
            if len(base) == 1:
                exps, coeff = next(iter(base.terms.items()))
                if coeff == base.ring.field.one:
                    return base.ring.monomial(tuple(e * exp for e in exps))
            if exp > 64 and len(base) > 1:
                raise InputError("exponent too large", caret.line, caret.col)
            return base**exp
        return base

    def _base(self) -> Polynomial:
        session = self._require_ring()
        ring = session.ring
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            num = int(tok.text)
            if self.peek().kind == "/":
                self.next()
                den_tok = self.expect("INT", "a denominator")
                den = int(den_tok.text)
                if den == 0:
                    raise InputError("zero denominator",
                                     den_tok.line, den_tok.col)
                return ring.const(Fraction(num, den))
            return ring.const(num)
        if tok.kind == "IDENT":
            self.next()
            if tok.text in ring._index:
                return ring.var(tok.text)
            if tok.text in session.polys:
                return session.polys[tok.text]
            if tok.text in session.ideals or tok.text in session.matrices:
                self.error(
                    f"{tok.text!r} names an ideal or matrix, not a polynomial",
                    tok)
            self.error(f"unknown name {tok.text!r}", tok)
        if tok.kind == "(":
            self.next()
            value = self._expr()
            self.expect(")")
            return value
        if tok.kind == "-":
            self.next()
            return -self._factor()
        self.error("expected a polynomial term")


def parse_session(source: str, field_override=None) -> SessionInput:
    """Parse a full session text; optionally force the coefficient field."""
    return _Parser(_tokenize(source), field_override).parse_session()


def parse_poly(ring: Ring, source: str) -> Polynomial:
    """Parse a single polynomial expression in the given ring."""
    parser = _Parser(_tokenize(source))
    parser.session = SessionInput(ring)
    value = parser._expr()
    parser.expect("EOF", "end of expression")
    return value
