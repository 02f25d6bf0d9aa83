"""Expression language for rational functions of ``z``.

Grammar (no implicit multiplication)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' exponent)?
    exponent := intlit ('^' exponent)?
    intlit := INT | '-' INT | '(' '-'? INT ')'
    atom   := INT | 'z' | '(' expr ')'

``^`` binds tighter than unary minus, so ``-z^2`` is ``-(z^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, multiplicity, poly_divmod, rational_roots, to_primitive_int
from .ratfun import RatFun


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class LowerError(ValueError):
    def __init__(self, message: str, text: str, span: tuple[int, int]):
        self.span = span
        self.fragment = text[span[0]:span[1]]
        super().__init__(f"{message}: {self.fragment!r} (offset {span[0]})")


# --- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    span: tuple[int, int]


@dataclass(frozen=True)
class Var:
    span: tuple[int, int]


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: tuple[int, int]


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    span: tuple[int, int]


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    span: tuple[int, int]


Expr = Num | Var | Neg | BinOp | Pow


# --- tokenizer ---------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # INT, VAR, OP, EOF
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], i))
            i = j
        elif c == "z":
            tokens.append(Token("VAR", c, i))
            i += 1
        elif c in "+-*/^()":
            tokens.append(Token("OP", c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", text, i)
    tokens.append(Token("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}")
        return self.advance()

    def error(self, message: str):
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.text)
        raise ParseError(f"{message}, found {found}", self.text, t.pos)

    def parse(self) -> Expr:
        if self.tok.kind == "EOF":
            raise ParseError("empty input", self.text, 0)
        e = self.expr()
        if self.tok.kind != "EOF":
            self.error("unexpected token")
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            right = self.term()
            left = BinOp(op, left, right, (left.span[0], right.span[1]))
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance().text
            right = self.unary()
            left = BinOp(op, left, right, (left.span[0], right.span[1]))
        return left

    def unary(self) -> Expr:
        if self.at("-"):
            start = self.advance().pos
            operand = self.unary()
            return Neg(operand, (start, operand.span[1]))
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at("^"):
            self.advance()
            k, end = self.exponent()
            return Pow(base, k, (base.span[0], end))
        return base

    def exponent(self) -> tuple[int, int]:
        start = self.tok.pos
        value, end = self.intlit()
        if self.at("^"):
            self.advance()
            k, end = self.exponent()
            if k < 0:
                raise ParseError("exponent must be an integer", self.text, start)
            value = value**k
        return value, end

    def intlit(self) -> tuple[int, int]:
        paren = self.at("(")
        if paren:
            self.advance()
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "INT":
            self.error("exponent must be an integer literal")
        t = self.advance()
        end = t.pos + len(t.text)
        if paren:
            end = self.expect(")").pos + 1
        return sign * int(t.text), end

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "INT":
            self.advance()
            return Num(int(t.text), (t.pos, t.pos + len(t.text)))
        if t.kind == "VAR":
            self.advance()
            return Var((t.pos, t.pos + 1))
        if self.at("("):
            self.advance()
            e = self.expr()
            close = self.expect(")")
            return _respan(e, (t.pos, close.pos + 1))
        self.error("expected a number, 'z' or '('")


def _respan(e: Expr, span) -> Expr:
    return type(e)(*[getattr(e, f) for f in e.__dataclass_fields__ if f != "span"], span)


def parse_expression(text: str) -> Expr:
    return _Parser(text).parse()


def lower(e: Expr, text: str = "") -> RatFun:
    """Evaluate an AST to a reduced rational function."""
    if isinstance(e, Num):
        return RatFun.const(e.value)
    if isinstance(e, Var):
        return RatFun.z()
    if isinstance(e, Neg):
        return -lower(e.operand, text)
    if isinstance(e, Pow):
        base = lower(e.base, text)
        if e.exponent < 0 and base.is_zero():
            raise LowerError("negative power of the zero function", text, e.span)
        return base**e.exponent
    left, right = lower(e.left, text), lower(e.right, text)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    if e.op == "*":
        return left * right
    if right.is_zero():
        raise LowerError("division by the zero function", text, e.right.span)
    return left / right


def parse_ratfun(text: str) -> RatFun:
    return lower(parse_expression(text), text)


# --- canonical printing ------------------------------------------------------

def _compact(p: Poly) -> str:
    return str(p).replace(" ", "")


def _factor_str(p: Poly, k: int = 1) -> str:
    if len([c for c in p.coeffs if c]) == 1 and p.lc == 1:
        body = "z" if p.degree == 1 else f"z^{p.degree}"
        if k == 1:
            return body
        return f"z^{p.degree * k}"
    body = f"({_compact(p)})"
    return body if k == 1 else f"{body}^{k}"


def _primitive(p: Poly) -> tuple[Fraction, Poly]:
    """``p = c * q`` with ``q`` primitive integer, positive leading coefficient."""
    ints = to_primitive_int(p)
    if ints[-1] < 0:
        ints = [-c for c in ints]
    q = Poly(ints)
    return p.lc / q.lc, q


def _factors(p: Poly, factor: bool) -> tuple[Fraction, list[str]]:
    c, q = _primitive(p)
    if q.degree == 0:
        return c, []
    if not factor:
        return c, [_factor_str(q)]
    parts = []
    for r in rational_roots(q):
        k = multiplicity(q, r)
        lin = Poly([-r.numerator, r.denominator])
        q, rem = poly_divmod(q, lin**k)
        assert rem.is_zero()
        parts.append(_factor_str(lin, k))
    # the cofactor keeps integer coefficients: q was divided by primitive factors
    c2, q = _primitive(q)
    c *= c2
    if q.degree > 0:
        parts.append(_factor_str(q))
    return c, parts


def format_ratfun(f: RatFun, *, factor: bool = True) -> str:
    """Canonical text: one rational scalar times integer-primitive factors.

    With ``factor`` the rational-root linear factors are split out (sorted by
    root) ahead of the expanded cofactor; otherwise numerator and denominator
    are printed fully expanded.  Output re-parses to the same function.
    """
    if f.is_zero():
        return "0"
    cn, num = _factors(f.num, factor)
    cd, den = _factors(f.den, factor)
    c = cn / cd
    if not num:
        head = str(c)
    elif c == 1:
        head = "*".join(num)
    elif c == -1:
        head = "-" + "*".join(num)
    else:
        head = f"{c}*" + "*".join(num)
    if not den:
        if c == 1 and len(num) == 1 and head.startswith("(") and head.endswith(")"):
            return head[1:-1]
        return head
    if len(den) == 1:
        return f"{head}/{den[0]}"
    return f"{head}/({'*'.join(den)})"
