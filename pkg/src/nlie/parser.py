"""Text form of polynomials: tokenizer and recursive-descent parser.

Grammar, loosest binding first:

    expr    := term (('+' | '-') term)*
    term    := '-' term | product
    product := factor (('*' factor) | factor)*      -- juxtaposition multiplies
    factor  := atom ('^' INT)?
    atom    := INT ('/' INT)? | IDENT | '(' expr ')'

so '^' binds tighter than multiplication, which binds tighter than unary
minus, which binds tighter than binary '+'/'-'.  '/' only forms rational
literals from two integer tokens.  Exponents are non-negative integers.

An identifier is a letter, optional digits, and at most one trailing
prime: x, e2, x'.  A maximal alphanumeric run lexes greedily into such
identifiers, so "2ef" is 2*e*f and "x12" is one variable.  When the
variable context is known, longest-match against its names is tried
first, which admits multi-letter names.

Errors carry the byte offset into the source and the set of token kinds
that would have been acceptable there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .poly import Polynomial, VarContext


class ParseError(ValueError):
    """Syntax error with byte offset and expected-token kinds."""

    def __init__(self, message: str, offset: int, expected: Sequence[str] = ()):
        self.offset = offset
        self.expected: FrozenSet[str] = frozenset(expected)
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += " (expected " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(detail)


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'ident', '+', '-', '*', '^', '/', '(', ')', 'end'
    text: str
    pos: int


_OPS = set("+-*^/()")

_ATOM_START = ("integer", "variable", "(")


def tokenize(src: str, names: Optional[Sequence[str]] = None) -> List[Token]:
    """Split source into tokens.

    Args:
        src: expression text (ASCII).
        names: optional known variable names for longest-match lexing.

    Raises:
        ParseError: on a character that starts no token.
    """
    by_len = sorted(names, key=len, reverse=True) if names else []
    toks: List[Token] = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch in _OPS:
            toks.append(Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and src[j].isdigit():
                j += 1
            toks.append(Token("int", src[i:j], i))
            i = j
            continue
        if ch.isalpha():
            matched = None
            for nm in by_len:
                if src.startswith(nm, i):
                    matched = nm
                    break
            if matched is None:
                j = i + 1
                while j < n and src[j].isdigit():
                    j += 1
                if j < n and src[j] == "'":
                    j += 1
                matched = src[i:j]
            toks.append(Token("ident", matched, i))
            i += len(matched)
            continue
        raise ParseError(f"unexpected character {ch!r}", i,
                         ("integer", "variable", "operator", "(", ")"))
    toks.append(Token("end", "", n))
    return toks


class _Parser:
    def __init__(self, toks: List[Token], ctx: VarContext):
        self.toks = toks
        self.pos = 0
        self.ctx = ctx

    def peek(self) -> Token:
        return self.toks[self.pos]

    def advance(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, expected: Sequence[str]) -> ParseError:
        t = self.peek()
        what = "end of input" if t.kind == "end" else f"{t.text!r}"
        return ParseError(f"unexpected {what}", t.pos, expected)

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek().kind != "end":
            raise self.fail(("+", "-", "*", "^", "end"))
        return p

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        if self.peek().kind == "-":
            self.advance()
            return -self.term()
        return self.product()

    def product(self) -> Polynomial:
        acc = self.factor()
        while True:
            t = self.peek()
            if t.kind == "*":
                self.advance()
                acc = acc * self.factor()
            elif t.kind in ("ident", "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            t = self.peek()
            if t.kind != "int":
                raise self.fail(("integer",))
            self.advance()
            return base ** int(t.text)
        return base

    def atom(self) -> Polynomial:
        t = self.peek()
        if t.kind == "int":
            self.advance()
            num = int(t.text)
            if self.peek().kind == "/":
                self.advance()
                d = self.peek()
                if d.kind != "int":
                    raise self.fail(("integer",))
                self.advance()
                den = int(d.text)
                if den == 0:
                    raise ParseError("zero denominator", d.pos, ("nonzero integer",))
                return self.ctx.constant(Fraction(num, den))
            return self.ctx.constant(num)
        if t.kind == "ident":
            self.advance()
            if t.text not in self.ctx.names:
                raise ParseError(f"unknown variable {t.text!r}", t.pos,
                                 ("one of " + ", ".join(self.ctx.names),))
            return self.ctx.variable(t.text)
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            if self.peek().kind != ")":
                raise self.fail((")",))
            self.advance()
            return inner
        raise self.fail(_ATOM_START)


def parse_polynomial(src: str, ctx: VarContext) -> Polynomial:
    """Parse an expression into a polynomial over the given context.

    Raises:
        ParseError: on any lexical or syntactic problem, with byte offset.
    """
    toks = tokenize(src, ctx.names)
    return _Parser(toks, ctx).parse()


def infer_context(src: str) -> VarContext:
    """Variable context from an expression: its identifiers, sorted by name."""
    names = sorted({t.text for t in tokenize(src) if t.kind == "ident"})
    if not names:
        raise ParseError("expression mentions no variables", 0, ("variable",))
    return VarContext(tuple(names))
