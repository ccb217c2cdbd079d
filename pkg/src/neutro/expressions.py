"""Propositional expression language over triples.

Syntax::

    P & Q                 conjunction          (also: AND)
    P |w Q                weak disjunction     (also: OR)
    P |s Q                strong disjunction   (also: XOR)
    P -> Q                implication          (also: IMPLIES)
    P <-> Q               equivalence          (also: IFF)
    P !& Q                sheffer stroke       (also: NAND)
    P !| Q                joint denial         (also: NOR)
    !P                    negation             (also: NOT)
    (0.25,0.40,0.35)      triple literal
    (25,40,35)%           triple literal in percent

Precedence, tightest first: ``!``; ``&`` and ``!&``; ``|s``; ``|w`` and
``!|``; ``->`` (right-associative); ``<->``.  All other binary operators
associate to the left.  Keyword aliases are uppercase only; a lowercase
``and`` is an ordinary identifier.

Identifiers are ``[A-Za-z_][A-Za-z0-9_]*``.  A ``(`` that is followed
(after spaces) by a digit or ``.`` opens a triple literal, otherwise it
groups.  Lex and parse errors carry the exact 0-based offset of the first
character that cannot continue a valid token or the grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .connectors import ConnectorKind, apply_binary, negate
from .errors import LexError, NeutroError, ParseError, UnboundAtom
from .values import NeutrosophicTriple, from_percent, make_triple


class TokenKind(Enum):
    IDENT = "identifier"
    TRIPLE = "triple literal"
    NOT = "!"
    AND = "&"
    OR = "|w"
    XOR = "|s"
    IMPLIES = "->"
    IFF = "<->"
    NAND = "!&"
    NOR = "!|"
    LPAREN = "("
    RPAREN = ")"
    END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    position: int
    value: NeutrosophicTriple | None = None


_KEYWORDS = {
    "NOT": TokenKind.NOT,
    "AND": TokenKind.AND,
    "OR": TokenKind.OR,
    "XOR": TokenKind.XOR,
    "IMPLIES": TokenKind.IMPLIES,
    "IFF": TokenKind.IFF,
    "NAND": TokenKind.NAND,
    "NOR": TokenKind.NOR,
}

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER_RE = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


def _skip_spaces(source: str, k: int) -> int:
    while k < len(source) and source[k].isspace():
        k += 1
    return k


class _Lexer:
    def __init__(self, source: str, percent: bool):
        self.source = source
        self.percent = percent
        self.pos = 0

    def run(self) -> list[Token]:
        tokens: list[Token] = []
        while True:
            self.pos = _skip_spaces(self.source, self.pos)
            if self.pos >= len(self.source):
                tokens.append(Token(TokenKind.END, "", len(self.source)))
                return tokens
            tokens.append(self._next_token())

    def _next_token(self) -> Token:
        src, start = self.source, self.pos
        ch = src[start]
        if ch == "(":
            after = _skip_spaces(src, start + 1)
            if after < len(src) and (src[after].isdigit() or src[after] == "."):
                return self._triple_literal()
            self.pos = start + 1
            return Token(TokenKind.LPAREN, "(", start)
        if ch == ")":
            self.pos = start + 1
            return Token(TokenKind.RPAREN, ")", start)
        if ch == "!":
            nxt = src[start + 1] if start + 1 < len(src) else ""
            if nxt == "&":
                self.pos = start + 2
                return Token(TokenKind.NAND, "!&", start)
            if nxt == "|":
                self.pos = start + 2
                return Token(TokenKind.NOR, "!|", start)
            self.pos = start + 1
            return Token(TokenKind.NOT, "!", start)
        if ch == "&":
            self.pos = start + 1
            return Token(TokenKind.AND, "&", start)
        if ch == "|":
            nxt = src[start + 1] if start + 1 < len(src) else ""
            if nxt == "w":
                self.pos = start + 2
                return Token(TokenKind.OR, "|w", start)
            if nxt == "s":
                self.pos = start + 2
                return Token(TokenKind.XOR, "|s", start)
            raise LexError("expected 'w' or 's' after '|'", start + 1)
        if ch == "-":
            if start + 1 < len(src) and src[start + 1] == ">":
                self.pos = start + 2
                return Token(TokenKind.IMPLIES, "->", start)
            raise LexError("expected '>' after '-'", start + 1)
        if ch == "<":
            if start + 1 >= len(src) or src[start + 1] != "-":
                raise LexError("expected '-' after '<'", start + 1)
            if start + 2 >= len(src) or src[start + 2] != ">":
                raise LexError("expected '>' after '<-'", start + 2)
            self.pos = start + 3
            return Token(TokenKind.IFF, "<->", start)
        match = _IDENT_RE.match(src, start)
        if match:
            name = match.group()
            self.pos = match.end()
            keyword = _KEYWORDS.get(name)
            if keyword is not None:
                return Token(keyword, name, start)
            return Token(TokenKind.IDENT, name, start)
        raise LexError(f"unexpected character {ch!r}", start)

    def _number(self) -> float:
        match = _NUMBER_RE.match(self.source, self.pos)
        if not match:
            raise LexError("expected a number in triple literal", self.pos)
        self.pos = match.end()
        return float(match.group())

    def _expect_char(self, wanted: str) -> None:
        if self.pos >= len(self.source) or self.source[self.pos] != wanted:
            raise LexError(f"expected {wanted!r} in triple literal", self.pos)
        self.pos += 1

    def _triple_literal(self) -> Token:
        src, start = self.source, self.pos
        self.pos = start + 1
        components = []
        for idx in range(3):
            self.pos = _skip_spaces(src, self.pos)
            components.append(self._number())
            self.pos = _skip_spaces(src, self.pos)
            self._expect_char("," if idx < 2 else ")")
        is_percent = self.pos < len(src) and src[self.pos] == "%"
        if is_percent:
            self.pos += 1
        t, i, f = components
        try:
            if is_percent or self.percent:
                value = from_percent(t, i, f)
            else:
                value = make_triple(t, i, f)
        except NeutroError as exc:
            raise LexError(f"invalid triple literal: {exc}", start) from exc
        return Token(TokenKind.TRIPLE, src[start : self.pos], start, value)


def tokenize(source: str, *, percent: bool = False) -> list[Token]:
    """Split source text into tokens; the list always ends with an END token.

    With ``percent=True``, unsuffixed triple literals are read as percent
    components; a ``%`` suffix forces percent reading in either mode.
    """
    return _Lexer(source, percent).run()


class Expr:
    """Base class for expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Expr):
    name: str
    position: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Literal(Expr):
    value: NeutrosophicTriple


@dataclass(frozen=True)
class Not(Expr):
    operand: Expr


@dataclass(frozen=True)
class And(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Or(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Xor(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Implies(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Iff(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Nand(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Nor(Expr):
    left: Expr
    right: Expr


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def parse(self) -> Expr:
        expr = self._iff()
        end = self.peek()
        if end.kind is not TokenKind.END:
            raise ParseError(
                f"expected an operator or end of input, found {end.lexeme!r}",
                end.position,
            )
        return expr

    def _iff(self) -> Expr:
        node = self._implies()
        while self.peek().kind is TokenKind.IFF:
            self.advance()
            node = Iff(node, self._implies())
        return node

    def _implies(self) -> Expr:
        node = self._or()
        if self.peek().kind is TokenKind.IMPLIES:
            self.advance()
            return Implies(node, self._implies())
        return node

    def _or(self) -> Expr:
        node = self._xor()
        while self.peek().kind in (TokenKind.OR, TokenKind.NOR):
            cls = Or if self.advance().kind is TokenKind.OR else Nor
            node = cls(node, self._xor())
        return node

    def _xor(self) -> Expr:
        node = self._and()
        while self.peek().kind is TokenKind.XOR:
            self.advance()
            node = Xor(node, self._and())
        return node

    def _and(self) -> Expr:
        node = self._unary()
        while self.peek().kind in (TokenKind.AND, TokenKind.NAND):
            cls = And if self.advance().kind is TokenKind.AND else Nand
            node = cls(node, self._unary())
        return node

    def _unary(self) -> Expr:
        if self.peek().kind is TokenKind.NOT:
            self.advance()
            return Not(self._unary())
        return self._primary()

    def _primary(self) -> Expr:
        token = self.peek()
        if token.kind is TokenKind.IDENT:
            self.advance()
            return Atom(token.lexeme, token.position)
        if token.kind is TokenKind.TRIPLE:
            self.advance()
            assert token.value is not None
            return Literal(token.value)
        if token.kind is TokenKind.LPAREN:
            self.advance()
            node = self._iff()
            closing = self.peek()
            if closing.kind is not TokenKind.RPAREN:
                raise ParseError(
                    f"expected ')', found {closing.lexeme or 'end of input'!r}",
                    closing.position,
                )
            self.advance()
            return node
        raise ParseError(
            f"expected an atom, literal, '!' or '(', found "
            f"{token.lexeme or 'end of input'!r}",
            token.position,
        )


def parse(tokens: list[Token]) -> Expr:
    """Build an expression tree from a token list produced by :func:`tokenize`."""
    return _Parser(tokens).parse()


def parse_text(source: str, *, percent: bool = False) -> Expr:
    """Tokenize and parse in one step."""
    return parse(tokenize(source, percent=percent))


_BINARY_KIND = {
    And: ConnectorKind.CONJUNCTION,
    Or: ConnectorKind.WEAK_DISJUNCTION,
    Xor: ConnectorKind.STRONG_DISJUNCTION,
    Implies: ConnectorKind.IMPLICATION,
    Iff: ConnectorKind.EQUIVALENCE,
    Nand: ConnectorKind.SHEFFER,
    Nor: ConnectorKind.PEIRCE,
}


def evaluate(
    expr: Expr, env: Mapping[str, NeutrosophicTriple] | None = None
) -> NeutrosophicTriple:
    """Evaluate an expression tree against atom bindings."""
    env = env or {}
    if isinstance(expr, Atom):
        try:
            return env[expr.name]
        except KeyError:
            raise UnboundAtom(expr.name, expr.position if expr.position >= 0 else None)
    if isinstance(expr, Literal):
        return expr.value
    if isinstance(expr, Not):
        return negate(evaluate(expr.operand, env))
    kind = _BINARY_KIND.get(type(expr))
    if kind is None:
        raise TypeError(f"not an expression node: {expr!r}")
    return apply_binary(kind, evaluate(expr.left, env), evaluate(expr.right, env))


# Binding strength per node type; atoms and literals are never parenthesized.
_LEVEL = {Iff: 1, Implies: 2, Or: 3, Nor: 3, Xor: 4, And: 5, Nand: 5}
_OP_TEXT = {
    And: "&",
    Nand: "!&",
    Or: "|w",
    Nor: "!|",
    Xor: "|s",
    Implies: "->",
    Iff: "<->",
}
_ATOM_LEVEL = 7
_NOT_LEVEL = 6


def _format_number(x: float) -> str:
    # Ulp-level noise tolerated by validation would not re-lex; snap it out.
    if x < 0.0:
        x = 0.0
    elif x > 1.0:
        x = 1.0
    return repr(x)


def _render(node: Expr, min_level: int) -> str:
    if isinstance(node, Atom):
        return node.name
    if isinstance(node, Literal):
        v = node.value
        return f"({_format_number(v.t)},{_format_number(v.i)},{_format_number(v.f)})"
    if isinstance(node, Not):
        return "!" + _render(node.operand, _NOT_LEVEL)
    level = _LEVEL[type(node)]
    op = _OP_TEXT[type(node)]
    if isinstance(node, Implies):
        text = f"{_render(node.left, level + 1)} {op} {_render(node.right, level)}"
    else:
        text = f"{_render(node.left, level)} {op} {_render(node.right, level + 1)}"
    if level < min_level:
        return f"({text})"
    return text


def format_expr(expr: Expr) -> str:
    """Render a tree with minimal parentheses; parsing the output rebuilds the tree."""
    return _render(expr, 0)
