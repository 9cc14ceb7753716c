"""A small expression language over rotor arithmetic.

Chains replace addition/subtraction: every infix symbol is a rotor, and
"a OP b" means a + rotor(OP)*b. `/` and `\\` are third-turns (not division),
`_`/`~` quarter-turns, and both `-` and `=` are the half turn, kept lexically
distinct. `*` and `^` keep their usual meanings. Constants: I = exp(i pi/3),
J = exp(i pi/4), i, and the generic literal rot(k,n) = exp(i 2 pi k/n).

Grammar:
    expr   := [opsym] term { opsym term }
    term   := factor { "*" factor }
    factor := atom [ "^" int ]
    atom   := number | "I" | "J" | "i" | "rot" "(" int "," int ")" | "(" expr ")"
    opsym  := "+" | "-" | "/" | "\\" | "_" | "~" | "="
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import EvaluationError, LexError, ParseError
from .unity import Rotor, rotor_value

OPSYM_ROTORS = {
    "+": Rotor(0, 1),
    "-": Rotor(1, 2),
    "/": Rotor(1, 3),
    "\\": Rotor(2, 3),
    "_": Rotor(1, 4),
    "~": Rotor(3, 4),
    "=": Rotor(1, 2),
}

CONST_ROTORS = {
    "I": Rotor(1, 6),
    "J": Rotor(1, 8),
    "i": Rotor(1, 4),
}


@dataclass(frozen=True)
class Token:
    kind: str  # number | opsym | star | caret | lparen | rparen | ident | rotkw | comma
    lexeme: str
    span: tuple[int, int]


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Const:
    name: str  # I | J | i


@dataclass(frozen=True)
class Rot:
    """A rot(num,den) literal, kept as written; canonicalized at evaluation."""

    num: int
    den: int


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Chain:
    """Alternating opsym/term sequence; the first opsym may be an explicit unary."""

    items: tuple[tuple[str, "Expr"], ...]


Expr = Union[Number, Const, Rot, Mul, Pow, Chain]

_NUMBER = re.compile(r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?")
_WORD = re.compile(r"[A-Za-z]+")
_SINGLE = {"*": "star", "^": "caret", "(": "lparen", ")": "rparen", ",": "comma"}


def tokenize(text: str) -> list[Token]:
    """Split text into tokens; spans are offsets into the input."""
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            m = _NUMBER.match(text, pos)
            tokens.append(Token("number", m.group(), (pos, m.end())))
            pos = m.end()
            continue
        if ch in OPSYM_ROTORS:
            tokens.append(Token("opsym", ch, (pos, pos + 1)))
            pos += 1
            continue
        if ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, (pos, pos + 1)))
            pos += 1
            continue
        m = _WORD.match(text, pos)
        if m is not None:
            word = m.group()
            if word == "rot":
                tokens.append(Token("rotkw", word, (pos, m.end())))
            elif word in CONST_ROTORS:
                tokens.append(Token("ident", word, (pos, m.end())))
            else:
                raise LexError(f"unknown name {word!r}", (pos, m.end()))
            pos = m.end()
            continue
        raise LexError(f"unrecognized character {ch!r}", (pos, pos + 1))
    return tokens


class _Parser:
    """Recursive-descent parser over the token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token | None:
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def fail(self, expected: set[str]):
        tok = self.peek()
        span = tok.span if tok else (len(self.text), len(self.text))
        found = tok.lexeme if tok else "end of input"
        raise ParseError(
            f"expected {', '.join(sorted(expected))}, found {found!r}",
            span, frozenset(expected),
        )

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            self.fail({kind})
        return self.next()

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek() is not None:
            self.fail({"opsym", "*", "^", "end of input"})
        return e

    def expr(self) -> Expr:
        items = []
        leading = None
        tok = self.peek()
        if tok is not None and tok.kind == "opsym":
            leading = self.next().lexeme
        items.append((leading or "+", self.term()))
        while (tok := self.peek()) is not None and tok.kind == "opsym":
            op = self.next().lexeme
            items.append((op, self.term()))
        # a lone term under a "+" (implicit or written) is just the term
        if len(items) == 1 and items[0][0] == "+":
            return items[0][1]
        return Chain(tuple(items))

    def term(self) -> Expr:
        e = self.factor()
        while (tok := self.peek()) is not None and tok.kind == "star":
            self.next()
            e = Mul(e, self.factor())
        return e

    def factor(self) -> Expr:
        e = self.atom()
        if (tok := self.peek()) is not None and tok.kind == "caret":
            self.next()
            e = Pow(e, self.signed_int())
        return e

    def atom(self) -> Expr:
        tok = self.peek()
        if tok is None:
            self.fail({"number", "I", "J", "i", "rot", "("})
        if tok.kind == "number":
            self.next()
            return Number(float(tok.lexeme))
        if tok.kind == "ident":
            self.next()
            return Const(tok.lexeme)
        if tok.kind == "rotkw":
            self.next()
            self.expect("lparen")
            num = self.signed_int()
            self.expect("comma")
            den = self.signed_int()
            self.expect("rparen")
            return Rot(num, den)
        if tok.kind == "lparen":
            self.next()
            e = self.expr()
            self.expect("rparen")
            return e
        self.fail({"number", "I", "J", "i", "rot", "("})

    def signed_int(self) -> int:
        sign = 1
        tok = self.peek()
        if tok is not None and tok.kind == "opsym" and tok.lexeme in "+-":
            sign = -1 if tok.lexeme == "-" else 1
            self.next()
            tok = self.peek()
        if tok is None or tok.kind != "number" or not tok.lexeme.isdigit():
            self.fail({"integer"})
        self.next()
        return sign * int(tok.lexeme)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def evaluate(e: Expr) -> complex:
    """Floating value of an expression tree."""
    if isinstance(e, Number):
        return complex(e.value)
    if isinstance(e, Const):
        return rotor_value(CONST_ROTORS[e.name])
    if isinstance(e, Rot):
        return rotor_value(Rotor(e.num, e.den))
    if isinstance(e, Mul):
        return evaluate(e.left) * evaluate(e.right)
    if isinstance(e, Pow):
        base = evaluate(e.base)
        if base == 0 and e.exponent < 0:
            raise EvaluationError("zero base with negative exponent")
        return base ** e.exponent
    if isinstance(e, Chain):
        total = 0j
        for op, item in e.items:
            total += rotor_value(OPSYM_ROTORS[op]) * evaluate(item)
        return total
    raise TypeError(f"not an expression node: {e!r}")


def _fmt_number(value: float) -> str:
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_expr(e: Expr) -> str:
    """Canonical text; parse(format_expr(e)) is structurally equal to e."""
    if isinstance(e, Number):
        return _fmt_number(e.value)
    if isinstance(e, Const):
        return e.name
    if isinstance(e, Rot):
        return f"rot({e.num},{e.den})"
    if isinstance(e, Pow):
        base = format_expr(e.base)
        if not isinstance(e.base, (Number, Const, Rot)):
            base = f"({base})"
        return f"{base}^{e.exponent}"
    if isinstance(e, Mul):
        left = format_expr(e.left)
        if isinstance(e.left, Chain):
            left = f"({left})"
        right = format_expr(e.right)
        if isinstance(e.right, (Chain, Mul)):
            right = f"({right})"
        return f"{left}*{right}"
    if isinstance(e, Chain):
        parts = []
        for idx, (op, item) in enumerate(e.items):
            text = format_expr(item)
            if isinstance(item, Chain):
                text = f"({text})"
            if idx == 0:
                parts.append(text if op == "+" else f"{op}{text}")
            else:
                parts.append(f" {op} {text}")
        return "".join(parts)
    raise TypeError(f"not an expression node: {e!r}")
