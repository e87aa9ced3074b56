"""Text to Formula and back.

Grammar (EBNF), loosest to tightest binding, with -> right-associative and
& | left-associative:

    formula := imp
    imp     := or ( IMP imp )?
    or      := and ( OR and )*
    and     := neg ( AND neg )*
    neg     := NOT neg | atom
    atom    := LETTER | TOP | BOTTOM | "(" formula ")"

Tokens accept ASCII and Unicode spellings interchangeably:
IMP = `->` | `→`, OR = `|` | `∨`, AND = `&` | `∧`, NOT = `~` | `¬`,
TOP = `T` | `⊤`, BOTTOM = `F` | `⊥`.  Letters are lowercase-initial
identifiers, so the uppercase constant tokens stay unambiguous.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import LimitError, ParseError
from .formula import (
    BOTTOM,
    TOP,
    And,
    Bottom,
    Formula,
    Imp,
    Letter,
    Not,
    Or,
    Top,
    letters,
)
from .limits import max_letters


class SyntaxStyle(Enum):
    ASCII = "ascii"
    UNICODE = "unicode"


_WORD = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_LETTER_WORD = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")

_SINGLE_GLYPHS = {
    "→": "IMP",
    "∨": "OR",
    "|": "OR",
    "∧": "AND",
    "&": "AND",
    "¬": "NOT",
    "~": "NOT",
    "⊤": "TOP",
    "⊥": "BOTTOM",
    "(": "LPAREN",
    ")": "RPAREN",
}

# Canonical spellings used in expected-token sets of parse errors.
_SPELLING = {
    "IMP": "'->'",
    "OR": "'|'",
    "AND": "'&'",
    "NOT": "'~'",
    "TOP": "'T'",
    "BOTTOM": "'F'",
    "LPAREN": "'('",
    "RPAREN": "')'",
    "LETTER": "letter",
    "EOF": "end of input",
}

_ATOM_STARTERS = frozenset(
    _SPELLING[k] for k in ("NOT", "TOP", "BOTTOM", "LPAREN", "LETTER")
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int  # UTF-8 byte offset into the source


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        offset = _byte_offset(text, pos)
        if ch == "-":
            if text.startswith("->", pos):
                tokens.append(_Token("IMP", "->", offset))
                pos += 2
                continue
            raise ParseError(f"stray {ch!r}", offset, frozenset({_SPELLING['IMP']}))
        if ch in _SINGLE_GLYPHS:
            tokens.append(_Token(_SINGLE_GLYPHS[ch], ch, offset))
            pos += 1
            continue
        word = _WORD.match(text, pos)
        if word:
            name = word.group()
            if name == "T":
                tokens.append(_Token("TOP", name, offset))
            elif name == "F":
                tokens.append(_Token("BOTTOM", name, offset))
            elif _LETTER_WORD.match(name):
                tokens.append(_Token("LETTER", name, offset))
            else:
                raise ParseError(
                    f"invalid letter name {name!r} (letters start lowercase)", offset
                )
            pos = word.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", offset)
    tokens.append(_Token("EOF", "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: frozenset[str]) -> ParseError:
        tok = self.peek()
        what = "end of input" if tok.kind == "EOF" else f"{tok.text!r}"
        return ParseError(f"unexpected {what}", tok.offset, expected)

    def imp(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "IMP":
            self.advance()
            return Imp(left, self.imp())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.peek().kind == "OR":
            self.advance()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.negation()
        while self.peek().kind == "AND":
            self.advance()
            left = And(left, self.negation())
        return left

    def negation(self) -> Formula:
        if self.peek().kind == "NOT":
            self.advance()
            return Not(self.negation())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok.kind == "LETTER":
            self.advance()
            return Letter(tok.text)
        if tok.kind == "TOP":
            self.advance()
            return TOP
        if tok.kind == "BOTTOM":
            self.advance()
            return BOTTOM
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.imp()
            if self.peek().kind != "RPAREN":
                raise self.fail(
                    frozenset({_SPELLING[k] for k in ("RPAREN", "IMP", "OR", "AND")})
                )
            self.advance()
            return inner
        raise self.fail(_ATOM_STARTERS)


def parse(text: str) -> Formula:
    """Parse per the module grammar; whitespace between tokens is ignored."""
    parser = _Parser(_tokenize(text))
    f = parser.imp()
    if parser.peek().kind != "EOF":
        raise parser.fail(
            frozenset({_SPELLING[k] for k in ("IMP", "OR", "AND", "EOF")})
        )
    if len(letters(f)) > max_letters():
        raise LimitError(
            f"formula uses {len(letters(f))} distinct letters, limit is {max_letters()}"
        )
    return f


_GLYPHS = {
    SyntaxStyle.ASCII: {"not": "~", "and": "&", "or": "|", "imp": "->", "top": "T", "bottom": "F"},
    SyntaxStyle.UNICODE: {"not": "¬", "and": "∧", "or": "∨", "imp": "→", "top": "⊤", "bottom": "⊥"},
}

# Binding strength; parenthesization in render compares these.
_PREC_ATOM = 5
_PREC_NOT = 4
_PREC_AND = 3
_PREC_OR = 2
_PREC_IMP = 1


def _prec(f: Formula) -> int:
    if isinstance(f, Not):
        return _PREC_NOT
    if isinstance(f, And):
        return _PREC_AND
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, Imp):
        return _PREC_IMP
    return _PREC_ATOM


def render(f: Formula, style: SyntaxStyle = SyntaxStyle.ASCII) -> str:
    """Minimal-parentheses text that reparses to a structurally equal formula.

    The one extra pair: a nested implication is always parenthesized, on either
    side, so chains read the way they group instead of leaning on the grammar's
    right-associativity.
    """
    g = _GLYPHS[style]

    def wrap(child: Formula, needed: bool) -> str:
        text = go(child)
        return f"({text})" if needed else text

    def go(node: Formula) -> str:
        if isinstance(node, Letter):
            return node.name
        if isinstance(node, Top):
            return g["top"]
        if isinstance(node, Bottom):
            return g["bottom"]
        if isinstance(node, Not):
            return g["not"] + wrap(node.child, _prec(node.child) < _PREC_NOT)
        if isinstance(node, And):
            left = wrap(node.left, _prec(node.left) < _PREC_AND)
            right = wrap(node.right, _prec(node.right) <= _PREC_AND)
            return f"{left} {g['and']} {right}"
        if isinstance(node, Or):
            left = wrap(node.left, _prec(node.left) < _PREC_OR)
            right = wrap(node.right, _prec(node.right) <= _PREC_OR)
            return f"{left} {g['or']} {right}"
        if isinstance(node, Imp):
            left = wrap(node.antecedent, _prec(node.antecedent) <= _PREC_IMP)
            right = wrap(node.consequent, _prec(node.consequent) <= _PREC_IMP)
            return f"{left} {g['imp']} {right}"
        raise TypeError(f"not a formula: {node!r}")

    return go(f)
