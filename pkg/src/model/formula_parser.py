"""Text form of formulas.

    formula := atom | "~" formula
             | "(" formula (("&" | "|") formula)+ ")"
             | "A" var "." formula | "E" var "." formula
             | "E<=" nat "[" var {"," var} "]" "." formula
    atom    := "R" nat "(" var {"," var} ")" | var "=" var
    var     := "v" nat

A parenthesised group uses one connective throughout.
"""

import re
from dataclasses import dataclass
from typing import List, Optional

from src.model.errors import FormulaSyntaxError, InvalidStructureError
from src.model.formula import (
    And,
    Eq,
    Exists,
    ExistsAtMost,
    ForAll,
    Formula,
    Not,
    Or,
    Rel,
)

_TOKEN_RE = re.compile(r"E<=|v\d+|R\d+|\d+|[AE~()&|.\[\],=]")


class TokenType:
    """Token type constants"""

    AT_MOST = "at_most"
    VAR = "var"
    REL = "rel"
    NAT = "nat"
    SYMBOL = "symbol"
    END = "end"


@dataclass(frozen=True)
class Token:
    type: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        word = match.group(0)
        if word == "E<=":
            kind = TokenType.AT_MOST
        elif word[0] == "v":
            kind = TokenType.VAR
        elif word[0] == "R":
            kind = TokenType.REL
        elif word.isdigit():
            kind = TokenType.NAT
        else:
            kind = TokenType.SYMBOL
        tokens.append(Token(kind, word, pos))
        pos = match.end()
    tokens.append(Token(TokenType.END, "", len(text)))
    return tokens


class FormulaParser:
    """Recursive descent parser over a token list"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def parse(self) -> Formula:
        formula = self._formula()
        token = self._peek()
        if token.type != TokenType.END:
            raise FormulaSyntaxError(
                f"unexpected {token.text!r} after formula", token.position
            )
        return formula

    def _peek(self) -> Token:
        return self.tokens[self.index]

    def _next(self) -> Token:
        token = self.tokens[self.index]
        if token.type != TokenType.END:
            self.index += 1
        return token

    def _expect(self, text: str) -> Token:
        token = self._next()
        if token.text != text or token.type != TokenType.SYMBOL:
            found = token.text or "end of input"
            raise FormulaSyntaxError(
                f"expected {text!r}, found {found!r}", token.position
            )
        return token

    def _var(self) -> int:
        token = self._next()
        if token.type != TokenType.VAR:
            found = token.text or "end of input"
            raise FormulaSyntaxError(
                f"expected a variable, found {found!r}", token.position
            )
        return int(token.text[1:])

    def _var_list(self) -> List[int]:
        variables = [self._var()]
        while self._peek().text == ",":
            self._next()
            variables.append(self._var())
        return variables

    def _formula(self) -> Formula:
        token = self._peek()
        if token.type == TokenType.SYMBOL:
            if token.text == "~":
                self._next()
                return Not(self._formula())
            if token.text == "(":
                return self._group()
            if token.text in ("A", "E"):
                self._next()
                var = self._var()
                self._expect(".")
                body = self._formula()
                return ForAll(var, body) if token.text == "A" else Exists(var, body)
        if token.type == TokenType.AT_MOST:
            return self._at_most()
        if token.type == TokenType.REL:
            self._next()
            self._expect("(")
            args = self._var_list()
            self._expect(")")
            return Rel(int(token.text[1:]), tuple(args))
        if token.type == TokenType.VAR:
            left = self._var()
            self._expect("=")
            return Eq(left, self._var())
        found = token.text or "end of input"
        raise FormulaSyntaxError(f"expected a formula, found {found!r}", token.position)

    def _group(self) -> Formula:
        opening = self._expect("(")
        parts = [self._formula()]
        op: Optional[str] = None
        while True:
            token = self._next()
            if token.type == TokenType.SYMBOL and token.text == ")":
                break
            if token.type != TokenType.SYMBOL or token.text not in ("&", "|"):
                found = token.text or "end of input"
                raise FormulaSyntaxError(
                    f"expected '&', '|' or ')', found {found!r}", token.position
                )
            if op is not None and token.text != op:
                raise FormulaSyntaxError(
                    "mixed '&' and '|' in one group", token.position
                )
            op = token.text
            parts.append(self._formula())
        if op is None:
            raise FormulaSyntaxError(
                "parenthesised group needs two or more parts", opening.position
            )
        return And(tuple(parts)) if op == "&" else Or(tuple(parts))

    def _at_most(self) -> Formula:
        start = self._next()
        token = self._next()
        if token.type != TokenType.NAT:
            raise FormulaSyntaxError("expected a bound after 'E<='", token.position)
        self._expect("[")
        block = self._var_list()
        self._expect("]")
        self._expect(".")
        body = self._formula()
        try:
            return ExistsAtMost(int(token.text), tuple(block), body)
        except InvalidStructureError as e:
            raise FormulaSyntaxError(str(e), start.position)


def parse(text: str) -> Formula:
    return FormulaParser(text).parse()


def serialize(phi: Formula) -> str:
    return phi.to_text()
