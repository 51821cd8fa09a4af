"""Text notation for Laurent polynomials.

Grammar (whitespace between tokens is ignored)::

    poly := term ('+' term)*
    term := nat | nat? 'x' ('^' int)?
    nat  := [1-9][0-9]*
    int  := '-'? nat | '0'

The literal ``0`` on its own denotes the zero polynomial, so that
``parse_poly(format_poly(f)) == f`` holds for every ``f``.
"""
from __future__ import annotations

from .errors import ParseError
from .laurent import LaurentPoly


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _fail(self, expected: str):
        self._skip_ws()
        found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        raise ParseError(f"expected {expected}, found {found}", self.pos, self.text)

    def _nat(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.pos >= len(self.text) or self.text[self.pos] not in "123456789":
            if self.pos < len(self.text) and self.text[self.pos] == "0":
                raise ParseError("zero coefficient or leading zero", self.pos, self.text)
            self._fail("a positive integer")
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])

    def _int(self) -> int:
        c = self._peek()
        if c == "-":
            self.pos += 1
            return -self._nat()
        if c == "0":
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                raise ParseError("leading zero in exponent", self.pos - 1, self.text)
            return 0
        return self._nat()

    def _term(self) -> tuple[int, int]:
        c = self._peek()
        coeff = 1
        if c.isdigit():
            coeff = self._nat()
            if self._peek() != "x":
                return 0, coeff
        elif c != "x":
            self._fail("a term")
        self.pos += 1  # consume 'x'
        if self._peek() == "^":
            self.pos += 1
            return self._int(), coeff
        return 1, coeff

    def parse(self) -> list[tuple[int, int]]:
        terms = [self._term()]
        while True:
            c = self._peek()
            if c == "":
                return terms
            if c == "+":
                self.pos += 1
                terms.append(self._term())
            elif c == "-":
                raise ParseError("subtraction is not available in N0[x^+-1]", self.pos, self.text)
            else:
                self._fail("'+' or end of input")


def parse_terms(text: str) -> list[tuple[int, int]]:
    """Parse to the raw term list, before merging equal exponents."""
    if text.strip() == "0":
        return []
    return _Parser(text).parse()


def parse_poly(text: str) -> LaurentPoly:
    """Parse ``text`` into a :class:`LaurentPoly`.

    >>> parse_poly("2x^-3 + x^-3")
    LaurentPoly('3x^-3')
    """
    return LaurentPoly.from_terms(parse_terms(text))


def _format_term(k: int, c: int) -> str:
    if k == 0:
        return str(c)
    head = "" if c == 1 else str(c)
    return head + ("x" if k == 1 else f"x^{k}")


def format_poly(f: LaurentPoly) -> str:
    if f.is_zero():
        return "0"
    return "+".join(_format_term(k, c) for k, c in f.terms)
