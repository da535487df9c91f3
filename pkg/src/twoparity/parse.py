"""Literal grammar for polynomials and cubics used by the command line.

Polynomials are written in ``x`` with rational literals, ``+ - * ^``
(``**`` also accepted), parentheses and implicit multiplication, e.g.
``(x-17)(x-1)(x-2)``, ``x^3 + x/4 + 1/8`` or ``(x-1)(x^2+x+1)``.
A monic cubic may also be given by its coefficients ``"a,b,c"``.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .poly import UniPoly


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise ParseError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, s: str) -> bool:
        self.skip()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def number(self) -> Fraction:
        value = Fraction(self.integer())
        self.skip()
        # "x/4" style division is handled in term(); here only literal fractions
        if self.peek() == "/" and self._digit_after_slash():
            self.take("/")
            den = self.integer()
            if den == 0:
                self.error("zero denominator")
            value /= den
        return value

    def _digit_after_slash(self) -> bool:
        j = self.pos + 1
        while j < len(self.text) and self.text[j].isspace():
            j += 1
        return j < len(self.text) and self.text[j].isdigit()

    def atom(self) -> UniPoly:
        c = self.peek()
        if c.isdigit():
            return UniPoly.const(self.number())
        if c in ("x", "X"):
            self.pos += 1
            return UniPoly.x()
        if c == "(":
            self.take("(")
            inner = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return inner
        if c == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {c!r}")

    def power(self) -> UniPoly:
        base = self.atom()
        if self.take("**") or self.take("^"):
            base = base ** self.integer()
        return base

    def unary(self) -> UniPoly:
        if self.take("-"):
            return -self.unary()
        if self.take("+"):
            return self.unary()
        return self.power()

    def term(self) -> UniPoly:
        value = self.unary()
        while True:
            c = self.peek()
            if c == "*" and not self.text.startswith("**", self.pos):
                self.take("*")
                value = value * self.unary()
            elif c == "/":
                self.take("/")
                den = self.power()
                if den.degree != 0:
                    self.error("division only by nonzero constants")
                value = value * UniPoly.const(1 / den.lead)
            elif c and (c.isdigit() or c in "xX("):
                value = value * self.power()
            else:
                return value

    def expr(self) -> UniPoly:
        value = self.term()
        while True:
            if self.take("+"):
                value = value + self.term()
            elif self.take("-"):
                value = value - self.term()
            else:
                return value

    def parse(self) -> UniPoly:
        value = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error(f"unexpected character {self.text[self.pos]!r}")
        return value


def parse_poly(text: str) -> UniPoly:
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    return _Parser(text).parse()


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError("not a rational literal", text, 0) from None


def parse_rationals(text: str) -> list[Fraction]:
    out, offset = [], 0
    for piece in text.split(","):
        try:
            out.append(Fraction(piece.strip()))
        except (ValueError, ZeroDivisionError):
            raise ParseError("not a rational literal", text, offset) from None
        offset += len(piece) + 1
    return out


def parse_cubic_coeffs(text: str) -> tuple[Fraction, Fraction, Fraction]:
    """Return (a, b, c) for the monic cubic x^3 + a x^2 + b x + c."""
    if "x" not in text.lower():
        coeffs = parse_rationals(text)
        if len(coeffs) != 3:
            raise ParseError("expected three coefficients a,b,c", text, len(text))
        return coeffs[0], coeffs[1], coeffs[2]
    f = parse_poly(text)
    if f.degree != 3:
        raise ParseError(f"expected a cubic, got degree {f.degree}", text, 0)
    if f.lead != 1:
        raise ParseError("cubic must be monic", text, 0)
    return f.coeff(2), f.coeff(1), f.coeff(0)
