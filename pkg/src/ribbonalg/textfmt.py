"""Text form of polynomials and rational functions.

Grammar (whitespace allowed between tokens)::

    ratfunc := poly | "(" poly ")" [ "/" "(" poly ")" ]
    poly    := [sign] term { sign term }
    term    := coef [ ["*"] mono ] | mono
    mono    := "x" [ "^" integer ]
    coef    := integer [ "/" integer ]

The printer emits descending powers, e.g. ``3/2*x^2 - x + 4`` and
``(x - 1)/(x + 1)``; ``parse_ratfunc(format_ratfunc(f)) == f`` holds for
every canonical ``f``.
"""

from fractions import Fraction

from .errors import ParseError
from .exactfield import Poly, RatFunc, rf_canonical

__all__ = ["parse_poly", "parse_ratfunc", "format_poly", "format_ratfunc"]

_TERM_START = {"integer", "x"}


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, expected, message=None):
        found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        msg = message or f"unexpected {found} at offset {self.pos}"
        raise ParseError(msg, offset=self.pos, expected=expected, text=self.text)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch):
        if not self.eat(ch):
            self.error({ch})

    def integer(self):
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error({"integer"})
        return int(self.text[start:self.pos])

    def coef(self):
        num = self.integer()
        if self.peek() == "/":
            # a "/" here belongs to the coefficient unless a "(" follows
            save = self.pos
            self.pos += 1
            if self.peek() == "(":
                self.pos = save
                return Fraction(num)
            at = self.pos
            den = self.integer()
            if den == 0:
                self.pos = at
                self.error(set(), "zero denominator in coefficient")
            return Fraction(num, den)
        return Fraction(num)

    def mono(self):
        self.expect("x")
        if self.eat("^"):
            return self.integer()
        return 1

    def term(self):
        ch = self.peek()
        if ch.isdigit():
            c = self.coef()
            nxt = self.peek()
            if nxt == "*":
                self.pos += 1
                if self.peek() != "x":
                    self.error({"x"})
                return c, self.mono()
            if nxt == "x":
                return c, self.mono()
            return c, 0
        if ch == "x":
            return Fraction(1), self.mono()
        self.error(_TERM_START)

    def poly(self, first_expected=frozenset({"integer", "x", "+", "-"})):
        coeffs = {}
        sign = 1
        ch = self.peek()
        if ch in "+-" and ch:
            sign = -1 if ch == "-" else 1
            self.pos += 1
        elif not (ch.isdigit() or ch == "x"):
            self.error(set(first_expected))
        while True:
            c, k = self.term()
            coeffs[k] = coeffs.get(k, Fraction(0)) + sign * c
            ch = self.peek()
            if ch in ("+", "-") and ch:
                sign = -1 if ch == "-" else 1
                self.pos += 1
                continue
            break
        top = max(coeffs) if coeffs else -1
        return Poly([coeffs.get(k, 0) for k in range(top + 1)])

    def finish(self, expected):
        self.ws()
        if self.pos != len(self.text):
            self.error(expected)


def parse_poly(text):
    p = _Parser(text)
    out = p.poly()
    p.finish({"+", "-", "end of input"})
    return out


def parse_ratfunc(text):
    """Parse a rational function; raises :class:`ParseError` with an offset."""
    if not isinstance(text, str):
        raise ParseError("rational function text must be a string", offset=0,
                         expected={"string"})
    p = _Parser(text)
    if p.peek() == "(":
        p.pos += 1
        num = p.poly()
        p.expect(")")
        if p.eat("/"):
            p.expect("(")
            den = p.poly()
            p.expect(")")
            p.finish({"end of input"})
            if den.is_zero():
                raise ParseError("zero denominator", offset=len(text), expected=(),
                                 text=text)
            return rf_canonical(num, den)
        p.finish({"/", "end of input"})
        return RatFunc.from_poly(num)
    num = p.poly(first_expected=frozenset({"integer", "x", "+", "-", "("}))
    p.finish({"+", "-", "end of input"})
    return RatFunc.from_poly(num)


def _mono(k):
    return "" if k == 0 else ("x" if k == 1 else f"x^{k}")


def format_poly(p):
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        a = abs(c)
        if k == 0:
            body = str(a)
        elif a == 1:
            body = _mono(k)
        else:
            body = f"{a}*{_mono(k)}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


def format_ratfunc(f):
    if f.den.degree == 0:
        return format_poly(f.num)
    return f"({format_poly(f.num)})/({format_poly(f.den)})"
