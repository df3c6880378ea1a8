"""Expression text <-> NCPoly.

Grammar: variables ``x1``..``x999``; ``+ - * ^``; commutator sugar
``[e1,e2]``; integer and rational (``a/b``) literals; parentheses.
Products are left-associative and ``^`` binds tighter than ``*``.
"""

import re

from .errors import ParseError, UnknownVariable
from .free_algebra import NCPoly, commutator

_TOKEN = re.compile(r"\s*(?:(x\d+)|(\d+)|([+\-*^()\[\],/]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            while text[pos].isspace():
                pos += 1
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        var, num, op = m.groups()
        if var is not None:
            tokens.append(("var", var, m.start(1)))
        elif num is not None:
            tokens.append(("num", num, m.start(2)))
        else:
            tokens.append(("op", op, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, field):
        self.tokens = _tokenize(text)
        self.i = 0
        self.field = field

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}", pos)

    def parse(self):
        f = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input {val!r}", pos)
        return f

    def expr(self):
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                g = self.term()
                f = f - g if val == "-" else f + g
            else:
                return f

    def term(self):
        f = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                f = f * self.factor()
            else:
                return f

    def factor(self):
        f = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            f = f ** int(val)
        return f

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            num = int(val)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "num":
                    raise ParseError("expected denominator", p3)
                return NCPoly(self.field, 0, {(): self.field.of(num, int(v3))})
            return NCPoly(self.field, 0, {(): self.field.of(num)})
        if kind == "var":
            idx = int(val[1:])
            if not 1 <= idx <= 999:
                raise UnknownVariable(f"variable {val} out of range x1..x999", pos)
            return NCPoly.variable(idx, self.field)
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect(")")
            return f
        if kind == "op" and val == "[":
            f = self.expr()
            self.expect(",")
            g = self.expr()
            self.expect("]")
            return commutator(f, g)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_poly(text, field):
    """Parse an expression into an NCPoly over the given field."""
    return _Parser(text, field).parse()


def _format_word(word):
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        parts.append(f"x{word[i]}" + (f"^{run}" if run > 1 else ""))
        i = j
    return "*".join(parts)


def format_poly(f):
    """Canonical text form; ``parse_poly(format_poly(f), field) == f``."""
    if f.is_zero():
        return "0"
    F = f.field
    pieces = []
    for w, c in f.sorted_terms():
        word_txt = _format_word(w)
        neg = F.p == 0 and c < 0
        mag = -c if neg else c
        if w and mag == F.one:
            txt = word_txt
        elif not w:
            txt = F.format(mag)
        else:
            txt = f"{F.format(mag)}*{word_txt}"
        if not pieces:
            pieces.append(("-" if neg else "") + txt)
        else:
            pieces.append(("- " if neg else "+ ") + txt)
    return " ".join(pieces)
