"""Polynomial expression grammar.

::

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" int)?
    atom   := uint | var | "(" expr ")"
    var    := "t" uint?
    int    := "-"? uint

Whitespace is insignificant.  A bare ``t`` is only accepted when ``r == 1``.
Negative exponents are allowed on monomials.
"""

from __future__ import annotations

from .errors import ArityError, NotDivisible, PolySyntaxError
from .laurent import MultiLaurent, UniPoly


class _Parser:
    def __init__(self, src: str, r: int):
        self.src = src
        self.r = r
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise PolySyntaxError(f"expected {ch!r}, got {got!r}", self._offset())
        self.pos += 1

    def _offset(self):
        return len(self.src[: self.pos].encode())

    def uint(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            got = self.peek() or "end of input"
            raise PolySyntaxError(f"expected digits, got {got!r}", self._offset())
        return int(self.src[start : self.pos])

    def parse(self) -> MultiLaurent:
        value = self.expr()
        if self.peek():
            raise PolySyntaxError(f"unexpected {self.peek()!r}", self._offset())
        return value

    def expr(self) -> MultiLaurent:
        negate = False
        if self.peek() == "-":
            self.pos += 1
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek() in ("+", "-") and self.peek():
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MultiLaurent:
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return value

    def factor(self) -> MultiLaurent:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            neg = False
            if self.peek() == "-":
                self.pos += 1
                neg = True
            at = self._offset()
            k = self.uint()
            try:
                return base ** (-k if neg else k)
            except NotDivisible:
                raise PolySyntaxError("negative exponent on a non-monomial", at) from None
        return base

    def atom(self) -> MultiLaurent:
        ch = self.peek()
        if ch.isdigit():
            return MultiLaurent.constant(self.uint(), self.r)
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if ch == "t":
            at = self._offset()
            self.pos += 1
            nxt = self.src[self.pos] if self.pos < len(self.src) else ""
            if nxt.isdigit():
                idx = self.uint()
                if idx < 1 or idx > self.r:
                    raise ArityError(f"variable t{idx} at offset {at} exceeds r={self.r}")
                return MultiLaurent.var(idx - 1, self.r)
            if self.r != 1:
                raise ArityError(f"bare 't' at offset {at} needs r=1 (got r={self.r})")
            return MultiLaurent.var(0, 1)
        got = ch or "end of input"
        raise PolySyntaxError(f"unexpected {got!r}", self._offset())


def parse_poly(src: str, r: int) -> MultiLaurent:
    """Parse ``src`` into an ``r``-variable Laurent polynomial."""
    if r < 1:
        raise ArityError("r must be positive")
    return _Parser(src, r).parse()


def _monomial_text(exp, names):
    parts = []
    for e, name in zip(exp, names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: MultiLaurent) -> str:
    """Print in the parser's grammar, lex-descending terms."""
    if f.is_zero():
        return "0"
    names = ["t"] if f.num_vars == 1 else [f"t{i + 1}" for i in range(f.num_vars)]
    out = []
    for exp, c in sorted(f.items(), reverse=True):
        mono = _monomial_text(exp, names)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def format_unipoly(f: UniPoly, var: str = "t") -> str:
    if f.is_zero():
        return "0"
    g = MultiLaurent(1, {(i,): c for i, c in enumerate(f.coeffs)})
    s = format_poly(g)
    return s if var == "t" else s.replace("t", var)
