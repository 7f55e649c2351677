"""Integer polynomials in named variables, and a small expression parser.

The parser accepts ``+ - * ^`` (``**`` too), parentheses, integer literals
and variable names, with implicit multiplication as in ``12phi + 7phi^2``.
"""

from __future__ import annotations

import re
from typing import Any, Callable, Iterator, Mapping

Monomial = tuple[int, ...]

ALIASES = {"φ": "phi", "δ": "delta", "μ": "mu"}


class Polynomial:
    """Integer polynomial over a fixed tuple of variable names."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: tuple[str, ...], terms: Mapping[Monomial, int] | None = None):
        self.variables = tuple(variables)
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, variables, c: int) -> Polynomial:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, name: str) -> Polynomial:
        i = variables.index(name)
        return cls(variables, {tuple(int(k == i) for k in range(len(variables))): 1})

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise ValueError(f"variables differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Polynomial(self.variables, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = t.get(m, 0) + c1 * c2
        return Polynomial(self.variables, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.variables), 0)

    def degree(self, weights: tuple[int, ...]) -> int:
        """Largest weighted degree of a term (-1 for the zero polynomial)."""
        return max((weighted(m, weights) for m in self.terms), default=-1)

    def substitute(self, values: Mapping[str, Any], one: Any) -> Any:
        """Evaluate in any commutative ring; ``one`` is that ring's unit."""
        out = one * 0
        for m, c in self.terms.items():
            t = one * c
            for name, e in zip(self.variables, m):
                if e:
                    t = t * values[name] ** e
            out = out + t
        return out

    def __repr__(self):
        return f"Polynomial({self.variables!r}, {self.terms!r})"

    def __str__(self):
        return format_polynomial(self)


def weighted(m: Monomial, weights: tuple[int, ...]) -> int:
    return sum(a * w for a, w in zip(m, weights))


def format_monomial(variables: tuple[str, ...], m: Monomial) -> str:
    parts = []
    for name, e in zip(variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, order: Callable[[Monomial], Any] | None = None) -> str:
    """Deterministic text form, terms sorted by total degree then exponents."""
    if not p.terms:
        return "0"
    key = order or (lambda m: (sum(m), tuple(-a for a in m)))
    out = ""
    for m in sorted(p.terms, key=key):
        c = p.terms[m]
        mono = format_monomial(p.variables, m)
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*|[φδμ])|(\*\*|[-+*^()]))")


class ParseError(ValueError):
    pass


def _tokens(text: str) -> Iterator[tuple[str, str]]:
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:]!r}")
        pos = m.end()
        if m.group(1):
            yield "num", m.group(1)
        elif m.group(2):
            yield "name", ALIASES.get(m.group(2), m.group(2))
        else:
            yield "op", "^" if m.group(3) == "**" else m.group(3)
    yield "end", ""


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.toks = list(_tokens(text))
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r}, got {t[1]!r}")

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input at {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def _starts_factor(self):
        kind, val = self.peek()
        return kind in ("num", "name") or (kind, val) == ("op", "(")

    def term(self):
        p = self.unary()
        while True:
            if self.peek() == ("op", "*"):
                self.take()
                p = p * self.unary()
            elif self._starts_factor():
                p = p * self.power()
            else:
                return p

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer literal")
            return base ** int(val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Polynomial.constant(self.variables, int(val))
        if kind == "name":
            if val not in self.variables:
                raise ParseError(f"unknown symbol {val!r}; expected one of {', '.join(self.variables)}")
            return Polynomial.var(self.variables, val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected {val or 'end of input'!r}")


def parse(text: str, variables: tuple[str, ...]) -> Polynomial:
    """Parse ``text`` as an integer polynomial in ``variables``."""
    return _Parser(text, tuple(variables)).parse()
