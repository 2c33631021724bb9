"""Evaluate a small LaTeX formula dialect into polynomials.

Supported: sums, juxtaposition products, parentheses (including sized
delimiters), ``\\frac{a}{b}`` with polynomial numerator and denominator
(denominator must be a monomial), integer powers, ``{\\rm i}``, and symbols
``X``, ``X_a``, ``X_{abc}``, ``X_{a,b,c}``, ``\\bar{X}_{..}``, ``X^{[k]}``
and ``\\alpha_k``.  Symbols are resolved through a callback so the same
grammar serves the commutant side and the phase-space side.

Subscript letters listed in ``indices`` are replaced by their integer values
before the callback sees them.  A Poisson bracket ``\\{A, B\\}`` is evaluated
through an optional ``bracket`` callback, and :func:`split_relation` cuts a
chain ``A = B = C`` into its members.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Mapping

from .exact_poly import Polynomial, Scalar, VariableRegistry

__all__ = ["Symbol", "evaluate_latex", "normalize_latex", "split_relation", "LatexSyntaxError"]


class LatexSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Symbol:
    """A resolved symbol: base name, subscript tuple, bar flag, bracket superscript."""

    name: str
    sub: tuple = ()
    bar: bool = False
    upper: int | None = None


_DROP = [
    r"\\(?:Bigg|bigg|Big|big)(?:l|r)?",
    r"\\left\.",
    r"\\right\.",
    r"\\left",
    r"\\right",
    r"\\nonumber",
    r"\\times",
    r"\\,",
    r"\\;",
    r"\\quad",
    r"\\!",
    r"&",
    r"\\\\",
    r"\{\}",
    r"\\small",
]


def normalize_latex(text: str) -> str:
    """Strip layout-only tokens."""
    t = text
    t = t.replace("{\\rm i}", " \\I ").replace("\\mathrm{i}", " \\I ").replace("\\mathrm{i\\,}", " \\I ")
    for pat in _DROP:
        t = re.sub(pat, " ", t)
    t = t.strip()
    while t and t[-1] in ",. ":
        t = t[:-1].rstrip()
    return t


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<brace>\\[{}])|(?P<cmd>\\[A-Za-z]+)|(?P<sym>[A-Za-z])|(?P<op>[-+^_(){}\[\],]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise LatexSyntaxError(f"unexpected text at {text[pos:pos + 20]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, resolve, registry, indices, bracket=None):
        self.toks = _tokenize(normalize_latex(text))
        self.i = 0
        self.resolve = resolve
        self.bracket = bracket
        self.reg = registry
        self.indices = indices

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise LatexSyntaxError(f"expected {value!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        v = self.expr()
        if self.i != len(self.toks):
            raise LatexSyntaxError(f"trailing input near {self.toks[self.i:self.i + 5]}")
        return v

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        total = self.term().scale(sign)
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind is None or val in ("+", "-", ")", "}", "]", ",", "\\}"):
                return acc
            acc = acc * self.factor()

    def factor(self) -> Polynomial:
        base = self.atom()
        while self.peek()[1] == "^":
            self.take("^")
            base = base ** self.int_arg()
        return base

    def int_arg(self) -> int:
        if self.peek()[1] == "{":
            self.take("{")
            neg = False
            if self.peek()[1] == "-":
                self.take("-")
                neg = True
            v = int(self.take()[1])
            self.take("}")
            return -v if neg else v
        return int(self.take()[1])

    def group(self) -> Polynomial:
        self.take("{")
        v = self.expr()
        self.take("}")
        return v

    def atom(self) -> Polynomial:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return Polynomial.const(self.reg, int(val))
        if val == "(":
            self.take("(")
            v = self.expr()
            self.take(")")
            return v
        if val == "{":
            return self.group()
        if val == "\\{":
            if self.bracket is None:
                raise LatexSyntaxError("bracket used but no bracket callback given")
            self.take()
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take("\\}")
            return self.bracket(a, b)
        if kind == "cmd":
            if val == "\\frac":
                self.take()
                num = self.group()
                den = self.group()
                c = den.constant_value()
                if c is not None:
                    return num.scale(Scalar(1) / c)
                return num * den ** -1
            if val == "\\I":
                self.take()
                return Polynomial.const(self.reg, Scalar.I)
            if val == "\\bar":
                self.take()
                self.take("{")
                name = self.take()[1]
                self.take("}")
                return self.symbol(name, bar=True)
            if val in ("\\alpha", "\\beta", "\\gamma", "\\Omega"):
                self.take()
                return self.symbol(val[1:])
            raise LatexSyntaxError(f"unsupported command {val}")
        if kind == "sym":
            self.take()
            return self.symbol(val)
        raise LatexSyntaxError(f"unexpected token {val!r}")

    def symbol(self, name: str, bar: bool = False) -> Polynomial:
        sub: tuple = ()
        upper = None
        power = 1
        if self.peek()[1] == "^" and self._lookahead_bracket():
            self.take("^")
            self.take("{")
            self.take("[")
            upper = int(self.take()[1])
            self.take("]")
            self.take("}")
        elif self.peek()[1] == "^" and self._power_then_subscript():
            # X^2_{ab}
            self.take("^")
            power = self.int_arg()
        if self.peek()[1] == "_":
            self.take("_")
            sub = self.subscript()
        value = self.resolve(Symbol(name, sub, bar, upper))
        return value**power if power != 1 else value

    def _power_then_subscript(self) -> bool:
        t, i = self.toks, self.i + 1
        if i < len(t) and t[i][1] == "{":
            while i < len(t) and t[i][1] != "}":
                i += 1
        i += 1
        return i < len(t) and t[i][1] == "_"

    def _lookahead_bracket(self) -> bool:
        t = self.toks
        return self.i + 2 < len(t) and t[self.i + 1][1] == "{" and t[self.i + 2][1] == "["

    def subscript(self) -> tuple:
        if self.peek()[1] != "{":
            return (self._index(self.take()[1]),)
        self.take("{")
        raw = []
        while self.peek()[1] != "}":
            raw.append(self.take()[1])
        self.take("}")
        parts = [p for p in raw if p != ","]
        out = []
        for p in parts:
            if p.isdigit() and "," not in raw:
                out.extend(int(ch) for ch in p)
            else:
                out.append(self._index(p))
        return tuple(out)

    def _index(self, tok: str):
        if tok.isdigit():
            return int(tok)
        if tok in self.indices:
            return self.indices[tok]
        return tok


def evaluate_latex(
    text: str,
    resolve: Callable[[Symbol], Polynomial],
    registry: VariableRegistry,
    indices: Mapping[str, int] | None = None,
    bracket: Callable[[Polynomial, Polynomial], Polynomial] | None = None,
) -> Polynomial:
    """Evaluate ``text`` to a polynomial.

    Parameters
    ----------
    text : str
        Formula in the supported LaTeX subset.
    resolve : callable
        Maps a :class:`Symbol` to its polynomial.
    registry : VariableRegistry
        Registry for constants.
    indices : mapping, optional
        Values of index letters used in subscripts.
    bracket : callable, optional
        Evaluates ``\\{A, B\\}``.
    """
    return _Parser(text, resolve, registry, dict(indices or {}), bracket).parse()


def split_relation(text: str) -> list[str]:
    """Split ``A = B = ...`` at top-level equals signs (``:=`` counts as ``=``)."""
    t = text.replace(":=", "=")
    parts, depth, cur = [], 0, []
    for ch in t:
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
        if ch == "=" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in (s.strip() for s in parts) if p]
