"""Generator labels and normal-form expressions over them.

A :class:`NormalFormExpr` is a sparse linear combination of *words*; a word
is a sorted tuple of ``(GeneratorId, power)`` pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .exact_poly import Polynomial, Scalar, as_scalar

__all__ = ["CycleMonomial", "GeneratorId", "NormalFormExpr", "canonical_cycle"]


@dataclass(frozen=True, order=False)
class CycleMonomial:
    """Cycle ``(i1, ..., id)`` with the minimal index first; stands for
    ``p_{i1..id} = e_{i1,i2} e_{i2,i3} ... e_{id,i1}``."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if len(idx) < 2:
            raise ValueError("a cycle needs at least two indices")
        if len(set(idx)) != len(idx):
            raise ValueError(f"repeated index in cycle {idx}")
        if idx[0] != min(idx):
            raise ValueError("cycle is not in canonical rotation; use canonical_cycle")
        object.__setattr__(self, "indices", idx)

    @property
    def order(self) -> int:
        return len(self.indices)

    def edges(self) -> list[tuple[int, int]]:
        idx = self.indices
        return [(idx[a], idx[(a + 1) % len(idx)]) for a in range(len(idx))]

    def reversed(self) -> "CycleMonomial":
        idx = self.indices
        return canonical_cycle((idx[0],) + tuple(reversed(idx[1:])))

    def sort_key(self):
        return (len(self.indices), self.indices)

    def __lt__(self, other: "CycleMonomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "p(" + ",".join(map(str, self.indices)) + ")"


def canonical_cycle(indices: Iterable[int]) -> CycleMonomial:
    """Rotate so that the smallest index leads."""
    idx = tuple(int(i) for i in indices)
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated index in cycle {idx}")
    if len(idx) < 2:
        raise ValueError("a cycle needs at least two indices")
    k = idx.index(min(idx))
    return CycleMonomial(idx[k:] + idx[:k])


_KIND_RANK = {"h": 0, "c": 1, "p": 2, "cc": 3, "f": 4, "g": 5}
_CENTRAL = {"h", "c"}


@dataclass(frozen=True)
class GeneratorId:
    """Label of a commutant generator.

    ``kind`` is one of ``h`` (Cartan h_l), ``c`` (c_i), ``p`` (cycle
    monomial), ``cc`` (c_ij = p_ij), ``f`` and ``g`` (skew and symmetric
    combinations of a cycle and its reverse).
    """

    kind: str
    indices: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))

    # constructors
    @classmethod
    def cartan(cls, l: int) -> "GeneratorId":
        return cls("h", (l,))

    @classmethod
    def cycle(cls, *indices) -> "GeneratorId":
        if len(indices) == 1 and not isinstance(indices[0], int):
            indices = tuple(indices[0].indices if isinstance(indices[0], CycleMonomial) else indices[0])
        return cls("p", canonical_cycle(indices).indices)

    @classmethod
    def derived_c(cls, i: int) -> "GeneratorId":
        return cls("c", (i,))

    @classmethod
    def derived_cij(cls, i: int, j: int) -> "GeneratorId":
        return cls("cc", tuple(sorted((i, j))))

    @classmethod
    def derived_f(cls, *indices) -> "GeneratorId":
        return cls("f", tuple(indices))

    @classmethod
    def derived_g(cls, *indices) -> "GeneratorId":
        return cls("g", tuple(indices))

    @property
    def central(self) -> bool:
        return self.kind in _CENTRAL

    def sort_key(self):
        return (_KIND_RANK[self.kind], len(self.indices), self.indices)

    def __lt__(self, other: "GeneratorId") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def name(self) -> str:
        if self.kind in ("h", "c") and len(self.indices) == 1:
            return f"{self.kind}{self.indices[0]}"
        label = "c" if self.kind == "cc" else self.kind
        return f"{label}(" + ",".join(map(str, self.indices)) + ")"

    def __str__(self):
        return self.name

    @classmethod
    def parse(cls, text: str) -> "GeneratorId":
        m = re.fullmatch(r"([hc])(\d+)", text)
        if m:
            return cls(m.group(1), (int(m.group(2)),))
        m = re.fullmatch(r"([pcfg])\(([\d,]+)\)", text)
        if not m:
            raise ValueError(f"cannot parse generator {text!r}")
        kind = "cc" if m.group(1) == "c" else m.group(1)
        return cls(kind, tuple(int(t) for t in m.group(2).split(",")))


Word = tuple  # tuple[tuple[GeneratorId, int], ...]


def _merge(a: Word, b: Word) -> Word:
    acc: dict[GeneratorId, int] = dict(a)
    for g, e in b:
        acc[g] = acc.get(g, 0) + e
    return tuple(sorted(((g, e) for g, e in acc.items() if e), key=lambda t: t[0].sort_key()))


def _word_key(word: Word):
    return tuple((g.sort_key(), e) for g, e in word)


class NormalFormExpr:
    """Linear combination of generator words with Gaussian-rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        clean: dict[Word, Scalar] = {}
        for w, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                w = _merge((), w)
                clean[w] = clean.get(w, Scalar(0)) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def generator(cls, g: GeneratorId, power: int = 1) -> "NormalFormExpr":
        return cls({((g, power),): Scalar(1)})

    @classmethod
    def constant(cls, c) -> "NormalFormExpr":
        return cls({(): as_scalar(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "NormalFormExpr") -> "NormalFormExpr":
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, Scalar(0)) + c
        return NormalFormExpr(t)

    def __neg__(self):
        return NormalFormExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "NormalFormExpr":
        s = as_scalar(s)
        return NormalFormExpr({w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NormalFormExpr):
            return self.scale(other)
        out: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = _merge(w1, w2)
                out[w] = out.get(w, Scalar(0)) + c1 * c2
        return NormalFormExpr(out)

    __rmul__ = scale

    def __pow__(self, k: int) -> "NormalFormExpr":
        out = NormalFormExpr.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, NormalFormExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: _word_key(t[0]))

    def generators(self) -> set[GeneratorId]:
        return {g for w in self.terms for g, _ in w}

    def degree(self) -> int:
        """Maximum number of non-central generator factors in a word."""
        return max((sum(e for g, e in w if not g.central) for w in self.terms), default=0)

    def substitute(self, rule: Callable[[GeneratorId], "NormalFormExpr | None"]) -> "NormalFormExpr":
        """Replace generators by expressions; ``rule`` returns None to keep one."""
        out = NormalFormExpr()
        cache: dict[GeneratorId, NormalFormExpr] = {}
        for w, c in self.terms.items():
            term = NormalFormExpr.constant(c)
            for g, e in w:
                if g not in cache:
                    r = rule(g)
                    cache[g] = r if r is not None else NormalFormExpr.generator(g)
                term = term * cache[g] ** e
            out = out + term
        return out

    def expand(self, poly_of: Callable[[GeneratorId], Polynomial], registry) -> Polynomial:
        """Expand into a polynomial given generator images."""
        out = Polynomial.zero(registry)
        cache: dict[GeneratorId, Polynomial] = {}
        for w, c in self.terms.items():
            term = Polynomial.const(registry, c)
            for g, e in w:
                if g not in cache:
                    cache[g] = poly_of(g)
                term = term * cache[g] ** e
            out = out + term
        return out

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            word = " ".join(g.name if e == 1 else f"{g.name}^{e}" for g, e in w)
            parts.append(f"{cs} * {word}" if word else cs)
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"NormalFormExpr({self.to_text()!r})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(c), "word": [[g.name, e] for g, e in w]} for w, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, terms: list[dict]) -> "NormalFormExpr":
        return cls(
            {
                tuple((GeneratorId.parse(g), int(e)) for g, e in t["word"]): Scalar.parse(t["coeff"])
                for t in terms
            }
        )
