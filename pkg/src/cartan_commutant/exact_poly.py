"""Exact sparse Laurent polynomials over the Gaussian rationals.

Monomials are packed into a single Python integer: every variable owns a
32-bit field holding ``exponent + 2**31``, the first registry variable in the
most significant field.  The least significant field stores the power of the
imaginary unit (0 or 1), so a polynomial is a plain ``dict`` from packed
monomial to a rational coefficient and Gaussian arithmetic reduces to
rational arithmetic plus the rule ``i**2 = -1``.  Integer comparison of packed
monomials is lexicographic comparison of exponent vectors in registry order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

import gmpy2
import numpy as np

__all__ = [
    "Scalar",
    "VariableRegistry",
    "Monomial",
    "Polynomial",
    "arithmetic",
    "partial_derivative",
    "substitute",
    "parse_polynomial",
    "as_scalar",
]

mpq = gmpy2.mpq
_MPQ = type(mpq(0))

_W = 32
_BIAS = 1 << (_W - 1)
_MASK = (1 << _W) - 1
_IBIT = 1


def _q(x) -> "gmpy2.mpq":
    """Convert an exact rational-like value to ``mpq``."""
    if isinstance(x, _MPQ):
        return x
    if isinstance(x, bool):
        return mpq(int(x))
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return mpq(x.numerator, x.denominator) if not isinstance(x, int) else mpq(x)
    if isinstance(x, str):
        return mpq(Fraction(x).numerator, Fraction(x).denominator)
    if type(x).__name__ in ("mpz",):
        return mpq(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _fmt_q(q) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Scalar:
    """Gaussian rational ``re + im*i`` with exact rational parts.

    Parameters
    ----------
    re, im : int, Fraction, str or mpq
        Real and imaginary parts.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _q(re))
        object.__setattr__(self, "im", _q(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.re, self.im))

    I: "Scalar"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse ``"a"``, ``"bi"``, ``"a+bi"`` or ``"a-bi"`` with rational parts."""
        t = text.replace(" ", "")
        if not t.endswith("i"):
            return cls(Fraction(t))
        body = t[:-1]
        # split at the last sign that is not the leading one
        k = max(body.rfind("+", 1), body.rfind("-", 1))
        if k <= 0:
            im = body if body not in ("", "+", "-") else body + "1"
            return cls(0, Fraction(im))
        re_part, im_part = body[:k], body[k:]
        if im_part in ("+", "-"):
            im_part += "1"
        return cls(Fraction(re_part), Fraction(im_part))

    def __add__(self, other):
        if isinstance(other, Polynomial):
            return NotImplemented
        o = as_scalar(other)
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            return NotImplemented
        o = as_scalar(other)
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return NotImplemented
        o = as_scalar(other)
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            return NotImplemented
        o = as_scalar(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero Scalar")
        n = self * o.conjugate()
        return Scalar(n.re / d, n.im / d)

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return Scalar(1) / (self ** (-k))
        r = Scalar(1)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __eq__(self, other):
        try:
            o = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self):
        if self.im == 0:
            return _fmt_q(self.re)
        im = "" if abs(self.im) == 1 else _fmt_q(abs(self.im))
        if self.re == 0:
            return ("-" if self.im < 0 else "") + im + "i"
        return f"{_fmt_q(self.re)}{'-' if self.im < 0 else '+'}{im}i"

    def __repr__(self):
        return f"Scalar({self})"


Scalar.I = Scalar(0, 1)


def as_scalar(x) -> Scalar:
    """Coerce ints, fractions, mpq, strings and complex-free values to Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return Scalar.parse(x)
    if isinstance(x, complex):
        raise TypeError("floating complex values are not exact")
    return Scalar(x)


class VariableRegistry:
    """Ordered set of variable names, some of which may carry negative exponents.

    Parameters
    ----------
    names : sequence of str
        Distinct identifiers; the order fixes the monomial order.
    laurent_allowed : iterable of str, optional
        Names permitted negative exponents.
    """

    def __init__(self, names: Iterable[str], laurent_allowed: Iterable[str] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for nm in names:
            if not nm or not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", nm):
                raise ValueError(f"invalid variable name {nm!r}")
        laurent = frozenset(laurent_allowed)
        unknown = laurent - set(names)
        if unknown:
            raise ValueError(f"laurent variables not in registry: {sorted(unknown)}")
        self.names = names
        self.laurent_allowed = laurent
        self.index = {nm: k for k, nm in enumerate(names)}
        nv = len(names)
        # variable k lives in field nv - k (field 0 holds the power of i)
        self._shift = tuple(_W * (nv - k) for k in range(nv))
        self._zero = sum(_BIAS << s for s in self._shift)
        self._laurent_mask = tuple(nm in laurent for nm in names)

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.index

    def __eq__(self, other):
        return (
            isinstance(other, VariableRegistry)
            and self.names == other.names
            and self.laurent_allowed == other.laurent_allowed
        )

    def __hash__(self):
        return hash((self.names, self.laurent_allowed))

    def __reduce__(self):
        return (VariableRegistry, (self.names, tuple(sorted(self.laurent_allowed))))

    def __repr__(self):
        return f"VariableRegistry({list(self.names)!r}, laurent={sorted(self.laurent_allowed)!r})"

    def pack(self, exponents: Mapping[str, int], imag: int = 0) -> int:
        """Pack a sparse exponent map (and a power of i in {0,1}) into an int key."""
        key = self._zero + imag
        for nm, e in exponents.items():
            if nm not in self.index:
                raise KeyError(f"unknown variable {nm!r}")
            e = int(e)
            if e < 0 and nm not in self.laurent_allowed:
                raise ValueError(f"negative exponent on non-Laurent variable {nm!r}")
            key += e << self._shift[self.index[nm]]
        return key

    def unpack(self, key: int) -> tuple[tuple[int, ...], int]:
        """Return the dense exponent vector and the power of i of a packed key."""
        return (
            tuple(((key >> s) & _MASK) - _BIAS for s in self._shift),
            key & _IBIT,
        )

    def exponent(self, key: int, k: int) -> int:
        return ((key >> self._shift[k]) & _MASK) - _BIAS


class Monomial:
    """Sparse exponent map ``variable -> nonzero int`` (no coefficient)."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        object.__setattr__(self, "exponents", tuple((v, int(e)) for v, e in items if e))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    def as_dict(self) -> dict[str, int]:
        return dict(self.exponents)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and dict(self.exponents) == dict(other.exponents)

    def __hash__(self):
        return hash(frozenset(self.exponents))

    def __str__(self):
        if not self.exponents:
            return "1"
        return " ".join(v if e == 1 else f"{v}^{e}" for v, e in self.exponents)

    def __repr__(self):
        return f"Monomial({dict(self.exponents)!r})"


Number = Union[int, Fraction, Scalar, str]


class Polynomial:
    """Immutable sparse Laurent polynomial over Q(i).

    Construct through :meth:`var`, :meth:`const`, :meth:`from_terms` or by
    arithmetic on existing polynomials.  Two polynomials compare equal iff
    their term maps are identical.
    """

    __slots__ = ("registry", "_t", "_hash")

    def __init__(self, registry: VariableRegistry, raw: dict | None = None):
        self.registry = registry
        self._t = raw if raw is not None else {}
        self._hash = None

    # construction -----------------------------------------------------------
    @classmethod
    def zero(cls, registry: VariableRegistry) -> "Polynomial":
        return cls(registry, {})

    @classmethod
    def const(cls, registry: VariableRegistry, value: Number) -> "Polynomial":
        s = as_scalar(value)
        z = registry._zero
        raw = {}
        if s.re:
            raw[z] = s.re
        if s.im:
            raw[z + _IBIT] = s.im
        return cls(registry, raw)

    @classmethod
    def var(cls, registry: VariableRegistry, name: str, power: int = 1) -> "Polynomial":
        return cls(registry, {registry.pack({name: power}): mpq(1)})

    @classmethod
    def from_terms(
        cls, registry: VariableRegistry, terms: Iterable[tuple[Mapping[str, int] | Monomial, Number]]
    ) -> "Polynomial":
        """Build from ``(exponent map or Monomial, coefficient)`` pairs; like terms merge."""
        raw: dict[int, object] = {}
        for mono, c in terms:
            exps = mono.as_dict() if isinstance(mono, Monomial) else mono
            s = as_scalar(c)
            key = registry.pack(exps)
            if s.re:
                raw[key] = raw.get(key, 0) + s.re
            if s.im:
                raw[key + _IBIT] = raw.get(key + _IBIT, 0) + s.im
        return cls(registry, {k: v for k, v in raw.items() if v})

    # inspection -------------------------------------------------------------
    def terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in descending monomial order as ``(Monomial, Scalar)`` pairs."""
        grouped: dict[int, list] = {}
        for k, c in self._t.items():
            base = k & ~_IBIT
            slot = grouped.setdefault(base, [0, 0])
            slot[k & _IBIT] = c
        out = []
        names = self.registry.names
        for base in sorted(grouped, reverse=True):
            exps, _ = self.registry.unpack(base)
            mono = Monomial([(names[i], e) for i, e in enumerate(exps) if e])
            re_, im_ = grouped[base]
            out.append((mono, Scalar(re_, im_)))
        return out

    def __len__(self):
        return len({k & ~_IBIT for k in self._t})

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self) == 1

    def constant_value(self) -> Scalar | None:
        """The value if the polynomial is constant, else None."""
        z = self.registry._zero
        if any((k & ~_IBIT) != z for k in self._t):
            return None
        return Scalar(self._t.get(z, 0), self._t.get(z + _IBIT, 0))

    def variables(self) -> set[str]:
        reg = self.registry
        used = set()
        for k in self._t:
            exps, _ = reg.unpack(k)
            used.update(reg.names[i] for i, e in enumerate(exps) if e)
        return used

    def degree_in(self, name: str) -> tuple[int, int]:
        """Minimum and maximum exponent of ``name`` over all terms."""
        k = self.registry.index[name]
        es = [self.registry.exponent(key, k) for key in self._t] or [0]
        return min(es), max(es)

    def total_degree(self, names: Iterable[str] | None = None) -> int:
        """Maximum over terms of the summed exponents (restricted to ``names``)."""
        reg = self.registry
        idx = range(len(reg)) if names is None else [reg.index[n] for n in names]
        best = None
        for key in self._t:
            d = sum(reg.exponent(key, i) for i in idx)
            best = d if best is None else max(best, d)
        return 0 if best is None else best

    def coefficient(self, exponents: Mapping[str, int]) -> Scalar:
        key = self.registry.pack(exponents)
        return Scalar(self._t.get(key, 0), self._t.get(key + _IBIT, 0))

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.registry is not self.registry and other.registry != self.registry:
                raise ValueError("registry mismatch")
            return other
        return Polynomial.const(self.registry, other)

    def __add__(self, other):
        o = self._coerce(other)
        if len(o._t) > len(self._t):
            a, b = o._t, self._t
        else:
            a, b = self._t, o._t
        r = dict(a)
        for k, v in b.items():
            s = r.get(k)
            if s is None:
                r[k] = v
            else:
                s = s + v
                if s:
                    r[k] = s
                else:
                    del r[k]
        return Polynomial(self.registry, r)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.registry, {k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s: Number) -> "Polynomial":
        """Multiply by a Gaussian-rational scalar."""
        s = as_scalar(s)
        if not s:
            return Polynomial(self.registry, {})
        if s.im == 0:
            c = s.re
            return Polynomial(self.registry, {k: v * c for k, v in self._t.items()})
        return self * Polynomial.const(self.registry, s)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        o = self._coerce(other)
        a, b = self._t, o._t
        if not a or not b:
            return Polynomial(self.registry, {})
        if len(a) < len(b):
            a, b = b, a
        z = self.registry._zero
        r: dict[int, object] = {}
        get = r.get
        for k2, c2 in b.items():
            off = k2 - z
            if k2 & _IBIT:
                for k1, c1 in a.items():
                    k = k1 + off
                    if k1 & _IBIT:
                        k -= 2
                        r[k] = get(k, 0) - c1 * c2
                    else:
                        r[k] = get(k, 0) + c1 * c2
            else:
                for k1, c1 in a.items():
                    k = k1 + off
                    r[k] = get(k, 0) + c1 * c2
        return Polynomial(self.registry, {k: v for k, v in r.items() if v})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_monomial():
                raise ValueError("division only by monomials")
            return self * other ** -1
        return self.scale(Scalar(1) / as_scalar(other))

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int):
            raise TypeError("exponent must be an int")
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            ((mono, c),) = self.terms()
            inv = {v: -e for v, e in mono.exponents}
            base = Polynomial.from_terms(self.registry, [(inv, Scalar(1) / c)])
            return base ** (-k)
        result = Polynomial.const(self.registry, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.registry == other.registry and self._t == other._t
        try:
            return self._t == Polynomial.const(self.registry, other)._t
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __reduce__(self):
        return (_rebuild, (self.registry, [(k, v.numerator, v.denominator) for k, v in self._t.items()]))

    # calculus and substitution ---------------------------------------------
    def diff(self, name: str) -> "Polynomial":
        """Formal partial derivative with respect to ``name``."""
        reg = self.registry
        if name not in reg.index:
            raise KeyError(f"unknown variable {name!r}")
        sh = reg._shift[reg.index[name]]
        unit = 1 << sh
        r = {}
        for k, c in self._t.items():
            e = ((k >> sh) & _MASK) - _BIAS
            if e:
                r[k - unit] = c * e
        return Polynomial(reg, r)

    def split_by(self, name: str) -> dict[int, "Polynomial"]:
        """Group terms by the exponent of ``name``: ``{e: coefficient polynomial}``."""
        reg = self.registry
        sh = reg._shift[reg.index[name]]
        parts: dict[int, dict] = {}
        for k, c in self._t.items():
            e = ((k >> sh) & _MASK) - _BIAS
            parts.setdefault(e, {})[k - (e << sh)] = c
        return {e: Polynomial(reg, t) for e, t in parts.items()}

    def substitute(self, assignment: Mapping[str, "Polynomial | Number"]) -> "Polynomial":
        """Simultaneous substitution; see :func:`substitute`."""
        return substitute(self, assignment)

    def evaluate(self, point: Mapping[str, Number]) -> Scalar:
        """Exact value at a point assigning every occurring variable."""
        total = Scalar(0)
        for mono, c in self.terms():
            v = c
            for nm, e in mono.exponents:
                v = v * as_scalar(point[nm]) ** e
            total = total + v
        return total

    def numeric(self) -> "NumericPolynomial":
        """Vectorised complex evaluator (used only by sampling cross-checks)."""
        return NumericPolynomial(self)

    # text -------------------------------------------------------------------
    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        """Canonical text ``coeff * v1^e1 v2^e2 + ...`` in descending monomial order."""
        if not self._t:
            return "0"
        parts = []
        for mono, c in self.terms():
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(cs if not mono.exponents else f"{cs} * {mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def _rebuild(registry, items):
    return Polynomial(registry, {k: mpq(n, d) for k, n, d in items})


class NumericPolynomial:
    """Complex float evaluator for a Polynomial built on numpy arrays."""

    def __init__(self, p: Polynomial):
        self.names = p.registry.names
        rows, coeffs = [], []
        for k, c in p._t.items():
            exps, im = p.registry.unpack(k)
            rows.append(exps)
            coeffs.append(complex(0, float(c)) if im else complex(float(c), 0))
        self.exponents = np.array(rows, dtype=np.int64).reshape(len(rows), len(self.names))
        self.coeffs = np.array(coeffs, dtype=complex)

    def __call__(self, point: Mapping[str, complex]) -> complex:
        x = np.array([point.get(nm, 0.0) for nm in self.names], dtype=complex)
        if not len(self.coeffs):
            return 0j
        used = self.exponents != 0
        vals = np.where(used, x[None, :] ** self.exponents, 1.0)
        return complex(np.sum(self.coeffs * np.prod(vals, axis=1)))


# module-level operations ------------------------------------------------------


def arithmetic(op: str, a: Polynomial, b) -> Polynomial:
    """Dispatch ``add``, ``sub``, ``mul``, ``scale`` or ``pow``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        if isinstance(b, Polynomial) and b.registry != a.registry:
            raise ValueError("registry mismatch")
        return a * b
    if op == "scale":
        return a.scale(b)
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(p: Polynomial, v: str) -> Polynomial:
    """Formal partial derivative, with the Laurent rule d/dx x^-1 = -x^-2."""
    return p.diff(v)


def substitute(p: Polynomial, assignment: Mapping[str, "Polynomial | Number"]) -> Polynomial:
    """Simultaneously replace variables by polynomials.

    Images may live in another registry (a ring map); all images must share
    one registry, and unassigned variables are carried over by name.  A
    variable occurring with a negative exponent must receive a monomial image.

    Raises
    ------
    ValueError
        If a negative power meets a multi-term image or registries disagree.
    """
    src = p.registry
    for nm in assignment:
        if nm not in src.index:
            raise KeyError(f"unknown variable {nm!r}")
    target = None
    for img in assignment.values():
        if isinstance(img, Polynomial):
            if target is None:
                target = img.registry
            elif img.registry != target:
                raise ValueError("images live in different registries")
    if target is None:
        target = src
    images: list[Polynomial] = []
    for k, nm in enumerate(src.names):
        if nm in assignment:
            img = assignment[nm]
            images.append(img if isinstance(img, Polynomial) else Polynomial.const(target, img))
        else:
            images.append(Polynomial.var(target, nm) if nm in target.index else None)

    @lru_cache(maxsize=None)
    def power(k: int, e: int) -> Polynomial:
        img = images[k]
        if img is None:
            raise ValueError(f"variable {src.names[k]!r} has no image in the target registry")
        if e < 0:
            if not img.is_monomial():
                raise ValueError(
                    f"negative power of {src.names[k]!r} fed a multi-term image; clear denominators first"
                )
            return (img ** -1) ** (-e)
        if e == 1:
            return img
        return power(k, e - 1) * img

    acc: dict[int, object] = {}
    for key, c in p._t.items():
        exps, im = src.unpack(key)
        term = None
        for k, e in enumerate(exps):
            if e:
                f = power(k, e)
                term = f if term is None else term * f
        if term is None:
            term = Polynomial.const(target, 1)
        _accumulate(acc, term, c, im)
    return Polynomial(target, {k: v for k, v in acc.items() if v})


def _accumulate(acc: dict, term: Polynomial, c, im: int) -> None:
    """Add ``c * i**im * term`` into the raw dict ``acc``."""
    get = acc.get
    if im:
        for k, v in term._t.items():
            if k & _IBIT:
                kk = k - 1
                acc[kk] = get(kk, 0) - v * c
            else:
                kk = k + 1
                acc[kk] = get(kk, 0) + v * c
    else:
        for k, v in term._t.items():
            acc[k] = get(k, 0) + v * c


_TERM_RE = re.compile(r"\s*\+\s*(?![^()]*\))")


def parse_polynomial(registry: VariableRegistry, text: str) -> Polynomial:
    """Parse the canonical text form produced by :meth:`Polynomial.to_text`."""
    text = text.strip()
    if text == "0":
        return Polynomial.zero(registry)
    terms = []
    for chunk in _TERM_RE.split(text):
        if " * " in chunk:
            cs, ms = chunk.split(" * ", 1)
        elif re.fullmatch(r"\(?[-0-9/+i]+\)?", chunk):
            cs, ms = chunk, ""
        else:
            cs, ms = "1", chunk
        cs = cs.strip().strip("()")
        exps: dict[str, int] = {}
        for factor in ms.split():
            v, _, e = factor.partition("^")
            exps[v] = exps.get(v, 0) + (int(e) if e else 1)
        terms.append((exps, Scalar.parse(cs)))
    return Polynomial.from_terms(registry, terms)
