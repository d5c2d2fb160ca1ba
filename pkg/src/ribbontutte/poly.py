"""Exact sparse polynomials.

Two flavours share one implementation:

* :class:`IntPoly` -- integer coefficients, positive integer exponents, in
  ``x``, ``y`` and the indexed families ``x[g]``, ``y[g]`` (or any other
  variables).
* :class:`LaurentPoly` -- rational coefficients and half-integer exponents of
  either sign, used for specialised images.

Subscripts are always stored doubled so that ``x[1/2]`` or ``x[-3/2]`` are
plain integers internally; :class:`LaurentPoly` exponents are doubled too.

Canonical text: variables inside a monomial are ordered unsubscripted first
(by name), then subscripted ones by ``(name, subscript)``; monomials are
listed in descending lexicographic order of their exponent vectors under that
variable order.  Example::

    x^3*x[1]*y[0]^2 + x^2*y*x[0]*y[0]^2 + 2*x^2*x[1]*y[0] - 1/2*y[-1/2]

Coefficients of 1 are omitted except on the constant monomial; the zero
polynomial prints as ``0``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterator, Mapping, NamedTuple, Union

from .errors import UnmappedVariableError


def half(n2: int) -> str:
    """Render a doubled integer as ``k`` or ``k/2``."""
    return str(n2 // 2) if n2 % 2 == 0 else f"{n2}/2"


def _unhalf(text: str) -> int:
    if text.endswith("/2"):
        return int(text[:-2])
    return 2 * int(text)


class Var(NamedTuple):
    name: str
    sub2: int | None = None  # doubled subscript

    def __str__(self):
        return self.name if self.sub2 is None else f"{self.name}[{half(self.sub2)}]"

    @property
    def key(self):
        return (self.sub2 is not None, self.name, self.sub2 or 0)


X = Var("x")
Y = Var("y")


def xg(sub2: int) -> Var:
    return Var("x", sub2)


def yg(sub2: int) -> Var:
    return Var("y", sub2)


Monomial = tuple  # tuple[tuple[Var, int], ...], sorted by Var.key
Value = Union[int, Fraction, "IntPoly", "LaurentPoly"]

_VAR_RE = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\[(-?\d+(?:/2)?)\])?(?:\^(-?\d+(?:/2)?))?$")
_COEF_RE = re.compile(r"\d+(?:/\d+)?$")


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(((v, e) for v, e in d.items() if e), key=lambda t: t[0].key))


class _SparsePoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = self._coef(c)
            if not c:
                continue
            mono = tuple(sorted(((v, e) for v, e in mono if e), key=lambda t: t[0].key))
            for _, e in mono:
                self._check_exp(e)
            clean[mono] = clean.get(mono, 0) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    # subclass hooks
    @staticmethod
    def _coef(c):
        raise NotImplementedError

    @staticmethod
    def _check_exp(e):
        pass

    @staticmethod
    def _fmt_exp(e) -> str:
        raise NotImplementedError

    @staticmethod
    def _parse_exp(text: str | None) -> int:
        raise NotImplementedError

    @classmethod
    def var_exp_one(cls) -> int:
        raise NotImplementedError

    # construction
    @classmethod
    def const(cls, c) -> _SparsePoly:
        return cls({(): c})

    @classmethod
    def var(cls, v: Var | str, sub2: int | None = None):
        if isinstance(v, str):
            v = Var(v, sub2)
        return cls({((v, cls.var_exp_one()),): 1})

    @classmethod
    def monomial(cls, powers: Mapping[Var, int], coeff=1):
        return cls({tuple(powers.items()): coeff})

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).const(other)
        if isinstance(other, _SparsePoly):
            return other._convert(type(self))
        return NotImplemented

    def _convert(self, cls):
        if cls is type(self):
            return self
        if cls is LaurentPoly:
            return LaurentPoly({tuple((v, 2 * e) for v, e in m): c for m, c in self._terms.items()})
        terms = {}
        for m, c in self._terms.items():
            if any(e % 2 or e < 0 for _, e in m) or Fraction(c).denominator != 1:
                raise ValueError(f"{self} is not an integer polynomial")
            terms[tuple((v, e // 2) for v, e in m)] = int(c)
        return IntPoly(terms)

    # views
    def terms(self) -> dict[Monomial, object]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, object]]:
        return iter(self.ordered_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def variables(self) -> list[Var]:
        vs = {v for m in self._terms for v, _ in m}
        return sorted(vs, key=lambda v: v.key)

    def coefficient(self, mono: Monomial):
        mono = tuple(sorted(mono, key=lambda t: t[0].key))
        return self._terms.get(mono, 0)

    def coefficient_sum(self):
        return sum(self._terms.values())

    def ordered_terms(self) -> list[tuple[Monomial, object]]:
        vs = self.variables()
        pos = {v: i for i, v in enumerate(vs)}

        def vec(m):
            out = [0] * len(vs)
            for v, e in m:
                out[pos[v]] = e
            return out

        return sorted(self._terms.items(), key=lambda t: vec(t[0]), reverse=True)

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant(self):
        return self._terms.get((), 0)

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return type(self)(terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return type(self)(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self._inverse() ** (-n)
        result = type(self).const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _inverse(self):
        raise ValueError(f"{self} is not invertible")

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, _SparsePoly) or type(other) is type(self) else other
        if other is NotImplemented or not isinstance(other, _SparsePoly):
            return NotImplemented
        if type(other) is not type(self):
            try:
                other = other._convert(type(self))
            except ValueError:
                return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # text
    def _fmt_mono(self, m: Monomial) -> str:
        return "*".join(str(v) + self._fmt_exp(e) for v, e in m)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.ordered_terms()):
            neg = c < 0
            a = -c if neg else c
            body = self._fmt_mono(m)
            if not body:
                text = str(a)
            elif a == 1:
                text = body
            else:
                text = f"{a}*{body}"
            if i == 0:
                parts.append(("-" if neg else "") + text)
            else:
                parts.append((" - " if neg else " + ") + text)
        return "".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}('{self}')"

    @classmethod
    def parse(cls, text: str):
        """Inverse of ``str``."""
        text = text.strip()
        if text == "0":
            return cls()
        sign = 1
        if text.startswith("-"):
            sign, text = -1, text[1:]
        pieces = re.split(r" ([+-]) ", text)
        terms = {}
        signs = [sign] + [1 if s == "+" else -1 for s in pieces[1::2]]
        for s, body in zip(signs, pieces[0::2]):
            coef = Fraction(1)
            powers = {}
            for j, factor in enumerate(body.split("*")):
                if j == 0 and _COEF_RE.match(factor):
                    coef = Fraction(factor)
                    continue
                mt = _VAR_RE.match(factor)
                if not mt:
                    raise ValueError(f"cannot parse factor {factor!r}")
                v = Var(mt.group(1), None if mt.group(2) is None else _unhalf(mt.group(2)))
                powers[v] = powers.get(v, 0) + cls._parse_exp(mt.group(3))
            mono = tuple(powers.items())
            terms[mono] = terms.get(mono, 0) + s * coef
        return cls(terms)

    # substitution
    def substitute(self, mapping: Mapping | Callable[[Var], Value]) -> LaurentPoly:
        """Ring-homomorphic image under ``var -> value``.

        ``mapping`` is a dict (keys ``Var`` or their printed names) or a
        callable on ``Var``; values are rationals or polynomials.
        """
        if callable(mapping) and not isinstance(mapping, Mapping):
            lookup = mapping
        else:

            def lookup(v):
                if v in mapping:
                    return mapping[v]
                if str(v) in mapping:
                    return mapping[str(v)]
                raise UnmappedVariableError(f"no value for variable {v}")

        cache = {}
        total = LaurentPoly()
        for m, c in self._terms.items():
            term = LaurentPoly.const(c)
            for v, e in m:
                if v not in cache:
                    val = lookup(v)
                    if val is None:
                        raise UnmappedVariableError(f"no value for variable {v}")
                    cache[v] = _as_laurent(val)
                term = term * _laurent_power(cache[v], self._doubled(e))
            total = total + term
        return total

    def evaluate(self, point: Mapping | Callable[[Var], Value]) -> Fraction:
        """Value at a rational point (raises if a variable is missing)."""
        val = self.substitute(point)
        if not val.is_constant():
            raise UnmappedVariableError(f"evaluation left variables {[str(v) for v in val.variables()]}")
        return Fraction(val.constant())

    @staticmethod
    def _doubled(e: int) -> int:
        raise NotImplementedError


class IntPoly(_SparsePoly):
    __slots__ = ()

    @staticmethod
    def _coef(c):
        if isinstance(c, bool):
            return int(c)
        if isinstance(c, int):
            return c
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"IntPoly coefficient {c} is not an integer")
        return int(c)

    @staticmethod
    def _check_exp(e):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"IntPoly exponent {e!r} must be a positive integer")

    @staticmethod
    def _fmt_exp(e):
        return "" if e == 1 else f"^{e}"

    @staticmethod
    def _parse_exp(text):
        return 1 if text is None else int(text)

    @classmethod
    def var_exp_one(cls):
        return 1

    @staticmethod
    def _doubled(e):
        return 2 * e

    def swap_families(self) -> IntPoly:
        """Exchange ``x <-> y`` together with ``x[g] <-> y[g]``."""
        swap = {"x": "y", "y": "x"}
        return IntPoly({tuple((Var(swap.get(v.name, v.name), v.sub2), e) for v, e in m): c for m, c in self._terms.items()})

    def to_laurent(self) -> LaurentPoly:
        return self._convert(LaurentPoly)


class LaurentPoly(_SparsePoly):
    __slots__ = ()

    @staticmethod
    def _coef(c):
        if isinstance(c, Rational):
            return Fraction(c)
        raise TypeError(f"coefficient {c!r} is not rational")

    @staticmethod
    def _check_exp(e):
        if not isinstance(e, int):
            raise ValueError(f"doubled exponent {e!r} must be an integer")

    @staticmethod
    def _fmt_exp(e2):
        return "" if e2 == 2 else f"^{half(e2)}"

    @staticmethod
    def _parse_exp(text):
        return 2 if text is None else _unhalf(text)

    @classmethod
    def var_exp_one(cls):
        return 2

    @staticmethod
    def _doubled(e2):
        return e2

    @classmethod
    def var_power(cls, name: str | Var, exp2: int, sub2: int | None = None) -> LaurentPoly:
        """``name^(exp2/2)``."""
        v = name if isinstance(name, Var) else Var(name, sub2)
        return cls({((v, exp2),): 1})

    def _inverse(self):
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not a monomial and cannot be inverted")
        (m, c), = self._terms.items()
        return LaurentPoly({tuple((v, -e) for v, e in m): 1 / Fraction(c)})

    def is_integral(self) -> bool:
        """Integer coefficients and integer exponents."""
        return all(Fraction(c).denominator == 1 and all(e % 2 == 0 for _, e in m) for m, c in self._terms.items())


def _as_laurent(val) -> LaurentPoly:
    if isinstance(val, LaurentPoly):
        return val
    if isinstance(val, IntPoly):
        return val.to_laurent()
    if isinstance(val, (int, Fraction)):
        return LaurentPoly.const(val)
    if isinstance(val, Rational):
        return LaurentPoly.const(Fraction(val))
    raise TypeError(f"cannot substitute {val!r}")


def _rational_sqrt(c: Fraction) -> Fraction:
    c = Fraction(c)
    if c < 0:
        raise ValueError(f"no rational square root of {c}")
    n, d = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if n * n != c.numerator or d * d != c.denominator:
        raise ValueError(f"no rational square root of {c}")
    return Fraction(n, d)


def _laurent_power(val: LaurentPoly, e2: int) -> LaurentPoly:
    """``val ** (e2 / 2)``."""
    if e2 % 2 == 0:
        return val ** (e2 // 2)
    if len(val) != 1:
        raise ValueError(f"half-integer power of non-monomial {val}")
    (m, c), = val.terms().items()
    root = LaurentPoly({tuple((v, e // 2) for v, e in m): _rational_sqrt(c)}) if all(e % 2 == 0 for _, e in m) else None
    if root is None:
        raise ValueError(f"half-integer power of {val} is not representable")
    return root**e2
