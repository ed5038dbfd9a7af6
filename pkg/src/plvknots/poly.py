"""Exact Laurent polynomials in one variable with quarter-integer exponents.

Exponents are stored as integers counting quarter units, so ``A^3`` is kept
as exponent ``12`` and ``t^(-3/4)`` as ``-3``.  Coefficients are Python ints.
Values are immutable and hashable.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping


class VariableMismatch(ValueError):
    pass


class PolyParseError(ValueError):
    pass


class LaurentPoly:
    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (),
                 var: str = "A"):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[int, int] = {}
        for e, c in terms:
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self.var = var

    # construction helpers -------------------------------------------------

    @classmethod
    def monomial(cls, coef: int, exponent: int | Fraction, var: str = "A") -> LaurentPoly:
        q = Fraction(exponent) * 4
        if q.denominator != 1:
            raise ValueError(f"exponent {exponent} is not a multiple of 1/4")
        return cls({int(q): coef}, var)

    @classmethod
    def const(cls, c: int, var: str = "A") -> LaurentPoly:
        return cls({0: c}, var)

    @classmethod
    def zero(cls, var: str = "A") -> LaurentPoly:
        return cls((), var)

    # accessors ------------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """Mapping from quarter-unit exponent to coefficient."""
        return dict(self._terms)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def coefficients(self) -> dict[Fraction, int]:
        """Mapping from true exponent to coefficient."""
        return {Fraction(e, 4): c for e, c in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> Fraction:
        return Fraction(self._terms[0][0], 4)

    def max_exponent(self) -> Fraction:
        return Fraction(self._terms[-1][0], 4)

    def value_at_one(self) -> int:
        return sum(c for _, c in self._terms)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.var != self.var:
            if other.is_constant() and other.var != self.var:
                return LaurentPoly(other._terms, self.var)
            if self.is_constant():
                return other
            raise VariableMismatch(f"cannot combine {self.var} and {other.var}")
        return other

    def is_constant(self) -> bool:
        return all(e == 0 for e, _ in self._terms)

    def _result_var(self, other: LaurentPoly) -> str:
        if self.is_constant() and not other.is_constant():
            return other.var
        return self.var

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self._terms + other._terms, self._result_var(other))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(((e, -c) for e, c in self._terms), self.var)

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc, self._result_var(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("negative powers are defined only for unit monomials")
            (e, c), = self._terms
            return LaurentPoly({e * n: c ** (-n)}, self.var)
        result = LaurentPoly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, quarter_units: int) -> LaurentPoly:
        """Multiply by the monomial var^(quarter_units/4)."""
        return LaurentPoly(((e + quarter_units, c) for e, c in self._terms), self.var)

    def invert(self) -> LaurentPoly:
        """Substitute var -> var^-1."""
        return LaurentPoly(((-e, c) for e, c in self._terms), self.var)

    def divmod_exact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient ``self / other``; raises ValueError if a remainder is left."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        lead_e, lead_c = other._terms[-1]
        low_e = other._terms[0][0]
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - lead_e + low_e < min(rem) or rem[top] % lead_c:
                raise ValueError(f"{self} is not divisible by {other}")
            q, shift = rem[top] // lead_c, top - lead_e
            quot[shift] = q
            for e, c in other._terms:
                v = rem.get(e + shift, 0) - q * c
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        return LaurentPoly(quot, self._result_var(other))

    # comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self._terms != other._terms:
            return False
        return self.var == other.var or self.is_constant()

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self._terms)
        return hash((self.var, self._terms))

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, var={self.var!r})"

    def __str__(self) -> str:
        return poly_to_string(self)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.var != q.var:
        raise VariableMismatch(f"cannot add polynomials in {p.var} and {q.var}")
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.var != q.var:
        raise VariableMismatch(f"cannot multiply polynomials in {p.var} and {q.var}")
    return p * q


def substitute_A_to_t(p: LaurentPoly) -> LaurentPoly:
    """Apply A = t^(-1/4): the term c*A^e becomes c*t^(-e/4)."""
    if p.var != "A":
        raise VariableMismatch(f"expected a polynomial in A, got {p.var}")
    out = {}
    for e, c in p.items():
        if e % 4:
            raise ValueError("bracket polynomials carry integer powers of A only")
        out[-(e // 4)] = c
    return LaurentPoly(out, "t")


def _exponent_text(var: str, e: int) -> str:
    q = Fraction(e, 4)
    if q == 1:
        return var
    if q.denominator == 1:
        return f"{var}^{q.numerator}"
    return f"{var}^({q.numerator}/{q.denominator})"


def poly_to_string(p: LaurentPoly) -> str:
    """Canonical rendering, terms in ascending exponent order.

    >>> poly_to_string(LaurentPoly({-16: -1, -12: 1, -4: 1}, "t"))
    '-t^-4 + t^-3 + t^-1'
    """
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.items():
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + _exponent_text(p.var, e)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM = re.compile(
    r"(?P<coef>\d+)?\*?(?:(?P<var>[A-Za-z])(?:\^(?:(?P<int>-?\d+)|\((?P<num>-?\d+)/(?P<den>\d+)\)))?)?$"
)


def parse_poly(text: str, var: str | None = None) -> LaurentPoly:
    """Parse the canonical string format (and small variations in spacing)."""
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise PolyParseError("empty polynomial string")
    if s == "0":
        return LaurentPoly.zero(var or "A")
    pieces = []
    start, depth = 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and s[i - 1] != "^":
            pieces.append(s[start:i])
            start = i
    pieces.append(s[start:])
    terms: dict[int, int] = {}
    seen_var = var
    for piece in pieces:
        sign = 1
        body = piece
        if body[:1] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM.match(body)
        if not body or m is None:
            raise PolyParseError(f"cannot parse term {piece!r} in {text!r}")
        v = m.group("var")
        if v is None:
            if m.group("coef") is None:
                raise PolyParseError(f"cannot parse term {piece!r} in {text!r}")
            e4 = 0
        else:
            if seen_var is None:
                seen_var = v
            elif v != seen_var:
                raise PolyParseError(f"mixed variables {seen_var!r} and {v!r} in {text!r}")
            if m.group("int") is not None:
                e4 = 4 * int(m.group("int"))
            elif m.group("num") is not None:
                q = Fraction(int(m.group("num")), int(m.group("den"))) * 4
                if q.denominator != 1:
                    raise PolyParseError(f"exponent in {piece!r} is not a quarter-integer")
                e4 = int(q)
            else:
                e4 = 4
        coef = int(m.group("coef")) if m.group("coef") is not None else 1
        terms[e4] = terms.get(e4, 0) + sign * coef
    return LaurentPoly(terms, seen_var or "A")


A = LaurentPoly.monomial(1, 1, "A")
ONE = LaurentPoly.const(1, "A")
#: value of an extra loop in the bracket state sum
LOOP = -(A ** 2) - A ** -2
