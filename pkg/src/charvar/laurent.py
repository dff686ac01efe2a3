"""Sparse Laurent polynomials with exact rational coefficients.

:class:`LaurentQ` is a polynomial in ``q`` and ``q^{-1}``.
:class:`LaurentQT` is a polynomial in ``q^{1/2}, t^{1/2}`` and their
inverses; its exponents are stored doubled, so ``q^{1/2}`` has key ``(1, 0)``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping


def _clean(terms) -> dict:
    return {e: Fraction(c) for e, c in terms.items() if c != 0}


class LaurentQ:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Rational] | None = None) -> None:
        self.terms = _clean(dict(terms or {}))

    @classmethod
    def const(cls, c) -> LaurentQ:
        return cls({0: c})

    @classmethod
    def q(cls, power: int = 1) -> LaurentQ:
        return cls({power: 1})

    def _coerce(self, other) -> LaurentQ:
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentQ.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentQ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            return LaurentQ({e * k: Fraction(c) ** k})
        out = LaurentQ.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __call__(self, x):
        x = Fraction(x) if isinstance(x, int) else x
        return sum((c * x ** e for e, c in self.terms.items()), Fraction(0))

    def divide_by_q_power(self, k: int) -> LaurentQ:
        return LaurentQ({e - k: c for e, c in self.terms.items()})

    @property
    def degree(self) -> int | None:
        return max(self.terms) if self.terms else None

    @property
    def low_degree(self) -> int | None:
        return min(self.terms) if self.terms else None

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.terms)

    def substitute_inverse(self) -> LaurentQ:
        """``E(1/q)``."""
        return LaurentQ({-e: c for e, c in self.terms.items()})

    def to_json(self) -> dict[str, int | str]:
        return {str(e): _num_json(c) for e, c in sorted(self.terms.items(), reverse=True)}

    @classmethod
    def from_json(cls, d: Mapping[str, int | str]) -> LaurentQ:
        return cls({int(e): Fraction(c) for e, c in d.items()})

    def __repr__(self) -> str:
        return f"LaurentQ({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            parts.append(_monomial(c, [("q", e, 1)]))
        return _join(parts)


class LaurentQT:
    """Laurent polynomial in ``q^{1/2}``, ``t^{1/2}`` (exponents doubled)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Rational] | None = None) -> None:
        self.terms = _clean(dict(terms or {}))

    @classmethod
    def const(cls, c) -> LaurentQT:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, q2: int, t2: int, c=1) -> LaurentQT:
        """``c q^{q2/2} t^{t2/2}``."""
        return cls({(q2, t2): c})

    def _coerce(self, other):
        if isinstance(other, LaurentQT):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentQT.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentQT(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQT({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentQT(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentQT.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def evaluate(self, Q, T) -> Fraction:
        """Value at ``q^{1/2} = Q``, ``t^{1/2} = T``."""
        return sum((c * Fraction(Q) ** a * Fraction(T) ** b for (a, b), c in self.terms.items()), Fraction(0))

    def swap(self) -> LaurentQT:
        return LaurentQT({(b, a): c for (a, b), c in self.terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def shift(self, q2: int = 0, t2: int = 0) -> LaurentQT:
        return LaurentQT({(a + q2, b + t2): c for (a, b), c in self.terms.items()})

    def specialize_t_inverse_q(self) -> LaurentQ:
        """Substitute ``t = q^{-1}``; fails if a half-integer power of ``q`` survives."""
        out: dict[int, Fraction] = {}
        for (a, b), c in self.terms.items():
            if (a - b) % 2:
                raise ValueError("half-integer power of q after t = 1/q")
            e = (a - b) // 2
            out[e] = out.get(e, 0) + c
        return LaurentQ(out)

    def specialize_t_one(self) -> LaurentQT:
        out: dict[tuple[int, int], Fraction] = {}
        for (a, _), c in self.terms.items():
            out[(a, 0)] = out.get((a, 0), 0) + c
        return LaurentQT(out)

    def to_json(self) -> dict[str, int | str]:
        """Keys ``"a,b"`` for ``q^{a/2} t^{b/2}``."""
        return {f"{a},{b}": _num_json(c) for (a, b), c in sorted(self.terms.items(), reverse=True)}

    def __repr__(self) -> str:
        return f"LaurentQT({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [_monomial(c, [("q", a, 2), ("t", b, 2)]) for (a, b), c in sorted(self.terms.items(), reverse=True)]
        return _join(parts)


def _num_json(c: Fraction) -> int | str:
    return int(c) if c.denominator == 1 else str(c)


def _exp(var: str, e: int, den: int) -> str:
    if e == 0:
        return ""
    f = Fraction(e, den)
    if f == 1:
        return var
    return f"{var}^{f}" if f.denominator == 1 else f"{var}^({f})"


def _monomial(c: Fraction, factors) -> str:
    body = "*".join(s for s in (_exp(v, e, d) for v, e, d in factors) if s)
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def _join(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out
