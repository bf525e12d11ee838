"""Sparse integer polynomials in the fixed variables r, s, t, x, y."""

from __future__ import annotations

import json
from typing import Mapping, Union

VARS = ("r", "s", "t", "x", "y")
NVARS = len(VARS)
Monomial = tuple[int, int, int, int, int]
ZERO_EXP: Monomial = (0, 0, 0, 0, 0)


class Poly:
    """Immutable polynomial stored as ``{exponent vector: nonzero int}``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != NVARS or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent vector {exp!r}")
                if c:
                    self.terms[tuple(exp)] = int(c)
        self._hash = None

    @staticmethod
    def _raw(terms: dict) -> Poly:
        # trusted constructor: terms already canonical
        p = Poly.__new__(Poly)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls._raw({ZERO_EXP: int(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> Poly:
        exp = [0] * NVARS
        exp[VARS.index(name)] = power
        return cls._raw({tuple(exp): 1})

    @classmethod
    def monomial(cls, coef: int = 1, **powers: int) -> Poly:
        exp = tuple(powers.get(v, 0) for v in VARS)
        return cls._raw({exp: coef} if coef else {})

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        if len(b) == 1 and ZERO_EXP in b:
            k = b[ZERO_EXP]
            return self if k == 1 else Poly._raw({e: c * k for e, c in a.items()})
        if len(a) == 1 and ZERO_EXP in a:
            return other * self
        out: dict[Monomial, int] = {}
        for e1, c1 in a.items():
            r1, s1, t1, x1, y1 = e1
            for (r2, s2, t2, x2, y2), c2 in b.items():
                e = (r1 + r2, s1 + s2, t1 + t2, x1 + x2, y1 + y2)
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries -------------------------------------------------------

    def coeff(self, exp: Monomial) -> int:
        return self.terms.get(tuple(exp), 0)

    def is_constant(self) -> bool:
        return all(e == ZERO_EXP for e in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.terms.get(ZERO_EXP, 0)

    def variables(self) -> set[str]:
        return {VARS[i] for e in self.terms for i in range(NVARS) if e[i]}

    def substitute(self, assignment: Mapping[str, Union["Poly", int]]) -> Poly:
        """Simultaneously replace the named variables by polynomials or ints."""
        if not assignment:
            return self
        subs = {}
        for name, value in assignment.items():
            if name not in VARS:
                raise ValueError(f"unknown variable {name!r}")
            subs[VARS.index(name)] = _coerce(value)
        powers: dict[tuple[int, int], Poly] = {}

        def power(i: int, k: int) -> Poly:
            if (i, k) not in powers:
                powers[(i, k)] = subs[i] ** k
            return powers[(i, k)]

        out = ZERO
        for exp, c in self.terms.items():
            kept = tuple(0 if i in subs else exp[i] for i in range(NVARS))
            term = Poly._raw({kept: c})
            for i in subs:
                if exp[i]:
                    term = term * power(i, exp[i])
            out = out + term
        return out

    # -- rendering -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for name, k in zip(VARS, exp):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"exp": list(exp), "coef": str(c)} for exp, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict] | str) -> Poly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({tuple(item["exp"]): int(item["coef"]) for item in data})

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly.const(value)
    return NotImplemented


ZERO = Poly._raw({})
ONE = Poly._raw({ZERO_EXP: 1})
r, s, t, x, y = (Poly.var(v) for v in VARS)


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_neg(p: Poly) -> Poly:
    return -p


def coeff(p: Poly, m: Monomial) -> int:
    return p.coeff(m)


def substitute(p: Poly, assignment: Mapping[str, Poly | int]) -> Poly:
    return p.substitute(assignment)
