"""Sparse Laurent polynomials in ``v`` with Python-int coefficients."""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

# Raw form used in inner loops: dict exponent -> nonzero int.
Raw = dict


def raw_add_into(target: Raw, src: Mapping[int, int], scale: int = 1, shift: int = 0) -> None:
    """``target += scale * v^shift * src`` in place, dropping zeros."""
    for e, c in src.items():
        k = e + shift
        x = target.get(k, 0) + scale * c
        if x:
            target[k] = x
        else:
            target.pop(k, None)


def raw_mul(a: Mapping[int, int], b: Mapping[int, int]) -> Raw:
    out: Raw = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            k = e1 + e2
            x = out.get(k, 0) + c1 * c2
            if x:
                out[k] = x
            else:
                out.pop(k, None)
    return out


class LaurentPoly:
    """Immutable Laurent polynomial; ``terms`` maps exponent to coefficient."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int | None = None):
        if terms is None:
            t: Raw = {}
        elif isinstance(terms, int):
            t = {0: terms} if terms else {}
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            t = {}
            for e, c in items:
                c = t.get(int(e), 0) + int(c)
                if c:
                    t[int(e)] = c
                else:
                    t.pop(int(e), None)
        self.terms = t
        self._hash = None

    @classmethod
    def _wrap(cls, raw: Raw) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.terms = raw
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({exponent: coeff} if coeff else {})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        out = dict(self.terms)
        raw_add_into(out, other.terms)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        out = dict(self.terms)
        raw_add_into(out, other.terms, -1)
        return LaurentPoly._wrap(out)

    def __rsub__(self, other) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly._wrap({e: c * other for e, c in self.terms.items()} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._wrap(raw_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self.terms) != 1:
                raise ZeroDivisionError("only monomials are invertible")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ZeroDivisionError("only unit monomials are invertible")
            return LaurentPoly._wrap({e * k: c ** (-k)})
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ------------------------------------------------------------

    def coeff(self, exponent: int) -> int:
        return self.terms.get(exponent, 0)

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._wrap({-e: c for e, c in self.terms.items()})

    def evaluate(self, x: int = 1):
        if x == 1:
            return sum(self.terms.values())
        return sum(c * Fraction(x) ** e for e, c in self.terms.items())

    def degrees(self) -> tuple[int, int] | None:
        if not self.terms:
            return None
        return min(self.terms), max(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            elif a == 1:
                body = f"v^({e})"
            else:
                body = f"{a}*v^({e})"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return parse_laurent(text)


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*(\*)?\s*)?(v(?:\s*\^\s*(?:\(\s*([+-]?\d+)\s*\)|([+-]?\d+)))?)?\s*")


class LaurentParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message}\n  {text}\n  {' ' * position}^")
        self.position = position
        self.text = text


def parse_laurent(text: str) -> LaurentPoly:
    """Parse ``v^(2) + 1 - 3*v^(-1)``; also accepts ``v``, ``v^2`` and ``0``."""
    pos = 0
    terms: Raw = {}
    first = True
    stripped = text.strip()
    if not stripped:
        raise LaurentParseError("empty polynomial", text, 0)
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TERM.match(text, pos)
        sign, digits, star, var, e1, e2 = m.groups()
        if (digits is None and var is None) or (sign is None and not first) or (star and var is None):
            # point past a dangling sign, else at the offending token
            at = pos + len(text[pos:]) - len(text[pos:].lstrip())
            if sign is not None and digits is None and var is None:
                at = m.end()
            raise LaurentParseError("expected a term such as 3*v^(2)", text, at)
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        e = 0
        if var is not None:
            e = int(e1 if e1 is not None else e2) if (e1 is not None or e2 is not None) else 1
        raw_add_into(terms, {e: c})
        pos = m.end()
        first = False
    return LaurentPoly._wrap(terms)
