"""Iwahori-Hecke algebra of an Iwahori-Weyl group over ``Z[v, v^-1]``.

Normalization: ``(H_s + v)(H_s - v^-1) = 0``, so ``H_s^2 = 1 + (v^-1 - v) H_s``
and ``H_s^-1 = H_s + (v - v^-1)``.  The Kazhdan-Lusztig element of ``w`` is
the bar-invariant ``H_w + sum_{y<w} h_{y,w} H_y`` with ``h_{y,w}`` in ``v Z[v]``.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from .iwahori_weyl import AffineSimpleSystem, IWElement
from .laurent import ONE, LaurentPoly, Raw, parse_laurent, raw_add_into, raw_mul
from .root_datum import Vector

# v^-1 - v and v - v^-1 as raw dicts
_Q = {-1: 1, 1: -1}
_Q_NEG = {1: 1, -1: -1}

RawElement = dict  # IWElement -> Raw


def _add_term(target: RawElement, w, poly: Mapping[int, int], scale: int = 1, shift: int = 0) -> None:
    cur = target.get(w)
    if cur is None:
        cur = {}
        target[w] = cur
    raw_add_into(cur, poly, scale, shift)
    if not cur:
        del target[w]


class HeckeElement:
    """Immutable finite sum ``sum_w p_w H_w``."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "HeckeAlgebra", terms: RawElement):
        self.algebra = algebra
        self.terms = terms

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = {w: dict(p) for w, p in self.terms.items()}
        for w, p in other.terms.items():
            _add_term(out, w, p)
        return HeckeElement(self.algebra, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        out = {w: dict(p) for w, p in self.terms.items()}
        for w, p in other.terms.items():
            _add_term(out, w, p, -1)
        return HeckeElement(self.algebra, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.algebra, {w: {e: -c for e, c in p.items()} for w, p in self.terms.items()})

    def __mul__(self, other) -> "HeckeElement":
        if isinstance(other, HeckeElement):
            return self.algebra.mult(self, other)
        if isinstance(other, int):
            other = LaurentPoly(other)
        if isinstance(other, LaurentPoly):
            return self.algebra.scale(self, other)
        return NotImplemented

    def __rmul__(self, other) -> "HeckeElement":
        if isinstance(other, (int, LaurentPoly)):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset((w, frozenset(p.items())) for w, p in self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, w: IWElement) -> LaurentPoly:
        return LaurentPoly(self.terms.get(w, {}))

    def items(self) -> list[tuple[IWElement, LaurentPoly]]:
        return [(w, LaurentPoly(p)) for w, p in self.terms.items()]

    def support(self) -> set[IWElement]:
        return set(self.terms)

    def __str__(self) -> str:
        return self.algebra.format(self)

    def __repr__(self) -> str:
        return f"HeckeElement({self})"


class AntisphericalElement:
    """Immutable finite sum ``sum_lam p_lam N_lam`` indexed by ``Y_I``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = terms

    def __add__(self, other: "AntisphericalElement") -> "AntisphericalElement":
        out = {k: dict(p) for k, p in self.terms.items()}
        for k, p in other.terms.items():
            _add_term(out, k, p)
        return AntisphericalElement(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AntisphericalElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, lam: Sequence[int]) -> LaurentPoly:
        return LaurentPoly(self.terms.get(tuple(lam), {}))

    def specialize_v1(self) -> dict[Vector, int]:
        out = {}
        for k, p in self.terms.items():
            x = sum(p.values())
            if x:
                out[k] = x
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({LaurentPoly(p)})*N{list(k)}" for k, p in sorted(self.terms.items()))

    __repr__ = __str__


class HeckeAlgebra:
    """Hecke algebra of an :class:`AffineSimpleSystem`."""

    def __init__(self, system: AffineSimpleSystem):
        self.W = system
        self._kl: dict[IWElement, HeckeElement] = {}
        self._inv_chain: dict[IWElement, tuple[list[int], IWElement]] = {}
        self._bern_raw: dict[Vector, RawElement] = {}
        self._nu0: Vector | None = None
        self._asph_basis: dict[IWElement, tuple[Vector, int]] = {}

    # -- constructors -------------------------------------------------------

    def zero(self) -> HeckeElement:
        return HeckeElement(self, {})

    def one(self) -> HeckeElement:
        return self.basis(self.W.identity)

    def basis(self, w: IWElement) -> HeckeElement:
        return HeckeElement(self, {w: {0: 1}})

    def H(self, w: IWElement) -> HeckeElement:
        return self.basis(w)

    def from_terms(self, terms: Mapping[IWElement, LaurentPoly | int]) -> HeckeElement:
        out: RawElement = {}
        for w, p in terms.items():
            p = LaurentPoly(p) if isinstance(p, int) else p
            _add_term(out, w, p.terms)
        return HeckeElement(self, out)

    def scale(self, a: HeckeElement, p: LaurentPoly) -> HeckeElement:
        out: RawElement = {}
        for w, q in a.terms.items():
            r = raw_mul(q, p.terms)
            if r:
                out[w] = r
        return HeckeElement(self, out)

    # -- generator actions on raw elements ---------------------------------

    def _right_s(self, a: RawElement, i: int) -> RawElement:
        W = self.W
        s = W.generators[i]
        out: RawElement = {}
        for w, p in a.items():
            ws = W.mul(w, s)
            _add_term(out, ws, p)
            if W.length(ws) < W.length(w):
                _add_term(out, w, p, 1, -1)
                _add_term(out, w, p, -1, 1)
        return out

    def _left_s(self, a: RawElement, i: int) -> RawElement:
        W = self.W
        s = W.generators[i]
        out: RawElement = {}
        for w, p in a.items():
            sw = W.mul(s, w)
            _add_term(out, sw, p)
            if W.length(sw) < W.length(w):
                _add_term(out, w, p, 1, -1)
                _add_term(out, w, p, -1, 1)
        return out

    def _right_s_inv(self, a: RawElement, i: int) -> RawElement:
        out = self._right_s(a, i)
        for w, p in a.items():
            _add_term(out, w, p, 1, 1)
            _add_term(out, w, p, -1, -1)
        return out

    def _left_s_inv(self, a: RawElement, i: int) -> RawElement:
        out = self._left_s(a, i)
        for w, p in a.items():
            _add_term(out, w, p, 1, 1)
            _add_term(out, w, p, -1, -1)
        return out

    def _right_omega(self, a: RawElement, om: IWElement) -> RawElement:
        W = self.W
        return {W.mul(w, om): p for w, p in a.items()}

    def _left_omega(self, a: RawElement, om: IWElement) -> RawElement:
        W = self.W
        return {W.mul(om, w): p for w, p in a.items()}

    def _word(self, w: IWElement) -> tuple[list[int], IWElement]:
        out = self._inv_chain.get(w)
        if out is None:
            out = self.W.reduced_word(w)
            self._inv_chain[w] = out
        return out

    def right_mul_basis(self, a: HeckeElement, w: IWElement) -> HeckeElement:
        word, om = self._word(w)
        raw = a.terms
        for i in word:
            raw = self._right_s(raw, i)
        return HeckeElement(self, self._right_omega(raw, om))

    def left_mul_basis(self, w: IWElement, a: HeckeElement) -> HeckeElement:
        word, om = self._word(w)
        raw = self._left_omega(a.terms, om)
        for i in reversed(word):
            raw = self._left_s(raw, i)
        return HeckeElement(self, raw)

    def right_mul_generator(self, a: HeckeElement, i: int) -> HeckeElement:
        return HeckeElement(self, self._right_s(a.terms, i))

    def left_mul_generator(self, i: int, a: HeckeElement) -> HeckeElement:
        return HeckeElement(self, self._left_s(a.terms, i))

    # -- multiplication -----------------------------------------------------

    def mult(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        """Product; expands the smaller factor into generator words over a prefix trie."""
        if not a.terms or not b.terms:
            return self.zero()
        if len(b.terms) <= len(a.terms):
            return HeckeElement(self, self._mult_right_trie(a.terms, b.terms))
        return HeckeElement(self, self._mult_left_trie(a.terms, b.terms))

    def _mult_right_trie(self, a: RawElement, b: RawElement) -> RawElement:
        trie: dict = {}
        for y, p in b.items():
            word, om = self._word(y)
            node = trie
            for i in word:
                node = node.setdefault(i, {})
            node.setdefault(None, []).append((om, p))
        out: RawElement = {}

        def walk(node, cur):
            for om, p in node.get(None, ()):
                for w, q in cur.items():
                    _add_term(out, self.W.mul(w, om), raw_mul(q, p))
            for i, child in node.items():
                if i is not None:
                    walk(child, self._right_s(cur, i))

        walk(trie, a)
        return out

    def _mult_left_trie(self, a: RawElement, b: RawElement) -> RawElement:
        # H_x = H_{s_1} ... H_{s_k} H_om; build from the right end of the word.
        W = self.W
        trie: dict = {}
        for x, p in a.items():
            word, om = self._word(x)
            node = trie.setdefault(("om", om), {})
            for i in reversed(word):
                node = node.setdefault(i, {})
            node.setdefault(None, []).append(p)
        out: RawElement = {}

        def walk(node, cur):
            for p in node.get(None, ()):
                for w, q in cur.items():
                    _add_term(out, w, raw_mul(p, q))
            for i, child in node.items():
                if i is not None:
                    walk(child, self._left_s(cur, i))

        for (_, om), node in trie.items():
            walk(node, self._left_omega(b, om))
        return out

    def inverse_basis(self, w: IWElement) -> HeckeElement:
        """``H_w^-1``."""
        word, om = self._word(w)
        raw = {self.W.inverse(om): {0: 1}}
        for i in reversed(word):
            raw = self._right_s_inv(raw, i)
        return HeckeElement(self, raw)

    def right_mul_inverse_basis(self, a: HeckeElement, w: IWElement) -> HeckeElement:
        """``a * H_w^-1``."""
        word, om = self._word(w)
        raw = self._right_omega(a.terms, self.W.inverse(om))
        for i in reversed(word):
            raw = self._right_s_inv(raw, i)
        return HeckeElement(self, raw)

    # -- bar involution -----------------------------------------------------

    def bar(self, a: HeckeElement) -> HeckeElement:
        """``v -> v^-1`` and ``H_w -> (H_{w^-1})^-1``."""
        out: RawElement = {}
        for w, p in a.terms.items():
            word, om = self._word(w)
            # (H_{w^-1})^-1 = H_{s_1}^-1 ... H_{s_k}^-1 H_om
            raw: RawElement = {om: {-e: c for e, c in p.items()}}
            for i in reversed(word):
                raw = self._left_s_inv(raw, i)
            for y, q in raw.items():
                _add_term(out, y, q)
        return HeckeElement(self, out)

    # -- Kazhdan-Lusztig basis ---------------------------------------------

    def kl_basis(self, w: IWElement) -> HeckeElement:
        cached = self._kl.get(w)
        if cached is not None:
            return cached
        W = self.W
        lw = W.length(w)
        if lw == 0:
            out = self.basis(w)
        else:
            i = next(i for i in W.indices if W.length(W.mul(W.generators[i], w)) < lw)
            s = W.generators[i]
            rest = W.mul(s, w)
            c_rest = self.kl_basis(rest)
            raw = self._left_s(c_rest.terms, i)
            for y, p in c_rest.terms.items():
                _add_term(raw, y, p, 1, 1)
            for y, p in c_rest.terms.items():
                if y == rest:
                    continue
                mu = p.get(1, 0)
                if mu and W.length(W.mul(s, y)) < W.length(y):
                    for z, q in self.kl_basis(y).terms.items():
                        _add_term(raw, z, q, -mu)
            out = HeckeElement(self, raw)
        self._kl[w] = out
        return out

    def kl_polynomials(self, w: IWElement) -> dict[IWElement, LaurentPoly]:
        return {y: LaurentPoly(p) for y, p in self.kl_basis(w).terms.items()}

    # -- multiplicity morphism ---------------------------------------------

    def m(self, a: HeckeElement) -> LaurentPoly:
        """``H_w -> (-v)^{l(w)}``."""
        out: Raw = {}
        for w, p in a.terms.items():
            lw = self.W.length(w)
            raw_add_into(out, p, -1 if lw % 2 else 1, lw)
        return LaurentPoly._wrap(out)

    # -- Bernstein elements -------------------------------------------------

    def regular_dominant(self) -> Vector:
        """A dominant element with every simple root value >= 1, of least ``<., 2rho>``."""
        if self._nu0 is None:
            from .root_datum import dominant_elements

            ech = self.W.ech
            bound = 2
            while True:
                cands = [
                    v
                    for v in dominant_elements(ech, bound)
                    if all(ech.evaluate(p.root, v) >= 1 for p in ech.simple)
                ]
                if cands:
                    self._nu0 = cands[0]
                    break
                bound *= 2
                if bound > 10**6:
                    raise ValueError("no regular dominant element found")
        return self._nu0

    def _translation_part(self, mu: Vector) -> RawElement:
        """``H_{t^lam} H_{t^{lam - mu}}^-1`` for ``lam = mu + k nu0`` dominant, ``k >= 0`` minimal."""
        ech = self.W.ech
        mu = ech.reduce(mu)
        chain = []
        cur = mu
        while cur not in self._bern_raw and not ech.is_dominant(cur):
            chain.append(cur)
            cur = ech.add(cur, self.regular_dominant())
            if len(chain) > 10000:
                raise ValueError(f"no admissible dominant element found for {mu}")
        if cur not in self._bern_raw:
            self._bern_raw[cur] = {self.W.translation(cur): {0: 1}}
        raw = self._bern_raw[cur]
        t_nu0 = self.W.translation(self.regular_dominant())
        for nxt in reversed(chain):
            raw = self.right_mul_inverse_basis(HeckeElement(self, raw), t_nu0).terms
            self._bern_raw[nxt] = raw
        return raw

    def bernstein(self, mu: Sequence[int], lam: Sequence[int] | None = None) -> HeckeElement:
        """``theta_mu = (-1)^{<mu, 2rho>} H_{t^lam} H_{t^{lam - mu}}^-1``.

        ``lam`` must be dominant with ``lam - mu`` dominant; by default a
        cached choice is used.
        """
        ech = self.W.ech
        mu = ech.reduce(mu)
        sign = -1 if ech.pair_two_rho(mu) % 2 else 1
        if lam is None:
            raw = self._translation_part(mu)
        else:
            lam = ech.reduce(lam)
            diff = ech.sub(lam, mu)
            if not (ech.is_dominant(lam) and ech.is_dominant(diff)):
                raise ValueError(f"{lam} is not an admissible choice for {mu}")
            raw = self.right_mul_inverse_basis(self.basis(self.W.translation(lam)), self.W.translation(diff)).terms
        if sign == 1:
            return HeckeElement(self, {w: dict(p) for w, p in raw.items()})
        return HeckeElement(self, {w: {e: -c for e, c in p.items()} for w, p in raw.items()})

    # -- antispherical module ----------------------------------------------

    def asph_unit(self) -> AntisphericalElement:
        return AntisphericalElement({self.W.ech.zero: {0: 1}})

    def asph_basis(self, lam: Sequence[int]) -> AntisphericalElement:
        return AntisphericalElement({self.W.ech.reduce(lam): {0: 1}})

    def _asph_right_s(self, n: dict, i: int) -> dict:
        W = self.W
        s = W.generators[i]
        out: dict = {}
        for lam, p in n.items():
            x = W.class_rep(lam)
            xs = W.mul(x, s)
            if not W.is_min_coset_rep(xs):
                _add_term(out, lam, p, -1, 1)
                continue
            cls = W.coset_class(xs)
            _add_term(out, cls, p)
            if W.length(xs) < W.length(x):
                _add_term(out, lam, p, 1, -1)
                _add_term(out, lam, p, -1, 1)
        return out

    def _asph_right_omega(self, n: dict, om: IWElement) -> dict:
        W = self.W
        return {W.coset_class(W.mul(W.class_rep(lam), om)): p for lam, p in n.items()}

    def asph_act(self, n: AntisphericalElement, a: HeckeElement) -> AntisphericalElement:
        """Right action of the Hecke algebra on the antispherical module."""
        out: dict = {}
        for y, p in a.terms.items():
            word, om = self._word(y)
            cur = n.terms
            for i in word:
                cur = self._asph_right_s(cur, i)
            cur = self._asph_right_omega(cur, om)
            for lam, q in cur.items():
                _add_term(out, lam, raw_mul(q, p))
        return AntisphericalElement(out)

    def unit_times_basis(self, w: IWElement) -> tuple[Vector, int]:
        """``N_e H_w = (-v)^{l(w) - l(w_s)} N_{class(w)}``; returns ``(class, exponent)``."""
        out = self._asph_basis.get(w)
        if out is None:
            W = self.W
            ws = W.min_coset_rep(w)
            out = (W.coset_class(w), W.length(w) - W.length(ws))
            self._asph_basis[w] = out
        return out

    def unit_act(self, a: HeckeElement) -> AntisphericalElement:
        """``N_e * a`` via the closed form on basis elements."""
        out: dict = {}
        for w, p in a.terms.items():
            lam, k = self.unit_times_basis(w)
            _add_term(out, lam, p, -1 if k % 2 else 1, k)
        return AntisphericalElement(out)

    # -- serialization ------------------------------------------------------

    def format_element(self, w: IWElement) -> str:
        word, om = self._word(w)
        return f"[{' '.join(map(str, word))}|{self.W.omega_index[om]}]"

    def parse_element(self, text: str) -> IWElement:
        m = re.fullmatch(r"\s*\[\s*([\d\s]*)\|\s*(\d+)\s*\]\s*", text)
        if not m:
            raise ValueError(f"malformed basis label {text!r}")
        word = [int(x) for x in m.group(1).split()]
        k = int(m.group(2))
        if k >= len(self.W.omega):
            raise ValueError(f"omega index {k} out of range")
        for i in word:
            if i not in self.W.generators:
                raise ValueError(f"unknown generator {i}")
        w = self.W.from_reduced(word, self.W.omega[k])
        if self.W.length(w) != len(word):
            raise ValueError(f"word {word} is not reduced")
        return w

    def format(self, a: HeckeElement) -> str:
        if not a.terms:
            return "0"
        W = self.W
        items = sorted(a.terms.items(), key=lambda kv: (W.length(kv[0]), self.format_element(kv[0])))
        return " + ".join(f"({LaurentPoly(p)})*{self.format_element(w)}" for w, p in items)

    def parse(self, text: str) -> HeckeElement:
        """Inverse of :meth:`format`."""
        if text.strip() == "0":
            return self.zero()
        out: RawElement = {}
        pos = 0
        pattern = re.compile(r"\s*\(([^()]*(?:\([^()]*\)[^()]*)*)\)\s*\*\s*(\[[^\]]*\])\s*(\+|$)")
        while pos < len(text):
            m = pattern.match(text, pos)
            if not m:
                raise ValueError(f"cannot parse Hecke term at position {pos}: {text[pos:pos + 30]!r}")
            poly = parse_laurent(m.group(1))
            w = self.parse_element(m.group(2))
            _add_term(out, w, poly.terms)
            pos = m.end()
            if m.group(3) == "":
                break
        return HeckeElement(self, out)


def specialize_v1(a: HeckeElement) -> dict[IWElement, int]:
    out = {}
    for w, p in a.terms.items():
        x = sum(p.values())
        if x:
            out[w] = x
    return out


def m_morphism(a: HeckeElement) -> LaurentPoly:
    return a.algebra.m(a)


def bar(a: HeckeElement) -> HeckeElement:
    return a.algebra.bar(a)


def mult(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    return a.algebra.mult(a, b)
