"""Crossed products ``(K/F, Phi)`` given by explicit group and cocycle tables.

An element is ``sum_g e_g c_g`` with ``c_g`` in K, stored as ``{g: c_g}``.
Scalars move across basis symbols by ``c e_t = e_t c^t`` (right action),
so ``(e_s c)(e_t d) = e_{st} Phi(s, t) c^t d``.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import InvalidAutomorphism, InvalidPresentation
from ..scalars.base import FieldElement
from ..scalars.extension import format_term, join_terms, _wrap
from ..scalars.maps import TowerMap
from .base import AlgebraElement, AlgebraInvolution, RegularRepresentationMixin


class CrossedProduct(RegularRepresentationMixin):
    def __init__(self, K, group, table, actions, cocycle=None, symbol="e"):
        self.K = K
        self.F = K.base
        self.group = list(group)
        self.table = dict(table)
        self.symbol = symbol
        G = self.group
        missing = [(s, t) for s in G for t in G if (s, t) not in self.table]
        if missing:
            raise InvalidPresentation(f"group table incomplete: {missing[:3]}")
        ids = [e for e in G if all(self.table[(e, g)] == g == self.table[(g, e)] for g in G)]
        if len(ids) != 1:
            raise InvalidPresentation("group table has no identity")
        self.identity = ids[0]
        self.actions = {}
        for g in G:
            act = actions.get(g)
            if act is None and g == self.identity:
                act = TowerMap(K, {}, check=False)
            if act is None:
                raise InvalidPresentation(f"no automorphism given for {g}")
            if not isinstance(act, TowerMap):
                act = TowerMap(K, act)
            self.actions[g] = act
        bad = self.action_failures()
        if bad:
            raise InvalidAutomorphism(f"automorphism tables do not compose like the group: {bad[:3]}")
        cocycle = cocycle or {}
        self.cocycle = {}
        for s in G:
            for t in G:
                v = K(cocycle.get((s, t), 1))
                if v.is_zero():
                    raise InvalidPresentation(f"cocycle value at ({s}, {t}) is zero")
                self.cocycle[(s, t)] = v
        self._kbasis = self._k_basis()
        self.one = self(1)

    # group data -----------------------------------------------------------
    def action_failures(self):
        """Pairs ``(s, t)`` where ``k^(st) != (k^s)^t`` on a generator of K."""
        gens = list(self.K.all_gens().values())
        out = []
        for s in self.group:
            for t in self.group:
                lhs = self.actions[self.table[(s, t)]]
                rhs = self.actions[s].then(self.actions[t])
                if any(lhs(g) != rhs(g) for g in gens):
                    out.append((s, t))
        return out

    def act(self, g, k):
        return self.actions[g](self.K(k))

    def inv_of(self, g):
        return next(h for h in self.group if self.table[(g, h)] == self.identity)

    def mult(self, s, t):
        return self.table[(s, t)]

    # construction ---------------------------------------------------------
    def __call__(self, v):
        if isinstance(v, AlgebraElement):
            if v.algebra is not self:
                raise TypeError("element of a different algebra")
            return v
        if isinstance(v, (int, Fraction, FieldElement)) and not isinstance(v, bool):
            return AlgebraElement(self, {self.identity: self.K(v)})
        raise TypeError(f"cannot coerce {v!r} into {self}")

    def e(self, g, c=None):
        c = self.K.one if c is None else self.K(c)
        return AlgebraElement(self, {g: c})

    def from_K(self, k):
        return self(self.K(k))

    def to_K(self, u):
        from ..errors import NotInK

        u = self(u)
        if any(g != self.identity for g in u.coeffs):
            raise NotInK(f"{u} is not in K")
        return u.coeffs.get(self.identity, self.K.zero)

    def generator_names(self):
        names = [self.K.name] if hasattr(self.K, "name") else []
        return tuple(names + [f"{self.symbol}_{g}" for g in self.group])

    def right_basis(self):
        return [self.e(g) for g in self.group]

    def right_coords(self, u):
        u = self(u)
        return [u.coeffs.get(g, self.K.zero) for g in self.group]

    def from_right_coords(self, ks):
        return AlgebraElement(self, {g: self.K(k) for g, k in zip(self.group, ks)})

    def _k_basis(self):
        K = self.K
        deg = getattr(K, "degree", 1)
        if deg == 1 or not hasattr(K, "gen"):
            return [K.one]
        out = [K.one]
        for _ in range(1, deg):
            out.append(out[-1] * K.gen)
        return out

    def basis(self):
        return [self.e(g, k) for g in self.group for k in self._kbasis]

    spanning_set = basis
    f_basis = basis

    def f_coords(self, u):
        u = self(u)
        out = []
        for g in self.group:
            c = u.coeffs.get(g, self.K.zero)
            if len(self._kbasis) == 1:
                out.append(c)
            else:
                out.extend(c.coeffs)
        return out

    def from_f_coords(self, cs):
        d = len(self._kbasis)
        coeffs = {}
        for idx, g in enumerate(self.group):
            chunk = cs[idx * d:(idx + 1) * d]
            coeffs[g] = self.K.element(chunk) if d > 1 else self.K(chunk[0])
        return AlgebraElement(self, coeffs)

    # multiplication -------------------------------------------------------
    def mul(self, u, v):
        out = {}
        for s, c in u.coeffs.items():
            for t, d in v.coeffs.items():
                st = self.table[(s, t)]
                term = self.cocycle[(s, t)] * self.actions[t](c) * d
                out[st] = out[st] + term if st in out else term
        return AlgebraElement(self, out)

    def validate_cocycle(self):
        """Failing triples; normalization failures are reported as ``(s, t, None)``."""
        failures = []
        one = self.K.one
        for g in self.group:
            if self.cocycle[(self.identity, g)] != one:
                failures.append((self.identity, g, None))
            if g != self.identity and self.cocycle[(g, self.identity)] != one:
                failures.append((g, self.identity, None))
        for s in self.group:
            es = self.e(s)
            for t in self.group:
                est = es * self.e(t)
                for r in self.group:
                    er = self.e(r)
                    if est * er != es * (self.e(t) * er):
                        failures.append((s, t, r))
        return failures

    # involutions ----------------------------------------------------------
    def involution(self, e_images, k_image=None, check=True):
        """``e_images[g]`` is ``e_g*``; ``k_image`` the image of K's generator."""
        images = {f"{self.symbol}_{g}": img for g, img in e_images.items()}
        if k_image is not None:
            images[self.K.name] = k_image
        return AlgebraInvolution(self, images, check=check)

    def prepare_involution(self, inv):
        K = self.K
        kimg = inv.images.get(getattr(K, "name", None))
        if kimg is not None:
            kimg = self.to_K(kimg)
            if kimg == K.gen:
                kimg = None
        if kimg is None:
            inv.k_conj = K.conj
        else:
            powers = [K.one]
            for _ in range(1, K.degree):
                powers.append(powers[-1] * kimg)
            base_conj = K.base.conj

            def k_conj(c, powers=powers, base_conj=base_conj):
                c = K(c)
                acc = K.zero
                for ci, p in zip(c.coeffs, powers):
                    if not ci.is_zero():
                        acc = acc + p * base_conj(ci)
                return acc

            inv.k_conj = k_conj
        inv.e_star = {}
        for g in self.group:
            img = inv.images.get(f"{self.symbol}_{g}")
            inv.e_star[g] = self.e(g) if img is None else img

    def apply_involution(self, u, inv):
        u = self(u)
        acc = AlgebraElement(self, {})
        for g, c in u.coeffs.items():
            acc = acc + self.from_K(inv.k_conj(c)) * inv.e_star[g]
        return acc

    # display --------------------------------------------------------------
    def format(self, u):
        terms = []
        for g in self.group:
            if g not in u.coeffs:
                continue
            c = str(u.coeffs[g])
            if g == self.identity:
                terms.append(c)
            else:
                terms.append(format_term("1", f"{self.symbol}_{g}") if c == "1"
                             else f"{self.symbol}_{g}*{_wrap(c)}")
        return join_terms(terms)

    def __repr__(self):
        return f"CrossedProduct(K={self.K}, G={self.group})"


def cyclic_group(n, prefix="s"):
    """Labels, table and generator for Z/n: ``id, s, s2, ...``."""
    labels = ["id"] + [prefix if k == 1 else f"{prefix}{k}" for k in range(1, n)]
    table = {(labels[i], labels[j]): labels[(i + j) % n] for i in range(n) for j in range(n)}
    return labels, table


def crossed_from_symbol(D, involution=None):
    """The symbol algebra ``D`` as ``(F(x)/F, Phi)`` with ``e_{s^k} = y^k``.

    ``s`` acts by ``x -> eps^-1 x`` (from ``x y = y eps^-1 x``) and
    ``Phi(s^i, s^j) = b`` when ``i + j >= n``.  Returns the crossed product,
    the translated involution (or None) and the element map ``D -> C``.
    """
    n = D.n
    labels, table = cyclic_group(n)
    K = D.K
    x = K.gen
    einv = K(D.eps.inverse())
    actions = {labels[k]: {K.name: einv**k * x} for k in range(1, n)}
    cocycle = {(labels[i], labels[j]): D.b for i in range(n) for j in range(n) if i + j >= n}
    C = CrossedProduct(K, labels, table, actions, cocycle)

    def to_crossed(u):
        ks = D.right_coords(u)
        return C.from_right_coords(ks)

    inv = None
    if involution is not None:
        e_images = {labels[k]: to_crossed(involution(D.monomial(0, k))) for k in range(n)}
        k_image = to_crossed(involution(D.x))
        inv = C.involution(e_images, k_image)
    return C, inv, to_crossed
