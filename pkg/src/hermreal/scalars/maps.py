"""Field automorphisms given by generator-image tables."""
from __future__ import annotations

from ..errors import InvalidAutomorphism
from . import upoly
from .extension import ExtElem, SimpleExtension
from .funcfield import FracElem
from .rationals import Rat


class TowerMap:
    """A ring endomorphism of a tower, fixed by the images of generators.

    Generators missing from ``images`` are fixed.  An image must live in the
    level that introduces its generator (so the map preserves every level).
    """

    def __init__(self, field, images=None, check=True, label=None):
        self.field = field
        self.label = label
        self.images = {}
        levels = {}
        for f in field.tower():
            for name in f.gens():
                levels[name] = f
        for name, img in (images or {}).items():
            if name not in levels:
                raise InvalidAutomorphism(f"unknown generator {name!r}")
            try:
                self.images[name] = levels[name](img)
            except TypeError as exc:
                raise InvalidAutomorphism(
                    f"image of {name} does not lie in its level: {exc}") from exc
        self._powers = {}
        if check:
            self._check()

    def _check(self):
        for f in self.field.tower():
            if isinstance(f, SimpleExtension) and f.name in self.images:
                mapped = [self.apply(c) for c in f.minpoly]
                img = self.images[f.name]
                if not upoly.evaluate(mapped, img, f.zero).is_zero():
                    raise InvalidAutomorphism(
                        f"image of {f.name} is not a root of its minimal polynomial")

    def image(self, name):
        return self.images.get(name)

    def _gen_powers(self, f):
        pw = self._powers.get(id(f))
        if pw is None:
            img = self.images[f.name]
            pw = [f.one]
            for _ in range(1, f.degree):
                pw.append(pw[-1] * img)
            self._powers[id(f)] = pw
        return pw

    def apply(self, e):
        if isinstance(e, int):
            return e
        if isinstance(e, Rat):
            return e
        f = e.field
        if isinstance(e, ExtElem):
            cs = [self.apply(c) for c in e.coeffs]
            if f.name not in self.images:
                return ExtElem(f, tuple(f.base(c) for c in cs))
            acc = f.zero
            for c, p in zip(cs, self._gen_powers(f)):
                if not c.is_zero():
                    acc = acc + p * c
            return acc
        if isinstance(e, FracElem):
            moved = [v for v in f.variables if v in self.images]
            num = e.num.map_coeffs(lambda c: f.base(self.apply(c)))
            den = e.den.map_coeffs(lambda c: f.base(self.apply(c)))
            if not moved:
                return FracElem.make(f, num, den)
            return self._eval(f, num) / self._eval(f, den)
        raise TypeError(f"cannot apply a field map to {e!r}")

    def _eval(self, f, poly):
        vals = [self.images.get(v, f.var(v)) for v in f.variables]
        acc = f.zero
        for exp, c in poly.terms.items():
            t = f(c)
            for v, k in zip(vals, exp):
                if k:
                    t = t * v**k
            acc = acc + t
        return acc

    __call__ = apply

    def then(self, other, label=None):
        """The map ``k -> other(self(k))``."""
        names = set(self.images) | set(other.images)
        gens = self.field.all_gens()
        imgs = {n: other.apply(self.apply(gens[n])) for n in names}
        return TowerMap(self.field, imgs, check=False, label=label)

    def agrees_with(self, other):
        gens = self.field.all_gens()
        return all(self.apply(g) == other.apply(g) for g in gens.values())

    def is_identity(self):
        gens = self.field.all_gens()
        return all(self.apply(g) == g for g in gens.values())

    def __repr__(self):
        body = ", ".join(f"{k} -> {v}" for k, v in self.images.items())
        return f"TowerMap({body})"


def identity_map(field):
    return TowerMap(field, {}, check=False, label="id")


def apply_field_involution(e):
    """Designated involution of the element's tower."""
    return e.field.conj(e)


def galois_automorphism(e, sigma):
    """``e`` mapped by ``sigma`` (a :class:`TowerMap` or an image table)."""
    if not isinstance(sigma, TowerMap):
        sigma = TowerMap(e.field, sigma)
    return sigma.apply(e)


def commutes_with_involution(sigma, field=None):
    """``(k*)^sigma == (k^sigma)*`` on every tower generator."""
    field = field or sigma.field
    for g in field.all_gens().values():
        if sigma.apply(field.conj(g)) != field.conj(sigma.apply(g)):
            return False
    return True
