"""The K-valued projection of an algebra onto a maximal subfield.

For a generator ``x`` of K over the center F with minimal polynomial
``chi(t) = t^n + a_{n-1} t^{n-1} + ... + a_0`` put
``y_i = a_0 x^(n-1-i) + a_1 x^(n-i) + ... + a_i x^(n-1)``; then

    f(z) = -(chi'(x) x^n)^(-1) * sum_i x^i z y_i

is unital, K-K bilinear and (for symmetric or antisymmetric ``x`` with
a star-invariant ``chi``) hermitian.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .algebra.crossed import CrossedProduct
from .algebra.symbol import SymbolAlgebra
from .errors import InvalidPresentation, NotInK, SearchExhausted
from .scalars.extension import SimpleExtension

log = logging.getLogger(__name__)

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"


@dataclass
class SubfieldPresentation:
    algebra: object
    x: object
    chi: list
    basis: list
    K: SimpleExtension
    involution: object = None
    flag: str = None
    _native: bool = field(default=False, repr=False)

    def __post_init__(self):
        D = self.algebra
        F = D.F
        self.chi = [F(c) for c in self.chi]
        if self.chi[-1] != F.one:
            raise InvalidPresentation("minimal polynomial must be monic")
        self.n = len(self.chi) - 1
        self.powers = [D.one]
        for _ in range(2 * self.n):
            self.powers.append(self.powers[-1] * self.x)
        chi_x = sum((self.powers[i] * c for i, c in enumerate(self.chi)), D(0))
        if not chi_x.is_zero():
            raise InvalidPresentation("generator does not satisfy its minimal polynomial")
        if self.involution is not None:
            xs = self.involution(self.x)
            if xs == self.x:
                self.flag = SYMMETRIC
            elif xs == -self.x:
                self.flag = ANTISYMMETRIC
            else:
                raise InvalidPresentation("generator is neither symmetric nor antisymmetric")
            if any(F.conj(c) != c for c in self.chi):
                raise InvalidPresentation("minimal polynomial is not star-invariant")
            if self.flag == ANTISYMMETRIC and any(
                    not c.is_zero() for i, c in enumerate(self.chi) if (self.n - i) % 2):
                raise InvalidPresentation(
                    "antisymmetric generator needs an even minimal polynomial")
        a = self.chi
        n = self.n
        self.ys = []
        for i in range(n):
            acc = D(0)
            for k in range(i + 1):
                acc = acc + self.powers[n - 1 - i + k] * a[k]
            self.ys.append(acc)
        dchi = D(0)
        for i in range(1, n + 1):
            dchi = dchi + self.powers[i - 1] * (a[i] * i)
        self.scale = -D.inverse(dchi * self.powers[n])

    def embed(self, k):
        k = self.K(k)
        if self._native:
            return self.algebra.from_K(k)
        acc = self.algebra(0)
        for i, c in enumerate(k.coeffs):
            acc = acc + self.powers[i] * c
        return acc

    def to_K(self, u):
        if self._native:
            return self.algebra.to_K(u)
        D = self.algebra
        cols = [D.f_coords(self.powers[i]) for i in range(self.n)]
        sol = linalg.solve_in_span(cols, D.f_coords(u))
        if sol is None:
            raise NotInK(f"{u} is not in the subfield generated by {self.x}")
        return self.K.element(sol)


def symbol_presentation(D: SymbolAlgebra, involution=None):
    """``x`` with ``x^n = a`` and the right K-basis ``1, y, ..., y^(n-1)``."""
    chi = [-D.a] + [D.F.zero] * (D.n - 1) + [D.F.one]
    return SubfieldPresentation(D, D.x, chi, D.right_basis(), D.K, involution, _native=True)


def crossed_presentation(C: CrossedProduct, involution=None):
    """K's own generator and the basis ``(e_g)``."""
    return SubfieldPresentation(C, C.from_K(C.K.gen), list(C.K.minpoly), C.right_basis(), C.K,
                                involution, _native=True)


def default_presentation(D, involution=None):
    if isinstance(D, CrossedProduct):
        return crossed_presentation(D, involution)
    return symbol_presentation(D, involution)


def custom_presentation(D, x, chi, basis, involution=None, name="t"):
    """Presentation from an arbitrary generator ``x`` of a maximal subfield."""
    K = SimpleExtension(D.F, name, chi, check=False)
    return SubfieldPresentation(D, D(x), chi, basis, K, involution)


def projection_f(z, p: SubfieldPresentation):
    D = p.algebra
    z = D(z)
    acc = D(0)
    for i in range(p.n):
        acc = acc + p.powers[i] * z * p.ys[i]
    val = p.scale * acc
    if val * p.x != p.x * val:
        raise NotInK("projection does not commute with the generator")
    return p.to_K(val)


def projection_f_crossed(z):
    """The identity coefficient of ``z = sum_g e_g c_g``."""
    C = z.algebra
    return z.coeffs.get(C.identity, C.K.zero)


def reduced_trace(z, p: SubfieldPresentation):
    return p.K.trace(projection_f(z, p))


# --- star generators of K/F -----------------------------------------------------

def _generates(K, t):
    """True if ``t`` has degree [K:F] over the base F."""
    pw = [K.one]
    for _ in range(1, K.degree):
        pw.append(pw[-1] * t)
    return linalg.rank([list(e.coeffs) for e in pw]) == K.degree


def _antisymmetric_base_element(F):
    for g in F.all_gens().values():
        k = g - F.conj(g)
        if not k.is_zero():
            return k
    return None


def primitive_star_generator(K, seed=0, max_tries=64, bound=2, conj=None):
    """A generator ``t`` of ``K`` over its base with ``t* = +-t``.

    Returns ``(t, flag)``.  ``conj`` overrides ``K.conj`` (the involution).
    """
    conj = conj or K.conj
    F = K.base
    theta = K.gen
    ts = conj(theta)
    if _generates(K, theta):
        if ts == theta:
            return theta, SYMMETRIC
        if ts == -theta:
            return theta, ANTISYMMETRIC
    if all(conj(g) == g for g in K.all_gens().values()):
        # trivial involution: every generator is symmetric
        return theta, SYMMETRIC
    rng = random.Random(seed)
    base_gens = list(F.all_gens().values())
    for attempt in range(max_tries):
        if attempt == 0:
            th = theta
        else:
            th = theta + sum((K(Fraction(rng.randint(-bound, bound))) * K(g) for g in base_gens),
                             K.zero)
        u = th - conj(th)
        if u.is_zero():
            if attempt and attempt % 8 == 0:
                bound *= 2
            continue
        v = u * (th + conj(th))
        cands = [u, v] + [u + v * rng.randint(1, bound) for _ in range(3)]
        for cand in cands:
            if not cand.is_zero() and _generates(K, cand):
                if F.has_trivial_involution():
                    return cand, ANTISYMMETRIC
                k = _antisymmetric_base_element(F)
                return cand * K(k), SYMMETRIC
        if attempt and attempt % 8 == 0:
            bound *= 2
    raise SearchExhausted(f"no star generator found after {max_tries} attempts")
