from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hermreal.algebra import SymbolAlgebra, crossed_from_symbol, quaternion
from hermreal.scalars import QQ, FunctionField, MPoly, NumberField, cyclotomic3

settings.register_profile("repo", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def ext_elements(K, coeffs=small):
    """Elements of a simple extension of Q."""
    return st.lists(coeffs, min_size=K.degree, max_size=K.degree).map(K.element)


def funcfield_elements(F, base_elements, max_terms=3):
    mono = st.tuples(*[st.integers(0, 2)] * F.nvars)
    poly = st.dictionaries(mono, base_elements, max_size=max_terms).map(
        lambda d: MPoly({e: F.base(c) for e, c in d.items() if not F.base(c).is_zero()}, F.nvars))
    nonzero = poly.filter(lambda p: bool(p.terms))
    return st.builds(F.fraction, poly, nonzero)


def symbol_elements(D, coeff):
    n = D.n
    return st.lists(coeff, min_size=n * n, max_size=n * n).map(
        lambda cs: sum((D.monomial(i, j, cs[i * n + j]) for i in range(n) for j in range(n)),
                       D(0)))


@pytest.fixture(scope="session")
def Qeps():
    return cyclotomic3()


@pytest.fixture(scope="session")
def Fab(Qeps):
    return FunctionField(Qeps, ["a", "b"])


@pytest.fixture(scope="session")
def D3(Fab):
    """x^3 = a, y^3 = b, yx = eps xy over Q(eps)(a, b); x* = x, y* = y."""
    D = SymbolAlgebra(Fab, 3, Fab.var("a"), Fab.var("b"), Fab(Fab.base.gen))
    return D, D.involution(D.x, D.y)


@pytest.fixture(scope="session")
def D3var(Qeps):
    D = SymbolAlgebra(Qeps, 3, 2, 2, Qeps.gen)
    return D, D.involution(D.x, D.y)


@pytest.fixture(scope="session")
def sqrt2():
    return NumberField("i", [-2, 0, 1], embeddings=[(1, 2), (-2, -1)])


@pytest.fixture(scope="session")
def quat23(sqrt2):
    """(2, 3)_Q with i* = i, j* = j over K = Q(sqrt 2)."""
    Q = quaternion(QQ, 2, 3, K=sqrt2)
    return Q, Q.involution(Q.x, Q.y)


@pytest.fixture(scope="session")
def quat_ab():
    F = FunctionField(QQ, ["a", "b"])
    Q = quaternion(F, F.var("a"), F.var("b"))
    return Q, Q.involution(Q.x, Q.y)


@pytest.fixture(scope="session")
def crossed_quat(quat23):
    Q, inv = quat23
    C, cinv, to_c = crossed_from_symbol(Q, inv)
    return C, cinv, to_c


def frac(x):
    return Fraction(x)
