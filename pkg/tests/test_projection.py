"""The subfield projection f and the reduced trace."""
import random

import pytest

from hermreal.errors import InvalidPresentation
from hermreal.matrixrep import RepresentationContext
from hermreal.projection import (SubfieldPresentation, custom_presentation, default_presentation,
                                 primitive_star_generator, projection_f, projection_f_crossed,
                                 reduced_trace)
from hermreal.reality import lambda_trace, trace_value
from hermreal.sampling import random_algebra_element, random_element

FIXTURES = ["quat23", "D3", "D3var", "quat_ab"]


@pytest.fixture(params=FIXTURES)
def algebra(request):
    return request.getfixturevalue(request.param)


def oracle_f(u):
    """``k_0`` in ``u = sum_j y^j k_j``: f kills y^j for j != 0."""
    return u.algebra.right_coords(u)[0]


def test_projection_laws(algebra):
    D, inv = algebra
    p = default_presentation(D, inv)
    ctx = RepresentationContext(D, inv, p)
    conj = ctx.kconj
    rng = random.Random(11)
    assert projection_f(D.one, p) == p.K.one
    for _ in range(25):
        z = random_algebra_element(D, rng)
        fz = projection_f(z, p)
        assert fz == oracle_f(z)
        assert projection_f(inv(z), p) == conj(fz)
        k1, k2 = random_element(p.K, rng), random_element(p.K, rng)
        assert projection_f(p.embed(k1) * z * p.embed(k2), p) == k1 * fz * k2
        assert p.x * p.embed(fz) == p.embed(fz) * p.x
        assert projection_f(p.embed(k1), p) == k1


def test_trace_routes_agree(algebra):
    D, inv = algebra
    ctx = RepresentationContext(D, inv)
    rng = random.Random(5)
    for _ in range(15):
        z = random_algebra_element(D, rng)
        assert trace_value(z, ctx) == lambda_trace(z, ctx)


def test_quaternion_trace_is_twice_the_scalar_part(quat23):
    Q, inv = quat23
    ctx = RepresentationContext(Q, inv)
    z = Q(3) + Q.x * 5 - Q.y + Q.x * Q.y * 7
    assert reduced_trace(z, ctx.presentation) == Q.F(6)


def test_crossed_projection_is_identity_coefficient(crossed_quat):
    C, cinv, _ = crossed_quat
    p = default_presentation(C, cinv)
    rng = random.Random(2)
    for _ in range(20):
        z = random_algebra_element(C, rng)
        assert projection_f(z, p) == projection_f_crossed(z)


def test_custom_generator_j(quat23):
    """K = Q(j) with j^2 = 3; basis 1, i.  Same laws, different subfield."""
    Q, inv = quat23
    p = custom_presentation(Q, Q.y, [-3, 0, 1], [Q.one, Q.x], inv, name="t")
    rng = random.Random(4)
    assert projection_f(Q.one, p) == p.K.one
    assert projection_f(Q.x, p).is_zero()
    for _ in range(20):
        z = random_algebra_element(Q, rng)
        fz = projection_f(z, p)
        k = random_element(p.K, rng)
        assert projection_f(p.embed(k) * z, p) == k * fz
        assert projection_f(inv(z), p) == fz  # trivial involution on Q(j)


def test_antisymmetric_generator(quat23):
    """i* = -i under the standard involution: chi = t^2 - 2 is even."""
    Q, _ = quat23
    std = Q.involution(-Q.x, -Q.y)
    p = SubfieldPresentation(Q, Q.x, [-2, 0, 1], [Q.one, Q.y], Q.K, std)
    assert p.flag == "antisymmetric"
    assert projection_f(std(Q.x * Q.y + Q.x), p) == -Q.K.gen


def test_presentation_rejects_wrong_polynomial(quat23):
    Q, inv = quat23
    with pytest.raises(InvalidPresentation):
        custom_presentation(Q, Q.y, [-2, 0, 1], [Q.one, Q.x], inv)
    # (i + k)^2 = -4 but (i + k)* = i - k
    with pytest.raises(InvalidPresentation):
        custom_presentation(Q, Q.x + Q.x * Q.y, [4, 0, 1], [Q.one, Q.y], inv)


def test_primitive_star_generator(Qeps, sqrt2):
    from hermreal.scalars import NumberField

    gi = NumberField("g", [1, 0, 1])
    gi.set_involution(-gi.gen)
    g, flag = primitive_star_generator(gi)
    assert flag == "antisymmetric" and gi.conj(g) == -g
    g, flag = primitive_star_generator(sqrt2)
    assert flag == "symmetric"
