"""Frobenius orbits, norms, character lifts, and the torus pairing."""

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uqchar.cyclotomic import embed, from_rational, zeta
from uqchar.torus import (
    PHI,
    THETA,
    OrbitLabel,
    TorusContext,
    conjugate_orbit,
    count_exact_orbits,
    delta_orbit,
    delta_orbit_inv,
    exact_orbits,
    frobenius_orbit,
    lift_character,
    lift_element,
    modulus_of,
    norm,
    norm_multiplier,
    one_orbit,
    orbit_exponent_sum,
    orbit_exponents,
    orbits_up_to,
    pairing,
    sigma_orbit,
    to_level_one,
)


def test_context_validation():
    with pytest.raises(ValueError):
        TorusContext(6, 2)  # not a prime power
    with pytest.raises(ValueError):
        TorusContext(1, 2)
    with pytest.raises(ValueError):
        TorusContext(3, 0)
    ctx = TorusContext(3, 4)
    assert ctx.top_level == 12
    with pytest.raises(ValueError):
        ctx.modulus(5)  # 5 does not divide lcm(1..4)


def test_moduli_values():
    assert [modulus_of(3, d) for d in (1, 2, 3, 4)] == [4, 8, 28, 80]
    assert [modulus_of(2, d) for d in (1, 2, 3, 4)] == [3, 3, 9, 15]
    assert [modulus_of(5, d) for d in (1, 2)] == [6, 24]
    # M_r | M_m whenever r | m
    for q in (2, 3, 4, 5, 7, 9):
        for m in range(1, 7):
            for r in (d for d in range(1, m + 1) if m % d == 0):
                assert modulus_of(q, m) % modulus_of(q, r) == 0


def test_norm_multiplier():
    assert norm_multiplier(3, 2, 1) == 1 - 3 == -2
    assert norm_multiplier(3, 4, 2) == 1 + 9 == 80 // 8  # sum of (-3)^(2i), i < 2
    assert norm_multiplier(3, 4, 1) == 1 - 3 + 9 - 27 == -80 // 4
    # transitivity of the multipliers as exact integers
    for q in (2, 3, 5):
        for m, r, s in [(4, 2, 1), (6, 3, 1), (6, 2, 1), (4, 4, 2)]:
            assert norm_multiplier(q, m, r) * norm_multiplier(q, r, s) == \
                norm_multiplier(q, m, s)


def test_level_one_orbits_q3():
    ctx = TorusContext(3, 2)
    orbits = exact_orbits(ctx, 1, THETA)
    assert [o.min_exponent for o in orbits] == [0, 1, 2, 3]
    assert all(o.size == 1 for o in orbits)


def test_level_two_orbits_q3():
    ctx = TorusContext(3, 2)
    orbits = exact_orbits(ctx, 2, THETA)
    assert [(o.min_exponent, orbit_exponents(ctx, o)) for o in orbits] == [
        (1, (1, 5)), (3, (3, 7))]
    # the remaining level-2 exponents 0, 2, 4, 6 descend to level 1
    down = [frobenius_orbit(ctx, 2, e, THETA) for e in (0, 2, 4, 6)]
    assert [(o.level, o.min_exponent) for o in down] == [
        (1, 0), (1, 3), (1, 2), (1, 1)]


def test_q2_levels_collapse():
    # M_1 = M_2 = 3 at q = 2: no exact level-2 orbits at all
    ctx = TorusContext(2, 2)
    assert exact_orbits(ctx, 2, PHI) == ()
    o = frobenius_orbit(ctx, 2, 1, PHI)
    assert (o.level, o.min_exponent) == (1, 2)  # g_2 = g_1^(-1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9])
def test_orbit_partition_and_moebius_counts(q):
    ctx = TorusContext(q, 6)
    for d in range(1, 7):
        orbits = exact_orbits(ctx, d, PHI)
        assert len(orbits) == count_exact_orbits(ctx, d)
        # orbits of exact sizes r | d tile T_d
        assert sum(r * count_exact_orbits(ctx, r)
                   for r in range(1, d + 1) if d % r == 0) == ctx.modulus(d)
        for o in orbits:
            exps = orbit_exponents(ctx, o)
            assert len(set(exps)) == d and min(exps) == o.min_exponent


def test_orbit_label_serialization():
    o = OrbitLabel(2, 1, THETA)
    assert o.to_str() == "theta:2:1"
    assert OrbitLabel.from_str("theta:2:1") == o
    assert OrbitLabel.from_str("phi:1:3") == OrbitLabel(1, 3, PHI)
    with pytest.raises(ValueError):
        OrbitLabel(1, 0, "chi")


def test_conjugate_orbit():
    ctx = TorusContext(3, 2)
    assert conjugate_orbit(ctx, OrbitLabel(1, 1, THETA)) == OrbitLabel(1, 3, THETA)
    assert conjugate_orbit(ctx, OrbitLabel(2, 1, THETA)) == OrbitLabel(2, 3, THETA)
    for q in (3, 5):
        ctx = TorusContext(q, 4)
        for o in orbits_up_to(ctx, 4, PHI):
            assert conjugate_orbit(ctx, conjugate_orbit(ctx, o)) == o


def test_norm_example_and_transitivity():
    ctx = TorusContext(3, 4)
    # q=3, m=2, r=1, e=1: multiplier S = -2; image generates T_1
    assert norm(ctx, 2, 1, 1) == 1
    assert gcd(norm(ctx, 2, 1, 1), ctx.modulus(1)) == 1
    # exhaustive transitivity through level 2, all of T_4
    for e in range(ctx.modulus(4)):
        assert norm(ctx, 4, 1, e) == norm(ctx, 2, 1, norm(ctx, 4, 2, e))
    with pytest.raises(ValueError):
        norm(ctx, 4, 3, 1)


@settings(max_examples=80, deadline=None)
@given(q=st.sampled_from([2, 3, 5, 7]),
       mr=st.sampled_from([(2, 1), (3, 1), (4, 2), (4, 1), (6, 2), (6, 3)]),
       e=st.integers(0, 10**6))
def test_norm_after_inclusion_is_power(q, mr, e):
    m, r = mr
    ctx = TorusContext(q, 6 if m in (3, 6) else 4)
    x = e % ctx.modulus(r)
    # N_{m,r} restricted to T_r raises to the (m/r)-th power
    assert norm(ctx, m, r, lift_element(ctx, r, m, x)) == (m // r) * x % ctx.modulus(r)


def test_pairing_basics():
    ctx = TorusContext(3, 2)
    assert pairing(ctx, 1, 1, 1, 1) == zeta(4)
    assert pairing(ctx, 0, 1, 3, 1) == from_rational(4, 1)
    # U(1) character table is the Fourier matrix of Z/4
    for c in range(4):
        for e in range(4):
            assert pairing(ctx, c, 1, e, 1) == zeta(4, c * e)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_sigma_pairs_to_minus_one_with_generators(q):
    ctx = TorusContext(q, 4)
    sig = sigma_orbit(ctx)
    assert sig.min_exponent == (q + 1) // 2
    for d in (1, 2, 4):
        val = pairing(ctx, sig.min_exponent, 1, 1, d)
        assert val == from_rational(ctx.modulus(d), -1)


def test_pairing_norm_compatibility_sample():
    # xi(a)_m = xi(a)_r^(m/r): the full r | m <= 4 sweep is acceptance 9
    ctx = TorusContext(3, 4)
    for (r, m) in [(1, 2), (2, 4), (1, 4)]:
        big = ctx.modulus(m)
        for c in range(ctx.modulus(r)):
            for a in range(ctx.modulus(r)):
                lhs = pairing(ctx, c, r, lift_element(ctx, r, m, a), m)
                rhs = embed(pairing(ctx, c, r, a, r), big) ** (m // r)
                assert lhs == rhs, (r, m, c, a)


def test_to_level_one():
    ctx = TorusContext(3, 2)
    assert [to_level_one(ctx, 2, c) for c in (0, 2, 4, 6)] == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        to_level_one(ctx, 2, 1)  # not Frobenius-fixed
    # round trip through the character lift
    for c1 in range(4):
        assert to_level_one(ctx, 2, lift_character(ctx, 1, 2, c1)) == c1


def test_orbit_exponent_sum_descends():
    ctx = TorusContext(3, 2)
    s = orbit_exponent_sum(ctx, OrbitLabel(2, 1, THETA))
    assert s == 6
    assert to_level_one(ctx, 2, s) == 3


def test_delta_is_exponent_identity():
    o = OrbitLabel(2, 1, THETA)
    assert delta_orbit(o) == OrbitLabel(2, 1, PHI)
    assert delta_orbit_inv(delta_orbit(o)) == o
    with pytest.raises(ValueError):
        delta_orbit(OrbitLabel(2, 1, PHI))
    ctx = TorusContext(3, 1)
    assert delta_orbit(sigma_orbit(ctx)) == OrbitLabel(1, 2, PHI)
    assert delta_orbit(one_orbit(ctx)) == OrbitLabel(1, 0, PHI)


@pytest.mark.parametrize("q", [3, 5])
def test_odd_self_conjugate_orbits_are_one_or_sigma(q):
    # levels <= 5: every self-conjugate orbit of odd size is {1} or {sigma}
    ctx = TorusContext(q, 5)
    allowed = {one_orbit(ctx), sigma_orbit(ctx)}
    for d in (1, 3, 5):
        for o in exact_orbits(ctx, d, THETA):
            if conjugate_orbit(ctx, o) == o:
                assert o in allowed, o


def test_sigma_needs_odd_q():
    with pytest.raises(ValueError):
        sigma_orbit(TorusContext(4, 2))
