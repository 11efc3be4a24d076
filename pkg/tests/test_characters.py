"""Degrees, central characters and indicator routes, triangulated.

The degree formula is checked against the identity column of the exactly
computed table for U(2) over F_9, and against the sum-of-squares identity
sum deg^2 = |G| for several (q, n).  Indicators are checked three ways on
all sixteen characters of U(2, F_9): brute-force averaging over squared
classes, the closed form on the semisimple and regular families, and the
two-core rule on unipotent labels.
"""

import pytest

from uqchar import cyclotomic
from uqchar.characters import (
    BRUTE_FS_MAX_N,
    census_semisimple,
    central_value,
    degree,
    fs_bruteforce,
    fs_semisimple_regular,
    fs_unipotent,
    is_real,
    is_regular,
    is_semisimple,
    is_unipotent,
    omega_exponent,
    symplectic_labels,
)
from uqchar.conjclasses import central_class, group_order
from uqchar.multipartition import MultiPartition, enumerate_multipartitions
from uqchar.symfunc import char_table
from uqchar.torus import (
    PHI,
    THETA,
    TorusContext,
    frobenius_orbit,
    one_orbit,
    sigma_orbit,
)


def _label(ctx, side, *pairs):
    resolved = []
    for (level, exponent), parts in pairs:
        resolved.append((frobenius_orbit(ctx, level, exponent, side), parts))
    return MultiPartition.make(side, resolved)


# -- degrees ---------------------------------------------------------------


def test_degree_sum_of_squares_is_group_order():
    for q, n in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (4, 2), (5, 2)]:
        ctx = TorusContext(q, n)
        total = sum(
            degree(ctx, lam) ** 2
            for lam in enumerate_multipartitions(ctx, n, THETA))
        assert total == group_order(ctx), (q, n)


def test_degree_sum_of_squares_u4():
    ctx = TorusContext(3, 4)
    total = sum(
        degree(ctx, lam) ** 2
        for lam in enumerate_multipartitions(ctx, 4, THETA))
    assert total == group_order(ctx)


def test_degree_matches_table_identity_column():
    ctx = TorusContext(3, 2)
    table = char_table(ctx)
    ident = _label(ctx, PHI, ((1, 0), (1, 1)))
    for lam in table.chars:
        assert table.value(lam, ident) == degree(ctx, lam)


def test_steinberg_degree_is_q_power():
    for q in (2, 3, 5):
        for n in range(1, 6):
            ctx = TorusContext(q, n)
            st = MultiPartition.make(THETA, [(one_orbit(ctx, THETA), (n,))])
            assert degree(ctx, st) == q ** (n * (n - 1) // 2)


def test_trivial_degree_is_one():
    for q in (2, 3, 4, 5):
        for n in range(1, 6):
            ctx = TorusContext(q, n)
            triv = MultiPartition.make(THETA, [(one_orbit(ctx, THETA), (1,) * n)])
            assert degree(ctx, triv) == 1


def test_degree_rejects_class_side():
    ctx = TorusContext(3, 2)
    mu = _label(ctx, PHI, ((1, 0), (2,)))
    with pytest.raises(ValueError):
        degree(ctx, mu)


# -- predicates ------------------------------------------------------------


def test_family_predicates():
    ctx = TorusContext(3, 2)
    triv = _label(ctx, THETA, ((1, 0), (1, 1)))
    st = _label(ctx, THETA, ((1, 0), (2,)))
    pair = MultiPartition.make(THETA, [
        (one_orbit(ctx, THETA), (1,)),
        (sigma_orbit(ctx), (1,)),
    ])
    lvl2 = _label(ctx, THETA, ((2, 1), (1,)))
    assert is_unipotent(triv) and is_unipotent(st)
    assert not is_unipotent(pair) and not is_unipotent(lvl2)
    assert is_semisimple(triv) and is_semisimple(pair) and is_semisimple(lvl2)
    assert not is_semisimple(st)
    assert is_regular(st) and is_regular(pair) and is_regular(lvl2)
    assert not is_regular(triv)


def test_reality_count_u2_f9():
    ctx = TorusContext(3, 2)
    labels = enumerate_multipartitions(ctx, 2, THETA)
    real = [lam for lam in labels if is_real(ctx, lam)]
    assert len(real) == 6
    real_ss = [lam for lam in real if is_semisimple(lam)]
    assert len(real_ss) == 4  # q^m + q^(m-1) at q = 3, m = 1


# -- central characters ----------------------------------------------------


def test_omega_examples():
    ctx = TorusContext(3, 2)
    # determinant-composed character theta_1: omega = 2 (z has determinant z^2)
    det1 = _label(ctx, THETA, ((1, 1), (1, 1)))
    assert omega_exponent(ctx, det1) == 2
    assert omega_exponent(ctx, _label(ctx, THETA, ((1, 0), (1, 1)))) == 0
    assert omega_exponent(ctx, _label(ctx, THETA, ((1, 0), (2,)))) == 0
    # the level-2 orbit {1,5} has exponent sum 6, descending to 3
    assert omega_exponent(ctx, _label(ctx, THETA, ((2, 1), (1,)))) == 3


def test_central_values_match_table():
    ctx = TorusContext(3, 2)
    table = char_table(ctx)
    for lam in table.chars:
        for alpha in range(4):
            mu = central_class(ctx, alpha)
            assert cyclotomic.same_value(
                table.value(lam, mu), central_value(ctx, lam, alpha))


def test_omega_additive_in_central_twist():
    # twisting a character by the determinant character shifts omega by 2c
    ctx = TorusContext(3, 2)
    for c in range(4):
        lam = _label(ctx, THETA, ((1, c), (1, 1)))
        assert omega_exponent(ctx, lam) == (2 * c) % 4


# -- indicators ------------------------------------------------------------


def test_fs_bruteforce_u2_f9_all_rows():
    ctx = TorusContext(3, 2)
    eps = {
        lam: fs_bruteforce(ctx, lam)
        for lam in enumerate_multipartitions(ctx, 2, THETA)}
    assert sorted(eps.values()) == [-1] + [0] * 10 + [1] * 5
    # the single symplectic row is the pair on the trivial and order-two
    # characters
    symp = MultiPartition.make(THETA, [
        (one_orbit(ctx, THETA), (1,)),
        (sigma_orbit(ctx), (1,)),
    ])
    assert eps[symp] == -1


def test_fs_triangulation_u2_f9():
    ctx = TorusContext(3, 2)
    for lam in enumerate_multipartitions(ctx, 2, THETA):
        brute = fs_bruteforce(ctx, lam)
        if not is_real(ctx, lam):
            assert brute == 0
            continue
        if is_semisimple(lam) or is_regular(lam):
            assert brute == fs_semisimple_regular(ctx, lam)
        if is_unipotent(lam):
            assert brute == fs_unipotent(ctx, lam)


def test_fs_bruteforce_u1():
    for q in (3, 5):
        ctx = TorusContext(q, 1)
        m1 = q + 1
        for lam in enumerate_multipartitions(ctx, 1, THETA):
            c = lam.orbits()[0].min_exponent
            expect = 1 if c in (0, m1 // 2) else 0
            assert fs_bruteforce(ctx, lam) == expect


def test_fs_bruteforce_bound():
    ctx = TorusContext(3, 3)
    lam = MultiPartition.make(THETA, [(one_orbit(ctx, THETA), (3,))])
    with pytest.raises(ValueError):
        fs_bruteforce(ctx, lam)
    assert BRUTE_FS_MAX_N == 2


def test_fs_unipotent_examples():
    ctx = TorusContext(3, 6)
    lam = MultiPartition.make(THETA, [(one_orbit(ctx, THETA), (3, 2, 1))])
    assert fs_unipotent(ctx, lam) == -1
    for n in (3, 5, 7, 9):
        ctx_n = TorusContext(3, n)
        hook = MultiPartition.make(
            THETA, [(one_orbit(ctx_n, THETA), (n - 1, 1))])
        assert fs_unipotent(ctx_n, hook) == -1
    ctx2 = TorusContext(3, 2)
    for parts, expect in [((1, 1), 1), ((2,), 1)]:
        lam = MultiPartition.make(THETA, [(one_orbit(ctx2, THETA), parts)])
        assert fs_unipotent(ctx2, lam) == expect


def test_fs_closed_form_rejects_non_real():
    ctx = TorusContext(3, 2)
    lam = _label(ctx, THETA, ((1, 1), (1, 1)))
    assert not is_real(ctx, lam)
    with pytest.raises(ValueError):
        fs_semisimple_regular(ctx, lam)


# -- census ----------------------------------------------------------------


def test_census_u2_f9():
    out = census_semisimple(TorusContext(3, 2))
    assert out["symplectic"] == 1
    assert out["orthogonal"] == 3
    assert out["real_total"] == 4
    assert out["route_agreement"] == 4


def test_census_u4_f9():
    out = census_semisimple(TorusContext(3, 4))
    assert out["symplectic"] == 3
    assert out["orthogonal"] == 9
    assert out["real_total"] == 12


def test_census_u2_f25():
    out = census_semisimple(TorusContext(5, 2))
    assert out["symplectic"] == 1
    assert out["orthogonal"] == 5
    assert out["real_total"] == 6


def test_census_odd_degree_has_no_symplectics():
    for q, n in [(3, 1), (3, 3), (5, 1)]:
        out = census_semisimple(TorusContext(q, n))
        assert out["symplectic"] == 0
        assert out["orthogonal"] == out["real_total"]


def test_census_even_q_has_no_symplectics():
    for q, n in [(2, 2), (4, 2)]:
        out = census_semisimple(TorusContext(q, n))
        assert out["symplectic"] == 0


def test_symplectic_labels_carry_odd_sigma_part():
    ctx = TorusContext(3, 4)
    labels = symplectic_labels(ctx)
    assert len(labels) == 3
    sig = sigma_orbit(ctx)
    for lam in labels:
        assert sum(lam.part_for(sig)) % 2 == 1
        assert is_semisimple(lam) and is_real(ctx, lam)
