"""Self-dual polynomials over F_q and their match with character labels.

For monic h with h(0) != 0 the dual is h~(x) = h(0)^(-1) x^deg(h) h(1/x),
i.e. the reversed coefficient tuple scaled monic again.  Self-dual means
h~ = h, which forces h(0)^2 = 1 and the coefficient symmetry
c_i = h(0) c_(n-i); for constant -1 in odd characteristic the middle
coefficient of an even-degree polynomial must vanish.  Counting by the free
coefficients gives q^(n/2) polynomials with constant +1 and q^(n/2 - 1)
with constant -1 in even degree n.

A real semisimple character label is realized as a polynomial through the
exponent-identity relabelling onto element orbits: each Frobenius orbit of
eigenvalue exponents, taken together with its conjugate orbit, multiplies
out to an F_q-rational factor prod (x + gamma^e) computed in the field
F_{q^(2d)} that holds the order-M_d eigenvalues.  The product over the label
is monic of degree n and self-dual, and the sign of its constant term is the
subject of the census cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .characters import is_real, is_semisimple
from .gf import (
    GF,
    ext_field,
    field_pow,
    irreducibles,
    poly_mul,
    poly_divmod,
    poly_pow,
    poly_trim,
    subgroup_generator,
)
from .multipartition import MultiPartition, delta_map
from .torus import THETA, TorusContext, conjugate_orbit, orbit_exponents


def dual_poly(F, h):
    """h(0)^(-1) x^deg h(1/x): reverse the coefficients, rescale monic."""
    h = poly_trim(F, h)
    if not h or h[0] == F.zero:
        raise ValueError("dual needs a nonzero constant term")
    scale = F.inv(h[0])
    return tuple(F.mul(scale, c) for c in reversed(h))


def is_self_dual(F, h) -> bool:
    h = poly_trim(F, h)
    if not h or h[0] == F.zero:
        return False
    return dual_poly(F, h) == h


def factor_monic(F, h):
    """Factor a monic polynomial into irreducibles, in (degree, counter) order."""
    h = poly_trim(F, h)
    if not h or h[-1] != F.one:
        raise ValueError("expected a monic polynomial")
    out = []
    rest = h
    d = 1
    while len(rest) - 1 >= 1:
        if d > (len(rest) - 1) // 2:
            out.append((rest, 1))
            break
        for g in irreducibles(F, d):
            mult = 0
            while True:
                quot, rem = poly_divmod(F, rest, g)
                if rem:
                    break
                rest = quot
                mult += 1
            if mult:
                out.append((g, mult))
        d += 1
    # merge the possible top-level irreducible with equal earlier factors
    merged: dict = {}
    for g, m in out:
        merged[g] = merged.get(g, 0) + m
    return tuple(sorted(merged.items(), key=lambda gm: (len(gm[0]), gm[0])))


@dataclass(frozen=True)
class SelfDualFactorization:
    """Factor structure of a self-dual polynomial.

    s and t count the factors x - 1 and x + 1; pairs holds (g, g~, mult) for
    dual pairs of distinct irreducibles, selfduals holds (v, mult) for
    self-dual irreducibles other than x -+ 1.  In characteristic two the two
    linear factors coincide and t is zero by convention.
    """

    s: int
    t: int
    pairs: tuple
    selfduals: tuple


def selfdual_factorization(F, h) -> SelfDualFactorization:
    h = poly_trim(F, h)
    if not is_self_dual(F, h):
        raise ValueError("not a self-dual polynomial")
    x_minus_1 = (F.neg(F.one), F.one)
    x_plus_1 = (F.one, F.one)
    s = t = 0
    pairs = []
    selfduals = []
    factors = dict(factor_monic(F, h))
    for g in sorted(factors, key=lambda g: (len(g), g)):
        if g not in factors:
            continue
        m = factors.pop(g)
        gd = dual_poly(F, g)
        if g == x_minus_1:
            s = m
        elif g == x_plus_1:
            t = m
        elif gd == g:
            selfduals.append((g, m))
        else:
            m2 = factors.pop(gd, 0)
            assert m2 == m, f"dual factor multiplicities differ for {g}"
            pairs.append((g, gd, m))
    # reassemble and compare
    acc = poly_pow(F, x_minus_1, s)
    acc = poly_mul(F, acc, poly_pow(F, x_plus_1, t))
    for g, gd, m in pairs:
        acc = poly_mul(F, acc, poly_pow(F, poly_mul(F, g, gd), m))
    for v, m in selfduals:
        acc = poly_mul(F, acc, poly_pow(F, v, m))
    assert acc == h, "factorization failed to reassemble"
    return SelfDualFactorization(s, t, tuple(pairs), tuple(selfduals))


def enumerate_self_dual(F, n: int, constant: int | None = None):
    """All monic self-dual polynomials of degree n, sorted by coefficients.

    constant restricts h(0) to +1 or -1 (ints); None allows both.  In
    characteristic two the two constants coincide.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    sides = [F.one, F.neg(F.one)] if constant is None else [
        F.one if constant == 1 else F.neg(F.one)]
    seen = set()
    out = []
    for c0 in sides:
        if c0 in seen:
            continue
        seen.add(c0)
        sign = 1 if c0 == F.one else -1
        free = list(range(1, (n + 1) // 2))
        has_middle = n % 2 == 0
        middle_free = has_middle and (c0 == F.one)
        slots = free + ([n // 2] if middle_free else [])
        for choice in iproduct(list(F.elements()), repeat=len(slots)):
            h = [F.zero] * (n + 1)
            h[0] = c0
            h[n] = F.one
            for pos, val in zip(slots, choice):
                h[pos] = val
            for i in range(1, (n + 1) // 2):
                h[n - i] = h[i] if sign == 1 else F.neg(h[i])
            # middle coefficient: forced zero when the constant is -1
            hh = tuple(h)
            assert is_self_dual(F, hh), hh
            out.append(hh)
    return tuple(sorted(out))


def count_by_constant(F, n: int, constant: int) -> int:
    return len(enumerate_self_dual(F, n, constant))


def brute_force_self_dual(F, n: int, constant: int | None = None):
    """Filter all monic degree-n polynomials; the independent oracle."""
    out = []
    want = None
    if constant is not None:
        want = F.one if constant == 1 else F.neg(F.one)
    for tail in iproduct(list(F.elements()), repeat=n):
        h = tail + (F.one,)
        if h[0] == F.zero:
            continue
        if want is not None and h[0] != want:
            continue
        if is_self_dual(F, h):
            out.append(h)
    return tuple(sorted(out))


def orbit_polynomial(ctx: TorusContext, orbit):
    """The F_q-rational factor of an element orbit: prod (x + gamma^e) over
    the orbit joined with its conjugate, coefficients coerced to F_q."""
    base = GF(ctx.q)
    d = orbit.level
    L = ext_field(base, 2 * d)
    gamma = subgroup_generator(L, ctx.modulus(d))
    exps = set(orbit_exponents(ctx, orbit))
    exps |= set(orbit_exponents(ctx, conjugate_orbit(ctx, orbit)))
    poly = (L.one,)
    for e in sorted(exps):
        poly = poly_mul(L, poly, (field_pow(L, gamma, e), L.one))
    return tuple(L.to_base(c) for c in poly)


def char_to_polynomial(ctx: TorusContext, lam: MultiPartition):
    """The self-dual polynomial of a real semisimple character label."""
    if lam.side != THETA:
        raise ValueError("expected a character label")
    if not is_semisimple(lam):
        raise ValueError("realization covers semisimple labels only")
    if not is_real(ctx, lam):
        raise ValueError("realization covers real labels only")
    n = lam.size
    base = GF(ctx.q)
    delta = delta_map(ctx, lam)
    h = (base.one,)
    done = set()
    for f, parts in delta.entries:
        if f in done:
            continue
        partner = conjugate_orbit(ctx, f)
        assert delta.part_for(partner) == parts, (f, partner)
        done.add(f)
        done.add(partner)
        h = poly_mul(base, h, poly_pow(base, orbit_polynomial(ctx, f), sum(parts)))
    assert len(h) - 1 == n and h[-1] == base.one, (lam, h)
    assert is_self_dual(base, h), (lam, h)
    return h
