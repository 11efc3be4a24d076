"""Tori of the unitary groups in exponent coordinates, with Frobenius orbits.

T_d is cyclic of order M_d = q^d - (-1)^d.  A compatible family of generators
g_d = N_{N,d}(g_N) (N = lcm(1..n)) is fixed once and for all; every element of
T_d is stored as its exponent in g_d, every character of T_d as its exponent
against g_d.  In these coordinates:

  * the Frobenius acts on both sides by e -> -q e  (mod M_d);
  * the norm N_{m,r}: T_m -> T_r for r | m is reduction mod M_r, because the
    geometric multiplier S_{m,r} = sum_{i<m/r} (-q)^{ri} satisfies
    S_{N,m} S_{m,r} = S_{N,r} as integers (norm() recomputes the literal
    multiplier and asserts the equivalence on every call);
  * the inclusion T_r -> T_m is multiplication by S_{m,r};
  * the transpose-of-norm on characters is multiplication by M_m / M_r.

Orbits are canonicalized at their exact level (the level equals the orbit
size), keyed by the minimal exponent in the orbit at that level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import lcm

from . import cyclotomic
from .nt import divisors, moebius, prime_power

THETA = "theta"   # character side
PHI = "phi"       # element side
SIDES = (THETA, PHI)


def modulus_of(q: int, d: int) -> int:
    """M_d = q^d - (-1)^d."""
    return q**d - (-1) ** d


def norm_multiplier(q: int, m: int, r: int) -> int:
    """S_{m,r} = sum_{i=0}^{m/r-1} (-q)^{ri} = (-1)^(m-r) M_m / M_r."""
    assert m % r == 0
    s = sum((-q) ** (r * i) for i in range(m // r))
    assert s == (-1) ** (m - r) * modulus_of(q, m) // modulus_of(q, r)
    return s


@dataclass(frozen=True)
class TorusContext:
    """Fixes q and a working degree n; levels live over N = lcm(1..n)."""

    q: int
    n: int

    def __post_init__(self):
        if prime_power(self.q) is None:
            raise ValueError(f"q must be a prime power >= 2, got {self.q}")
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")

    @cached_property
    def top_level(self) -> int:
        return lcm(*range(1, self.n + 1))

    def modulus(self, d: int) -> int:
        if d < 1 or self.top_level % d:
            raise ValueError(f"level {d} does not divide N = {self.top_level}")
        return modulus_of(self.q, d)

    @cached_property
    def cyclo_modulus(self) -> int:
        """Common cyclotomic modulus for all values at degree n: lcm of M_1..M_n."""
        return lcm(*(self.modulus(d) for d in range(1, self.n + 1)))

    @cached_property
    def sigma_exponent(self) -> int:
        """Exponent of the order-2 character sigma of T_1 (q odd only)."""
        if self.q % 2 == 0:
            raise ValueError("sigma needs q odd")
        return modulus_of(self.q, 1) // 2


@dataclass(frozen=True, order=True)
class OrbitLabel:
    """A Frobenius orbit at its exact level; size always equals level.

    Serialized as "side:level:min_exponent".  Ordering is (level, exponent)
    within a side, which is the canonical orbit order everywhere.
    """

    level: int
    min_exponent: int
    side: str

    def __post_init__(self):
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}, got {self.side!r}")

    @property
    def size(self) -> int:
        return self.level

    def to_str(self) -> str:
        return f"{self.side}:{self.level}:{self.min_exponent}"

    @staticmethod
    def from_str(text: str) -> "OrbitLabel":
        side, level, min_exponent = text.split(":")
        return OrbitLabel(int(level), int(min_exponent), side)


def _orbit_exponents_at(q: int, m: int, e: int) -> tuple[int, ...]:
    """The orbit of e under e -> -q e mod M_m, starting from e."""
    mod = modulus_of(q, m)
    e %= mod
    out = [e]
    cur = (-q * e) % mod
    while cur != e:
        out.append(cur)
        cur = (-q * cur) % mod
    return tuple(out)


def frobenius_orbit(ctx: TorusContext, d: int, e: int, side: str) -> OrbitLabel:
    """Canonical label of the orbit of exponent e at level d.

    The orbit size s divides d and the element already lies in T_s, so the
    label is expressed at level s with the minimal exponent of the orbit.
    """
    ctx.modulus(d)
    orbit = _orbit_exponents_at(ctx.q, d, e)
    s = len(orbit)
    if s == d:
        return OrbitLabel(d, min(orbit), side)
    # descend e to level s: e must be a multiple of M_d / M_s
    big, small = ctx.modulus(d), ctx.modulus(s)
    step = big // small
    e %= big
    assert d % s == 0 and e % step == 0, (d, s, e)
    down = ((-1) ** (d - s) * (e // step)) % small
    sub = _orbit_exponents_at(ctx.q, s, down)
    assert len(sub) == s
    return OrbitLabel(s, min(sub), side)


def orbit_exponents(ctx: TorusContext, o: OrbitLabel) -> tuple[int, ...]:
    """All exponents of the orbit at its own level, starting at the minimum."""
    orbit = _orbit_exponents_at(ctx.q, o.level, o.min_exponent)
    assert len(orbit) == o.size
    return orbit


def exact_orbits(ctx: TorusContext, d: int, side: str) -> tuple[OrbitLabel, ...]:
    """All orbits of exact size d (at level d), in canonical order."""
    mod = ctx.modulus(d)
    seen = bytearray(mod)
    out = []
    for e in range(mod):
        if seen[e]:
            continue
        orbit = _orbit_exponents_at(ctx.q, d, e)
        for x in orbit:
            seen[x] = 1
        if len(orbit) == d:
            out.append(OrbitLabel(d, e, side))
    return tuple(out)


def count_exact_orbits(ctx: TorusContext, d: int) -> int:
    """Moebius count: (1/d) sum_{e | d} mu(d/e) M_e."""
    total = sum(moebius(d // e) * ctx.modulus(e) for e in divisors(d))
    assert total % d == 0
    return total // d


def orbits_up_to(ctx: TorusContext, n: int, side: str) -> tuple[OrbitLabel, ...]:
    """All orbits of size <= n, canonically ordered; the label universe at degree n."""
    out = []
    for d in range(1, n + 1):
        out.extend(exact_orbits(ctx, d, side))
    return tuple(sorted(out))


def conjugate_orbit(ctx: TorusContext, o: OrbitLabel) -> OrbitLabel:
    """The orbit of the inverse element / inverse character."""
    return frobenius_orbit(ctx, o.level, -o.min_exponent, o.side)


def lift_element(ctx: TorusContext, r: int, m: int, e: int) -> int:
    """Exponent of the inclusion T_r -> T_m: multiply by S_{m,r}."""
    if m % r:
        raise ValueError(f"need r | m, got r={r}, m={m}")
    return (norm_multiplier(ctx.q, m, r) * e) % ctx.modulus(m)


def norm(ctx: TorusContext, m: int, r: int, e: int) -> int:
    """N_{m,r} in exponent coordinates; reduction mod M_r in the g_d family."""
    if m % r:
        raise ValueError(f"need r | m, got r={r}, m={m}")
    out = e % ctx.modulus(r)
    # the literal norm multiplies the ambient exponent by S_{m,r}
    literal = (norm_multiplier(ctx.q, m, r) * e) % ctx.modulus(m)
    assert lift_element(ctx, r, m, out) == literal
    return out


def lift_character(ctx: TorusContext, r: int, m: int, c: int) -> int:
    """Transpose of the norm on characters: multiply by M_m / M_r."""
    if m % r:
        raise ValueError(f"need r | m, got r={r}, m={m}")
    return (c * (ctx.modulus(m) // ctx.modulus(r))) % ctx.modulus(m)


def pairing(ctx: TorusContext, c: int, r: int, e: int, m: int) -> cyclotomic.Cyclotomic:
    """Value of the level-r character c on the level-m element e, in Q(zeta_M_m).

    The character is lifted through the transpose-of-norm, so for a in T_r the
    compatibility xi(a)_m = xi(a)_r^(m/r) holds on the nose.
    """
    cm = lift_character(ctx, r, m, c)
    return cyclotomic.zeta(ctx.modulus(m), (cm * e) % ctx.modulus(m))


def to_level_one(ctx: TorusContext, d: int, c: int) -> int:
    """Descend a Frobenius-fixed character exponent at level d to level 1."""
    mod, m1 = ctx.modulus(d), ctx.modulus(1)
    c %= mod
    if (-ctx.q * c) % mod != c:
        raise ValueError(f"character exponent {c} at level {d} is not Frobenius-fixed")
    step = mod // m1
    assert c % step == 0, (c, d)
    down = c // step
    assert lift_character(ctx, 1, d, down) == c
    return down


def orbit_exponent_sum(ctx: TorusContext, o: OrbitLabel) -> int:
    """Sum of the orbit's exponents mod its modulus; Frobenius-fixed by construction."""
    return sum(orbit_exponents(ctx, o)) % ctx.modulus(o.level)


def delta_orbit(o: OrbitLabel) -> OrbitLabel:
    """Character orbit -> element orbit under the exponent-identity bijection."""
    if o.side != THETA:
        raise ValueError("delta maps character orbits to element orbits")
    return OrbitLabel(o.level, o.min_exponent, PHI)


def delta_orbit_inv(o: OrbitLabel) -> OrbitLabel:
    if o.side != PHI:
        raise ValueError("inverse delta maps element orbits to character orbits")
    return OrbitLabel(o.level, o.min_exponent, THETA)


def one_orbit(ctx: TorusContext, side: str = THETA) -> OrbitLabel:
    """The orbit of the trivial character (exponent 0 at level 1)."""
    return OrbitLabel(1, 0, side)


def sigma_orbit(ctx: TorusContext) -> OrbitLabel:
    """The orbit of the order-2 character of T_1; q odd."""
    return OrbitLabel(1, ctx.sigma_exponent, THETA)
