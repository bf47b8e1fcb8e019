"""Dual-group elliptic parameters and formal degrees.

The q-part of a formal degree is the product over all roots
q^nu * prod'(e_a(s') - 1) / prod'(q e_a(s') - 1), with s' twisting the
semisimple part by the sl2 cocharacter of the unipotent part; zero factors
are dropped.  Everything is computed in Q(zeta_m)[u] with q = u^2 and the
result is checked to lie in Q(q).

The conjecture engine evaluates the transform-side prediction: a Fourier
block against the vector of elliptic fake degrees supported on the
identity-component entries.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclo import CycNum, CycPoly
from .exactq import QPolynomial, RationalFunction, RF_ONE, RF_Q
from .fourier import fourier_matrix, small_group
from .weylgrp import GroupSpec, WeylGroupData, build_group


@dataclass(frozen=True)
class DualRootDatum:
    """Roots as integer coordinate vectors; linear functionals pair by dot
    product with the coordinates."""
    name: str
    roots: tuple[tuple[int, ...], ...]
    simple: tuple[int, ...]          # indices of the simple roots
    center_order: int

    @property
    def rank(self) -> int:
        return len(self.roots[0])

    @property
    def positive_count(self) -> int:
        return len(self.roots) // 2

    def pair(self, root, v) -> Fraction:
        return sum(Fraction(a) * Fraction(b) for a, b in zip(root, v))


# G2 in simple-root coordinates (alpha short, beta long)
_G2_POS = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
G2_DATUM = DualRootDatum(
    "G2",
    _G2_POS + tuple(tuple(-x for x in r) for r in _G2_POS),
    simple=(0, 1),
    center_order=1,
)

# Sp(4) = C2 in euclidean coordinates
_C2_POS = ((2, 0), (0, 2), (1, -1), (1, 1))
SP4_DATUM = DualRootDatum(
    "Sp4",
    _C2_POS + tuple(tuple(-x for x in r) for r in _C2_POS),
    simple=(2, 1),  # e1 - e2, 2 e2
    center_order=2,
)

SL2_DATUM = DualRootDatum("SL2", ((2,), (-2,)), simple=(0,), center_order=2)


def solve_marks(datum: DualRootDatum, subsystem: Sequence[tuple[int, ...]]) -> tuple[Fraction, ...]:
    """The cocharacter h of the principal sl2 of a full-rank subsystem:
    gamma(h) = 2 on the given simple roots of the subsystem."""
    n = datum.rank
    rows = [list(map(Fraction, g)) for g in subsystem]
    if len(rows) != n:
        raise ValueError("subsystem must have full rank")
    rhs = [Fraction(2)] * n
    # solve rows . h = 2
    aug = [rows[i] + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


@dataclass
class EllipticParameter:
    """One elliptic pair (s, u): the semisimple part as a rational functional
    (root-of-unity exponents), the unipotent part through its sl2 weights."""
    datum: DualRootDatum
    s: tuple[Fraction, ...]
    h: tuple[Fraction, ...]
    name: str = ""

    def root_data(self):
        """Per root: (exponent of e_alpha(s) as Fraction mod 1, weight alpha(h))."""
        out = []
        for r in self.datum.roots:
            k = self.datum.pair(r, self.s) % 1
            w = self.datum.pair(r, self.h)
            if w.denominator != 1:
                raise ValueError(f"non-integral sl2 weight {w} on root {r}")
            out.append((k, int(w)))
        return out

    def centralizer_roots(self):
        return [r for r in self.datum.roots if self.datum.pair(r, self.s) % 1 == 0]

    def is_elliptic(self) -> bool:
        """u distinguished in Z(s): the 0- and 2-eigenspaces of ad(h) on
        Lie Z(s) have equal dimension."""
        roots = self.centralizer_roots()
        g0 = sum(1 for r in roots if self.datum.pair(r, self.h) == 0) + self.datum.rank
        g2 = sum(1 for r in roots if self.datum.pair(r, self.h) == 2)
        return g0 == g2


@dataclass
class MxResult:
    value: RationalFunction          # |m_x|, normalized positive at q -> infinity
    raw_sign: int                    # sign before normalization
    dropped_num: int
    dropped_den: int
    elliptic: bool


def m_x(param: EllipticParameter) -> MxResult:
    """Theorem-side product formula for the q-part of the formal degree."""
    data = param.root_data()
    m = 1
    for k, _ in data:
        m = m * k.denominator // _igcd(m, k.denominator)
    num = CycPoly.one(m)
    den = CycPoly.one(m)
    num_shift = den_shift = 0
    dropped_num = dropped_den = 0

    def factor(k: Fraction, w: int):
        """zeta^k u^w - 1 as (poly, u-shift)."""
        zk = CycNum.zeta_pow(m, int(k * m))
        if w >= 0:
            coeffs = [CycNum.rational(m, -1)] + [CycNum.zero(m)] * (w - 1) + [zk] if w > 0 \
                else [zk - CycNum.rational(m, 1)]
            return CycPoly(m, coeffs), 0
        coeffs = [zk] + [CycNum.zero(m)] * (-w - 1) + [CycNum.rational(m, -1)]
        return CycPoly(m, coeffs), w

    for k, w in data:
        if k == 0 and w == 0:
            dropped_num += 1
        else:
            p, sh = factor(k, w)
            num = num * p
            num_shift += sh
        if k == 0 and w == -2:
            dropped_den += 1
        else:
            p, sh = factor(k, w + 2)
            den = den * p
            den_shift += sh
    total_shift = 2 * param.datum.positive_count + num_shift - den_shift
    if total_shift >= 0:
        num = num * CycPoly.monomial(m, total_shift, CycNum.rational(m, 1))
    else:
        den = den * CycPoly.monomial(m, -total_shift, CycNum.rational(m, 1))
    g = num.gcd(den)
    num, rn = divmod(num, g)
    den, rd = divmod(den, g)
    assert rn.is_zero() and rd.is_zero()
    np = num.to_qpoly_in_qsquared()
    dp = den.to_qpoly_in_qsquared()
    rf = RationalFunction(np, dp)
    sign = rf.sign_at_infinity()
    return MxResult(abs(rf), sign, dropped_num, dropped_den, param.is_elliptic())


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# conjecture engine


@dataclass
class UnipotentFixture:
    """A distinguished (or quasi-distinguished) unipotent orbit with its
    component group, parameter packets, and fake-degree data."""
    name: str
    datum: DualRootDatum
    base_weyl: GroupSpec                  # finite Weyl group of the p-adic side
    gamma: str                            # component group of u
    m_prime: list[tuple[str, str]]        # image of the family inside M(gamma)
    fake_values: dict[tuple[str, str], RationalFunction]  # identity-part entries
    springer_elliptic: dict[str, dict[str, int]]  # phi -> {charpoly str: value}
    s_points: dict[str, tuple[Fraction, ...]]     # gamma-class label -> functional
    h_for_s: dict[str, tuple[Fraction, ...]]      # sl2 weights per packet
    center_order: int = 1

    def parameter(self, s_label: str) -> EllipticParameter:
        return EllipticParameter(self.datum, self.s_points[s_label],
                                 self.h_for_s[s_label], name=f"{self.name}:{s_label}")


def conjecture_rhs(fix: UnipotentFixture, entry: tuple[str, str]) -> RationalFunction:
    """(1/|Z|) sum over (y',rho') in M' of {(y,rho),(y',rho')} F(y',rho'),
    with F supported on the identity-component Springer-type entries."""
    block = fourier_matrix(fix.gamma)
    total = RationalFunction(QPolynomial.zero())
    for other in fix.m_prime:
        f = fix.fake_values.get(tuple(other))
        if f is None:
            continue
        c = block.entry(tuple(entry), tuple(other))
        if not isinstance(c, Fraction):
            raise RuntimeError("irrational transform entry in a fixture block")
        if c:
            total = total + f * c
    return total * Fraction(1, fix.center_order)


def _springer_class_function(fix: UnipotentFixture, W: WeylGroupData,
                             coeffs: dict[str, Fraction]) -> list[Fraction]:
    """Class function sum_phi coeffs[phi] * H^phi on W, supported on elliptic
    classes, matched to W's class order through characteristic polynomials."""
    values = [Fraction(0)] * len(W.classes())
    for i in W.elliptic_classes():
        key = str(W.classes()[i].char_poly)
        v = Fraction(0)
        for phi, c in coeffs.items():
            v += Fraction(c) * fix.springer_elliptic[phi][key]
        values[i] = v
    return values


def _phi_values_at(fix: UnipotentFixture, s_label: str) -> dict[str, Fraction]:
    """phi'(s) for the Springer-type characters phi' of the component group."""
    gamma = small_group(fix.gamma)
    table = gamma.character_table()
    classes = gamma.conjugacy_classes()
    from .fourier import _x_labels, _char_labels
    xl = _x_labels(gamma)
    cl = _char_labels(table)
    j = xl.index(s_label)
    out = {}
    for phi in fix.springer_elliptic:
        i = cl.index(phi)
        v = table.values[i][j]
        out[phi] = Fraction(v)
    return out


def centralizer_order_in_gamma(fix: UnipotentFixture, s_label: str) -> int:
    gamma = small_group(fix.gamma)
    from .fourier import _x_labels
    xl = _x_labels(gamma)
    rep = gamma.conjugacy_classes()[xl.index(s_label)].rep
    return gamma.centralizer(rep).order


def conj_equiv(fix: UnipotentFixture, s_label: str, phi_dim: int) -> RationalFunction:
    """(1-q)^l phi(1) / (|A(su)| |Z|) < H(B_u)^s, 1/det(1-q .) >^el."""
    W = build_group(fix.base_weyl)
    phis = _phi_values_at(fix, s_label)
    values = _springer_class_function(fix, W, phis)
    pairing = _pair_with_sq(W, values)
    a_su = centralizer_order_in_gamma(fix, s_label)
    pref = RationalFunction((RF_ONE - RF_Q).num ** W.rank) \
        * Fraction(phi_dim, a_su * fix.center_order)
    return pref * pairing


def q_part_prediction(fix: UnipotentFixture, s_label: str) -> RationalFunction:
    """(1-q)^l < H(B_u)^s, 1/det(1-q .) >^el, the predicted q-part."""
    W = build_group(fix.base_weyl)
    phis = _phi_values_at(fix, s_label)
    values = _springer_class_function(fix, W, phis)
    return RationalFunction((RF_ONE - RF_Q).num ** W.rank) * _pair_with_sq(W, values)


def _pair_with_sq(W: WeylGroupData, values) -> RationalFunction:
    """< chi, 1/det(1 - q .) >^el as an exact rational function."""
    total = RationalFunction(QPolynomial.zero())
    for c, v in zip(W.classes(), values):
        if not c.elliptic or v == 0:
            continue
        det1 = c.char_poly.evaluate(Fraction(1))
        total = total + RationalFunction(QPolynomial.of(Fraction(v) * det1 * c.size)) \
            / RationalFunction(c.char_poly)
    return total * Fraction(1, W.order)


# ---------------------------------------------------------------------------
# fixtures


def _phi(n: int) -> RationalFunction:
    from .exactq import cyclotomic
    return RationalFunction(cyclotomic(n))


@functools.lru_cache(maxsize=None)
def g2_a1_fixture() -> UnipotentFixture:
    """The subregular orbit of G2: component group S3, three packets."""
    q = RF_Q
    cyc = _phi(2) ** 2 * _phi(3) * _phi(6)
    f_triv = (q - 1) ** 2 * q * _phi(3) / cyc     # Springer-type (3)
    f_refl = -((q - 1) ** 2) * q ** 2 / cyc       # Springer-type (21)
    half = Fraction(1, 2)
    third = Fraction(1, 3)
    return UnipotentFixture(
        name="g2-a1",
        datum=G2_DATUM,
        base_weyl=GroupSpec("G2", 2),
        gamma="S3",
        m_prime=[("1", "1"), ("g2", "1"), ("g3", "1"), ("1", "r")],
        fake_values={("1", "1"): f_triv, ("1", "r"): f_refl},
        springer_elliptic={
            # H(B_u)^phi on the elliptic classes, keyed by det(1 - q w);
            # solved from the fake-degree table (the elliptic map is injective
            # for W(G2)): (3) -> phi(1,0)+phi(2,1), (21) -> 1-dim of b = 3
            "1": {"q^2 - q + 1": 2, "q^2 + q + 1": 0, "q^2 + 2q + 1": -1},
            "r": {"q^2 - q + 1": -1, "q^2 + q + 1": 1, "q^2 + 2q + 1": -1},
        },
        s_points={
            "1": (Fraction(0), Fraction(0)),
            "g2": (Fraction(0), half),
            "g3": (third, Fraction(0)),
        },
        h_for_s={
            "1": (Fraction(0), Fraction(2)),                      # weighted marks of the orbit
            "g2": solve_marks(G2_DATUM, [(3, 2), (1, 0)]),         # principal in A1 x A1~
            "g3": solve_marks(G2_DATUM, [(0, 1), (3, 1)]),         # principal in A2 (long)
        },
        center_order=1,
    )


@functools.lru_cache(maxsize=None)
def g2_regular_fixture() -> UnipotentFixture:
    from .elliptic import sgn_fake_degree
    from .weylgrp import exponents_of
    f_sgn = sgn_fake_degree(exponents_of(GroupSpec("G2", 2)))
    return UnipotentFixture(
        name="g2-reg",
        datum=G2_DATUM,
        base_weyl=GroupSpec("G2", 2),
        gamma="trivial",
        m_prime=[("1", "1")],
        fake_values={("1", "1"): f_sgn},
        springer_elliptic={
            "1": {"q^2 - q + 1": 1, "q^2 + q + 1": 1, "q^2 + 2q + 1": 1}},
        s_points={"1": (Fraction(0), Fraction(0))},
        h_for_s={"1": solve_marks(G2_DATUM, [(1, 0), (0, 1)])},
        center_order=1,
    )


@functools.lru_cache(maxsize=None)
def sp4_22_fixture() -> UnipotentFixture:
    """u = (2,2) in Sp(4): quasi-distinguished, component group Z/2."""
    q = RF_Q
    x = q * (1 - q) ** 2 / (_phi(2) ** 2 * _phi(4))
    return UnipotentFixture(
        name="sp4-22",
        datum=SP4_DATUM,
        base_weyl=GroupSpec("B", 2),
        gamma="Z2",
        m_prime=[("1", "1"), ("1", "eps"), ("tau", "1")],
        fake_values={("1", "1"): x, ("1", "eps"): -x},
        springer_elliptic={
            # elliptic restrictions are +-[(1,1) x []]; the signs are fixed by
            # matching the two printed fake degrees
            "1": {"q^2 + 1": 1, "q^2 + 2q + 1": -1},
            "eps": {"q^2 + 1": -1, "q^2 + 2q + 1": 1},
        },
        s_points={
            "1": (Fraction(0), Fraction(0)),
            "tau": (Fraction(0), Fraction(1, 2)),
        },
        h_for_s={
            "1": (Fraction(1), Fraction(1)),
            "tau": solve_marks(SP4_DATUM, [(2, 0), (0, 2)]),
        },
        center_order=2,
    )


@functools.lru_cache(maxsize=None)
def sp4_regular_fixture() -> UnipotentFixture:
    from .elliptic import sgn_fake_degree
    from .weylgrp import exponents_of
    f_sgn = sgn_fake_degree(exponents_of(GroupSpec("B", 2)))
    return UnipotentFixture(
        name="sp4-4",
        datum=SP4_DATUM,
        base_weyl=GroupSpec("B", 2),
        gamma="Z2",
        m_prime=[("1", "1")],
        fake_values={("1", "1"): f_sgn},
        springer_elliptic={"1": {"q^2 + 1": 1, "q^2 + 2q + 1": 1}},
        s_points={"1": (Fraction(0), Fraction(0))},
        h_for_s={"1": solve_marks(SP4_DATUM, [(1, -1), (0, 2)])},
        center_order=2,
    )


@functools.lru_cache(maxsize=None)
def sl2_regular_fixture() -> UnipotentFixture:
    return UnipotentFixture(
        name="a1-reg",
        datum=SL2_DATUM,
        base_weyl=GroupSpec("A", 1),
        gamma="trivial",
        m_prime=[("1", "1")],
        fake_values={},
        springer_elliptic={"1": {"q + 1": 1}},
        s_points={"1": (Fraction(0),)},
        h_for_s={"1": (Fraction(1),)},
        center_order=2,
    )


FIXTURES = {
    "g2-a1": g2_a1_fixture,
    "g2-reg": g2_regular_fixture,
    "sp4-22": sp4_22_fixture,
    "sp4-4": sp4_regular_fixture,
    "a1-reg": sl2_regular_fixture,
}


def mx_for(fixture_name: str, s_label: str = "1") -> MxResult:
    fix = FIXTURES[fixture_name]()
    return m_x(fix.parameter(s_label))
