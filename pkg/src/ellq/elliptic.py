"""The elliptic pairing on virtual characters, elliptic fake degrees
(definitional and closed-form), elliptic bases for types B/D, linear
independence of the functions 1/det(1-qw) over elliptic classes, and the
cyclotomic denominators of the sign character's fake degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import contents, hook_lengths, n_invariant, transpose
from .exactq import (QPolynomial, RationalFunction, RF_ONE, RF_Q,
                     factor_cyclotomic, one_minus_qpow)
from .weylgrp import (GroupSpec, WeylGroupData, build_group,
                      h_class_function, induce_class_function,
                      parabolic_subgroup)


@dataclass
class VirtualCharacter:
    """A virtual character, as exact values on the conjugacy classes.

    Coordinates over the irreducibles are accepted too and converted through
    the character table.
    """
    group: WeylGroupData
    values: list

    @staticmethod
    def from_irrep(W: WeylGroupData, label: str) -> "VirtualCharacter":
        return VirtualCharacter(W, list(W.irrep_values(label)))

    @staticmethod
    def from_coords(W: WeylGroupData, coords: Sequence) -> "VirtualCharacter":
        table = W.character_table()
        n = len(table.classes)
        vals = [sum(c * table.values[i][j] for i, c in enumerate(coords))
                for j in range(n)]
        return VirtualCharacter(W, vals)

    def __add__(self, other):
        assert self.group is other.group
        return VirtualCharacter(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        assert self.group is other.group
        return VirtualCharacter(self.group, [a - b for a, b in zip(self.values, other.values)])

    def scale(self, c):
        return VirtualCharacter(self.group, [c * v for v in self.values])


def elliptic_pairing(W: WeylGroupData, f: Sequence, g: Sequence) -> Fraction:
    """<f, g>^el = (1/|W|) sum_w f(w) g(w) det(1 - w)."""
    total = Fraction(0)
    for c, a, b in zip(W.classes(), f, g):
        if not c.elliptic:
            continue
        det1 = c.char_poly.evaluate(Fraction(1))
        total += Fraction(c.size) * Fraction(a) * Fraction(b) * det1
    return total / W.order


def elliptic_pairing_chars(x: VirtualCharacter, y: VirtualCharacter) -> Fraction:
    if x.group is not y.group and x.group.spec != y.group.spec:
        raise ValueError("elliptic pairing requires characters of the same group")
    return elliptic_pairing(x.group, x.values, y.values)


def elliptic_fake_degree(W: WeylGroupData, values: Sequence) -> RationalFunction:
    """F = ((q-1)^l / |W|) sum_w chi(w) det(1 - w)/det(1 - q w)."""
    total = RationalFunction(QPolynomial.zero())
    for c, v in zip(W.classes(), values):
        if not c.elliptic or v == 0:
            continue
        det1 = c.char_poly.evaluate(Fraction(1))
        total = total + RationalFunction(QPolynomial.of(Fraction(v) * det1 * c.size)) \
            / RationalFunction(c.char_poly)
    pref = RationalFunction((RF_Q - 1).num ** W.rank) * Fraction(1, W.order)
    return pref * total


def elliptic_fake_degree_irrep(W: WeylGroupData, label: str) -> RationalFunction:
    return elliptic_fake_degree(W, W.irrep_values(label))


def sgn_fake_degree(exponents: Sequence[int]) -> RationalFunction:
    """Closed form (1-q)^l prod (1 - q^m)/(1 - q^{m+1})."""
    out = (RF_ONE - RF_Q) ** len(tuple(exponents))
    for m in exponents:
        out = out * RationalFunction(QPolynomial.qpow_minus_one(m)) \
            / RationalFunction(QPolynomial.qpow_minus_one(m + 1))
    return out


def cyc_denominator(exponents: Sequence[int]) -> dict[int, int]:
    """Cyclotomic factorisation {n: mult} of the reduced denominator of the
    sign character's elliptic fake degree."""
    f = sgn_fake_degree(exponents)
    fac = factor_cyclotomic(f.den)
    assert fac.remainder.is_one() and fac.q_power == 0
    return fac.factors


def bn_fake_closed(lam) -> RationalFunction:
    """(q-1)^n q^{2n(lam)} prod (1 - q^{2c+1}) / (1 - q^{2h}) over the cells."""
    lam = tuple(lam)
    n = sum(lam)
    out = RationalFunction((RF_Q - 1).num ** n) * RationalFunction.qpow(2 * n_invariant(lam))
    for _, c in contents(lam):
        out = out * one_minus_qpow(2 * c + 1)
    for _, h in hook_lengths(lam):
        out = out / one_minus_qpow(2 * h)
    return out


def dn_fake_closed(lam) -> RationalFunction:
    """Type D closed form via the two type-B values, F_lam + (-1)^n F_lam^t."""
    lam = tuple(lam)
    n = sum(lam)
    if n < 2:
        raise ValueError("type D needs n >= 2")
    b1 = bn_fake_closed(lam)
    b2 = bn_fake_closed(transpose(lam))
    return b1 + b2 if n % 2 == 0 else b1 - b2


def hook_content_pairing(W: WeylGroupData, lam) -> RationalFunction:
    """<lam x empty, S_q E>^el over W(B_n): the fake degree without (q-1)^n."""
    values = W.class_function_bipartition(tuple(lam), ())
    return elliptic_fake_degree(W, values) / RationalFunction((RF_Q - 1).num ** W.rank)


# ---------------------------------------------------------------------------
# linear independence of 1/det(1 - q w) over elliptic classes


def matrix_rank(rows: list[list[Fraction]]) -> int:
    m = [row[:] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col]
        m[rank] = [x / inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


@dataclass
class IndependenceReport:
    spec: GroupSpec
    n_elliptic: int
    rank: int
    independent: bool
    coincident_pairs: list[tuple[int, int, str]]  # class indices + shared char poly
    # integer dependencies sum_i c_i / charpoly_i = 0, as (coefficients, types)
    dependencies: list[tuple[tuple, tuple]]


def independence_check(spec: GroupSpec) -> IndependenceReport:
    """Exact rank of {1/det(1-qw)} over elliptic classes, by clearing to a
    common polynomial denominator and row reduction.  Reports coincident
    characteristic polynomials and, when the functions are dependent, an
    explicit integer kernel certificate."""
    W = build_group(spec)
    ell = W.elliptic_classes()
    charpolys = [W.classes()[i].char_poly for i in ell]
    lcm = QPolynomial.one()
    from .exactq import poly_gcd
    for cp in charpolys:
        g = poly_gcd(lcm, cp)
        lcm = lcm * (cp // g)
    width = lcm.degree + 1
    rows = []
    for cp in charpolys:
        num = lcm // cp
        rows.append([num.coeff(i) for i in range(width)])
    n = len(rows)
    # eliminate with an identity tail so kernel vectors drop out directly
    aug = [row[:] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(rows)]
    rank = 0
    for col in range(width):
        piv = None
        for r in range(rank, n):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = aug[rank][col]
        aug[rank] = [x / inv for x in aug[rank]]
        for r in range(n):
            if r != rank and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[rank])]
        rank += 1
    deps = []
    for r in range(rank, n):
        combo = aug[r][width:]
        den = 1
        for c in combo:
            den = den * c.denominator // _igcd(den, c.denominator)
        ints = tuple(int(c * den) for c in combo)
        types = tuple(str(W.classes()[ell[i]].signed_type or W.classes()[ell[i]].char_poly)
                      for i in range(n))
        deps.append((ints, types))
    pairs = []
    for a in range(n):
        for b in range(a + 1, n):
            if charpolys[a] == charpolys[b]:
                pairs.append((ell[a], ell[b], str(charpolys[a])))
    return IndependenceReport(spec, n, rank, rank == n, pairs, deps)


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# radical of the elliptic pairing


@dataclass
class RadicalReport:
    spec: GroupSpec
    gram_rank: int
    n_elliptic: int
    induced_in_radical: bool


def radical_check(W: WeylGroupData) -> RadicalReport:
    """(a) characters induced from proper parabolic subgroups pair to zero with
    everything; (b) the elliptic Gram on the irreducibles has rank equal to the
    number of elliptic classes."""
    table = W.character_table()
    n = len(table.values)
    gram = [[elliptic_pairing(W, table.values[i], table.values[j]) for j in range(n)]
            for i in range(n)]
    rank = matrix_rank([[Fraction(x) for x in row] for row in gram])
    ok = True
    n_gens = len(W.group.generators)
    for size in range(n_gens):
        for subset in _subsets(n_gens, size):
            H = parabolic_subgroup(W, subset)
            h_table = H.character_table()
            for row in h_table.values:
                hv = h_class_function(H, row)
                ind = induce_class_function(W, H, hv)
                for irr in table.values:
                    if elliptic_pairing(W, ind, irr) != 0:
                        ok = False
    return RadicalReport(W.spec, rank, len(W.elliptic_classes()), ok)


def _subsets(n, size):
    import itertools
    return itertools.combinations(range(n), size)
