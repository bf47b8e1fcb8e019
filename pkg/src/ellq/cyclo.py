"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored as sparse integer-exponent dictionaries over the group
ring Q[Z/m] and reduced modulo Phi_m on demand.  This keeps products of
character values (which are single roots of unity times rationals, most of
the time) cheap inside the long Fourier-transform sums.
"""
from __future__ import annotations

import functools
from fractions import Fraction

from .exactq import QPolynomial, cyclotomic


@functools.lru_cache(maxsize=None)
def _phi_coeffs(m: int) -> tuple[Fraction, ...]:
    return cyclotomic(m).coeffs


@functools.lru_cache(maxsize=None)
def _zeta_power_basis(m: int, k: int) -> tuple[Fraction, ...]:
    """Coordinates of zeta_m^k in the power basis 1, zeta, ..., zeta^(phi(m)-1)."""
    phi = _phi_coeffs(m)
    d = len(phi) - 1
    k %= m
    if k < d:
        out = [Fraction(0)] * d
        out[k] = Fraction(1)
        return tuple(out)
    # zeta^d = -(phi_0 + phi_1 zeta + ... + phi_{d-1} zeta^{d-1}), then recurse
    prev = _zeta_power_basis(m, k - 1)
    shifted = [Fraction(0)] + list(prev[:-1])
    top = prev[-1]
    if top != 0:
        for i in range(d):
            shifted[i] -= top * phi[i]
    return tuple(shifted)


class CycNum:
    """An element of Q(zeta_m), held unreduced as sum of c_k * zeta_m^k."""

    __slots__ = ("m", "c")

    def __init__(self, m: int, c: dict[int, Fraction] | None = None):
        self.m = m
        self.c = c or {}

    @staticmethod
    def zero(m: int) -> "CycNum":
        return CycNum(m)

    @staticmethod
    def rational(m: int, x) -> "CycNum":
        x = Fraction(x)
        return CycNum(m, {0: x} if x else {})

    @staticmethod
    def zeta_pow(m: int, k: int, coeff=1) -> "CycNum":
        coeff = Fraction(coeff)
        return CycNum(m, {k % m: coeff} if coeff else {})

    def __add__(self, other: "CycNum") -> "CycNum":
        assert self.m == other.m
        out = dict(self.c)
        for k, v in other.c.items():
            nv = out.get(k, Fraction(0)) + v
            if nv:
                out[k] = nv
            elif k in out:
                del out[k]
        return CycNum(self.m, out)

    def __neg__(self) -> "CycNum":
        return CycNum(self.m, {k: -v for k, v in self.c.items()})

    def __sub__(self, other: "CycNum") -> "CycNum":
        return self + (-other)

    def __mul__(self, other) -> "CycNum":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                return CycNum(self.m)
            return CycNum(self.m, {k: v * f for k, v in self.c.items()})
        assert self.m == other.m
        out: dict[int, Fraction] = {}
        m = self.m
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = (k1 + k2) % m
                nv = out.get(k, Fraction(0)) + v1 * v2
                if nv:
                    out[k] = nv
                elif k in out:
                    del out[k]
        return CycNum(m, out)

    __rmul__ = __mul__

    def conj(self) -> "CycNum":
        """Complex conjugation zeta -> zeta^(-1)."""
        return CycNum(self.m, {(-k) % self.m: v for k, v in self.c.items()})

    def reduced(self) -> tuple[Fraction, ...]:
        """Coordinates in the power basis of Q(zeta_m)."""
        d = len(_phi_coeffs(self.m)) - 1
        out = [Fraction(0)] * d
        for k, v in self.c.items():
            if v == 0:
                continue
            basis = _zeta_power_basis(self.m, k)
            for i in range(d):
                if basis[i]:
                    out[i] += v * basis[i]
        return tuple(out)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.reduced())

    def as_rational(self) -> Fraction:
        red = self.reduced()
        if any(v != 0 for v in red[1:]):
            raise ValueError(f"not rational: {self}")
        return red[0] if red else Fraction(0)

    def is_rational(self) -> bool:
        red = self.reduced()
        return all(v == 0 for v in red[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(self.m, other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.m == other.m and self.reduced() == other.reduced()

    def __hash__(self):
        return hash((self.m, self.reduced()))

    def __repr__(self):
        terms = [f"{v}*z{self.m}^{k}" for k, v in sorted(self.c.items())]
        return "CycNum(" + (" + ".join(terms) if terms else "0") + ")"

    def inverse(self) -> "CycNum":
        """Field inverse via the extended Euclidean algorithm modulo Phi_m."""
        red = self.reduced()
        a = QPolynomial(red)
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        b = QPolynomial(_phi_coeffs(self.m))
        # extended gcd in Q[x]: find u with u*a = gcd (mod Phi_m); gcd must be a unit
        r0, r1 = a, b
        s0, s1 = QPolynomial.one(), QPolynomial.zero()
        while not r1.is_zero():
            qt, rem = divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - qt * s1
        assert r0.degree == 0, "Phi_m not coprime to element (impossible in a field)"
        inv_poly = s0 * (1 / r0.leading)
        inv_poly = inv_poly % b
        return CycNum(self.m, {i: c for i, c in enumerate(inv_poly.coeffs) if c})


class CycPoly:
    """A polynomial in one variable u with coefficients in Q(zeta_m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: list[CycNum]):
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.m = m
        self.coeffs = coeffs

    @staticmethod
    def zero(m: int) -> "CycPoly":
        return CycPoly(m, [])

    @staticmethod
    def one(m: int) -> "CycPoly":
        return CycPoly(m, [CycNum.rational(m, 1)])

    @staticmethod
    def monomial(m: int, deg: int, coeff: CycNum) -> "CycPoly":
        return CycPoly(m, [CycNum.zero(m)] * deg + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __mul__(self, other: "CycPoly") -> "CycPoly":
        if self.is_zero() or other.is_zero():
            return CycPoly.zero(self.m)
        out = [CycNum.zero(self.m) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, c in enumerate(self.coeffs):
            for j, d in enumerate(other.coeffs):
                out[i + j] = out[i + j] + c * d
        return CycPoly(self.m, out)

    def __sub__(self, other: "CycPoly") -> "CycPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        z = CycNum.zero(self.m)
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else z
            b = other.coeffs[i] if i < len(other.coeffs) else z
            out.append(a - b)
        return CycPoly(self.m, out)

    def scale(self, c: CycNum) -> "CycPoly":
        return CycPoly(self.m, [x * c for x in self.coeffs])

    def __divmod__(self, other: "CycPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlead_inv = other.coeffs[-1].inverse()
        dq = other.degree
        z = CycNum.zero(self.m)
        quot = [z] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            f = c * dlead_inv
            quot[i - dq] = f
            for j, d in enumerate(other.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - f * d
        return CycPoly(self.m, quot), CycPoly(self.m, rem)

    def gcd(self, other: "CycPoly") -> "CycPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, divmod(a, b)[1]
        if a.is_zero():
            return a
        return a.scale(a.coeffs[-1].inverse())

    def to_qpoly_in_qsquared(self) -> QPolynomial:
        """Interpret u^2 = q: all coefficients must be rational and odd degrees zero."""
        out = []
        for i, c in enumerate(self.coeffs):
            v = c.as_rational()
            if i % 2 == 1:
                if v != 0:
                    raise ValueError("odd power of u survives; value is not in Q(q)")
            else:
                out.append(v)
        return QPolynomial(out)
