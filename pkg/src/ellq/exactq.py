"""Exact arithmetic in the indeterminate q.

Polynomials are dense tuples of ``fractions.Fraction`` coefficients, constant
term first.  Rational functions are kept in canonical form: numerator and
denominator coprime, denominator monic.  Cyclotomic factorisation is by trial
division by Phi_n for n up to a configurable bound (default 30, the largest
index occurring in the E8 tables).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

DEFAULT_CYCLOTOMIC_BOUND = 30


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QPolynomial:
    """A polynomial in q over the rationals.

    >>> QPolynomial.of(1, -2, 1)
    QPolynomial('q^2 - 2q + 1')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @staticmethod
    def of(*coeffs: Scalar) -> "QPolynomial":
        return QPolynomial(coeffs)

    @staticmethod
    def zero() -> "QPolynomial":
        return QPolynomial(())

    @staticmethod
    def one() -> "QPolynomial":
        return QPolynomial((1,))

    @staticmethod
    def q() -> "QPolynomial":
        return QPolynomial((0, 1))

    @staticmethod
    def monomial(n: int, c: Scalar = 1) -> "QPolynomial":
        return QPolynomial((0,) * n + (c,))

    @staticmethod
    def qpow_minus_one(n: int) -> "QPolynomial":
        """q^n - 1."""
        return QPolynomial((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def low_degree(self) -> int:
        """Smallest degree with nonzero coefficient; -1 for zero."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def monic(self) -> "QPolynomial":
        if self.is_zero() or self.leading == 1:
            return self
        lc = self.leading
        return QPolynomial(c / lc for c in self.coeffs)

    def shift(self, n: int) -> "QPolynomial":
        """Multiply by q^n (n >= 0)."""
        if self.is_zero():
            return self
        return QPolynomial((Fraction(0),) * n + self.coeffs)

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QPolynomial.zero()
            return QPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPolynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, d in enumerate(other.coeffs):
                if d != 0:
                    out[i + j] += c * d
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPolynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "QPolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        dlead = dv[-1]
        dq = len(dv) - 1
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / dlead
            quot[i - dq] = f
            for j, d in enumerate(dv):
                rem[i - dq + j] -= f * d
        return QPolynomial(quot), QPolynomial(rem)

    def __floordiv__(self, other: "QPolynomial") -> "QPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "QPolynomial") -> "QPolynomial":
        return divmod(self, other)[1]

    def divides(self, other: "QPolynomial") -> bool:
        return divmod(other, self)[1].is_zero()

    def evaluate(self, x):
        """Evaluate at x; x may be a Fraction, int, or RationalFunction."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        if isinstance(result, int):
            return Fraction(result)
        return result

    def substitute_pow(self, k: int) -> "QPolynomial":
        """Return self(q^k) for k >= 1."""
        out = [Fraction(0)] * (k * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return QPolynomial(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial('{self}')"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else (" - " if parts else ("-" if c < 0 else ""))
            a = abs(c)
            if i == 0:
                term = str(a)
            else:
                var = "q" if i == 1 else f"q^{i}"
                term = var if a == 1 else f"{a}{var}"
            parts.append(sign + term)
        return "".join(parts)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(data: list[str]) -> "QPolynomial":
        return QPolynomial(Fraction(s) for s in data)


def _coerce_poly(x) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return QPolynomial((x,))
    return NotImplemented


def _int_primitive(coeffs: list[int]) -> list[int]:
    import math
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
        if g == 1:
            return coeffs
    if g in (0, 1):
        return coeffs
    return [c // g for c in coeffs]


def _to_int_poly(p: QPolynomial) -> list[int]:
    import math
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return _int_primitive([int(c * den) for c in p.coeffs])


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials, lc(b)^(da-db+1) * a mod b."""
    a = a[:]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for j in range(db + 1):
            a[shift + j] -= la * b[j]
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Monic gcd over the rationals (primitive pseudo-remainder sequence,
    which avoids the coefficient blowup of naive Euclid on large inputs)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x = _to_int_poly(a)
    y = _to_int_poly(b)
    if len(x) < len(y):
        x, y = y, x
    while y and any(y):
        r = _int_pseudo_rem(x, y)
        r = _int_primitive(r)
        x, y = y, r
    g = QPolynomial(x)
    return g.monic()


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> QPolynomial:
    """The n-th cyclotomic polynomial Phi_n, monic of degree phi(n).

    >>> str(cyclotomic(6))
    'q^2 - q + 1'
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    p = QPolynomial.qpow_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            q, r = divmod(p, cyclotomic(d))
            assert r.is_zero()
            p = q
    return p


@dataclass(frozen=True)
class CyclotomicFactorization:
    """scalar * q^q_power * prod Phi_n^mult * remainder, reconstructing the input."""

    scalar: Fraction
    q_power: int
    factors: dict[int, int]
    remainder: QPolynomial
    bound: int = DEFAULT_CYCLOTOMIC_BOUND

    def reconstruct(self) -> QPolynomial:
        p = QPolynomial.monomial(self.q_power, self.scalar)
        for n in sorted(self.factors):
            p = p * cyclotomic(n) ** self.factors[n]
        return p * self.remainder

    def to_json(self) -> dict:
        return {
            "scalar": str(self.scalar),
            "qpow": self.q_power,
            "phi": {str(n): m for n, m in sorted(self.factors.items())},
            "rem": self.remainder.to_json(),
        }

    def __str__(self):
        parts = []
        if self.scalar != 1 or not (self.factors or self.q_power or not self.remainder.is_one()):
            parts.append(str(self.scalar))
        if self.q_power == 1:
            parts.append("q")
        elif self.q_power > 1:
            parts.append(f"q^{self.q_power}")
        for n in sorted(self.factors):
            m = self.factors[n]
            base = "(q-1)" if n == 1 else ("(q+1)" if n == 2 else f"Phi{n}")
            parts.append(base if m == 1 else f"{base}^{m}")
        if not self.remainder.is_one():
            parts.append(f"[{self.remainder}]")
        return " * ".join(parts) if parts else "1"


def factor_cyclotomic(p: QPolynomial, bound: int = DEFAULT_CYCLOTOMIC_BOUND) -> CyclotomicFactorization:
    """Exact factorisation by trial division by Phi_n, n <= bound."""
    if p.is_zero():
        raise ValueError("zero input")
    v = p.low_degree()
    if v > 0:
        p = QPolynomial(p.coeffs[v:])
    factors: dict[int, int] = {}
    for n in range(1, bound + 1):
        phi = cyclotomic(n)
        while True:
            quo, rem = divmod(p, phi)
            if not rem.is_zero():
                break
            factors[n] = factors.get(n, 0) + 1
            p = quo
    scalar = p.leading if not p.is_zero() else Fraction(1)
    return CyclotomicFactorization(scalar, v, factors, p.monic(), bound)


class RationalFunction:
    """Element of Q(q) in canonical form: gcd(num, den) = 1, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: QPolynomial, den: QPolynomial = None):
        if den is None:
            den = QPolynomial.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = QPolynomial.zero()
            self.den = QPolynomial.one()
            return
        g = poly_gcd(num, den)
        if not g.is_one():
            num = num // g
            den = den // g
        lc = den.leading
        if lc != 1:
            num = num * (1 / lc)
            den = den.monic()
        self.num = num
        self.den = den

    @staticmethod
    def of(num, den=1) -> "RationalFunction":
        return RationalFunction(_coerce_poly(num), _coerce_poly(den))

    @staticmethod
    def qpow(k: int) -> "RationalFunction":
        """q^k for any integer k (negative allowed)."""
        if k >= 0:
            return RationalFunction(QPolynomial.monomial(k))
        return RationalFunction(QPolynomial.one(), QPolynomial.monomial(-k))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_polynomial(self) -> QPolynomial:
        if not self.den.is_one():
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def __add__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_rf(other) + (-self)

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_rf(other) / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def evaluate(self, x: Scalar) -> Fraction:
        x = _frac(x)
        d = self.den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"evaluation at a pole: q = {x}")
        return self.num.evaluate(x) / d

    def substitute_pow(self, k: int) -> "RationalFunction":
        return RationalFunction(self.num.substitute_pow(k), self.den.substitute_pow(k))

    def sign_at_infinity(self) -> int:
        """Sign of the value for large real q (0 for the zero function)."""
        if self.is_zero():
            return 0
        return 1 if self.num.leading > 0 else -1

    def __abs__(self) -> "RationalFunction":
        return -self if self.sign_at_infinity() < 0 else self

    def __eq__(self, other) -> bool:
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RationalFunction('{self}')"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def factored(self, bound: int = DEFAULT_CYCLOTOMIC_BOUND) -> str:
        """Cyclotomically factored rendering, e.g. '(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)'."""
        if self.is_zero():
            return "0"
        numf = factor_cyclotomic(self.num, bound)
        if self.den.is_one():
            return str(numf)
        denf = factor_cyclotomic(self.den, bound)
        scalar = numf.scalar / denf.scalar
        num_parts = []
        if scalar != 1:
            num_parts.append(str(scalar))
        if numf.q_power == 1:
            num_parts.append("q")
        elif numf.q_power > 1:
            num_parts.append(f"q^{numf.q_power}")
        for n in sorted(numf.factors):
            m = numf.factors[n]
            base = "(q-1)" if n == 1 else f"Phi{n}"
            num_parts.append(base if m == 1 else f"{base}^{m}")
        if not numf.remainder.is_one():
            num_parts.append(f"[{numf.remainder}]")
        den_parts = []
        if denf.q_power == 1:
            den_parts.append("q")
        elif denf.q_power > 1:
            den_parts.append(f"q^{denf.q_power}")
        for n in sorted(denf.factors):
            m = denf.factors[n]
            base = "(q-1)" if n == 1 else f"Phi{n}"
            den_parts.append(base if m == 1 else f"{base}^{m}")
        if not denf.remainder.is_one():
            den_parts.append(f"[{denf.remainder}]")
        num_str = " * ".join(num_parts) if num_parts else "1"
        return f"{num_str} / ({' '.join(den_parts)})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data: dict) -> "RationalFunction":
        return RationalFunction(QPolynomial.from_json(data["num"]), QPolynomial.from_json(data["den"]))


def _coerce_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, QPolynomial):
        return RationalFunction(x)
    if isinstance(x, (int, Fraction)):
        return RationalFunction(QPolynomial((x,)))
    return NotImplemented


RF_ZERO = RationalFunction(QPolynomial.zero())
RF_ONE = RationalFunction(QPolynomial.one())
RF_Q = RationalFunction(QPolynomial.q())


def one_minus_qpow(k: int) -> RationalFunction:
    """1 - q^k as a rational function, any integer k."""
    return RF_ONE - RationalFunction.qpow(k)
