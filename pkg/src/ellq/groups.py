"""Generic finite group machinery: enumeration from generators, conjugacy
classes, centralizers, subgroups, and exact character tables.

The character table algorithm splits common eigenspaces of the class-sum
matrices over a prime field F_p (p = 1 mod exponent, p > 2*sqrt(|G|)), lifts
eigenvalue multiplicities to exact cyclotomic integers, and then verifies the
full orthogonality relations exactly over Q(zeta).  Any verification failure
is a hard error; no approximate tables are ever returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .cyclo import CycNum


class GroupTooLargeError(ValueError):
    pass


@dataclass
class ConjClass:
    rep: object
    size: int
    order: int  # order of the elements
    elements: tuple = ()


class FiniteGroup:
    """A concrete finite group whose elements are hashable objects."""

    def __init__(self, elements, mult: Callable, inv: Callable, identity,
                 generators: Sequence = (), lengths: Optional[dict] = None):
        self.elements = list(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.mult = mult
        self.inv = inv
        self.identity = identity
        self.generators = list(generators)
        self.lengths = lengths
        self._classes: Optional[list[ConjClass]] = None
        self._class_of: Optional[dict] = None

    @staticmethod
    def generate(generators: Sequence, mult: Callable, inv: Callable, identity,
                 bound: int = 50000, track_lengths: bool = False) -> "FiniteGroup":
        """Enumerate the group generated by `generators` by breadth-first closure."""
        lengths = {identity: 0}
        frontier = [identity]
        elements = [identity]
        seen = {identity}
        while frontier:
            nxt = []
            for g in frontier:
                for s in generators:
                    h = mult(g, s)
                    if h not in seen:
                        seen.add(h)
                        lengths[h] = lengths[g] + 1
                        elements.append(h)
                        nxt.append(h)
                        if len(elements) > bound:
                            raise GroupTooLargeError(
                                f"group exceeds enumeration bound {bound}")
            frontier = nxt
        return FiniteGroup(elements, mult, inv, identity, generators,
                           lengths if track_lengths else None)

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, g) -> int:
        n, h = 1, g
        while h != self.identity:
            h = self.mult(h, g)
            n += 1
        return n

    def conjugacy_classes(self) -> list[ConjClass]:
        """Orbit partition under conjugation, deterministically ordered."""
        if self._classes is not None:
            return self._classes
        seen = set()
        raw = []
        for g in self.elements:
            if g in seen:
                continue
            orbit = {g}
            frontier = [g]
            while frontier:
                x = frontier.pop()
                for s in self.generators or self.elements:
                    y = self.mult(self.mult(s, x), self.inv(s))
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            seen |= orbit
            rep = min(orbit, key=self._element_key)
            raw.append(ConjClass(rep, len(orbit), self.element_order(rep), tuple(orbit)))
        raw.sort(key=lambda c: (c.size, c.order, self._element_key(c.rep)))
        # identity class first
        for i, c in enumerate(raw):
            if c.rep == self.identity:
                raw.insert(0, raw.pop(i))
                break
        self._classes = raw
        self._class_of = {}
        for i, c in enumerate(raw):
            for x in c.elements:
                self._class_of[x] = i
        return raw

    def _element_key(self, g):
        return repr(g)

    def class_of(self, g) -> int:
        self.conjugacy_classes()
        return self._class_of[g]

    def centralizer(self, x) -> "FiniteGroup":
        elems = [g for g in self.elements if self.mult(g, x) == self.mult(x, g)]
        return FiniteGroup(elems, self.mult, self.inv, self.identity,
                           generators=elems)

    def subgroup(self, gens: Sequence) -> "FiniteGroup":
        sub = FiniteGroup.generate(list(gens), self.mult, self.inv, self.identity,
                                   bound=self.order)
        return sub

    def exponent(self) -> int:
        from math import lcm
        e = 1
        for c in self.conjugacy_classes():
            e = lcm(e, c.order)
        return e

    # -- character table -----------------------------------------------------

    def character_table(self) -> "CharacterTable":
        return _dixon_table(self)


@dataclass
class CharacterTable:
    """Exact character table: rows = irreducibles, columns = conjugacy classes.

    Values are ints where the character is rational (always, for Weyl groups)
    and CycNum otherwise.
    """
    group: FiniteGroup
    classes: list[ConjClass]
    values: list[list]  # values[i][j] = chi_i(class j)
    conductor: int

    @property
    def n_irreps(self) -> int:
        return len(self.values)

    def dims(self) -> list[int]:
        return [row[0] for row in self.values]

    def inner_product(self, f, g) -> Fraction:
        """<f, g> = (1/|G|) sum |C| f(C) conj(g(C)) for rational class functions."""
        total = Fraction(0)
        for j, c in enumerate(self.classes):
            total += c.size * Fraction(f[j]) * Fraction(g[j])
        return total / self.group.order

    def decompose(self, values) -> list[Fraction]:
        """Coordinates of a rational class function in the basis of irreducibles."""
        return [self.inner_product(values, row) for row in self.values]


# ---------------------------------------------------------------------------
# modular linear algebra


def _mat_mul(a, b, p):
    n, m, k = len(a), len(b[0]), len(b)
    bt = list(zip(*b))
    return [[sum(ra[t] * cb[t] for t in range(k)) % p for cb in bt] for ra in a]


def _mat_vec(a, v, p):
    return [sum(ra[t] * v[t] for t in range(len(v))) % p for ra in a]


def _charpoly_mod(a, p):
    """Characteristic polynomial (monic, low-to-high coefficients) mod p
    by the Faddeev-LeVerrier recursion; requires p > n."""
    n = len(a)
    if n == 0:
        return [1]
    assert p > n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [row[:] for row in a]
    for k in range(1, n + 1):
        tr = sum(mk[i][i] for i in range(n)) % p
        c = (-tr * pow(k, -1, p)) % p
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                mk[i][i] = (mk[i][i] + c) % p
            mk = _mat_mul(a, mk, p)
    return coeffs


def _poly_trim(f, p):
    f = [x % p for x in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(f, g, p):
    """Remainder of f by nonzero trimmed g; zero polynomial is []."""
    f = _poly_trim(f, p)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    while f and len(f) - 1 >= dg:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for j in range(dg + 1):
            f[shift + j] = (f[shift + j] - c * g[j]) % p
        while f and f[-1] == 0:
            f.pop()
    return f


def _poly_gcd_mod(f, g, p):
    """Monic gcd; inputs trimmed lists, not both zero."""
    f = _poly_trim(f, p)
    g = _poly_trim(g, p)
    while g:
        f, g = g, _poly_mod(f, g, p)
    inv = pow(f[-1], -1, p)
    return [x * inv % p for x in f]


def _poly_mul_mod(a, b, g, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, g, p)


def _poly_pow_mod(base, e, g, p):
    result = _poly_mod([1], g, p)
    base = _poly_mod(base[:], g, p)
    while e:
        if e & 1:
            result = _poly_mul_mod(result, base, g, p)
        base = _poly_mul_mod(base, base, g, p)
        e >>= 1
    return result


def _poly_roots_mod(f, p):
    """All roots in F_p of f (multiplicities stripped), deterministic order."""
    f = _poly_trim(f, p)
    # distinct-root part: gcd(f, x^p - x)
    xp = _poly_pow_mod([0, 1], p, f, p)
    xp_minus_x = _poly_trim(xp + [0, 0], p)
    if len(xp_minus_x) < 2:
        xp_minus_x += [0] * (2 - len(xp_minus_x))
    xp_minus_x[1] = (xp_minus_x[1] - 1) % p
    xp_minus_x = _poly_trim(xp_minus_x, p)
    if not xp_minus_x:
        g = [x * pow(f[-1], -1, p) % p for x in f]
    else:
        g = _poly_gcd_mod(f, xp_minus_x, p)
    roots: list[int] = []
    _split_linear(g, p, roots)
    return sorted(roots)


def _split_linear(g, p, out):
    """Roots of a monic product of distinct linear factors, by Cantor-Zassenhaus
    with deterministic shift sequence."""
    deg = len(g) - 1
    if deg <= 0:
        return
    if deg == 1:
        out.append((-g[0]) % p)
        return
    a = 0
    while True:
        h = _poly_pow_mod([a, 1], (p - 1) // 2, g, p)
        h = _poly_trim(h + [0], p)
        if h:
            h[0] = (h[0] - 1) % p
        else:
            h = [p - 1]
        h = _poly_trim(h, p)
        if h:
            d = _poly_gcd_mod(g, h, p)
            if 0 < len(d) - 1 < deg:
                _split_linear(d, p, out)
                _split_linear(_poly_quo_exact(g, d, p), p, out)
                return
        a += 1


def _poly_quo_exact(f, d, p):
    f = f[:]
    dd = len(d) - 1
    inv_lead = pow(d[-1], -1, p)
    quo = [0] * (len(f) - dd)
    for i in range(len(f) - 1, dd - 1, -1):
        c = f[i] % p
        if c:
            c = c * inv_lead % p
            quo[i - dd] = c
            for j in range(dd + 1):
                f[i - dd + j] = (f[i - dd + j] - c * d[j]) % p
    return quo


def _nullspace_mod(a, p):
    """Basis of the right nullspace of square matrix a over F_p (as columns)."""
    n = len(a)
    m = [row[:] for row in a]
    pivots = []
    r = 0
    for col in range(n):
        piv = None
        for row in range(r, n):
            if m[row][col] % p:
                piv = row
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for row in range(n):
            if row != r and m[row][col] % p:
                f = m[row][col]
                m[row] = [(x - f * y) % p for x, y in zip(m[row], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][fc]) % p
        basis.append(v)
    return basis


def _solve_in_span(basis_cols, targets, p):
    """Express each target vector in the span of basis_cols; returns the
    coefficient matrix R with target_j = sum_i R[i][j] basis_i."""
    n = len(basis_cols[0])
    d = len(basis_cols)
    t = len(targets)
    aug = [[basis_cols[i][row] for i in range(d)] + [tv[row] for tv in targets]
           for row in range(n)]
    r = 0
    pivots = []
    for col in range(d):
        piv = None
        for row in range(r, n):
            if aug[row][col] % p:
                piv = row
                break
        if piv is None:
            raise ValueError("basis columns not independent")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][col], -1, p)
        aug[r] = [x * inv % p for x in aug[r]]
        for row in range(n):
            if row != r and aug[row][col] % p:
                f = aug[row][col]
                aug[row] = [(x - f * y) % p for x, y in zip(aug[row], aug[r])]
        pivots.append(col)
        r += 1
    for row in range(r, n):
        if any(x % p for x in aug[row][d:]):
            raise ValueError("target not in span")
    return [[aug[i][d + j] for j in range(t)] for i in range(d)]


# ---------------------------------------------------------------------------
# Dixon's algorithm


def _dixon_prime(order: int, exponent: int, min_above: int) -> int:
    from sympy import isprime
    from math import isqrt
    p = max(2 * isqrt(order), min_above) + 1
    while not (isprime(p) and p % exponent == 1 % exponent):
        p += 1
    return p


def _class_matrix(group: FiniteGroup, classes, class_of, i, p):
    """A_i[j][k] = #{x in C_i : x^{-1} z_k in C_j}, reduced mod p."""
    k_count = len(classes)
    a = [[0] * k_count for _ in range(k_count)]
    reps = [c.rep for c in classes]
    inv = group.inv
    mult = group.mult
    for x in classes[i].elements:
        xi = inv(x)
        for k, z in enumerate(reps):
            j = class_of[mult(xi, z)]
            a[j][k] += 1
    return [[v % p for v in row] for row in a]


def _dixon_table(group: FiniteGroup) -> CharacterTable:
    classes = group.conjugacy_classes()
    kk = len(classes)
    class_of = group._class_of
    exponent = group.exponent()
    p = _dixon_prime(group.order, exponent, min_above=max(kk, exponent) + 1)

    # common one-dimensional eigenspaces of the class matrices over F_p
    spaces = [[_unit_vec(kk, i) for i in range(kk)]]
    for i in range(1, kk):
        if all(len(s) == 1 for s in spaces):
            break
        ai = _class_matrix(group, classes, class_of, i, p)
        new_spaces = []
        for s in spaces:
            if len(s) == 1:
                new_spaces.append(s)
                continue
            targets = [_mat_vec(ai, v, p) for v in s]
            r = _solve_in_span(s, targets, p)
            cp = _charpoly_mod(r, p)
            for lam in _poly_roots_mod(cp, p):
                rm = [[(r[a_][b_] - (lam if a_ == b_ else 0)) % p for b_ in range(len(s))]
                      for a_ in range(len(s))]
                eigenbasis = []
                for nv in _nullspace_mod(rm, p):
                    w = [sum(nv[t] * s[t][row] for t in range(len(s))) % p
                         for row in range(kk)]
                    eigenbasis.append(w)
                if eigenbasis:
                    new_spaces.append(eigenbasis)
        spaces = new_spaces
    if not all(len(s) == 1 for s in spaces) or len(spaces) != kk:
        raise RuntimeError("character table eigenspace splitting failed")

    # normalize: w[identity] = 1, then recover chi(1) and the values mod p
    sizes = [c.size for c in classes]
    inv_class = [class_of[group.inv(c.rep)] for c in classes]
    rows_fp = []
    for (w,) in spaces:
        if w[0] % p == 0:
            raise RuntimeError("eigenvector vanishes at the identity class")
        scale = pow(w[0], -1, p)
        w = [x * scale % p for x in w]
        dot = sum(w[kx] * w[inv_class[kx]] * pow(sizes[kx], -1, p) for kx in range(kk)) % p
        chi1_sq = group.order * pow(dot, -1, p) % p
        chi1 = _sqrt_mod(chi1_sq, p)
        from math import isqrt
        bound = isqrt(group.order)
        chi1 = min(chi1, p - chi1)
        if not (1 <= chi1 <= bound):
            raise RuntimeError("irreducible degree lift out of range")
        row = [chi1 * w[kx] * pow(sizes[kx], -1, p) % p for kx in range(kk)]
        rows_fp.append(row)

    # lift to exact cyclotomic values
    from sympy import primitive_root
    omega = pow(primitive_root(p), (p - 1) // exponent, p)
    power_class = _power_map(group, classes, class_of)
    values = []
    for row in rows_fp:
        chi1 = row[0] if row[0] <= p // 2 else row[0] - p
        exact_row = []
        for j in range(kk):
            d = classes[j].order
            om_d = pow(omega, exponent // d, p)
            coeffs = {}
            dinv = pow(d, -1, p)
            for s in range(d):
                ms = sum(row[power_class[j][kx]] * pow(om_d, (-s * kx) % d, p)
                         for kx in range(d)) * dinv % p
                ms = ms if ms <= p // 2 else ms - p
                if not (0 <= ms <= chi1):
                    raise RuntimeError("eigenvalue multiplicity lift out of range")
                if ms:
                    coeffs[(s * (exponent // d)) % exponent] = Fraction(ms)
            val = CycNum(exponent, coeffs)
            exact_row.append(val)
        values.append(exact_row)

    # simplify rational entries to ints and sort deterministically
    simple: list[list] = []
    for row in values:
        srow = []
        for v in row:
            if v.is_rational():
                r = v.as_rational()
                assert r.denominator == 1, "character values are algebraic integers"
                srow.append(int(r))
            else:
                srow.append(v)
        simple.append(srow)
    simple.sort(key=_row_sort_key)
    for i, row in enumerate(simple):
        if all(isinstance(v, int) and v == 1 for v in row):
            simple.insert(0, simple.pop(i))
            break
    else:
        raise RuntimeError("trivial character missing from the table")

    table = CharacterTable(group, classes, simple, exponent)
    _verify_table(table)
    return table


def _unit_vec(n, i):
    v = [0] * n
    v[i] = 1
    return v


def _sqrt_mod(a, p):
    from sympy.ntheory import sqrt_mod
    r = sqrt_mod(a, p)
    if r is None:
        raise RuntimeError(f"no square root of {a} mod {p}")
    return r


def _power_map(group, classes, class_of):
    pm = []
    for c in classes:
        row = []
        g = group.identity
        for _ in range(c.order):
            row.append(class_of[g])
            g = group.mult(g, c.rep)
        pm.append(row)
    return pm


def _row_sort_key(row):
    key = [row[0]]
    for v in row[1:]:
        if isinstance(v, int):
            key.append((0, (Fraction(v),)))
        else:
            key.append((1, v.reduced()))
    return key


def _as_cyc(v, m) -> CycNum:
    if isinstance(v, CycNum):
        return v
    return CycNum.rational(m, v)


def _verify_table(table: CharacterTable) -> None:
    """Exact first/second orthogonality; raises on any failure."""
    kk = len(table.classes)
    n = table.n_irreps
    if n != kk:
        raise RuntimeError("wrong number of irreducibles")
    order = table.group.order
    m = table.conductor
    if not all(isinstance(v, int) and v == 1 for v in table.values[0]):
        raise RuntimeError("first row is not the trivial character")
    for a in range(n):
        for b in range(a, n):
            total = CycNum.zero(m)
            for j, c in enumerate(table.classes):
                va = _as_cyc(table.values[a][j], m)
                vb = _as_cyc(table.values[b][j], m)
                total = total + va * vb.conj() * c.size
            expected = Fraction(order if a == b else 0)
            if not total.is_rational() or total.as_rational() != expected:
                raise RuntimeError(f"row orthogonality fails for rows {a},{b}")
