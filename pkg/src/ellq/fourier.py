"""The nonabelian Fourier transform attached to a small finite group, family
data for the realized Weyl groups, the pairing on the parameter set X(W), and
generic degrees.

Supported small groups: trivial, Z2^k (k <= 4), S3, S4, S5.  Each pair in
M(Gamma) is a conjugacy class representative together with an irreducible
character of its centralizer; all arithmetic is exact, with cyclotomic
character values collapsing to rationals in the final matrices.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .cyclo import CycNum
from .exactq import QPolynomial, RationalFunction
from .groups import CharacterTable, FiniteGroup
from .weylgrp import ProductWeyl, WeylGroupData, fake_degree_values

SUPPORTED_GAMMAS = ("trivial", "Z2", "Z2^2", "Z2^3", "Z2^4", "S3", "S4", "S5")


def _perm_mult(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def _perm_inv(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


@functools.lru_cache(maxsize=None)
def small_group(name: str) -> FiniteGroup:
    if name == "trivial":
        return FiniteGroup([(0,)], _perm_mult, _perm_inv, (0,), generators=[])
    if name.startswith("Z2"):
        k = 1 if name == "Z2" else int(name.split("^")[1])
        if k > 4:
            raise ValueError(f"unsupported group {name!r}")
        n = 2 * k
        gens = []
        for i in range(k):
            e = list(range(n))
            e[2 * i], e[2 * i + 1] = e[2 * i + 1], e[2 * i]
            gens.append(tuple(e))
        return FiniteGroup.generate(gens, _perm_mult, _perm_inv, tuple(range(n)))
    if name in ("S3", "S4", "S5"):
        n = int(name[1])
        gens = []
        for i in range(n - 1):
            e = list(range(n))
            e[i], e[i + 1] = e[i + 1], e[i]
            gens.append(tuple(e))
        return FiniteGroup.generate(gens, _perm_mult, _perm_inv, tuple(range(n)))
    raise ValueError(f"unsupported group {name!r}")


@dataclass(frozen=True)
class MPair:
    x_class: int   # conjugacy class index in Gamma
    char_index: int  # row of the centralizer's character table
    label: tuple[str, str]

    def __str__(self):
        return f"({self.label[0]},{self.label[1]})"


@dataclass
class FourierBlock:
    """Entries are Fractions when rational; exact real cyclotomic numbers
    otherwise (this happens for S5, whose 5- and 6-cycle pairs produce real
    quadratic irrationalities)."""
    gamma_name: str
    pairs: list[MPair]
    matrix: list[list]
    conductor: int

    def index(self, label: tuple[str, str]) -> int:
        for i, p in enumerate(self.pairs):
            if p.label == tuple(label):
                return i
        raise KeyError(f"no pair {label} in M({self.gamma_name})")

    def entry(self, a, b):
        return self.matrix[self.index(a)][self.index(b)]

    def is_rational(self) -> bool:
        return all(isinstance(v, Fraction) for row in self.matrix for v in row)


def _x_labels(gamma: FiniteGroup) -> list[str]:
    labels = []
    counts: dict[int, int] = {}
    for c in gamma.conjugacy_classes():
        if c.rep == gamma.identity:
            labels.append("1")
            continue
        counts[c.order] = counts.get(c.order, 0) + 1
        suffix = "'" * (counts[c.order] - 1)
        base = "tau" if gamma.order == 2 else f"g{c.order}"
        labels.append(base + suffix)
    return labels


def _char_labels(table: CharacterTable) -> list[str]:
    labels = []
    n_eps = 0
    n_chi = 0
    two_dims = sum(1 for row in table.values if row[0] == 2)
    for i, row in enumerate(table.values):
        if all(isinstance(v, int) and v == 1 for v in row):
            labels.append("1")
        elif row[0] == 1 and all(isinstance(v, int) and v in (1, -1) for v in row):
            n_eps += 1
            labels.append("eps" + "'" * (n_eps - 1))
        elif row[0] == 2 and two_dims == 1:
            labels.append("r")
        else:
            n_chi += 1
            labels.append(f"chi{n_chi}")
    return labels


@functools.lru_cache(maxsize=None)
def m_set(gamma_name: str) -> list[MPair]:
    """Gamma-orbits of pairs (x, irreducible character of the centralizer)."""
    gamma = small_group(gamma_name)
    xl = _x_labels(gamma)
    out = []
    for i, c in enumerate(gamma.conjugacy_classes()):
        cent = gamma.centralizer(c.rep)
        table = cent.character_table()
        cl = _char_labels(table)
        for a in range(len(table.values)):
            out.append(MPair(i, a, (xl[i], cl[a])))
    return out


def _lift(v, m) -> CycNum:
    if isinstance(v, CycNum):
        if v.m == m:
            return v
        assert m % v.m == 0
        scale = m // v.m
        return CycNum(m, {(k * scale) % m: c for k, c in v.c.items()})
    return CycNum.rational(m, v)


@functools.lru_cache(maxsize=None)
def fourier_matrix(gamma_name: str) -> FourierBlock:
    """{(x,sigma),(y,tau)} = (1/|C(x)||C(y)|) sum over g with x g y g^-1 = g y g^-1 x
    of sigma(g y g^-1) conj(tau(g^-1 x g)); exact and rational for all
    supported groups."""
    gamma = small_group(gamma_name)
    pairs = m_set(gamma_name)
    classes = gamma.conjugacy_classes()
    cents = []
    tables = []
    for c in classes:
        cent = gamma.centralizer(c.rep)
        cents.append(cent)
        tables.append(cent.character_table())
    m = gamma.exponent()
    n = len(pairs)
    matrix = [[Fraction(0)] * n for _ in range(n)]
    mult, inv = gamma.mult, gamma.inv
    for a in range(n):
        pa = pairs[a]
        x = classes[pa.x_class].rep
        cx, tx = cents[pa.x_class], tables[pa.x_class]
        for b in range(a, n):
            pb = pairs[b]
            y = classes[pb.x_class].rep
            cy, ty = cents[pb.x_class], tables[pb.x_class]
            total = CycNum.zero(m)
            for g in gamma.elements:
                u = mult(mult(g, y), inv(g))
                if mult(x, u) != mult(u, x):
                    continue
                v = mult(mult(inv(g), x), g)
                sa = _lift(tx.values[pa.char_index][cx.class_of(u)], m)
                tb = _lift(ty.values[pb.char_index][cy.class_of(v)], m)
                total = total + sa * tb.conj()
            scale = Fraction(1, cx.order * cy.order)
            val = total.as_rational() * scale if total.is_rational() else total * scale
            matrix[a][b] = val
            matrix[b][a] = val  # real symmetric
    block = FourierBlock(gamma_name, pairs, matrix, m)
    _check_block(block)
    return block


def _check_block(block: FourierBlock) -> None:
    """Exact symmetry, realness, and the involution property M^2 = 1."""
    n = len(block.pairs)
    if block.is_rational():
        mat = block.matrix
        for i in range(n):
            for j in range(n):
                if mat[i][j] != mat[j][i]:
                    raise RuntimeError("Fourier matrix not symmetric")
                s = sum(mat[i][k] * mat[k][j] for k in range(n))
                if s != (1 if i == j else 0):
                    raise RuntimeError("Fourier matrix not an involution")
        return
    m = block.conductor
    mat = [[_lift(v, m) for v in row] for row in block.matrix]
    for i in range(n):
        for j in range(n):
            if not (mat[i][j] - mat[j][i]).is_zero():
                raise RuntimeError("Fourier matrix not symmetric")
            if not (mat[i][j] - mat[i][j].conj()).is_zero():
                raise RuntimeError("Fourier matrix not real")
            s = CycNum.zero(m)
            for k in range(n):
                s = s + mat[i][k] * mat[k][j]
            if not (s - CycNum.rational(m, 1 if i == j else 0)).is_zero():
                raise RuntimeError("Fourier matrix not an involution")


def special_column_entry(gamma_name: str, y_pair, rho1_pair) -> Fraction:
    """{(y,rho),(1,rho')} = rho(1) rho'(y) / |C(y)| (column with identity x-part)."""
    gamma = small_group(gamma_name)
    pairs = m_set(gamma_name)
    block_pairs = {p.label: p for p in pairs}
    py = block_pairs[tuple(y_pair)]
    p1 = block_pairs[tuple(rho1_pair)]
    classes = gamma.conjugacy_classes()
    if classes[p1.x_class].rep != gamma.identity:
        raise ValueError("second argument must have identity group element")
    cy = gamma.centralizer(classes[py.x_class].rep)
    ty = cy.character_table()
    tg = gamma.character_table()
    rho_dim = ty.values[py.char_index][0]
    rho_prime_at_y = tg.values[p1.char_index][py.x_class]
    return Fraction(rho_dim) * Fraction(rho_prime_at_y) / cy.order


# ---------------------------------------------------------------------------
# families


@dataclass
class Family:
    members: list[str]                # irreducible labels of W
    gamma: str                        # small group name; "trivial" if singleton
    embedding: dict[str, tuple[str, str]]  # member -> pair label in M(gamma)
    delta: dict[str, int]             # member -> +-1 (all +1 here)


def _singleton(label: str) -> Family:
    return Family([label], "trivial", {label: ("1", "1")}, {label: 1})


# family data for the groups where it is not forced to be singletons;
# validated downstream by the printed transform matrices and the unipotent
# degree identities
_FIXED_FAMILIES = {
    "G2": [
        ["phi(1,0)"],
        ["phi(1,6)"],
        {
            "gamma": "S3",
            "embedding": {
                "phi(2,1)": ("1", "1"),
                "phi(2,2)": ("g2", "1"),
                "phi(1,3)'": ("g3", "1"),
                "phi(1,3)''": ("1", "r"),
            },
        },
    ],
    "B2": [
        ["[2]x[]"],
        ["[]x[1, 1]"],
        {
            "gamma": "Z2",
            "embedding": {
                "[1]x[1]": ("1", "1"),
                "[]x[2]": ("1", "eps"),
                "[1, 1]x[]": ("tau", "1"),
            },
        },
    ],
    "B1": [["[1]x[]"], ["[]x[1]"]],
}


def families_for(W: Union[WeylGroupData, ProductWeyl]) -> list[Family]:
    """Family partition of Irr(W).  Type A and products of type A's are all
    singletons; G2 and B1/B2 carry fixed family data."""
    if isinstance(W, ProductWeyl):
        factor_fams = [families_for(f) for f in W.factors]
        if any(len(f.members) > 1 for fams in factor_fams for f in fams):
            raise NotImplementedError("product families only for singleton factors")
        return [_singleton(lab) for lab in W.irrep_labels()]
    spec = W.spec
    if spec.family == "A":
        return [_singleton(lab) for lab in W.irrep_labels()]
    key = str(spec)
    if key not in _FIXED_FAMILIES:
        raise NotImplementedError(f"no family data for {key}")
    out = []
    for item in _FIXED_FAMILIES[key]:
        if isinstance(item, list):
            out.extend(_singleton(lab) for lab in item)
        else:
            emb = {k: tuple(v) for k, v in item["embedding"].items()}
            members = list(emb)
            out.append(Family(members, item["gamma"], emb,
                              {mb: 1 for mb in members}))
    labels = set(W.irrep_labels())
    covered = set()
    for f in out:
        covered.update(f.members)
    if covered != labels:
        raise RuntimeError(f"family data does not partition Irr({key})")
    return out


def ef_matrix(W: Union[WeylGroupData, ProductWeyl]) -> list[list[Fraction]]:
    """Matrix of the transform on the span of Irr(W): block per family,
    zero across families."""
    labels = W.irrep_labels()
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    e = [[Fraction(0)] * n for _ in range(n)]
    for fam in families_for(W):
        if fam.gamma == "trivial":
            i = index[fam.members[0]]
            e[i][i] = Fraction(1)
            continue
        block = fourier_matrix(fam.gamma)
        for a in fam.members:
            for b in fam.members:
                e[index[a]][index[b]] = block.entry(fam.embedding[a], fam.embedding[b])
    return e


def ef_map(W, coords: Sequence[Fraction]) -> list[Fraction]:
    """Image of a virtual character (coordinates over Irr) under the transform."""
    e = ef_matrix(W)
    n = len(coords)
    return [sum(e[i][j] * Fraction(coords[j]) for j in range(n)) for i in range(n)]


@dataclass
class XWPairing:
    labels: list[str]              # "family_index:(x,sigma)"
    matrix: list[list[Fraction]]


def xw_pairing(W) -> XWPairing:
    """Pairing on the full parameter set X(W): one complete M(Gamma) block per
    family, zero across blocks; squares to the identity."""
    labels = []
    blocks = []
    for fi, fam in enumerate(families_for(W)):
        block = fourier_matrix(fam.gamma)
        blocks.append(block.matrix)
        for p in block.pairs:
            labels.append(f"F{fi}:{p}")
    n = len(labels)
    mat = [[Fraction(0)] * n for _ in range(n)]
    at = 0
    for bm in blocks:
        k = len(bm)
        for i in range(k):
            for j in range(k):
                mat[at + i][at + j] = bm[i][j]
        at += k
    return XWPairing(labels, mat)


# ---------------------------------------------------------------------------
# generic degrees


def generic_degree(W: Union[WeylGroupData, ProductWeyl], label) -> RationalFunction:
    """d(q) = sum over family members of {delta, delta'} f_{delta'}(q)."""
    if isinstance(W, ProductWeyl):
        if isinstance(label, str):
            label = label.split(" (x) ")
        out = RationalFunction(QPolynomial.one())
        for f, lab in zip(W.factors, label):
            out = out * generic_degree(f, lab)
        return out
    for fam in families_for(W):
        if label in fam.members:
            break
    else:
        raise KeyError(f"unknown irreducible {label}")
    if fam.gamma == "trivial":
        return RationalFunction(fake_degree_values(W, W.irrep_values(label)))
    block = fourier_matrix(fam.gamma)
    total = RationalFunction(QPolynomial.zero())
    for other in fam.members:
        c = block.entry(fam.embedding[label], fam.embedding[other])
        if c:
            f = fake_degree_values(W, W.irrep_values(other))
            total = total + RationalFunction(f) * c
    return total


def plancherel_sum(W: Union[WeylGroupData, ProductWeyl]) -> RationalFunction:
    """sum over irreducibles of d_delta(q) * dim(delta); equals P(q)."""
    total = RationalFunction(QPolynomial.zero())
    if isinstance(W, ProductWeyl):
        labels = W.irrep_labels()
        dims = {lab: W.irrep_values(lab)[0] for lab in labels}
    else:
        labels = W.irrep_labels()
        dims = {lab: W.irrep_values(lab)[0] for lab in labels}
    for lab in labels:
        total = total + generic_degree(W, lab) * dims[lab]
    return total


# ---------------------------------------------------------------------------
# compatibility with induction


def ef_induction_check(W: WeylGroupData, gen_indices: Sequence[int]) -> bool:
    """Whether the transform commutes with induction from the parabolic
    subgroup on the given simple generators.  The parabolic factors here are
    symmetric groups or sign groups, whose own transform is the identity, so
    the check is that induced characters are fixed."""
    from .weylgrp import h_class_function, induce_class_function, parabolic_subgroup
    H = parabolic_subgroup(W, list(gen_indices))
    table = W.character_table()
    e = ef_matrix(W)
    n = len(table.values)
    for row in H.character_table().values:
        ind = induce_class_function(W, H, h_class_function(H, row))
        coords = table.decompose(ind)
        image = [sum(e[i][j] * coords[j] for j in range(n)) for i in range(n)]
        if image != coords:
            return False
    return True
