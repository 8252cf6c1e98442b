"""Exact integer arithmetic on Milnor-lattice intersection matrices.

A basis of vanishing cycles for a simple plane-curve singularity spans a
negative definite lattice in which every basis vector has self-intersection
-2.  Everything here is exact integer arithmetic: matrices are tuples of
tuples of Python ints, reflections are unimodular congruences, and the
determinant is computed fraction-free.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


class Family(enum.Enum):
    A = "A"
    Dminus = "Dminus"
    Dplus = "Dplus"
    DoddPlus = "DoddPlus"
    DoddMinus = "DoddMinus"
    E6plus = "E6plus"
    E6minus = "E6minus"
    E7 = "E7"
    E8 = "E8"


class Variant(enum.Enum):
    Basic = "Basic"
    AltE8 = "AltE8"


_FIXED_MU = {Family.E6plus: 6, Family.E6minus: 6, Family.E7: 7, Family.E8: 8}


@dataclass(frozen=True)
class SingularityClass:
    """One of the simple singularity types, identified by family and Milnor number."""

    family: Family
    mu: int

    def __post_init__(self):
        f, mu = self.family, self.mu
        if f is Family.A:
            if mu < 1:
                raise ValueError("A-series needs mu >= 1")
        elif f in (Family.Dminus, Family.Dplus):
            if mu < 4 or mu % 2:
                raise ValueError("D_2k needs even mu >= 4")
        elif f in (Family.DoddPlus, Family.DoddMinus):
            if mu < 5 or mu % 2 == 0:
                raise ValueError("D_odd needs odd mu >= 5")
        elif mu != _FIXED_MU[f]:
            raise ValueError(f"{f.value} has mu = {_FIXED_MU[f]}")

    @property
    def k(self) -> int:
        """Series parameter: mu = 2k for D_2k, mu = 2k-1 for D_odd."""
        f = self.family
        if f in (Family.Dminus, Family.Dplus):
            return self.mu // 2
        if f in (Family.DoddPlus, Family.DoddMinus):
            return (self.mu + 1) // 2
        raise ValueError("k is only defined for D-series classes")

    def det_constant(self) -> int:
        """|det| of any vanishing-cycle intersection matrix of this class."""
        f = self.family
        if f is Family.A:
            return self.mu + 1
        if f in (Family.Dminus, Family.Dplus, Family.DoddPlus, Family.DoddMinus):
            return 4
        return {Family.E6plus: 3, Family.E6minus: 3, Family.E7: 2, Family.E8: 1}[f]


# convenience constructors

def A(mu: int) -> SingularityClass:
    return SingularityClass(Family.A, mu)


def Dminus(k: int) -> SingularityClass:
    return SingularityClass(Family.Dminus, 2 * k)


def Dplus(k: int) -> SingularityClass:
    return SingularityClass(Family.Dplus, 2 * k)


def Dodd(k: int, sign: int = +1) -> SingularityClass:
    fam = Family.DoddPlus if sign > 0 else Family.DoddMinus
    return SingularityClass(fam, 2 * k - 1)


E6PLUS = SingularityClass(Family.E6plus, 6)
E6MINUS = SingularityClass(Family.E6minus, 6)
E7 = SingularityClass(Family.E7, 7)
E8 = SingularityClass(Family.E8, 8)


# ---------------------------------------------------------------------------
# basis labels

@dataclass(frozen=True)
class BasisLabel:
    """Bookkeeping for one basis slot: a real cycle or a conjugate-pair member.

    Real cycles come first, in order of increasing critical value; conjugate
    pairs follow in adjacent (lower half-plane, upper half-plane) slots.
    """

    index: int
    kind: str            # "real" or "pair"
    position: int        # value-order position, or pair id
    member: str = ""     # "low" / "up" for pair slots


def default_labels(r: int, c: int) -> tuple[BasisLabel, ...]:
    labels = [BasisLabel(i, "real", i) for i in range(r)]
    for b in range(c):
        labels.append(BasisLabel(r + 2 * b, "pair", b, "low"))
        labels.append(BasisLabel(r + 2 * b + 1, "pair", b, "up"))
    return tuple(labels)


# ---------------------------------------------------------------------------
# integer linear algebra

def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for j in range(i + 1, n):
                if a[j][i] != 0:
                    a[i], a[j] = a[j], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] = (a[j][k] * a[i][i] - a[j][i] * a[i][k]) // prev
        prev = a[i][i]
    return sign * a[-1][-1]


def is_negative_definite(m: Sequence[Sequence[int]]) -> bool:
    """Leading-principal-minor test: minor_i must have sign (-1)^i."""
    n = len(m)
    for i in range(1, n + 1):
        d = det([row[:i] for row in m[:i]])
        if d == 0 or (d > 0) != (i % 2 == 0):
            return False
    return True


def check_matrix(m: Matrix, cls: SingularityClass | None = None) -> None:
    """Raise ValueError unless m is a valid intersection matrix (optionally of cls)."""
    n = len(m)
    for i in range(n):
        if len(m[i]) != n:
            raise ValueError("matrix is not square")
        if m[i][i] != -2:
            raise ValueError("diagonal entries must be -2")
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix must be symmetric")
    if not is_negative_definite(m):
        raise ValueError("matrix must be negative definite")
    if cls is not None:
        if n != cls.mu:
            raise ValueError("matrix size must equal mu")
        if abs(det(m)) != cls.det_constant():
            raise ValueError("wrong |det| for this class")


def pl_reflect(m: Matrix, e: int, a: int, direction: int = +1) -> Matrix:
    """Replace basis vector v_a by v_a +/- <v_a, v_e> v_e and return the new Gram matrix.

    This is the Picard-Lefschetz reflection of cycle a in cycle e; it is a
    unimodular congruence, so symmetry, the -2 diagonal, definiteness and
    |det| are all preserved.
    """
    if e == a:
        raise ValueError("reflection requires e != a")
    n = len(m)
    s = 1 if direction >= 0 else -1
    k = s * m[a][e]
    out = [list(row) for row in m]
    for j in range(n):
        if j != a:
            out[a][j] = m[a][j] + k * m[e][j]
            out[j][a] = out[a][j]
    out[a][a] = m[a][a] + 2 * k * m[a][e] + k * k * m[e][e]
    return tuple(tuple(row) for row in out)


def sign_conjugate(m: Matrix, eps: Sequence[int]) -> Matrix:
    """Conjugate by the diagonal sign matrix diag(eps): entries eps_i eps_j m_ij."""
    n = len(m)
    if len(eps) != n:
        raise ValueError("eps must have length mu")
    if any(e not in (-1, 1) for e in eps):
        raise ValueError("eps entries must be +-1")
    return tuple(
        tuple(eps[i] * eps[j] * m[i][j] for j in range(n)) for i in range(n)
    )


# ---------------------------------------------------------------------------
# seed Dynkin graphs
#
# Each seed is given by an edge list on vertices 0..mu-1 plus the split of
# vertices into minima / saddles / maxima, and the basis order (= order of
# increasing critical value) realized by the seed morsification.

def _graph_matrix(mu: int, edges: Sequence[tuple[int, int]], signs=None) -> Matrix:
    m = [[0] * mu for _ in range(mu)]
    for i in range(mu):
        m[i][i] = -2
    for idx, (i, j) in enumerate(edges):
        s = 1 if signs is None else signs[idx]
        m[i][j] = m[j][i] = s
    return tuple(tuple(row) for row in m)


def _typed_matrix(mu: int, edges: Sequence[tuple[int, int]], index) -> Matrix:
    """Signed seed matrix with canonical orientations: an edge joining
    critical points of Morse indices q_a, q_b carries (-1)^min(q_a, q_b)."""
    signs = [(-1) ** min(index[i], index[j]) for i, j in edges]
    return _graph_matrix(mu, edges, signs)


def _permute(m: Matrix, order: Sequence[int]) -> Matrix:
    return tuple(tuple(m[i][j] for j in order) for i in order)


def _a_seed(mu: int):
    # Path graph in x-order; minima are the positions with the parity of the
    # rightmost critical point (a minimum for the +x^(mu+1) normal form).
    edges = [(i, i + 1) for i in range(mu - 1)]
    minima = [i for i in range(mu) if (mu - 1 - i) % 2 == 0]
    saddles = [i for i in range(mu) if (mu - 1 - i) % 2 == 1]
    index = {i: (0 if i in minima else 1) for i in range(mu)}
    order = minima + saddles
    morse = (0,) * len(minima) + (1,) * len(saddles)
    return _typed_matrix(mu, edges, index), order, morse


def _d_seed(mu: int):
    # Standard D tree: chain 0..mu-3 with both tips mu-2, mu-1 on vertex mu-3.
    edges = [(i, i + 1) for i in range(mu - 3)] + [(mu - 3, mu - 2), (mu - 3, mu - 1)]
    tip_class = (mu - 3 + 1) % 2
    cls_a = [i for i in range(mu - 2) if i % 2 == tip_class] + [mu - 2, mu - 1]
    cls_b = [i for i in range(mu - 2) if i % 2 != tip_class]
    # saddles are the crossings of the divide: the larger class (k+1 of them)
    saddles, minima = cls_a, cls_b
    index = {i: (0 if i in minima else 1) for i in range(mu)}
    order = sorted(minima) + sorted(saddles)
    morse = (0,) * len(minima) + (1,) * len(saddles)
    return _typed_matrix(mu, edges, index), order, morse


_E6_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]
_E7_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]
_E8_EDGES = [(0, 1), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 2)]
# second E8 morsification: graph with triangles, vertex 2 is the maximum
_E8_ALT_EDGES = [
    (0, 1), (1, 3), (1, 2), (2, 5), (5, 6), (6, 7),
    (4, 5), (2, 3), (0, 2), (2, 4), (3, 5),
]


def _e_bipartition(edges: Sequence[tuple[int, int]], mu: int):
    deg = [0] * mu
    adj = [[] for _ in range(mu)]
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
        adj[i].append(j)
        adj[j].append(i)
    side = [None] * mu
    side[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if side[w] is None:
                side[w] = 1 - side[v]
                stack.append(w)
    branch = deg.index(3)
    minima = [i for i in range(mu) if side[i] == side[branch]]
    saddles = [i for i in range(mu) if side[i] != side[branch]]
    return minima, saddles


def seed_matrix(cls: SingularityClass, variant: Variant = Variant.Basic):
    """Intersection matrix, labels and Morse string of a seed morsification.

    The basis is ordered by increasing critical value: minima first, then
    saddles (then the maximum, for the alternative E8 morsification).  Edge
    signs follow the canonical-orientation convention of `_typed_matrix`.
    """
    if variant is Variant.AltE8:
        if cls.family is not Family.E8:
            raise ValueError("variant AltE8 is only valid for E8")
        index = {2: 2}
        for i in (1, 5, 7):
            index[i] = 0
        for i in (0, 3, 4, 6):
            index[i] = 1
        m = _typed_matrix(8, _E8_ALT_EDGES, index)
        if abs(det(m)) != 1 or not is_negative_definite(m):
            raise AssertionError("alt E8 seed matrix is not an E8 basis")
        # minima 1,5,7; negative saddles 0,3,4; positive saddle 6; maximum 2
        order = [1, 5, 7, 0, 3, 4, 6, 2]
        morse = (0, 0, 0, 1, 1, 1, 1, 2)
        return _permute(m, order), default_labels(8, 0), morse

    f = cls.family
    if f is Family.A:
        m, order, morse = _a_seed(cls.mu)
    elif f is Family.Dminus:
        m, order, morse = _d_seed(cls.mu)
    elif f in (Family.E6plus, Family.E7, Family.E8):
        edges = {Family.E6plus: _E6_EDGES, Family.E7: _E7_EDGES, Family.E8: _E8_EDGES}[f]
        mu = cls.mu
        minima, saddles = _e_bipartition(edges, mu)
        index = {i: (0 if i in minima else 1) for i in range(mu)}
        order = minima + saddles
        morse = (0,) * len(minima) + (1,) * len(saddles)
        m = _typed_matrix(mu, edges, index)
    elif f is Family.E6minus:
        # f -> -f turns the basic +E6 morsification into three saddles below
        # three maxima, with the same underlying tree
        minima, saddles = _e_bipartition(_E6_EDGES, 6)
        index = {i: (2 if i in minima else 1) for i in range(6)}
        order = saddles + minima
        morse = (1, 1, 1, 2, 2, 2)
        m = _typed_matrix(6, _E6_EDGES, index)
    else:
        raise ValueError(f"no seed morsification implemented for {f.value}")
    return _permute(m, order), default_labels(cls.mu, 0), morse
