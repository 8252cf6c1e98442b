"""Virtual morsifications and their elementary surgeries.

A virtual morsification packages the topological data of a real morsification
of a simple singularity: the intersection matrix of canonically oriented
vanishing cycles, the Morse indices of the real critical points ordered by
increasing critical value, and the number of negative critical values.
Conjugate pairs of imaginary critical points occupy adjacent basis slots
after the real cycles, in (lower half-plane, upper half-plane) order; pair
blocks are kept in the angular order of their paths at the base point.

The complex conjugation acts on the lattice as an involutive isometry
determined by the state itself: it swaps the two members of every conjugate
pair, and on the cycle of a real critical point it acts by the composition
of reflections in the cycles of the real values lying strictly between that
value and zero (mirroring the standard path across the real axis sweeps it
over exactly those values).  This operator drives the whole machine:

* a state is realizable only if the reconstructed conjugation is an
  involutive isometry (and linked real cycles are value-ordered by index);
* two neighboring real critical points can merge into a conjugate pair only
  if their cycle span is conjugation-invariant, and the pair they form is
  the conjugation-swapped root pair of that span;
* the reroutes ("far twists") picked up by paths running past a collision
  are whatever reflection bookkeeping keeps the conjugation consistent.

Canonical form quotients the orientation freedom the combinatorial state
cannot see: independent signs on real cycles and joint signs on conjugate
pairs.  The member intersection <L, U> of a pair survives this quotient and
carries the Morse flavor of the A2 collision the pair came from: it decides
the indices (q, q+1) the pair lands with.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from . import lattice
from .lattice import Family, Matrix, SingularityClass, Variant

Vec = tuple[int, ...]


class VirtualMorsification(NamedTuple):
    mu: int
    r: int
    c: int
    neg: int
    morse: tuple[int, ...]
    mat: Matrix

    @property
    def labels(self):
        return lattice.default_labels(self.r, self.c)

    def to_json_obj(self) -> dict:
        return {
            "mu": self.mu,
            "r": self.r,
            "c": self.c,
            "morse": list(self.morse),
            "neg": self.neg,
            "matrix": [list(row) for row in self.mat],
        }


class SurgeryMove(NamedTuple):
    kind: str            # s1swap | s1merge | s2split | s2miss | s3jump | s4braid
    args: tuple


def _validate_structure(v: VirtualMorsification) -> None:
    if v.r + 2 * v.c != v.mu:
        raise ValueError("r + 2c must equal mu")
    if not 0 <= v.neg <= v.r:
        raise ValueError("neg out of range")
    if len(v.morse) != v.r or any(q not in (0, 1, 2) for q in v.morse):
        raise ValueError("bad Morse string")
    lattice.check_matrix(v.mat)


# ---------------------------------------------------------------------------
# the conjugation operator

def _pairing(mat, x: list[int], m: int) -> int:
    return sum(x[i] * mat[i][m] for i in range(len(x)) if x[i])


def _reflect_vec(mat, x: list[int], m: int) -> list[int]:
    k = _pairing(mat, x, m)
    if k:
        x = list(x)
        x[m] += k
    return x


def _between(r: int, neg: int, j: int) -> list[int]:
    """Real value positions strictly between position j and zero, farthest
    from zero first."""
    if j >= neg:
        return list(range(j - 1, neg - 1, -1))
    return list(range(j + 1, neg))


def conjugation(v: VirtualMorsification) -> list[list[int]] | None:
    """Matrix of the complex conjugation in the state's basis, or None if the
    reconstructed operator fails to be an involutive isometry.

    On the cycle of a real point of index q the conjugation acts by the
    reflections in the cycles of the real values between it and zero, with
    the orientation sign (-1)^q flipped once more on the negative side."""
    mu, r, neg, mat = v.mu, v.r, v.neg, v.mat
    rows: list[list[int]] = []
    for j in range(mu):
        if j < r:
            x = [0] * mu
            x[j] = 1
            for m in _between(r, neg, j):
                x = _reflect_vec(mat, x, m)
            s = 1 if (v.morse[j] % 2 == 0) == (j >= neg) else -1
            if s < 0:
                x = [-t for t in x]
            rows.append(x)
        else:
            partner = j + 1 if (j - v.r) % 2 == 0 else j - 1
            x = [0] * mu
            x[partner] = 1
            rows.append(x)
    # involution
    for j in range(mu):
        acc = [0] * mu
        rj = rows[j]
        for i in range(mu):
            if rj[i]:
                ri = rows[i]
                for t in range(mu):
                    acc[t] += rj[i] * ri[t]
        if any(acc[t] != (1 if t == j else 0) for t in range(mu)):
            return None
    # isometry
    gram_rows = [
        [sum(rows[a][i] * mat[i][k] for i in range(mu)) for k in range(mu)]
        for a in range(mu)
    ]
    for a in range(mu):
        for b in range(a, mu):
            if sum(gram_rows[a][k] * rows[b][k] for k in range(mu)) != mat[a][b]:
                return None
    return rows


def realizable(v: VirtualMorsification) -> bool:
    """Necessary conditions for the data to come from a real morsification.

    Linked vanishing cycles of real critical points are gradient-connected,
    so their Morse indices strictly increase with the critical value; and the
    conjugation operator reconstructed from the state must be an involutive
    isometry.
    """
    morse, mat = v.morse, v.mat
    for i in range(v.r):
        qi = morse[i]
        row = mat[i]
        for j in range(i + 1, v.r):
            if row[j] != 0 and morse[j] <= qi:
                return False
    return conjugation(v) is not None


# ---------------------------------------------------------------------------
# canonical form

def _canonical_matrix(mat, r: int, c: int) -> Matrix:
    """Lex-max copy of mat over the sign quotient.

    Signs live on r + c groups (one per real cycle, one per pair with both
    members linked).  Scanning the upper triangle row-major, a nonzero entry
    whose two groups are not yet related can be normalized to +|v| by fixing
    the relative sign; the greedy union-find pass is exact for the
    lexicographic order because earlier entries dominate.
    """
    mu = r + 2 * c
    ng = r + c
    parent = list(range(ng))
    parity = [0] * ng
    out = [[0] * mu for _ in range(mu)]
    for i in range(mu):
        out[i][i] = -2

    def find(g):
        p = 0
        while parent[g] != g:
            p ^= parity[g]
            g = parent[g]
        return g, p

    for i in range(mu):
        gi = i if i < r else r + (i - r) // 2
        rowi = mat[i]
        for j in range(i + 1, mu):
            val = rowi[j]
            if val == 0:
                continue
            gj = j if j < r else r + (j - r) // 2
            ri, pi = find(gi)
            rj, pj = find(gj)
            if ri == rj:
                if pi != pj:
                    val = -val
            else:
                parent[rj] = ri
                parity[rj] = pi ^ pj ^ (0 if val > 0 else 1)
                val = abs(val)
            out[i][j] = out[j][i] = val
    return tuple(tuple(row) for row in out)


def canonicalize(v: VirtualMorsification) -> VirtualMorsification:
    """Canonical representative of v under the residual orientation freedom."""
    return VirtualMorsification(
        v.mu, v.r, v.c, v.neg, v.morse, _canonical_matrix(v.mat, v.r, v.c)
    )


# ---------------------------------------------------------------------------
# surgeries

def _same_side(v: VirtualMorsification, i: int) -> bool:
    return i + 1 < v.neg or i >= v.neg


def _root_vectors(mat, i: int, j: int) -> list[list[int]]:
    """The root classes (+- collapsed) of the rank-2 sublattice spanned by
    basis vectors i, j with |<i,j>| = 1: i, j, and their reflection."""
    mu = len(mat)
    a = [0] * mu
    a[i] = 1
    b = [0] * mu
    b[j] = 1
    c = [0] * mu
    c[i] = 1
    c[j] = mat[i][j]      # R_j(e_i) up to sign: e_i + <i,j> e_j
    return [a, b, c]


def _apply_sigma(sig: list[list[int]], x: list[int]) -> list[int]:
    mu = len(sig)
    out = [0] * mu
    for i in range(mu):
        if x[i]:
            row = sig[i]
            for t in range(mu):
                out[t] += x[i] * row[t]
    return out


def _merge_block(v: VirtualMorsification, i: int, sig) -> tuple[list[int], list[int]] | None:
    """Conjugation-swapped root pair (L, U) of the colliding span, or None
    if the span is not conjugation-invariant (merge inadmissible)."""
    roots = _root_vectors(v.mat, i, i + 1)

    def in_span(x):
        return all(x[t] == 0 for t in range(v.mu) if t not in (i, i + 1))

    images = []
    for rt in roots:
        im = _apply_sigma(sig, rt)
        if not in_span(im):
            return None
        images.append(im)

    def same(x, y):
        return x == y or all(a == -b for a, b in zip(x, y))

    swapped = [n for n in range(3) if not same(images[n], roots[n])]
    if len(swapped) != 2:
        return None
    a, b = swapped
    if not same(images[a], roots[b]):
        return None
    # single basis vector member is taken as the upper puncture class
    upper = a if sum(map(abs, roots[a])) <= sum(map(abs, roots[b])) else b
    lower = b if upper == a else a
    return roots[lower], roots[upper]


def _gram_from_vectors(mat, vecs: list[list[int]]) -> Matrix:
    mu = len(mat)
    inner = [
        [sum(vec[i] * mat[i][k] for i in range(mu) if vec[i]) for k in range(mu)]
        for vec in vecs
    ]
    return tuple(
        tuple(sum(inner[a][k] * vecs[b][k] for k in range(mu)) for b in range(len(vecs)))
        for a in range(len(vecs))
    )


def _unit(mu: int, i: int) -> list[int]:
    x = [0] * mu
    x[i] = 1
    return x


def _reflect_in(mat, x: list[int], vec: list[int]) -> list[int]:
    """R_vec(x) = x + <x, vec> vec for a norm -2 vector vec."""
    mu = len(mat)
    k = sum(
        x[i] * mat[i][j] * vec[j] for i in range(mu) if x[i] for j in range(mu) if vec[j]
    )
    if k:
        x = [x[t] + k * vec[t] for t in range(mu)]
    return x


# Far-twist candidates: reroutes of paths running past a collision compose
# reflections in the classes at the collision site.  The right composition is
# whichever keeps the conjugation operator consistent; it is selected per
# move and cached by the structural situation.
_TWISTS = {
    "id": (),
    "U": ("U",),
    "L": ("L",),
    "LU": ("U", "L"),
    "UL": ("L", "U"),
}


def _build_state(
    v: VirtualMorsification,
    vecs: list[list[int]],
    r: int,
    c: int,
    neg: int,
    morse: tuple[int, ...],
) -> VirtualMorsification:
    mat = _gram_from_vectors(v.mat, vecs)
    return VirtualMorsification(v.mu, r, c, neg, morse, mat)


def _merge_candidates(v: VirtualMorsification, i: int, sig):
    """All twist-variant results of merging real positions (i, i+1)."""
    block = _merge_block(v, i, sig)
    if block is None:
        return []
    low, up = block
    r, c, neg, mu = v.r, v.c, v.neg, v.mu
    positive = i >= neg
    far = list(range(i + 2, r)) if positive else list(range(i))
    morse = tuple(q for p, q in enumerate(v.morse) if p not in (i, i + 1))
    new_neg = neg if positive else neg - 2
    out = []
    for name, ops in _TWISTS.items():
        vecs = []
        for p in range(r):
            if p in (i, i + 1):
                continue
            x = _unit(mu, p)
            if p in far:
                for op in ops:
                    x = _reflect_in(v.mat, x, up if op == "U" else low)
            vecs.append(x)
        blocks = [[_unit(mu, r + 2 * b), _unit(mu, r + 2 * b + 1)] for b in range(c)]
        if positive:
            blocks.insert(0, [low, up])
        else:
            blocks.append([low, up])
        for blk in blocks:
            vecs.extend(blk)
        out.append((name, _build_state(v, vecs, r - 2, c + 1, new_neg, morse)))
    return out


def _split_candidates(v: VirtualMorsification, b: int, side: int, t: int):
    """All twist-variant results of landing pair block b at real slot t."""
    r, c, neg, mu = v.r, v.c, v.neg, v.mu
    lo_row, up_row = r + 2 * b, r + 2 * b + 1
    link = v.mat[lo_row][up_row]
    if abs(link) != 1:
        return []
    q = 0 if link == -1 else 1
    low = _unit(mu, lo_row)
    up = _unit(mu, up_row)
    other = _reflect_in(v.mat, low, up)       # recovers the consumed partner
    inner_vec, outer_vec = (other, up) if link == -1 else (up, other)
    positive = side > 0
    if positive:
        newborns = [inner_vec, outer_vec]      # inner lands nearer zero = lower
        far = list(range(t, r))
    else:
        newborns = [outer_vec, inner_vec]
        far = list(range(t))
    morse = v.morse[:t] + (q, q + 1) + v.morse[t:]
    new_neg = neg + 2 if side < 0 else neg
    out = []
    for name, ops in _TWISTS.items():
        vecs = []
        for p in range(r):
            x = _unit(mu, p)
            if p in far:
                for op in ops:
                    x = _reflect_in(v.mat, x, up if op == "U" else low)
            vecs.append(x)
        vecs[t:t] = [list(nb) for nb in newborns]
        for bb in range(c):
            if bb == b:
                continue
            vecs.append(_unit(mu, r + 2 * bb))
            vecs.append(_unit(mu, r + 2 * bb + 1))
        out.append((name, _build_state(v, vecs, r + 2, c - 1, new_neg, morse)))
    return out


def _miss_candidates(v: VirtualMorsification, b: int, side: int, g: int):
    r, c, neg, mu = v.r, v.c, v.neg, v.mu
    lo_row, up_row = r + 2 * b, r + 2 * b + 1
    low = _unit(mu, lo_row)
    up = _unit(mu, up_row)
    far = list(range(neg + g, r)) if side > 0 else list(range(neg - g))
    out = []
    for name, ops in _TWISTS.items():
        vecs = []
        for p in range(r):
            x = _unit(mu, p)
            if p in far:
                for op in ops:
                    x = _reflect_in(v.mat, x, up if op == "U" else low)
            vecs.append(x)
        for bb in range(c):
            if bb == b:
                vecs.append(up)      # members exchange: old upper becomes lower
                vecs.append(low)
            else:
                vecs.append(_unit(mu, r + 2 * bb))
                vecs.append(_unit(mu, r + 2 * bb + 1))
        out.append((name, _build_state(v, vecs, r, c, neg, v.morse)))
    return out


def _jump_candidates(v: VirtualMorsification, d: int):
    """The real value adjacent to zero jumps across it (neg += d).

    Paths to the other critical values may need rerouting around the jumping
    one; the candidates twist subsets of the remaining cycles by its
    reflection.
    """
    r, c, neg, mu = v.r, v.c, v.neg, v.mu
    j = neg - 1 if d < 0 else neg
    ej = _unit(mu, j)
    subsets = {
        "id": (),
        "rest": tuple(p for p in range(mu) if p != j),
        "reals": tuple(p for p in range(r) if p != j),
        "old-side": tuple(range(neg - 1) if d < 0 else range(neg + 1, r)),
        "new-side": tuple(range(neg, r) if d < 0 else range(neg)),
    }
    out = []
    for name, targets in subsets.items():
        vecs = []
        for p in range(mu):
            x = _unit(mu, p)
            if p in targets:
                x = _reflect_in(v.mat, x, ej)
            vecs.append(x)
        out.append((name, _build_state(v, vecs, r, c, neg + d, v.morse)))
    return out


def _braid_candidates(v: VirtualMorsification, b: int, d: int):
    r, c, mu = v.r, v.c, v.mu
    lo1, up1 = r + 2 * b, r + 2 * b + 1
    lo2, up2 = lo1 + 2, up1 + 2
    src, dst = ((lo1, up1), (lo2, up2)) if d == 0 else ((lo2, up2), (lo1, up1))
    # the moving block's members are rerouted around the fixed block
    variants = {
        "matched": ((src[0],), (src[1],)),
        "crossed": ((src[1],), (src[0],)),
        "both": ((src[0], src[1]), (src[1], src[0])),
    }
    out = []
    for name, (ops_lo, ops_up) in variants.items():
        lo_m = _unit(mu, dst[0])
        up_m = _unit(mu, dst[1])
        for m in ops_lo:
            lo_m = _reflect_in(v.mat, lo_m, _unit(mu, m))
        for m in ops_up:
            up_m = _reflect_in(v.mat, up_m, _unit(mu, m))
        vecs = [_unit(mu, p) for p in range(r)]
        for bb in range(c):
            if bb == b:
                pair = [lo_m, up_m] if d == 0 else [_unit(mu, src[0]), _unit(mu, src[1])]
            elif bb == b + 1:
                pair = [_unit(mu, src[0]), _unit(mu, src[1])] if d == 0 else [lo_m, up_m]
            else:
                pair = [_unit(mu, r + 2 * bb), _unit(mu, r + 2 * bb + 1)]
            vecs.extend(pair)
        out.append((name, _build_state(v, vecs, r, c, v.neg, v.morse)))
    return out


def _select(cands) -> list[VirtualMorsification]:
    """Keep the realizable variants, deduplicated after canonicalization."""
    seen = {}
    for _, st in cands:
        if realizable(st):
            cst = canonicalize(st)
            seen.setdefault(cst, None)
    return list(seen)


def successors(
    v: VirtualMorsification, allow_s3: bool = True
) -> Iterator[tuple[SurgeryMove, VirtualMorsification]]:
    """All admissible surgeries with their canonical successor states."""
    r, c, neg, mat = v.r, v.c, v.neg, v.mat
    sig = conjugation(v)
    if sig is None:
        raise ValueError("state is not realizable")
    for i in range(r - 1):
        if not _same_side(v, i):
            continue
        k = mat[i][i + 1]
        if k == 0:
            order = list(range(v.mu))
            order[i], order[i + 1] = order[i + 1], order[i]
            morse = list(v.morse)
            morse[i], morse[i + 1] = morse[i + 1], morse[i]
            st = VirtualMorsification(
                v.mu, r, c, neg, tuple(morse),
                tuple(tuple(mat[a][bb] for bb in order) for a in order),
            )
            if realizable(st):
                yield SurgeryMove("s1swap", (i,)), canonicalize(st)
        elif abs(k) == 1 and v.morse[i + 1] == v.morse[i] + 1:
            for n, st in enumerate(_select(_merge_candidates(v, i, sig))):
                yield SurgeryMove("s1merge", (i, n)), st
    for side, b in ((+1, 0), (-1, c - 1)):
        if c == 0:
            break
        if side > 0:
            tees = range(neg, r + 1)
            gaps = range(r - neg + 1)
        else:
            tees = range(0, neg + 1)
            gaps = range(neg + 1)
        for t in tees:
            for n, st in enumerate(_select(_split_candidates(v, b, side, t))):
                yield SurgeryMove("s2split", (b, side, t, n)), st
        for g in gaps:
            for n, st in enumerate(_select(_miss_candidates(v, b, side, g))):
                yield SurgeryMove("s2miss", (b, side, g, n)), st
    for b in range(c - 1):
        for d in (0, 1):
            for n, st in enumerate(_select(_braid_candidates(v, b, d))):
                yield SurgeryMove("s4braid", (b, d, n)), st
    if allow_s3:
        for d in (-1, +1):
            if 0 <= neg + d <= r:
                for n, st in enumerate(_select(_jump_candidates(v, d))):
                    yield SurgeryMove("s3jump", (d, n)), st


def available_moves(v: VirtualMorsification, allow_s3: bool = True) -> list[SurgeryMove]:
    """All admissible elementary surgeries of v (s3 jumps only if allow_s3)."""
    return [m for m, _ in successors(v, allow_s3)]


def apply(v: VirtualMorsification, move: SurgeryMove) -> VirtualMorsification:
    """Apply one admissible surgery and return the canonical successor."""
    for m, st in successors(v, allow_s3=True):
        if m == move:
            return st
    raise ValueError(f"move {move} is not admissible for this state")


# ---------------------------------------------------------------------------
# invariants and seeds

def second_invariant(v: VirtualMorsification) -> int:
    """Signed count of negative-value critical points by Morse parity.

    Equals the Euler-characteristic drop between the lower level set and its
    far-positive counterpart; constant on every s3-free surgery component.
    """
    return sum(1 if q % 2 == 0 else -1 for q in v.morse[: v.neg])


def seed_state(
    cls: SingularityClass, variant: Variant = Variant.Basic
) -> VirtualMorsification:
    """Canonical seed state for the basic (or alternative E8) morsification."""
    mat, _, morse = lattice.seed_matrix(cls, variant)
    if variant is Variant.AltE8:
        neg = 6
    elif cls.family is Family.E6minus:
        neg = 3
    else:
        neg = morse.count(0)
    v = VirtualMorsification(cls.mu, cls.mu, 0, neg, morse, mat)
    _validate_structure(v)
    if not realizable(v):
        raise AssertionError("seed state fails realizability")
    return canonicalize(v)
