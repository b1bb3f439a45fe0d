"""Quadratic and bilinear forms over the two-element field.

Spaces come from mod-2 reductions of integral lattices: an even lattice
yields a quadratic refinement q(x) = (x,x)/2 of the mod-2 bilinear form;
an odd lattice yields a bilinear form whose alternating part (vectors of
even norm) carries the refinement.  Isometry is decided constructively by
reduction to a normal form: hyperbolic pairs, at most one anisotropic
pair, and a radical with normalized q-values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .lattice import IntegerLattice

F2Mat = tuple[tuple[int, ...], ...]


def _f2mat(rows) -> F2Mat:
    return tuple(tuple(int(x) % 2 for x in row) for row in rows)


def f2_mat_mul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> F2Mat:
    bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) % 2 for col in bt)
                 for row in A)


def f2_mat_inverse(A: Sequence[Sequence[int]]) -> F2Mat:
    n = len(A)
    M = [list(row) + [1 if i == j else 0 for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if M[r][c] % 2:
                piv = r
                break
        if piv is None:
            raise ValueError("singular matrix over F2")
        M[c], M[piv] = M[piv], M[c]
        for r in range(n):
            if r != c and M[r][c] % 2:
                M[r] = [(x + y) % 2 for x, y in zip(M[r], M[c])]
    return tuple(tuple(row[n:]) for row in M)


def f2_rank(rows: Sequence[Sequence[int]]) -> int:
    M = [list(r) for r in rows]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = None
        for r in range(rank, len(M)):
            if M[r][c] % 2:
                piv = r
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] % 2:
                M[r] = [(x + y) % 2 for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


class F2QuadraticSpace:
    """F2 vector space with symmetric bilinear form and optional refinement.

    ``q`` holds the values on the basis; the quadratic form on arbitrary
    vectors is q(sum x_i e_i) = sum x_i q_i + sum_{i<j} x_i x_j b_ij.
    """

    def __init__(self, bilinear: Sequence[Sequence[int]],
                 q: Optional[Sequence[int]] = None,
                 name: Optional[str] = None):
        self.b = _f2mat(bilinear)
        self.dim = len(self.b)
        for i in range(self.dim):
            for j in range(self.dim):
                if self.b[i][j] != self.b[j][i]:
                    raise ValueError("bilinear form not symmetric")
        self.q = tuple(int(x) % 2 for x in q) if q is not None else None
        if self.q is not None:
            for i in range(self.dim):
                if self.b[i][i] % 2:
                    raise ValueError("refined form must be alternating")
        self.name = name

    def bilin(self, v: Sequence[int], w: Sequence[int]) -> int:
        return sum(v[i] * self.b[i][j] * w[j]
                   for i in range(self.dim) for j in range(self.dim)) % 2

    def quad(self, v: Sequence[int]) -> int:
        if self.q is None:
            raise ValueError("no quadratic refinement on this space")
        total = sum(v[i] * self.q[i] for i in range(self.dim))
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                total += v[i] * v[j] * self.b[i][j]
        return total % 2

    def vectors(self):
        return itertools.product((0, 1), repeat=self.dim)

    def radical(self) -> list[tuple[int, ...]]:
        out = []
        for v in self.vectors():
            if any(v) and all(self.bilin(v, e) == 0 for e in _unit_vectors(self.dim)):
                out.append(v)
        # reduce to a basis
        basis = []
        seen_rank = 0
        for v in out:
            if f2_rank(basis + [list(v)]) > seen_rank:
                basis.append(list(v))
                seen_rank += 1
        return [tuple(v) for v in basis]

    def __repr__(self) -> str:
        tag = self.name or f"dim {self.dim}"
        return f"F2QuadraticSpace({tag}, q={'yes' if self.q else 'no'})"


def _unit_vectors(n: int):
    for i in range(n):
        yield tuple(1 if j == i else 0 for j in range(n))


# ---------------------------------------------------------------------------
# mod-2 reduction of lattices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mod2Reduction:
    space: F2QuadraticSpace               # full reduction
    alternating: Optional[F2QuadraticSpace]   # with refinement (odd case)
    alternating_basis: Optional[tuple]    # rows in the lattice basis (0/1)


def mod2_reduction(L: IntegerLattice) -> Mod2Reduction:
    """L/2L with its quadratic refinement (even L) or alternating part (odd L)."""
    if not L.is_integral():
        raise ValueError("mod-2 reduction needs an integral lattice")
    n = L.rank
    b = [[int(L.gram[i][j]) % 2 for j in range(n)] for i in range(n)]
    if L.is_even():
        q = [int(L.gram[i][i] / 2) % 2 for i in range(n)]
        bil = [[b[i][j] if i != j else 0 for j in range(n)] for i in range(n)]
        space = F2QuadraticSpace(bil, q, name=(L.name and f"{L.name}/2"))
        return Mod2Reduction(space, space, tuple(_unit_vectors(n)))
    # odd case: full space carries only the bilinear form; its alternating
    # part {x : (x,x) even} carries q(x) = (x,x)/2
    space = F2QuadraticSpace(b, None, name=(L.name and f"{L.name}/2"))
    diag = [int(L.gram[i][i]) % 2 for i in range(n)]
    # solve diag . x = 0 over F2 for the alternating subspace
    alt_basis = []
    pivot = next((i for i in range(n) if diag[i]), None)
    for i in range(n):
        if i == pivot:
            continue
        v = [0] * n
        v[i] = 1
        if diag[i] and pivot is not None:
            v[pivot] = 1
        alt_basis.append(tuple(v))
    sub_b = []
    sub_q = []
    for v in alt_basis:
        row = []
        lift_v = v
        for w in alt_basis:
            row.append(int(sum(Fraction(lift_v[i]) * L.gram[i][j] * w[j]
                               for i in range(n) for j in range(n))) % 2)
        sub_b.append(row)
        norm = sum(Fraction(v[i]) * L.gram[i][j] * v[j]
                   for i in range(n) for j in range(n))
        assert norm % 2 == 0
        sub_q.append(int(norm / 2) % 2)
    bil = [[sub_b[i][j] if i != j else 0 for j in range(len(alt_basis))]
           for i in range(len(alt_basis))]
    alt = F2QuadraticSpace(bil, sub_q,
                           name=(L.name and f"{L.name}/2 alt"))
    return Mod2Reduction(space, alt, tuple(alt_basis))

# ---------------------------------------------------------------------------
# normal form and isometry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalForm:
    hyperbolic_pairs: int
    anisotropic_pair: int       # 0 or 1
    radical_ones: int           # 0 or 1 (radical basis vectors with q = 1)
    radical_zeros: int
    basis: tuple                # rows: new basis in old coordinates

    @property
    def invariants(self) -> tuple[int, int, int, int]:
        return (self.hyperbolic_pairs, self.anisotropic_pair,
                self.radical_ones, self.radical_zeros)


def normal_form(V: F2QuadraticSpace) -> NormalForm:
    """Greedy reduction of a refined F2 space to its canonical block form.

    Splits off hyperbolic pairs while an isotropic non-radical vector
    exists, then at most one anisotropic pair, then normalizes q on the
    radical.  The resulting block counts classify the space up to isometry.
    """
    if V.q is None:
        raise ValueError("normal form needs a quadratic refinement")
    span = [list(u) for u in _unit_vectors(V.dim)]
    pairs = []
    aniso = []

    def members(basis):
        vecs = []
        for coeffs in itertools.product((0, 1), repeat=len(basis)):
            if not any(coeffs):
                continue
            v = [0] * V.dim
            for c, bv in zip(coeffs, basis):
                if c:
                    v = [(a + b) % 2 for a, b in zip(v, bv)]
            vecs.append(tuple(v))
        return vecs

    def complement(basis, v, w):
        out = []
        for x in basis:
            a, b = V.bilin(x, v), V.bilin(x, w)
            y = list(x)
            if a:
                y = [(p + r) % 2 for p, r in zip(y, w)]
            if b:
                y = [(p + r) % 2 for p, r in zip(y, v)]
            out.append(y)
        # prune to independent rows
        pruned = []
        for y in out:
            if f2_rank(pruned + [y]) > len(pruned):
                pruned.append(y)
        return pruned

    while True:
        found = None
        vecs = members(span)
        for v in vecs:
            if V.quad(v):
                continue
            for w in vecs:
                if V.bilin(v, w):
                    found = (v, w)
                    break
            if found:
                break
        if not found:
            break
        v, w = found
        if V.quad(w):
            w = tuple((a + b) % 2 for a, b in zip(w, v))
        assert V.quad(v) == 0 and V.quad(w) == 0 and V.bilin(v, w) == 1
        pairs.append((v, w))
        span = complement(span, v, w)

    # anisotropic pair: all remaining non-radical vectors have q = 1
    vecs = members(span)
    pair = None
    for v in vecs:
        for w in vecs:
            if V.bilin(v, w):
                pair = (v, w)
                break
        if pair:
            break
    if pair:
        v, w = pair
        assert V.quad(v) == 1 and V.quad(w) == 1
        aniso.append((v, w))
        span = complement(span, v, w)
        if members(span) and any(V.bilin(x, y) for x in members(span)
                                 for y in members(span)):
            raise RuntimeError("two anisotropic pairs survived reduction")

    # radical
    rad = [list(x) for x in span]
    ones = [x for x in rad if V.quad(tuple(x))]
    zeros = [x for x in rad if not V.quad(tuple(x))]
    norm_rad = []
    if ones:
        r1 = ones[0]
        norm_rad.append(r1)
        for x in ones[1:]:
            norm_rad.append([(a + b) % 2 for a, b in zip(x, r1)])
    norm_rad.extend(zeros)
    basis_rows = []
    for v, w in pairs:
        basis_rows.append(list(v))
        basis_rows.append(list(w))
    for v, w in aniso:
        basis_rows.append(list(v))
        basis_rows.append(list(w))
    basis_rows.extend(norm_rad)
    if f2_rank(basis_rows) != V.dim:
        raise RuntimeError("normal form basis is not a basis")
    return NormalForm(len(pairs), len(aniso), 1 if ones else 0,
                      len(norm_rad) - (1 if ones else 0),
                      tuple(tuple(r) for r in basis_rows))


def arf_invariant(V: F2QuadraticSpace) -> int:
    """Arf invariant of a nondegenerate refined space."""
    nf = normal_form(V)
    if nf.radical_ones or nf.radical_zeros:
        raise ValueError("Arf invariant needs a nondegenerate form")
    return nf.anisotropic_pair


def f2_isometry(V: F2QuadraticSpace, W: F2QuadraticSpace
                ) -> Optional[F2Mat]:
    """A q-isometry V -> W as a matrix (rows: images of V's basis), if any.

    Both spaces are reduced to the normal form; when the block data agree
    the composite of the two reductions is returned and verified.
    """
    if V.q is None or W.q is None:
        raise ValueError("isometry decision needs refinements on both sides")
    if V.dim != W.dim:
        return None
    nfv, nfw = normal_form(V), normal_form(W)
    if nfv.invariants != nfw.invariants:
        return None
    # map: old_V -> normal basis index -> old_W
    TV = nfv.basis   # rows: normal basis in V coordinates
    TW = nfw.basis
    T = f2_mat_mul(f2_mat_inverse(TV), TW)
    for i in range(V.dim):
        ei = tuple(1 if k == i else 0 for k in range(V.dim))
        if W.quad(_apply(T, ei)) != V.quad(ei):
            raise RuntimeError("normal-form isometry fails q check")
        for j in range(V.dim):
            ej = tuple(1 if k == j else 0 for k in range(V.dim))
            if W.bilin(_apply(T, ei), _apply(T, ej)) != V.bilin(ei, ej):
                raise RuntimeError("normal-form isometry fails b check")
    return T


def _apply(T: F2Mat, v: Sequence[int]) -> tuple[int, ...]:
    n = len(T[0])
    out = [0] * n
    for i, c in enumerate(v):
        if c:
            out = [(a + b) % 2 for a, b in zip(out, T[i])]
    return tuple(out)


def equivariant_isometry(V: F2QuadraticSpace, W: F2QuadraticSpace,
                         acts_v: Sequence[Sequence[Sequence[int]]],
                         acts_w: Sequence[Sequence[Sequence[int]]]
                         ) -> Optional[F2Mat]:
    """A q-isometry intertwining matched generator actions, if one exists.

    Solves the intertwining equations A_i T = T B_i over F2, then scans the
    solution space for an invertible q-preserving element.
    """
    n = V.dim
    if W.dim != n:
        return None
    # unknowns T[r][c], equations from A T + T B = 0 over F2
    rows = []
    for A, B in zip(acts_v, acts_w):
        A = _f2mat(A)
        B = _f2mat(B)
        for i in range(n):
            for j in range(n):
                row = [0] * (n * n)
                for k in range(n):
                    row[k * n + j] = (row[k * n + j] + A[i][k]) % 2
                    row[i * n + k] = (row[i * n + k] + B[k][j]) % 2
                rows.append(row)
    basis = _f2_nullspace(rows, n * n)
    if len(basis) > 24:
        raise RuntimeError(f"intertwiner space too large to scan: 2^{len(basis)}")
    units = list(_unit_vectors(n))
    for coeffs in itertools.product((0, 1), repeat=len(basis)):
        if not any(coeffs):
            continue
        flat = [0] * (n * n)
        for c, b in zip(coeffs, basis):
            if c:
                flat = [(x + y) % 2 for x, y in zip(flat, b)]
        T = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
        if f2_rank([list(r) for r in T]) != n:
            continue
        if all(W.quad(_apply(T, e)) == V.quad(e) for e in units) and \
           all(W.bilin(_apply(T, units[i]), _apply(T, units[j]))
               == V.bilin(units[i], units[j])
               for i in range(n) for j in range(i + 1, n)):
            return T
    return None


def _f2_nullspace(rows: list[list[int]], ncols: int) -> list[list[int]]:
    M = [r[:] for r in rows]
    pivots = {}
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(M)):
            if M[r][c] % 2:
                piv = r
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] % 2:
                M[r] = [(x + y) % 2 for x, y in zip(M[r], M[rank])]
        pivots[c] = rank
        rank += 1
    out = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for pc, pr in pivots.items():
            v[pc] = M[pr][fc] % 2
        out.append(v)
    return out
