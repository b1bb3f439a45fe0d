"""Coinvariant lattices of the dodecad actions and their gluings.

The rank-12 lattice N with basis e_1..e_11, (e_i^2) = -1, extended by the
half-sum of all twelve coordinate vectors, carries the permutation action
of each embedded stabilizer group on its dodecad.  The orthogonal
complements of the invariant parts on the two dodecads are glued along an
equivariant isometry of 9-dimensional quadratic F2 spaces into an even
negative definite lattice with no norm -2 vectors and trivial induced
action on its discriminant group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import catalog, f2form, lattice, perm
from .lattice import (IntegerLattice, Sublattice, direct_sum, frac_mat,
                      glue, invariant_coinvariant, mat_inverse, mat_mul,
                      mat_transpose, named_lattice, primitive_hull, rescale,
                      root_type, short_vectors, solve_left, vec_mat)


def half_sum_coordinate_lattice() -> IntegerLattice:
    """Rank-12 lattice: e_1..e_11 of norm -1 plus s = (e_1+...+e_12)/2."""
    n = 12
    G = [[Fraction(0)] * n for _ in range(n)]
    for i in range(11):
        G[i][i] = Fraction(-1)
        G[i][11] = G[11][i] = Fraction(-1, 2)
    G[11][11] = Fraction(-3)
    return IntegerLattice(G, name="Nhalf")


def _perm_matrix_on_half_sum(images: Sequence[int]) -> list[list[Fraction]]:
    """Matrix of the permutation of the 12 coordinates on the chosen basis.

    images: 1-based images of points 1..12.  Basis: e_1..e_11, s; the
    twelfth coordinate vector is e_12 = 2s - (e_1 + ... + e_11).
    """
    rows = []
    e12 = [Fraction(-1)] * 11 + [Fraction(2)]

    def coord_vector(j: int) -> list[Fraction]:
        if j <= 11:
            return [Fraction(1 if t == j - 1 else 0) for t in range(11)] \
                + [Fraction(0)]
        return e12[:]

    for i in range(1, 12):
        rows.append(coord_vector(images[i - 1]))
    # s maps to (sum of all images)/2 = s
    rows.append([Fraction(0)] * 11 + [Fraction(1)])
    return rows


@dataclass(frozen=True)
class DodecadPair:
    """The permutation action of one stabilizer group on both dodecads."""

    label: str
    group: perm.PermGroup
    own_points: tuple[int, ...]     # the dodecad containing the star
    other_points: tuple[int, ...]


def dodecad_actions() -> list[DodecadPair]:
    emb = catalog.mathieu_embeddings()
    return [
        DodecadPair("S5", emb.g6, emb.dodecad_hex, emb.dodecad_pp),
        DodecadPair("N72", emb.g9, emb.dodecad_pp, emb.dodecad_hex),
        DodecadPair("A6", emb.g10, emb.dodecad_pp, emb.dodecad_hex),
    ]


def _restricted_images(g: perm.Permutation, points: Sequence[int]) -> list[int]:
    index = {p: i + 1 for i, p in enumerate(points)}
    return [index[g(p)] for p in points]


@dataclass(frozen=True)
class CoinvariantData:
    label: str
    plus: Sublattice          # coinvariant on the star dodecad (rank 9)
    minus: Sublattice         # coinvariant on the complementary dodecad (rank 10)
    plus_actions: tuple       # generator matrices on the plus basis
    minus_actions: tuple


@lru_cache(maxsize=None)
def coinvariant_lattices(label: str) -> CoinvariantData:
    """L+ and L- for one of the three stabilizer groups (S5, N72, A6)."""
    pair = next(p for p in dodecad_actions() if p.label == label)
    N = half_sum_coordinate_lattice()
    out = []
    actions_on = []
    for pts in (pair.own_points, pair.other_points):
        mats = [frac_mat(_perm_matrix_on_half_sum(_restricted_images(g, pts)))
                for g in pair.group.generators]
        inv, coinv = invariant_coinvariant(N, mats)
        sub_mats = []
        for A in mats:
            rows = []
            for b in coinv.basis:
                img = vec_mat(b, A)
                sol = solve_left(img, coinv.basis)
                assert sol is not None and all(x.denominator == 1 for x in sol)
                rows.append(sol)
            sub_mats.append(frac_mat(rows))
        out.append(coinv)
        actions_on.append(tuple(sub_mats))
    return CoinvariantData(label, out[0], out[1], actions_on[0], actions_on[1])


# ---------------------------------------------------------------------------
# glueing L+(2) and L-(2) along the equivariant 9-dimensional isometry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GluedCoinvariant:
    label: str
    plus: IntegerLattice          # L+ (unscaled)
    minus: IntegerLattice         # L- (unscaled)
    isometry: tuple               # F2 matrix l+ -> l-^alt
    glued: lattice.GluedLattice   # N_G = L+(2) + L-(2) + glue
    actions: tuple                # generator matrices on the glued basis


def _f2_action_on_reduction(mats, dim: int) -> list[list[list[int]]]:
    return [[[int(Fraction(A[i][j])) % 2 for j in range(dim)]
             for i in range(dim)] for A in mats]


def _f2_action_on_alt(mats, alt_basis, n: int) -> list[list[list[int]]]:
    """Generator actions restricted to the alternating part, over F2."""
    out = []
    k = len(alt_basis)
    for A in mats:
        rows = []
        for v in alt_basis:
            img = [int(sum(Fraction(v[i]) * Fraction(A[i][j])
                           for i in range(n))) % 2 for j in range(n)]
            # solve img = sum c_t alt_basis[t] over F2
            aug = [[alt_basis[t][j] % 2 for t in range(k)] + [img[j]]
                   for j in range(n)]
            sol = _f2_solve(aug, k)
            assert sol is not None, "alternating part not stable"
            rows.append(sol)
        out.append(rows)
    return out


def _f2_solve(aug: list[list[int]], k: int) -> Optional[list[int]]:
    M = [row[:] for row in aug]
    pivots = {}
    rank = 0
    for c in range(k):
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
    for r in range(rank, len(M)):
        if M[r][k] % 2:
            return None
    sol = [0] * k
    for c, r in pivots.items():
        sol[c] = M[r][k] % 2
    return sol


@lru_cache(maxsize=None)
def glued_coinvariant(label: str) -> GluedCoinvariant:
    data = coinvariant_lattices(label)
    Lp, Lm = data.plus.lattice, data.minus.lattice
    red_p = f2form.mod2_reduction(Lp)
    red_m = f2form.mod2_reduction(Lm)
    acts_p = _f2_action_on_reduction(data.plus_actions, Lp.rank)
    acts_alt = _f2_action_on_alt(data.minus_actions, red_m.alternating_basis,
                                 Lm.rank)
    T = f2form.equivariant_isometry(red_p.alternating, red_m.alternating,
                                    acts_p, acts_alt)
    if T is None:
        raise RuntimeError(f"no equivariant isometry for {label}")
    # glue vectors: (x + phi(x))/2 for x running over the l+ basis
    glue_vectors = []
    np_, nm = Lp.rank, Lm.rank
    for i in range(np_):
        img = T[i]
        lift_m = [Fraction(sum(img[t] * red_m.alternating_basis[t][j]
                               for t in range(len(img))) % 2)
                  for j in range(nm)]
        vec = [Fraction(1 if j == i else 0, 2) for j in range(np_)] \
            + [x / 2 for x in lift_m]
        glue_vectors.append(vec)
    glued = glue([rescale(Lp, 2), rescale(Lm, 2)], glue_vectors,
                 require_even=True)
    # generator actions on the glued lattice
    B = glued.basis
    Binv = mat_inverse(B)
    acts = []
    for Ap, Am in zip(data.plus_actions, data.minus_actions):
        block = [[Fraction(0)] * (np_ + nm) for _ in range(np_ + nm)]
        for i in range(np_):
            for j in range(np_):
                block[i][j] = Fraction(Ap[i][j])
        for i in range(nm):
            for j in range(nm):
                block[np_ + i][np_ + j] = Fraction(Am[i][j])
        M = mat_mul(mat_mul(B, frac_mat(block)), Binv)
        for row in M:
            for x in row:
                assert x.denominator == 1, "group does not preserve the glue"
        acts.append(M)
    return GluedCoinvariant(label, Lp, Lm, T, glued, tuple(acts))


def leech_type_checks(label: str) -> dict:
    """Evenness, absence of roots, and trivial discriminant action of N_G."""
    gc = glued_coinvariant(label)
    NG = gc.glued.result
    even = NG.is_even()
    roots = short_vectors(NG, -2)
    disc = lattice.discriminant_group(NG)
    trivial = True
    for M in gc.actions:
        for g in disc.generators:
            img = vec_mat(g, M)
            diff = [a - b for a, b in zip(img, g)]
            # trivial on Disc iff the difference is a lattice vector
            if any(x.denominator != 1 for x in diff):
                trivial = False
    return {
        "label": label,
        "rank": NG.rank,
        "det": NG.det(),
        "even": even,
        "norm_minus2_count": len(roots),
        "disc_order": disc.order(),
        "disc_action_trivial": trivial,
        "glue_index": gc.glued.index,
    }


# ---------------------------------------------------------------------------
# the anti-invariant lattice and the odd unimodular embeddings
# ---------------------------------------------------------------------------

def anti_invariant_lattice() -> lattice.GluedLattice:
    """I(2,10) scaled by 2 extended by the norm -8 half-vector (even overlattice)."""
    I = rescale(named_lattice("I2,10"), 2)
    w = [Fraction(1, 2), Fraction(1, 2)] + [Fraction(-1, 2)] * 10
    return glue([I], [w], require_even=True)


def anti_invariant_model() -> IntegerLattice:
    return direct_sum(named_lattice("U"), named_lattice("U(2)"),
                      named_lattice("E8(2)"))


def embed_minus_n6() -> dict:
    """The index-2 overlattice of A1+A9 inside I(2,10), with mod-2 witness."""
    I = named_lattice("I2,10")
    gens = []
    for i in range(9):
        row = [0, 0] + [0] * 10
        row[2 + i] = 1
        row[2 + i + 1] = -1
        gens.append(row)
    v = [2, 2] + [-1] * 10
    gens.append(v)
    hull, index = primitive_hull(I, gens)
    rt = root_type(hull.lattice)
    half = [Fraction(1, 2), Fraction(1, 2)] + [Fraction(-1, 2)] * 10
    member = solve_left(half, hull.basis)
    in_mod2_span = _mod2_membership(half, hull.basis)
    return {
        "index": index,
        "rank": hull.lattice.rank,
        "det": hull.lattice.det(),
        "odd": hull.lattice.is_integral() and not hull.lattice.is_even(),
        "root_type": rt.label,
        "half_vector_outside_mod2_image": not in_mod2_span,
        "hull": hull,
    }


def embed_minus_n910() -> dict:
    """The complement of the two degree-4 vectors in I(2,10): A5+A5 overlattice."""
    I = named_lattice("I2,10")
    v1 = [2, 2, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0]
    v2 = [2, -2, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1]
    comp = lattice.orthogonal_complement(I, [v1, v2])
    rt = root_type(comp.lattice)
    listed = [
        [0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0],
        [1, 1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1],
        [1, -1, 0, 0, 0, 0, 0, -1, -1, -1, -1, 0],
    ]
    in_comp = all(solve_left(frac_mat([r])[0], comp.basis) is not None
                  for r in listed)
    roots_ok = all(I.norm(r) == -2 for r in listed)
    extra = [1, 0, 0, -1, 0, -1, 0, -1, 0, -1, 0, 0]
    extra_in_comp = solve_left(frac_mat([extra])[0], comp.basis) is not None
    root_rows = [list(map(int, r)) for r in listed]
    sol = solve_left(frac_mat([extra])[0], frac_mat(root_rows))
    extra_in_root_span = sol is not None and all(x.denominator == 1 for x in sol)
    # index of the root span in the complement
    coeffs = []
    for r in listed:
        s = solve_left(frac_mat([r])[0], comp.basis)
        coeffs.append([int(x) for x in s])
    D, _, _ = lattice.smith_normal_form(coeffs)
    index = 1
    for i in range(len(D)):
        index *= abs(D[i][i])
    return {
        "rank": comp.lattice.rank,
        "root_type": rt.label,
        "listed_generators_in_complement": in_comp and roots_ok,
        "extra_vector_in_complement": extra_in_comp,
        "extra_vector_in_root_span": extra_in_root_span,
        "index_of_root_span": index,
        "complement": comp,
    }


def _mod2_membership(vec, basis) -> bool:
    """Is 2*vec congruent mod 2 to a basis combination? (F2 row-span test)"""
    rows = []
    for b in basis:
        assert all(Fraction(x).denominator == 1 for x in b)
        rows.append([int(x) % 2 for x in b])
    target = [int(Fraction(x) * 2) % 2 for x in vec]
    aug = [[rows[t][j] for t in range(len(rows))] + [target[j]]
           for j in range(len(target))]
    return _f2_solve(aug, len(rows)) is not None
