"""Exact integer-lattice engine.

Lattices are free Z-modules presented by a basis with a rational Gram
matrix (integral for honest lattices, rational for duals).  All arithmetic
is exact: fractions, integer Hermite/Smith normal forms, exact LLL
reduction and Fincke-Pohst enumeration.  No floating point anywhere.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[tuple[Fraction, ...], ...]


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

def frac_vec(v: Sequence) -> Vec:
    return tuple(Fraction(x) for x in v)


def frac_mat(rows: Sequence[Sequence]) -> Mat:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def mat_identity(n: int) -> Mat:
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n))
                 for i in range(n))


def mat_mul(A: Mat, B: Mat) -> Mat:
    bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                 for row in A)


def mat_transpose(A: Mat) -> Mat:
    return tuple(zip(*A))


def vec_mat(v: Sequence, A: Mat) -> Vec:
    return tuple(sum(Fraction(v[i]) * A[i][j] for i in range(len(v)))
                 for j in range(len(A[0])))


def dot(v: Sequence, w: Sequence) -> Fraction:
    return sum(Fraction(a) * Fraction(b) for a, b in zip(v, w))


def mat_det(A: Sequence[Sequence]) -> Fraction:
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if M[r][c] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        inv = M[c][c]
        for r in range(c + 1, n):
            if M[r][c] != 0:
                f = M[r][c] / inv
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det


def mat_rank(A: Sequence[Sequence]) -> int:
    M = [[Fraction(x) for x in row] for row in A]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = None
        for r in range(rank, len(M)):
            if M[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def mat_inverse(A: Sequence[Sequence]) -> Mat:
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0)
                                       for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if M[r][c] != 0:
                piv = r
                break
        if piv is None:
            raise ValueError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        inv = M[c][c]
        M[c] = [x / inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return tuple(tuple(row[n:]) for row in M)


def solve_left(v: Sequence, B: Sequence[Sequence]) -> Optional[Vec]:
    """x with x . B = v, for B with independent rows; None if unsolvable."""
    rows = [list(map(Fraction, row)) + [Fraction(0)] for row in B]
    n = len(rows[0]) - 1
    aug = [[rows[i][j] for i in range(len(B))] + [Fraction(v[j])]
           for j in range(n)]  # columns: B^T x^T = v^T
    k = len(B)
    r = 0
    pivots = []
    for c in range(k):
        piv = None
        for i in range(r, n):
            if aug[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][c]
        aug[r] = [x / inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = aug[i][k]
    # verify (also detects inconsistency)
    for j in range(n):
        if sum(sol[i] * Fraction(B[i][j]) for i in range(k)) != Fraction(v[j]):
            return None
    return tuple(sol)


def signature_of(gram: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia by exact congruence diagonalization."""
    n = len(gram)
    M = [[Fraction(x) for x in row] for row in gram]
    pos = neg = zero = 0
    for i in range(n):
        if M[i][i] == 0:
            piv = None
            for j in range(i + 1, n):
                if M[j][j] != 0:
                    piv = j
                    break
            if piv is not None:
                M[i], M[piv] = M[piv], M[i]
                for row in M:
                    row[i], row[piv] = row[piv], row[i]
            else:
                off = None
                for j in range(i + 1, n):
                    if M[i][j] != 0:
                        off = j
                        break
                if off is None:
                    zero += 1
                    continue
                for k in range(n):
                    M[i][k] += M[off][k]
                for k in range(n):
                    M[k][i] += M[k][off]
        d = M[i][i]
        if d == 0:
            zero += 1
            continue
        if d > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            if M[j][i] != 0:
                f = M[j][i] / d
                for k in range(n):
                    M[j][k] -= f * M[i][k]
                for k in range(n):
                    M[k][j] -= f * M[k][i]
    return pos, neg, zero


def _clear_denominators(rows: Sequence[Sequence]) -> tuple[list[list[int]], int]:
    den = 1
    for row in rows:
        for x in row:
            f = Fraction(x)
            den = den * f.denominator // math.gcd(den, f.denominator)
    out = [[int(Fraction(x) * den) for x in row] for row in rows]
    return out, den


def row_hnf(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form basis of the integer row space."""
    M = [list(map(int, r)) for r in rows if any(r)]
    if not M:
        return []
    cols = len(M[0])
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(M)):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, len(M)):
            while M[i][c]:
                q = M[r][c] // M[i][c]
                M[r] = [a - q * b for a, b in zip(M[r], M[i])]
                M[r], M[i] = M[i], M[r]
        if M[r][c] < 0:
            M[r] = [-a for a in M[r]]
        for i in range(r):
            q = M[i][c] // M[r][c]
            if q:
                M[i] = [a - q * b for a, b in zip(M[i], M[r])]
        r += 1
    return M[:r]


def integer_kernel(rows: Sequence[Sequence]) -> list[list[int]]:
    """Basis of {x integer row : x . M = 0} for rational M (k x n); saturated."""
    if not rows:
        return []
    M, _ = _clear_denominators(rows)
    k = len(M)
    n = len(M[0]) if M and M[0] else 0
    aug = [list(M[i]) + [1 if j == i else 0 for j in range(k)] for i in range(k)]
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, k):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(r + 1, k):
            while aug[i][c]:
                q = aug[r][c] // aug[i][c]
                aug[r] = [a - q * b for a, b in zip(aug[r], aug[i])]
                aug[r], aug[i] = aug[i], aug[r]
        r += 1
    kernel = [row[n:] for row in aug[r:]]
    return row_hnf(kernel)


def saturation(rows: Sequence[Sequence]) -> list[list[int]]:
    """HNF basis of the saturation of the rational row span inside Z^n."""
    if not rows:
        return []
    n = len(rows[0])
    cols = [[Fraction(rows[i][j]) for i in range(len(rows))] for j in range(n)]
    ker = integer_kernel(cols)  # {y : y . M^T = 0}, i.e. rows orthogonal to span
    if not ker:
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    ker_cols = [[Fraction(ker[i][j]) for i in range(len(ker))] for j in range(n)]
    return integer_kernel(ker_cols)


def _snf_diagonalize(M, U, V) -> None:
    m, n = len(M), len(M[0])
    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            return
        i0, j0 = piv
        M[t], M[i0] = M[i0], M[t]
        U[t], U[i0] = U[i0], U[t]
        for row in M:
            row[t], row[j0] = row[j0], row[t]
        for row in V:
            row[t], row[j0] = row[j0], row[t]
        # improve the pivot to the gcd of its row and column
        while True:
            improved = False
            for i in range(t + 1, m):
                if M[i][t] % M[t][t]:
                    q = M[i][t] // M[t][t]
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[t])]
                    M[t], M[i] = M[i], M[t]
                    U[t], U[i] = U[i], U[t]
                    improved = True
            for j in range(t + 1, n):
                if M[t][j] % M[t][t]:
                    q = M[t][j] // M[t][t]
                    for row in M:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                    for row in M:
                        row[t], row[j] = row[j], row[t]
                    for row in V:
                        row[t], row[j] = row[j], row[t]
                    improved = True
            if not improved:
                break
        # exact clearing: operations on the other rows and columns only
        for i in range(t + 1, m):
            if M[i][t]:
                q = M[i][t] // M[t][t]
                M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                U[i] = [a - q * b for a, b in zip(U[i], U[t])]
        for j in range(t + 1, n):
            if M[t][j]:
                q = M[t][j] // M[t][t]
                for row in M:
                    row[j] -= q * row[t]
                for row in V:
                    row[j] -= q * row[t]
        t += 1


def smith_normal_form(rows: Sequence[Sequence[int]]
                      ) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """(D, U, V) with U * M * V = D diagonal, divisibility chain on the diagonal."""
    M = [list(map(int, r)) for r in rows]
    m = len(M)
    n = len(M[0]) if M else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    while True:
        _snf_diagonalize(M, U, V)
        fixed = True
        for i in range(min(m, n) - 1):
            a, b = M[i][i], M[i + 1][i + 1]
            if b and (a == 0 or b % a):
                # column i += column i+1 breaks diagonality; re-diagonalize
                for row in M:
                    row[i] += row[i + 1]
                for row in V:
                    row[i] += row[i + 1]
                fixed = False
                break
        if fixed:
            break
    for i in range(min(m, n)):
        if M[i][i] < 0:
            M[i] = [-a for a in M[i]]
            U[i] = [-a for a in U[i]]
    return M, U, V


# ---------------------------------------------------------------------------
# LLL reduction and Fincke-Pohst enumeration (positive definite, exact)
# ---------------------------------------------------------------------------

def lll_reduce(gram: Mat, delta: Fraction = Fraction(3, 4)
               ) -> tuple[Mat, list[list[int]]]:
    """Exact LLL on a positive definite Gram matrix.

    Returns the reduced Gram and the unimodular transform T with
    reduced = T * gram * T^t.
    """
    n = len(gram)
    G = [[Fraction(x) for x in row] for row in gram]
    T = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def gso():
        # mu[i][j] and B[i] (squared norms of GS vectors) from the Gram
        mu = [[Fraction(0)] * n for _ in range(n)]
        B = [Fraction(0)] * n
        # inner products of basis vectors with GS vectors: r[i][j]
        r = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i):
                r[i][j] = G[i][j] - sum(mu[j][k] * r[i][k] for k in range(j))
                mu[i][j] = r[i][j] / B[j]
            B[i] = G[i][i] - sum(mu[i][k] * r[i][k] for k in range(i))
        return mu, B

    def size_reduce(k, mu):
        for j in range(k - 1, -1, -1):
            q = (mu[k][j] + Fraction(1, 2)).__floor__()
            if q:
                # row k -= q * row j (both in T and G updates via recompute)
                T[k] = [a - q * b for a, b in zip(T[k], T[j])]
                for c in range(n):
                    G[k][c] -= q * G[j][c]
                for rr in range(n):
                    G[rr][k] -= q * G[rr][j]
                mu2, _ = gso()
                for jj in range(n):
                    mu[k][jj] = mu2[k][jj]

    k = 1
    guard = 0
    while k < n:
        guard += 1
        if guard > 20000:
            raise RuntimeError("LLL failed to terminate")
        mu, B = gso()
        size_reduce(k, mu)
        mu, B = gso()
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            T[k], T[k - 1] = T[k - 1], T[k]
            G[k], G[k - 1] = G[k - 1], G[k]
            for row in G:
                row[k], row[k - 1] = row[k - 1], row[k]
            k = max(k - 1, 1)
    return tuple(tuple(row) for row in G), T


def _cholesky_q(gram: Mat) -> list[list[Fraction]]:
    n = len(gram)
    Q = [[Fraction(x) for x in row] for row in gram]
    for i in range(n):
        if Q[i][i] <= 0:
            raise ValueError("matrix not positive definite")
        for j in range(i + 1, n):
            t = Q[i][j]
            Q[j][i] = t
            Q[i][j] = t / Q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                Q[k][l] -= Q[k][i] * Q[i][l]
    return Q


def _sqrt_floor(f: Fraction) -> int:
    """floor(sqrt(f)) for f >= 0."""
    if f < 0:
        raise ValueError("negative")
    x = math.isqrt(f.numerator // f.denominator)
    while Fraction((x + 1) * (x + 1)) <= f:
        x += 1
    while x > 0 and Fraction(x * x) > f:
        x -= 1
    return x


def _int_interval(center: Fraction, radius_sq: Fraction) -> range:
    """All integers x with (x - center)^2 <= radius_sq."""
    if radius_sq < 0:
        return range(0)
    r = _sqrt_floor(radius_sq)
    lo = math.ceil(center) - r - 2
    hi = math.floor(center) + r + 2
    while lo <= hi and (Fraction(lo) - center) ** 2 > radius_sq:
        lo += 1
    while hi >= lo and (Fraction(hi) - center) ** 2 > radius_sq:
        hi -= 1
    return range(lo, hi + 1)


def enumerate_quadratic(gram: Mat, bound: Fraction,
                        shift: Optional[Sequence] = None,
                        exact: Optional[Fraction] = None) -> list[tuple[int, ...]]:
    """Integer x with (x+shift) G (x+shift)^t <= bound (or == exact).

    G must be positive definite.  With a shift, the zero vector is not
    special-cased; without one, x = 0 is omitted.
    """
    n = len(gram)
    Q = _cholesky_q(gram)
    s = [Fraction(x) for x in (shift or [0] * n)]
    out: list[tuple[int, ...]] = []
    x = [0] * n

    def rec(i: int, remaining: Fraction):
        if i < 0:
            if exact is not None and remaining != bound - exact:
                return
            v = tuple(x)
            if shift is None and not any(v):
                return
            out.append(v)
            return
        # center for coordinate i: y_i = x_i + s_i + sum_{j>i} Q[i][j] (x_j + s_j)
        off = s[i] + sum(Q[i][j] * (x[j] + s[j]) for j in range(i + 1, n))
        for xi in _int_interval(-off, remaining / Q[i][i]):
            x[i] = xi
            used = Q[i][i] * (xi + off) ** 2
            rec(i - 1, remaining - used)
        x[i] = 0

    rec(n - 1, Fraction(bound))
    return out


# ---------------------------------------------------------------------------
# lattices
# ---------------------------------------------------------------------------

class IntegerLattice:
    """Free Z-module with an exact symmetric bilinear form."""

    def __init__(self, gram: Sequence[Sequence], name: Optional[str] = None,
                 basis_labels: Optional[Sequence[str]] = None):
        G = frac_mat(gram)
        if any(len(row) != len(G) for row in G):
            raise ValueError("gram matrix must be square")
        for i in range(len(G)):
            for j in range(len(G)):
                if G[i][j] != G[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        self.gram = G
        self.rank = len(G)
        self.name = name
        self.basis_labels = tuple(basis_labels) if basis_labels else None
        self._det: Optional[Fraction] = None
        self._sig: Optional[tuple[int, int, int]] = None

    # -- basic invariants ---------------------------------------------------

    def det(self) -> Fraction:
        if self._det is None:
            self._det = mat_det(self.gram)
        return self._det

    def signature(self) -> tuple[int, int]:
        if self._sig is None:
            self._sig = signature_of(self.gram)
        pos, neg, zero = self._sig
        if zero:
            raise ValueError("degenerate lattice")
        return pos, neg

    def is_degenerate(self) -> bool:
        return self.det() == 0

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.gram for x in row)

    def is_even(self) -> bool:
        return self.is_integral() and all(self.gram[i][i] % 2 == 0
                                          for i in range(self.rank))

    def bilinear(self, v: Sequence, w: Sequence) -> Fraction:
        return dot(vec_mat(v, self.gram), w)

    def norm(self, v: Sequence) -> Fraction:
        return self.bilinear(v, v)

    def __repr__(self) -> str:
        label = self.name or f"rank {self.rank}"
        return f"IntegerLattice({label}, det {self.det()})"


# -- named constructions ----------------------------------------------------

def _dynkin_gram(edges: list[tuple[int, int]], n: int) -> list[list[int]]:
    G = [[0] * n for _ in range(n)]
    for i in range(n):
        G[i][i] = -2
    for i, j in edges:
        G[i][j] = G[j][i] = 1
    return G


def root_lattice(kind: str, n: int) -> IntegerLattice:
    """Negative definite root lattice of type A_n, D_n or E_n."""
    if kind == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "D":
        if n < 3:
            raise ValueError("D_n needs n >= 3")
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif kind == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6,7,8}")
        # chain 0-1-2-3-4(-5-6) with the extra node attached to vertex 2
        edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    else:
        raise ValueError(f"unknown root lattice kind {kind!r}")
    return IntegerLattice(_dynkin_gram(edges, n), name=f"{kind}{n}")


def hyperbolic_plane() -> IntegerLattice:
    return IntegerLattice([[0, 1], [1, 0]], name="U")


def odd_unimodular(p: int, q: int) -> IntegerLattice:
    G = [[0] * (p + q) for _ in range(p + q)]
    for i in range(p):
        G[i][i] = 1
    for i in range(p, p + q):
        G[i][i] = -1
    return IntegerLattice(G, name=f"I{p},{q}")


def t237() -> IntegerLattice:
    """The rank-10 even unimodular hyperbolic tree lattice (arms 2, 3, 7).

    Basis order r0..r9: r1-...-r9 a chain, r0 attached to r3.
    """
    edges = [(i, i + 1) for i in range(1, 9)] + [(0, 3)]
    L = IntegerLattice(_dynkin_gram(edges, 10), name="T237",
                       basis_labels=[f"r{i}" for i in range(10)])
    return L


def rescale(L: IntegerLattice, r) -> IntegerLattice:
    r = Fraction(r)
    return IntegerLattice([[x * r for x in row] for row in L.gram],
                          name=f"{L.name}({r})" if L.name else None,
                          basis_labels=L.basis_labels)


def dual(L: IntegerLattice) -> IntegerLattice:
    return IntegerLattice(mat_inverse(L.gram),
                          name=f"{L.name}*" if L.name else None)


def direct_sum(*Ls: IntegerLattice) -> IntegerLattice:
    n = sum(L.rank for L in Ls)
    G = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for L in Ls:
        for i in range(L.rank):
            for j in range(L.rank):
                G[off + i][off + j] = L.gram[i][j]
        off += L.rank
    name = "+".join(L.name or "?" for L in Ls)
    return IntegerLattice(G, name=name)


_NAMED = {
    "U": hyperbolic_plane,
    "T237": t237,
}


def named_lattice(spec: str) -> IntegerLattice:
    """Lattice by name: A5, D12, E8, U, I2,10, T237, and E8(2)-style scalings."""
    spec = spec.strip()
    base, scale = spec, None
    if spec.endswith(")") and "(" in spec:
        base, _, rest = spec.partition("(")
        scale = Fraction(rest[:-1])
    L = None
    if base in _NAMED:
        L = _NAMED[base]()
    elif base.startswith("I") and "," in base:
        p, q = base[1:].split(",")
        L = odd_unimodular(int(p), int(q))
    elif base[0] in "ADE" and base[1:].isdigit():
        L = root_lattice(base[0], int(base[1:]))
    if L is None:
        raise ValueError(f"unknown lattice name {spec!r}")
    return rescale(L, scale) if scale is not None else L


# ---------------------------------------------------------------------------
# sublattices: complements, hulls, invariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Sublattice:
    """A sublattice presented by basis rows in the ambient coordinates."""

    ambient: IntegerLattice
    basis: tuple  # rows, rational coordinates in the ambient basis
    lattice: IntegerLattice

    def __repr__(self) -> str:
        return f"Sublattice(rank {self.lattice.rank} of {self.ambient!r})"


def _sublattice_from_rows(amb: IntegerLattice, rows) -> Sublattice:
    B = frac_mat(rows) if rows else tuple()
    if B:
        gram = mat_mul(mat_mul(B, amb.gram), mat_transpose(B))
    else:
        gram = tuple()
    return Sublattice(amb, B, IntegerLattice(gram if B else []))


def orthogonal_complement(L: IntegerLattice, vectors: Sequence[Sequence]
                          ) -> Sublattice:
    """Saturated sublattice orthogonal to the given vectors."""
    if not vectors:
        rows = [[1 if i == j else 0 for j in range(L.rank)]
                for i in range(L.rank)]
        return _sublattice_from_rows(L, rows)
    pairing = [[L.bilinear([1 if k == i else 0 for k in range(L.rank)], v)
                for v in vectors] for i in range(L.rank)]
    ker = integer_kernel(pairing)
    return _sublattice_from_rows(L, ker)


def primitive_hull(L: IntegerLattice, gens: Sequence[Sequence]
                   ) -> tuple[Sublattice, int]:
    """Saturation of the span of gens inside L, with the index of the span."""
    if mat_rank(gens) != len(gens):
        raise ValueError("generators are dependent")
    sat_basis = saturation(gens)
    hull = _sublattice_from_rows(L, sat_basis)
    # index: solve each generator in the hull basis, SNF of the coefficient matrix
    coeffs = []
    for g in gens:
        sol = solve_left(frac_vec(g), hull.basis)
        assert sol is not None
        assert all(x.denominator == 1 for x in sol)
        coeffs.append([int(x) for x in sol])
    D, _, _ = smith_normal_form(coeffs)
    index = 1
    for i in range(len(D)):
        index *= abs(D[i][i])
    return hull, index


def invariant_coinvariant(L: IntegerLattice, actions: Sequence[Sequence[Sequence]]
                          ) -> tuple[Sublattice, Sublattice]:
    """Fixed sublattice and its saturated orthogonal complement.

    Each action is a matrix A (rows = images of basis vectors); it must
    preserve the Gram matrix.
    """
    for A in actions:
        Am = frac_mat(A)
        if mat_mul(mat_mul(Am, L.gram), mat_transpose(Am)) != L.gram:
            raise ValueError("action does not preserve the bilinear form")
    blocks = []
    for i in range(L.rank):
        row = []
        for A in actions:
            for j in range(L.rank):
                row.append(Fraction(A[i][j]) - (1 if i == j else 0))
        blocks.append(row)
    inv_rows = integer_kernel(blocks)
    invariant = _sublattice_from_rows(L, inv_rows)
    coinv = orthogonal_complement(L, inv_rows)
    return invariant, coinv


# ---------------------------------------------------------------------------
# discriminant groups and forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscriminantGroup:
    lattice: IntegerLattice
    invariants: tuple[int, ...]           # cyclic orders > 1
    generators: tuple                     # rational rows in the lattice basis
    even: bool

    def order(self) -> int:
        n = 1
        for d in self.invariants:
            n *= d
        return n

    def q_value(self, v: Sequence) -> Fraction:
        """Norm of a coset rep mod 2Z (even case) or mod Z (odd case)."""
        q = self.lattice.norm(v)
        modulus = 2 if self.even else 1
        return q % modulus

    def b_value(self, v: Sequence, w: Sequence) -> Fraction:
        return self.lattice.bilinear(v, w) % 1

    def elements(self) -> list[Vec]:
        reps = []
        for combo in itertools.product(*(range(d) for d in self.invariants)):
            v = tuple(sum(Fraction(c) * g[j] for c, g in zip(combo, self.generators))
                      for j in range(self.lattice.rank))
            reps.append(v)
        return reps

    def value_multiset(self) -> tuple:
        return tuple(sorted(self.q_value(v) for v in self.elements()))


def discriminant_group(L: IntegerLattice) -> DiscriminantGroup:
    """Invariant factors and generators of L*/L for nondegenerate integral L."""
    if not L.is_integral():
        raise ValueError("lattice must be integral")
    if L.det() == 0:
        raise ValueError("lattice is degenerate")
    G_int = [[int(x) for x in row] for row in L.gram]
    D, U, V = smith_normal_form(G_int)
    # L* = G^{-1} Z^n (row convention: x G in Z^n).  With U G V = D the dual
    # is spanned by rows of (V D^{-1})^T-style combinations; concretely the
    # rows of D^{-1} U give dual generators in the lattice basis since
    # (D^{-1} U) G = V^{-1} has integer entries.
    n = L.rank
    Uf = frac_mat(U)
    gens = []
    invs = []
    for i in range(n):
        d = D[i][i]
        if d in (0,):
            raise ValueError("degenerate")
        if abs(d) == 1:
            continue
        row = tuple(Uf[i][j] / d for j in range(n))
        gens.append(row)
        invs.append(abs(d))
    return DiscriminantGroup(L, tuple(invs), tuple(gens), L.is_even())


def disc_form_invariants(L: IntegerLattice) -> dict:
    """Comparable invariants of the discriminant quadratic/bilinear form."""
    d = discriminant_group(L)
    return {
        "invariants": d.invariants,
        "even": d.even,
        "values": d.value_multiset(),
    }


# ---------------------------------------------------------------------------
# short vectors and root systems
# ---------------------------------------------------------------------------

def short_vectors(L: IntegerLattice, norm: int) -> list[Vec]:
    """All vectors of the exact given norm, one per +- pair (definite L)."""
    pos, neg = L.signature()
    if pos and neg:
        raise ValueError("indefinite lattice needs a slicing datum; "
                         "use isotropic_slab or gonality instead")
    sign = 1 if neg == 0 else -1
    if sign * norm < 0:
        return []
    G = L.gram if sign == 1 else tuple(tuple(-x for x in row) for row in L.gram)
    target = Fraction(sign * norm)
    if L.rank == 0:
        return []
    Gr, T = lll_reduce(G)
    sols = enumerate_quadratic(Gr, target, exact=target)
    out = set()
    for x in sols:
        v = tuple(sum(Fraction(x[i]) * T[i][j] for i in range(L.rank))
                  for j in range(L.rank))
        out.add(max(v, tuple(-c for c in v)))
    return sorted(out)


_ROOT_COUNTS = {("A", 1): 2}


def _ade_label(rank: int, nroots: int) -> str:
    if nroots == rank * (rank + 1):
        return f"A{rank}"
    if rank >= 4 and nroots == 2 * rank * (rank - 1):
        return f"D{rank}"
    if (rank, nroots) in ((6, 72), (7, 126), (8, 240)):
        return f"E{rank}"
    raise ValueError(f"no simply-laced system with rank {rank}, {nroots} roots")


@dataclass(frozen=True)
class RootDecomposition:
    label: str                    # e.g. "A4+A5"
    components: tuple             # (label, rank, root count) per component
    root_count: int               # total number of roots (both signs)


def root_type(L: IntegerLattice) -> RootDecomposition:
    """ADE decomposition of the norm -2 root system of a definite lattice."""
    pairs = short_vectors(L, -2)
    if not pairs:
        return RootDecomposition("", tuple(), 0)
    ncomp = []
    adj = {i: set() for i in range(len(pairs))}
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if L.bilinear(pairs[i], pairs[j]) != 0:
                adj[i].add(j)
                adj[j].add(i)
    seen = set()
    comps = []
    for i in range(len(pairs)):
        if i in seen:
            continue
        comp = {i}
        frontier = [i]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= comp
        vectors = [pairs[k] for k in comp]
        rank = mat_rank(vectors)
        nroots = 2 * len(comp)
        comps.append((_ade_label(rank, nroots), rank, nroots))
    comps.sort(key=lambda c: (c[1], c[0]))
    label = "+".join(c[0] for c in comps)
    return RootDecomposition(label, tuple(comps), sum(c[2] for c in comps))


# ---------------------------------------------------------------------------
# isotropic vectors, gonality, isotropic sequences
# ---------------------------------------------------------------------------

def isotropic_slab(L: IntegerLattice, h: Sequence, k: int,
                   norm: Fraction = Fraction(0)) -> list[Vec]:
    """All f in L with (f,h) = k and (f,f) = norm (hyperbolic L, (h,h) > 0)."""
    hh = L.norm(h)
    if hh <= 0:
        raise ValueError("slicing vector must have positive norm")
    lin = [L.bilinear([1 if t == i else 0 for t in range(L.rank)], h)
           for i in range(L.rank)]
    den = 1
    for x in lin:
        den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
    lin_int = [int(Fraction(x) * den) for x in lin]
    g = 0
    for x in lin_int:
        g = math.gcd(g, x)
    target_k = k * den
    if g == 0 or target_k % g:
        return []
    # particular solution of sum x_i lin_int_i = target_k by extended gcd
    x0 = _solve_linear_diophantine(lin_int, target_k)
    perp = integer_kernel([[Fraction(x)] for x in lin_int])
    # f = x0 + y, y in perp-span; (f,f) = norm
    # write f = c h + w with w in h-perp: c = k / hh
    c = Fraction(k) / hh
    p = tuple(Fraction(a) - c * Fraction(b) for a, b in zip(x0, h))  # proj of x0
    # p lies in span(perp); coordinates of p there:
    p_coords = solve_left(p, frac_mat(perp)) if perp else tuple()
    if p_coords is None:
        raise RuntimeError("projection failed")
    Gp = mat_mul(mat_mul(frac_mat(perp), L.gram), mat_transpose(frac_mat(perp)))
    target = norm - Fraction(k) ** 2 / hh  # (w + p)^2 must equal this; negative
    neg = tuple(tuple(-x for x in row) for row in Gp)
    sols = enumerate_quadratic(neg, -target, shift=p_coords, exact=-target)
    out = []
    for y in sols:
        f = tuple(Fraction(a) + sum(Fraction(y[i]) * Fraction(perp[i][j])
                                    for i in range(len(perp)))
                  for j, a in enumerate(x0))
        out.append(f)
    return sorted(out)


def _solve_linear_diophantine(coeffs: list[int], target: int) -> list[int]:
    """One integer solution of sum coeffs_i x_i = target (gcd divides target)."""
    n = len(coeffs)
    # iterative extended gcd across the vector
    g = 0
    combo = [0] * n
    for i, a in enumerate(coeffs):
        if a == 0:
            continue
        if g == 0:
            g = abs(a)
            combo = [0] * n
            combo[i] = 1 if a > 0 else -1
            continue
        gg, s, t = _xgcd(g, a)
        combo = [s * c for c in combo]
        combo[i] += t
        g = gg
    assert g and target % g == 0
    m = target // g
    return [c * m for c in combo]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _is_primitive(v: Sequence[Fraction]) -> bool:
    g = 0
    for x in v:
        if Fraction(x).denominator != 1:
            return False
        g = math.gcd(g, abs(int(x)))
    return g == 1


@dataclass(frozen=True)
class GonalityResult:
    value: int
    half_pencils: tuple
    searched_up_to: int


def gonality(L: IntegerLattice, h: Sequence, k_max: int = 40) -> GonalityResult:
    """Minimum of (f,h) over primitive isotropic f with (f,h) > 0.

    Enumerates slabs (f,h) = k for ascending k; the first k with a
    primitive isotropic solution is the value, and the solutions are the
    gonality half-pencils.
    """
    if L.norm(h) <= 0:
        raise ValueError("polarization must have positive norm")
    for k in range(1, k_max + 1):
        found = [f for f in isotropic_slab(L, h, k) if _is_primitive(f)]
        if found:
            return GonalityResult(k, tuple(found), k)
    raise RuntimeError(f"no isotropic vector with pairing <= {k_max}")


def dual_basis(L: IntegerLattice) -> Mat:
    """Rows b_i with (b_i, e_j) = delta_ij."""
    return mat_inverse(L.gram)


@dataclass(frozen=True)
class IsotropicSequence:
    lattice: IntegerLattice
    vectors: tuple  # f_1..f_10 with (f_i,f_j) = 1 - delta_ij
    b0: Vec
    b2: Vec
    b4: Vec


def isotropic_sequence(k: int = 10) -> IsotropicSequence:
    """An isotropic sequence in the tree lattice adapted to the dual basis.

    The ten half-pencils of the degree-10 dual vector b0 form the sequence;
    they are ordered so that b4 = f5+...+f10 and
    b2 = (b0 - f1 - f2 + f3 + ... + f10)/2 hold exactly.
    """
    if not 1 <= k <= 10:
        raise ValueError("sequence length must be 1..10")
    L = t237()
    B = dual_basis(L)
    b0, b2, b4 = B[0], B[2], B[4]
    if L.norm(b0) < 0:
        b0, b2, b4 = tuple(-x for x in b0), tuple(-x for x in b2), tuple(-x for x in b4)
    gon = gonality(L, b0)
    fs = list(gon.half_pencils)
    if len(fs) != 10:
        raise RuntimeError(f"expected 10 half-pencils for b0, got {len(fs)}")
    for i in range(10):
        for j in range(10):
            expect = 0 if i == j else 1
            if L.bilinear(fs[i], fs[j]) != expect:
                raise RuntimeError("half-pencils do not form an isotropic sequence")
    # order: the two vectors pairing differently with b2 go first, the six
    # half-pencils of b4 go last
    with_b4 = [f for f in fs if L.bilinear(f, b4) == 5]
    with_b2 = [f for f in fs if L.bilinear(f, b2) != 4]
    rest = [f for f in fs if f not in with_b4 and f not in with_b2]
    ordered = with_b2 + rest + with_b4
    if len(with_b4) != 6 or len(with_b2) != 2 or len(ordered) != 10:
        raise RuntimeError("sequence ordering failed")
    f = ordered
    third = tuple(sum(Fraction(f[i][j]) for i in range(10)) / 3 for j in range(10))
    if third != tuple(map(Fraction, b0)):
        raise RuntimeError("b0 is not one third of the sequence sum")
    sum_last6 = tuple(sum(Fraction(f[i][j]) for i in range(4, 10)) for j in range(10))
    if sum_last6 != tuple(map(Fraction, b4)):
        raise RuntimeError("b4 is not the sum of the last six")
    mid = tuple((Fraction(b0[j]) - f[0][j] - f[1][j]
                 + sum(f[i][j] for i in range(2, 10))) / 2 for j in range(10))
    if mid != tuple(map(Fraction, b2)):
        raise RuntimeError("b2 identity fails")
    return IsotropicSequence(L, tuple(ordered[:k]), tuple(b0), tuple(b2), tuple(b4))


# ---------------------------------------------------------------------------
# glue (overlattices)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GluedLattice:
    summands: tuple
    glue_vectors: tuple
    basis: tuple          # rows, rational coordinates in the direct-sum basis
    result: IntegerLattice
    index: int


def glue(summands: Sequence[IntegerLattice], glue_vectors: Sequence[Sequence],
         require_even: bool = False) -> GluedLattice:
    """Overlattice generated by the orthogonal sum and the glue vectors."""
    amb = direct_sum(*summands) if len(summands) > 1 else summands[0]
    n = amb.rank
    rows = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    rows += [list(map(Fraction, g)) for g in glue_vectors]
    ints, den = _clear_denominators(rows)
    hnf = row_hnf(ints)
    if len(hnf) != n:
        raise ValueError("glue vectors do not span a finite overlattice")
    basis = tuple(tuple(Fraction(x, den) for x in row) for row in hnf)
    gram = mat_mul(mat_mul(basis, amb.gram), mat_transpose(basis))
    for i in range(n):
        for j in range(n):
            if gram[i][j].denominator != 1:
                raise ValueError(
                    f"glue produces non-integral pairing at ({i},{j}):"
                    f" {gram[i][j]}")
    L = IntegerLattice(gram)
    if require_even and not L.is_even():
        raise ValueError("glued lattice is not even")
    ratio = Fraction(amb.det() / L.det())
    assert ratio.denominator == 1
    index = math.isqrt(ratio.numerator)
    assert index * index == ratio.numerator
    return GluedLattice(tuple(summands), tuple(tuple(map(Fraction, g))
                                               for g in glue_vectors),
                        basis, L, index)
