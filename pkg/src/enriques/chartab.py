"""Exact character tables of small groups.

The table is computed Dixon-style: simultaneous eigenvectors of the class
multiplication matrices over a prime field F_p with p = 1 (mod exponent),
then exact cyclotomic character values recovered from eigenvalue
multiplicities via discrete Fourier inversion.  Row orthogonality is
verified exactly over Q(zeta_e) before a table is returned.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import perm
from .perm import PermGroup, Permutation

TABLE_ORDER_CAP = 400


# ---------------------------------------------------------------------------
# cyclotomic numbers: vectors over Q in powers of zeta_n, reduced mod Phi_n
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    # x^n - 1 divided by the product of Phi_d for proper divisors d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _polydiv_exact(num: list, den: list) -> list:
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        q = num[-1] / den[-1]
        out[shift] = q
        for i, c in enumerate(den):
            num[shift + i] -= q * c
        while num and num[-1] == 0:
            num.pop()
    assert all(c.denominator == 1 for c in out)
    return [int(c) for c in out]


class Cyc:
    """An element of Q(zeta_n), stored reduced modulo Phi_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence[Fraction]):
        phi = len(cyclotomic_polynomial(n)) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            cs = _reduce_mod_phi(cs, n)
        cs += [Fraction(0)] * (phi - len(cs))
        self.n = n
        self.coeffs = tuple(cs)

    @staticmethod
    def zero(n: int) -> "Cyc":
        return Cyc(n, [])

    @staticmethod
    def rational(n: int, value) -> "Cyc":
        return Cyc(n, [Fraction(value)])

    @staticmethod
    def zeta_power(n: int, k: int) -> "Cyc":
        k %= n
        cs = [Fraction(0)] * (k + 1)
        cs[k] = Fraction(1)
        return Cyc(n, cs)

    def __add__(self, other: "Cyc") -> "Cyc":
        assert self.n == other.n
        return Cyc(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Cyc") -> "Cyc":
        assert self.n == other.n
        return Cyc(self.n, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other) -> "Cyc":
        if isinstance(other, (int, Fraction)):
            return Cyc(self.n, [a * other for a in self.coeffs])
        assert self.n == other.n
        n = self.n
        acc = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                acc[(i + j) % n] += a * b
        return Cyc(n, acc)

    __rmul__ = __mul__

    def galois(self, k: int) -> "Cyc":
        """Image under zeta -> zeta^k (k coprime to n)."""
        if math.gcd(k, self.n) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        n = self.n
        acc = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            acc[(i * k) % n] += a
        return Cyc(n, acc)

    def conjugate(self) -> "Cyc":
        return self.galois(self.n - 1) if self.n > 1 else self

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def __repr__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*z^{i}" if i else str(c))
        return "(" + " + ".join(terms) + f" : z=zeta_{self.n})"


def _reduce_mod_phi(cs: list[Fraction], n: int) -> list[Fraction]:
    phi = list(cyclotomic_polynomial(n))
    deg = len(phi) - 1
    cs = cs[:]
    for i in range(len(cs) - 1, deg - 1, -1):
        c = cs[i]
        if c == 0:
            continue
        for j in range(deg + 1):
            cs[i - deg + j] -= c * phi[j]
    return cs[:deg]


# ---------------------------------------------------------------------------
# finite-field linear algebra helpers
# ---------------------------------------------------------------------------

def _charpoly_mod(M: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial of M over F_p via Hessenberg reduction."""
    n = len(M)
    H = [row[:] for row in M]
    for j in range(n - 2):
        pivot = None
        for i in range(j + 1, n):
            if H[i][j] % p:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != j + 1:
            H[pivot], H[j + 1] = H[j + 1], H[pivot]
            for row in H:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
        inv = pow(H[j + 1][j], p - 2, p)
        for i in range(j + 2, n):
            f = H[i][j] * inv % p
            if f:
                for c in range(j, n):
                    H[i][c] = (H[i][c] - f * H[j + 1][c]) % p
                for r in range(n):
                    H[r][j + 1] = (H[r][j + 1] + f * H[r][i]) % p
    # charpoly of Hessenberg matrix by the standard recurrence
    polys = [[1]]  # p_0 = 1
    for m in range(1, n + 1):
        # p_m(x) = (x - H[m-1][m-1]) p_{m-1}(x) - sum_i (prod of subdiag) H[i][m-1] p_i(x)
        prev = polys[m - 1]
        cur = [0] * (len(prev) + 1)
        for i, c in enumerate(prev):
            cur[i + 1] = (cur[i + 1] + c) % p
            cur[i] = (cur[i] - H[m - 1][m - 1] * c) % p
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = prod * H[i][i - 1] % p
            coef = prod * H[i - 1][m - 1] % p
            if coef:
                q = polys[i - 1]
                for idx, c in enumerate(q):
                    cur[idx] = (cur[idx] - coef * c) % p
        polys.append(cur)
    return polys[n]


def _kernel_mod(M: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right kernel of M over F_p."""
    n_rows = len(M)
    n_cols = len(M[0])
    A = [row[:] for row in M]
    pivots = []
    r = 0
    for c in range(n_cols):
        pr = None
        for i in range(r, n_rows):
            if A[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(n_rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n_cols
        v[fc] = 1
        for pr, pc in enumerate(pivots):
            v[pc] = (-A[pr][fc]) % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# the table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharacterTable:
    group: PermGroup
    classes: perm.ConjugacyClassPartition
    class_sizes: tuple[int, ...]
    rep_orders: tuple[int, ...]
    exponent: int
    irreducibles: tuple  # tuple of tuples of Cyc (in Q(zeta_exponent))
    degrees: tuple[int, ...]

    def inner_with_class_function(self, values: Sequence[Fraction], row: int) -> Cyc:
        """Exact inner product of a rational class function with one row."""
        n = self.group.order()
        acc = Cyc.zero(self.exponent)
        for l, size in enumerate(self.class_sizes):
            term = self.irreducibles[row][l].conjugate() * Fraction(values[l])
            acc = acc + term * size
        return acc * Fraction(1, n)


def _find_prime(e: int, minimum: int) -> int:
    p = minimum + ((e - minimum % e + 1) % e)
    while True:
        if p % e == 1 and _is_prime(p):
            return p
        p += 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, int(n**0.5) + 1):
        if n % q == 0:
            return False
    return True


def _element_of_order(e: int, p: int) -> int:
    qs = {q for q in range(2, e + 1) if e % q == 0 and _is_prime(q)}
    for g in range(2, p):
        z = pow(g, (p - 1) // e, p)
        if all(pow(z, e // q, p) != 1 for q in qs):
            return z
    raise RuntimeError("no element of required order (p chosen badly)")


_table_memo: dict[int, CharacterTable] = {}


def character_table(G: PermGroup) -> CharacterTable:
    """Exact character table of a group of order at most 400."""
    if G.order() > TABLE_ORDER_CAP:
        raise ValueError(f"character tables capped at order {TABLE_ORDER_CAP}")
    key = id(G)
    if key not in _table_memo:
        _table_memo[key] = _character_table_impl(G)
    return _table_memo[key]


def _character_table_impl(G: PermGroup) -> CharacterTable:
    ccl = perm.conjugacy_classes(G)
    k = len(ccl.classes)
    reps = list(ccl.representatives)
    sizes = [len(c) for c in ccl.classes]
    orders = [g.order() for g in reps]
    n = G.order()
    e = 1
    for o in orders:
        e = e * o // math.gcd(e, o)

    class_of = {}
    for idx, cls in enumerate(ccl.classes):
        for g in cls:
            class_of[g] = idx

    # power maps: pm[l][s] = class of reps[l]**s for s mod order
    pow_map = []
    for g in reps:
        row = []
        x = G.identity()
        for _ in range(g.order()):
            row.append(class_of[x])
            x = x * g
        pow_map.append(row)
    inv_class = [pow_map[l][-1] if orders[l] > 1 else l for l in range(k)]

    # class multiplication coefficients a[i][j][l] via a_{ijl} = #{x in C_i : x^-1 z_l in C_j}
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for l, z in enumerate(reps):
        for i, cls in enumerate(ccl.classes):
            for x in cls:
                j = class_of[x.inverse() * z]
                a[i][j][l] += 1
    # matrices M_i with (M_i)[j][l] = a_{ijl}
    p = _find_prime(e, max(2 * n, 1000))
    mats = [[[a[i][j][l] % p for l in range(k)] for j in range(k)] for i in range(k)]

    rng = random.Random(20240521)
    eigvecs: Optional[list[list[int]]] = None
    for _attempt in range(200):
        coeffs = [rng.randrange(p) for _ in range(k)]
        M = [[sum(coeffs[i] * mats[i][j][l] for i in range(k)) % p
              for l in range(k)] for j in range(k)]
        cp = _charpoly_mod(M, p)
        roots = [lam for lam in range(p) if _poly_eval(cp, lam, p) == 0]
        if len(roots) != k:
            continue
        vecs = []
        ok = True
        for lam in roots:
            Mm = [[(M[i][j] - (lam if i == j else 0)) % p for j in range(k)]
                  for i in range(k)]
            ker = _kernel_mod(Mm, p)
            if len(ker) != 1:
                ok = False
                break
            vecs.append(ker[0])
        if ok:
            eigvecs = vecs
            break
    if eigvecs is None:
        raise RuntimeError("failed to split class algebra (no separating combination)")

    e_class = class_of[G.identity()]
    z_e = _element_of_order(e, p)

    rows = []
    for v in eigvecs:
        if v[e_class] % p == 0:
            raise RuntimeError("degenerate eigenvector")
        norm = pow(v[e_class], p - 2, p)
        omega = [x * norm % p for x in v]
        s = 0
        for l in range(k):
            s = (s + omega[l] * omega[inv_class[l]] * pow(sizes[l], p - 2, p)) % p
        d_sq = n * pow(s, p - 2, p) % p
        d = math.isqrt(d_sq)
        if d * d != d_sq or d == 0 or d * d > n:
            raise RuntimeError(f"bad degree lift: {d_sq}")
        chi_p = [d * omega[l] % p * pow(sizes[l], p - 2, p) % p for l in range(k)]
        # exact values by Fourier inversion of eigenvalue multiplicities
        exact = []
        for l in range(k):
            m = orders[l]
            z_m = pow(z_e, e // m, p)
            val = Cyc.zero(e)
            minv = pow(m, p - 2, p)
            for t in range(m):
                c_t = 0
                for s_ in range(m):
                    c_t = (c_t + chi_p[pow_map[l][s_]]
                           * pow(z_m, (-s_ * t) % m, p)) % p
                c_t = c_t * minv % p
                if c_t > n:
                    raise RuntimeError("multiplicity lift out of range")
                if c_t:
                    val = val + Cyc.zeta_power(e, (e // m) * t) * c_t
            exact.append(val)
        rows.append((d, exact))

    rows.sort(key=lambda r: (r[0], [c.coeffs for c in r[1]]))
    degrees = tuple(r[0] for r in rows)
    irreducibles = tuple(tuple(r[1]) for r in rows)

    table = CharacterTable(G, ccl, tuple(sizes), tuple(orders), e,
                           irreducibles, degrees)
    _verify_table(table)
    return table


def _poly_eval(poly: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = (acc * x + c) % p
    return acc


def _verify_table(t: CharacterTable) -> None:
    n = t.group.order()
    k = len(t.degrees)
    if sum(d * d for d in t.degrees) != n:
        raise RuntimeError("degree squares do not sum to the group order")
    for a_ in range(k):
        for b in range(k):
            acc = Cyc.zero(t.exponent)
            for l in range(k):
                acc = acc + (t.irreducibles[a_][l]
                             * t.irreducibles[b][l].conjugate()) * t.class_sizes[l]
            expected = Fraction(n) if a_ == b else Fraction(0)
            if not (acc.is_rational() and acc.rational_value() == expected):
                raise RuntimeError(f"row orthogonality fails at ({a_}, {b})")
