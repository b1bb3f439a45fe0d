"""The 12-dimensional order-determined character and its consequences.

Covers the fixed-point character mu (value depends only on element order),
its integrality obstructions for 2-groups of order 16, decomposition into
irreducibles, the Lefschetz-number tables and eigenvalue-count solver for
order-6 elements, the Euler-number Diophantine analysis for odd prime
orders, and the classification of the 25 nontrivial groups satisfying the
representation-theoretic conditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import catalog, chartab, perm
from .catalog import CLASSIFIED_25, MAXIMAL_FIVE
from .perm import PermGroup, Permutation

# element order -> number of fixed points of the degree-12 action
MU_TABLE = {1: 12, 2: 4, 3: 3, 4: 4, 5: 2, 6: 1, 8: 2, 11: 1}


def mu_of_order(n: int) -> int:
    if n not in MU_TABLE:
        raise ValueError(f"order {n} not realized in the degree-12 action")
    return MU_TABLE[n]


def mu_average(G: PermGroup) -> Fraction:
    """Average of mu over the group; the invariant-subspace dimension."""
    total = 0
    for g in G.elements:
        o = g.order()
        if o not in MU_TABLE:
            raise ValueError(f"mu undefined: element of order {o} in {G!r}")
    for g in G.elements:
        total += MU_TABLE[g.order()]
    return Fraction(total, G.order())


def mu_defined(G: PermGroup) -> bool:
    return all(g.order() in MU_TABLE for g in G.elements)


def order_bound(G: PermGroup) -> tuple[bool, dict[int, int]]:
    """Whether |G| divides 2^4 * 3^2 * 5 * 11, with the factorization."""
    n = G.order()
    fact: dict[int, int] = {}
    m = n
    for p in (2, 3, 5, 7, 11):
        while m % p == 0:
            m //= p
            fact[p] = fact.get(p, 0) + 1
    if m != 1:
        fact[m] = 1
    ok = (m == 1 and fact.get(2, 0) <= 4 and fact.get(3, 0) <= 2
          and fact.get(5, 0) <= 1 and fact.get(11, 0) <= 1 and fact.get(7, 0) == 0)
    return ok, fact


# ---------------------------------------------------------------------------
# decomposition into irreducibles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    present: bool
    multiplicities: Optional[tuple[int, ...]]  # aligned with table rows
    degrees: Optional[tuple[int, ...]]
    reason: str
    trivial_multiplicity: Optional[int] = None


def small_mathieu_decomposition(G: PermGroup) -> Decomposition:
    """Multiplicities of mu in the irreducible characters, if mu is a character.

    Present iff every exact inner product (mu, chi_i) is a nonnegative
    rational integer.
    """
    if G.order() > chartab.TABLE_ORDER_CAP:
        raise ValueError("decomposition capped at order 400")
    if not mu_defined(G):
        bad = sorted({g.order() for g in G.elements} - set(MU_TABLE))
        return Decomposition(False, None, None,
                             f"element orders {bad} outside the mu domain")
    t = chartab.character_table(G)
    values = [Fraction(MU_TABLE[o]) for o in t.rep_orders]
    mults = []
    for i in range(len(t.degrees)):
        ip = t.inner_with_class_function(values, i)
        if not ip.is_rational():
            return Decomposition(False, None, None,
                                 f"(mu, chi_{i}) is irrational: {ip!r}")
        q = ip.rational_value()
        if q.denominator != 1:
            return Decomposition(False, None, None,
                                 f"(mu, chi_{i}) = {q} not an integer")
        if q < 0:
            return Decomposition(False, None, None, f"(mu, chi_{i}) = {q} < 0")
        mults.append(int(q))
    if sum(m * d for m, d in zip(mults, t.degrees)) != 12:
        return Decomposition(False, None, None, "multiplicities do not sum to 12")
    trivial = None
    for i in range(len(t.degrees)):
        if t.degrees[i] == 1 and all(v == 1 for v in t.irreducibles[i]):
            trivial = mults[i]
            break
    return Decomposition(True, tuple(mults), t.degrees, "mu is a character",
                         trivial)


# ---------------------------------------------------------------------------
# no order-16 2-groups: the three coset contradictions
# ---------------------------------------------------------------------------

def _regular_group(elements: list, mul, gens: list) -> PermGroup:
    index = {e: i + 1 for i, e in enumerate(elements)}
    perms = []
    for a in gens:
        perms.append(Permutation([index[mul(a, b)] for b in elements]))
    return perm.closure(perms)


def _coset_mu_report(elements: list, mul, a_subset: list, x) -> dict:
    """Element orders and mu averages for subgroup A and coset Ax."""
    index = {e: i for i, e in enumerate(elements)}

    def order_of(el) -> int:
        n = 1
        acc = el
        ident = elements[0]
        while acc != ident:
            acc = mul(acc, el)
            n += 1
        return n

    a_orders = sorted(order_of(e) for e in a_subset)
    coset = [mul(e, x) for e in a_subset]
    c_orders = sorted(order_of(e) for e in coset)
    mu_a = Fraction(sum(MU_TABLE[o] for o in a_orders), len(a_orders))
    mu_c = Fraction(sum(MU_TABLE[o] for o in c_orders), len(c_orders))
    return {
        "subgroup_orders": a_orders,
        "coset_orders": c_orders,
        "mu_subgroup": mu_a,
        "mu_coset": mu_c,
        "mu_total": (mu_a + mu_c) / 2,
    }


VERIFY16_VARIANTS = ("C8-case", "C4xC2-case", "C2cubed-case")


def verify_no_order16(variant: str) -> dict:
    """Re-derive the order-16 contradiction for one extension case.

    Constructs every order-16 candidate H = <A, x> for the given abelian A
    of order 8 and the stated conjugation action, computes the coset order
    profile, and reports the non-integral mu average (or the parity clash
    against mu(A)).
    """
    if variant not in VERIFY16_VARIANTS:
        raise ValueError(f"variant must be one of {VERIFY16_VARIANTS}")
    candidates = []
    if variant == "C8-case":
        # A = C8, x g x^-1 = g^5, x^2 in the phi-fixed subgroup {0,2,4,6}
        elements = [(i, e) for e in (0, 1) for i in range(8)]

        def make_mul(a_sq):
            def mul(p, q):
                i, e = p
                j, d = q
                jj = (5 * j) % 8 if e else j
                carry = a_sq if e and d else 0
                return ((i + jj + carry) % 8, (e + d) % 2)
            return mul
        for a_sq in (0, 2, 4, 6):
            mul = make_mul(a_sq)
            rep = _coset_mu_report(elements, mul,
                                   [(i, 0) for i in range(8)], (0, 1))
            candidates.append({"x_square": f"g^{a_sq}", **rep})
    elif variant == "C4xC2-case":
        # A = C4 x C2; x acts by alpha^2: (a, b) -> (3a, 2a + b)
        elements = [((a, b), e) for e in (0, 1) for a in range(4) for b in range(2)]

        def phi(v):
            a, b = v
            return ((3 * a) % 4, (2 * a + b) % 2)

        fixed = [v for v in [(a, b) for a in range(4) for b in range(2)]
                 if phi(v) == v]

        def make_mul(a_sq):
            def mul(p, q):
                v, e = p
                w, d = q
                ww = phi(w) if e else w
                s = ((v[0] + ww[0]) % 4, (v[1] + ww[1]) % 2)
                if e and d:
                    s = ((s[0] + a_sq[0]) % 4, (s[1] + a_sq[1]) % 2)
                return (s, (e + d) % 2)
            return mul
        for a_sq in fixed:
            mul = make_mul(a_sq)
            rep = _coset_mu_report(elements, mul,
                                   [(v, 0) for v in [(a, b) for a in range(4)
                                                     for b in range(2)]],
                                   ((0, 0), 1))
            candidates.append({"x_square": str(a_sq), **rep})
    else:
        # A = C2^3; x acts by the unipotent square B: v -> (v0+v2, v1, v2)
        vecs = [(a, b, c) for a in range(2) for b in range(2) for c in range(2)]
        elements = [(v, e) for e in (0, 1) for v in vecs]

        def phi(v):
            return ((v[0] + v[2]) % 2, v[1], v[2])

        fixed = [v for v in vecs if phi(v) == v]

        def make_mul(a_sq):
            def mul(p, q):
                v, e = p
                w, d = q
                ww = phi(w) if e else w
                s = tuple((x + y) % 2 for x, y in zip(v, ww))
                if e and d:
                    s = tuple((x + y) % 2 for x, y in zip(s, a_sq))
                return (s, (e + d) % 2)
            return mul
        for a_sq in fixed:
            mul = make_mul(a_sq)
            rep = _coset_mu_report(elements, mul, [(v, 0) for v in vecs],
                                   ((0, 0, 0), 1))
            candidates.append({"x_square": str(a_sq), **rep})

    for cand in candidates:
        total = cand["mu_total"]
        if total.denominator == 1:
            raise RuntimeError(f"{variant}: candidate {cand['x_square']} has"
                               f" integral mu average {total}")
        cand["contradiction"] = (
            f"mu average ({cand['mu_subgroup']} + {cand['mu_coset']})/2"
            f" = {total} is not an integer")
    return {"variant": variant, "candidates": candidates, "all_contradict": True}


# ---------------------------------------------------------------------------
# Lefschetz tables and the order-6 eigenvalue counts
# ---------------------------------------------------------------------------

LEFSCHETZ_TABLE = {
    1: (12,),
    2: (-4, -2, 0, 2, 4, 6, 8, 10, 12),
    3: (3,),
    4: (2, 4),
    5: (2,),
    6: (1, 3),
}


@dataclass(frozen=True)
class LefschetzProfile:
    order: int
    admissible_values: tuple[int, ...]


def lefschetz_values(order: int) -> LefschetzProfile:
    if order not in LEFSCHETZ_TABLE:
        raise ValueError(
            f"order {order} impossible: finite semi-symplectic automorphisms"
            " have order at most 6")
    return LefschetzProfile(order, LEFSCHETZ_TABLE[order])


@dataclass(frozen=True)
class EigencountSolution:
    a: tuple[int, int, int, int, int, int]
    lefschetz: int


def solve_order6_eigencounts(l2: int = 3, l3: int = 4,
                             restrict_l: bool = True) -> list[EigencountSolution]:
    """All eigenvalue-count vectors for an order-6 action on the 12-dim space.

    Solves a0+...+a5 = 12, a1 = a5, a2 = a4, a0-a1-a2+a3 = l2,
    a0-2a1+2a2-a3 = l3 over nonnegative integers; when ``restrict_l`` the
    trace L = a0+a1-a2-a3 is further constrained to the order-6 values.
    """
    out = []
    for a0 in range(13):
        for a1 in range(13):
            for a2 in range(13):
                a3 = 12 - a0 - 2 * a1 - 2 * a2
                if a3 < 0:
                    continue
                if a0 - a1 - a2 + a3 != l2:
                    continue
                if a0 - 2 * a1 + 2 * a2 - a3 != l3:
                    continue
                lef = a0 + a1 - a2 - a3
                if restrict_l and lef not in LEFSCHETZ_TABLE[6]:
                    continue
                out.append(EigencountSolution((a0, a1, a2, a3, a2, a1), lef))
    return sorted(out, key=lambda s: s.a)


# ---------------------------------------------------------------------------
# Euler-number Diophantine analysis for tame odd orders
# ---------------------------------------------------------------------------

def wild_order_solutions(c_max: int) -> list[dict]:
    """Solutions (q, r, c2) of 12 = q(c2 - q r) + r, q odd prime, c2 = 12k <= c_max.

    r (the number of fixed points) is a free unknown; each resolved fixed
    point contributes a chain of q-1 rational curves, so a solution is
    rank-flagged when r(q-1) exceeds the rank-9 negative-definite part.
    """
    if c_max < 0:
        raise ValueError("c_max must be nonnegative")
    out = []
    q = 3
    while (q - 1) * q <= 24 * q - 12:  # r = 1 still possible
        if _is_prime(q):
            for r in range(1, (q * c_max - 12) // (q * q - 1) + 1):
                num = 12 - r + q * q * r
                if num % q:
                    continue
                c2 = num // q
                if 0 <= c2 <= c_max and c2 % 12 == 0:
                    out.append({"q": q, "r": r, "c2": c2,
                                "rank_ok": r * (q - 1) <= 9})
        q += 2
    return out


# fixed-point counts of tame automorphisms of odd prime order, as forced by
# the prime-order Diophantine solutions above
PRIME_FIXED_COUNTS = {3: 3, 5: 2, 11: 1}


def composite_order_scenarios(n: int, c_max: int = 24) -> dict:
    """Orbit/Euler analysis of a hypothetical tame automorphism of order n.

    For composite odd n (9, 15, 25): points special for some power of sigma
    group into orbits whose stabilizer is a subgroup of C_n; the count of
    fixed points of each prime-order power is prescribed, so consistent
    orbit multisets can be enumerated.  Each is then tested against the
    Euler equation for the resolved quotient and the rank-9 bound.
    Returns the (empty, for 9/15/25) list of admissible scenarios.
    """
    if n % 2 == 0 or _is_prime(n):
        raise ValueError("composite odd order expected")
    primes = sorted({p for p in range(2, n + 1) if n % p == 0 and _is_prime(p)})
    stab_orders = [m for m in range(2, n + 1) if n % m == 0]
    required = {p: PRIME_FIXED_COUNTS[p] for p in primes}

    admissible = []
    rejected = []

    def rec(idx: int, counts: dict):
        if idx == len(stab_orders):
            for p, need in required.items():
                got = sum((n // m) * c for m, c in counts.items() if m % p == 0)
                if got != need:
                    return
            orbits = tuple(sorted((m, c) for m, c in counts.items() if c))
            singular_rank = sum((m - 1) * c for m, c in counts.items())
            npts = sum((n // m) * c for m, c in counts.items())
            num = 12 - npts
            scenario = {"orbits": orbits, "rank": singular_rank}
            if singular_rank > 9:
                rejected.append({**scenario,
                                 "why": f"singular rank {singular_rank} > 9"})
                return
            if num % n != 0:
                rejected.append({**scenario,
                                 "why": "free part Euler count not divisible"})
                return
            c2 = num // n + sum(m * c for m, c in counts.items())
            scenario["c2"] = c2
            if c2 < 0 or c2 > c_max or c2 % 12 != 0:
                rejected.append({**scenario, "why": f"c2 = {c2} inadmissible"})
                return
            admissible.append(scenario)
            return
        m = stab_orders[idx]
        # an orbit with stabilizer of order m supplies n/m points to the
        # fixed set of every prime dividing m; multiplicity is bounded by
        # the smallest prescribed count it feeds
        cap = 0
        feeds = [p for p in primes if m % p == 0]
        if feeds:
            cap = min(required[p] * m // n for p in feeds)
        for c in range(cap + 1):
            counts[m] = c
            rec(idx + 1, counts)
        del counts[m]

    rec(0, {})
    return {"order": n, "admissible": admissible, "rejected": rejected}


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


# ---------------------------------------------------------------------------
# the classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassifiedGroup:
    name: str
    order: int
    group: PermGroup
    mu: Fraction
    multiplicities: tuple[int, ...]
    degrees: tuple[int, ...]


def satisfies_condition(G: PermGroup) -> tuple[bool, str]:
    """The representation-theoretic membership test for nontrivial G.

    Requires: mu decomposes into irreducibles with nonnegative integer
    multiplicities, the trivial character appears at least 3 times, the
    2-Sylow subgroup embeds in S6, and G is not the order-12 dicyclic group.
    """
    if G.order() == 1:
        return False, "trivial group excluded"
    if not mu_defined(G):
        return False, "element order outside mu domain"
    mu = mu_average(G)
    if mu.denominator != 1:
        return False, f"mu average {mu} not an integer"
    if mu < 3:
        return False, f"invariant dimension {mu} < 3"
    if G.order() <= chartab.TABLE_ORDER_CAP:
        dec = small_mathieu_decomposition(G)
        if not dec.present:
            return False, dec.reason
    else:
        return False, "order exceeds table cap and mu tests inconclusive"
    syl2 = perm.sylow(G, 2)
    if not perm.embeds_up_to_iso(syl2, catalog.catalog("S6")):
        return False, "2-Sylow subgroup does not embed in S6"
    if G.order() == 12 and perm.isomorphic(G, catalog.catalog("Q12")):
        return False, "isomorphic to the excluded dicyclic group of order 12"
    return True, "ok"


@lru_cache(maxsize=1)
def classify_mathieu_groups() -> list[ClassifiedGroup]:
    """The isomorphism classes of nontrivial groups passing the test.

    Enumerates all subgroups of the five maximal groups up to conjugacy,
    reduces to isomorphism classes, filters by ``satisfies_condition`` and
    matches each class against its catalog name.  Exactly 25 classes.
    """
    reps: list[PermGroup] = []
    for name in MAXIMAL_FIVE:
        M = catalog.catalog(name)
        for K in perm.subgroup_classes(M):
            if K.order() > 1:
                reps.append(K)

    buckets: dict[tuple, list[PermGroup]] = {}
    classes: list[PermGroup] = []
    for K in reps:
        fp = perm.fingerprint(K)
        found = False
        for C in buckets.get(fp, []):
            if perm.isomorphic(K, C):
                found = True
                break
        if not found:
            buckets.setdefault(fp, []).append(K)
            classes.append(K)

    survivors = []
    for K in classes:
        ok, _why = satisfies_condition(K)
        if ok:
            survivors.append(K)
    if len(survivors) != len(classes):
        raise RuntimeError("a subgroup of a maximal group failed the condition")

    named: dict[str, ClassifiedGroup] = {}
    for K in survivors:
        label = None
        for name in CLASSIFIED_25:
            C = catalog.catalog(name)
            if C.order() == K.order() and perm.isomorphic(K, C):
                label = name
                break
        if label is None:
            raise RuntimeError(f"classified group of order {K.order()}"
                               " matches no catalog name")
        if label in named:
            raise RuntimeError(f"duplicate classification label {label}")
        dec = small_mathieu_decomposition(K)
        named[label] = ClassifiedGroup(
            name=label, order=K.order(), group=K, mu=mu_average(K),
            multiplicities=dec.multiplicities, degrees=dec.degrees)
    if len(named) != 25 or set(named) != set(CLASSIFIED_25):
        raise RuntimeError(f"classification mismatch: got {sorted(named)}")
    return [named[name] for name in CLASSIFIED_25]


def maximal_membership(G: PermGroup) -> set[str]:
    """Which of the five maximal groups contain (a copy of) G."""
    for rec in classify_mathieu_groups():
        if rec.order == G.order() and perm.isomorphic(G, rec.group):
            break
    else:
        raise ValueError("group is not in the classified set")
    out = set()
    for name in MAXIMAL_FIVE:
        if perm.embeds_up_to_iso(G, catalog.catalog(name)):
            out.add(name)
    return out


def sixteen_free_converse() -> dict:
    """Subgroups of S6 of order prime to 16 versus the classified list."""
    S6 = catalog.catalog("S6")
    classified = classify_mathieu_groups()
    extra = []
    matched = set()
    for K in perm.subgroup_classes(S6):
        if K.order() % 16 == 0 or K.order() == 1:
            continue
        for rec in classified:
            if rec.order == K.order() and perm.isomorphic(K, rec.group):
                matched.add(rec.name)
                break
        else:
            extra.append(K)
    return {"matched": sorted(matched), "unmatched_subgroups": extra,
            "complete": not extra and len(matched) == 25}
