"""Exact permutation-group engine for small finite groups.

Permutations are bijections of {1..n} stored as image tuples.  Groups are
fully materialized element sets (no stabilizer chains): every order in
scope is at most 10^6 and materialization keeps isomorphism testing,
conjugacy classes and subgroup enumeration straightforward.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

DEFAULT_ORDER_CAP = 10**6


class ClosureCapExceeded(ValueError):
    """Raised when a generated group would exceed the configured order cap."""


class NotStableError(ValueError):
    """Raised when a point set is not stable under a group action."""


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images}")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (a * b)(x) = a(b(x)): right factor acts first.
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        a, b = self.images, other.images
        return Permutation(tuple(a[b[i] - 1] for i in range(len(a))))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def order(self) -> int:
        n = 1
        p = self
        e = identity(self.degree)
        while p != e:
            p = p * self
            n += 1
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, fixed points omitted, each cycle from its minimum."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Perm(id[{self.degree}])"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def identity(degree: int) -> Permutation:
    return Permutation(range(1, degree + 1))


def from_cycles(degree: int, cycles: Iterable[Iterable[int]]) -> Permutation:
    images = list(range(1, degree + 1))
    for cyc in cycles:
        cyc = list(cyc)
        for i, j in zip(cyc, cyc[1:] + cyc[:1]):
            images[i - 1] = j
    return Permutation(images)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation like ``(1 2 3)(4 5)``; commas also accepted."""
    text = text.strip()
    if text in ("()", "id", ""):
        return identity(degree)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for part in text[1:-1].split(")("):
        pts = [int(tok) for tok in part.replace(",", " ").split()]
        if len(pts) != len(set(pts)):
            raise ValueError(f"repeated point in cycle: {part!r}")
        cycles.append(pts)
    return from_cycles(degree, cycles)


def mulclose(generators: Sequence[Permutation], cap: int = DEFAULT_ORDER_CAP) -> frozenset:
    """Breadth-first closure of a generator set under composition."""
    gens = list(generators)
    els = {identity(gens[0].degree)}
    els.update(gens)
    frontier = list(els)
    while frontier:
        new = []
        for b in frontier:
            for a in gens:
                c = a * b
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if len(els) > cap:
                        raise ClosureCapExceeded(
                            f"group too large: closure exceeds cap {cap}"
                        )
        frontier = new
    return frozenset(els)


class PermGroup:
    """A finitely generated permutation group with materialized element set."""

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 name: Optional[str] = None, cap: int = DEFAULT_ORDER_CAP):
        if not generators:
            generators = [identity(degree)]
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        self.name = name
        self._cap = cap
        self._elements: Optional[frozenset] = None
        self._sorted: Optional[tuple] = None
        self._table: Optional[list] = None
        self._index: Optional[dict] = None

    # -- materialization ---------------------------------------------------

    @property
    def elements(self) -> frozenset:
        if self._elements is None:
            self._elements = mulclose(self.generators, self._cap)
        return self._elements

    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order()

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def sorted_elements(self) -> tuple:
        """Elements in lexicographic image order (canonical enumeration)."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements))
        return self._sorted

    def identity(self) -> Permutation:
        return identity(self.degree)

    def __repr__(self) -> str:
        label = self.name or f"degree {self.degree}"
        if self._elements is not None:
            return f"PermGroup({label}, order {len(self._elements)})"
        return f"PermGroup({label}, {len(self.generators)} generators)"

    # -- Cayley table (index arithmetic for subgroup work) -----------------

    def _ensure_table(self) -> None:
        if self._table is not None:
            return
        els = self.sorted_elements()
        index = {g: i for i, g in enumerate(els)}
        n = len(els)
        table = [[0] * n for _ in range(n)]
        for i, a in enumerate(els):
            ai = a.images
            row = table[i]
            for j, b in enumerate(els):
                row[j] = index[Permutation(tuple(ai[k - 1] for k in b.images))]
        self._table = table
        self._index = index

    def cayley(self) -> tuple[list, dict]:
        self._ensure_table()
        return self._table, self._index

    # -- structural queries -------------------------------------------------

    def element_orders(self) -> dict[Permutation, int]:
        return {g: g.order() for g in self.sorted_elements()}

    def orbit(self, point: int) -> frozenset:
        seen = {point}
        frontier = [point]
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = g(x)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return frozenset(seen)

    def subgroup(self, gens: Sequence[Permutation], name: Optional[str] = None) -> "PermGroup":
        for g in gens:
            if g not in self.elements:
                raise ValueError("generator not in the group")
        return PermGroup(self.degree, list(gens) or [self.identity()], name=name)


@dataclass(frozen=True)
class ConjugacyClassPartition:
    """Conjugacy classes of a materialized group, canonically ordered."""

    group: PermGroup
    classes: tuple  # tuple of frozensets
    representatives: tuple  # minimal element of each class

    def class_of(self, g: Permutation) -> int:
        for i, cls in enumerate(self.classes):
            if g in cls:
                return i
        raise ValueError("element not in group")


def closure(generators: Sequence[Permutation], cap: int = DEFAULT_ORDER_CAP,
            name: Optional[str] = None) -> PermGroup:
    """Group generated by the given permutations, fully materialized."""
    if not generators:
        raise ValueError("need at least one generator (or an identity)")
    degrees = {g.degree for g in generators}
    if len(degrees) != 1:
        raise ValueError(f"generators of mixed degree: {sorted(degrees)}")
    G = PermGroup(degrees.pop(), generators, name=name, cap=cap)
    G.elements  # force materialization so the cap is enforced eagerly
    return G


def order_histogram(G: PermGroup) -> dict[int, int]:
    """Map from element order to the number of elements of that order."""
    hist: dict[int, int] = {}
    for g in G.elements:
        n = g.order()
        hist[n] = hist.get(n, 0) + 1
    return dict(sorted(hist.items()))


def conjugacy_classes(G: PermGroup) -> ConjugacyClassPartition:
    """Partition of G into conjugacy classes, ordered by (size, min element)."""
    remaining = set(G.elements)
    classes = []
    els = G.sorted_elements()
    while remaining:
        g = min(remaining)
        orbit = {g}
        frontier = [g]
        while frontier:
            new = []
            for x in frontier:
                for h in G.generators:
                    y = h * x * h.inverse()
                    if y not in orbit:
                        orbit.add(y)
                        new.append(y)
            frontier = new
        remaining -= orbit
        classes.append(frozenset(orbit))
    classes.sort(key=lambda c: (len(c), min(c)))
    reps = tuple(min(c) for c in classes)
    return ConjugacyClassPartition(G, tuple(classes), reps)


def sylow(G: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup of G.

    Greedy: extend a p-subgroup by any p-power-order element keeping the
    closure a p-group.  A p-subgroup with no such extension is maximal and
    hence Sylow.
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    target = _p_part(G.order(), p)
    p_elements = [g for g in G.sorted_elements()
                  if g.order() > 1 and _is_p_power(g.order(), p)]
    gens: list[Permutation] = []
    sub_set: frozenset = frozenset([G.identity()])
    while len(sub_set) < target:
        for g in p_elements:
            if g in sub_set:
                continue
            try:
                new_set = mulclose(gens + [g], cap=target)
            except ClosureCapExceeded:
                continue
            if _is_p_power(len(new_set), p):
                gens.append(g)
                sub_set = new_set
                break
        else:
            raise RuntimeError("no extension found below the Sylow order")
    return PermGroup(G.degree, gens or [G.identity()],
                     name=f"sylow_{p}({G.name})" if G.name else None)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def orbit_lengths(G: PermGroup, domain: Iterable[int]) -> list[int]:
    """Multiset (sorted list) of orbit lengths of G on a stable point set."""
    domain = set(domain)
    if not domain <= set(range(1, G.degree + 1)):
        raise ValueError("domain not contained in 1..degree")
    for g in G.generators:
        for x in domain:
            if g(x) not in domain:
                raise NotStableError(
                    f"domain not stable: generator {g!r} moves {x} to {g(x)}"
                )
    lengths = []
    remaining = set(domain)
    while remaining:
        x = min(remaining)
        orb = {x}
        frontier = [x]
        while frontier:
            new = []
            for y in frontier:
                for g in G.generators:
                    z = g(y)
                    if z not in orb:
                        orb.add(z)
                        new.append(z)
            frontier = new
        remaining -= orb
        lengths.append(len(orb))
    return sorted(lengths)


# ---------------------------------------------------------------------------
# Invariant fingerprints and isomorphism testing
# ---------------------------------------------------------------------------

ISO_ORDER_CAP = 400
EMBED_ORDER_CAP = 10**4


def center(G: PermGroup) -> list[Permutation]:
    els = G.sorted_elements()
    return [z for z in els if all(z * g == g * z for g in G.generators)]


def derived_subgroup(G: PermGroup) -> PermGroup:
    comms = set()
    els = G.sorted_elements()
    for a in els:
        ai = a.inverse()
        for b in G.generators:
            comms.add(a * b * ai * b.inverse())
    return PermGroup(G.degree, sorted(comms))


def abelianization_orders(G: PermGroup) -> tuple[tuple[int, int], ...]:
    """Element-order histogram of G/[G,G] (determines the abelianization)."""
    der = derived_subgroup(G).elements
    rep_of: dict[Permutation, Permutation] = {}
    for g in G.sorted_elements():
        if g in rep_of:
            continue
        coset = {g * d for d in der}
        m = min(coset)
        for x in coset:
            rep_of[x] = m
    hist: dict[int, int] = {}
    for r in sorted(set(rep_of.values())):
        k = 1
        x = r
        while x not in der:
            x = x * r
            k += 1
        hist[k] = hist.get(k, 0) + 1
    return tuple(sorted(hist.items()))


def fingerprint(G: PermGroup) -> tuple:
    """Cheap isomorphism invariants used to screen before exact search."""
    hist = tuple(sorted(order_histogram(G).items()))
    ccl = conjugacy_classes(G)
    sizes = tuple(sorted(len(c) for c in ccl.classes))
    return (G.order(), hist, len(center(G)), derived_subgroup(G).order(),
            abelianization_orders(G), sizes)


def _generating_sequence(G: PermGroup) -> list[Permutation]:
    """A short generating sequence, chosen canonically."""
    els = [g for g in G.sorted_elements()]
    els.sort(key=lambda g: (-g.order(), g.images))
    gens: list[Permutation] = []
    current: frozenset = frozenset([G.identity()])
    for g in els:
        if len(current) == G.order():
            break
        if g in current:
            continue
        gens.append(g)
        current = mulclose(gens, cap=G.order())
    return gens


def _extend_hom(gens_g: list[Permutation], imgs: list[Permutation],
                limit: int) -> Optional[dict]:
    """Grow the partial map gens->imgs to a homomorphism on the closure.

    Returns the hom as a dict, or None if the map is inconsistent or the
    image-side closure would exceed ``limit`` products of group order.
    """
    e_g = identity(gens_g[0].degree)
    e_h = identity(imgs[0].degree)
    hom = {e_g: e_h}
    for a, b in zip(gens_g, imgs):
        if a in hom and hom[a] != b:
            return None
        hom[a] = b
    frontier = list(hom.keys())
    while frontier:
        new = []
        for x in frontier:
            for a, b in zip(gens_g, imgs):
                y = a * x
                img = b * hom[x]
                if y in hom:
                    if hom[y] != img:
                        return None
                else:
                    if len(hom) >= limit:
                        return None
                    hom[y] = img
                    new.append(y)
        frontier = new
    return hom


def isomorphic(G: PermGroup, H: PermGroup) -> bool:
    """Exact isomorphism test for groups of order at most 400."""
    if G.order() > ISO_ORDER_CAP or H.order() > ISO_ORDER_CAP:
        raise ValueError(f"isomorphism test capped at order {ISO_ORDER_CAP}")
    if G.order() != H.order():
        return False
    if fingerprint(G) != fingerprint(H):
        return False
    gens = _generating_sequence(G)
    if not gens:
        return True
    orders = [g.order() for g in gens]
    by_order: dict[int, list[Permutation]] = {}
    for h in H.sorted_elements():
        by_order.setdefault(h.order(), []).append(h)

    n = G.order()

    def dfs(i: int, imgs: list[Permutation]) -> bool:
        if i == len(gens):
            hom = _extend_hom(gens, imgs, limit=n + 1)
            if hom is None or len(hom) != n:
                return False
            return len(set(hom.values())) == n
        for cand in by_order.get(orders[i], []):
            imgs.append(cand)
            # quick partial consistency: the partial closure must not conflict
            if _extend_hom(gens[: i + 1], imgs, limit=n + 1) is not None:
                if dfs(i + 1, imgs):
                    imgs.pop()
                    return True
            imgs.pop()
        return False

    return dfs(0, [])


def embeds_up_to_iso(G: PermGroup, H: PermGroup) -> bool:
    """Whether H has a subgroup isomorphic to G (|H| capped at 10^4)."""
    if H.order() > EMBED_ORDER_CAP:
        raise ValueError(f"embedding search capped at target order {EMBED_ORDER_CAP}")
    if H.order() % G.order() != 0:
        return False
    if G.order() == 1:
        return True
    if H.order() <= 1000:
        for K in subgroup_classes(H):
            if K.order() == G.order() and isomorphic(G, K):
                return True
        return False
    gens = _generating_sequence(G)
    orders = [g.order() for g in gens]
    by_order: dict[int, list[Permutation]] = {}
    for h in H.sorted_elements():
        by_order.setdefault(h.order(), []).append(h)
    n = G.order()

    def dfs(i: int, imgs: list[Permutation]) -> bool:
        if i == len(gens):
            hom = _extend_hom(gens, imgs, limit=n + 1)
            return hom is not None and len(set(hom.values())) == n
        for cand in by_order.get(orders[i], []):
            imgs.append(cand)
            if _extend_hom(gens[: i + 1], imgs, limit=n + 1) is not None:
                if dfs(i + 1, imgs):
                    imgs.pop()
                    return True
            imgs.pop()
        return False

    return dfs(0, [])


# ---------------------------------------------------------------------------
# Subgroup enumeration (up to conjugacy), Cayley-table backed
# ---------------------------------------------------------------------------

_subgroup_cache: dict[int, list] = {}


def subgroup_classes(G: PermGroup) -> list[PermGroup]:
    """Representatives of all subgroups of G up to conjugacy in G.

    Breadth-first over the subgroup lattice: every subgroup arises from a
    smaller one by adjoining a single element, and conjugate subgroups are
    identified through their G-orbit.  Only sensible for |G| <= ~1000.
    """
    key = id(G)
    if key in _subgroup_cache:
        return _subgroup_cache[key]
    table, index = G.cayley()
    els = G.sorted_elements()
    n = len(els)
    e = index[G.identity()]
    inv = [0] * n
    for i in range(n):
        row = table[i]
        for j in range(n):
            if row[j] == e:
                inv[i] = j
                break
    gen_idx = [index[g] for g in G.generators]

    def close_idx(gens_i: list[int]) -> frozenset:
        seen = {e}
        seen.update(gens_i)
        frontier = list(seen)
        while frontier:
            new = []
            for x in frontier:
                for a in gens_i:
                    y = table[a][x]
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return frozenset(seen)

    def conj(sub: frozenset, gi: int) -> frozenset:
        gi_inv = inv[gi]
        row = table[gi]
        return frozenset(row[table[x][gi_inv]] for x in sub)

    seen_subs: set[frozenset] = set()
    reps: list[tuple[frozenset, list[int]]] = []

    def register(sub: frozenset, gens_i: list[int]) -> bool:
        if sub in seen_subs:
            return False
        orbit = {sub}
        frontier = [sub]
        while frontier:
            new = []
            for s in frontier:
                for gi in gen_idx:
                    t = conj(s, gi)
                    if t not in orbit:
                        orbit.add(t)
                        new.append(t)
            frontier = new
        seen_subs.update(orbit)
        reps.append((sub, gens_i))
        return True

    trivial = frozenset([e])
    register(trivial, [])
    queue: list[tuple[frozenset, list[int]]] = [(trivial, [])]
    while queue:
        sub, gens_i = queue.pop()
        covered: set[int] = set(sub)
        for g in range(n):
            if g in covered:
                continue
            new_gens = gens_i + [g]
            new_sub = close_idx(new_gens)
            covered |= {table[g][x] for x in sub}  # rest of coset gives same closure
            if register(new_sub, new_gens):
                queue.append((new_sub, new_gens))

    out = []
    for sub, _ in sorted(reps, key=lambda s: (len(s[0]), sorted(s[0]))):
        perms = sorted(els[i] for i in sub)
        out.append(PermGroup(G.degree, perms))
    _subgroup_cache[key] = out
    return out
