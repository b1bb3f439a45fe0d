"""Catalog of named finite groups and the degree-24 orbit geometry of S6.

Family groups (cyclic, dihedral, quaternion, symmetric, alternating and the
direct/semidirect products in scope) are built from explicit formulas;
M11, M12 and H192 come from the fixture file and are validated at load
time by order checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Optional

from . import perm
from .perm import PermGroup, Permutation, closure, from_cycles, parse_cycles


class UnknownGroupError(KeyError):
    """Lookup of a group label that is not in the catalog."""


# ---------------------------------------------------------------------------
# family constructors
# ---------------------------------------------------------------------------

def cyclic(n: int) -> PermGroup:
    if n == 1:
        return closure([perm.identity(1)], name="C1")
    return closure([from_cycles(n, [range(1, n + 1)])], name=f"C{n}")


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given (even, >= 4) order, on order/2 points."""
    if order % 2 or order < 4:
        raise ValueError("dihedral order must be even and at least 4")
    n = order // 2
    if n == 2:
        return closure([parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)], name="D4")
    rot = from_cycles(n, [range(1, n + 1)])
    refl = Permutation([((n - i) % n) + 1 for i in range(n)])  # i+1 -> n-i+1 mod n
    return closure([rot, refl], name=f"D{order}")


def quaternion(order: int) -> PermGroup:
    """Generalized quaternion group Q_{4n}, acting on 4n points."""
    if order % 4 or order < 8:
        raise ValueError("generalized quaternion order must be 4n, n >= 2")
    n2 = order // 2  # 2n
    # points: P_k = 1+k, N_k = 1+2n+k (k mod 2n)
    g = Permutation([1 + ((k + 1) % n2) for k in range(n2)]
                    + [1 + n2 + ((k - 1) % n2) for k in range(n2)])
    h = Permutation([1 + n2 + ((k + n2 // 2) % n2) for k in range(n2)]
                    + [1 + k for k in range(n2)])
    return closure([g, h], name=f"Q{order}")


def symmetric(n: int) -> PermGroup:
    if n == 1:
        return closure([perm.identity(1)], name="S1")
    gens = [parse_cycles("(1 2)", n)]
    if n > 2:
        gens.append(from_cycles(n, [range(1, n + 1)]))
    return closure(gens, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n <= 2:
        return closure([perm.identity(max(n, 1))], name=f"A{n}")
    if n == 3:
        return closure([parse_cycles("(1 2 3)", 3)], name="A3")
    gens = [parse_cycles("(1 2 3)", n)]
    if n % 2:
        gens.append(from_cycles(n, [range(1, n + 1)]))
    else:
        gens.append(from_cycles(n, [range(2, n + 1)]))
    return closure(gens, name=f"A{n}")


def _product_on_disjoint_points(blocks: list[list[str]], degrees: list[int],
                                name: str) -> PermGroup:
    """Direct product from per-factor generator strings on shifted points."""
    total = sum(degrees)
    gens = []
    offset = 0
    for block, deg in zip(blocks, degrees):
        for text in block:
            p = parse_cycles(text, deg)
            images = list(range(1, total + 1))
            for i in range(deg):
                images[offset + i] = p.images[i] + offset
            gens.append(Permutation(images))
        offset += deg
    return closure(gens, name=name)


def hol_c5() -> PermGroup:
    # x -> x+1 and x -> 2x on residues mod 5 (point i+1 <-> residue i)
    add = from_cycles(5, [[1, 2, 3, 4, 5]])
    mul = Permutation([2 * i % 5 + 1 for i in range(5)])
    return closure([add, mul], name="Hol(C5)")


def c3c3_semi_c4() -> PermGroup:
    """C3^2 : C4 with the order-4 element acting freely, on the 9-point plane."""
    def idx(a: int, b: int) -> int:
        return 1 + 3 * (a % 3) + (b % 3)
    t1 = Permutation([idx(a + 1, b) for a in range(3) for b in range(3)])
    t2 = Permutation([idx(a, b + 1) for a in range(3) for b in range(3)])
    rot = Permutation([idx(-b, a) for a in range(3) for b in range(3)])
    return closure([t1, t2, rot], name="C3^2:C4")


_SPECIAL: dict[str, Callable[[], PermGroup]] = {
    "A3,3": lambda: closure([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6),
                             parse_cycles("(1 2)(4 5)", 6)], name="A3,3"),
    "S3,3": lambda: closure([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6),
                             parse_cycles("(1 2)", 6), parse_cycles("(4 5)", 6)],
                            name="S3,3"),
    "Hol(C5)": hol_c5,
    "C3^2:C4": c3c3_semi_c4,
    "N72": lambda: closure([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6),
                            parse_cycles("(1 2)", 6),
                            parse_cycles("(1 4)(2 5)(3 6)", 6)], name="N72"),
    "C2xD8": lambda: _product_on_disjoint_points(
        [["(1 2)"], ["(1 2 3 4)", "(1 3)"]], [2, 4], "C2xD8"),
    "C2xA4": lambda: _product_on_disjoint_points(
        [["(1 2)"], ["(1 2 3)", "(1 2)(3 4)"]], [2, 4], "C2xA4"),
    "C2xC4": lambda: _product_on_disjoint_points(
        [["(1 2)"], ["(1 2 3 4)"]], [2, 4], "C2xC4"),
    "C3xS3": lambda: _product_on_disjoint_points(
        [["(1 2 3)"], ["(1 2 3)", "(1 2)"]], [3, 3], "C3xS3"),
    "C2^2": lambda: _product_on_disjoint_points([["(1 2)"], ["(1 2)"]], [2, 2], "C2^2"),
    "C2^3": lambda: _product_on_disjoint_points(
        [["(1 2)"], ["(1 2)"], ["(1 2)"]], [2, 2, 2], "C2^3"),
    "C2^4": lambda: _product_on_disjoint_points(
        [["(1 2)"], ["(1 2)"], ["(1 2)"], ["(1 2)"]], [2, 2, 2, 2], "C2^4"),
    "C3^2": lambda: _product_on_disjoint_points(
        [["(1 2 3)"], ["(1 2 3)"]], [3, 3], "C3^2"),
    "C2xC3^2": lambda: _product_on_disjoint_points(
        [["(1 2)"], ["(1 2 3)"], ["(1 2 3)"]], [2, 3, 3], "C2xC3^2"),
    "C2^2xC3": lambda: _product_on_disjoint_points(
        [["(1 2)"], ["(1 2)"], ["(1 2 3)"]], [2, 2, 3], "C2^2xC3"),
    "C8xC2": lambda: _product_on_disjoint_points(
        [["(1 2 3 4 5 6 7 8)"], ["(1 2)"]], [8, 2], "C8xC2"),
    "C4xC4": lambda: _product_on_disjoint_points(
        [["(1 2 3 4)"], ["(1 2 3 4)"]], [4, 4], "C4xC4"),
    "C4xC2^2": lambda: _product_on_disjoint_points(
        [["(1 2 3 4)"], ["(1 2)"], ["(1 2)"]], [4, 2, 2], "C4xC2^2"),
}

_EXPECTED_ORDERS = {
    "A3,3": 18, "S3,3": 36, "Hol(C5)": 20, "C3^2:C4": 36, "N72": 72,
    "C2xD8": 16, "C2xA4": 24, "C2xC4": 8, "C3xS3": 18,
    "C2^2": 4, "C2^3": 8, "C2^4": 16, "C3^2": 9, "C2xC3^2": 18,
    "C2^2xC3": 12, "C8xC2": 16, "C4xC4": 16, "C4xC2^2": 16,
}

_ALIASES = {
    "S3": "D6",  # same group under two names; D6 is the catalog label
    "HolC5": "Hol(C5)",
    "F20": "Hol(C5)",
}


# ---------------------------------------------------------------------------
# fixture-backed groups
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _fixture_groups() -> dict[str, PermGroup]:
    text = resources.files("enriques.fixtures").joinpath("groups.txt").read_text()
    groups: dict[str, PermGroup] = {}
    name = None
    degree = None
    gens: list[Permutation] = []
    expected = None

    def flush():
        if name is None:
            return
        G = PermGroup(degree, gens, name=name)
        if expected is not None and G.order() != expected:
            raise ValueError(f"fixture group {name}: order {G.order()} != {expected}")
        groups[name] = G

    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(" ")
        value = value.strip()
        if key == "name":
            flush()
            name, degree, gens, expected = value, None, [], None
        elif key == "degree":
            degree = int(value)
        elif key == "gen":
            gens.append(parse_cycles(value, degree))
        elif key == "order":
            expected = int(value)
        else:
            raise ValueError(f"bad fixture line: {raw!r}")
    flush()
    return groups


# ---------------------------------------------------------------------------
# catalog lookup
# ---------------------------------------------------------------------------

CLASSIFIED_NONSOLVABLE = ("A5", "S5", "A6")
CLASSIFIED_NILPOTENT = ("C2", "C3", "C4", "C5", "C6", "C2^2", "C3^2", "C2^3",
                        "C2xC4", "D8")
CLASSIFIED_SOLVABLE = ("D6", "D10", "D12", "A4", "A3,3", "C3xS3", "Hol(C5)",
                       "C2xA4", "S4", "C3^2:C4", "S3,3", "N72")
CLASSIFIED_25 = CLASSIFIED_NONSOLVABLE + CLASSIFIED_NILPOTENT + CLASSIFIED_SOLVABLE
MAXIMAL_FIVE = ("A6", "S5", "N72", "C2xA4", "C2xC4")

_AUXILIARY = ("C1", "C7", "C8", "C16", "Q8", "Q12", "Q16", "S3", "S6",
              "C2^4", "C2xC3^2", "C2^2xC3", "C8xC2", "C4xC4", "C4xC2^2",
              "C2xD8", "M11", "M12", "H192")


def catalog_names() -> list[str]:
    """All canonical catalog labels, classification groups first."""
    names = list(CLASSIFIED_25)
    for extra in _AUXILIARY:
        canon = _ALIASES.get(extra, extra)
        if canon not in names:
            names.append(canon)
    return names


@lru_cache(maxsize=None)
def catalog(name: str) -> PermGroup:
    """A faithful permutation representation of the named group."""
    canon = _ALIASES.get(name, name)
    if canon in _SPECIAL:
        G = _SPECIAL[canon]()
        if G.order() != _EXPECTED_ORDERS[canon]:
            raise ValueError(f"catalog {canon}: order {G.order()}"
                             f" != {_EXPECTED_ORDERS[canon]}")
        return G
    if canon in ("M11", "M12", "H192"):
        return _fixture_groups()[canon]
    if canon.startswith("C") and canon[1:].isdigit():
        return cyclic(int(canon[1:]))
    if canon.startswith("D") and canon[1:].isdigit():
        return dihedral(int(canon[1:]))
    if canon.startswith("Q") and canon[1:].isdigit():
        return quaternion(int(canon[1:]))
    if canon.startswith("S") and canon[1:].isdigit():
        return symmetric(int(canon[1:]))
    if canon.startswith("A") and canon[1:].isdigit():
        return alternating(int(canon[1:]))
    raise UnknownGroupError(
        f"unknown group {name!r}; valid names include: {', '.join(catalog_names())}")


# ---------------------------------------------------------------------------
# S6 on 24 points: parity pair + triple partitions + natural + twisted hexad
# ---------------------------------------------------------------------------

def _k6_edges() -> list[frozenset]:
    return [frozenset(e) for e in itertools.combinations(range(1, 7), 2)]


def _perfect_matchings() -> list[frozenset]:
    edges = _k6_edges()
    out = []
    for triple in itertools.combinations(edges, 3):
        if len(frozenset().union(*triple)) == 6:
            out.append(frozenset(triple))
    return out


def _one_factorizations() -> list[frozenset]:
    """Partitions of the 15 edges of K6 into 5 perfect matchings."""
    matchings = _perfect_matchings()
    edges = _k6_edges()
    out = []

    def rec(chosen: list[frozenset], used: set) -> None:
        if len(chosen) == 5:
            out.append(frozenset(chosen))
            return
        # branch on the first unused edge for canonical search order
        pivot = next(e for e in edges if e not in used)
        for m in matchings:
            if pivot in m and not (used & m):
                rec(chosen + [m], used | set(m))

    rec([], set())
    return sorted(out, key=lambda f: sorted(sorted(sorted(e) for e in m) for m in f))


def _partitions33() -> list[frozenset]:
    """The 10 partitions of {1..6} into two unordered triples."""
    out = []
    for triple in itertools.combinations(range(1, 7), 3):
        if 1 in triple:
            rest = frozenset(range(1, 7)) - frozenset(triple)
            out.append(frozenset([frozenset(triple), rest]))
    return sorted(out, key=lambda p: sorted(sorted(t) for t in p))


def _sign(images6: tuple) -> int:
    s = 1
    seen = [False] * 6
    for i in range(6):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = images6[j] - 1
            length += 1
        if length % 2 == 0:
            s = -s
    return s


@dataclass(frozen=True)
class MathieuEmbeddings:
    """S6 acting on 24 points, with the three stabilizer subgroups.

    Point ranges: 1-2 parity pair, 3-12 triple partitions, 13-18 natural
    hexad, 19-24 twisted hexad (one-factorizations of K6).  The union of
    the two hexads and the union of parity pair plus partitions are the two
    complementary dodecads; each stabilizer group fixes its star point
    inside its own dodecad.
    """

    s6: PermGroup
    g6: PermGroup    # point stabilizer, iso S5
    g9: PermGroup    # triple-partition stabilizer, iso N72
    g10: PermGroup   # parity kernel, iso A6
    dodecad_hex: tuple     # points 13..24
    dodecad_pp: tuple      # points 1..12
    star6: int
    star9: int
    star10: int


@lru_cache(maxsize=1)
def mathieu_embeddings() -> MathieuEmbeddings:
    partitions = _partitions33()
    factorizations = _one_factorizations()
    if len(factorizations) != 6:
        raise RuntimeError(f"expected 6 one-factorizations, got {len(factorizations)}")
    part_index = {p: 3 + i for i, p in enumerate(partitions)}
    fact_index = {f: 19 + i for i, f in enumerate(factorizations)}

    def lift(images6: tuple) -> Permutation:
        img = [0] * 24
        swap = _sign(images6) < 0
        img[0], img[1] = (2, 1) if swap else (1, 2)
        for p in partitions:
            q = frozenset(frozenset(images6[x - 1] for x in t) for t in p)
            img[part_index[p] - 1] = part_index[q]
        for x in range(1, 7):
            img[12 + x - 1] = 12 + images6[x - 1]
        for f in factorizations:
            g = frozenset(
                frozenset(frozenset(images6[x - 1] for x in e) for e in m)
                for m in f)
            img[fact_index[f] - 1] = fact_index[g]
        return Permutation(img)

    def lift_cycles(text: str) -> Permutation:
        return lift(parse_cycles(text, 6).images)

    s6 = closure([lift_cycles("(1 2)"), lift_cycles("(1 2 3 4 5 6)")], name="S6@24")
    g6 = closure([lift_cycles("(2 3 4 5 6)"), lift_cycles("(2 3)")], name="G(6)")
    g9 = closure([lift_cycles("(1 2 3)"), lift_cycles("(4 5 6)"),
                  lift_cycles("(1 2)"), lift_cycles("(1 4)(2 5)(3 6)")], name="G(9)")
    g10 = closure([lift_cycles("(1 2 3)"), lift_cycles("(2 3 4 5 6)")], name="G(10)")
    if (s6.order(), g6.order(), g9.order(), g10.order()) != (720, 120, 72, 360):
        raise RuntimeError("orbit geometry group orders are wrong")

    star9 = part_index[frozenset([frozenset({1, 2, 3}), frozenset({4, 5, 6})])]
    return MathieuEmbeddings(
        s6=s6, g6=g6, g9=g9, g10=g10,
        dodecad_hex=tuple(range(13, 25)),
        dodecad_pp=tuple(range(1, 13)),
        star6=13,
        star9=star9,
        star10=1,
    )


def embedding_orbit_data() -> dict[str, dict[str, list[int]]]:
    """Orbit lengths of the three groups on their dodecads (minus star) ."""
    emb = mathieu_embeddings()
    out = {}
    for label, G, star, own, other in (
        ("S5", emb.g6, emb.star6, emb.dodecad_hex, emb.dodecad_pp),
        ("N72", emb.g9, emb.star9, emb.dodecad_pp, emb.dodecad_hex),
        ("A6", emb.g10, emb.star10, emb.dodecad_pp, emb.dodecad_hex),
    ):
        own_rest = [x for x in own if x != star]
        out[label] = {
            "own_dodecad_minus_star": perm.orbit_lengths(G, own_rest),
            "complementary_dodecad": perm.orbit_lengths(G, other),
        }
    return out
