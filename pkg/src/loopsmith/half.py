"""Half-automorphisms of finite loops and the subgroup H of a Chein loop.

``H`` is the set of half-automorphisms of M(G, 2) fixing G pointwise and
fixing u. Such a map sends every gu to gu or g^-1 u, and can only move gu
when g has order 4, so it is enumerated as a sign choice on the order-4
elements and then checked against the full definition.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import numpy as np

from . import _search
from .chein import CheinEmbedding
from .errors import AbelianInput, MappingNotInH, NotHalfAutomorphism, OrderBoundExceeded
from .groups import FiniteGroup, center, is_elementary_abelian_2
from .loops import (
    Check,
    FiniteLoop,
    Mapping,
    compose,
    identity_map,
    inversion_mapping,
    is_associative,
    is_bijection,
    is_closed,
)

ENUMERATION_BOUND = 32
PLAIN_H_LIMIT = 20


class Kind(str, enum.Enum):
    AUTOMORPHISM = "automorphism"
    ANTI_AUTOMORPHISM = "anti_automorphism"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class ClassifiedMapping:
    mapping: Mapping
    kind: Kind

    @property
    def trivial(self) -> bool:
        return self.kind is not Kind.NONTRIVIAL


@dataclass(frozen=True, eq=False)
class HalfGroup:
    carrier: FiniteLoop
    elements: tuple
    provenance: str = "brute-force"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, f) -> bool:
        return tuple(f) in self._set

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.elements)

    @cached_property
    def kinds(self) -> tuple:
        return tuple(kind_of(self.carrier, f) for f in self.elements)

    def of_kind(self, *kinds: Kind) -> list:
        return [f for f, k in zip(self.elements, self.kinds) if k in kinds]

    @property
    def trivial(self) -> list:
        return self.of_kind(Kind.AUTOMORPHISM, Kind.ANTI_AUTOMORPHISM)

    def summary(self) -> dict:
        counts = {k: 0 for k in Kind}
        for k in self.kinds:
            counts[k] += 1
        return {
            "total": len(self),
            "automorphisms": counts[Kind.AUTOMORPHISM],
            "anti_automorphisms": counts[Kind.ANTI_AUTOMORPHISM],
            "nontrivial": counts[Kind.NONTRIVIAL],
        }

    def to_json(self) -> dict:
        return {
            "mappings": [{"images": list(f)} for f in self.elements],
            "summary": self.summary(),
        }


@dataclass(frozen=True)
class GammaSet:
    phi: Mapping
    members: tuple = field(default=())

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self):
        return len(self.members)


# -- predicates --------------------------------------------------------------

def _product_tables(L: FiniteLoop, f):
    f = np.asarray(f)
    T = L.table
    return f[T], T[np.ix_(f, f)]


def is_half_automorphism(L: FiniteLoop, f: Mapping) -> Check:
    """f(xy) ∈ {f(x)f(y), f(y)f(x)} for every pair; witness is the first bad (x, y)."""
    if not is_bijection(f, L.order):
        return Check(False, ("not a bijection",))
    lhs, fwd = _product_tables(L, f)
    bad = np.argwhere((lhs != fwd) & (lhs != fwd.T))
    if len(bad):
        return Check(False, tuple(int(v) for v in bad[0]))
    return Check(True)


def kind_of(L: FiniteLoop, f: Mapping) -> Optional[Kind]:
    """Trichotomy for a half-automorphism; None if ``f`` is not one."""
    if not is_bijection(f, L.order):
        return None
    lhs, fwd = _product_tables(L, f)
    if (lhs == fwd).all():
        return Kind.AUTOMORPHISM
    if (lhs == fwd.T).all():
        return Kind.ANTI_AUTOMORPHISM
    if ((lhs == fwd) | (lhs == fwd.T)).all():
        return Kind.NONTRIVIAL
    return None


def classify(L: FiniteLoop, f: Mapping) -> ClassifiedMapping:
    if not is_bijection(f, L.order):
        raise NotHalfAutomorphism("mapping is not a bijection")
    kind = kind_of(L, f)
    if kind is None:
        raise NotHalfAutomorphism(f"violated at pair {is_half_automorphism(L, f).witness}")
    return ClassifiedMapping(tuple(f), kind)


# -- enumeration -------------------------------------------------------------

def _check_bound(L: FiniteLoop, bound: int):
    if L.order > bound:
        raise OrderBoundExceeded(f"enumeration bounded at loop order {bound}, got {L.order}")


def enumerate_automorphisms(L: FiniteLoop, bound: int = ENUMERATION_BOUND, parallel: int = 1) -> HalfGroup:
    _check_bound(L, bound)
    found = _search.search(L, L, half=False, parallel=parallel)
    return HalfGroup(L, tuple(found), "brute-force")


def enumerate_half_automorphisms(L: FiniteLoop, bound: int = ENUMERATION_BOUND, parallel: int = 1) -> HalfGroup:
    """Every half-automorphism of L by exhaustive constraint-propagating search."""
    _check_bound(L, bound)
    # orders are invariants only when powers of one element associate
    prune = L.is_power_associative
    found = _search.search(L, L, half=True, order_prune=prune, parallel=parallel)
    return HalfGroup(L, tuple(found), "brute-force")


# -- the subgroup H ----------------------------------------------------------

def _signed(E: CheinEmbedding, flipped) -> list:
    n, inv = E.n, E.group.inverses
    img = list(range(2 * n))
    for g in flipped:
        img[n + g] = n + inv[g]
    return img


def compute_H(E: CheinEmbedding) -> HalfGroup:
    G, L = E.group, E.loop
    order4 = [g for g in range(G.order) if G.element_orders[g] == 4]
    if len(order4) <= PLAIN_H_LIMIT:
        found = []
        for signs in itertools.product((False, True), repeat=len(order4)):
            img = _signed(E, [g for g, s in zip(order4, signs) if s])
            if is_bijection(img, L.order) and is_half_automorphism(L, img):
                found.append(tuple(img))
        provenance = "sign-enumeration"
    else:
        found = _H_backtrack(E, order4)
        provenance = "sign-backtracking"
    return HalfGroup(L, tuple(sorted(found)), provenance)


def _H_backtrack(E: CheinEmbedding, order4: list) -> list:
    # partial maps are checked on every triple (x, y, xy) whose images are all known
    L, n, inv = E.loop, E.n, E.group.inverses
    rows, ldiv, rdiv = L.rows, L.ldiv, L.rdiv
    img = [i if (i < n or (i - n) not in order4) else -1 for i in range(2 * n)]
    out: list = []

    def consistent(e):
        known = [d for d in range(2 * n) if img[d] >= 0]
        for d in known:
            for x, y in ((e, d), (d, e)):
                p = img[rows[x][y]]
                if p >= 0 and p not in (rows[img[x]][img[y]], rows[img[y]][img[x]]):
                    return False
            for x, y in ((d, ldiv[d][e]), (rdiv[d][e], d)):
                if img[x] >= 0 and img[y] >= 0 and img[e] not in (
                    rows[img[x]][img[y]], rows[img[y]][img[x]]
                ):
                    return False
        return True

    def rec(k, taken):
        if k == len(order4):
            out.append(tuple(img))
            return
        g = order4[k]
        for target in (n + g, n + inv[g]):
            if target in taken:
                continue
            img[n + g] = target
            if consistent(n + g):
                rec(k + 1, taken | {target})
            img[n + g] = -1

    taken = {v for v in img if v >= 0}
    rec(0, taken)
    return [f for f in out if is_half_automorphism(L, f)]


def _require_in_H(E: CheinEmbedding, phi: Mapping):
    n = E.n
    if len(phi) != 2 * n or any(phi[g] != g for g in range(n)) or phi[n] != n:
        raise MappingNotInH("mapping must fix G pointwise and fix u")
    if not is_half_automorphism(E.loop, phi):
        raise MappingNotInH("mapping is not a half-automorphism")


def gamma(E: CheinEmbedding, phi: Mapping) -> GammaSet:
    """Order-4 elements x with phi(xu) = x^-1 u."""
    _require_in_H(E, phi)
    G, n = E.group, E.n
    members = tuple(
        x for x in range(n) if G.element_orders[x] == 4 and phi[n + x] == n + G.inverses[x]
    )
    return GammaSet(tuple(phi), members)


def elementary_basis(elements, n: int) -> list:
    """Greedy independent generators of an elementary abelian 2-group of mappings."""
    span = {identity_map(n)}
    basis = []
    for f in sorted(elements):
        if f not in span:
            basis.append(f)
            span |= {compose(f, s) for s in span}
    return basis


# -- necessary conditions on G -----------------------------------------------

def theorem2_witness(G: FiniteGroup) -> Optional[int]:
    """Least x of order 4 with x^2 central and x^-1 g x = g^-1 whenever o(g) ∉ {2, 4}.

    None certifies that M(G, 2) has only trivial half-automorphisms.
    """
    if G.is_abelian:
        raise AbelianInput("the criterion applies to nonabelian groups only")
    rows, inv, orders = G.rows, G.inverses, G.element_orders
    Z = set(center(G).members)
    others = [g for g in range(G.order) if orders[g] not in (2, 4)]
    for x in range(G.order):
        if orders[x] != 4 or rows[x][x] not in Z:
            continue
        if all(rows[rows[inv[x]][g]][x] == inv[g] for g in others):
            return x
    return None


def corollary1_witness(G: FiniteGroup) -> Optional[int]:
    """Least y of order 4 such that every factorisation y = gh has o(g) = 4 or o(h) = 4."""
    rows, inv, orders = G.rows, G.inverses, G.element_orders
    for y in range(G.order):
        if orders[y] != 4:
            continue
        if all(orders[g] == 4 or orders[rows[inv[g]][y]] == 4 for g in range(G.order)):
            return y
    return None


# -- property suites ---------------------------------------------------------

def half_group_violations(L: FiniteLoop, half: HalfGroup, auts: Optional[HalfGroup] = None) -> dict:
    """Counterexamples to the invariants every half-automorphism group satisfies.

    Each value is a list of witnesses; empty lists mean the property holds.
    """
    T = L.table
    commute = T == T.T
    out = {
        "closed_under_composition": [] if is_closed(half.elements) else ["not closed"],
        "fixes_identity": [f for f in half if f[0] != 0],
        "commuting_preserved": [],
        "contains_inversion": [],
        "contains_automorphisms": [],
        "scott_trivial_on_groups": [],
        "abelian_only_automorphisms": [],
    }
    for f in half:
        a = np.asarray(f)
        bad = np.argwhere(commute & ~commute[np.ix_(a, a)])
        if len(bad):
            out["commuting_preserved"].append((f, tuple(int(v) for v in bad[0])))
    if L.two_sided_inverses is not None and inversion_mapping(L) not in half:
        out["contains_inversion"].append(inversion_mapping(L))
    if auts is not None:
        out["contains_automorphisms"] = [f for f in auts if f not in half]
    if is_associative(L):
        out["scott_trivial_on_groups"] = half.of_kind(Kind.NONTRIVIAL)
    if L.is_commutative:
        out["abelian_only_automorphisms"] = half.of_kind(Kind.ANTI_AUTOMORPHISM, Kind.NONTRIVIAL)
    return out


def h_violations(E: CheinEmbedding, H: HalfGroup) -> dict:
    """Counterexamples to the structural facts about H and the sets gamma_phi.

    Keys whose hypotheses fail (nonabelian G) map to None instead of a list.
    """
    G, L, n = E.group, E.loop, E.n
    rows, inv, orders = G.rows, G.inverses, G.element_orders
    Z = set(center(G).members)
    ident = identity_map(2 * n)
    out = {key: [] for key in (
        "exponent_two", "nonidentity_nontrivial", "coset_images", "order_not_4_fixed",
        "gamma_nonempty", "prop6a", "prop6b", "prop6c", "prop6d", "prop6e", "center_elementary",
    )}
    for phi in H:
        if compose(phi, phi) != ident:
            out["exponent_two"].append(phi)
        for g in range(n):
            if phi[n + g] not in (n + g, n + inv[g]):
                out["coset_images"].append((phi, g))
            if orders[g] != 4 and phi[n + g] != n + g:
                out["order_not_4_fixed"].append((phi, g))
        if phi == ident:
            continue
        if kind_of(L, phi) is not Kind.NONTRIVIAL:
            out["nonidentity_nontrivial"].append(phi)
        gam = set(gamma(E, phi).members)
        if not gam:
            out["gamma_nonempty"].append(phi)
        for x in gam:
            if inv[x] not in gam:
                out["prop6b"].append((phi, x))
            if rows[x][x] not in Z:
                out["prop6c"].append((phi, x))
            for g in range(n):
                if g in gam:
                    continue
                if phi[n + g] != n + g or rows[rows[inv[x]][g]][x] != inv[g] or orders[rows[x][g]] != 4:
                    out["prop6a"].append((phi, x, g))
        for g in range(n):
            if orders[g] == 4:
                continue
            if {rows[x][g] for x in gam} != gam or {rows[g][x] for x in gam} != gam:
                out["prop6d"].append((phi, g))
        outside = [g for g in range(n) if g not in gam]
        for g in outside:
            for h in outside:
                if rows[h][g] in gam and orders[g] != 4:
                    out["prop6e"].append((phi, g, h))
    if len(H) > 1 and not is_elementary_abelian_2(center(G))[0]:
        out["center_elementary"].append(tuple(sorted(Z)))
    if G.is_abelian:
        # the remaining facts assume a nonabelian G; M(G, 2) is then a group
        for key in out:
            if key not in ("exponent_two", "coset_images", "order_not_4_fixed"):
                out[key] = None
    return out
