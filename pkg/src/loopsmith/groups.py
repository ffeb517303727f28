"""Finite groups as Cayley tables.

:class:`FiniteGroup` is a :class:`~loopsmith.loops.FiniteLoop` whose table has
also passed the associativity check, so every loop predicate applies to it
unchanged. Element 0 is always the identity.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from . import _search
from .errors import (
    ClosureBoundExceeded,
    NotAssociative,
    OrderBoundExceeded,
    UnknownPreset,
)
from .loops import FiniteLoop, _as_table, _latin_and_identity, compose, identity_map, is_associative

ORDER_BOUND = 64
CLOSURE_BOUND = 512


@dataclass(frozen=True, eq=False)
class FiniteGroup(FiniteLoop):
    @cached_property
    def inverses(self) -> tuple:
        return self.two_sided_inverses

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, t: int, g: int) -> int:
        """t g t^-1."""
        return self.rows[self.rows[t][g]][self.inverses[t]]

    @property
    def is_abelian(self) -> bool:
        return self.is_commutative

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.element_orders)


@dataclass(frozen=True)
class SubgroupDescriptor:
    parent: FiniteGroup
    members: tuple

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g) -> bool:
        return g in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class GroupMapping:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple
    is_homomorphism: bool = False

    def __call__(self, g: int) -> int:
        return self.images[g]


def validate_group(table, names: Optional[Sequence[str]] = None) -> FiniteGroup:
    """Validate a group Cayley table, moving the identity to index 0 if needed.

    Raises NotLatinSquare, NoIdentity or NotAssociative; the exception's
    ``witness`` names the first violating row/column or triple.
    """
    arr, names = _latin_and_identity(_as_table(table), names)
    arr.setflags(write=False)
    G = FiniteGroup(arr, names)
    res = is_associative(G)
    if not res:
        i, j, k = res.witness
        raise NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})", res.witness)
    return G


def center(G: FiniteGroup) -> SubgroupDescriptor:
    T = G.table
    members = np.nonzero((T == T.T).all(axis=1))[0]
    return SubgroupDescriptor(G, tuple(int(m) for m in members))


def is_elementary_abelian_2(S: SubgroupDescriptor) -> tuple[bool, Optional[int]]:
    """(True, m) with |S| = 2^m when every non-identity member has order 2."""
    orders = S.parent.element_orders
    if all(orders[g] == 2 for g in S.members if g != 0):
        return True, S.order.bit_length() - 1
    return False, None


def is_abelian_subset(G: FiniteGroup, members) -> bool:
    m = np.asarray(members)
    sub = G.table[np.ix_(m, m)]
    return bool(np.array_equal(sub, sub.T))


def index_two_subgroups(G: FiniteGroup) -> list:
    """All index-2 subgroups, as kernels of surjections onto C2, in sorted member order."""
    if G.order % 2:
        return []
    gens = _search.generating_sequence(G)
    found = set()
    for signs in itertools.product((0, 1), repeat=len(gens)):
        if not any(signs):
            continue
        chi = _extend_character(G, dict(zip(gens, signs)))
        if chi is not None:
            found.add(tuple(g for g in range(G.order) if chi[g] == 0))
    return sorted(found)


def _extend_character(G: FiniteGroup, on_gens: dict):
    # BFS over right multiplication by generators; None if inconsistent
    chi = {0: 0}
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for s, e in on_gens.items():
            h = G.rows[g][s]
            val = chi[g] ^ e
            if h in chi:
                if chi[h] != val:
                    return None
            else:
                chi[h] = val
                queue.append(h)
    rows = G.rows
    for a in range(G.order):
        for b in range(G.order):
            if chi[rows[a][b]] != chi[a] ^ chi[b]:
                return None
    return chi


def generalized_dihedral_decomposition(G: FiniteGroup) -> Optional[tuple[SubgroupDescriptor, int]]:
    """First (G0, v) with G0 abelian of index 2, v outside, v^2 = 1 and v g v = g^-1 on G0."""
    rows, inv = G.rows, G.inverses
    for members in index_two_subgroups(G):
        if not is_abelian_subset(G, members):
            continue
        inside = set(members)
        for v in range(G.order):
            if v in inside or rows[v][v] != 0:
                continue
            if all(rows[rows[v][g]][v] == inv[g] for g in members):
                return SubgroupDescriptor(G, members), v
    return None


def automorphism_group(G: FiniteGroup, bound: int = ORDER_BOUND) -> list:
    """Every automorphism of G, sorted by image sequence."""
    if G.order > bound:
        raise OrderBoundExceeded(f"automorphism search bounded at order {bound}, got {G.order}")
    return [GroupMapping(G, G, f, True) for f in _search.search(G, G, half=False)]


def inner_automorphism_group(G: FiniteGroup) -> list:
    """Distinct conjugations g -> t g t^-1, sorted by image sequence."""
    maps = {tuple(G.conj(t, g) for g in range(G.order)) for t in range(G.order)}
    return [GroupMapping(G, G, f, True) for f in sorted(maps)]


def holomorph_order(G: FiniteGroup, bound: int = ORDER_BOUND) -> int:
    return len(automorphism_group(G, bound)) * G.order


def isomorphic(G: FiniteGroup, H: FiniteGroup, bound: int = ORDER_BOUND) -> Optional[GroupMapping]:
    if max(G.order, H.order) > bound:
        raise OrderBoundExceeded(f"isomorphism search bounded at order {bound}")
    if G.order != H.order or Counter(G.element_orders) != Counter(H.element_orders):
        return None
    if G.is_abelian != H.is_abelian:
        return None
    found = _search.search(G, H, half=False, first=True)
    return GroupMapping(G, H, found[0], True) if found else None


# -- constructions -----------------------------------------------------------

def closure_from_permutations(gens, bound: int = CLOSURE_BOUND, names=None) -> FiniteGroup:
    """Group generated by permutations of a common finite set.

    Elements are sorted by image tuple (so the identity is first); the product
    is composition, ``e_i · e_j = e_i ∘ e_j``.
    """
    gens = [tuple(g) for g in gens]
    degree = len(gens[0]) if gens else 1
    if any(len(g) != degree for g in gens):
        raise ValueError("generators must act on a common set")
    ident = identity_map(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        e = queue.popleft()
        for s in gens:
            c = compose(s, e)
            if c not in seen:
                seen.add(c)
                if len(seen) > bound:
                    raise ClosureBoundExceeded(f"closure exceeds {bound} elements")
                queue.append(c)
    elements = sorted(seen)
    index = {p: i for i, p in enumerate(elements)}
    table = [[index[compose(a, b)] for b in elements] for a in elements]
    if names is None:
        names = [_cycle_notation(p) for p in elements]
    return validate_group(table, names)


def _cycle_notation(p) -> str:
    seen, cycles = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j))
            j = p[j]
        cycles.append("(" + " ".join(cyc) + ")")
    return "".join(cycles) or "()"


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """A × B with index a·|B| + b."""
    nb = B.order
    table = [
        [A.rows[a1][a2] * nb + B.rows[b1][b2] for a2 in range(A.order) for b2 in range(nb)]
        for a1 in range(A.order)
        for b1 in range(nb)
    ]
    names = [f"({x},{y})" for x in A.names for y in B.names]
    return validate_group(table, names)


def _power(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def cyclic(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return validate_group(table, ["1"] + [_power("a", k) for k in range(1, n)])


def dihedral(n: int) -> FiniteGroup:
    """Order 2n; index k + n·e stands for r^k s^e."""
    def mul(x, y):
        a, e = x % n, x // n
        b, f = y % n, y // n
        return (a + (-1) ** e * b) % n + n * ((e + f) % 2)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    names = [(_power("r", k % n) + ("s" if k >= n else "")) or "1" for k in range(2 * n)]
    return validate_group(table, names)


_QUAT = {  # basis products: (sign, basis) with basis 0..3 = 1, i, j, k
    (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
    (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
    (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
}


def q8() -> FiniteGroup:
    """Quaternion group; index b + 4·s is (−1)^s times basis b ∈ (1, i, j, k)."""
    def mul(x, y):
        bx, sx = x % 4, x // 4
        by, sy = y % 4, y // 4
        if bx == 0 or by == 0:
            sign, b = 1, bx + by
        else:
            sign, b = _QUAT[bx, by]
        neg = (sx + sy + (sign < 0)) % 2
        return b + 4 * neg

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    return validate_group(table, ["1", "i", "j", "k", "-1", "-i", "-j", "-k"])


def c4_semidirect_c3() -> FiniteGroup:
    """<a, b | a^4 = b^3 = 1, a^-1 b a = b^-1>; index 3i + j is a^i b^j."""
    def mul(x, y):
        i, j = divmod(x, 3)
        k, l = divmod(y, 3)
        return ((i + k) % 4) * 3 + ((-1) ** k * j + l) % 3

    table = [[mul(x, y) for y in range(12)] for x in range(12)]
    names = [(_power("a", x // 3) + _power("b", x % 3)) or "1" for x in range(12)]
    return validate_group(table, names)


def elementary_abelian(k: int) -> FiniteGroup:
    G = trivial()
    for _ in range(k):
        G = direct_product(G, cyclic(2)) if G.order > 1 else cyclic(2)
    return G


def trivial() -> FiniteGroup:
    return validate_group([[0]], ["1"])


def symmetric3() -> FiniteGroup:
    return closure_from_permutations([(1, 0, 2), (1, 2, 0)])


_FIXED = {
    "trivial": trivial,
    "klein": lambda: direct_product(cyclic(2), cyclic(2)),
    "q8": q8,
    "c4_semidirect_c3": c4_semidirect_c3,
    "s3": symmetric3,
}
_PARAM = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "elementary_abelian": elementary_abelian,
}
PRESET_NAMES = (*_FIXED, *(f"{k}(n)" for k in _PARAM))


def preset(name: str) -> FiniteGroup:
    """Named group: trivial, klein, q8, c4_semidirect_c3, s3, cyclic(n), dihedral(n), elementary_abelian(k)."""
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"(\w+)\((\d+)\)", key)
    if m and m.group(1) in _PARAM:
        arg = int(m.group(2))
        if m.group(1) == "elementary_abelian" or arg >= 1:
            if m.group(1) == "dihedral" and arg < 3:
                raise UnknownPreset(f"dihedral(n) needs n >= 3, got {arg}")
            return _PARAM[m.group(1)](arg)
    raise UnknownPreset(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}")
