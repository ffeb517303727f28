"""Finite loops as Cayley tables, plus the permutation utilities used for mappings.

A loop element is an index ``0..n-1`` with the identity at index 0. A mapping
(bijection of the carrier) is a plain tuple of images, ``f[i]`` being the image
of element ``i``. Composition follows function notation: ``compose(f, g)`` is
``f ∘ g``, i.e. ``g`` is applied first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    ClosureBoundExceeded,
    NoIdentity,
    NotLatinSquare,
    NoTwoSidedInverses,
    OrderBoundExceeded,
)

Mapping = tuple  # tuple[int, ...]

DIASSOCIATIVE_BOUND = 64


class Check(NamedTuple):
    """Outcome of an exhaustive predicate; ``witness`` is the first violation."""

    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True, eq=False)
class FiniteLoop:
    table: np.ndarray
    names: tuple

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def __len__(self):
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def name(self, i: int) -> str:
        return self.names[i]

    def index(self, label: str) -> int:
        return self.names.index(label)

    @cached_property
    def rows(self) -> tuple:
        return tuple(tuple(int(v) for v in row) for row in self.table)

    @cached_property
    def ldiv(self) -> tuple:
        """``ldiv[a][b]`` is the unique x with a*x = b."""
        out = np.empty_like(self.table)
        idx = np.arange(self.order)
        out[idx[:, None], self.table] = idx[None, :]
        return tuple(tuple(int(v) for v in row) for row in out)

    @cached_property
    def rdiv(self) -> tuple:
        """``rdiv[a][b]`` is the unique x with x*a = b."""
        out = np.empty_like(self.table)
        idx = np.arange(self.order)
        out[idx[:, None], self.table.T] = idx[None, :]
        return tuple(tuple(int(v) for v in row) for row in out)

    @cached_property
    def two_sided_inverses(self) -> Optional[tuple]:
        right = self.table.argmin(axis=1)  # identity is index 0, the minimum
        left = self.table.argmin(axis=0)
        if np.array_equal(right, left):
            return tuple(int(v) for v in right)
        return None

    @cached_property
    def element_orders(self) -> tuple:
        # left powers x^k = x * x^(k-1); the orbit of 1 under left translation is a cycle
        orders = []
        for x in range(self.order):
            row, k, p = self.rows[x], 1, x
            while p != 0:
                p = row[p]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def is_power_associative(self) -> bool:
        return all(is_associative_on(self, generate_subloop(self, [x])) for x in range(self.order))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "elements": list(self.names),
            "table": self.table.tolist(),
        }


def _as_table(table) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise NotLatinSquare("table must be a non-empty square array")
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise NotLatinSquare(f"entry [{i}][{j}] = {arr[i, j]} out of range", (i, j))
    return arr


def _latin_and_identity(arr: np.ndarray, names) -> tuple[np.ndarray, tuple]:
    n = arr.shape[0]
    full = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(arr[i]), full):
            raise NotLatinSquare(f"row {i} is not a permutation", ("row", i))
    for j in range(n):
        if not np.array_equal(np.sort(arr[:, j]), full):
            raise NotLatinSquare(f"column {j} is not a permutation", ("column", j))
    ids = [e for e in range(n) if np.array_equal(arr[e], full) and np.array_equal(arr[:, e], full)]
    if not ids:
        raise NoIdentity("no two-sided identity element")
    e = ids[0]
    if names is None:
        names = [str(i) for i in range(n)]
    names = list(names)
    if len(names) != n or len(set(names)) != n:
        raise NotLatinSquare("names must be n distinct labels")
    if e != 0:
        perm = np.arange(n)
        perm[[0, e]] = [e, 0]  # perm is its own inverse
        arr = perm[arr[np.ix_(perm, perm)]]
        names[0], names[e] = names[e], names[0]
    return arr, tuple(str(s) for s in names)


def validate_loop(table, names: Optional[Sequence[str]] = None) -> FiniteLoop:
    """Validate a Latin square with identity; the identity is relabelled to index 0."""
    arr, names = _latin_and_identity(_as_table(table), names)
    arr.setflags(write=False)
    return FiniteLoop(arr, names)


# -- mappings ---------------------------------------------------------------

def identity_map(n: int) -> Mapping:
    return tuple(range(n))


def compose(f: Mapping, g: Mapping) -> Mapping:
    """``f ∘ g``."""
    return tuple(f[i] for i in g)


def inverse(f: Mapping) -> Mapping:
    out = [0] * len(f)
    for i, v in enumerate(f):
        out[v] = i
    return tuple(out)


def is_bijection(f: Sequence[int], n: int) -> bool:
    return len(f) == n and sorted(f) == list(range(n))


def generate(gens: Iterable[Mapping], n: int, bound: Optional[int] = None) -> list:
    """Closure of a set of permutations of ``0..n-1``, sorted.

    Generators already in the running closure are skipped, so large redundant
    generating sets (e.g. a whole automorphism group) stay cheap.
    """
    kept: list = []
    elements = {identity_map(n)}
    for g in gens:
        g = tuple(g)
        if g in elements:
            continue
        kept.append(g)
        elements = _bfs(kept, n, bound)
    return sorted(elements)


def _bfs(gens, n, bound):
    ident = identity_map(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        e = queue.popleft()
        for s in gens:
            c = compose(s, e)
            if c not in seen:
                seen.add(c)
                if bound is not None and len(seen) > bound:
                    raise ClosureBoundExceeded(f"closure exceeds {bound} elements")
                queue.append(c)
    return seen


def is_closed(elements: Iterable[Mapping]) -> bool:
    """True iff the finite set is closed under composition (hence a group)."""
    s = set(elements)
    if not s:
        return False
    n = len(next(iter(s)))
    return set(generate(sorted(s), n)) == s


# -- structural predicates --------------------------------------------------

def generate_subloop(L: FiniteLoop, gens: Iterable[int]) -> list:
    """Smallest subset containing 1 and ``gens`` closed under the product."""
    members = {0, *gens}
    frontier = list(members)
    rows = L.rows
    while frontier:
        new = set()
        for a in frontier:
            for b in list(members):
                for p in (rows[a][b], rows[b][a]):
                    if p not in members:
                        new.add(p)
        members |= new
        frontier = list(new)
    return sorted(members)


def is_associative_on(L: FiniteLoop, members: Sequence[int]) -> Check:
    m = np.asarray(members)
    T = L.table
    sub = T[np.ix_(m, m)]
    step = max(1, 2_000_000 // max(1, len(m) ** 2))
    for start in range(0, len(m), step):
        # (xy)z vs x(yz), x ranging over one chunk of members
        xs = slice(start, start + step)
        lhs = T[sub[xs, :, None], m[None, None, :]]
        rhs = T[m[xs, None, None], sub[None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = (int(v) for v in bad[0])
            return Check(False, (int(m[start + i]), int(m[j]), int(m[k])))
    return Check(True)


def is_associative(L: FiniteLoop) -> Check:
    return is_associative_on(L, range(L.order))


def is_moufang(L: FiniteLoop) -> Check:
    """Exhaustive check of x(y(xz)) = ((xy)x)z; witness is the first triple (x, y, z)."""
    T = L.table
    n = L.order
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    xz = T[x, z]
    lhs = T[x, T[y, xz]]
    xyx = T[T[x, y], x]
    rhs = T[xyx, z]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return Check(False, tuple(int(v) for v in bad[0]))
    return Check(True)


def is_diassociative(L: FiniteLoop, bound: int = DIASSOCIATIVE_BOUND) -> Check:
    """Every 2-generated subloop is associative; witness is (x, y, triple)."""
    if L.order > bound:
        raise OrderBoundExceeded(f"diassociativity check bounded at order {bound}")
    checked: dict = {}
    for x in range(L.order):
        for y in range(x, L.order):
            sub = tuple(generate_subloop(L, (x, y)))
            if sub not in checked:
                checked[sub] = is_associative_on(L, sub)
            res = checked[sub]
            if not res:
                return Check(False, (x, y, res.witness))
    return Check(True)


def has_aaip(L: FiniteLoop) -> Check:
    """(xy)^-1 = y^-1 x^-1 for all pairs; witness is the first failing (x, y)."""
    inv = L.two_sided_inverses
    if inv is None:
        raise NoTwoSidedInverses("loop lacks two-sided inverses")
    inv = np.asarray(inv)
    T = L.table
    bad = np.argwhere(inv[T] != T[np.ix_(inv, inv)].T)
    if len(bad):
        return Check(False, tuple(int(v) for v in bad[0]))
    return Check(True)


def inversion_mapping(L: FiniteLoop) -> Mapping:
    inv = L.two_sided_inverses
    if inv is None:
        raise NoTwoSidedInverses("loop lacks two-sided inverses")
    return tuple(inv)


def commuting_pairs(L: FiniteLoop) -> list:
    """Unordered commuting pairs ``(x, y)`` with ``x <= y``."""
    T = L.table
    xs, ys = np.nonzero(np.triu(T == T.T))
    return [(int(a), int(b)) for a, b in zip(xs, ys)]
