"""The Chein double M(G, 2) = G ∪ Gu of a finite group.

Layout: loop index ``k < |G|`` is the group element ``e_k``; index ``|G| + k``
is ``e_k u``. So ``u`` itself sits at index ``|G|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .groups import FiniteGroup
from .loops import FiniteLoop, validate_loop


class Located(NamedTuple):
    in_coset: bool  # False: element of G; True: element g·u of Gu
    g: int


@dataclass(frozen=True, eq=False)
class CheinEmbedding:
    group: FiniteGroup
    loop: FiniteLoop

    @property
    def n(self) -> int:
        return self.group.order

    @property
    def u_index(self) -> int:
        return self.group.order

    def g(self, k: int) -> int:
        """Loop index of the group element e_k."""
        return k

    def gu(self, k: int) -> int:
        """Loop index of e_k u."""
        return self.group.order + k

    @property
    def group_index_of(self) -> dict:
        return {k: k for k in range(self.n)}

    @property
    def coset_index_of(self) -> dict:
        return {self.n + k: k for k in range(self.n)}

    def locate(self, index: int) -> Located:
        if not 0 <= index < 2 * self.n:
            raise IndexError(index)
        return Located(index >= self.n, index % self.n)


def chein_table(G: FiniteGroup) -> list:
    n, rows, inv = G.order, G.rows, G.inverses
    table = [[0] * (2 * n) for _ in range(2 * n)]
    for g in range(n):
        for h in range(n):
            table[g][h] = rows[g][h]                      # g*h = gh
            table[g][n + h] = n + rows[h][g]              # g*(hu) = (hg)u
            table[n + g][h] = n + rows[g][inv[h]]         # (gu)*h = (gh^-1)u
            table[n + g][n + h] = rows[inv[h]][g]         # (gu)*(hu) = h^-1 g
    return table


def _coset_name(label: str) -> str:
    return "u" if label == "1" else f"{label}u"


def chein(G: FiniteGroup) -> CheinEmbedding:
    names = [*G.names, *(_coset_name(s) for s in G.names)]
    if len(set(names)) != len(names):
        names = [*G.names, *(f"({s})u" for s in G.names)]
    loop = validate_loop(chein_table(G), names)
    return CheinEmbedding(G, loop)
