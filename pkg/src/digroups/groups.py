"""Built-in catalog of the groups of order at most 12, up to isomorphism.

Each group is given by permutation generators of small degree; the catalog
holds all 24 isomorphism types (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5 for orders
1 through 12).
"""

from __future__ import annotations

from functools import lru_cache

from .core import Digroup, group_digroup
from .perms import PermGroup, Permutation, closure, regular_group

__all__ = ["CATALOG_NAMES", "catalog_group", "groups_of_order", "named_group_digroup", "dic3"]


def _cyc(n: int) -> list[tuple[int, ...]]:
    return [tuple(range(n))]


# name -> (degree, generators in cycle notation)
_GENERATORS: dict[str, tuple[int, list[list[tuple[int, ...]]]]] = {
    "C1": (1, []),
    "C2": (2, [_cyc(2)]),
    "C3": (3, [_cyc(3)]),
    "C4": (4, [_cyc(4)]),
    "V4": (4, [[(0, 1), (2, 3)], [(0, 2), (1, 3)]]),
    "C5": (5, [_cyc(5)]),
    "C6": (6, [_cyc(6)]),
    "S3": (3, [[(0, 1)], [(0, 1, 2)]]),
    "C7": (7, [_cyc(7)]),
    "C8": (8, [_cyc(8)]),
    "C4xC2": (6, [[(0, 1, 2, 3)], [(4, 5)]]),
    "C2xC2xC2": (6, [[(0, 1)], [(2, 3)], [(4, 5)]]),
    "D4": (4, [[(0, 1, 2, 3)], [(1, 3)]]),
    "Q8": (8, [[(0, 1, 3, 6), (2, 5, 7, 4)], [(0, 2, 3, 7), (1, 4, 6, 5)]]),
    "C9": (9, [_cyc(9)]),
    "C3xC3": (6, [[(0, 1, 2)], [(3, 4, 5)]]),
    "C10": (10, [_cyc(10)]),
    "D5": (5, [[(0, 1, 2, 3, 4)], [(1, 4), (2, 3)]]),
    "C11": (11, [_cyc(11)]),
    "C12": (12, [_cyc(12)]),
    "C2xC6": (8, [[(0, 1)], [(2, 3, 4, 5, 6, 7)]]),
    "A4": (4, [[(0, 1, 2)], [(0, 1), (2, 3)]]),
    "D6": (6, [[(0, 1, 2, 3, 4, 5)], [(1, 5), (2, 4)]]),
}

CATALOG_NAMES = tuple(_GENERATORS) + ("Dic3",)


def dic3() -> PermGroup:
    """The dicyclic group of order 12, as ``Z3 ⋊ Z4`` in its regular representation."""
    els = [(a, b) for b in range(4) for a in range(3)]
    idx = {g: k for k, g in enumerate(els)}

    def mul(g, h):
        (a1, b1), (a2, b2) = g, h
        return ((a1 + (-1) ** b1 * a2) % 3, (b1 + b2) % 4)

    table = [[idx[mul(g, h)] for h in els] for g in els]
    return regular_group(table, generators=[idx[(1, 0)], idx[(0, 1)]])


@lru_cache(maxsize=None)
def catalog_group(name: str) -> PermGroup:
    if name == "Dic3":
        return dic3()
    degree, gens = _GENERATORS[name]
    return closure(degree, [Permutation.from_cycles(degree, g) for g in gens])


def groups_of_order(m: int) -> list[tuple[str, PermGroup]]:
    return [(name, catalog_group(name)) for name in CATALOG_NAMES if len(catalog_group(name)) == m]


def named_group_digroup(name: str) -> Digroup:
    """A catalog group as a digroup with both products equal to the group product."""
    G = catalog_group(name)
    return group_digroup(G.table(), labels=[g.cycle_string() for g in G.elements])
