"""Permutations in one-line form, permutation groups by explicit closure, and
homomorphisms into symmetric groups.

Composition follows the functional convention: ``compose(p, q)(i) == p(q(i))``,
i.e. ``q`` is applied first.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import GuardError, NotAHomomorphismError, ParseError, StructureError

__all__ = [
    "Permutation",
    "PermGroup",
    "GroupHomomorphism",
    "compose",
    "invert",
    "closure",
    "symmetric_group",
    "center",
    "fixes_point",
    "hom_from_images",
    "all_homomorphisms",
    "kernel",
    "image",
    "all_subgroups",
    "regular_group",
    "SYMMETRIC_GUARD",
]

SYMMETRIC_GUARD = 6


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if not images:
            raise StructureError("permutation degree must be >= 1")
        if sorted(images) != list(range(len(images))):
            raise StructureError(f"not a bijection of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]] | str) -> Permutation:
        """Build from disjoint cycles, e.g. ``from_cycles(3, "(0 1 2)")``.

        ``()`` or an empty string is the identity.
        """
        if isinstance(cycles, str):
            text = cycles.strip()
            if text and not re.fullmatch(r"(\(\s*(\d+[\s,]*)*\)\s*)+", text):
                raise ParseError(f"bad cycle notation: {cycles!r}")
            cycles = [[int(t) for t in re.findall(r"\d+", c)] for c in re.findall(r"\(([^)]*)\)", text)]
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < degree or a in seen:
                    raise StructureError(f"bad cycle entry {a} for degree {degree}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        out, seen = [], set()
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    def one_line(self) -> str:
        return " ".join(map(str, self.images))

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.degree != q.degree:
        raise StructureError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation(tuple(pi[j] for j in q.images))


def invert(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation(tuple(inv))


@dataclass(frozen=True)
class PermGroup:
    """A permutation group stored by its full element list.

    ``elements`` is sorted lexicographically by one-line images, so the identity
    always comes first and positional indices are reproducible.
    """

    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(default=(), compare=False)
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "_index", {g: k for k, g in enumerate(elems)})

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._index

    def index(self, p: Permutation) -> int:
        return self._index[p]

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_abelian(self) -> bool:
        return all(compose(a, b) == compose(b, a) for a, b in itertools.combinations(self.elements, 2))

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and all(g in other for g in self.elements)

    def table(self) -> list[list[int]]:
        """Multiplication table by element index: ``t[a][b] = index(a∘b)``."""
        idx, els = self._index, self.elements
        return [[idx[compose(a, b)] for b in els] for a in els]


def closure(degree: int, gens: Iterable[Permutation], limit: int | None = None) -> PermGroup:
    """Subgroup generated by ``gens``; GuardError once it exceeds ``limit`` elements."""
    gens = tuple(gens)
    for g in gens:
        if g.degree != degree:
            raise StructureError(f"generator {g} has degree {g.degree}, expected {degree}")
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = compose(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        if limit is not None and len(seen) > limit:
            raise GuardError(f"generated group exceeds {limit} elements")
        frontier = nxt
    return PermGroup(degree, tuple(seen), gens)


def symmetric_group(n: int, guard: int = SYMMETRIC_GUARD) -> PermGroup:
    if n < 1:
        raise StructureError("symmetric group degree must be >= 1")
    if n > guard:
        raise GuardError(f"symmetric_group({n}) exceeds guard {guard}")
    elems = tuple(Permutation(p) for p in itertools.permutations(range(n)))
    gens: tuple[Permutation, ...] = ()
    if n >= 2:
        gens = (Permutation.from_cycles(n, [(0, 1)]), Permutation.from_cycles(n, [tuple(range(n))]))
    return PermGroup(n, elems, gens)


def center(G: PermGroup) -> frozenset[Permutation]:
    return frozenset(z for z in G.elements if all(compose(z, g) == compose(g, z) for g in G.elements))


def fixes_point(H: Iterable[Permutation], s: int) -> bool:
    return all(h(s) == s for h in H)


@dataclass(frozen=True)
class GroupHomomorphism:
    """A map from a permutation group into Sym(codomain_degree).

    The homomorphism law is checked over the full multiplication table when
    the value is constructed.
    """

    domain: PermGroup
    codomain_degree: int
    map: Mapping[Permutation, Permutation]

    def __post_init__(self):
        m = dict(self.map)
        missing = [g for g in self.domain.elements if g not in m]
        if missing:
            raise NotAHomomorphismError(f"map is not total; missing {missing[0]}")
        for v in m.values():
            if v.degree != self.codomain_degree:
                raise StructureError(f"image {v} is not of degree {self.codomain_degree}")
        for f in self.domain.elements:
            for g in self.domain.elements:
                if m[compose(f, g)] != compose(m[f], m[g]):
                    raise NotAHomomorphismError(f"map(fg) != map(f)map(g) at f={f}, g={g}")
        object.__setattr__(self, "map", m)

    def __call__(self, g: Permutation) -> Permutation:
        return self.map[g]

    def __hash__(self):
        return hash((self.domain, self.codomain_degree, tuple(self.map[g] for g in self.domain.elements)))

    def __eq__(self, other):
        if not isinstance(other, GroupHomomorphism):
            return NotImplemented
        return (self.domain == other.domain and self.codomain_degree == other.codomain_degree
                and all(self.map[g] == other.map[g] for g in self.domain.elements))


def hom_from_images(G: PermGroup, codomain_degree: int,
                    gen_images: Sequence[Permutation]) -> GroupHomomorphism:
    """Extend generator images of ``G`` multiplicatively.

    Elements are reached by words in the generators; reaching an element twice
    with different images means no homomorphism has these generator images.
    """
    if len(gen_images) != len(G.generators):
        raise StructureError(f"{len(G.generators)} generators but {len(gen_images)} images")
    ident = Permutation.identity(codomain_degree)
    m = {G.identity: ident}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g, gi in zip(G.generators, gen_images):
                b = compose(a, g)
                bi = compose(m[a], gi)
                if b in m:
                    if m[b] != bi:
                        raise NotAHomomorphismError(f"inconsistent images for {b}: {m[b]} vs {bi}")
                else:
                    m[b] = bi
                    nxt.append(b)
        frontier = nxt
    if len(m) != len(G):
        raise StructureError("generators do not generate the domain group")
    return GroupHomomorphism(G, codomain_degree, m)


def all_homomorphisms(G: PermGroup, codomain_degree: int,
                      guard: int = SYMMETRIC_GUARD) -> list[GroupHomomorphism]:
    """Every homomorphism ``G -> Sym(codomain_degree)``, by trying all generator images."""
    gens = G.generators
    if not gens:
        return [hom_from_images(G, codomain_degree, [])]
    S = symmetric_group(codomain_degree, guard)
    orders = [g.order() for g in gens]
    # an image's order must divide its generator's order
    choices = [[s for s in S.elements if o % s.order() == 0] for o in orders]
    out = []
    for imgs in itertools.product(*choices):
        try:
            out.append(hom_from_images(G, codomain_degree, list(imgs)))
        except NotAHomomorphismError:
            pass
    return out


def kernel(theta: GroupHomomorphism) -> frozenset[Permutation]:
    return frozenset(g for g in theta.domain.elements if theta.map[g].is_identity())


def image(theta: GroupHomomorphism) -> frozenset[Permutation]:
    return frozenset(theta.map.values())


def all_subgroups(G: PermGroup) -> list[PermGroup]:
    """All subgroups of a small group, sorted by (order, element list)."""
    trivial = closure(G.degree, [])
    found = {frozenset(trivial.elements): trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            for g in G.elements:
                if g in H:
                    continue
                K = closure(G.degree, H.generators + (g,))
                key = frozenset(K.elements)
                if key not in found:
                    found[key] = K
                    nxt.append(K)
        frontier = nxt
    return sorted(found.values(), key=lambda H: (len(H), H.elements))


def regular_group(table: Sequence[Sequence[int]], generators: Sequence[int] | None = None) -> PermGroup:
    """Left-regular permutation group of an abstract group given by its table.

    Element ``a`` becomes the permutation ``x -> a*x``. With ``generators``
    (element indices) the group keeps those as its generator list.
    """
    n = len(table)
    perms = [Permutation(tuple(table[a][x] for x in range(n))) for a in range(n)]
    if generators is None:
        generators = range(n)
    gens = tuple(perms[a] for a in generators if not perms[a].is_identity())
    G = closure(n, gens)
    if len(G) != n:
        raise StructureError("table is not a group table (left-regular image has wrong size)")
    return G
