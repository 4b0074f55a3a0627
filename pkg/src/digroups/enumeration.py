"""Digroups of small order up to isomorphism, found two independent ways.

``brute_enumerate`` searches raw table pairs; ``constructive_enumerate``
materializes every transformation digroup ``(Δ, H, θ)`` with
``|Δ|·|H| = n``. ``cross_check`` matches the two catalogs class by class.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from . import core
from .core import Digroup
from .errors import GuardError, InvalidDigroupError
from .groups import groups_of_order
from .perms import all_homomorphisms
from .transform import TransDigroupSpec, build

__all__ = [
    "Catalog",
    "CanonicalKey",
    "canonical_key",
    "brute_enumerate",
    "constructive_enumerate",
    "cross_check",
    "BRUTE_GUARD",
    "CONSTRUCTIVE_GUARD",
]

log = logging.getLogger(__name__)

BRUTE_GUARD = 4
CONSTRUCTIVE_GUARD = 12
CANONICAL_LABELING_LIMIT = 40320


@dataclass(frozen=True)
class CanonicalKey:
    invariants: tuple
    table: tuple | None   # None when too many labelings to minimize over

    def summary(self) -> dict:
        n, h, i, t, s = self.invariants[:5]
        return {"order": n, "halo": h, "identities": i, "target_center": t, "source_center": s}


def canonical_key(D: Digroup, limit: int = CANONICAL_LABELING_LIMIT) -> CanonicalKey:
    """Isomorphism-invariant key.

    The table part is the lexicographically least serialization of ``D`` over
    all relabelings that sort elements by refined invariant color; it is left
    out when that family exceeds ``limit`` labelings.
    """
    colors = core._refine([D])[0]
    profiles = core.element_profiles(D)
    inv = core._invariant_vector(D) + (tuple(sorted(profiles)), tuple(sorted(colors)))
    classes: dict[int, list[int]] = {}
    for x, c in enumerate(colors):
        classes.setdefault(c, []).append(x)
    blocks = [classes[c] for c in sorted(classes)]
    count = 1
    for b in blocks:
        for k in range(2, len(b) + 1):
            count *= k
    if count > limit:
        return CanonicalKey(inv, None)
    n = D.n
    best = None
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = [x for blk in choice for x in blk]   # new label k <- old element order[k]
        pos = [0] * n
        for k, x in enumerate(order):
            pos[x] = k
        ser = tuple(pos[D.lp(x, y)] for x in order for y in order) + \
            tuple(pos[D.rp(x, y)] for x in order for y in order)
        if best is None or ser < best:
            best = ser
    return CanonicalKey(inv, best)


@dataclass
class Catalog:
    order: int
    method: str
    classes: list[Digroup] = field(default_factory=list)
    provenance: list[dict] = field(default_factory=list)
    keys: list[CanonicalKey] = field(default_factory=list, repr=False)
    candidates: int = 0

    def __len__(self) -> int:
        return len(self.classes)

    def find(self, D: Digroup, key: CanonicalKey | None = None) -> int | None:
        """Index of the class isomorphic to ``D``, or None."""
        key = key or canonical_key(D)
        matching = [k for k, ck in enumerate(self.keys) if ck.invariants == key.invariants]
        # equal canonical tables go first; the search has the final word either way
        matching.sort(key=lambda k: self.keys[k].table != key.table or key.table is None)
        for k in matching:
            if core.find_isomorphism(D, self.classes[k]) is not None:
                return k
        return None

    def add(self, D: Digroup, provenance: dict | None = None) -> bool:
        """Add ``D`` unless an isomorphic class is present; True if added."""
        self.candidates += 1
        key = canonical_key(D)
        if self.find(D, key) is not None:
            return False
        self.classes.append(D)
        self.keys.append(key)
        self.provenance.append(provenance or {})
        return True


def _ok(L, R, x: int, y: int, z: int) -> bool:
    """No fully assigned instance of the five identities fails at (x, y, z)."""
    Lyz, Ryz, Lxy, Rxy = L[y][z], R[y][z], L[x][y], R[x][y]
    if Lyz >= 0:
        u = L[x][Lyz]
        if u >= 0:
            if Lxy >= 0:
                v = L[Lxy][z]
                if v >= 0 and u != v:
                    return False
            if Ryz >= 0:
                v = L[x][Ryz]
                if v >= 0 and u != v:
                    return False
        if Rxy >= 0:
            u, v = L[Rxy][z], R[x][Lyz]
            if u >= 0 and v >= 0 and u != v:
                return False
    if Rxy >= 0:
        u = R[Rxy][z]
        if u >= 0:
            if Lxy >= 0:
                v = R[Lxy][z]
                if v >= 0 and u != v:
                    return False
            if Ryz >= 0:
                v = R[x][Ryz]
                if v >= 0 and u != v:
                    return False
    return True


def _raw_solutions(n: int):
    """Table pairs on ``0..n-1`` satisfying all five identities, with 0 a bar-unit.

    Every digroup has a bar-unit, so relabeling one of them to 0 loses no
    isomorphism class. Cells are filled one at a time; after each assignment
    every identity instance whose lookups are all assigned is checked, and
    those are exactly instances with ``x`` equal to the cell's row or ``z``
    equal to its column.
    """
    L = [[-1] * n for _ in range(n)]
    R = [[-1] * n for _ in range(n)]
    for x in range(n):
        L[x][0] = x
        R[0][x] = x
    cells = []
    for a in range(n):
        cells += [(L, a, b) for b in range(n) if L[a][b] < 0]
        cells += [(R, a, b) for b in range(n) if R[a][b] < 0]
    rng = range(n)

    def consistent(a: int, b: int) -> bool:
        for y in rng:
            for z in rng:
                if not _ok(L, R, a, y, z):
                    return False
        for x in rng:
            for y in rng:
                if not _ok(L, R, x, y, b):
                    return False
        return True

    if not all(consistent(a, 0) for a in rng) or not all(consistent(0, b) for b in rng):
        return

    def rec(k: int):
        if k == len(cells):
            yield [row[:] for row in L], [row[:] for row in R]
            return
        T, a, b = cells[k]
        for v in rng:
            T[a][b] = v
            if consistent(a, b):
                yield from rec(k + 1)
        T[a][b] = -1

    yield from rec(0)


def brute_enumerate(n: int, guard: int = BRUTE_GUARD) -> Catalog:
    """Classify digroups of order ``n`` by exhaustive table search."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > guard:
        raise GuardError(f"brute enumeration of order {n} exceeds guard {guard}")
    cat = Catalog(n, "brute")
    raw = 0
    for left, right in _raw_solutions(n):
        raw += 1
        try:
            D = Digroup(left, right)
        except InvalidDigroupError:   # diassociative with a bar-unit but lacking inverses
            continue
        cat.add(D, {"tables": "search"})
    log.info("brute order %d: %d raw diassociative solutions, %d classes", n, raw, len(cat))
    return cat


def constructive_enumerate(n: int, guard: int = CONSTRUCTIVE_GUARD) -> Catalog:
    """Classify digroups of order ``n`` as transformation digroups.

    Runs over every factorization ``n = d·m``, every group of order ``m`` in
    the built-in catalog and every homomorphism into ``Sym(d)``.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > guard:
        raise GuardError(f"constructive enumeration of order {n} exceeds guard {guard}")
    cat = Catalog(n, "constructive")
    for d in range(1, n + 1):
        if n % d:
            continue
        m = n // d
        for name, H in groups_of_order(m):
            for theta in all_homomorphisms(H, d, guard=max(d, 6)):
                spec = TransDigroupSpec(H.degree, d, H, theta)
                D = build(spec).digroup
                cat.add(D, {
                    "delta": d,
                    "group": name,
                    "spec": spec,
                    "theta_images": [theta(g).one_line() for g in H.generators],
                })
    return cat


@dataclass
class CrossCheckReport:
    order: int
    brute_count: int
    constructive_count: int
    matching: list[tuple[int, int]]
    unmatched_brute: list[int]
    unmatched_constructive: list[int]

    @property
    def matched(self) -> bool:
        return (self.brute_count == self.constructive_count
                and not self.unmatched_brute and not self.unmatched_constructive)


def cross_check(n: int, brute: Catalog | None = None,
                constructive: Catalog | None = None) -> CrossCheckReport:
    brute = brute or brute_enumerate(n)
    constructive = constructive or constructive_enumerate(n)
    matching, unmatched = [], []
    used = set()
    for i, D in enumerate(brute.classes):
        j = constructive.find(D)
        if j is None or j in used:
            unmatched.append(i)
        else:
            used.add(j)
            matching.append((i, j))
    rest = [j for j in range(len(constructive)) if j not in used]
    return CrossCheckReport(n, len(brute), len(constructive), matching, unmatched, rest)
