"""Finite digroups as a pair of Cayley tables, and their invariants.

Elements are the dense indices ``0..n-1``. ``D.lp(x, y)`` is the left product
``x ⇀ y`` and ``D.rp(x, y)`` the right product ``x ↼ y``. Every set-valued
result is returned as an ascending tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    GuardError,
    InvalidDigroupError,
    InvariantViolation,
    NotABarUnitError,
    StructureError,
)
from .perms import Permutation

__all__ = [
    "LAWS",
    "Digroup",
    "ValidationReport",
    "InversePair",
    "CentersPair",
    "FiberPartition",
    "validate_digroup",
    "halo",
    "inverses",
    "identities",
    "centers",
    "closure_of",
    "restrict",
    "is_subdigroup",
    "subdigroup_halos",
    "all_subdigroups",
    "relabel",
    "element_profiles",
    "find_isomorphism",
    "is_isomorphism",
    "fiber_partition",
    "left_translation",
    "psi",
    "decompose",
    "group_digroup",
    "projection_digroup",
    "SUBDIGROUP_GUARD",
]

SUBDIGROUP_GUARD = 16

# report ids of the five diassociativity identities, in checking order:
#   1.1a  x⇀(y⇀z) = (x⇀y)⇀z        1.1b  x⇀(y⇀z) = x⇀(y↼z)
#   1.2   (x↼y)⇀z = x↼(y⇀z)
#   1.3a  (x⇀y)↼z = (x↼y)↼z        1.3b  (x↼y)↼z = x↼(y↼z)
LAWS = ("1.1a", "1.1b", "1.2", "1.3a", "1.3b")


def _as_table(t, name: str) -> np.ndarray:
    try:
        a = np.asarray(t)
    except Exception as exc:  # ragged nested lists
        raise StructureError(f"{name} table is not rectangular") from exc
    if a.dtype == object or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise StructureError(f"{name} table must be square, got shape {a.shape}")
    if a.shape[0] == 0:
        raise StructureError("carrier must be nonempty")
    if not np.issubdtype(a.dtype, np.integer):
        if not np.all(np.equal(np.mod(a, 1), 0)):
            raise StructureError(f"{name} table has non-integer entries")
    a = a.astype(np.int64)
    n = a.shape[0]
    if a.min() < 0 or a.max() >= n:
        bad = tuple(int(v) for v in np.argwhere((a < 0) | (a >= n))[0])
        raise StructureError(f"{name} table entry at {bad} out of range 0..{n - 1}")
    return a


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[tuple[str, object], ...]
    halo: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.valid


def _law_failures(L: np.ndarray, R: np.ndarray) -> dict[str, np.ndarray]:
    """Boolean (n, n, n) arrays, True where the identity fails at (x, y, z)."""
    n = L.shape[0]
    x = np.arange(n)[:, None, None]
    z = np.arange(n)[None, None, :]
    Lyz = L[None, :, :]
    Ryz = R[None, :, :]
    Lxy = L[:, :, None]
    Rxy = R[:, :, None]
    x_L_yLz = L[x, Lyz]          # x ⇀ (y ⇀ z)
    return {
        "1.1a": x_L_yLz != L[Lxy, z],                # (x ⇀ y) ⇀ z
        "1.1b": x_L_yLz != L[x, Ryz],                # x ⇀ (y ↼ z)
        "1.2": L[Rxy, z] != R[x, Lyz],               # (x ↼ y) ⇀ z  vs  x ↼ (y ⇀ z)
        "1.3a": R[Lxy, z] != R[Rxy, z],              # (x ⇀ y) ↼ z  vs  (x ↼ y) ↼ z
        "1.3b": R[Rxy, z] != R[x, Ryz],              # (x ↼ y) ↼ z  vs  x ↼ (y ↼ z)
    }


def _bar_units(L: np.ndarray, R: np.ndarray) -> tuple[int, ...]:
    n = L.shape[0]
    ar = np.arange(n)
    ok = np.all(L == ar[:, None], axis=0) & np.all(R == ar[None, :], axis=1)
    return tuple(int(a) for a in np.flatnonzero(ok))


def validate_digroup(left, right) -> ValidationReport:
    """Exhaustively check the digroup axioms on a pair of tables.

    Raises StructureError for malformed tables; an algebra that merely fails
    the axioms comes back as ``valid=False`` with the violated laws listed.
    """
    L = _as_table(left, "left")
    R = _as_table(right, "right")
    if L.shape != R.shape:
        raise StructureError(f"table size mismatch: {L.shape[0]} vs {R.shape[0]}")
    violations: list[tuple[str, object]] = []
    for law, bad in _law_failures(L, R).items():
        violations.extend((law, tuple(int(v) for v in w)) for w in np.argwhere(bad))
    units = _bar_units(L, R)
    if not units:
        violations.append(("bar-unit", None))
    else:
        # Definition: one bar-unit must admit both inverses for every element.
        def missing(e):
            has_left = np.any(L == e, axis=0)   # some y with y ⇀ x = e
            has_right = np.any(R == e, axis=1)  # some y with x ↼ y = e
            return np.flatnonzero(~has_left), np.flatnonzero(~has_right)

        good = [e for e in units if all(len(m) == 0 for m in missing(e))]
        if not good:
            no_left, no_right = missing(units[0])
            violations.extend(("left-inverse", int(x)) for x in no_left)
            violations.extend(("right-inverse", int(x)) for x in no_right)
    return ValidationReport(not violations, tuple(violations), units)


class Digroup:
    """An immutable finite digroup.

    Construction runs the full axiom check and raises InvalidDigroupError
    if it fails, so every instance is known to be a digroup.
    """

    __slots__ = ("left", "right", "labels", "_l", "_r", "_halo", "_hash")

    def __init__(self, left, right, labels: Sequence[str] | None = None):
        report = validate_digroup(left, right)
        if not report.valid:
            raise InvalidDigroupError(report)
        L = _as_table(left, "left")
        R = _as_table(right, "right")
        L.setflags(write=False)
        R.setflags(write=False)
        object.__setattr__(self, "left", L)
        object.__setattr__(self, "right", R)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != L.shape[0]:
                raise StructureError("one label per element required")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_l", L.tolist())
        object.__setattr__(self, "_r", R.tolist())
        object.__setattr__(self, "_halo", report.halo)
        object.__setattr__(self, "_hash", hash((L.tobytes(), R.tobytes())))

    def __setattr__(self, name, value):
        raise AttributeError("Digroup is immutable")

    @property
    def n(self) -> int:
        return len(self._l)

    def __len__(self) -> int:
        return len(self._l)

    def lp(self, x: int, y: int) -> int:
        return self._l[x][y]

    def rp(self, x: int, y: int) -> int:
        return self._r[x][y]

    @property
    def halo(self) -> tuple[int, ...]:
        return self._halo

    @property
    def bar_unit(self) -> int:
        """The least-index bar-unit."""
        return self._halo[0]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digroup):
            return NotImplemented
        return self._l == other._l and self._r == other._r

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Digroup(n={self.n}, halo={list(self._halo)})"


def halo(D: Digroup) -> tuple[int, ...]:
    return D.halo


def _require_bar_unit(D: Digroup, e: int) -> None:
    if e not in D.halo:
        raise NotABarUnitError(f"{e} is not a bar-unit (halo = {list(D.halo)})")


@dataclass(frozen=True)
class InversePair:
    left_inv: int
    right_inv: int
    wrt: int


def inverses(D: Digroup, x: int, alpha: int) -> InversePair:
    """Left and right inverse of ``x`` with respect to the bar-unit ``alpha``.

    Both are found by scanning, and each solution set must be a singleton.
    """
    _require_bar_unit(D, alpha)
    lefts = [y for y in range(D.n) if D.lp(y, x) == alpha]
    rights = [y for y in range(D.n) if D.rp(x, y) == alpha]
    if len(lefts) != 1 or len(rights) != 1:
        raise InvariantViolation(
            f"inverses of {x} w.r.t. {alpha} not unique: left {lefts}, right {rights}")
    return InversePair(lefts[0], rights[0], alpha)


def identities(D: Digroup) -> tuple[int, ...]:
    n = D.n
    direct = tuple(e for e in D.halo if all(D.lp(e, x) == D.rp(x, e) for x in range(n)))
    via_inverses = []
    for e in D.halo:
        pairs = [inverses(D, x, e) for x in range(n)]
        if all(p.left_inv == p.right_inv for p in pairs):
            via_inverses.append(e)
    if tuple(via_inverses) != direct:
        raise InvariantViolation(
            f"identity characterizations disagree: {direct} vs {tuple(via_inverses)}")
    return direct


@dataclass(frozen=True)
class CentersPair:
    target: tuple[int, ...]
    source: tuple[int, ...]


def centers(D: Digroup) -> CentersPair:
    L, R = D.left, D.right
    # target: z ↼ x == x ⇀ z for all x;  source: x ↼ z == z ⇀ x for all x
    target = np.all(R == L.T, axis=1)
    source = np.all(R.T == L, axis=1)
    return CentersPair(tuple(int(z) for z in np.flatnonzero(target)),
                       tuple(int(z) for z in np.flatnonzero(source)))


def closure_of(D: Digroup, S: Iterable[int]) -> frozenset[int]:
    """Smallest subset containing ``S`` and closed under both products."""
    cur = set(S)
    frontier = list(cur)
    while frontier:
        new = []
        for a in frontier:
            for b in list(cur):
                for c in (D.lp(a, b), D.lp(b, a), D.rp(a, b), D.rp(b, a)):
                    if c not in cur:
                        cur.add(c)
                        new.append(c)
        frontier = new
    return frozenset(cur)


def _is_closed(D: Digroup, S: Sequence[int]) -> bool:
    s = set(S)
    return all(D.lp(a, b) in s and D.rp(a, b) in s for a in S for b in S)


def _restricted_tables(D: Digroup, S: Sequence[int]):
    pos = {a: k for k, a in enumerate(S)}
    left = [[pos[D.lp(a, b)] for b in S] for a in S]
    right = [[pos[D.rp(a, b)] for b in S] for a in S]
    return left, right


def restrict(D: Digroup, S: Iterable[int]) -> Digroup:
    """The subdigroup on ``S`` relabeled to ``0..|S|-1`` in ascending order.

    Labels of the result name the parent elements.
    """
    S = sorted(set(S))
    if not S or not _is_closed(D, S):
        raise StructureError(f"{S} is not closed under both products")
    left, right = _restricted_tables(D, S)
    return Digroup(left, right, labels=[D.label(a) for a in S])


def is_subdigroup(D: Digroup, S: Iterable[int]) -> bool:
    S = sorted(set(S))
    if any(not 0 <= a < D.n for a in S):
        raise StructureError("subset contains elements outside the carrier")
    if not S or not set(S) & set(D.halo):
        return False
    if not _is_closed(D, S):
        return False
    return validate_digroup(*_restricted_tables(D, S)).valid


def subdigroup_halos(D: Digroup, S: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(own halo of S, S ∩ halo(D))``, both as parent element ids.

    The two are reported separately because a subdigroup's bar-units need not
    coincide with the parent's.
    """
    S = sorted(set(S))
    sub = restrict(D, S)
    return tuple(S[a] for a in sub.halo), tuple(a for a in S if a in D.halo)


def all_subdigroups(D: Digroup, guard: int = SUBDIGROUP_GUARD) -> list[tuple[int, ...]]:
    """Every subdigroup, ordered by (size, elements).

    Closed subsets are enumerated by include/exclude branching where every
    include step jumps straight to the closure, so non-closed subsets are
    never visited.
    """
    if D.n > guard:
        raise GuardError(f"all_subdigroups: order {D.n} exceeds guard {guard}")
    found: set[frozenset[int]] = set()
    halo_set = set(D.halo)

    def grow(cur: frozenset[int], start: int, excluded: frozenset[int]):
        if cur and cur & halo_set:
            found.add(cur)
        for i in range(start, D.n):
            if i in cur or i in excluded:
                continue
            nxt = closure_of(D, cur | {i})
            if not nxt & excluded:
                grow(nxt, i + 1, excluded)
            excluded = excluded | {i}

    for a in D.halo:
        grow(closure_of(D, {a}), 0, frozenset())
    out = [tuple(sorted(S)) for S in found if is_subdigroup(D, S)]
    return sorted(out, key=lambda S: (len(S), S))


def relabel(D: Digroup, perm: Sequence[int]) -> Digroup:
    """Transport ``D`` along the bijection ``x -> perm[x]``."""
    n = D.n
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise StructureError("relabeling must be a bijection of the carrier")
    L = [[0] * n for _ in range(n)]
    R = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            L[perm[x]][perm[y]] = perm[D.lp(x, y)]
            R[perm[x]][perm[y]] = perm[D.rp(x, y)]
    labels = None
    if D.labels:
        labels = [""] * n
        for x in range(n):
            labels[perm[x]] = D.labels[x]
    return Digroup(L, R, labels)


def _rho(step, x: int) -> tuple[int, int]:
    """(tail length, cycle length) of the sequence x, step(x), step(step(x)), ..."""
    seen = {}
    cur, k = x, 0
    while cur not in seen:
        seen[cur] = k
        cur, k = step(cur), k + 1
    return seen[cur], k - seen[cur]


def element_profiles(D: Digroup) -> list[tuple]:
    """Per-element isomorphism-invariant data.

    Each profile holds halo/identity/center membership, the power-sequence
    shapes of ``x⇀x⇀…`` and ``x↼x↼…``, and the number of elements each side
    of ``x`` fixes.
    """
    n = D.n
    hal = set(D.halo)
    ids = set(identities(D))
    c = centers(D)
    tc, sc = set(c.target), set(c.source)
    out = []
    for x in range(n):
        out.append((
            x in hal, x in ids, x in tc, x in sc,
            _rho(lambda a, x=x: D.lp(a, x), x),
            _rho(lambda a, x=x: D.rp(a, x), x),
            D.lp(x, x) == x, D.rp(x, x) == x,
            sum(D.lp(x, y) == y for y in range(n)),
            sum(D.rp(y, x) == y for y in range(n)),
        ))
    return out


def _refine(digroups: Sequence[Digroup]) -> list[list[int]]:
    """Joint color refinement over several digroups.

    Colors are ranks of sorted signatures computed over all inputs together,
    so equal colors in different digroups mean equal invariant data.
    """
    sigs = [[(p,) for p in element_profiles(D)] for D in digroups]

    def compress(all_sigs):
        ranks = {s: k for k, s in enumerate(sorted({s for sg in all_sigs for s in sg}))}
        return [[ranks[s] for s in sg] for sg in all_sigs]

    colors = compress(sigs)
    n_classes = len({c for cs in colors for c in cs})
    while True:
        new_sigs = []
        for D, col in zip(digroups, colors):
            n = D.n
            sg = []
            for x in range(n):
                nb = sorted(
                    (col[y], col[D.lp(x, y)], col[D.lp(y, x)], col[D.rp(x, y)], col[D.rp(y, x)])
                    for y in range(n))
                sg.append((col[x], tuple(nb)))
            new_sigs.append(sg)
        colors = compress(new_sigs)
        k = len({c for cs in colors for c in cs})
        if k == n_classes:
            return colors
        n_classes = k


def _invariant_vector(D: Digroup) -> tuple:
    c = centers(D)
    return (D.n, len(D.halo), len(identities(D)), len(c.target), len(c.source))


def is_isomorphism(D1: Digroup, D2: Digroup, phi: Sequence[int]) -> bool:
    n = D1.n
    if D2.n != n or sorted(phi) != list(range(n)):
        return False
    return all(phi[D1.lp(x, y)] == D2.lp(phi[x], phi[y]) and phi[D1.rp(x, y)] == D2.rp(phi[x], phi[y])
               for x in range(n) for y in range(n))


def find_isomorphism(D1: Digroup, D2: Digroup) -> tuple[int, ...] | None:
    """A bijection preserving both products, or None.

    Backtracking assigns elements of ``D1`` in index order, tries candidates in
    ascending order and propagates every product of already-matched elements,
    so the answer is deterministic. Candidates are restricted to equal
    refined invariant colors.
    """
    n = D1.n
    if D2.n != n or _invariant_vector(D1) != _invariant_vector(D2):
        return None
    c1, c2 = _refine([D1, D2])
    if sorted(c1) != sorted(c2):
        return None
    fwd = [-1] * n
    bwd = [-1] * n
    matched: list[int] = []
    L1, R1, L2, R2 = D1._l, D1._r, D2._l, D2._r

    def assign(x: int, y: int) -> int:
        """Match x -> y plus every forced consequence; returns how many were
        matched, or -1 on contradiction (partial matches are left for undo)."""
        start = len(matched)
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            if fwd[a] != -1:
                if fwd[a] != b:
                    return -1
                continue
            if bwd[b] != -1 or c1[a] != c2[b]:
                return -1
            fwd[a], bwd[b] = b, a
            matched.append(a)
            for k in matched:
                for u, v in ((a, k), (k, a)):
                    fu, fv = fwd[u], fwd[v]
                    stack.append((L1[u][v], L2[fu][fv]))
                    stack.append((R1[u][v], R2[fu][fv]))
        return len(matched) - start

    def undo(to: int) -> None:
        while len(matched) > to:
            a = matched.pop()
            bwd[fwd[a]] = -1
            fwd[a] = -1

    def search(x: int) -> bool:
        while x < n and fwd[x] != -1:
            x += 1
        if x == n:
            return True
        for y in range(n):
            if bwd[y] != -1 or c2[y] != c1[x]:
                continue
            mark = len(matched)
            if assign(x, y) >= 0 and search(x + 1):
                return True
            undo(mark)
        return False

    if not search(0):
        return None
    phi = tuple(fwd)
    if not is_isomorphism(D1, D2, phi):
        raise InvariantViolation("isomorphism search returned a non-isomorphism")
    return phi


@dataclass(frozen=True)
class FiberPartition:
    """Partition of the carrier by the value of ``g -> e ⇀ g``.

    Fibers are ordered by their least element; ``representative_of[i]`` is the
    common value ``e ⇀ g`` on fiber ``i`` and ``fiber_of[g]`` the fiber of ``g``.
    """

    wrt: int
    fibers: tuple[tuple[int, ...], ...]
    representative_of: tuple[int, ...]
    fiber_of: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.fibers)

    def as_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(f) for f in self.fibers)


def fiber_partition(D: Digroup, e: int) -> FiberPartition:
    _require_bar_unit(D, e)
    by_value: dict[int, list[int]] = {}
    for g in range(D.n):
        by_value.setdefault(D.lp(e, g), []).append(g)
    fibers = sorted((tuple(v), k) for k, v in by_value.items())
    fiber_of = [0] * D.n
    for i, (members, _) in enumerate(fibers):
        for g in members:
            fiber_of[g] = i
    return FiberPartition(e, tuple(f for f, _ in fibers), tuple(r for _, r in fibers), tuple(fiber_of))


def left_translation(D: Digroup, f: int, P: FiberPartition) -> Permutation:
    """The permutation of fiber indices induced by ``x -> f ↼ x``.

    Every fiber must land inside a single fiber; otherwise the input is not a
    digroup and InvariantViolation is raised.
    """
    images = []
    for i, members in enumerate(P.fibers):
        targets = {P.fiber_of[D.rp(f, x)] for x in members}
        if len(targets) != 1:
            raise InvariantViolation(f"left translation by {f} splits fiber {i} over {sorted(targets)}")
        images.append(targets.pop())
    try:
        return Permutation(tuple(images))
    except StructureError as exc:
        raise InvariantViolation(f"left translation by {f} is not a permutation of fibers") from exc


def psi(D: Digroup, f: int, e: int | None = None,
        halo_order: Sequence[int] | None = None) -> Permutation:
    """``x -> (f ↼ x) ⇀ f⁻¹`` restricted to the halo, as a permutation of positions.

    Positions refer to ``halo_order`` (ascending halo by default). The inverse
    is taken w.r.t. ``e`` (least bar-unit by default); the left and the right
    inverse must give the same map.
    """
    if e is None:
        e = D.bar_unit
    if halo_order is None:
        halo_order = D.halo
    if sorted(halo_order) != list(D.halo):
        raise StructureError("halo_order must list every bar-unit exactly once")
    inv = inverses(D, f, e)
    pos = {a: k for k, a in enumerate(halo_order)}
    images = []
    for a in halo_order:
        via_left = D.lp(D.rp(f, a), inv.left_inv)
        via_right = D.lp(D.rp(f, a), inv.right_inv)
        if via_left != via_right:
            raise InvariantViolation(f"psi({f}) at {a}: left inverse gives {via_left}, right gives {via_right}")
        if via_left not in pos:
            raise InvariantViolation(f"psi({f}) maps bar-unit {a} outside the halo")
        images.append(pos[via_left])
    return Permutation(tuple(images))


def decompose(D: Digroup, x: int, e: int) -> tuple[int, int]:
    """Write ``x = α ⇀ f`` with ``α`` a bar-unit.

    Uses ``α = x ⇀ x⁻¹`` (left inverse w.r.t. ``e``) and ``f = e ⇀ x``, then
    checks the factorization and that no other bar-unit factors ``x``.
    """
    _require_bar_unit(D, e)
    alpha = D.lp(x, inverses(D, x, e).left_inv)
    f = D.lp(e, x)
    if alpha not in D.halo:
        raise InvariantViolation(f"decompose({x}): {alpha} is not a bar-unit")
    if D.lp(alpha, f) != x:
        raise InvariantViolation(f"decompose({x}): {alpha} ⇀ {f} != {x}")
    for beta in D.halo:
        if beta != alpha and any(D.lp(beta, g) == x for g in range(D.n)):
            raise InvariantViolation(f"decompose({x}): bar-units {alpha} and {beta} both factor it")
    return alpha, f


def group_digroup(table, labels: Sequence[str] | None = None) -> Digroup:
    """A group viewed as a digroup with both products equal to the group product."""
    return Digroup(table, table, labels)


def projection_digroup(n: int) -> Digroup:
    """``x ⇀ y = x`` and ``x ↼ y = y`` on ``n`` points."""
    if n < 1:
        raise StructureError("carrier must be nonempty")
    left = [[x] * n for x in range(n)]
    right = [list(range(n)) for _ in range(n)]
    return Digroup(left, right)

