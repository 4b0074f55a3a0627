"""Transformation digroups on a product ``Δ × Γ``.

Points of ``Δ × Γ`` are pairs ``(k, i)``. An l-map ``LMap(s, f)`` sends every
point ``(k, i)`` to ``(s, f(i))``; it forgets ``k`` and is therefore not a
bijection once ``|Δ| > 1``. A theta-permutation ``ℓ̄_f`` sends ``(k, i)`` to
``(θ(f)(k), f(i))``. Given a group ``G ≤ Sym(Γ)`` and a homomorphism
``θ: G -> Sym(Δ)``, the l-maps with ``f ∈ G`` form a digroup under

    left   LMap(s, f) ⇀ LMap(t, g) = LMap(s, f∘g)
    right  LMap(s, f) ↼ LMap(t, g) = LMap(θ(f)(t), f∘g)

``build`` tabulates these products as a :class:`~digroups.core.Digroup`,
indexing ``LMap(s, f)`` as ``G.index(f) * |Δ| + s``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import core
from .core import Digroup, InversePair
from .errors import GuardError, InvariantViolation, StructureError
from .perms import (
    GroupHomomorphism,
    PermGroup,
    Permutation,
    all_homomorphisms,
    all_subgroups,
    center,
    closure,
    compose,
    fixes_point,
    hom_from_images,
    invert,
    kernel,
    symmetric_group,
)

__all__ = [
    "LMap",
    "ThetaPermutation",
    "TransDigroupSpec",
    "BuiltDigroup",
    "SubdigroupSpec",
    "FormulaReport",
    "lmap_apply",
    "lmap_compose",
    "theta_perm",
    "mixed_compose_left",
    "mixed_compose_right",
    "left_product",
    "right_product",
    "build",
    "inverse_formulas",
    "analyze_formulaic",
    "fixed_block",
    "subdigroup_spec_check",
    "materialize_sub",
    "subdigroup_specs",
    "spec_matrix",
    "spec_from_generators",
    "ex4_spec",
    "BUILD_GUARD",
]

BUILD_GUARD = 5000

Point = tuple[int, int]


@dataclass(frozen=True, order=True)
class LMap:
    s: int
    f: Permutation

    def __str__(self) -> str:
        return f"l[{self.s}; {self.f.one_line()}]"


@dataclass(frozen=True)
class TransDigroupSpec:
    """Data for one transformation digroup: ``|Γ|``, ``|Δ|``, ``G ≤ Sym(Γ)``,
    ``θ: G -> Sym(Δ)`` and the base point of ``Δ`` used for the bar-unit
    ``LMap(base_point, 1)``."""

    gamma_size: int
    delta_size: int
    G: PermGroup
    theta: GroupHomomorphism
    base_point: int = 0

    def __post_init__(self):
        if self.gamma_size < 1 or self.delta_size < 1:
            raise StructureError("gamma and delta must be nonempty")
        if self.G.degree != self.gamma_size:
            raise StructureError(f"G acts on {self.G.degree} points, gamma is {self.gamma_size}")
        if self.theta.domain != self.G:
            raise StructureError("theta's domain is not G")
        if self.theta.codomain_degree != self.delta_size:
            raise StructureError("theta's codomain degree is not delta")
        if not 0 <= self.base_point < self.delta_size:
            raise StructureError(f"base point {self.base_point} outside delta")

    @property
    def order(self) -> int:
        return self.delta_size * len(self.G)

    @property
    def bar_unit(self) -> LMap:
        return LMap(self.base_point, self.G.identity)

    def elements(self) -> list[LMap]:
        """All l-maps, in index order."""
        return [LMap(s, f) for f in self.G.elements for s in range(self.delta_size)]

    def index(self, x: LMap) -> int:
        return self.G.index(x.f) * self.delta_size + x.s

    def points(self) -> list[Point]:
        return [(k, i) for k in range(self.delta_size) for i in range(self.gamma_size)]

    def check(self, x: LMap) -> LMap:
        if not 0 <= x.s < self.delta_size or x.f not in self.G:
            raise StructureError(f"{x} is not an element of this transformation digroup")
        return x


def lmap_apply(l: LMap, p: Point, delta_size: int | None = None) -> Point:
    k, i = p
    if not 0 <= i < l.f.degree or k < 0 or (delta_size is not None and k >= delta_size):
        raise StructureError(f"point {p} out of range")
    return (l.s, l.f(i))


def lmap_compose(a: LMap, b: LMap) -> LMap:
    """``a`` after ``b`` as maps of ``Δ × Γ``; ``b``'s Δ-coordinate is discarded."""
    return LMap(a.s, compose(a.f, b.f))


@dataclass(frozen=True)
class ThetaPermutation:
    f: Permutation
    action: dict

    def __call__(self, p: Point) -> Point:
        return self.action[p]


def _theta_multiplicative(spec: TransDigroupSpec) -> None:
    pts = spec.points()
    bars = {f: {(k, i): (spec.theta(f)(k), f(i)) for k, i in pts} for f in spec.G.elements}
    for f, g in itertools.product(spec.G.elements, repeat=2):
        fg = bars[compose(f, g)]
        bf, bg = bars[f], bars[g]
        if any(bf[bg[p]] != fg[p] for p in pts):
            raise InvariantViolation(f"theta-permutations not multiplicative at f={f}, g={g}")


def theta_perm(spec: TransDigroupSpec, f: Permutation) -> ThetaPermutation:
    if f not in spec.G:
        raise StructureError(f"{f} is not in G")
    tf = spec.theta(f)
    action = {(k, i): (tf(k), f(i)) for k, i in spec.points()}
    if len(set(action.values())) != len(action):
        raise InvariantViolation(f"theta-permutation of {f} is not a bijection")
    return ThetaPermutation(f, action)


def _agrees_pointwise(spec: TransDigroupSpec, outer, inner, expected: LMap) -> bool:
    return all(outer(inner(p)) == lmap_apply(expected, p) for p in spec.points())


def mixed_compose_left(spec: TransDigroupSpec, f: Permutation, b: LMap) -> LMap:
    """``ℓ̄_f`` after ``b``: ``LMap(θ(f)(t), f∘g)`` for ``b = LMap(t, g)``."""
    spec.check(b)
    bar = theta_perm(spec, f)
    out = LMap(spec.theta(f)(b.s), compose(f, b.f))
    if not _agrees_pointwise(spec, bar, lambda p: lmap_apply(b, p), out):
        raise InvariantViolation(f"mixed composition theta({f}) . {b} disagrees pointwise")
    return out


def mixed_compose_right(spec: TransDigroupSpec, a: LMap, g: Permutation) -> LMap:
    """``a`` after ``ℓ̄_g``: θ plays no role on this side."""
    spec.check(a)
    bar = theta_perm(spec, g)
    out = LMap(a.s, compose(a.f, g))
    if not _agrees_pointwise(spec, lambda p: lmap_apply(a, p), bar, out):
        raise InvariantViolation(f"mixed composition {a} . theta({g}) disagrees pointwise")
    return out


def left_product(spec: TransDigroupSpec, a: LMap, b: LMap) -> LMap:
    return LMap(a.s, compose(a.f, b.f))


def right_product(spec: TransDigroupSpec, a: LMap, b: LMap) -> LMap:
    return LMap(spec.theta(a.f)(b.s), compose(a.f, b.f))


@dataclass(frozen=True)
class BuiltDigroup:
    spec: TransDigroupSpec
    digroup: Digroup
    lmaps: tuple[LMap, ...]

    def index(self, x: LMap) -> int:
        return self.spec.index(x)

    def __getitem__(self, k: int) -> LMap:
        return self.lmaps[k]


def build(spec: TransDigroupSpec, guard: int = BUILD_GUARD) -> BuiltDigroup:
    if spec.order > guard:
        raise GuardError(f"order {spec.order} exceeds materialization guard {guard}")
    _theta_multiplicative(spec)
    els = spec.elements()
    left = [[spec.index(left_product(spec, a, b)) for b in els] for a in els]
    right = [[spec.index(right_product(spec, a, b)) for b in els] for a in els]
    D = Digroup(left, right, labels=[str(x) for x in els])
    return BuiltDigroup(spec, D, tuple(els))


def inverse_formulas(spec: TransDigroupSpec, x: LMap) -> InversePair:
    """Closed-form inverses of ``x`` w.r.t. the bar-unit ``LMap(base, 1)``.

    Returns an InversePair whose entries are LMaps rather than indices.
    """
    spec.check(x)
    base = spec.base_point
    finv = invert(x.f)
    return InversePair(LMap(base, finv), LMap(spec.theta(finv)(base), finv), spec.bar_unit)


@dataclass(frozen=True)
class FormulaReport:
    halo: tuple[LMap, ...]
    identities: tuple[LMap, ...]
    target_center: tuple[LMap, ...]
    source_center: tuple[LMap, ...]

    def indices(self, spec: TransDigroupSpec) -> dict[str, tuple[int, ...]]:
        return {name: tuple(sorted(spec.index(x) for x in getattr(self, name)))
                for name in ("halo", "identities", "target_center", "source_center")}


def analyze_formulaic(spec: TransDigroupSpec) -> FormulaReport:
    """Halo, identities and both centers from the group-theoretic criteria alone."""
    one = spec.G.identity
    im = list(set(spec.theta.map.values()))
    ker = kernel(spec.theta)
    Z = center(spec.G)
    delta = range(spec.delta_size)
    stable = [s for s in delta if fixes_point(im, s)]
    els = spec.elements()
    key = spec.index
    return FormulaReport(
        halo=tuple(LMap(s, one) for s in delta),
        identities=tuple(LMap(s, one) for s in stable),
        target_center=tuple(sorted((x for x in els if x.f in ker and x.f in Z), key=key)),
        source_center=tuple(sorted((x for x in els if x.s in stable and x.f in Z), key=key)),
    )


@dataclass(frozen=True)
class SubdigroupSpec:
    omega: frozenset[int]
    H: PermGroup


def fixed_block(spec: TransDigroupSpec, sub: SubdigroupSpec) -> bool:
    """Whether ``Ω`` is a nonempty block mapped onto itself by every ``θ(h)``, ``h ∈ H``."""
    if not sub.omega or not sub.H.is_subgroup_of(spec.G):
        return False
    return all({spec.theta(h)(k) for k in sub.omega} == set(sub.omega) for h in sub.H)


def materialize_sub(spec: TransDigroupSpec, sub: SubdigroupSpec) -> tuple[LMap, ...]:
    return tuple(sorted((LMap(s, h) for h in sub.H for s in sub.omega), key=spec.index))


def subdigroup_spec_check(spec: TransDigroupSpec, sub: SubdigroupSpec,
                          built: BuiltDigroup | None = None) -> bool:
    """Whether the l-maps over ``Ω × H`` form a subdigroup.

    Decided on the materialized tables; the block criterion must agree or
    InvariantViolation is raised.
    """
    if any(not 0 <= s < spec.delta_size for s in sub.omega) or not sub.H.is_subgroup_of(spec.G):
        raise StructureError("omega must lie in delta and H in G")
    if built is None:
        built = build(spec)
    members = [spec.index(x) for x in materialize_sub(spec, sub)]
    brute = bool(members) and core.is_subdigroup(built.digroup, members)
    if brute != fixed_block(spec, sub):
        raise InvariantViolation(
            f"block criterion disagrees with brute force for omega={sorted(sub.omega)}, |H|={len(sub.H)}")
    return brute


def subdigroup_specs(spec: TransDigroupSpec) -> list[SubdigroupSpec]:
    """All (Ω, H) with ``H ≤ G`` and ``Ω`` a θ(H)-invariant nonempty block."""
    out = []
    for H in all_subgroups(spec.G):
        for k in range(1, spec.delta_size + 1):
            for omega in itertools.combinations(range(spec.delta_size), k):
                sub = SubdigroupSpec(frozenset(omega), H)
                if fixed_block(spec, sub):
                    out.append(sub)
    return out


def spec_matrix(max_gamma: int = 3, max_delta: int = 3) -> Iterable[TransDigroupSpec]:
    """Every spec with ``|Γ| ≤ max_gamma``, ``|Δ| ≤ max_delta``, every subgroup
    ``G ≤ Sym(Γ)`` and every homomorphism ``θ: G -> Sym(Δ)``."""
    for gamma in range(1, max_gamma + 1):
        for G in all_subgroups(symmetric_group(gamma)):
            for delta in range(1, max_delta + 1):
                for theta in all_homomorphisms(G, delta):
                    yield TransDigroupSpec(gamma, delta, G, theta)


def spec_from_generators(gamma: int, delta: int, gens: Sequence[Permutation],
                         theta_images: Sequence[Permutation], base_point: int = 0,
                         guard: int = BUILD_GUARD) -> TransDigroupSpec:
    """Spec from generators of G and their θ-images; G may have at most
    ``guard // delta`` elements so the spec stays buildable."""
    G = closure(gamma, gens, limit=max(1, guard // max(delta, 1)))
    theta = hom_from_images(G, delta, list(theta_images))
    return TransDigroupSpec(gamma, delta, G, theta, base_point)


def ex4_spec() -> TransDigroupSpec:
    """``Γ = Δ = {0, 1}``, ``G = Sym(Γ)`` and ``θ`` the swap-to-swap isomorphism."""
    swap = Permutation((1, 0))
    return spec_from_generators(2, 2, [swap], [swap])
