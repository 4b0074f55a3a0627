"""Cayley-style representation of an abstract finite digroup.

Given a digroup ``D`` and a bar-unit ``e``:

* ``Γ`` is the set of fibers of ``g -> e ⇀ g``;
* each ``f`` acts on ``Γ`` by the left translation ``x -> f ↼ x``, and the
  distinct translations form a permutation group ``T ≤ Sym(Γ)``;
* ``Δ`` is the halo, ordered with ``e`` first, and ``θ`` sends the
  translation of ``f`` to ``psi(f)`` acting on ``Δ``;
* ``x = α ⇀ f`` is mapped to ``LMap(position of α, translation of f)``.

:func:`embed` assembles all of this and :func:`verify_embedding` checks that
the result is an isomorphism onto the transformation digroup built from
``(T, θ)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .core import Digroup, FiberPartition
from .errors import InvariantViolation, VerificationError
from .perms import GroupHomomorphism, PermGroup, Permutation, closure, compose
from .transform import LMap, TransDigroupSpec, build, left_product, right_product

__all__ = [
    "TranslationGroup",
    "Embedding",
    "translation_group",
    "theta_hom",
    "embed",
    "verify_embedding",
]


@dataclass(frozen=True)
class TranslationGroup:
    source: Digroup
    partition: FiberPartition
    group: PermGroup
    rep: tuple[Permutation, ...]   # rep[f] = translation by f

    def __getitem__(self, f: int) -> Permutation:
        return self.rep[f]


def translation_group(D: Digroup, e: int) -> TranslationGroup:
    P = core.fiber_partition(D, e)
    rep = tuple(core.left_translation(D, f, P) for f in range(D.n))
    distinct = sorted(set(rep))
    G = closure(len(P), [p for p in distinct if not p.is_identity()])
    if set(G.elements) != set(distinct):
        raise InvariantViolation(
            f"left translations are not closed: {len(distinct)} distinct, closure has {len(G)}")
    return TranslationGroup(D, P, G, rep)


def _halo_order(D: Digroup, e: int) -> tuple[int, ...]:
    return (e,) + tuple(a for a in D.halo if a != e)


def theta_hom(T: TranslationGroup, halo_order: tuple[int, ...] | None = None) -> GroupHomomorphism:
    """Translation of ``f`` -> ``psi(f)`` on the halo.

    Two elements with the same translation must have the same ``psi``; a
    collision with different values is reported as InvariantViolation.
    """
    D = T.source
    e = T.partition.wrt
    if halo_order is None:
        halo_order = _halo_order(D, e)
    m: dict[Permutation, Permutation] = {}
    witness: dict[Permutation, int] = {}
    for f in range(D.n):
        p = core.psi(D, f, e, halo_order)
        t = T.rep[f]
        if t in m and m[t] != p:
            raise InvariantViolation(
                f"elements {witness[t]} and {f} share a translation but not psi")
        m.setdefault(t, p)
        witness.setdefault(t, f)
    # the product law for both products, element by element
    for f in range(D.n):
        for g in range(D.n):
            pf, pg = m[T.rep[f]], m[T.rep[g]]
            for h in (D.lp(f, g), D.rp(f, g)):
                if m[T.rep[h]] != compose(pf, pg):
                    raise InvariantViolation(f"psi not multiplicative at ({f}, {g})")
    return GroupHomomorphism(T.group, len(halo_order), m)


@dataclass(frozen=True)
class Embedding:
    source: Digroup
    bar_unit: int
    spec: TransDigroupSpec
    halo_order: tuple[int, ...]
    translations: TranslationGroup
    map: tuple[LMap, ...]            # map[x] = image of element x
    evidence: dict

    def target_index(self, x: int) -> int:
        return self.spec.index(self.map[x])

    def index_map(self) -> tuple[int, ...]:
        return tuple(self.spec.index(l) for l in self.map)


def _build_map(D: Digroup, e: int, T: TranslationGroup, halo_order) -> tuple[LMap, ...]:
    pos = {a: k for k, a in enumerate(halo_order)}
    out = []
    for x in range(D.n):
        alpha, f = core.decompose(D, x, e)
        out.append(LMap(pos[alpha], T.rep[f]))
    return tuple(out)


def embed(D: Digroup, e: int | None = None) -> Embedding:
    """Map ``D`` into a transformation digroup and verify the result.

    The embedding is returned only after all checks of
    :func:`verify_embedding` have passed.
    """
    if e is None:
        e = D.bar_unit
    T = translation_group(D, e)
    order = _halo_order(D, e)
    theta = theta_hom(T, order)
    spec = TransDigroupSpec(len(T.partition), len(order), T.group, theta, base_point=0)
    lam = _build_map(D, e, T, order)
    E = Embedding(D, e, spec, order, T, lam, {})
    evidence = verify_embedding(D, E)
    object.__setattr__(E, "evidence", evidence)
    return E


def verify_embedding(D: Digroup, E: Embedding) -> dict:
    """Check that ``E.map`` is an isomorphism onto ``build(E.spec)``.

    Returns an evidence record; any failed check raises VerificationError
    naming the witness.
    """
    lam, spec = E.map, E.spec
    n = D.n
    seen: dict[LMap, int] = {}
    for x, l in enumerate(lam):
        if l in seen:
            raise VerificationError("injective", (seen[l], x))
        seen[l] = x
    for x in range(n):
        for y in range(n):
            if lam[D.lp(x, y)] != left_product(spec, lam[x], lam[y]):
                raise VerificationError("preserves-left", (x, y))
            if lam[D.rp(x, y)] != right_product(spec, lam[x], lam[y]):
                raise VerificationError("preserves-right", (x, y))
    target = build(spec)
    missing = set(target.lmaps) - set(lam)
    if missing:
        raise VerificationError("surjective", min(missing, key=spec.index))
    if n != len(D.halo) * len(E.translations.group):
        raise VerificationError("order-factorization", (n, len(D.halo), len(E.translations.group)))
    # the same statement on tables: lam as an index map is an isomorphism
    if not core.is_isomorphism(D, target.digroup, E.index_map()):
        raise VerificationError("table-isomorphism", E.index_map())
    return {
        "injective": True,
        "preserves_left": True,
        "preserves_right": True,
        "surjective": True,
        "order": n,
        "halo_size": len(D.halo),
        "translation_group_size": len(E.translations.group),
        "order_factorization": True,
    }
