import itertools

import pytest
from hypothesis import given, settings, strategies as st

from digroups import core
from digroups.cayley import embed
from digroups.enumeration import (
    Catalog,
    brute_enumerate,
    canonical_key,
    constructive_enumerate,
    cross_check,
)
from digroups.errors import GuardError
from digroups.groups import CATALOG_NAMES, catalog_group, groups_of_order, named_group_digroup
from digroups.perms import center

from conftest import cyclic_table


# group counts for orders 1..12 are standard
@pytest.mark.parametrize("m,count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 1), (6, 2),
                                     (7, 1), (8, 5), (9, 2), (10, 2), (11, 1), (12, 5)])
def test_group_catalog_counts(m, count):
    assert len(groups_of_order(m)) == count


def test_group_catalog_pairwise_distinct():
    digroups = {name: named_group_digroup(name) for name in CATALOG_NAMES}
    for a, b in itertools.combinations(CATALOG_NAMES, 2):
        if digroups[a].n == digroups[b].n:
            assert core.find_isomorphism(digroups[a], digroups[b]) is None, (a, b)


def test_group_catalog_spot_checks():
    assert catalog_group("Q8").is_abelian() is False
    assert len(center(catalog_group("Q8"))) == 2
    assert len(center(catalog_group("D4"))) == 2
    assert len(center(catalog_group("A4"))) == 1
    assert len(center(catalog_group("Dic3"))) == 2
    assert len(center(catalog_group("D6"))) == 2
    # Q8 and Dic3 each have a unique involution
    for name in ("Q8", "Dic3"):
        G = catalog_group(name)
        assert sum(1 for g in G if g.order() == 2) == 1


def test_brute_small_orders():
    assert len(brute_enumerate(1)) == 1
    cat2 = brute_enumerate(2)
    assert len(cat2) == 2
    assert cat2.find(core.group_digroup(cyclic_table(2))) is not None
    assert cat2.find(core.projection_digroup(2)) is not None
    cat3 = brute_enumerate(3)
    assert cat3.find(core.group_digroup(cyclic_table(3))) is not None
    assert cat3.find(core.projection_digroup(3)) is not None


def test_constructive_examples(EX4, C4, V4):
    cat = constructive_enumerate(2)
    assert len(cat) == 2
    assert sorted((p["delta"], p["group"]) for p in cat.provenance) == [(1, "C2"), (2, "C1")]
    cat4 = constructive_enumerate(4)
    for D in (EX4, C4, V4, core.projection_digroup(4)):
        assert cat4.find(D) is not None
    assert len(constructive_enumerate(1)) == 1


def test_guards():
    with pytest.raises(GuardError):
        brute_enumerate(5)
    with pytest.raises(GuardError):
        constructive_enumerate(13)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cross_check_small(n):
    r = cross_check(n)
    assert r.matched and len(r.matching) == r.brute_count == r.constructive_count


def test_catalog_members_valid_and_pairwise_distinct(catalog):
    for D in catalog:
        assert core.validate_digroup(D.left, D.right).valid
        embed(D)
    for A, B in itertools.combinations(catalog, 2):
        if A.n == B.n:
            assert core.find_isomorphism(A, B) is None


def test_every_candidate_matches_exactly_one_class():
    from digroups.transform import build
    for n in range(1, 7):
        cat = constructive_enumerate(n)
        for prov in cat.provenance:
            D = build(prov["spec"]).digroup
            hits = [k for k, C in enumerate(cat.classes) if core.find_isomorphism(D, C) is not None]
            assert len(hits) == 1


def test_catalog_add_dedups(C4):
    cat = Catalog(4, "test")
    assert cat.add(C4)
    assert not cat.add(core.relabel(C4, [2, 0, 3, 1]))
    assert len(cat) == 1 and cat.candidates == 2


def test_canonical_key_examples(C2, P2, C4, V4):
    assert canonical_key(C2) == canonical_key(core.relabel(C2, [1, 0]))
    assert canonical_key(C2) != canonical_key(P2)
    assert canonical_key(C2).summary()["halo"] == 1 and canonical_key(P2).summary()["halo"] == 2
    assert canonical_key(C4) != canonical_key(V4)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_canonical_key_relabeling_invariant(catalog, data):
    D = data.draw(st.sampled_from(catalog))
    perm = data.draw(st.permutations(list(range(D.n))))
    assert canonical_key(core.relabel(D, list(perm))) == canonical_key(D)


def test_canonical_key_separates_catalog(catalog):
    keys = [canonical_key(D) for D in catalog]
    assert all(k.table is not None for k in keys)
    assert len(set(keys)) == len(keys)


def test_constructive_counts_are_stable():
    # computed, not assumed: orders 1..6 from the constructive method
    counts = [len(constructive_enumerate(n)) for n in range(1, 7)]
    assert counts[:3] == [len(brute_enumerate(n)) for n in range(1, 4)]
    assert counts == [1, 2, 2, 5, 2, 6]


@pytest.mark.slow
def test_cross_check_order_4():
    assert cross_check(4).matched


def test_constructive_orders_7_to_10_embed():
    for n in range(7, 11):
        cat = constructive_enumerate(n)
        assert len(cat) >= 2   # at least the cyclic group and the projections
        for D in cat.classes:
            assert embed(D).evidence["order"] == n
