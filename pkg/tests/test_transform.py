import itertools

import pytest

from digroups import core
from digroups.errors import GuardError, NotAHomomorphismError, StructureError
from digroups.perms import (
    Permutation,
    all_subgroups,
    closure,
    hom_from_images,
    invert,
    symmetric_group,
)
from digroups.transform import (
    LMap,
    SubdigroupSpec,
    TransDigroupSpec,
    analyze_formulaic,
    build,
    ex4_spec,
    fixed_block,
    inverse_formulas,
    left_product,
    lmap_apply,
    lmap_compose,
    materialize_sub,
    mixed_compose_left,
    mixed_compose_right,
    right_product,
    spec_from_generators,
    spec_matrix,
    subdigroup_spec_check,
    subdigroup_specs,
    theta_perm,
)

from conftest import L01, L0S, L11, L1S, naive_is_digroup

one = Permutation.identity(2)
sigma = Permutation((1, 0))


@pytest.fixture(scope="module")
def spec4():
    return ex4_spec()


@pytest.fixture(scope="module")
def matrix():
    return list(spec_matrix())


def trivial_theta_spec(G, delta):
    return TransDigroupSpec(G.degree, delta, G, hom_from_images(
        G, delta, [Permutation.identity(delta)] * len(G.generators)))


# ---- l-maps and theta-permutations -----------------------------------------

def test_lmap_apply_examples():
    for k, i in itertools.product(range(2), repeat=2):
        assert lmap_apply(LMap(0, one), (k, i)) == (0, i)
    assert lmap_apply(LMap(0, sigma), (1, 1)) == (0, 0)
    assert lmap_apply(LMap(1, sigma), (0, 0)) == (1, 1)
    with pytest.raises(StructureError):
        lmap_apply(LMap(0, sigma), (0, 2))
    with pytest.raises(StructureError):
        lmap_apply(LMap(0, sigma), (2, 0), delta_size=2)


def test_lmap_compose_examples():
    assert lmap_compose(LMap(1, sigma), LMap(0, one)) == LMap(1, sigma)
    assert lmap_compose(LMap(0, sigma), LMap(1, sigma)) == LMap(0, one)
    assert lmap_compose(LMap(1, one), LMap(0, sigma)) == LMap(1, sigma)


def test_lmap_compose_is_function_composition(matrix):
    for spec in matrix[::5]:
        for a, b in itertools.product(spec.elements(), repeat=2):
            c = lmap_compose(a, b)
            assert all(lmap_apply(c, p) == lmap_apply(a, lmap_apply(b, p)) for p in spec.points())


def test_theta_perm_examples(spec4):
    ident = theta_perm(spec4, one)
    assert all(ident(p) == p for p in spec4.points())
    assert theta_perm(spec4, sigma)((0, 1)) == (1, 0)
    G = closure(3, [Permutation((1, 2, 0))])
    spec = trivial_theta_spec(G, 2)
    f = G.elements[1]
    bar = theta_perm(spec, f)
    assert all(bar((k, i)) == (k, f(i)) for k, i in spec.points())
    with pytest.raises(StructureError):
        theta_perm(spec, Permutation((1, 0, 2)))


def test_theta_perms_multiplicative(matrix):
    for spec in matrix:
        bars = {f: theta_perm(spec, f) for f in spec.G}
        for f, g in itertools.product(spec.G, repeat=2):
            fg = bars[f * g]
            assert all(bars[f](bars[g](p)) == fg(p) for p in spec.points())


def test_mixed_compose_examples(spec4):
    assert mixed_compose_left(spec4, sigma, LMap(1, one)) == LMap(0, sigma)
    assert mixed_compose_right(spec4, LMap(0, sigma), sigma) == LMap(0, one)
    for b in spec4.elements():
        assert mixed_compose_left(spec4, one, b) == b


def test_mixed_compose_all_pairs(matrix):
    # both functions verify pointwise internally and raise on disagreement
    for spec in matrix:
        for f in spec.G:
            for x in spec.elements():
                mixed_compose_left(spec, f, x)
                mixed_compose_right(spec, x, f)


# ---- products and build ----------------------------------------------------

def test_product_examples(spec4):
    assert left_product(spec4, LMap(0, sigma), LMap(1, sigma)) == LMap(0, one)
    assert right_product(spec4, LMap(0, sigma), LMap(0, one)) == LMap(1, sigma)
    for s in range(2):
        for x in spec4.elements():
            assert right_product(spec4, LMap(s, one), x) == x


def test_build_ex4(spec4, EX4):
    B = build(spec4)
    assert B.digroup.n == 4 and B.digroup.halo == (L01, L11)
    assert core.identities(B.digroup) == ()
    assert [str(x) for x in B.lmaps] == ["l[0; 0 1]", "l[1; 0 1]", "l[0; 1 0]", "l[1; 1 0]"]
    assert B[L1S] == LMap(1, sigma) and B.index(LMap(0, sigma)) == L0S


def test_build_single_point_delta_is_the_group():
    for n in (1, 2, 3):
        G = symmetric_group(n)
        D = build(trivial_theta_spec(G, 1)).digroup
        table = G.table()
        assert D.left.tolist() == D.right.tolist() == table
        assert core.find_isomorphism(D, core.group_digroup(table)) is not None


def test_build_trivial_group_gives_projection():
    for d in range(1, 5):
        D = build(trivial_theta_spec(closure(1, []), d)).digroup
        assert D.left.tolist() == core.projection_digroup(d).left.tolist()
        assert D.right.tolist() == core.projection_digroup(d).right.tolist()


def test_build_guard():
    with pytest.raises(GuardError):
        build(trivial_theta_spec(symmetric_group(3), 3), guard=10)


def test_build_tables_match_products(matrix):
    for spec in matrix:
        B = build(spec)
        for (i, a), (j, b) in itertools.product(enumerate(B.lmaps), repeat=2):
            assert B.digroup.lp(i, j) == spec.index(left_product(spec, a, b))
            assert B.digroup.rp(i, j) == spec.index(right_product(spec, a, b))


def test_build_agrees_with_naive_oracle(matrix):
    for spec in matrix:
        if spec.order <= 12:
            D = build(spec).digroup
            assert naive_is_digroup(D.left.tolist(), D.right.tolist())[0]


def test_spec_validation():
    G = closure(2, [sigma])
    theta = hom_from_images(G, 2, [sigma])
    with pytest.raises(StructureError):
        TransDigroupSpec(2, 3, G, theta)
    with pytest.raises(StructureError):
        TransDigroupSpec(2, 2, G, theta, base_point=2)
    with pytest.raises(NotAHomomorphismError):
        spec_from_generators(3, 2, [Permutation((1, 2, 0))], [sigma])


def test_spec_matrix_size(matrix):
    # subgroups of Sym1, Sym2, Sym3 times every theta into Sym1..Sym3
    assert len(matrix) == 55


# ---- inverses and formulaic analysis ---------------------------------------

def test_inverse_formula_examples(spec4):
    for s in range(2):
        pair = inverse_formulas(spec4, LMap(s, one))
        assert (pair.left_inv, pair.right_inv) == (LMap(0, one), LMap(0, one))
    pair = inverse_formulas(spec4, LMap(0, sigma))
    assert (pair.left_inv, pair.right_inv) == (LMap(0, sigma), LMap(1, sigma))
    G = closure(3, [Permutation((1, 2, 0))])
    spec = trivial_theta_spec(G, 3)
    for x in spec.elements():
        pair = inverse_formulas(spec, x)
        assert pair.left_inv == pair.right_inv == LMap(0, invert(x.f))


def test_inverse_formulas_match_scan(matrix):
    for spec in matrix:
        B = build(spec)
        e = spec.index(spec.bar_unit)
        for x in B.lmaps:
            pair = inverse_formulas(spec, x)
            scan = core.inverses(B.digroup, spec.index(x), e)
            assert (spec.index(pair.left_inv), spec.index(pair.right_inv)) == (scan.left_inv, scan.right_inv)
            assert left_product(spec, pair.left_inv, x) == spec.bar_unit
            assert right_product(spec, x, pair.right_inv) == spec.bar_unit


def test_formula_report_ex4(spec4):
    r = analyze_formulaic(spec4)
    assert r.halo == (LMap(0, one), LMap(1, one))
    assert r.identities == () and r.source_center == ()
    assert r.target_center == r.halo


def test_formula_report_degenerate_cases():
    G = closure(3, [Permutation((1, 2, 0))])
    spec = trivial_theta_spec(G, 2)
    r = analyze_formulaic(spec)
    assert r.identities == r.halo
    assert set(r.target_center) == set(r.source_center) == set(spec.elements())
    S3 = symmetric_group(3)
    r = analyze_formulaic(trivial_theta_spec(S3, 1))
    assert r.halo == (LMap(0, S3.identity),)
    assert r.target_center == r.source_center == (LMap(0, S3.identity),)


def test_formula_report_matches_scan(matrix):
    for spec in matrix:
        D = build(spec).digroup
        c = core.centers(D)
        assert analyze_formulaic(spec).indices(spec) == {
            "halo": D.halo,
            "identities": core.identities(D),
            "target_center": c.target,
            "source_center": c.source,
        }


# ---- subdigroups -----------------------------------------------------------

def test_subdigroup_spec_examples(spec4):
    G = spec4.G
    trivial = closure(2, [])
    assert subdigroup_spec_check(spec4, SubdigroupSpec(frozenset({0, 1}), G))
    assert not subdigroup_spec_check(spec4, SubdigroupSpec(frozenset({0}), G))
    sub = SubdigroupSpec(frozenset({0, 1}), trivial)
    assert subdigroup_spec_check(spec4, sub)
    assert materialize_sub(spec4, sub) == (LMap(0, one), LMap(1, one))
    assert not fixed_block(spec4, SubdigroupSpec(frozenset(), G))


def test_subdigroups_are_exactly_product_blocks(matrix):
    for spec in matrix:
        B = build(spec)
        D = B.digroup
        # every (omega, H) pair agrees with the brute-force closure test
        for H in all_subgroups(spec.G):
            for k in range(1, spec.delta_size + 1):
                for omega in itertools.combinations(range(spec.delta_size), k):
                    subdigroup_spec_check(spec, SubdigroupSpec(frozenset(omega), H), B)
        if D.n > core.SUBDIGROUP_GUARD:
            continue
        brute = {frozenset(S) for S in core.all_subdigroups(D)}
        blocks = {frozenset(spec.index(x) for x in materialize_sub(spec, s))
                  for s in subdigroup_specs(spec)}
        assert brute == blocks
