import itertools
import math

import pytest
from hypothesis import given, strategies as st

from digroups.errors import GuardError, NotAHomomorphismError, StructureError
from digroups.perms import (
    Permutation,
    all_homomorphisms,
    all_subgroups,
    center,
    closure,
    compose,
    fixes_point,
    hom_from_images,
    image,
    invert,
    kernel,
    symmetric_group,
)

swap = Permutation((1, 0))
c3 = Permutation.from_cycles(3, "(0 1 2)")


def perms(degree):
    return st.permutations(list(range(degree))).map(lambda p: Permutation(tuple(p)))


def test_compose_examples():
    assert compose(swap, swap) == Permutation.identity(2)
    assert compose(c3, c3) == Permutation.from_cycles(3, "(0 2 1)")
    assert compose(c3, Permutation.identity(3)) == c3


def test_compose_is_functional_order():
    p = Permutation((1, 2, 0))
    q = Permutation((0, 2, 1))
    assert all(compose(p, q)(i) == p(q(i)) for i in range(3))


def test_compose_degree_mismatch():
    with pytest.raises(StructureError):
        compose(swap, c3)


def test_invert_examples():
    assert invert(Permutation.identity(4)) == Permutation.identity(4)
    assert invert(c3) == Permutation.from_cycles(3, "(0 2 1)")
    assert invert(swap) == swap


def test_permutation_rejects_non_bijection():
    with pytest.raises(StructureError):
        Permutation((0, 0))
    with pytest.raises(StructureError):
        Permutation(())


def test_cycle_notation():
    p = Permutation.from_cycles(5, "(0 3)(1 2 4)")
    assert p.images == (3, 2, 4, 0, 1)
    assert p.cycle_string() == "(0 3)(1 2 4)"
    assert Permutation.from_cycles(3, "()") == Permutation.identity(3)
    assert p.order() == 6


@pytest.mark.parametrize("gens,size", [([], 1), ([c3], 3), ([Permutation.from_cycles(3, "(0 1)"), c3], 6)])
def test_closure_sizes(gens, size):
    assert len(closure(3, gens)) == size


@pytest.mark.parametrize("n,size", [(1, 1), (3, 6), (4, 24)])
def test_symmetric_group_sizes(n, size):
    assert len(symmetric_group(n)) == size


def test_closure_limit():
    gens = [Permutation.from_cycles(6, "(0 1)"), Permutation.from_cycles(6, "(0 1 2 3 4 5)")]
    with pytest.raises(GuardError):
        closure(6, gens, limit=100)
    assert len(closure(6, gens, limit=720)) == 720


def test_symmetric_group_guard():
    with pytest.raises(GuardError):
        symmetric_group(7)


def test_center():
    S3 = symmetric_group(3)
    assert center(S3) == {Permutation.identity(3)}
    C4 = closure(4, [Permutation.from_cycles(4, "(0 1 2 3)")])
    assert center(C4) == set(C4.elements)
    assert center(closure(2, [])) == {Permutation.identity(2)}


def test_fixes_point():
    assert fixes_point([Permutation.identity(3)], 2)
    assert not fixes_point([Permutation.from_cycles(3, "(0 1)")], 0)
    assert fixes_point([Permutation.from_cycles(3, "(1 2)")], 0)


def test_trivial_hom():
    S3 = symmetric_group(3)
    theta = hom_from_images(S3, 2, [Permutation.identity(2)] * len(S3.generators))
    assert kernel(theta) == set(S3.elements)
    assert image(theta) == {Permutation.identity(2)}


def test_sign_hom():
    t = Permutation.from_cycles(3, "(0 1)")
    S3 = closure(3, [t, c3])
    theta = hom_from_images(S3, 2, [swap, Permutation.identity(2)])
    K = kernel(theta)
    assert len(K) == 3 and K == set(closure(3, [c3]).elements)
    assert len(image(theta)) == 2
    for g in S3:
        sign = (-1) ** sum(len(c) - 1 for c in g.cycles())
        assert theta(g).is_identity() == (sign == 1)


def test_hom_rejects_order_mismatch():
    C2 = closure(2, [swap])
    with pytest.raises(NotAHomomorphismError):
        hom_from_images(C2, 3, [c3])


def test_injective_hom_kernel():
    C2 = closure(2, [swap])
    assert kernel(hom_from_images(C2, 2, [swap])) == {Permutation.identity(2)}


def test_all_homomorphisms_counts():
    # Hom(S3, S3): trivial, three with image of order 2, six automorphisms
    S3 = symmetric_group(3)
    assert len(all_homomorphisms(S3, 3)) == 10
    C2 = closure(2, [swap])
    assert len(all_homomorphisms(C2, 4)) == 10   # involutions of S4 plus identity


def test_subgroups_of_s3():
    subs = all_subgroups(symmetric_group(3))
    assert [len(H) for H in subs] == [1, 2, 2, 2, 3, 6]


@given(perms(5), perms(5), perms(5))
def test_compose_associative(p, q, r):
    assert compose(p, compose(q, r)) == compose(compose(p, q), r)


@given(perms(6))
def test_invert_is_inverse(p):
    assert compose(p, invert(p)).is_identity()
    assert compose(invert(p), p).is_identity()


@given(st.lists(perms(4), max_size=3))
def test_closure_idempotent_and_lagrange(gens):
    G = closure(4, gens)
    assert closure(4, G.elements) == G
    assert math.factorial(4) % len(G) == 0
    assert all(compose(a, b) in G for a, b in itertools.product(G, G))


@given(perms(5))
def test_one_line_and_cycle_round_trip(p):
    assert Permutation(tuple(int(t) for t in p.one_line().split())) == p
    assert Permutation.from_cycles(5, p.cycle_string()) == p


def test_kernel_and_image_are_subgroups():
    S3 = symmetric_group(3)
    for theta in all_homomorphisms(S3, 3):
        K, I = kernel(theta), image(theta)
        assert closure(3, K).elements == tuple(sorted(K))
        assert closure(3, I).elements == tuple(sorted(I))
