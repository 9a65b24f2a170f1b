"""Homomorphism enumeration into cyclic groups and the extension oracle."""

import numpy as np
import pytest

import helpers

from subdirect import (
    CyclicHom,
    NotSubdirect,
    OrderLimitExceeded,
    Subgroup,
    abelianization,
    coefficient_modulus,
    cyclic,
    diagonal,
    dihedral,
    direct_product,
    elementary_abelian,
    enumerate_homs,
    enumerate_subdirect,
    extend_hom,
    hom_count_formula,
    oracle_is_extensible_for_modulus,
    oracle_is_p_extensible,
    quaternion8,
    raw_enumerate_homs,
    raw_oracle_is_p_extensible,
    restriction_fiber_counts,
    restriction_kernel_image_sizes,
    restriction_map,
    subgroup_generated,
    symmetric,
)

A3 = (0, 3, 4)


def coset_diagonal(G, K_elems):
    """(K x 1) Delta(G) built from explicit kernel elements."""
    info = direct_product(G, G)
    gens = [info.encode(g, g) for g in range(G.order)]
    gens += [info.encode(k, 0) for k in K_elems]
    return subgroup_generated(info.group, gens)


def test_enumerate_homs_trivial_group():
    homs = enumerate_homs(cyclic(1), 12)
    assert len(homs) == 1
    assert homs[0].is_zero


def test_enumerate_homs_s3():
    homs = enumerate_homs(symmetric(3), 6)
    assert len(homs) == 2
    keys = {h.key() for h in homs}
    # Identity hom plus the sign character scaled into C6.
    assert (0, 0, 0, 0, 0, 0) in keys


def test_enumerate_homs_klein_four():
    homs = enumerate_homs(elementary_abelian(2, 2), 2)
    assert len(homs) == 4


def test_enumerate_homs_matches_brute():
    for G in (cyclic(4), cyclic(6), symmetric(3), elementary_abelian(2, 2),
              dihedral(8), quaternion8()):
        for m in (1, 2, 3, 4, 6):
            keys = {h.key() for h in enumerate_homs(G, m)}
            assert keys == helpers.brute_homs_to_cyclic(G, m)


def test_enumerate_homs_sorted_and_deterministic():
    homs = enumerate_homs(dihedral(8), 2)
    keys = [h.key() for h in homs]
    assert keys == sorted(keys)
    again = enumerate_homs(dihedral(8), 2)
    assert [h.key() for h in again] == keys


def test_raw_enumerator_agrees():
    for G in (cyclic(6), symmetric(3), dihedral(8)):
        for m in (2, 3, 4):
            fast = {h.key() for h in enumerate_homs(G, m)}
            slow = {h.key() for h in raw_enumerate_homs(G, m)}
            assert fast == slow


def test_raw_enumerator_cap():
    with pytest.raises(OrderLimitExceeded):
        raw_enumerate_homs(dihedral(12), 12, limit=100)


def test_hom_count_formula():
    inv, _ = abelianization(dihedral(8))
    assert hom_count_formula(inv.divisors, 2) == 4
    assert hom_count_formula(inv.divisors, 3) == 1
    assert hom_count_formula((12,), 8) == 4
    assert hom_count_formula((), 5) == 1


def test_hom_counts_match_formula():
    for G in (cyclic(12), elementary_abelian(3, 2),
              direct_product(cyclic(2), cyclic(4)).group):
        inv, _ = (abelianization(G))
        for m in (1, 2, 3, 4, 6, 9, 12):
            assert len(enumerate_homs(G, m)) == hom_count_formula(
                inv.divisors, m)


def test_cyclic_hom_validation():
    G = cyclic(4)
    CyclicHom(G, 4, [0, 1, 2, 3])
    with pytest.raises(ValueError):
        CyclicHom(G, 4, [1, 1, 2, 3])
    with pytest.raises(ValueError):
        CyclicHom(G, 4, [0, 2, 1, 3])
    with pytest.raises(ValueError):
        CyclicHom(G, 4, [0, 1, 2])


def test_restriction_map_zero_and_identity():
    G = cyclic(2)
    info = direct_product(G, G)
    zero = CyclicHom(info.group, 2, [0, 0, 0, 0])
    U = diagonal(G)
    assert restriction_map(zero, U).is_zero
    # Sum character vanishes on the diagonal of C2 x C2.
    sum_char = CyclicHom(info.group, 2, [0, 1, 1, 0])
    assert restriction_map(sum_char, U).is_zero
    # Left character restricted to C2 x 1 is the identity character.
    left_char = CyclicHom(info.group, 2, [0, 0, 1, 1])
    axis = subgroup_generated(info.group, [info.encode(1, 0)])
    got = restriction_map(left_char, axis)
    assert got.key() == (0, 1)


def test_restriction_kernel_image_full_product():
    info = direct_product(symmetric(3), cyclic(2))
    U = info.group.full()
    kernel, image = restriction_kernel_image_sizes(U, 2)
    assert kernel == 1
    assert image == len(enumerate_homs(info.group, 2))


def test_restriction_kernel_coset_diagonal():
    G = symmetric(3)
    U = coset_diagonal(G, [3])
    # U = (A3 x 1) Delta(S3): quotient is C2, kernel counts Hom(C2, C6) = 2.
    kernel, image = restriction_kernel_image_sizes(U, 6)
    assert kernel == 2
    assert kernel * image == len(enumerate_homs(G, 6)) ** 2


def test_restriction_kernel_center_example():
    D = dihedral(8)
    U = coset_diagonal(D, [2])
    kernel, image = restriction_kernel_image_sizes(U, 8)
    # Quotient is C2 x C2: four homs into C8.
    assert kernel == 4
    assert kernel * image == len(enumerate_homs(D, 8)) ** 2


def test_fiber_counts_uniform():
    G = symmetric(3)
    for U in enumerate_subdirect(G, G):
        for m in (2, 3, 6):
            counts = restriction_fiber_counts(U, m)
            kernel, image = restriction_kernel_image_sizes(U, m)
            assert set(counts) == {kernel}
            assert len(counts) == image


def test_restriction_requires_subdirect():
    G = symmetric(3)
    info = direct_product(G, G)
    small = subgroup_generated(info.group, [info.encode(1, 0)])
    with pytest.raises(NotSubdirect):
        restriction_kernel_image_sizes(small, 2)
    with pytest.raises(NotSubdirect):
        oracle_is_extensible_for_modulus(small, 2)


def test_coefficient_modulus():
    G = dihedral(8)
    U = diagonal(G)
    assert coefficient_modulus(U, 2) == 4
    assert coefficient_modulus(U, 3) == 1
    S = symmetric(3)
    V = diagonal(S)
    assert coefficient_modulus(V, 2) == 2
    assert coefficient_modulus(V, 3) == 3


def test_oracle_full_product_extensible():
    info = direct_product(dihedral(8), cyclic(6))
    U = info.group.full()
    for p in (2, 3, 5):
        assert oracle_is_p_extensible(U, p)


def test_oracle_center_example_fails_at_two():
    D = dihedral(8)
    U = coset_diagonal(D, [2])
    assert not oracle_is_p_extensible(U, 2)
    assert oracle_is_p_extensible(U, 3)
    Q = quaternion8()
    V = coset_diagonal(Q, [4])
    assert not oracle_is_p_extensible(V, 2)


def test_oracle_coset_diagonal_extensible():
    G = symmetric(3)
    U = coset_diagonal(G, [3])
    assert oracle_is_p_extensible(U, 2)
    assert oracle_is_p_extensible(U, 3)


def test_oracle_modulus_one():
    U = diagonal(symmetric(3))
    assert oracle_is_extensible_for_modulus(U, 1)


def test_raw_oracle_matches_structured_oracle():
    G = symmetric(3)
    for U in enumerate_subdirect(cyclic(2), cyclic(2)):
        assert raw_oracle_is_p_extensible(U, 2) == oracle_is_p_extensible(U, 2)
    U = diagonal(G)
    for p in (2, 3):
        assert raw_oracle_is_p_extensible(U, p) == oracle_is_p_extensible(U, p)


def test_raw_oracle_infeasible_input_raises():
    # The brute value-table search refuses rather than truncates.
    D = dihedral(8)
    U = coset_diagonal(D, [2])
    with pytest.raises(OrderLimitExceeded):
        raw_oracle_is_p_extensible(U, 2)


def test_raw_oracle_coset_diagonal():
    G = symmetric(3)
    U = coset_diagonal(G, [3])
    assert raw_oracle_is_p_extensible(U, 2) is True


def test_extend_hom_zero():
    G = symmetric(3)
    U = diagonal(G)
    sub_grp, _ = U.as_group()
    zero = CyclicHom(sub_grp, 6, np.zeros(sub_grp.order, dtype=np.int64))
    big = extend_hom(zero, U)
    assert big is not None
    assert big.is_zero


def test_extend_hom_on_full_product_returns_same_function():
    info = direct_product(cyclic(2), cyclic(3))
    U = info.group.full()
    sub_grp, emb = U.as_group()
    for h in enumerate_homs(info.group, 6):
        phi = CyclicHom(sub_grp, 6,
                        [int(h.values[emb(i)]) for i in range(sub_grp.order)])
        big = extend_hom(phi, U)
        assert big is not None
        assert big.key() == h.key()


def test_extend_hom_obstructed_witness():
    D = dihedral(8)
    U = coset_diagonal(D, [2])
    sub_grp, emb = U.as_group()
    info = direct_product(D, D)
    # A character on U that is 1 on (r^2, 1): kills extension at p = 2.
    target = info.encode(2, 0)
    idx = U.elements.index(target)
    # Build the character through the quotient U / ker where it exists.
    found = None
    for h in enumerate_homs(U, 2):
        if int(h.values[idx]) == 1:
            found = h
            break
    assert found is not None
    assert extend_hom(found, U) is None


def test_extension_witness_consistency():
    # Whenever the oracle says extensible, every hom really extends.
    G = symmetric(3)
    for U in enumerate_subdirect(G, G):
        m = 6
        extendable = oracle_is_extensible_for_modulus(U, m)
        results = [extend_hom(phi, U) is not None
                   for phi in enumerate_homs(U, m)]
        assert all(results) == extendable
        # The zero hom always extends.
        assert results[0]
