from itertools import permutations, product

import pytest

from z2toric import cycles
from z2toric.cycles import (CycleColoring, DihedralElement, act_color_symmetry,
                            act_dihedral, burnside_orbit_count, combined_actions,
                            count_bracelets, count_bracelets_up_to_recoloring,
                            count_proper_colorings, dihedral_actions, dihedral_group,
                            enumerate_colorings, totient)
from z2toric.errors import CapacityError, ConsistencyError, DimensionMismatchError


def brute_proper(m, s):
    """Oracle: filter all s^m sequences by the adjacency condition."""
    return [t for t in product(range(s), repeat=m)
            if all(t[i] != t[(i + 1) % m] for i in range(m))]


def test_coloring_validation():
    with pytest.raises(ValueError):
        CycleColoring((0, 0, 1))
    with pytest.raises(ValueError):
        CycleColoring((0, 1, 2), s=2)
    with pytest.raises(ValueError):
        CycleColoring((0,))
    with pytest.raises(ValueError):
        CycleColoring((0, 1, 0))  # arcs m-1 and 0 share a color


@pytest.mark.parametrize("m,s,expected", [(2, 3, 6), (3, 3, 6), (4, 3, 18)])
def test_enumerate_known_counts(m, s, expected):
    assert len(enumerate_colorings(m, s)) == expected


@pytest.mark.parametrize("m,s", [(2, 3), (5, 3), (4, 2), (3, 4), (6, 4), (4, 5)])
def test_enumerate_matches_brute_force(m, s):
    got = [c.colors for c in enumerate_colorings(m, s)]
    assert got == brute_proper(m, s)


def test_enumerate_is_sorted_and_unique():
    got = [c.colors for c in enumerate_colorings(7, 3)]
    assert got == sorted(set(got))


def test_enumeration_budget():
    with pytest.raises(CapacityError):
        enumerate_colorings(23, 3)
    with pytest.raises(CapacityError):
        enumerate_colorings(10, 3, budget=100)
    assert len(enumerate_colorings(10, 3, budget=2000)) == 1026


@pytest.mark.parametrize("m,s,expected", [(5, 3, 30), (2, 3, 6), (3, 4, 24)])
def test_closed_form_frozen_values(m, s, expected):
    assert count_proper_colorings(m, s) == expected
    assert len(brute_proper(m, s)) == expected


def test_closed_form_recurrence():
    for m in range(3, 31):
        assert count_proper_colorings(m) + count_proper_colorings(m - 1) == 3 * 2 ** (m - 1)


def test_dihedral_identity_and_full_turn():
    c = CycleColoring((0, 1, 2, 1))
    assert act_dihedral(DihedralElement(4, "rotation", 0), c) == c
    full = c
    for _ in range(4):
        full = act_dihedral(DihedralElement(4, "rotation", 1), full)
    assert full == c


def test_reflection_is_an_involution():
    c = CycleColoring((0, 1, 2, 1, 2))
    for k in range(5):
        g = DihedralElement(5, "reflection", k)
        assert act_dihedral(g, act_dihedral(g, c)) == c


def test_dihedral_mismatch():
    with pytest.raises(DimensionMismatchError):
        act_dihedral(DihedralElement(5, "rotation", 1), CycleColoring((0, 1, 2)))


def test_dihedral_group_size():
    assert len(dihedral_group(6)) == 12
    assert len(dihedral_actions(6)) == 12


def test_color_symmetry():
    c = CycleColoring((0, 1, 2))
    assert act_color_symmetry((0, 1, 2), c) == c
    swapped = act_color_symmetry((1, 0, 2), c)
    assert act_color_symmetry((1, 0, 2), swapped) == c
    assert act_color_symmetry((1, 2, 0), c).colors == (1, 2, 0)
    with pytest.raises(ValueError):
        act_color_symmetry((0, 0, 2), c)


def test_actions_commute():
    for c in enumerate_colorings(5, 3):
        for g in dihedral_group(5):
            for p in permutations(range(3)):
                assert act_color_symmetry(p, act_dihedral(g, c)) == \
                    act_dihedral(g, act_color_symmetry(p, c))


def test_bracelet_counts_match_listed_values():
    assert [count_bracelets(m) for m in range(2, 11)] == [3, 1, 6, 3, 13, 9, 30, 29, 78]


@pytest.mark.parametrize("m", range(2, 11))
def test_bracelets_match_burnside_oracle(m):
    tuples = cycles.enumerate_color_tuples(m, 3)
    assert burnside_orbit_count(tuples, dihedral_actions(m)) == count_bracelets(m)


def test_scolor_bracelets_specialize_to_three_colors():
    for m in range(2, 21):
        assert count_bracelets(m, 3) == count_bracelets(m)


def test_scolor_bracelets_frozen_values():
    assert count_bracelets(4, 2) == 1
    assert count_bracelets(6, 4) == 92  # burnside oracle over 732 colorings


@pytest.mark.parametrize("m,s", [(4, 2), (6, 4), (5, 5), (7, 2)])
def test_scolor_bracelets_match_oracle(m, s):
    tuples = cycles.enumerate_color_tuples(m, s)
    assert burnside_orbit_count(tuples, dihedral_actions(m)) == count_bracelets(m, s)


def test_recoloring_classes_match_listed_values():
    got = [count_bracelets_up_to_recoloring(m) for m in range(2, 13)]
    assert got == [1, 1, 2, 1, 4, 3, 8, 8, 18, 21, 48]


@pytest.mark.parametrize("m", range(2, 11))
def test_recoloring_classes_match_combined_oracle(m):
    tuples = cycles.enumerate_color_tuples(m, 3)
    assert burnside_orbit_count(tuples, combined_actions(m)) == \
        count_bracelets_up_to_recoloring(m)


def test_burnside_trivial_group():
    tuples = cycles.enumerate_color_tuples(5, 3)
    assert burnside_orbit_count(tuples, [lambda t: t]) == len(tuples)


def test_burnside_known_orbit_counts():
    assert burnside_orbit_count(cycles.enumerate_color_tuples(6, 3),
                                dihedral_actions(6)) == 13
    assert burnside_orbit_count(cycles.enumerate_color_tuples(7, 3),
                                combined_actions(7)) == 3


def test_burnside_rejects_non_group():
    tuples = cycles.enumerate_color_tuples(3, 3)
    rot = dihedral_actions(3)[1]
    with pytest.raises(ConsistencyError):
        burnside_orbit_count(tuples, [rot])


def test_burnside_rejects_non_invariant_set():
    tuples = cycles.enumerate_color_tuples(4, 3)[:5]
    with pytest.raises(ConsistencyError):
        burnside_orbit_count(tuples, dihedral_actions(4))


@pytest.mark.parametrize("m", [4, 6, 8])
def test_two_color_colorings_form_one_combined_orbit(m):
    from z2toric.orbits import orbits

    tuples = cycles.enumerate_color_tuples(m, 3)
    two_color = [t for t in tuples if len(set(t)) == 2]
    # 3 color pairs, 2 alternating phases each; the phases merge under
    # rotation and the pairs merge under recoloring
    assert len(two_color) == 6
    dihedral_parts = orbits(tuples, dihedral_actions(m))
    assert sum(1 for part in dihedral_parts if part[0] in two_color) == 3
    parts = orbits(tuples, combined_actions(m))
    hosting = [part for part in parts if any(t in part for t in two_color)]
    assert len(hosting) == 1
    assert set(hosting[0]) >= set(two_color)


@pytest.mark.parametrize("m", range(2, 9))
def test_color_action_is_free(m):
    for c in enumerate_colorings(m, 3):
        for p in permutations(range(3)):
            if p != (0, 1, 2):
                assert act_color_symmetry(p, c) != c


def test_totient_small_values():
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert totient(720720) == 138240


def test_bracelet_family_closed_forms():
    """Independent closed forms for special m, checked with exact rationals."""
    from fractions import Fraction

    def two_power(k):  # m = 2^k
        return (Fraction(2) ** (2 ** k - k - 1)
                + 3 * Fraction(2) ** (2 ** (k - 1) - 2)
                + sum(Fraction(2) ** (2 ** (i - 1) - i - 1) for i in range(1, k + 1)))

    def prime_power(p, k):  # m = p^k, odd prime p
        return sum(Fraction(2 ** (p ** i) - 2 ** (p ** (i - 1)), 2 * p ** i)
                   for i in range(1, k + 1))

    def twice_prime(p):  # m = 2p, odd prime p
        return Fraction(4 ** p + (3 * p + 1) * 2 ** p + 6 * p - 6, 4 * p)

    def two_primes(p, q):  # m = pq, distinct odd primes
        return (Fraction(2 ** (p * q) - 2 ** p - 2 ** q + 2, 2 * p * q)
                + Fraction(2 ** p - 2, 2 * p) + Fraction(2 ** q - 2, 2 * q))

    for k in range(1, 5):
        assert two_power(k) == count_bracelets(2 ** k)
    for p, k in ((3, 1), (3, 2), (5, 1), (7, 1), (3, 3)):
        assert prime_power(p, k) == count_bracelets(p ** k)
    for p in (3, 5, 7, 11):
        assert twice_prime(p) == count_bracelets(2 * p)
    for p, q in ((3, 5), (3, 7), (5, 7)):
        assert two_primes(p, q) == count_bracelets(p * q)


def test_closed_forms_at_large_m():
    # 2^m exceeds 64 bits well before these
    assert count_proper_colorings(64) == 2 ** 64 + 2
    assert count_proper_colorings(101) == 2 ** 101 - 2
    b = count_bracelets(998)  # = 2 * 499, cross-checked by the family form
    assert b == (4 ** 499 + (3 * 499 + 1) * 2 ** 499 + 6 * 499 - 6) // (4 * 499)
    assert count_bracelets_up_to_recoloring(256) > 0
