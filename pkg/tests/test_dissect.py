from __future__ import annotations

from itertools import combinations
from math import comb

import pytest

from sievelab.dissect import (
    act,
    act_flavored,
    census_to_csv,
    check_kangulation_params,
    conjugacy_classes,
    crosses,
    dihedral_census,
    enumerate_kangulations,
    enumerate_typeB_facets,
    enumerate_typeD_facets,
    face_sizes,
    fixed_count,
    group_elements,
    is_kangulation,
    model_R,
    model_tau,
    reflection,
    reflection_fixed_closed_form,
    rotation,
    rotation_fixed_closed_form,
    tau_fixed_count_BD,
    tau_fixed_count_D_rotation_compatible,
    type_catalan,
    typeB_from_triangulations,
)
from sievelab.errors import DomainError
from sievelab.raney import fuss_catalan
from sievelab.roots import cluster_complex, fixed_facets


def brute_kangulations(n, k):
    """Noncrossing chord sets of the right size whose faces are all k-gons."""
    m = (n - 2) // (k - 2)
    diagonals = [(i, j) for i in range(n) for j in range(i + 2, n) if (i, j) != (0, n - 1)]
    out = set()
    for chosen in combinations(diagonals, m - 1):
        if any(crosses(a, b) for a, b in combinations(chosen, 2)):
            continue
        if all(size == k for size in face_sizes(n, chosen)):
            out.add(frozenset(chosen))
    return out


@pytest.mark.parametrize("n,k", [(4, 3), (5, 3), (6, 3), (7, 3), (8, 3), (6, 4), (8, 4), (10, 4), (8, 5), (11, 5), (10, 6)])
def test_enumeration_matches_brute_force(n, k):
    ours = {d.chords for d in enumerate_kangulations(n, k)}
    assert ours == brute_kangulations(n, k)


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_counts_are_fuss_catalan(s, m):
    n, k = s * m + 2, s + 2
    assert sum(1 for _ in enumerate_kangulations(n, k)) == fuss_catalan(s + 1, m)


def test_examples():
    assert sum(1 for _ in enumerate_kangulations(5, 3)) == 5
    assert sum(1 for _ in enumerate_kangulations(17, 5)) == 969
    assert [str(d) for d in enumerate_kangulations(4, 4)] == [""]


def test_parameter_check():
    assert check_kangulation_params(11, 5) == 3
    with pytest.raises(DomainError):
        check_kangulation_params(6, 5)
    with pytest.raises(DomainError):
        check_kangulation_params(3, 2)


def test_face_sizes_and_validator():
    assert sorted(face_sizes(6, [(0, 3)])) == [4, 4]
    for d in enumerate_kangulations(10, 4):
        assert is_kangulation(d, 4)
        assert not is_kangulation(d, 3)


def test_group_law():
    n = 7
    G = group_elements(n)
    assert len(G) == 2 * n
    for g in G:
        for h in G:
            gh = g * h
            assert all(gh(v) == g(h(v)) for v in range(n))
        assert all((g * g.inverse())(v) == v for v in range(n))
    assert rotation(12, 4).order() == 3
    assert reflection(12, 5).order() == 2
    assert str(rotation(9, 3)) == "r3" and str(reflection(9, 0)) == "s0"


def test_conjugacy_classes():
    assert len(conjugacy_classes(7)) == 3 + 1 + 1
    assert len(conjugacy_classes(8)) == 5 + 2


def test_eigenvalue_exponents():
    assert reflection(9, 2).eigenvalue_exponents() == (2, 0, 1)
    assert rotation(9, 2).eigenvalue_exponents() == (9, 2, 7)


@pytest.mark.parametrize("n,k", [(5, 3), (7, 3), (9, 3), (11, 5), (10, 4), (8, 4)])
def test_census_is_class_function(n, k):
    census = dict(dihedral_census(n, k))
    for members in conjugacy_classes(n).values():
        assert len({census[g] for g in members}) == 1
    assert census[rotation(n, 0)] == sum(1 for _ in enumerate_kangulations(n, k))
    # orbit counting: the average fixed count is an integer
    assert sum(census.values()) % (2 * n) == 0


def test_census_csv():
    text = census_to_csv(dihedral_census(5, 3))
    lines = text.strip().splitlines()
    assert lines[0] == "shift,reflected,fixed_count"
    assert len(lines) == 11


@pytest.mark.parametrize("s,m", [(1, 3), (1, 5), (1, 7), (3, 3)])
def test_closed_forms_match_brute_force(s, m):
    n, k = s * m + 2, s + 2
    assert fixed_count(n, k, reflection(n, 0)) == reflection_fixed_closed_form(n, k)
    for d in range(2, n + 1):
        if n % d == 0:
            assert fixed_count(n, k, rotation(n, n // d)) == rotation_fixed_closed_form(d, s, m)


def test_act_preserves_kangulations():
    for d in enumerate_kangulations(9, 3):
        for g in (rotation(9, 2), reflection(9, 4)):
            assert is_kangulation(act(g, d), 3)


@pytest.mark.parametrize("n", range(2, 6))
def test_typeB_counts(n):
    facets = list(enumerate_typeB_facets(n))
    assert len(facets) == comb(2 * n, n)
    assert len(facets) == len(typeB_from_triangulations(n))
    assert len(facets) == sum(1 for _ in enumerate_facets_of("B", n))


def enumerate_facets_of(kind, n):
    from sievelab.roots import enumerate_facets

    return enumerate_facets(cluster_complex(kind, n))


@pytest.mark.parametrize("n,expected", [(3, 14), (4, 50), (5, 182), (6, 672)])
def test_typeD_counts(n, expected):
    facets = list(enumerate_typeD_facets(n))
    assert len(facets) == expected
    exps = tuple(range(1, 2 * n - 2, 2)) + (n - 1,)
    assert type_catalan(exps, 2 * n - 2) == expected
    if n >= 4:
        assert sum(1 for _ in enumerate_facets_of("D", n)) == expected


def test_domain_of_models():
    with pytest.raises(DomainError):
        list(enumerate_typeB_facets(1))
    with pytest.raises(DomainError):
        list(enumerate_typeD_facets(2))
    with pytest.raises(DomainError):
        model_tau("B", 3, "x")


@pytest.mark.parametrize("n", [2, 4])
def test_typeB_no_tau_fixed_for_even_rank(n):
    assert tau_fixed_count_BD("B", n, "+") == 0
    assert tau_fixed_count_BD("B", n, "-") == 0


def test_typeB_tau_fixed_matches_roots_as_pair():
    cc = cluster_complex("B", 3)
    model = sorted(tau_fixed_count_BD("B", 3, e) for e in "+-")
    assert model == sorted(fixed_facets(cc, e) for e in "+-") == [0, 2]


@pytest.mark.parametrize("n", [3, 5])
def test_typeD_no_tau_fixed_for_odd_rank(n):
    assert tau_fixed_count_BD("D", n, "+") == 0
    assert tau_fixed_count_BD("D", n, "-") == 0


@pytest.mark.parametrize("n", [4, 5, 6])
def test_rotation_compatible_typeD_tau_matches_roots(n):
    cc = cluster_complex("D", n)
    model = sorted(tau_fixed_count_D_rotation_compatible(n, e) for e in "+-")
    assert model == sorted(fixed_facets(cc, e) for e in "+-")


def test_rotation_compatible_typeD_tau_composes_to_R():
    n = 5
    tp, tm = model_tau("D", n, "+"), model_tau("D", n, "-")
    for F in enumerate_typeD_facets(n):
        assert act_flavored(tm, act_flavored(tp, F), swap_flavors=True) == model_R(F)
    # reversing flavors in both reflections leaves flavors fixed under the
    # composite, so it cannot be the flavor-swapping R
    F = next(F for F in enumerate_typeD_facets(n) if len({f for _, f in F.diameters}) == 1)
    both = act_flavored(tm, act_flavored(tp, F, True), True)
    assert both != model_R(F)


def test_model_R_order():
    for kind, n in (("B", 3), ("D", 4)):
        gen = enumerate_typeB_facets if kind == "B" else enumerate_typeD_facets
        facets = list(gen(n))
        size = 2 * n + 2 if kind == "B" else 2 * n
        for F in facets:
            G = F
            for _ in range(size):
                G = model_R(G)
            assert G == F
