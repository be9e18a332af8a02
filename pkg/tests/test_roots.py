from __future__ import annotations

import json
from itertools import combinations
from math import prod

import pytest

from sievelab.errors import DomainError
from sievelab.roots import (
    build_I2_complex,
    build_root_system,
    catalan_q_product,
    cluster_complex,
    compatible,
    cyclic_census,
    enumerate_facets,
    fixed_facets,
    get_complex,
    order_of_R,
    tau,
)

# positive root counts n*h/2 and Catalan numbers prod (h+e+1)/(e+1), frozen
# from the standard tables of exponents
TABLE = {
    "A2": (3, 5),
    "A3": (6, 14),
    "A4": (10, 42),
    "A5": (15, 132),
    "B2": (4, 6),
    "B3": (9, 20),
    "B4": (16, 70),
    "C3": (9, 20),
    "D4": (12, 50),
    "D5": (20, 182),
    "F4": (24, 105),
    "E6": (36, 833),
}


@pytest.mark.parametrize("label", sorted(TABLE))
def test_root_and_facet_counts(label):
    rs = build_root_system(label)
    npos, ncat = TABLE[label]
    assert len(rs.positive) == npos == rs.rank * rs.coxeter_number // 2
    cc = cluster_complex(label)
    assert sum(1 for _ in enumerate_facets(cc)) == ncat
    h = rs.coxeter_number
    assert prod(h + e + 1 for e in rs.exponents) // prod(e + 1 for e in rs.exponents) == ncat


def test_b2_roots():
    assert set(build_root_system("B2").positive) == {(1, 0), (0, 1), (1, 1), (1, 2)}
    assert set(build_root_system("C2").positive) == {(1, 0), (0, 1), (1, 1), (2, 1)}


def test_highest_roots():
    assert max(build_root_system("E8").positive, key=sum) == (2, 3, 4, 6, 5, 4, 3, 2)
    assert max(build_root_system("F4").positive, key=sum) == (2, 3, 4, 2)
    assert max(build_root_system("D5").positive, key=sum) == (1, 2, 2, 1, 1)


def test_reflections_are_involutions():
    rs = build_root_system("F4")
    for i in range(4):
        for beta in rs.positive:
            assert rs.reflect(i, rs.reflect(i, beta)) == beta


def test_parse_errors():
    with pytest.raises(DomainError):
        build_root_system("G2")
    with pytest.raises(DomainError):
        build_root_system("D", 3)
    with pytest.raises(DomainError):
        build_root_system("E6", 7)


def test_json():
    data = json.loads(build_root_system("B3").to_json())
    assert data["type"] == "B3" and data["coxeter_number"] == 6
    assert len(data["positive_roots"]) == 9


@pytest.mark.parametrize("label", ["A3", "B3", "D4", "F4"])
def test_tau_are_involutions(label):
    cc = cluster_complex(label)
    for eps in "+-":
        t = cc.tau(eps)
        assert all(t[t[i]] == i for i in range(len(t)))
        assert tau(cc, eps, 0) == t[0]


def test_a2_structure():
    cc = cluster_complex("A2")
    facets = list(enumerate_facets(cc))
    assert len(facets) == 5
    assert all(len(F) == 2 for F in facets)
    assert order_of_R(cc) == 5


def test_compatibility_is_symmetric_and_rejects_diagonal():
    cc = cluster_complex("B3")
    n = len(cc.roots)
    for a, b in combinations(range(n), 2):
        assert compatible(cc, a, b) == compatible(cc, b, a)
    with pytest.raises(DomainError):
        compatible(cc, 1, 1)


def test_negative_simples_are_a_cluster():
    cc = cluster_complex("D5")
    assert frozenset(range(5)) in set(enumerate_facets(cc))


def test_compatibility_invariant_under_tau():
    cc = cluster_complex("A4")
    n = len(cc.roots)
    for eps in "+-":
        t = cc.tau(eps)
        for a, b in combinations(range(n), 2):
            assert cc.compat[a][b] == cc.compat[t[a]][t[b]]


FIXED = {
    "A2": (1, 1),
    "A3": (0, 4),
    "A4": (2, 2),
    "B3": (0, 2),
    "B4": (0, 0),
    "D4": (0, 12),
    "D5": (8, 0),
    "F4": (1, 1),
    "E6": (5, 5),
}


@pytest.mark.parametrize("label", sorted(FIXED))
def test_tau_fixed_counts(label):
    cc = cluster_complex(label)
    assert (fixed_facets(cc, "+"), fixed_facets(cc, "-")) == FIXED[label]


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "D5", "F4"])
def test_cyclic_census(label):
    census = cyclic_census(cluster_complex(label))
    assert census.ok(), census.to_csv()
    assert census.period == build_root_system(label).coxeter_number + 2


def test_census_csv_and_parity():
    census = cyclic_census(cluster_complex("A3"))
    assert census.to_csv().splitlines()[0] == "ell,fixed,predicted"
    assert census.order_of_R == 6 and census.order_parity == "even"


def test_q_catalan_product():
    # A2: [5][6]/([2][3]) = 1 + q^2 + q^3 + q^4 + q^6
    assert catalan_q_product((1, 2), 3) == (1, 0, 1, 1, 1, 0, 1)


@pytest.mark.parametrize("m", [3, 4, 5, 7, 8])
def test_I2(m):
    cc = build_I2_complex(m)
    assert sum(1 for _ in enumerate_facets(cc)) == m + 2
    assert cyclic_census(cc).ok()
    if m % 2:
        assert fixed_facets(cc, "+") == fixed_facets(cc, "-") == 1
    assert get_complex("I2", m).label == f"I2({m})"
    with pytest.raises(DomainError):
        build_I2_complex(2)
