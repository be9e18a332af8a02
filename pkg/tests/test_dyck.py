from __future__ import annotations

from itertools import combinations
from math import comb, gcd

import pytest

from sievelab.dyck import (
    DyckPath,
    YoungShape,
    area,
    d_value,
    dihedral_catalan,
    enumerate_dyck,
    rational_qt_catalan,
    signed_dyck_count,
    signed_shape_count,
    signed_shape_count_bruteforce,
    staircase_shape,
    sweep,
    young_shape,
)
from sievelab.errors import DomainError, UnsupportedParametersError
from sievelab.polyqt import as_integer, eval_at_roots
from sievelab.raney import raney


def all_words(a, b):
    """Every N/E word, valid or not, for an independent validity filter."""
    for pos in combinations(range(a + b), a):
        w = ["E"] * (a + b)
        for i in pos:
            w[i] = "N"
        yield "".join(w)


def valid(word, a, b):
    x = y = 0
    for s in word:
        x += s == "E"
        y += s == "N"
        if y * b < x * a:
            return False
    return True


def brute_area(word, a, b):
    # count unit cells (i, j) lying above the diagonal and to the right of the path
    xs, x = [], 0
    for s in word:
        if s == "N":
            xs.append(x)
        else:
            x += 1
    cells = 0
    for j in range(a):
        for i in range(b):
            if i >= xs[j] and (j) * b >= (i + 1) * a:
                cells += 1
    return cells


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (1, 2), (3, 2), (4, 3), (5, 3), (4, 6), (5, 5)])
def test_enumeration_matches_filter(a, b):
    ours = sorted(p.word for p in enumerate_dyck(a, b))
    ref = sorted(w for w in all_words(a, b) if valid(w, a, b))
    assert ours == ref
    if gcd(a, b) == 1:
        assert len(ours) == comb(a + b, b) // (a + b)


def test_enumeration_examples():
    assert [p.word for p in enumerate_dyck(1, 1)] == ["NE"]
    assert [p.word for p in enumerate_dyck(2, 1)] == ["NNE"]
    assert sum(1 for _ in enumerate_dyck(8, 7)) == 429


def test_path_validation():
    with pytest.raises(DomainError):
        DyckPath(2, 1, "NEN")
    with pytest.raises(DomainError):
        DyckPath(2, 1, "NN")
    with pytest.raises(DomainError):
        list(enumerate_dyck(0, 3))


@pytest.mark.parametrize("a,b", [(3, 2), (4, 3), (5, 2), (7, 3), (8, 3)])
def test_area_matches_cell_count(a, b):
    for p in enumerate_dyck(a, b):
        assert area(p) == brute_area(p.word, a, b)


def test_area_extremes():
    a, b = 7, 3
    paths = list(enumerate_dyck(a, b))
    top = DyckPath(a, b, "N" * a + "E" * b)
    assert area(top) == staircase_shape(a, b).size()
    assert min(area(p) for p in paths) == 0


def test_area_of_sixteen_by_five_example():
    # the drawn (16, 5) path with area 11 is not recoverable from text, so
    # only the range of the statistic is checked
    areas = {area(p) for p in enumerate_dyck(16, 5)}
    assert 11 in areas
    assert max(areas) == staircase_shape(16, 5).size()


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 12) for b in range(1, 12) if gcd(a, b) == 1 and a + b <= 16])
def test_sweep_is_bijection(a, b):
    paths = list(enumerate_dyck(a, b))
    images = [sweep(p) for p in paths]
    assert len({p.word for p in images}) == len(paths)


def test_sweep_rejects_non_coprime():
    with pytest.raises(UnsupportedParametersError):
        sweep(DyckPath(2, 2, "NNEE"))
    assert sweep(DyckPath(1, 1, "NE")).word == "NE"


def test_small_catalan_polynomials():
    assert rational_qt_catalan(2, 1).evaluate(1, 1) == 1
    assert str(rational_qt_catalan(3, 2)) == "q + t"
    assert str(rational_qt_catalan(4, 3)) == "q^3 + q^2 t + q t^2 + q t + t^3"
    p = rational_qt_catalan(8, 7)
    assert p.evaluate(1, 1) == 429
    assert p.is_symmetric()


@pytest.mark.parametrize("a,b", [(3, 2), (5, 3), (7, 4), (5, 7), (8, 5)])
def test_catalan_symmetry_and_transpose(a, b):
    p = rational_qt_catalan(a, b)
    assert p.is_symmetric()
    assert p == rational_qt_catalan(b, a)


def test_signed_value_at_one_minus_one():
    # even-area minus odd-area (8,7)-paths
    assert rational_qt_catalan(8, 7).evaluate(1, -1) == signed_dyck_count(8, 7) == -5
    assert dihedral_catalan(1, 7).evaluate(1, -1) == 5


def test_young_shape_examples():
    assert young_shape(3, 2, 5).rows == (14, 11, 8, 5, 2)
    assert young_shape(3, 0, 5).rows == (12, 9, 6, 3, 0)
    assert young_shape(5, 0, 1).rows == (0,)
    assert str(young_shape(1, 0, 3)) == "2,1,0"
    with pytest.raises(DomainError):
        YoungShape((1, 2))


@pytest.mark.parametrize("s", [1, 3, 5])
@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_staircase_shape(s, m):
    assert staircase_shape(m, s * m + 1) == young_shape(s, 0, m)


def test_signed_shape_examples():
    assert signed_shape_count(YoungShape(())) == 1
    assert signed_shape_count(young_shape(1, 0, 7)) == -5
    assert signed_shape_count(young_shape(5, 3, 3)) == 0


@pytest.mark.parametrize("s", [1, 3, 5, 7])
def test_dp_matches_enumeration(s):
    for ell in range(0, 6):
        for m in range(0, 5):
            shape = young_shape(s, ell, m)
            assert signed_shape_count(shape) == signed_shape_count_bruteforce(shape)


@pytest.mark.parametrize("s,m", [(1, 1), (1, 3), (1, 5), (1, 7), (3, 3), (3, 5), (5, 3)])
def test_shape_count_equals_signed_path_count(s, m):
    assert d_value(s, 0, m) == signed_dyck_count(s * m + 1, m)


@pytest.mark.parametrize("s", [1, 3, 5])
@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_shift_identity(s, m):
    assert d_value(s, 0, m) == d_value(s, s, m - 1)


@pytest.mark.parametrize("s", [1, 3, 5])
@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_parity_value_up_to_sign(s, m):
    value = d_value(s, 0, m)
    expected = raney(s + 1, (s + 1) // 2, (m - 1) // 2)
    assert value == (-1) ** ((m - 1) // 2) * expected


@pytest.mark.parametrize("s", [5, 7])
def test_first_recurrence(s):
    D = lambda ell, m: d_value(s, ell, m)
    for m in range(1, 7):
        rhs = sum((-1) ** (y + 1) * D(1, y) * D(2 * s - 1, m - (y + 2)) for y in range(m - 1))
        assert D(1, m) == rhs


@pytest.mark.parametrize("s", [5, 7])
def test_first_recurrence_alternative_sign_breaks(s):
    # the (m+y)(y+1) exponent disagrees with the counts for even m >= 2
    D = lambda ell, m: d_value(s, ell, m)
    m = 2
    rhs = sum((-1) ** ((m + y) * (y + 1)) * D(1, y) * D(2 * s - 1, m - (y + 2)) for y in range(m - 1))
    assert D(1, m) != rhs


@pytest.mark.parametrize("s", [5, 7])
def test_second_recurrence(s):
    D = lambda ell, m: d_value(s, ell, m)
    for ell in (3, 5, 7):
        for m in range(0, 7):
            rhs = sum((-1) ** ((m + 1) * y) * D(ell - 2, y) * D(1, m - y) for y in range(m + 1))
            assert D(ell, m) == rhs


@pytest.mark.parametrize("s", [5, 7])
def test_vanishing(s):
    for ell in (1, 3, 5, 7):
        for m in (1, 3, 5):
            assert d_value(s, ell, m) == 0


@pytest.mark.parametrize("s", [5, 7])
def test_even_m_raney_up_to_sign(s):
    for ell in (1, 3, 5):
        for m in (0, 2, 4, 6):
            assert d_value(s, ell, m) == (-1) ** (m // 2) * raney(s + 1, (ell + 1) // 2, m // 2)


@pytest.mark.parametrize("s,m", [(1, 5), (1, 7), (3, 3), (3, 5)])
def test_rotation_values(s, m):
    n = s * m + 2
    p = rational_qt_catalan(s * m + 1, m)
    for d in range(2, n + 1):
        if n % d:
            continue
        value = as_integer(eval_at_roots(p, d, 1, d - 1))
        expected = comb((m * (s + 1) + 1) // d - 1, (m - 1) // d) if (s + 2) % d == 0 else 0
        assert value == expected
