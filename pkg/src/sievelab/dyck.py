"""Rational Dyck paths, area and sweep, q,t-Catalan polynomials, and signed
path counts on Young shapes.

Conventions: an (a, b) grid is a boxes high and b boxes wide; a path is a word
with a letters N and b letters E, and the lattice point (x, y) reached after
any prefix must satisfy y*b >= x*a (weakly above the diagonal).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import gcd
from typing import Iterator

from .errors import DomainError, UnsupportedParametersError
from .polyqt import BivariatePolynomial


@dataclass(frozen=True)
class DyckPath:
    a: int
    b: int
    word: str

    def __post_init__(self):
        if self.word.count("N") != self.a or self.word.count("E") != self.b:
            raise DomainError(f"{self.word!r} is not a path in the {self.a}x{self.b} grid")
        x = y = 0
        for step in self.word:
            if step == "N":
                y += 1
            elif step == "E":
                x += 1
            else:
                raise DomainError(f"bad step {step!r}")
            if y * self.b < x * self.a:
                raise DomainError(f"{self.word!r} crosses below the diagonal")

    def __str__(self):
        return self.word

    def row_offsets(self) -> list[int]:
        """x-coordinate of the N step leaving each row, bottom row first."""
        out, x = [], 0
        for step in self.word:
            if step == "N":
                out.append(x)
            else:
                x += 1
        return out


def enumerate_dyck(a: int, b: int) -> Iterator[DyckPath]:
    """All (a, b)-Dyck paths by backtracking, N before E at each branch."""
    if a < 1 or b < 1:
        raise DomainError("grid dimensions must be positive")
    word: list[str] = []

    def rec(x: int, y: int):
        if x == b and y == a:
            yield "".join(word)
            return
        if y < a:
            word.append("N")
            yield from rec(x, y + 1)
            word.pop()
        if x < b and y * b >= (x + 1) * a:
            word.append("E")
            yield from rec(x + 1, y)
            word.pop()

    for w in rec(0, 0):
        yield DyckPath(a, b, w)


def area(path: DyckPath) -> int:
    """Full cells strictly between the path and the diagonal."""
    a, b = path.a, path.b
    return sum((y * b) // a - x for y, x in enumerate(path.row_offsets()))


def sweep(path: DyckPath) -> DyckPath:
    """Reorder the steps by the level of their starting point.

    Level starts at 0, rises by b on N and falls by a on E (equivalently, by a
    and b in the transposed grid).  Starting levels are distinct when
    gcd(a, b) = 1.
    """
    a, b = path.a, path.b
    if gcd(a, b) != 1:
        raise UnsupportedParametersError("sweep is only defined here for coprime grids")
    keyed, level = [], 0
    for step in path.word:
        keyed.append((level, step))
        level += b if step == "N" else -a
    keyed.sort()
    return DyckPath(a, b, "".join(step for _, step in keyed))


@lru_cache(maxsize=None)
def rational_qt_catalan(a: int, b: int) -> BivariatePolynomial:
    """Sum over (a, b)-Dyck paths of q^area t^area(sweep)."""
    if gcd(a, b) != 1:
        raise UnsupportedParametersError("rational q,t-Catalan needs gcd(a, b) = 1")
    return BivariatePolynomial.from_counts(
        (area(p), area(sweep(p))) for p in enumerate_dyck(a, b)
    )


def dihedral_catalan(s: int, m: int) -> BivariatePolynomial:
    """(qt)^N Cat_{sm+1,m}(q, t) with N = sm(m-1)/2, the top area.

    The factor is invisible at (zeta, zeta^-1) and contributes (-1)^N at (1, -1).
    """
    top = s * m * (m - 1) // 2
    return BivariatePolynomial.monomial(top, top) * rational_qt_catalan(s * m + 1, m)


# ---------------------------------------------------------------------------
# Young shapes


@dataclass(frozen=True)
class YoungShape:
    rows: tuple[int, ...]  # top row first

    def __post_init__(self):
        if any(r < 0 for r in self.rows):
            raise DomainError("row lengths must be nonnegative")
        if any(u < v for u, v in zip(self.rows, self.rows[1:])):
            raise DomainError("row lengths must be weakly decreasing")

    def size(self) -> int:
        return sum(self.rows)

    def __str__(self):
        return ",".join(map(str, self.rows))


def young_shape(s: int, ell: int, m: int) -> YoungShape:
    """Y_s(ell, m): rows ell + (m-k)s for k = 1..m, top row first."""
    if m < 0 or ell < 0 or s < 0:
        raise DomainError("young_shape requires nonnegative s, ell, m")
    return YoungShape(tuple(ell + (m - k) * s for k in range(1, m + 1)))


def staircase_shape(a: int, b: int) -> YoungShape:
    """Cells of the (a, b) grid lying fully above the diagonal."""
    return YoungShape(tuple((y * b) // a for y in reversed(range(a))))


def signed_shape_count(shape: YoungShape) -> int:
    """Sum over lattice paths inside the shape of (-1)^(cells below the path).

    Paths run from the SW corner to the NE corner; in the row with length r
    (rows counted from the bottom) the path turns north at some x with
    x_prev <= x <= r, leaving r - x shape cells to its right.
    """
    cur = [1]
    for r in reversed(shape.rows):
        pref = list(accumulate(cur + [0] * (r + 1 - len(cur))))
        cur = [v if (r - x) % 2 == 0 else -v for x, v in enumerate(pref[: r + 1])]
    return sum(cur)


def shape_paths(shape: YoungShape) -> Iterator[tuple[int, ...]]:
    """Brute-force enumeration of the north-turn offsets, bottom row first."""
    rows = list(reversed(shape.rows))

    def rec(i: int, lo: int, acc: tuple[int, ...]):
        if i == len(rows):
            yield acc
            return
        for x in range(lo, rows[i] + 1):
            yield from rec(i + 1, x, acc + (x,))

    yield from rec(0, 0, ())


def signed_shape_count_bruteforce(shape: YoungShape) -> int:
    rows = list(reversed(shape.rows))
    return sum(
        (-1) ** sum(r - x for r, x in zip(rows, offsets)) for offsets in shape_paths(shape)
    )


def signed_dyck_count(a: int, b: int) -> int:
    """Even-area minus odd-area (a, b)-Dyck paths, by enumeration."""
    return sum(-1 if area(p) % 2 else 1 for p in enumerate_dyck(a, b))


def d_value(s: int, ell: int, m: int) -> int:
    """Signed count on Y_s(ell, m)."""
    return signed_shape_count(young_shape(s, ell, m))
