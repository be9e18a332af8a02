"""Polygon dissections under the dihedral group.

Vertices of an n-gon are 0..n-1 in circular order; a chord is a sorted pair
(i, j) with j - i not in {1, n-1}.  Dissections are compared as chord sets.
The type B and type D cluster complexes are realised on centrally symmetric
polygons, with diameters carrying a flavor in type D.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Iterable, Iterator

import networkx as nx

from .errors import DomainError
from .raney import raney

Chord = tuple[int, int]


def _chord(i: int, j: int) -> Chord:
    return (i, j) if i < j else (j, i)


def crosses(c1: Chord, c2: Chord) -> bool:
    (a, b), (c, d) = c1, c2
    return a < c < b < d or c < a < d < b


# ---------------------------------------------------------------------------
# dihedral group


@dataclass(frozen=True)
class DihedralElement:
    """v -> shift + v (rotation) or v -> shift - v (reflection), mod n."""

    n: int
    shift: int
    reflected: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("dihedral parameter must be positive")
        object.__setattr__(self, "shift", self.shift % self.n)

    def __call__(self, v: int) -> int:
        return (self.shift - v if self.reflected else self.shift + v) % self.n

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        """Composition: (g * h)(v) = g(h(v))."""
        if other.n != self.n:
            raise DomainError("cannot compose elements of different dihedral groups")
        sign = -1 if self.reflected else 1
        return DihedralElement(self.n, self.shift + sign * other.shift, self.reflected ^ other.reflected)

    def inverse(self) -> DihedralElement:
        if self.reflected:
            return self
        return DihedralElement(self.n, -self.shift)

    def order(self) -> int:
        if self.reflected:
            return 2
        g, k = self, 1
        while g.shift:
            g, k = g * self, k + 1
        return k

    def eigenvalue_exponents(self) -> tuple[int, int, int]:
        """(d, a, b) with the eigenvalues of the defining representation equal
        to zeta_d^a and zeta_d^b."""
        if self.reflected:
            return 2, 0, 1
        return self.n, self.shift, -self.shift % self.n

    def __str__(self):
        return f"{'s' if self.reflected else 'r'}{self.shift}"


def rotation(n: int, k: int = 1) -> DihedralElement:
    return DihedralElement(n, k, False)


def reflection(n: int, shift: int = 0) -> DihedralElement:
    return DihedralElement(n, shift, True)


def group_elements(n: int) -> list[DihedralElement]:
    return [rotation(n, k) for k in range(n)] + [reflection(n, k) for k in range(n)]


def conjugacy_class_key(g: DihedralElement) -> tuple:
    """Canonical label of the conjugacy class of g."""
    n = g.n
    if not g.reflected:
        return ("r", min(g.shift, (-g.shift) % n))
    return ("s", g.shift % 2 if n % 2 == 0 else 0)


def conjugacy_classes(n: int) -> dict[tuple, list[DihedralElement]]:
    classes: dict[tuple, list[DihedralElement]] = {}
    for g in group_elements(n):
        classes.setdefault(conjugacy_class_key(g), []).append(g)
    return classes


# ---------------------------------------------------------------------------
# k-angulations


@dataclass(frozen=True)
class Dissection:
    n: int
    chords: frozenset

    def __str__(self):
        return " ".join(f"{i}-{j}" for i, j in sorted(self.chords))


def check_kangulation_params(n: int, k: int) -> int:
    """Return m = (n-2)/(k-2) or raise; n-gons with a k-angulation have n = 2 mod k-2."""
    if k < 3 or n < k:
        raise DomainError("need n >= k >= 3")
    if (n - 2) % (k - 2):
        raise DomainError(f"no {k}-angulation of an {n}-gon: n must be 2 mod k-2")
    return (n - 2) // (k - 2)


@lru_cache(maxsize=None)
def _relative(length: int, k: int) -> tuple[frozenset, ...]:
    """k-angulations of the polygon 0..length-1 whose base edge is (0, length-1).

    Chords are relative to that polygon; the base edge itself is not listed.
    """
    if length == 2:
        return (frozenset(),)
    out = []

    def gaps(remaining: int, parts: int):
        # gap g means consecutive k-gon vertices g apart; g = 1 mod k-2
        if parts == 1:
            if remaining >= 1 and (remaining - 1) % (k - 2) == 0:
                yield (remaining,)
            return
        for g in range(1, remaining - parts + 2, k - 2):
            for rest in gaps(remaining - g, parts - 1):
                yield (g,) + rest

    for gs in gaps(length - 1, k - 1):
        pieces, start = [], 0
        for g in gs:
            if g > 1:
                sub = [frozenset((i + start, j + start) for i, j in d) | {(start, start + g)}
                       for d in _relative(g + 1, k)]
                pieces.append(sub)
            start += g
        for combo in product(*pieces):
            out.append(frozenset().union(*combo))
    return tuple(out)


@lru_cache(maxsize=None)
def kangulations(n: int, k: int) -> tuple[Dissection, ...]:
    check_kangulation_params(n, k)
    return tuple(Dissection(n, chords) for chords in _relative(n, k))


def enumerate_kangulations(n: int, k: int) -> Iterator[Dissection]:
    yield from kangulations(n, k)


def face_sizes(n: int, chords: Iterable[Chord]) -> list[int]:
    """Sizes of the faces cut out by noncrossing chords."""
    faces = [list(range(n))]
    for i, j in sorted(chords, key=lambda c: c[1] - c[0]):
        for idx, face in enumerate(faces):
            if i in face and j in face:
                a, b = sorted((face.index(i), face.index(j)))
                if b - a in (1, len(face) - 1):
                    continue
                faces[idx] = face[a : b + 1]
                faces.append(face[b:] + face[: a + 1])
                break
    return sorted(len(f) for f in faces)


def is_kangulation(d: Dissection, k: int) -> bool:
    chords = list(d.chords)
    if any(crosses(c1, c2) for idx, c1 in enumerate(chords) for c2 in chords[idx + 1 :]):
        return False
    return all(size == k for size in face_sizes(d.n, chords))


def act(g: DihedralElement, d: Dissection) -> Dissection:
    if g.n != d.n:
        raise DomainError("group element and dissection have different n")
    return Dissection(d.n, frozenset(_chord(g(i), g(j)) for i, j in d.chords))


def fixed_count(n: int, k: int, g: DihedralElement) -> int:
    return sum(1 for d in kangulations(n, k) if act(g, d) == d)


def dihedral_census(n: int, k: int) -> list[tuple[DihedralElement, int]]:
    return [(g, fixed_count(n, k, g)) for g in group_elements(n)]


def census_to_csv(rows: list[tuple[DihedralElement, int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["shift", "reflected", "fixed_count"])
    for g, c in rows:
        w.writerow([g.shift, int(g.reflected), c])
    return buf.getvalue()


def reflection_fixed_closed_form(n: int, k: int) -> int:
    """Symmetric k-angulations for one reflection, n and k odd."""
    m = check_kangulation_params(n, k)
    if n % 2 == 0 or k % 2 == 0:
        raise DomainError("closed form needs n and k odd")
    return raney(k - 1, (k - 1) // 2, (m - 1) // 2)


def rotation_fixed_closed_form(d: int, s: int, m: int) -> int:
    """(s+2)-angulations of the (sm+2)-gon fixed by a rotation of order d >= 2."""
    if d < 2 or (s * m + 2) % d:
        raise DomainError("d must be a divisor >= 2 of sm+2")
    if (s + 2) % d:
        return 0
    return comb((m * (s + 1) + 1) // d - 1, (m - 1) // d)


# ---------------------------------------------------------------------------
# type B and type D polygon models

RED, BLUE = "red", "blue"


@dataclass(frozen=True)
class FlavoredDissection:
    """Centrally symmetric configuration on a polygon with `size` vertices.

    pairs: frozenset of (D, D') chord pairs related by the half-turn;
    diameters: frozenset of (location, flavor) with location in 0..size/2-1
    and flavor None in type B.
    """

    kind: str
    rank: int
    size: int
    pairs: frozenset
    diameters: frozenset

    def chords(self) -> set[Chord]:
        out = {c for pair in self.pairs for c in pair}
        half = self.size // 2
        out |= {(loc, loc + half) for loc, _ in self.diameters}
        return out

    def __str__(self):
        parts = [f"{i}-{j}" for pair in sorted(self.pairs) for i, j in pair]
        for loc, flavor in sorted(self.diameters, key=lambda x: (x[0], x[1] or "")):
            tag = f"[{flavor}]" if flavor else ""
            parts.append(f"{loc}-{loc + self.size // 2}{tag}")
        return " ".join(parts)


@dataclass(frozen=True)
class _ModelVertex:
    pair: tuple | None = None
    location: int | None = None
    flavor: str | None = None


def _model_vertices(kind: str, rank: int) -> tuple[int, list[_ModelVertex]]:
    size = 2 * rank + 2 if kind == "B" else 2 * rank
    half = size // 2
    out: list[_ModelVertex] = []
    for i in range(size):
        for j in range(i + 2, size):
            if (i, j) == (0, size - 1) or j - i == half:
                continue
            mate = _chord((i + half) % size, (j + half) % size)
            if (i, j) < mate:
                out.append(_ModelVertex(pair=((i, j), mate)))
    flavors = [None] if kind == "B" else [RED, BLUE]
    for loc in range(half):
        for f in flavors:
            out.append(_ModelVertex(location=loc, flavor=f))
    return size, out


def _model_compatible(u: _ModelVertex, v: _ModelVertex, size: int) -> bool:
    half = size // 2
    if u.pair is None and v.pair is None:
        if u.flavor is None:  # type B: distinct diameters always cross
            return False
        if u.flavor == v.flavor:
            return True
        return u.location == v.location
    cu = u.pair if u.pair is not None else ((u.location, u.location + half),)
    cv = v.pair if v.pair is not None else ((v.location, v.location + half),)
    return not any(crosses(a, b) for a in cu for b in cv)


@lru_cache(maxsize=None)
def _model_facets(kind: str, rank: int) -> tuple[FlavoredDissection, ...]:
    size, verts = _model_vertices(kind, rank)
    g = nx.Graph()
    g.add_nodes_from(range(len(verts)))
    g.add_edges_from(
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if _model_compatible(verts[i], verts[j], size)
    )
    out = []
    for clique in nx.find_cliques(g):
        chosen = [verts[i] for i in clique]
        out.append(
            FlavoredDissection(
                kind,
                rank,
                size,
                frozenset(v.pair for v in chosen if v.pair is not None),
                frozenset((v.location, v.flavor) for v in chosen if v.pair is None),
            )
        )
    return tuple(sorted(out, key=str))


def enumerate_typeB_facets(n: int) -> Iterator[FlavoredDissection]:
    """Centrally symmetric triangulations of the (2n+2)-gon."""
    if n < 2:
        raise DomainError("type B model needs n >= 2")
    yield from _model_facets("B", n)


def enumerate_typeD_facets(n: int) -> Iterator[FlavoredDissection]:
    """Maximal compatible sets of flavored diameters and symmetric chord pairs."""
    if n < 3:
        raise DomainError("type D model needs n >= 3")
    yield from _model_facets("D", n)


def typeB_from_triangulations(n: int) -> list[frozenset]:
    """Independent route: centrally symmetric members of all triangulations."""
    size = 2 * n + 2
    half = n + 1
    rot = rotation(size, half)
    return [d.chords for d in kangulations(size, 3) if act(rot, d) == d]


def type_catalan(exponents: Iterable[int], h: int) -> int:
    exps = list(exponents)
    num = prod(h + e + 1 for e in exps)
    den = prod(e + 1 for e in exps)
    return num // den


def act_flavored(g: DihedralElement, F: FlavoredDissection, swap_flavors: bool = False) -> FlavoredDissection:
    if g.n != F.size:
        raise DomainError("group element does not act on this polygon")
    half = F.size // 2
    pairs = frozenset(
        tuple(sorted((_chord(g(a), g(b)), _chord(g(c), g(d)))))
        for (a, b), (c, d) in F.pairs
    )
    swap = {RED: BLUE, BLUE: RED, None: None}
    diam = frozenset(
        (g(loc) % half, swap[f] if swap_flavors else f) for loc, f in F.diameters
    )
    return FlavoredDissection(F.kind, F.rank, F.size, pairs, diam)


def model_tau(kind: str, n: int, eps: str) -> DihedralElement:
    """tau_+ reflects through vertex 0, tau_- through the midpoint of edge 0-1."""
    size = 2 * n + 2 if kind == "B" else 2 * n
    if eps not in ("+", "-"):
        raise DomainError("eps must be '+' or '-'")
    return reflection(size, 0 if eps == "+" else 1)


def model_R(F: FlavoredDissection) -> FlavoredDissection:
    """Rotation by one vertex; in type D every diameter also changes flavor."""
    return act_flavored(rotation(F.size, 1), F, swap_flavors=F.kind == "D")


def tau_fixed_count_BD(kind: str, n: int, eps: str) -> int:
    """Facets fixed by the polygon reflection (type B) or the reflection with
    all flavors reversed (type D)."""
    facets = list(enumerate_typeB_facets(n) if kind == "B" else enumerate_typeD_facets(n))
    g = model_tau(kind, n, eps)
    return sum(1 for F in facets if act_flavored(g, F, swap_flavors=kind == "D") == F)


def tau_fixed_count_D_rotation_compatible(n: int, eps: str) -> int:
    """Type D fixed count where only the edge-axis reflection reverses flavors.

    With this choice tau_- tau_+ is rotation plus a flavor swap, which is model_R,
    and the counts agree with the cluster complex of D_n as an unordered pair.
    """
    g = model_tau("D", n, eps)
    swap = eps == "-"
    return sum(1 for F in enumerate_typeD_facets(n) if act_flavored(g, F, swap_flavors=swap) == F)
