"""Finite posets given by cover relations, with order-ideal enumeration.

Includes root posets of crystallographic root systems and three explicit
grid posets: the trapezoid (type B), the double triangle (type D) and the
line poset used for the dihedral types I2(m).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterator, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .errors import DomainError, InternalConsistencyError
from .roots import RootSystem, build_root_system


@dataclass(frozen=True)
class Poset:
    """Elements 0..size-1; covers[i] lists the elements covering i."""

    size: int
    covers: tuple[tuple[int, ...], ...]
    labels: tuple[Hashable, ...] | None = None

    def __post_init__(self):
        if len(self.covers) != self.size:
            raise DomainError("one cover list per element is required")
        if self.size and not nx.is_directed_acyclic_graph(self.graph()):
            raise DomainError("cover relation has a cycle")

    @classmethod
    def from_relations(cls, elements: Sequence[Hashable], less: Sequence[tuple]) -> Poset:
        """Build from any generating set of relations a < b; the transitive
        reduction is taken."""
        index = {e: i for i, e in enumerate(elements)}
        g = nx.DiGraph()
        g.add_nodes_from(range(len(elements)))
        g.add_edges_from((index[a], index[b]) for a, b in less)
        if not nx.is_directed_acyclic_graph(g):
            raise DomainError("relations contain a cycle")
        red = nx.transitive_reduction(g)
        covers = tuple(tuple(sorted(red.successors(i))) for i in range(len(elements)))
        return cls(len(elements), covers, tuple(elements))

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.size))
        g.add_edges_from((i, j) for i, ups in enumerate(self.covers) for j in ups)
        return g

    @cached_property
    def down_covers(self) -> tuple[tuple[int, ...], ...]:
        down: list[list[int]] = [[] for _ in range(self.size)]
        for i, ups in enumerate(self.covers):
            for j in ups:
                down[j].append(i)
        return tuple(tuple(d) for d in down)

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        """Bitmask of the principal ideal below each element, itself included."""
        masks = [0] * self.size
        for i in nx.topological_sort(self.graph()):
            m = 1 << i
            for j in self.down_covers[i]:
                m |= masks[j]
            masks[i] = m
        return tuple(masks)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        masks = [0] * self.size
        for i in reversed(list(nx.topological_sort(self.graph()))):
            m = 1 << i
            for j in self.covers[i]:
                m |= masks[j]
            masks[i] = m
        return tuple(masks)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.down_masks[b] >> a & 1)

    def minimal(self) -> list[int]:
        return [i for i in range(self.size) if not self.down_covers[i]]

    def rank_sizes(self) -> list[int]:
        """Number of elements at each length of the longest chain from below."""
        level = [0] * self.size
        for i in nx.topological_sort(self.graph()):
            for j in self.covers[i]:
                level[j] = max(level[j], level[i] + 1)
        out = [0] * (max(level) + 1 if level else 0)
        for lv in level:
            out[lv] += 1
        return out

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, ups in enumerate(self.covers) for j in ups]

    def to_text(self) -> str:
        return "\n".join(f"{i} {j}" for i, j in self.cover_pairs())


def chain(n: int) -> Poset:
    return Poset(n, tuple((i + 1,) if i + 1 < n else () for i in range(n)))


def root_poset(rs: RootSystem | str, rank: int | None = None) -> Poset:
    """Positive roots ordered by: beta - alpha is a nonnegative combination of simples.

    Strings such as 'I2(7)' give the line poset of that dihedral type.
    """
    if isinstance(rs, str):
        label = rs.strip().upper()
        if label.startswith("H"):
            raise DomainError(f"{label} has no root poset here")
        if label.startswith("I2"):
            m = int(label[2:].strip("()")) if rank is None else rank
            return line_poset(m)
        rs = build_root_system(label, rank)
    roots = rs.positive
    index = {r: i for i, r in enumerate(roots)}
    covers = []
    for r in roots:
        ups = []
        for i in range(rs.rank):
            s = tuple(c + (j == i) for j, c in enumerate(r))
            if s in index:
                ups.append(index[s])
        covers.append(tuple(sorted(ups)))
    return Poset(len(roots), tuple(covers), roots)


def _grid_poset(cells: list, up_neighbours) -> Poset:
    index = {c: i for i, c in enumerate(cells)}
    covers = tuple(
        tuple(sorted(index[d] for d in up_neighbours(c) if d in index)) for c in cells
    )
    return Poset(len(cells), covers, tuple(cells))


def trapezoid_poset(n: int) -> Poset:
    """Cells (i, j) with 1 <= i <= j and i + j <= 2n.

    Row i holds 2n - 2i + 1 cells; (i, j) is covered by (i-1, j) and (i, j+1).
    """
    if n < 1:
        raise DomainError("trapezoid needs n >= 1")
    cells = [(i, j) for i in range(1, n + 1) for j in range(i, 2 * n - i + 1)]
    return _grid_poset(cells, lambda c: [(c[0] - 1, c[1]), (c[0], c[1] + 1)])


def double_triangle_poset(n: int) -> Poset:
    """Two staircase triangles of n(n-1)/2 cells glued along two diagonals.

    Triangle A has cells (i, j), i < j <= n, covered by (i-1, j) and (i, j+1).
    Triangle B has cells (i, j), i < j <= n, covered by (i-1, j) and (i, j-1).
    A(i, n-1) is covered by B(i, n) and A(i, n) by B(i, n-1).
    """
    if n < 2:
        raise DomainError("double triangle needs n >= 2")
    cells = [("A", i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    cells += [("B", i, j) for i in range(1, n) for j in range(i + 1, n + 1)]

    def ups(c):
        side, i, j = c
        if side == "A":
            out = [("A", i - 1, j), ("A", i, j + 1)]
            if j == n - 1:
                out.append(("B", i, n))
            if j == n:
                out.append(("B", i, n - 1))
            return out
        return [("B", i - 1, j)] + ([("B", i, j - 1)] if j - 1 > i else [])

    return _grid_poset(cells, ups)


def line_poset(n: int) -> Poset:
    """Two incomparable minimal elements, a common cover, then a chain; n elements."""
    if n < 2:
        raise DomainError("line poset needs n >= 2")
    covers = [(2,) if n > 2 else (), (2,) if n > 2 else ()]
    covers += [(i + 1,) if i + 1 < n else () for i in range(2, n)]
    return Poset(n, tuple(covers))


def _linear_extension(P: Poset) -> list[int]:
    return list(nx.lexicographical_topological_sort(P.graph()))


def enumerate_ideals(P: Poset) -> Iterator[int]:
    """Every order ideal once, as a bitmask.

    Elements are decided in a linear extension; excluding an element forbids
    its whole up-set, so every branch ends in an ideal.
    """
    order = _linear_extension(P)
    down, up = P.down_masks, P.up_masks
    n = len(order)

    def rec(k: int, ideal: int, forbidden: int):
        while k < n and forbidden >> order[k] & 1:
            k += 1
        if k == n:
            yield ideal
            return
        x = order[k]
        if down[x] & ~(1 << x) & ~ideal == 0:
            yield from rec(k + 1, ideal | 1 << x, forbidden)
        yield from rec(k + 1, ideal, forbidden | up[x])

    yield from rec(0, 0, 0)


def is_ideal(P: Poset, mask: int) -> bool:
    return all(P.down_masks[i] & ~mask == 0 for i in range(P.size) if mask >> i & 1)


def ideal_sizes(P: Poset) -> list[int]:
    """Coefficients of sum over ideals of q^|I|, lowest degree first."""
    out = [0] * (P.size + 1)
    for mask in enumerate_ideals(P):
        out[bin(mask).count("1")] += 1
    return out


def ideal_generating_poly(P: Poset) -> list[int]:
    return ideal_sizes(P)


def ideal_count(P: Poset) -> int:
    return sum(ideal_sizes(P))


def signed_ideal_sum(P: Poset) -> int:
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(ideal_sizes(P)))


def poly_text(coeffs: Sequence[int], var: str = "q") -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        body = str(abs(c)) if not mono else (mono if abs(c) == 1 else f"{abs(c)} {mono}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    return text + "".join(f" {s} {b}" for s, b in parts[1:])


def is_isomorphic(P1: Poset, P2: Poset) -> bool:
    """Isomorphism of Hasse diagrams as directed graphs."""
    if P1.size != P2.size or len(P1.cover_pairs()) != len(P2.cover_pairs()):
        return False
    if P1.rank_sizes() != P2.rank_sizes():
        return False
    return DiGraphMatcher(P1.graph(), P2.graph()).is_isomorphic()


def check_ideal_enumeration(P: Poset) -> None:
    """Brute-force cross-check over all subsets; for small posets only."""
    if P.size > 18:
        raise DomainError("brute force limited to 18 elements")
    brute = {m for m in range(1 << P.size) if is_ideal(P, m)}
    fast = list(enumerate_ideals(P))
    if len(fast) != len(set(fast)) or set(fast) != brute:
        raise InternalConsistencyError("ideal enumeration disagrees with brute force")
