"""Raney numbers and coral diagrams.

A coral diagram of type (p, r, k) is a plane rooted tree whose root has r
ordered children and in which exactly k further vertices have been expanded
into p ordered children each.  Trees are nested tuples: a leaf is ``()`` and
an internal vertex is the tuple of its children.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator

from .errors import DomainError, InternalConsistencyError

Tree = tuple


def raney(p: int, r: int, k: int) -> int:
    """R_{p,r}(k) = r/(kp+r) * C(kp+r, k), computed as an exact integer."""
    if p < 1 or r < 0 or k < 0:
        raise DomainError("raney requires p >= 1, r >= 0, k >= 0")
    if k == 0:
        return 1
    total = k * p + r
    if total == 0:
        raise DomainError("raney undefined when kp + r = 0")
    q, rem = divmod(r * comb(total, k), total)
    if rem:
        raise InternalConsistencyError(f"R_{p},{r}({k}) is not an integer")
    return q


def fuss_catalan(p: int, k: int) -> int:
    return raney(p, 1, k)


def catalan(k: int) -> int:
    return raney(2, 1, k)


@lru_cache(maxsize=None)
def _trees(p: int, k: int) -> tuple[Tree, ...]:
    """All p-ary plane trees with exactly k internal vertices."""
    if k == 0:
        return ((),)
    return tuple(_forests(p, p, k - 1))


@lru_cache(maxsize=None)
def _forests(p: int, width: int, k: int) -> tuple[Tree, ...]:
    """Ordered tuples of `width` p-ary trees with k internal vertices in total."""
    if width == 0:
        return ((),) if k == 0 else ()
    out = []
    for first in range(k + 1):
        for head, tail in product(_trees(p, first), _forests(p, width - 1, k - first)):
            out.append((head,) + tail)
    return tuple(out)


def enumerate_coral(p: int, r: int, k: int) -> Iterator[Tree]:
    """Yield each coral diagram of type (p, r, k) once, as the root's child tuple.

    Order: the first child's subtree varies slowest; within a subtree the
    number of expansions placed in earlier children increases first.
    """
    if p < 2 or r < 1 or k < 0:
        raise DomainError("enumerate_coral requires p >= 2, r >= 1, k >= 0")
    yield from _forests(p, r, k)


def is_coral(tree: Tree, p: int, r: int, k: int) -> bool:
    if len(tree) != r:
        return False
    internal = 0
    stack = list(tree)
    while stack:
        node = stack.pop()
        if node:
            if len(node) != p:
                return False
            internal += 1
            stack.extend(node)
    return internal == k


def coral_to_text(tree: Tree) -> str:
    """Parenthesized form: each vertex is '(' + children + ')'; leaves are '()'."""
    return "(" + "".join(coral_to_text(child) for child in tree) + ")"


def convolution_identity(p: int, r: int, k: int) -> int:
    """Sum over compositions i_1 + ... + i_r = k of prod R_{p,1}(i_j)."""
    # polynomial power of the Fuss-Catalan series, truncated at degree k
    series = [fuss_catalan(p, i) for i in range(k + 1)]
    acc = [1] + [0] * k
    for _ in range(r):
        acc = [sum(acc[j] * series[i - j] for j in range(i + 1)) for i in range(k + 1)]
    return acc[k]
