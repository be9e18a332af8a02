"""Finite root systems, almost positive roots and their cluster complexes.

Roots are integer vectors in the simple-root basis.  Simple reflections act
through the Cartan matrix A[i][j] = 2(a_i, a_j)/(a_i, a_i) in Bourbaki
numbering:  s_i(beta) = beta - (sum_j A[i][j] beta_j) a_i.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterator, Sequence

import networkx as nx

from .errors import DomainError, InternalConsistencyError
from .polyqt import CyclotomicValue, as_integer, upoly_divmod, upoly_mul

Root = tuple[int, ...]

EXPONENTS = {
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
    "F4": (1, 5, 7, 11),
}


def _edges(kind: str, n: int) -> list[tuple[int, int, int, int]]:
    """(i, j, A_ij, A_ji) for each edge of the Dynkin diagram, 0-based."""
    chain = [(i, i + 1, -1, -1) for i in range(n - 1)]
    if kind == "A":
        return chain
    if kind == "B":  # a_n short
        return chain[:-1] + [(n - 2, n - 1, -1, -2)]
    if kind == "C":  # a_n long
        return chain[:-1] + [(n - 2, n - 1, -2, -1)]
    if kind == "D":
        return chain[:-1] + [(n - 3, n - 1, -1, -1)]
    if kind == "E":
        # 1-3-4-5-...-n with 2 attached to 4
        out = [(0, 2, -1, -1), (1, 3, -1, -1)]
        out += [(i, i + 1, -1, -1) for i in range(2, n - 1)]
        return out
    if kind == "F":
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    raise DomainError(f"unknown type {kind}")


def parse_type(label: str, rank: int | None = None) -> tuple[str, int]:
    label = label.strip().upper()
    if len(label) > 1 and label[1:].isdigit():
        kind, n = label[0], int(label[1:])
        if rank is not None and rank != n:
            raise DomainError(f"{label} has rank {n}, not {rank}")
    else:
        if rank is None:
            raise DomainError(f"rank missing for type {label}")
        kind, n = label, rank
    valid = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
    }
    if not valid.get(kind, False):
        raise DomainError(f"no finite root system of type {kind}{n}")
    return kind, n


@dataclass
class RootSystem:
    kind: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive: tuple[Root, ...]
    exponents: tuple[int, ...]
    coxeter_number: int

    @property
    def label(self) -> str:
        return f"{self.kind}{self.rank}"

    @property
    def simple(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def reflect(self, i: int, beta: Root) -> Root:
        c = sum(beta[j] * self.cartan[i][j] for j in range(self.rank))
        return tuple(b - c if j == i else b for j, b in enumerate(beta))

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.rank) if j != i and self.cartan[i][j]]

    def to_json(self) -> str:
        return json.dumps(
            {
                "type": self.label,
                "rank": self.rank,
                "cartan": self.cartan,
                "positive_roots": self.positive,
                "exponents": self.exponents,
                "coxeter_number": self.coxeter_number,
            },
            indent=1,
        )


def _standard_exponents(kind: str, n: int) -> tuple[tuple[int, ...], int]:
    if kind == "A":
        return tuple(range(1, n + 1)), n + 1
    if kind in "BC":
        return tuple(range(1, 2 * n, 2)), 2 * n
    if kind == "D":
        return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1])), 2 * n - 2
    exps = EXPONENTS[f"{kind}{n}"]
    return exps, exps[-1] + 1


@lru_cache(maxsize=None)
def build_root_system(kind: str, rank: int | None = None) -> RootSystem:
    """Root system from its type, e.g. build_root_system('B', 3) or ('E6')."""
    kind, n = parse_type(kind, rank)
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in _edges(kind, n):
        cartan[i][j], cartan[j][i] = aij, aji
    cartan_t = tuple(map(tuple, cartan))
    exps, h = _standard_exponents(kind, n)
    rs = RootSystem(kind, n, cartan_t, (), exps, h)

    seen = set(rs.simple)
    frontier = list(rs.simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                img = rs.reflect(i, beta)
                if any(c > 0 for c in img) and img not in seen:
                    if any(c < 0 for c in img):
                        raise InternalConsistencyError(f"mixed-sign root {img}")
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    rs.positive = tuple(sorted(seen, key=lambda r: (sum(r), tuple(-c for c in r))))
    if len(rs.positive) * 2 != n * h:
        raise InternalConsistencyError(f"{rs.label}: {len(rs.positive)} positive roots, expected {n * h // 2}")
    return rs


def bipartition(rs: RootSystem) -> tuple[frozenset[int], frozenset[int]]:
    """Two-colour the Dynkin tree; the part holding simple root 0 is I_+."""
    colour = {0: 0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in rs.neighbours(i):
            if j not in colour:
                colour[j] = 1 - colour[i]
                stack.append(j)
            elif colour[j] == colour[i]:
                raise InternalConsistencyError("Dynkin diagram is not bipartite")
    plus = frozenset(i for i, c in colour.items() if c == 0)
    return plus, frozenset(range(rs.rank)) - plus


def _orbit_order(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        order = order * length // gcd(order, length)
    return order


@dataclass
class ClusterComplex:
    """Almost positive roots indexed 0..n-1 (the negative simples -a_i) then
    n.. (the positive roots).  tau_plus, tau_minus and R are permutations of
    these indices; R = tau_minus o tau_plus.
    """

    label: str
    rank: int
    roots: tuple
    tau_plus: tuple[int, ...]
    tau_minus: tuple[int, ...]
    compat: tuple[tuple[bool, ...], ...]
    system: RootSystem | None = None
    exponents: tuple[int, ...] = ()
    coxeter_number: int = 0
    _facets: tuple | None = field(default=None, repr=False)

    @cached_property
    def R(self) -> tuple[int, ...]:
        return tuple(self.tau_minus[self.tau_plus[i]] for i in range(len(self.roots)))

    def tau(self, eps: str) -> tuple[int, ...]:
        if eps == "+":
            return self.tau_plus
        if eps == "-":
            return self.tau_minus
        raise DomainError("eps must be '+' or '-'")

    def root_text(self, i: int) -> str:
        r = self.roots[i]
        return str(r) if isinstance(r, str) else "(" + ",".join(map(str, r)) + ")"


def _tau_image(rs: RootSystem, part: frozenset[int], other: frozenset[int], beta: Root) -> Root:
    neg = [i for i, c in enumerate(beta) if c < 0]
    if neg:
        (i,) = neg
        if i in other:
            return beta
    for i in sorted(part):
        beta = rs.reflect(i, beta)
    return beta


def _reduce_compatible(R: Sequence[int], rank: int, roots: Sequence[Root], a: int, b: int) -> bool:
    limit = len(roots)
    for _ in range(limit + 1):
        if a < rank or b < rank:
            if a < rank and b < rank:
                return True
            i, other = (a, b) if a < rank else (b, a)
            return roots[other][i] == 0
        a, b = R[a], R[b]
    raise InternalConsistencyError("no negative simple root reached under R")


@lru_cache(maxsize=None)
def cluster_complex(kind: str, rank: int | None = None) -> ClusterComplex:
    rs = build_root_system(kind, rank)
    n = rs.rank
    roots = tuple(tuple(-c for c in s) for s in rs.simple) + rs.positive
    index = {r: i for i, r in enumerate(roots)}
    plus, minus = bipartition(rs)

    def perm(part, other):
        out = []
        for r in roots:
            img = _tau_image(rs, part, other, r)
            if img not in index:
                raise InternalConsistencyError(f"tau image {img} is not almost positive")
            out.append(index[img])
        return tuple(out)

    tp, tm = perm(plus, minus), perm(minus, plus)
    R = [tm[tp[i]] for i in range(len(roots))]
    size = len(roots)
    compat = tuple(
        tuple(i != j and _reduce_compatible(R, n, roots, i, j) for j in range(size))
        for i in range(size)
    )
    return ClusterComplex(rs.label, n, roots, tp, tm, compat, rs, rs.exponents, rs.coxeter_number)


def tau(cc: ClusterComplex, eps: str, alpha: int) -> int:
    return cc.tau(eps)[alpha]


def compatible(cc: ClusterComplex, alpha: int, beta: int) -> bool:
    if alpha == beta:
        raise DomainError("compatibility is defined for distinct roots")
    return cc.compat[alpha][beta]


def enumerate_facets(cc: ClusterComplex) -> Iterator[frozenset[int]]:
    if cc._facets is None:
        g = nx.Graph()
        g.add_nodes_from(range(len(cc.roots)))
        g.add_edges_from((i, j) for i, row in enumerate(cc.compat) for j, ok in enumerate(row) if ok and i < j)
        found = []
        for clique in nx.find_cliques(g):
            if len(clique) != cc.rank:
                raise InternalConsistencyError(f"{cc.label}: maximal compatible set of size {len(clique)}")
            found.append(frozenset(clique))
        cc._facets = tuple(sorted(found, key=sorted))
    yield from cc._facets


def fixed_facets(cc: ClusterComplex, eps: str) -> int:
    t = cc.tau(eps)
    return sum(1 for F in enumerate_facets(cc) if frozenset(t[i] for i in F) == F)


def order_of_R(cc: ClusterComplex) -> int:
    return _orbit_order(cc.R)


def _q_integer(n: int) -> list[int]:
    return [1] * n


@lru_cache(maxsize=None)
def catalan_q_product(exponents: tuple[int, ...], h: int) -> tuple[int, ...]:
    """Coefficients of prod [h+e+1]_q / [e+1]_q, lowest degree first."""
    num, den = [1], [1]
    for e in exponents:
        num = upoly_mul(num, _q_integer(h + e + 1))
        den = upoly_mul(den, _q_integer(e + 1))
    quo, rem = upoly_divmod(num, den)
    if any(rem):
        raise InternalConsistencyError("q-Catalan product is not a polynomial")
    return tuple(quo)


def eval_upoly_at_root(coeffs: Sequence[int], d: int, ell: int) -> int:
    value = CyclotomicValue.integer(d, 0)
    for k, c in enumerate(coeffs):
        if c:
            value = value + CyclotomicValue.root(d, k * ell) * CyclotomicValue.integer(d, c)
    return as_integer(value)


@dataclass
class CensusRow:
    ell: int
    fixed: int
    predicted: int


@dataclass
class CyclicCensus:
    label: str
    period: int
    order_of_R: int
    rows: list[CensusRow]

    @property
    def order_parity(self) -> str:
        return "odd" if self.order_of_R % 2 else "even"

    def ok(self) -> bool:
        return all(r.fixed == r.predicted for r in self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["ell", "fixed", "predicted"])
        for r in self.rows:
            w.writerow([r.ell, r.fixed, r.predicted])
        return buf.getvalue()


def cyclic_census(cc: ClusterComplex) -> CyclicCensus:
    """Fixed facets of R^ell against Cat(Phi, q) at q = zeta^ell.

    R generates a cyclic group of order h+2 on facets, or (h+2)/2 when -1 is
    in W; the evaluation is taken at (h+2)-th roots of unity, which is the
    convention under which the counts agree for every type.  The order of R
    on almost positive roots is reported separately.
    """
    h = cc.coxeter_number
    if not h:
        raise DomainError("cyclic census needs exponents and a Coxeter number")
    period = h + 2
    poly = catalan_q_product(cc.exponents, h)
    facets = list(enumerate_facets(cc))
    rows = []
    power = list(range(len(cc.roots)))
    for ell in range(period):
        fixed = sum(1 for F in facets if frozenset(power[i] for i in F) == F)
        rows.append(CensusRow(ell, fixed, eval_upoly_at_root(poly, period, ell)))
        power = [cc.R[i] for i in power]
    return CyclicCensus(cc.label, period, order_of_R(cc), rows)


def facets_to_text(cc: ClusterComplex) -> str:
    return "\n".join(" ".join(map(str, sorted(F))) for F in enumerate_facets(cc))


# ---------------------------------------------------------------------------
# dihedral type I2(m)


def build_I2_complex(m: int) -> ClusterComplex:
    """Radial model of I2(m): position 0 is -a_-, positions 1..m are the
    positive roots from a_+ round to a_-, position m+1 is -a_+.

    tau_+ is i -> -i and tau_- is i -> m - i (mod m+2), so R turns every root
    back two positions and clusters are radially consecutive pairs.
    """
    if m < 3:
        raise DomainError("I2(m) needs m >= 3")
    size = m + 2
    tp = tuple((-i) % size for i in range(size))
    tm = tuple((m - i) % size for i in range(size))
    compat = tuple(
        tuple((i - j) % size in (1, size - 1) for j in range(size)) for i in range(size)
    )
    names = ("-a-",) + tuple(f"b{i}" for i in range(1, m + 1)) + ("-a+",)
    return ClusterComplex(f"I2({m})", 2, names, tp, tm, compat, None, (1, m - 1), m)


def get_complex(kind: str, rank: int | None = None) -> ClusterComplex:
    """Cluster complex by type label; 'I2' takes m as its rank argument."""
    label = kind.strip().upper()
    if label.startswith("I2"):
        m = rank if rank is not None else int(label[2:].strip("()"))
        return build_I2_complex(m)
    return cluster_complex(label, rank)
