"""Symmetric functions evaluated at eigenvalues of permutation matrices, and
the q,t,b-analogue of n used for dihedral groups of even order parameter.

Everything is routed through power sums and Newton's identities.  For a
permutation the power sums are integers; for the dihedral substitutions they
are cyclotomic integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, gcd
from typing import Iterable, Iterator, Sequence

from .dissect import DihedralElement, group_elements, reflection, rotation
from .errors import DomainError, InternalConsistencyError
from .polyqt import CyclotomicValue, as_integer

# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class CycleType:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise DomainError("cycle lengths must be positive")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "+".join(map(str, self.parts)) or "empty"


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def cycle_types(n: int) -> list[CycleType]:
    return [CycleType(p) for p in partitions(n)]


def representative(ct: CycleType) -> list[int]:
    """A permutation of 0..n-1 with the given cycle type, as an image list."""
    perm, start = [], 0
    for c in ct.parts:
        perm += [start + (i + 1) % c for i in range(c)]
        start += c
    return perm


def cycle_type_of(perm: Sequence[int]) -> CycleType:
    seen, parts = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        length, x = 0, s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        parts.append(length)
    return CycleType(tuple(parts))


@dataclass(frozen=True)
class EigenvalueMultiset:
    """Descriptors (c, j) standing for exp(2 pi i j / c)."""

    values: tuple[tuple[int, int], ...]

    def power_sum(self, k: int) -> int:
        """Sum of lambda^k; each full set of c-th roots contributes c or 0."""
        by_order = Counter(c for c, _ in self.values)
        total = 0
        for c, mult in by_order.items():
            if mult % c:
                raise DomainError("power_sum needs complete sets of roots per cycle")
            total += (mult // c) * (c if k % c == 0 else 0)
        return total


def perm_eigenvalues(ct: CycleType) -> EigenvalueMultiset:
    return EigenvalueMultiset(tuple((c, j) for c in ct.parts for j in range(c)))


def power_sums_of(ct: CycleType, kmax: int) -> list[int]:
    """p_0..p_kmax of the permutation eigenvalues; p_j = sum of cycles c | j."""
    return [ct.n] + [sum(c for c in ct.parts if j % c == 0) for j in range(1, kmax + 1)]


def _newton_h(p: Sequence, kmax: int, div) -> list:
    """h_0..h_kmax from power sums: k h_k = sum_{i=1..k} p_i h_{k-i}."""
    h = [p[0] * 0 + 1]
    for k in range(1, kmax + 1):
        acc = p[1] * h[k - 1]
        for i in range(2, k + 1):
            acc = acc + p[i] * h[k - i]
        h.append(div(acc, k))
    return h


def _newton_e(p: Sequence, kmax: int, div) -> list:
    """e_0..e_kmax: k e_k = sum_{i=1..k} (-1)^(i-1) p_i e_{k-i}."""
    e = [p[0] * 0 + 1]
    for k in range(1, kmax + 1):
        acc = p[1] * e[k - 1]
        for i in range(2, k + 1):
            term = p[i] * e[k - i]
            acc = acc + term if i % 2 else acc - term
        e.append(div(acc, k))
    return e


def _int_div(x: int, k: int) -> int:
    q, r = divmod(x, k)
    if r:
        raise InternalConsistencyError(f"Newton step {x}/{k} is not integral")
    return q


def h_values(ct: CycleType, kmax: int) -> list[int]:
    return _newton_h(power_sums_of(ct, kmax), kmax, _int_div)


def e_values(ct: CycleType, kmax: int) -> list[int]:
    return _newton_e(power_sums_of(ct, kmax), kmax, _int_div)


def _as_ct(ev) -> CycleType:
    if isinstance(ev, CycleType):
        return ev
    if isinstance(ev, EigenvalueMultiset):
        return CycleType(tuple(c for c, j in ev.values if j == 0))
    raise DomainError("expected a cycle type or eigenvalue multiset")


def h_k_eval(k: int, ev) -> int:
    if k < 0:
        raise DomainError("k must be nonnegative")
    return h_values(_as_ct(ev), k)[k]


def e_k_eval(k: int, ev) -> int:
    if k < 0:
        raise DomainError("k must be nonnegative")
    return e_values(_as_ct(ev), k)[k]


def _hook(a: int, b: int, h: Sequence, e: Sequence):
    """s_{(a, 1^(b-1))} = sum_j (-1)^j h_{a+j} e_{b-1-j}; zero if a or b is 0."""
    if a == 0 or b == 0:
        return 0
    total = 0
    for j in range(b):
        term = h[a + j] * e[b - 1 - j]
        total = total + term if j % 2 == 0 else total - term
    return total


def hook_schur_eval(a: int, b: int, ev) -> int:
    if a < 0 or b < 0:
        raise DomainError("hook parameters must be nonnegative")
    ct = _as_ct(ev)
    top = a + b
    return _hook(a, b, h_values(ct, top), e_values(ct, top))


def p_k_eval(k: int, ev) -> int:
    """Fixed k-subsets from hook Schur values.

    For k >= 1 this is sum_j (-1)^j (s_{k-2j+1, j} + s_{k-2j, j+1}).  At k = 0
    that sum is s_{1,0} + s_{0,1} = 0 under the zero convention for empty
    hooks, so the value 1 of the empty subset is returned instead.
    """
    ct = _as_ct(ev)
    if not 0 <= k <= ct.n:
        raise DomainError("need 0 <= k <= n")
    if k == 0:
        return 1
    return p_k_hook_sum(k, ct)


def p_k_hook_sum(k: int, ev) -> int:
    """The alternating hook sum exactly as written, including k = 0."""
    ct = _as_ct(ev)
    top = k + 2
    h, e = h_values(ct, top), e_values(ct, top)
    total = 0
    for j in range(k // 2 + 1):
        term = _hook(k - 2 * j + 1, j, h, e) + _hook(k - 2 * j, j + 1, h, e)
        total += -term if j % 2 else term
    return total


def fixed_subsets(perm: Sequence[int], k: int) -> int:
    n = len(perm)
    return sum(1 for S in combinations(range(n), k) if {perm[i] for i in S} == set(S))


def fixed_multisets(perm: Sequence[int], k: int) -> int:
    n = len(perm)
    return sum(
        1
        for M in combinations_with_replacement(range(n), k)
        if sorted(perm[i] for i in M) == list(M)
    )


def fixed_multisets_by_orbits(perm: Sequence[int], k: int) -> int:
    """A fixed multiset is constant on cycles, so count ways to write k as a
    sum of cycle lengths with multiplicities."""
    ways = [1] + [0] * k
    for c in cycle_type_of(perm).parts:
        for total in range(c, k + 1):
            ways[total] += ways[total - c]
    return ways[k]


def fixed_subsets_by_orbits(perm: Sequence[int], k: int) -> int:
    ways = [1] + [0] * k
    for c in cycle_type_of(perm).parts:
        for total in range(k, c - 1, -1):
            ways[total] += ways[total - c]
    return ways[k]


# ---------------------------------------------------------------------------
# even dihedral groups


def nu2(n: int) -> int:
    if n < 1:
        raise DomainError("2-adic valuation needs n >= 1")
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


@dataclass(frozen=True)
class QTBMonomial:
    q: int
    t: int
    b: int


def qt_monomials(n: int, b: int = 0) -> list[QTBMonomial]:
    """Monomials of {n}_{q,t} = sum q^i t^(n-1-i), times b^b."""
    if n < 0:
        raise DomainError("negative length")
    return [QTBMonomial(i, n - 1 - i, b) for i in range(n)]


def qtb_analogue(n: int) -> list[QTBMonomial]:
    """The n monomials of <n>_{q,t,b}, chosen by the 2-adic valuation of n."""
    v = nu2(n)
    if v == 0:
        return qt_monomials(n)
    if v == 1:
        return qt_monomials(n // 2) + qt_monomials(n // 2, 1)
    if v == 2:
        return qt_monomials(n // 2) + qt_monomials(n // 4, 1) + qt_monomials(n // 4, 2)
    return qt_monomials(n // 2) + qt_monomials(n // 4 + 1, 1) + qt_monomials(n // 4 - 1, 2)


def qtb_text(monos: Iterable[QTBMonomial]) -> str:
    counts = Counter((m.b, m.q, m.t) for m in monos)
    parts = []
    for (b, q, t), c in sorted(counts.items(), key=lambda x: (x[0][0], -x[0][1])):
        factors = [f"{v}^{e}" if e > 1 else v for v, e in (("b", b), ("q", q), ("t", t)) if e]
        body = " ".join(factors) or "1"
        parts.append(body if c == 1 else f"{c} {body}")
    return " + ".join(parts) or "0"


@lru_cache(maxsize=None)
def _subgroup_r2_s(n: int) -> frozenset[DihedralElement]:
    gens = [rotation(n, 2), reflection(n, 0)]
    group = {rotation(n, 0)}
    frontier = list(group)
    while frontier:
        nxt = []
        for g in frontier:
            for x in gens:
                y = x * g
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(group)


def chi_b(g: DihedralElement) -> int:
    """+1 on the subgroup generated by r^2 and s, -1 elsewhere."""
    return 1 if g in _subgroup_r2_s(g.n) else -1


def as_permutation(g: DihedralElement) -> list[int]:
    """r acts on 0..n-1 as i -> i+1, s as i -> -i."""
    return [g(i) for i in range(g.n)]


def monomial_values(g: DihedralElement) -> list[tuple[int, int]]:
    """Each monomial of <n> at (lambda1, lambda2, chi_b(g)) as (order M, exponent)."""
    n = g.n
    M = 2 * n
    d, a, b = g.eigenvalue_exponents()
    scale = M // d
    sign_exp = 0 if chi_b(g) == 1 else n  # -1 = zeta_M^n
    return [
        (M, (m.q * a * scale + m.t * b * scale + m.b * sign_exp) % M) for m in qtb_analogue(n)
    ]


def _normalise(order: int, exponent: int) -> tuple[int, int]:
    g = gcd(order, exponent)
    return (order // g, exponent // g) if exponent else (1, 0)


def monomial_eigenvalues(g: DihedralElement) -> Counter:
    return Counter(_normalise(o, e) for o, e in monomial_values(g))


def permutation_eigenvalues(perm: Sequence[int]) -> Counter:
    ev = perm_eigenvalues(cycle_type_of(perm))
    return Counter(_normalise(c, j) for c, j in ev.values)


def plethystic_h_eval(k: int, n: int, g: DihedralElement) -> int:
    """h_k at the n monomial values of <n>_{q,t,b} specialised at g."""
    if g.n != n:
        raise DomainError("group element is not in I2(n)")
    if not 0 <= k <= n:
        raise DomainError("need 0 <= k <= n")
    vals = monomial_values(g)
    M = 2 * n
    p = [CyclotomicValue.integer(M, n)]
    for j in range(1, k + 1):
        vec = [0] * M
        for _, e in vals:
            vec[e * j % M] += 1
        p.append(CyclotomicValue.from_power_coeffs(M, vec))
    h = _newton_h(p, k, lambda x, m: x.exact_div_int(m))
    return as_integer(h[k])


def brute_fixed_multisets(g: DihedralElement, k: int) -> int:
    return fixed_multisets(as_permutation(g), k)


def dihedral_elements(n: int) -> list[DihedralElement]:
    return group_elements(n)


def binomial_identity_value(n: int, k: int) -> int:
    return comb(n, k)
