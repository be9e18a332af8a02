"""Exact polynomials in q, t and evaluation at roots of unity.

Bivariate polynomials are sparse maps ``(deg_q, deg_t) -> int``.  Values at
roots of unity live in ``Z[x]/Phi_d(x)`` and are stored as integer vectors of
length ``phi(d)``, so every sieving comparison is an exact integer comparison.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DomainError, InternalConsistencyError, NotRationalError

# ---------------------------------------------------------------------------
# univariate helpers (coefficient lists, lowest degree first)


def _trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def upoly_mul(a: Iterable[int], b: Iterable[int]) -> list[int]:
    a, b = list(a), list(b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def upoly_divmod(num: Iterable[int], den: Iterable[int]) -> tuple[list[int], list[int]]:
    """Long division over Z; the divisor's leading coefficient must divide
    every intermediate leading coefficient (always true for monic divisors)."""
    num, den = _trim(list(num)), _trim(list(den))
    if den == [0]:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = num[:]
    dd, lead = len(den) - 1, den[-1]
    if len(rem) - 1 < dd:
        return [0], rem
    quo = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        if c % lead:
            raise InternalConsistencyError("non-integral quotient in long division")
        f = c // lead
        quo[k - dd] = f
        for i, y in enumerate(den):
            rem[k - dd + i] -= f * y
    return _trim(quo), _trim(rem[:dd] or [0])


def euler_phi(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def mobius(n: int) -> int:
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Phi_d as a coefficient tuple, by dividing x^d - 1 by Phi_e for e | d, e < d."""
    if d < 1:
        raise DomainError("cyclotomic order must be positive")
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num, rem = upoly_divmod(num, cyclotomic_polynomial(e))
            if rem != [0]:
                raise InternalConsistencyError(f"Phi_{e} does not divide x^{d}-1")
    return tuple(num)


def cyclotomic_polynomial_mobius(d: int) -> tuple[int, ...]:
    """Phi_d = prod_{e|d} (x^e - 1)^mu(d/e); independent route used as an oracle."""
    top, bottom = [1], [1]
    for e in range(1, d + 1):
        if d % e:
            continue
        mu = mobius(d // e)
        factor = [-1] + [0] * (e - 1) + [1]
        if mu == 1:
            top = upoly_mul(top, factor)
        elif mu == -1:
            bottom = upoly_mul(bottom, factor)
    quo, rem = upoly_divmod(top, bottom)
    if rem != [0]:
        raise InternalConsistencyError("Mobius product is not a polynomial")
    return tuple(quo)


# ---------------------------------------------------------------------------
# bivariate polynomials


class BivariatePolynomial:
    """Immutable integer polynomial in q and t."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise DomainError("negative exponents are not supported")
            if c:
                clean[(int(i), int(j))] = int(c)
        self._terms = clean
        self._hash: int | None = None

    # construction helpers
    @classmethod
    def constant(cls, c: int) -> BivariatePolynomial:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> BivariatePolynomial:
        return cls({(i, j): c})

    @classmethod
    def from_counts(cls, pairs: Iterable[tuple[int, int]]) -> BivariatePolynomial:
        """Sum of q^i t^j over an iterable of exponent pairs."""
        acc: dict[tuple[int, int], int] = {}
        for key in pairs:
            acc[key] = acc.get(key, 0) + 1
        return cls(acc)

    @property
    def terms(self) -> Mapping[tuple[int, int], int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self._terms}) <= 1

    def swap(self) -> BivariatePolynomial:
        return BivariatePolynomial({(j, i): c for (i, j), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def leading_term(self) -> tuple[tuple[int, int], int]:
        key = max(self._terms)
        return key, self._terms[key]

    def evaluate(self, q, t):
        """Evaluate at arbitrary numbers (ints, Fractions, complex)."""
        total = 0
        for (i, j), c in self._terms.items():
            total += c * q**i * t**j
        return total

    # arithmetic
    @staticmethod
    def _coerce(other) -> BivariatePolynomial:
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return BivariatePolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in self._terms.items():
            for (k, l), d in other._terms.items():
                key = (i + k, j + l)
                acc[key] = acc.get(key, 0) + c * d
        return BivariatePolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not polynomials")
        out, base = BivariatePolynomial.constant(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        """Long division with terms ordered lexicographically by (deg_q, deg_t)."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        (di, dj), dc = other.leading_term()
        rem = dict(self._terms)
        quo: dict[tuple[int, int], int] = {}
        out_rem: dict[tuple[int, int], int] = {}
        while rem:
            key = max(rem)
            c = rem[key]
            i, j = key
            if i >= di and j >= dj and c % dc == 0:
                f, mi, mj = c // dc, i - di, j - dj
                quo[(mi, mj)] = quo.get((mi, mj), 0) + f
                for (k, l), d in other._terms.items():
                    kk = (k + mi, l + mj)
                    v = rem.get(kk, 0) - f * d
                    if v:
                        rem[kk] = v
                    else:
                        rem.pop(kk, None)
            else:
                out_rem[key] = c
                del rem[key]
        return BivariatePolynomial(quo), BivariatePolynomial(out_rem)

    def exact_div(self, other) -> BivariatePolynomial:
        quo, rem = divmod(self, other)
        if not rem.is_zero():
            raise InternalConsistencyError(f"nonzero remainder {rem} in exact division")
        return quo

    # comparison / display
    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"BivariatePolynomial({self})"

    def __str__(self):
        return to_text(self)


def to_text(p: BivariatePolynomial) -> str:
    """Canonical "c q^a t^b + ..." form, terms by descending q- then t-degree."""
    if p.is_zero():
        return "0"
    parts = []
    for (i, j) in sorted(p.terms, reverse=True):
        c = p.terms[(i, j)]
        mono = []
        if i:
            mono.append("q" if i == 1 else f"q^{i}")
        if j:
            mono.append("t" if j == 1 else f"t^{j}")
        mag = abs(c)
        body = " ".join(mono)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag} {body}"
        parts.append(("-" if c < 0 else "+", body))
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


Q = BivariatePolynomial.monomial(1, 0)
T = BivariatePolynomial.monomial(0, 1)
ONE = BivariatePolynomial.constant(1)


def qt_analogue(n: int) -> BivariatePolynomial:
    """{n}_{q,t} = sum_{i=0}^{n-1} q^i t^{n-1-i}."""
    if n < 1:
        raise DomainError("qt_analogue requires n >= 1")
    return BivariatePolynomial({(i, n - 1 - i): 1 for i in range(n)})


@lru_cache(maxsize=None)
def qt_factorial(n: int) -> BivariatePolynomial:
    if n < 0:
        raise DomainError("qt_factorial requires n >= 0")
    if n == 0:
        return ONE
    return qt_factorial(n - 1) * qt_analogue(n)


@lru_cache(maxsize=None)
def qt_binomial(n: int, k: int) -> BivariatePolynomial:
    if not 0 <= k <= n:
        raise DomainError("qt_binomial requires 0 <= k <= n")
    return qt_factorial(n).exact_div(qt_factorial(k) * qt_factorial(n - k))


def q_integer(n: int) -> BivariatePolynomial:
    """Classical [n]_q = 1 + q + ... + q^{n-1}, as a polynomial in q alone."""
    if n < 1:
        raise DomainError("q_integer requires n >= 1")
    return BivariatePolynomial({(i, 0): 1 for i in range(n)})


# ---------------------------------------------------------------------------
# cyclotomic values


def _reduce(order: int, coeffs: Iterable[int]) -> tuple[int, ...]:
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    _, rem = upoly_divmod(list(coeffs) or [0], phi)
    rem = rem + [0] * (deg - len(rem))
    return tuple(rem[:deg])


@dataclass(frozen=True)
class CyclotomicValue:
    """Element of Z[zeta_d] in the power basis 1, zeta, ..., zeta^{phi(d)-1}."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != euler_phi(self.order):
            raise InternalConsistencyError("coefficient vector has the wrong length")

    @classmethod
    def from_power_coeffs(cls, order: int, coeffs: Iterable[int]) -> CyclotomicValue:
        """Reduce sum_k coeffs[k] zeta^k modulo Phi_order."""
        return cls(order, _reduce(order, coeffs))

    @classmethod
    def integer(cls, order: int, c: int) -> CyclotomicValue:
        return cls.from_power_coeffs(order, [c])

    @classmethod
    def root(cls, order: int, exponent: int = 1) -> CyclotomicValue:
        vec = [0] * order
        vec[exponent % order] = 1
        return cls.from_power_coeffs(order, vec)

    def _check(self, other: CyclotomicValue):
        if other.order != self.order:
            raise DomainError("cyclotomic values of different orders")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicValue.integer(self.order, other)
        self._check(other)
        return CyclotomicValue(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicValue(self.order, tuple(other * a for a in self.coeffs))
        self._check(other)
        return CyclotomicValue.from_power_coeffs(self.order, upoly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def exact_div_int(self, k: int) -> CyclotomicValue:
        if any(a % k for a in self.coeffs):
            raise InternalConsistencyError(f"value not divisible by {k}: {self.coeffs}")
        return CyclotomicValue(self.order, tuple(a // k for a in self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * z**k for k, c in enumerate(self.coeffs))


def eval_at_roots(
    p: BivariatePolynomial, d: int, a: int, b: int, cross_check: bool = False
) -> CyclotomicValue:
    """Exact value of p(zeta_d^a, zeta_d^b)."""
    if d < 1:
        raise DomainError("root-of-unity order must be positive")
    vec = [0] * d
    for (i, j), c in p.terms.items():
        vec[(a * i + b * j) % d] += c
    value = CyclotomicValue.from_power_coeffs(d, vec)
    if cross_check:
        z = cmath.exp(2j * cmath.pi / d)
        approx = p.evaluate(z**a, z**b)
        exact = value.to_complex()
        scale = max(1.0, abs(approx))
        if abs(approx - exact) > 1e-6 * scale:
            raise InternalConsistencyError(
                f"float cross-check failed: exact {exact} vs float {approx}"
            )
    return value


def as_integer(v: CyclotomicValue) -> int:
    if not v.is_rational():
        raise NotRationalError(v.order, v.coeffs)
    return v.coeffs[0]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient that is zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
