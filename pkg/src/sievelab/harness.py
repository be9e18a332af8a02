"""Verification suites producing uniform CheckResult records.

Each suite compares a brute-force count (lhs) with an exact evaluation or
closed form (rhs).  Reports serialize to JSON or CSV with stable ordering.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Any, Callable

from . import dissect, dyck, polyqt, posets, raney, roots, symfunc
from .errors import DomainError, NotRationalError

DEFAULT_SEED = 20240611
# largest a + b for which Dyck paths are enumerated path by path
ENUMERATION_LIMIT = 24


@dataclass
class CheckResult:
    check_id: str
    family: str
    params: dict[str, Any]
    lhs: int
    rhs: int | None
    status: str = field(init=False)
    witness: Any = None

    def __post_init__(self):
        self.status = "pass" if self.lhs == self.rhs else "fail"

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def _result(family: str, params: dict, lhs: int, rhs: int | None, witness: Any = None) -> CheckResult:
    """rhs is None when the evaluation was not an integer; that row fails."""
    key = ",".join(f"{k}={v}" for k, v in params.items())
    r = CheckResult(f"{family}[{key}]", family, dict(params), int(lhs), None if rhs is None else int(rhs), witness)
    if r.ok:
        r.witness = None
    return r


def all_pass(results: list[CheckResult]) -> bool:
    return all(r.ok for r in results)


def to_json(results: list[CheckResult]) -> str:
    return json.dumps([asdict(r) for r in results], indent=1, default=str)


def to_csv(results: list[CheckResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check_id", "family", "params", "lhs", "rhs", "status", "witness"])
    for r in results:
        params = ";".join(f"{k}={v}" for k, v in r.params.items())
        witness = "" if r.witness is None else json.dumps(r.witness, default=str)
        w.writerow([r.check_id, r.family, params, r.lhs, r.rhs, r.status, witness])
    return buf.getvalue()


def seed_from_env() -> int:
    raw = os.environ.get("SIEVELAB_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"SIEVELAB_SEED must be an integer, got {raw!r}") from exc


def _eval_int(p: polyqt.BivariatePolynomial, d: int, a: int, b: int) -> tuple[int | None, Any]:
    value = polyqt.eval_at_roots(p, d, a, b, cross_check=True)
    try:
        return polyqt.as_integer(value), None
    except NotRationalError:
        return None, {"cyclotomic_order": d, "coeffs": list(value.coeffs)}


# ---------------------------------------------------------------------------
# type A: k-angulations against the rational q,t-Catalan polynomial


def type_a_polynomial(s: int, m: int, normalize: bool = False) -> polyqt.BivariatePolynomial:
    if normalize:
        return dyck.dihedral_catalan(s, m)
    return dyck.rational_qt_catalan(s * m + 1, m)


def verify_type_a(s: int, m: int, normalize: bool = False) -> list[CheckResult]:
    """One row per element of I2(sm+2), then the closed forms.

    With normalize the polynomial is multiplied by (qt)^N, N = sm(m-1)/2,
    which leaves every rotation value unchanged and fixes the reflection sign.
    """
    if s < 1 or m < 1 or s % 2 == 0 or m % 2 == 0:
        raise DomainError("s and m must be odd and positive")
    n, k = s * m + 2, s + 2
    poly = type_a_polynomial(s, m, normalize)
    family = "type-a-normalized" if normalize else "type-a"
    out = []
    for g in dissect.group_elements(n):
        d, a, b = g.eigenvalue_exponents()
        rhs, witness = _eval_int(poly, d, a, b)
        lhs = dissect.fixed_count(n, k, g)
        key = dissect.conjugacy_class_key(g)
        params = {"s": s, "m": m, "n": n, "g": str(g), "class": f"{key[0]}{key[1]}"}
        out.append(_result(family, params, lhs, rhs, witness or {"element": str(g)}))

    refl = dissect.reflection(n)
    out.append(
        _result(
            "reflection-closed-form",
            {"n": n, "k": k},
            dissect.fixed_count(n, k, refl),
            dissect.reflection_fixed_closed_form(n, k),
        )
    )
    for d in range(2, n + 1):
        if n % d:
            continue
        g = dissect.rotation(n, n // d)
        out.append(
            _result(
                "rotation-closed-form",
                {"s": s, "m": m, "d": d},
                dissect.fixed_count(n, k, g),
                dissect.rotation_fixed_closed_form(d, s, m),
            )
        )
    return out


# ---------------------------------------------------------------------------
# cluster complexes


def verify_cluster(kind: str, rank: int | None = None) -> list[CheckResult]:
    """Cyclic census rows, then the reflection row.

    The reflection row compares |sum over ideals of (-1)^|I|| with the number
    of facets fixed by tau_+ or by tau_-: when the two counts differ the
    matching one is reported, so an unordered pair such as E7's {0, 24}
    passes exactly when one member equals the signed sum.
    """
    cc = roots.get_complex(kind, rank)
    census = roots.cyclic_census(cc)
    out = [
        _result(
            "cluster-cyclic",
            {"type": cc.label, "ell": row.ell, "period": census.period},
            row.fixed,
            row.predicted,
        )
        for row in census.rows
    ]
    label = cc.label
    P = posets.root_poset(label if cc.system is None else cc.system)
    signed = posets.signed_ideal_sum(P)
    plus, minus = roots.fixed_facets(cc, "+"), roots.fixed_facets(cc, "-")
    lhs = plus if plus == abs(signed) or minus != abs(signed) else minus
    out.append(
        _result(
            "cluster-reflection",
            {
                "type": label,
                "tau_plus": plus,
                "tau_minus": minus,
                "signed_sum": signed,
                "order_of_R": census.order_of_R,
                "order_parity": census.order_parity,
            },
            lhs,
            abs(signed),
            {"tau_plus": plus, "tau_minus": minus},
        )
    )
    return out


def verify_polygon_models(n: int) -> list[CheckResult]:
    """Facet counts of the polygon models against the root-theoretic complexes,
    and the tau-fixed counts expected to vanish for even B and odd D ranks."""
    out = []
    if n >= 2:
        facets = list(dissect.enumerate_typeB_facets(n))
        out.append(_result("polygon-B-count", {"n": n}, len(facets), comb(2 * n, n)))
        out.append(
            _result("polygon-B-vs-triangulations", {"n": n}, len(facets), len(dissect.typeB_from_triangulations(n)))
        )
        out.append(
            _result("polygon-B-vs-roots", {"n": n}, len(facets), len(list(roots.enumerate_facets(roots.cluster_complex("B", n)))))
        )
        if n % 2 == 0:
            for eps in "+-":
                out.append(_result("polygon-B-tau-fixed", {"n": n, "eps": eps}, dissect.tau_fixed_count_BD("B", n, eps), 0))
    if n >= 3:
        facets = list(dissect.enumerate_typeD_facets(n))
        h = 2 * n - 2
        exps = tuple(range(1, 2 * n - 2, 2)) + (n - 1,)
        out.append(_result("polygon-D-count", {"n": n}, len(facets), dissect.type_catalan(exps, h)))
        if n >= 4:
            out.append(
                _result("polygon-D-vs-roots", {"n": n}, len(facets), len(list(roots.enumerate_facets(roots.cluster_complex("D", n)))))
            )
        if n % 2 == 1:
            for eps in "+-":
                out.append(_result("polygon-D-tau-fixed", {"n": n, "eps": eps}, dissect.tau_fixed_count_BD("D", n, eps), 0))
    return out


# ---------------------------------------------------------------------------
# Raney numbers


def verify_raney(pmax: int, rmax: int, kmax: int, corrected: bool = False) -> list[CheckResult]:
    """Both recurrence families, the convolution identity and coral counts.

    The second family as usually displayed sums R_{p,r}(i) R_{p,r-1}(k-i),
    which exceeds R_{p,r}(k) whenever k >= 1; corrected=True uses
    R_{p,1}(i) R_{p,r-1}(k-i) instead.
    """
    if min(pmax, rmax, kmax) < 1:
        raise DomainError("bounds must be positive")
    out = []
    R = raney.raney
    for p in range(1, pmax + 1):
        for k in range(1, kmax + 1):
            rhs = sum(R(p, 1, i) * R(p, p - 1, k - 1 - i) for i in range(k))
            out.append(_result("raney-recurrence-1", {"p": p, "k": k}, R(p, 1, k), rhs))
    family = "raney-recurrence-2-corrected" if corrected else "raney-recurrence-2"
    for p in range(1, pmax + 1):
        for r in range(2, rmax + 1):
            for k in range(kmax + 1):
                first = 1 if corrected else r
                rhs = sum(R(p, first, i) * R(p, r - 1, k - i) for i in range(k + 1))
                out.append(_result(family, {"p": p, "r": r, "k": k}, R(p, r, k), rhs))
    for p in range(1, pmax + 1):
        for r in range(1, rmax + 1):
            for k in range(kmax + 1):
                out.append(
                    _result("raney-convolution", {"p": p, "r": r, "k": k}, raney.convolution_identity(p, r, k), R(p, r, k))
                )
    for p in range(2, min(pmax, 4) + 1):
        for r in range(1, min(rmax, 4) + 1):
            for k in range(min(kmax, 5) + 1):
                count = sum(1 for _ in raney.enumerate_coral(p, r, k))
                out.append(_result("coral-count", {"p": p, "r": r, "k": k}, count, R(p, r, k)))
    return out


# ---------------------------------------------------------------------------
# Dyck paths and signed shape counts


def verify_dyck(smax: int, mmax: int, normalize: bool = False) -> list[CheckResult]:
    """Signed path counts and their Raney values for odd s <= smax.

    Without normalize the Raney identities are checked as plain equalities;
    with it, the left side is multiplied by (-1)^((m-1)/2) for odd m and by
    (-1)^(m/2) for even m, the sign the shape counts actually carry.
    """
    if smax < 1 or mmax < 1:
        raise DomainError("bounds must be positive")
    out = []
    D = dyck.d_value
    R = raney.raney
    tag = "-normalized" if normalize else ""

    def sign(m: int) -> int:
        if not normalize:
            return 1
        return (-1) ** ((m - 1) // 2 if m % 2 else m // 2)

    odd_s = [s for s in range(1, smax + 1, 2)]
    odd_m = [m for m in range(1, mmax + 1, 2)]
    for s in odd_s:
        for m in range(1, mmax + 1):
            out.append(
                _result(
                    "staircase-shape",
                    {"s": s, "m": m},
                    int(dyck.staircase_shape(m, s * m + 1) == dyck.young_shape(s, 0, m)),
                    1,
                )
            )
        for m in odd_m:
            value = D(s, 0, m)
            if (s + 1) * m + 1 <= ENUMERATION_LIMIT:
                out.append(_result("dyck-signed-enumeration", {"s": s, "m": m}, dyck.signed_dyck_count(s * m + 1, m), value))
            out.append(_result("dyck-parity-raney" + tag, {"s": s, "m": m}, sign(m) * value, R(s + 1, (s + 1) // 2, (m - 1) // 2)))
            if m >= 1:
                out.append(_result("dyck-shift-identity", {"s": s, "m": m}, value, D(s, s, m - 1)))
    big_s = [s for s in range(5, max(smax, 7) + 1, 2)] if smax >= 5 else []
    for s in big_s:
        for ell in range(1, 8, 2):
            for m in odd_m:
                if m <= 5:
                    out.append(_result("d-vanishing", {"s": s, "ell": ell, "m": m}, D(s, ell, m), 0))
        for ell in range(1, 8, 2):
            for m in range(0, min(mmax, 6) + 1, 2):
                out.append(
                    _result(
                        "d-raney" + tag,
                        {"s": s, "ell": ell, "m": m},
                        sign(m) * D(s, ell, m),
                        R(s + 1, (ell + 1) // 2, m // 2),
                    )
                )
        for m in range(1, min(mmax, 6) + 1):
            rhs = sum((-1) ** (y + 1) * D(s, 1, y) * D(s, 2 * s - 1, m - (y + 2)) for y in range(m - 1))
            out.append(_result("d-recurrence-1", {"s": s, "m": m}, D(s, 1, m), rhs))
        for ell in range(3, 8, 2):
            for m in range(0, min(mmax, 6) + 1):
                rhs = sum((-1) ** ((m + 1) * y) * D(s, ell - 2, y) * D(s, 1, m - y) for y in range(m + 1))
                out.append(_result("d-recurrence-2", {"s": s, "ell": ell, "m": m}, D(s, ell, m), rhs))
    for s, m in [(s, m) for s in odd_s for m in odd_m]:
        a, b = s * m + 1, m
        if a + b > ENUMERATION_LIMIT:
            continue
        paths = list(dyck.enumerate_dyck(a, b))
        images = {dyck.sweep(p).word for p in paths}
        out.append(_result("sweep-bijection", {"a": a, "b": b}, len(images), len(paths)))
        poly = dyck.rational_qt_catalan(a, b)
        out.append(_result("qt-catalan-symmetric", {"a": a, "b": b}, int(poly.is_symmetric()), 1))
        n = s * m + 2
        for d in range(2, n + 1):
            if n % d:
                continue
            value, witness = _eval_int(poly, d, 1, d - 1)
            expected = comb((m * (s + 1) + 1) // d - 1, (m - 1) // d) if (s + 2) % d == 0 else 0
            out.append(_result("catalan-root-of-unity", {"s": s, "m": m, "d": d}, expected, value, witness))
    return out


# ---------------------------------------------------------------------------
# symmetric and even dihedral sieving


def verify_symmetric(n: int) -> list[CheckResult]:
    if n < 1:
        raise DomainError("n must be positive")
    out = []
    for ct in symfunc.cycle_types(n):
        perm = symfunc.representative(ct)
        for k in range(n + 1):
            out.append(
                _result("symmetric-h", {"n": n, "type": str(ct), "k": k}, symfunc.fixed_multisets(perm, k), symfunc.h_k_eval(k, ct))
            )
            out.append(
                _result("symmetric-p", {"n": n, "type": str(ct), "k": k}, symfunc.fixed_subsets(perm, k), symfunc.p_k_eval(k, ct))
            )
    return out


def verify_even_dihedral(n: int, kmax: int) -> list[CheckResult]:
    if n < 2 or n % 2:
        raise DomainError("n must be even and at least 2")
    out = []
    for g in dissect.group_elements(n):
        perm = symfunc.as_permutation(g)
        same = symfunc.monomial_eigenvalues(g) == symfunc.permutation_eigenvalues(perm)
        out.append(_result("qtb-eigenvalues", {"n": n, "g": str(g)}, int(same), 1))
        for k in range(min(n, kmax) + 1):
            brute = symfunc.fixed_multisets(perm, k)
            out.append(
                _result("even-dihedral-h", {"n": n, "g": str(g), "k": k}, brute, symfunc.plethystic_h_eval(k, n, g))
            )
    return out


def verify_binomial(n: int, kmax_multi: int = 4) -> list[CheckResult]:
    """q,t-binomials at dihedral eigenvalues against fixed subsets and multisubsets (odd n)."""
    if n < 1 or n % 2 == 0:
        raise DomainError("n must be odd")
    out = []
    for g in dissect.group_elements(n):
        d, a, b = g.eigenvalue_exponents()
        perm = symfunc.as_permutation(g)
        for k in range(n + 1):
            value, witness = _eval_int(polyqt.qt_binomial(n, k), d, a, b)
            out.append(
                _result("qt-binomial-subsets", {"n": n, "g": str(g), "k": k}, symfunc.fixed_subsets(perm, k), value, witness)
            )
        for k in range(kmax_multi + 1):
            value, witness = _eval_int(polyqt.qt_binomial(n + k - 1, k), d, a, b)
            out.append(
                _result("qt-binomial-multisets", {"n": n, "g": str(g), "k": k}, symfunc.fixed_multisets(perm, k), value, witness)
            )
    return out


def verify_posets(nmax: int = 6, line_max: int = 15) -> list[CheckResult]:
    out = []
    for n in range(1, nmax + 1):
        out.append(_result("trapezoid-signed-sum", {"n": n}, posets.signed_ideal_sum(posets.trapezoid_poset(n)), 0))
    for n in range(2, nmax + 1):
        out.append(_result("double-triangle-signed-sum", {"n": n}, posets.signed_ideal_sum(posets.double_triangle_poset(n)), 0))
    for n in range(3, line_max + 1, 2):
        out.append(_result("line-signed-sum", {"n": n}, posets.signed_ideal_sum(posets.line_poset(n)), -1))
    for n in range(2, min(nmax, 5) + 1):
        iso = posets.is_isomorphic(posets.root_poset("B", n), posets.trapezoid_poset(n))
        out.append(_result("trapezoid-isomorphism", {"n": n}, int(iso), 1))
    for n in (4, 5):
        iso = posets.is_isomorphic(posets.root_poset("D", n), posets.double_triangle_poset(n))
        out.append(_result("double-triangle-isomorphism", {"n": n}, int(iso), 1))
    return out


def verify_properties(trials: int = 50, seed: int | None = None) -> list[CheckResult]:
    """Randomized algebra checks on BivariatePolynomial and root evaluation."""
    rng = random.Random(seed_from_env() if seed is None else seed)

    def rand_poly():
        return polyqt.BivariatePolynomial(
            {(rng.randrange(6), rng.randrange(6)): rng.randint(-5, 5) for _ in range(rng.randrange(1, 6))}
        )

    out = []
    for i in range(trials):
        p, q, r = rand_poly(), rand_poly(), rand_poly()
        d = rng.randrange(1, 25)
        a, b = rng.randrange(d), rng.randrange(d)
        out.append(_result("poly-commutative", {"trial": i}, int(p * q == q * p and p + q == q + p), 1))
        out.append(_result("poly-associative", {"trial": i}, int((p * q) * r == p * (q * r)), 1))
        hom = polyqt.eval_at_roots(p * q, d, a, b) == polyqt.eval_at_roots(p, d, a, b) * polyqt.eval_at_roots(q, d, a, b)
        out.append(_result("eval-homomorphism", {"trial": i, "d": d, "a": a, "b": b}, int(hom), 1))
    return out


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "type-a": verify_type_a,
    "cluster": verify_cluster,
    "raney": verify_raney,
    "dyck": verify_dyck,
    "symmetric": verify_symmetric,
    "even-dihedral": verify_even_dihedral,
    "binomial": verify_binomial,
    "polygon": verify_polygon_models,
    "posets": verify_posets,
    "properties": verify_properties,
}
