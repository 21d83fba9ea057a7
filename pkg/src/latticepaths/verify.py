"""Cross-checks wiring the whole package together.

Each check plays two or more independent computation routes against each
other and reports the first counterexample on disagreement.  The checks
are deterministic (fixed RNG seed for the random-input ones) and bounded:
``max_n`` caps the enumeration-backed checks, ``order`` the series-backed
ones.  Enumeration sizes are additionally capped per step set so a large
``max_n`` cannot blow up the run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from latticepaths import catalog
from latticepaths.catalog import FAMILIES, binom, catalan, central_binomial
from latticepaths.paths import (
    Step,
    count_by_downs,
    count_paths,
    enumerate_paths,
    reflect_first_crossing,
)
from latticepaths.riordan import (
    delannoy_array,
    identity_array,
    motzkin_array,
    pascal_array,
    uh_insertion_array,
)
from latticepaths.series import Series, polynomial

__all__ = ["CheckResult", "run_checks", "DEFAULT_MAX_N", "DEFAULT_ORDER"]

DEFAULT_MAX_N = 6
DEFAULT_ORDER = 30

# Enumeration stays fast no matter what max_n the caller asks for.
_BRUTE_CAPS = {
    frozenset({Step.U, Step.D}): 8,
    frozenset({Step.U, Step.D, Step.H}): 6,
    frozenset({Step.U, Step.D, Step.F}): 12,
}


@dataclass
class CheckResult:
    name: str
    ok: bool
    cases: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        suffix = f": {self.detail}" if self.detail else ""
        return f"{status}  {self.name} ({self.cases} cases){suffix}"


def _brute_range(family, max_n: int) -> range:
    return range(min(max_n, _BRUTE_CAPS[family.steps]) + 1)


def _check_method_agreement(order: int) -> CheckResult:
    cases = 0
    for family in FAMILIES.values():
        by_formula = catalog.terms(family, order, "formula")
        by_gf = catalog.terms(family, order, "gf")
        by_riordan = catalog.terms(family, order, "riordan")
        for n in range(order):
            cases += 1
            if not (by_formula[n] == by_gf[n] == by_riordan[n]):
                return CheckResult(
                    "method-agreement", False, cases,
                    f"family={family.key} n={n} formula={by_formula[n]} "
                    f"gf={by_gf[n]} riordan={by_riordan[n]}",
                )
    return CheckResult("method-agreement", True, cases)


def _check_brute_agreement(max_n: int) -> CheckResult:
    cases = 0
    for family in FAMILIES.values():
        for n in _brute_range(family, max_n):
            cases += 1
            expected = catalog.formula_term(family, n)
            got = len(enumerate_paths(family.path_family(n)))
            if expected != got:
                return CheckResult(
                    "brute-agreement", False, cases,
                    f"family={family.key} n={n} expected={expected} got={got}",
                )
    return CheckResult("brute-agreement", True, cases)


def _check_dp_vs_dfs(max_n: int) -> CheckResult:
    cases = 0
    for family in FAMILIES.values():
        for n in _brute_range(family, max_n):
            cases += 1
            expected = len(enumerate_paths(family.path_family(n)))
            got = count_paths(family.path_family(n))
            if expected != got:
                return CheckResult(
                    "dp-vs-dfs", False, cases,
                    f"family={family.key} n={n} expected={expected} got={got}",
                )
    return CheckResult("dp-vs-dfs", True, cases)


def _check_triangle_binomials(order: int) -> CheckResult:
    size = min(order, 31)
    arrays = {
        "delannoy": (delannoy_array(size), lambda n, d: binom(n + d, n - d)),
        "motzkin": (motzkin_array(size), lambda n, d: binom(n, 2 * d)),
        "uh": (uh_insertion_array(size), lambda n, d: binom(n - d, d)),
        "pascal": (pascal_array(size), lambda n, d: binom(n, d)),
    }
    cases = 0
    for name, (array, expected) in arrays.items():
        triangle = array.triangle(size)
        for n in range(size):
            for d in range(n + 1):
                cases += 1
                if triangle[n][d] != expected(n, d):
                    return CheckResult(
                        "triangle-binomials", False, cases,
                        f"array={name} n={n} d={d} "
                        f"expected={expected(n, d)} got={triangle[n][d]}",
                    )
    return CheckResult("triangle-binomials", True, cases)


def _check_central_gf(order: int) -> CheckResult:
    series = catalog.central_gf(order)
    cases = 0
    for n in range(order):
        cases += 1
        if series.coeff(n) != central_binomial(n):
            return CheckResult(
                "central-gf-coefficients", False, cases,
                f"n={n} expected={central_binomial(n)} got={series.coeff(n)}",
            )
    return CheckResult("central-gf-coefficients", True, cases)


def _check_convolution_powers(order: int) -> CheckResult:
    limit = min(order, 21)
    squared = catalog.central_gf(limit) * catalog.central_gf(limit)
    cases = 0
    for n in range(limit):
        cases += 1
        if squared.coeff(n) != 4**n:
            return CheckResult(
                "squared-central-gf", False, cases,
                f"n={n} expected={4 ** n} got={squared.coeff(n)}",
            )
    return CheckResult("squared-central-gf", True, cases)


def _check_catalan_identities() -> CheckResult:
    cases = 0
    for n in range(31):
        cases += 1
        difference = binom(2 * n, n) - binom(2 * n, n - 1)
        quotient = central_binomial(n) // (n + 1)
        doubled = 2 * central_binomial(n) - central_binomial(n + 1) // 2
        if central_binomial(n + 1) % 2 != 0 or not (
            difference == quotient == doubled == catalan(n)
        ):
            return CheckResult(
                "catalan-identities", False, cases,
                f"n={n} difference={difference} quotient={quotient} doubled={doubled}",
            )
    return CheckResult("catalan-identities", True, cases)


def _check_gf_equivalences(order: int) -> CheckResult:
    cases = 0
    for family in FAMILIES.values():
        cases += 1
        try:
            catalog.gf(family, order)  # raises on simplified-vs-composed mismatch
        except catalog.ConsistencyError as exc:
            return CheckResult("gf-equivalences", False, cases, str(exc))
    # The flat-insertion radical also factors: 1/(sqrt(1-x) * sqrt(1-x-4x**2)).
    cases += 1
    family = FAMILIES["avoid_flat_big_motzkin"]
    product_form = 1 / (polynomial([1, -1], order).sqrt() * polynomial([1, -1, -4], order).sqrt())
    if product_form != catalog.gf(family, order):
        n = next(
            i for i in range(order)
            if product_form.coeff(i) != catalog.gf(family, order).coeff(i)
        )
        return CheckResult(
            "gf-equivalences", False, cases,
            f"family={family.key} factored radical differs at n={n}",
        )
    return CheckResult("gf-equivalences", True, cases)


def _check_transform_vs_row_apply(order: int) -> CheckResult:
    size = min(order, 32)
    rng = Random(90344)
    sequences = [
        [central_binomial(d) for d in range(size)],
        [catalan(d) for d in range(size)],
        [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(size)],
    ]
    arrays = {
        "identity": identity_array(size),
        "pascal": pascal_array(size),
        "delannoy": delannoy_array(size),
        "motzkin": motzkin_array(size),
        "uh": uh_insertion_array(size),
    }
    cases = 0
    for name, array in arrays.items():
        for u in sequences:
            cases += 1
            by_rows = array.row_apply(u)
            by_transform = array.transform(Series(u))
            if by_rows != list(by_transform.coeffs):
                n = next(i for i in range(size) if by_rows[i] != by_transform.coeff(i))
                return CheckResult(
                    "transform-vs-row-apply", False, cases,
                    f"array={name} n={n} rows={by_rows[n]} transform={by_transform.coeff(n)}",
                )
    return CheckResult("transform-vs-row-apply", True, cases)


def _check_reflection(max_n: int) -> CheckResult:
    cases = 0
    for n in range(min(max_n, 7) + 1):
        cases += 1
        central = enumerate_paths(FAMILIES["central"].path_family(n))
        risers = [p for p in central if any(y > 0 for _, y in p.points())]
        images = [reflect_first_crossing(p) for p in risers]
        labels = {p.labels for p in images}
        expected_image = binom(2 * n, n - 1)
        dyck_count = len(central) - len(risers)
        if (
            len(labels) != len(images)
            or len(images) != expected_image
            or any(p.endpoint != (2 * n, 2) for p in images)
            or dyck_count != catalan(n)
        ):
            return CheckResult(
                "reflection-bijection", False, cases,
                f"n={n} image={len(labels)} expected={expected_image} "
                f"dyck={dyck_count} catalan={catalan(n)}",
            )
    return CheckResult("reflection-bijection", True, cases)


def _check_down_buckets(max_n: int) -> CheckResult:
    cases = 0
    for family in FAMILIES.values():
        for n in range(min(max_n, 7, _BRUTE_CAPS[family.steps]) + 1):
            buckets = count_by_downs(family.path_family(n))
            for d in range(n + 1):
                cases += 1
                expected = family.weight(n, d) * family.base_term(d)
                got = buckets.get(d, 0)
                if expected != got:
                    return CheckResult(
                        "down-step-buckets", False, cases,
                        f"family={family.key} n={n} d={d} expected={expected} got={got}",
                    )
    return CheckResult("down-step-buckets", True, cases)


def _check_figure_counts(max_n: int) -> CheckResult:
    targets = []
    if max_n >= 2:
        targets += [("delannoy", 2, 13), ("schroeder", 2, 6)]
    if max_n >= 5:
        targets += [("big_motzkin", 5, 51), ("motzkin", 5, 21)]
    cases = 0
    for key, n, expected in targets:
        cases += 1
        got = len(enumerate_paths(FAMILIES[key].path_family(n)))
        if got != expected:
            return CheckResult(
                "known-small-counts", False, cases,
                f"family={key} n={n} expected={expected} got={got}",
            )
    if max_n >= 5:
        cases += 1
        big = len(enumerate_paths(FAMILIES["big_motzkin"].path_family(5)))
        small = len(enumerate_paths(FAMILIES["motzkin"].path_family(5)))
        if big - small != 30:
            return CheckResult(
                "known-small-counts", False, cases,
                f"big minus sub-axis Motzkin count is {big - small}, expected 30",
            )
    detail = "" if targets else f"nothing to do at max_n={max_n}"
    return CheckResult("known-small-counts", True, cases, detail)


def run_checks(max_n: int = DEFAULT_MAX_N, order: int = DEFAULT_ORDER) -> list[CheckResult]:
    """Run the whole cross-check suite; order of results is stable."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    plan = [
        ("method-agreement", lambda: _check_method_agreement(order)),
        ("brute-agreement", lambda: _check_brute_agreement(max_n)),
        ("dp-vs-dfs", lambda: _check_dp_vs_dfs(max_n)),
        ("triangle-binomials", lambda: _check_triangle_binomials(order)),
        ("central-gf-coefficients", lambda: _check_central_gf(order)),
        ("squared-central-gf", lambda: _check_convolution_powers(order)),
        ("catalan-identities", _check_catalan_identities),
        ("gf-equivalences", lambda: _check_gf_equivalences(order)),
        ("transform-vs-row-apply", lambda: _check_transform_vs_row_apply(order)),
        ("reflection-bijection", lambda: _check_reflection(max_n)),
        ("down-step-buckets", lambda: _check_down_buckets(max_n)),
        ("known-small-counts", lambda: _check_figure_counts(max_n)),
    ]
    results = []
    for name, check in plan:
        try:
            results.append(check())
        except Exception as exc:  # a crashed check is a failed check
            results.append(CheckResult(name, False, 0, f"{type(exc).__name__}: {exc}"))
    return results
