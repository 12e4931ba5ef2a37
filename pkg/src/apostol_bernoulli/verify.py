"""Cross-formula verification lattice.

Each check compares independent computations exactly and records the first
counterexample it meets.  ``run_all`` drives every check; the CLI ``verify``
command is a thin wrapper around it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable

from . import apostol as ap
from . import classical as cl
from .combinatorics import bell_partial, binomial, stirling2_sum, stirling2_table
from .core.matrix import SquareMatrix, det_bareiss, det_cofactor
from .core.poleform import PoleForm
from .core.poly import Poly, zpoly
from .core.series import Series, exp_series
from .derivatives import apostol_via_faa_di_bruno, apostol_via_quotient

Z_GRID = (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(3, 5))
U_GRID = (Fraction(0), Fraction(1, 3), Fraction(1))

DEFAULT_POLY_N_MAX = 10
DEFAULT_NUM_N_MAX = 20


@dataclass
class Check:
    name: str
    cases: int = 0
    mismatch: str | None = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    def compare(self, label: str, a, b, fmt: Callable = str) -> bool:
        """Record one comparison; keep only the first failure."""
        self.cases += 1
        if a == b:
            return True
        if self.mismatch is None:
            self.mismatch = f"{label}: {_diff(a, b, fmt)}"
        return False


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)


def _diff(a, b, fmt) -> str:
    if isinstance(a, Poly) and isinstance(b, Poly):
        for i in range(max(len(a), len(b))):
            if a[i] != b[i]:
                return f"coefficient of {a.var}^{i}: {fmt(a[i])} != {fmt(b[i])}"
    return f"{fmt(a)} != {fmt(b)}"


def _all_equal(check: Check, n: int, values: dict) -> None:
    names = list(values)
    base = names[0]
    for other in names[1:]:
        if not check.compare(f"n={n}, {base} vs {other}", values[base], values[other]):
            return


# -- exact core --------------------------------------------------------------


def _random_rat(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def check_determinants(rng: random.Random, cases: int = 60) -> Check:
    check = Check("determinant: Bareiss = cofactor, rows alternate")
    for t in range(cases):
        n = rng.randint(1, 5)
        if t % 2:
            entries = [_random_rat(rng) for _ in range(n * n)]
        else:
            entries = [zpoly(*(_random_rat(rng) for _ in range(rng.randint(0, 3))))
                       for _ in range(n * n)]
        m = SquareMatrix(n, tuple(entries))
        d = det_bareiss(m)
        check.compare(f"{n}x{n} matrix #{t}", d, det_cofactor(m))
        if n >= 2:
            check.compare(f"{n}x{n} row swap #{t}", det_bareiss(m.swap_rows(0, n - 1)), -d)
    return check


def check_series_roundtrip(rng: random.Random, cases: int = 40) -> Check:
    check = Check("series: (a/b)*b = a")
    for t in range(cases):
        order = rng.randint(0, 8)
        a = Series([_random_rat(rng) for _ in range(order + 1)])
        b0 = _random_rat(rng)
        if not b0:
            b0 = Fraction(1)
        b = Series([b0] + [_random_rat(rng) for _ in range(order)])
        check.compare(f"case #{t}", (a / b) * b, a)
    return check


def check_poleform_normalization(rng: random.Random, cases: int = 40) -> Check:
    check = Check("pole form: normalization idempotent")
    for t in range(cases):
        num = zpoly(*(_random_rat(rng) for _ in range(rng.randint(0, 4))))
        num = num * zpoly(-1, 1) ** rng.randint(0, 3)
        p = PoleForm(num, rng.randint(0, 4))
        q = PoleForm(p.num, p.pole_order)
        check.compare(f"case #{t}", (q.num.coeffs, q.pole_order), (p.num.coeffs, p.pole_order))
    return check


# -- combinatorics -----------------------------------------------------------


def check_stirling(n_max: int = 30) -> Check:
    check = Check("Stirling: explicit sum = recurrence table")
    table = stirling2_table(n_max)
    for n in range(n_max + 1):
        for k in range(n + 1):
            if not check.compare(f"S({n},{k})", stirling2_sum(n, k), table(n, k)):
                return check
    return check


def check_bell_all_ones(n_max: int = 12) -> Check:
    check = Check("Bell: B_{n,k}(1,...,1) = S(n,k)")
    for n in range(n_max + 1):
        for k in range(n + 1):
            check.compare(f"n={n}, k={k}", bell_partial(n, k, [1] * (n - k + 1)), stirling2_sum(n, k))
    return check


def bell_addition_rhs(n: int, k: int, x, y):
    """sum_{r+s=k} sum_{l+m=n} C(n,l) B_{l,r}(x) B_{m,s}(y); terms with r > l or s > m vanish."""
    total = Fraction(0)
    for r in range(k + 1):
        s = k - r
        for l in range(n + 1):
            m = n - l
            if r > l or s > m:
                continue
            total += binomial(n, l) * bell_partial(l, r, x[:l - r + 1]) * bell_partial(m, s, y[:m - s + 1])
    return total


def check_bell_addition(rng: random.Random, cases: int = 40, n_max: int = 8) -> Check:
    check = Check("Bell: addition formula")
    for t in range(cases):
        n = rng.randint(0, n_max)
        k = rng.randint(0, n)
        x = [_random_rat(rng, 5) for _ in range(n + 1)]
        y = [_random_rat(rng, 5) for _ in range(n + 1)]
        w = n - k + 1
        lhs = bell_partial(n, k, [a + b for a, b in zip(x[:w], y[:w])])
        check.compare(f"n={n}, k={k}, case #{t}", lhs, bell_addition_rhs(n, k, x, y))
    return check


def check_bell_scaling(rng: random.Random, cases: int = 40, n_max: int = 10) -> Check:
    check = Check("Bell: scaling formula")
    for t in range(cases):
        n = rng.randint(0, n_max)
        k = rng.randint(0, n)
        a, b = _random_rat(rng, 5), _random_rat(rng, 5)
        x = [_random_rat(rng, 5) for _ in range(n - k + 1)]
        scaled = [a * b ** i * xi for i, xi in enumerate(x, start=1)]
        check.compare(f"n={n}, k={k}, case #{t}", bell_partial(n, k, scaled),
                      a ** k * b ** n * bell_partial(n, k, x))
    return check


def check_stirling_columns(k_max: int = 5, order: int = 12) -> Check:
    check = Check("Stirling: (e^x - 1)^k / k! column generating function")
    e = exp_series(Fraction(1), order)
    em1 = e - Series([Fraction(1)] + [Fraction(0)] * order)
    for k in range(k_max + 1):
        col = (em1 ** k).scale(Fraction(1, factorial(k)))
        for n in range(order + 1):
            check.compare(f"k={k}, x^{n}", col[n], Fraction(stirling2_sum(n, k), factorial(n)))
    return check


# -- classical ---------------------------------------------------------------


def check_classical_numbers(n_max: int) -> Check:
    check = Check("classical numbers: jks = qc = det = recurrence = series")
    rec = cl.bern_recurrence(n_max)
    ser = cl.bern_oracle_series(n_max)
    for n in range(1, n_max + 1):
        _all_equal(check, n, {
            "recurrence": rec[n],
            "jks": cl.bern_num_jks(n),
            "qc": cl.bern_num_qc(n),
            "det": cl.bern_num_det(n),
            "series": Fraction(ser[n].evaluate(0)),
        })
    return check


def check_classical_polynomials(n_max: int) -> Check:
    check = Check("classical polynomials: qc = det = series")
    ser = cl.bern_oracle_series(n_max)
    for n in range(1, n_max + 1):
        _all_equal(check, n, {
            "series": ser[n],
            "qc": cl.bern_poly_qc(n),
            "det": cl.bern_poly_det(n),
        })
    return check


# -- Apostol -----------------------------------------------------------------


def check_apostol_polynomials(n_max: int) -> Check:
    check = Check("Apostol polynomials: closed = det = luo = series = faa_di_bruno = quotient")
    ser = ap.apostol_oracle_series(n_max)
    z, u = ap.ab_symbols()
    for n in range(1, n_max + 1):
        values = {
            "series": ser[n],
            "closed": ap.apostol_poly_closed(n),
            "det": ap.apostol_poly_det(n - 1),
            "luo": ap.apostol_poly_luo(n),
            "faa_di_bruno": apostol_via_faa_di_bruno(n, z, u),
            "quotient": apostol_via_quotient(n, z, u),
        }
        _all_equal(check, n, values)
        p = values["closed"]
        check.compare(f"n={n}, u-degree <= n-1", p.degree <= n - 1, True)
        check.compare(f"n={n}, pole order <= n",
                      all(c.pole_order <= n for c in p.coeffs), True)
    return check


def check_apostol_numbers(n_max: int) -> Check:
    check = Check("Apostol numbers: closed = det = xuchen = series, and poly at u=0")
    ser = ap.apostol_num_series(n_max)
    for n in range(1, n_max + 1):
        closed = ap.apostol_num_closed(n)
        _all_equal(check, n, {
            "series": ser[n],
            "closed": closed,
            "det": ap.apostol_num_det(n - 1),
            "xuchen": ap.apostol_num_xuchen(n),
        })
        check.compare(f"n={n}, pole order <= n", closed.pole_order <= n, True)
    return check


def check_apostol_specialization(n_max: int) -> Check:
    check = Check("Apostol: polynomial formulas at u=0 = number formulas")
    for n in range(1, n_max + 1):
        check.compare(f"n={n}, closed", ap.specialize_u0(ap.apostol_poly_closed(n)), ap.apostol_num_closed(n))
        check.compare(f"n={n}, det", ap.specialize_u0(ap.apostol_poly_det(n - 1)), ap.apostol_num_det(n - 1))
    return check


def check_apostol_points(n_max: int, zs: Iterable = Z_GRID, us: Iterable = U_GRID) -> Check:
    check = Check("Apostol: symbolic values = at-point series oracle")
    symbolic = {f: [ap.apostol_polynomial(n, f).value for n in range(n_max + 1)]
                for f in ("closed", "det", "luo")}
    for z0 in zs:
        oracle = ap.apostol_oracle_series(n_max, z0)
        for u0 in us:
            for n in range(n_max + 1):
                expected = Fraction(oracle[n].evaluate(u0))
                for f, polys in symbolic.items():
                    check.compare(f"n={n}, z={z0}, u={u0}, {f} vs series",
                                  ap.evaluate_ab(polys[n], z0, u0), expected)
    return check


def check_pathways_at_points(n_max: int, zs: Iterable = Z_GRID[:3], us: Iterable = U_GRID) -> Check:
    check = Check("derivative pathways over Q: faa_di_bruno = quotient = series")
    for z0 in zs:
        oracle = ap.apostol_oracle_series(n_max, z0)
        for u0 in us:
            for n in range(n_max + 1):
                _all_equal(check, n, {
                    "series": Fraction(oracle[n].evaluate(u0)),
                    "faa_di_bruno": Fraction(apostol_via_faa_di_bruno(n, z0, u0)),
                    "quotient": Fraction(apostol_via_quotient(n, z0, u0)),
                })
    return check


def run_all(poly_n_max: int = DEFAULT_POLY_N_MAX, num_n_max: int = DEFAULT_NUM_N_MAX,
            seed: int = 0) -> Report:
    if poly_n_max < 1 or num_n_max < 1:
        raise ValueError("n_max must be at least 1")
    rng = random.Random(seed)
    report = Report()
    for make in (
        lambda: check_determinants(rng),
        lambda: check_series_roundtrip(rng),
        lambda: check_poleform_normalization(rng),
        lambda: check_stirling(max(30, num_n_max)),
        lambda: check_bell_all_ones(),
        lambda: check_bell_addition(rng),
        lambda: check_bell_scaling(rng),
        lambda: check_stirling_columns(),
        lambda: check_classical_numbers(num_n_max),
        lambda: check_classical_polynomials(poly_n_max),
        lambda: check_pathways_at_points(poly_n_max),
        lambda: check_apostol_polynomials(poly_n_max),
        lambda: check_apostol_numbers(num_n_max),
        lambda: check_apostol_specialization(poly_n_max),
        lambda: check_apostol_points(poly_n_max),
    ):
        report.checks.append(make())
    return report
