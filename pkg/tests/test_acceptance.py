"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s`.  Everything is exact
arithmetic except criterion 12, which evaluates asymptotic predictions in
floating point at n = 2000.

Criterion 12 is known to fail for the cube of Z: the exact/predicted ratio
at n = 2000 is 0.9447, outside the required [0.95, 1.05] band, because the
subleading term of that element contributes ~ sqrt(2 pi / n) (about 5.6% at
n = 2000; the band is first met near n = 2600).  The test states the
criterion faithfully and reports the computed ratios.
"""

import math
from fractions import Fraction as F
from itertools import combinations_with_replacement

from covercount.algebra import (
    LaurentPolyX,
    Radical,
    ScaledRational,
    a_closed,
    dkz2_poly,
    dkz_poly,
    double_factorial,
    identify_in_a,
    leading_asymptotic,
    seq_a,
    series_y,
    series_z,
    ypower_closed,
    zbasis_element,
    zpower_in_basis,
)
from covercount.exact import TruncatedSeries, series_exp
from covercount.gravity import (
    TauSpec,
    b_constant,
    free_energy_coefficient,
    h_tau_series,
    hg_empty_leading,
    painleve_solve,
    string_dilaton_check,
    tau_bracket,
    tau_series_asymptotic,
)
from covercount.hurwitz_series import (
    fit_phi,
    h0_closed,
    h1_empty_series,
    oracle_data,
)
from covercount.monodromy import CoveringSpec, hurwitz_connected
from covercount.symmetric import Partition, partitions_of
from covercount.trees import dendrology_m, dendrology_p


def report(num: int, ok: bool, detail: str):
    print(f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_algebra_identities():
    order = 30
    y, z = series_y(order), series_z(order)
    one = TruncatedSeries.one(order)
    q = TruncatedSeries.monomial(1, order)
    ok = (
        (one - y) * (one + z) == one
        and q * series_exp(y) == y
        and y.euler_d() == z
    )
    report(1, ok, "(1-Y)(1+Z)=1, Y=q*exp(Y), Z=DY exactly to order 30")


def test_criterion_02_closed_forms():
    ok = all(ypower_closed(k, 30) == series_y(30) ** k for k in range(1, 11))
    for k in range(9):
        ok = ok and dkz_poly(k).coeffs[-1] == double_factorial(2 * k - 1)
        ok = ok and dkz2_poly(k).coeffs[-1] == double_factorial(2 * k)
    for k in range(1, 9):
        combo = zpower_in_basis(k)  # verifies by re-expansion internally
        s = TruncatedSeries.zero(16)
        for c, i in zip(combo, range(k)):
            s = s + zbasis_element(i).to_series(16) * c
        ok = ok and s == series_z(16) ** k
    report(2, ok, "Y^k (k<=10), D^kZ leading (2k-1)!!, D^k(Z^2) leading (2k)!!, Z^k spans (k<=8)")


def test_criterion_03_a_sequence_triple_agreement():
    values = seq_a(25)  # convolution, cross-checked against closed form inside
    z2 = series_z(25) ** 2
    ok = values[:5] == [0, 2, 24, 312, 4720]
    for n in range(1, 26):
        ok = ok and values[n - 1] == a_closed(n) == z2.egf_coefficient(n)
    report(3, ok, "A_n convolution = closed form = n![q^n]Z^2 for n<=25; first five match")


def test_criterion_04_dendrology():
    ok = dendrology_p(2, 1) == 2 and dendrology_m(2, 1) == 2
    for n in range(2, 8):
        ok = ok and dendrology_m(n, 1) == a_closed(n)
        for k in range(1, 4):
            ok = ok and dendrology_p(n, k) == (series_z(n) ** (k + 1)).egf_coefficient(n)
    report(4, ok, "p_{n,k} = n![q^n]Z^{k+1} for n<=7, k<=3 by full enumeration; m_{n,1} = A_n")


def test_criterion_05_oracle_vs_genus0_formula():
    checked = 0
    ok = hurwitz_connected(CoveringSpec(0, 3, [])) == 4
    mus = [Partition(())] + [p for m in range(1, 5) for p in partitions_of(m)]
    for n in range(1, 7):
        for mu in mus:
            if mu.m > n or n < mu.num_parts + mu.degeneracy:
                continue
            if 2 * n - 2 - mu.degeneracy < 0:
                continue
            ok = ok and hurwitz_connected(CoveringSpec(0, n, [mu])) == h0_closed(n, mu)
            checked += 1
    report(5, ok, f"oracle = closed genus-0 formula on {checked} specs (n<=6, |mu|<=4)")


def test_criterion_06_genus1_exception():
    ok = True
    for n in range(1, 5):
        expected = F(math.factorial(2 * n), 24 * n * math.factorial(n)) * a_closed(n)
        ok = ok and hurwitz_connected(CoveringSpec(1, n, [])) == expected
    ok = ok and hurwitz_connected(CoveringSpec(1, 2, [])) == F(1, 2)
    empty = identify_in_a(h1_empty_series(20), -4, 4)
    marked = identify_in_a(h1_empty_series(20).euler_d(), -4, 4)
    ok = ok and empty.status == "inconsistent" and marked.ok
    ok = ok and marked.element == LaurentPolyX({-2: F(1, 24), -1: F(-1, 12), 0: F(1, 24)})
    report(6, ok, "h_{1,n;empty} matches (2n)! A_n/(24 n n!) for n<=4; series exits the algebra, marked variant stays")


def test_criterion_07_normal_form_inversion():
    cases = {
        (0, (1,)): [F(1), F(1, 2)],
        (0, (2,)): [F(1, 4), F(1, 12)],
        (0, (1, 1, 1)): [F(1)],
        (1, (1,)): [F(0), F(1, 24)],
        (1, (2,)): [F(1, 24), F(1, 24)],
    }
    ok = True
    for (g, mu), expected in cases.items():
        part = Partition(mu)
        n0 = max(1, part.m)
        data = oracle_data(g, part, range(n0, n0 + len(expected) + 4))
        fit = fit_phi(g, part, data)
        ok = ok and fit.surplus_verified >= 2
        ok = ok and list(fit.phi.poly.coeffs) == expected
    # the genus-one 1/24 anchor: sole coefficient for mu=(1), constant term
    # for mu=(2)
    fit1 = fit_phi(1, Partition([1]), oracle_data(1, Partition([1]), range(1, 7)))
    fit2 = fit_phi(1, Partition([2]), oracle_data(1, Partition([2]), range(2, 8)))
    ok = ok and fit1.phi.coefficient(1) == F(1, 24) and fit1.phi.constant_term == 0
    ok = ok and fit2.phi.constant_term == F(1, 24)
    report(7, ok, "phi fits succeed with >=2 surplus for the five pairs; genus-1 fits carry the 1/24")


def _string_dilaton_bases():
    out = []
    for g in (0, 1):
        for p in (1, 2, 3):
            if 2 * g - 2 + p <= 0:
                continue  # reductions act on stable bases only
            for ds in combinations_with_replacement(range(5), p):
                if sum(ds) == 3 * g - 2 + p or sum(ds) == 3 * g - 3 + p:
                    out.append((g, ds))
    return out


def test_criterion_08_bracket_values_and_reductions():
    ok = tau_bracket(TauSpec(0, (0, 0, 0))) == 1
    ok = ok and tau_bracket(TauSpec(1, (1,))) == F(1, 24)
    ok = ok and tau_bracket(TauSpec(1, (0, 0, 2, 2))) == 2 * F(1, 12)
    ok = ok and tau_bracket(TauSpec(0, (0, 0, 0, 0, 0, 2, 2))) == 2 * 3
    count = 0
    for g, ds in _string_dilaton_bases():
        report_obj = string_dilaton_check(g, ds)  # raises on mismatch
        ok = ok and report_obj.ok
        count += 1
    report(8, ok, f"reference bracket values exact; string+dilaton hold on {count} bases (p<=4, g<=1)")


def test_criterion_09_bracket_series_theorem():
    specs = [
        TauSpec(0, (0, 0, 0)),
        TauSpec(1, (1,)),
        TauSpec(1, (0, 0, 2, 2)),
        TauSpec(0, (0, 0, 0, 0, 0, 2, 2)),
    ]
    ok = True
    for spec in specs:
        result = h_tau_series(spec, surplus=5)
        ok = ok and result.identification.verified_orders >= 5
        ok = ok and result.element == LaurentPolyX({-spec.chi: result.bracket})
    report(9, ok, "H[tau...] = bracket*(Z+1)^{2g-2+p} with >=5 surplus orders, all four specs")


def test_criterion_10_painleve_and_constants():
    sol = painleve_solve(10)
    ok = sol.e[2] == F(7, 1440)
    for t in range(-2, sol.residual_max_order(10) + 1):
        ok = ok and sol.u.residual_coefficient(t) == 0
    ok = ok and b_constant(2, sol).b == ScaledRational(
        F(7, 2**5 * 3**3 * 5), Radical.INV_SQRT_2PI
    )
    ok = ok and b_constant(3, sol).b == ScaledRational(F(5 * 7**2, 2**16 * 3**5), Radical.ONE)
    ok = ok and b_constant(4, sol).b == ScaledRational(
        F(7 * 5297, 2**11 * 3**8 * 5**2 * 11 * 13), Radical.INV_SQRT_2PI
    )
    for g in range(2, 11):
        want = Radical.SQRT2 if g % 2 == 0 else Radical.ONE
        ok = ok and free_energy_coefficient(g, sol).radical is want
    report(10, ok, "residual = 0 through g=10; e_2 = 7/1440; b_2, b_3, b_4 and sqrt(2) parity exact")


def test_criterion_11_two_path_consistency_genus2():
    leading = hg_empty_leading(2)
    e2 = painleve_solve(2).e[2]
    ok = leading == e2 == F(7, 1440)
    report(11, ok, "normal-form fit and Painleve recursion both give 7/1440 at genus 2")


def test_criterion_12_numeric_asymptotics():
    n = 2000
    z = LaurentPolyX({-1: 1, 0: -1})
    y = LaurentPolyX({0: 1, 1: -1})
    h_tau0_cubed = h_tau_series(TauSpec(0, (0, 0, 0))).element
    elements = {
        "Z": z,
        "Z^2": z * z,
        "Z^3": z * z * z,
        "Y": y,
        "H[tau0^3]": h_tau0_cubed,
    }
    ratios = {}
    for name, p in elements.items():
        exact = p.coefficient(n)
        term = leading_asymptotic(p)
        log_ratio = (
            math.log(exact.numerator)
            - math.log(exact.denominator)
            - term.log_predicted(n)
        )
        ratios[name] = math.exp(log_ratio)
    # the series statement for H[tau0^3] must also match the direct formula
    spec = TauSpec(0, (0, 0, 0))
    assert tau_series_asymptotic(spec, F(1)) == leading_asymptotic(h_tau0_cubed)
    failures = {k: v for k, v in ratios.items() if not 0.95 <= v <= 1.05}
    detail = "exact/predicted at n=2000: " + ", ".join(
        f"{k}={v:.4f}" for k, v in ratios.items()
    )
    report(12, not failures, detail + (f"; outside [0.95,1.05]: {sorted(failures)}" if failures else ""))
