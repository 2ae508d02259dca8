#!/usr/bin/env python3
"""From covering counts to 2D gravity: brackets, Painleve I, and b_g.

psi-class brackets are finite exact combinations of covering counts; their
generating elements are single powers of (Z+1); and the asymptotic
constants solve a formal Painleve I equation whose coefficients we extract
order by order, still in exact rationals.
"""

from covercount import (
    TauSpec,
    b_constant,
    free_energy_coefficient,
    h_tau_series,
    hg_empty_leading,
    painleve_solve,
    string_dilaton_check,
    tau_bracket,
)

print("Brackets straight from covering counts:")
for g, ds in [(0, (0, 0, 0)), (1, (1,)), (1, (0, 2)), (1, (0, 0, 2, 2))]:
    print(f"  <tau {ds}>_{g} = {tau_bracket(TauSpec(g, ds))}")

print()
print("String and dilaton reductions hold exactly at genus 1:")
report = string_dilaton_check(1, (1, 2))
print(f"  string on (1,2):  <tau_0 tau_1 tau_2> = {report.string_lhs} "
      f"= <tau_0 tau_2> + <tau_1 tau_1> = {report.string_rhs}")
report = string_dilaton_check(1, (0, 2))
print(f"  dilaton on (0,2): <tau_1 tau_0 tau_2> = {report.dilaton_lhs} "
      f"= 2 <tau_0 tau_2> = {report.dilaton_rhs}")

print()
print("The bracket series collapses to a single power of (Z+1):")
result = h_tau_series(TauSpec(1, (1,)))
print(f"  H[tau_1]_1 identifies as {result.element} "
      f"({result.identification.verified_orders} surplus orders)")

print()
print("Painleve I, solved order by order (exact):")
sol = painleve_solve(6)
for g in range(2, 7):
    print(f"  e_{g} = {sol.e[g]}")

print()
print("The gravity constants, radicals and all:")
for g in range(0, 5):
    print(f"  b_{g} = {b_constant(g, sol if g >= 2 else None).b}")

print()
print("Free-energy coefficients carry sqrt(2) exactly at even genus:")
for g in range(2, 6):
    print(f"  g={g}: {free_energy_coefficient(g, sol)}")

print()
print("Two independent routes to the same number at genus 2:")
print(f"  normal-form fit:     {hg_empty_leading(2)}")
print(f"  Painleve recursion:  {sol.e[2]}")
