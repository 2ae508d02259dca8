#!/usr/bin/env python3
"""Tour of the tree-series algebra: generators, identities, identification.

Everything printed here is exact rational arithmetic.
"""

from fractions import Fraction

from covercount import (
    TruncatedSeries,
    dkz_poly,
    identify_in_a,
    leading_asymptotic,
    seq_a,
    series_exp,
    series_y,
    series_z,
    zpower_in_basis,
)

N = 20

print("The two generators, as exponential generating functions:")
y = series_y(N)
z = series_z(N)
print("  Y counts rooted labeled trees:   ", [int(y.egf_coefficient(n)) for n in range(1, 7)])
print("  Z counts vertex-marked ones:     ", [int(z.egf_coefficient(n)) for n in range(1, 7)])

print()
print("Defining identities, checked to order", N)
one = TruncatedSeries.one(N)
q = TruncatedSeries.monomial(1, N)
print("  (1 - Y)(1 + Z) == 1:", (one - y) * (one + z) == one)
print("  Y == q * exp(Y):    ", q * series_exp(y) == y)
print("  Z == D(Y):          ", y.euler_d() == z)

print()
print("The total-height numbers A_n (= n! [q^n] Z^2):", seq_a(6))

print()
print("D(Z) as a polynomial in Z:", dkz_poly(1))
print("Z^3 over the spanning list [Z, Z^2, DZ]:", zpower_in_basis(3))

print()
print("A series is pinned down by finitely many coefficients.")
print("The doubly-rooted tree series n^{n-2}/n! identifies as:")
import math

cayley = TruncatedSeries(
    [0] + [Fraction(n) ** (n - 2) / math.factorial(n) for n in range(1, N + 1)]
)
ident = identify_in_a(cayley, -3, 3)
print("  ", ident.element, f"(verified on {ident.verified_orders} surplus orders)")

print()
print("And identification hands out coefficient asymptotics for free:")
term = leading_asymptotic(identify_in_a(z, -2, 2).element)
print(f"  [q^n] Z ~ {term.constant} * e^n * n^({term.gamma2}/2 - 1)")
