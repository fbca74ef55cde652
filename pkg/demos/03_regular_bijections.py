"""
Regular bijections and autotopisms
==================================

lambda-, rho- and mu-regular bijections are found by scanning n candidate
translations rather than n! permutations.  Here we compare with the
brute-force filter on a small loop and look at the order-12 C-loop.
"""

from centra import catalog, regular
from centra.core import CayleyTable, left_translation, right_translation

c12 = catalog.c_loop_12()
lam = regular.lambda_regular_set(c12)
print("Lambda:", [str(p) for p in lam])

# Every L_x^2 is lambda-regular and every (R_x^2, L_x^2) is a mu-pair.
print(all(left_translation(c12, x) ** 2 in lam for x in range(12)))
print(regular.check_theorem_c_mu(c12))

# Brute force over S_5 agrees with the fast path.
loop5 = next(iter(catalog.all_loops(5)))
print(regular.lambda_regular_set(loop5) == regular.lambda_regular_brute(loop5))
print(regular.mu_regular_set(loop5))

# The full autotopism group (order cap raised for n = 12).
aut = regular.enumerate_autotopisms(c12, max_order=12)
print("|Aut| =", len(aut), "generated by", len(aut.generators), "triples")
