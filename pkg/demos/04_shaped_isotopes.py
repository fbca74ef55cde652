"""
Isotopes of shape (A, B, B) and (A, B, A)
=========================================

Sample loop isotopes of the order-12 C-loop and check which central
identities survive.
"""

from collections import Counter

from centra import catalog, isotopy, properties

c12 = catalog.c_loop_12()

# Uniform (A, B) pairs almost never give a loop at this order ...
uniform = isotopy.sample_shaped_isotopisms(c12, "ABB", 2000, seed=0, method="uniform")
print("uniform keepers:", len(uniform))

# ... so the default sampler draws directly from the loop-producing pairs.
keepers = isotopy.sample_shaped_isotopisms(c12, "ABB", 2000, seed=0)
stats = Counter(
    (properties.is_lc(h).holds, properties.is_rc(h).holds) for _, h in keepers
)
print("(LC, RC) over ABB keepers:", dict(stats))

rep = isotopy.verify_iso_invariance_lcrc(c12, "ABA", 2000, seed=0)
print(rep.dumps())

for r in isotopy.verify_corollary_fixtures("ABB", 300, seed=0):
    print(r.label, r.keepers, "filtered", r.hypothesis_filtered, "findings", len(r.counterexamples))
