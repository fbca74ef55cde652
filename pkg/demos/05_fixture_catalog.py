"""
Central-square fixtures
=======================

D4, Q8, the 16-element Cayley loop and elementary abelian 2-groups are all
central square.  The Cayley loop is Moufang but not associative.
"""

from centra import catalog, properties

for name, t in catalog.corollary_fixtures().items():
    print(
        f"{name:10s} n={t.order:2d}",
        "central square" if properties.is_central_square(t) else "-",
        "associative" if properties.is_associative(t) else "non-associative",
        "C-loop" if properties.is_c(t) else "",
    )

o16 = catalog.cayley_loop()
print("Moufang:", properties.is_moufang(o16).holds)
print("associativity witness:", properties.is_associative(o16).witness)
