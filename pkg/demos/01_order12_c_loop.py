"""
A non-associative C-loop of order 12
====================================

Load the order-12 loop, run the predicate battery and look at where it
fails to be a group.
"""

from centra import catalog, properties

c12 = catalog.c_loop_12()
print(c12)

# The central identities all hold ...
for name in ("LC", "RC", "C"):
    print(name, properties.PREDICATES[name](c12).holds)

# ... but associativity and commutativity do not.  Witnesses are the
# lexicographically smallest failing tuples.
print("associative:", properties.is_associative(c12))
print("commutative:", properties.is_commutative(c12))
x, y = properties.is_commutative(c12).witness
print(f"{x}*{y} = {c12(x, y)}, {y}*{x} = {c12(y, x)}")

# Squares land in the center {0, 1, 2}, so the loop is central square.
print("center:", properties.center(c12))
print("squares:", properties.squares(c12))

report = properties.analyze(c12)
print(report.render_text())
