"""
Rebuilding a loop from three right translations
================================================

Closing {R_10, R_3, R_7} under a b^2, a^2 b and powers yields all twelve
right translations, and from those the full multiplication table.
"""

from centra import catalog, representation
from centra.core import format_cycles, parse_cycles

gens = [parse_cycles(s, 12) for s in catalog.C12_GENERATORS]
for g in gens:
    print(format_cycles(g), "order", g.element_order())

closure = representation.close_generators(gens, 12, law="c")
print(len(closure), "members, sharply transitive:", closure.is_sharply_transitive())

table = representation.generate_from_generators(gens, 12, law="c")
print(table.tolist() == catalog.c_loop_12().tolist())

# With only a b^2 (the LC/RC law) and powers, the same three generators
# still close up.
print(len(representation.close_generators(gens, 12, law="lcrc")))
