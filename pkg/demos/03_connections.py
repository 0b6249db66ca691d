"""Connection classes of roots and weights, with replayable witness chains.

Run:  python demos/03_connections.py
"""

from lierinehart import (
    Functional,
    fixture,
    root_classes,
    root_reachable_set,
    roots_connected,
    weight_classes,
    weights_connected,
)
from lierinehart.reporting import classes_text

F = Functional.of

# In F_TRUNC4 the roots are {1, 2} and the weights {1, 2, 3}.  Root 1
# reaches root 2 through the chain 1 + 1 = 2; the negative roots are
# reachable too because weight steps like -3 may be used while partial
# sums stay among the signed roots.
t4 = fixture("F_TRUNC4")
reach = root_reachable_set(t4, F([1]))
for target, chain in sorted(reach.items()):
    print(f"reach {target}: chain {[str(z) for z in chain]}")

ok, chain = roots_connected(t4, F([1]), F([2]))
print("1 ~ 2:", ok, "via", [str(z) for z in chain])

# Two commuting sl(2) blocks have two separate classes: no chain can hop
# between blocks because mixed sums are never roots.
ss = fixture("F_SL2SL2")
print()
print(classes_text(root_classes(ss), weight_classes(ss)))

# Weight connections may pass through roots: in F_GL2N the step (-1,1) in
# the root system links the weights (1,0) and (0,1).
g = fixture("F_GL2N")
ok, chain = weights_connected(g, F([1, 0]), F([0, 1]))
print("GL2N weights (1,0) ~ (0,1):", ok, "via", [str(z) for z in chain])
