"""
Working at a rational point
===========================

Symbolic coefficients grow fast.  Fixing (t1, t2, u) to random rationals
keeps everything exact and makes larger blocks cheap.
"""

from genjack import Specialized, Symbolic, transition

point = Specialized.random(2, seed=4)
print("point:", point.point)

# the same block, once symbolically and once at the point
sym = transition("T", 2, 3, Symbolic(2))
num = transition("T", 2, 3, point)

# Evaluating the symbolic entries reproduces the numeric ones.
agree = all(sym.entries[k].evaluate(point.point) == num.entries[k] for k in sym.entries)
print("symbolic block evaluated at the point matches:", agree)

# The block is triangular in dominance order, so most entries vanish.
zeros = sum(1 for v in num.entries.values() if not v)
print(f"{zeros} of {len(num.entries)} entries are zero")
