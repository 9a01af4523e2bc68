"""
First generalized Jack polynomials
==================================

Compute a few polynomials for r = 2 and read off their Schur coefficients.
"""

from genjack import jack_schur, parse_mp

# A multipartition is written one bracketed partition per color.
mp = parse_mp("[1],[1]")

# The Schur expansion is exact: coefficients live in Q(t1, t2, u1, u2).
expansion = jack_schur(mp)
for mu, c in expansion.items():
    print(mu, "->", c.factored())

# The dual family J* expands over the dual Schur basis s*.
dual = jack_schur(mp, "Jstar")
print("basis:", dual.basis)
for mu, c in dual.items():
    print(mu, "->", c.factored())
