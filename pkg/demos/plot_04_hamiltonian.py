"""
Eigenfunctions of the colored Hamiltonian
=========================================

J solves the eigenvalue problem with cubic terms weighted 1/2.  J* solves
the problem with the interaction mirrored between colors.
"""

from fractions import Fraction

from genjack import Symbolic, eigen_check, multipartitions

dom = Symbolic(2)
for mp in multipartitions(2, 2):
    j = eigen_check(mp, "J", dom)
    js = eigen_check(mp, "Jstar", dom, mirrored=True)
    print(mp, "J:", j.status, " J* (mirrored):", js.status)

# The unit weight is not enough once a partition has two rows.
bad = eigen_check(((1, 1), ()), "J", dom, cubic=Fraction(1))
print("unit cubic weight on [[1,1],[]]:", bad.status)
