"""
Orthogonality of J and J*
=========================

Pair every J with every J* under the colored scalar product.
"""

from genjack import Symbolic, euler_norm, jack, multipartitions, scalar_product
from genjack.oracle import frozen_sign

dom = Symbolic(2)
index = multipartitions(2, 2)
sigma = frozen_sign()

for lam in index:
    row = []
    for mu in index:
        g = scalar_product(jack(lam, "J", dom), jack(mu, "Jstar", dom), dom)
        if lam == mu:
            row.append("E" if g == sigma ** 2 * euler_norm(lam, lam, dom) else "?")
        else:
            row.append("0" if not g else "?")
    print(" ".join(row))
