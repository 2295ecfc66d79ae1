"""
Integral cohomology from Smith normal form
==========================================

Everything in braidcoh bottoms out in exact integer linear algebra.
"""

from braidcoh.exactalg import IntMatrix, cohomology_of_segment, smith_normal_form

a = IntMatrix([[2, 4], [6, 8]])
d, u, v = smith_normal_form(a)
print("Smith form of", a.rows, "is", d.diagonal())
assert u @ a @ v == d

# Z^2 --(T-1)--> Z^2 --(T+1)--> Z^2 with T = -I: the Z/2 cohomology of a sign rep
minus = IntMatrix.identity(2).scale(-1)
eye = IntMatrix.identity(2)
print("H =", cohomology_of_segment(minus - eye, minus + eye))
