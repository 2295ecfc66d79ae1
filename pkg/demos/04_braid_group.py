"""
B3 via Fox calculus
===================

B3 = <s1, s2 | s1 s2 s1 = s2 s1 s2> is a one-relator group, so the Fox
derivatives of the relator give a length-two free resolution.
"""

from braidcoh.braid import b3_cohomology, crosscheck_with_sl2z, fundamental_identity

print("fundamental identity holds up to degree 10:",
      all(fundamental_identity(d).is_zero() for d in range(11)))

for n in (0, 4, 8, 12, 20):
    print(f"n={n:3d}  H^1 = {b3_cohomology(1, n)}   H^2 = {b3_cohomology(2, n)}")

# H^1 torsion agrees with SL2(Z); Z/8 at n=8 and Z/9 at n=12 do not occur in H^1
print("crosscheck with SL2(Z) up to 40:", all(crosscheck_with_sl2z(n).ok for n in range(0, 41, 2)))
