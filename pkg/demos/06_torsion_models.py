"""
Torsion predicted by divided powers
===================================

The p-torsion of H^1 in degree n has one cyclic summand per monomial
P_p^k Q_p^h of degree n, of order p^(v_p(gcd(k, h)) + 1).
"""

from braidcoh.amalgam import sl2z_cohomology
from braidcoh.braid import b3_cohomology
from braidcoh.dividedpower import h1_torsion_model, h2_b3_model, shimura_comparison

for n in (12, 24, 40, 48):
    print(f"n={n}: model {h1_torsion_model(n)}   computed {sl2z_cohomology(1, n)}")

# H^2(B3): 2-torsion against the model.  Degrees n = 2 mod 4 disagree,
# where H^2(B3) carries the elementary 2-torsion of H^2(SL2(Z)).
for n in (8, 10, 14, 16):
    print(f"n={n}: model {h2_b3_model(2, n)}   computed {b3_cohomology(2, n).p_part(2)}"
          f"   SL2 H^2 {sl2z_cohomology(2, n).p_part(2)}")

rows = shimura_comparison(5, 100)
print("5-torsion vs Anick spaces, tensor part:", all(r.tensor_match for r in rows))
