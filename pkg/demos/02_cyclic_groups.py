"""
Cohomology of the finite cyclic subgroups
=========================================

Z/4 and Z/6 generate SL2(Z).  Their cohomology with coefficients in the
homogeneous polynomials of degree d is 2-periodic, and for Z/4 it can be
read off block by block from the monomial orbits.
"""

from braidcoh.cyclic import cyclic_cohomology, orbit_decomposition_z4, z4_table_prediction

n = 8  # weighted degree; polynomial degree 4
print("Z/4 orbit blocks at n = 8:", orbit_decomposition_z4(n))
for i in range(5):
    print(f"H^{i}(Z/4; M_8) = {cyclic_cohomology(4, i, n)}"
          f"   (table: {z4_table_prediction(i, n)})")

# mod-3 dimensions only see the Z/3 inside Z/6
print([cyclic_cohomology(6, 2, n, 3) for n in range(0, 40, 2)])
