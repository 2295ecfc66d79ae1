"""
Invariant rings and Dickson invariants
======================================

Invariants are computed as kernels of rho(g) - 1 and then compared against
named generators and relations.
"""

from braidcoh.polyinv import (
    PRESENTATIONS,
    dickson_generators,
    invariant_basis,
    verify_dickson_mod_p,
    verify_ring_presentation,
)

for name, pres in PRESENTATIONS.items():
    rep = verify_ring_presentation(name, 60)
    rel = pres.relation[0] if pres.relation else "(free)"
    print(f"{name:8s} {rel:36s} ok={rep.ok}")

P, Q = dickson_generators(2)
print("P_2 =", P, "  Q_2 =", Q)
print("SL2(Z)-invariants of M_4 mod 2:", [str(f) for f in invariant_basis("sl2z", 4, 2)])
print("Dickson algebra mod 5 up to n=120:", all(c.ok for c in verify_dickson_mod_p(5, 120)))
