"""Cohomology of the cyclic subgroups Z/2, Z/4, Z/6 of SL2(Z) with coefficients in M_d.

Uses the 2-periodic resolution: cochains are M_d in every degree and the
differential C^j -> C^{j+1} is ``T - 1`` for even j and the norm
``N = 1 + T + ... + T^(m-1)`` for odd j.  Generators are w2, w4, w6.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactalg import (
    AbelianGroup,
    IntMatrix,
    cohomology_of_segment,
    cohomology_of_segment_mod_p,
)
from .symmod import NAMED, action_matrix_poly, poly_degree

ORDERS = (2, 4, 6)
_GENERATOR = {2: "w2", 4: "w4", 6: "w6"}


def norm_matrix(t: IntMatrix, k: int) -> IntMatrix:
    """1 + T + ... + T^(k-1)."""
    total = IntMatrix.identity(t.nrows)
    power = IntMatrix.identity(t.nrows)
    for _ in range(k - 1):
        power = power @ t
        total = total + power
    return total


@dataclass(frozen=True)
class PeriodicComplex:
    m: int
    generator_matrix: IntMatrix

    @classmethod
    def build(cls, m: int, n: int) -> PeriodicComplex:
        if m not in ORDERS:
            raise ValueError(f"only Z/2, Z/4, Z/6 are supported, got Z/{m}")
        return cls(m, action_matrix_poly(NAMED[_GENERATOR[m]], poly_degree(n)))

    @property
    def rank(self) -> int:
        return self.generator_matrix.nrows

    def differential(self, j: int) -> IntMatrix:
        """C^j -> C^{j+1}; for j < 0 the zero map from the zero group."""
        r = self.rank
        if j < 0:
            return IntMatrix.zeros(r if j == -1 else 0, 0)
        if j % 2 == 0:
            return self.generator_matrix - IntMatrix.identity(r)
        return norm_matrix(self.generator_matrix, self.m)


@lru_cache(maxsize=None)
def _cyclic_cohomology(m: int, i: int, n: int, coeff: int):
    cx = PeriodicComplex.build(m, n)
    d_in, d_out = cx.differential(i - 1), cx.differential(i)
    if coeff == 0:
        return cohomology_of_segment(d_in, d_out)
    return cohomology_of_segment_mod_p(d_in, d_out, coeff)


def cyclic_cohomology(m: int, i: int, n: int, coeff: int = 0):
    """H^i(Z/m; M_n (x) coeff).

    ``coeff = 0`` gives the integral group as an :class:`AbelianGroup`;
    a prime ``coeff = p`` gives the F_p-dimension of cohomology with F_p
    coefficients.
    """
    if i < 0:
        raise ValueError("cohomological degree must be >= 0")
    return _cyclic_cohomology(m, i, n, coeff)


def restriction_chain_map(m: int, i: int, n: int) -> IntMatrix:
    """Cochain map C^i(Z/m; M) -> C^i(Z/2; M) inducing restriction to <w2>.

    Identity in even degrees and ``1 + T + ... + T^(e-1)`` (e = m/2) in odd
    degrees; for m = 4 this is ``T4 + 1`` and for m = 6 ``T6^2 + T6 + 1``.
    """
    if m not in (4, 6):
        raise ValueError("restriction is from Z/4 or Z/6")
    cx = PeriodicComplex.build(m, n)
    if i % 2 == 0:
        return IntMatrix.identity(cx.rank)
    return norm_matrix(cx.generator_matrix, m // 2)


# --- closed-form tables -----------------------------------------------------

Z4_TABLE = {
    # label: (H^0, H^odd, H^even>0) as cyclic orders (0 = Z, 1 = trivial)
    "I1": (0, 1, 2),
    "I2": (0, 1, 4),
    "I3": (1, 2, 1),
    "I4": (0, 1, 2),
    "I5": (1, 2, 1),
}


def orbit_decomposition_z4(n: int) -> list[tuple[str, tuple[int, ...]]]:
    """Split the monomial basis of M_d into the Z/4-stable blocks I1..I5.

    Each entry is ``(label, exponents_of_y)``; the monomial with y-exponent k
    is ``x^(d-k) y^k``.
    """
    d = poly_degree(n)
    blocks = []
    for k in range(d + 1):
        a, b = d - k, k
        if a < b:
            continue
        if a % 2 == 0 and b % 2 == 0:
            label = "I2" if a == b else "I1"
        elif a % 2 == 1 and b % 2 == 1:
            label = "I3" if a == b else "I4"
        else:
            label = "I5"
        blocks.append((label, (k,) if a == b else (k, d - k)))
    return blocks


def z4_table_prediction(i: int, n: int) -> AbelianGroup:
    """H^i(Z/4; M_n) assembled block by block from the closed-form table."""
    col = 0 if i == 0 else (1 if i % 2 else 2)
    orders = [Z4_TABLE[label][col] for label, _ in orbit_decomposition_z4(n)]
    return AbelianGroup.from_orders(0, orders)


def z2_prediction(i: int, n: int) -> AbelianGroup:
    """H^i(Z/2; M_n): w2 acts as (-1)^d."""
    d = poly_degree(n)
    rank = d + 1
    if d % 2 == 0:
        if i == 0:
            return AbelianGroup(rank)
        return AbelianGroup.from_orders(0, [2] * rank if i % 2 == 0 else [])
    return AbelianGroup.from_orders(0, [2] * rank if i % 2 else [])
