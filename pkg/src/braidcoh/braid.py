"""H^i(B3; M_d) from the Fox-calculus resolution of the one-relator presentation.

B3 = <s1, s2 | r>, r = s1 s2 s1 s2^-1 s1^-1 s2^-1, is torsion free with a
relator that is not a proper power, so

    0 -> ZB3 -> ZB3^2 -> ZB3 -> Z -> 0

is a free resolution.  Applying Hom(-, M_d) gives the cochain complex

    M_d --d0--> M_d^2 --d1--> M_d,
    d0 = [rho(s1) - 1; rho(s2) - 1],   d1 = [rho(dr/ds1), rho(dr/ds2)].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactalg import (
    AbelianGroup,
    IntMatrix,
    PrimeField,
    cohomology_of_segment,
    cohomology_of_segment_mod_p,
    invariant_factors,
    local_elementary_divisors,
    rank,
)
from .symmod import action_matrix_poly, group_ring_matrix, poly_degree

RELATOR = ("s1", "s2", "s1", "S2", "S1", "S2")
COH_DIMENSION = 2

Combination = list[tuple[int, tuple[str, ...]]]


def fox_derivative(word: tuple[str, ...], generator: str) -> Combination:
    """Free derivative d(word)/d(generator) as a list of (coefficient, prefix word).

    Uses d(uv) = du + u dv, ds/ds = 1 and d(s^-1)/ds = -s^-1.
    """
    out: Combination = []
    for k, letter in enumerate(word):
        prefix = tuple(word[:k])
        if letter == generator:
            out.append((1, prefix))
        elif letter == generator.swapcase() and letter.isupper():
            out.append((-1, prefix + (letter,)))
    return out


def fox_derivatives() -> tuple[Combination, Combination]:
    return fox_derivative(RELATOR, "s1"), fox_derivative(RELATOR, "s2")


def fundamental_identity(d: int) -> IntMatrix:
    """rho(sum_x dr/dx (x - 1)) - rho(r - 1); the zero matrix when everything is consistent."""
    eye = IntMatrix.identity(d + 1)
    total = IntMatrix.zeros(d + 1, d + 1)
    for gen, deriv in zip(("s1", "s2"), fox_derivatives()):
        total = total + group_ring_matrix(deriv, d) @ (action_matrix_poly(gen, d) - eye)
    return total - (action_matrix_poly(RELATOR, d) - eye)


@dataclass(frozen=True)
class FoxResolution:
    d: int
    d0: IntMatrix
    d1: IntMatrix

    @classmethod
    def build(cls, n: int) -> FoxResolution:
        d = poly_degree(n)
        r = d + 1
        eye = IntMatrix.identity(r)
        d0 = IntMatrix.block(
            [[action_matrix_poly("s1", d) - eye], [action_matrix_poly("s2", d) - eye]],
            [r, r], [r])
        f1, f2 = fox_derivatives()
        d1 = IntMatrix.block(
            [[group_ring_matrix(f1, d), group_ring_matrix(f2, d)]], [r], [r, r])
        return cls(d, d0, d1)

    @property
    def rank(self) -> int:
        return self.d + 1

    def segment(self, i: int) -> tuple[IntMatrix, IntMatrix]:
        """(d_in, d_out) around cochain degree i."""
        r = self.rank
        if i == 0:
            return IntMatrix.zeros(r, 0), self.d0
        if i == 1:
            return self.d0, self.d1
        if i == 2:
            return self.d1, IntMatrix.zeros(0, r)
        return IntMatrix.zeros(0, 0), IntMatrix.zeros(0, 0)


@lru_cache(maxsize=None)
def _fox(n: int) -> FoxResolution:
    return FoxResolution.build(n)


@lru_cache(maxsize=None)
def _b3_cohomology(i: int, n: int, coeff: int):
    d_in, d_out = _fox(n).segment(i)
    if coeff == 0:
        return cohomology_of_segment(d_in, d_out, check=False)
    return cohomology_of_segment_mod_p(d_in, d_out, coeff)


def b3_cohomology(i: int, n: int, coeff: int = 0):
    """H^i(B3; M_n (x) coeff): an AbelianGroup for ``coeff=0``, else an F_p-dimension.

    Zero for i > 2 (cohomological dimension 2).
    """
    if i < 0:
        raise ValueError("cohomological degree must be >= 0")
    poly_degree(n)
    if coeff:
        PrimeField(coeff)
    return _b3_cohomology(i, n, coeff)


# --- Z/p^k coefficients -----------------------------------------------------


def b3_order_mod_prime_power(i: int, n: int, p: int, k: int) -> int:
    """|H^i(B3; M_n (x) Z/p^k)| computed directly over Z/p^k.

    ker(d_out)/im(d_in) over the local ring: with Smith exponents e_j of a map
    A: (Z/q)^a -> (Z/q)^b, |im A| = prod p^(k - e_j) and |ker A| = q^a / |im A|.
    """
    q_exp = k
    fox = _fox(n)
    d_in, d_out = fox.segment(i)

    def image_exponent(a: IntMatrix) -> int:
        if a.nrows == 0 or a.ncols == 0:
            return 0
        return sum(q_exp - e for e in local_elementary_divisors(a, p, k))

    kernel_exp = q_exp * d_out.ncols - image_exponent(d_out)
    return p ** (kernel_exp - image_exponent(d_in))


def b3_order_mod_prime_power_uct(i: int, n: int, p: int, k: int) -> int:
    """Same order via universal coefficients: H^i (x) Z/p^k  +  Tor(H^{i+1}, Z/p^k)."""
    q = p ** k
    here = b3_cohomology(i, n)
    nxt = b3_cohomology(i + 1, n) if i < COH_DIMENSION else AbelianGroup.trivial()
    return here.order_mod(q) * nxt.tor_cyclic(q).torsion_order()


# --- comparison with SL2(Z) -------------------------------------------------


@dataclass
class CrosscheckResult:
    n: int
    mismatches: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def crosscheck_with_sl2z(n: int) -> CrosscheckResult:
    """Compare B3 with SL2(Z) where the central extension forces agreement.

    H^1 torsion agrees at every prime, H^1 free ranks agree for n > 0, and
    for p >= 5 the p-part of H^2(B3) equals that of H^1(SL2(Z)).
    """
    from .amalgam import sl2z_cohomology

    b1, s1 = b3_cohomology(1, n), sl2z_cohomology(1, n)
    b2 = b3_cohomology(2, n)
    bad = []
    primes = sorted({_prime_of(q) for q in b1.prime_powers() + s1.prime_powers() + b2.prime_powers()})
    for p in primes:
        if b1.p_part(p) != s1.p_part(p):
            bad.append(f"(p={p}, n={n}, i=1): B3 {b1.p_part(p)} vs SL2 {s1.p_part(p)}")
        if p >= 5 and b2.p_part(p) != s1.p_part(p):
            bad.append(f"(p={p}, n={n}, i=2): B3 {b2.p_part(p)} vs SL2 H^1 {s1.p_part(p)}")
    if n > 0 and b1.free_rank != s1.free_rank:
        bad.append(f"(free, n={n}, i=1): B3 rank {b1.free_rank} vs SL2 rank {s1.free_rank}")
    return CrosscheckResult(n, bad)


def _prime_of(q: int) -> int:
    p = 2
    while q % p:
        p += 1
    return p


def d1_invariant_factors(n: int) -> list[int]:
    """Invariant factors of the top Fox differential (torsion of H^2)."""
    return invariant_factors(_fox(n).d1)


def d1_rank(n: int) -> int:
    return rank(_fox(n).d1)
