"""Closed-form torsion predictions built from divided power algebras.

Everything here is combinatorics on exponents and p-adic valuations; no
matrices or polynomials are involved, so these models are independent of
the cohomology machinery they are compared against.

Degrees are weighted degrees (x, y of degree 2).  A monomial P_p^k Q_p^h has
degree ``2k(p+1) + 2hp(p-1)`` and, divided by gcd(k, h)!, spans a cyclic
summand of order ``p^(v_p(gcd(k, h)) + 1)``.

>>> torsion_order(3, 0, 3)
9
>>> h1_model(2, 12).prime_powers
(2, 4)
>>> h2_b3_model(2, 8).prime_powers
(8,)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial, gcd

from sympy import isprime, primerange

from .exactalg import AbelianGroup


def valuation(x: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    v = 0
    x = abs(x)
    while x % p == 0:
        x //= p
        v += 1
    return v


def digit_sum(n: int, p: int) -> int:
    s = 0
    while n:
        n, r = divmod(n, p)
        s += r
    return s


def _check_prime(p: int):
    if not isprime(p):
        raise ValueError(f"{p} is not prime")


def _check_degree(n: int):
    if n < 0 or n % 2:
        raise ValueError(f"weighted degree must be even and non-negative, got {n}")


@dataclass(frozen=True)
class TorsionModel:
    """Predicted torsion in one weighted degree, as a sorted multiset of prime powers."""

    n: int
    prime_powers: tuple[int, ...] = ()
    free_rank: int | None = None
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        _check_degree(self.n)
        object.__setattr__(self, "prime_powers", tuple(sorted(self.prime_powers)))

    @classmethod
    def from_group(cls, n: int, group: AbelianGroup, p: int | None = None) -> TorsionModel:
        pp = group.p_part(p) if p else group.prime_powers()
        return cls(n, tuple(pp), group.free_rank)

    def matches(self, group: AbelianGroup, p: int | None = None) -> bool:
        """Torsion (p-part if ``p`` is given) equals the model; free rank too if modelled."""
        pp = group.p_part(p) if p else group.prime_powers()
        if tuple(pp) != self.prime_powers:
            return False
        return self.free_rank is None or self.free_rank == group.free_rank

    def __str__(self):
        return " + ".join(f"Z/{q}" for q in self.prime_powers) or "0"


def dickson_degrees(p: int) -> tuple[int, int]:
    """Weighted degrees of P_p and Q_p."""
    return 2 * (p + 1), 2 * p * (p - 1)


def monomials_of_degree(p: int, n: int) -> list[tuple[int, int]]:
    """All (k, h) with deg P_p^k Q_p^h = n."""
    dp, dq = dickson_degrees(p)
    return [(k, (n - k * dp) // dq) for k in range(n // dp + 1) if (n - k * dp) % dq == 0]


def torsion_order(p: int, k: int, h: int) -> int:
    """Order p^(m+1) of the summand spanned by P_p^k Q_p^h / gcd(k,h)!, m = v_p(gcd(k, h)).

    gcd(0, h) = h, so pure powers use their own exponent.
    """
    _check_prime(p)
    if k < 0 or h < 0:
        raise ValueError("exponents must be non-negative")
    if k == 0 and h == 0:
        raise ValueError("the unit monomial spans a free summand, not torsion")
    return p ** (valuation(gcd(k, h), p) + 1)


def h1_model(p: int, n: int) -> TorsionModel:
    """p-torsion of H^1 in degree n: the degree-n part of the augmentation ideal
    of the divided power algebra on P_p, Q_p."""
    _check_prime(p)
    _check_degree(n)
    terms = [(k, h) for k, h in monomials_of_degree(p, n) if (k, h) != (0, 0)]
    return TorsionModel(n, tuple(torsion_order(p, k, h) for k, h in terms),
                        labels=tuple(f"P{p}^{k} Q{p}^{h}" for k, h in terms))


def h2_b3_model(p: int, n: int) -> TorsionModel:
    """p-torsion of H^2(B3; M_n).

    p = 2: pure Q_2^j classes vanish for odd j and grow from 2^(v(j)+1) to
    2^(v(j)+2) for even j.  p = 3: the P_3 Q_3^j classes vanish and pure Q_3^j
    classes grow from 3^(v(j)+1) to 3^(v(j)+2).  p >= 5: same as H^1.
    """
    _check_prime(p)
    _check_degree(n)
    if p >= 5:
        return h1_model(p, n)
    orders, labels = [], []
    for k, h in monomials_of_degree(p, n):
        if (k, h) == (0, 0):
            continue
        base = torsion_order(p, k, h)
        if p == 2 and k == 0:
            if h % 2:
                continue
            base *= 2
        elif p == 3 and k == 1:
            continue
        elif p == 3 and k == 0:
            base *= 3
        orders.append(base)
        labels.append(f"P{p}^{k} Q{p}^{h}")
    return TorsionModel(n, tuple(orders), labels=tuple(labels))


def relevant_primes(n: int) -> list[int]:
    """Primes whose Dickson invariants have degree <= n."""
    return [p for p in primerange(2, max(3, n // 2 + 1)) if min(dickson_degrees(p)) <= n]


def h1_torsion_model(n: int) -> TorsionModel:
    """Torsion of H^1(SL2(Z); M_n) over all primes."""
    out = []
    for p in relevant_primes(n):
        out.extend(h1_model(p, n).prime_powers)
    return TorsionModel(n, tuple(out))


def h2_b3_torsion_model(n: int) -> TorsionModel:
    out = []
    for p in relevant_primes(n):
        out.extend(h2_b3_model(p, n).prime_powers)
    return TorsionModel(n, tuple(out))


# --- the divided power ring Gamma_p[x] ---------------------------------------


@dataclass(frozen=True)
class GammaElement:
    """The generator x_n = x^n / n! of Gamma_p[x], of additive order p^(v_p(n)+1)."""

    p: int
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("x_0 = 1 generates a free summand")

    @property
    def order(self) -> int:
        return self.p ** (valuation(self.index, self.p) + 1)

    def times(self, other: GammaElement) -> tuple[int, GammaElement]:
        """x_i x_j = C(i+j, i) x_{i+j}; the coefficient is reduced modulo the order."""
        target = GammaElement(self.p, self.index + other.index)
        return comb(self.index + other.index, self.index) % target.order, target

    def product_order(self, other: GammaElement) -> int:
        coeff, target = self.times(other)
        return target.order // gcd(coeff, target.order)


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, message: str):
        self.checked += 1
        if not ok:
            self.failures.append(message)


def gamma_ring_check(p: int, max_degree: int) -> CheckReport:
    """Check the arithmetic that makes Gamma_p[x] well defined, up to x_max_degree.

    (i) Legendre: v_p(n!) = (n - digit sum) / (p - 1);
    (ii) (x_{p^i})^p = (p^{i+1})!/((p^i)!)^p x_{p^{i+1}} with coefficient of valuation 1;
    (iii) x_i x_j is compatible with the orders: p^(v(i)+1) C(i+j, i) x_{i+j} = 0, so the
         product has order dividing both factor orders;
    (iv) x_n = unit * prod_j x_{p^j}^{n_j} (the p-adic digits of n).
    """
    _check_prime(p)
    rep = CheckReport(f"gamma ring p={p}")
    for n in range(1, max_degree + 1):
        lhs = valuation(factorial(n), p)
        rep.record(lhs == (n - digit_sum(n, p)) // (p - 1) and (n - digit_sum(n, p)) % (p - 1) == 0,
                   f"Legendre fails at n={n}")
    i = 0
    while p ** (i + 1) <= max_degree:
        c = factorial(p ** (i + 1)) // factorial(p ** i) ** p
        rep.record(valuation(c, p) == 1, f"(x_{p ** i})^{p} coefficient has valuation {valuation(c, p)}")
        i += 1
    for a in range(1, max_degree):
        xa = GammaElement(p, a)
        for b in range(1, max_degree - a + 1):
            xb = GammaElement(p, b)
            c = comb(a + b, a)
            target = GammaElement(p, a + b)
            killed = (xa.order * c) % target.order == 0
            order = xa.product_order(xb)
            rep.record(killed and xa.order % order == 0 and xb.order % order == 0,
                       f"x_{a} x_{b} incompatible with orders")
    for n in range(1, max_degree + 1):
        digits, m, j = [], n, 0
        coeff = factorial(n)
        while m:
            m, r = divmod(m, p)
            coeff //= factorial(p ** j) ** r
            j += 1
        rep.record(coeff % p != 0, f"x_{n} is not a unit multiple of its digit product")
    return rep


# --- Anick spaces -------------------------------------------------------------


def anick_cohomology(p: int, two_n: int, max_total_degree: int) -> dict[int, int]:
    """Reduced integral (p-local) cohomology of T_p(2n+1): degree -> order.

    Z/p^r sits in degree 2n p^(r-1) k for every k prime to p.
    """
    _check_prime(p)
    if p <= 3:
        raise ValueError("Anick spaces are used here only for p > 3")
    if two_n <= 0 or two_n % 2:
        raise ValueError("2n must be a positive even integer")
    out: dict[int, int] = {}
    r = 1
    while two_n * p ** (r - 1) <= max_total_degree:
        step = two_n * p ** (r - 1)
        for k in range(1, max_total_degree // step + 1):
            if k % p:
                out[step * k] = p ** r
        r += 1
    return dict(sorted(out.items()))


def gamma_torsion(p: int, two_n: int, max_total_degree: int) -> dict[int, int]:
    """Positive-degree torsion of Gamma_p[x] with |x| = 2n: degree 2n j -> p^(v(j)+1)."""
    return {two_n * j: GammaElement(p, j).order for j in range(1, max_total_degree // two_n + 1)}


@dataclass
class ShimuraDegree:
    total_degree: int
    group_side: tuple[int, ...]
    tensor_side: tuple[int, ...]
    tor_side: tuple[int, ...]

    @property
    def tensor_match(self) -> bool:
        return self.group_side == self.tensor_side


def shimura_comparison(p: int, max_total_degree: int, group_torsion=None) -> list[ShimuraDegree]:
    """Compare p-torsion of sum_{i+n=k} H^i(SL2(Z); M_n) with the suspension of
    T_p(2p+3) x T_p(2p^2-2p+1).

    Cohomology of the product is assembled by Kunneth from the Anick groups:
    H^a (x) H^b lands in degree a+b and Tor(H^a, H^b) in degree a+b-1, then the
    suspension adds one.  For p > 3 only H^1 contributes on the group side, so
    ``group_torsion(n)`` (default: the computed H^1(SL2(Z); M_n) p-part) is
    compared in total degree n + 1.  The tensor part is the real check; the Tor
    terms are itemized, not asserted.
    """
    if p <= 3:
        raise ValueError("the comparison is stated for p > 3")
    if group_torsion is None:
        from .amalgam import sl2z_cohomology

        def group_torsion(n):
            return tuple(sl2z_cohomology(1, n).p_part(p))

    da, db = dickson_degrees(p)
    a = {0: 0, **anick_cohomology(p, da, max_total_degree)}
    b = {0: 0, **anick_cohomology(p, db, max_total_degree)}
    tensor: dict[int, list[int]] = {}
    tor: dict[int, list[int]] = {}
    for i, oa in a.items():
        for j, ob in b.items():
            if i == j == 0 or i + j + 1 > max_total_degree:
                continue
            if oa and ob:
                tensor.setdefault(i + j + 1, []).append(min(oa, ob))
                tor.setdefault(i + j, []).append(min(oa, ob))
            else:
                tensor.setdefault(i + j + 1, []).append(oa or ob)
    rows = []
    for k in range(1, max_total_degree + 1):
        grp = tuple(sorted(group_torsion(k - 1))) if k % 2 == 1 else ()
        rows.append(ShimuraDegree(k, grp, tuple(sorted(tensor.get(k, []))),
                                  tuple(sorted(tor.get(k, [])))))
    return rows
