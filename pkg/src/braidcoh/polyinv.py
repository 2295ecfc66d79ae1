"""Polynomial invariants of Z/2, Z/4, Z/6 and SL2(Z) in Z[x, y] and F_p[x, y].

Invariants are computed as kernels of ``rho(g) - 1`` on M_d, so they are
independent of the generator lists they are checked against.  Named
invariants carry their *polynomial* degree in the subscript (a2 = x^2).

>>> P, Q = dickson_generators(2)
>>> str(Q)
'x^2 + x*y + y^2'
>>> [str(f) for f in invariant_basis("z2", 4)]
['x^2', 'x*y', 'y^2']
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

from sympy import isprime

from .exactalg import (
    IntMatrix,
    integer_kernel,
    invariant_factors,
    kernel_group_mod,
    nullspace_mod_p,
    rank,
    rank_mod_p,
)
from .symmod import NAMED, action_matrix_poly, poly_degree

GROUP_ELEMENTS = {
    "z2": ("w2",),
    "z4": ("w4",),
    "z6": ("w6",),
    "sl2z": ("s1", "s2"),
}


class IdentityFailure(AssertionError):
    pass


class GenerationFailure(AssertionError):
    pass


class BivariatePoly:
    """Sum of c_ij x^i y^j with integer coefficients, optionally reduced mod ``modulus``."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None, modulus: int = 0):
        self.modulus = modulus
        clean = {}
        for k, c in (coeffs or {}).items():
            if modulus:
                c %= modulus
            if c:
                clean[k] = c
        self.coeffs = clean

    @classmethod
    def x(cls, modulus: int = 0) -> BivariatePoly:
        return cls({(1, 0): 1}, modulus)

    @classmethod
    def y(cls, modulus: int = 0) -> BivariatePoly:
        return cls({(0, 1): 1}, modulus)

    @classmethod
    def constant(cls, c: int, modulus: int = 0) -> BivariatePoly:
        return cls({(0, 0): c}, modulus)

    @classmethod
    def from_vector(cls, vec, d: int, modulus: int = 0) -> BivariatePoly:
        """Inverse of :meth:`vector`: entry k is the coefficient of x^(d-k) y^k."""
        return cls({(d - k, k): int(c) for k, c in enumerate(vec)}, modulus)

    def _mod(self, other: BivariatePoly | int) -> int:
        if isinstance(other, BivariatePoly) and other.modulus != self.modulus:
            if self.modulus and other.modulus:
                raise ValueError("mixing different moduli")
            return self.modulus or other.modulus
        return self.modulus

    def __add__(self, other):
        if isinstance(other, int):
            other = BivariatePoly.constant(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariatePoly(out, self._mod(other))

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({k: -c for k, c in self.coeffs.items()}, self.modulus)

    def __sub__(self, other):
        return self + (-other if isinstance(other, BivariatePoly) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BivariatePoly({k: c * other for k, c in self.coeffs.items()}, self.modulus)
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariatePoly(out, self._mod(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = BivariatePoly.constant(1, self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePoly.constant(other, self.modulus)
        return (self - other).is_zero()

    def __hash__(self):
        return hash((frozenset(self.coeffs.items()), self.modulus))

    def is_zero(self) -> bool:
        return not self.coeffs

    def reduce(self, p: int) -> BivariatePoly:
        return BivariatePoly(self.coeffs, p)

    def degrees(self) -> set[int]:
        return {i + j for i, j in self.coeffs}

    @property
    def degree(self) -> int:
        """Total degree of a homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop() if degs else 0

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def substitute(self, m) -> BivariatePoly:
        """f(a x + c y, b x + e y) for the 2x2 matrix m = [[a, b], [c, e]]."""
        (a, b), (c, e) = m
        X = BivariatePoly({(1, 0): a, (0, 1): c}, self.modulus)
        Y = BivariatePoly({(1, 0): b, (0, 1): e}, self.modulus)
        out = BivariatePoly({}, self.modulus)
        for (i, j), coeff in self.coeffs.items():
            out = out + (X ** i) * (Y ** j) * coeff
        return out

    def vector(self, d: int | None = None) -> list[int]:
        """Coefficients in the basis x^d, x^(d-1) y, ..., y^d."""
        d = self.degree if d is None else d
        if self.coeffs and self.degree != d:
            raise ValueError(f"polynomial has degree {self.degree}, not {d}")
        return [self.coeffs.get((d - k, k), 0) for k in range(d + 1)]

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = "*".join(s for s in (_power("x", i), _power("y", j)) if s)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    __repr__ = __str__


def _power(v: str, k: int) -> str:
    return "" if k == 0 else (v if k == 1 else f"{v}^{k}")


X, Y = BivariatePoly.x(), BivariatePoly.y()


# --- invariants as kernels ----------------------------------------------------


def invariance_matrix(group: str, d: int) -> IntMatrix:
    """Stack of rho(g) - 1 over the generators of ``group`` on M_d."""
    if group not in GROUP_ELEMENTS:
        raise ValueError(f"unknown group {group!r}; choose from {sorted(GROUP_ELEMENTS)}")
    eye = IntMatrix.identity(d + 1)
    blocks = [[action_matrix_poly(NAMED.get(g, g), d) - eye] for g in GROUP_ELEMENTS[group]]
    return IntMatrix.block(blocks, [d + 1] * len(blocks), [d + 1])


def invariant_basis(group: str, n: int, coeff: int = 0) -> list[BivariatePoly]:
    """Basis of the invariants in M_n (coeff = 0) or M_n (x) F_p (coeff = p)."""
    d = poly_degree(n)
    a = invariance_matrix(group, d)
    if coeff == 0:
        vecs = integer_kernel(a)
    else:
        vecs = nullspace_mod_p(a, coeff)
    return [BivariatePoly.from_vector(v, d, coeff) for v in vecs]


def invariant_dimension(group: str, n: int, coeff: int = 0) -> int:
    d = poly_degree(n)
    a = invariance_matrix(group, d)
    r = rank(a) if coeff == 0 else rank_mod_p(a, coeff)
    return d + 1 - r


def is_invariant(f: BivariatePoly, group: str, modulus: int = 0) -> bool:
    """Exact substitution check of f under the generators of ``group``."""
    from .symmod import GENERATORS, parse_word

    g = f.reduce(modulus) if modulus else f
    for name in GROUP_ELEMENTS[group]:
        h = g
        # rho(uv) = rho(u) rho(v) applies v's substitution first
        for letter in reversed(parse_word(name)):
            h = h.substitute(GENERATORS[letter])
        if not (h - g).is_zero():
            return False
    return True


# --- Dickson invariants -----------------------------------------------------


def dickson_generators(p: int) -> tuple[BivariatePoly, BivariatePoly]:
    """P_p = xy(x^(p-1) - y^(p-1)) and Q_p = sum_h x^((p-1)(p-h)) y^((p-1)h)."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    P = X * Y * (X ** (p - 1) - Y ** (p - 1))
    Q = BivariatePoly({((p - 1) * (p - h), (p - 1) * h): 1 for h in range(p + 1)})
    return P, Q


def dickson_p_squared(p: int) -> BivariatePoly:
    """P_{p^2} = x y (x^(p^2-1) - y^(p^2-1)); equals P_p Q_p."""
    return X * Y * (X ** (p * p - 1) - Y ** (p * p - 1))


# --- ring presentations -----------------------------------------------------


@dataclass
class Presentation:
    name: str
    group: str
    modulus: int
    generators: dict[str, BivariatePoly]
    relation: tuple[str, BivariatePoly, BivariatePoly] | None
    # exponent bounds per generator in the normal form (None = unbounded)
    normal_form: dict[str, int | None] = field(default_factory=dict)


def _presentations() -> dict[str, Presentation]:
    x, y = X, Y
    a2, b2, c2 = x ** 2, y ** 2, x * y
    d2, e4, f4 = x ** 2 + y ** 2, x ** 2 * y ** 2, x ** 3 * y - x * y ** 3
    p2 = x ** 2 + x * y + y ** 2
    q6 = x ** 2 * y ** 2 * (x + y) ** 2
    r6 = x ** 5 * y - 5 * x ** 3 * y ** 3 - 5 * x ** 2 * y ** 4 - x * y ** 5
    s2, t3, u3 = p2, x * y * (x + y), x ** 3 + x ** 2 * y + y ** 3
    v2, inv_w4, z6 = (x - y) ** 2, x * y * (x + y) * (x - y), q6
    return {
        "z2-int": Presentation("z2-int", "z2", 0, {"a2": a2, "b2": b2, "c2": c2},
                               ("c2^2 = a2 b2", c2 ** 2, a2 * b2),
                               {"a2": None, "b2": None, "c2": 1}),
        "z4-int": Presentation("z4-int", "z4", 0, {"d2": d2, "e4": e4, "f4": f4},
                               ("f4^2 = (d2^2 - 4 e4) e4", f4 ** 2, (d2 ** 2 - 4 * e4) * e4),
                               {"d2": None, "e4": None, "f4": 1}),
        "z4-mod2": Presentation("z4-mod2", "z4", 2, {"s1": x + y, "s2": x * y}, None,
                                {"s1": None, "s2": None}),
        "z6-int": Presentation("z6-int", "z6", 0, {"p2": p2, "q6": q6, "r6": r6},
                               ("r6^2 = q6 (p2^3 - 13 q6 - 5 r6)", r6 ** 2,
                                q6 * (p2 ** 3 - 13 * q6 - 5 * r6)),
                               {"p2": None, "q6": None, "r6": 1}),
        "z6-mod2": Presentation("z6-mod2", "z6", 2, {"s2": s2, "t3": t3, "u3": u3},
                                ("u3^2 = s2^3 + t3^2 + t3 u3", u3 ** 2, s2 ** 3 + t3 ** 2 + t3 * u3),
                                {"s2": None, "t3": None, "u3": 1}),
        "z6-mod3": Presentation("z6-mod3", "z6", 3, {"v2": v2, "inv_w4": inv_w4, "z6": z6},
                                ("inv_w4^2 = v2 z6", inv_w4 ** 2, v2 * z6),
                                {"v2": None, "z6": None, "inv_w4": 1}),
    }


PRESENTATIONS = _presentations()


def normal_form_monomials(pres: Presentation, d: int) -> list[tuple[dict[str, int], BivariatePoly]]:
    """Monomials in the generators of polynomial degree d allowed by the normal form."""
    names = list(pres.generators)
    degs = [pres.generators[g].degree for g in names]
    ranges = []
    for g, dg in zip(names, degs):
        cap = d // dg
        bound = pres.normal_form.get(g)
        ranges.append(range(min(cap, bound) + 1 if bound is not None else cap + 1))
    out = []
    for exps in product(*ranges):
        if sum(e * dg for e, dg in zip(exps, degs)) != d:
            continue
        f = BivariatePoly.constant(1, pres.modulus)
        for g, e in zip(names, exps):
            f = f * pres.generators[g].reduce(pres.modulus) ** e if pres.modulus \
                else f * pres.generators[g] ** e
        out.append((dict(zip(names, exps)), f))
    return out


@dataclass
class PresentationReport:
    name: str
    invariant_generators: dict[str, bool]
    relation_holds: bool | None
    degrees_checked: list[int]
    generation_failures: list[int]

    @property
    def ok(self) -> bool:
        return (all(self.invariant_generators.values()) and self.relation_holds is not False
                and not self.generation_failures)


def _spans_invariants(vectors: list[list[int]], group: str, d: int, modulus: int) -> bool:
    a = invariance_matrix(group, d)
    if modulus:
        dim = d + 1 - rank_mod_p(a, modulus)
        if not vectors:
            return dim == 0
        m = IntMatrix(vectors, d + 1)
        return len(vectors) == dim and rank_mod_p(m, modulus) == dim
    dim = d + 1 - rank(a)
    if not vectors:
        return dim == 0
    m = IntMatrix(vectors, d + 1)
    # a saturated sublattice of the (saturated) kernel with full rank is the kernel
    fs = invariant_factors(m)
    return len(vectors) == dim and len(fs) == dim and all(f == 1 for f in fs)


def verify_ring_presentation(name: str, max_weighted_degree: int = 60, strict: bool = True
                             ) -> PresentationReport:
    """Invariance of the generators, the relation, and degreewise generation."""
    if name not in PRESENTATIONS:
        raise ValueError(f"unknown presentation {name!r}; choose from {sorted(PRESENTATIONS)}")
    pres = PRESENTATIONS[name]
    mod = pres.modulus
    inv = {g: is_invariant(f, pres.group, mod) for g, f in pres.generators.items()}
    rel = None
    if pres.relation:
        _, lhs, rhs = pres.relation
        rel = ((lhs - rhs).reduce(mod) if mod else lhs - rhs).is_zero()
    failures, degrees = [], []
    for n in range(0, max_weighted_degree + 1, 2):
        d = n // 2
        vecs = [f.vector(d) for _, f in normal_form_monomials(pres, d)]
        degrees.append(n)
        if not _spans_invariants(vecs, pres.group, d, mod):
            failures.append(n)
    report = PresentationReport(name, inv, rel, degrees, failures)
    if strict:
        bad = [g for g, ok in inv.items() if not ok]
        if bad:
            raise IdentityFailure(f"{name}: generators {bad} are not invariant")
        if rel is False:
            raise IdentityFailure(f"{name}: relation {pres.relation[0]} fails")
        if failures:
            raise GenerationFailure(f"{name}: normal forms do not span the invariants "
                                    f"in weighted degree {failures[0]}")
    return report


# --- Dickson and Steinberg checks ---------------------------------------------


@dataclass
class DegreeCheck:
    n: int
    expected: int
    computed: int
    ok: bool


def verify_dickson_mod_p(p: int, max_weighted_degree: int) -> list[DegreeCheck]:
    """SL2(Z)-invariants of M_n (x) F_p have basis {P_p^k Q_p^h : deg = n}."""
    from .dividedpower import monomials_of_degree

    P, Q = dickson_generators(p)
    P, Q = P.reduce(p), Q.reduce(p)
    out = []
    for n in range(0, max_weighted_degree + 1, 2):
        d = n // 2
        dim = invariant_dimension("sl2z", n, p)
        mons = [(P ** k * Q ** h).vector(d) for k, h in monomials_of_degree(p, n)]
        a = invariance_matrix("sl2z", d)
        ok = len(mons) == dim
        if mons:
            m = IntMatrix(mons, d + 1)
            ok = ok and rank_mod_p(m, p) == len(mons) and (a @ m.transpose()).mod(p).is_zero()
        out.append(DegreeCheck(n, len(mons), dim, ok))
    return out


def steinberg_prediction(p: int, r: int, n: int) -> list[int]:
    """Cyclic orders of the SL2(Z)-invariants of M_n (x) Z/p^r.

    P_p^a Q_p^b contributes p^i P^a Q^b with i minimal such that p^(r-i-1)
    divides gcd(a, b), a cyclic group of order p^min(r, v_p(gcd(a, b)) + 1).
    """
    from .dividedpower import monomials_of_degree, valuation
    from math import gcd

    q = p ** r
    orders = []
    for a, b in monomials_of_degree(p, n):
        if (a, b) == (0, 0):
            orders.append(q)
        else:
            orders.append(p ** min(r, valuation(gcd(a, b), p) + 1))
    return sorted(orders)


def steinberg_generators_invariant(p: int, r: int, n: int) -> bool:
    """p^i P^a Q^b with p^(r-i-1) | gcd(a, b) is invariant mod p^r."""
    from .dividedpower import monomials_of_degree, valuation
    from math import gcd

    q = p ** r
    d = poly_degree(n)
    a_mat = invariance_matrix("sl2z", d)
    P, Q = dickson_generators(p)
    for a, b in monomials_of_degree(p, n):
        if (a, b) == (0, 0):
            continue
        i = max(0, r - 1 - valuation(gcd(a, b), p))
        v = IntMatrix([(P ** a * Q ** b * p ** i).vector(d)], d + 1)
        if not (a_mat @ v.transpose()).mod(q).is_zero():
            return False
    return True


def verify_steinberg_mod_pr(p: int, r: int, max_weighted_degree: int) -> list[DegreeCheck]:
    """Invariant group of M_n (x) Z/p^r (via Smith form) against the normal-form count."""
    if r < 1 or r > 3:
        raise ValueError("r must be 1, 2 or 3")
    out = []
    for n in range(0, max_weighted_degree + 1, 2):
        d = n // 2
        grp = kernel_group_mod(invariance_matrix("sl2z", d), p ** r)
        expected = steinberg_prediction(p, r, n)
        computed = grp.prime_powers()
        ok = computed == [q for q in expected if q > 1] and steinberg_generators_invariant(p, r, n)
        out.append(DegreeCheck(n, expected, computed, ok))
    return out
