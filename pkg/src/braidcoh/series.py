"""Exact rational generating functions in t, indexed by weighted degree.

A :class:`RationalSeries` is num(t)/den(t) with integer coefficients and
den(0) = +-1, so its Taylor coefficients are integers and come out of a
plain recurrence.  ``CATALOG`` holds the Poincare series for the cohomology
and invariant rings computed elsewhere in the package.

>>> CATALOG["z2-even"].series.expand(8)
[1, 0, 0, 0, 3, 0, 0, 0, 5]
>>> CATALOG["b3-free"].series.coefficient(20)
3
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


def _pmul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _padd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly(terms: dict[int, int]) -> tuple[int, ...]:
    """Coefficient tuple from {exponent: coefficient}."""
    if not terms:
        return (0,)
    out = [0] * (max(terms) + 1)
    for e, c in terms.items():
        out[e] += c
    return _trim(out)


def one_minus(k: int) -> tuple[int, ...]:
    """1 - t^k."""
    return poly({0: 1, k: -1})


def one_plus(k: int) -> tuple[int, ...]:
    return poly({0: 1, k: 1})


class RationalSeries:
    __slots__ = ("num", "den")

    def __init__(self, num: Sequence[int], den: Sequence[int] = (1,)):
        num, den = _trim(num), _trim(den)
        if den[0] not in (1, -1):
            raise ValueError("denominator must have constant term +-1")
        self.num, self.den = num, den

    @classmethod
    def from_factors(cls, num: Sequence[int], *den_factors: Sequence[int]) -> RationalSeries:
        den: tuple[int, ...] = (1,)
        for f in den_factors:
            den = _pmul(den, f)
        return cls(num, den)

    @classmethod
    def constant(cls, c: int) -> RationalSeries:
        return cls((c,))

    def _coerce(self, other) -> RationalSeries:
        return RationalSeries.constant(other) if isinstance(other, int) else other

    def __add__(self, other) -> RationalSeries:
        other = self._coerce(other)
        return RationalSeries(_padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
                              _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self) -> RationalSeries:
        return RationalSeries(tuple(-c for c in self.num), self.den)

    def __sub__(self, other) -> RationalSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RationalSeries:
        return (-self) + other

    def __mul__(self, other) -> RationalSeries:
        other = self._coerce(other)
        return RationalSeries(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def expand(self, max_degree: int) -> list[int]:
        """Coefficients of t^0 .. t^max_degree."""
        out = []
        d0 = self.den[0]
        for k in range(max_degree + 1):
            acc = self.num[k] if k < len(self.num) else 0
            for j in range(1, min(k, len(self.den) - 1) + 1):
                acc -= self.den[j] * out[k - j]
            out.append(acc * d0)  # d0 = +-1 is its own inverse
        return out

    def coefficient(self, k: int) -> int:
        return self.expand(k)[k]

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        return _padd(_pmul(self.num, other.den), tuple(-c for c in _pmul(other.num, self.den))) == (0,)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalSeries({self.num}, {self.den})"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    series: RationalSeries
    meaning: str
    # smallest weighted degree the formula is claimed for
    valid_from: int = 0


def _catalog() -> dict[str, CatalogEntry]:
    R = RationalSeries.from_factors
    entries = [
        CatalogEntry("z2-even", R(one_plus(4), one_minus(4), one_minus(4)),
                     "rank H^0(Z/2; M_n); also dim H^2i(Z/2; M_n) (x) F_2, i > 0"),
        CatalogEntry("z2-odd", R(poly({2: 2}), one_minus(4), one_minus(4)),
                     "dim H^2i+1(Z/2; M_n) (x) F_2"),
        CatalogEntry("z4-even", R(one_plus(8), one_minus(4), one_minus(8)),
                     "rank H^0(Z/4; M_n); also dim H^2i(Z/4; M_n) (x) F_2, i > 0"),
        CatalogEntry("z4-odd", R(poly({2: 1, 4: 1, 6: 1, 8: -1}), one_minus(4), one_minus(8)),
                     "dim H^2i+1(Z/4; M_n) (x) F_2"),
        CatalogEntry("z4-4torsion", R((1,), one_minus(8)),
                     "number of Z/4 summands of H^2i(Z/4; M_n), i > 0 (dim 2H (x) F_2)"),
        CatalogEntry("z6-even", R(one_plus(12), one_minus(4), one_minus(12)),
                     "rank H^0(Z/6; M_n); also dim H^2i(Z/6; M_n) (x) F_2, i > 0"),
        CatalogEntry("z6-even-mod3", R((1,), one_minus(12)),
                     "dim H^2i(Z/6; M_n) (x) F_3, i > 0"),
        CatalogEntry("z6-odd-mod2", R(poly({6: 2}), one_minus(4), one_minus(12)),
                     "dim H^2i+1(Z/6; M_n) (x) F_2"),
        CatalogEntry("z6-odd-mod3", R(poly({8: 1}), one_minus(12)),
                     "dim H^2i+1(Z/6; M_n) (x) F_3"),
        CatalogEntry("b3-free", R(_pmul(poly({4: 1}), poly({0: 1, 4: 1, 12: -1, 16: 1})),
                                  one_minus(8), one_minus(12)),
                     "free rank f_n of H^1 and H^2 of B3 (and of H^1(SL2(Z))), n > 0",
                     valid_from=2),
        CatalogEntry("sl2z-h2-mod2", R(poly({0: 1, 4: -1, 6: 2, 8: -1, 12: 1}),
                                       one_minus(2), one_plus(6), one_minus(8)),
                     "dim H^2i(SL2(Z); M_n) (x) F_2, i > 0"),
        CatalogEntry("sl2z-h3-mod2", R(_pmul(poly({4: 1}), poly({0: 2, 2: -1, 4: 1, 6: 1, 8: -1})),
                                       one_minus(2), one_plus(6), one_minus(8)),
                     "dim H^2i+1(SL2(Z); M_n) (x) F_2, i > 0"),
        CatalogEntry("sl2z-h2-mod3", R((1,), one_minus(12)),
                     "dim H^2i(SL2(Z); M_n) (x) F_3, i > 0"),
        CatalogEntry("sl2z-h3-mod3", R(poly({8: 1}), one_minus(12)),
                     "dim H^2i+1(SL2(Z); M_n) (x) F_3, i > 0"),
        CatalogEntry("z2-inv-mod2", R((1,), one_minus(2), one_minus(2)),
                     "dim of Z/2-invariants in M_n (x) F_2"),
        CatalogEntry("z4-inv-mod2", R((1,), one_minus(2), one_minus(4)),
                     "dim of Z/4-invariants in M_n (x) F_2 (symmetric polynomials)"),
        CatalogEntry("z6-inv-int", R(one_plus(12), one_minus(4), one_minus(12)),
                     "rank of Z/6-invariants in M_n"),
        CatalogEntry("z6-inv-mod2", R(one_plus(6), one_minus(4), one_minus(6)),
                     "dim of Z/6-invariants in M_n (x) F_2"),
        CatalogEntry("z6-inv-mod3", R(one_plus(8), one_minus(4), one_minus(12)),
                     "dim of Z/6-invariants in M_n (x) F_3"),
    ]
    for p in (2, 3, 5, 7):
        a, b = 2 * (p + 1), 2 * p * (p - 1)
        entries.append(CatalogEntry(
            f"sl2z-h1-torsion-p{p}",
            R(poly({a: 1, b: 1, 2 * (p * p + 1): -1}), one_minus(a), one_minus(b)),
            f"number of {p}-primary cyclic summands of H^1(SL2(Z); M_n)"))
    return {e.name: e for e in entries}


CATALOG = _catalog()


def catalog_names() -> list[str]:
    return sorted(CATALOG)


def get(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown series {name!r}; available: {', '.join(catalog_names())}") from None


@dataclass
class Comparison:
    name: str
    expected: list[int]
    computed: list[int]
    first_mismatch: int | None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def compare(name: str, computed: Sequence[int], degrees: Sequence[int] | None = None) -> Comparison:
    """Compare coefficients of a catalog series with computed values.

    ``computed[k]`` is matched against the coefficient of ``t^degrees[k]``
    (default: degree k).  Degrees below the entry's ``valid_from`` are skipped.
    """
    entry = get(name)
    degrees = list(range(len(computed))) if degrees is None else list(degrees)
    if len(degrees) != len(computed):
        raise ValueError("degrees and computed values differ in length")
    coeffs = entry.series.expand(max(degrees, default=0))
    expected = [coeffs[d] for d in degrees]
    first = None
    for d, e, c in zip(degrees, expected, computed):
        if d >= entry.valid_from and e != c:
            first = d
            break
    return Comparison(name, expected, list(computed), first)


def mv_euler_series() -> RationalSeries:
    """1 - (P^0_{Z/4} + P^0_{Z/6}) + P^0_{Z/2}: free rank of H^1(SL2(Z)) from Mayer-Vietoris."""
    return 1 - (CATALOG["z4-even"].series + CATALOG["z6-even"].series) + CATALOG["z2-even"].series


def mv_euler_identity(max_degree: int) -> Comparison:
    """Coefficientwise comparison of the Mayer-Vietoris count with the free-rank series."""
    got = mv_euler_series().expand(max_degree)
    return compare("b3-free", got)
