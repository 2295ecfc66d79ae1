"""The module M = Z[x, y] = sum of M_d as a B3 / SL2(Z) representation.

Basis of M_d is ``x^d, x^(d-1) y, ..., y^d``.  A 2x2 integer matrix
``[[a, b], [c, d]]`` acts by the substitution ``x -> a x + c y``,
``y -> b x + d y`` (its columns are the images of x and y), so the braid
generators act as

    s1:  x -> x - y,  y -> y
    s2:  x -> x,      y -> x + y

Words are evaluated left to right: ``action_matrix("s1 s2", n)`` is
``rho(s1) @ rho(s2)``.  Public functions take the *weighted degree* ``n = 2d``
(x and y have degree 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .exactalg import IntMatrix


class RelationError(AssertionError):
    """A defining relation of B3 or SL2(Z) fails on M_d."""


@dataclass(frozen=True)
class Weight:
    """Polynomial degree ``d`` together with the weighted degree ``n = 2d``."""

    d: int

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("negative degree")

    @classmethod
    def from_weighted(cls, n: int) -> Weight:
        if n < 0 or n % 2:
            raise ValueError(f"weighted degree must be even and non-negative, got {n}")
        return cls(n // 2)

    @property
    def n(self) -> int:
        return 2 * self.d

    @property
    def rank(self) -> int:
        return self.d + 1


def poly_degree(n: int) -> int:
    """Weighted degree -> polynomial degree, rejecting odd degrees."""
    return Weight.from_weighted(n).d


SIGMA1 = ((1, 0), (-1, 1))
SIGMA2 = ((1, 1), (0, 1))
GENERATORS = {
    "s1": SIGMA1,
    "s2": SIGMA2,
    "S1": ((1, 0), (1, 1)),
    "S2": ((1, -1), (0, 1)),
}

# Named elements.  w4 generates the Z/4 factor and w6 the Z/6 factor of
# SL2(Z) = Z/4 *_{Z/2} Z/6, with w4^2 = w6^3 = w2 = -I.  With left-to-right
# evaluation the word s2 s1 is the one acting as x -> -y, y -> x + y.
W4 = ("s1", "s2", "s1")
W6 = ("s2", "s1")
W2 = W4 * 2
CENTER = ("s1", "s2") * 6
NAMED = {"w2": W2, "w4": W4, "w6": W6, "c": CENTER}


def parse_word(word: str | Sequence[str]) -> tuple[str, ...]:
    """Turn ``"s1 s2 S1"`` / ``"w4 w6"`` / a sequence of letters into generator letters."""
    if isinstance(word, str):
        word = word.split()
    out: list[str] = []
    for letter in word:
        if letter in GENERATORS:
            out.append(letter)
        elif letter in NAMED:
            out.extend(NAMED[letter])
        else:
            raise ValueError(f"unknown letter {letter!r}")
    return tuple(out)


def inverse_word(word: Sequence[str]) -> tuple[str, ...]:
    return tuple(letter.swapcase() for letter in reversed(parse_word(word)))


def _linear_power(a: int, c: int, m: int) -> list[int]:
    # coefficients of (a x + c y)^m in powers of y
    return [comb(m, j) * a ** (m - j) * c ** j for j in range(m + 1)]


def _convolve(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def sym_power(m: Sequence[Sequence[int]], d: int) -> IntMatrix:
    """Matrix of the substitution induced by the 2x2 matrix ``m`` on M_d."""
    (a, b), (c, e) = m
    cols = []
    for k in range(d + 1):
        cols.append(_convolve(_linear_power(a, c, d - k), _linear_power(b, e, k)))
    return IntMatrix([[cols[k][i] for k in range(d + 1)] for i in range(d + 1)], d + 1)


@lru_cache(maxsize=None)
def _generator_rows(letter: str, d: int) -> tuple[tuple[int, ...], ...]:
    return tuple(map(tuple, sym_power(GENERATORS[letter], d).rows))


def generator_matrix(letter: str, d: int) -> IntMatrix:
    return IntMatrix(_generator_rows(letter, d), d + 1)


def action_matrix_poly(word: str | Sequence[str], d: int) -> IntMatrix:
    """Like :func:`action_matrix` but indexed by polynomial degree."""
    letters = parse_word(word)
    result = IntMatrix.identity(d + 1)
    for letter in letters:
        result = result @ generator_matrix(letter, d)
    return result


def action_matrix(word: str | Sequence[str], n: int) -> IntMatrix:
    """(d+1)x(d+1) matrix of the group word acting on M_d, d = n/2."""
    return action_matrix_poly(word, poly_degree(n))


def group_ring_matrix(combination: Iterable[tuple[int, Sequence[str]]], d: int) -> IntMatrix:
    """Evaluate a formal sum ``sum c * word`` of group words on M_d."""
    total = IntMatrix.zeros(d + 1, d + 1)
    for coeff, word in combination:
        total = total + action_matrix_poly(word, d).scale(coeff)
    return total


def verify_relations(n: int, generators: dict[str, IntMatrix] | None = None) -> dict[str, bool]:
    """Check the braid relation and the amalgam relations on M_d.

    ``generators`` may override the matrices of s1 and s2 (used to test that
    a corrupted representation is caught).  Raises :class:`RelationError`
    naming the first identity that fails.
    """
    d = poly_degree(n)
    mats = {"s1": generator_matrix("s1", d), "s2": generator_matrix("s2", d)}
    if generators:
        mats.update(generators)

    def ev(word):
        out = IntMatrix.identity(d + 1)
        for letter in word:
            out = out @ mats[letter]
        return out

    eye = IntMatrix.identity(d + 1)
    sign = -1 if d % 2 else 1
    w4, w6 = ev(W4), ev(W6)
    checks = {
        "braid relation s1 s2 s1 = s2 s1 s2": ev(("s1", "s2", "s1")) == ev(("s2", "s1", "s2")),
        "w4^4 = 1": w4 ** 4 == eye,
        "w6^6 = 1": w6 ** 6 == eye,
        "w2 = (-1)^d": ev(W2) == eye.scale(sign),
        "w4^2 = w6^3": w4 ** 2 == w6 ** 3,
        "c = 1": ev(CENTER) == eye,
    }
    for name, ok in checks.items():
        if not ok:
            raise RelationError(f"{name} fails on M_{d} (weighted degree {n})")
    return checks
