"""Exact integer and mod-p linear algebra.

Everything here works on Python ints, so no entry is ever rounded or
overflows.  The main entry points are :func:`smith_normal_form`,
:func:`cohomology_of_segment` and its mod-p counterpart.

>>> a = IntMatrix([[2, 4], [6, 8]])
>>> d, u, v = smith_normal_form(a)
>>> d.diagonal()
[2, 4]
>>> cohomology_of_segment(IntMatrix([[2]]), IntMatrix.zeros(0, 1))
AbelianGroup(free_rank=0, invariant_factors=(2,))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint, isprime


class CompositionError(ValueError):
    """Raised when two differentials do not compose to zero."""


class DimensionError(ValueError):
    """Raised when matrix shapes do not chain."""


class IntMatrix:
    """Dense matrix of arbitrary-precision integers (row-major)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        self.rows = [[int(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise DimensionError("ragged rows")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def diag(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def block(cls, blocks: Sequence[Sequence[IntMatrix | None]],
              row_sizes: Sequence[int], col_sizes: Sequence[int]) -> IntMatrix:
        """Assemble a block matrix; ``None`` stands for a zero block."""
        out = []
        for bi, brow in enumerate(blocks):
            for r in range(row_sizes[bi]):
                line: list[int] = []
                for bj, blk in enumerate(brow):
                    if blk is None:
                        line.extend([0] * col_sizes[bj])
                    else:
                        if blk.nrows != row_sizes[bi] or blk.ncols != col_sizes[bj]:
                            raise DimensionError("block shape mismatch")
                        line.extend(blk.rows[r])
                out.append(line)
        return cls(out, sum(col_sizes))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def copy(self) -> IntMatrix:
        return IntMatrix([r[:] for r in self.rows], self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, tuple(map(tuple, self.rows))))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows!r})"

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                         self.ncols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                         self.ncols)

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-a for a in r] for r in self.rows], self.ncols)

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix([[c * a for a in r] for r in self.rows], self.ncols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum(a * c[k] for k, a in nz) for c in cols])
        return IntMatrix(out, other.ncols)

    def __pow__(self, k: int) -> IntMatrix:
        if self.nrows != self.ncols or k < 0:
            raise DimensionError("only non-negative powers of square matrices")
        result = IntMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> IntMatrix:
        if self.nrows == 0:
            return IntMatrix.zeros(self.ncols, 0)
        return IntMatrix([list(c) for c in zip(*self.rows)], self.nrows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def diagonal(self) -> list[int]:
        return [self.rows[i][i] for i in range(min(self.nrows, self.ncols))]

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.rows]

    def mod(self, q: int) -> IntMatrix:
        return IntMatrix([[a % q for a in r] for r in self.rows], self.ncols)

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        n = self.nrows
        if n != self.ncols:
            raise DimensionError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = [r[:] for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk with d1 | d2 | ... ."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        fs = self.invariant_factors
        if any(d < 2 for d in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"not a divisibility chain: {fs}")

    @classmethod
    def from_orders(cls, free_rank: int, orders: Iterable[int]) -> AbelianGroup:
        """Build the canonical form from any list of cyclic orders (1s and 0s allowed;
        a 0 order means a copy of Z)."""
        orders = list(orders)
        free_rank += sum(1 for o in orders if o == 0)
        powers: dict[int, list[int]] = {}
        for o in orders:
            if o in (0, 1, -1):
                continue
            for p, e in factorint(abs(o)).items():
                powers.setdefault(p, []).append(p ** e)
        if not powers:
            return cls(free_rank, ())
        k = max(len(v) for v in powers.values())
        factors = [1] * k
        for v in powers.values():
            v.sort()
            for idx, pp in enumerate(v):
                factors[k - len(v) + idx] *= pp
        return cls(free_rank, tuple(f for f in factors if f > 1))

    @classmethod
    def trivial(cls) -> AbelianGroup:
        return cls(0, ())

    def prime_powers(self) -> list[int]:
        """Torsion as a sorted multiset of prime powers."""
        out = []
        for d in self.invariant_factors:
            out.extend(p ** e for p, e in factorint(d).items())
        return sorted(out)

    def p_part(self, p: int) -> list[int]:
        """Sorted orders of the p-primary cyclic summands."""
        return [q for q in self.prime_powers() if q % p == 0]

    def torsion_order(self) -> int:
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def direct_sum(self, other: AbelianGroup) -> AbelianGroup:
        return AbelianGroup.from_orders(self.free_rank + other.free_rank,
                                        self.prime_powers() + other.prime_powers())

    def tensor_cyclic(self, q: int) -> AbelianGroup:
        """G (x) Z/q."""
        orders = [q] * self.free_rank + [gcd(d, q) for d in self.invariant_factors]
        return AbelianGroup.from_orders(0, orders)

    def tor_cyclic(self, q: int) -> AbelianGroup:
        """Tor(G, Z/q)."""
        return AbelianGroup.from_orders(0, [gcd(d, q) for d in self.invariant_factors])

    def order_mod(self, q: int) -> int:
        """|G (x) Z/q|."""
        return self.tensor_cyclic(q).torsion_order()

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{q}" for q in self.prime_powers())
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")


def tensor_fp_dimension(g: AbelianGroup, p: int) -> int:
    """dim over F_p of g (x) F_p."""
    return g.free_rank + sum(1 for d in g.invariant_factors if d % p == 0)


# ---------------------------------------------------------------------------
# Smith normal form


def _min_nonzero(a: list[list[int]], t: int, m: int, n: int):
    best = None
    best_val = 0
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            x = row[j]
            if x:
                ax = x if x > 0 else -x
                if best is None or ax < best_val:
                    best, best_val = (i, j), ax
                    if ax == 1:
                        return best
    return best


def _snf(rows: list[list[int]], m: int, n: int, track: bool):
    """In-place SNF of ``rows``.  Returns (u, v) as lists of rows when ``track``."""
    a = rows
    u = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    v = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        if track:
            u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        if track:
            for r in v:
                r[j], r[k] = r[k], r[j]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        rs, rd = a[src], a[dst]
        a[dst] = [x + c * y for x, y in zip(rd, rs)]
        if track:
            u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    t = 0
    while t < min(m, n):
        pos = _min_nonzero(a, t, m, n)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            p = a[t][t]
            # clear column t below the pivot
            moved = False
            for i in range(t + 1, m):
                x = a[i][t]
                if x:
                    add_row(i, t, -(x // p))
                    if a[i][t]:
                        moved = True
            if moved:
                k = min((i for i in range(t + 1, m) if a[i][t]), key=lambda i: abs(a[i][t]))
                if abs(a[k][t]) < abs(p):
                    swap_rows(t, k)
                continue
            # column is clear: column operations only touch row t (and v)
            row = a[t]
            for j in range(t + 1, n):
                x = row[j]
                if x:
                    q = x // p
                    row[j] = x - q * p
                    if track:
                        for r in v:
                            r[j] -= q * r[t]
            k = None
            for j in range(t + 1, n):
                if row[j] and (k is None or abs(row[j]) < abs(row[k])):
                    k = j
            if k is not None:
                swap_cols(t, k)
                continue
            # pivot isolated; enforce divisibility of the remaining block
            bad = None
            for i in range(t + 1, m):
                ri = a[i]
                for j in range(t + 1, n):
                    if ri[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                u[t] = [-x for x in u[t]]
        t += 1
    return u, v


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(d, u, v)`` with ``u @ a @ v == d``, ``d`` diagonal with
    non-negative entries forming a divisibility chain and ``u``, ``v`` unimodular."""
    rows = [r[:] for r in a.rows]
    u, v = _snf(rows, a.nrows, a.ncols, True)
    return IntMatrix(rows, a.ncols), IntMatrix(u, a.nrows), IntMatrix(v, a.ncols)


def invariant_factors(a: IntMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith form (including 1s)."""
    rows = [r[:] for r in a.rows if any(r)]
    m = len(rows)
    if m == 0:
        return []
    _snf(rows, m, a.ncols, False)
    return [rows[i][i] for i in range(min(m, a.ncols)) if rows[i][i]]


def rank(a: IntMatrix) -> int:
    """Rank over Q, by fraction-free elimination."""
    rows = [r[:] for r in a.rows if any(r)]
    n = a.ncols
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        pv = pr[c]
        for i in range(r + 1, len(rows)):
            ri = rows[i]
            x = ri[c]
            rows[i] = [(y * pv - x * z) // prev for y, z in zip(ri, pr)]
        prev = pv
        r += 1
        if r == len(rows):
            break
    return r


def integer_kernel(a: IntMatrix) -> list[list[int]]:
    """Basis (list of column vectors) of the lattice {v in Z^n : a v = 0}."""
    d, _, v = smith_normal_form(a)
    r = sum(1 for x in d.diagonal() if x)
    return [v.column(j) for j in range(r, a.ncols)]


def cokernel(a: IntMatrix) -> AbelianGroup:
    """Z^rows / image(a)."""
    fs = invariant_factors(a)
    return AbelianGroup.from_orders(a.nrows - len(fs), fs)


def _check_segment(d_in: IntMatrix, d_out: IntMatrix):
    if d_out.ncols != d_in.nrows:
        raise DimensionError(
            f"segment does not chain: d_in is {d_in.shape}, d_out is {d_out.shape}")


def cohomology_of_segment(d_in: IntMatrix, d_out: IntMatrix, check: bool = True) -> AbelianGroup:
    """ker(d_out) / im(d_in) for C^{i-1} -> C^i -> C^{i+1} over Z.

    The torsion of ker/im equals the torsion of coker(d_in), because
    C^i / ker(d_out) embeds in the free group C^{i+1}; the free rank is
    dim C^i - rank d_in - rank d_out.
    """
    _check_segment(d_in, d_out)
    if check and d_in.ncols and d_out.nrows and not (d_out @ d_in).is_zero():
        raise CompositionError("d_out @ d_in != 0")
    fs = invariant_factors(d_in)
    r_out = rank(d_out) if d_out.nrows else 0
    free = d_in.nrows - len(fs) - r_out
    return AbelianGroup.from_orders(free, fs)


# ---------------------------------------------------------------------------
# mod-p and mod-p^k arithmetic


def _as_mod_array(a: IntMatrix, p: int) -> np.ndarray:
    if a.nrows == 0 or a.ncols == 0:
        return np.zeros((a.nrows, a.ncols), dtype=np.int64)
    return np.array([[x % p for x in r] for r in a.rows], dtype=np.int64)


def rank_mod_p(a: IntMatrix, p: int) -> int:
    """Rank of ``a`` over F_p (p < 2**31)."""
    m = _as_mod_array(a, p)
    return _rank_mod_array(m, p)


def _rank_mod_array(m: np.ndarray, p: int) -> int:
    m = m.copy()
    nr, nc = m.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        r += 1
    return r


def nullspace_mod_p(a: IntMatrix, p: int) -> list[list[int]]:
    """Basis of {v in F_p^n : a v = 0} as lists of residues."""
    m = _as_mod_array(a, p)
    nr, nc = m.shape
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(nc) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * nc
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = int(-m[row, f] % p)
        basis.append(v)
    return basis


def cohomology_of_segment_mod_p(d_in: IntMatrix, d_out: IntMatrix, field: PrimeField | int) -> int:
    """dim over F_p of ker(d_out mod p) / im(d_in mod p)."""
    p = field.p if isinstance(field, PrimeField) else PrimeField(field).p
    _check_segment(d_in, d_out)
    if d_in.ncols and d_out.nrows and not (d_out @ d_in).mod(p).is_zero():
        raise CompositionError(f"d_out @ d_in != 0 mod {p}")
    r_in = rank_mod_p(d_in, p) if d_in.ncols else 0
    r_out = rank_mod_p(d_out, p) if d_out.nrows else 0
    return d_in.nrows - r_out - r_in


def _valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def local_elementary_divisors(a: IntMatrix, p: int, k: int) -> list[int]:
    """Diagonal of the Smith form of ``a`` over Z/p^k, as exponents 0..k.

    Works directly in the local ring: pivots are chosen of minimal p-adic
    valuation, so the reduction never leaves Z/p^k.  Exponent ``k`` means the
    diagonal entry is zero mod p^k.
    """
    q = p ** k
    m = [[x % q for x in r] for r in a.rows]
    nr, nc = a.nrows, a.ncols
    out = []
    t = 0
    while t < min(nr, nc):
        best, bv = None, k
        for i in range(t, nr):
            for j in range(t, nc):
                x = m[i][j]
                if x:
                    vx = _valuation(x, p)
                    if vx < bv:
                        best, bv = (i, j), vx
                        if vx == 0:
                            break
            if bv == 0:
                break
        if best is None:
            break
        i0, j0 = best
        m[t], m[i0] = m[i0], m[t]
        for r in m:
            r[t], r[j0] = r[j0], r[t]
        unit = m[t][t] // p ** bv
        inv = pow(unit, -1, q)
        m[t] = [(x * inv) % q for x in m[t]]
        piv = p ** bv
        for i in range(t + 1, nr):
            x = m[i][t]
            if x:
                c = x // piv
                m[i] = [(y - c * z) % q for y, z in zip(m[i], m[t])]
        for j in range(t + 1, nc):
            x = m[t][j]
            if x:
                c = x // piv
                for r in m:
                    r[j] = (r[j] - c * r[t]) % q
        out.append(bv)
        t += 1
    out.extend([k] * (min(nr, nc) - len(out)))
    return out


def cokernel_order_mod(a: IntMatrix, p: int, k: int) -> int:
    """|coker(a (x) Z/p^k)| computed directly over Z/p^k."""
    exps = local_elementary_divisors(a, p, k)
    total = sum(exps) + k * (a.nrows - len(exps))
    return p ** total


def kernel_group_mod(a: IntMatrix, q: int) -> AbelianGroup:
    """{v in (Z/q)^n : a v = 0} as an abelian group, via the integral Smith form."""
    d, _, _ = smith_normal_form(a)
    diag = d.diagonal()
    orders = [gcd(x, q) if x else q for x in diag]
    orders += [q] * (a.ncols - len(diag))
    return AbelianGroup.from_orders(0, orders)
