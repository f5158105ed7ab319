"""Exact matrix reduction over the three coefficient regimes.

* ``snf_int`` — Smith normal form over the integers with tracked unimodular
  transforms, giving ranks and torsion invariant factors.
* ``rank_expsum`` — fraction-free (Bareiss) rank over the group ring of
  formal exponential sums.  Distinct rational exponents evaluate to
  linearly independent reals, so the formal rank equals the real one.
* ``nov_reduce`` — valuation-pivoted diagonalization over the Novikov
  ring, with truncated unit inversion and an explicit iteration budget.
* ``rank_int_bruteforce`` — minor-expansion rank oracle for small
  integer matrices, used in tests only.

All functions are pure; matrices are small and dense.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import TooLarge, ZeroElement
from .rings import ExpSum, NovElem


class Matrix:
    """Dense row-major matrix over any ring whose elements support + and *."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = [list(r) for r in entries]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError(f"entry grid does not match {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def from_rows(entries) -> "Matrix":
        entries = [list(r) for r in entries]
        rows = len(entries)
        cols = len(entries[0]) if entries else 0
        return Matrix(rows, cols, entries)

    @staticmethod
    def zero(rows, cols, zero_elem=0) -> "Matrix":
        return Matrix(rows, cols, [[zero_elem] * cols for _ in range(rows)])

    @staticmethod
    def identity(n, one_elem=1, zero_elem=0) -> "Matrix":
        return Matrix(n, n, [[one_elem if i == j else zero_elem for j in range(n)]
                             for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def copy(self) -> "Matrix":
        return Matrix(self.rows, self.cols, self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [[self.entries[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def matmul(self, other: "Matrix", zero_elem=0) -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero_elem
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(self.rows, other.cols, out)

    def map(self, fn) -> "Matrix":
        return Matrix(self.rows, self.cols,
                      [[fn(e) for e in row] for row in self.entries])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.entries!r})"


@dataclass(frozen=True)
class SnfResult:
    U: Matrix
    D: Matrix
    V: Matrix
    rank: int
    invariant_factors: tuple


def snf_int(A: Matrix) -> SnfResult:
    """Smith normal form: U*A*V = D diagonal with d1 | d2 | ..., U,V unimodular."""
    m, n = A.rows, A.cols
    a = [[int(x) for x in row] for row in A.entries]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):  # row_dst += c*row_src
        for j in range(n):
            a[dst][j] += c * a[src][j]
        for j in range(m):
            U[dst][j] += c * U[src][j]

    def add_col(dst, src, c):
        for r in a:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]

    k = 0
    while k < min(m, n):
        # locate smallest-magnitude nonzero entry in the active block
        piv = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(k, piv[0])
        swap_cols(k, piv[1])
        while True:
            p = a[k][k]
            done = True
            for i in range(k + 1, m):
                if a[i][k] != 0:
                    q = a[i][k] // p
                    add_row(i, k, -q)
                    if a[i][k] != 0:
                        swap_rows(k, i)
                        done = False
                        break
            if not done:
                continue
            for j in range(k + 1, n):
                if a[k][j] != 0:
                    q = a[k][j] // p
                    add_col(j, k, -q)
                    if a[k][j] != 0:
                        swap_cols(k, j)
                        done = False
                        break
            if done:
                break
        if a[k][k] < 0:
            negate_row(k)
        # enforce divisibility against the rest of the block
        p = a[k][k]
        offender = None
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if a[i][j] % p != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(k, offender, 1)
            continue
        k += 1

    rank = sum(1 for i in range(min(m, n)) if a[i][i] != 0)
    factors = tuple(a[i][i] for i in range(rank) if a[i][i] > 1)
    return SnfResult(
        U=Matrix(m, m, U),
        D=Matrix(m, n, a),
        V=Matrix(n, n, V),
        rank=rank,
        invariant_factors=factors,
    )


def rank_int_bruteforce(A: Matrix) -> int:
    """Rank by exhaustive minor expansion.  Test oracle only."""
    m, n = A.rows, A.cols
    if m > 6 or n > 6:
        raise TooLarge(f"brute-force oracle limited to 6x6, got {m}x{n}")

    def det(rows, cols):
        if not rows:
            return 1
        i = rows[0]
        total = 0
        for s, j in enumerate(cols):
            x = A.entries[i][j]
            if x:
                rest = cols[:s] + cols[s + 1:]
                total += (-1) ** s * x * det(rows[1:], rest)
        return total

    for r in range(min(m, n), 0, -1):
        for rows in itertools.combinations(range(m), r):
            for cols in itertools.combinations(range(n), r):
                if det(list(rows), list(cols)) != 0:
                    return r
    return 0


_DIV_CAP = 100000


def expsum_divexact(a: ExpSum, b: ExpSum) -> ExpSum:
    """Exact quotient a/b in the group ring; a must be a multiple of b."""
    if b.is_zero:
        raise ZeroElement("division by zero ExpSum")
    quot = ExpSum.zero()
    rem = a
    for _ in range(_DIV_CAP):
        if rem.is_zero:
            return quot
        ca, ea = rem.leading()
        cb, eb = b.leading()
        term = ExpSum.monomial(ca / cb, ea - eb)
        quot = quot + term
        rem = rem - term * b
    raise ArithmeticError("inexact division in expsum_divexact")


def rank_expsum(A: Matrix) -> int:
    """Rank over the fraction field via fraction-free Bareiss elimination."""
    m, n = A.rows, A.cols
    a = [[e if isinstance(e, ExpSum) else ExpSum([(e, 0)]) for e in row]
         for row in A.entries]
    prev = ExpSum.one()
    k = 0
    while k < min(m, n):
        piv = None
        for i in range(k, m):
            for j in range(k, n):
                if not a[i][j].is_zero:
                    piv = (i, j)
                    break
            if piv is not None:
                break
        if piv is None:
            return k
        if piv[0] != k:
            a[k], a[piv[0]] = a[piv[0]], a[k]
        if piv[1] != k:
            for row in a:
                row[k], row[piv[1]] = row[piv[1]], row[k]
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = expsum_divexact(num, prev)
            a[i][k] = ExpSum.zero()
        prev = a[k][k]
        k += 1
    return k


@dataclass(frozen=True)
class NovReduction:
    diagonal: tuple
    unit_count: int
    nonunit_invariants: tuple
    status: str  # "complete" | "stuck"
    U: Matrix
    V: Matrix
    D: Matrix

    @property
    def rank(self) -> int:
        return self.unit_count + len(self.nonunit_invariants)


def _nov_zero(e: NovElem) -> bool:
    """Zero as far as the truncation lets us see."""
    return not e.terms


def nov_reduce(A: Matrix, depth=16, max_iter=10000) -> NovReduction:
    """Diagonalize over the Novikov ring.

    Legal moves: swaps, adding a monomial (or truncated-unit) multiple of a
    row/column to another.  Pivot choice: smallest |top coefficient|, ties
    to the larger top exponent, then lowest (row, col).  Unit pivots are
    cleared with truncated inverses at the given depth; non-unit pivots are
    reduced by integer-Euclidean steps on top coefficients.  Runs that
    exhaust max_iter report status "stuck" instead of raising.
    """
    depth = Fraction(depth)
    m, n = A.rows, A.cols
    a = [[e if isinstance(e, NovElem) else NovElem([(e, 0)]) for e in row]
         for row in A.entries]
    for row in a:
        for e in row:
            if e.floor is not None:
                raise ValueError("nov_reduce requires exact (untruncated) entries")
    U = [[NovElem.one() if i == j else NovElem.zero() for j in range(m)]
         for i in range(m)]
    V = [[NovElem.one() if i == j else NovElem.zero() for j in range(n)]
         for i in range(n)]
    ops = 0
    stuck = False
    # Non-unit clearing on exact entries can descend in exponent forever;
    # once a top exponent falls this far below everything in the input we
    # give up early rather than grind through the whole op budget.
    all_exps = [e for row in a for elt in row for _, e in elt.terms]
    work_floor = (min(all_exps) - depth) if all_exps else -depth

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c: NovElem):  # row_dst += c*row_src
        for j in range(n):
            a[dst][j] = a[dst][j] + c * a[src][j]
        for j in range(m):
            U[dst][j] = U[dst][j] + c * U[src][j]

    def add_col(dst, src, c: NovElem):
        for r in a:
            r[dst] = r[dst] + r[src] * c
        for r in V:
            r[dst] = r[dst] + r[src] * c

    def pick_pivot(k):
        best = None
        for i in range(k, m):
            for j in range(k, n):
                e = a[i][j]
                if _nov_zero(e):
                    continue
                c, x = e.top()
                key = (abs(c), -x, i, j)
                if best is None or key < best[0]:
                    best = (key, i, j)
        return None if best is None else (best[1], best[2])

    k = 0
    while k < min(m, n) and not stuck:
        piv = pick_pivot(k)
        if piv is None:
            break
        if piv[0] != k:
            swap_rows(k, piv[0])
        if piv[1] != k:
            swap_cols(k, piv[1])
        pc, px = a[k][k].top()
        if abs(pc) == 1:
            inv = a[k][k].invert(depth)
            for i in range(k + 1, m):
                if not _nov_zero(a[i][k]):
                    add_row(i, k, -(a[i][k] * inv))
                    ops += 1
                    if ops > max_iter:
                        stuck = True
                        break
            if not stuck:
                for j in range(k + 1, n):
                    if not _nov_zero(a[k][j]):
                        add_col(j, k, -(inv * a[k][j]))
                        ops += 1
                        if ops > max_iter:
                            stuck = True
                            break
            if not stuck:
                k += 1
            continue
        # Non-unit pivot: Euclidean monomial steps on the top coefficients.
        progressed = False
        restart = False
        for (i, j, is_row) in [(i, k, True) for i in range(k + 1, m)] + \
                              [(k, j, False) for j in range(k + 1, n)]:
            while not _nov_zero(a[i][j]):
                c, x = a[i][j].top()
                if x < work_floor:
                    stuck = True
                    break
                q = c // pc
                if q == 0:
                    # top coefficient now smaller than the pivot's: re-pivot
                    restart = True
                    break
                mono = NovElem.monomial(-q, x - px)
                if is_row:
                    add_row(i, k, mono)
                else:
                    add_col(j, k, mono)
                progressed = True
                ops += 1
                if ops > max_iter:
                    stuck = True
                    break
            if stuck or restart:
                break
        if stuck:
            break
        if restart or progressed:
            continue  # re-select pivot at the same k
        k += 1

    diag = tuple(a[i][i] for i in range(min(m, n)))
    unit_count = 0
    nonunit = []
    if not stuck:
        # off-diagonal residue anywhere means we did not actually finish
        for i in range(m):
            for j in range(n):
                if i != j and not _nov_zero(a[i][j]):
                    stuck = True
    if not stuck:
        for e in diag:
            if _nov_zero(e):
                continue
            c, x = e.top()
            if abs(c) == 1:
                unit_count += 1
            else:
                # report Nov/|c| only when the entry is (monomial)*(unit),
                # i.e. every coefficient is a multiple of the top one
                if all(ci % c == 0 for ci, _ in e.terms):
                    nonunit.append(abs(c))
                else:
                    stuck = True
                    break
    if not stuck:
        chain = _divisibility_chain(nonunit)
        unit_count += sum(1 for v in chain if v == 1)
        nonunit = [v for v in chain if v > 1]
    return NovReduction(
        diagonal=diag,
        unit_count=unit_count,
        nonunit_invariants=tuple(nonunit) if not stuck else (),
        status="stuck" if stuck else "complete",
        U=Matrix(m, m, U),
        V=Matrix(n, n, V),
        D=Matrix(m, n, a),
    )


def _divisibility_chain(values):
    """Normalize cyclic-module orders so d1 | d2 | ... (gcd/lcm fixpoint).

    Keeps the count: a coprime pair (2,3) becomes (1,6), and the 1 is a
    unit (rank) contribution, not a dropped module."""
    vals = sorted(int(v) for v in values)
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                g = gcd(vals[i], vals[j])
                l = vals[i] * vals[j] // g
                if (vals[i], vals[j]) != (g, l):
                    vals[i], vals[j] = g, l
                    changed = True
        vals = sorted(vals)
    return vals
