"""Graded chain complexes over the three coefficient regimes.

A ``ChainComplex`` stores generator labels per degree and one boundary
matrix per composable pair of degrees.  Cochain complexes reuse the same
container with ``ascending=True``: the stored matrices are then the
coboundaries delta_k (rows indexed by degree k+1 generators), and the same
homology engine reports H^k from degree-k data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import Indeterminate, InvalidComplex, NonInvertibleEntry
from .linalg import Matrix, nov_reduce, rank_expsum, snf_int
from .rings import ExpSum, NovElem

INT = "INT"
EXPSUM = "EXPSUM"
NOV = "NOV"

_ZEROS = {INT: 0, EXPSUM: ExpSum.zero(), NOV: NovElem.zero()}


def regime_zero(regime):
    return _ZEROS[regime]


@dataclass(frozen=True)
class ChainComplex:
    """Free graded modules with boundary (or coboundary) matrices.

    Descending (default): diffs[k] maps degree k+1 to degree k, so
    diffs[k] has |generators[k]| rows and |generators[k+1]| columns.
    Ascending: diffs[k] maps degree k to degree k+1 (transposed shape).
    """

    regime: str
    generators: tuple  # per degree: tuple of labels
    diffs: tuple       # len = len(generators) - 1, Matrix each
    ascending: bool = False

    def __post_init__(self):
        if self.regime not in _ZEROS:
            raise ValueError(f"unknown regime {self.regime!r}")
        gens = tuple(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "diffs", tuple(self.diffs))
        if len(self.diffs) != max(len(gens) - 1, 0):
            raise ValueError("need exactly one matrix per adjacent degree pair")
        for k, d in enumerate(self.diffs):
            lo, hi = len(gens[k]), len(gens[k + 1])
            want = (hi, lo) if self.ascending else (lo, hi)
            if (d.rows, d.cols) != want:
                raise ValueError(
                    f"matrix {k} is {d.rows}x{d.cols}, expected {want[0]}x{want[1]}")

    @property
    def dimension(self) -> int:
        return len(self.generators) - 1

    def counts(self):
        return tuple(len(g) for g in self.generators)

    def zero(self):
        return regime_zero(self.regime)


@dataclass(frozen=True)
class Violation:
    degree: int
    row: int
    col: int
    value: object

    def describe(self) -> str:
        return (f"d.d != 0: composite through degree {self.degree} has entry "
                f"({self.row},{self.col}) = {self.value}")


def validate_complex(C: ChainComplex):
    """None if every composable pair of matrices multiplies to zero,
    else the first Violation found."""
    z = C.zero()
    for k in range(len(C.diffs) - 1):
        if C.ascending:
            comp = C.diffs[k + 1].matmul(C.diffs[k], z)
        else:
            comp = C.diffs[k].matmul(C.diffs[k + 1], z)
        for i in range(comp.rows):
            for j in range(comp.cols):
                e = comp.entries[i][j]
                nonzero = bool(e.terms) if isinstance(e, (ExpSum, NovElem)) else e != 0
                if nonzero:
                    return Violation(degree=k + 1, row=i, col=j, value=e)
    return None


@dataclass(frozen=True)
class DegreeSummary:
    betti: int
    torsion: tuple = ()   # invariant factors (INT) / cyclic orders (NOV)
    status: str = "complete"

    @property
    def torsion_generators(self) -> int:
        return len(self.torsion)


@dataclass(frozen=True)
class HomologySummary:
    regime: str
    degrees: tuple  # DegreeSummary per degree 0..m

    @property
    def betti(self):
        return tuple(d.betti for d in self.degrees)

    def torsion(self, k):
        return self.degrees[k].torsion

    @property
    def complete(self) -> bool:
        return all(d.status == "complete" for d in self.degrees)


def _matrix_data(C: ChainComplex, depth, max_iter):
    """Per stored matrix: (rank, torsion invariants, status)."""
    out = []
    for d in C.diffs:
        if C.regime == INT:
            s = snf_int(d)
            out.append((s.rank, s.invariant_factors, "complete"))
        elif C.regime == EXPSUM:
            out.append((rank_expsum(d), (), "complete"))
        else:
            r = nov_reduce(d, depth=depth, max_iter=max_iter)
            out.append((r.rank, r.nonunit_invariants, r.status))
    return out


def homology(C: ChainComplex, depth=16, max_iter=10000) -> HomologySummary:
    """Betti ranks plus torsion per degree; NOV stuck reductions are flagged,
    not guessed."""
    bad = validate_complex(C)
    if bad is not None:
        raise InvalidComplex(bad.describe())
    data = _matrix_data(C, depth, max_iter)
    counts = C.counts()
    degrees = []
    for k in range(len(counts)):
        # both orientations: the two matrices touching degree k are
        # diffs[k-1] and diffs[k]; rank of a map equals rank of its
        # transpose, so the same formula applies ascending or descending
        below = data[k - 1] if k - 1 >= 0 else (0, (), "complete")
        above = data[k] if k < len(data) else (0, (), "complete")
        betti = counts[k] - below[0] - above[0]
        # torsion at degree k comes from the map INTO degree k
        if C.ascending:
            torsion = below[1] if k - 1 >= 0 else ()
        else:
            torsion = above[1] if k < len(data) else ()
        status = "complete"
        if below[2] == "stuck" or above[2] == "stuck":
            status = "stuck"
            betti = max(betti, 0)
        degrees.append(DegreeSummary(betti=betti, torsion=tuple(torsion),
                                     status=status))
    return HomologySummary(regime=C.regime, degrees=tuple(degrees))


def _invert_entry(e, regime):
    if regime == INT:
        return e  # entries are sums of +-1 transports; +-1 are self-inverse
    if isinstance(e, (ExpSum, NovElem)):
        try:
            return e.invert_exponents()
        except Exception as exc:
            raise NonInvertibleEntry(str(exc)) from exc
    return e


def dualize(C: ChainComplex) -> ChainComplex:
    """Cochain complex: transpose each boundary and invert every transport.

    For formal-exponent regimes inverting a transport negates its exponent;
    the flow-line signs are untouched.  The result is stored ascending.
    """
    if C.ascending:
        raise ValueError("dualize expects a descending (chain) complex")
    duals = []
    for d in C.diffs:
        duals.append(d.transpose().map(lambda e: _invert_entry(e, C.regime)))
    return ChainComplex(regime=C.regime, generators=C.generators,
                        diffs=tuple(duals), ascending=True)


def euler_cells(C: ChainComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(C.counts()))


def euler_homology(S: HomologySummary) -> int:
    if not S.complete:
        raise Indeterminate("a degree's reduction is stuck; Euler number unknown")
    return sum((-1) ** k * d.betti for k, d in enumerate(S.degrees))
