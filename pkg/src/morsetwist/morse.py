"""Morse data: critical points, signed flow lines, local systems, and the
twisted boundary assembly.

A ``MorseDatum`` is the combinatorial shadow of a Morse-Smale pair: indexed
critical points plus signed flow lines.  Each flow line carries a vector of
exact rational periods, one per declared basis 1-form, measured along the
flow direction (index k point -> index k-1 point).  A ``LocalSystem`` turns
those periods (or unit/deck tags) into invertible transports.

Weight conventions, pinned by the catalog oracles:
  * exponential systems multiply by t^{+a} where a = class . periods;
  * Novikov systems multiply by t^{-a} (the series variable counts descent,
    so its integration direction is opposite the exponential one).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .chains import EXPSUM, INT, NOV, ChainComplex, dualize
from .errors import (
    Disconnected,
    MissingDeckTag,
    MissingUnitTag,
    NonUnit,
    ParseError,
    UnknownGroupElement,
)
from .linalg import Matrix
from .rings import ExpSum, NovElem

TRIVIAL = "TRIVIAL"
UNIT_REP = "UNIT_REP"
EXP = "EXP"
NOV_SYS = "NOV"


@dataclass(frozen=True)
class CriticalPoint:
    id: str
    index: int


@dataclass(frozen=True)
class FlowLine:
    frm: str                 # index-k critical point (the source of the flow)
    to: str                  # index-(k-1) critical point
    sign: int                # epsilon(nu)
    periods: tuple = ()      # one exact rational per declared basis form
    unit_tag: int | None = None
    deck_tag: str | None = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"flow sign must be +-1, got {self.sign}")
        object.__setattr__(self, "periods",
                           tuple(Fraction(p) for p in self.periods))


@dataclass(frozen=True)
class DeckGroup:
    elements: tuple
    table: dict  # (a, b) -> a*b

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        for a in self.elements:
            for b in self.elements:
                if (a, b) not in self.table:
                    raise ValueError(f"multiplication table missing ({a},{b})")

    def mul(self, a, b):
        try:
            return self.table[(a, b)]
        except KeyError:
            raise UnknownGroupElement(f"({a},{b}) not in the deck group") from None

    @property
    def identity(self):
        for e in self.elements:
            if all(self.mul(e, x) == x and self.mul(x, e) == x
                   for x in self.elements):
                return e
        raise ValueError("deck group has no identity element")


@dataclass(frozen=True)
class MorseDatum:
    name: str
    dimension: int
    basis_forms: tuple
    points: tuple
    flows: tuple
    deck_group: DeckGroup | None = None

    def __post_init__(self):
        object.__setattr__(self, "basis_forms", tuple(self.basis_forms))
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "flows", tuple(self.flows))
        ids = [p.id for p in self.points]
        if len(set(ids)) != len(ids):
            raise ValueError("critical point ids must be unique")
        index = {p.id: p.index for p in self.points}
        for p in self.points:
            if not 0 <= p.index <= self.dimension:
                raise ValueError(f"index of {p.id} out of range 0..{self.dimension}")
        for f in self.flows:
            if f.frm not in index or f.to not in index:
                raise ValueError(f"flow {f.frm}->{f.to} references unknown points")
            if index[f.frm] != index[f.to] + 1:
                raise ValueError(
                    f"flow {f.frm}->{f.to} must drop the index by exactly 1")
            if len(f.periods) != len(self.basis_forms):
                raise ValueError(
                    f"flow {f.frm}->{f.to} carries {len(f.periods)} periods "
                    f"for {len(self.basis_forms)} basis forms")

    def point(self, pid) -> CriticalPoint:
        for p in self.points:
            if p.id == pid:
                return p
        raise KeyError(pid)

    def points_of_index(self, k):
        return tuple(p for p in self.points if p.index == k)


@dataclass(frozen=True)
class LocalSystem:
    flavor: str
    class_vector: tuple = ()

    def __post_init__(self):
        if self.flavor not in (TRIVIAL, UNIT_REP, EXP, NOV_SYS):
            raise ValueError(f"unknown system flavor {self.flavor!r}")
        object.__setattr__(self, "class_vector",
                           tuple(Fraction(c) for c in self.class_vector))

    @staticmethod
    def trivial() -> "LocalSystem":
        return LocalSystem(TRIVIAL)

    @staticmethod
    def unit_rep() -> "LocalSystem":
        return LocalSystem(UNIT_REP)

    @staticmethod
    def exp(class_vector) -> "LocalSystem":
        return LocalSystem(EXP, tuple(class_vector))

    @staticmethod
    def nov(class_vector) -> "LocalSystem":
        return LocalSystem(NOV_SYS, tuple(class_vector))

    @property
    def regime(self) -> str:
        return {TRIVIAL: INT, UNIT_REP: INT, EXP: EXPSUM, NOV_SYS: NOV}[self.flavor]

    def check_compatible(self, d: MorseDatum):
        if self.flavor in (EXP, NOV_SYS):
            if len(self.class_vector) != len(d.basis_forms):
                raise ParseError(
                    f"class vector has {len(self.class_vector)} entries for "
                    f"{len(d.basis_forms)} basis forms")
        if self.flavor == UNIT_REP:
            for f in d.flows:
                if f.unit_tag is None:
                    raise MissingUnitTag(f"flow {f.frm}->{f.to} has no unit tag")
                if f.unit_tag not in (1, -1):
                    raise NonUnit(f"unit tag {f.unit_tag} on {f.frm}->{f.to}")


def flow_period(f: FlowLine, class_vector) -> Fraction:
    return sum((c * p for c, p in zip(class_vector, f.periods)), Fraction(0))


def flow_weight(f: FlowLine, sys: LocalSystem):
    """Transport of the given flow line under the system (sign excluded)."""
    if sys.flavor == TRIVIAL:
        return 1
    if sys.flavor == UNIT_REP:
        if f.unit_tag is None:
            raise MissingUnitTag(f"flow {f.frm}->{f.to} has no unit tag")
        if f.unit_tag not in (1, -1):
            raise NonUnit(f"unit tag {f.unit_tag} on {f.frm}->{f.to}")
        return f.unit_tag
    a = flow_period(f, sys.class_vector)
    if sys.flavor == EXP:
        return ExpSum.monomial(1, a)
    return NovElem.monomial(1, -a)


def build_complex(d: MorseDatum, sys: LocalSystem) -> ChainComplex:
    """Twisted boundary assembly: entry (p, q) = sum of sign * weight over
    the flow lines from q down to p."""
    sys.check_compatible(d)
    regime = sys.regime
    zero = {INT: 0, EXPSUM: ExpSum.zero(), NOV: NovElem.zero()}[regime]
    gens = tuple(tuple(p.id for p in d.points_of_index(k))
                 for k in range(d.dimension + 1))
    pos = {}
    for k, layer in enumerate(gens):
        for i, pid in enumerate(layer):
            pos[pid] = (k, i)
    mats = []
    for k in range(1, d.dimension + 1):
        rows, cols = len(gens[k - 1]), len(gens[k])
        grid = [[zero for _ in range(cols)] for _ in range(rows)]
        mats.append(grid)
    for f in d.flows:
        k, col = pos[f.frm]
        _, row = pos[f.to]
        grid = mats[k - 1]
        grid[row][col] = grid[row][col] + f.sign * flow_weight(f, sys)
    diffs = tuple(Matrix(len(gens[k - 1]), len(gens[k]), mats[k - 1])
                  for k in range(1, d.dimension + 1))
    return ChainComplex(regime=regime, generators=gens, diffs=diffs)


def build_cochain(d: MorseDatum, sys: LocalSystem) -> ChainComplex:
    return dualize(build_complex(d, sys))


def gauge_transform(d: MorseDatum, g: dict) -> MorseDatum:
    """Conjugate every unit tag by a per-point unit: tag' = g(p)*tag*g(q)^-1.

    Units are +-1 (self-inverse), so this is g(to)*tag*g(frm)."""
    for pid in g:
        if g[pid] not in (1, -1):
            raise NonUnit(f"gauge value {g[pid]} at {pid}")
    def gv(pid):
        return g.get(pid, 1)
    flows = tuple(
        replace(f, unit_tag=None if f.unit_tag is None
                else gv(f.to) * f.unit_tag * gv(f.frm))
        for f in d.flows)
    return replace(d, flows=flows)


def potential_shift(d: MorseDatum, h: dict) -> MorseDatum:
    """Shift periods by a per-point rational potential vector: a flow q->p
    gains h(q) - h(p) componentwise.  Loop periods are unchanged, so every
    homology summary must be too."""
    nforms = len(d.basis_forms)
    def hv(pid):
        v = h.get(pid)
        if v is None:
            return (Fraction(0),) * nforms
        return tuple(Fraction(x) for x in v)
    flows = tuple(
        replace(f, periods=tuple(p + a - b for p, a, b
                                 in zip(f.periods, hv(f.frm), hv(f.to))))
        for f in d.flows)
    return replace(d, flows=flows)


def rescale_datum(d: MorseDatum, s) -> MorseDatum:
    """Multiply every period by a positive rational (1-form rescaling)."""
    s = Fraction(s)
    if s <= 0:
        raise ValueError("scale must be positive")
    flows = tuple(replace(f, periods=tuple(p * s for p in f.periods))
                  for f in d.flows)
    return replace(d, flows=flows)


def lift_cover(d: MorseDatum, group: DeckGroup | None = None) -> MorseDatum:
    """Finite-cover lift: points become (point, deck element); a flow q->p
    tagged g lifts to (q,gamma) -> (p, gamma*g) with the same sign.  The
    output is untwisted (no tags, no periods)."""
    group = group or d.deck_group
    if group is None:
        raise MissingDeckTag("no deck group declared")
    for f in d.flows:
        if f.deck_tag is None:
            raise MissingDeckTag(f"flow {f.frm}->{f.to} has no deck tag")
        if f.deck_tag not in group.elements:
            raise UnknownGroupElement(f"deck tag {f.deck_tag!r} not in the group")
    points = tuple(CriticalPoint(id=f"{p.id}@{g}", index=p.index)
                   for p in d.points for g in group.elements)
    flows = []
    for f in d.flows:
        for g in group.elements:
            flows.append(FlowLine(
                frm=f"{f.frm}@{g}",
                to=f"{f.to}@{group.mul(g, f.deck_tag)}",
                sign=f.sign,
            ))
    return MorseDatum(name=f"{d.name}-lift", dimension=d.dimension,
                      basis_forms=(), points=points, flows=tuple(flows))


# --- loop detection and the degree-zero closed forms ----------------------

def _loop_data(d: MorseDatum, sys: LocalSystem | None):
    """Loop units detectable from the datum.

    Returns (connected, loops) where each loop is a pair
    (period_vector, unit_factor): period_vector is the componentwise period
    around the loop, unit_factor the product of +-1 unit tags (1 when tags
    are absent).  Sources: pairs of parallel flow lines anywhere, plus
    independent cycles of the index <= 1 skeleton."""
    nforms = len(d.basis_forms)
    zero_vec = (Fraction(0),) * nforms
    loops = []

    def vec_sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    def tag(f):
        return f.unit_tag if f.unit_tag is not None else 1

    # parallel flow lines: up one, down the other
    by_pair: dict = {}
    for f in d.flows:
        by_pair.setdefault((f.frm, f.to), []).append(f)
    for fams in by_pair.values():
        base = fams[0]
        for other in fams[1:]:
            loops.append((vec_sub(other.periods, base.periods),
                          tag(other) * tag(base)))

    # 1-skeleton cycles: index-0 points joined through index-1 points
    verts = [p.id for p in d.points_of_index(0)]
    edges = []  # (u, v, period u->v, unit u->v)
    for q in d.points_of_index(1):
        down = [f for f in d.flows if f.frm == q.id]
        for i in range(len(down)):
            for j in range(i + 1, len(down)):
                f1, f2 = down[i], down[j]
                # reversed f1 then f2: transport from to(f1) to to(f2)
                edges.append((f1.to, f2.to,
                              vec_sub(f2.periods, f1.periods),
                              tag(f1) * tag(f2)))
    pot = {}
    if verts:
        pot[verts[0]] = (zero_vec, 1)
        frontier = [verts[0]]
        adj: dict = {}
        for idx, (u, v, pv, un) in enumerate(edges):
            adj.setdefault(u, []).append((v, pv, un))
            adj.setdefault(v, []).append((u, tuple(-x for x in pv), un))
        while frontier:
            u = frontier.pop()
            for v, pv, un in adj.get(u, []):
                if v not in pot:
                    base_pv, base_un = pot[u]
                    pot[v] = (tuple(a + b for a, b in zip(base_pv, pv)),
                              base_un * un)
                    frontier.append(v)
        for u, v, pv, un in edges:
            if u in pot and v in pot:
                pu, uu = pot[u]
                pvv, uv = pot[v]
                loop_pv = tuple(a + b - c for a, b, c in zip(pu, pv, pvv))
                loops.append((loop_pv, uu * un * uv))
    connected = all(v in pot for v in verts) if verts else True
    return connected, loops


def loop_periods(d: MorseDatum, class_vector):
    """Scalar periods (class . loop) over all detected loops."""
    _, loops = _loop_data(d, None)
    cv = tuple(Fraction(c) for c in class_vector)
    return [sum((c * p for c, p in zip(cv, pv)), Fraction(0)) for pv, _ in loops]


def is_simple(d: MorseDatum, sys: LocalSystem) -> bool:
    """False when some detected loop has nontrivial holonomy under sys.

    Sound but incomplete: only parallel-line and 1-skeleton loops are seen."""
    sys.check_compatible(d)
    _, loops = _loop_data(d, sys)
    for pv, unit in loops:
        if sys.flavor == UNIT_REP and unit != 1:
            return False
        if sys.flavor in (EXP, NOV_SYS):
            a = sum((c * p for c, p in zip(sys.class_vector, pv)), Fraction(0))
            if a != 0:
                return False
    return True


def _check_connected(d: MorseDatum):
    connected, loops = _loop_data(d, None)
    if not connected:
        raise Disconnected(f"index <= 1 skeleton of {d.name} is not connected")
    return loops


def h0_quotient(d: MorseDatum, sys: LocalSystem) -> str:
    """H_0 as fiber modulo the subgroup generated by (1 - loop unit)."""
    sys.check_compatible(d)
    loops = _check_connected(d)
    if sys.flavor == TRIVIAL:
        return "Z"
    if sys.flavor == UNIT_REP:
        # fiber Z; 1 - (-1) = 2 whenever some loop unit is -1
        if any(unit == -1 for _, unit in loops):
            return "Z/2"
        return "Z"
    nontrivial = any(
        sum((c * p for c, p in zip(sys.class_vector, pv)), Fraction(0)) != 0
        for pv, _ in loops)
    if nontrivial:
        # 1 - t^c is invertible (field fraction / Novikov unit): quotient dies
        return "0"
    return "R" if sys.flavor == EXP else "Nov"


def h0_cohomology(d: MorseDatum, sys: LocalSystem) -> str:
    """H^0 as the subgroup of the fiber fixed by every loop unit."""
    sys.check_compatible(d)
    loops = _check_connected(d)
    if sys.flavor == TRIVIAL:
        return "Z"
    if sys.flavor == UNIT_REP:
        if any(unit == -1 for _, unit in loops):
            return "0"  # fixed points of s -> -s on Z
        return "Z"
    nontrivial = any(
        sum((c * p for c, p in zip(sys.class_vector, pv)), Fraction(0)) != 0
        for pv, _ in loops)
    if nontrivial:
        return "0"
    return "R" if sys.flavor == EXP else "Nov"
