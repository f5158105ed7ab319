"""Regular CW complexes: validation, twisted cellular boundaries,
simplicial ingestion, and the correspondence with Morse data.

Regularity is what makes a twisted cellular boundary well defined: every
incidence number is +-1, each pair of cells two dimensions apart has
exactly two cells between them, and each 1-cell has two distinct endpoint
vertices.  Holonomy (periods / unit tags) lives on the incidence records,
one transport per incident pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction

from .chains import ChainComplex, validate_complex
from .errors import MalformedFacets, MissingHolonomy, NotRegular
from .linalg import Matrix
from .morse import CriticalPoint, FlowLine, LocalSystem, MorseDatum, build_complex


@dataclass(frozen=True)
class Incidence:
    upper: str           # the k-cell
    lower: str           # the (k-1)-cell on its boundary
    incidence: int       # [upper : lower], must be +-1
    periods: tuple = ()
    unit_tag: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "periods",
                           tuple(Fraction(p) for p in self.periods))


@dataclass(frozen=True)
class RegularCW:
    name: str
    dimension: int
    cells: tuple          # per degree: tuple of cell labels
    incidences: tuple
    basis_forms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(tuple(c) for c in self.cells))
        object.__setattr__(self, "incidences", tuple(self.incidences))
        object.__setattr__(self, "basis_forms", tuple(self.basis_forms))
        if len(self.cells) != self.dimension + 1:
            raise ValueError("need one cell layer per degree 0..dimension")
        seen = set()
        for layer in self.cells:
            for c in layer:
                if c in seen:
                    raise ValueError(f"duplicate cell label {c!r}")
                seen.add(c)

    def degree_of(self, label) -> int:
        for k, layer in enumerate(self.cells):
            if label in layer:
                return k
        raise KeyError(label)


@dataclass(frozen=True)
class CWViolation:
    kind: str
    cells: tuple
    detail: str

    def describe(self) -> str:
        return f"{self.kind} at {self.cells}: {self.detail}"


def validate_regular(cw: RegularCW):
    """None if regular, else the first violation found."""
    deg = {}
    for k, layer in enumerate(cw.cells):
        for c in layer:
            deg[c] = k
    below: dict = {}
    for inc in cw.incidences:
        if inc.upper not in deg or inc.lower not in deg:
            return CWViolation("unknown-cell", (inc.upper, inc.lower),
                              "incidence references an undeclared cell")
        if deg[inc.upper] != deg[inc.lower] + 1:
            return CWViolation("degree-gap", (inc.upper, inc.lower),
                              "incidence must connect adjacent degrees")
        if inc.incidence not in (1, -1):
            return CWViolation("incidence-value", (inc.upper, inc.lower),
                              f"incidence number {inc.incidence} is not +-1")
        below.setdefault(inc.upper, []).append(inc)
    # each 1-cell must have two distinct endpoints with opposite signs
    for e in cw.cells[1] if cw.dimension >= 1 else ():
        faces = below.get(e, [])
        ends = [(i.lower, i.incidence) for i in faces]
        if len(ends) != 2 or len({v for v, _ in ends}) != 2 \
                or sorted(s for _, s in ends) != [-1, 1]:
            return CWViolation("edge-endpoints", (e,),
                              f"1-cell must have two distinct endpoint "
                              f"vertices with signs -1,+1; got {ends}")
    # diamond property: exactly two intermediate cells per codimension-2 pair
    for top, faces in below.items():
        count: dict = {}
        for f in faces:
            for g in below.get(f.lower, []):
                count[g.lower] = count.get(g.lower, 0) + 1
        for bottom, c in count.items():
            if c != 2:
                return CWViolation("diamond", (bottom, top),
                                   f"{c} intermediate cells, expected 2")
    # signed incidence matrices must compose to zero
    cpx = steenrod_boundary(cw, LocalSystem.trivial(), _skip_validation=True)
    bad = validate_complex(cpx)
    if bad is not None:
        return CWViolation("boundary-squared", (), bad.describe())
    return None


def steenrod_boundary(cw: RegularCW, sys: LocalSystem,
                      _skip_validation: bool = False) -> ChainComplex:
    """Twisted cellular boundary: entry (lower, upper) = incidence number
    times the system weight of the incidence's holonomy."""
    if not _skip_validation:
        bad = validate_regular(cw)
        if bad is not None:
            raise NotRegular(bad.describe())
    datum = cw_to_morse(cw, _skip_validation=True)
    try:
        return build_complex(datum, sys)
    except Exception as exc:
        from .errors import MissingUnitTag
        if isinstance(exc, MissingUnitTag):
            raise MissingHolonomy(str(exc)) from exc
        raise


def cw_to_morse(cw: RegularCW, _skip_validation: bool = False) -> MorseDatum:
    """One critical point per cell (index = dimension), one flow line per
    incidence (sign = incidence number), holonomy copied across."""
    if not _skip_validation:
        bad = validate_regular(cw)
        if bad is not None:
            raise NotRegular(bad.describe())
    points = tuple(CriticalPoint(id=c, index=k)
                   for k, layer in enumerate(cw.cells) for c in layer)
    nforms = len(cw.basis_forms)
    flows = tuple(
        FlowLine(frm=i.upper, to=i.lower, sign=i.incidence,
                 periods=i.periods if i.periods else (Fraction(0),) * nforms,
                 unit_tag=i.unit_tag)
        for i in cw.incidences)
    return MorseDatum(name=cw.name, dimension=cw.dimension,
                      basis_forms=cw.basis_forms, points=points, flows=flows)


@dataclass(frozen=True)
class FacetList:
    n_vertices: int
    facets: tuple

    def __post_init__(self):
        facets = tuple(tuple(int(v) for v in f) for f in self.facets)
        object.__setattr__(self, "facets", facets)
        if not facets:
            raise MalformedFacets("no facets given")
        size = len(facets[0])
        seen = set()
        for f in facets:
            if len(f) != size:
                raise MalformedFacets("facets must all have the same dimension")
            if len(set(f)) != len(f):
                raise MalformedFacets(f"facet {f} repeats a vertex")
            if any(not 0 <= v < self.n_vertices for v in f):
                raise MalformedFacets(f"facet {f} has a vertex out of range")
            key = tuple(sorted(f))
            if key in seen:
                raise MalformedFacets(f"duplicate facet {f}")
            seen.add(key)


def _cell_label(simplex) -> str:
    return ".".join(str(v) for v in simplex)


def from_simplicial(fl: FacetList) -> RegularCW:
    """All faces of the facets, with the alternating-sign simplicial boundary
    under sorted-vertex orientation."""
    top = len(fl.facets[0]) - 1
    faces: list[set] = [set() for _ in range(top + 1)]
    for f in fl.facets:
        s = tuple(sorted(f))
        for k in range(len(s)):
            for sub in itertools.combinations(s, k + 1):
                faces[k].add(sub)
    cells = tuple(tuple(_cell_label(s) for s in sorted(layer))
                  for layer in faces)
    incidences = []
    for k in range(1, top + 1):
        for s in sorted(faces[k]):
            for i in range(len(s)):
                facet = s[:i] + s[i + 1:]
                incidences.append(Incidence(
                    upper=_cell_label(s), lower=_cell_label(facet),
                    incidence=(-1) ** i))
    return RegularCW(name="simplicial", dimension=top, cells=cells,
                     incidences=tuple(incidences))
