"""File formats: the JSON envelope for Morse data and CW complexes, and the
line-oriented facet list for triangulations.

Rationals are serialized as "p/q" strings (or "n" when integral) so files
stay exact.  Unknown fields are rejected rather than ignored: silently
dropping a typo'd "period" key would change the mathematics.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cw import FacetList, Incidence, RegularCW
from .errors import MalformedFacets, ParseError
from .morse import CriticalPoint, DeckGroup, FlowLine, MorseDatum
from .rings import parse_rational


def _rat_out(x: Fraction) -> str:
    return str(x)


def _check_fields(obj: dict, required, optional, where):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    for k in required:
        if k not in obj:
            raise ParseError(f"{where}: missing field {k!r}")
    allowed = set(required) | set(optional)
    for k in obj:
        if k not in allowed:
            raise ParseError(f"{where}: unknown field {k!r}")


def datum_to_dict(d: MorseDatum) -> dict:
    out = {
        "name": d.name,
        "dimension": d.dimension,
        "basis_forms": list(d.basis_forms),
        "points": [{"id": p.id, "index": p.index} for p in d.points],
        "flows": [],
    }
    for f in d.flows:
        rec = {"from": f.frm, "to": f.to, "sign": f.sign,
               "periods": [_rat_out(p) for p in f.periods]}
        if f.unit_tag is not None:
            rec["unit_tag"] = f.unit_tag
        if f.deck_tag is not None:
            rec["deck_tag"] = f.deck_tag
        out["flows"].append(rec)
    if d.deck_group is not None:
        out["deck_group"] = {
            "elements": list(d.deck_group.elements),
            "table": {a: {b: d.deck_group.table[(a, b)]
                          for b in d.deck_group.elements}
                      for a in d.deck_group.elements},
        }
    return out


def datum_from_dict(obj: dict) -> MorseDatum:
    _check_fields(obj, ["name", "dimension", "basis_forms", "points", "flows"],
                  ["deck_group"], "datum")
    points = []
    for i, p in enumerate(obj["points"]):
        _check_fields(p, ["id", "index"], [], f"points[{i}]")
        points.append(CriticalPoint(id=str(p["id"]), index=int(p["index"])))
    flows = []
    for i, f in enumerate(obj["flows"]):
        _check_fields(f, ["from", "to", "sign", "periods"],
                      ["unit_tag", "deck_tag"], f"flows[{i}]")
        flows.append(FlowLine(
            frm=str(f["from"]), to=str(f["to"]), sign=int(f["sign"]),
            periods=tuple(parse_rational(p) for p in f["periods"]),
            unit_tag=None if "unit_tag" not in f else int(f["unit_tag"]),
            deck_tag=None if "deck_tag" not in f else str(f["deck_tag"]),
        ))
    deck = None
    if "deck_group" in obj:
        g = obj["deck_group"]
        _check_fields(g, ["elements", "table"], [], "deck_group")
        elements = tuple(str(e) for e in g["elements"])
        table = {}
        for a, row in g["table"].items():
            for b, c in row.items():
                table[(str(a), str(b))] = str(c)
        deck = DeckGroup(elements=elements, table=table)
    try:
        return MorseDatum(
            name=str(obj["name"]), dimension=int(obj["dimension"]),
            basis_forms=tuple(str(b) for b in obj["basis_forms"]),
            points=tuple(points), flows=tuple(flows), deck_group=deck)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def cw_to_dict(cw: RegularCW) -> dict:
    out = {
        "name": cw.name,
        "dimension": cw.dimension,
        "basis_forms": list(cw.basis_forms),
        "cells": [list(layer) for layer in cw.cells],
        "incidences": [],
    }
    for i in cw.incidences:
        rec = {"upper": i.upper, "lower": i.lower, "incidence": i.incidence}
        if i.periods:
            rec["periods"] = [_rat_out(p) for p in i.periods]
        if i.unit_tag is not None:
            rec["unit_tag"] = i.unit_tag
        out["incidences"].append(rec)
    return out


def cw_from_dict(obj: dict) -> RegularCW:
    _check_fields(obj, ["name", "dimension", "cells", "incidences"],
                  ["basis_forms"], "cw")
    incidences = []
    for i, rec in enumerate(obj["incidences"]):
        _check_fields(rec, ["upper", "lower", "incidence"],
                      ["periods", "unit_tag"], f"incidences[{i}]")
        incidences.append(Incidence(
            upper=str(rec["upper"]), lower=str(rec["lower"]),
            incidence=int(rec["incidence"]),
            periods=tuple(parse_rational(p) for p in rec.get("periods", [])),
            unit_tag=None if "unit_tag" not in rec else int(rec["unit_tag"]),
        ))
    try:
        return RegularCW(
            name=str(obj["name"]), dimension=int(obj["dimension"]),
            cells=tuple(tuple(str(c) for c in layer)
                        for layer in obj["cells"]),
            incidences=tuple(incidences),
            basis_forms=tuple(str(b) for b in obj.get("basis_forms", [])))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def load_json(text: str):
    """Dispatch on the envelope layout: flows -> MorseDatum, cells -> RegularCW."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    if "flows" in obj:
        return datum_from_dict(obj)
    if "cells" in obj:
        return cw_from_dict(obj)
    raise ParseError("object has neither 'flows' nor 'cells'")


def dump_json(value) -> str:
    if isinstance(value, MorseDatum):
        obj = datum_to_dict(value)
    elif isinstance(value, RegularCW):
        obj = cw_to_dict(value)
    else:
        obj = value
    return json.dumps(obj, indent=2) + "\n"


def facets_to_text(fl: FacetList) -> str:
    lines = [f"vertices {fl.n_vertices}"]
    for f in fl.facets:
        lines.append(" ".join(str(v) for v in f))
    return "\n".join(lines) + "\n"


def facets_from_text(text: str) -> FacetList:
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("vertices "):
        raise ParseError("facet file must start with 'vertices N'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ParseError(f"bad vertex count line {lines[0]!r}") from exc
    facets = []
    for ln in lines[1:]:
        try:
            facets.append(tuple(int(v) for v in ln.split()))
        except ValueError as exc:
            raise ParseError(f"bad facet line {ln!r}") from exc
    return FacetList(n_vertices=n, facets=tuple(facets))
