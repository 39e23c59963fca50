"""JSON graph documents and report formatting.

A graph document looks like::

    {"n": 3, "edges": [{"u": 0, "v": 1},
                       {"u": 1, "v": 2, "gain": {"re": 0.0, "im": 1.0}},
                       {"u": 0, "v": 2, "gain": {"turns": "1/6"}}]}

``turns`` gains are exact rationals, ``exp(2 pi i p/q)``; they are kept as
such through every transformation that only multiplies, conjugates or
negates them, and written back in lowest terms. A missing gain means 1.
"""
from __future__ import annotations

import hashlib
import json
import math
from fractions import Fraction

import numpy as np

from .core import ComplexUnit, GainGraph
from .errors import GainGraphError, NonUnitGain, ParseError

__all__ = [
    "parse_gain",
    "gain_to_json",
    "graph_from_dict",
    "graph_to_dict",
    "loads",
    "dumps",
    "load",
    "dump",
    "matrix_from_json",
    "digest",
    "to_report_json",
    "round_floats",
]

REPORT_DIGITS = 12


def _parse_turns(text, where: str) -> Fraction:
    try:
        t = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: bad turns value {text!r}") from exc
    return t


def parse_gain(obj, where: str = "gain") -> ComplexUnit:
    """A gain object: ``{"re", "im"}``, ``{"turns": "p/q"}`` or ``[re, im]``."""
    if isinstance(obj, dict):
        if "turns" in obj:
            return ComplexUnit(turns=_parse_turns(obj["turns"], where))
        if "re" in obj or "im" in obj:
            try:
                z = complex(float(obj.get("re", 0.0)), float(obj.get("im", 0.0)))
            except (TypeError, ValueError) as exc:
                raise ParseError(f"{where}: re/im must be numbers") from exc
            try:
                return ComplexUnit(z)
            except NonUnitGain as exc:
                raise NonUnitGain(f"{where}: {exc}") from None
        raise ParseError(f"{where}: expected keys re/im or turns")
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return parse_gain({"re": obj[0], "im": obj[1]}, where)
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return parse_gain({"re": obj, "im": 0.0}, where)
    raise ParseError(f"{where}: cannot read {obj!r} as a gain")


def gain_to_json(gain: ComplexUnit) -> dict:
    if gain.turns is not None:
        t = gain.turns
        return {"turns": f"{t.numerator}/{t.denominator}"}
    return {"re": gain.re, "im": gain.im}


def graph_from_dict(doc) -> GainGraph:
    if not isinstance(doc, dict):
        raise ParseError("graph document must be an object")
    try:
        n = doc["n"]
        raw = doc.get("edges", [])
    except KeyError:
        raise ParseError("graph document needs an 'n' field") from None
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(raw, list):
        raise ParseError("'edges' must be a list")
    edges = []
    for i, e in enumerate(raw):
        where = f"edge {i}"
        if not isinstance(e, dict) or "u" not in e or "v" not in e:
            raise ParseError(f"{where}: expected an object with u and v")
        u, v = e["u"], e["v"]
        if not all(isinstance(a, int) and not isinstance(a, bool) for a in (u, v)):
            raise ParseError(f"{where}: u and v must be integers")
        if u >= v:
            raise ParseError(f"{where}: u < v required, got u={u}, v={v}")
        gain = parse_gain(e["gain"], where) if "gain" in e else ComplexUnit(turns=0)
        edges.append((u, v, gain))
    try:
        return GainGraph(n, edges)
    except GainGraphError:
        raise
    except (TypeError, ValueError) as exc:  # pragma: no cover
        raise ParseError(str(exc)) from exc


def graph_to_dict(g: GainGraph) -> dict:
    return {
        "n": g.n,
        "edges": [{"u": u, "v": v, "gain": gain_to_json(gain)} for u, v, gain in g.edges],
    }


def loads(text: str) -> GainGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    return graph_from_dict(doc)


def dumps(g: GainGraph) -> str:
    # full float precision here: documents must round trip exactly
    return json.dumps(graph_to_dict(g), indent=1)


def load(path) -> GainGraph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(g: GainGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g) + "\n")


def matrix_from_json(text: str) -> np.ndarray:
    """A square complex matrix: rows of entries, each ``0`` or a gain object."""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if isinstance(rows, dict):
        rows = rows.get("matrix")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("matrix must be a list of rows")
    n = len(rows)
    out = np.zeros((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"row {i} has {len(row)} entries, expected {n}")
        for j, entry in enumerate(row):
            if entry == 0 or entry == {"re": 0, "im": 0}:
                continue
            out[i, j] = parse_gain(entry, f"entry ({i}, {j})").value
    return out


def digest(g: GainGraph) -> str:
    """sha256 of the canonical document text."""
    text = json.dumps(graph_to_dict(g), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def round_floats(obj):
    """Recursively convert to JSON-ready values with floats at 12 significant digits."""
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return str(obj)
        return float(f"{obj:.{REPORT_DIGITS}g}") + 0.0  # no negative zeros
    if isinstance(obj, complex):
        return {"re": round_floats(obj.real), "im": round_floats(obj.imag)}
    if isinstance(obj, ComplexUnit):
        out = {"re": round_floats(obj.re), "im": round_floats(obj.im)}
        if obj.turns is not None:
            out["turns"] = f"{obj.turns.numerator}/{obj.turns.denominator}"
        return out
    if isinstance(obj, np.ndarray):
        return [round_floats(x) for x in obj.tolist()]
    if isinstance(obj, np.generic):
        return round_floats(obj.item())
    if isinstance(obj, dict):
        return {str(k): round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(x) for x in obj]
    return obj


def to_report_json(report: dict) -> str:
    """Serialize a report, floats cut to 12 significant digits."""
    return json.dumps(round_floats(report), indent=2)
