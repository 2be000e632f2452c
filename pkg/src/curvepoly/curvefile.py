"""Reading and writing curve files.

A curve file lists named curves, one component per line::

    # comments start with '#'
    curve C1
      x - z
      x + z
    end

    curve F raw e=3 quasi-homogeneous
      x*y*(x + y)
    end

Flags on the ``curve`` line: ``raw`` (the single polynomial is the whole
defining equation, not one irreducible component), ``e=<n>`` (number of
irreducible components of a raw curve) and ``quasi-homogeneous`` (allow
the Milnor number to be taken equal to the Tjurina number).
"""
from __future__ import annotations

from .arrgeo import Curve
from .qpoly import PolySyntaxError, format_poly, parse_poly


class CurveFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _parse_header(words, lineno):
    if len(words) < 2:
        raise CurveFileError("curve needs a name", lineno)
    opts = {"name": words[1], "raw": False, "e": None, "quasi_homogeneous": False}
    for w in words[2:]:
        if w == "raw":
            opts["raw"] = True
        elif w in ("quasi-homogeneous", "assume-quasi-homogeneous"):
            opts["quasi_homogeneous"] = True
        elif w.startswith("e="):
            try:
                opts["e"] = int(w[2:])
            except ValueError:
                raise CurveFileError(f"bad component count {w!r}", lineno) from None
        else:
            raise CurveFileError(f"unknown flag {w!r}", lineno)
    return opts


def parse_curve_file(text: str) -> dict:
    """Name -> Curve, in file order. Curves are validated (reducedness) on load."""
    curves: dict = {}
    current = None
    comps: list = []
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "curve":
            if current is not None:
                raise CurveFileError("nested 'curve' (missing 'end')", lineno)
            current = _parse_header(words, lineno)
            if current["name"] in curves:
                raise CurveFileError(f"duplicate curve name {current['name']!r}", lineno)
            comps = []
        elif line == "end":
            if current is None:
                raise CurveFileError("'end' without 'curve'", lineno)
            if not comps:
                raise CurveFileError(f"curve {current['name']!r} has no components", lineno)
            curves[current["name"]] = Curve(tuple(comps), **current)
            current = None
        else:
            if current is None:
                raise CurveFileError("component outside a curve block", lineno)
            try:
                comps.append(parse_poly(line))
            except PolySyntaxError as exc:
                raise CurveFileError(f"{exc}: {line!r}", lineno) from exc
    if current is not None:
        raise CurveFileError(f"curve {current['name']!r} is not terminated by 'end'")
    return curves


def load_curve_file(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return parse_curve_file(fh.read())


def format_curve(curve: Curve, name: str | None = None) -> str:
    header = ["curve", name or curve.name or "C"]
    if curve.raw:
        header.append("raw")
        if curve.e is not None:
            header.append(f"e={curve.e}")
    if curve.quasi_homogeneous:
        header.append("quasi-homogeneous")
    lines = [" ".join(header)]
    lines += [f"  {format_poly(c)}" for c in curve.components]
    lines.append("end")
    return "\n".join(lines)


def format_curve_file(curves) -> str:
    """Serialize an iterable of curves (or a name -> curve mapping)."""
    if isinstance(curves, dict):
        items = list(curves.items())
    else:
        items = [(c.name, c) for c in curves]
    return "".join(format_curve(c, n) + "\n\n" for n, c in items)
