"""JSON and CSV encodings.

Rationals travel as strings ``"p/q"``.  A beam set is::

    {"b": 4, "d": 3,
     "levels": [{"level": 1, "prefix": "", "beam": {"lo": "1/1", "hi": "1/2"}}, ...]}

``levels`` may also be given as a list of per-slot lists without the
``"level"`` key.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .beams import ScanningBeamSet, UncertaintyMap
from .codes import Code, CodewordLoop
from .geometry import AngularInterval, AngularRegion
from .priors import Prior, prob, uniform


class ParseError(ValueError):
    """Input could not be decoded into a model object."""


def fraction_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ParseError(f"expected a rational string like '3/8', got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def interval_to_json(iv: AngularInterval) -> dict:
    return {"lo": fraction_str(iv.lo), "hi": fraction_str(iv.hi)}


def interval_from_json(obj) -> AngularInterval:
    if not isinstance(obj, dict) or set(obj) != {"lo", "hi"}:
        raise ParseError(f"a beam must be one arc {{'lo', 'hi'}}, got {obj!r}")
    try:
        return AngularInterval(parse_fraction(obj["lo"]), parse_fraction(obj["hi"]))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def region_to_json(region: AngularRegion):
    if region.is_full:
        return "full"
    return [interval_to_json(iv) for iv in region.arcs]


def region_from_json(obj) -> AngularRegion:
    if obj == "full":
        return AngularRegion.full()
    if not isinstance(obj, list):
        raise ParseError("a region is a list of arcs")
    return AngularRegion.from_arcs(interval_from_json(x) for x in obj)


def beamset_to_json(S: ScanningBeamSet) -> dict:
    levels = []
    for i, level in enumerate(S.levels, start=1):
        for prefix in sorted(level):
            levels.append({"level": i, "prefix": prefix, "beam": interval_to_json(level[prefix])})
    return {"b": S.b, "d": S.d, "levels": levels}


def beamset_from_json(obj) -> ScanningBeamSet:
    try:
        b, d, raw = int(obj["b"]), int(obj["d"]), obj["levels"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"beam set needs integer 'b', 'd' and a 'levels' list ({exc})") from exc
    if b < 1 or d < 1:
        raise ParseError("b and d must be >= 1")
    levels: list[dict] = [{} for _ in range(b)]
    if raw and all(isinstance(x, list) for x in raw):
        entries = [dict(e, level=i) for i, lvl in enumerate(raw, start=1) for e in lvl]
    else:
        entries = raw
    for e in entries:
        if not isinstance(e, dict) or not {"level", "prefix", "beam"} <= set(e):
            raise ParseError(f"level entry needs 'level', 'prefix', 'beam': {e!r}")
        i = e["level"]
        if not isinstance(i, int) or not 1 <= i <= b:
            raise ParseError(f"level index {i!r} outside 1..{b}")
        prefix = e["prefix"]
        if not isinstance(prefix, str):
            raise ParseError(f"prefix must be a string, got {prefix!r}")
        if prefix in levels[i - 1]:
            raise ParseError(f"duplicate beam for level {i}, prefix {prefix!r}")
        levels[i - 1][prefix] = interval_from_json(e["beam"])
    return ScanningBeamSet(b, d, tuple(levels))


def load_beamset(path) -> ScanningBeamSet:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read beam set {path}: {exc}") from exc
    return beamset_from_json(obj)


def dump_beamset(S: ScanningBeamSet, path) -> None:
    Path(path).write_text(json.dumps(beamset_to_json(S), indent=2) + "\n")


def loop_to_json(loop: CodewordLoop) -> dict:
    return {"d": loop.d, "words": list(loop.words)}


def loop_from_json(obj) -> CodewordLoop:
    try:
        return CodewordLoop(tuple(obj["words"]), int(obj["d"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad loop: {exc}") from exc


def code_from_text(text: str, d: int) -> Code:
    words = [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    try:
        return Code(frozenset(words), d)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def code_to_text(code: Code) -> str:
    return "".join(w + "\n" for w in sorted(code.words))


def prior_to_json(prior: Prior):
    return [{"lo": fraction_str(a), "hi": fraction_str(b), "density": fraction_str(f)}
            for a, b, f in prior.pieces]


def prior_from_json(obj) -> Prior:
    if obj == "uniform":
        return uniform()
    if not isinstance(obj, list):
        raise ParseError("prior must be 'uniform' or a list of pieces")
    pieces = []
    for p in obj:
        try:
            lo, hi, f = (parse_fraction(p[k]) for k in ("lo", "hi", "density"))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"prior piece needs lo, hi, density: {p!r}") from exc
        if lo < hi:
            pieces.append((lo, hi, f))
        else:  # wrapping piece
            pieces += [(lo, Fraction(1), f), (Fraction(0), hi, f)]
    try:
        return Prior(tuple(sorted(pieces)))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def load_prior(spec: str) -> Prior:
    """``"uniform"`` or a path to a JSON prior."""
    if spec == "uniform":
        return uniform()
    try:
        obj = json.loads(Path(spec).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read prior {spec}: {exc}") from exc
    return prior_from_json(obj)


def umap_rows(umap: UncertaintyMap, prior: Prior) -> list[dict]:
    rows = []
    for word, region in umap.entries.items():
        arcs = " ".join(f"({fraction_str(iv.lo)},{fraction_str(iv.hi)}]" for iv in region.arcs)
        rows.append({
            "codeword": word,
            "arcs": arcs,
            "measure": fraction_str(region.measure),
            "probability": fraction_str(prob(prior, region)),
        })
    return rows


def umap_to_csv(umap: UncertaintyMap, prior: Prior) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, ["codeword", "arcs", "measure", "probability"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(umap_rows(umap, prior))
    return buf.getvalue()
