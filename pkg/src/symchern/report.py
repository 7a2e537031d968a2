"""Job documents in, reports out.

A job document is plain text, one ``key = value`` per line, ``#`` starts a
comment, lists are comma separated::

    mode = twist
    n = 2
    J = 1, 2

Every number is read exactly (``5/4``, ``-1``, ``0.25``).  Reports are nested
dicts whose leaves are str, int, bool, None, Fraction, ``math.inf`` or
PolyQ; :func:`dumps` / :func:`loads` round-trip them through JSON without
losing exactness.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .exact.poly import PolyQ
from .exact.scalars import ParseError, format_rational, parse_rational, render_decimal

MODES = ("check", "twist", "product", "verify-oracle", "sweep")

# key -> kind; "int", "rat", "rats" (list), "str"
_FIELDS: Dict[str, Dict[str, str]] = {
    "check": {"n": "int", "v": "rat", "a": "rat", "b": "rat"},
    "twist": {"n": "int", "J": "rats"},
    "product": {"n1": "int", "n2": "int", "E": "rat"},
    "verify-oracle": {"n": "int", "samples": "int", "seed": "int"},
    "sweep": {
        "family": "str", "n_min": "int", "n_max": "int",
        "n1_min": "int", "n1_max": "int", "n2_min": "int", "n2_max": "int",
    },
}
_REQUIRED = {
    "check": ("n", "v", "a", "b"),
    "twist": ("n", "J"),
    "product": ("n1", "n2"),
    "verify-oracle": ("n",),
    "sweep": ("family",),
}
_OPTIONS = {
    "format": "str", "csv": "str", "t_min": "rat", "t_max": "rat",
    "steps": "int", "refine_width": "rat", "lebrun_k2": "bool",
}


class JobParseError(ParseError):
    def __init__(self, message: str, line: Optional[int] = None, key: Optional[str] = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"field {key!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.key = key


@dataclass
class JobSpec:
    mode: str
    payload: Dict[str, Any]
    options: Dict[str, Any] = field(default_factory=dict)


def _convert(kind: str, raw: str, line: Optional[int], key: str):
    try:
        if kind == "int":
            value = parse_rational(raw)
            if value.denominator != 1:
                raise ParseError("expected an integer")
            return int(value)
        if kind == "rat":
            return parse_rational(raw)
        if kind == "rats":
            items = [x for x in raw.replace("[", "").replace("]", "").split(",") if x.strip()]
            if not items:
                raise ParseError("empty list")
            return [parse_rational(x) for x in items]
        if kind == "bool":
            low = raw.strip().lower()
            if low in ("true", "yes", "1", "on"):
                return True
            if low in ("false", "no", "0", "off"):
                return False
            raise ParseError("expected true/false")
        return raw.strip()
    except ParseError as exc:
        raise JobParseError(str(exc), line, key) from None


def parse_pairs(pairs, mode: Optional[str] = None) -> JobSpec:
    """Build a JobSpec from ``(line_number, key, raw_value)`` triples."""
    seen: Dict[str, tuple] = {}
    for line, key, raw in pairs:
        if key in seen:
            raise JobParseError("duplicate key", line, key)
        seen[key] = (line, raw)
    if "mode" in seen:
        line, raw = seen.pop("mode")
        doc_mode = raw.strip()
        if doc_mode not in MODES:
            raise JobParseError(f"unknown mode {doc_mode!r}", line, "mode")
        if mode is not None and doc_mode != mode:
            raise JobParseError(f"document is for mode {doc_mode!r}, command is {mode!r}", line, "mode")
        mode = doc_mode
    if mode is None:
        raise JobParseError("no mode given")
    fields = _FIELDS[mode]
    payload: Dict[str, Any] = {}
    options: Dict[str, Any] = {}
    for key, (line, raw) in seen.items():
        norm = key.replace("-", "_")
        if key in fields:
            payload[key] = _convert(fields[key], raw, line, key)
        elif norm in _OPTIONS:
            options[norm] = _convert(_OPTIONS[norm], raw, line, key)
        else:
            raise JobParseError(f"unknown field for mode {mode!r}", line, key)
    for key in _REQUIRED[mode]:
        if key not in payload:
            raise JobParseError("missing required field", None, key)
    return JobSpec(mode, payload, options)


def parse_job(text: str, mode: Optional[str] = None) -> JobSpec:
    pairs = []
    for number, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        sep = "=" if "=" in body else (":" if ":" in body else None)
        if sep is None:
            raise JobParseError("expected 'key = value'", number)
        key, raw = body.split(sep, 1)
        key = key.strip()
        if not key:
            raise JobParseError("empty key", number)
        pairs.append((number, key, raw))
    return parse_pairs(pairs, mode)


# -- structured emission -----------------------------------------------------


def _encode(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return {"$q": format_rational(obj)}
    if isinstance(obj, float):
        if obj == math.inf:
            return {"$q": "+inf"}
        if obj == -math.inf:
            return {"$q": "-inf"}
        raise TypeError("finite floats are not allowed in reports")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, PolyQ):
        return {"$poly": [format_rational(c) for c in obj.coeffs]}
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__} in a report")


def _decode(obj: Dict[str, Any]) -> Any:
    if set(obj) == {"$q"}:
        s = obj["$q"]
        if s == "+inf":
            return math.inf
        if s == "-inf":
            return -math.inf
        return Fraction(s)
    if set(obj) == {"$poly"}:
        return PolyQ(Fraction(c) for c in obj["$poly"])
    return obj


def dumps(report: Dict[str, Any]) -> str:
    return json.dumps(_encode(report), indent=2, ensure_ascii=False)


def loads(text: str) -> Dict[str, Any]:
    return json.loads(text, object_hook=_decode)


# -- text rendering ------------------------------------------------------------


def show(x: Any, digits: int = 6) -> str:
    """``decimal (exact)`` for rationals, plain text otherwise."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{render_decimal(x, digits)} ({format_rational(x)})"
    if isinstance(x, float) and math.isinf(x):
        return "+inf" if x > 0 else "-inf"
    if isinstance(x, PolyQ):
        return str(x)
    return str(x)


def render_text(report: Dict[str, Any]) -> str:
    mode = report["mode"]
    lines: List[str] = [f"mode: {mode}"]
    if "input" in report:
        lines.append("input: " + ", ".join(f"{k}={_show_value(v)}" for k, v in report["input"].items()))
    if mode == "check":
        c = report["constants"]
        lines.append(f"constants: k1={show(c['k1'])} k2={show(c['k2'])} scalar_bound={show(c['scalar_bound'])}")
        for k, v in report["quantities"].items():
            lines.append(f"  {k} = {show(v)}")
        lines.append(f"einstein: {report['einstein']}")
        lines.append(f"kaehler: {report['kaehler']}")
        w = report["window"]
        if w is None:
            lines.append("einstein-constant window: none")
        else:
            lines.append(f"einstein-constant window: s in [{show(w['lower'])}, {show(w['upper'])}) * pi")
    elif mode in ("twist", "product"):
        for k, p in report["polynomials"].items():
            lines.append(f"  {k}(t) = {p}")
        lines.append(f"limit L ({report['direction']}) = {show(report['limit'])}")
        if report.get("closed_form") is not None:
            lines.append(f"closed form = {show(report['closed_form'])}")
        lines.append(f"asymptotic: {report['asymptotic']}")
        th = report["thresholds"]
        lines.append(f"sign table on {th['domain']} (roots refined to width {show(th['width'])}):")
        for reg in th["regions"]:
            lines.append("  " + _region_line(reg))
    elif mode == "verify-oracle":
        for name, res in report["identities"].items():
            status = "pass" if res["failed"] == 0 else "FAIL"
            lines.append(f"  {name}: {status} ({res['passed']} passed, {res['failed']} failed)")
            if res.get("counterexample"):
                lines.append(f"    counterexample: {res['counterexample']}")
        lines.append(f"signature: {tuple(report['signature'])} expected {tuple(report['expected_signature'])}")
        lines.append("all identities hold" if report["ok"] else "ORACLE FAILURE")
    elif mode == "sweep":
        for row in report["rows"]:
            cond = "-" if row["condition"] is None else str(row["condition"])
            lines.append(
                f"  {row['params']} case={row['case']} L={show(row['limit'])} "
                f"verdict={row['verdict']} condition={cond} agrees={row['agrees']}"
            )
        lines.append(f"discrepancies: {report['discrepancies']}")
    return "\n".join(lines)


def _show_value(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_show_value(x) for x in v) + "]"
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def _region_line(reg: Dict[str, Any]) -> str:
    signs = " ".join(f"{k}:{'+' if s > 0 else '-' if s < 0 else '0'}" for k, s in reg["signs"].items())
    if reg["kind"] == "point":
        lo, hi = reg["root"]["lo"], reg["root"]["hi"]
        where = (
            f"t = root in ({render_decimal(lo, 12)}, {render_decimal(hi, 12)}] "
            f"[exact ({format_rational(lo)}, {format_rational(hi)}], root of {reg['root']['polynomial']}]"
        )
    else:
        where = f"t in ({_bound(reg['left'])}, {_bound(reg['right'])}) sample {show(reg['sample'])}"
    return f"{where}: {signs} -> {reg['einstein']}, {reg['kaehler']}"


def _bound(b: Any) -> str:
    if b is None:
        return "?"
    if isinstance(b, dict):
        return f"root~{render_decimal(b['hi'], 10)}"
    return show(b)
