"""Text formats: vectors, ring elements and code configuration files.

Vectors are comma-separated decimal element encodings; whitespace is ignored.

A ring element is written as its ``a`` rows separated by ``;``, each row a
comma-separated coefficient list (constant term first, empty for zero).  A
pair is ``z:<ring> c:<ring>``.

Configuration files are INI documents with a single ``[code]`` section::

    [code]
    field = 3^2/17          ; p^k/m, m = integer encoding of the modulus
    curve = hermitian       ; or "mk"
    q = 3                   ; hermitian only
    u = 16
    points = all            ; or "x,y; x,y; ..." in encodings

For ``curve = mk`` give ``a``, ``b``, ``c`` and ``coeffs`` as
``i,j,value; i,j,value; ...`` (terms of y^a + sum c_ij x^i y^j + c x^b).
"""

from __future__ import annotations

import configparser

from .code import Code
from .curve import Pair, PlaneCurve, hermitian_curve
from .errors import AGCodeError, BadConfig
from .field import parse_field


def format_vector(v) -> str:
    return ",".join(str(int(x)) for x in v)


def parse_vector(text: str) -> list:
    text = "".join(text.split())
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad vector: {exc}") from None


def format_ring(elem) -> str:
    return ";".join(format_vector(row) for row in elem)


def parse_ring(curve: PlaneCurve, text: str) -> tuple:
    rows = [parse_vector(r) for r in text.split(";")]
    return curve.from_rows(rows)


def format_pair(P: Pair) -> str:
    return f"z:{format_ring(P.zpart)} c:{format_ring(P.cpart)}"


def parse_pair(curve: PlaneCurve, text: str) -> Pair:
    parts = dict(tok.split(":", 1) for tok in text.split())
    return Pair(parse_ring(curve, parts["z"]), parse_ring(curve, parts["c"]))


def _triples(text: str, width: int) -> list:
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            vals = parse_vector(chunk)
            if len(vals) != width:
                raise BadConfig(f"expected {width} integers in {chunk!r}")
            out.append(tuple(vals))
    return out


def load_config(text: str) -> Code:
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        cp.read_string(text)
        sec = cp["code"]
        F = parse_field(sec["field"])
        kind = sec.get("curve", "hermitian").strip().lower()
        if kind == "hermitian":
            curve = hermitian_curve(F, sec.getint("q"))
        elif kind == "mk":
            coeffs = {(i, j): v for i, j, v in _triples(sec.get("coeffs", ""), 3)}
            curve = PlaneCurve(F, sec.getint("a"), sec.getint("b"), coeffs, sec.getint("c"))
        else:
            raise BadConfig(f"unknown curve kind {kind!r}")
        pts = sec.get("points", "all").strip()
        points = None if pts.lower() == "all" else _triples(pts, 2)
        if points is not None:
            for p in points:
                if not curve.contains(p):
                    raise BadConfig(f"point {p} is not a nonsingular point of the curve")
        return Code(curve, sec.getint("u"), points)
    except BadConfig:
        raise
    except (configparser.Error, KeyError, ValueError, TypeError, AGCodeError) as exc:
        raise BadConfig(f"invalid code configuration: {exc}") from exc


def dump_config(code: Code, explicit_points: bool = True) -> str:
    c = code.curve
    lines = ["[code]", f"field = {c.F.name}"]
    if c.is_hermitian:
        lines += ["curve = hermitian", f"q = {c.a}"]
    else:
        terms = "; ".join(f"{i},{j},{v}" for (i, j), v in sorted(c.coeffs.items()))
        lines += ["curve = mk", f"a = {c.a}", f"b = {c.b}", f"c = {c.c}", f"coeffs = {terms}"]
    lines.append(f"u = {code.u}")
    if explicit_points:
        lines.append("points = " + "; ".join(f"{x},{y}" for x, y in code.points))
    else:
        lines.append("points = all")
    return "\n".join(lines) + "\n"
