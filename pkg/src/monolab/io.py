"""Text formats for ideals and complexes, and JSON conversion.

Ideal file::

    n=4
    a^2*b        # letters a, b, c, ... stand for x1, x2, x3, ...
    x3*x4^2

A generator line is ``factor ('*' factor)*`` with ``factor = var ['^' int]``
and ``var = x<k> | <letter>``; the letter ``x`` is reserved.  A lone ``0`` or
``1`` line gives the zero or unit ideal, and a file with no generator lines
is the zero ideal.  Blank lines and ``#`` comments are ignored.

Complex file::

    n=3
    {1,2}
    {3}

``{}`` is the empty facet; a file with no facets (or an empty file) is the
void complex.
"""

from __future__ import annotations

import dataclasses
import logging
import re
from enum import Enum
from typing import Any

from .core import Monomial, MonomialIdeal, format_monomial, minimal_elements
from .complexes import SimplicialComplex

log = logging.getLogger(__name__)

LETTERS = "abcdefghijklmnopqrstuvw"
_HEADER = re.compile(r"n\s*=\s*(\d+)\s*$")
_FACTOR = re.compile(r"\s*(?:x(\d+)|([a-w]))(?:\s*\^\s*(\d+))?\s*")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield lineno, body


def _header(lines: list, kind: str) -> int:
    if not lines:
        raise ParseError(f"empty {kind} file: expected 'n=<dim>'", 1, 1)
    lineno, body = lines[0]
    m = _HEADER.match(body.strip())
    if not m:
        raise ParseError("expected 'n=<dim>'", lineno, len(body) - len(body.lstrip()) + 1)
    return int(m.group(1))


def parse_monomial(body: str, n: int, lineno: int = 1) -> Monomial:
    exps = [0] * n
    pos = 0
    while True:
        m = _FACTOR.match(body, pos)
        if not m or m.end() == pos:
            raise ParseError(f"expected a variable such as x1 or a, got {body[pos:].strip()!r}",
                             lineno, pos + 1)
        k = int(m.group(1)) if m.group(1) else LETTERS.index(m.group(2)) + 1
        if not 1 <= k <= n:
            raise ParseError(f"variable index {k} outside 1..{n}", lineno, m.start() + 1)
        e = int(m.group(3)) if m.group(3) else 1
        exps[k - 1] += e
        pos = m.end()
        if pos == len(body):
            return Monomial(tuple(exps))
        if body[pos] != "*":
            raise ParseError(f"expected '*', got {body[pos]!r}", lineno, pos + 1)
        pos += 1


def parse_ideal(text: str) -> MonomialIdeal:
    lines = list(_content_lines(text))
    n = _header(lines, "ideal")
    monos = []
    for lineno, body in lines[1:]:
        token = body.strip()
        if token == "0":
            continue
        if token == "1":
            monos.append(Monomial.one(n))
            continue
        monos.append(parse_monomial(body.rstrip(), n, lineno))
    minimal = minimal_elements(monos)
    if len(minimal) < len(set(monos)) or len(set(monos)) < len(monos):
        dropped = sorted(set(monos) - set(minimal), key=str)
        log.warning("generator list was not minimal; dropped %s",
                    ", ".join(map(str, dropped)) or "duplicates")
    return MonomialIdeal(n, minimal)


_FACET = re.compile(r"\s*\{\s*([\d\s,]*)\}\s*$")


def parse_complex(text: str) -> SimplicialComplex:
    lines = list(_content_lines(text))
    if not lines:
        return SimplicialComplex.void(0)
    n = _header(lines, "complex")
    facets = []
    for lineno, body in lines[1:]:
        m = _FACET.match(body)
        if not m:
            raise ParseError("expected a facet like {1,2}", lineno, len(body) - len(body.lstrip()) + 1)
        inner = m.group(1).strip()
        verts = [int(v) for v in inner.split(",")] if inner else []
        for v in verts:
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", lineno, body.index("{") + 2)
        facets.append(verts)
    delta = SimplicialComplex(n, facets)
    if len(delta.facets) < len(facets):
        log.warning("facet list was not an antichain; kept %d of %d", len(delta.facets), len(facets))
    return delta


def format_ideal(I: MonomialIdeal) -> str:
    body = [format_monomial(g) for g in I.gens] or ["0"]
    return "\n".join([f"n={I.n}", *body]) + "\n"


def format_complex(delta: SimplicialComplex) -> str:
    body = ["{" + ",".join(map(str, f)) + "}" for f in delta.sorted_facets]
    return "\n".join([f"n={delta.n}", *body]) + "\n"


def to_jsonable(obj: Any) -> Any:
    """Plain JSON data for library values (monomials become strings)."""
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Monomial):
        return format_monomial(obj)
    if isinstance(obj, MonomialIdeal):
        return {"n": obj.n, "gens": [format_monomial(g) for g in obj.gens]}
    if isinstance(obj, SimplicialComplex):
        return {"n": obj.n, "facets": [list(f) for f in obj.sorted_facets]}
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if hasattr(obj, "monomials") and hasattr(obj, "seq"):
        return [format_monomial(m) for m in obj.monomials]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {k if isinstance(k, str) else str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted((to_jsonable(x) for x in obj), key=lambda x: (str(type(x)), x))
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    return str(obj)
