"""Reading and writing complexes as facet lists or JSON."""

from __future__ import annotations

import json
from pathlib import Path

from .complex import SimplicialComplex
from .errors import ParseError, ShiftlabError


def parse_facet_list(text: str) -> SimplicialComplex:
    """One facet per line as whitespace-separated vertex ids; "n=<int>" pins the ground set."""
    n = None
    facets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.replace(" ", "").startswith("n="):
            try:
                n = int(line.split("=", 1)[1])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad ground-set size") from exc
            continue
        try:
            facets.append(tuple(int(tok) for tok in line.split()))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}") from exc
    if n is None:
        n = max((max(f) for f in facets if f), default=0)
    return _build(n, facets)


def parse_json(text: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
        n = int(data["n"])
        facets = [tuple(int(x) for x in f) for f in data["facets"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON complex: {exc}") from exc
    return _build(n, facets)


def _build(n: int, facets: list) -> SimplicialComplex:
    try:
        return SimplicialComplex(n, facets)
    except ShiftlabError as exc:
        raise ParseError(str(exc)) from exc


def parse_complex(text: str) -> SimplicialComplex:
    """Detect the format: JSON objects start with '{'."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_facet_list(text)


def read_complex(path: str | Path) -> SimplicialComplex:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_complex(text)


def to_facet_list(K: SimplicialComplex) -> str:
    lines = [f"n={K.n}"] + [" ".join(map(str, f)) for f in K.facets if f]
    return "\n".join(lines) + "\n"


def to_json(K: SimplicialComplex) -> str:
    return json.dumps({"n": K.n, "facets": [list(f) for f in K.facets if f]})
