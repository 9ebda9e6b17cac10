"""Graph ingestion: edge lists, structured JSON documents and the family DSL.

Edge list::

    1 2 3 4        <- vertex labels, in order
    1 2            <- one edge per line
    2 3

Lines starting with ``#`` and blank lines are skipped.

Structured document::

    {"vertices": ["1", "2", "3"], "edges": [["1", "2"], ["2", "3"]]}

Family DSL: a family name (``path:5``, ``triforce6``, ...) or a combinator
``join(a, b)``, ``union(a, b)``, ``complement(a)`` over DSL expressions.
"""

from __future__ import annotations

import json
import os
import re
import sys

from raagkit.errors import GraphError
from raagkit.graph import Graph, complement, disjoint_union, family, join

FORMATS = ("edgelist", "structured", "dsl")

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9]*(?:\s*:\s*\d+)?)|(\()|(\))|(,))")
_COMBINATORS = {"join": 2, "union": 2, "complement": 1}


def parse_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("edge list is empty: first line must list the vertex labels")
    labels = lines[0].split()
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"edge line must hold exactly two labels: {ln!r}")
        edges.append((parts[0], parts[1]))
    return Graph.from_edges(labels, edges)


def parse_structured(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph document: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise GraphError('graph document needs "vertices" and "edges"')
    edges = doc["edges"]
    if not isinstance(doc["vertices"], list) or not isinstance(edges, list):
        raise GraphError('"vertices" and "edges" must be lists')
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise GraphError(f"edge must be a pair of labels: {e!r}")
    return Graph.from_edges(doc["vertices"], [tuple(e) for e in edges])


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise GraphError(f"malformed graph expression near {text[pos:]!r}")
        tokens.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return tokens


def parse_dsl(text: str) -> Graph:
    tokens = _tokenize(text)
    if not tokens:
        raise GraphError("empty graph expression")
    pos = 0

    def expr() -> Graph:
        nonlocal pos
        if pos >= len(tokens):
            raise GraphError("graph expression ends early")
        tok = tokens[pos]
        pos += 1
        if tok in _COMBINATORS:
            if pos >= len(tokens) or tokens[pos] != "(":
                raise GraphError(f"{tok} needs parenthesized arguments")
            pos += 1
            args = [expr()]
            while pos < len(tokens) and tokens[pos] == ",":
                pos += 1
                args.append(expr())
            if pos >= len(tokens) or tokens[pos] != ")":
                raise GraphError(f"unclosed {tok}(...)")
            pos += 1
            if len(args) != _COMBINATORS[tok]:
                raise GraphError(f"{tok} takes {_COMBINATORS[tok]} argument(s), got {len(args)}")
            if tok == "join":
                return join(*args)
            if tok == "union":
                return disjoint_union(*args)
            return complement(args[0])
        if tok in "(),":
            raise GraphError(f"unexpected {tok!r} in graph expression")
        return family(tok.replace(" ", ""))

    g = expr()
    if pos != len(tokens):
        raise GraphError(f"trailing input in graph expression: {' '.join(tokens[pos:])}")
    return g


def detect_format(text: str) -> str:
    stripped = text.strip()
    if stripped.startswith("{"):
        return "structured"
    if "\n" not in stripped and (":" in stripped or "(" in stripped or stripped in ("triforce6", "grid6")):
        return "dsl"
    return "edgelist"


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "structured":
        return parse_structured(text)
    if fmt == "dsl":
        return parse_dsl(text)
    raise GraphError(f"unknown graph format {fmt!r}; expected one of {', '.join(FORMATS)}")


def load_graph(arg: str, fmt: str | None = None) -> Graph:
    """A CLI graph argument: ``-`` for stdin, a file path, or a DSL expression."""
    if arg == "-":
        return parse_graph(sys.stdin.read(), fmt)
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
        if fmt is None and arg.endswith(".json"):
            fmt = "structured"
        return parse_graph(text, fmt)
    return parse_graph(arg, fmt or "dsl")


def to_structured(g: Graph) -> str:
    edges = [[g.labels[i], g.labels[j]] for i, j in g.edges()]
    return json.dumps({"vertices": list(g.labels), "edges": edges})


def to_edgelist(g: Graph) -> str:
    lines = [" ".join(g.labels)] + [f"{g.labels[i]} {g.labels[j]}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"
