"""Interchange formats: graph6, edge-list text, demand documents, solve reports.

graph6 follows the published format: size N(n) is chr(n+63) for n <= 62 or
'~' plus three 6-bit groups for n <= 258047; the upper triangle is emitted
column by column ((0,1),(0,2),(1,2),(0,3),...), 6 bits per printable byte,
each offset by 63. An optional '>>graph6<<' header is accepted on input.

The edge-list format is a '#'-commented text block: a header line "n m"
followed by m lines "u v" with 0-based endpoints. Duplicate edges are
rejected so hand-authored inputs fail loudly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, build

_G6_HEADER = ">>graph6<<"
_G6_MAX_SHORT = 62
_G6_MAX_LONG = 258047


class FormatError(ValueError):
    """Malformed interchange data; the message pins the offending position."""


def _g6_size(text: str) -> tuple[int, int]:
    """Decode the size field; returns (n, chars consumed)."""
    if not text:
        raise FormatError("empty graph6 line")
    c0 = ord(text[0])
    if c0 == 126:  # '~'
        if len(text) >= 2 and ord(text[1]) == 126:
            raise FormatError("graph6 sizes above 258047 are not supported (offset 0)")
        if len(text) < 4:
            raise FormatError("truncated graph6 long size field (offset 0)")
        n = 0
        for i in range(1, 4):
            ci = ord(text[i])
            if not 63 <= ci <= 126:
                raise FormatError(f"bad graph6 byte {text[i]!r} (offset {i})")
            n = (n << 6) | (ci - 63)
        return n, 4
    if not 63 <= c0 <= 126:
        raise FormatError(f"bad graph6 size byte {text[0]!r} (offset 0)")
    return c0 - 63, 1


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    n, pos = _g6_size(s)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nbytes:
        raise FormatError(
            f"graph6 body for n={n} needs {nbytes} bytes, got {len(body)} (offset {pos})"
        )
    bits = 0
    for i, ch in enumerate(body):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise FormatError(f"bad graph6 byte {ch!r} (offset {pos + i})")
        bits = (bits << 6) | (c - 63)
    bits >>= nbytes * 6 - nbits  # drop padding
    edges = []
    k = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if k >= 0 and (bits >> k) & 1:
                edges.append((u, v))
            k -= 1
    return build(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (inverse of parse_graph6)."""
    n = g.n
    if n > _G6_MAX_LONG:
        raise FormatError(f"graph6 encoding supports n <= {_G6_MAX_LONG}, got {n}")
    if n <= _G6_MAX_SHORT:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = []
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            bits.append(1 if u in row else 0)
    out = []
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for bit in chunk:
            val = (val << 1) | bit
        out.append(chr(val + 63))
    return head + "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" edge-list format; errors carry 1-based line numbers."""
    n = m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n < 0:
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: header must be 'n m'")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: header must be two integers") from None
            if n < 0 or m < 0:
                raise FormatError(f"line {lineno}: negative counts")
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: endpoint outside 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    if n < 0:
        raise FormatError("missing 'n m' header line")
    if len(edges) != m:
        raise FormatError(f"header announced {m} edges, found {len(edges)}")
    return build(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def detect_and_parse(text: str) -> Graph:
    """Edge-list when the first effective line is 'int int' with a following
    body or a zero-edge header; otherwise graph6."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 2:
            try:
                int(parts[0]), int(parts[1])
            except ValueError:
                break
            return parse_edge_list(text)
        break
    return parse_graph6(text.strip())


def parse_demands(doc: dict, n: int) -> tuple[list[int], list[int]]:
    """Demand document -> per-vertex (a, b) lists.

    Accepts {"a_const": int, "b_const": int} or {"a": [...], "b": [...]}
    (mixing const and array forms is fine). All values must be >= 2.
    """
    out = []
    for key in ("a", "b"):
        const_key = f"{key}_const"
        if const_key in doc:
            val = int(doc[const_key])
            values = [val] * n
        elif key in doc:
            values = [int(x) for x in doc[key]]
            if len(values) != n:
                raise FormatError(f"demand '{key}' has {len(values)} entries for {n} vertices")
        else:
            raise FormatError(f"demand document needs '{key}' or '{const_key}'")
        for i, val in enumerate(values):
            if val < 2:
                raise FormatError(f"demand '{key}' must be >= 2 everywhere; index {i} has {val}")
        out.append(values)
    return out[0], out[1]


@dataclass
class SolveReport:
    """Structured outcome of one solve run.

    The deterministic section excludes wall-clock timing so repeated runs of
    identical inputs serialize byte-identically.
    """

    status: str
    n: int
    m: int
    demand_summary: dict
    partition: dict | None = None
    witness: list[int] | None = None
    violation: dict | None = None
    diagnostic: dict | None = None
    stats: dict = field(default_factory=dict)
    fallback: dict | None = None
    wall_time_ms: float | None = None

    def deterministic_dict(self) -> dict:
        out = {
            "status": self.status,
            "input": {"n": self.n, "m": self.m, "demands": self.demand_summary},
            "partition": self.partition,
            "witness": self.witness,
            "violation": self.violation,
            "diagnostic": self.diagnostic,
            "stats": self.stats,
        }
        if self.fallback is not None:
            out["fallback"] = self.fallback
        return out

    def as_dict(self) -> dict:
        out = {"report": self.deterministic_dict()}
        if self.wall_time_ms is not None:
            out["timing"] = {"wall_time_ms": round(self.wall_time_ms, 3)}
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def demand_summary(a: Sequence[int], b: Sequence[int]) -> dict:
    def summarize(vals: Sequence[int]) -> dict:
        lo, hi = min(vals), max(vals)
        if lo == hi:
            return {"const": lo}
        return {"min": lo, "max": hi}

    return {"a": summarize(a), "b": summarize(b)}
