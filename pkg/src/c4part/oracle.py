"""Brute-force ground truth: exhaustive feasibility search, tightness
verification, and solver cross-validation over enumerated small graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .constructions import _graph_from_mask, _mask_rows, _rows_c4_free
from .degeneracy import DemandFn
from .graph import Graph
from .solver import FeasiblePartition, solve, verify_feasible

_ENUM_LIMIT = 24


def exists_feasible(g: Graph, a: DemandFn, b: DemandFn) -> tuple[set[int], set[int]] | None:
    """Exhaustive search for a feasible partition; None when there is none.

    Returns the witness whose a-side bitmask (bit i set iff vertex i on the
    a-side) is numerically smallest. Vertices are decided from index n-1
    down to 0, b-side first, with a potential-degree prune: a branch dies as
    soon as some settled vertex cannot reach its demand even if every
    undecided neighbor joins its side.
    """
    n = g.n
    if n > _ENUM_LIMIT:
        raise ValueError(f"exhaustive search bounded at n <= {_ENUM_LIMIT}, got {n}")
    if n < 2:
        return None
    side = [-1] * n  # -1 undecided, 0 a-side, 1 b-side
    cnt = [[0] * n, [0] * n]  # settled neighbors per side
    und = [g.degree(v) for v in range(n)]
    dem = (a, b)
    nbrs = g.nbrs

    def ok(v: int) -> bool:
        s = side[v]
        return cnt[s][v] + und[v] >= dem[s][v]

    def assign(v: int, s: int) -> bool:
        side[v] = s
        viable = True
        for w in nbrs[v]:
            und[w] -= 1
            cnt[s][w] += 1
            if side[w] >= 0 and not ok(w):
                viable = False
        return viable and ok(v)

    def undo(v: int, s: int) -> None:
        side[v] = -1
        for w in nbrs[v]:
            und[w] += 1
            cnt[s][w] -= 1

    def search(v: int) -> bool:
        if v < 0:
            if all(side[w] == side[0] for w in range(n)):
                return False
            return all(cnt[side[w]][w] >= dem[side[w]][w] for w in range(n))
        for s in (1, 0):
            if assign(v, s) and search(v - 1):
                return True
            undo(v, s)
        return False

    if not search(n - 1):
        return None
    a_side = {v for v in range(n) if side[v] == 0}
    return a_side, set(range(n)) - a_side


@dataclass(frozen=True)
class TightnessInstance:
    """A graph plus demands meeting d(x) = a(x) + b(x) - 2 everywhere,
    candidate witness that the degree hypothesis cannot be weakened."""

    graph: Graph
    a: tuple[int, ...]
    b: tuple[int, ...]

    def validate(self) -> None:
        g = self.graph
        if len(self.a) != g.n or len(self.b) != g.n:
            raise ValueError("demand length mismatch")
        for x in range(g.n):
            if self.a[x] < 2 or self.b[x] < 2:
                raise ValueError(f"vertex {x}: demands must be >= 2 (a={self.a[x]}, b={self.b[x]})")
            if g.degree(x) != self.a[x] + self.b[x] - 2:
                raise ValueError(
                    f"vertex {x}: degree {g.degree(x)} != a+b-2 = {self.a[x] + self.b[x] - 2}"
                )


def verify_tightness(inst: TightnessInstance) -> bool:
    """True iff the instance admits no feasible partition (exhaustive check)."""
    inst.validate()
    return exists_feasible(inst.graph, inst.a, inst.b) is None


def search_tight_functions(g: Graph) -> list[TightnessInstance]:
    """All demand pairs with a,b >= 2, d(x) = a(x)+b(x)-2 pointwise, and no
    feasible partition. Enumerates the per-vertex splits of d(x)+2; empty
    whenever some vertex has degree < 2."""
    if g.n > 16:
        raise ValueError("function-space search bounded at n <= 16")
    if g.n == 0 or g.min_degree() < 2:
        return []
    choices = [range(2, g.degree(x) + 1) for x in range(g.n)]
    out = []
    for a in itertools.product(*choices):
        b = tuple(g.degree(x) + 2 - a[x] for x in range(g.n))
        if exists_feasible(g, a, b) is None:
            out.append(TightnessInstance(graph=g, a=tuple(a), b=b))
    return out


# ---------------------------------------------------------------------------
# solver cross-validation over enumerated graphs


@dataclass
class GridPointReport:
    a: int
    b: int
    instances: int = 0
    feasible: int = 0
    discrepancies: list[dict] = field(default_factory=list)

    def merge(self, other: "GridPointReport") -> None:
        self.instances += other.instances
        self.feasible += other.feasible
        self.discrepancies.extend(other.discrepancies)


@dataclass
class CrosscheckReport:
    n_max: int
    grid: tuple[tuple[int, int], ...]
    graphs_enumerated: int = 0
    c4_free_count: int = 0
    points: dict[tuple[int, int], GridPointReport] = field(default_factory=dict)

    @property
    def discrepancy_count(self) -> int:
        return sum(len(p.discrepancies) for p in self.points.values())

    def merge(self, other: "CrosscheckReport") -> None:
        self.graphs_enumerated += other.graphs_enumerated
        self.c4_free_count += other.c4_free_count
        for key, pt in other.points.items():
            self.points[key].merge(pt)

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "grid": [list(p) for p in self.grid],
            "graphs_enumerated": self.graphs_enumerated,
            "c4_free_count": self.c4_free_count,
            "discrepancy_count": self.discrepancy_count,
            "points": {
                f"{a},{b}": {
                    "instances": pt.instances,
                    "feasible": pt.feasible,
                    "discrepancies": pt.discrepancies,
                }
                for (a, b), pt in sorted(self.points.items())
            },
        }


def _fresh_report(n_max: int, grid: tuple[tuple[int, int], ...]) -> CrosscheckReport:
    rep = CrosscheckReport(n_max=n_max, grid=grid)
    for av, bv in grid:
        rep.points[(av, bv)] = GridPointReport(a=av, b=bv)
    return rep


def _scan_chunk(args: tuple[int, int, int, tuple[tuple[int, int], ...]]) -> CrosscheckReport:
    """Scan edge masks [start, end) for one vertex count; the unit of sharding."""
    n, start, end, grid = args
    rep = _fresh_report(n, grid)
    for mask in range(start, end):
        rep.graphs_enumerated += 1
        rows = _mask_rows(n, mask)
        if not _rows_c4_free(rows):
            continue
        rep.c4_free_count += 1
        mind = min((r.bit_count() for r in rows), default=0)
        g = None
        for av, bv in grid:
            if mind < av + bv - 1:
                continue
            if g is None:
                g = _graph_from_mask(n, mask)
            pt = rep.points[(av, bv)]
            pt.instances += 1
            a = [av] * n
            b = [bv] * n
            cert = solve(g, a, b)
            edges = sorted(g.edges())
            if not isinstance(cert, FeasiblePartition):
                pt.discrepancies.append(
                    {"n": n, "edges": edges, "a": av, "b": bv, "issue": f"solve returned {cert.status}"}
                )
                continue
            if not verify_feasible(g, a, b, (cert.a_side, cert.b_side)):
                pt.discrepancies.append(
                    {"n": n, "edges": edges, "a": av, "b": bv, "issue": "partition failed verification"}
                )
                continue
            pt.feasible += 1
            if exists_feasible(g, a, b) is None:
                pt.discrepancies.append(
                    {"n": n, "edges": edges, "a": av, "b": bv, "issue": "oracle found no partition yet solve did"}
                )
    return rep


def crosscheck(
    n_max: int = 7,
    grid: Sequence[tuple[int, int]] = ((2, 2), (2, 3), (3, 2), (3, 3)),
    allow_n8: bool = False,
    workers: int = 1,
) -> CrosscheckReport:
    """Solve every enumerated C4-free graph meeting the degree hypothesis at
    each grid point, verify each output and compare with the exhaustive
    oracle. Discrepancies carry the offending edge list; the expected count
    is zero."""
    limit = 8 if allow_n8 else 7
    if n_max > limit:
        raise ValueError(f"crosscheck bounded at n <= {limit} (got {n_max}); pass allow_n8 to reach 8")
    grid_t = tuple((int(a), int(b)) for a, b in grid)
    for av, bv in grid_t:
        if av < 2 or bv < 2:
            raise ValueError("grid demands must be >= 2")
    total = _fresh_report(n_max, grid_t)
    chunks: list[tuple[int, int, int, tuple[tuple[int, int], ...]]] = []
    for n in range(1, n_max + 1):
        npairs = n * (n - 1) // 2
        top = 1 << npairs
        if workers > 1 and top > 4096:
            step = (top + workers * 4 - 1) // (workers * 4)
            chunks.extend((n, lo, min(lo + step, top), grid_t) for lo in range(0, top, step))
        else:
            chunks.append((n, 0, top, grid_t))
    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            for rep in pool.imap_unordered(_scan_chunk, chunks):
                total.merge(rep)
    else:
        for chunk in chunks:
            total.merge(_scan_chunk(chunk))
    return total
