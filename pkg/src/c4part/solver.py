"""Certified bipartition solver for C4-free graphs under per-vertex degree demands.

Given demands a, b >= 2 with d(x) >= a(x) + b(x) - 1 everywhere, the solver
splits the vertex set into parts (A, B) with every A-vertex keeping at least
a(x) neighbors inside A and every B-vertex at least b(x) inside B. It returns
a machine-checkable certificate in every case: the feasible partition, a
4-cycle witness, or the degree-hypothesis violation. A diagnostic certificate
exists for internal-assertion failures only; it is never produced on valid
inputs.

Engine outline: demands are first tightened so d(x) = a(x) + b(x) - 1 holds
with equality (any partition feasible for the tightened demands is feasible
for the originals). A starting partition with no good subset on either side
comes from a minimal a-good set. Hill-climbing then maximizes

    w(A, B) = |E(A)| + |E(B)| + sum_{x in A} b(x) + sum_{x in B} a(x)

over single-vertex moves and pair swaps that keep both sides free of good
subsets. At a local maximum a cascade of probes runs: every probe either
finds a strictly better partition, extracts a disjoint pair of good sets
(extended to a feasible partition), or pins an explicit 4-cycle. Plateau
(equal-weight) exchanges are validated operationally - equal weight plus
both sides still degenerate - before any fact derived from them is used.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .degeneracy import DemandFn, f_core, minimal_good
from .graph import FourCycle, Graph, find_four_cycle, induced

VALIDATE = False  # full-recompute cross-checks after every move (slow; tests flip it)

_TRACE_CAP = 8192


class SolverInternalError(AssertionError):
    """An operational invariant failed; surfaced to callers as a Diagnostic."""


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class DegreeViolation:
    vertex: int
    degree: int
    required: int

    status = "degree_violation"


@dataclass(frozen=True)
class C4Witness:
    cycle: FourCycle

    status = "c4"


@dataclass(frozen=True)
class FeasiblePartition:
    a_side: tuple[int, ...]
    b_side: tuple[int, ...]

    status = "feasible"


@dataclass(frozen=True)
class Diagnostic:
    reason: str
    trace: tuple[str, ...]

    status = "diagnostic"


Certificate = DegreeViolation | C4Witness | FeasiblePartition | Diagnostic


@dataclass(frozen=True)
class FeasiblePair:
    """Disjoint sets, the first good under a, the second good under b."""

    a_set: frozenset[int]
    b_set: frozenset[int]


@dataclass(frozen=True)
class Configuration:
    """Local pattern around the deficient set of one side at a blocked state.

    Kinds (witnesses in parentheses):
      shared_anchor - two exact-demand vertices hang off one deficient vertex
                      (anchor; first, second exact)
      split_anchor  - two exact-demand vertices hang off distinct deficient
                      vertices (anchor, anchor2; first, second)
      chain         - exact pair first~second, only first touches the
                      deficient set (anchor)
      triangle      - anchor, first (exact), second (demand+1) form a triangle
      span          - path anchor~first~second~anchor2 with first exact,
                      second at demand+1
    """

    side: int
    kind: str
    anchor: int
    anchor2: int | None
    first: int
    second: int


@dataclass(frozen=True)
class SpecialPath:
    """Path first_a ~ anchor_a ~ anchor_b ~ first_b linking the two sides'
    deficient vertices through exact-demand neighbors."""

    first_a: int
    anchor_a: int
    anchor_b: int
    first_b: int


# probe outcomes (internal control flow; Pair/C4 become certificates)


class _Improved:
    """Marker: the state was mutated to a strictly heavier partition."""


class _Reenter:
    """Marker: equal-weight partition reached off the scheduled track;
    resume the outer climb loop from it."""


_IMPROVED = _Improved()
_REENTER = _Reenter()


@dataclass(frozen=True)
class _Pair:
    a_set: frozenset[int]
    b_set: frozenset[int]


@dataclass(frozen=True)
class _C4:
    cycle: FourCycle


@dataclass(frozen=True)
class _Feasible:
    a_side: frozenset[int]
    b_side: frozenset[int]


@dataclass(frozen=True)
class Refine:
    """Structure facts established by a probe that neither improved nor
    terminated (deficient sets, singleton side, plateau partner)."""

    facts: dict


# ---------------------------------------------------------------------------
# demand plumbing


def _check_demand_inputs(g: Graph, a: DemandFn, b: DemandFn) -> None:
    if g.n == 0:
        raise ValueError("solver needs a non-empty graph")
    if len(a) != g.n or len(b) != g.n:
        raise ValueError(f"demand length mismatch: graph has {g.n} vertices, got |a|={len(a)}, |b|={len(b)}")
    for x in range(g.n):
        if a[x] < 2 or b[x] < 2:
            raise ValueError(f"demands must be >= 2 everywhere; vertex {x} has a={a[x]}, b={b[x]}")


def verify_hypotheses(g: Graph, a: DemandFn, b: DemandFn) -> DegreeViolation | C4Witness | None:
    """Degree check first (smallest violating vertex), then 4-cycle check."""
    _check_demand_inputs(g, a, b)
    for x in range(g.n):
        need = a[x] + b[x] - 1
        if g.degree(x) < need:
            return DegreeViolation(vertex=x, degree=g.degree(x), required=need)
    cyc = find_four_cycle(g)
    if cyc is not None:
        return C4Witness(cycle=cyc)
    return None


def normalize(g: Graph, a: DemandFn, b: DemandFn) -> tuple[list[int], list[int]]:
    """Raise a pointwise until d(x) = a'(x) + b(x) - 1 exactly.

    Any partition feasible for (a', b) is feasible for (a, b). Requires the
    degree hypothesis to hold.
    """
    aa = []
    for x in range(g.n):
        slack = g.degree(x) - a[x] - b[x] + 1
        if slack < 0:
            raise ValueError(f"vertex {x} violates the degree hypothesis; normalize is undefined")
        aa.append(a[x] + slack)
    return aa, list(b)


@dataclass(frozen=True)
class DemandPair:
    """Demand functions bundled with their per-vertex surplus over the
    degree hypothesis (zero everywhere once normalized)."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    @staticmethod
    def constant(n: int, a: int, b: int) -> "DemandPair":
        return DemandPair(a=(a,) * n, b=(b,) * n)

    def slack(self, g: Graph) -> list[int]:
        return [g.degree(x) - self.a[x] - self.b[x] + 1 for x in range(g.n)]


# ---------------------------------------------------------------------------
# partition state


class PartitionState:
    """Mutable bipartition with cached in-side degrees, weight and deficient sets.

    Side 0 carries demand `a`, side 1 demand `b`. The structure itself is
    permissive (sides may transiently be anything); the solver maintains the
    no-good-subset invariant through its own checks.
    """

    __slots__ = ("g", "dem", "side", "d0", "weight", "defic", "sides", "trace", "stats")

    def __init__(self, g: Graph, a: DemandFn, b: DemandFn, a_members: Iterable[int]):
        self.g = g
        self.dem = (tuple(a), tuple(b))
        amem = set(a_members)
        self.side = [1] * g.n
        for v in amem:
            self.side[v] = 0
        self.sides = (amem, set(range(g.n)) - amem)
        self.d0 = [len(g.adj[v] & amem) for v in range(g.n)]
        self.weight = self._weight_direct()
        self.defic = (set(), set())
        for v in range(g.n):
            s = self.side[v]
            if self.d_in(v, s) <= self.dem[s][v] - 1:
                self.defic[s].add(v)
        self.trace: deque[str] = deque(maxlen=_TRACE_CAP)
        self.stats = {
            "climb_iterations": 0,
            "improving_moves": 0,
            "plateau_exchanges": 0,
            "blocked_states": 0,
            "probes": 0,
        }

    def _weight_direct(self) -> int:
        g, (a, b) = self.g, self.dem
        e0 = sum(self.d0[v] for v in self.sides[0]) // 2
        e1 = sum(g.degree(v) - self.d0[v] for v in self.sides[1]) // 2
        return e0 + e1 + sum(b[v] for v in self.sides[0]) + sum(a[v] for v in self.sides[1])

    def d_in(self, v: int, s: int) -> int:
        """Neighbors of v inside side s (v itself may live on either side)."""
        return self.d0[v] if s == 0 else self.g.degree(v) - self.d0[v]

    def slack(self, v: int) -> int:
        s = self.side[v]
        return self.dem[s][v] - self.d_in(v, s)

    def a_members(self) -> frozenset[int]:
        return frozenset(self.sides[0])

    def move(self, v: int) -> None:
        """Flip v to the other side, maintaining degrees, weight and deficient sets."""
        g = self.g
        s = self.side[v]
        t = 1 - s
        self.weight += self.d_in(v, t) - self.d_in(v, s) + self.dem[s][v] - self.dem[t][v]
        self.side[v] = t
        self.sides[s].discard(v)
        self.sides[t].add(v)
        if s == 0:
            for w in g.nbrs[v]:
                self.d0[w] -= 1
        else:
            for w in g.nbrs[v]:
                self.d0[w] += 1
        self._refresh_defic(v)
        for w in g.nbrs[v]:
            self._refresh_defic(w)
        if VALIDATE:
            self._validate()

    def _refresh_defic(self, v: int) -> None:
        s = self.side[v]
        o = 1 - s
        self.defic[o].discard(v)
        if self.d_in(v, s) <= self.dem[s][v] - 1:
            self.defic[s].add(v)
        else:
            self.defic[s].discard(v)

    def _validate(self) -> None:
        assert self.weight == self._weight_direct(), "cached weight drifted"
        for v in range(self.g.n):
            s = self.side[v]
            assert self.d0[v] == len(self.g.adj[v] & self.sides[0])
            assert (v in self.defic[s]) == (self.d_in(v, s) <= self.dem[s][v] - 1)

    def note(self, event: str) -> None:
        self.trace.append(event)

    def __repr__(self) -> str:
        return f"PartitionState(|A|={len(self.sides[0])}, |B|={len(self.sides[1])}, w={self.weight})"


# ---------------------------------------------------------------------------
# weight bookkeeping (from-scratch oracles for the cached quantities)


def weight(g: Graph, a: DemandFn, b: DemandFn, a_members: Iterable[int]) -> int:
    """w(A, B) = |E(A)| + |E(B)| + sum_{x in A} b(x) + sum_{x in B} a(x), recomputed."""
    amem = set(a_members)
    e0 = e1 = 0
    w = 0
    for v in range(g.n):
        dv0 = len(g.adj[v] & amem)
        if v in amem:
            e0 += dv0
            w += b[v]
        else:
            e1 += g.degree(v) - dv0
            w += a[v]
    return e0 // 2 + e1 // 2 + w


def delta_move(state: PartitionState, u: int) -> int:
    """Weight change of moving u to the other side: 2*slack(u) - 1.

    Valid only under normalized demands (d = a + b - 1 pointwise).
    """
    return 2 * state.slack(u) - 1


def delta_swap(state: PartitionState, u: int, v: int) -> int:
    """Weight change of exchanging u and v across sides: 2*(alpha + beta - 1 - adj).

    Valid only under normalized demands; u and v must be on opposite sides.
    """
    if state.side[u] == state.side[v]:
        raise ValueError("delta_swap needs vertices on opposite sides")
    delta = 1 if state.g.has_edge(u, v) else 0
    return 2 * (state.slack(u) + state.slack(v) - 1 - delta)


# ---------------------------------------------------------------------------
# lazy peel: core of (side s) + extra - exclude without rebuilding the side


def _peel(state: PartitionState, s: int, extra: int | None, exclude: int | None) -> tuple[set[int], int]:
    """Peel the candidate set C = members(s) + {extra} - {exclude} down to its
    demand-s core; returns (removed vertices, |C|). Degrees are materialized
    lazily off the cached in-side counts, so an early-stabilizing peel stays
    cheap."""
    g = state.g
    dem = state.dem[s]
    side = state.side
    adj = g.adj
    size = len(state.sides[s]) + (extra is not None) - (exclude is not None)

    def base(v: int) -> int:
        d = state.d_in(v, s)
        if exclude is not None and exclude in adj[v]:
            d -= 1
        if extra is not None and extra in adj[v]:
            d += 1
        return d

    deg: dict[int, int] = {}
    stack: list[int] = []
    seeds: list[int] = [v for v in state.defic[s] if v != exclude]
    if exclude is not None:
        seeds.extend(w for w in adj[exclude] if side[w] == s)
    if extra is not None:
        seeds.append(extra)
    for v in seeds:
        if v in deg:
            continue
        dv = base(v)
        deg[v] = dv
        if dv < dem[v]:
            stack.append(v)
    removed: set[int] = set()
    while stack:
        v = stack.pop()
        if v in removed:
            continue
        removed.add(v)
        for w in adj[v]:
            if w in removed:
                continue
            if w != extra and (side[w] != s or w == exclude):
                continue
            dw = deg.get(w)
            if dw is None:
                dw = base(w)
            deg[w] = dw - 1
            if dw == dem[w]:
                stack.append(w)
    return removed, size


def _core_empty(state: PartitionState, s: int, extra: int | None = None, exclude: int | None = None) -> bool:
    removed, size = _peel(state, s, extra, exclude)
    return len(removed) == size


def side_core(state: PartitionState, s: int, extra: int | None = None, exclude: int | None = None) -> set[int]:
    """Maximal demand-s-good subset of members(s) + {extra} - {exclude}."""
    removed, size = _peel(state, s, extra, exclude)
    if len(removed) == size:
        return set()
    core = {v for v in state.sides[s] if v != exclude and v not in removed}
    if extra is not None and extra not in removed:
        core.add(extra)
    return core


# ---------------------------------------------------------------------------
# probes


def _mk_pair(state: PartitionState, set0: set[int], set1: set[int]) -> _Pair:
    """Package (demand-a-good, demand-b-good) sets after sanity checks."""
    g, (a, b) = state.g, state.dem
    if not set0 or not set1 or set0 & set1:
        raise SolverInternalError("probe produced an invalid pair")
    for v in set0:
        if len(g.adj[v] & set0) < a[v]:
            raise SolverInternalError(f"pair a-side not a-good at {v}")
    for v in set1:
        if len(g.adj[v] & set1) < b[v]:
            raise SolverInternalError(f"pair b-side not b-good at {v}")
    return _Pair(a_set=frozenset(set0), b_set=frozenset(set1))


def _mk_c4(state: PartitionState, cyc: tuple[int, int, int, int]) -> _C4:
    four = FourCycle(cyc)
    if not four.validates_in(state.g):
        raise SolverInternalError(f"derived 4-cycle {cyc} is not a cycle of the graph")
    state.note(f"c4 {cyc}")
    return _C4(four)


def _probe_pair(state: PartitionState, ax: int, x: int, y: int) -> _Improved | _Pair:
    """Non-adjacent deficient pair probe: x deficient on side ax, y on the
    other side. Either one of the augmented sides has an empty core - then
    the corresponding move strictly improves the weight - or the two cores
    form a disjoint good pair."""
    bx = 1 - ax
    state.stats["probes"] += 1
    if y in state.g.adj[x]:
        raise SolverInternalError("pair probe needs a non-adjacent pair")
    if x not in state.defic[ax] or y not in state.defic[bx]:
        raise SolverInternalError("pair probe needs deficient vertices")
    core_b = side_core(state, bx, extra=x)
    if not core_b:
        state.note(f"improve move {x}")
        state.stats["improving_moves"] += 1
        state.move(x)
        return _IMPROVED
    core_a = side_core(state, ax, extra=y)
    if not core_a:
        state.note(f"improve move {y}")
        state.stats["improving_moves"] += 1
        state.move(y)
        return _IMPROVED
    if x in core_a or y in core_b:
        raise SolverInternalError("probe cores kept a deficient endpoint")
    state.note(f"pair probe ({x},{y})")
    if ax == 0:
        return _mk_pair(state, core_a, core_b)
    return _mk_pair(state, core_b, core_a)


def pair_probe(state: PartitionState, u: int, v: int) -> _Pair:
    """Blocked-state probe for a non-adjacent deficient pair (u on side 0,
    v on side 1). Both augmented cores must exist at a blocked state; the
    outcome is a disjoint good pair."""
    if v in state.g.adj[u]:
        raise ValueError("pair_probe requires a non-adjacent pair")
    out = _probe_pair(state, 0, u, v)
    if not isinstance(out, _Pair):
        raise SolverInternalError("pair_probe found an improving move at a blocked state")
    return out


def swap_probe(state: PartitionState, u: int, v: int) -> _Improved | _Pair | Refine:
    """Attempt the u<->v exchange from a blocked partition.

    Both sides stay free of good subsets: the exchange is applied; strictly
    positive gain reports an improvement, zero gain a plateau partner.
    Otherwise a good subset appears on one side and pairs disjointly with
    the blocked-move core of the other side.
    """
    if state.side[u] != 0 or state.side[v] != 1:
        raise ValueError("swap_probe expects u on side 0 and v on side 1")
    alpha, beta = state.slack(u), state.slack(v)
    adj_uv = 1 if state.g.has_edge(u, v) else 0
    core_b = side_core(state, 1, extra=u, exclude=v)
    if core_b:
        if u not in core_b:
            raise SolverInternalError("exchange core on side b must contain the moved vertex")
        core_a = side_core(state, 0, extra=v)
        if not core_a:
            state.stats["improving_moves"] += 1
            state.move(v)  # gain 2*beta - 1
            return _IMPROVED
        if u in core_a:
            raise SolverInternalError("side-a core retained u despite its slack")
        return _mk_pair(state, core_a, core_b)
    core_a = side_core(state, 0, extra=v, exclude=u)
    if core_a:
        if v not in core_a:
            raise SolverInternalError("exchange core on side a must contain the moved vertex")
        core_b2 = side_core(state, 1, extra=u)
        if not core_b2:
            state.stats["improving_moves"] += 1
            state.move(u)
            return _IMPROVED
        if v in core_b2:
            raise SolverInternalError("side-b core retained v despite its slack")
        return _mk_pair(state, core_a, core_b2)
    # both sides stay degenerate: apply
    state.move(u)
    state.move(v)
    gain = 2 * (alpha + beta - 1 - adj_uv)
    if gain > 0:
        state.stats["improving_moves"] += 1
        return _IMPROVED
    state.stats["plateau_exchanges"] += 1
    return Refine(facts={"plateau": True, "exchanged": (u, v), "weight": state.weight})


def _exchange(state: PartitionState, x: int, y: int) -> None | _Pair:
    """Equal-weight exchange of x and y (opposite sides), validated: the
    weight must be unchanged and both sides must stay free of good subsets.
    If both sides end up with good subsets they are disjoint by construction
    and salvage a pair; any other validation failure is an internal error."""
    if state.side[x] == state.side[y]:
        raise SolverInternalError("exchange needs opposite sides")
    w0 = state.weight
    state.note(f"exchange ({x},{y})")
    state.stats["plateau_exchanges"] += 1
    state.move(x)
    state.move(y)
    if state.weight != w0:
        raise SolverInternalError(f"scheduled exchange ({x},{y}) changed the weight")
    c0 = side_core(state, 0)
    c1 = side_core(state, 1)
    if not c0 and not c1:
        return None
    if c0 and c1:
        return _mk_pair(state, c0, c1)
    raise SolverInternalError(f"exchange ({x},{y}) broke one-sided degeneracy")


def star_structure(state: PartitionState) -> _C4 | Refine:
    """Blocked-state shape checks once every cross-deficient pair is adjacent.

    Two deficient vertices on each side force a 4-cycle through the complete
    bipartite deficiency adjacency, as does any vertex with two neighbors in
    the opposite-role deficient set. Otherwise at least one deficient set is
    a singleton and every outside vertex touches each deficient set at most
    once; those facts are reported."""
    d0 = sorted(state.defic[0])
    d1 = sorted(state.defic[1])
    if not d0 or not d1:
        raise SolverInternalError("blocked partition lost a deficient set")
    if len(d0) >= 2 and len(d1) >= 2:
        return _mk_c4(state, (d0[0], d1[0], d0[1], d1[1]))
    for s in (0, 1):
        dd = sorted(state.defic[s])
        other = state.defic[1 - s]
        counts: dict[int, int] = {}
        for t in dd:
            for w in state.g.nbrs[t]:
                counts[w] = counts.get(w, 0) + 1
        for w in sorted(counts):
            if counts[w] >= 2 and w not in other:
                x, y = sorted(state.g.adj[w] & state.defic[s])[:2]
                opp = min(other)
                return _mk_c4(state, (w, x, opp, y))
    return Refine(
        facts={
            "deficient_a": tuple(d0),
            "deficient_b": tuple(d1),
            "singleton_side": "a" if len(d0) == 1 else "b",
        }
    )


def _terminal_all_deficient(state: PartitionState, s: int) -> _C4 | _Feasible:
    """Whole side s deficient: it induces a perfect matching of demand-2
    vertices all hanging off the opposite singleton deficient vertex; moving
    that vertex over yields a feasible partition unless a 4-cycle shows up."""
    g = state.g
    other = state.defic[1 - s]
    if len(other) != 1:
        raise SolverInternalError("all-deficient side needs a singleton opposite deficient set")
    v = min(other)
    members = sorted(state.sides[s])
    dem = state.dem[s]
    for ui in members:
        if dem[ui] != 2 or state.d_in(ui, s) != 1 or not g.has_edge(ui, v):
            raise SolverInternalError("all-deficient side shape check failed")
    mset = state.sides[s] | {v}
    for x in sorted(state.sides[1 - s]):
        if x == v:
            continue
        nb = sorted(g.adj[x] & mset)
        if len(nb) >= 2:
            if nb[-1] == v:
                y = nb[0]
                yj = min(g.adj[y] & state.sides[s])
                return _mk_c4(state, (x, y, yj, v))
            return _mk_c4(state, (x, nb[0], v, nb[1]))
    part_s = frozenset(mset)
    part_o = frozenset(state.sides[1 - s] - {v})
    if not part_o:
        raise SolverInternalError("terminal move emptied a side")
    state.note(f"terminal all-deficient side {s}")
    if s == 0:
        return _Feasible(a_side=part_s, b_side=part_o)
    return _Feasible(a_side=part_o, b_side=part_s)


def detect_configuration(state: PartitionState, s: int) -> Configuration | _C4:
    """Classify the local pattern around side s's deficient set at a blocked
    state (all slacks 1, cross-deficiency complete bipartite, star facts
    established). Structure violations surface as explicit 4-cycles or
    internal errors."""
    g = state.g
    dem = state.dem[s]
    dstar = state.defic[s]
    rest = sorted(state.sides[s] - dstar)
    if len(rest) < 2:
        raise SolverInternalError("side with deficient set removed has fewer than 2 vertices")
    opp = min(state.defic[1 - s])
    crit: list[int] = []
    anchor_of: dict[int, int] = {}
    for w in rest:
        star_nbrs = g.adj[w] & dstar
        k = len(star_nbrs)
        if state.d_in(w, s) - k > dem[w] - 1:
            continue
        if k >= 2:
            x, y = sorted(star_nbrs)[:2]
            return _mk_c4(state, (w, x, opp, y))
        if k == 0:
            raise SolverInternalError(f"critical vertex {w} below demand inside its side")
        crit.append(w)
        anchor_of[w] = min(star_nbrs)
    if not crit:
        raise SolverInternalError("no critical vertex beside a non-empty deficient set")
    if len(crit) >= 2:
        u1, u2 = crit[0], crit[1]
        p1, p2 = anchor_of[u1], anchor_of[u2]
        if p1 == p2:
            return Configuration(side=s, kind="shared_anchor", anchor=p1, anchor2=None, first=u1, second=u2)
        return Configuration(side=s, kind="split_anchor", anchor=p1, anchor2=p2, first=u1, second=u2)
    u1 = crit[0]
    u = anchor_of[u1]
    restset = state.sides[s] - dstar
    u2 = None
    for x in sorted(g.adj[u1] & restset):
        if x == u1:
            continue
        if state.d_in(x, s) - len(g.adj[x] & dstar) == dem[x]:
            u2 = x
            break
    if u2 is None:
        raise SolverInternalError("no exact companion next to the unique critical vertex")
    q = sorted(g.adj[u2] & dstar)
    if len(q) >= 2:
        return _mk_c4(state, (u2, q[0], opp, q[1]))
    if not q:
        return Configuration(side=s, kind="chain", anchor=u, anchor2=None, first=u1, second=u2)
    if q[0] == u:
        return Configuration(side=s, kind="triangle", anchor=u, anchor2=None, first=u1, second=u2)
    return Configuration(side=s, kind="span", anchor=u, anchor2=q[0], first=u1, second=u2)


# ---------------------------------------------------------------------------
# hill climb


def climb(state: PartitionState) -> _Pair | None:
    """Apply strictly improving moves until none is left.

    Per iteration, first match wins, vertices in ascending order: move a
    deficient side-0 vertex whose arrival keeps side 1 degenerate; mirror
    move; then a positive swap keeping both sides degenerate. When both move
    directions are blocked and some cross-deficient pair is non-adjacent,
    the blocked-move cores of that pair form a disjoint good pair - returned
    instead of a partition. Returns None once blocked; the state then sits at
    a local maximum of the move menu."""
    g = state.g
    while True:
        state.stats["climb_iterations"] += 1
        moved = False
        for u in sorted(state.defic[0]):
            if _core_empty(state, 1, extra=u):
                if len(state.sides[0]) < 2:
                    raise SolverInternalError("move would empty side a")
                state.note(f"move {u}->b")
                state.stats["improving_moves"] += 1
                state.move(u)
                moved = True
                break
        if moved:
            continue
        for v in sorted(state.defic[1]):
            if _core_empty(state, 0, extra=v):
                if len(state.sides[1]) < 2:
                    raise SolverInternalError("move would empty side b")
                state.note(f"move {v}->a")
                state.stats["improving_moves"] += 1
                state.move(v)
                moved = True
                break
        if moved:
            continue
        # both move directions blocked; look for a non-adjacent deficient pair
        d1s = sorted(state.defic[1])
        for u in sorted(state.defic[0]):
            nb = g.adj[u]
            for v in d1s:
                if v not in nb:
                    state.note(f"blocked-pair probe ({u},{v})")
                    return pair_probe(state, u, v)
        # positive swaps that keep both sides degenerate
        for u in sorted(state.defic[0]):
            for v in d1s:
                if delta_swap(state, u, v) <= 0:
                    continue
                if _core_empty(state, 0, extra=v, exclude=u) and _core_empty(state, 1, extra=u, exclude=v):
                    state.note(f"swap ({u},{v})")
                    state.stats["improving_moves"] += 1
                    state.move(u)
                    state.move(v)
                    moved = True
                    break
            if moved:
                break
        if moved:
            continue
        return None


# ---------------------------------------------------------------------------
# blocked-state pipeline


ScheduleOutcome = _Improved | _Reenter | _Pair | _C4 | _Feasible


def _blocked_pipeline(state: PartitionState) -> ScheduleOutcome:
    """Probes at a blocked partition: slack sweep, star checks, all-deficient
    terminal, configuration detection, then the exchange schedule."""
    state.stats["blocked_states"] += 1
    # Any deficient vertex with slack >= 2 pairs with an opposite deficient
    # vertex into a positive blocked swap; its failed degeneracy certifies a pair.
    for s in (0, 1):
        for x in sorted(state.defic[s]):
            if state.slack(x) >= 2:
                y = min(state.defic[1 - s])
                state.note(f"slack-sweep swap probe ({x},{y})")
                out = swap_probe(state, x, y) if s == 0 else swap_probe(state, y, x)
                if isinstance(out, Refine):
                    raise SolverInternalError("positive blocked swap reported a plateau")
                return out
    out = star_structure(state)
    if isinstance(out, _C4):
        return out
    for s in (0, 1):
        if len(state.defic[s]) == len(state.sides[s]):
            return _terminal_all_deficient(state, s)
    conf0 = detect_configuration(state, 0)
    if isinstance(conf0, _C4):
        return conf0
    conf1 = detect_configuration(state, 1)
    if isinstance(conf1, _C4):
        return conf1
    return plateau_schedule(state, conf0, conf1)


# ---------------------------------------------------------------------------
# plateau schedule


def plateau_schedule(state: PartitionState, conf0: Configuration, conf1: Configuration) -> ScheduleOutcome:
    """Bounded exchange schedule run at a blocked partition with both sides'
    configurations in hand.

    Every branch ends in a strict improvement, a disjoint good pair, an
    explicit 4-cycle, or (rarely) an equal-weight partition handed back to
    the climb loop. Exchanges are validated before any derived fact is used.
    """
    g = state.g
    cA, cB = conf0, conf1
    u, u1 = cA.anchor, cA.first
    v, v1 = cB.anchor, cB.first
    state.note(f"schedule path {u1}~{u}~{v}~{v1}")
    e_a = g.has_edge(u1, v)
    e_b = g.has_edge(v1, u)
    if e_a and e_b:
        return _mk_c4(state, (u, u1, v, v1))
    if not e_a and not e_b:
        return _path_probe(state, cA.side, u, v, u1, v1)
    if e_b:
        cA, cB = cB, cA
        u, u1, v, v1 = v, v1, u, u1
    # orientation: u1 ~ v and v1 !~ u
    ax = cA.side
    if cA.kind == "triangle":
        return _mk_c4(state, (cA.second, u1, v, u))
    if cA.kind == "span":
        return _mk_c4(state, (u1, cA.second, cA.anchor2, v))
    if cB.kind == "chain":
        return _opposite_chain(state, ax, u, u1, cB)
    if cA.kind == "shared_anchor":
        return _shared_anchor_case(state, ax, u, u1, cA.second, v, v1)
    if cA.kind == "split_anchor":
        return _split_anchor_case(state, ax, cA, cB)
    return _chain_case(state, ax, u, u1, cA.second, cB)


def _path_probe(state: PartitionState, ax: int, u: int, v: int, x: int, y: int) -> ScheduleOutcome:
    """Both cross edges absent: exchange the deficient pair (equal weight),
    after which x and y are the new deficient pair; they are either adjacent,
    closing the 4-cycle x-u-v-y, or probeable."""
    if state.g.has_edge(x, y):
        return _mk_c4(state, (x, u, v, y))
    salvage = _exchange(state, u, v)
    if salvage is not None:
        return salvage
    return _probe_pair(state, ax, x, y)


def _opposite_chain(state: PartitionState, ax: int, u: int, u1: int, cB: Configuration) -> ScheduleOutcome:
    """Opposite side in a chain configuration (v1~v, v2~v1, v2 away from v):
    ruled out by one exchange regardless of this side's configuration."""
    v, v1, v2 = cB.anchor, cB.first, cB.second
    for x, y, cyc in (
        (u, v2, (u, v2, v1, v)),
        (u1, v1, (u, u1, v1, v)),
        (u1, v2, (u1, v2, v1, v)),
    ):
        if state.g.has_edge(x, y):
            return _mk_c4(state, cyc)
    salvage = _exchange(state, u, v1)
    if salvage is not None:
        return salvage
    return _probe_pair(state, ax, u1, v2)


def _shared_anchor_case(state: PartitionState, ax: int, u: int, u1: int, u2: int, v: int, v1: int) -> ScheduleOutcome:
    """Two exact vertices u1, u2 off one anchor u, with u1~v: the second
    path through u2 either closes a 4-cycle or reduces to a path probe."""
    if state.g.has_edge(u2, v):
        return _mk_c4(state, (u1, u, u2, v))
    return _path_probe(state, ax, u, v, u2, v1)


def _split_anchor_case(state: PartitionState, ax: int, cA: Configuration, cB: Configuration) -> ScheduleOutcome:
    """Exact vertices off two distinct anchors. Either some critical vertex
    avoids the opposite deficient vertex v - then a path through its anchor
    resolves the state - or all critical vertices crowd onto v and the side
    contains a chain configuration to hand to the chain case."""
    g = state.g
    bx = 1 - ax
    u, u1 = cA.anchor, cA.first
    v, v1 = cB.anchor, cB.first
    v2 = cB.second
    if len(state.defic[bx]) != 1:
        raise SolverInternalError("split-anchor side opposite a non-singleton deficient set")
    if cB.kind not in ("shared_anchor", "triangle"):
        raise SolverInternalError(f"unexpected opposite configuration {cB.kind} for split anchors")
    dstar = state.defic[ax]
    crit: list[int] = []
    anchor_of: dict[int, int] = {}
    for w in sorted(state.sides[ax] - dstar):
        star_nbrs = g.adj[w] & dstar
        if state.d_in(w, ax) - len(star_nbrs) <= state.dem[ax][w] - 1:
            if len(star_nbrs) >= 2:
                x, y = sorted(star_nbrs)[:2]
                return _mk_c4(state, (w, x, v, y))
            crit.append(w)
            anchor_of[w] = min(star_nbrs)
    for w in crit:
        if g.has_edge(w, v):
            continue
        wp = anchor_of[w]
        if wp == u:
            return _shared_anchor_case(state, ax, u, u1, w, v, v1)
        if g.has_edge(v1, wp):
            if cB.kind == "triangle":
                return _mk_c4(state, (wp, v, v2, v1))
            if g.has_edge(wp, v2):
                return _mk_c4(state, (v1, wp, v2, v))
            return _path_probe(state, ax, wp, v, w, v2)
        return _path_probe(state, ax, wp, v, w, v1)
    # every critical vertex is adjacent to v
    ds = dstar | set(crit)
    for x in sorted(state.sides[ax]):
        nb = sorted((g.adj[x] & ds) - {x})
        if len(nb) >= 2:
            return _mk_c4(state, (x, nb[0], v, nb[1]))
    outside = state.sides[ax] - ds
    pick = None
    for x in sorted(outside):
        if len(g.adj[x] & outside) <= state.dem[ax][x] - 1:
            pick = x
            break
    if pick is None:
        raise SolverInternalError("no deficient vertex outside the anchored region")
    nb = sorted(g.adj[pick] & ds)
    if len(nb) != 1 or nb[0] in dstar:
        raise SolverInternalError("anchored-region vertex with unexpected attachment")
    xp = nb[0]
    xpp = anchor_of[xp]
    if g.has_edge(v1, xpp):
        return _mk_c4(state, (xp, xpp, v1, v))
    return _chain_case(state, ax, xpp, xp, pick, cB)


def _chain_case(state: PartitionState, ax: int, u: int, u1: int, u2: int, cB: Configuration) -> ScheduleOutcome:
    """Chain u2~u1~u on this side (u1, u2 exact, u2 away from the deficient
    set), u1~v established. Dispatch on the opposite configuration."""
    g = state.g
    v, v1, v2 = cB.anchor, cB.first, cB.second
    if cB.kind == "shared_anchor":
        for x, y, cyc in (
            (u1, v1, (u, u1, v1, v)),
            (u2, v1, (u2, v1, v, u1)),
            (v2, u, (v2, u, u1, v)),
        ):
            if g.has_edge(x, y):
                return _mk_c4(state, cyc)
        salvage = _exchange(state, u, v1)
        if salvage is not None:
            return salvage
        if g.has_edge(v1, v2):
            if g.has_edge(u1, v2):
                return _mk_c4(state, (u1, v2, v1, v))
            return _probe_pair(state, ax, u1, v2)
        if g.has_edge(u2, v):
            return _mk_c4(state, (u2, v, u, u1))
        if g.has_edge(u1, v2):
            return _mk_c4(state, (u1, v2, v, u))
        salvage = _exchange(state, u1, v)
        if salvage is not None:
            return salvage
        if g.has_edge(u2, v2):
            return _mk_c4(state, (u2, v2, v, u1))
        return _probe_pair(state, ax, u2, v2)
    if cB.kind == "split_anchor":
        vp = cB.anchor2
        assert vp is not None
        for x, y, cyc in (
            (u1, vp, (v, u, vp, u1)),
            (u2, vp, (u2, vp, u, u1)),
            (v, vp, (vp, v, u1, u)),
            (v1, vp, (v1, vp, u, v)),
            (u1, v1, (u1, v1, v, u)),
            (u1, v2, (u1, v2, vp, u)),
        ):
            if g.has_edge(x, y):
                return _mk_c4(state, cyc)
        salvage = _exchange(state, u1, vp)
        if salvage is not None:
            return salvage
        if g.has_edge(u, v2):
            if g.has_edge(u2, v2):
                return _mk_c4(state, (u, v2, u2, u1))
            return _probe_pair(state, ax, u2, v2)
        return _probe_pair(state, ax, u, v2)
    if cB.kind == "triangle":
        for x, y, cyc in (
            (u1, v1, (u, u1, v1, v)),
            (u2, v, (u2, v, u, u1)),
            (u2, v1, (u2, v1, v, u1)),
            (u, v2, (u, v2, v1, v)),
            (u1, v2, (u1, v2, v1, v)),
        ):
            if g.has_edge(x, y):
                return _mk_c4(state, cyc)
        salvage = _exchange(state, u, v)
        if salvage is not None:
            return salvage
        salvage = _exchange(state, u1, v1)
        if salvage is not None:
            return salvage
        if g.has_edge(u2, v2):
            return _mk_c4(state, (u2, v2, v, u1))
        return _probe_pair(state, ax, u2, v2)
    if cB.kind != "span":
        raise SolverInternalError(f"unknown opposite configuration {cB.kind}")
    return _span_case(state, ax, u, u1, u2, cB)


def _span_case(state: PartitionState, ax: int, u: int, u1: int, u2: int, cB: Configuration) -> ScheduleOutcome:
    """Chain opposite a span (v1~v, v2~v1, v2~vp with vp a second deficient
    vertex). A double exchange lands on an equal-weight partition whose fresh
    deficient sets are re-probed; on the proof track the span regenerates one
    level deeper and a final targeted exchange isolates a probeable pair."""
    g = state.g
    bx = 1 - ax
    v, v1, v2 = cB.anchor, cB.first, cB.second
    vp = cB.anchor2
    assert vp is not None
    for x, y, cyc in (
        (u2, v, (u2, v, u, u1)),
        (u2, v1, (u2, v1, v, u1)),
        (u1, vp, (u1, vp, u, v)),
        (v, vp, (vp, v, u1, u)),
        (v1, vp, (v1, vp, u, v)),
        (v2, u, (v2, u, v, v1)),
        (v2, u1, (v2, u1, v, v1)),
        (v2, v, (v2, v, u, vp)),
        (u1, v1, (u, u1, v1, v)),
    ):
        if g.has_edge(x, y):
            return _mk_c4(state, cyc)
    salvage = _exchange(state, u, v)
    if salvage is not None:
        return salvage
    salvage = _exchange(state, u1, v1)
    if salvage is not None:
        return salvage
    # fresh deficiency sweep on the landed partition
    da = sorted(state.defic[ax])
    db = sorted(state.defic[bx])
    for x in da:
        for y in db:
            if not g.has_edge(x, y):
                return _probe_pair(state, ax, x, y)
    if len(da) >= 2 and len(db) >= 2:
        return _mk_c4(state, (da[0], db[0], da[1], db[1]))
    if db != [u1] or v not in da or u2 not in da:
        state.note("span landing off the expected track")
        return _REENTER
    # critical scan with the opposite singleton u1
    dstar = state.defic[ax]
    crit: list[int] = []
    anchors: dict[int, int] = {}
    for w in sorted(state.sides[ax] - dstar):
        star_nbrs = g.adj[w] & dstar
        if state.d_in(w, ax) - len(star_nbrs) <= state.dem[ax][w] - 1:
            if len(star_nbrs) >= 2:
                x, y = sorted(star_nbrs)[:2]
                return _mk_c4(state, (w, x, u1, y))
            if not star_nbrs:
                raise SolverInternalError("critical vertex below demand after span exchange")
            crit.append(w)
            anchors[w] = min(star_nbrs)
    if crit != [v1]:
        state.note("span landing grew extra critical vertices")
        return _REENTER
    restset = state.sides[ax] - dstar
    v3 = None
    for x in sorted(g.adj[v1] & restset):
        if x != v1 and state.d_in(x, ax) - len(g.adj[x] & dstar) == state.dem[ax][x]:
            v3 = x
            break
    if v3 is None:
        state.note("span landing lacks a companion")
        return _REENTER
    q = sorted(g.adj[v3] & dstar)
    if len(q) >= 2:
        return _mk_c4(state, (v3, q[0], u1, q[1]))
    if not q or q[0] == v:
        state.note("span landing regrew a chain or triangle")
        return _REENTER
    vpp = q[0]
    # u1~vpp holds: both deficient, and the sweep above found no gap
    for x, y, cyc in (
        (v2, vpp, (v2, vpp, v3, v1)),
        (vpp, v, (v, v1, v3, vpp)),
        (vpp, vp, (vpp, vp, u, u1)),
        (vpp, u, (u, v, u1, vpp)),
    ):
        if g.has_edge(x, y):
            return _mk_c4(state, cyc)
    salvage = _exchange(state, vpp, v2)
    if salvage is not None:
        return salvage
    return _probe_pair(state, ax, v, vp)


# ---------------------------------------------------------------------------
# start, extension, verification


def initial_partition(g: Graph, a: DemandFn, b: DemandFn) -> FeasiblePair | PartitionState:
    """Starting point under normalized demands.

    Take a minimal a-good set M (the whole vertex set is a-good since every
    demand leaves slack b-1 >= 1). If the complement holds a b-good core the
    two sets already form a feasible pair. Otherwise shed an exact-demand
    vertex of M to the complement; both sides of the resulting partition are
    free of good subsets.
    """
    M = minimal_good(g, range(g.n), a)
    if M is None or len(M) >= g.n:
        raise SolverInternalError("normalized demands must admit a proper minimal a-good set")
    B = set(range(g.n)) - M
    core = f_core(g, B, b)
    if core:
        return FeasiblePair(a_set=frozenset(M), b_set=frozenset(core))
    exact = [v for v in sorted(M) if len(g.adj[v] & M) == a[v]]
    if not exact:
        raise SolverInternalError("minimal a-good set lacks an exact-demand vertex")
    x = exact[0]
    return PartitionState(g, a, b, a_members=M - {x})


def extend_pair(g: Graph, a: DemandFn, b: DemandFn, pair: FeasiblePair) -> tuple[set[int], set[int]]:
    """Grow a feasible pair into a feasible partition.

    Unassigned vertices with enough neighbors in the a-side join it
    (ascending id, re-scanned after every move); once none qualifies, every
    leftover has at most a(x)-1 neighbors there, hence at least b(x) among
    the rest, and the whole remainder joins the b-side.
    """
    A, B = set(pair.a_set), set(pair.b_set)
    if A & B:
        raise ValueError("feasible pair sides overlap")
    C = set(range(g.n)) - A - B
    da = {x: len(g.adj[x] & A) for x in C}
    heap = [x for x in C if da[x] >= a[x]]
    heapq.heapify(heap)
    while heap:
        x = heapq.heappop(heap)
        if x not in C or da[x] < a[x]:
            continue
        A.add(x)
        C.discard(x)
        for w in g.adj[x]:
            if w in C:
                da[w] += 1
                if da[w] >= a[w]:
                    heapq.heappush(heap, w)
    B |= C
    for v in A:
        if len(g.adj[v] & A) < a[v]:
            raise SolverInternalError(f"extension left {v} short on the a-side")
    for v in B:
        if len(g.adj[v] & B) < b[v]:
            raise SolverInternalError(f"extension left {v} short on the b-side")
    return A, B


def verify_feasible(g: Graph, a: DemandFn, b: DemandFn, partition: tuple[Iterable[int], Iterable[int]]) -> bool:
    """Check a partition against the demands; malformed partitions raise."""
    A, B = set(partition[0]), set(partition[1])
    if not A or not B:
        raise ValueError("both sides of a partition must be non-empty")
    if A & B or len(A) + len(B) != g.n or (A | B) != set(range(g.n)):
        raise ValueError("sides must partition the vertex set")
    for v in A:
        if len(g.adj[v] & A) < a[v]:
            return False
    for v in B:
        if len(g.adj[v] & B) < b[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# solve


@dataclass
class SolveStats:
    climb_iterations: int = 0
    improving_moves: int = 0
    plateau_exchanges: int = 0
    blocked_states: int = 0
    probes: int = 0
    early_pair: bool = False

    def as_dict(self) -> dict:
        return {
            "climb_iterations": self.climb_iterations,
            "improving_moves": self.improving_moves,
            "plateau_exchanges": self.plateau_exchanges,
            "blocked_states": self.blocked_states,
            "probes": self.probes,
            "early_pair": self.early_pair,
        }


def _finish_pair(
    g: Graph, a: DemandFn, b: DemandFn, aa: DemandFn, bb: DemandFn, pair: FeasiblePair | _Pair
) -> FeasiblePartition:
    fp = pair if isinstance(pair, FeasiblePair) else FeasiblePair(pair.a_set, pair.b_set)
    A, B = extend_pair(g, aa, bb, fp)
    if not verify_feasible(g, a, b, (A, B)):
        raise SolverInternalError("extended partition failed verification against the original demands")
    return FeasiblePartition(a_side=tuple(sorted(A)), b_side=tuple(sorted(B)))


def solve_with_stats(g: Graph, a: DemandFn, b: DemandFn) -> tuple[Certificate, SolveStats]:
    """Full solve: hypothesis checks, normalization, climb/probe loop.

    Deterministic: identical inputs give identical certificates. Every
    FeasiblePartition is re-verified against the original demands before
    being returned.
    """
    stats = SolveStats()
    pre = verify_hypotheses(g, a, b)
    if pre is not None:
        return pre, stats
    aa, bb = normalize(g, a, b)
    state: PartitionState | None = None
    try:
        init = initial_partition(g, aa, bb)
        if isinstance(init, FeasiblePair):
            stats.early_pair = True
            return _finish_pair(g, a, b, aa, bb, init), stats
        state = init
        visited: set[int] = set()
        last_weight = None
        while True:
            out = climb(state)
            if isinstance(out, _Pair):
                return _finish_pair(g, a, b, aa, bb, out), _collect(stats, state)
            if state.weight != last_weight:
                visited.clear()
                last_weight = state.weight
            key = sum(1 << v for v in state.sides[0])
            if key in visited:
                raise SolverInternalError("plateau schedule revisited a partition")
            visited.add(key)
            res = _blocked_pipeline(state)
            if isinstance(res, _Pair):
                return _finish_pair(g, a, b, aa, bb, res), _collect(stats, state)
            if isinstance(res, _C4):
                return C4Witness(cycle=res.cycle), _collect(stats, state)
            if isinstance(res, _Feasible):
                part = (set(res.a_side), set(res.b_side))
                if not verify_feasible(g, a, b, part):
                    raise SolverInternalError("terminal partition failed verification")
                return (
                    FeasiblePartition(a_side=tuple(sorted(res.a_side)), b_side=tuple(sorted(res.b_side))),
                    _collect(stats, state),
                )
            # _IMPROVED or _REENTER: keep climbing from the mutated state
    except SolverInternalError as err:
        trace = tuple(state.trace) if state is not None else ()
        return Diagnostic(reason=str(err), trace=trace), (_collect(stats, state) if state else stats)


def _collect(stats: SolveStats, state: PartitionState) -> SolveStats:
    stats.climb_iterations = state.stats["climb_iterations"]
    stats.improving_moves = state.stats["improving_moves"]
    stats.plateau_exchanges = state.stats["plateau_exchanges"]
    stats.blocked_states = state.stats["blocked_states"]
    stats.probes = state.stats["probes"]
    return stats


def solve(g: Graph, a: DemandFn, b: DemandFn) -> Certificate:
    """Partition g into an a-good and a b-good side, or certify why not."""
    cert, _ = solve_with_stats(g, a, b)
    return cert


# ---------------------------------------------------------------------------
# corollary applications


def k_way(g: Graph, demands: Sequence[int]) -> list[set[int]] | Certificate:
    """Split g into k parts, part i inducing minimum degree >= demands[i].

    Needs every demand >= 2 and minimum degree >= sum(demands) - (k - 1).
    Recursive: solve for (s1, s2+...+sk-(k-2)), keep the a-side, recurse on
    the graph induced by the b-side (4-cycle-freeness is hereditary).
    Certificates from any level propagate out, re-indexed to g's vertices.
    """
    if not demands:
        raise ValueError("k_way needs at least one demand")
    if any(s < 2 for s in demands):
        raise ValueError("k_way demands must all be >= 2")
    if len(demands) == 1:
        s1 = demands[0]
        if g.min_degree() >= s1:
            return [set(range(g.n))]
        vertex = min(v for v in range(g.n) if g.degree(v) < s1)
        return DegreeViolation(vertex=vertex, degree=g.degree(vertex), required=s1)
    s1 = demands[0]
    rest = sum(demands[1:]) - (len(demands) - 2)
    cert = solve(g, [s1] * g.n, [rest] * g.n)
    if not isinstance(cert, FeasiblePartition):
        return cert
    parts = [set(cert.a_side)]
    sub, index = induced(g, cert.b_side)
    back = {new: old for old, new in index.items()}
    rec = k_way(sub, demands[1:])
    if not isinstance(rec, list):
        return _reindex_certificate(rec, back)
    parts.extend({back[v] for v in part} for part in rec)
    return parts


def _reindex_certificate(cert: Certificate, back: dict[int, int]) -> Certificate:
    if isinstance(cert, DegreeViolation):
        return DegreeViolation(vertex=back[cert.vertex], degree=cert.degree, required=cert.required)
    if isinstance(cert, C4Witness):
        w, x, y, z = cert.cycle.vertices
        return C4Witness(cycle=FourCycle((back[w], back[x], back[y], back[z])))
    if isinstance(cert, FeasiblePartition):
        return FeasiblePartition(
            a_side=tuple(sorted(back[v] for v in cert.a_side)),
            b_side=tuple(sorted(back[v] for v in cert.b_side)),
        )
    return cert


def disjoint_cycles(g: Graph, k: int) -> list[list[int]] | Certificate:
    """k pairwise vertex-disjoint cycles in a 4-cycle-free graph with minimum
    degree >= k + 1, found through a k-way split into minimum-degree-2 parts."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.min_degree() < k + 1:
        vertex = min(v for v in range(g.n) if g.degree(v) < k + 1)
        return DegreeViolation(vertex=vertex, degree=g.degree(vertex), required=k + 1)
    cyc = find_four_cycle(g)
    if cyc is not None:
        return C4Witness(cycle=cyc)
    parts = k_way(g, [2] * k)
    if not isinstance(parts, list):
        return parts
    cycles = []
    for part in parts:
        cycles.append(_extract_cycle(g, part))
    return cycles


def _extract_cycle(g: Graph, part: set[int]) -> list[int]:
    """Walk inside a minimum-degree-2 part, always to the smallest neighbor
    other than the previous vertex, until the first repeat closes a cycle."""
    start = min(part)
    path = [start]
    seen = {start: 0}
    prev = -1
    cur = start
    while True:
        nxt = min(w for w in g.adj[cur] if w in part and w != prev)
        if nxt in seen:
            cycle = path[seen[nxt] :]
            assert len(cycle) >= 3
            return cycle
        seen[nxt] = len(path)
        path.append(nxt)
        prev, cur = cur, nxt
