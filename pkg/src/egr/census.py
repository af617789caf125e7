"""Exact girth measurement and girth-cycle census.

A cycle of length L through edge (u, w) closes a simple path of L-1 edges
from u to w whose interior avoids both endpoints, so per-edge counting is
a depth-bounded DFS over an integer adjacency cache.  Girth is the minimum
over truncated BFS runs rooted at every point vertex; every cycle in these
bipartite graphs alternates sides, so point roots see all of them.  The
census never assumes vertex-transitivity.

Exhaustive runs fan the per-edge counts over a worker pool and merge them
by edge index, so output is identical for any worker count or scheduling.
"""

from __future__ import annotations

import multiprocessing
import os
from collections import deque
from dataclasses import dataclass, field as dataclass_field

from . import adg
from .adg import RelationSet, Side, Vertex
from .families import FamilySpec, relations
from .finite_field import Field

_NO_CYCLE = 1 << 30

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg:
    """64-bit linear congruential generator; draws use the top 31 bits."""

    def __init__(self, seed: int = 0):
        self.state = seed & _MASK64

    def next_raw(self) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) & _MASK64
        return self.state

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("bound must be positive")
        return (self.next_raw() >> 33) % n


# -- census modes ------------------------------------------------------------

@dataclass(frozen=True)
class BaseEdgeOnly:
    def describe(self) -> str:
        return "base-edge-only"


@dataclass(frozen=True)
class Sampled:
    seed: int = 0
    count: int = 256

    def describe(self) -> str:
        return f"sampled:seed={self.seed},count={self.count}"


@dataclass(frozen=True)
class Exhaustive:
    def describe(self) -> str:
        return "exhaustive"


CensusMode = BaseEdgeOnly | Sampled | Exhaustive


class NonUniformCountsError(Exception):
    """Two edges of the same graph lie on different numbers of girth cycles.

    This falsifies edge-girth-regularity for the graph at hand; the two
    offending edges are kept as (point_id, line_id, count) witnesses.
    """

    def __init__(self, witness_a, witness_b):
        self.witness_a = witness_a
        self.witness_b = witness_b
        super().__init__(
            f"per-edge girth-cycle counts differ: edge {witness_a[:2]} lies on "
            f"{witness_a[2]} cycles, edge {witness_b[:2]} on {witness_b[2]}"
        )


@dataclass
class EgrCertificate:
    """Measured regularity data: order, degree, girth, per-edge cycle count."""

    family: str
    q: int
    index: int | None
    v: int
    k: int
    g: int
    lam: int
    mode: str
    total_girth_cycles: int
    per_edge_counts: dict[tuple[int, int], int] = dataclass_field(repr=False, default=None)

    def parameters(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.g, self.lam)


def certificate_to_json(cert: EgrCertificate, field: Field, elapsed_ms: float, workers: int) -> dict:
    return {
        "family": cert.family,
        "q": cert.q,
        "index": cert.index,
        "field": field.to_json(),
        "v": cert.v,
        "k": cert.k,
        "g": cert.g,
        "lambda": cert.lam,
        "mode": cert.mode,
        "total_girth_cycles": cert.total_girth_cycles,
        "elapsed_ms": elapsed_ms,
        "workers": workers,
    }


# -- graph context -----------------------------------------------------------

@dataclass
class GraphContext:
    """A graph instance with its field, relations and adjacency cache."""

    field: Field
    rel: RelationSet
    adj: list[tuple[int, ...]]

    @classmethod
    def build(cls, spec: FamilySpec) -> "GraphContext":
        return cls.from_relations(relations(spec))

    @classmethod
    def from_relations(cls, rel: RelationSet) -> "GraphContext":
        return cls(field=rel.field, rel=rel, adj=adg.build_adjacency(rel))

    @property
    def n_points(self) -> int:
        return len(self.adj) // 2

    @property
    def n_vertices(self) -> int:
        return len(self.adj)


# -- girth -------------------------------------------------------------------

def girth_of_adjacency(adj, n_points: int, cap: int = _NO_CYCLE) -> int:
    """Shortest cycle length, or _NO_CYCLE if none shorter than cap exists.

    Truncated BFS from every point root.  A non-tree edge touching depths
    dx and dy witnesses a closed walk of length dx + dy + 1 containing a
    cycle no longer than that, so the running minimum only shrinks; a root
    on a shortest cycle realizes it exactly.  Nodes at depth dx with
    2*dx >= best cannot improve the minimum and are not expanded.
    """
    n = len(adj)
    best = cap
    dist = [0] * n
    parent = [0] * n
    stamp = [0] * n
    token = 0
    for root in range(n_points):
        token += 1
        dq = deque((root,))
        stamp[root] = token
        dist[root] = 0
        parent[root] = -1
        while dq:
            x = dq.popleft()
            dx = dist[x]
            if 2 * dx >= best:
                break
            px = parent[x]
            dx1 = dx + 1
            for y in adj[x]:
                if stamp[y] != token:
                    stamp[y] = token
                    dist[y] = dx1
                    parent[y] = x
                    dq.append(y)
                elif y != px:
                    c = dx + dist[y] + 1
                    if c < best:
                        best = c
        if best == 4:
            break
    return best


def girth(spec: FamilySpec, hint: int | None = None) -> int:
    """Exact girth; an even hint caps BFS depth at hint/2 and is validated."""
    ctx = GraphContext.build(spec)
    return girth_of_context(ctx, hint)


def girth_of_context(ctx: GraphContext, hint: int | None = None) -> int:
    if hint is not None:
        if hint % 2 or hint < 4:
            raise ValueError(f"girth hint must be an even integer >= 4, got {hint}")
        g = girth_of_adjacency(ctx.adj, ctx.n_points, cap=hint + 2)
        if g > hint:
            raise ValueError(f"no cycle of length <= {hint} found; hint is wrong")
        return g
    g = girth_of_adjacency(ctx.adj, ctx.n_points)
    if g >= _NO_CYCLE:
        raise ValueError("graph is acyclic; no girth")
    return g


# -- per-edge path counting ---------------------------------------------------

def count_simple_paths(adj, u: int, w: int, length: int) -> int:
    """Simple paths from u to w with `length` edges, interior avoiding u, w.

    Depth-first over the adjacency cache with an on-path visited table; the
    two deepest levels are flattened into plain loops since they dominate
    the running time.
    """
    n = len(adj)
    target = bytearray(n)
    for y in adj[w]:
        target[y] = 1
    if length == 1:
        return 1 if target[u] else 0
    visited = bytearray(n)
    visited[u] = 1
    visited[w] = 1

    def rec(x: int, remaining: int) -> int:
        c = 0
        if remaining == 2:
            for y in adj[x]:
                if target[y] and not visited[y]:
                    c += 1
            return c
        if remaining == 3:
            # z != y needs no check: consecutive vertices alternate sides
            for y in adj[x]:
                if not visited[y]:
                    for z in adj[y]:
                        if target[z] and not visited[z]:
                            c += 1
            return c
        rem = remaining - 1
        for y in adj[x]:
            if not visited[y]:
                visited[y] = 1
                c += rec(y, rem)
                visited[y] = 0
        return c

    return rec(u, length)


def cycles_through_edge_ids(adj, u: int, w: int, length: int) -> int:
    return count_simple_paths(adj, u, w, length - 1)


def count_cycles_through_edge(
    spec: FamilySpec, edge: tuple[Vertex, Vertex], length: int
) -> int:
    """Exact number of cycles of the given even length containing the edge."""
    if length % 2 or length < 4:
        raise ValueError(f"cycle length must be an even integer >= 4, got {length}")
    ctx = GraphContext.build(spec)
    a, b = edge
    if a.side is Side.LINE:
        a, b = b, a
    if not adg.adjacent(a, b, ctx.rel):
        raise ValueError("the given vertex pair is not an edge")
    u = adg.vertex_id(a, ctx.rel)
    w = adg.vertex_id(b, ctx.rel)
    return cycles_through_edge_ids(ctx.adj, u, w, length)


# -- parallel per-edge census --------------------------------------------------

_WORKER_STATE: tuple | None = None


def _worker_init(adj, length):
    global _WORKER_STATE
    _WORKER_STATE = (adj, length)


def _worker_count(chunk):
    adj, length = _WORKER_STATE
    return [count_simple_paths(adj, u, w, length) for u, w in chunk]


def _count_edges(ctx: GraphContext, edges: list[tuple[int, int]], g: int, workers: int):
    """Count (g-1)-paths for each listed edge; order-stable and parallel-safe."""
    length = g - 1
    if workers > 1 and len(edges) >= 4:
        try:
            mp = multiprocessing.get_context("fork")
        except ValueError:
            mp = None
        if mp is not None:
            chunks = _split(edges, 4 * workers)
            with mp.Pool(workers, initializer=_worker_init, initargs=(ctx.adj, length)) as pool:
                parts = pool.map(_worker_count, chunks)
            return [c for part in parts for c in part]
    return [count_simple_paths(ctx.adj, u, w, length) for u, w in edges]


def _split(items: list, pieces: int) -> list[list]:
    pieces = max(1, min(pieces, len(items)))
    size, extra = divmod(len(items), pieces)
    out, start = [], 0
    for i in range(pieces):
        stop = start + size + (1 if i < extra else 0)
        out.append(items[start:stop])
        start = stop
    return out


def default_workers() -> int:
    return os.cpu_count() or 1


# -- certification -------------------------------------------------------------

def _base_edge_ids(ctx: GraphContext) -> tuple[int, int]:
    base_line = ctx.n_points  # all-zero line
    if base_line not in ctx.adj[0]:
        raise ValueError("the all-zero point and line are not adjacent in this graph")
    return 0, base_line


def _sample_edges(ctx: GraphContext, seed: int, count: int) -> list[tuple[int, int]]:
    rng = Lcg(seed)
    q = ctx.field.q
    drawn = {}
    for _ in range(count):
        pid = rng.below(ctx.n_points)
        lid = ctx.adj[pid][rng.below(q)]
        drawn[(pid, lid)] = None
    return list(drawn)


def _check_uniform(edges, counts):
    first = counts[0]
    for e, c in zip(edges, counts):
        if c != first:
            raise NonUniformCountsError(
                (edges[0][0], edges[0][1], first), (e[0], e[1], c)
            )


def certify(
    spec: FamilySpec,
    mode: CensusMode = Exhaustive(),
    *,
    workers: int | None = None,
    girth_hint: int | None = None,
) -> EgrCertificate:
    """Measure (v, k, g, lambda) for the family instance.

    Exhaustive mode counts through every edge and insists the counts agree;
    Sampled does the same on a seeded pseudo-random edge set; BaseEdgeOnly
    counts through the all-zero edge alone, which certifies lambda only for
    graphs already known to be edge-transitive.
    """
    return _certify_context(
        GraphContext.build(spec),
        mode,
        workers,
        girth_hint,
        family=spec.family.value,
        q=spec.q,
        index=spec.index,
    )


def certify_relations(
    rel: RelationSet,
    mode: CensusMode = Exhaustive(),
    *,
    workers: int | None = None,
    girth_hint: int | None = None,
    family: str = "custom",
) -> EgrCertificate:
    """certify() for an arbitrary relation set, named families or not."""
    return _certify_context(
        GraphContext.from_relations(rel),
        mode,
        workers,
        girth_hint,
        family=family,
        q=rel.field.q,
        index=None,
    )


def _certify_context(
    ctx: GraphContext,
    mode: CensusMode,
    workers: int | None,
    girth_hint: int | None,
    *,
    family: str,
    q: int,
    index: int | None,
) -> EgrCertificate:
    if workers is None:
        workers = default_workers()
    g = girth_of_context(ctx, girth_hint)
    v = ctx.n_vertices
    k = ctx.field.q

    if isinstance(mode, BaseEdgeOnly):
        edges = [_base_edge_ids(ctx)]
    elif isinstance(mode, Sampled):
        edges = _sample_edges(ctx, mode.seed, mode.count)
    elif isinstance(mode, Exhaustive):
        edges = [(pid, lid) for pid in range(ctx.n_points) for lid in ctx.adj[pid]]
    else:
        raise TypeError(f"unknown census mode {mode!r}")

    counts = _count_edges(ctx, edges, g, workers)
    if not isinstance(mode, BaseEdgeOnly):
        _check_uniform(edges, counts)
    lam = counts[0]
    if g % 2:
        raise ValueError(f"odd girth {g} in a bipartite graph; census is inconsistent")
    if lam < 1:
        raise ValueError("counted edge lies on no girth cycle; the graph is not edge-girth-regular")

    numerator = v * k * lam
    if numerator % (2 * g):
        raise ValueError(
            f"v*k*lambda = {numerator} is not divisible by 2g = {2 * g}; census is inconsistent"
        )
    total = numerator // (2 * g)
    if isinstance(mode, Exhaustive):
        edge_sum = sum(counts)
        if edge_sum != g * total:
            raise ValueError(
                f"handshake failure: per-edge counts sum to {edge_sum}, expected {g * total}"
            )
    return EgrCertificate(
        family=family,
        q=q,
        index=index,
        v=v,
        k=k,
        g=g,
        lam=lam,
        mode=mode.describe(),
        total_girth_cycles=total,
        per_edge_counts=dict(zip(edges, counts)),
    )


def count_cycles_total(spec: FamilySpec, length: int | None = None, *, workers: int | None = None) -> int:
    """Total girth cycles, counted independently as (sum over edges) / length."""
    if workers is None:
        workers = default_workers()
    ctx = GraphContext.build(spec)
    g = girth_of_context(ctx)
    if length is None:
        length = g
    elif length != g:
        raise ValueError(f"length {length} differs from the measured girth {g}")
    edges = [(pid, lid) for pid in range(ctx.n_points) for lid in ctx.adj[pid]]
    counts = _count_edges(ctx, edges, g, workers)
    edge_sum = sum(counts)
    if edge_sum % length:
        raise ValueError(
            f"edge-count sum {edge_sum} is not divisible by the cycle length {length}"
        )
    return edge_sum // length


def estimated_census_cost(spec: FamilySpec, g: int) -> int:
    """Rough inner-loop operation count for an exhaustive census."""
    q, d = spec.q, spec.dimension
    return q ** (d + 1) * q * q * max(1, (q - 1)) ** (g - 4)


def auto_mode(spec: FamilySpec, g: int, *, budget: int = 10**9, seed: int = 0) -> CensusMode:
    """Exhaustive when the cost estimate fits the budget, else a 256-edge sample."""
    if estimated_census_cost(spec, g) <= budget:
        return Exhaustive()
    return Sampled(seed=seed, count=256)
