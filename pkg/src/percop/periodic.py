"""Periodic temporal graphs, their footprints, arenas, journeys and padding."""

from __future__ import annotations

from collections import deque

from .graphs import Graph


class PeriodicGraph:
    """A period-p sequence of snapshots sharing the vertex set 0..n-1.

    Snapshot indices are read modulo p everywhere.  ``usnap`` maps each layer
    to an index into ``unique_snapshots`` so that solvers can cache per-snapshot
    work when the sequence repeats graphs (the shipped constructions repeat
    heavily).
    """

    __slots__ = ("n", "snapshots", "usnap", "unique_snapshots")

    def __init__(self, snapshots):
        snapshots = tuple(snapshots)
        if not snapshots:
            raise ValueError("period must be >= 1")
        n = snapshots[0].n
        if any(g.n != n for g in snapshots):
            raise ValueError("snapshots disagree on vertex count")
        self.n = n
        self.snapshots = snapshots
        uniq = []
        idx = {}
        us = []
        for g in snapshots:
            key = g.edges
            if key not in idx:
                idx[key] = len(uniq)
                uniq.append(g)
            us.append(idx[key])
        self.unique_snapshots = tuple(uniq)
        self.usnap = tuple(us)

    @property
    def period(self):
        return len(self.snapshots)

    def snapshot(self, t):
        return self.snapshots[t % self.period]

    def nbr_mask(self, t, u):
        """Closed neighborhood of u at time t, as a bitmask."""
        return self.snapshots[t % self.period].nbr_mask(u)

    def __eq__(self, other):
        return (
            isinstance(other, PeriodicGraph)
            and self.n == other.n
            and self.snapshots == other.snapshots
        )

    def __hash__(self):
        return hash((self.n, self.snapshots))

    def __repr__(self):
        return "PeriodicGraph(n=%d, p=%d)" % (self.n, self.period)


class Arena:
    """Layered directed view of a periodic graph: nodes are (layer, vertex).

    Every edge goes from layer t to layer [t+1]_p and ((t,u),(t+1,v)) is
    present exactly when v lies in the closed neighborhood of u at time t,
    so (t,u) always has the reflexive out-edge to (t+1,u).
    """

    __slots__ = ("p", "n", "edges")

    def __init__(self, p, n, edges):
        self.p = p
        self.n = n
        self.edges = frozenset(edges)

    def out_vertices(self, t, u):
        """Vertex projection of the out-neighborhood of temporal node (t,u)."""
        t1 = (t + 1) % self.p
        return sorted(v for ((a, b), (c, v)) in self.edges if (a, b, c) == (t, u, t1))


def build_arena(pg):
    edges = []
    p = pg.period
    for t in range(p):
        t1 = (t + 1) % p
        g = pg.snapshots[t]
        for u in range(pg.n):
            m = g.nbr_mask(u)
            v = m
            while v:
                w = (v & -v).bit_length() - 1
                edges.append(((t, u), (t1, w)))
                v &= v - 1
    return Arena(p, pg.n, edges)


def footprint(pg):
    edges = set()
    for g in pg.unique_snapshots:
        edges |= g.edges
    labels = {}
    for g in pg.snapshots:
        labels.update(g.labels)
    return Graph(pg.n, edges, labels)


def is_temporally_connected(pg):
    """True iff the footprint is connected (equivalent for periodic graphs)."""
    return footprint(pg).is_connected()


def foremost_journey(pg, t_start, u, v):
    """Earliest-arrival walk from u at time t_start to v, or None.

    Step i of the returned vertex list uses an edge of (or waits in) the
    snapshot at time t_start+i.  The search horizon is n*p steps: in a
    temporally connected periodic graph every vertex is reached within that
    bound, so None only occurs for unreachable targets.
    """
    if u == v:
        return [u]
    p = pg.period
    horizon = pg.n * p
    prev = {(0, u): None}
    # earliest arrival per (time mod p, vertex) dominates later revisits
    seen_mod = {(t_start % p, u)}
    frontier_keys = [(0, u)]
    for step in range(horizon):
        g = pg.snapshots[(t_start + step) % p]
        nxt_keys = []
        for key in frontier_keys:
            m = g.nbr_mask(key[1])
            x = m
            while x:
                y = (x & -x).bit_length() - 1
                x &= x - 1
                k2 = (step + 1, y)
                mod_key = ((t_start + step + 1) % p, y)
                if mod_key in seen_mod:
                    continue
                seen_mod.add(mod_key)
                prev[k2] = key
                if y == v:
                    out = [y]
                    k = key
                    while k is not None:
                        out.append(k[1])
                        k = prev[k]
                    out.reverse()
                    return out
                nxt_keys.append(k2)
        frontier_keys = nxt_keys
        if not frontier_keys:
            break
    return None


def arrival_time(t_start, journey):
    return t_start + len(journey) - 1


def induced(pg, vertices):
    """Induced periodic subgraph with vertices relabeled 0..|vs|-1.

    Returns (subgraph, mapping) where mapping sends old vertex -> new index.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("induced: empty vertex subset")
    if vs[0] < 0 or vs[-1] >= pg.n:
        raise ValueError("induced: vertex out of range")
    remap = {old: new for new, old in enumerate(vs)}
    snaps = []
    for g in pg.snapshots:
        edges = [(remap[u], remap[v]) for (u, v) in g.subgraph_edges(vs)]
        labels = {remap[u]: s for u, s in g.labels.items() if u in remap}
        snaps.append(Graph(len(vs), edges, labels))
    return PeriodicGraph(snaps), remap


def pad(pg, target_n, attach):
    """Append a path of target_n - n fresh vertices, hung at ``attach``.

    The whole path is present in every snapshot, which keeps the collapse map
    (path -> attach) a retraction of the footprint and of each snapshot.
    Requires period >= 2.
    """
    if pg.period < 2:
        raise ValueError("padding requires period >= 2")
    if target_n < pg.n:
        raise ValueError("pad: target_n %d < n %d" % (target_n, pg.n))
    if not (0 <= attach < pg.n):
        raise ValueError("pad: attach vertex out of range")
    extra = target_n - pg.n
    if extra == 0:
        return pg
    chain = [attach] + [pg.n + i for i in range(extra)]
    path_edges = [(chain[i], chain[i + 1]) for i in range(extra)]
    snaps = []
    for g in pg.snapshots:
        snaps.append(Graph(target_n, list(g.edges) + path_edges, g.labels))
    return PeriodicGraph(snaps)


def pad_collapse_map(pg, target_n, attach):
    """The retraction map sending every padded-path vertex back to ``attach``."""
    m = {u: u for u in range(pg.n)}
    for w in range(pg.n, target_n):
        m[w] = attach
    return m


def constant(g, p):
    """The period-p periodic graph whose every snapshot is g."""
    if p < 1:
        raise ValueError("period must be >= 1")
    return PeriodicGraph([g] * p)
