"""Exact tree decompositions for small graphs and the bag-based cop strategy.

The width bound transfers to periodic play: width+1 cops holding a bag of the
footprint, with one cop at a time walking stubbornly to the next bag, capture
the robber on any temporally connected periodic graph over that footprint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .periodic import footprint, foremost_journey, is_temporally_connected
from .solver import CopPolicy


@dataclass
class TreeDecomposition:
    """Bags indexed 0..b-1 with an undirected tree on the indexes."""

    bags: list          # list of frozensets of footprint vertices
    tree_edges: list    # list of (i, j) bag index pairs

    @property
    def width(self):
        return max(len(b) for b in self.bags) - 1

    def neighbors(self, i):
        out = []
        for a, b in self.tree_edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def as_dict(self):
        return {
            "width": self.width,
            "bags": [sorted(b) for b in self.bags],
            "tree_edges": [list(e) for e in sorted(self.tree_edges)],
        }


def validate_decomposition(td, g):
    """Return None if valid, else a string naming the violated condition."""
    nb = len(td.bags)
    for a, b in td.tree_edges:
        if not (0 <= a < nb and 0 <= b < nb):
            return "tree edge references a missing bag"
    # the tree must be a tree
    if nb > 0:
        if len(td.tree_edges) != nb - 1:
            return "bag graph is not a tree (edge count)"
        parent = list(range(nb))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in td.tree_edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return "bag graph is not a tree (cycle)"
            parent[ra] = rb
    covered = set()
    for b in td.bags:
        covered |= set(b)
    if covered != set(range(g.n)):
        return "some vertex appears in no bag"
    for u, v in g.edges:
        if not any(u in b and v in b for b in td.bags):
            return "some edge has no common bag"
    for u in range(g.n):
        holders = [i for i, b in enumerate(td.bags) if u in b]
        # the bags holding u must induce a connected subtree
        hold = set(holders)
        seen = {holders[0]}
        stack = [holders[0]]
        while stack:
            x = stack.pop()
            for a, b in td.tree_edges:
                y = None
                if a == x and b in hold:
                    y = b
                elif b == x and a in hold:
                    y = a
                if y is not None and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != hold:
            return "bags of vertex %d do not induce a subtree" % u
    return None


def _back_degree(open_adj, S, v):
    """Vertices outside S reachable from v by paths with interior inside S."""
    visited = 1 << v
    frontier = 1 << v
    out = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            u = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= open_adj[u]
        nxt &= ~visited
        visited |= nxt
        out |= nxt & ~S
        frontier = nxt & S
    return bin(out).count("1")


def exact_treewidth(g, limit=13):
    """(treewidth, minimal TreeDecomposition) by DP over elimination prefixes.

    f(S) = cheapest max back-degree over orderings eliminating S first; the
    optimum ordering is recovered by backtracking and turned into bags the
    usual way (bag of v = v plus its not-yet-eliminated fill neighbors).
    """
    if g.n == 0:
        raise ValueError("treewidth undefined for the empty graph")
    if g.n > limit:
        raise ValueError("exact treewidth limit exceeded: n=%d > %d" % (g.n, limit))
    n = g.n
    open_adj = [g.nbr_mask(v) & ~(1 << v) for v in range(n)]
    full = (1 << n) - 1
    f = [0] * (1 << n)
    f[0] = -1
    # subsets in increasing popcount order
    by_count = [[] for _ in range(n + 1)]
    for S in range(1 << n):
        by_count[bin(S).count("1")].append(S)
    for size in range(1, n + 1):
        for S in by_count[size]:
            best = n + 1
            m = S
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                Sv = S & ~(1 << v)
                cost = f[Sv]
                bd = _back_degree(open_adj, Sv, v)
                if bd > cost:
                    cost = bd
                if cost < best:
                    best = cost
            f[S] = best
    width = f[full]

    # recover an optimal elimination ordering, back to front
    order = [0] * n
    S = full
    for pos in range(n - 1, -1, -1):
        m = S
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            Sv = S & ~(1 << v)
            if max(f[Sv], _back_degree(open_adj, Sv, v)) == f[S] and f[Sv] <= f[S]:
                order[pos] = v
                S = Sv
                break
        else:
            raise AssertionError("elimination backtrack failed")

    # build bags along the ordering, adding fill edges as we go
    pos_of = {v: i for i, v in enumerate(order)}
    adj = [set(g.open_nbrs(v)) for v in range(n)]
    bag_of = [None] * n
    for i, v in enumerate(order):
        later = [u for u in adj[v] if pos_of[u] > i]
        bag_of[i] = frozenset([v] + later)
        for a in later:
            for b in later:
                if a != b:
                    adj[a].add(b)
        for u in later:
            adj[u].discard(v)
    tree_edges = []
    roots = []
    for i in range(n):
        later = [pos_of[u] for u in bag_of[i] if pos_of[u] > i]
        if later:
            tree_edges.append((i, min(later)))
        else:
            # last bag of a connected component
            roots.append(i)
    # chain component roots; their components share no vertices, so this
    # cannot break any vertex's bag subtree
    for a, b in zip(roots, roots[1:]):
        tree_edges.append((a, b))
    td = TreeDecomposition(bags=list(bag_of), tree_edges=tree_edges)
    bad = validate_decomposition(td, g)
    if bad is not None:
        raise AssertionError("constructed decomposition invalid: " + bad)
    return width, td


def is_smooth(td):
    k = td.width
    if any(len(b) != k + 1 for b in td.bags):
        return False
    for a, b in td.tree_edges:
        if len(td.bags[a] & td.bags[b]) != k:
            return False
    return True


def smooth(td, g):
    """Same-width decomposition with all bags of size k+1 and k-overlaps.

    Contract subset bags, pad small bags from a neighbor, then subdivide tree
    edges whose overlap is still below k by swapping one vertex at a time.
    """
    bad = validate_decomposition(td, g)
    if bad is not None:
        raise ValueError("invalid input decomposition: " + bad)
    k = td.width
    bags = {i: frozenset(b) for i, b in enumerate(td.bags)}
    adj = {i: set() for i in bags}
    for a, b in td.tree_edges:
        adj[a].add(b)
        adj[b].add(a)

    def contract_once():
        for x in sorted(bags):
            for y in sorted(adj[x]):
                if bags[x] <= bags[y]:
                    for z in adj[x]:
                        if z != y:
                            adj[z].discard(x)
                            adj[z].add(y)
                            adj[y].add(z)
                    adj[y].discard(x)
                    del adj[x]
                    del bags[x]
                    return True
        return False

    while True:
        while contract_once():
            pass
        small = [x for x in sorted(bags) if len(bags[x]) < k + 1]
        if not small:
            break
        if len(bags) == 1:
            # lone undersized bag can only happen on tiny graphs; width says
            # some bag has k+1 vertices, so a single bag is already full
            raise AssertionError("single bag smaller than width+1")
        x = small[0]
        y = min(adj[x])
        gain = sorted(bags[y] - bags[x])[: k + 1 - len(bags[x])]
        bags[x] = bags[x] | frozenset(gain)

    # subdivide low-overlap tree edges
    next_id = max(bags) + 1 if bags else 0
    edges = sorted(
        (x, y) for x in bags for y in adj[x] if x < y
    )
    for x, y in edges:
        if len(bags[x] & bags[y]) == k:
            continue
        adj[x].discard(y)
        adj[y].discard(x)
        prev = x
        cur = set(bags[x])
        while len(frozenset(cur) & bags[y]) < k:
            a = min(set(cur) - bags[y])
            b = min(bags[y] - cur)
            cur.discard(a)
            cur.add(b)
            bags[next_id] = frozenset(cur)
            adj[next_id] = set()
            adj[prev].add(next_id)
            adj[next_id].add(prev)
            prev = next_id
            next_id += 1
        adj[prev].add(y)
        adj[y].add(prev)

    ids = sorted(bags)
    remap = {old: i for i, old in enumerate(ids)}
    out = TreeDecomposition(
        bags=[bags[i] for i in ids],
        tree_edges=sorted(
            (remap[x], remap[y]) for x in ids for y in adj[x] if remap[x] < remap[y]
        ),
    )
    bad = validate_decomposition(out, g)
    if bad is not None:
        raise AssertionError("smoothing broke the decomposition: " + bad)
    if not is_smooth(out):
        raise AssertionError("smoothing failed to reach the smooth form")
    return out


def _side_vertices(td):
    """For each directed tree edge (x,y): vertices in bags of y's component of T-x."""
    sides = {}
    for x in range(len(td.bags)):
        for y in td.neighbors(x):
            seen = {x, y}
            comp = [y]
            stack = [y]
            while stack:
                z = stack.pop()
                for w in td.neighbors(z):
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            verts = set()
            for z in comp:
                verts |= set(td.bags[z])
            sides[(x, y)] = verts
    return sides


def bag_strategy(pg, td):
    """Width+1 cops: hold a bag, walk one cop stubbornly toward the robber.

    The policy keeps (current bag, target bag) as memory.  When idle it finds
    the tree neighbor on the robber's side and sends the unique cop outside
    the shared k vertices on re-planned foremost journeys to the unique new
    vertex; everyone else holds.  Any robber vertex adjacent to a cop in the
    current snapshot is captured greedily.
    """
    if not is_smooth(td):
        raise ValueError("bag_strategy requires a smooth decomposition")
    foot = footprint(pg)
    bad = validate_decomposition(td, foot)
    if bad is not None:
        raise ValueError("decomposition does not fit the footprint: " + bad)
    if not is_temporally_connected(pg):
        raise ValueError("bag_strategy requires a temporally connected instance")
    sides = _side_vertices(td)
    bags = td.bags
    start = 0
    initial = tuple(sorted(bags[start]))

    def step(memory, t, cops, robber):
        x, target = memory
        g = pg.snapshots[t % pg.period]
        # greedy capture beats everything
        for c in sorted(set(cops)):
            if (g.nbr_mask(c) >> robber) & 1:
                moved = list(cops)
                moved.remove(c)
                moved.append(robber)
                return tuple(sorted(moved)), (x, target)
        if target is not None:
            anchors = sorted(bags[x] & bags[target])
            rest = list(cops)
            for a in anchors:
                rest.remove(a)
            traveler = rest[0]
            dest = min(bags[target] - bags[x])
            if traveler == dest:
                x, target = target, None
        if target is None:
            if not td.neighbors(x):
                # single bag covers V; the robber cannot be placed uncaught
                return cops, (x, None)
            for y in td.neighbors(x):
                if robber in sides[(x, y)]:
                    target = y
                    break
            else:
                raise AssertionError("robber vertex in no side component")
        anchors = sorted(bags[x] & bags[target])
        rest = list(cops)
        for a in anchors:
            rest.remove(a)
        traveler = rest[0]
        dest = min(bags[target] - bags[x])
        journey = foremost_journey(pg, t, traveler, dest)
        nxt = journey[1] if len(journey) > 1 else traveler
        return tuple(sorted(anchors + [nxt])), (x, target)

    return CopPolicy(
        k=td.width + 1,
        initial_cops=initial,
        step=step,
        initial_memory=(start, None),
        origin="bag-strategy",
    )
