"""Exact k-copwin decision by backward induction on the configuration game.

States are C((t,c_1..c_k),(t',r)) with a side-to-move bit: the cops move first
in G_t, then the robber moves in G_t, then the layer advances.  The cop-win
region is the least fixpoint computed by a queue-based attractor over integer
encoded states; ranks count cop moves to capture and are exact under optimal
play (FIFO processing yields the min-max value).

Capture convention: any co-location ends the game for the cops, including the
robber stepping onto a cop.  The stricter rule (only a cop moving onto the
robber captures) gives the same winner since a co-located cop can stand still
on its next move; the relaxation just shaves a ply off some ranks.  Cops may
share a vertex (multisets); pass allow_stacking=False to forbid it.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass, field
from math import comb

from . import periodic as _periodic
from .graphs import Graph, domination_number

DEFAULT_STATE_BUDGET = 10**8

COPS_TO_MOVE = 0
ROBBER_TO_MOVE = 1


class BudgetError(RuntimeError):
    def __init__(self, estimate, budget):
        super().__init__(
            "solver state budget exceeded: %d states > %d" % (estimate, budget)
        )
        self.estimate = estimate
        self.budget = budget


def _state_budget(explicit):
    if explicit is not None:
        return int(explicit)
    env = os.environ.get("PERCOP_STATE_BUDGET")
    if env:
        return int(env)
    return DEFAULT_STATE_BUDGET


class SolveResult:
    """Outcome of one is_k_copwin run, with the full win region and ranks."""

    def __init__(self, pg, k, allow_stacking, copwin, initial_placement,
                 encoder, win, rank):
        self.pg = pg
        self.k = k
        self.allow_stacking = allow_stacking
        self.copwin = copwin
        self.initial_placement = initial_placement
        self._enc = encoder
        self._win = win
        self._rank = rank

    def is_cop_win(self, t, cops, robber, side=COPS_TO_MOVE):
        return self._win[self._enc.state_id(t, cops, robber, side)] == 1

    def rank_of(self, t, cops, robber, side=COPS_TO_MOVE):
        """Cop moves to capture from a cop-winning state; None outside the region."""
        s = self._enc.state_id(t, cops, robber, side)
        if not self._win[s]:
            return None
        return self._rank[s]

    def win_count(self):
        return sum(self._win)

    def state_count(self):
        return len(self._win)

    def optimal_cop_move(self, t, cops, robber):
        """Rank-minimizing feasible cop move, capture first, lex tie-break."""
        enc = self._enc
        t %= enc.p
        ci = enc.cfg_index[tuple(sorted(cops))]
        best = None
        for cj in enc.cop_succ(enc.us[t], ci):
            cfg = enc.cfgs[cj]
            if robber in cfg:
                move_rank = 0
            else:
                s = enc.raw_id(t, cj, robber, ROBBER_TO_MOVE)
                if not self._win[s]:
                    continue
                move_rank = self._rank[s]
            key = (move_rank, cfg)
            if best is None or key < best[0]:
                best = (key, cfg)
        if best is None:
            raise ValueError("no winning cop move from this state")
        return best[1]

    def policy(self):
        """Memoryless optimal policy over the win region."""
        def step(memory, t, cops, robber):
            return self.optimal_cop_move(t, cops, robber), memory

        return CopPolicy(
            k=self.k,
            initial_cops=self.initial_placement,
            step=step,
            initial_memory=None,
            origin="optimal",
        )


class _Encoder:
    """Integer state encoding plus cached move generation per unique snapshot."""

    def __init__(self, pg, k, allow_stacking):
        self.pg = pg
        self.k = k
        self.p = pg.period
        self.n = pg.n
        self.us = pg.usnap
        if allow_stacking:
            cfgs = list(itertools.combinations_with_replacement(range(self.n), k))
        else:
            cfgs = list(itertools.combinations(range(self.n), k))
        self.cfgs = cfgs
        self.cfg_index = {c: i for i, c in enumerate(cfgs)}
        self.nc = len(cfgs)
        masks = []
        for c in cfgs:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        self.cfg_masks = masks
        self.nbrs = [
            [g.closed_nbrs(v) for v in range(self.n)]
            for g in pg.unique_snapshots
        ]
        self._succ_cache = {}
        self._allow_stacking = allow_stacking

    def raw_id(self, t, ci, r, side):
        return (((t * self.nc + ci) * self.n + r) << 1) | side

    def state_id(self, t, cops, robber, side):
        t %= self.p
        ci = self.cfg_index[tuple(sorted(cops))]
        return self.raw_id(t, ci, robber, side)

    def cop_succ(self, snap, ci):
        """Successor cop configs in a snapshot; the relation is symmetric."""
        key = (snap, ci)
        got = self._succ_cache.get(key)
        if got is not None:
            return got
        nbrs = self.nbrs[snap]
        options = [nbrs[c] for c in self.cfgs[ci]]
        seen = set()
        for moved in itertools.product(*options):
            tup = tuple(sorted(moved))
            if not self._allow_stacking and any(
                tup[i] == tup[i + 1] for i in range(len(tup) - 1)
            ):
                continue
            seen.add(self.cfg_index[tup])
        out = sorted(seen)
        self._succ_cache[key] = out
        return out


def is_k_copwin(pg, k, state_budget=None, allow_stacking=True):
    """Decide whether k cops win on pg, returning the full SolveResult.

    copwin means: some initial cop placement beats every robber placement.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    budget = _state_budget(state_budget)
    n, p = pg.n, pg.period
    nc = comb(n + k - 1, k) if allow_stacking else comb(n, k)
    estimate = p * nc * n * 2
    if estimate > budget:
        raise BudgetError(estimate, budget)

    enc = _Encoder(pg, k, allow_stacking)
    nc = enc.nc
    ns = p * nc * n * 2
    win = bytearray(ns)
    rank = [0] * ns
    # robber escape counters, indexed by state_id >> 1
    counter = [0] * (ns >> 1)
    us = enc.us
    nbrs = enc.nbrs
    for t in range(p):
        deg = [len(nbrs[us[t]][r]) for r in range(n)]
        base_t = t * nc
        for ci in range(nc):
            base = (base_t + ci) * n
            for r in range(n):
                counter[base + r] = deg[r]

    queue = deque()
    for t in range(p):
        base_t = t * nc
        for ci, mask in enumerate(enc.cfg_masks):
            base = (base_t + ci) * n
            m = mask
            while m:
                r = (m & -m).bit_length() - 1
                m &= m - 1
                idx = base + r
                s_cop = idx << 1
                win[s_cop] = 1
                win[s_cop | 1] = 1
                queue.append(s_cop)
                queue.append(s_cop | 1)

    cop_succ = enc.cop_succ
    while queue:
        s = queue.popleft()
        side = s & 1
        idx = s >> 1
        r = idx % n
        tc = idx // n
        ci = tc % nc
        t = tc // nc
        rs = rank[s]
        if side == ROBBER_TO_MOVE:
            # cop predecessors at the same layer can move into this config
            rk = rs + 1
            for cj in cop_succ(us[t], ci):
                s2 = ((tc - ci + cj) * n + r) << 1
                if not win[s2]:
                    win[s2] = 1
                    rank[s2] = rk
                    queue.append(s2)
        else:
            # robber predecessors in the previous layer lose one escape each
            t0 = t - 1 if t else p - 1
            base = (t0 * nc + ci) * n
            for rr in nbrs[us[t0]][r]:
                idx2 = base + rr
                s2 = (idx2 << 1) | 1
                if not win[s2]:
                    c = counter[idx2] - 1
                    counter[idx2] = c
                    if c == 0:
                        win[s2] = 1
                        rank[s2] = rs
                        queue.append(s2)

    copwin = False
    best = None
    for ci, mask in enumerate(enc.cfg_masks):
        base = ci * n
        worst = 0
        ok = True
        for r in range(n):
            if (mask >> r) & 1:
                continue
            s = (base + r) << 1
            if not win[s]:
                ok = False
                break
            if rank[s] > worst:
                worst = rank[s]
        if ok:
            copwin = True
            key = (worst, enc.cfgs[ci])
            if best is None or key < best[0]:
                best = (key, enc.cfgs[ci])
    placement = best[1] if best else None
    return SolveResult(pg, k, allow_stacking, copwin, placement, enc, win, rank)


def cop_number_cap(pg):
    """Safe upper bound for the ascent: cops on a dominating set of G_0 win."""
    g0 = pg.snapshots[0]
    if g0.n <= 20:
        return domination_number(g0)
    return g0.n


def solve_cop_number(pg, state_budget=None, max_cops=None):
    """(cop number, SolveResult at that k), ascending from k=1."""
    cap = cop_number_cap(pg)
    if max_cops is not None:
        cap = min(cap, max_cops)
    for k in range(1, cap + 1):
        res = is_k_copwin(pg, k, state_budget=state_budget)
        if res.copwin:
            return k, res
    raise RuntimeError(
        "cop number ascent exhausted its cap %d; this contradicts the "
        "dominating-set argument" % cap
    )


def cop_number(pg, state_budget=None):
    return solve_cop_number(pg, state_budget=state_budget)[0]


def static_cop_number(g, state_budget=None):
    """Cop number of a static graph (period-1 periodic graph)."""
    return cop_number(_periodic.constant(g, 1), state_budget=state_budget)


@dataclass(frozen=True)
class TripleResult:
    footprint_copnum: int
    max_snapshot_copnum: int
    copnum: int
    min_snapshot_copnum: int

    @property
    def abc(self):
        return (self.footprint_copnum, self.max_snapshot_copnum, self.copnum)

    def as_dict(self):
        return {
            "footprint_copnum": self.footprint_copnum,
            "max_snapshot_copnum": self.max_snapshot_copnum,
            "copnum": self.copnum,
            "min_snapshot_copnum": self.min_snapshot_copnum,
        }


def triple(pg, state_budget=None):
    """(a,b,c): footprint cop number, max snapshot cop number, periodic cop number."""
    foot = _periodic.footprint(pg)
    a = static_cop_number(foot, state_budget)
    snap_nums = [
        static_cop_number(g, state_budget) for g in pg.unique_snapshots
    ]
    c = cop_number(pg, state_budget)
    return TripleResult(a, max(snap_nums), c, min(snap_nums))


def extract_trace(result, robber_policy="optimal", cops_start=None):
    """Move-by-move transcript ending in capture.

    The robber plays rank-maximizing replies when robber_policy is "optimal";
    otherwise robber_policy is a callable (t, cops, robber, pg) -> next vertex
    whose choices are validated against the snapshot.
    """
    if not result.copwin and cops_start is None:
        raise ValueError("extract_trace requires a copwin result")
    pg = result.pg
    enc = result._enc
    p, n = pg.period, pg.n
    cops = tuple(sorted(cops_start)) if cops_start else result.initial_placement
    ci = enc.cfg_index[cops]
    occupied = set(cops)

    # robber picks the worst start for the cops
    start_rank = -1
    robber = None
    for r in range(n):
        if r in occupied:
            continue
        s = enc.raw_id(0, ci, r, COPS_TO_MOVE)
        if not result._win[s]:
            raise ValueError(
                "cop placement %s does not win against robber start %d"
                % (list(cops), r)
            )
        if result._rank[s] > start_rank:
            start_rank = result._rank[s]
            robber = r
    rounds = []
    trace = {
        "k": result.k,
        "initial_cops": list(cops),
        "initial_robber": robber,
        "rounds": rounds,
        "captured": robber is None,
        "cop_moves": 0,
    }
    if robber is None:
        return trace

    t = 0
    guard = start_rank + 1
    for _ in range(guard):
        new_cops = result.optimal_cop_move(t, cops, robber)
        trace["cop_moves"] += 1
        entry = {"t": t, "cops": list(new_cops), "robber": robber}
        rounds.append(entry)
        cops = new_cops
        if robber in cops:
            entry["captured"] = True
            trace["captured"] = True
            return trace
        entry["captured"] = False
        ci = enc.cfg_index[cops]
        if robber_policy == "optimal":
            best = None
            t1 = (t + 1) % p
            for r2 in pg.snapshots[t].closed_nbrs(robber):
                if r2 in cops:
                    move_rank = 0
                else:
                    move_rank = result._rank[enc.raw_id(t1, ci, r2, COPS_TO_MOVE)]
                key = (-move_rank, r2)
                if best is None or key < best[0]:
                    best = (key, r2)
            robber = best[1]
        else:
            r2 = robber_policy(t, cops, robber, pg)
            if r2 not in pg.snapshots[t].closed_nbrs(robber):
                raise ValueError("scripted robber made an infeasible move")
            robber = r2
        entry["robber_after"] = robber
        if robber in cops:
            trace["captured"] = True
            return trace
        t = (t + 1) % p
    raise AssertionError("capture did not occur within the reported rank")


@dataclass
class CopPolicy:
    """Deterministic cop plan: step(memory, t, cops, robber) -> (cops', memory').

    The memory must be hashable; verification explores the product of game
    positions and policy memory.
    """

    k: int
    initial_cops: tuple
    step: object
    initial_memory: object = None
    origin: str = "scripted"


@dataclass
class PolicyVerification:
    wins: bool
    max_capture_moves: int | None = None
    counterexample: list | None = None
    states_explored: int = 0


def _multiset_move_feasible(g, old, new):
    """Can the cop multiset ``old`` become ``new`` in one round of g?"""
    remaining = list(new)

    def match(i):
        if i == len(old):
            return True
        m = g.nbr_mask(old[i])
        tried = set()
        for j, v in enumerate(remaining):
            if v is None or v in tried:
                continue
            if (m >> v) & 1:
                tried.add(v)
                remaining[j] = None
                if match(i + 1):
                    return True
                remaining[j] = v
        return False

    return match(0)


def verify_policy(pg, policy, check_feasibility=True):
    """Explore every robber line against a fixed cop policy.

    A node is a (t, cops, robber, memory) position with the cops to move; the
    policy fixes the cop move, the robber branches.  wins=False comes with a
    cycling robber witness; wins=True reports the worst-case number of cop
    moves to capture.  Infeasible policy moves raise ValueError naming the
    state.
    """
    p, n = pg.period, pg.n
    start_cops = tuple(sorted(policy.initial_cops))
    if len(start_cops) != policy.k:
        raise ValueError("policy initial placement has wrong size")

    starts = [
        (0, start_cops, r0, policy.initial_memory)
        for r0 in range(n)
        if r0 not in start_cops
    ]

    # phase 1: forward reachability; record capture flags and robber options
    children = {}
    capturing = {}
    frontier = [nd for nd in starts]
    seen = set(frontier)
    while frontier:
        nxt = []
        for node in frontier:
            t, cops, robber, memory = node
            g = pg.snapshots[t]
            new_cops, new_mem = policy.step(memory, t, cops, robber)
            new_cops = tuple(sorted(new_cops))
            if check_feasibility and not _multiset_move_feasible(g, cops, new_cops):
                raise ValueError(
                    "infeasible policy move at t=%d cops=%s robber=%d: %s"
                    % (t, list(cops), robber, list(new_cops))
                )
            if robber in new_cops:
                capturing[node] = True
                children[node] = []
                continue
            capturing[node] = False
            t1 = (t + 1) % p
            kids = []
            for r2 in g.closed_nbrs(robber):
                if r2 in new_cops:
                    continue  # suicide move; never optimal for the robber
                kid = (t1, new_cops, r2, new_mem)
                kids.append(kid)
                if kid not in seen:
                    seen.add(kid)
                    nxt.append(kid)
            children[node] = kids
        frontier = nxt

    # phase 2: resolve capture times bottom-up; unresolved nodes sit on or
    # ahead of a robber-safe cycle
    value = {}
    pending_max = {}
    remaining = {}
    parents = {}
    queue = deque()
    for node, kids in children.items():
        if capturing[node]:
            value[node] = 1
            queue.append(node)
        else:
            remaining[node] = len(kids)
            pending_max[node] = 0
            for kid in kids:
                parents.setdefault(kid, []).append(node)
    while queue:
        node = queue.popleft()
        v = value[node]
        for par in parents.get(node, ()):
            if par in value:
                continue
            if v > pending_max[par]:
                pending_max[par] = v
            remaining[par] -= 1
            if remaining[par] == 0:
                value[par] = 1 + pending_max[par]
                queue.append(par)

    unresolved = [nd for nd in starts if nd not in value]
    if unresolved:
        # walk unresolved children until a node repeats: that is the cycle
        path = [unresolved[0]]
        on_path = {unresolved[0]: 0}
        while True:
            cur = path[-1]
            nxt = next(ch for ch in children[cur] if ch not in value)
            if nxt in on_path:
                cycle = path[on_path[nxt]:] + [nxt]
                return PolicyVerification(
                    wins=False,
                    counterexample=[
                        {"t": t, "cops": list(c), "robber": r}
                        for (t, c, r, _m) in cycle
                    ],
                    states_explored=len(children),
                )
            on_path[nxt] = len(path)
            path.append(nxt)

    worst = max((value[nd] for nd in starts), default=0)
    return PolicyVerification(
        wins=True, max_capture_moves=worst, states_explored=len(children)
    )


@dataclass
class CtmaxReport:
    value: int
    instance: object
    periods_checked: list = field(default_factory=list)
    sequences_checked: int = 0


def ctmax_bounded(g, max_period, sequence_limit=300_000, state_budget=None):
    """Max cop number over periodic graphs with footprint exactly g, p <= max_period.

    Enumerates every assignment of each footprint edge to a nonempty set of
    layers; a bounded under-approximation of the true footprint maximum, and
    documented as such.
    """
    if not g.is_connected():
        raise ValueError("ctmax_bounded requires a connected footprint")
    if g.n > 6 or max_period > 3:
        raise ValueError("ctmax_bounded limits exceeded: need n <= 6, period <= 3")
    m = len(g.edges)
    total = sum(((1 << q) - 1) ** m for q in range(1, max_period + 1))
    if total > sequence_limit:
        raise ValueError(
            "ctmax enumeration limit exceeded: %d sequences > %d"
            % (total, sequence_limit)
        )
    edges = g.sorted_edges()
    best = 0
    best_pg = None
    count = 0
    for q in range(1, max_period + 1):
        subsets = [
            [t for t in range(q) if (s >> t) & 1] for s in range(1, 1 << q)
        ]
        for assign in itertools.product(range(len(subsets)), repeat=m):
            count += 1
            layer_edges = [[] for _ in range(q)]
            for e_idx, s_idx in enumerate(assign):
                for t in subsets[s_idx]:
                    layer_edges[t].append(edges[e_idx])
            pg = _periodic.PeriodicGraph(
                [Graph(g.n, le) for le in layer_edges]
            )
            c = cop_number(pg, state_budget=state_budget)
            if c > best:
                best = c
                best_pg = pg
    return CtmaxReport(
        value=best,
        instance=best_pg,
        periods_checked=list(range(1, max_period + 1)),
        sequences_checked=count,
    )
