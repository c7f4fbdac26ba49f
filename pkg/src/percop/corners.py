"""Temporal corner detection: the necessary-condition filters for copwin-ness.

A temporal node (t,u) is a k-temporal corner of covers (t+1,y_1..y_k) when
u is none of the y_i and the closed neighborhood of u at time t is contained
in the union of the closed neighborhoods of the y_i at time t+1.  Every
k-copwin arena contains one, so an empty report rules k-copwin out; the
converse does not hold, so presence proves nothing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb


@dataclass(frozen=True, order=True)
class CornerWitness:
    t: int
    corner_vertex: int
    covers: tuple

    def as_dict(self):
        return {
            "t": self.t,
            "corner_vertex": self.corner_vertex,
            "covers": list(self.covers),
        }


def find_temporal_corners(pg):
    """All ((t,u), v) with u != v and N_t[u] <= N_{t+1}[v].

    Since u covers itself, only v with u in N_{t+1}[v] can work, which
    restricts the inner scan to the next layer's neighbors of u.
    """
    out = []
    p = pg.period
    for t in range(p):
        gt = pg.snapshots[t]
        gn = pg.snapshots[(t + 1) % p]
        for u in range(pg.n):
            mu = gt.nbr_mask(u)
            for v in gn.closed_nbrs(u):
                if v != u and mu & ~gn.nbr_mask(v) == 0:
                    out.append(CornerWitness(t, u, (v,)))
    out.sort()
    return out


def find_k_temporal_corners(pg, k, budget=10**7):
    """All k-temporal corner witnesses, covers as sorted distinct k-sets.

    Repetition in a cover never enlarges the union, so only distinct cover
    sets are enumerated (capped at n-1 candidates when k exceeds them).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = pg.n
    size = min(k, n - 1)
    if size <= 0:
        return []
    candidates = pg.period * n * comb(n - 1, size)
    if candidates > budget:
        raise ValueError(
            "corner search budget exceeded: %d candidate tuples > %d"
            % (candidates, budget)
        )
    out = []
    p = pg.period
    for t in range(p):
        gt = pg.snapshots[t]
        gn = pg.snapshots[(t + 1) % p]
        next_masks = [gn.nbr_mask(v) for v in range(n)]
        for u in range(n):
            mu = gt.nbr_mask(u)
            others = [v for v in range(n) if v != u]
            for ys in itertools.combinations(others, size):
                union = 0
                for y in ys:
                    union |= next_masks[y]
                if mu & ~union == 0:
                    out.append(CornerWitness(t, u, ys))
    out.sort()
    return out


def validate_witness(pg, w):
    """Re-check a witness against the raw snapshot neighborhoods."""
    gt = pg.snapshots[w.t % pg.period]
    gn = pg.snapshots[(w.t + 1) % pg.period]
    if w.corner_vertex in w.covers:
        return False
    need = set(gt.closed_nbrs(w.corner_vertex))
    have = set()
    for y in w.covers:
        have.update(gn.closed_nbrs(y))
    return need <= have
