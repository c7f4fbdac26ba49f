"""The on-disk instance format: versioned JSON, canonically serialized.

A file holds one periodic graph: vertex count, period, per-snapshot edge
lists with u < v, optional vertex labels and an optional expected block of
cop numbers.  Serialization sorts edges and keys with fixed spacing so that
parse/serialize round-trips are byte-identical on canonical files.
"""

from __future__ import annotations

import json

from .graphs import Graph
from .periodic import PeriodicGraph

FORMAT_VERSION = 1

_TOP_FIELDS = {"version", "n", "period", "snapshots", "labels", "expected"}
_EXPECTED_FIELDS = {"footprint_copnum", "max_snapshot_copnum", "copnum"}


class InstanceError(ValueError):
    """Malformed instance file; ``code`` is a stable machine-readable tag."""

    def __init__(self, code, message, context=None):
        self.code = code
        self.context = context
        where = " (%s)" % context if context else ""
        super().__init__("%s: %s%s" % (code, message, where))


def parse(data):
    """Parse instance bytes/text; returns (PeriodicGraph, meta).

    meta carries 'labels' (dict vertex->str) and 'expected' (dict or None).
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as e:
        raise InstanceError(
            "syntax", "invalid JSON: %s" % e.msg, "line %d" % e.lineno
        ) from e
    if not isinstance(obj, dict):
        raise InstanceError("syntax", "top level must be an object")
    unknown = set(obj) - _TOP_FIELDS
    if unknown:
        raise InstanceError("unknown-field", "unknown fields %s" % sorted(unknown))
    for req in ("version", "n", "period", "snapshots"):
        if req not in obj:
            raise InstanceError("missing-field", "missing field %r" % req)
    if obj["version"] != FORMAT_VERSION:
        raise InstanceError(
            "version", "unsupported version %r" % obj["version"]
        )
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise InstanceError("field-type", "n must be a positive integer")
    period = obj["period"]
    snapshots = obj["snapshots"]
    if not isinstance(snapshots, list) or not all(
        isinstance(s, list) for s in snapshots
    ):
        raise InstanceError("field-type", "snapshots must be a list of edge lists")
    if period != len(snapshots):
        raise InstanceError(
            "period-mismatch",
            "period %r but %d snapshots" % (period, len(snapshots)),
        )
    labels = {}
    if "labels" in obj:
        if not isinstance(obj["labels"], dict):
            raise InstanceError("field-type", "labels must be an object")
        for k, v in obj["labels"].items():
            try:
                vi = int(k)
            except ValueError:
                raise InstanceError(
                    "field-type", "label key %r is not a vertex" % k
                ) from None
            if not (0 <= vi < n) or not isinstance(v, str):
                raise InstanceError(
                    "index-range", "label %r out of range or not a string" % k
                )
            labels[vi] = v
    graphs = []
    for t, snap in enumerate(snapshots):
        ctx = "snapshot %d" % t
        seen = set()
        edges = []
        for e in snap:
            if (
                not isinstance(e, list)
                or len(e) != 2
                or not all(isinstance(x, int) for x in e)
            ):
                raise InstanceError("field-type", "edge %r malformed" % (e,), ctx)
            u, v = e
            if u == v:
                raise InstanceError(
                    "self-loop", "self-loop forbidden: [%d,%d]" % (u, v), ctx
                )
            if u > v:
                raise InstanceError(
                    "edge-order", "edges must satisfy u < v: [%d,%d]" % (u, v), ctx
                )
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceError(
                    "index-range", "edge [%d,%d] out of range" % (u, v), ctx
                )
            if (u, v) in seen:
                raise InstanceError(
                    "duplicate-edge", "duplicate edge [%d,%d]" % (u, v), ctx
                )
            seen.add((u, v))
            edges.append((u, v))
        graphs.append(Graph(n, edges, labels))
    expected = None
    if "expected" in obj:
        if not isinstance(obj["expected"], dict):
            raise InstanceError("field-type", "expected must be an object")
        unknown = set(obj["expected"]) - _EXPECTED_FIELDS
        if unknown:
            raise InstanceError(
                "unknown-field", "unknown expected fields %s" % sorted(unknown)
            )
        for k, v in obj["expected"].items():
            if not isinstance(v, int):
                raise InstanceError("field-type", "expected.%s must be int" % k)
        expected = dict(obj["expected"])
    return PeriodicGraph(graphs), {"labels": labels, "expected": expected}


def serialize(pg, labels=None, expected=None):
    """Canonical text form: sorted edges, sorted keys, two-space indent."""
    if labels is None:
        labels = {}
        for g in pg.snapshots:
            labels.update(g.labels)
    obj = {
        "version": FORMAT_VERSION,
        "n": pg.n,
        "period": pg.period,
        "snapshots": [
            [[u, v] for (u, v) in g.sorted_edges()] for g in pg.snapshots
        ],
    }
    if labels:
        obj["labels"] = {str(k): labels[k] for k in sorted(labels)}
    if expected:
        obj["expected"] = dict(expected)
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def dump_json(obj):
    """Canonical JSON for CLI reports: sorted keys, stable spacing."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
