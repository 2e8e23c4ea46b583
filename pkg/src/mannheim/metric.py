"""Weights and distances on A_p[w], and an auditor for the metric axioms.

Three weight functions are provided:

``W_M``
    ``|x| + |y|`` of the minimal-norm representative ``x + y*w``.  This does
    not give a metric; at p = 193 it violates the triangle inequality.
``W_m``
    The smaller of the coordinate sums in the w-form and the wbar-form.
``GRAPH``
    Shortest-path length from 0 in the Cayley graph of the additive group
    generated by the six units.  This is the authoritative metric.

Every distance is the weight of the difference class, so all three kinds
are translation invariant by construction.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import asdict, dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import LengthMismatch, LimitExceeded
from .residue_field import ResidueField

AUDIT_LIMIT = 1000
SAMPLE_CHUNK = 200_000


class WeightKind(enum.Enum):
    W_M = "wM"
    W_m = "wm"
    GRAPH = "graph"

    @classmethod
    def parse(cls, text: str) -> WeightKind:
        for kind in cls:
            if text in (kind.value, kind.name):
                return kind
        raise ValueError(f"unknown weight kind {text!r}")


def weight_M(field: ResidueField, l: int) -> int:
    a = field.rep(l)
    return abs(a.x) + abs(a.y)


def weight_m(field: ResidueField, l: int) -> int:
    a = field.rep(l)
    xp, yp = a.wbar_coords()
    return min(abs(a.x) + abs(a.y), abs(xp) + abs(yp))


@lru_cache(maxsize=32)
def graph_weights(field: ResidueField) -> tuple[int, ...]:
    """BFS distances from class 0 to every class, unit steps as edges."""
    dist = [-1] * field.p
    dist[0] = 0
    units = field.unit_labels
    queue = deque([0])
    while queue:
        l = queue.popleft()
        for u in units:
            nxt = field.add(l, u)
            if dist[nxt] < 0:
                dist[nxt] = dist[l] + 1
                queue.append(nxt)
    return tuple(dist)


def graph_weight(field: ResidueField, l: int) -> int:
    field.rep(l)  # range check
    return graph_weights(field)[l]


@lru_cache(maxsize=96)
def weight_vector(field: ResidueField, kind: WeightKind) -> np.ndarray:
    if kind is WeightKind.GRAPH:
        vec = np.array(graph_weights(field), dtype=np.int64)
    else:
        fn = weight_M if kind is WeightKind.W_M else weight_m
        vec = np.array([fn(field, l) for l in range(field.p)], dtype=np.int64)
    vec.flags.writeable = False
    return vec


def weight(field: ResidueField, kind: WeightKind, l: int) -> int:
    field.rep(l)
    return int(weight_vector(field, kind)[l])


def distance(field: ResidueField, kind: WeightKind, l1: int, l2: int) -> int:
    return weight(field, kind, field.sub(l1, l2))


def word_distance(field: ResidueField, kind: WeightKind, u, v) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"words of length {len(u)} and {len(v)}")
    return sum(distance(field, kind, a, b) for a, b in zip(u, v))


def distance_matrix(field: ResidueField, kind: WeightKind) -> np.ndarray:
    labels = np.arange(field.p)
    return weight_vector(field, kind)[(labels[:, None] - labels[None, :]) % field.p]


@dataclass
class Violation:
    axiom: str
    labels: list[int]
    distances: dict[str, int]

    def replay(self, field: ResidueField, kind: WeightKind) -> bool:
        """Recompute the distances through :func:`distance` and confirm the failure."""
        if self.axiom == "triangle":
            a, b, c = self.labels
            ab, ac, cb = distance(field, kind, a, b), distance(field, kind, a, c), distance(field, kind, c, b)
            return {"d_ab": ab, "d_ac": ac, "d_cb": cb} == self.distances and ab > ac + cb
        a, b = self.labels
        ab, ba = distance(field, kind, a, b), distance(field, kind, b, a)
        if self.axiom == "symmetry":
            return {"d_ab": ab, "d_ba": ba} == self.distances and ab != ba
        return {"d_ab": ab} == self.distances and (ab == 0) != (a == b)


@dataclass
class MetricAuditReport:
    kind: WeightKind
    p: int
    axioms: dict[str, str]
    first_violation: Violation | None
    violation_count: int
    mode: str
    trials: int | None = None
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return all(v == "pass" for v in self.axioms.values())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        return d


def _first_true(mask: np.ndarray):
    idx = np.flatnonzero(mask.ravel())
    return (idx.size, np.unravel_index(idx[0], mask.shape)) if idx.size else (0, None)


def _audit_pairs_exhaustive(D: np.ndarray):
    """Identity and symmetry over all ordered pairs, in (a, b) scan order."""
    out = {}
    eye = np.eye(D.shape[0], dtype=bool)
    count, where = _first_true((D == 0) != eye)
    out["identity"] = (count, None if where is None else
                       Violation("identity", [int(where[0]), int(where[1])], {"d_ab": int(D[where])}))
    count, where = _first_true(D != D.T)
    out["symmetry"] = (count, None if where is None else
                       Violation("symmetry", [int(where[0]), int(where[1])],
                                 {"d_ab": int(D[where]), "d_ba": int(D[where[::-1]])}))
    return out


def _audit_triangle_exhaustive(D: np.ndarray):
    p = D.shape[0]
    count, first = 0, None
    for a in range(p):
        # bad[b, c]: D[a, b] > D[a, c] + D[c, b]
        bad = D[a][:, None] > D[a][None, :] + D.T
        n_bad = int(bad.sum())
        if n_bad:
            count += n_bad
            if first is None:
                b, c = np.unravel_index(np.flatnonzero(bad)[0], bad.shape)
                first = (a, int(b), int(c))
    if first is None:
        return 0, None
    a, b, c = first
    return count, Violation("triangle", [a, b, c],
                            {"d_ab": int(D[a, b]), "d_ac": int(D[a, c]), "d_cb": int(D[c, b])})


def _audit_sampled(field: ResidueField, kind: WeightKind, trials: int, seed: int):
    """Seeded random triples; the reported violation is the smallest found in scan order."""
    p = field.p
    wv = weight_vector(field, kind)
    rng = np.random.default_rng(seed)
    found = {"identity": [0, None], "symmetry": [0, None], "triangle": [0, None]}

    def note(axiom, mask, cols):
        n_bad = int(mask.sum())
        if not n_bad:
            return
        found[axiom][0] += n_bad
        cand = np.stack([c[mask] for c in cols], axis=1)
        order = np.lexsort(cand.T[::-1])
        best = tuple(int(v) for v in cand[order[0]])
        if found[axiom][1] is None or best < found[axiom][1]:
            found[axiom][1] = best

    done = 0
    while done < trials:
        m = min(SAMPLE_CHUNK, trials - done)
        a, b, c = rng.integers(0, p, size=(3, m))
        dab, dba = wv[(a - b) % p], wv[(b - a) % p]
        dac, dcb = wv[(a - c) % p], wv[(c - b) % p]
        note("identity", (dab == 0) != (a == b), (a, b))
        note("symmetry", dab != dba, (a, b))
        note("triangle", dab > dac + dcb, (a, b, c))
        done += m

    out = {}
    for axiom, (count, labels) in found.items():
        viol = None
        if labels is not None:
            a, b = labels[0], labels[1]
            dists = {"d_ab": distance(field, kind, a, b)}
            if axiom == "symmetry":
                dists["d_ba"] = distance(field, kind, b, a)
            elif axiom == "triangle":
                c = labels[2]
                dists["d_ac"] = distance(field, kind, a, c)
                dists["d_cb"] = distance(field, kind, c, b)
            viol = Violation(axiom, list(labels), dists)
        out[axiom] = (count, viol)
    return out


def audit_metric(field: ResidueField, kind: WeightKind, exhaustive: bool | None = None,
                 trials: int = 100_000, seed: int = 0, limit: int = AUDIT_LIMIT) -> MetricAuditReport:
    """Check identity, symmetry and the triangle inequality for one weight kind.

    Exhaustive mode scans every ordered triple ``(a, b, c)`` (testing
    ``d(a,b) <= d(a,c) + d(c,b)``) and is the default for ``p <= 43``.
    Otherwise ``trials`` random triples drawn from ``seed`` are checked.
    """
    if exhaustive is None:
        exhaustive = field.p <= 43
    if exhaustive:
        if field.p > limit:
            raise LimitExceeded(f"exhaustive audit limited to p <= {limit}; got p={field.p}")
        D = distance_matrix(field, kind)
        results = _audit_pairs_exhaustive(D)
        results["triangle"] = _audit_triangle_exhaustive(D)
        mode, trials, seed = "exhaustive", None, None
    else:
        results = _audit_sampled(field, kind, trials, seed)
        mode = "sampled"

    axioms = {ax: ("fail" if results[ax][0] else "pass") for ax in ("identity", "symmetry", "triangle")}
    first = next((results[ax][1] for ax in ("identity", "symmetry", "triangle") if results[ax][1]), None)
    total = sum(results[ax][0] for ax in results)
    return MetricAuditReport(kind, field.p, axioms, first, total, mode, trials, seed)


PAIR_NAMES = ("W_M/W_m", "W_M/graph", "W_m/graph")


@dataclass
class WeightComparisonReport:
    p: int
    rows: list[tuple[int, int, int, int]] = dc_field(repr=False)
    disagreements: dict[str, int] = dc_field(default_factory=dict)
    wm_graph_mismatch: list[int] = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "rows": [{"label": l, "W_M": a, "W_m": b, "graph": g} for l, a, b, g in self.rows],
            "disagreements": self.disagreements,
            "wm_graph_mismatch": self.wm_graph_mismatch,
        }

    def csv_rows(self):
        yield ("label", "w_M", "w_m", "graph")
        yield from self.rows


def compare_weights(field: ResidueField) -> WeightComparisonReport:
    cols = [weight_vector(field, k) for k in (WeightKind.W_M, WeightKind.W_m, WeightKind.GRAPH)]
    rows = [(l, int(cols[0][l]), int(cols[1][l]), int(cols[2][l])) for l in range(field.p)]
    for row in rows:
        assert row[3] <= row[2] <= row[1], f"weight ordering broken at label {row[0]}: {row}"
    disagreements = {
        name: int(np.count_nonzero(cols[i] != cols[j]))
        for name, (i, j) in zip(PAIR_NAMES, combinations(range(3), 2))
    }
    mismatch = [int(l) for l in np.flatnonzero(cols[1] != cols[2])]
    return WeightComparisonReport(field.p, rows, disagreements, mismatch)
