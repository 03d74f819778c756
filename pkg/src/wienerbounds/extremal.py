"""Exhaustive verification of the extremal bounds on unicyclic graphs.

For a strictly monotone weight function the triangle-with-pendant-stars
family and the short-cycle tadpole family are the two extremes of the
weighted Wiener index over all unicyclic graphs with n >= 6 vertices
(which one is min and which is max depends on the direction of
monotonicity), each attained by exactly one isomorphism class.  This
module checks those claims by scanning every labeled unicyclic graph,
sweeps the closed-form dominance comparisons, and implements the
branch-relocation moves that drive a maximizing local search.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass
from typing import Callable, Sequence

from .closed_forms import tadpole_closed_form, triangle_star_closed_form
from .enumeration import (
    DEFAULT_LABELED_CAP,
    canonical_form,
    graph_from_masks,
    iter_unicyclic_edge_masks,
)
from .families import tadpole, triangle_star
from .graphs import (
    Graph,
    GraphError,
    bfs_distances,
    find_cycle,
    is_unicyclic,
    major_vertex_report,
)
from .indices import IndexValue, generalized_wiener
from .weights import Monotonicity, WeightFunction, classify_monotonicity

# extremal-graph lists stop growing past this many entries per side
ARGSET_CAP = 100_000


class NonMonotoneWeightError(ValueError):
    """The operation needs a strictly monotone weight function."""


class ProofMoveError(ValueError):
    """A branch-relocation move was applied outside its preconditions."""


# ---------------------------------------------------------------------------
# exhaustive scan


@dataclass
class WeightScan:
    """Per-weight aggregate of one exhaustive scan (mergeable across shards)."""

    description: str
    exact: bool
    min_value: object = None
    max_value: object = None
    argmin_masks: list = None  # type: ignore[assignment]
    argmax_masks: list = None  # type: ignore[assignment]
    argmin_count: int = 0
    argmax_count: int = 0
    argmin_truncated: bool = False
    argmax_truncated: bool = False
    # lexicographically smallest attaining graphs; invariant under sharding
    argmin_example: tuple | None = None
    argmax_example: tuple | None = None

    def __post_init__(self):
        if self.argmin_masks is None:
            self.argmin_masks = []
        if self.argmax_masks is None:
            self.argmax_masks = []

    def merged(self, other: "WeightScan") -> "WeightScan":
        if other.description != self.description:
            raise ValueError("cannot merge scans of different weights")
        out = WeightScan(self.description, self.exact)
        for side in ("min", "max"):
            better: Callable = (lambda a, b: a < b) if side == "min" else (lambda a, b: a > b)
            sv, sm, sc, st, se = (
                getattr(self, f"{side}_value"),
                getattr(self, f"arg{side}_masks"),
                getattr(self, f"arg{side}_count"),
                getattr(self, f"arg{side}_truncated"),
                getattr(self, f"arg{side}_example"),
            )
            ov, om, oc, ot, oe = (
                getattr(other, f"{side}_value"),
                getattr(other, f"arg{side}_masks"),
                getattr(other, f"arg{side}_count"),
                getattr(other, f"arg{side}_truncated"),
                getattr(other, f"arg{side}_example"),
            )
            if ov is None or (sv is not None and better(sv, ov)):
                value, masks, count, trunc, example = sv, sm, sc, st, se
            elif sv is None or better(ov, sv):
                value, masks, count, trunc, example = ov, om, oc, ot, oe
            else:  # equal extremes: combine attaining sets
                value = sv
                masks = (sm + om)[:ARGSET_CAP]
                count = sc + oc
                trunc = st or ot or len(sm) + len(om) > ARGSET_CAP
                example = min(se, oe)
            setattr(out, f"{side}_value", value)
            setattr(out, f"arg{side}_masks", list(masks))
            setattr(out, f"arg{side}_count", count)
            setattr(out, f"arg{side}_truncated", trunc)
            setattr(out, f"arg{side}_example", example)
        return out


@dataclass
class ScanSummary:
    """Whole-scan aggregate: totals plus one WeightScan per weight function."""

    n: int
    graphs_scanned: int
    cycle_length_sum: int
    per_weight: list[WeightScan]

    def merged(self, other: "ScanSummary") -> "ScanSummary":
        if other.n != self.n:
            raise ValueError("cannot merge scans for different n")
        return ScanSummary(
            self.n,
            self.graphs_scanned + other.graphs_scanned,
            self.cycle_length_sum + other.cycle_length_sum,
            [a.merged(b) for a, b in zip(self.per_weight, other.per_weight)],
        )


def _weight_tables(n: int, weights: Sequence[WeightFunction]) -> list[list]:
    """Evaluate each weight at distances 1..n-2 (the unicyclic maximum)."""
    tables = []
    for h in weights:
        tab = [0] * (n - 1)
        for k in range(1, n - 1):
            tab[k] = h(k)
        tables.append(tab)
    return tables


def scan_extremes(
    n: int,
    weights: Sequence[WeightFunction],
    shard: tuple[int, int] | None = None,
    cap: int = DEFAULT_LABELED_CAP,
) -> ScanSummary:
    """Scan every labeled unicyclic graph on n vertices, tracking min/max of
    each weighted index and the attaining labeled graphs."""
    tables = _weight_tables(n, weights)
    nw = len(weights)
    scans = [WeightScan(h.description, h.exact) for h in weights]
    graphs = 0
    cyclen_sum = 0
    counts = [0] * n
    dmax = n - 1
    popcount = [bin(i).count("1") for i in range(1 << n)]
    for masks, cyclen in iter_unicyclic_edge_masks(n, shard, cap):
        graphs += 1
        cyclen_sum += cyclen
        for d in range(dmax):
            counts[d] = 0
        for s in range(n):
            seen = frontier = 1 << s
            d = 0
            while True:
                m = 0
                while frontier:
                    b = frontier & -frontier
                    m |= masks[b.bit_length() - 1]
                    frontier ^= b
                m &= ~seen
                if not m:
                    break
                seen |= m
                d += 1
                counts[d] += popcount[m]
                frontier = m
        for w in range(nw):
            tab = tables[w]
            val = 0
            for d in range(1, dmax):
                c = counts[d]
                if c:
                    val += (c >> 1) * tab[d]
            sc = scans[w]
            if sc.min_value is None or val < sc.min_value:
                sc.min_value = val
                sc.argmin_masks = [masks]
                sc.argmin_count = 1
                sc.argmin_truncated = False
                sc.argmin_example = masks
            elif val == sc.min_value:
                sc.argmin_count += 1
                if masks < sc.argmin_example:
                    sc.argmin_example = masks
                if len(sc.argmin_masks) < ARGSET_CAP:
                    sc.argmin_masks.append(masks)
                else:
                    sc.argmin_truncated = True
            if sc.max_value is None or val > sc.max_value:
                sc.max_value = val
                sc.argmax_masks = [masks]
                sc.argmax_count = 1
                sc.argmax_truncated = False
                sc.argmax_example = masks
            elif val == sc.max_value:
                sc.argmax_count += 1
                if masks < sc.argmax_example:
                    sc.argmax_example = masks
                if len(sc.argmax_masks) < ARGSET_CAP:
                    sc.argmax_masks.append(masks)
                else:
                    sc.argmax_truncated = True
    return ScanSummary(n, graphs, cyclen_sum, scans)


def _scan_shard_worker(args) -> ScanSummary:
    n, weights, i, k, cap = args
    return scan_extremes(n, weights, shard=(i, k), cap=cap)


def scan_extremes_parallel(
    n: int,
    weights: Sequence[WeightFunction],
    jobs: int,
    cap: int = DEFAULT_LABELED_CAP,
) -> ScanSummary:
    """Shard the scan across worker processes and merge the partial results."""
    if jobs <= 1:
        return scan_extremes(n, weights, cap=cap)
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        parts = pool.map(
            _scan_shard_worker, [(n, list(weights), i, jobs, cap) for i in range(jobs)]
        )
    summary = parts[0]
    for part in parts[1:]:
        summary = summary.merged(part)
    return summary


# ---------------------------------------------------------------------------
# bound verification


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exhaustive min/max verification for one weight."""

    n: int
    weight_description: str
    monotonicity: Monotonicity
    graphs_scanned: int
    cycle_length_sum: int
    min_value: IndexValue
    max_value: IndexValue
    argmin_forms: tuple[bytes, ...]
    argmax_forms: tuple[bytes, ...]
    argmin_count: int
    argmax_count: int
    argmin_example: tuple[tuple[int, int], ...]
    argmax_example: tuple[tuple[int, int], ...]
    applicable: bool
    expected_min: IndexValue | None = None
    expected_max: IndexValue | None = None
    min_value_ok: bool | None = None
    min_unique_ok: bool | None = None
    max_value_ok: bool | None = None
    max_unique_ok: bool | None = None

    def claims_ok(self) -> bool | None:
        """True/False when the bound claims apply (n >= 6), else None."""
        if not self.applicable:
            return None
        return bool(
            self.min_value_ok
            and self.min_unique_ok
            and self.max_value_ok
            and self.max_unique_ok
        )


def _values_match(a, b, rel_tol: float) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(float(a), float(b), rel_tol=rel_tol, abs_tol=1e-12)
    return a == b


def _distinct_forms(n: int, masks_list) -> tuple[bytes, ...]:
    forms = {canonical_form(graph_from_masks(n, masks)) for masks in masks_list}
    return tuple(sorted(forms))


def _masks_to_edges(n: int, masks) -> tuple[tuple[int, int], ...]:
    return tuple(
        (u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1
    )


def verify_theorem_many(
    n: int,
    weights: Sequence[WeightFunction],
    jobs: int = 1,
    rel_tol: float = 1e-9,
    cap: int = DEFAULT_LABELED_CAP,
) -> list[VerificationReport]:
    """Verify the extremal bounds for several weights over a single scan."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    classes = []
    for h in weights:
        mono = classify_monotonicity(h, max(2, n - 2))
        if mono is Monotonicity.NEITHER:
            raise NonMonotoneWeightError(
                f"weight {h.description!r} is not strictly monotone on 1..{max(2, n - 2)}; "
                "the extremal characterization does not apply"
            )
        classes.append(mono)
    summary = (
        scan_extremes_parallel(n, weights, jobs, cap=cap)
        if jobs > 1
        else scan_extremes(n, weights, cap=cap)
    )
    reports = []
    for h, mono, sc in zip(weights, classes, summary.per_weight):
        mode = "exact" if h.exact else "float"
        min_iv = IndexValue(sc.min_value, mode, f"min[{h.description}]")
        max_iv = IndexValue(sc.max_value, mode, f"max[{h.description}]")
        argmin_forms = _distinct_forms(n, sc.argmin_masks)
        argmax_forms = _distinct_forms(n, sc.argmax_masks)
        applicable = n >= 6
        kwargs: dict = {}
        if applicable:
            star_like = triangle_star(n)
            tadpole_like = tadpole(3, n)
            star_value = triangle_star_closed_form(n, h)
            tadpole_value = tadpole_closed_form(3, n, h)
            if mono is Monotonicity.STRICTLY_INCREASING:
                expected_min, expected_min_g = star_value, star_like
                expected_max, expected_max_g = tadpole_value, tadpole_like
            else:
                expected_min, expected_min_g = tadpole_value, tadpole_like
                expected_max, expected_max_g = star_value, star_like
            min_form = canonical_form(expected_min_g)
            max_form = canonical_form(expected_max_g)
            kwargs = dict(
                expected_min=expected_min,
                expected_max=expected_max,
                min_value_ok=_values_match(sc.min_value, expected_min.value, rel_tol),
                min_unique_ok=(
                    not sc.argmin_truncated and argmin_forms == (min_form,)
                ),
                max_value_ok=_values_match(sc.max_value, expected_max.value, rel_tol),
                max_unique_ok=(
                    not sc.argmax_truncated and argmax_forms == (max_form,)
                ),
            )
        reports.append(
            VerificationReport(
                n=n,
                weight_description=h.description,
                monotonicity=mono,
                graphs_scanned=summary.graphs_scanned,
                cycle_length_sum=summary.cycle_length_sum,
                min_value=min_iv,
                max_value=max_iv,
                argmin_forms=argmin_forms,
                argmax_forms=argmax_forms,
                argmin_count=sc.argmin_count,
                argmax_count=sc.argmax_count,
                argmin_example=_masks_to_edges(n, sc.argmin_example),
                argmax_example=_masks_to_edges(n, sc.argmax_example),
                applicable=applicable,
                **kwargs,
            )
        )
    return reports


def verify_theorem(
    n: int,
    h: WeightFunction,
    jobs: int = 1,
    rel_tol: float = 1e-9,
    cap: int = DEFAULT_LABELED_CAP,
) -> VerificationReport:
    """Exhaustively verify the two-sided bound and its uniqueness for one weight."""
    return verify_theorem_many(n, [h], jobs=jobs, rel_tol=rel_tol, cap=cap)[0]


# ---------------------------------------------------------------------------
# closed-form dominance sweep


def check_f3_dominance(
    n_max: int, h: WeightFunction
) -> list[tuple[int, int, bool]]:
    """Compare the r=3 tadpole closed form against every longer cycle length.

    For strictly increasing h the r=3 value must strictly dominate every
    4 <= r <= n; for strictly decreasing h the comparison reverses.  Returns
    (r, n, ok) for every pair checked, in (n, r) order.
    """
    if n_max < 4:
        return []
    mono = classify_monotonicity(h, max(2, n_max - 1))
    if mono is Monotonicity.NEITHER:
        raise NonMonotoneWeightError(
            f"weight {h.description!r} is not strictly monotone on 1..{n_max - 1}"
        )
    increasing = mono is Monotonicity.STRICTLY_INCREASING
    results = []
    for n in range(4, n_max + 1):
        f3 = tadpole_closed_form(3, n, h).value
        for r in range(4, n + 1):
            fr = tadpole_closed_form(r, n, h).value
            ok = (f3 > fr) if increasing else (f3 < fr)
            results.append((r, n, ok))
    return results


# ---------------------------------------------------------------------------
# branch-relocation moves


@dataclass(frozen=True)
class ProofMove:
    """One applied relocation move, for tracing a local search."""

    kind: str  # "terminal-merge" or "tail-rebalance"
    vertices: tuple[int, ...]


def _pendant_segment(g: Graph, anchor: int, leaf: int) -> list[int]:
    """Vertices of the pendant path from ``anchor`` (exclusive) to ``leaf``,
    ordered leaf-last; every interior vertex must have degree 2."""
    if g.degree(leaf) != 1:
        raise ProofMoveError(f"vertex {leaf} is not an end-vertex")
    seg = []
    prev = -1
    x = leaf
    while x != anchor:
        if prev != -1 and g.degree(x) != 2:
            raise ProofMoveError(
                f"path from {leaf} toward {anchor} branches at vertex {x}"
            )
        seg.append(x)
        nxt = [y for y in g.adj[x] if y != prev]
        if not nxt:
            raise ProofMoveError(f"no pendant path from {leaf} reaches {anchor}")
        prev, x = x, nxt[0]
    seg.reverse()  # anchor side first
    return seg


def _relocate_segment(g: Graph, anchor: int, leaf: int, dest: int) -> Graph:
    """Detach the pendant path (anchor, leaf] and re-attach it beyond ``dest``.

    The detached labels are reused in ascending order along the new path, so
    the result is deterministic and has the same vertex count.
    """
    seg = _pendant_segment(g, anchor, leaf)
    if dest in seg or dest == anchor:
        raise ProofMoveError(f"destination {dest} lies on the moved path")
    removed = set()
    chain = [anchor] + seg
    for a, b in zip(chain, chain[1:]):
        removed.add((min(a, b), max(a, b)))
    new_labels = sorted(seg)
    edges = [e for e in g.edges() if e not in removed]
    attach = dest
    for v in new_labels:
        edges.append((min(attach, v), max(attach, v)))
        attach = v
    return Graph.from_edges(g.n, edges)


def apply_terminal_merge(g: Graph, w: int, u1: int, u2: int) -> Graph:
    """Move the pendant branch from major vertex ``w`` to its terminal
    end-vertex ``u1`` so that it extends the path beyond terminal ``u2``.

    Preserves the vertex count, and unicyclicity when the input is unicyclic.
    """
    if g.degree(w) < 3:
        raise ProofMoveError(f"vertex {w} has degree {g.degree(w)} < 3")
    if u1 == u2:
        raise ProofMoveError("the two terminal vertices must differ")
    report = major_vertex_report(g)
    terms = set(report.terminals.get(w, ()))
    for u in (u1, u2):
        if u not in terms:
            raise ProofMoveError(f"vertex {u} is not a terminal vertex of {w}")
    return _relocate_segment(g, w, u1, u2)


def _cycle_tail(g: Graph, v: int, cycle: set[int]) -> list[int]:
    """The pendant path hanging at cycle vertex ``v`` (degree 3), v excluded."""
    off = [y for y in g.adj[v] if y not in cycle]
    if g.degree(v) != 3 or len(off) != 1:
        raise ProofMoveError(
            f"vertex {v} must be a cycle vertex of degree 3 with one tail"
        )
    tail = [off[0]]
    prev = v
    while g.degree(tail[-1]) == 2:
        nxt = [y for y in g.adj[tail[-1]] if y != prev]
        prev = tail[-1]
        tail.append(nxt[0])
    if g.degree(tail[-1]) != 1:
        raise ProofMoveError(f"tail at vertex {v} is not a path")
    return tail


def apply_tail_rebalance(g: Graph, v1: int, v2: int) -> Graph:
    """Relocation step for two degree-3 cycle vertices with path tails.

    With tail lengths l_i and outside-distance sums D_i (distances from v_i
    to everything off both tails): when one tail is longer but its anchor has
    the strictly smaller D, the length excess moves to the other tail's end;
    otherwise the whole tail of the (D, l, label)-smaller anchor moves beyond
    the other tail's end.  Either way the weighted index strictly grows for
    strictly increasing weights.
    """
    if not is_unicyclic(g):
        raise ProofMoveError("tail rebalance needs a unicyclic graph")
    cycle = set(find_cycle(g).vertices)
    if v1 not in cycle or v2 not in cycle or v1 == v2:
        raise ProofMoveError(f"vertices {v1}, {v2} must be distinct cycle vertices")
    tails = {v: _cycle_tail(g, v, cycle) for v in (v1, v2)}
    lengths = {v: len(tails[v]) for v in (v1, v2)}
    excluded = {v1, v2} | set(tails[v1]) | set(tails[v2])
    dsums = {}
    for v in (v1, v2):
        dist = bfs_distances(g, v)
        dsums[v] = sum(dist[x] for x in range(g.n) if x not in excluded)
    d1, d2 = dsums[v1], dsums[v2]
    l1, l2 = lengths[v1], lengths[v2]
    if d1 < d2 and l1 > l2:
        shorter, longer = v2, v1
    elif d2 < d1 and l2 > l1:
        shorter, longer = v1, v2
    else:
        # order anchors so the moved tail has (D, l, label) not above its peer
        if (d1, l1, v1) <= (d2, l2, v2):
            moved, other = v1, v2
        else:
            moved, other = v2, v1
        return _relocate_segment(g, moved, tails[moved][-1], tails[other][-1])
    # shift the length excess from the longer tail beyond the shorter one's end
    excess_anchor = tails[longer][lengths[shorter] - 1]
    return _relocate_segment(g, excess_anchor, tails[longer][-1], tails[shorter][-1])


def local_search_max(
    g0: Graph,
    h: WeightFunction,
    on_move: Callable[[ProofMove, object, object], None] | None = None,
) -> Graph:
    """Greedy maximization of the weighted index by branch relocation.

    Repeatedly applies the lexicographically smallest terminal merge while
    some major vertex keeps two or more terminal end-vertices, then merges
    cycle tails pairwise.  Every applied move must strictly increase the
    index (checked; a failure raises ProofMoveError).  The result is always
    a cycle with at most one pendant path.
    """
    if not is_unicyclic(g0):
        raise GraphError("local search needs a unicyclic graph")
    mono = classify_monotonicity(h, max(2, g0.n - 2))
    if mono is not Monotonicity.STRICTLY_INCREASING:
        raise NonMonotoneWeightError(
            f"local_search_max needs a strictly increasing weight, got {mono.value}"
        )
    g = g0
    value = generalized_wiener(g, h).value
    for _ in range(4 * g0.n * g0.n):  # safety bound; strict increase terminates it
        report = major_vertex_report(g)
        if report.multi_terminal_majors:
            w = min(report.multi_terminal_majors)
            u1, u2 = sorted(report.terminals[w])[:2]
            move = ProofMove("terminal-merge", (w, u1, u2))
            g_next = apply_terminal_merge(g, w, u1, u2)
        else:
            cycle = set(find_cycle(g).vertices)
            deg3 = sorted(v for v in cycle if g.degree(v) == 3)
            if any(g.degree(v) >= 4 for v in cycle) or any(
                g.degree(v) >= 3 for v in range(g.n) if v not in cycle
            ):
                raise ProofMoveError(
                    "no applicable terminal merge although a degree violation remains"
                )
            if len(deg3) < 2:
                return g
            v1, v2 = deg3[:2]
            move = ProofMove("tail-rebalance", (v1, v2))
            g_next = apply_tail_rebalance(g, v1, v2)
        value_next = generalized_wiener(g_next, h).value
        if not value_next > value:
            raise ProofMoveError(
                f"move {move.kind} at {move.vertices} did not increase the index "
                f"({value!r} -> {value_next!r})"
            )
        if on_move is not None:
            on_move(move, value, value_next)
        g, value = g_next, value_next
    raise ProofMoveError("local search exceeded its move budget")
