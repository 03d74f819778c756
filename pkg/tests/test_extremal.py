import random

import pytest

from wienerbounds.closed_forms import tadpole_closed_form
from wienerbounds.enumeration import canonical_form, random_unicyclic
from wienerbounds.extremal import (
    NonMonotoneWeightError,
    ProofMoveError,
    apply_tail_rebalance,
    apply_terminal_merge,
    check_f3_dominance,
    local_search_max,
    scan_extremes,
    verify_theorem,
    verify_theorem_many,
)
from wienerbounds.families import cycle, tadpole, triangle_star
from wienerbounds.graphs import (
    Graph,
    bfs_distances,
    distance_distribution,
    find_cycle,
    is_unicyclic,
    major_vertex_report,
)
from wienerbounds.indices import generalized_wiener, wiener
from wienerbounds.weights import PowerWeight, QWienerWeight, TableWeight


class TestVerifyTheorem:
    def test_n6_identity_weight(self):
        report = verify_theorem(6, PowerWeight(1))
        assert report.min_value.value == 24
        assert report.max_value.value == 31
        assert report.graphs_scanned == 3660
        assert report.argmin_count == 60
        assert report.argmax_count == 360
        assert report.argmin_forms == (canonical_form(triangle_star(6)),)
        assert report.argmax_forms == (canonical_form(tadpole(3, 6)),)
        assert report.claims_ok() is True

    def test_n6_squared_weight(self):
        report = verify_theorem(6, PowerWeight(2))
        assert report.min_value.value == 42
        assert report.max_value.value == 81
        assert report.claims_ok() is True

    def test_n6_decreasing_swaps_direction(self):
        report = verify_theorem(6, PowerWeight(-1))
        assert report.claims_ok() is True
        assert report.argmin_forms == (canonical_form(tadpole(3, 6)),)
        assert report.argmax_forms == (canonical_form(triangle_star(6)),)
        assert report.expected_min.value == pytest.approx(
            tadpole_closed_form(3, 6, PowerWeight(-1)).value
        )

    def test_n6_q_bracket(self):
        report = verify_theorem(6, QWienerWeight(2.0, 1))
        assert report.claims_ok() is True

    def test_n6_inverse_square(self):
        report = verify_theorem(6, PowerWeight(-2))
        assert report.claims_ok() is True
        assert report.argmax_forms == (canonical_form(triangle_star(6)),)

    def test_n6_damped_q_kernel_with_fixed_diameter(self):
        # [k]_2 * 2^(4-k) = 16 - 2^(4-k): strictly increasing in k
        report = verify_theorem(6, QWienerWeight(2.0, 2, diameter=4))
        assert report.monotonicity.value == "strictly-increasing"
        assert report.claims_ok() is True

    def test_n3_has_single_graph(self):
        report = verify_theorem(3, PowerWeight(1))
        assert report.graphs_scanned == 1
        assert report.min_value.value == report.max_value.value == 3
        assert report.applicable is False

    def test_small_n_not_applicable(self):
        report = verify_theorem(5, PowerWeight(1))
        assert report.applicable is False
        assert report.claims_ok() is None
        assert report.graphs_scanned == 222
        assert report.expected_min is None

    def test_refuses_non_monotone(self):
        with pytest.raises(NonMonotoneWeightError):
            verify_theorem(6, PowerWeight(0))
        with pytest.raises(NonMonotoneWeightError):
            verify_theorem(6, TableWeight((1.0, 1.0, 2.0, 3.0)))

    def test_many_matches_single(self):
        many = verify_theorem_many(6, [PowerWeight(1), PowerWeight(2)])
        assert many[0].min_value.value == 24
        assert many[1].max_value.value == 81
        assert all(r.claims_ok() for r in many)

    def test_parallel_matches_serial(self):
        serial = verify_theorem(6, PowerWeight(1), jobs=1)
        parallel = verify_theorem(6, PowerWeight(1), jobs=2)
        assert serial == parallel

    def test_scan_extremes_against_per_pair_oracle(self):
        # recompute every n=5 value with networkx per-pair BFS and compare
        # the scanner's extremes and attaining edge sets
        import oracles
        from wienerbounds.enumeration import enumerate_unicyclic_labeled

        values = {}
        for g in enumerate_unicyclic_labeled(5):
            values[frozenset(g.edges())] = sum(oracles.pair_distances(g).values())
        lo, hi = min(values.values()), max(values.values())
        sc = scan_extremes(5, [PowerWeight(1)]).per_weight[0]
        assert (sc.min_value, sc.max_value) == (lo, hi)
        from wienerbounds.enumeration import graph_from_masks

        argmin = {frozenset(graph_from_masks(5, m).edges()) for m in sc.argmin_masks}
        argmax = {frozenset(graph_from_masks(5, m).edges()) for m in sc.argmax_masks}
        assert argmin == {e for e, v in values.items() if v == lo}
        assert argmax == {e for e, v in values.items() if v == hi}

    def test_shard_merge_matches_full(self):
        h = PowerWeight(1)
        full = scan_extremes(6, [h])
        merged = scan_extremes(6, [h], shard=(0, 3))
        for i in range(1, 3):
            merged = merged.merged(scan_extremes(6, [h], shard=(i, 3)))
        assert merged.graphs_scanned == full.graphs_scanned == 3660
        assert merged.cycle_length_sum == full.cycle_length_sum
        a, b = merged.per_weight[0], full.per_weight[0]
        assert (a.min_value, a.max_value) == (b.min_value, b.max_value)
        assert (a.argmin_count, a.argmax_count) == (b.argmin_count, b.argmax_count)
        assert sorted(a.argmin_masks) == sorted(b.argmin_masks)


class TestDominanceSweep:
    def test_identity_weight_only_boundary_pair_fails(self):
        results = check_f3_dominance(30, PowerWeight(1))
        violations = [(r, n) for r, n, ok in results if not ok]
        assert violations == [(4, 4)]

    @pytest.mark.parametrize("exponent", [2, -1, -2])
    def test_other_strict_weights(self, exponent):
        results = check_f3_dominance(20, PowerWeight(exponent))
        violations = [(r, n) for r, n, ok in results if not ok]
        assert violations == [(4, 4)]

    def test_boundary_pair_is_an_exact_tie(self):
        # the 4-cycle and the triangle with one pendant share the distance
        # distribution {1: 4, 2: 2}, so no strict comparison can separate them
        assert distance_distribution(cycle(4)).counts == {1: 4, 2: 2}
        assert distance_distribution(tadpole(3, 4)).counts == {1: 4, 2: 2}
        for h in (PowerWeight(1), PowerWeight(-2), QWienerWeight(0.5, 1)):
            assert (
                tadpole_closed_form(3, 4, h).value == tadpole_closed_form(4, 4, h).value
            )

    def test_not_monotone_in_cycle_length(self):
        h = PowerWeight(1)
        f12 = tadpole_closed_form(12, 13, h).value
        f11 = tadpole_closed_form(11, 13, h).value
        assert f12 - f11 == 5 > 0

    def test_empty_below_four(self):
        assert check_f3_dominance(3, PowerWeight(1)) == []

    def test_refuses_non_monotone(self):
        with pytest.raises(NonMonotoneWeightError):
            check_f3_dominance(10, PowerWeight(0))


class TestTerminalMerge:
    def test_hand_example_on_triangle_star(self):
        g = triangle_star(6)
        moved = apply_terminal_merge(g, 0, 3, 4)
        assert sorted(moved.edges()) == [(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (3, 4)]
        assert wiener(moved).value > wiener(g).value
        assert is_unicyclic(moved) and moved.n == g.n

    def test_rejects_without_major(self):
        with pytest.raises(ProofMoveError):
            apply_terminal_merge(cycle(5), 0, 1, 2)

    def test_rejects_non_terminal(self):
        g = tadpole(3, 7)  # single tail: vertex 0 has exactly one terminal
        with pytest.raises(ProofMoveError):
            apply_terminal_merge(g, 0, 6, 5)

    def test_random_merges_strictly_increase(self):
        rng = random.Random(314)
        h = PowerWeight(1)
        done = 0
        while done < 120:
            g = random_unicyclic(rng.randrange(5, 10), rng)
            report = major_vertex_report(g)
            if not report.multi_terminal_majors:
                continue
            w = rng.choice(sorted(report.multi_terminal_majors))
            u1, u2 = rng.sample(report.terminals[w], 2)
            moved = apply_terminal_merge(g, w, u1, u2)
            assert moved.n == g.n and is_unicyclic(moved)
            assert generalized_wiener(moved, h).value > generalized_wiener(g, h).value
            done += 1


class TestTailRebalance:
    def test_two_tail_merge(self):
        g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (2, 6)])
        out = apply_tail_rebalance(g, 0, 2)
        assert is_unicyclic(out) and out.n == 7
        assert wiener(out).value == 48 > 46 == wiener(g).value
        # one tail absorbed the other: a single degree-3 vertex remains
        assert sum(1 for v in range(7) if out.degree(v) == 3) == 1

    def test_unbalanced_shift_case(self):
        # third tail at vertex 3 skews the outside distance sums
        g = Graph.from_edges(
            10,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
             (0, 5), (5, 6), (6, 7),   # long tail at 0
             (2, 8),                   # short tail at 2
             (3, 9)],                  # extra tail, not part of the pair
        )
        d = {
            v: sum(x for i, x in enumerate(bfs_distances(g, v)) if i in (1, 3, 4, 9))
            for v in (0, 2)
        }
        assert d[0] != d[2]
        out = apply_tail_rebalance(g, 0, 2)
        assert is_unicyclic(out) and out.n == 10
        assert wiener(out).value > wiener(g).value

    def test_random_rebalances_strictly_increase(self):
        rng = random.Random(2718)
        done = 0
        while done < 60:
            g = random_unicyclic(rng.randrange(6, 10), rng)
            cyc = set(find_cycle(g).vertices)
            deg3 = sorted(
                v for v in cyc
                if g.degree(v) == 3 and not major_vertex_report(g).multi_terminal_majors
            )
            ok_tails = []
            for v in deg3:
                try:
                    from wienerbounds.extremal import _cycle_tail

                    _cycle_tail(g, v, cyc)
                    ok_tails.append(v)
                except ProofMoveError:
                    pass
            if len(ok_tails) < 2:
                continue
            v1, v2 = rng.sample(ok_tails, 2)
            out = apply_tail_rebalance(g, v1, v2)
            assert is_unicyclic(out)
            assert wiener(out).value > wiener(g).value
            done += 1

    def test_rejects_degree_mismatch(self):
        with pytest.raises(ProofMoveError):
            apply_tail_rebalance(tadpole(4, 6), 0, 1)


class TestLocalSearch:
    def test_from_triangle_star(self):
        g = triangle_star(8)
        result = local_search_max(g, PowerWeight(1))
        assert is_unicyclic(result)
        assert wiener(result).value == tadpole_closed_form(3, 8, PowerWeight(1)).value
        assert canonical_form(result) == canonical_form(tadpole(3, 8))

    def test_already_tadpole_is_fixed_point(self):
        g = tadpole(5, 9)
        assert local_search_max(g, PowerWeight(1)) == g

    def test_random_seeds_reach_tadpole_shape(self):
        rng = random.Random(8080)
        h = PowerWeight(1)
        bound = tadpole_closed_form(3, 8, h).value
        target = canonical_form(tadpole(3, 8))
        for _ in range(20):
            g0 = random_unicyclic(8, rng)
            result = local_search_max(g0, h)
            degs = result.degree_sequence()
            assert degs[0] <= 3
            assert sum(1 for d in degs if d == 3) <= 1
            value = wiener(result).value
            assert value <= bound
            assert (value == bound) == (canonical_form(result) == target)

    def test_refuses_decreasing_weight(self):
        with pytest.raises(NonMonotoneWeightError):
            local_search_max(triangle_star(7), PowerWeight(-1))

    def test_move_trace_reports_strict_increases(self):
        trace = []
        local_search_max(
            triangle_star(8),
            PowerWeight(1),
            on_move=lambda m, a, b: trace.append((m.kind, a, b)),
        )
        assert trace
        assert all(b > a for _, a, b in trace)
        values = [a for _, a, _ in trace] + [trace[-1][2]]
        assert values == sorted(values)
