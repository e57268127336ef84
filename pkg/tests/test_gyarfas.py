import random

import pytest

from copsrobbers.engine import (GreedyMaxDistanceRobber, RandomWalkRobber,
                                StationaryRobber, apply_cop_turn,
                                apply_robber_turn, new_game, place_cops,
                                place_robber)
from copsrobbers.graph import Graph, GraphError, generate, is_induced_path
from copsrobbers.gyarfas import (Confinement, ExtensionImpossible,
                                 GyarfasCopStrategy, V0Rule, confinement_check,
                                 extract_long_hole, new_gyarfas, pursue)
from copsrobbers.oracle import optimal_evader, solve
from copsrobbers.structure import has_hole_at_least, is_induced_cycle, z_of_graph


class ScriptedRobber:
    def __init__(self, placement, moves):
        self.placement = placement
        self.moves = list(moves)

    def place(self, G, cops):
        return self.placement

    def respond(self, state):
        return self.moves.pop(0)


def connected_random(rng, n_max=12, p_range=(0.15, 0.6)):
    from copsrobbers.graph import is_connected
    while True:
        n = rng.randint(4, n_max)
        p = rng.uniform(*p_range)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        G = Graph(n, edges)
        if is_connected(G):
            return G


class TestConstruction:
    def test_cop_counts(self, c6, petersen):
        assert new_gyarfas(c6, 4).k == 1
        assert new_gyarfas(petersen, 7).k == 4

    def test_min_z_start_on_path(self, p4):
        assert new_gyarfas(p4, 4, V0Rule.MIN_Z).v0 == 1

    def test_t_guard(self, c6):
        with pytest.raises(GraphError):
            new_gyarfas(c6, 3)

    def test_placement_stacks_all_cops(self, petersen):
        strat = new_gyarfas(petersen, 7)
        assert strat.place(petersen) == (0, 0, 0, 0)


class TestRespond:
    def test_phase1_first_move_leaves_one_cop_behind(self):
        # t=5: two cops; the first extension moves t-4 = 1 cop to v_1
        G = generate("random_chordal", {"n": 10, "max_clique": 3}, seed=2)
        strat = new_gyarfas(G, 5)
        state = place_cops(new_game(G, 2), strat.place(G))
        far = max(range(G.n), key=lambda v: (v not in G.closed_sets[strat.v0], v))
        state = place_robber(state, far)
        assert not state.captured
        targets = strat.respond(state)
        assert targets[0] == strat.v0  # stationary cop
        assert targets[1] == strat.state.path[1]
        assert strat.state.tip_stack == 1

    def test_t4_single_cop_slides_every_turn(self):
        G = generate("path", {"k": 6})
        strat = new_gyarfas(G, 4)
        state = place_cops(new_game(G, 1), strat.place(G))
        state = place_robber(state, 5)
        for expected_m in (1, 2, 3):
            targets = strat.respond(state)
            state = apply_cop_turn(state, targets)
            assert strat.state.m == expected_m
            assert targets == (strat.state.path[-1],)
            if state.captured:
                break
            state = apply_robber_turn(state, state.robber)  # robber stays

    def test_path5_minz_hand_simulation(self):
        # v0 = 2 (middle), robber at 4: slide 2 -> 3, then capture at 4
        G = generate("path", {"k": 5})
        res = pursue(G, 4, ScriptedRobber(4, [4, 4, 4]), v0_rule=V0Rule.MIN_Z,
                     validate=True)
        assert res.strategy.v0 == 2
        assert res.outcome == "captured" and res.cop_turns == 2
        z, _ = z_of_graph(G)
        assert res.cop_turns <= z == 3

    def test_capture_override_from_placement(self, c6):
        # robber places next to the stack: captured on cop turn 1
        res = pursue(c6, 5, ScriptedRobber(1, [1]))
        assert res.outcome == "captured" and res.cop_turns == 1

    def test_progress_path_grows_by_one_per_noncapturing_turn(self):
        rng = random.Random(7)
        for _ in range(10):
            G = generate("random_chordal", {"n": 14, "max_clique": 4},
                         seed=rng.randrange(999))
            res = pursue(G, 5, GreedyMaxDistanceRobber(), validate=True)
            assert res.outcome == "captured"
            assert res.cop_turns <= G.n
            # diagnostics: path length grows by exactly one per turn until capture
            for turn, diag in enumerate(res.diagnostics[:-1], start=1):
                assert len(diag["path"]) == turn + 1


class TestConfinement:
    def setup_c6_escape(self):
        """Drive the C6/t=5 walkthrough up to the escape decision point."""
        G = generate("cycle", {"k": 6})
        strat = new_gyarfas(G, 5)
        state = place_cops(new_game(G, 2), strat.place(G))
        state = place_robber(state, 3)
        for move in (3, 4):  # robber stays at 3, then steps to 4
            state = apply_cop_turn(state, strat.respond(state))
            state = apply_robber_turn(state, move)
        state = apply_cop_turn(state, strat.respond(state))
        # cops now at (2,3); robber at 4 must run to 5, leaving C_3 = {4}
        return G, strat, state

    def test_ok_when_staying(self, c6):
        strat = new_gyarfas(c6, 5)
        state = place_cops(new_game(c6, 2), strat.place(c6))
        state = place_robber(state, 3)
        state = apply_cop_turn(state, strat.respond(state))
        assert confinement_check(c6, strat.state, 3, 3) is Confinement.OK

    def test_ok_inside_component(self, c6):
        strat = new_gyarfas(c6, 5)
        state = place_cops(new_game(c6, 2), strat.place(c6))
        state = place_robber(state, 3)
        state = apply_cop_turn(state, strat.respond(state))
        assert 4 in strat.state.component(c6)
        assert confinement_check(c6, strat.state, 3, 4) is Confinement.OK

    def test_adjacent_to_cop_classification(self):
        G, strat, state = self.setup_c6_escape()
        # moving onto the cop-adjacent vertex 3->... robber sits at 4; vertex 3
        # is occupied, so 4 itself is cop-adjacent; stepping "back" to 3's side
        assert confinement_check(G, strat.state, 4, 3) is Confinement.ADJACENT_TO_COP

    def test_violation_and_extension_impossible(self):
        G, strat, state = self.setup_c6_escape()
        assert confinement_check(G, strat.state, 4, 5) is Confinement.VIOLATION
        state = apply_robber_turn(state, 5)
        with pytest.raises(ExtensionImpossible):
            strat.respond(state)

    def test_extraction_gives_whole_cycle(self):
        G, strat, state = self.setup_c6_escape()
        cert = extract_long_hole(G, strat.state, 4, 5)
        assert cert.cycle == (0, 1, 2, 3, 4, 5)
        cert.validate(G)

    def test_extraction_guard(self):
        G, strat, state = self.setup_c6_escape()
        with pytest.raises(GraphError, match="violation"):
            extract_long_hole(G, strat.state, 4, 4)


class TestViolationRuns:
    def test_cycles_vs_optimal_evader(self):
        for k in range(6, 13):
            Ck = generate("cycle", {"k": k})
            table = solve(Ck, 2)
            res = pursue(Ck, 5, optimal_evader(Ck, 2, table), validate=True)
            assert res.outcome in ("captured", "violation")
            if res.outcome == "violation":
                assert res.certificate is not None
                assert res.certificate.length == k >= 5
                res.certificate.validate(Ck)

    def test_random_holey_graphs_yield_valid_certificates(self):
        rng = random.Random(23)
        violations = 0
        runs = 0
        while runs < 25:
            G = connected_random(rng, n_max=12)
            t = 5
            if has_hole_at_least(G, t) is None:
                continue
            runs += 1
            table = solve(G, t - 3)
            res = pursue(G, t, optimal_evader(G, t - 3, table), validate=True)
            if res.outcome == "violation":
                violations += 1
                assert res.certificate.length >= t
                assert is_induced_cycle(G, res.certificate.cycle)
            else:
                assert res.outcome == "captured"
        assert violations > 0  # the evader does find escapes in practice

    def test_no_violations_on_hole_free_graphs(self):
        rng = random.Random(31)
        for _ in range(20):
            G = generate("random_chordal", {"n": 12, "max_clique": 4},
                         seed=rng.randrange(10 ** 6))
            for robber in (GreedyMaxDistanceRobber(), RandomWalkRobber(7)):
                res = pursue(G, 6, robber, validate=True)
                assert res.outcome == "captured"
                assert Confinement.VIOLATION not in res.confinement_events


class TestStateInvariants:
    def test_invariants_across_random_matches(self):
        rng = random.Random(11)
        for trial in range(60):
            G = connected_random(rng, n_max=10, p_range=(0.2, 0.7))
            t = rng.choice((4, 5, 6))
            robber = [StationaryRobber(), GreedyMaxDistanceRobber(),
                      RandomWalkRobber(trial)][trial % 3]
            res = pursue(G, t, robber, validate=True)  # validate raises on drift
            assert res.outcome in ("captured", "violation")
            path = res.strategy.state.path
            assert is_induced_path(G, path)

    def test_induced_path_even_on_adversarial_graphs(self):
        rng = random.Random(13)
        for trial in range(30):
            G = connected_random(rng, n_max=12, p_range=(0.15, 0.45))
            res = pursue(G, 4, RandomWalkRobber(trial), validate=True)
            assert res.outcome in ("captured", "violation")
