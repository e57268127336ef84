import itertools
import json
import random

import pytest

from copsrobbers.engine import (GameError, GreedyCop, GreedyMaxDistanceRobber,
                                RandomWalkRobber, StationaryRobber, Transcript,
                                Turn, apply_cop_turn, apply_robber_turn,
                                new_game, place_cops, place_robber, play_match,
                                replay, legal_robber_targets)
from copsrobbers.graph import Graph, build_graph, generate


class RandomCop:
    """Test-only: uniformly random legal cop moves."""

    def __init__(self, k, seed):
        self.k = k
        self.rng = random.Random(seed)

    def place(self, G):
        return tuple(self.rng.randrange(G.n) for _ in range(self.k))

    def respond(self, state):
        G = state.graph
        return tuple(self.rng.choice(sorted(G.closed_sets[c])) for c in state.cops)


class TestSetup:
    def test_new_game(self, c4):
        state = new_game(c4, 2)
        assert state.turn is Turn.COPS_TO_PLACE and state.k == 2

    def test_single_vertex_capture_at_placement(self):
        G = build_graph(1, [])
        state = place_robber(place_cops(new_game(G, 1), (0,)), 0)
        assert state.captured and state.cop_turns == 0

    def test_disconnected_rejected(self):
        with pytest.raises(GameError, match="connected"):
            new_game(build_graph(2, []), 1)

    def test_no_cops_rejected(self, c4):
        with pytest.raises(GameError):
            new_game(c4, 0)


class TestMoves:
    def game(self, c4):
        return place_robber(place_cops(new_game(c4, 1), (0,)), 2)

    def test_cop_moves_onto_robber(self, c4):
        state = place_robber(place_cops(new_game(c4, 1), (0,)), 1)
        state = apply_cop_turn(state, (1,))
        assert state.captured and state.cop_turns == 1

    def test_robber_moves_onto_cop_is_capture(self, c4):
        state = self.game(c4)
        state = apply_cop_turn(state, (1,))
        state = apply_robber_turn(state, 1)
        assert state.captured

    def test_illegal_cop_target_rejected_names_agent(self, c4):
        state = self.game(c4)
        with pytest.raises(GameError, match="cop 0"):
            apply_cop_turn(state, (2,))
        assert state.cops == (0,)  # unchanged: states are immutable values

    def test_illegal_robber_target(self, c4):
        state = apply_cop_turn(self.game(c4), (0,))
        with pytest.raises(GameError, match="robber"):
            apply_robber_turn(state, 0)

    def test_wrong_phase(self, c4):
        state = self.game(c4)
        with pytest.raises(GameError, match="cannot move"):
            apply_robber_turn(state, 3)

    def test_stay_is_legal_for_everyone(self, c4):
        state = apply_cop_turn(self.game(c4), (0,))
        state = apply_robber_turn(state, 2)
        assert not state.captured and state.cop_turns == 1

    def test_legal_targets(self, c4):
        state = place_cops(new_game(c4, 1), (0,))
        assert legal_robber_targets(state) == [0, 1, 2, 3]
        state = place_robber(state, 2)
        state = apply_cop_turn(state, (1,))
        assert legal_robber_targets(state) == [1, 2, 3]


class TestBaselineRobbers:
    def test_stationary(self, c4):
        r = StationaryRobber()
        state = place_robber(place_cops(new_game(c4, 1), (0,)), 2)
        state = apply_cop_turn(state, (1,))
        assert r.respond(state) == 2

    def test_greedy_max_distance(self):
        G = generate("path", {"k": 5})
        r = GreedyMaxDistanceRobber()
        state = place_robber(place_cops(new_game(G, 1), (0,)), 2)
        state = apply_cop_turn(state, (0,))
        assert r.respond(state) == 3  # distance 3 beats staying at 2

    def test_random_walk_reproducible(self, c6):
        def run():
            return play_match(c6, 1, GreedyCop(1), RandomWalkRobber(seed=9), cap=6).to_json()
        assert run() == run()


class TestMatches:
    def test_greedy_cop_catches_stationary_on_path3(self):
        G = generate("path", {"k": 3})
        t = play_match(G, 1, GreedyCop(1), StationaryRobber(), cap=10)
        assert t.captured and t.cop_turns <= 2

    def test_forfeit_attribution(self, c4):
        class BadCop(GreedyCop):
            def respond(self, state):
                return (3,)  # cop sits at 0 on a path: 3 is two steps away

        class TeleportRobber(StationaryRobber):
            def respond(self, state):
                return (state.robber + 2) % 4

        P5 = generate("path", {"k": 5})
        t = play_match(P5, 1, BadCop(1), StationaryRobber(), cap=5)
        assert t.forfeit == "cops" and not t.captured
        t2 = play_match(c4, 1, GreedyCop(1), TeleportRobber(), cap=5)
        assert t2.forfeit == "robber"

    def test_cap_reached(self, c4):
        t = play_match(c4, 1, GreedyCop(1), GreedyMaxDistanceRobber(), cap=7)
        assert t.cap_reached and not t.captured and t.cop_turns == 7

    def test_all_vertices_occupied_captures_at_placement(self):
        # with k >= n cops covering every vertex the robber is caught placing
        class Blanket:
            def __init__(self, k):
                self.k = k

            def place(self, G):
                return tuple(v % G.n for v in range(self.k))

            def respond(self, state):
                return state.cops

        for n in range(1, 7):
            G = generate("path", {"k": n}) if n > 1 else build_graph(1, [])
            t = play_match(G, n, Blanket(n), StationaryRobber(), cap=3)
            assert t.captured and t.cop_turns == 0

    def test_legality_of_random_play(self):
        # 10^4 random matches: the referee validates every accepted move, so
        # zero forfeits means every move satisfied target in N[source]; a
        # sample of transcripts is re-walked move by move as a second check
        rng = random.Random(1)
        graphs = [generate("cycle", {"k": 6}), generate("grid", {"r": 2, "c": 4}),
                  generate("random_connected", {"n": 8, "p": 0.35}, seed=4),
                  generate("random_chordal", {"n": 7, "max_clique": 3}, seed=2)]
        for trial in range(10_000):
            G = graphs[trial % len(graphs)]
            k = 1 + trial % 2
            t = play_match(G, k, RandomCop(k, trial), RandomWalkRobber(trial + 1), cap=6)
            assert t.forfeit is None
            if trial % 40 == 0:
                state = new_game(G, k)
                state = place_cops(state, t.cop_placement)
                state = place_robber(state, t.robber_placement)
                for rec in t.turns:
                    if rec["side"] == "cops":
                        for src, dst in zip(state.cops, rec["targets"]):
                            assert dst in G.closed_sets[src]
                        state = apply_cop_turn(state, rec["targets"])
                    else:
                        assert rec["target"] in G.closed_sets[state.robber]
                        state = apply_robber_turn(state, rec["target"])


class TestTranscripts:
    def test_replay_reproduces_outcome(self, c6):
        t = play_match(c6, 2, GreedyCop(2), GreedyMaxDistanceRobber(), cap=20)
        final = replay(t)
        assert final.captured == t.captured and final.cop_turns == t.cop_turns

    def test_json_roundtrip_and_replay(self, c6):
        t = play_match(c6, 2, GreedyCop(2), RandomWalkRobber(3), cap=9)
        doc = json.loads(json.dumps(t.to_json()))
        again = Transcript.from_json(doc)
        assert again.to_json() == t.to_json()
        replay(again)

    def test_replay_determinism_across_runs(self, c6):
        a = play_match(c6, 1, GreedyCop(1), GreedyMaxDistanceRobber(), cap=12)
        b = play_match(c6, 1, GreedyCop(1), GreedyMaxDistanceRobber(), cap=12)
        assert a.to_json() == b.to_json()

    def test_tampered_outcome_detected(self, c6):
        t = play_match(c6, 2, GreedyCop(2), StationaryRobber(), cap=20)
        t.cop_turns += 1
        with pytest.raises(GameError):
            replay(t)
