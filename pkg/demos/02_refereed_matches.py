"""The referee: placements, alternating turns, capture, transcripts.

Run:  python demos/02_refereed_matches.py
"""

import json

from copsrobbers import (GreedyCop, GreedyMaxDistanceRobber, RandomWalkRobber,
                         StationaryRobber, generate, play_match, replay)

G = generate("grid", {"r": 2, "c": 4})
print(f"playing on {G!r}")

print("\n== greedy cop vs stationary robber ==")
t = play_match(G, 1, GreedyCop(1), StationaryRobber(), cap=20)
print(f"  captured={t.captured} in {t.cop_turns} cop turns")
for rec in t.turns:
    print(f"    {rec}")

print("\n== greedy cop vs evasive robber on a cycle (robber wins) ==")
C = generate("cycle", {"k": 8})
t = play_match(C, 1, GreedyCop(1), GreedyMaxDistanceRobber(), cap=15)
print(f"  captured={t.captured}, cap_reached={t.cap_reached} "
      f"after {t.cop_turns} turns: one cop never corners a long cycle")

print("\n== transcripts replay deterministically ==")
t = play_match(G, 2, GreedyCop(2), RandomWalkRobber(seed=4), cap=12)
doc = t.to_json()
final = replay(t)
print(f"  outcome {doc['outcome']}")
print(f"  replayed state agrees: captured={final.captured}, turns={final.cop_turns}")
print(f"  transcript JSON: {json.dumps(doc)[:100]}...")
