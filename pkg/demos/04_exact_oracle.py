"""The exact game oracle: solve small games outright and extract optimal play.

Run:  python demos/04_exact_oracle.py
"""

from copsrobbers import (cop_number, generate, optimal_evader, optimal_pursuer,
                         play_match, solve)

print("== cop numbers of familiar graphs ==")
for kind, params, kmax in (("path", {"k": 7}, 2), ("cycle", {"k": 4}, 3),
                           ("cycle", {"k": 9}, 3), ("petersen", {}, 4),
                           ("grid", {"r": 3, "c": 3}, 3)):
    G = generate(kind, params)
    print(f"  c({G.name}) = {cop_number(G, kmax)}")

print("\n== optimal play realizes the game value exactly ==")
G = generate("grid", {"r": 3, "c": 3})
k = cop_number(G, 3)
table = solve(G, k)
root = table.root_value()
print(f"  {G.name}: {k} cop(s), optimal capture in {root} turns "
      f"from placement {table.best_placement()}")
match = play_match(G, k, optimal_pursuer(G, k, table), optimal_evader(G, k, table),
                   cap=root + 5)
print(f"  pursuer vs evader: captured={match.captured} in {match.cop_turns} turns "
      f"(= root value: {match.cop_turns == root})")

print("\n== the robber side of the table ==")
C = generate("cycle", {"k": 6})
t1 = solve(C, 1)
print(f"  one cop on {C.name}: copwin={t1.is_copwin()} "
      "(the evader shadows the cop around the cycle forever)")
t2 = solve(C, 2)
print(f"  two cops: copwin={t2.is_copwin()}, value={t2.root_value()} turns")
