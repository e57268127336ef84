"""The Gyarfas-path strategy: stack, extend, slide, corner.

t-3 cops beat any robber on a graph without holes of length >= t.  The cops
grow an induced path toward the robber's component; the robber's territory
shrinks every turn until a cop is adjacent and takes him.

Run:  python demos/03_gyarfas_pursuit.py
"""

from copsrobbers import GreedyMaxDistanceRobber, V0Rule, generate, pursue, z_of_graph

G = generate("random_chordal", {"n": 16, "max_clique": 4}, seed=8)
z, v0 = z_of_graph(G)
print(f"graph: {G!r}, chordal by construction, z(G)={z} at vertex {v0}")

print("\n== t=5: two cops, start vertex chosen by minimum z ==")
res = pursue(G, 5, GreedyMaxDistanceRobber(), v0_rule=V0Rule.MIN_Z, validate=True)
for diag in res.diagnostics:
    print(f"  turn {diag['turn']}: path={diag['path']} "
          f"tip_stack={diag['tip_stack']} |C_m|={diag['component_size']}")
print(f"outcome: {res.outcome} in {res.cop_turns} cop turns "
      f"(bounds: z(G)={z}, |V|={G.n})")
print(f"final induced path: {res.strategy.state.path}")

print("\n== t=4 on a tree: the classic single-cop chordal chase ==")
T = generate("path", {"k": 9})
res = pursue(T, 4, GreedyMaxDistanceRobber(), v0_rule=V0Rule.MIN_Z, validate=True)
print(f"  single cop captures in {res.cop_turns} <= z(G)={z_of_graph(T)[0]} turns")
