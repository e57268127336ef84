"""Build graphs and read off their pursuit-relevant structure.

Run:  python demos/01_graphs_and_structure.py
"""

from copsrobbers import (dilworth_number, generate, is_chordal, is_pt_free,
                         longest_hole, serialize_graph, z_of_graph, z_value)

print("== generators ==")
for kind, params in (("cycle", {"k": 6}), ("petersen", {}),
                     ("grid", {"r": 3, "c": 3}),
                     ("random_chordal", {"n": 14, "max_clique": 4}),
                     ("threshold", {"creation": "iidid"})):
    G = generate(kind, params, seed=1)
    print(f"  {G!r:<42} serialized: {serialize_graph(G)[:60]}...")

print("\n== holes and chordality ==")
for kind, params in (("cycle", {"k": 6}), ("complete", {"k": 5}),
                     ("grid", {"r": 3, "c": 3}),
                     ("random_chordal", {"n": 14, "max_clique": 4})):
    G = generate(kind, params, seed=1)
    hole = longest_hole(G)
    print(f"  {G.name:<24} chordal={is_chordal(G)!s:<5} "
          f"longest hole={'-' if hole is None else hole.length} "
          f"{'' if hole is None else hole.cycle}")

print("\n== z-values: longest induced path from each start ==")
P = generate("path", {"k": 6})
for v in range(P.n):
    z, witness = z_value(P, v)
    print(f"  z({v}) = {z}  witness {witness}")
z, argmin = z_of_graph(P)
print(f"  z(G) = {z} at vertex {argmin}: a cop starting there wins in <= {z} turns")

print("\n== P_t-freeness ==")
G = generate("petersen")
for t in (5, 6, 7):
    res = is_pt_free(G, t)
    print(f"  petersen P_{t}-free: {res.pt_free}"
          + (f" (witness {res.witness})" if res.witness else ""))

print("\n== Dilworth numbers ==")
for kind, params in (("cycle", {"k": 4}), ("cycle", {"k": 7}),
                     ("complete", {"k": 6}), ("path", {"k": 4})):
    G = generate(kind, params)
    D, cert = dilworth_number(G)
    print(f"  D({G.name}) = {D}   antichain {cert.antichain}")
print("  (cycles give D(C_k) = k, which is what ties cop numbers to D)")
