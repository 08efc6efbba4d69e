"""Tour of the arc-space matrices of a small regular graph.

Builds the directed-arc indexing of C3 and K4, prints the incidence and
reversal matrices, and checks the defining identities exactly over the
integers.  Everything here is sign-exact: the walk matrix is scaled by the
valency k so no floating point ever appears.
"""

import qwalkspec as q

# %% The arc space of a triangle -------------------------------------------
g = q.cycle_graph(3)
a = q.build_arc_space(g)
print(f"C3: n={g.n}, k={a.k}, arcs={a.size}")
print("canonical arc order:", a.arcs)
print("reversal permutation:", a.reverse)

print("\nins (rows = vertices, cols = arcs; marks heads):")
print(q.format_matrix(q.ins_matrix(a)))
print("\nouts (marks tails):")
print(q.format_matrix(q.outs_matrix(a)))

# %% The scaled walk matrix W = k*U ----------------------------------------
# Entries: 2 for a non-backtracking continuation, 2-k for a backtracking
# one, 0 otherwise.  At k=2 the backtracking entries vanish.
w = q.scaled_transition_matrix(a)
print("\nW = k*U for C3 (entries 0 and 2 only at k=2):")
print(q.format_matrix(w))

k4 = q.build_arc_space(q.complete_graph(4))
w4 = q.scaled_transition_matrix(k4)
print("\nW entry values for K4 (k=3):", sorted({int(x) for x in w4.flat}))

# %% Exact identities --------------------------------------------------------
# ins*outs^T recovers the adjacency matrix; the incidence Gram matrices are
# k*I; P is an involution; W is orthogonal after rescaling: W W^T = k^2 I.
for name, ok in q.identity_suite(q.complete_graph(4)):
    print(f"{'ok ' if ok else 'FAIL'} {name}")

# %% The walk support is the non-backtracking matrix ------------------------
s1 = q.support_u(a)
print("\nS+(U) for C3 (two disjoint directed 3-cycles):")
print(q.format_matrix(s1))
print("char poly:", q.char_poly(s1))  # (t^3 - 1)^2
