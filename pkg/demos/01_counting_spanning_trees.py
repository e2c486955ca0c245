"""Counting spanning trees exactly, three ways.

The determinant route (strike one row and column of the Laplacian, run
fraction-free elimination) is the workhorse.  Brute force over edge
subsets and the deletion-contraction recurrence are slower but entirely
independent, which is what makes them good cross-checks.
"""

from spantree import (
    Graph,
    complete,
    contract_edge,
    cycle,
    delete_edge,
    format_edge_list,
    parse_edge_list,
    tau,
    tau_bruteforce,
)

print("== the classics ==")
for n in range(3, 9):
    print(f"tau(K_{n}) = {tau(complete(n)):>6}   (Cayley says {n ** (n - 2)})")
print(f"tau(C_12) = {tau(cycle(12))}  (one tree per removable edge)")

print()
print("== multigraphs count parallel copies separately ==")
doubled = Graph(2, ((0, 1, 2),))
print(f"two vertices, doubled edge: tau = {tau(doubled)}")
theta = Graph(4, ((0, 1), (0, 2), (2, 1), (0, 3), (3, 1)))
print(f"theta graph (paths 1,2,2):  tau = {tau(theta)}")

print()
print("== independent routes agree ==")
g = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)))
print(f"determinant:          {tau(g)}")
print(f"subset brute force:   {tau_bruteforce(g)}")
e = g.edges[0][:2]
dc = tau(delete_edge(g, e)) + tau(contract_edge(g, e))
print(f"delete + contract:    {dc}")

print()
print("== graphs travel as plain text ==")
text = format_edge_list(g)
print(text, end="")
assert parse_edge_list(text) == g
print("(round-trips bit-exactly)")
