"""Odd-bipartiteness: which even-uniform hypergraphs split so that every
edge meets both sides an odd number of times?

The decision reduces to a linear system over GF(2) (one equation per edge,
right-hand side all ones), so answers are exact and come with certificates.
The punchline for half-edge blow-ups G^{k,k/2}: the lift is odd-bipartite
exactly when the base graph is bipartite. Cored blow-ups (s < k/2) are
odd-bipartite no matter what.
"""

from hypergraph_spectra import (
    cycle_graph,
    generalized_power,
    is_bipartite,
    odd_bipartition,
    s_cycle,
    verify_odd_bipartition,
)

print("cycles, k = 4, s = 2 (half edges):")
for m in range(3, 9):
    h, _ = generalized_power(cycle_graph(m), 4, 2)
    cert = odd_bipartition(h)
    base = "bipartite" if is_bipartite(cycle_graph(m)) is not None else "odd cycle"
    if cert is None:
        print(f"  C_{m}: base {base:9s} -> lift not odd-bipartite")
    else:
        assert verify_odd_bipartition(h, cert)
        print(f"  C_{m}: base {base:9s} -> lift odd-bipartite, "
              f"part one = {sorted(cert.part_one)}")

print()
print("the same cycles cored down to s = 1 are always odd-bipartite:")
for m in (3, 5):
    h, _ = generalized_power(cycle_graph(m), 4, 1)
    cert = odd_bipartition(h)
    assert cert is not None and verify_odd_bipartition(h, cert)
    print(f"  C_{m}^(4,1): part one = {sorted(cert.part_one)}")

print()
print("tight s-cycles: parity of the vertex count decides")
for d in (6, 8):
    h = s_cycle(4, 3, d)
    verdict = "odd-bipartite" if odd_bipartition(h) else "not odd-bipartite"
    print(f"  s_cycle(4, 3, {d}) on {h.n} vertices: {verdict}")
