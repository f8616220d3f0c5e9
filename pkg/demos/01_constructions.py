"""Building blow-ups, s-paths, and s-cycles, and moving them through files.

Every hypergraph here is k-uniform. The blow-up G^{k,s} replaces each base
vertex by an s-set and pads each base edge with k-2s fresh vertices; at
s = k/2 no padding is needed and the construction is a pure "half edge"
doubling of the base graph.
"""

from hypergraph_spectra import (
    cycle_graph,
    cycle_plus_pendant,
    generalized_power,
    parse_hypergraph,
    s_cycle,
    s_path,
    serialize_hypergraph,
    subdivide,
)


def show(h, name):
    print(f"{name}: k={h.k}, n={h.n}, m={h.m}")
    for e in h.edges:
        print("   ", e)


triangle = cycle_graph(3)
print("base triangle edges:", triangle.edges)

# the half-edge blow-up: s = k/2, every base vertex becomes a pair
half, bmap = generalized_power(triangle, 4, 2)
show(half, "triangle^{4,2}")
print("vertex blocks:", bmap.vertex_blocks)

# a cored blow-up: s = 1 leaves k-2s = 2 fresh vertices inside each edge
cored, cmap = generalized_power(triangle, 4, 1)
show(cored, "triangle^{4,1}")
print("edge blocks:", cmap.edge_blocks)

# s-paths and s-cycles: consecutive edges overlap in exactly s vertices
show(s_path(4, 2, 3), "s_path(4, 2, 3)")
show(s_cycle(4, 3, 6), "s_cycle(4, 3, 6)")

# s_cycle(k, k/2, d) is the same thing as the blow-up of the d-cycle
direct = s_cycle(6, 3, 4)
lifted, _ = generalized_power(cycle_graph(4), 6, 3)
print("s_cycle(6,3,4) == C_4^{6,3}:", direct == lifted)

# graph surgery: subdividing the paw's pendant edge vs a cycle edge
paw = cycle_plus_pendant(4)
print("paw edges:", paw.edges)
print("subdivide pendant edge:", subdivide(paw, 0, 1).edges)
print("subdivide cycle edge:  ", subdivide(paw, 2, 3).edges)

# the text format round-trips exactly
text = serialize_hypergraph(half)
print("serialized form:")
print(text, end="")
print("round trip ok:", parse_hypergraph(text) == half)
