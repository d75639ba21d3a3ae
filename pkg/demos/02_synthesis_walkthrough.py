"""
From a graph back to a word
===========================

Every connected bipartite permutation graph is the Parikh graph of some
word.  The construction finds a strong ordering, cuts the graph into nested
interval blocks, and inserts letters block by block.  This script prints
every stage.
"""

from parikhgraph import graphs
from parikhgraph.graphs import bipartite
from parikhgraph.parikh import parikh_graph
from parikhgraph.recognition import find_strong_ordering, interval_decomposition, synthesize_word

# A small graph given by hand, with plain labels.
g = bipartite(
    ["x1", "x2", "x3", "x4"],
    ["y1", "y2", "y3", "y4"],
    [("x1", "y1"), ("x1", "y2"), ("x2", "y1"), ("x2", "y2"), ("x2", "y3"),
     ("x3", "y3"), ("x3", "y4"), ("x4", "y3")],
)

ordering = find_strong_ordering(g)
print("strong ordering:")
print("   X:", " < ".join(ordering.order_x))
print("   Y:", " < ".join(ordering.order_y))

dec = interval_decomposition(g, ordering)
print(f"\ninterval decomposition into {dec.n} blocks:")
for p in range(1, dec.n + 1):
    print(f"   X_{p} = {list(dec.x_block(p))}   Y_{p} = {list(dec.y_block(p))}")

result = synthesize_word(g, ordering)
print("\nsynthesis steps:")
for step in result.steps:
    print(f"   {str(step.word):<14} ({step.case})")

print("\nword:", result.word)
print("embedding:", {v: pv.render(result.word.size) for v, pv in sorted(result.mapping.items())})
print("G(word) isomorphic to the input:", graphs.are_isomorphic(parikh_graph(result.word).graph, g))

# The 6-cycle is the smallest connected bipartite graph with no strong ordering.
print("\nC6 strong ordering:", find_strong_ordering(graphs.cycle_graph(6)))
