"""
How many letters does a graph need?
===================================

Binary words give exactly the graphs with nested neighbourhoods on one side;
ternary words the graphs where one side's neighbourhoods are prefixes or
suffixes of a common order.  Paths show that every extra letter buys more
graphs.
"""

from parikhgraph import analysis, graphs, oracle
from parikhgraph.parikh import parikh_graph
from parikhgraph.words import word
from parikhgraph.recognition import (
    check_binary_via_chordality, recognize_binary, recognize_ternary, synthesize_word,
)

samples = {
    "K_{2,3}": graphs.complete_bipartite(2, 3),
    "P5": graphs.path_graph(5),
    "P7": graphs.path_graph(7),
    "G(abcdcbab)": parikh_graph(word("abcdcbab")).graph,
}
for name, g in samples.items():
    binary = recognize_binary(g)
    ternary = recognize_ternary(g)
    general = synthesize_word(g).word
    print(f"{name:>12}: binary {str(binary.word) if binary else '-':<8} "
          f"ternary {str(ternary.word) if ternary else '-':<8} synthesised {general}"
          f"  (chordality test says binary: {check_binary_via_chordality(g)})")

# The longest path over s letters has 3s - 3 edges.
print()
for s in range(2, 7):
    w = analysis.longest_path_word(s)
    g = parikh_graph(w).graph
    print(f"s={s}: {str(w):<20} path with {len(g.edges)} edges, diameter {graphs.diameter(g)}")

# Exhaustive check that the 6-edge path cannot be written with two letters.
found = [w for n in range(1, 8) for w in oracle.enumerate_words(2, n)
         if analysis.is_path_graph(parikh_graph(w).graph) and len(w) == 7]
print("\nbinary words of length <= 7 giving a 6-edge path:", found or "none")
