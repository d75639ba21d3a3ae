"""
Words, cores and Parikh graphs
==============================

A tour of the basic objects: positions and subword counts in a word, the
v-core of a word, and the bipartite graph whose edges are the occurrences of
consecutive-letter pairs.
"""

from parikhgraph import graphs
from parikhgraph.parikh import canonical_strong_ordering, is_strong_ordering, parikh_graph
from parikhgraph.words import core, position_of, subword_count, word

# Words are read from lowercase letters; the alphabet is a < b < c < ...
w = word("abbaba")
print("position of the 2nd b in", w, "=", position_of(w, 2, 2))
print("occurrences of 'ab' as a scattered subword:", subword_count(w, "ab"))

# The v-core keeps exactly the letters that take part in some occurrence of v.
long_word = word("bacbbabcccbac")
for pattern in ("b", "ab", "abc", "cca"):
    print(f"core_{pattern}({long_word}) = {core(long_word, pattern)}")

# The Parikh graph: one vertex per letter occurrence, labelled "c:2" for the
# second c; an edge joins a_k and a_(k+1) whenever the a_k comes first.
pg = parikh_graph(word("bbccabdc"))
g = pg.graph
print(f"\nG(bbccabdc): {len(g)} vertices, {len(g.edges)} edges, diameter {graphs.diameter(g)}")
for u, v in sorted(g.edges):
    print("  ", pg.render(u), "--", pg.render(v))

# Odd letters sit on one side and even letters on the other, and listing
# letters from the top down gives an ordering with no "bad crossings".
ordering = canonical_strong_ordering(pg.word)
print("canonical ordering is strong:", is_strong_ordering(g, ordering))

# Different words can give the same graph.
print("G(abb) ~ G(abc):", graphs.are_isomorphic(parikh_graph(word("abb")).graph, parikh_graph(word("abc")).graph))

# DOT output for graphviz
print()
print(pg.to_dot())
