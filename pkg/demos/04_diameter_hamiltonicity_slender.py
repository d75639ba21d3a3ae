"""
Diameter, Hamiltonian cycles and slender words
==============================================

Parikh graphs have small diameter, their Hamiltonicity can be read off the
word, and words using each letter once give one graph per integer partition.
"""

from parikhgraph import analysis, graphs
from parikhgraph.parikh import parikh_graph
from parikhgraph.words import word

print("diameter against the applicable bound:")
for text in ["abab", "bcabcab", "cdabcdab", "deabcdeab", "bbccabdc"]:
    r = analysis.diameter_report(word(text))
    print(f"   {text:<10} diameter {r.diameter}  bound {r.applicable_bound:>2}  ({r.bound_source})")

print("\nHamiltonian cycles:")
for text in ["aabb", "abab", "aaabbb"]:
    w = word(text)
    print(f"   {text:<8} prefix criterion {analysis.binary_hamiltonian(w)!s:<5}"
          f" backtracking {graphs.has_hamiltonian_cycle(parikh_graph(w).graph)}")
for text in ["abbc", "abcb", "abbbcc", "aabbbc"]:
    w = word(text, 3)
    print(f"   {text:<8} position criterion {analysis.ternary_hamiltonian(w)!s:<5}"
          f" backtracking {graphs.has_hamiltonian_cycle(parikh_graph(w).graph)}")

# abbc: the prefix "a" has as many b's as c's (none), yet G(abbc) is a 4-cycle.
print("   abbc prefix 'a' has more b's than c's:", word("a").count(2) > word("a").count(3))

print("\nslender words over 4 letters, one per partition of 4:")
for parts in analysis.integer_partitions(4):
    w = analysis.slender_word_for_partition(parts)
    sizes = sorted((len(c) for c in graphs.connected_components(parikh_graph(w).graph)), reverse=True)
    print(f"   {'+'.join(map(str, parts)):<8} {w}   path sizes {sizes}")

print("\nclasses vs partitions:")
for s in range(2, 8):
    print(f"   s={s}: {analysis.count_slender_classes(s)} classes, {analysis.partition_count(s)} partitions")
