#ifndef DOMCX_HYPERGRAPH_HPP
#define DOMCX_HYPERGRAPH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "domcx/graph.hpp"
#include "domcx/vertex_set.hpp"

namespace domcx {

// Ground set {0..n-1} with a multiset of hyperedges. The edge list order is
// part of the value: position j names the edge vertex n+j of the associated
// bipartite graph, and duplicates stay distinct there.
struct Hypergraph {
    int n = 0;
    std::vector<VertexSet> edges;

    Hypergraph() = default;
    explicit Hypergraph(int ground) : n(ground) {}
};

// Hyperedges are the closed neighborhoods [N[0], ..., N[n-1]], in vertex order.
Hypergraph dominance_hypergraph(const Graph& g);

// σ is independent iff no hyperedge is contained in σ.
bool is_independent(const Hypergraph& h, const VertexSet& sigma);

// s is transversal iff it meets every hyperedge.
bool is_transversal(const Hypergraph& h, const VertexSet& s);

// Graph on n + |edges| vertices; ground vertex i is adjacent to edge vertex
// n+j iff i ∈ edges[j].
Graph associated_bipartite(const Hypergraph& h);

// Bipartite double of g on 2n vertices: v encodes (+,v), n+w encodes (-,w),
// with an edge {v, n+w} iff v ∈ N[w]. Equals the associated bipartite graph
// of the dominance hypergraph.
Graph bowtie(const Graph& g);

// The involution swapping v and n+v, as a permutation of {0..2n-1}.
std::vector<int> bowtie_involution(int n);

// Inclusion-minimal hyperedges, deduplicated, in first-occurrence order.
Hypergraph minimal_edges(const Hypergraph& h);

// CLI text format: first line "n m", then one hyperedge per line as
// space-separated vertices (an empty line is an empty hyperedge).
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& h);

}  // namespace domcx

#endif
