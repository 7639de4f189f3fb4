#ifndef DOMCX_GRAPH_HPP
#define DOMCX_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domcx/vertex_set.hpp"

namespace domcx {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on {0..n-1}, adjacency as bitsets.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(size_t(n), VertexSet(n)) {}

    int vertex_count() const { return n_; }

    int edge_count() const {
        int deg2 = 0;
        for (const auto& a : adj_) deg2 += a.count();
        return deg2 / 2;
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[size_t(u)].set(v);
        adj_[size_t(v)].set(u);
    }

    bool has_edge(int u, int v) const { return adj_[size_t(u)].test(v); }

    int degree(int v) const { return adj_[size_t(v)].count(); }

    const VertexSet& neighbors(int v) const { return adj_[size_t(v)]; }

    // N[v] = {v} ∪ adj(v)
    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[size_t(v)];
        s.set(v);
        return s;
    }

    // true iff every closed neighborhood meets s; vacuously true for n = 0.
    bool is_dominating(const VertexSet& s) const {
        for (int v = 0; v < n_; ++v)
            if (!closed_neighborhood(v).intersects(s)) return false;
        return true;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// --- parsing / encoding ---------------------------------------------------

// Short-form graph6 (n ≤ 62). A leading ">>graph6<<" header is stripped.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// First line "n", then one "u v" edge per line (0-indexed).
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// --- generators -------------------------------------------------------------

enum class GraphFamily { path, cycle, complete, star, random_tree, random_chordal, gnp };

struct GenParams {
    int n = 0;
    double p = 0.5;        // gnp only
    uint64_t seed = 0;     // random families only
};

// Deterministic for a fixed family/params/seed.
Graph generate(GraphFamily family, const GenParams& params);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int n);  // center is vertex 0

// --- exact invariants -------------------------------------------------------

// One maximum independent set, deterministic: branch and bound on the
// highest-degree candidate, ties to the lowest vertex index.
VertexSet max_independent_set(const Graph& g);

// τ(G) = n − α(G)
int vertex_cover_number(const Graph& g);

// Smallest dominating set size by subset scan; intended for small n.
int min_dominating_set_size(const Graph& g);

}  // namespace domcx

#endif
