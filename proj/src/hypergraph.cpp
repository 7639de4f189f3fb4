#include "domcx/hypergraph.hpp"

#include <stdexcept>

namespace domcx {

Hypergraph dominance_hypergraph(const Graph& g) {
    Hypergraph h(g.vertex_count());
    h.edges.reserve(size_t(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) h.edges.push_back(g.closed_neighborhood(v));
    return h;
}

bool is_independent(const Hypergraph& h, const VertexSet& sigma) {
    for (const auto& e : h.edges)
        if (e.subset_of(sigma)) return false;
    return true;
}

bool is_transversal(const Hypergraph& h, const VertexSet& s) {
    for (const auto& e : h.edges)
        if (!e.intersects(s)) return false;
    return true;
}

Graph associated_bipartite(const Hypergraph& h) {
    int total = h.n + int(h.edges.size());
    Graph g(total);
    for (int j = 0; j < int(h.edges.size()); ++j)
        h.edges[size_t(j)].for_each([&](int v) { g.add_edge(v, h.n + j); });
    return g;
}

Graph bowtie(const Graph& g) {
    return associated_bipartite(dominance_hypergraph(g));
}

std::vector<int> bowtie_involution(int n) {
    std::vector<int> perm(size_t(2 * n));
    for (int v = 0; v < n; ++v) {
        perm[size_t(v)] = n + v;
        perm[size_t(n + v)] = v;
    }
    return perm;
}

Hypergraph minimal_edges(const Hypergraph& h) {
    Hypergraph out(h.n);
    for (const auto& e : h.edges) {
        bool keep = true;
        for (const auto& f : h.edges) {
            if (&f == &e) continue;
            if (f.subset_of(e) && f != e) { keep = false; break; }
        }
        if (!keep) continue;
        bool seen = false;
        for (const auto& prev : out.edges)
            if (prev == e) { seen = true; break; }
        if (!seen) out.edges.push_back(e);
    }
    return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
    std::vector<std::string_view> lines;
    for (size_t start = 0; start < text.size();) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view ln = text.substr(start, end - start);
        if (!ln.empty() && ln.back() == '\r') ln.remove_suffix(1);
        lines.push_back(ln);
        start = end + 1;
    }
    if (lines.empty()) throw ParseError("hypergraph: empty input");

    auto fail = [](int lineno, const std::string& what) -> void {
        throw ParseError("hypergraph: line " + std::to_string(lineno) + ": " + what);
    };
    auto split_ints = [&](std::string_view ln, int lineno) {
        std::vector<int> out;
        size_t i = 0;
        while (i < ln.size()) {
            while (i < ln.size() && ln[i] == ' ') ++i;
            size_t j = i;
            long val = 0;
            while (j < ln.size() && ln[j] != ' ') {
                if (ln[j] < '0' || ln[j] > '9') fail(lineno, "non-integer token");
                val = val * 10 + (ln[j] - '0');
                if (val > 1'000'000) fail(lineno, "value out of range");
                ++j;
            }
            if (j > i) out.push_back(int(val));
            i = j;
        }
        return out;
    };

    auto header = split_ints(lines[0], 1);
    if (header.size() != 2) fail(1, "expected 'n m'");
    int n = header[0], m = header[1];
    if (int(lines.size()) < 1 + m) fail(int(lines.size()), "fewer hyperedge lines than m");
    Hypergraph h(n);
    for (int j = 0; j < m; ++j) {
        auto vs = split_ints(lines[size_t(1 + j)], 2 + j);
        VertexSet e(n);
        for (int v : vs) {
            if (v >= n) fail(2 + j, "vertex index >= n");
            e.set(v);
        }
        h.edges.push_back(e);
    }
    for (size_t k = size_t(1 + m); k < lines.size(); ++k)
        if (!lines[k].empty()) fail(int(k) + 1, "trailing content after m hyperedges");
    return h;
}

std::string format_hypergraph(const Hypergraph& h) {
    std::string out = std::to_string(h.n) + " " + std::to_string(h.edges.size()) + "\n";
    for (const auto& e : h.edges) {
        bool sep = false;
        e.for_each([&](int v) {
            if (sep) out += " ";
            out += std::to_string(v);
            sep = true;
        });
        out += "\n";
    }
    return out;
}

}  // namespace domcx
