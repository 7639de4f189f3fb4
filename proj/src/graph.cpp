#include "domcx/graph.hpp"

#include <algorithm>
#include <random>

namespace domcx {

// --- graph6 -----------------------------------------------------------------
//
// Short form: byte 0 is n+63; the upper triangle x(0,1), x(0,2), x(1,2),
// x(0,3), ... (column-major) is packed into 6-bit groups, high bit first,
// zero-padded, each group stored as value+63.

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

[[noreturn]] void g6_fail(size_t offset, const std::string& what) {
    throw ParseError("graph6: byte " + std::to_string(offset) + ": " + what);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    size_t base = 0;
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header) {
        line.remove_prefix(kGraph6Header.size());
        base = kGraph6Header.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) g6_fail(base, "empty string");

    unsigned char c0 = (unsigned char)line[0];
    if (c0 == 126) g6_fail(base, "long form (n > 62) not supported");
    if (c0 < 63 || c0 > 125) g6_fail(base, "invalid order character");
    int n = c0 - 63;

    int nbits = n * (n - 1) / 2;
    size_t expect = 1 + size_t(nbits + 5) / 6;
    if (line.size() < expect)
        g6_fail(base + line.size(), "truncated (need " + std::to_string(expect) + " bytes)");
    if (line.size() > expect)
        g6_fail(base + expect, "trailing garbage");

    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char c = (unsigned char)line[1 + size_t(bit / 6)];
            if (c < 63 || c > 126) g6_fail(base + 1 + size_t(bit / 6), "out-of-range character");
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    }
    // padding bits of the final group must be zero
    for (int b = nbits; b < int(expect - 1) * 6; ++b) {
        unsigned char c = (unsigned char)line[1 + size_t(b / 6)];
        if (c < 63 || c > 126) g6_fail(base + 1 + size_t(b / 6), "out-of-range character");
        if ((c - 63) >> (5 - b % 6) & 1) g6_fail(base + 1 + size_t(b / 6), "nonzero padding bit");
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6 short form requires n <= 62");
    std::string out;
    out.push_back(char(n + 63));
    int acc = 0, nacc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nacc == 6) {
                out.push_back(char(acc + 63));
                acc = nacc = 0;
            }
        }
    }
    if (nacc) out.push_back(char((acc << (6 - nacc)) + 63));
    return out;
}

// --- edge list ----------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string_view> lines;
    for (size_t start = 0; start < text.size();) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view ln = text.substr(start, end - start);
        if (!ln.empty() && ln.back() == '\r') ln.remove_suffix(1);
        lines.push_back(ln);
        start = end + 1;
    }
    int lineno = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError("edge list: line " + std::to_string(lineno) + ": " + what);
    };
    auto parse_int = [&](std::string_view tok) -> long {
        if (tok.empty()) fail("empty token");
        long val = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') fail("non-integer token '" + std::string(tok) + "'");
            val = val * 10 + (ch - '0');
            if (val > 1'000'000) fail("vertex index out of range");
        }
        return val;
    };

    if (lines.empty()) throw ParseError("edge list: empty input");
    lineno = 1;
    long n = parse_int(lines[0]);
    Graph g{int(n)};

    for (size_t k = 1; k < lines.size(); ++k) {
        lineno = int(k) + 1;
        std::string_view ln = lines[k];
        if (ln.empty()) continue;
        size_t sp = ln.find(' ');
        if (sp == std::string_view::npos) fail("expected 'u v'");
        long u = parse_int(ln.substr(0, sp));
        size_t vstart = ln.find_first_not_of(' ', sp);
        if (vstart == std::string_view::npos) fail("expected 'u v'");
        long v = parse_int(ln.substr(vstart));
        if (u >= n || v >= n) fail("vertex index >= n");
        if (u == v) fail("self-loop");
        g.add_edge(int(u), int(v));
    }
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// --- generators -----------------------------------------------------------

namespace {

// modulo draw: reproducible across platforms, bias immaterial at these sizes
int uniform_below(std::mt19937_64& rng, int k) { return int(rng() % uint64_t(k)); }

double uniform_unit(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

Graph prufer_tree(int n, std::mt19937_64& rng) {
    Graph g(n);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> seq(size_t(n - 2));
    for (auto& s : seq) s = uniform_below(rng, n);
    std::vector<int> deg(size_t(n), 1);
    for (int s : seq) ++deg[size_t(s)];
    // standard decode: attach the smallest current leaf to each sequence element
    int ptr = 0;
    while (deg[size_t(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        g.add_edge(leaf, s);
        deg[size_t(leaf)] = 0;
        if (--deg[size_t(s)] == 1 && s < ptr) {
            leaf = s;
        } else {
            while (deg[size_t(++ptr)] != 1) {}
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);
    return g;
}

// Each new vertex is attached to a clique among the existing vertices,
// so it is simplicial at insertion time and the result is chordal.
Graph accreted_chordal(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int i = 1; i < n; ++i) {
        int want = 1 + uniform_below(rng, i);
        VertexSet clique(n);
        VertexSet cand = VertexSet::full(n);
        for (int j = i; j < n; ++j) cand.reset(j);
        while (clique.count() < want && !cand.empty()) {
            auto opts = cand.to_vector();
            int u = opts[size_t(uniform_below(rng, int(opts.size())))];
            clique.set(u);
            cand &= g.neighbors(u);
        }
        clique.for_each([&](int u) { g.add_edge(i, u); });
    }
    return g;
}

Graph gnp_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform_unit(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace

Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_star(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph generate(GraphFamily family, const GenParams& params) {
    int n = params.n;
    if (n < 1) throw std::invalid_argument("generate: n >= 1 required");
    std::mt19937_64 rng(params.seed);
    switch (family) {
        case GraphFamily::path: return make_path(n);
        case GraphFamily::cycle: return make_cycle(n);
        case GraphFamily::complete: return make_complete(n);
        case GraphFamily::star: return make_star(n);
        case GraphFamily::random_tree: return prufer_tree(n, rng);
        case GraphFamily::random_chordal: return accreted_chordal(n, rng);
        case GraphFamily::gnp:
            if (params.p < 0.0 || params.p > 1.0)
                throw std::invalid_argument("generate: gnp requires p in [0,1]");
            return gnp_graph(n, params.p, rng);
    }
    throw std::invalid_argument("generate: unknown family");
}

// --- independence number ------------------------------------------------------

namespace {

struct MisSearch {
    const Graph& g;
    VertexSet best;

    void run(const VertexSet& current, const VertexSet& candidates) {
        if (current.count() + candidates.count() <= best.count()) return;
        if (candidates.empty()) {
            if (current.count() > best.count()) best = current;
            return;
        }
        // branch vertex: max degree within the candidate set, lowest index wins ties
        int pick = -1, pick_deg = -1;
        candidates.for_each([&](int v) {
            int d = (g.neighbors(v) & candidates).count();
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        });
        VertexSet with = current;
        with.set(pick);
        VertexSet closed = g.neighbors(pick);
        closed.set(pick);
        run(with, candidates.minus(closed));
        VertexSet without = candidates;
        without.reset(pick);
        run(current, without);
    }
};

}  // namespace

VertexSet max_independent_set(const Graph& g) {
    MisSearch search{g, VertexSet(g.vertex_count())};
    search.run(VertexSet(g.vertex_count()), VertexSet::full(g.vertex_count()));
    return search.best;
}

int vertex_cover_number(const Graph& g) {
    return g.vertex_count() - max_independent_set(g).count();
}

int min_dominating_set_size(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (n > 30) throw std::invalid_argument("min_dominating_set_size: n too large for subset scan");
    std::vector<uint64_t> closed(size_t(n), 0);
    for (int v = 0; v < n; ++v) {
        uint64_t m = 0;
        g.closed_neighborhood(v).for_each([&](int u) { m |= 1ULL << u; });
        closed[size_t(v)] = m;
    }
    int best = n;
    for (uint64_t s = 1; s < (1ULL << n); ++s) {
        int c = std::popcount(s);
        if (c >= best) continue;
        bool dom = true;
        for (int v = 0; v < n && dom; ++v) dom = (closed[size_t(v)] & s) != 0;
        if (dom) best = c;
    }
    return best;
}

}  // namespace domcx
