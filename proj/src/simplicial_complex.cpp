#include "domcx/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace domcx {

// --- SimplicialComplex ------------------------------------------------------

SimplicialComplex SimplicialComplex::void_complex(int n) {
    SimplicialComplex k;
    k.n_ = n;
    return k;
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
    SimplicialComplex k;
    k.n_ = n;
    k.facets_.push_back(VertexSet(n));
    return k;
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    SimplicialComplex k;
    k.n_ = n;
    k.facets_.push_back(VertexSet::full(n));
    k.min_nonfaces_ = std::vector<VertexSet>{};
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> facets) {
    SimplicialComplex k;
    k.n_ = n;
    for (size_t i = 0; i < facets.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < facets.size() && maximal; ++j) {
            if (i == j) continue;
            if (facets[i].subset_of(facets[j]) && (facets[i] != facets[j] || j < i))
                maximal = false;
        }
        if (maximal) k.facets_.push_back(facets[i]);
    }
    std::sort(k.facets_.begin(), k.facets_.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
    return k;
}

void SimplicialComplex::remember_minimal_nonfaces(std::vector<VertexSet> mnf) {
    std::sort(mnf.begin(), mnf.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.lex_less(b);
    });
    min_nonfaces_ = std::move(mnf);
}

int SimplicialComplex::dim() const {
    if (is_void()) return -2;
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.count() - 1);
    return d;
}

bool SimplicialComplex::has_face(const VertexSet& sigma) const {
    for (const auto& f : facets_)
        if (sigma.subset_of(f)) return true;
    return false;
}

namespace {

void combinations(const std::vector<int>& verts, int take, size_t from, VertexSet& cur,
                  std::unordered_set<VertexSet, VertexSetHash>& out) {
    if (take == 0) {
        out.insert(cur);
        return;
    }
    for (size_t i = from; i + size_t(take) <= verts.size(); ++i) {
        cur.set(verts[i]);
        combinations(verts, take - 1, i + 1, cur, out);
        cur.reset(verts[i]);
    }
}

std::vector<VertexSet> sorted_lex(std::unordered_set<VertexSet, VertexSetHash>&& faces) {
    std::vector<VertexSet> out(faces.begin(), faces.end());
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
    return out;
}

}  // namespace

std::vector<VertexSet> SimplicialComplex::faces_of_dim(int d) const {
    if (is_void()) return {};
    if (d == -1) return {VertexSet(n_)};
    if (d < -1 || d > dim()) return {};
    std::unordered_set<VertexSet, VertexSetHash> faces;
    for (const auto& f : facets_) {
        if (f.count() < d + 1) continue;
        auto verts = f.to_vector();
        VertexSet cur(n_);
        combinations(verts, d + 1, 0, cur, faces);
    }
    return sorted_lex(std::move(faces));
}

// --- independence complexes ---------------------------------------------------

namespace {

// Bron–Kerbosch with pivoting over the non-adjacency relation: maximal
// cliques of the complement are the maximal independent sets.
struct MaximalIndependentSets {
    const std::vector<VertexSet>& nonadj;
    std::vector<VertexSet> out;

    void expand(const VertexSet& r, VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        auto consider = [&](int u) {
            int c = (p & nonadj[size_t(u)]).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        };
        p.for_each(consider);
        x.for_each(consider);
        VertexSet ext = p.minus(nonadj[size_t(pivot)]);
        ext.for_each([&](int v) {
            VertexSet r2 = r;
            r2.set(v);
            expand(r2, p & nonadj[size_t(v)], x & nonadj[size_t(v)]);
            p.reset(v);
            x.set(v);
        });
    }
};

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> nonadj(size_t(n), VertexSet{});
    for (int v = 0; v < n; ++v) {
        VertexSet s = g.neighbors(v).complement();
        s.reset(v);
        nonadj[size_t(v)] = s;
    }
    MaximalIndependentSets mis{nonadj, {}};
    mis.expand(VertexSet(n), VertexSet::full(n), VertexSet(n));
    auto k = SimplicialComplex::from_facets(n, std::move(mis.out));
    std::vector<VertexSet> mnf;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) mnf.push_back(VertexSet::of(n, {u, v}));
    k.remember_minimal_nonfaces(std::move(mnf));
    return k;
}

namespace {

// Enumerates the minimal transversals of an antichain of nonempty edges by
// branching on the first uncovered edge; vertices already tried at a branch
// point are forbidden below it, so leaves are pairwise distinct.
struct MinimalTransversals {
    const std::vector<VertexSet>& edges;
    std::vector<VertexSet> out;

    bool is_minimal(const VertexSet& t) const {
        bool ok = true;
        t.for_each([&](int v) {
            if (!ok) return;
            bool has_private_edge = false;
            for (const auto& e : edges) {
                VertexSet hit = e & t;
                if (hit.count() == 1 && hit.test(v)) {
                    has_private_edge = true;
                    break;
                }
            }
            if (!has_private_edge) ok = false;
        });
        return ok;
    }

    void expand(const VertexSet& t, const VertexSet& forbidden) {
        const VertexSet* uncovered = nullptr;
        for (const auto& e : edges) {
            if (!e.intersects(t)) {
                uncovered = &e;
                break;
            }
        }
        if (!uncovered) {
            if (is_minimal(t)) out.push_back(t);
            return;
        }
        VertexSet avail = uncovered->minus(forbidden);
        VertexSet forbid = forbidden;
        avail.for_each([&](int v) {
            VertexSet t2 = t;
            t2.set(v);
            expand(t2, forbid);
            forbid.set(v);
        });
    }
};

}  // namespace

SimplicialComplex independence_complex(const Hypergraph& h) {
    Hypergraph mins = minimal_edges(h);
    for (const auto& e : mins.edges)
        if (e.empty()) return SimplicialComplex::void_complex(h.n);
    if (mins.edges.empty()) return SimplicialComplex::full_simplex(h.n);

    MinimalTransversals mt{mins.edges, {}};
    mt.expand(VertexSet(h.n), VertexSet(h.n));
    std::vector<VertexSet> facets;
    facets.reserve(mt.out.size());
    for (const auto& t : mt.out) facets.push_back(t.complement());
    auto k = SimplicialComplex::from_facets(h.n, std::move(facets));
    k.remember_minimal_nonfaces(std::move(mins.edges));
    return k;
}

SimplicialComplex dominance_complex(const Graph& g) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("dominance_complex: n >= 1 required");
    return independence_complex(dominance_hypergraph(g));
}

// --- minimal non-faces and duality ------------------------------------------

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& k) {
    if (k.is_void())
        throw std::invalid_argument("minimal_nonfaces: VOID complex (minimal non-face is the empty set)");
    if (k.known_minimal_nonfaces()) return *k.known_minimal_nonfaces();

    int n = k.ground_size();
    if (n > 24)
        throw std::invalid_argument("minimal_nonfaces: lattice scan capped at 24 ground vertices");

    std::vector<VertexSet> result;
    // level-by-level: a size-s candidate is viable only if all its
    // (s-1)-subsets were faces at the previous level
    std::vector<VertexSet> prev_faces = {VertexSet(n)};
    std::unordered_set<VertexSet, VertexSetHash> prev_lookup(prev_faces.begin(), prev_faces.end());
    for (int level = 1; level <= n && !prev_faces.empty(); ++level) {
        std::vector<VertexSet> next_faces;
        for (const auto& p : prev_faces) {
            for (int v = p.last() + 1; v < n; ++v) {
                VertexSet cand = p;
                cand.set(v);
                bool viable = true;
                if (level >= 2) {
                    cand.for_each([&](int u) {
                        if (!viable) return;
                        VertexSet sub = cand;
                        sub.reset(u);
                        if (!prev_lookup.count(sub)) viable = false;
                    });
                }
                if (!viable) continue;
                if (k.has_face(cand))
                    next_faces.push_back(cand);
                else
                    result.push_back(cand);
            }
        }
        prev_faces = std::move(next_faces);
        prev_lookup.clear();
        prev_lookup.insert(prev_faces.begin(), prev_faces.end());
    }
    std::sort(result.begin(), result.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.lex_less(b);
    });
    return result;
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
    int n = k.ground_size();
    if (k.is_void()) return SimplicialComplex::full_simplex(n);

    auto mnf = minimal_nonfaces(k);
    std::vector<VertexSet> dual_facets;
    dual_facets.reserve(mnf.size());
    for (const auto& s : mnf) dual_facets.push_back(s.complement());
    auto dual = SimplicialComplex::from_facets(n, std::move(dual_facets));
    if (!dual.is_void()) {
        // the minimal non-faces of the dual are the facet complements
        std::vector<VertexSet> dual_mnf;
        dual_mnf.reserve(k.facets().size());
        for (const auto& f : k.facets()) dual_mnf.push_back(f.complement());
        dual.remember_minimal_nonfaces(std::move(dual_mnf));
    }
    return dual;
}

SimplicialComplex suspension(const SimplicialComplex& k) {
    if (k.is_void()) throw std::invalid_argument("suspension: VOID complex");
    int n = k.ground_size();
    std::vector<VertexSet> facets;
    facets.reserve(2 * k.facets().size());
    for (int apex : {n, n + 1}) {
        for (const auto& f : k.facets()) {
            VertexSet s = f.widened(n + 2);
            s.set(apex);
            facets.push_back(s);
        }
    }
    auto s = SimplicialComplex::from_facets(n + 2, std::move(facets));
    if (k.known_minimal_nonfaces()) {
        std::vector<VertexSet> mnf;
        for (const auto& m : *k.known_minimal_nonfaces()) mnf.push_back(m.widened(n + 2));
        mnf.push_back(VertexSet::of(n + 2, {n, n + 1}));
        s.remember_minimal_nonfaces(std::move(mnf));
    }
    return s;
}

SimplicialComplex cross_polytope_boundary(int m) {
    if (m < 0) throw std::invalid_argument("cross_polytope_boundary: m >= 0 required");
    int n = 2 * (m + 1);
    std::vector<VertexSet> facets;
    facets.reserve(size_t(1) << (m + 1));
    for (uint64_t signs = 0; signs < (uint64_t(1) << (m + 1)); ++signs) {
        VertexSet f(n);
        for (int i = 0; i <= m; ++i) f.set(2 * i + int(signs >> i & 1));
        facets.push_back(f);
    }
    auto k = SimplicialComplex::from_facets(n, std::move(facets));
    std::vector<VertexSet> mnf;
    for (int i = 0; i <= m; ++i) mnf.push_back(VertexSet::of(n, {2 * i, 2 * i + 1}));
    k.remember_minimal_nonfaces(std::move(mnf));
    return k;
}

std::vector<int> cross_polytope_involution(int m) {
    std::vector<int> perm(size_t(2 * (m + 1)));
    for (int i = 0; i <= m; ++i) {
        perm[size_t(2 * i)] = 2 * i + 1;
        perm[size_t(2 * i + 1)] = 2 * i;
    }
    return perm;
}

std::vector<long> f_vector(const SimplicialComplex& k) {
    if (k.is_void()) throw std::invalid_argument("f_vector: VOID complex");
    std::vector<long> f;
    for (int d = 0; d <= k.dim(); ++d) f.push_back(long(k.faces_of_dim(d).size()));
    return f;
}

// --- involutions and maps -----------------------------------------------------

VertexSet map_vertices(const VertexSet& s, const std::vector<int>& vertex_map,
                       int codomain_universe) {
    VertexSet out(codomain_universe);
    s.for_each([&](int v) { out.set(vertex_map[size_t(v)]); });
    return out;
}

namespace {

void require_involution(const std::vector<int>& gamma, int n) {
    if (int(gamma.size()) != n)
        throw std::invalid_argument("involution: permutation size mismatch");
    for (int v = 0; v < n; ++v) {
        int w = gamma[size_t(v)];
        if (w < 0 || w >= n || gamma[size_t(w)] != v)
            throw std::invalid_argument("involution: not an involution of the ground set");
    }
}

}  // namespace

bool is_free_involution(const SimplicialComplex& k, const std::vector<int>& gamma) {
    require_involution(gamma, k.ground_size());
    for (const auto& f : k.facets()) {
        VertexSet img = map_vertices(f, gamma, k.ground_size());
        if (!k.has_face(img)) return false;
        if (f.intersects(img)) return false;
    }
    return true;
}

VertexSet SimplicialVertexMap::image(const VertexSet& face) const {
    return map_vertices(face, vertex_map, codomain.ground_size());
}

MapCheck validate_simplicial(const SimplicialVertexMap& f) {
    MapCheck check;
    std::vector<char> hit(size_t(f.codomain.ground_size()), 0);
    for (int v = 0; v < f.domain.ground_size(); ++v) {
        int w = f.vertex_map[size_t(v)];
        if (w < 0 || w >= f.codomain.ground_size() || hit[size_t(w)]) {
            check.ok = false;
            check.problem = "not injective on vertices";
            check.witness = VertexSet::of(f.domain.ground_size(), {v});
            return check;
        }
        hit[size_t(w)] = 1;
    }
    for (const auto& facet : f.domain.facets()) {
        if (!f.codomain.has_face(f.image(facet))) {
            check.ok = false;
            check.problem = "facet image is not a face of the codomain";
            check.witness = facet;
            return check;
        }
    }
    return check;
}

bool is_equivariant(const SimplicialVertexMap& f, const std::vector<int>& domain_inv,
                    const std::vector<int>& codomain_inv) {
    require_involution(domain_inv, f.domain.ground_size());
    require_involution(codomain_inv, f.codomain.ground_size());
    for (int v = 0; v < f.domain.ground_size(); ++v)
        if (f.vertex_map[size_t(domain_inv[size_t(v)])] !=
            codomain_inv[size_t(f.vertex_map[size_t(v)])])
            return false;
    return true;
}

SimplicialVertexMap cross_polytope_embedding(const Graph& g) {
    VertexSet mis = max_independent_set(g);
    int alpha = mis.count();
    if (alpha < 1)
        throw std::invalid_argument("cross_polytope_embedding: alpha >= 1 required");
    int n = g.vertex_count();

    SimplicialVertexMap f;
    f.domain = cross_polytope_boundary(alpha - 1);
    f.codomain = independence_complex(bowtie(g));
    f.vertex_map.resize(size_t(2 * alpha));
    int i = 0;
    mis.for_each([&](int v) {
        f.vertex_map[size_t(2 * i)] = v;
        f.vertex_map[size_t(2 * i + 1)] = n + v;
        ++i;
    });
    return f;
}

// --- facet text format --------------------------------------------------------

std::string format_facets(const SimplicialComplex& k) {
    std::string out =
        std::to_string(k.ground_size()) + " " + std::to_string(k.facets().size()) + "\n";
    for (const auto& f : k.facets()) {
        bool sep = false;
        f.for_each([&](int v) {
            if (sep) out += " ";
            out += std::to_string(v);
            sep = true;
        });
        out += "\n";
    }
    return out;
}

SimplicialComplex parse_facets(std::string_view text) {
    std::vector<std::string_view> lines;
    for (size_t start = 0; start < text.size();) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view ln = text.substr(start, end - start);
        if (!ln.empty() && ln.back() == '\r') ln.remove_suffix(1);
        lines.push_back(ln);
        start = end + 1;
    }
    auto fail = [](int lineno, const std::string& what) -> void {
        throw ParseError("facets: line " + std::to_string(lineno) + ": " + what);
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
    if (lines.empty()) throw ParseError("facets: empty input");
    auto header = split_ints(lines[0], 1);
    if (header.size() != 2) fail(1, "expected 'n k'");
    int n = header[0], kcount = header[1];
    if (int(lines.size()) < 1 + kcount) fail(int(lines.size()), "fewer facet lines than k");
    std::vector<VertexSet> facets;
    for (int j = 0; j < kcount; ++j) {
        auto vs = split_ints(lines[size_t(1 + j)], 2 + j);
        VertexSet f(n);
        for (int v : vs) {
            if (v >= n) fail(2 + j, "vertex index >= n");
            f.set(v);
        }
        facets.push_back(f);
    }
    for (size_t j = size_t(1 + kcount); j < lines.size(); ++j)
        if (!lines[j].empty()) fail(int(j) + 1, "trailing content after k facets");
    return SimplicialComplex::from_facets(n, std::move(facets));
}

}  // namespace domcx
