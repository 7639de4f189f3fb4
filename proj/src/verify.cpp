#include "domcx/verify.hpp"

#include <atomic>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace domcx {

using nlohmann::json;

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skip: return "skip";
    }
    return "?";
}

const char* family_name(KnownFamily f) {
    switch (f) {
        case KnownFamily::forest: return "forest";
        case KnownFamily::chordal: return "chordal";
        case KnownFamily::cycle: return "cycle";
    }
    return "?";
}

json CheckResult::to_json() const {
    json j;
    j["verdict"] = verdict_name(verdict);
    j["data"] = data;
    if (!witness.is_null()) j["witness"] = witness;
    j["ms"] = ms;
    return j;
}

namespace {

json profile_json(const BettiProfile& p) {
    json arr = json::array();
    for (int d = -1; d <= p.dim; ++d) arr.push_back(p.at(d));
    return arr;  // entries for dimensions -1..dim
}

json set_json(const VertexSet& s) {
    json arr = json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

bool single_class_at(const BettiProfile& p, int dim, long count) {
    for (int d = -1; d <= p.dim; ++d)
        if (p.at(d) != (d == dim ? count : 0)) return false;
    return dim > p.dim ? count == 0 : true;
}

}  // namespace

// --- family detection ---------------------------------------------------------

namespace {

int component_count(const Graph& g) {
    int n = g.vertex_count();
    VertexSet seen(n);
    int comps = 0;
    for (int v = 0; v < n; ++v) {
        if (seen.test(v)) continue;
        ++comps;
        std::vector<int> stack = {v};
        seen.set(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.neighbors(u).for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
            });
        }
    }
    return comps;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    auto vs = s.to_vector();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

}  // namespace

bool is_forest(const Graph& g) {
    return g.edge_count() == g.vertex_count() - component_count(g);
}

bool is_chordal_graph(const Graph& g) {
    int n = g.vertex_count();
    VertexSet alive = VertexSet::full(n);
    for (int round = 0; round < n; ++round) {
        int found = -1;
        alive.for_each([&](int v) {
            if (found >= 0) return;
            if (is_clique(g, g.neighbors(v) & alive)) found = v;
        });
        if (found < 0) return false;
        alive.reset(found);
    }
    return true;
}

bool is_cycle_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return component_count(g) == 1;
}

std::optional<KnownFamily> detect_family(const Graph& g) {
    if (is_forest(g)) return KnownFamily::forest;
    if (is_chordal_graph(g)) return KnownFamily::chordal;
    if (is_cycle_graph(g)) return KnownFamily::cycle;
    return std::nullopt;
}

// --- per-graph checks -----------------------------------------------------

CheckResult check_cover_bound(const Graph& g) {
    CheckResult r{"cover_bound"};
    int tau = vertex_cover_number(g);
    BettiProfile p = reduced_betti(dominance_complex(g));
    auto k = conn_z2(p);
    r.data["tau"] = tau;
    if (!k) {
        r.verdict = Verdict::fail;
        r.data["k"] = "inf";
        r.witness = {{"reason", "dominance complex is Z2-acyclic"},
                     {"falsifies", "noncontractibility"},
                     {"betti", profile_json(p)}};
        return r;
    }
    r.data["k"] = *k;
    r.data["gap"] = tau - (*k + 2);
    if (*k + 2 <= tau) {
        r.verdict = Verdict::pass;
    } else {
        r.verdict = Verdict::fail;
        r.witness = {{"k", *k}, {"tau", tau}, {"betti", profile_json(p)}};
    }
    return r;
}

CheckResult check_noncontractible(const Graph& g) {
    CheckResult r{"noncontractible"};
    BettiProfile p = reduced_betti(dominance_complex(g));
    r.data["betti"] = profile_json(p);
    auto hd = hdim_z2(p);
    if (hd) {
        r.verdict = Verdict::pass;
        r.data["witness_dim"] = *hd;
    } else {
        r.verdict = Verdict::fail;
        r.witness = {{"reason", "all reduced Betti numbers vanish"}};
    }
    return r;
}

CheckResult check_known_type(const Graph& g, std::optional<KnownFamily> claimed) {
    CheckResult r{"known_types"};
    std::optional<KnownFamily> family = claimed ? claimed : detect_family(g);
    if (!family) {
        r.verdict = Verdict::skip;
        r.witness = {{"reason", "no known family"}};
        return r;
    }
    bool member = false;
    switch (*family) {
        case KnownFamily::forest: member = is_forest(g); break;
        case KnownFamily::chordal: member = is_chordal_graph(g); break;
        case KnownFamily::cycle: member = is_cycle_graph(g); break;
    }
    if (!member) {
        r.verdict = Verdict::skip;
        r.witness = {{"reason", "family mismatch"}, {"claimed", family_name(*family)}};
        return r;
    }
    r.data["family"] = family_name(*family);

    int expect_dim = 0;
    long expect_count = 0;
    if (*family == KnownFamily::cycle) {
        int n = g.vertex_count();
        int t = n / 4, i = n % 4;
        expect_dim = i == 0 ? 2 * t - 1 : 2 * t + i - 2;
        expect_count = i == 0 ? 3 : 1;
    } else {
        int tau = vertex_cover_number(g);
        r.data["tau"] = tau;
        expect_dim = tau - 1;  // tau = 0 gives the EMPTY complex, class in dim -1
        expect_count = 1;
    }
    r.data["expect_dim"] = expect_dim;
    r.data["expect_count"] = expect_count;

    BettiProfile p = reduced_betti(dominance_complex(g));
    r.data["betti"] = profile_json(p);
    if (single_class_at(p, expect_dim, expect_count)) {
        r.verdict = Verdict::pass;
    } else {
        r.verdict = Verdict::fail;
        r.witness = {{"expected_dim", expect_dim},
                     {"expected_count", expect_count},
                     {"betti", profile_json(p)}};
    }
    return r;
}

CheckResult check_alexander(const SimplicialComplex& k) {
    CheckResult r{"alexander_duality"};
    if (k.is_void() || k.is_full_simplex()) {
        r.verdict = Verdict::skip;
        r.witness = {{"reason", k.is_void() ? "VOID complex" : "full simplex"}};
        return r;
    }
    int n = k.ground_size();
    BettiProfile pk = reduced_betti(k);
    BettiProfile pd = reduced_betti(alexander_dual(k));
    r.data["n"] = n;
    r.data["betti"] = profile_json(pk);
    r.data["betti_dual"] = profile_json(pd);
    for (int i = -1; i <= n; ++i) {
        if (pd.at(i) != pk.at(n - i - 3)) {
            r.verdict = Verdict::fail;
            r.witness = {{"dim", i}, {"dual", pd.at(i)}, {"reflected", pk.at(n - i - 3)}};
            return r;
        }
    }
    r.verdict = Verdict::pass;
    return r;
}

CheckResult check_bipartite_suspension(const Hypergraph& h) {
    CheckResult r{"bipartite_suspension"};
    if (h.edges.empty()) {
        r.verdict = Verdict::skip;
        r.witness = {{"reason", "no hyperedges (dual side is VOID)"}};
        return r;
    }
    for (const auto& e : h.edges) {
        if (e.empty()) {
            r.verdict = Verdict::skip;
            r.witness = {{"reason", "empty hyperedge (independence complex is VOID)"}};
            return r;
        }
    }
    BettiProfile lhs = reduced_betti(suspension(alexander_dual(independence_complex(h))));
    BettiProfile rhs = reduced_betti(independence_complex(associated_bipartite(h)));
    r.data["n"] = h.n;
    r.data["m"] = h.edges.size();
    r.data["betti_suspension_dual"] = profile_json(lhs);
    r.data["betti_bipartite"] = profile_json(rhs);
    if (profiles_equal(lhs, rhs)) {
        r.verdict = Verdict::pass;
    } else {
        r.verdict = Verdict::fail;
        int bad = -1;
        for (int d = -1; d <= std::max(lhs.dim, rhs.dim); ++d)
            if (lhs.at(d) != rhs.at(d)) {
                bad = d;
                break;
            }
        r.witness = {{"dim", bad}, {"suspension_dual", lhs.at(bad)}, {"bipartite", rhs.at(bad)}};
    }
    return r;
}

CheckResult check_free_action(const Graph& g) {
    CheckResult r{"free_action"};
    int n = g.vertex_count();
    SimplicialComplex k = independence_complex(bowtie(g));
    auto gamma = bowtie_involution(n);
    r.data["facets"] = k.facets().size();
    for (const auto& f : k.facets()) {
        VertexSet img = map_vertices(f, gamma, 2 * n);
        if (!k.has_face(img)) {
            r.verdict = Verdict::fail;
            r.witness = {{"facet", set_json(f)}, {"image", set_json(img)},
                         {"reason", "image is not a face"}};
            return r;
        }
        if (f.intersects(img)) {
            r.verdict = Verdict::fail;
            r.witness = {{"facet", set_json(f)}, {"image", set_json(img)},
                         {"reason", "facet meets its image"}};
            return r;
        }
    }
    r.verdict = Verdict::pass;
    return r;
}

CheckResult check_sphere_embedding(const Graph& g) {
    CheckResult r{"sphere_embedding"};
    SimplicialVertexMap f = cross_polytope_embedding(g);
    int alpha = f.domain.ground_size() / 2;
    r.data["alpha"] = alpha;
    r.data["sphere_facets"] = f.domain.facets().size();
    MapCheck mc = validate_simplicial(f);
    if (!mc.ok) {
        r.verdict = Verdict::fail;
        r.witness = {{"reason", mc.problem}, {"face", set_json(mc.witness)},
                     {"image", set_json(f.image(mc.witness))}};
        return r;
    }
    if (!is_equivariant(f, cross_polytope_involution(alpha - 1),
                        bowtie_involution(g.vertex_count()))) {
        r.verdict = Verdict::fail;
        r.witness = {{"reason", "not equivariant"}};
        return r;
    }
    r.verdict = Verdict::pass;
    return r;
}

CheckResult check_inequality_chain(const Graph& g) {
    CheckResult r{"chain"};
    int n = g.vertex_count();
    int alpha = max_independent_set(g).count();
    SimplicialComplex dom = dominance_complex(g);
    auto k = conn_z2(reduced_betti(dom));
    r.data["n"] = n;
    r.data["alpha"] = alpha;
    if (!k) {
        r.verdict = Verdict::fail;
        r.data["k"] = "inf";
        r.witness = {{"reason", "dominance complex is Z2-acyclic"}};
        return r;
    }
    r.data["k"] = *k;
    auto hd_bowtie = hdim_z2(reduced_betti(independence_complex(bowtie(g))));
    auto hd_susp = hdim_z2(reduced_betti(suspension(alexander_dual(dom))));
    int rhs = n - *k - 3;
    r.data["hdim_bowtie"] = hd_bowtie ? json(*hd_bowtie) : json("-inf");
    r.data["hdim_suspension_dual"] = hd_susp ? json(*hd_susp) : json("-inf");
    r.data["n_minus_k_minus_3"] = rhs;

    bool lower = hd_bowtie && alpha - 1 <= *hd_bowtie;
    bool equal_sides = hd_bowtie == hd_susp;
    bool dual_value = hd_susp && *hd_susp == rhs;
    if (lower && equal_sides && dual_value) {
        r.verdict = Verdict::pass;
    } else {
        r.verdict = Verdict::fail;
        r.witness = {{"lower_bound_holds", lower},
                     {"sides_equal", equal_sides},
                     {"dual_value_holds", dual_value}};
    }
    return r;
}

// --- corpus runner ---------------------------------------------------------

const char* check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::cover_bound: return "cover_bound";
        case CheckKind::noncontractible: return "noncontractible";
        case CheckKind::known_types: return "known_types";
        case CheckKind::alexander_duality: return "alexander_duality";
        case CheckKind::bipartite_suspension: return "bipartite_suspension";
        case CheckKind::free_action: return "free_action";
        case CheckKind::sphere_embedding: return "sphere_embedding";
        case CheckKind::chain: return "chain";
    }
    return "?";
}

std::vector<CheckKind> all_check_kinds() {
    return {CheckKind::cover_bound,      CheckKind::noncontractible,
            CheckKind::known_types,      CheckKind::alexander_duality,
            CheckKind::bipartite_suspension, CheckKind::free_action,
            CheckKind::sphere_embedding, CheckKind::chain};
}

std::vector<CheckKind> parse_check_list(const std::string& spec) {
    std::vector<CheckKind> out;
    size_t start = 0;
    while (start <= spec.size()) {
        size_t end = spec.find(',', start);
        if (end == std::string::npos) end = spec.size();
        std::string tok = spec.substr(start, end - start);
        start = end + 1;
        if (tok.empty()) continue;
        if (tok == "all") return all_check_kinds();
        if (tok == "main" || tok == "cover_bound") out.push_back(CheckKind::cover_bound);
        else if (tok == "noncontr" || tok == "noncontractible") out.push_back(CheckKind::noncontractible);
        else if (tok == "known" || tok == "known_types") out.push_back(CheckKind::known_types);
        else if (tok == "alexander" || tok == "duality" || tok == "alexander_duality") out.push_back(CheckKind::alexander_duality);
        else if (tok == "suspension" || tok == "bipartite_suspension") out.push_back(CheckKind::bipartite_suspension);
        else if (tok == "free" || tok == "free_action") out.push_back(CheckKind::free_action);
        else if (tok == "embed" || tok == "sphere_embedding") out.push_back(CheckKind::sphere_embedding);
        else if (tok == "chain") out.push_back(CheckKind::chain);
        else throw std::invalid_argument("unknown check '" + tok + "'");
    }
    return out;
}

namespace {

bool needs_dominance(CheckKind k) {
    switch (k) {
        case CheckKind::cover_bound:
        case CheckKind::noncontractible:
        case CheckKind::known_types:
        case CheckKind::alexander_duality:
        case CheckKind::bipartite_suspension:
        case CheckKind::chain: return true;
        default: return false;
    }
}

bool needs_bowtie(CheckKind k) {
    switch (k) {
        case CheckKind::free_action:
        case CheckKind::sphere_embedding:
        case CheckKind::bipartite_suspension:
        case CheckKind::chain: return true;
        default: return false;
    }
}

CheckResult run_check(CheckKind kind, const CorpusItem& item, const CorpusOptions& opt) {
    int n = item.graph.vertex_count();
    CheckResult skip{check_kind_name(kind)};
    if (n < 1) {
        skip.witness = {{"reason", "graph has no vertices"}};
        return skip;
    }
    if (needs_dominance(kind) && n > opt.max_dominance_n) {
        skip.witness = {{"reason", "n exceeds --max-n"}, {"n", n}, {"cap", opt.max_dominance_n}};
        return skip;
    }
    if (needs_bowtie(kind) && n > opt.max_bowtie_n) {
        skip.witness = {{"reason", "n exceeds --max-bowtie-n"}, {"n", n}, {"cap", opt.max_bowtie_n}};
        return skip;
    }

    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    switch (kind) {
        case CheckKind::cover_bound: r = check_cover_bound(item.graph); break;
        case CheckKind::noncontractible: r = check_noncontractible(item.graph); break;
        case CheckKind::known_types: r = check_known_type(item.graph, item.family); break;
        case CheckKind::alexander_duality: r = check_alexander(dominance_complex(item.graph)); break;
        case CheckKind::bipartite_suspension:
            r = check_bipartite_suspension(dominance_hypergraph(item.graph));
            break;
        case CheckKind::free_action: r = check_free_action(item.graph); break;
        case CheckKind::sphere_embedding: r = check_sphere_embedding(item.graph); break;
        case CheckKind::chain: r = check_inequality_chain(item.graph); break;
    }
    auto t1 = std::chrono::steady_clock::now();
    r.ms = opt.timings ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
    return r;
}

}  // namespace

GraphReport evaluate_item(const CorpusItem& item, const CorpusOptions& opt) {
    GraphReport rep;
    rep.id = item.id;
    rep.n = item.graph.vertex_count();
    rep.alpha = max_independent_set(item.graph).count();
    rep.tau = rep.n - rep.alpha;
    for (CheckKind kind : opt.checks) rep.checks.push_back(run_check(kind, item, opt));
    for (const auto& c : rep.checks) {
        if (c.name == "cover_bound" && c.data.contains("k")) rep.conn_d = c.data["k"];
        if (c.name == "chain") {
            if (rep.conn_d.is_null() && c.data.contains("k")) rep.conn_d = c.data["k"];
            if (c.data.contains("hdim_bowtie")) rep.hdim_bowtie = c.data["hdim_bowtie"];
        }
    }
    return rep;
}

json GraphReport::to_json() const {
    json j;
    j["id"] = id;
    j["n"] = n;
    j["alpha"] = alpha;
    j["tau"] = tau;
    if (!conn_d.is_null()) j["conn_d"] = conn_d;
    if (!hdim_bowtie.is_null()) j["hdim_bowtie"] = hdim_bowtie;
    json checks_obj = json::object();
    for (const auto& c : checks) checks_obj[c.name] = c.to_json();
    j["checks"] = checks_obj;
    return j;
}

json CorpusSummary::to_json() const {
    json j;
    j["graphs"] = graphs;
    j["passes"] = passes;
    j["fails"] = fails;
    j["skips"] = skips;
    if (max_gap >= 0) {
        j["max_gap"] = max_gap;
        j["max_gap_id"] = max_gap_id;
    }
    j["worst_ms"] = worst_ms;
    if (!worst_id.empty()) j["worst_id"] = worst_id;
    return json{{"summary", j}};
}

CorpusSummary run_corpus(const std::vector<CorpusItem>& items, const CorpusOptions& opt,
                         std::ostream& out) {
    std::vector<GraphReport> reports(items.size());
    auto evaluate_into = [&](size_t i) {
        try {
            reports[i] = evaluate_item(items[i], opt);
        } catch (const std::exception& e) {
            // a per-graph crash must not take the run down
            GraphReport rep;
            rep.id = items[i].id;
            rep.n = items[i].graph.vertex_count();
            CheckResult r{"error"};
            r.verdict = Verdict::fail;
            r.witness = {{"reason", e.what()}};
            rep.checks.push_back(std::move(r));
            reports[i] = std::move(rep);
        }
    };
    int workers = std::max(1, std::min<int>(opt.workers, int(items.size())));
    if (workers == 1) {
        for (size_t i = 0; i < items.size(); ++i) evaluate_into(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(size_t(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= items.size()) return;
                    evaluate_into(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    CorpusSummary sum;
    sum.graphs = long(items.size());
    for (const auto& rep : reports) {
        out << rep.to_json().dump() << "\n";
        double item_ms = 0;
        for (const auto& c : rep.checks) {
            item_ms += c.ms;
            switch (c.verdict) {
                case Verdict::pass: ++sum.passes; break;
                case Verdict::fail: ++sum.fails; break;
                case Verdict::skip: ++sum.skips; break;
            }
            if (c.name == "cover_bound" && c.data.contains("gap")) {
                long gap = c.data["gap"].get<long>();
                if (gap > sum.max_gap) {
                    sum.max_gap = gap;
                    sum.max_gap_id = rep.id;
                }
            }
        }
        if (item_ms > sum.worst_ms) {
            sum.worst_ms = item_ms;
            sum.worst_id = rep.id;
        }
    }
    if (!opt.timings) {
        sum.worst_ms = 0.0;
        sum.worst_id.clear();
    }
    out << sum.to_json().dump() << "\n";
    return sum;
}

}  // namespace domcx
