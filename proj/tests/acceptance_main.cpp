// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Expected values are exact; tolerances are zero throughout.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "domcx/graph.hpp"
#include "domcx/homology.hpp"
#include "domcx/hypergraph.hpp"
#include "domcx/simplicial_complex.hpp"
#include "domcx/verify.hpp"
#include "oracles.hpp"

using namespace domcx;

namespace {

struct Tally {
    long euler_checked = 0;
    long euler_failed = 0;
    long noncontractible_checked = 0;
    long noncontractible_failed = 0;
};

Tally tally;

// Profile with the Euler identity audited on the side (criterion 10 rides
// along on every profile the suite computes).
BettiProfile profile_of(const SimplicialComplex& k) {
    BettiProfile p = reduced_betti(k);
    ++tally.euler_checked;
    if (!euler_identity_holds(p)) ++tally.euler_failed;
    return p;
}

void audit_noncontractible(const BettiProfile& dominance_profile) {
    ++tally.noncontractible_checked;
    if (dominance_profile.all_zero()) ++tally.noncontractible_failed;
}

bool single_class(const BettiProfile& p, int dim, long count) {
    for (int d = -1; d <= std::max(p.dim, dim); ++d)
        if (p.at(d) != (d == dim ? count : 0)) return false;
    return true;
}

Graph labeled_graph(int n, uint64_t mask) {
    Graph g(n);
    int b = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++b)
            if (mask >> b & 1) g.add_edge(u, v);
    return g;
}

int sized(uint64_t seed, int max_n) {
    std::mt19937_64 rng(seed);
    return 1 + int(rng() % uint64_t(max_n));
}

struct Criterion {
    const char* name;
    bool (*run)(std::string& detail);
};

// 1. D(C_n) Betti profiles for n = 3..12 match the cycle formulas exactly.
bool cycles_regression(std::string& detail) {
    const struct { int n, dim; long count; } expect[] = {
        {3, 1, 1}, {4, 1, 3}, {5, 1, 1},  {6, 2, 1},  {7, 3, 1},
        {8, 3, 3}, {9, 3, 1}, {10, 4, 1}, {11, 5, 1}, {12, 5, 3},
    };
    for (const auto& e : expect) {
        BettiProfile p = profile_of(dominance_complex(make_cycle(e.n)));
        audit_noncontractible(p);
        if (!single_class(p, e.dim, e.count)) {
            detail = "C" + std::to_string(e.n) + " profile mismatch";
            return false;
        }
    }
    detail = "C3..C12 exact";
    return true;
}

// 2. 100 seeded random trees, n <= 12: one sphere class in dimension tau-1.
bool forest_spheres(std::string& detail) {
    for (int i = 0; i < 100; ++i) {
        int n = sized(5000 + uint64_t(i), 12);
        Graph t = generate(GraphFamily::random_tree, {n, 0, 1000 + uint64_t(i)});
        int tau = vertex_cover_number(t);
        BettiProfile p = profile_of(dominance_complex(t));
        audit_noncontractible(p);
        if (!single_class(p, tau - 1, 1)) {
            detail = "tree seed " + std::to_string(1000 + i) + " (n=" + std::to_string(n) + ")";
            return false;
        }
    }
    detail = "100 trees, sphere at tau-1";
    return true;
}

// 3. 50 seeded random chordal graphs, n <= 10: same sphere profile.
bool chordal_spheres(std::string& detail) {
    for (int i = 0; i < 50; ++i) {
        int n = sized(5500 + uint64_t(i), 10);
        Graph g = generate(GraphFamily::random_chordal, {n, 0, 2000 + uint64_t(i)});
        int tau = vertex_cover_number(g);
        BettiProfile p = profile_of(dominance_complex(g));
        audit_noncontractible(p);
        if (!single_class(p, tau - 1, 1)) {
            detail = "chordal seed " + std::to_string(2000 + i) + " (n=" + std::to_string(n) + ")";
            return false;
        }
    }
    detail = "50 chordal graphs, sphere at tau-1";
    return true;
}

// 4. conn_Z2(D(G)) + 2 <= tau(G): exhaustive n = 5 and n = 6, plus 200
//    random graphs n <= 9; gap = 1 for C5 and C9.
bool main_bound(std::string& detail) {
    long checked = 0;
    auto violated = [&](const Graph& g) {
        BettiProfile p = profile_of(dominance_complex(g));
        audit_noncontractible(p);
        auto k = conn_z2(p);
        ++checked;
        return !k || *k + 2 > vertex_cover_number(g);
    };
    for (int n : {5, 6}) {
        uint64_t top = uint64_t(1) << (n * (n - 1) / 2);
        for (uint64_t mask = 0; mask < top; ++mask) {
            if (violated(labeled_graph(n, mask))) {
                detail = "labeled n=" + std::to_string(n) + " mask=" + std::to_string(mask);
                return false;
            }
        }
    }
    const double ps[] = {0.2, 0.4, 0.6, 0.8};
    for (int i = 0; i < 200; ++i) {
        int n = sized(6500 + uint64_t(i), 9);
        Graph g = generate(GraphFamily::gnp, {n, ps[i % 4], 3000 + uint64_t(i)});
        if (violated(g)) {
            detail = "gnp seed " + std::to_string(3000 + i);
            return false;
        }
    }
    for (int n : {5, 9}) {
        CheckResult r = check_cover_bound(make_cycle(n));
        if (r.verdict != Verdict::pass || r.data["gap"] != 1) {
            detail = "C" + std::to_string(n) + " gap != 1";
            return false;
        }
    }
    detail = std::to_string(checked) + " graphs, zero violations; gap=1 for C5, C9";
    return true;
}

// 5. Every dominance complex above had a nonzero reduced Betti number.
bool noncontractibility(std::string& detail) {
    detail = std::to_string(tally.noncontractible_checked) + " dominance complexes audited";
    return tally.noncontractible_checked > 34000 && tally.noncontractible_failed == 0;
}

// 6. Suspension of the dual of I(H) matches I(B_H) in every dimension for
//    200 random hypergraphs (n <= 6, <= 6 edges, duplicates allowed).
bool bipartite_suspension_equivalence(std::string& detail) {
    std::mt19937_64 rng(4000);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + int(rng() % 6);
        Hypergraph h = oracles::random_hypergraph(n, 6, rng);
        CheckResult r = check_bipartite_suspension(h);
        if (r.verdict != Verdict::pass) {
            detail = "hypergraph " + std::to_string(i) + ": " + verdict_name(r.verdict);
            return false;
        }
    }
    detail = "200 hypergraphs, profiles equal in every dimension";
    return true;
}

// 7. betti_i(K^v) = betti_{n-i-3}(K): exhaustive over all complexes on
//    ground sets n <= 5, plus D(G) for random graphs.
bool duality_suite(std::string& detail) {
    long checked = 0;
    for (int n = 1; n <= 5; ++n) {
        bool bad = false;
        oracles::enumerate_complexes(n, [&](const std::vector<uint64_t>& faces) {
            if (bad) return;
            auto k = oracles::complex_from_faces(n, faces);
            BettiProfile pk = profile_of(k);
            BettiProfile pd = profile_of(alexander_dual(k));
            ++checked;
            for (int i = -1; i <= n; ++i)
                if (pd.at(i) != pk.at(n - i - 3)) bad = true;
        });
        if (bad) {
            detail = "violation among complexes on n=" + std::to_string(n);
            return false;
        }
    }
    std::mt19937_64 rng(6000);
    for (int i = 0; i < 30; ++i) {
        int n = 1 + int(rng() % 8);
        auto k = dominance_complex(oracles::random_graph(n, 0.45, rng));
        BettiProfile pk = profile_of(k);
        BettiProfile pd = profile_of(alexander_dual(k));
        ++checked;
        for (int i2 = -1; i2 <= n; ++i2)
            if (pd.at(i2) != pk.at(n - i2 - 3)) {
                detail = "D(G) dual mismatch, graph " + std::to_string(i);
                return false;
            }
    }
    detail = std::to_string(checked) + " complexes (all on n<=5, plus dominance complexes)";
    return true;
}

// 8. Free involution and equivariant sphere embedding: exhaustive n <= 6
//    plus 100 random graphs n <= 8.
bool action_and_embedding(std::string& detail) {
    long checked = 0;
    auto good = [&](const Graph& g) {
        ++checked;
        return check_free_action(g).verdict == Verdict::pass &&
               check_sphere_embedding(g).verdict == Verdict::pass;
    };
    for (int n = 1; n <= 6; ++n) {
        uint64_t top = uint64_t(1) << (n * (n - 1) / 2);
        for (uint64_t mask = 0; mask < top; ++mask) {
            if (!good(labeled_graph(n, mask))) {
                detail = "labeled n=" + std::to_string(n) + " mask=" + std::to_string(mask);
                return false;
            }
        }
    }
    std::mt19937_64 rng(7000);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + int(rng() % 8);
        if (!good(oracles::random_graph(n, 0.4, rng))) {
            detail = "random graph " + std::to_string(i);
            return false;
        }
    }
    detail = std::to_string(checked) + " graphs, free action + embedding hold";
    return true;
}

// 9. Oracle equivalences: tau vs subset scan, dominance membership vs
//    dominating complement, bitset rank vs naive elimination.
bool oracle_equivalences(std::string& detail) {
    for (uint64_t mask = 0; mask < 64; ++mask) {
        Graph g = labeled_graph(4, mask);
        if (vertex_cover_number(g) != oracles::brute_force_tau(g)) {
            detail = "tau mismatch on labeled n=4";
            return false;
        }
    }
    std::mt19937_64 rng(8000);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + int(rng() % 10);
        Graph g = oracles::random_graph(n, 0.15 + 0.2 * double(i % 4), rng);
        if (vertex_cover_number(g) != oracles::brute_force_tau(g)) {
            detail = "tau mismatch, trial " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 100; ++i) {
        int n = 1 + int(rng() % 8);
        Graph g = oracles::random_graph(n, 0.45, rng);
        auto faces = oracles::face_masks(dominance_complex(g));
        uint64_t all = (uint64_t(1) << n) - 1;
        for (uint64_t mask = 0; mask <= all; ++mask)
            if (faces.count(mask) != (oracles::dominates(g, all & ~mask) ? 1u : 0u)) {
                detail = "membership mismatch, trial " + std::to_string(i);
                return false;
            }
    }
    for (int i = 0; i < 300; ++i) {
        int rows = 1 + int(rng() % 12), cols = 1 + int(rng() % 12);
        GF2Matrix m(rows, cols);
        std::vector<std::vector<int>> naive(size_t(rows), std::vector<int>(size_t(cols), 0));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng() & 1) {
                    m.set(r, c);
                    naive[size_t(r)][size_t(c)] = 1;
                }
        if (rank_gf2(m) != oracles::naive_gf2_rank(naive)) {
            detail = "rank mismatch, trial " + std::to_string(i);
            return false;
        }
    }
    detail = "tau scan, membership predicate, naive rank all agree";
    return true;
}

// 10. Engine sanity: boundary-of-boundary, Euler identity, suspension shift.
bool engine_sanity(std::string& detail) {
    std::vector<SimplicialComplex> sweep;
    for (int n = 3; n <= 10; ++n) sweep.push_back(dominance_complex(make_cycle(n)));
    for (int m = 0; m <= 4; ++m) sweep.push_back(cross_polytope_boundary(m));
    for (uint64_t seed = 0; seed < 10; ++seed)
        sweep.push_back(dominance_complex(generate(GraphFamily::random_tree, {8, 0, seed})));
    std::mt19937_64 rng(9000);
    for (int i = 0; i < 40; ++i) sweep.push_back(oracles::random_complex(1 + int(rng() % 7), rng));
    for (int i = 0; i < 10; ++i) {
        auto k = oracles::random_complex(1 + int(rng() % 6), rng);
        sweep.push_back(alexander_dual(k));
        if (!k.is_void()) sweep.push_back(suspension(k));
    }

    long complexes = 0;
    for (const auto& k : sweep) {
        ++complexes;
        BettiProfile p = profile_of(k);
        if (!euler_identity_holds(p)) {
            detail = "euler identity failed";
            return false;
        }
        for (int d = 1; d <= k.dim(); ++d) {
            GF2Matrix prod = gf2_multiply(boundary_matrix(k, d - 1), boundary_matrix(k, d));
            for (int r = 0; r < prod.rows(); ++r)
                for (int c = 0; c < prod.cols(); ++c)
                    if (prod.test(r, c)) {
                        detail = "dd != 0 at dimension " + std::to_string(d);
                        return false;
                    }
        }
        if (!k.is_void()) {
            BettiProfile s = profile_of(suspension(k));
            for (int d = -1; d <= p.dim + 1; ++d)
                if (s.at(d + 1) != p.at(d)) {
                    detail = "suspension shift failed at dimension " + std::to_string(d);
                    return false;
                }
        }
    }
    if (tally.euler_failed != 0) {
        detail = "euler identity failed somewhere in the suite";
        return false;
    }
    detail = std::to_string(complexes) + " complexes swept; " +
             std::to_string(tally.euler_checked) + " euler audits across the suite";
    return true;
}

const Criterion criteria[] = {
    {"cycle regressions D(C3..C12)", cycles_regression},
    {"forest spheres", forest_spheres},
    {"chordal spheres", chordal_spheres},
    {"cover-number bound (exhaustive n=5,6 + random)", main_bound},
    {"non-contractibility of every D(G)", noncontractibility},
    {"bipartite suspension equivalence", bipartite_suspension_equivalence},
    {"Alexander duality profile reflection", duality_suite},
    {"free action + sphere embedding", action_and_embedding},
    {"oracle equivalences", oracle_equivalences},
    {"engine sanity (dd=0, Euler, suspension shift)", engine_sanity},
};

}  // namespace

int main() {
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = c.run(detail);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %2d: %s - %s (%.1fs)\n", ok ? "PASS" : "FAIL", index, c.name,
                    detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("all %d criteria passed\n", index);
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
