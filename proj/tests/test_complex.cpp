#include <doctest.h>

#include <algorithm>
#include <random>

#include "domcx/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace domcx;

namespace {

bool facets_are_antichain(const SimplicialComplex& k) {
    const auto& fs = k.facets();
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = 0; j < fs.size(); ++j)
            if (i != j && fs[i].subset_of(fs[j])) return false;
    return true;
}

bool has_facet(const SimplicialComplex& k, std::initializer_list<int> vs) {
    VertexSet f = VertexSet::of(k.ground_size(), vs);
    return std::find(k.facets().begin(), k.facets().end(), f) != k.facets().end();
}

}  // namespace

TEST_CASE("void / empty / full distinctions") {
    auto v = SimplicialComplex::void_complex(3);
    CHECK(v.is_void());
    CHECK_FALSE(v.is_empty_complex());
    CHECK(v.dim() == -2);
    CHECK(v.facets().empty());

    auto e = SimplicialComplex::empty_complex(3);
    CHECK_FALSE(e.is_void());
    CHECK(e.is_empty_complex());
    CHECK(e.dim() == -1);
    CHECK(e.has_face(VertexSet(3)));
    CHECK_FALSE(e.has_face(VertexSet::of(3, {0})));

    auto f = SimplicialComplex::full_simplex(3);
    CHECK(f.is_full_simplex());
    CHECK(f.dim() == 2);
    CHECK(f.has_face(VertexSet::full(3)));

    // n = 0: the full simplex and the empty complex coincide
    CHECK(SimplicialComplex::full_simplex(0).is_empty_complex());
}

TEST_CASE("from_facets prunes to a sorted antichain") {
    std::vector<VertexSet> raw = {
        VertexSet::of(4, {1}),       VertexSet::of(4, {0, 1}), VertexSet::of(4, {0, 1}),
        VertexSet::of(4, {2, 3}),    VertexSet::of(4, {3}),
    };
    auto k = SimplicialComplex::from_facets(4, raw);
    REQUIRE(k.facets().size() == 2);
    CHECK(k.facets()[0] == VertexSet::of(4, {0, 1}));
    CHECK(k.facets()[1] == VertexSet::of(4, {2, 3}));

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        auto k2 = oracles::random_complex(1 + int(rng() % 8), rng);
        CHECK(facets_are_antichain(k2));
        CHECK(std::is_sorted(k2.facets().begin(), k2.facets().end(),
                             [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); }));
    }
}

TEST_CASE("faces_of_dim enumerates and sorts") {
    auto k = SimplicialComplex::from_facets(
        4, {VertexSet::of(4, {0, 1, 2}), VertexSet::of(4, {1, 2, 3})});
    auto verts = k.faces_of_dim(0);
    CHECK(verts.size() == 4);
    auto edges = k.faces_of_dim(1);
    CHECK(edges.size() == 5);  // {12} shared, deduplicated
    CHECK(edges[0] == VertexSet::of(4, {0, 1}));
    CHECK(edges[4] == VertexSet::of(4, {2, 3}));
    CHECK(k.faces_of_dim(-1).size() == 1);
    CHECK(k.faces_of_dim(2).size() == 2);
    CHECK(k.faces_of_dim(3).empty());
}

TEST_CASE("graph independence complex") {
    auto k2 = independence_complex(make_complete(2));
    CHECK(k2.facets().size() == 2);
    CHECK(has_facet(k2, {0}));
    CHECK(has_facet(k2, {1}));

    auto e3 = independence_complex(Graph(3));
    CHECK(e3.is_full_simplex());

    auto c4 = independence_complex(make_cycle(4));
    REQUIRE(c4.facets().size() == 2);
    CHECK(has_facet(c4, {0, 2}));
    CHECK(has_facet(c4, {1, 3}));

    // membership agrees with the pairwise-independence definition, exhaustively
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + int(rng() % 7);
        Graph g = oracles::random_graph(n, 0.45, rng);
        auto k = independence_complex(g);
        auto faces = oracles::face_masks(k);
        for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
            bool indep = true;
            for (int u = 0; u < n && indep; ++u)
                for (int v = u + 1; v < n && indep; ++v)
                    if ((mask >> u & 1) && (mask >> v & 1) && g.has_edge(u, v)) indep = false;
            CHECK(faces.count(mask) == (indep ? 1u : 0u));
        }
    }
}

TEST_CASE("hypergraph independence complex") {
    auto dp3 = independence_complex(dominance_hypergraph(make_path(3)));
    REQUIRE(dp3.facets().size() == 2);
    CHECK(has_facet(dp3, {0, 2}));
    CHECK(has_facet(dp3, {1}));

    Hypergraph with_empty(2);
    with_empty.edges.push_back(VertexSet(2));
    CHECK(independence_complex(with_empty).is_void());

    CHECK(independence_complex(Hypergraph(2)).is_full_simplex());

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + int(rng() % 6);
        Hypergraph h = oracles::random_hypergraph(n, 6, rng);
        auto k = independence_complex(h);
        CHECK(facets_are_antichain(k));
        auto faces = oracles::face_masks(k);
        for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask)
            CHECK(faces.count(mask) == (is_independent(h, oracles::from_mask(n, mask)) ? 1u : 0u));
    }
}

TEST_CASE("dominance complex") {
    auto dk2 = dominance_complex(make_complete(2));
    CHECK(dk2.facets().size() == 2);

    CHECK(dominance_complex(Graph(2)).is_empty_complex());
    CHECK_THROWS_AS(dominance_complex(Graph(0)), std::invalid_argument);

    // all six pairs dominate in C4, so D(C4) is the complete 1-skeleton on 4
    // vertices (a wedge of three circles)
    auto dc4 = dominance_complex(make_cycle(4));
    CHECK(dc4.facets().size() == 6);
    CHECK(dc4.dim() == 1);

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + int(rng() % 8);
        Graph g = oracles::random_graph(n, 0.5, rng);
        auto faces = oracles::face_masks(dominance_complex(g));
        for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
            uint64_t comp = ~mask & ((uint64_t(1) << n) - 1);
            CHECK(faces.count(mask) == (oracles::dominates(g, comp) ? 1u : 0u));
        }
    }
}

TEST_CASE("minimal nonfaces") {
    CHECK(minimal_nonfaces(SimplicialComplex::full_simplex(4)).empty());

    auto boundary = SimplicialComplex::from_facets(
        3, {VertexSet::of(3, {0, 1}), VertexSet::of(3, {0, 2}), VertexSet::of(3, {1, 2})});
    auto mnf = minimal_nonfaces(boundary);
    REQUIRE(mnf.size() == 1);
    CHECK(mnf[0] == VertexSet::full(3));

    auto dp3 = dominance_complex(make_path(3));
    auto mnf2 = minimal_nonfaces(dp3);
    REQUIRE(mnf2.size() == 2);
    CHECK(mnf2[0] == VertexSet::of(3, {0, 1}));
    CHECK(mnf2[1] == VertexSet::of(3, {1, 2}));

    CHECK_THROWS_AS(minimal_nonfaces(SimplicialComplex::void_complex(2)),
                    std::invalid_argument);
}

TEST_CASE("cached minimal nonfaces agree with the lattice scan") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + int(rng() % 6);
        Hypergraph h = oracles::random_hypergraph(n, 5, rng);
        auto k = independence_complex(h);
        REQUIRE(k.known_minimal_nonfaces());
        // rebuilding from facets drops the cache and forces the scan
        auto rebuilt = SimplicialComplex::from_facets(n, k.facets());
        CHECK(*k.known_minimal_nonfaces() == minimal_nonfaces(rebuilt));

        if (!k.is_void()) {
            auto dual = alexander_dual(k);
            if (!dual.is_void()) {
                auto dual_rebuilt = SimplicialComplex::from_facets(n, dual.facets());
                CHECK(*dual.known_minimal_nonfaces() == minimal_nonfaces(dual_rebuilt));
            }
            auto sus = suspension(k);
            auto sus_rebuilt = SimplicialComplex::from_facets(n + 2, sus.facets());
            CHECK(*sus.known_minimal_nonfaces() == minimal_nonfaces(sus_rebuilt));
        }
    }
}

TEST_CASE("alexander dual membership law and involution") {
    CHECK(alexander_dual(SimplicialComplex::full_simplex(3)).is_void());
    CHECK(alexander_dual(SimplicialComplex::void_complex(3)).is_full_simplex());

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 8);
        auto k = oracles::random_complex(n, rng);
        auto dual = alexander_dual(k);
        auto faces = oracles::face_masks(k);
        auto dual_faces = oracles::face_masks(dual);
        uint64_t all = (uint64_t(1) << n) - 1;
        for (uint64_t mask = 0; mask <= all; ++mask)
            CHECK(dual_faces.count(mask) == (faces.count(all & ~mask) ? 0u : 1u));
        CHECK(alexander_dual(dual) == k);
    }
}

TEST_CASE("suspension") {
    auto s0 = suspension(SimplicialComplex::empty_complex(0));
    CHECK(s0.ground_size() == 2);
    CHECK(s0.facets().size() == 2);
    CHECK(s0.dim() == 0);

    auto two_points = SimplicialComplex::from_facets(
        2, {VertexSet::of(2, {0}), VertexSet::of(2, {1})});
    auto circle = suspension(two_points);
    CHECK(circle.ground_size() == 4);
    CHECK(circle.facets().size() == 4);
    CHECK(circle.dim() == 1);
    CHECK(f_vector(circle) == std::vector<long>{4, 4});

    CHECK_THROWS_AS(suspension(SimplicialComplex::void_complex(2)), std::invalid_argument);
}

TEST_CASE("cross-polytope boundary") {
    auto a0 = cross_polytope_boundary(0);
    CHECK(a0.ground_size() == 2);
    CHECK(a0.facets().size() == 2);

    auto a1 = cross_polytope_boundary(1);
    CHECK(a1.facets().size() == 4);
    CHECK(f_vector(a1) == std::vector<long>{4, 4});
    CHECK_FALSE(a1.has_face(VertexSet::of(4, {0, 1})));  // antipodal pair
    CHECK(a1.has_face(VertexSet::of(4, {0, 3})));

    auto a2 = cross_polytope_boundary(2);
    CHECK(a2.facets().size() == 8);
    CHECK(f_vector(a2) == std::vector<long>{6, 12, 8});  // octahedron

    CHECK_THROWS_AS(cross_polytope_boundary(-1), std::invalid_argument);
}

TEST_CASE("f-vector") {
    CHECK(f_vector(SimplicialComplex::full_simplex(3)) == std::vector<long>{3, 3, 1});
    CHECK(f_vector(dominance_complex(make_cycle(4))) == std::vector<long>{4, 6});
    CHECK(f_vector(SimplicialComplex::empty_complex(2)).empty());
    CHECK_THROWS_AS(f_vector(SimplicialComplex::void_complex(2)), std::invalid_argument);
}

TEST_CASE("free involution checks") {
    auto ik1 = independence_complex(bowtie(Graph(1)));
    CHECK(is_free_involution(ik1, bowtie_involution(1)));

    auto two_points = SimplicialComplex::from_facets(
        2, {VertexSet::of(2, {0}), VertexSet::of(2, {1})});
    CHECK_FALSE(is_free_involution(two_points, {0, 1}));  // identity fixes faces

    // full simplex on 2: the swap maps the top facet to itself
    CHECK_FALSE(is_free_involution(independence_complex(Graph(2)), {1, 0}));

    CHECK_THROWS_AS(is_free_involution(two_points, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(is_free_involution(two_points, {1}), std::invalid_argument);
}

TEST_CASE("cross-polytope embedding maps") {
    auto f = cross_polytope_embedding(Graph(1));
    CHECK(f.domain.facets().size() == 2);
    CHECK(f.codomain.ground_size() == 2);
    CHECK(validate_simplicial(f).ok);
    CHECK(is_equivariant(f, cross_polytope_involution(0), bowtie_involution(1)));

    Graph c4 = make_cycle(4);
    auto fc4 = cross_polytope_embedding(c4);
    CHECK(fc4.domain.facets().size() == 4);  // 2^alpha, alpha = 2
    CHECK(fc4.codomain.ground_size() == 8);
    CHECK(validate_simplicial(fc4).ok);
    CHECK(is_equivariant(fc4, cross_polytope_involution(1), bowtie_involution(4)));

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + int(rng() % 6);
        Graph g = oracles::random_graph(n, 0.4, rng);
        auto fg = cross_polytope_embedding(g);
        int alpha = fg.domain.ground_size() / 2;
        CHECK(fg.domain.facets().size() == size_t(1) << alpha);
        CHECK(validate_simplicial(fg).ok);
        CHECK(is_equivariant(fg, cross_polytope_involution(alpha - 1), bowtie_involution(n)));
    }

    // a broken map is flagged with a witness
    SimplicialVertexMap bad;
    bad.domain = cross_polytope_boundary(0);
    bad.codomain = independence_complex(make_complete(2));
    bad.vertex_map = {0, 1};  // {0},{1} are faces but the map must stay injective&simplicial
    CHECK(validate_simplicial(bad).ok);
    bad.vertex_map = {0, 0};
    CHECK_FALSE(validate_simplicial(bad).ok);
}

TEST_CASE("facet text format") {
    auto dk2 = dominance_complex(make_complete(2));
    CHECK(format_facets(dk2) == "2 2\n0\n1\n");
    CHECK(format_facets(SimplicialComplex::empty_complex(2)) == "2 1\n\n");
    CHECK(format_facets(SimplicialComplex::void_complex(2)) == "2 0\n");

    for (const auto& text : {std::string("2 2\n0\n1\n"), std::string("2 1\n\n"),
                             std::string("2 0\n"), std::string("5 2\n0 2 4\n1 3\n")}) {
        auto k = parse_facets(text);
        CHECK(format_facets(k) == text);
    }
    CHECK(parse_facets("2 1\n\n").is_empty_complex());
    CHECK(parse_facets("2 0\n").is_void());
    CHECK_THROWS_WITH_AS(parse_facets("2 1\n7\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_facets("abc\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_facets("2 1\n0\n1\n"), doctest::Contains("trailing"), ParseError);
}
