#ifndef DOMCX_SIMPLICIAL_COMPLEX_HPP
#define DOMCX_SIMPLICIAL_COMPLEX_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domcx/graph.hpp"
#include "domcx/hypergraph.hpp"
#include "domcx/vertex_set.hpp"

namespace domcx {

// Abstract simplicial complex on an explicit ground set {0..n-1}, stored by
// its facet antichain. Two degenerate values are distinguished: the VOID
// complex has no faces at all (facet list empty), the EMPTY complex has the
// empty face only (facet list [∅]). Unused ground vertices are kept; n is
// authoritative for Alexander duality.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_complex(int n);
    static SimplicialComplex full_simplex(int n);

    // Normalizes: drops sets contained in another, dedups, sorts facets
    // lexicographically.
    static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets);

    int ground_size() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }
    bool is_full_simplex() const { return facets_.size() == 1 && facets_[0].count() == n_; }

    // Top dimension; -1 for EMPTY, -2 for VOID.
    int dim() const;

    bool has_face(const VertexSet& sigma) const;

    // All d-faces in lexicographic order; d = -1 gives the empty face
    // (for non-VOID complexes).
    std::vector<VertexSet> faces_of_dim(int d) const;

    // Inclusion-minimal non-faces when the constructor knew them
    // (independence complexes, duals, suspensions, cross-polytopes).
    const std::optional<std::vector<VertexSet>>& known_minimal_nonfaces() const {
        return min_nonfaces_;
    }
    void remember_minimal_nonfaces(std::vector<VertexSet> mnf);

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && facets_ == o.facets_;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> facets_;
    std::optional<std::vector<VertexSet>> min_nonfaces_;
};

// --- constructions ----------------------------------------------------------

// Facets are the maximal independent sets of g.
SimplicialComplex independence_complex(const Graph& g);

// Facets are the maximal sets containing no hyperedge; VOID when some
// hyperedge is empty, the full simplex when there are no hyperedges.
SimplicialComplex independence_complex(const Hypergraph& h);

// D(g): subsets of V whose complement is dominating. Requires n >= 1.
SimplicialComplex dominance_complex(const Graph& g);

// Inclusion-minimal non-faces, sorted by size then lexicographically.
// Uses the cached hyperedge shortcut when available, otherwise a
// level-by-level lattice scan (ground set capped at 24). VOID is a
// contract error (its minimal non-face would be ∅).
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& k);

// K^∨ = { σ ⊆ X : X∖σ ∉ K } on the same ground set.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

// Ground set grows by the two apexes n, n+1. VOID is a contract error.
SimplicialComplex suspension(const SimplicialComplex& k);

// Boundary of the (m+1)-dimensional cross polytope on ground set
// {0..2m+1}: vertex 2i is the +-copy and 2i+1 the --copy of pair i; the
// 2^(m+1) facets pick one vertex from each pair. Triangulates S^m.
SimplicialComplex cross_polytope_boundary(int m);

// The involution of cross_polytope_boundary(m) swapping 2i and 2i+1.
std::vector<int> cross_polytope_involution(int m);

// Face counts by dimension 0..dim (empty face implied, not listed).
// VOID is a contract error; EMPTY gives an empty vector.
std::vector<long> f_vector(const SimplicialComplex& k);

// True iff gamma maps every facet to a face disjoint from it (which pushes
// down to all faces). gamma must be an involution of the ground set.
bool is_free_involution(const SimplicialComplex& k, const std::vector<int>& gamma);

// Image of s under a total vertex map into a ground set of the given size.
VertexSet map_vertices(const VertexSet& s, const std::vector<int>& vertex_map,
                       int codomain_universe);

// --- vertex maps ------------------------------------------------------------

struct SimplicialVertexMap {
    SimplicialComplex domain;
    SimplicialComplex codomain;
    std::vector<int> vertex_map;  // total on the domain ground set

    VertexSet image(const VertexSet& face) const;
};

struct MapCheck {
    bool ok = true;
    std::string problem;    // empty when ok
    VertexSet witness;      // offending face / vertex set when not ok
};

// Injectivity on vertices plus every domain facet landing on a face.
MapCheck validate_simplicial(const SimplicialVertexMap& f);

// f(domain_inv(x)) == codomain_inv(f(x)) for every domain vertex.
bool is_equivariant(const SimplicialVertexMap& f, const std::vector<int>& domain_inv,
                    const std::vector<int>& codomain_inv);

// The cross-polytope boundary on a maximum independent set {v_1<...<v_a},
// mapped into I(bowtie(g)) by 2(i-1) -> v_i, 2(i-1)+1 -> n+v_i. Requires
// alpha(g) >= 1.
SimplicialVertexMap cross_polytope_embedding(const Graph& g);

// --- facet text format --------------------------------------------------------

// First line "n k", then k facet lines of space-separated vertices; an empty
// line is the empty facet ("n 1" + empty line encodes EMPTY, "n 0" VOID).
std::string format_facets(const SimplicialComplex& k);
SimplicialComplex parse_facets(std::string_view text);

}  // namespace domcx

#endif
