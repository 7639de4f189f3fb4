#ifndef DOMCX_HOMOLOGY_HPP
#define DOMCX_HOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "domcx/simplicial_complex.hpp"

namespace domcx {

// Dense GF(2) matrix, rows packed into 64-bit words.
class GF2Matrix {
public:
    GF2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), row_words_(size_t(cols + 63) >> 6),
          bits_(size_t(rows) * row_words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c) { bits_[size_t(r) * row_words_ + (size_t(c) >> 6)] |= 1ULL << (c & 63); }

    bool test(int r, int c) const {
        return (bits_[size_t(r) * row_words_ + (size_t(c) >> 6)] >> (c & 63)) & 1ULL;
    }

    uint64_t* row(int r) { return bits_.data() + size_t(r) * row_words_; }
    const uint64_t* row(int r) const { return bits_.data() + size_t(r) * row_words_; }
    size_t row_words() const { return row_words_; }

private:
    int rows_, cols_;
    size_t row_words_;
    std::vector<uint64_t> bits_;
};

// Rank over GF(2) by word-parallel row elimination; the argument is taken by
// value and consumed.
int rank_gf2(GF2Matrix m);

// a * b over GF(2); inner dimensions must agree.
GF2Matrix gf2_multiply(const GF2Matrix& a, const GF2Matrix& b);

// Boundary map ∂_d: rows are (d-1)-faces, columns d-faces, both in
// lexicographic order; for d = 0 the single row is the augmentation to the
// empty face. Requires a non-VOID complex and 0 <= d <= dim.
GF2Matrix boundary_matrix(const SimplicialComplex& k, int d);

// Reduced Z2 Betti numbers indexed from dimension -1 upward, with the
// per-dimension face counts kept for audit. VOID has dim -2 and no entries.
struct BettiProfile {
    int dim = -2;
    std::vector<long> betti;        // betti[i] is the reduced Betti number in dimension i-1
    std::vector<long> face_counts;  // face_counts[d] = number of d-faces, d = 0..dim

    long at(int d) const {
        return (d >= -1 && size_t(d + 1) < betti.size()) ? betti[size_t(d + 1)] : 0;
    }

    bool all_zero() const {
        for (long b : betti)
            if (b) return false;
        return true;
    }
};

BettiProfile reduced_betti(const SimplicialComplex& k);

// Largest n with all reduced Betti numbers vanishing up to dimension n;
// nullopt means plus infinity (Z2-acyclic or VOID).
std::optional<int> conn_z2(const BettiProfile& p);

// Largest dimension with a nonvanishing reduced Betti number; nullopt means
// minus infinity.
std::optional<int> hdim_z2(const BettiProfile& p);

// Alternating sums of Betti numbers and face counts agree (the empty face
// contributes the -1 on the face side).
bool euler_identity_holds(const BettiProfile& p);

// Equal in every dimension (profiles may have different dim ranges).
bool profiles_equal(const BettiProfile& a, const BettiProfile& b);

}  // namespace domcx

#endif
