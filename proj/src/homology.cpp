#include "domcx/homology.hpp"

#include <stdexcept>
#include <unordered_map>

namespace domcx {

int rank_gf2(GF2Matrix m) {
    size_t words = m.row_words();
    std::vector<std::pair<int, int>> pivots;  // (column, row index)
    int rank = 0;
    for (int r = 0; r < m.rows(); ++r) {
        uint64_t* cur = m.row(r);
        for (auto [col, pr] : pivots) {
            if ((cur[size_t(col) >> 6] >> (col & 63)) & 1ULL) {
                const uint64_t* pv = m.row(pr);
                for (size_t w = 0; w < words; ++w) cur[w] ^= pv[w];
            }
        }
        int lead = -1;
        for (size_t w = 0; w < words && lead < 0; ++w)
            if (cur[w]) lead = int(w << 6) + std::countr_zero(cur[w]);
        if (lead >= 0) {
            pivots.emplace_back(lead, r);
            ++rank;
        }
    }
    return rank;
}

GF2Matrix gf2_multiply(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("gf2_multiply: dimension mismatch");
    GF2Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        uint64_t* dst = out.row(i);
        for (int k = 0; k < a.cols(); ++k) {
            if (a.test(i, k)) {
                const uint64_t* src = b.row(k);
                for (size_t w = 0; w < out.row_words(); ++w) dst[w] ^= src[w];
            }
        }
    }
    return out;
}

namespace {

GF2Matrix boundary_from_faces(const std::vector<VertexSet>& rows,
                              const std::vector<VertexSet>& cols) {
    std::unordered_map<VertexSet, int, VertexSetHash> row_index;
    row_index.reserve(rows.size());
    for (int i = 0; i < int(rows.size()); ++i) row_index.emplace(rows[size_t(i)], i);
    GF2Matrix m(int(rows.size()), int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        cols[size_t(j)].for_each([&](int v) {
            VertexSet sub = cols[size_t(j)];
            sub.reset(v);
            m.set(row_index.at(sub), j);
        });
    }
    return m;
}

}  // namespace

GF2Matrix boundary_matrix(const SimplicialComplex& k, int d) {
    if (k.is_void()) throw std::invalid_argument("boundary_matrix: VOID complex");
    if (d < 0 || d > k.dim()) throw std::invalid_argument("boundary_matrix: dimension out of range");
    if (d == 0) {
        auto verts = k.faces_of_dim(0);
        GF2Matrix m(1, int(verts.size()));
        for (int j = 0; j < int(verts.size()); ++j) m.set(0, j);
        return m;
    }
    return boundary_from_faces(k.faces_of_dim(d - 1), k.faces_of_dim(d));
}

BettiProfile reduced_betti(const SimplicialComplex& k) {
    BettiProfile p;
    if (k.is_void()) return p;  // all-zero profile, dim -2
    p.dim = k.dim();
    p.betti.assign(size_t(p.dim + 2), 0);
    if (p.dim == -1) {
        p.betti[0] = 1;  // EMPTY: the empty face is a reduced cycle
        return p;
    }

    std::vector<long> f(size_t(p.dim + 1));
    std::vector<VertexSet> below = k.faces_of_dim(0);
    f[0] = long(below.size());
    std::vector<int> ranks(size_t(p.dim + 2), 0);  // ranks[d] = rank ∂_d
    ranks[0] = f[0] > 0 ? 1 : 0;
    for (int d = 1; d <= p.dim; ++d) {
        std::vector<VertexSet> here = k.faces_of_dim(d);
        f[size_t(d)] = long(here.size());
        ranks[size_t(d)] = rank_gf2(boundary_from_faces(below, here));
        below = std::move(here);
    }
    p.face_counts = f;
    p.betti[0] = 1 - ranks[0];
    for (int d = 0; d <= p.dim; ++d)
        p.betti[size_t(d + 1)] = f[size_t(d)] - ranks[size_t(d)] - ranks[size_t(d + 1)];
    return p;
}

std::optional<int> conn_z2(const BettiProfile& p) {
    for (int d = -1; d <= p.dim; ++d)
        if (p.at(d) != 0) return d - 1;
    return std::nullopt;
}

std::optional<int> hdim_z2(const BettiProfile& p) {
    for (int d = p.dim; d >= -1; --d)
        if (p.at(d) != 0) return d;
    return std::nullopt;
}

bool euler_identity_holds(const BettiProfile& p) {
    if (p.dim == -2) return true;  // VOID: no faces, no homology
    long lhs = 0;
    for (int d = -1; d <= p.dim; ++d) lhs += (d % 2 == 0 ? 1 : -1) * p.at(d);
    long rhs = -1;
    for (int d = 0; d <= p.dim && size_t(d) < p.face_counts.size(); ++d)
        rhs += (d % 2 == 0 ? 1 : -1) * p.face_counts[size_t(d)];
    return lhs == rhs;
}

bool profiles_equal(const BettiProfile& a, const BettiProfile& b) {
    int hi = std::max(a.dim, b.dim);
    for (int d = -1; d <= hi; ++d)
        if (a.at(d) != b.at(d)) return false;
    return true;
}

}  // namespace domcx
