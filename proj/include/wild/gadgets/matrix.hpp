#pragma once
// Matrix-pair constructions showing wildness of pairs of matrices.

#include <utility>
#include <vector>

#include "../gf.hpp"

namespace wild {

using MatrixPair = std::pair<Matrix, Matrix>;

// A has I_m on the block superdiagonal, B carries M_1..M_t there.
inline MatrixPair gp_pair_gadget(const std::vector<Matrix>& ms, Field f, std::size_t m_if_empty = 0) {
    std::size_t m = ms.empty() ? m_if_empty : ms[0].rows();
    for (auto& x : ms)
        if (x.rows() != m || x.cols() != m) throw DimensionError("gp_pair_gadget: matrices must be square of one size");
    std::size_t t = ms.size(), n = (t + 1) * m;
    Matrix a(f, n, n), b(f, n, n);
    for (std::size_t i = 0; i < t; ++i) {
        a.set_block(i * m, (i + 1) * m, Matrix::identity(f, m));
        b.set_block(i * m, (i + 1) * m, ms[i]);
    }
    return {a, b};
}

inline Matrix gp_pair_lift(const Matrix& c, std::size_t t) {
    return direct_sum(std::vector<Matrix>(t + 1, c), c.field());
}

// ([I;0], [[0,A],[I,B]]) under (M,N) -> (C^{-1} M R, C^{-1} N C).
inline MatrixPair pair_embed_gadget(const Matrix& a, const Matrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        throw DimensionError("pair_embed_gadget: equal square sizes required");
    Field f = a.field();
    std::size_t n = a.rows();
    Matrix m(f, 2 * n, n), nn(f, 2 * n, 2 * n);
    m.set_block(0, 0, Matrix::identity(f, n));
    nn.set_block(0, n, a);
    nn.set_block(n, 0, Matrix::identity(f, n));
    nn.set_block(n, n, b);
    return {m, nn};
}

inline MatrixPair apply_pair_action(const MatrixPair& x, const Matrix& c, const Matrix& r) {
    Matrix ci = inverse(c);
    return {ci * x.first * r, ci * x.second * c};
}

// Similarity S -> (C, R) = (S (+) S, S).
inline std::pair<Matrix, Matrix> pair_embed_lift(const Matrix& s) { return {direct_sum(s, s), s}; }

inline std::vector<Matrix> similarity(const std::vector<Matrix>& ms, const Matrix& c) {
    Matrix ci = inverse(c);
    std::vector<Matrix> out;
    for (auto& m : ms) out.push_back(ci * m * c);
    return out;
}

}  // namespace wild
