#pragma once
// Strict equivalence of matrix pencils (P A Q, P B Q) over GF(p) through a
// complete set of rational Kronecker invariants.

#include "poly.hpp"

namespace wild {

struct PencilInvariants {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> column_kernels;  // dim ker of the k-th block Toeplitz matrix
    std::vector<std::size_t> row_kernels;     // same for the transposed pencil
    std::vector<Poly> finite;                 // invariant factors of A + xB
    std::vector<std::size_t> infinite;        // x-valuations of invariant factors of B + xA
    friend bool operator==(const PencilInvariants&, const PencilInvariants&) = default;
};

namespace detail {

// Kernel dimensions of W_k = [A; B A; B A; ...; B] ((k+1)m x kn), k = 1..n+1.
// dim ker W_k = sum over column minimal indices e < k of (k - e).
inline std::vector<std::size_t> toeplitz_kernels(const Matrix& a, const Matrix& b) {
    std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= n + 1; ++k) {
        Matrix w(a.field(), (k + 1) * m, k * n);
        for (std::size_t j = 0; j < k; ++j) {
            w.set_block(j * m, j * n, a);
            w.set_block((j + 1) * m, j * n, b);
        }
        out.push_back(k * n - rank(w));
    }
    return out;
}

inline PolyMatrix pencil_matrix(const Matrix& a, const Matrix& b) {
    PolyMatrix m(a.rows(), std::vector<Poly>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Poly::linear(a.field(), a(i, j), b(i, j));
    return m;
}

}  // namespace detail

inline PencilInvariants pencil_invariants(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("pencil halves differ in shape");
    PencilInvariants inv;
    inv.rows = a.rows();
    inv.cols = a.cols();
    inv.column_kernels = detail::toeplitz_kernels(a, b);
    inv.row_kernels = detail::toeplitz_kernels(a.transpose(), b.transpose());
    inv.finite = invariant_factors(detail::pencil_matrix(a, b));
    for (auto& d : invariant_factors(detail::pencil_matrix(b, a))) inv.infinite.push_back(d.x_valuation());
    return inv;
}

inline bool pencils_strictly_equivalent(const Matrix& a1, const Matrix& b1, const Matrix& a2, const Matrix& b2) {
    if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) return false;
    return pencil_invariants(a1, b1) == pencil_invariants(a2, b2);
}

}  // namespace wild
