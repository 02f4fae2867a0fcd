#pragma once
// Three-way arrays over GF(p) and the (S1,S2,S3) action on them.

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "gf.hpp"

namespace wild {

using Dims = std::array<std::size_t, 3>;

// Axis 0 indexes horizontal slices, axis 1 lateral, axis 2 frontal.
enum class SliceKind { Horizontal = 0, Lateral = 1, Frontal = 2 };

class Cube {
public:
    Cube() = default;
    Cube(Field f, Dims d) : f_(f), d_(d), e_(d[0] * d[1] * d[2], 0) {}
    Cube(Field f, std::size_t m, std::size_t n, std::size_t t) : Cube(f, Dims{m, n, t}) {}

    static Cube from_entries(Field f, Dims d, const std::vector<Elem>& entries) {
        Cube c(f, d);
        if (entries.size() != c.e_.size()) throw DimensionError("cube entry count mismatch");
        for (std::size_t i = 0; i < entries.size(); ++i) c.e_[i] = f.reduce(entries[i]);
        return c;
    }

    const Field& field() const { return f_; }
    const Dims& dims() const { return d_; }
    std::size_t dim(std::size_t axis) const { return d_[axis]; }
    std::size_t size() const { return e_.size(); }
    const std::vector<Elem>& entries() const { return e_; }
    std::vector<Elem>& entries() { return e_; }

    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * d_[1] + j) * d_[2] + k; }
    Elem& operator()(std::size_t i, std::size_t j, std::size_t k) { return e_[index(i, j, k)]; }
    Elem operator()(std::size_t i, std::size_t j, std::size_t k) const { return e_[index(i, j, k)]; }

    bool is_zero() const {
        for (auto v : e_)
            if (v) return false;
        return true;
    }

    friend bool operator==(const Cube& a, const Cube& b) {
        return a.f_ == b.f_ && a.d_ == b.d_ && a.e_ == b.e_;
    }
    friend bool operator<(const Cube& a, const Cube& b) {
        if (a.d_ != b.d_) return a.d_ < b.d_;
        return a.e_ < b.e_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Cube& c) {
        os << c.d_[0] << "x" << c.d_[1] << "x" << c.d_[2] << "{";
        for (std::size_t i = 0; i < c.e_.size(); ++i) os << (i ? " " : "") << c.e_[i];
        return os << "}";
    }

private:
    Field f_;
    Dims d_{0, 0, 0};
    std::vector<Elem> e_;
};

// One matrix per axis; S_a is dim(a) x dim(a) for an equivalence.
using EquivWitness = std::array<Matrix, 3>;

inline EquivWitness identity_witness(Field f, const Dims& d) {
    return {Matrix::identity(f, d[0]), Matrix::identity(f, d[1]), Matrix::identity(f, d[2])};
}

// Composition matching the right action: apply(apply(A,x),y) == apply(A, compose(x,y)).
inline EquivWitness compose(const EquivWitness& x, const EquivWitness& y) {
    return {x[0] * y[0], x[1] * y[1], x[2] * y[2]};
}

// Contracts one axis with s (rows indexed by the old coordinate).
inline Cube mode_product(const Cube& a, std::size_t axis, const Matrix& s) {
    if (s.rows() != a.dim(axis)) throw DimensionError("mode product: matrix rows do not match axis length");
    Dims od = a.dims();
    od[axis] = s.cols();
    const Field& f = a.field();
    Cube out(f, od);
    const std::uint64_t p = f.p();
    const Dims& d = a.dims();
    for (std::size_t i = 0; i < d[0]; ++i)
        for (std::size_t j = 0; j < d[1]; ++j)
            for (std::size_t k = 0; k < d[2]; ++k) {
                std::uint64_t v = a(i, j, k);
                if (!v) continue;
                std::array<std::size_t, 3> x{i, j, k};
                std::size_t src = x[axis];
                for (std::size_t c = 0; c < s.cols(); ++c) {
                    Elem w = s(src, c);
                    if (!w) continue;
                    x[axis] = c;
                    Elem& dst = out(x[0], x[1], x[2]);
                    dst = static_cast<Elem>((dst + v * w) % p);
                }
            }
    return out;
}

// b_{j1j2j3} = sum a_{i1i2i3} s1_{i1j1} s2_{i2j2} s3_{i3j3}
// No shape or invertibility checks; callers that already hold group elements use this.
inline Cube apply_equiv_unchecked(const Cube& a, const EquivWitness& w) {
    Cube t = mode_product(a, 0, w[0]);
    t = mode_product(t, 1, w[1]);
    return mode_product(t, 2, w[2]);
}

inline void check_witness(const Cube& a, const EquivWitness& w) {
    for (std::size_t ax = 0; ax < 3; ++ax) {
        if (w[ax].rows() != a.dim(ax) || !w[ax].square() || !(w[ax].field() == a.field()))
            throw DimensionError("witness component " + std::to_string(ax) + " has wrong shape");
        if (!is_invertible(w[ax])) throw SingularMatrix("witness component " + std::to_string(ax) + " is singular");
    }
}

inline Cube apply_equiv(const Cube& a, const EquivWitness& w) {
    check_witness(a, w);
    return apply_equiv_unchecked(a, w);
}

inline std::vector<Matrix> slices(const Cube& a, SliceKind kind) {
    const Dims& d = a.dims();
    std::vector<Matrix> out;
    switch (kind) {
        case SliceKind::Frontal:
            for (std::size_t k = 0; k < d[2]; ++k) {
                Matrix m(a.field(), d[0], d[1]);
                for (std::size_t i = 0; i < d[0]; ++i)
                    for (std::size_t j = 0; j < d[1]; ++j) m(i, j) = a(i, j, k);
                out.push_back(std::move(m));
            }
            break;
        case SliceKind::Lateral:
            for (std::size_t j = 0; j < d[1]; ++j) {
                Matrix m(a.field(), d[0], d[2]);
                for (std::size_t i = 0; i < d[0]; ++i)
                    for (std::size_t k = 0; k < d[2]; ++k) m(i, k) = a(i, j, k);
                out.push_back(std::move(m));
            }
            break;
        case SliceKind::Horizontal:
            for (std::size_t i = 0; i < d[0]; ++i) {
                Matrix m(a.field(), d[1], d[2]);
                for (std::size_t j = 0; j < d[1]; ++j)
                    for (std::size_t k = 0; k < d[2]; ++k) m(j, k) = a(i, j, k);
                out.push_back(std::move(m));
            }
            break;
    }
    return out;
}

// Inverse of slices(); rows/cols give the slice shape when the list is empty.
inline Cube from_slices(Field f, SliceKind kind, std::span<const Matrix> ss, std::size_t rows, std::size_t cols) {
    for (auto& s : ss)
        if (s.rows() != rows || s.cols() != cols) throw DimensionError("slice shape mismatch");
    std::size_t cnt = ss.size();
    switch (kind) {
        case SliceKind::Frontal: {
            Cube c(f, rows, cols, cnt);
            for (std::size_t k = 0; k < cnt; ++k)
                for (std::size_t i = 0; i < rows; ++i)
                    for (std::size_t j = 0; j < cols; ++j) c(i, j, k) = ss[k](i, j);
            return c;
        }
        case SliceKind::Lateral: {
            Cube c(f, rows, cnt, cols);
            for (std::size_t j = 0; j < cnt; ++j)
                for (std::size_t i = 0; i < rows; ++i)
                    for (std::size_t k = 0; k < cols; ++k) c(i, j, k) = ss[j](i, k);
            return c;
        }
        case SliceKind::Horizontal:
        default: {
            Cube c(f, cnt, rows, cols);
            for (std::size_t i = 0; i < cnt; ++i)
                for (std::size_t j = 0; j < rows; ++j)
                    for (std::size_t k = 0; k < cols; ++k) c(i, j, k) = ss[i](j, k);
            return c;
        }
    }
}

// Output k = sum_i slice_i * u_{ik}.
inline std::vector<Matrix> reconstruct(std::span<const Matrix> ss, const Matrix& u, std::size_t rows,
                                       std::size_t cols) {
    if (u.rows() != ss.size()) throw DimensionError("reconstruct: mixing matrix rows != slice count");
    for (auto& m : ss)
        if (m.rows() != rows || m.cols() != cols) throw DimensionError("reconstruct: ragged slices");
    if (!is_invertible(u)) throw SingularMatrix("reconstruct: singular mixing matrix");
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < u.cols(); ++k) {
        Matrix acc(u.field(), rows, cols);
        for (std::size_t i = 0; i < ss.size(); ++i)
            if (u(i, k)) acc = acc + ss[i].scaled(u(i, k));
        out.push_back(std::move(acc));
    }
    return out;
}

// Frontal form of the action: (R^T A_k S)_k followed by mixing with U.
inline Cube slicewise_apply(const Cube& a, const EquivWitness& w) {
    check_witness(a, w);
    auto fr = slices(a, SliceKind::Frontal);
    Matrix rt = w[0].transpose();
    for (auto& s : fr) s = rt * s * w[1];
    auto mixed = reconstruct(fr, w[2], w[0].cols(), w[1].cols());
    return from_slices(a.field(), SliceKind::Frontal, mixed, w[0].cols(), w[1].cols());
}

// Output axis q is input axis perm[q].
inline Cube permute_axes(const Cube& a, const std::array<std::size_t, 3>& perm) {
    Dims od{a.dim(perm[0]), a.dim(perm[1]), a.dim(perm[2])};
    Cube out(a.field(), od);
    for (std::size_t i = 0; i < od[0]; ++i)
        for (std::size_t j = 0; j < od[1]; ++j)
            for (std::size_t k = 0; k < od[2]; ++k) {
                std::array<std::size_t, 3> src{};
                src[perm[0]] = i;
                src[perm[1]] = j;
                src[perm[2]] = k;
                out(i, j, k) = a(src[0], src[1], src[2]);
            }
    return out;
}

struct Range {
    std::size_t begin = 0, end = 0;  // half-open
    std::size_t size() const { return end - begin; }
    friend bool operator==(const Range&, const Range&) = default;
};
using Box = std::array<Range, 3>;

inline Cube subcube_extract(const Cube& a, const Box& box) {
    for (std::size_t ax = 0; ax < 3; ++ax)
        if (box[ax].begin > box[ax].end || box[ax].end > a.dim(ax))
            throw DimensionError("subcube range out of bounds");
    Cube out(a.field(), box[0].size(), box[1].size(), box[2].size());
    for (std::size_t i = 0; i < box[0].size(); ++i)
        for (std::size_t j = 0; j < box[1].size(); ++j)
            for (std::size_t k = 0; k < box[2].size(); ++k)
                out(i, j, k) = a(box[0].begin + i, box[1].begin + j, box[2].begin + k);
    return out;
}

inline void subcube_place(Cube& target, const Cube& piece, std::array<std::size_t, 3> at) {
    for (std::size_t ax = 0; ax < 3; ++ax)
        if (at[ax] + piece.dim(ax) > target.dim(ax)) throw DimensionError("subcube placement out of bounds");
    for (std::size_t i = 0; i < piece.dim(0); ++i)
        for (std::size_t j = 0; j < piece.dim(1); ++j)
            for (std::size_t k = 0; k < piece.dim(2); ++k)
                target(at[0] + i, at[1] + j, at[2] + k) = piece(i, j, k);
}

template <class Rng>
Cube random_cube(Field f, Dims d, Rng& rng) {
    Cube c(f, d);
    for (auto& v : c.entries()) v = static_cast<Elem>(rng() % f.p());
    return c;
}

}  // namespace wild
