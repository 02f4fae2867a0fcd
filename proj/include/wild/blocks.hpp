#pragma once
// Partitioned cubes and block-diagonal witnesses.

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "cube.hpp"

namespace wild {

// Per-axis stratum sizes. Zero-thickness strata are allowed.
class Partition3 {
public:
    Partition3() = default;
    explicit Partition3(std::array<std::vector<std::size_t>, 3> sizes) : sizes_(std::move(sizes)) {
        for (auto& s : sizes_)
            if (s.empty()) throw DimensionError("partition axis needs at least one stratum");
        rebuild();
    }

    static Partition3 trivial(const Dims& d) { return Partition3({{{d[0]}, {d[1]}, {d[2]}}}); }

    // From cut points (stratum ends), non-decreasing and ending at the axis length.
    static Partition3 from_cuts(const std::array<std::vector<std::size_t>, 3>& cuts) {
        std::array<std::vector<std::size_t>, 3> sizes;
        for (std::size_t ax = 0; ax < 3; ++ax) {
            std::size_t prev = 0;
            for (auto c : cuts[ax]) {
                if (c < prev) throw DimensionError("partition cuts must be non-decreasing");
                sizes[ax].push_back(c - prev);
                prev = c;
            }
        }
        return Partition3(sizes);
    }

    std::size_t count(std::size_t axis) const { return sizes_[axis].size(); }
    const std::vector<std::size_t>& sizes(std::size_t axis) const { return sizes_[axis]; }
    std::size_t size(std::size_t axis, std::size_t s) const { return sizes_[axis][s]; }
    std::size_t offset(std::size_t axis, std::size_t s) const { return offsets_[axis][s]; }
    Range range(std::size_t axis, std::size_t s) const {
        return {offsets_[axis][s], offsets_[axis][s] + sizes_[axis][s]};
    }
    std::size_t length(std::size_t axis) const { return offsets_[axis].back(); }
    Dims dims() const { return {length(0), length(1), length(2)}; }

    std::vector<std::size_t> cuts(std::size_t axis) const {
        return {offsets_[axis].begin() + 1, offsets_[axis].end()};
    }

    // Stratum containing a coordinate (first non-empty one).
    std::size_t stratum_of(std::size_t axis, std::size_t x) const {
        for (std::size_t s = 0; s < count(axis); ++s)
            if (x < offsets_[axis][s + 1]) return s;
        throw DimensionError("coordinate outside partition");
    }

    friend bool operator==(const Partition3& a, const Partition3& b) { return a.sizes_ == b.sizes_; }

private:
    void rebuild() {
        for (std::size_t ax = 0; ax < 3; ++ax) {
            offsets_[ax].assign(1, 0);
            for (auto s : sizes_[ax]) offsets_[ax].push_back(offsets_[ax].back() + s);
        }
    }
    std::array<std::vector<std::size_t>, 3> sizes_{{{0}, {0}, {0}}};
    std::array<std::vector<std::size_t>, 3> offsets_{{{0, 0}, {0, 0}, {0, 0}}};
};

struct BlockedCube {
    Cube cube;
    Partition3 part;

    BlockedCube() = default;
    BlockedCube(Cube c, Partition3 p) : cube(std::move(c)), part(std::move(p)) {
        if (part.dims() != cube.dims()) throw DimensionError("partition does not match cube dimensions");
    }
    static BlockedCube unpartitioned(Cube c) {
        auto p = Partition3::trivial(c.dims());
        return BlockedCube(std::move(c), std::move(p));
    }
    const Field& field() const { return cube.field(); }
    friend bool operator==(const BlockedCube&, const BlockedCube&) = default;
};

inline bool conformal(const BlockedCube& a, const BlockedCube& b) {
    return a.cube.dims() == b.cube.dims() && a.part == b.part;
}

inline Box block_box(const Partition3& p, std::size_t a, std::size_t b, std::size_t c) {
    if (a >= p.count(0) || b >= p.count(1) || c >= p.count(2)) throw DimensionError("block index out of range");
    return {p.range(0, a), p.range(1, b), p.range(2, c)};
}

inline Cube block(const BlockedCube& x, std::size_t a, std::size_t b, std::size_t c) {
    return subcube_extract(x.cube, block_box(x.part, a, b, c));
}

inline void set_block(BlockedCube& x, std::size_t a, std::size_t b, std::size_t c, const Cube& piece) {
    auto box = block_box(x.part, a, b, c);
    if (piece.dims() != Dims{box[0].size(), box[1].size(), box[2].size()})
        throw DimensionError("block shape mismatch");
    subcube_place(x.cube, piece, {box[0].begin, box[1].begin, box[2].begin});
}

// Sub-arrays lying in each stratum of one axis (full range on the others).
inline std::vector<Cube> strata(const BlockedCube& x, std::size_t axis) {
    std::vector<Cube> out;
    for (std::size_t s = 0; s < x.part.count(axis); ++s) {
        Box box{Range{0, x.cube.dim(0)}, Range{0, x.cube.dim(1)}, Range{0, x.cube.dim(2)}};
        box[axis] = x.part.range(axis, s);
        out.push_back(subcube_extract(x.cube, box));
    }
    return out;
}

// A_1 (+) ... (+) A_p with one stratum per summand on every axis.
inline BlockedCube direct_sum(const std::vector<Cube>& parts, Field f) {
    std::array<std::vector<std::size_t>, 3> sizes;
    for (auto& c : parts)
        for (std::size_t ax = 0; ax < 3; ++ax) sizes[ax].push_back(c.dim(ax));
    if (parts.empty())
        for (auto& s : sizes) s.push_back(0);
    Partition3 p(sizes);
    BlockedCube out(Cube(f, p.dims()), p);
    for (std::size_t s = 0; s < parts.size(); ++s) set_block(out, s, s, s, parts[s]);
    return out;
}

inline BlockedCube direct_sum(const Cube& a, const Cube& b) { return direct_sum({a, b}, a.field()); }

// One square matrix per stratum per axis.
struct BlockWitness {
    std::array<std::vector<Matrix>, 3> blocks;
};

inline void check_block_witness(const Partition3& p, const BlockWitness& w) {
    for (std::size_t ax = 0; ax < 3; ++ax) {
        if (w.blocks[ax].size() != p.count(ax))
            throw DimensionError("block witness: wrong number of blocks on axis " + std::to_string(ax));
        for (std::size_t s = 0; s < p.count(ax); ++s) {
            const Matrix& m = w.blocks[ax][s];
            if (m.rows() != p.size(ax, s) || m.cols() != p.size(ax, s))
                throw DimensionError("block witness: block shape mismatch");
            if (!is_invertible(m)) throw SingularMatrix("block witness: singular block");
        }
    }
}

inline EquivWitness assemble(const BlockWitness& w, Field f) {
    return {direct_sum(w.blocks[0], f), direct_sum(w.blocks[1], f), direct_sum(w.blocks[2], f)};
}

inline BlockWitness identity_block_witness(const Partition3& p, Field f) {
    BlockWitness w;
    for (std::size_t ax = 0; ax < 3; ++ax)
        for (auto s : p.sizes(ax)) w.blocks[ax].push_back(Matrix::identity(f, s));
    return w;
}

inline BlockedCube apply_block_equiv(const BlockedCube& a, const BlockWitness& w) {
    check_block_witness(a.part, w);
    return BlockedCube(apply_equiv_unchecked(a.cube, assemble(w, a.field())), a.part);
}

template <class Rng>
BlockWitness random_block_witness(const Partition3& p, Field f, Rng& rng) {
    BlockWitness w;
    for (std::size_t ax = 0; ax < 3; ++ax)
        for (auto s : p.sizes(ax)) w.blocks[ax].push_back(random_invertible(f, s, rng));
    return w;
}

// Matrix with row and column partitions.
struct PartitionedMatrix {
    Matrix m;
    std::vector<std::size_t> row_sizes, col_sizes;

    Matrix blk(std::size_t a, std::size_t b) const {
        std::size_t r0 = std::accumulate(row_sizes.begin(), row_sizes.begin() + a, std::size_t{0});
        std::size_t c0 = std::accumulate(col_sizes.begin(), col_sizes.begin() + b, std::size_t{0});
        return m.block(r0, c0, row_sizes[a], col_sizes[b]);
    }
};

// Block (a,b) of the result is M_ab (+) N_ab.
inline PartitionedMatrix block_direct_sum(const PartitionedMatrix& x, const PartitionedMatrix& y) {
    if (x.row_sizes.size() != y.row_sizes.size() || x.col_sizes.size() != y.col_sizes.size())
        throw DimensionError("block direct sum needs equal stratum counts");
    PartitionedMatrix out;
    for (std::size_t a = 0; a < x.row_sizes.size(); ++a) out.row_sizes.push_back(x.row_sizes[a] + y.row_sizes[a]);
    for (std::size_t b = 0; b < x.col_sizes.size(); ++b) out.col_sizes.push_back(x.col_sizes[b] + y.col_sizes[b]);
    std::size_t R = std::accumulate(out.row_sizes.begin(), out.row_sizes.end(), std::size_t{0});
    std::size_t C = std::accumulate(out.col_sizes.begin(), out.col_sizes.end(), std::size_t{0});
    out.m = Matrix(x.m.field(), R, C);
    std::size_t r0 = 0;
    for (std::size_t a = 0; a < out.row_sizes.size(); ++a) {
        std::size_t c0 = 0;
        for (std::size_t b = 0; b < out.col_sizes.size(); ++b) {
            out.m.set_block(r0, c0, direct_sum(x.blk(a, b), y.blk(a, b)));
            c0 += out.col_sizes[b];
        }
        r0 += out.row_sizes[a];
    }
    return out;
}

}  // namespace wild
