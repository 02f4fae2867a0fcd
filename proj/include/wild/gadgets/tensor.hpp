#pragma once
// Gadgets reducing tuples of arrays and (1,2)/(0,3)-tensors to
// block-equivalence of partitioned arrays.

#include "output.hpp"

namespace wild {

// (1+m) x (t+n) x (p*t): ones at [0, j, k*t + j] and A_k in block (2,2,k).
inline GadgetOutput tuple_gadget(const std::vector<Cube>& as) {
    if (as.empty()) throw DimensionError("tuple gadget needs at least one array");
    Dims d = as[0].dims();
    for (auto& a : as)
        if (a.dims() != d) throw DimensionError("tuple gadget: arrays must share dimensions");
    Field f = as[0].field();
    std::size_t m = d[0], n = d[1], t = d[2], p = as.size();
    Partition3 part({{{1, m}, {t, n}, std::vector<std::size_t>(p, t)}});
    BlockedCube g(Cube(f, part.dims()), part);
    GadgetOutput out;
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t j = 0; j < t; ++j) g.cube(0, j, k * t + j) = 1;
        set_block(g, 1, 1, k, as[k]);
        auto box = block_box(part, 1, 1, k);
        out.placement.push_back({"A" + std::to_string(k + 1),
                                 {{{box[0].begin, box[0].end}, {box[1].begin, box[1].end}, {box[2].begin, box[2].end}}}});
    }
    out.cube = SparseCube::from_dense(g.cube);
    out.part = part;
    out.meta["gadget"] = "tuple";
    return out;
}

// Simultaneous witness (R,S,U) -> ([1] (+) R, U^{-T} (+) S, U (+) ... (+) U).
inline BlockWitness transport_tuple(const EquivWitness& w, std::size_t count) {
    Field f = w[0].field();
    BlockWitness out;
    out.blocks[0] = {Matrix::identity(f, 1), w[0]};
    out.blocks[1] = {contragredient(w[2]), w[1]};
    out.blocks[2] = std::vector<Matrix>(count, w[2]);
    return out;
}

inline void require_cubic(const Cube& a) {
    if (a.dim(0) != a.dim(1) || a.dim(1) != a.dim(2)) throw DimensionError("tensor gadget needs an n x n x n array");
}

// K^A: A with identity planes attached below and to the right.
inline GadgetOutput gadget_tensor12(const Cube& a) {
    require_cubic(a);
    std::size_t n = a.dim(0);
    Partition3 part({{{n, 1}, {n, 1}, {n}}});
    BlockedCube g(Cube(a.field(), part.dims()), part);
    set_block(g, 0, 0, 0, a);
    for (std::size_t k = 0; k < n; ++k) {
        g.cube(k, n, k) = 1;
        g.cube(n, k, k) = 1;
    }
    GadgetOutput out;
    out.cube = SparseCube::from_dense(g.cube);
    out.part = part;
    out.placement.push_back({"A", whole_box(a.dims())});
    out.meta["gadget"] = "tensor12";
    return out;
}

// (T,T,T^{-T}) -> (T (+) [1], T (+) [1], T^{-T})
inline BlockWitness transport_tensor12(const Matrix& t) {
    Field f = t.field();
    BlockWitness out;
    out.blocks[0] = {t, Matrix::identity(f, 1)};
    out.blocks[1] = {t, Matrix::identity(f, 1)};
    out.blocks[2] = {contragredient(t)};
    return out;
}

// N^A: one identity block per constraint S1^T U2 r = I, S2^T U1 r = I,
// R^T U2 s = I, R^T S2 u = I and the corner r s u = 1.
inline GadgetOutput gadget_tensor03(const Cube& a) {
    require_cubic(a);
    std::size_t n = a.dim(0);
    Partition3 part({{{n, 1}, {n, n, 1}, {n, n, 1}}});
    BlockedCube g(Cube(a.field(), part.dims()), part);
    set_block(g, 0, 0, 0, a);
    for (std::size_t j = 0; j < n; ++j) {
        g.cube(n, j, n + j) = 1;      // (2,1,2)
        g.cube(n, n + j, j) = 1;      // (2,2,1)
        g.cube(j, 2 * n, n + j) = 1;  // (1,3,2)
        g.cube(j, n + j, 2 * n) = 1;  // (1,2,3)
    }
    g.cube(n, 2 * n, 2 * n) = 1;
    GadgetOutput out;
    out.cube = SparseCube::from_dense(g.cube);
    out.part = part;
    out.placement.push_back({"A", whole_box(a.dims())});
    out.meta["gadget"] = "tensor03";
    return out;
}

// (T,T,T) -> (T (+) [1], T (+) T^{-T} (+) [1], T (+) T^{-T} (+) [1])
inline BlockWitness transport_tensor03(const Matrix& t) {
    Field f = t.field();
    Matrix one = Matrix::identity(f, 1), ct = contragredient(t);
    BlockWitness out;
    out.blocks[0] = {t, one};
    out.blocks[1] = {t, ct, one};
    out.blocks[2] = {t, ct, one};
    return out;
}

}  // namespace wild
