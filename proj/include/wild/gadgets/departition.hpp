#pragma once
// Removing the partition of one axis while keeping block-equivalence
// classes: each slice k of stratum g is prefixed by an identity of size
// 2^g * r placed in its own row band and column block, with
// r = min(rows, cols) + 1 exceeding every slice rank.

#include <limits>

#include "output.hpp"

namespace wild {

namespace detail {

// Moves `axis` last, others keep their order.
inline std::array<std::size_t, 3> axis_last(std::size_t axis) {
    switch (axis) {
        case 0: return {1, 2, 0};
        case 1: return {0, 2, 1};
        default: return {0, 1, 2};
    }
}

inline std::array<std::size_t, 3> inverse_perm(const std::array<std::size_t, 3>& p) {
    std::array<std::size_t, 3> q{};
    for (std::size_t i = 0; i < 3; ++i) q[p[i]] = i;
    return q;
}

inline Index checked_add(Index a, Index b) {
    if (a > std::numeric_limits<Index>::max() - b) throw BudgetExceeded("gadget size overflows 64-bit indices");
    return a + b;
}

inline Index checked_mul(Index a, Index b) {
    if (b && a > std::numeric_limits<Index>::max() / b) throw BudgetExceeded("gadget size overflows 64-bit indices");
    return a * b;
}

}  // namespace detail

inline Index r_value(Index m, Index n) { return std::min(m, n) + 1; }

inline GadgetOutput departition_axis(const GadgetOutput& in, std::size_t axis) {
    auto perm = detail::axis_last(axis);
    const Partition3& p = in.part;
    Index m = in.cube.dim(perm[0]), n = in.cube.dim(perm[1]);
    DepartitionStage st;
    st.axis = axis;
    st.r = r_value(m, n);
    st.input_partition = p;
    const auto& thick = p.sizes(axis);
    Index h = st.r;
    for (std::size_t g = 0; g < thick.size(); ++g) {
        if (g) h = detail::checked_mul(h, 2);
        st.band.push_back(h);
        st.delta_rows = detail::checked_add(st.delta_rows, h);
        st.delta_cols = detail::checked_add(st.delta_cols, detail::checked_mul(thick[g], h));
    }
    Coord rd{detail::checked_add(m, st.delta_rows), detail::checked_add(n, st.delta_cols), in.cube.dim(axis)};
    SparseCube rot = in.cube.permuted(perm).shifted({st.delta_rows, st.delta_cols, 0}, rd);
    Index row0 = 0, col0 = 0, k = 0;
    for (std::size_t g = 0; g < thick.size(); ++g) {
        for (Index s = 0; s < thick[g]; ++s, ++k) {
            rot.add({{row0, col0, k}, st.band[g], 1, st.band[g] == 1 ? RunDir::Point : RunDir::D01});
            col0 += st.band[g];
        }
        row0 += st.band[g];
    }
    auto inv = detail::inverse_perm(perm);
    GadgetOutput out;
    out.cube = rot.permuted(inv);
    std::array<std::vector<std::size_t>, 3> sizes;
    sizes[axis] = {in.cube.dim(axis)};
    sizes[perm[0]] = p.sizes(perm[0]);
    sizes[perm[0]][0] += st.delta_rows;
    sizes[perm[1]] = p.sizes(perm[1]);
    sizes[perm[1]][0] += st.delta_cols;
    out.part = Partition3(sizes);
    for (auto e : in.placement) {
        e.box[perm[0]].first += st.delta_rows;
        e.box[perm[0]].second += st.delta_rows;
        e.box[perm[1]].first += st.delta_cols;
        e.box[perm[1]].second += st.delta_cols;
        out.placement.push_back(e);
    }
    out.stages = in.stages;
    out.stages.push_back(std::move(st));
    out.meta = in.meta;
    return out;
}

inline GadgetOutput with_input_placement(const BlockedCube& a, const std::string& id) {
    GadgetOutput g = wrap_dense(a);
    g.placement.push_back({id, whole_box(a.cube.dims())});
    return g;
}

inline GadgetOutput departition_frontal(const BlockedCube& a) {
    auto g = departition_axis(with_input_placement(a, "A"), 2);
    g.meta["gadget"] = "departition";
    return g;
}

// Frontal, then lateral, then horizontal.
inline GadgetOutput departition_all(const GadgetOutput& in) {
    auto g = departition_axis(in, 2);
    g = departition_axis(g, 1);
    return departition_axis(g, 0);
}

inline GadgetOutput departition_all(const BlockedCube& a) {
    auto g = departition_all(with_input_placement(a, "A"));
    g.meta["gadget"] = "departition-all";
    return g;
}

// Maps a block witness of the stage input to one of the stage output.
inline KronBlockWitness transport_departition(const DepartitionStage& st, const KronBlockWitness& w) {
    const Partition3& p = st.input_partition;
    for (std::size_t a = 0; a < 3; ++a) {
        if (w.blocks[a].size() != p.count(a)) throw DimensionError("transport: witness/partition mismatch");
        for (std::size_t s = 0; s < p.count(a); ++s)
            if (w.blocks[a][s].size() != p.size(a, s)) throw DimensionError("transport: block size mismatch");
    }
    Field f = w.blocks[st.axis].empty() ? Field() : w.blocks[st.axis][0].field();
    for (auto& v : w.blocks)
        if (!v.empty()) f = v[0].field();
    auto perm = detail::axis_last(st.axis);
    KronBlockWitness out;
    KronSum u(f);
    for (auto& b : w.blocks[st.axis]) u.append(b);
    out.blocks[st.axis] = {u};

    auto rows = w.blocks[perm[0]];
    KronSum r0 = KronSum::identity(f, st.delta_rows);
    r0.append(rows[0]);
    rows[0] = r0;
    out.blocks[perm[0]] = rows;

    auto cols = w.blocks[perm[1]];
    KronSum c0(f);
    for (std::size_t g = 0; g < w.blocks[st.axis].size(); ++g)
        c0.append(w.blocks[st.axis][g].inverse_transpose().kron_identity(st.band[g]));
    c0.append(cols[0]);
    cols[0] = c0;
    out.blocks[perm[1]] = cols;
    return out;
}

inline KronBlockWitness transport_stages(const std::vector<DepartitionStage>& stages, KronBlockWitness w,
                                         std::size_t first = 0) {
    for (std::size_t i = first; i < stages.size(); ++i) w = transport_departition(stages[i], w);
    return w;
}

}  // namespace wild
