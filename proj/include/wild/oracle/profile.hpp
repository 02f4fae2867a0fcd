#pragma once
// Equivalence invariants: flattening ranks and mix-rank multisets. Unequal
// profiles certify inequivalence; equal profiles prove nothing.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "../cube.hpp"
#include "../sparse.hpp"

namespace wild {

struct InvariantProfile {
    std::array<std::size_t, 3> flattening_ranks{};
    // sorted ranks of sum_i u_i A_i over nonzero u, for slices along each axis
    std::array<std::optional<std::vector<std::size_t>>, 3> mix_ranks;
    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

// Matrix with one row per coordinate of `axis`.
inline Matrix flattening(const Cube& a, std::size_t axis) {
    auto ss = slices(a, static_cast<SliceKind>(axis));
    std::size_t cols = axis == 0 ? a.dim(1) * a.dim(2) : axis == 1 ? a.dim(0) * a.dim(2) : a.dim(0) * a.dim(1);
    Matrix m(a.field(), a.dim(axis), cols);
    for (std::size_t x = 0; x < ss.size(); ++x)
        for (std::size_t r = 0; r < ss[x].rows(); ++r)
            for (std::size_t c = 0; c < ss[x].cols(); ++c) m(x, r * ss[x].cols() + c) = ss[x](r, c);
    return m;
}

inline InvariantProfile invariant_profile(const Cube& a, std::uint64_t budget = 100'000) {
    InvariantProfile p;
    const Field& f = a.field();
    for (std::size_t ax = 0; ax < 3; ++ax) {
        p.flattening_ranks[ax] = rank(flattening(a, ax));
        std::size_t len = a.dim(ax);
        if (len == 0 || len > 3) continue;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < len; ++i) combos *= f.p();
        if (combos > budget) continue;
        auto ss = slices(a, static_cast<SliceKind>(ax));
        std::vector<std::size_t> ranks;
        for (std::uint64_t code = 1; code < combos; ++code) {
            Matrix m(f, ss[0].rows(), ss[0].cols());
            std::uint64_t c = code;
            for (std::size_t i = 0; i < len; ++i, c /= f.p())
                if (c % f.p()) m = m + ss[i].scaled(static_cast<Elem>(c % f.p()));
            ranks.push_back(rank(m));
        }
        std::sort(ranks.begin(), ranks.end());
        p.mix_ranks[ax] = ranks;
    }
    return p;
}

// Rank of the axis flattening of a structured cube by sparse elimination.
// Returns nullopt when the stored points or the elimination work exceed `budget`.
inline std::optional<std::size_t> sparse_flattening_rank(const SparseCube& a, std::size_t axis, Index budget) {
    if (a.stored_points() > budget) return std::nullopt;
    const Field& f = a.field();
    using Col = std::pair<Index, Index>;
    using Row = std::vector<std::pair<Col, Elem>>;
    std::map<Index, std::map<Col, Elem>> rows;
    std::size_t o1 = axis == 0 ? 1 : 0, o2 = axis == 2 ? 1 : 2;
    for (auto& r : a.runs())
        for (Index s = 0; s < r.length; ++s) {
            Coord c = r.at(s);
            auto& cell = rows[c[axis]][{c[o1], c[o2]}];
            cell = f.add(cell, r.value);
        }
    std::map<Col, Row> pivots;
    Index work = 0;
    for (auto& [x, entries] : rows) {
        Row row;
        for (auto& [c, v] : entries)
            if (v) row.emplace_back(c, v);
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                Elem il = f.inv(row.front().second);
                for (auto& e : row) e.second = f.mul(e.second, il);
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            // row -= row[0] * pivot (pivot is monic)
            const Row& pv = it->second;
            Elem coef = row.front().second;
            Row merged;
            merged.reserve(row.size() + pv.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < pv.size()) {
                if (j == pv.size() || (i < row.size() && row[i].first < pv[j].first)) {
                    merged.push_back(row[i++]);
                } else if (i == row.size() || pv[j].first < row[i].first) {
                    merged.emplace_back(pv[j].first, f.neg(f.mul(coef, pv[j].second)));
                    ++j;
                } else {
                    Elem v = f.sub(row[i].second, f.mul(coef, pv[j].second));
                    if (v) merged.emplace_back(row[i].first, v);
                    ++i, ++j;
                }
            }
            work += merged.size() + 1;
            if (work > budget) return std::nullopt;
            row = std::move(merged);
        }
    }
    return pivots.size();
}

enum class ProfileVerdict { Differ, Inconclusive };

struct ProfileReport {
    ProfileVerdict verdict = ProfileVerdict::Inconclusive;
    std::string detail;
};

// Compares flattening ranks of two structured cubes within a budget.
inline ProfileReport compare_sparse_profiles(const SparseCube& a, const SparseCube& b, Index budget) {
    if (a.dims() != b.dims()) return {ProfileVerdict::Differ, "dimensions differ"};
    bool all = true;
    for (std::size_t ax = 0; ax < 3; ++ax) {
        auto ra = sparse_flattening_rank(a, ax, budget);
        auto rb = ra ? sparse_flattening_rank(b, ax, budget) : std::nullopt;
        if (!ra || !rb) {
            all = false;
            continue;
        }
        if (*ra != *rb)
            return {ProfileVerdict::Differ, "flattening rank along axis " + std::to_string(ax + 1) + ": " +
                                                std::to_string(*ra) + " vs " + std::to_string(*rb)};
    }
    return {ProfileVerdict::Inconclusive, all ? "profiles agree" : "profile computation exceeded budget"};
}

inline ProfileReport compare_profiles(const Cube& a, const Cube& b, std::uint64_t budget = 100'000) {
    if (a.dims() != b.dims()) return {ProfileVerdict::Differ, "dimensions differ"};
    auto pa = invariant_profile(a, budget), pb = invariant_profile(b, budget);
    if (pa.flattening_ranks != pb.flattening_ranks) return {ProfileVerdict::Differ, "flattening ranks differ"};
    if (pa.mix_ranks != pb.mix_ranks) return {ProfileVerdict::Differ, "mix-rank multisets differ"};
    return {ProfileVerdict::Inconclusive, "profiles agree"};
}

}  // namespace wild
