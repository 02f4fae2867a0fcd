#pragma once
// Structured storage for very large gadget outputs.
//
// A SparseCube is a list of runs: a run puts the same value on the points
// start + s*(e_a + e_b), s < length, for two moving axes a < b (or a single
// point). A KronSum is a block-diagonal matrix whose blocks are M (x) I_w.
// The action of KronSum witnesses maps runs to runs whenever each run stays
// inside one w-cell on both moving axes, which holds for every run the
// departition construction produces.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "blocks.hpp"

namespace wild {

using Index = std::uint64_t;
using Coord = std::array<Index, 3>;

enum class RunDir : std::uint8_t { Point = 0, D01 = 1, D02 = 2, D12 = 3 };

inline std::array<bool, 3> moving_axes(RunDir d) {
    switch (d) {
        case RunDir::D01: return {true, true, false};
        case RunDir::D02: return {true, false, true};
        case RunDir::D12: return {false, true, true};
        default: return {false, false, false};
    }
}

inline RunDir run_dir_from(const std::array<bool, 3>& mv) {
    if (mv[0] && mv[1] && !mv[2]) return RunDir::D01;
    if (mv[0] && !mv[1] && mv[2]) return RunDir::D02;
    if (!mv[0] && mv[1] && mv[2]) return RunDir::D12;
    return RunDir::Point;
}

struct Run {
    Coord start{};
    Index length = 1;
    Elem value = 0;
    RunDir dir = RunDir::Point;

    Coord at(Index s) const {
        auto mv = moving_axes(dir);
        return {start[0] + (mv[0] ? s : 0), start[1] + (mv[1] ? s : 0), start[2] + (mv[2] ? s : 0)};
    }
    friend bool operator==(const Run&, const Run&) = default;
};

inline bool run_less(const Run& x, const Run& y) {
    return std::tie(x.dir, x.start, x.length) < std::tie(y.dir, y.start, y.length);
}

// Sub-interval [lo, hi) of parameters whose points lie in the box.
inline std::pair<Index, Index> run_box_interval(const Run& r, const std::array<std::pair<Index, Index>, 3>& box) {
    auto mv = moving_axes(r.dir);
    Index lo = 0, hi = r.length;
    for (std::size_t ax = 0; ax < 3; ++ax) {
        auto [b, e] = box[ax];
        if (mv[ax]) {
            if (e <= r.start[ax]) return {0, 0};
            lo = std::max(lo, b > r.start[ax] ? b - r.start[ax] : 0);
            hi = std::min(hi, e - r.start[ax]);
        } else if (r.start[ax] < b || r.start[ax] >= e) {
            return {0, 0};
        }
    }
    if (lo >= hi) return {0, 0};
    return {lo, hi};
}

class SparseCube {
public:
    SparseCube() = default;
    SparseCube(Field f, Coord dims) : f_(f), dims_(dims) {}

    static SparseCube from_dense(const Cube& c) {
        SparseCube s(c.field(), {c.dim(0), c.dim(1), c.dim(2)});
        for (std::size_t i = 0; i < c.dim(0); ++i)
            for (std::size_t j = 0; j < c.dim(1); ++j)
                for (std::size_t k = 0; k < c.dim(2); ++k)
                    if (c(i, j, k)) s.runs_.push_back({{i, j, k}, 1, c(i, j, k), RunDir::Point});
        return s;
    }

    const Field& field() const { return f_; }
    const Coord& dims() const { return dims_; }
    Index dim(std::size_t a) const { return dims_[a]; }
    const std::vector<Run>& runs() const { return runs_; }
    std::vector<Run>& runs() { return runs_; }

    void add(const Run& r) {
        if (r.length == 0 || r.value == 0) return;
        Coord last = r.at(r.length - 1);
        for (std::size_t a = 0; a < 3; ++a)
            if (last[a] >= dims_[a]) throw DimensionError("run leaves the array");
        runs_.push_back(r);
    }

    long double volume() const {
        return static_cast<long double>(dims_[0]) * static_cast<long double>(dims_[1]) *
               static_cast<long double>(dims_[2]);
    }

    // Total stored point count (with multiplicity).
    Index stored_points() const {
        Index n = 0;
        for (auto& r : runs_) n += r.length;
        return n;
    }

    Cube to_dense(std::size_t limit = 50'000'000) const {
        if (volume() > static_cast<long double>(limit)) throw BudgetExceeded("array too large to materialize densely");
        Cube c(f_, dims_[0], dims_[1], dims_[2]);
        for (auto& r : runs_)
            for (Index s = 0; s < r.length; ++s) {
                Coord x = r.at(s);
                Elem& e = c(x[0], x[1], x[2]);
                e = f_.add(e, r.value);
            }
        return c;
    }

    // Dense copy of a box (half-open ranges).
    Cube extract(const std::array<std::pair<Index, Index>, 3>& box) const {
        for (std::size_t a = 0; a < 3; ++a)
            if (box[a].first > box[a].second || box[a].second > dims_[a]) throw DimensionError("extract: bad box");
        Cube c(f_, box[0].second - box[0].first, box[1].second - box[1].first, box[2].second - box[2].first);
        for (auto& r : runs_) {
            auto [lo, hi] = run_box_interval(r, box);
            for (Index s = lo; s < hi; ++s) {
                Coord x = r.at(s);
                Elem& e = c(x[0] - box[0].first, x[1] - box[1].first, x[2] - box[2].first);
                e = f_.add(e, r.value);
            }
        }
        return c;
    }

    SparseCube shifted(Coord offset, Coord new_dims) const {
        SparseCube out(f_, new_dims);
        for (auto r : runs_) {
            for (std::size_t a = 0; a < 3; ++a) r.start[a] += offset[a];
            out.add(r);
        }
        return out;
    }

    // Output axis q is input axis perm[q].
    SparseCube permuted(const std::array<std::size_t, 3>& perm) const {
        SparseCube out(f_, {dims_[perm[0]], dims_[perm[1]], dims_[perm[2]]});
        out.runs_.reserve(runs_.size());
        for (auto& r : runs_) {
            auto mv = moving_axes(r.dir);
            Run n;
            n.length = r.length;
            n.value = r.value;
            std::array<bool, 3> nm{};
            for (std::size_t q = 0; q < 3; ++q) {
                n.start[q] = r.start[perm[q]];
                nm[q] = mv[perm[q]];
            }
            n.dir = r.length == 1 ? RunDir::Point : run_dir_from(nm);
            out.runs_.push_back(n);
        }
        return out;
    }

    // Length-1 runs become points, equal geometry is merged, zeros dropped.
    SparseCube canonical() const {
        std::vector<Run> rs;
        rs.reserve(runs_.size());
        for (auto r : runs_) {
            if (r.length == 0 || r.value == 0) continue;
            if (r.length == 1) r.dir = RunDir::Point;
            rs.push_back(r);
        }
        std::sort(rs.begin(), rs.end(), run_less);
        SparseCube out(f_, dims_);
        for (auto& r : rs) {
            if (!out.runs_.empty()) {
                Run& b = out.runs_.back();
                if (b.dir == r.dir && b.start == r.start && b.length == r.length) {
                    b.value = f_.add(b.value, r.value);
                    continue;
                }
            }
            out.runs_.push_back(r);
        }
        std::erase_if(out.runs_, [](const Run& r) { return r.value == 0; });
        return out;
    }

    // Sound equality test: identical canonical run lists imply equal arrays.
    friend bool same_runs(const SparseCube& a, const SparseCube& b) {
        if (!(a.f_ == b.f_) || a.dims_ != b.dims_) return false;
        return a.canonical().runs_ == b.canonical().runs_;
    }

private:
    Field f_;
    Coord dims_{0, 0, 0};
    std::vector<Run> runs_;
};

// M (x) I_width
struct KronBlock {
    Matrix m;
    Index width = 1;
};

class KronSum {
public:
    KronSum() = default;
    explicit KronSum(Field f) : f_(f) {}

    static KronSum identity(Field f, Index n) {
        KronSum k(f);
        if (n) k.append({Matrix::identity(f, 1), n});
        return k;
    }
    static KronSum dense(const Matrix& m) {
        KronSum k(m.field());
        if (m.rows()) k.append({m, 1});
        return k;
    }

    void append(KronBlock b) {
        if (!b.m.square()) throw DimensionError("kron block must be square");
        if (b.m.rows() == 0 || b.width == 0) return;
        offsets_.push_back(size_);
        size_ += static_cast<Index>(b.m.rows()) * b.width;
        blocks_.push_back(std::move(b));
    }
    void append(const KronSum& other) {
        for (auto& b : other.blocks_) append(b);
    }

    const Field& field() const { return f_; }
    Index size() const { return size_; }
    const std::vector<KronBlock>& blocks() const { return blocks_; }

    KronSum inverse_transpose() const {
        KronSum k(f_);
        for (auto& b : blocks_) k.append({contragredient(b.m), b.width});
        return k;
    }

    // (this) (x) I_w, with the row index of this as the major coordinate.
    KronSum kron_identity(Index w) const {
        KronSum k(f_);
        for (auto& b : blocks_) k.append({b.m, b.width * w});
        return k;
    }

    KronSum transpose() const {
        KronSum k(f_);
        for (auto& b : blocks_) k.append({b.m.transpose(), b.width});
        return k;
    }

    struct Cell {
        std::size_t block;
        Index base;   // block offset
        Index row;    // row of the small matrix
        Index shift;  // offset inside the w-cell
        Index cell_end;
    };

    Cell locate(Index x) const {
        if (x >= size_) throw DimensionError("kron index out of range");
        auto it = std::upper_bound(offsets_.begin(), offsets_.end(), x);
        std::size_t b = static_cast<std::size_t>(it - offsets_.begin()) - 1;
        Index rel = x - offsets_[b];
        Index w = blocks_[b].width;
        Index row = rel / w, shift = rel % w;
        return {b, offsets_[b], row, shift, offsets_[b] + row * w + w};
    }

    // Nonzero entries (column, value) of row x.
    std::vector<std::pair<Index, Elem>> row(Index x) const {
        Cell c = locate(x);
        return row_of(c);
    }
    std::vector<std::pair<Index, Elem>> row_of(const Cell& c) const {
        const KronBlock& b = blocks_[c.block];
        std::vector<std::pair<Index, Elem>> out;
        for (std::size_t j = 0; j < b.m.cols(); ++j) {
            Elem v = b.m(static_cast<std::size_t>(c.row), j);
            if (v) out.emplace_back(c.base + j * b.width + c.shift, v);
        }
        return out;
    }

    bool invertible() const {
        for (auto& b : blocks_)
            if (!is_invertible(b.m)) return false;
        return true;
    }

    Matrix to_dense(std::size_t limit = 4096) const {
        if (size_ > limit) throw BudgetExceeded("kron sum too large to materialize");
        Matrix m(f_, size_, size_);
        for (Index x = 0; x < size_; ++x)
            for (auto [c, v] : row(x)) m(x, c) = v;
        return m;
    }

private:
    Field f_;
    std::vector<KronBlock> blocks_;
    std::vector<Index> offsets_;
    Index size_ = 0;
};

using KronWitness = std::array<KronSum, 3>;

// Per-stratum KronSum blocks for a partitioned array.
struct KronBlockWitness {
    std::array<std::vector<KronSum>, 3> blocks;

    static KronBlockWitness from_dense(const BlockWitness& w, Field f) {
        KronBlockWitness k;
        for (std::size_t a = 0; a < 3; ++a)
            for (auto& m : w.blocks[a]) {
                KronSum s(f);
                if (m.rows()) s.append({m, 1});
                k.blocks[a].push_back(s);
            }
        return k;
    }

    KronWitness assembled(Field f) const {
        KronWitness out{KronSum(f), KronSum(f), KronSum(f)};
        for (std::size_t a = 0; a < 3; ++a)
            for (auto& b : blocks[a]) out[a].append(b);
        return out;
    }
};

// Right action of a KronSum witness on a run list.
inline SparseCube apply_kron(const SparseCube& a, const KronWitness& w) {
    for (std::size_t ax = 0; ax < 3; ++ax)
        if (w[ax].size() != a.dim(ax)) throw DimensionError("kron witness does not match array");
    const Field& f = a.field();
    SparseCube out(f, a.dims());
    auto& outr = out.runs();
    for (const Run& r : a.runs()) {
        auto mv = moving_axes(r.dir);
        Index s = 0;
        while (s < r.length) {
            Coord x = r.at(s);
            std::array<KronSum::Cell, 3> cells{};
            Index piece = r.length - s;
            for (std::size_t ax = 0; ax < 3; ++ax) {
                cells[ax] = w[ax].locate(x[ax]);
                if (mv[ax]) piece = std::min(piece, cells[ax].cell_end - x[ax]);
            }
            auto r0 = w[0].row_of(cells[0]);
            auto r1 = w[1].row_of(cells[1]);
            auto r2 = w[2].row_of(cells[2]);
            for (auto [c0, v0] : r0)
                for (auto [c1, v1] : r1) {
                    Elem v01 = f.mul(f.mul(v0, v1), r.value);
                    for (auto [c2, v2] : r2)
                        outr.push_back({{c0, c1, c2}, piece, f.mul(v01, v2), piece == 1 ? RunDir::Point : r.dir});
                }
            s += piece;
        }
    }
    return out;
}

struct LineKey {
    RunDir dir;
    Index fixed;
    long long diag;
    friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

inline std::pair<LineKey, Index> line_of(const Run& r) {
    switch (r.dir) {
        case RunDir::D01:
            return {{r.dir, r.start[2], static_cast<long long>(r.start[0]) - static_cast<long long>(r.start[1])},
                    r.start[0]};
        case RunDir::D02:
            return {{r.dir, r.start[1], static_cast<long long>(r.start[0]) - static_cast<long long>(r.start[2])},
                    r.start[0]};
        default:
            return {{r.dir, r.start[0], static_cast<long long>(r.start[1]) - static_cast<long long>(r.start[2])},
                    r.start[1]};
    }
}

inline std::size_t fixed_axis(RunDir d) {
    auto mv = moving_axes(d);
    for (std::size_t a = 0; a < 3; ++a)
        if (!mv[a]) return a;
    return 0;
}

// Locates a pair of runs sharing a point; nullopt when all runs are disjoint.
// Throws BudgetExceeded when the candidate count passes `budget`.
inline std::optional<std::string> find_overlap(const SparseCube& c, Index budget = 200'000'000) {
    std::vector<Run> runs;
    for (auto r : c.runs()) {
        if (r.length == 0) continue;
        if (r.length == 1) r.dir = RunDir::Point;
        runs.push_back(r);
    }
    auto describe = [](const Coord& x) {
        return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + ")";
    };
    // points
    std::vector<Coord> pts;
    for (auto& r : runs)
        if (r.dir == RunDir::Point) pts.push_back(r.start);
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i] == pts[i - 1]) return "duplicate point " + describe(pts[i]);
    // parallel runs on a common line
    std::map<LineKey, std::vector<std::pair<Index, Index>>> lines;
    for (auto& r : runs)
        if (r.dir != RunDir::Point) {
            auto [k, p] = line_of(r);
            lines[k].emplace_back(p, p + r.length);
        }
    for (auto& [k, iv] : lines) {
        std::sort(iv.begin(), iv.end());
        for (std::size_t i = 1; i < iv.size(); ++i)
            if (iv[i].first < iv[i - 1].second) return "overlapping parallel runs";
    }
    // points on runs
    for (auto& x : pts)
        for (RunDir d : {RunDir::D01, RunDir::D02, RunDir::D12}) {
            Run probe{x, 1, 1, d};
            auto [k, p] = line_of(probe);
            auto it = lines.find(k);
            if (it == lines.end()) continue;
            auto& iv = it->second;
            auto j = std::upper_bound(iv.begin(), iv.end(), std::pair<Index, Index>{p, UINT64_MAX});
            if (j != iv.begin() && std::prev(j)->second > p) return "point " + describe(x) + " lies on a run";
        }
    // crossing runs of different directions
    std::array<std::vector<const Run*>, 4> by_dir;
    for (auto& r : runs) by_dir[static_cast<int>(r.dir)].push_back(&r);
    Index spent = 0;
    const RunDir dirs[3] = {RunDir::D01, RunDir::D02, RunDir::D12};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            // iterate X over Y's fixed coordinate (which X moves along)
            auto cost = [&](RunDir dx, RunDir dy, std::vector<const Run*>& ys) {
                std::size_t fy = fixed_axis(dy);
                std::sort(ys.begin(), ys.end(), [&](const Run* u, const Run* v) { return u->start[fy] < v->start[fy]; });
                Index total = 0;
                for (auto* x : by_dir[static_cast<int>(dx)]) {
                    auto lo = std::lower_bound(ys.begin(), ys.end(), x->start[fy],
                                               [&](const Run* u, Index v) { return u->start[fy] < v; });
                    auto hi = std::lower_bound(ys.begin(), ys.end(), x->start[fy] + x->length,
                                               [&](const Run* u, Index v) { return u->start[fy] < v; });
                    total += static_cast<Index>(hi - lo);
                }
                return total;
            };
            RunDir dx = dirs[i], dy = dirs[j];
            auto& xs0 = by_dir[static_cast<int>(dx)];
            auto& ys0 = by_dir[static_cast<int>(dy)];
            if (xs0.empty() || ys0.empty()) continue;
            Index c1 = cost(dx, dy, ys0);
            Index c2 = cost(dy, dx, xs0);
            if (c2 < c1) std::swap(dx, dy);
            auto& xs = by_dir[static_cast<int>(dx)];
            auto& ys = by_dir[static_cast<int>(dy)];
            std::size_t fy = fixed_axis(dy);
            std::sort(ys.begin(), ys.end(), [&](const Run* u, const Run* v) { return u->start[fy] < v->start[fy]; });
            spent += std::min(c1, c2);
            if (spent > budget) throw BudgetExceeded("overlap check exceeds budget");
            for (auto* x : xs) {
                auto lo = std::lower_bound(ys.begin(), ys.end(), x->start[fy],
                                           [&](const Run* u, Index v) { return u->start[fy] < v; });
                for (auto it = lo; it != ys.end() && (*it)->start[fy] < x->start[fy] + x->length; ++it) {
                    Coord pt = x->at((*it)->start[fy] - x->start[fy]);
                    std::array<std::pair<Index, Index>, 3> box{{{pt[0], pt[0] + 1}, {pt[1], pt[1] + 1}, {pt[2], pt[2] + 1}}};
                    auto [a, b] = run_box_interval(**it, box);
                    if (a < b) return "crossing runs at " + describe(pt);
                }
            }
        }
    return std::nullopt;
}

}  // namespace wild
