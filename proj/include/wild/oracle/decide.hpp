#pragma once
// Exact deciders for plain, block, linked and representation equivalence.

#include <functional>
#include <optional>
#include <string>

#include "../birep.hpp"
#include "../gadgets/matrix.hpp"
#include "../links.hpp"
#include "orbit.hpp"
#include "pencil.hpp"

namespace wild {

struct Decision {
    bool equivalent = false;
    std::optional<EquivWitness> witness;
    std::string method;
};

struct BlockDecision {
    bool equivalent = false;
    std::optional<BlockWitness> witness;
    std::string method;
};

namespace detail {

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

inline std::uint64_t block_group_order(const Partition3& p, std::size_t axis, std::uint32_t q) {
    std::uint64_t o = 1;
    for (auto s : p.sizes(axis)) o = sat_mul(o, gl_order(s, q));
    return o;
}

// Odometer over tuples of per-stratum GL elements.
inline void for_each_block_tuple(Field f, const std::vector<std::size_t>& sizes, std::uint64_t budget,
                                 const std::function<bool(const std::vector<Matrix>&)>& visit) {
    std::vector<std::vector<Matrix>> lists;
    for (auto s : sizes) lists.push_back(gl_enumerate(f, s, budget));
    std::vector<std::size_t> idx(sizes.size(), 0);
    std::vector<Matrix> cur;
    for (auto& l : lists) cur.push_back(l[0]);
    for (;;) {
        if (!visit(cur)) return;
        std::size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < lists[i].size()) {
                cur[i] = lists[i][idx[i]];
                break;
            }
            idx[i] = 0;
            cur[i] = lists[i][0];
            ++i;
        }
        if (i == idx.size()) return;
    }
}

// Matrix whose rows run over the other coordinates and columns over the
// axis coordinates inside [r.begin, r.end).
inline Matrix axis_unfolding(const Cube& c, std::size_t axis, Range r) {
    std::array<std::size_t, 2> others{};
    for (std::size_t a = 0, k = 0; a < 3; ++a)
        if (a != axis) others[k++] = a;
    std::size_t n0 = c.dim(others[0]), n1 = c.dim(others[1]);
    Matrix m(c.field(), n0 * n1, r.size());
    for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t y = 0; y < n1; ++y)
            for (std::size_t z = 0; z < r.size(); ++z) {
                std::array<std::size_t, 3> at{};
                at[others[0]] = x;
                at[others[1]] = y;
                at[axis] = r.begin + z;
                m(x * n1 + y, z) = c(at[0], at[1], at[2]);
            }
    return m;
}

// An invertible matrix whose columns lie in u0_k + span(K), if one exists.
inline std::optional<Matrix> invertible_in_affine(const Matrix& u0, const Matrix& k) {
    Field f = u0.field();
    std::size_t d = u0.rows(), z = k.cols();
    std::vector<std::size_t> chosen;
    Matrix span = k;
    std::size_t rk = rank(span);
    for (std::size_t c = 0; c < d; ++c) {
        Matrix ext(f, d, span.cols() + 1);
        ext.set_block(0, 0, span);
        ext.set_block(0, span.cols(), u0.block(0, c, d, 1));
        std::size_t r2 = rank(ext);
        if (r2 > rk) {
            span = ext;
            rk = r2;
            chosen.push_back(c);
        }
    }
    if (chosen.size() + z < d) return std::nullopt;
    Matrix base(f, d, chosen.size() + z);
    for (std::size_t i = 0; i < chosen.size(); ++i) base.set_block(0, i, u0.block(0, chosen[i], d, 1));
    base.set_block(0, chosen.size(), k);
    Matrix v = u0;
    std::size_t next = 0;
    for (std::size_t c = 0; c < d; ++c) {
        if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
        auto sol = solve(base, u0.block(0, c, d, 1));
        if (!sol) throw std::logic_error("affine completion: column outside span");
        Matrix y = sol->particular.block(chosen.size(), 0, z, 1);
        Matrix col = u0.block(0, c, d, 1) - k * y + k.block(0, next++, d, 1);
        v.set_block(0, c, col);
    }
    if (!is_invertible(v)) throw std::logic_error("affine completion failed");
    return v;
}

// Block-diagonal U on `axis` with C x_axis U = B, if any.
inline std::optional<std::vector<Matrix>> solve_block_mix(const Cube& c, const Cube& b, std::size_t axis,
                                                          const Partition3& p) {
    std::vector<Matrix> out;
    for (std::size_t s = 0; s < p.count(axis); ++s) {
        Range r = p.range(axis, s);
        Matrix cm = axis_unfolding(c, axis, r), bm = axis_unfolding(b, axis, r);
        auto sol = solve(cm, bm);
        if (!sol) return std::nullopt;
        auto u = invertible_in_affine(sol->particular, sol->kernel);
        if (!u) return std::nullopt;
        out.push_back(*u);
    }
    return out;
}

inline Matrix embed_block(Field f, const Partition3& p, std::size_t axis, std::size_t s, const Matrix& g) {
    Matrix m = Matrix::identity(f, p.length(axis));
    m.set_block(p.offset(axis, s), p.offset(axis, s), g);
    return m;
}

inline BlockWitness split_blocks(const EquivWitness& w, const Partition3& p) {
    BlockWitness out;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t s = 0; s < p.count(a); ++s)
            out.blocks[a].push_back(w[a].block(p.offset(a, s), p.offset(a, s), p.size(a, s), p.size(a, s)));
    return out;
}

inline void check_conformal(const BlockedCube& a, const BlockedCube& b) {
    if (!(a.field() == b.field())) throw DimensionError("arrays over different fields");
    if (!conformal(a, b)) throw DimensionError("arrays are not conformal");
}

inline std::optional<std::size_t> length_two_axis(const Dims& d) {
    for (std::size_t a : {2u, 1u, 0u})
        if (d[a] == 2) return a;
    return std::nullopt;
}

// Block-diagonal P, Q (rows, cols) with P C_k = B_k Q for both slices and P, Q
// invertible, found by enumerating the solution space. Returns (R, S) = (P^T, Q^{-1}).
inline std::optional<std::pair<std::vector<Matrix>, std::vector<Matrix>>> block_strict_pencil(
    const std::vector<Matrix>& cs, const std::vector<Matrix>& bs, const std::vector<std::size_t>& rsz,
    const std::vector<std::size_t>& csz, std::uint64_t budget) {
    Field f = cs[0].field();
    std::size_t m = cs[0].rows(), n = cs[0].cols();
    // variable layout: P blocks then Q blocks, row-major within a block
    std::vector<std::size_t> roff{0}, coff{0}, pvar{0}, qvar{0};
    for (auto s : rsz) roff.push_back(roff.back() + s), pvar.push_back(pvar.back() + s * s);
    for (auto s : csz) coff.push_back(coff.back() + s), qvar.push_back(qvar.back() + s * s);
    std::size_t np = pvar.back(), nv = np + qvar.back();
    auto stratum = [](const std::vector<std::size_t>& off, std::size_t x) {
        std::size_t s = 0;
        while (x >= off[s + 1]) ++s;
        return s;
    };
    Matrix eq(f, cs.size() * m * n, nv);
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t row = (k * m + i) * n + j;
                std::size_t a = stratum(roff, i);
                for (std::size_t l = roff[a]; l < roff[a + 1]; ++l) {
                    std::size_t var = pvar[a] + (i - roff[a]) * rsz[a] + (l - roff[a]);
                    eq(row, var) = f.add(eq(row, var), cs[k](l, j));
                }
                std::size_t b = stratum(coff, j);
                for (std::size_t l = coff[b]; l < coff[b + 1]; ++l) {
                    std::size_t var = np + qvar[b] + (l - coff[b]) * csz[b] + (j - coff[b]);
                    eq(row, var) = f.sub(eq(row, var), bs[k](i, l));
                }
            }
    Matrix ker = nullspace(eq);
    std::size_t h = ker.cols();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < h; ++i) {
        total = sat_mul(total, f.p());
        if (total > budget) throw BudgetExceeded("hom space too large for enumeration");
    }
    std::vector<Elem> coef(h, 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        std::uint64_t c = it;
        for (std::size_t i = 0; i < h; ++i) coef[i] = static_cast<Elem>(c % f.p()), c /= f.p();
        std::vector<Elem> x(nv, 0);
        for (std::size_t i = 0; i < h; ++i)
            if (coef[i])
                for (std::size_t v = 0; v < nv; ++v) x[v] = f.add(x[v], f.mul(coef[i], ker(v, i)));
        std::vector<Matrix> rs, ss;
        bool ok = true;
        for (std::size_t a = 0; a < rsz.size() && ok; ++a) {
            Matrix pm(f, rsz[a], rsz[a]);
            for (std::size_t u = 0; u < rsz[a] * rsz[a]; ++u) pm(u / rsz[a], u % rsz[a]) = x[pvar[a] + u];
            if (!is_invertible(pm)) ok = false;
            else rs.push_back(pm.transpose());
        }
        for (std::size_t b = 0; b < csz.size() && ok; ++b) {
            Matrix qm(f, csz[b], csz[b]);
            for (std::size_t u = 0; u < csz[b] * csz[b]; ++u) qm(u / csz[b], u % csz[b]) = x[np + qvar[b] + u];
            auto qi = try_inverse(qm);
            if (!qi) ok = false;
            else ss.push_back(*qi);
        }
        if (ok) return std::make_pair(rs, ss);
    }
    return std::nullopt;
}

}  // namespace detail

inline BlockDecision decide_block_exhaustive(const BlockedCube& a, const BlockedCube& b, std::uint64_t budget) {
    detail::check_conformal(a, b);
    Field f = a.field();
    const Partition3& p = a.part;
    std::size_t solve_axis = 0;
    std::array<std::uint64_t, 3> order{};
    for (std::size_t ax = 0; ax < 3; ++ax) {
        order[ax] = detail::block_group_order(p, ax, f.p());
        if (order[ax] > order[solve_axis]) solve_axis = ax;
    }
    std::size_t e1 = solve_axis == 0 ? 1 : 0, e2 = solve_axis == 2 ? 1 : 2;
    if (detail::sat_mul(order[e1], order[e2]) > budget)
        throw BudgetExceeded("exhaustive enumeration exceeds budget");
    BlockDecision d;
    d.method = "exhaustive";
    detail::for_each_block_tuple(f, p.sizes(e1), budget, [&](const std::vector<Matrix>& w1) {
        Cube c1 = mode_product(a.cube, e1, direct_sum(w1, f));
        bool found = false;
        detail::for_each_block_tuple(f, p.sizes(e2), budget, [&](const std::vector<Matrix>& w2) {
            Cube c2 = mode_product(c1, e2, direct_sum(w2, f));
            auto u = detail::solve_block_mix(c2, b.cube, solve_axis, p);
            if (!u) return true;
            BlockWitness w;
            w.blocks[e1] = w1;
            w.blocks[e2] = w2;
            w.blocks[solve_axis] = *u;
            if (!(apply_block_equiv(a, w) == b)) throw std::logic_error("exhaustive witness failed verification");
            d.equivalent = true;
            d.witness = w;
            found = true;
            return false;
        });
        return !found;
    });
    return d;
}

inline BlockDecision decide_block_orbit(const BlockedCube& a, const BlockedCube& b, std::uint64_t budget) {
    detail::check_conformal(a, b);
    Field f = a.field();
    const Partition3& p = a.part;
    struct Gen {
        std::size_t axis;
        Matrix m;
    };
    std::vector<Gen> gens;
    for (std::size_t ax = 0; ax < 3; ++ax)
        for (std::size_t s = 0; s < p.count(ax); ++s)
            for (auto& g : gl_generators(f, p.size(ax, s))) gens.push_back({ax, detail::embed_block(f, p, ax, s, g)});
    Dims dims = a.cube.dims();
    auto step = [&](const StateKey& st, std::size_t g) {
        return mode_product(Cube::from_entries(f, dims, st), gens[g].axis, gens[g].m).entries();
    };
    auto res = orbit_bfs(a.cube.entries(), gens.size(), step, budget, &b.cube.entries());
    BlockDecision d;
    d.method = "orbit";
    if (!res.hit) return d;
    EquivWitness w = identity_witness(f, dims);
    for (auto g : res.path(*res.hit)) w[gens[g].axis] = w[gens[g].axis] * gens[g].m;
    BlockWitness bw = detail::split_blocks(w, p);
    if (!(apply_block_equiv(a, bw) == b)) throw std::logic_error("orbit witness failed verification");
    d.equivalent = true;
    d.witness = bw;
    return d;
}

// Lexicographically least entry vector of the block-equivalence orbit.
inline StateKey block_canonical_form(const BlockedCube& a, std::uint64_t budget) {
    Field f = a.field();
    const Partition3& p = a.part;
    std::vector<std::pair<std::size_t, Matrix>> gens;
    for (std::size_t ax = 0; ax < 3; ++ax)
        for (std::size_t s = 0; s < p.count(ax); ++s)
            for (auto& g : gl_generators(f, p.size(ax, s))) gens.emplace_back(ax, detail::embed_block(f, p, ax, s, g));
    Dims dims = a.cube.dims();
    auto step = [&](const StateKey& st, std::size_t g) {
        return mode_product(Cube::from_entries(f, dims, st), gens[g].first, gens[g].second).entries();
    };
    return orbit_bfs(a.cube.entries(), gens.size(), step, budget).minimum();
}

inline BlockDecision decide_block_pencil(const BlockedCube& a, const BlockedCube& b, std::uint64_t budget) {
    detail::check_conformal(a, b);
    auto mix = detail::length_two_axis(a.cube.dims());
    if (!mix) throw DimensionError("pencil strategy needs an axis of length 2");
    Field f = a.field();
    std::array<std::size_t, 3> perm = *mix == 0 ? std::array<std::size_t, 3>{1, 2, 0}
                                      : *mix == 1 ? std::array<std::size_t, 3>{0, 2, 1}
                                                  : std::array<std::size_t, 3>{0, 1, 2};
    Cube ap = permute_axes(a.cube, perm), bp = permute_axes(b.cube, perm);
    const auto& rsz = a.part.sizes(perm[0]);
    const auto& csz = a.part.sizes(perm[1]);
    bool plain = rsz.size() == 1 && csz.size() == 1;
    auto bsl = slices(bp, SliceKind::Frontal);
    std::optional<PencilInvariants> binv;
    if (plain) binv = pencil_invariants(bsl[0], bsl[1]);
    if (detail::block_group_order(a.part, *mix, f.p()) > budget) throw BudgetExceeded("pencil mixes exceed budget");
    BlockDecision d;
    d.method = plain ? "pencil-kronecker" : "pencil-hom";
    detail::for_each_block_tuple(f, a.part.sizes(*mix), budget, [&](const std::vector<Matrix>& us) {
        Matrix u = direct_sum(us, f);
        auto csl = slices(mode_product(ap, 2, u), SliceKind::Frontal);
        if (plain) {
            if (pencil_invariants(csl[0], csl[1]) == *binv) {
                d.equivalent = true;
                return false;
            }
            return true;
        }
        auto rs = detail::block_strict_pencil(csl, bsl, rsz, csz, budget);
        if (!rs) return true;
        BlockWitness w;
        w.blocks[perm[0]] = rs->first;
        w.blocks[perm[1]] = rs->second;
        w.blocks[*mix] = us;
        if (!(apply_block_equiv(a, w) == b)) throw std::logic_error("pencil witness failed verification");
        d.equivalent = true;
        d.witness = w;
        return false;
    });
    return d;
}

inline BlockDecision decide_block_equiv(const BlockedCube& a, const BlockedCube& b, Strategy s = {}) {
    switch (s.kind) {
        case StrategyKind::Exhaustive: return decide_block_exhaustive(a, b, s.budget);
        case StrategyKind::Orbit: return decide_block_orbit(a, b, s.budget);
        case StrategyKind::Pencil: return decide_block_pencil(a, b, s.budget);
        default: break;
    }
    if (detail::length_two_axis(a.cube.dims())) {
        try {
            return decide_block_pencil(a, b, s.budget);
        } catch (const BudgetExceeded&) {
        }
    }
    try {
        return decide_block_orbit(a, b, s.budget);
    } catch (const BudgetExceeded&) {
    }
    return decide_block_exhaustive(a, b, s.budget);
}

inline Decision decide_equiv(const Cube& a, const Cube& b, Strategy s = {}) {
    if (a.dims() != b.dims()) return {false, std::nullopt, "dimensions"};
    auto d = decide_block_equiv(BlockedCube::unpartitioned(a), BlockedCube::unpartitioned(b), s);
    Decision out{d.equivalent, std::nullopt, d.method};
    if (d.witness) out.witness = assemble(*d.witness, a.field());
    return out;
}

inline bool decide_pencil_equiv(const Cube& a, const Cube& b, std::uint64_t budget = 2'000'000) {
    return decide_equiv(a, b, {StrategyKind::Pencil, budget}).equivalent;
}

// ---- linked equivalence ----

struct LinkedDecision {
    bool equivalent = false;
    std::optional<LinkedWitness> witness;
    std::string method;
};

inline LinkedDecision decide_linked_equiv(const BlockedCube& a, const BlockedCube& b, const LinkedRelations& r,
                                          Strategy s = {}) {
    detail::check_conformal(a, b);
    check_relation_dims(r, a.part);
    Field f = a.field();
    auto reps = r.primary_reps();
    std::uint64_t order = 1;
    for (auto& l : reps) order = detail::sat_mul(order, gl_order(a.part.size(l.axis, l.index), f.p()));
    StrategyKind kind = s.kind;
    if (kind == StrategyKind::Pencil) throw DimensionError("pencil strategy does not apply to linked equivalence");
    if (kind == StrategyKind::Auto) kind = order <= s.budget ? StrategyKind::Exhaustive : StrategyKind::Orbit;
    LinkedDecision d;
    d.method = to_string(kind);
    if (kind == StrategyKind::Exhaustive) {
        if (order > s.budget) throw BudgetExceeded("linked enumeration exceeds budget");
        std::vector<std::size_t> sizes;
        for (auto& l : reps) sizes.push_back(a.part.size(l.axis, l.index));
        detail::for_each_block_tuple(f, sizes, s.budget, [&](const std::vector<Matrix>& ms) {
            LinkedWitness w;
            for (std::size_t i = 0; i < reps.size(); ++i) w.emplace(reps[i], ms[i]);
            if (apply_linked_equiv(a, r, w) == b) {
                d.equivalent = true;
                d.witness = w;
                return false;
            }
            return true;
        });
        return d;
    }
    struct Gen {
        Label rep;
        Matrix m;
    };
    std::vector<Gen> gens;
    for (auto& l : reps)
        for (auto& g : gl_generators(f, a.part.size(l.axis, l.index))) gens.push_back({l, g});
    auto ident = [&] {
        LinkedWitness w;
        for (auto& l : reps) w.emplace(l, Matrix::identity(f, a.part.size(l.axis, l.index)));
        return w;
    };
    std::vector<EquivWitness> assembled;
    for (auto& g : gens) {
        auto w = ident();
        w[g.rep] = g.m;
        assembled.push_back(assemble(derive_block_witness(r, a.part, w), f));
    }
    Dims dims = a.cube.dims();
    auto step = [&](const StateKey& st, std::size_t g) {
        return apply_equiv_unchecked(Cube::from_entries(f, dims, st), assembled[g]).entries();
    };
    auto res = orbit_bfs(a.cube.entries(), gens.size(), step, s.budget, &b.cube.entries());
    if (!res.hit) return d;
    auto w = ident();
    for (auto g : res.path(*res.hit)) w[gens[g].rep] = w[gens[g].rep] * gens[g].m;
    if (!(apply_linked_equiv(a, r, w) == b)) throw std::logic_error("linked witness failed verification");
    d.equivalent = true;
    d.witness = w;
    return d;
}

// ---- representations ----

struct RepDecision {
    bool equivalent = false;
    std::optional<IsoWitness> witness;
    std::string method;
};

inline StateKey rep_state(const Representation& r) {
    StateKey k;
    for (auto& c : r.arrays) k.insert(k.end(), c.entries().begin(), c.entries().end());
    return k;
}

inline RepDecision decide_rep_iso(const Representation& a, const Representation& b, Strategy s = {}) {
    a.validate();
    b.validate();
    if (!(a.graph == b.graph) || a.dims != b.dims || !(a.field == b.field))
        throw DimensionError("representations of different graphs, dimensions or fields");
    Field f = a.field;
    std::uint64_t order = 1;
    for (auto d : a.dims) order = detail::sat_mul(order, gl_order(d, f.p()));
    StrategyKind kind = s.kind;
    if (kind == StrategyKind::Pencil) throw DimensionError("pencil strategy does not apply to representations");
    if (kind == StrategyKind::Auto) kind = order <= s.budget ? StrategyKind::Exhaustive : StrategyKind::Orbit;
    RepDecision d;
    d.method = to_string(kind);
    if (kind == StrategyKind::Exhaustive) {
        if (order > s.budget) throw BudgetExceeded("iso enumeration exceeds budget");
        detail::for_each_block_tuple(f, a.dims, s.budget, [&](const std::vector<Matrix>& ms) {
            if (apply_iso(a, ms) == b) {
                d.equivalent = true;
                d.witness = ms;
                return false;
            }
            return true;
        });
        return d;
    }
    std::vector<std::pair<std::size_t, Matrix>> gens;
    for (std::size_t v = 0; v < a.dims.size(); ++v)
        for (auto& g : gl_generators(f, a.dims[v])) gens.emplace_back(v, g);
    auto ident = [&] {
        IsoWitness w;
        for (auto d2 : a.dims) w.push_back(Matrix::identity(f, d2));
        return w;
    };
    auto from_state = [&](const StateKey& st) {
        Representation r = a;
        std::size_t pos = 0;
        for (auto& c : r.arrays) {
            std::copy(st.begin() + static_cast<long>(pos), st.begin() + static_cast<long>(pos + c.size()),
                      c.entries().begin());
            pos += c.size();
        }
        return r;
    };
    auto step = [&](const StateKey& st, std::size_t g) {
        auto w = ident();
        w[gens[g].first] = gens[g].second;
        return rep_state(apply_iso(from_state(st), w));
    };
    StateKey target = rep_state(b);
    auto res = orbit_bfs(rep_state(a), gens.size(), step, s.budget, &target);
    if (!res.hit) return d;
    auto w = ident();
    for (auto g : res.path(*res.hit)) w[gens[g].first] = w[gens[g].first] * gens[g].second;
    if (!(apply_iso(a, w) == b)) throw std::logic_error("iso witness failed verification");
    d.equivalent = true;
    d.witness = w;
    return d;
}

// ---- matrix problems ----

// Exists C with C^{-1} M_i C = N_i for all i.
inline std::optional<Matrix> decide_sim_similarity(const std::vector<Matrix>& ms, const std::vector<Matrix>& ns,
                                                   std::uint64_t budget = 2'000'000) {
    if (ms.size() != ns.size()) throw DimensionError("tuples of different lengths");
    if (ms.empty()) return std::nullopt;
    std::size_t m = ms[0].rows();
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (!ms[i].square() || ms[i].rows() != m || !(ns[i].rows() == m && ns[i].cols() == m))
            throw DimensionError("similarity needs square matrices of one size");
    Field f = ms[0].field();
    std::optional<Matrix> found;
    for_each_gl(f, m, budget, [&](const Matrix& c) {
        for (std::size_t i = 0; i < ms.size(); ++i)
            if (!(ms[i] * c == c * ns[i])) return true;
        found = c;
        return false;
    });
    return found;
}

// Exists (C, R) with (C^{-1} M R, C^{-1} N C) = (M', N').
inline std::optional<std::pair<Matrix, Matrix>> decide_pair_equiv(const MatrixPair& x, const MatrixPair& y,
                                                                  std::uint64_t budget = 2'000'000) {
    Field f = x.first.field();
    std::size_t big = x.first.rows(), small = x.first.cols();
    if (detail::sat_mul(gl_order(big, f.p()), gl_order(small, f.p())) > budget)
        throw BudgetExceeded("pair enumeration exceeds budget");
    auto rs = gl_enumerate(f, small, budget);
    std::optional<std::pair<Matrix, Matrix>> found;
    for_each_gl(f, big, budget, [&](const Matrix& c) {
        // C M' = M R and C N' = N C
        if (!(c * y.second == x.second * c)) return true;
        for (auto& r : rs)
            if (c * y.first == x.first * r) {
                found = std::make_pair(c, r);
                return false;
            }
        return true;
    });
    return found;
}

// Class index per item under a decided equivalence (all-pairs against class representatives).
template <class T, class Eq>
std::vector<std::size_t> classify(const std::vector<T>& items, Eq eq) {
    std::vector<std::size_t> cls(items.size());
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < items.size(); ++i) {
        std::size_t c = 0;
        for (; c < reps.size(); ++c)
            if (eq(items[reps[c]], items[i])) break;
        if (c == reps.size()) reps.push_back(i);
        cls[i] = c;
    }
    return cls;
}

}  // namespace wild
