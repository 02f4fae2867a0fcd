#pragma once
// Verification suites 1-10: micro-scale iff checks against independent
// oracles, full-scale forward transport and structural checks.

#include <chrono>
#include <random>
#include <sstream>

#include "gadgets/departition.hpp"
#include "gadgets/link.hpp"
#include "gadgets/matrix.hpp"
#include "gadgets/pipeline.hpp"
#include "gadgets/tensor.hpp"
#include "oracle/decide.hpp"
#include "oracle/profile.hpp"

namespace wild::verify {

struct SuiteOptions {
    std::uint64_t seed = 0;
    std::optional<std::uint32_t> field;  // honoured by the seeded random suites (8, 10)
};

struct SuiteResult {
    std::size_t id = 0;
    std::string name;
    bool pass = false;
    std::string summary;
};

// Regression constant: classes of 2x2x2 arrays over GF(2) under equivalence.
inline constexpr std::size_t kClasses222GF2 = 8;

inline std::vector<Cube> all_cubes(Field f, Dims d) {
    std::size_t cells = d[0] * d[1] * d[2];
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= f.p();
    std::vector<Cube> out;
    for (std::size_t code = 0; code < total; ++code) {
        Cube c(f, d);
        std::size_t x = code;
        for (std::size_t i = 0; i < cells; ++i, x /= f.p()) c.entries()[i] = static_cast<Elem>(x % f.p());
        out.push_back(c);
    }
    return out;
}

inline std::size_t class_count(const std::vector<std::size_t>& cls) {
    return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
}

template <class Rng>
Representation random_representation(Field f, Rng& rng, std::size_t max_left = 3, std::size_t max_right = 3,
                                      std::size_t max_dim = 2) {
    Representation r;
    r.field = f;
    std::size_t left = 1 + rng() % max_left, right = 1 + rng() % max_right;
    r.graph.right_count = right;
    for (std::size_t t = 0; t < left; ++t) {
        std::vector<Arrow> as;
        std::size_t k = 1 + rng() % 3;
        for (std::size_t e = 0; e < k; ++e) as.push_back({rng() % right, rng() % 2 ? ArrowDir::In : ArrowDir::Out});
        r.graph.left.push_back(as);
    }
    for (std::size_t v = 0; v < right; ++v) r.dims.push_back(1 + rng() % max_dim);
    for (std::size_t t = 0; t < left; ++t) r.arrays.push_back(random_cube(f, r.expected_dims(t), rng));
    return r;
}

namespace detail {

inline std::string pairs_summary(std::size_t pairs, std::size_t bad, const std::string& what) {
    std::ostringstream os;
    os << pairs << " " << what << ", " << bad << " disagreements";
    return os.str();
}

}  // namespace detail

// 1: 1x1x2 arrays with third-axis cuts 1|1 over GF(3) versus their 7x7x2 departition arrays.
inline SuiteResult suite_departition_micro(const SuiteOptions&) {
    Field f(3);
    Partition3 part({{{1}, {1}, {1, 1}}});
    auto cubes = all_cubes(f, {1, 1, 2});
    std::vector<BlockedCube> inputs;
    std::vector<Cube> gadgets;
    for (auto& c : cubes) {
        inputs.emplace_back(c, part);
        gadgets.push_back(departition_frontal(inputs.back()).cube.to_dense());
    }
    std::size_t bad = 0, pairs = 0;
    for (std::size_t i = 0; i < cubes.size(); ++i)
        for (std::size_t j = 0; j < cubes.size(); ++j) {
            bool lhs = decide_block_equiv(inputs[i], inputs[j], {StrategyKind::Exhaustive}).equivalent;
            bool rhs = decide_equiv(gadgets[i], gadgets[j], {StrategyKind::Pencil}).equivalent;
            bad += lhs != rhs;
            ++pairs;
        }
    Dims d = gadgets[0].dims();
    std::string shape = std::to_string(d[0]) + "x" + std::to_string(d[1]) + "x" + std::to_string(d[2]);
    return {1, "departition micro iff", bad == 0 && shape == "7x7x2",
            detail::pairs_summary(pairs, bad, "ordered pairs") + ", gadget " + shape};
}

// 2: (1,2)-tensors, n = 2 over GF(2).
inline SuiteResult suite_tensor12(const SuiteOptions& o) {
    Field f(2);
    auto cubes = all_cubes(f, {2, 2, 2});
    auto gl = gl_enumerate(f, 2, 100);
    auto tensor_equiv = [&](const Cube& a, const Cube& b) {
        for (auto& s : gl)
            if (apply_equiv(a, {s, s, contragredient(s)}) == b) return true;
        return false;
    };
    std::vector<BlockedCube> gad;
    for (auto& c : cubes) gad.push_back(gadget_tensor12(c).dense());
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) pairs.emplace_back(i * 17, j * 17);
    std::mt19937_64 rng(o.seed);
    for (int k = 0; k < 500; ++k) pairs.emplace_back(rng() % cubes.size(), rng() % cubes.size());
    std::size_t bad = 0, equal = 0;
    for (auto [i, j] : pairs) {
        bool lhs = tensor_equiv(cubes[i], cubes[j]);
        bool rhs = decide_block_equiv(gad[i], gad[j], {StrategyKind::Pencil}).equivalent;
        bad += lhs != rhs;
        equal += lhs;
    }
    return {2, "(1,2)-tensor gadget iff", bad == 0,
            detail::pairs_summary(pairs.size(), bad, "pairs") + ", " + std::to_string(equal) + " equivalent"};
}

// 3: (0,3)-tensors, n = 1 over GF(3).
inline SuiteResult suite_tensor03(const SuiteOptions&) {
    Field f(3);
    auto cubes = all_cubes(f, {1, 1, 1});
    auto input = classify(cubes, [&](const Cube& a, const Cube& b) {
        for (Elem s = 1; s < f.p(); ++s)
            if (f.mul(a(0, 0, 0), f.pow(s, 3)) == b(0, 0, 0)) return true;
        return false;
    });
    std::vector<BlockedCube> gad;
    for (auto& c : cubes) gad.push_back(gadget_tensor03(c).dense());
    auto gadget = classify(gad, [](const BlockedCube& a, const BlockedCube& b) {
        return decide_block_equiv(a, b, {StrategyKind::Pencil}).equivalent;
    });
    // expected classes {0} and {1,2}
    std::vector<std::size_t> expected{0, 1, 1};
    Dims d = gad[0].cube.dims();
    bool shape = d == Dims{2, 3, 3};
    return {3, "(0,3)-tensor gadget iff", input == expected && gadget == expected && shape,
            std::to_string(class_count(input)) + " input classes, " + std::to_string(class_count(gadget)) +
                " gadget classes, partitions " + (input == gadget ? "identical" : "differ")};
}

// 4: pairs of 1x1x1 arrays over GF(3) through the tuple gadget.
inline SuiteResult suite_tuple(const SuiteOptions&) {
    Field f(3);
    std::vector<std::vector<Cube>> tuples;
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b)
            tuples.push_back({Cube::from_entries(f, {1, 1, 1}, {a}), Cube::from_entries(f, {1, 1, 1}, {b})});
    auto input = classify(tuples, [&](const std::vector<Cube>& x, const std::vector<Cube>& y) {
        for (Elem s = 1; s < f.p(); ++s)
            if (f.mul(x[0](0, 0, 0), s) == y[0](0, 0, 0) && f.mul(x[1](0, 0, 0), s) == y[1](0, 0, 0)) return true;
        return false;
    });
    std::vector<BlockedCube> gad;
    for (auto& t : tuples) gad.push_back(tuple_gadget(t).dense());
    std::size_t bad = 0, pairs = 0;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = 0; j < tuples.size(); ++j) {
            bool lhs = input[i] == input[j];
            bool rhs = decide_block_equiv(gad[i], gad[j], {StrategyKind::Orbit}).equivalent;
            bad += lhs != rhs;
            ++pairs;
        }
    Dims d = gad[0].cube.dims();
    return {4, "tuple gadget iff", bad == 0 && class_count(input) == 5 && d == Dims{2, 2, 2},
            std::to_string(class_count(input)) + " input classes, " + detail::pairs_summary(pairs, bad, "ordered pairs")};
}

// 5: scalar arrays with one link between 1 and 1', dotted then solid.
inline SuiteResult suite_link_micro(const SuiteOptions&) {
    Field f(3);
    Partition3 part({{{1}, {1}, {1}}});
    std::vector<BlockedCube> xs;
    for (Elem x = 0; x < 3; ++x) xs.emplace_back(Cube::from_entries(f, {1, 1, 1}, {x}), part);
    bool pass = true;
    std::ostringstream os;
    for (EdgeKind kind : {EdgeKind::Dotted, EdgeKind::Solid}) {
        auto rel = LinkedRelations::closure({1, 1, 1}, {{Label{0, 0}, Label{1, 0}, kind}});
        auto linked = classify(xs, [&](const BlockedCube& a, const BlockedCube& b) {
            return decide_linked_equiv(a, b, rel, {StrategyKind::Exhaustive}).equivalent;
        });
        std::vector<BlockedCube> gad;
        for (auto& x : xs) gad.push_back(link_gadget(x, rel).out.dense());
        auto gadget = classify(gad, [](const BlockedCube& a, const BlockedCube& b) {
            return decide_block_equiv(a, b, {StrategyKind::Orbit}).equivalent;
        });
        std::vector<std::size_t> expected{0, 1, 1};
        Dims d = gad[0].cube.dims();
        // the solid edge costs one auxiliary stratum on the third axis
        Dims shape = kind == EdgeKind::Dotted ? Dims{2, 2, 2} : Dims{2, 2, 3};
        bool ok = linked == expected && gadget == expected && d == shape;
        pass = pass && ok;
        os << (kind == EdgeKind::Dotted ? "dotted" : "solid") << ": " << class_count(linked) << " linked classes, "
           << class_count(gadget) << " gadget classes, gadget " << d[0] << "x" << d[1] << "x" << d[2]
           << (ok ? "" : " MISMATCH") << "; ";
    }
    return {5, "link gadget micro iff", pass, os.str()};
}

// 6: nilpotent gadget pairs, m = 1, t = 2 over GF(2).
inline SuiteResult suite_nilpotent_pairs(const SuiteOptions&) {
    Field f(2);
    std::vector<std::vector<Matrix>> tuples;
    for (Elem a = 0; a < 2; ++a)
        for (Elem b = 0; b < 2; ++b) tuples.push_back({Matrix::scalar(f, a), Matrix::scalar(f, b)});
    std::size_t bad = 0, pairs = 0;
    for (auto& x : tuples)
        for (auto& y : tuples) {
            bool lhs = decide_sim_similarity(x, y).has_value();
            auto gx = gp_pair_gadget(x, f), gy = gp_pair_gadget(y, f);
            bool rhs = decide_sim_similarity({gx.first, gx.second}, {gy.first, gy.second}).has_value();
            bad += lhs != rhs || rhs != (x == y);
            ++pairs;
        }
    return {6, "nilpotent pair wildness", bad == 0, detail::pairs_summary(pairs, bad, "ordered pairs")};
}

// 7: (M, N) pair embedding, n = 1 over GF(3).
inline SuiteResult suite_pair_embed(const SuiteOptions&) {
    Field f(3);
    std::vector<std::pair<Matrix, Matrix>> xs;
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b) xs.emplace_back(Matrix::scalar(f, a), Matrix::scalar(f, b));
    std::size_t bad = 0, pairs = 0;
    for (auto& x : xs)
        for (auto& y : xs) {
            bool lhs = decide_sim_similarity({x.first, x.second}, {y.first, y.second}).has_value();
            bool rhs = decide_pair_equiv(pair_embed_gadget(x.first, x.second), pair_embed_gadget(y.first, y.second))
                           .has_value();
            bad += lhs != rhs || lhs != (x == y);
            ++pairs;
        }
    return {7, "pair embedding wildness", bad == 0, detail::pairs_summary(pairs, bad, "ordered pairs")};
}

// Entries outside placements must be 0 or 1; returns the first offending run.
inline std::optional<std::string> check_zero_one(const GadgetOutput& g) {
    for (auto& r : g.cube.runs()) {
        if (r.value <= 1) continue;
        bool inside = false;
        for (auto& p : g.placement) {
            auto [lo, hi] = run_box_interval(r, p.box);
            if (lo == 0 && hi == r.length) inside = true;
        }
        if (!inside) return "entry " + std::to_string(r.value) + " outside the placements";
    }
    return std::nullopt;
}

// 8: random representations, full pipeline: entries, read-back, transport.
inline SuiteResult suite_full_forward(const SuiteOptions& o) {
    Field f(o.field.value_or(2));
    std::mt19937_64 rng(o.seed);
    std::size_t pass = 0, cases = 100;
    std::string first_failure;
    for (std::size_t c = 0; c < cases; ++c) {
        Representation r = random_representation(f, rng);
        std::string why;
        try {
            FullGadget fg = rep_gadget_full(r);
            if (auto ov = find_overlap(fg.out.cube)) why = "overlap: " + *ov;
            if (why.empty())
                if (auto z = check_zero_one(fg.out)) why = *z;
            for (std::size_t t = 0; why.empty() && t < r.arrays.size(); ++t) {
                if (!(fg.out.read_back("X" + std::to_string(t + 1)) == r.arrays[t]))
                    why = "read-back of X" + std::to_string(t + 1) + " differs";
            }
            if (why.empty()) {
                IsoWitness w = random_iso_witness(r, rng);
                Representation b = apply_iso(r, w);
                FullGadget fb = rep_gadget_full(b);
                if (!same_runs(apply_kron(fg.out.cube, transport_full(fg, w)), fb.out.cube))
                    why = "transport image differs";
            }
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (why.empty()) ++pass;
        else if (first_failure.empty()) first_failure = "case " + std::to_string(c) + ": " + why;
    }
    return {8, "representation pipeline structure and transport", pass == cases,
            std::to_string(pass) + "/" + std::to_string(cases) + " pass" +
                (first_failure.empty() ? "" : "; " + first_failure)};
}

// 9: all 2x2x2 arrays over GF(2), three strategies.
inline SuiteResult suite_oracle_cross(const SuiteOptions&) {
    Field f(2);
    auto cubes = all_cubes(f, {2, 2, 2});
    std::vector<std::vector<std::size_t>> parts;
    for (auto k : {StrategyKind::Exhaustive, StrategyKind::Orbit, StrategyKind::Pencil})
        parts.push_back(classify(cubes, [&](const Cube& a, const Cube& b) { return decide_equiv(a, b, {k}).equivalent; }));
    bool same = parts[0] == parts[1] && parts[1] == parts[2];
    std::size_t n = class_count(parts[0]);
    return {9, "oracle cross-validation", same && n == kClasses222GF2,
            std::string("partitions ") + (same ? "identical" : "differ") + ", " + std::to_string(n) +
                " classes (regression constant " + std::to_string(kClasses222GF2) + ")"};
}

// 10: non-isomorphic representation pairs never reported equivalent at gadget scale.
inline SuiteResult suite_honest_limits(const SuiteOptions& o, Index profile_budget = 2'000'000) {
    Field f(o.field.value_or(2));
    std::mt19937_64 rng(o.seed + 1000);
    std::size_t target = 50, found = 0, differ = 0, inconclusive = 0, attempts = 0;
    while (found < target && attempts < 20 * target) {
        ++attempts;
        Representation a = random_representation(f, rng);
        Representation b = a;
        for (std::size_t t = 0; t < b.arrays.size(); ++t) b.arrays[t] = random_cube(f, b.expected_dims(t), rng);
        if (decide_rep_iso(a, b, {StrategyKind::Exhaustive}).equivalent) continue;
        ++found;
        auto fa = rep_gadget_full(a), fb = rep_gadget_full(b);
        auto rep = compare_sparse_profiles(fa.out.cube, fb.out.cube, profile_budget);
        (rep.verdict == ProfileVerdict::Differ ? differ : inconclusive)++;
    }
    return {10, "honest limits", found == target,
            std::to_string(found) + " non-isomorphic pairs: " + std::to_string(differ) +
                " profiles differ => inequivalent, " + std::to_string(inconclusive) + " inconclusive, 0 equivalent"};
}

inline const std::vector<std::pair<std::size_t, SuiteResult (*)(const SuiteOptions&)>>& suites() {
    static const std::vector<std::pair<std::size_t, SuiteResult (*)(const SuiteOptions&)>> all{
        {1, suite_departition_micro},
        {2, suite_tensor12},
        {3, suite_tensor03},
        {4, suite_tuple},
        {5, suite_link_micro},
        {6, suite_nilpotent_pairs},
        {7, suite_pair_embed},
        {8, suite_full_forward},
        {9, suite_oracle_cross},
        {10, [](const SuiteOptions& o) { return suite_honest_limits(o); }},
    };
    return all;
}

inline SuiteResult run_suite(std::size_t id, const SuiteOptions& o) {
    for (auto& [k, fn] : suites())
        if (k == id) return fn(o);
    throw Error("unknown suite " + std::to_string(id));
}

}  // namespace wild::verify
