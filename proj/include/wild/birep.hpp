#pragma once
// Representations of bipartite directed graphs: a vector space per right
// vertex, an array per left vertex whose axes follow the left vertex's arrows.

#include <string>
#include <vector>

#include "blocks.hpp"

namespace wild {

enum class ArrowDir { In, Out };  // In: t <- v, Out: t -> v

struct Arrow {
    std::size_t vertex = 0;  // right vertex, 0-based
    ArrowDir dir = ArrowDir::In;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct BipartiteGraph {
    std::size_t right_count = 0;
    std::vector<std::vector<Arrow>> left;  // ordered arrows per left vertex

    void validate() const {
        for (std::size_t t = 0; t < left.size(); ++t) {
            if (left[t].size() > 3)
                throw InvalidGraph("left vertex " + std::to_string(t + 1) + " has more than three arrows");
            for (auto& a : left[t])
                if (a.vertex >= right_count)
                    throw InvalidGraph("arrow to unknown right vertex " + std::to_string(a.vertex + 1));
        }
    }
    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

// Arrays of order < 3 are stored with trailing length-1 axes.
struct Representation {
    BipartiteGraph graph;
    std::vector<std::size_t> dims;  // per right vertex
    std::vector<Cube> arrays;       // per left vertex
    Field field;

    Dims expected_dims(std::size_t t) const {
        Dims d{1, 1, 1};
        for (std::size_t e = 0; e < graph.left[t].size(); ++e) d[e] = dims[graph.left[t][e].vertex];
        return d;
    }

    void validate() const {
        graph.validate();
        if (dims.size() != graph.right_count) throw DimensionError("one dimension per right vertex required");
        if (arrays.size() != graph.left.size()) throw DimensionError("one array per left vertex required");
        for (std::size_t t = 0; t < arrays.size(); ++t)
            if (arrays[t].dims() != expected_dims(t))
                throw DimensionError("array of left vertex " + std::to_string(t + 1) + " has wrong shape");
    }
    friend bool operator==(const Representation& a, const Representation& b) {
        return a.graph == b.graph && a.dims == b.dims && a.arrays == b.arrays;
    }
};

// One invertible matrix per right vertex.
using IsoWitness = std::vector<Matrix>;

inline EquivWitness vertex_action(const Representation& r, const IsoWitness& w, std::size_t t) {
    EquivWitness out{Matrix::identity(r.field, 1), Matrix::identity(r.field, 1), Matrix::identity(r.field, 1)};
    const auto& arrows = r.graph.left[t];
    for (std::size_t e = 0; e < arrows.size(); ++e) {
        const Matrix& s = w[arrows[e].vertex];
        out[e] = arrows[e].dir == ArrowDir::In ? s : contragredient(s);
    }
    return out;
}

inline Representation apply_iso(const Representation& r, const IsoWitness& w) {
    r.validate();
    if (w.size() != r.graph.right_count) throw DimensionError("iso witness: one matrix per right vertex required");
    for (std::size_t v = 0; v < w.size(); ++v) {
        if (w[v].rows() != r.dims[v] || !w[v].square()) throw DimensionError("iso witness: wrong block shape");
        if (!is_invertible(w[v])) throw SingularMatrix("iso witness: singular block");
    }
    Representation out = r;
    for (std::size_t t = 0; t < r.arrays.size(); ++t) out.arrays[t] = apply_equiv(r.arrays[t], vertex_action(r, w, t));
    return out;
}

inline IsoWitness compose(const IsoWitness& x, const IsoWitness& y) {
    IsoWitness out;
    for (std::size_t v = 0; v < x.size(); ++v) out.push_back(x[v] * y[v]);
    return out;
}

template <class Rng>
IsoWitness random_iso_witness(const Representation& r, Rng& rng) {
    IsoWitness w;
    for (auto d : r.dims) w.push_back(random_invertible(r.field, d, rng));
    return w;
}

struct NormalizationRecipe {
    std::size_t original_left = 0, original_right = 0;
    std::size_t added_left = 0, added_right = 0;
};

struct NormalizedGraph {
    BipartiteGraph graph;
    NormalizationRecipe recipe;
};

// Pads every left vertex to three arrows. Each padding arrow comes from a new
// dimension-1 right vertex q whose scalar is pinned to 1 by a new left vertex
// with arrows (q in, q in, q out) carrying the array [1].
inline NormalizedGraph normalize(const BipartiteGraph& g) {
    g.validate();
    NormalizedGraph out{g, {g.left.size(), g.right_count, 0, 0}};
    for (std::size_t t = 0; t < g.left.size(); ++t) {
        std::size_t k = g.left[t].size();
        if (k == 0)
            throw InvalidGraph("left vertex " + std::to_string(t + 1) + " has no arrows; cannot normalize");
        for (std::size_t extra = k; extra < 3; ++extra) {
            std::size_t q = out.graph.right_count++;
            out.graph.left[t].push_back({q, ArrowDir::In});
            out.graph.left.push_back({{q, ArrowDir::In}, {q, ArrowDir::In}, {q, ArrowDir::Out}});
            ++out.recipe.added_left;
            ++out.recipe.added_right;
        }
    }
    return out;
}

inline Representation lift_rep(const Representation& r, const NormalizedGraph& ng) {
    r.validate();
    if (r.graph.left.size() != ng.recipe.original_left || r.graph.right_count != ng.recipe.original_right)
        throw DimensionError("representation does not match the normalized graph");
    Representation out;
    out.field = r.field;
    out.graph = ng.graph;
    out.dims = r.dims;
    out.dims.resize(ng.graph.right_count, 1);
    out.arrays = r.arrays;
    Cube one(r.field, 1, 1, 1);
    one(0, 0, 0) = 1;
    out.arrays.resize(ng.graph.left.size(), one);
    out.validate();
    return out;
}

inline IsoWitness lift_witness(const IsoWitness& w, const NormalizedGraph& ng, Field f) {
    IsoWitness out = w;
    out.resize(ng.graph.right_count, Matrix::identity(f, 1));
    return out;
}

}  // namespace wild
