#pragma once
// Representations of bipartite graphs -> a single unpartitioned array F
// such that representations are isomorphic iff their arrays are equivalent.

#include "../birep.hpp"
#include "departition.hpp"
#include "link.hpp"

namespace wild {

// Label (axis e, index i) is arrow slot e of left vertex i. Slots on the same
// right vertex are ~ with equal direction and >< otherwise.
inline LinkedRelations rep_relations(const BipartiteGraph& g) {
    g.validate();
    for (std::size_t t = 0; t < g.left.size(); ++t)
        if (g.left[t].size() != 3)
            throw InvalidGraph("rep_relations needs a normalized graph (left vertex " + std::to_string(t + 1) +
                               " has " + std::to_string(g.left[t].size()) + " arrows)");
    std::size_t p = g.left.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t e = 0; e < 3; ++e)
            for (std::size_t j = 0; j < p; ++j)
                for (std::size_t d = 0; d < 3; ++d) {
                    Label a{e, i}, b{d, j};
                    if (!(a < b)) continue;
                    const Arrow &x = g.left[i][e], &y = g.left[j][d];
                    if (x.vertex != y.vertex) continue;
                    edges.push_back({a, b, x.dir == y.dir ? EdgeKind::Solid : EdgeKind::Dotted});
                }
    return LinkedRelations::closure({p, p, p}, edges);
}

struct FullGadget {
    GadgetOutput out;
    NormalizedGraph normalized;
    BlockedCube direct;  // X_1 (+) ... (+) X_p after lifting
    LinkGadget link;
};

inline FullGadget rep_gadget_full(const Representation& r) {
    r.validate();
    FullGadget fg;
    fg.normalized = normalize(r.graph);
    Representation lifted = lift_rep(r, fg.normalized);
    fg.direct = direct_sum(lifted.arrays, r.field);
    auto rel = rep_relations(fg.normalized.graph);
    fg.link = link_gadget(fg.direct, rel);
    GadgetOutput h = fg.link.out;
    h.placement.clear();
    for (std::size_t a = 0; a < r.graph.left.size(); ++a) {
        auto box = block_box(fg.direct.part, a, a, a);
        h.placement.push_back({"X" + std::to_string(a + 1),
                               {{{box[0].begin, box[0].end}, {box[1].begin, box[1].end}, {box[2].begin, box[2].end}}}});
    }
    fg.out = departition_all(h);
    fg.out.meta["gadget"] = "representation";
    return fg;
}

// Class witness for the slot relations: slot (i,e) on vertex v gets S_v or S_v^{-T}.
inline LinkedWitness rep_linked_witness(const BipartiteGraph& g, const LinkedRelations& rel, const IsoWitness& w) {
    LinkedWitness lw;
    for (auto& l : rel.primary_reps()) {
        const Arrow& a = g.left[l.index][l.axis];
        lw.emplace(l, a.dir == ArrowDir::In ? w[a.vertex] : contragredient(w[a.vertex]));
    }
    return lw;
}

// Iso witness of the input -> plain witness on F.
inline KronWitness transport_full(const FullGadget& fg, const IsoWitness& w) {
    Field f = fg.out.cube.field();
    IsoWitness lifted = lift_witness(w, fg.normalized, f);
    LinkedWitness lw = rep_linked_witness(fg.normalized.graph, fg.link.input, lifted);
    BlockWitness hb = transport_link(fg.link, fg.direct.part, lw);
    KronBlockWitness kb = transport_stages(fg.out.stages, KronBlockWitness::from_dense(hb, f));
    return kb.assembled(f);
}

}  // namespace wild
