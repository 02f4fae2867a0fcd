#pragma once
// Replacing linked block-equivalence by plain block-equivalence: every
// relation of the closed system is realised by identity blocks placed in
// final thickness-1 strata, with auxiliary strata where an edge cannot be
// drawn directly.

#include <algorithm>
#include <tuple>

#include "output.hpp"
#include "../links.hpp"

namespace wild {

struct AuxOrigin {
    Label aux;
    Label source;  // original label the aux stratum copies
    bool dual = false;
};

struct LinkGadget {
    GadgetOutput out;
    LinkedRelations input;     // relations on the original strata
    LinkedRelations extended;  // relations over original + aux labels
    std::array<std::size_t, 3> original_counts{};
    std::vector<AuxOrigin> aux;
    std::vector<std::pair<Label, Label>> identities;  // cross-axis dotted pairs realised
};

namespace detail {

inline std::size_t third_axis(std::size_t x, std::size_t y) { return 3 - x - y; }

// Aux placements add 0, 1 or 2 strata; cheap edges go first.
inline int edge_cost(const Edge& e) {
    bool same = e.a.axis == e.b.axis;
    if (e.kind == EdgeKind::Dotted) return same ? 2 : 0;
    return 1;
}

}  // namespace detail

inline LinkGadget link_gadget(const BlockedCube& x, const LinkedRelations& r) {
    check_relation_dims(r, x.part);
    Field f = x.field();
    LinkGadget lg;
    lg.input = r;
    lg.original_counts = r.counts();
    std::array<std::vector<std::size_t>, 3> sizes{x.part.sizes(0), x.part.sizes(1), x.part.sizes(2)};
    std::array<std::size_t, 3> cnt = r.counts();

    auto todo = r.edges();
    std::stable_sort(todo.begin(), todo.end(), [](const Edge& p, const Edge& q) {
        return std::make_tuple(detail::edge_cost(p), p.kind == EdgeKind::Solid, p.a, p.b) <
               std::make_tuple(detail::edge_cost(q), q.kind == EdgeKind::Solid, q.a, q.b);
    });

    std::vector<Edge> cur;
    auto size_of = [&](const Label& l) { return sizes[l.axis][l.index]; };
    auto new_aux = [&](std::size_t axis, std::size_t dim) {
        sizes[axis].push_back(dim);
        return Label{axis, cnt[axis]++};
    };
    auto dotted = [&](Label a, Label b) {
        if (a.axis == b.axis) throw std::logic_error("identity edge must cross axes");
        lg.identities.emplace_back(a, b);
        cur.push_back({a, b, EdgeKind::Dotted});
    };

    for (const Edge& e : todo) {
        auto q = LinkedRelations::closure(cnt, cur);
        bool implied = e.kind == EdgeKind::Solid ? q.sim(e.a, e.b) : q.join(e.a, e.b);
        if (implied) continue;
        std::size_t d = size_of(e.a);
        if (e.kind == EdgeKind::Dotted && e.a.axis != e.b.axis) {
            dotted(e.a, e.b);
        } else if (e.kind == EdgeKind::Solid && e.a.axis != e.b.axis) {
            Label c = new_aux(detail::third_axis(e.a.axis, e.b.axis), d);
            dotted(e.a, c);
            dotted(e.b, c);
        } else if (e.kind == EdgeKind::Solid) {
            Label c = new_aux(e.a.axis == 2 ? 1 : 2, d);
            dotted(e.a, c);
            dotted(e.b, c);
        } else {
            std::size_t y = e.a.axis == 0 ? 1 : 0;
            std::size_t z = detail::third_axis(e.a.axis, y);
            Label c = new_aux(y, d);
            Label g = new_aux(z, d);
            dotted(e.a, c);
            dotted(c, g);
            dotted(e.b, g);
        }
        auto after = LinkedRelations::closure(cnt, cur);
        bool ok = e.kind == EdgeKind::Solid ? after.sim(e.a, e.b) : after.join(e.a, e.b);
        if (!ok) throw std::logic_error("link gadget: edge not realised");
    }

    lg.extended = LinkedRelations::closure(cnt, cur);
    if (!(lg.extended.restrict_to(lg.original_counts) == r))
        throw std::logic_error("link gadget: auxiliary edges changed the input relations");
    for (std::size_t ax = 0; ax < 3; ++ax)
        for (std::size_t i = lg.original_counts[ax]; i < cnt[ax]; ++i) {
            Label c{ax, i};
            bool found = false;
            for (std::size_t bx = 0; bx < 3 && !found; ++bx)
                for (std::size_t j = 0; j < lg.original_counts[bx] && !found; ++j) {
                    Label l{bx, j};
                    if (lg.extended.sim(c, l)) lg.aux.push_back({c, l, false}), found = true;
                    else if (lg.extended.join(c, l)) lg.aux.push_back({c, l, true}), found = true;
                }
            if (!found) throw std::logic_error("link gadget: aux stratum unrelated to the input");
        }

    for (auto& s : sizes) s.push_back(1);
    Partition3 part(sizes);
    BlockedCube h(Cube(f, part.dims()), part);
    subcube_place(h.cube, x.cube, {0, 0, 0});
    Dims last{part.length(0) - 1, part.length(1) - 1, part.length(2) - 1};
    for (auto& [a, b] : lg.identities) {
        std::size_t z = detail::third_axis(a.axis, b.axis);
        for (std::size_t s = 0; s < size_of(a); ++s) {
            std::array<std::size_t, 3> at{};
            at[a.axis] = part.offset(a.axis, a.index) + s;
            at[b.axis] = part.offset(b.axis, b.index) + s;
            at[z] = last[z];
            Elem& v = h.cube(at[0], at[1], at[2]);
            if (v) throw std::logic_error("link gadget: identity blocks collide");
            v = 1;
        }
    }
    h.cube(last[0], last[1], last[2]) = 1;

    lg.out.cube = SparseCube::from_dense(h.cube);
    lg.out.part = part;
    lg.out.placement.push_back({"X", whole_box(x.cube.dims())});
    lg.out.meta["gadget"] = "link";
    std::string ledger;
    for (auto& a : lg.aux) ledger += (ledger.empty() ? "" : ",") + a.aux.str() + (a.dual ? "><" : "~") + a.source.str();
    lg.out.meta["aux"] = ledger;
    return lg;
}

// Linked witness on the input -> block witness on the gadget.
inline BlockWitness transport_link(const LinkGadget& lg, const Partition3& input_part, const LinkedWitness& w) {
    BlockWitness b = derive_block_witness(lg.input, input_part, w);
    Field f = lg.out.cube.field();
    for (auto& a : lg.aux) {
        const Matrix& src = b.blocks[a.source.axis][a.source.index];
        b.blocks[a.aux.axis].push_back(a.dual ? contragredient(src) : src);
    }
    for (auto& v : b.blocks) v.push_back(Matrix::identity(f, 1));
    return b;
}

}  // namespace wild
