#pragma once
// Linked relations (solid ~ and dotted ><) on stratum labels, and the
// linked equivalence they induce.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "blocks.hpp"

namespace wild {

// Stratum `index` of `axis`; printed 1-based with one prime per axis step.
struct Label {
    std::size_t axis = 0;
    std::size_t index = 0;
    friend auto operator<=>(const Label&, const Label&) = default;

    std::string str() const { return std::to_string(index + 1) + std::string(axis, '\''); }

    static Label parse(const std::string& s) {
        std::size_t primes = 0;
        std::string digits;
        for (char c : s) {
            if (c == '\'') ++primes;
            else if (c >= '0' && c <= '9' && primes == 0) digits += c;
            else throw ParseError("bad label: " + s);
        }
        if (digits.empty() || primes > 2) throw ParseError("bad label: " + s);
        std::size_t v = std::stoul(digits);
        if (v == 0) throw ParseError("labels are 1-based: " + s);
        return {primes, v - 1};
    }
};

enum class EdgeKind { Solid, Dotted };

struct Edge {
    Label a, b;
    EdgeKind kind = EdgeKind::Solid;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Explicit relation sets on the flattened label list, for axiom checking.
struct RelationSets {
    std::array<std::size_t, 3> counts{};
    std::vector<std::vector<bool>> sim, join;
};

class LinkedRelations {
public:
    LinkedRelations() = default;

    // Smallest system satisfying the axioms and containing the edges.
    static LinkedRelations closure(std::array<std::size_t, 3> counts, const std::vector<Edge>& edges) {
        LinkedRelations r;
        r.counts_ = counts;
        std::size_t n = counts[0] + counts[1] + counts[2];
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](std::size_t x, std::size_t y) {
            x = find(x), y = find(y);
            if (x == y) return false;
            parent[std::max(x, y)] = std::min(x, y);
            return true;
        };
        std::vector<std::pair<std::size_t, std::size_t>> dotted;
        for (auto& e : edges) {
            std::size_t x = r.flat(e.a), y = r.flat(e.b);
            if (e.kind == EdgeKind::Solid) unite(x, y);
            else dotted.emplace_back(x, y);
        }
        // dual pairing on classes; a class has at most one partner
        bool changed = true;
        std::vector<long> dual;
        while (changed) {
            changed = false;
            dual.assign(n, -1);
            for (auto [x, y] : dotted) {
                std::size_t cx = find(x), cy = find(y);
                if (cx == cy)
                    throw InvalidRelations("relations force " + r.label(x).str() + " >< " + r.label(x).str());
                for (auto [c, d] : {std::pair{cx, cy}, std::pair{cy, cx}}) {
                    if (dual[c] < 0) dual[c] = static_cast<long>(d);
                    else if (find(static_cast<std::size_t>(dual[c])) != d) {
                        unite(static_cast<std::size_t>(dual[c]), d);
                        changed = true;
                    }
                }
                if (changed) break;
            }
        }
        r.cls_.resize(n);
        for (std::size_t x = 0; x < n; ++x) r.cls_[x] = find(x);
        r.dual_.assign(n, -1);
        for (std::size_t c = 0; c < n; ++c)
            if (dual[c] >= 0) r.dual_[c] = static_cast<long>(find(static_cast<std::size_t>(dual[c])));
        return r;
    }

    static LinkedRelations empty(std::array<std::size_t, 3> counts) { return closure(counts, {}); }

    const std::array<std::size_t, 3>& counts() const { return counts_; }
    std::size_t label_count() const { return cls_.size(); }

    std::size_t flat(const Label& l) const {
        if (l.axis > 2 || l.index >= counts_[l.axis]) throw InvalidRelations("label out of range: " + l.str());
        std::size_t off = 0;
        for (std::size_t a = 0; a < l.axis; ++a) off += counts_[a];
        return off + l.index;
    }
    Label label(std::size_t x) const {
        std::size_t a = 0;
        while (x >= counts_[a]) x -= counts_[a++];
        return {a, x};
    }
    std::vector<Label> labels() const {
        std::vector<Label> out;
        for (std::size_t x = 0; x < label_count(); ++x) out.push_back(label(x));
        return out;
    }

    bool sim(const Label& a, const Label& b) const { return cls_[flat(a)] == cls_[flat(b)]; }
    bool join(const Label& a, const Label& b) const {
        long d = dual_[cls_[flat(a)]];
        return d >= 0 && static_cast<std::size_t>(d) == cls_[flat(b)];
    }

    // Representative = smallest label of the class.
    Label rep(const Label& a) const { return label(cls_[flat(a)]); }
    std::optional<Label> dual_rep(const Label& a) const {
        long d = dual_[cls_[flat(a)]];
        if (d < 0) return std::nullopt;
        return label(static_cast<std::size_t>(d));
    }

    // Is a's class the primary member of its pair {c, c*}?
    bool is_primary(const Label& a) const {
        auto d = dual_rep(a);
        return !d || rep(a) < *d;
    }

    // Primary class representatives, sorted: these key a linked witness.
    std::vector<Label> primary_reps() const {
        std::vector<Label> out;
        for (std::size_t x = 0; x < label_count(); ++x) {
            Label l = label(x);
            if (rep(l) == l && is_primary(l)) out.push_back(l);
        }
        return out;
    }

    // All relations as unordered pairs a < b.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t x = 0; x < label_count(); ++x)
            for (std::size_t y = x + 1; y < label_count(); ++y) {
                Label a = label(x), b = label(y);
                if (sim(a, b)) out.push_back({a, b, EdgeKind::Solid});
                else if (join(a, b)) out.push_back({a, b, EdgeKind::Dotted});
            }
        return out;
    }

    RelationSets sets() const {
        RelationSets s;
        s.counts = counts_;
        std::size_t n = label_count();
        s.sim.assign(n, std::vector<bool>(n, false));
        s.join.assign(n, std::vector<bool>(n, false));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                s.sim[x][y] = cls_[x] == cls_[y];
                long d = dual_[cls_[x]];
                s.join[x][y] = d >= 0 && static_cast<std::size_t>(d) == cls_[y];
            }
        return s;
    }

    // Restriction to the first counts[a] labels of each axis.
    LinkedRelations restrict_to(std::array<std::size_t, 3> counts) const {
        std::vector<Edge> es;
        for (auto& e : edges())
            if (e.a.index < counts[e.a.axis] && e.b.index < counts[e.b.axis]) es.push_back(e);
        return closure(counts, es);
    }

    friend bool operator==(const LinkedRelations& a, const LinkedRelations& b) {
        if (a.counts_ != b.counts_) return false;
        auto sa = a.sets(), sb = b.sets();
        return sa.sim == sb.sim && sa.join == sb.join;
    }

private:
    std::array<std::size_t, 3> counts_{};
    std::vector<std::size_t> cls_;
    std::vector<long> dual_;
};

// Checks the three axioms on explicit sets; returns a description of the
// first violation, or nullopt.
inline std::optional<std::string> axiom_violation(const RelationSets& s) {
    std::size_t n = s.sim.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (!s.sim[a][a]) return "~ not reflexive";
        for (std::size_t b = 0; b < n; ++b) {
            if (s.sim[a][b] != s.sim[b][a]) return "~ not symmetric";
            if (s.join[a][b] != s.join[b][a]) return ">< not symmetric";
            if (s.join[a][b] && s.sim[a][b]) return "a >< b together with a ~ b";
            for (std::size_t c = 0; c < n; ++c) {
                if (s.sim[a][b] && s.sim[b][c] && !s.sim[a][c]) return "~ not transitive";
                if (s.join[a][b] && (s.join[b][c] != s.sim[a][c])) return "a >< b but (b >< c) != (a ~ c)";
            }
        }
    }
    return std::nullopt;
}

// Related strata must have equal sizes.
inline void check_relation_dims(const LinkedRelations& r, const Partition3& p) {
    for (std::size_t ax = 0; ax < 3; ++ax)
        if (r.counts()[ax] != p.count(ax)) throw DimensionError("relations and partition disagree on stratum counts");
    for (auto& e : r.edges())
        if (p.size(e.a.axis, e.a.index) != p.size(e.b.axis, e.b.index))
            throw DimensionError("related strata " + e.a.str() + " and " + e.b.str() + " differ in size");
}

// One matrix per primary class representative.
using LinkedWitness = std::map<Label, Matrix>;

inline BlockWitness derive_block_witness(const LinkedRelations& r, const Partition3& p, const LinkedWitness& w) {
    check_relation_dims(r, p);
    BlockWitness out;
    for (std::size_t ax = 0; ax < 3; ++ax)
        for (std::size_t s = 0; s < p.count(ax); ++s) {
            Label l{ax, s};
            if (r.is_primary(l)) {
                auto it = w.find(r.rep(l));
                if (it == w.end()) throw DimensionError("linked witness lacks class " + r.rep(l).str());
                out.blocks[ax].push_back(it->second);
            } else {
                auto it = w.find(*r.dual_rep(l));
                if (it == w.end()) throw DimensionError("linked witness lacks class " + r.dual_rep(l)->str());
                out.blocks[ax].push_back(contragredient(it->second));
            }
        }
    return out;
}

inline BlockedCube apply_linked_equiv(const BlockedCube& a, const LinkedRelations& r, const LinkedWitness& w) {
    return apply_block_equiv(a, derive_block_witness(r, a.part, w));
}

template <class Rng>
LinkedWitness random_linked_witness(const LinkedRelations& r, const Partition3& p, Field f, Rng& rng) {
    LinkedWitness w;
    for (auto& l : r.primary_reps()) w.emplace(l, random_invertible(f, p.size(l.axis, l.index), rng));
    return w;
}

}  // namespace wild
