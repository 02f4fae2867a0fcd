#pragma once
// Breadth-first orbit exploration under a finite generator set.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../gf.hpp"

namespace wild {

enum class StrategyKind { Exhaustive, Orbit, Pencil, Auto };

struct Strategy {
    StrategyKind kind = StrategyKind::Auto;
    std::uint64_t budget = 2'000'000;
};

inline std::string to_string(StrategyKind k) {
    switch (k) {
        case StrategyKind::Exhaustive: return "exhaustive";
        case StrategyKind::Orbit: return "orbit";
        case StrategyKind::Pencil: return "pencil";
        default: return "auto";
    }
}

inline StrategyKind parse_strategy(const std::string& s) {
    if (s == "exhaustive") return StrategyKind::Exhaustive;
    if (s == "orbit" || s == "orbit_closure") return StrategyKind::Orbit;
    if (s == "pencil") return StrategyKind::Pencil;
    if (s == "auto") return StrategyKind::Auto;
    throw ParseError("unknown strategy: " + s);
}

using StateKey = std::vector<Elem>;

struct OrbitResult {
    std::vector<StateKey> states;  // BFS order, states[0] is the start
    std::vector<long> parent;
    std::vector<std::size_t> via;  // generator index used to reach each state
    std::optional<std::size_t> hit;

    // Generator indices leading from the start to state i.
    std::vector<std::size_t> path(std::size_t i) const {
        std::vector<std::size_t> p;
        while (parent[i] >= 0) {
            p.push_back(via[i]);
            i = static_cast<std::size_t>(parent[i]);
        }
        return {p.rbegin(), p.rend()};
    }

    const StateKey& minimum() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < states.size(); ++i)
            if (states[i] < states[best]) best = i;
        return states[best];
    }
};

// Stops early once `target` is reached. Throws BudgetExceeded when the
// orbit outgrows the budget.
template <class Step>
OrbitResult orbit_bfs(const StateKey& start, std::size_t generators, Step step, std::uint64_t budget,
                      const StateKey* target = nullptr) {
    OrbitResult r;
    std::map<StateKey, std::size_t> seen;
    r.states.push_back(start);
    r.parent.push_back(-1);
    r.via.push_back(0);
    seen.emplace(start, 0);
    if (target && *target == start) {
        r.hit = 0;
        return r;
    }
    for (std::size_t head = 0; head < r.states.size(); ++head) {
        for (std::size_t g = 0; g < generators; ++g) {
            StateKey next = step(r.states[head], g);
            if (seen.count(next)) continue;
            if (r.states.size() >= budget) throw BudgetExceeded("orbit exceeds budget of " + std::to_string(budget));
            seen.emplace(next, r.states.size());
            r.states.push_back(std::move(next));
            r.parent.push_back(static_cast<long>(head));
            r.via.push_back(g);
            if (target && r.states.back() == *target) {
                r.hit = r.states.size() - 1;
                return r;
            }
        }
    }
    return r;
}

}  // namespace wild
