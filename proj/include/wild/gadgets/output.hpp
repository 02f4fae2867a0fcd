#pragma once
// Common result type for gadget constructions.

#include <map>
#include <string>
#include <vector>

#include "../sparse.hpp"

namespace wild {

using IndexBox = std::array<std::pair<Index, Index>, 3>;  // half-open

struct PlacementEntry {
    std::string id;
    IndexBox box;
    friend bool operator==(const PlacementEntry&, const PlacementEntry&) = default;
};

// One departition step, enough to rebuild its witness transport.
struct DepartitionStage {
    std::size_t axis = 2;
    Index r = 0;
    std::vector<Index> band;  // band height per stratum of the removed axis
    Index delta_rows = 0, delta_cols = 0;
    Partition3 input_partition;
};

struct GadgetOutput {
    SparseCube cube;
    Partition3 part;
    std::vector<PlacementEntry> placement;
    std::vector<DepartitionStage> stages;
    std::map<std::string, std::string> meta;

    BlockedCube dense(std::size_t limit = 50'000'000) const { return BlockedCube(cube.to_dense(limit), part); }

    Cube read_back(const std::string& id) const {
        for (auto& p : placement)
            if (p.id == id) return cube.extract(p.box);
        throw DimensionError("no placement named " + id);
    }
};

inline GadgetOutput wrap_dense(const BlockedCube& x) {
    GadgetOutput g;
    g.cube = SparseCube::from_dense(x.cube);
    g.part = x.part;
    return g;
}

inline IndexBox whole_box(const Dims& d) { return {{{0, d[0]}, {0, d[1]}, {0, d[2]}}}; }

}  // namespace wild
