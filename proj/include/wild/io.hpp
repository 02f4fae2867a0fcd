#pragma once
// JSON documents for arrays, graphs, representations, relations, witnesses
// and placement maps. Entries are integers in [0, modulus); cube entries are
// listed with the first index slowest.

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "birep.hpp"
#include "gadgets/output.hpp"
#include "links.hpp"

namespace wild::io {

using json = nlohmann::json;

inline json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(1) << '\n';
}

namespace detail {

template <class T>
T get(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

inline Field field_of(const json& j) {
    auto p = get<std::uint32_t>(j, "modulus");
    try {
        return Field(p);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

inline Elem checked_entry(const Field& f, long long v) {
    if (v < 0 || static_cast<unsigned long long>(v) >= f.p())
        throw ParseError("entry " + std::to_string(v) + " outside [0," + std::to_string(f.p()) + ")");
    return static_cast<Elem>(v);
}

inline const char* dir_name(RunDir d) {
    switch (d) {
        case RunDir::D01: return "d01";
        case RunDir::D02: return "d02";
        case RunDir::D12: return "d12";
        default: return "point";
    }
}

inline RunDir dir_from_name(const std::string& s) {
    if (s == "point") return RunDir::Point;
    if (s == "d01") return RunDir::D01;
    if (s == "d02") return RunDir::D02;
    if (s == "d12") return RunDir::D12;
    throw ParseError("unknown run direction " + s);
}

}  // namespace detail

// ---- matrices ----

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(r);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline Matrix matrix_from_json(const json& j, Field f) {
    auto r = detail::get<std::size_t>(j, "rows"), c = detail::get<std::size_t>(j, "cols");
    auto rows = detail::get<std::vector<std::vector<long long>>>(j, "entries");
    if (rows.size() != r) throw ParseError("matrix row count mismatch");
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ParseError("matrix column count mismatch");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = detail::checked_entry(f, rows[i][k]);
    }
    return m;
}

// ---- arrays ----

struct ArrayFile {
    Field field;
    SparseCube cube;
    std::optional<Partition3> part;

    // Dense form, refusing arrays above `limit` cells.
    BlockedCube blocked(std::size_t limit = 50'000'000) const {
        Cube c = cube.to_dense(limit);
        return BlockedCube(c, part ? *part : Partition3::trivial(c.dims()));
    }
};

inline json partition_to_json(const Partition3& p) {
    json j = json::array();
    for (std::size_t a = 0; a < 3; ++a) j.push_back(p.cuts(a));
    return j;
}

inline Partition3 partition_from_json(const json& j) {
    return Partition3::from_cuts(j.get<std::array<std::vector<std::size_t>, 3>>());
}

// Dense "entries" when the array has at most `dense_limit` cells, else "runs".
inline json array_to_json(const SparseCube& c, const std::optional<Partition3>& part = std::nullopt,
                          long double dense_limit = 1'000'000) {
    json j{{"modulus", c.field().p()}, {"dims", c.dims()}};
    if (part) j["cuts"] = partition_to_json(*part);
    if (c.volume() <= dense_limit) {
        j["entries"] = c.to_dense().entries();
    } else {
        json runs = json::array();
        SparseCube canon = c.canonical();
        for (auto& r : canon.runs())
            runs.push_back(json{{"start", r.start}, {"length", r.length}, {"value", r.value}, {"dir", detail::dir_name(r.dir)}});
        j["runs"] = runs;
    }
    return j;
}

inline json array_to_json(const Cube& c, const std::optional<Partition3>& part = std::nullopt) {
    return array_to_json(SparseCube::from_dense(c), part);
}

inline json array_to_json(const BlockedCube& c) { return array_to_json(c.cube, c.part); }

inline ArrayFile array_from_json(const json& j, std::optional<Field> inherited = std::nullopt) {
    Field f = j.contains("modulus") || !inherited ? detail::field_of(j) : *inherited;
    auto dims = detail::get<Coord>(j, "dims");
    ArrayFile a{f, SparseCube(f, dims), std::nullopt};
    if (j.contains("entries")) {
        auto e = detail::get<std::vector<long long>>(j, "entries");
        long double vol = static_cast<long double>(dims[0]) * dims[1] * dims[2];
        if (static_cast<long double>(e.size()) != vol) throw ParseError("entry count does not match dims");
        Cube c(f, Dims{dims[0], dims[1], dims[2]});
        for (std::size_t i = 0; i < e.size(); ++i) c.entries()[i] = detail::checked_entry(f, e[i]);
        a.cube = SparseCube::from_dense(c);
    } else if (j.contains("runs")) {
        for (auto& r : j.at("runs")) {
            Run run{detail::get<Coord>(r, "start"), detail::get<Index>(r, "length"),
                    detail::checked_entry(f, detail::get<long long>(r, "value")),
                    detail::dir_from_name(detail::get<std::string>(r, "dir"))};
            try {
                a.cube.add(run);
            } catch (const DimensionError& e) {
                throw ParseError(e.what());
            }
        }
    } else {
        throw ParseError("array needs 'entries' or 'runs'");
    }
    if (j.contains("cuts")) {
        try {
            a.part = partition_from_json(j.at("cuts"));
        } catch (const json::exception& e) {
            throw ParseError(std::string("cuts: ") + e.what());
        } catch (const DimensionError& e) {
            throw ParseError(std::string("cuts: ") + e.what());
        }
        if (a.part->length(0) != dims[0] || a.part->length(1) != dims[1] || a.part->length(2) != dims[2])
            throw ParseError("cuts do not match dims");
    }
    return a;
}

// ---- relations ----

inline json relations_to_json(const LinkedRelations& r) {
    json edges = json::array();
    for (auto& e : r.edges())
        edges.push_back(json{{"a", e.a.str()}, {"b", e.b.str()}, {"kind", e.kind == EdgeKind::Solid ? "solid" : "dotted"}});
    return json{{"counts", r.counts()}, {"edges", edges}};
}

inline LinkedRelations relations_from_json(const json& j, std::optional<std::array<std::size_t, 3>> counts = {}) {
    auto c = j.contains("counts") ? detail::get<std::array<std::size_t, 3>>(j, "counts") : counts.value_or(std::array<std::size_t, 3>{});
    if (counts && *counts != c) throw ParseError("relation counts do not match the partition");
    std::vector<Edge> edges;
    if (j.contains("edges"))
        for (auto& e : j.at("edges")) {
            auto kind = detail::get<std::string>(e, "kind");
            if (kind != "solid" && kind != "dotted") throw ParseError("edge kind must be solid or dotted");
            Edge ed{Label::parse(detail::get<std::string>(e, "a")), Label::parse(detail::get<std::string>(e, "b")),
                    kind == "solid" ? EdgeKind::Solid : EdgeKind::Dotted};
            edges.push_back(ed);
        }
    return LinkedRelations::closure(c, edges);
}

// ---- graphs and representations ----

inline json graph_to_json(const BipartiteGraph& g) {
    json left = json::array();
    for (auto& arrows : g.left) {
        json as = json::array();
        for (auto& a : arrows) as.push_back(json{{"to", a.vertex + 1}, {"dir", a.dir == ArrowDir::In ? "in" : "out"}});
        left.push_back(as);
    }
    return json{{"right", g.right_count}, {"left", left}};
}

inline BipartiteGraph graph_from_json(const json& j) {
    BipartiteGraph g;
    g.right_count = detail::get<std::size_t>(j, "right");
    for (auto& arrows : detail::get<json>(j, "left")) {
        std::vector<Arrow> as;
        for (auto& a : arrows) {
            auto to = detail::get<std::size_t>(a, "to");
            auto dir = detail::get<std::string>(a, "dir");
            if (to < 1 || to > g.right_count) throw ParseError("arrow target out of range");
            if (dir != "in" && dir != "out") throw ParseError("arrow dir must be in or out");
            as.push_back({to - 1, dir == "in" ? ArrowDir::In : ArrowDir::Out});
        }
        g.left.push_back(as);
    }
    try {
        g.validate();
    } catch (const InvalidGraph& e) {
        throw ParseError(e.what());
    }
    return g;
}

inline json rep_to_json(const Representation& r) {
    json j = graph_to_json(r.graph);
    j["modulus"] = r.field.p();
    j["dims"] = r.dims;
    json arrays = json::array();
    for (auto& c : r.arrays) arrays.push_back(json{{"dims", c.dims()}, {"entries", c.entries()}});
    j["arrays"] = arrays;
    return j;
}

// Missing "arrays" are filled by `fill` (e.g. a seeded random generator).
inline Representation rep_from_json(const json& j, const std::function<Cube(Field, Dims)>& fill = {}) {
    Representation r;
    r.graph = graph_from_json(j);
    r.field = detail::field_of(j);
    r.dims = detail::get<std::vector<std::size_t>>(j, "dims");
    if (r.dims.size() != r.graph.right_count) throw ParseError("one dimension per right vertex required");
    if (j.contains("arrays")) {
        for (auto& a : j.at("arrays")) r.arrays.push_back(array_from_json(a, r.field).cube.to_dense());
    } else {
        if (!fill) throw ParseError("representation needs 'arrays'");
        for (std::size_t t = 0; t < r.graph.left.size(); ++t) r.arrays.push_back(fill(r.field, r.expected_dims(t)));
    }
    try {
        r.validate();
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    }
    return r;
}

// ---- matrix tuples ----

inline json matrices_to_json(const std::vector<Matrix>& ms, Field f) {
    json a = json::array();
    for (auto& m : ms) a.push_back(matrix_to_json(m));
    return json{{"modulus", f.p()}, {"matrices", a}};
}

inline std::pair<Field, std::vector<Matrix>> matrices_from_json(const json& j) {
    Field f = detail::field_of(j);
    std::vector<Matrix> ms;
    for (auto& m : detail::get<json>(j, "matrices")) ms.push_back(matrix_from_json(m, f));
    return {f, ms};
}

// ---- witnesses ----

inline json witness_to_json(const EquivWitness& w) {
    json axes = json::array();
    for (auto& m : w) axes.push_back(matrix_to_json(m));
    return json{{"modulus", w[0].field().p()}, {"axes", axes}};
}

inline EquivWitness witness_from_json(const json& j) {
    Field f = detail::field_of(j);
    auto axes = detail::get<json>(j, "axes");
    if (axes.size() != 3) throw ParseError("witness needs three axes");
    return {matrix_from_json(axes[0], f), matrix_from_json(axes[1], f), matrix_from_json(axes[2], f)};
}

inline json block_witness_to_json(const BlockWitness& w, Field f) {
    json axes = json::array();
    for (auto& blocks : w.blocks) {
        json a = json::array();
        for (auto& m : blocks) a.push_back(matrix_to_json(m));
        axes.push_back(a);
    }
    return json{{"modulus", f.p()}, {"blocks", axes}};
}

inline BlockWitness block_witness_from_json(const json& j) {
    Field f = detail::field_of(j);
    auto axes = detail::get<json>(j, "blocks");
    if (axes.size() != 3) throw ParseError("block witness needs three axes");
    BlockWitness w;
    for (std::size_t a = 0; a < 3; ++a)
        for (auto& m : axes[a]) w.blocks[a].push_back(matrix_from_json(m, f));
    return w;
}

inline json linked_witness_to_json(const LinkedWitness& w, Field f) {
    json m = json::object();
    for (auto& [l, x] : w) m[l.str()] = matrix_to_json(x);
    return json{{"modulus", f.p()}, {"classes", m}};
}

inline LinkedWitness linked_witness_from_json(const json& j) {
    Field f = detail::field_of(j);
    LinkedWitness w;
    json classes = detail::get<json>(j, "classes");
    for (auto& [k, v] : classes.items()) w.emplace(Label::parse(k), matrix_from_json(v, f));
    return w;
}

inline json iso_witness_to_json(const IsoWitness& w, Field f) {
    json v = json::array();
    for (auto& m : w) v.push_back(matrix_to_json(m));
    return json{{"modulus", f.p()}, {"vertices", v}};
}

inline IsoWitness iso_witness_from_json(const json& j) {
    Field f = detail::field_of(j);
    IsoWitness w;
    for (auto& m : detail::get<json>(j, "vertices")) w.push_back(matrix_from_json(m, f));
    return w;
}

// ---- placement sidecar (0-based inclusive ranges) ----

inline json placement_to_json(const std::vector<PlacementEntry>& ps) {
    json out = json::array();
    for (auto& p : ps) {
        json first = json::array(), last = json::array(), size = json::array();
        bool empty = false;
        for (auto& [b, e] : p.box) {
            empty = empty || e == b;
            first.push_back(b);
            last.push_back(e == b ? b : e - 1);
            size.push_back(e - b);
        }
        json entry{{"id", p.id}, {"first", first}, {"last", last}};
        // an empty block has no inclusive range; its extents are listed instead
        if (empty) entry["size"] = size;
        out.push_back(entry);
    }
    return json{{"placements", out}};
}

inline std::vector<PlacementEntry> placement_from_json(const json& j) {
    std::vector<PlacementEntry> ps;
    for (auto& e : detail::get<json>(j, "placements")) {
        auto first = detail::get<Coord>(e, "first"), last = detail::get<Coord>(e, "last");
        PlacementEntry p{detail::get<std::string>(e, "id"), {}};
        if (e.contains("size")) {
            auto size = detail::get<Coord>(e, "size");
            for (std::size_t a = 0; a < 3; ++a) p.box[a] = {first[a], first[a] + size[a]};
        } else {
            for (std::size_t a = 0; a < 3; ++a) {
                if (last[a] < first[a]) throw ParseError("placement range reversed");
                p.box[a] = {first[a], last[a] + 1};
            }
        }
        ps.push_back(p);
    }
    return ps;
}

}  // namespace wild::io
