// wildcube: build gadgets, decide equivalences, run verification suites.
// Exit codes: 0 decided / pass, 1 error / fail, 2 inconclusive.

#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "wild/io.hpp"
#include "wild/verify.hpp"

using namespace wild;
using io::json;

namespace {

constexpr int kOk = 0, kFail = 1, kInconclusive = 2;
constexpr long double kDenseLimit = 1'000'000;

std::string dims_str(const Coord& d) {
    return std::to_string(d[0]) + "x" + std::to_string(d[1]) + "x" + std::to_string(d[2]);
}

void print_output_meta(const GadgetOutput& g) {
    std::cout << "dims " << dims_str(g.cube.dims()) << "\n";
    std::cout << "runs " << g.cube.runs().size() << "\n";
    std::cout << "stored points " << g.cube.stored_points() << "\n";
    std::cout << "strata " << g.part.count(0) << "," << g.part.count(1) << "," << g.part.count(2) << "\n";
    std::cout << "placements " << g.placement.size() << "\n";
    for (auto& [k, v] : g.meta) std::cout << k << " " << v << "\n";
}

std::string placement_path(const std::string& out, const std::string& given) {
    if (!given.empty()) return given;
    auto dot = out.rfind(".json");
    return (dot == std::string::npos ? out : out.substr(0, dot)) + ".placement.json";
}

void write_gadget(const GadgetOutput& g, const std::string& out, const std::string& placement) {
    io::write_json(out, io::array_to_json(g.cube, g.part, kDenseLimit));
    io::write_json(placement_path(out, placement), io::placement_to_json(g.placement));
    print_output_meta(g);
}

Cube dense_input(const io::ArrayFile& a) { return a.cube.to_dense(static_cast<std::size_t>(kDenseLimit)); }

int cmd_gadget(const std::string& kind, const std::string& in, const std::string& out, const std::string& placement,
               int axis, std::uint64_t seed) {
    json j = io::read_json(in);
    if (kind == "departition") {
        auto a = io::array_from_json(j).blocked();
        auto g = with_input_placement(a, "A");
        if (axis == 0) {
            g = departition_all(g);
        } else {
            g = departition_axis(g, static_cast<std::size_t>(axis - 1));
        }
        g.meta["gadget"] = "departition";
        write_gadget(g, out, placement);
    } else if (kind == "tuple") {
        Field f = io::detail::field_of(j);
        std::vector<Cube> as;
        for (auto& x : io::detail::get<json>(j, "arrays")) as.push_back(dense_input(io::array_from_json(x, f)));
        write_gadget(tuple_gadget(as), out, placement);
    } else if (kind == "tensor12") {
        write_gadget(gadget_tensor12(dense_input(io::array_from_json(j))), out, placement);
    } else if (kind == "tensor03") {
        write_gadget(gadget_tensor03(dense_input(io::array_from_json(j))), out, placement);
    } else if (kind == "link") {
        auto a = io::array_from_json(j).blocked();
        auto counts = std::array<std::size_t, 3>{a.part.count(0), a.part.count(1), a.part.count(2)};
        auto rel = io::relations_from_json(j.contains("relations") ? j.at("relations") : json::object(), counts);
        auto lg = link_gadget(a, rel);
        write_gadget(lg.out, out, placement);
    } else if (kind == "full") {
        std::mt19937_64 rng(seed);
        auto rep = io::rep_from_json(j, [&](Field f, Dims d) { return random_cube(f, d, rng); });
        auto fg = rep_gadget_full(rep);
        write_gadget(fg.out, out, placement);
    } else if (kind == "gp-pair") {
        auto [f, ms] = io::matrices_from_json(j);
        auto pair = gp_pair_gadget(ms, f, j.value("m", std::size_t{0}));
        io::write_json(out, io::matrices_to_json({pair.first, pair.second}, f));
        std::cout << "pair " << pair.first.rows() << "x" << pair.first.cols() << "\n";
    } else if (kind == "pair-embed") {
        auto [f, ms] = io::matrices_from_json(j);
        if (ms.size() != 2) throw ParseError("pair-embed needs exactly two matrices");
        auto pair = pair_embed_gadget(ms[0], ms[1]);
        io::write_json(out, io::matrices_to_json({pair.first, pair.second}, f));
        std::cout << "pair " << pair.first.rows() << "x" << pair.first.cols() << ", " << pair.second.rows() << "x"
                  << pair.second.cols() << "\n";
    } else {
        throw ParseError("unknown gadget kind " + kind);
    }
    return kOk;
}

int report_profile(const ProfileReport& r) {
    if (r.verdict == ProfileVerdict::Differ) {
        std::cout << "false\nprofiles differ => inequivalent (" << r.detail << ")\n";
        return kOk;
    }
    std::cout << "inconclusive\n" << r.detail << "\n";
    return kInconclusive;
}

void print_verdict(bool eq, const std::string& method) { std::cout << (eq ? "true" : "false") << "\nmethod " << method << "\n"; }

int cmd_check(const std::string& mode, const std::string& pa, const std::string& pb, const std::string& witness,
              Strategy s) {
    json ja = io::read_json(pa), jb = io::read_json(pb);
    if (mode == "equiv" || mode == "blockequiv" || mode == "linked") {
        auto a = io::array_from_json(ja), b = io::array_from_json(jb);
        if (!(a.field == b.field)) throw DimensionError("arrays over different fields");
        if (a.cube.dims() != b.cube.dims()) {
            std::cout << "false\ndimensions differ\n";
            return kOk;
        }
        bool plain = mode == "equiv";
        if (a.cube.volume() > kDenseLimit) {
            if (!plain) {
                std::cout << "inconclusive\narray too large for exact block deciders\n";
                return kInconclusive;
            }
            return report_profile(compare_sparse_profiles(a.cube, b.cube, s.budget));
        }
        BlockedCube x = a.blocked(), y = b.blocked();
        try {
            if (plain) {
                auto d = decide_equiv(x.cube, y.cube, s);
                print_verdict(d.equivalent, d.method);
                if (d.witness && !witness.empty()) io::write_json(witness, io::witness_to_json(*d.witness));
            } else if (mode == "blockequiv") {
                if (!(x.part == y.part)) throw DimensionError("arrays are not conformal");
                auto d = decide_block_equiv(x, y, s);
                print_verdict(d.equivalent, d.method);
                if (d.witness && !witness.empty()) io::write_json(witness, io::block_witness_to_json(*d.witness, a.field));
            } else {
                auto counts = std::array<std::size_t, 3>{x.part.count(0), x.part.count(1), x.part.count(2)};
                auto rel = io::relations_from_json(ja.contains("relations") ? ja.at("relations") : json::object(), counts);
                auto d = decide_linked_equiv(x, y, rel, s);
                print_verdict(d.equivalent, d.method);
                if (d.witness && !witness.empty()) io::write_json(witness, io::linked_witness_to_json(*d.witness, a.field));
            }
        } catch (const BudgetExceeded& e) {
            std::cerr << "budget: " << e.what() << "\n";
            if (!plain) {
                std::cout << "inconclusive\n";
                return kInconclusive;
            }
            return report_profile(compare_profiles(x.cube, y.cube));
        }
        return kOk;
    }
    if (mode == "iso") {
        auto a = io::rep_from_json(ja), b = io::rep_from_json(jb);
        try {
            auto d = decide_rep_iso(a, b, s);
            print_verdict(d.equivalent, d.method);
            if (d.witness && !witness.empty()) io::write_json(witness, io::iso_witness_to_json(*d.witness, a.field));
        } catch (const BudgetExceeded& e) {
            std::cout << "inconclusive\n" << e.what() << "\n";
            return kInconclusive;
        }
        return kOk;
    }
    if (mode == "simsim") {
        auto [fa, ma] = io::matrices_from_json(ja);
        auto [fb, mb] = io::matrices_from_json(jb);
        if (!(fa == fb)) throw DimensionError("tuples over different fields");
        try {
            auto c = decide_sim_similarity(ma, mb, s.budget);
            print_verdict(c.has_value(), "exhaustive");
            if (c && !witness.empty()) io::write_json(witness, io::matrices_to_json({*c}, fa));
        } catch (const BudgetExceeded& e) {
            std::cout << "inconclusive\n" << e.what() << "\n";
            return kInconclusive;
        }
        return kOk;
    }
    throw ParseError("unknown check mode " + mode);
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<std::uint32_t> field) {
    verify::SuiteOptions o{seed, field};
    std::vector<std::size_t> ids;
    if (suite == "all") {
        for (auto& [id, fn] : verify::suites()) ids.push_back(id);
    } else {
        ids.push_back(std::stoul(suite));
    }
    bool ok = true;
    for (auto id : ids) {
        auto r = verify::run_suite(id, o);
        std::cout << "suite " << r.id << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL") << " - " << r.summary << "\n";
        ok = ok && r.pass;
    }
    return ok ? kOk : kFail;
}

int cmd_info(const std::string& path) {
    json j = io::read_json(path);
    if (j.contains("placements")) {
        for (auto& p : io::placement_from_json(j)) {
            std::cout << p.id << " first " << p.box[0].first << "," << p.box[1].first << "," << p.box[2].first
                      << " size " << p.box[0].second - p.box[0].first << "x" << p.box[1].second - p.box[1].first << "x"
                      << p.box[2].second - p.box[2].first << "\n";
        }
    } else if (j.contains("left")) {
        auto g = io::graph_from_json(j);
        std::cout << "graph: " << g.right_count << " right, " << g.left.size() << " left vertices\n";
        for (std::size_t t = 0; t < g.left.size(); ++t) std::cout << "left " << t + 1 << ": " << g.left[t].size() << " arrows\n";
        if (j.contains("dims") && j.contains("modulus")) {
            auto r = io::rep_from_json(j, [](Field f, Dims d) { return Cube(f, d); });
            std::cout << "modulus " << r.field.p() << "\n";
        }
    } else if (j.contains("matrices")) {
        auto [f, ms] = io::matrices_from_json(j);
        std::cout << "modulus " << f.p() << "\n" << ms.size() << " matrices\n";
        for (auto& m : ms) std::cout << m.rows() << "x" << m.cols() << "\n";
    } else if (j.contains("dims")) {
        auto a = io::array_from_json(j);
        std::cout << "modulus " << a.field.p() << "\ndims " << dims_str(a.cube.dims()) << "\n";
        std::cout << "runs " << a.cube.runs().size() << "\nstored points " << a.cube.stored_points() << "\n";
        if (a.part) std::cout << "strata " << a.part->count(0) << "," << a.part->count(1) << "," << a.part->count(2) << "\n";
        if (j.contains("relations")) {
            auto counts = a.part ? std::array<std::size_t, 3>{a.part->count(0), a.part->count(1), a.part->count(2)}
                                 : std::array<std::size_t, 3>{1, 1, 1};
            auto rel = io::relations_from_json(j.at("relations"), counts);
            std::cout << "relation classes " << rel.primary_reps().size() << " primary\n";
        }
    } else {
        throw ParseError("unrecognized document");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gadget constructions and exact equivalence deciders for three-dimensional arrays over GF(p)"};
    app.require_subcommand(1);

    std::string kind, in, out, placement;
    int axis = 3;
    std::uint64_t seed = 0;
    auto* gadget = app.add_subcommand("gadget", "Build a gadget array and its placement map");
    gadget->add_option("kind", kind, "departition | tuple | tensor12 | tensor03 | link | full | gp-pair | pair-embed")
        ->required()
        ->check(CLI::IsMember({"departition", "tuple", "tensor12", "tensor03", "link", "full", "gp-pair", "pair-embed"}));
    gadget->add_option("input", in, "Input document")->required();
    gadget->add_option("output", out, "Output document")->required();
    gadget->add_option("--placement", placement, "Placement sidecar path (default: <output>.placement.json)");
    gadget->add_option("--axis", axis, "Axis whose partition is removed (1-3), or 0 for all")->check(CLI::Range(0, 3));
    gadget->add_option("--seed", seed, "Seed for arrays missing from a representation file");

    std::string mode, pa, pb, witness, strategy = "auto";
    std::uint64_t budget = Strategy{}.budget;
    auto* check = app.add_subcommand("check", "Decide an equivalence between two documents");
    check->add_option("mode", mode, "equiv | blockequiv | linked | iso | simsim")
        ->required()
        ->check(CLI::IsMember({"equiv", "blockequiv", "linked", "iso", "simsim"}));
    check->add_option("a", pa, "First document")->required();
    check->add_option("b", pb, "Second document")->required();
    check->add_option("--witness", witness, "Write a witness here when one is found");
    check->add_option("--strategy", strategy, "exhaustive | orbit | pencil | auto")
        ->check(CLI::IsMember({"exhaustive", "orbit", "pencil", "auto"}));
    check->add_option("--budget", budget, "Largest group or orbit size to enumerate");

    std::string suite;
    std::uint64_t vseed = 0;
    std::optional<std::uint32_t> field;
    auto* ver = app.add_subcommand("verify", "Run a verification suite (1-10 or all)");
    ver->add_option("suite", suite, "Suite number or 'all'")->required()->check(
        CLI::IsMember({"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "all"}));
    ver->add_option("--seed", vseed, "Seed for the randomized suites");
    ver->add_option("--field", field, "Prime for the randomized suites (8, 10)");

    std::string info_path;
    auto* info = app.add_subcommand("info", "Describe a document");
    info->add_option("path", info_path, "Document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kFail;
    }

    try {
        if (*gadget) return cmd_gadget(kind, in, out, placement, axis, seed);
        if (*check) return cmd_check(mode, pa, pb, witness, {parse_strategy(strategy), budget});
        if (*ver) return cmd_verify(suite, vseed, field);
        if (*info) return cmd_info(info_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kFail;
}
