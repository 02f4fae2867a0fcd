#include <gtest/gtest.h>

#include <random>

#include "wild/gadgets/matrix.hpp"
#include "wild/gadgets/pipeline.hpp"
#include "wild/gadgets/tensor.hpp"
#include "wild/verify.hpp"

using namespace wild;
using verify::check_zero_one;
using verify::random_representation;

namespace {

Label L(const char* s) { return Label::parse(s); }

// Every block witness of a partition whose blocks are all 1x1, over a small field.
std::vector<BlockWitness> scalar_block_witnesses(const Partition3& p, Field f) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t s = 0; s < p.count(a); ++s) {
            EXPECT_EQ(p.size(a, s), 1u);
            slots.emplace_back(a, s);
        }
    std::vector<BlockWitness> out;
    std::vector<Elem> v(slots.size(), 1);
    while (true) {
        BlockWitness w;
        for (std::size_t i = 0; i < slots.size(); ++i) w.blocks[slots[i].first].push_back(Matrix::scalar(f, v[i]));
        out.push_back(w);
        std::size_t i = 0;
        while (i < v.size() && ++v[i] == f.p()) v[i++] = 1;
        if (i == v.size()) break;
    }
    return out;
}

Matrix frontal(const Cube& c, std::size_t k) { return slices(c, SliceKind::Frontal)[k]; }

}  // namespace

TEST(RValue, Examples) {
    EXPECT_EQ(r_value(1, 1), 2u);
    EXPECT_EQ(r_value(0, 5), 1u);
    EXPECT_EQ(r_value(3, 2), 3u);
}

TEST(DepartitionFrontal, SevenByNineteenLayout) {
    Field f(2);
    std::vector<Elem> a{1, 0, 1, 1, 0, 1};
    BlockedCube x(Cube::from_entries(f, {1, 1, 6}, a), Partition3({{{1}, {1}, {3, 3}}}));
    GadgetOutput g = departition_frontal(x);
    ASSERT_EQ(g.cube.dims(), (Coord{7, 19, 6}));
    Cube d = g.cube.to_dense();
    Matrix s0 = frontal(d, 0);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 19; ++j) {
            Elem expect = (i < 2 && j == i) ? 1 : (i == 6 && j == 18) ? a[0] : 0;
            EXPECT_EQ(s0(i, j), expect) << i << "," << j;
        }
    EXPECT_EQ(g.part.sizes(2), (std::vector<std::size_t>{6}));
    EXPECT_EQ(g.part.sizes(0), (std::vector<std::size_t>{7}));
    EXPECT_EQ(g.part.sizes(1), (std::vector<std::size_t>{19}));
    EXPECT_EQ(g.read_back("A"), x.cube);
}

TEST(DepartitionFrontal, SlicesAreDeltaPlusA) {
    Field f(3);
    std::mt19937_64 rng(1);
    Partition3 p({{{1, 1}, {2}, {2, 1, 1}}});
    BlockedCube x(random_cube(f, p.dims(), rng), p);
    GadgetOutput g = departition_frontal(x);
    const DepartitionStage& st = g.stages.at(0);
    EXPECT_EQ(st.r, 3u);
    EXPECT_EQ(st.band, (std::vector<Index>{3, 6, 12}));
    // rows: sum of bands + m; columns: sum of thickness * band + n
    EXPECT_EQ(st.delta_rows, 3u + 6 + 12);
    EXPECT_EQ(st.delta_cols, 2u * 3 + 6 + 12);
    Cube d = g.cube.to_dense();
    ASSERT_EQ(d.dims(), (Dims{st.delta_rows + 2, st.delta_cols + 2, 4}));
    std::size_t k = 0, row0 = 0, col0 = 0;
    for (std::size_t gi = 0; gi < 3; ++gi) {
        for (std::size_t s = 0; s < p.size(2, gi); ++s, ++k) {
            Matrix delta(f, st.delta_rows, st.delta_cols);
            delta.set_block(row0, col0, Matrix::identity(f, st.band[gi]));
            col0 += st.band[gi];
            Matrix expect(f, st.delta_rows + 2, st.delta_cols + 2);
            expect.set_block(0, 0, delta);
            expect.set_block(st.delta_rows, st.delta_cols, frontal(x.cube, k));
            EXPECT_EQ(frontal(d, k), expect);
        }
        row0 += st.band[gi];
    }
    EXPECT_EQ(g.part.sizes(0), (std::vector<std::size_t>{st.delta_rows + 1, 1}));
}

TEST(DepartitionFrontal, SingleStratumKeepsOneBand) {
    Field f(5);
    std::mt19937_64 rng(2);
    BlockedCube x = BlockedCube::unpartitioned(random_cube(f, {2, 3, 2}, rng));
    GadgetOutput g = departition_frontal(x);
    EXPECT_EQ(g.cube.dims(), (Coord{3 + 2, 2 * 3 + 3, 2}));
    EXPECT_EQ(g.read_back("A"), x.cube);
    EXPECT_FALSE(check_zero_one(g).has_value());
}

TEST(DepartitionFrontal, TransportOnMicroInstanceGF3) {
    Field f(3);
    Partition3 p({{{1}, {1}, {1, 1}}});
    auto ws = scalar_block_witnesses(p, f);
    for (Elem a0 = 0; a0 < 3; ++a0)
        for (Elem a1 = 0; a1 < 3; ++a1) {
            BlockedCube x(Cube::from_entries(f, {1, 1, 2}, {a0, a1}), p);
            GadgetOutput gx = departition_frontal(x);
            for (auto& w : ws) {
                BlockedCube y = apply_block_equiv(x, w);
                auto kw = transport_stages(gx.stages, KronBlockWitness::from_dense(w, f));
                EXPECT_TRUE(same_runs(apply_kron(gx.cube, kw.assembled(f)), departition_frontal(y).cube));
            }
        }
}

TEST(DepartitionAll, MicroSizesAndTrivialPartition) {
    Field f(2);
    BlockedCube x(Cube::from_entries(f, {1, 1, 2}, {1, 1}), Partition3({{{1}, {1}, {1, 1}}}));
    GadgetOutput one = departition_frontal(x);
    EXPECT_EQ(one.cube.dims(), (Coord{7, 7, 2}));
    GadgetOutput all = departition_all(x);
    for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(all.part.count(a), 1u);
    ASSERT_EQ(all.stages.size(), 3u);
    // later stages see single strata on their axis: one band each
    EXPECT_EQ(all.stages[1].band.size(), 1u);
    EXPECT_EQ(all.stages[2].band.size(), 1u);
    EXPECT_EQ(all.read_back("A"), x.cube);
}

TEST(DepartitionAll, UnpartitionedInputStillReadable) {
    Field f(3);
    std::mt19937_64 rng(3);
    BlockedCube x = BlockedCube::unpartitioned(random_cube(f, {2, 2, 2}, rng));
    GadgetOutput g = departition_all(x);
    EXPECT_EQ(g.read_back("A"), x.cube);
}

TEST(DepartitionAll, ZeroOneOutsidePlacementAtEveryStage) {
    Field f(5);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        Partition3 p({{{1, 1}, {1, 2}, {1, 1}}});
        BlockedCube x(random_cube(f, p.dims(), rng), p);
        GadgetOutput g = with_input_placement(x, "A");
        for (std::size_t axis : {2, 1, 0}) {
            g = departition_axis(g, axis);
            EXPECT_FALSE(find_overlap(g.cube).has_value());
            EXPECT_FALSE(check_zero_one(g).has_value());
            EXPECT_EQ(g.read_back("A"), x.cube);
        }
    }
}

TEST(DepartitionAll, TransportRandomGF5) {
    Field f(5);
    std::mt19937_64 rng(5);
    Partition3 p({{{1, 1}, {2}, {1, 1}}});
    for (int i = 0; i < 10; ++i) {
        BlockedCube x(random_cube(f, p.dims(), rng), p);
        auto w = random_block_witness(p, f, rng);
        GadgetOutput gx = departition_all(x);
        auto kw = transport_stages(gx.stages, KronBlockWitness::from_dense(w, f));
        EXPECT_TRUE(same_runs(apply_kron(gx.cube, kw.assembled(f)), departition_all(apply_block_equiv(x, w)).cube));
    }
}

TEST(Tuple, TwoScalars) {
    Field f(5);
    GadgetOutput g = tuple_gadget({Cube::from_entries(f, {1, 1, 1}, {3}), Cube::from_entries(f, {1, 1, 1}, {4})});
    Cube d = g.cube.to_dense();
    EXPECT_EQ(d, Cube::from_entries(f, {2, 2, 2}, {1, 1, 0, 0, 0, 0, 3, 4}));
    EXPECT_EQ(g.part.sizes(2), (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(g.read_back("A2"), Cube::from_entries(f, {1, 1, 1}, {4}));
}

TEST(Tuple, SingleArrayAndRaggedInput) {
    Field f(3);
    std::mt19937_64 rng(6);
    Cube a = random_cube(f, {2, 2, 3}, rng);
    GadgetOutput g = tuple_gadget({a});
    EXPECT_EQ(g.part.count(2), 1u);
    EXPECT_EQ(g.cube.dims(), (Coord{3, 5, 3}));
    EXPECT_EQ(g.read_back("A1"), a);
    EXPECT_THROW(tuple_gadget({a, random_cube(f, {2, 2, 2}, rng)}), DimensionError);
}

TEST(Tuple, ForwardTransport) {
    Field f(3);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        std::vector<Cube> as{random_cube(f, {2, 1, 2}, rng), random_cube(f, {2, 1, 2}, rng)};
        EquivWitness w{random_invertible(f, 2, rng), random_invertible(f, 1, rng), random_invertible(f, 2, rng)};
        std::vector<Cube> bs{apply_equiv(as[0], w), apply_equiv(as[1], w)};
        GadgetOutput ga = tuple_gadget(as), gb = tuple_gadget(bs);
        EXPECT_EQ(apply_block_equiv(ga.dense(), transport_tuple(w, 2)), gb.dense());
    }
}

TEST(Tuple, EveryGadgetWitnessForcesEqualU) {
    Field f(3);
    Partition3 p({{{1, 1}, {1, 1}, {1, 1}}});
    auto ws = scalar_block_witnesses(p, f);
    std::size_t seen = 0;
    for (Elem a0 = 0; a0 < 3; ++a0)
        for (Elem a1 = 0; a1 < 3; ++a1) {
            auto ga = tuple_gadget({Cube::from_entries(f, {1, 1, 1}, {a0}), Cube::from_entries(f, {1, 1, 1}, {a1})});
            for (Elem b0 = 0; b0 < 3; ++b0)
                for (Elem b1 = 0; b1 < 3; ++b1) {
                    auto gb = tuple_gadget({Cube::from_entries(f, {1, 1, 1}, {b0}), Cube::from_entries(f, {1, 1, 1}, {b1})});
                    for (auto& w : ws)
                        if (apply_block_equiv(ga.dense(), w) == gb.dense()) {
                            ++seen;
                            Elem r = w.blocks[0][0](0, 0), s1 = w.blocks[1][0](0, 0);
                            EXPECT_EQ(w.blocks[2][0], w.blocks[2][1]);
                            for (std::size_t k = 0; k < 2; ++k)
                                EXPECT_EQ(f.mul(f.mul(s1, w.blocks[2][k](0, 0)), r), 1u);
                        }
                }
        }
    EXPECT_GT(seen, 0u);
}

TEST(Tensor12, ScalarLayout) {
    Field f(5);
    GadgetOutput g = gadget_tensor12(Cube::from_entries(f, {1, 1, 1}, {3}));
    EXPECT_EQ(g.cube.to_dense(), Cube::from_entries(f, {2, 2, 1}, {3, 1, 1, 0}));
    EXPECT_EQ(g.part.sizes(0), (std::vector<std::size_t>{1, 1}));
}

TEST(Tensor12, ZeroInputHasTwoIdentityPlanes) {
    Field f(2);
    GadgetOutput g = gadget_tensor12(Cube(f, 2, 2, 2));
    Cube d = g.cube.to_dense();
    std::size_t nz = 0;
    for (auto v : d.entries()) nz += v != 0;
    EXPECT_EQ(nz, 4u);
    EXPECT_THROW(gadget_tensor12(Cube(f, 2, 2, 1)), DimensionError);
}

TEST(Tensor12, ForwardTransport) {
    Field f(3);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        Cube a = random_cube(f, {2, 2, 2}, rng);
        Matrix t = random_invertible(f, 2, rng);
        Cube b = apply_equiv(a, {t, t, contragredient(t)});
        EXPECT_EQ(apply_block_equiv(gadget_tensor12(a).dense(), transport_tensor12(t)), gadget_tensor12(b).dense());
    }
    auto id = transport_tensor12(Matrix::identity(f, 2));
    EXPECT_EQ(assemble(id, f)[0], Matrix::identity(f, 3));
}

TEST(Tensor03, ScalarLayout) {
    Field f(7);
    Cube d = gadget_tensor03(Cube::from_entries(f, {1, 1, 1}, {5})).cube.to_dense();
    ASSERT_EQ(d.dims(), (Dims{2, 3, 3}));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                Elem expect = 0;
                if (i == 0 && j == 0 && k == 0) expect = 5;
                std::array<std::array<std::size_t, 3>, 5> ones{{{1, 0, 1}, {1, 1, 0}, {0, 2, 1}, {0, 1, 2}, {1, 2, 2}}};
                for (auto& o : ones)
                    if (o == std::array<std::size_t, 3>{i, j, k}) expect = 1;
                EXPECT_EQ(d(i, j, k), expect);
            }
}

TEST(Tensor03, ZeroInputHasFourNPlusOneOnes) {
    Field f(3);
    for (std::size_t n : {1u, 2u, 3u}) {
        Cube d = gadget_tensor03(Cube(f, n, n, n)).cube.to_dense();
        std::size_t ones = 0, other = 0;
        for (auto v : d.entries()) {
            if (v == 1) ++ones;
            else if (v) ++other;
        }
        EXPECT_EQ(ones, 4 * n + 1);
        EXPECT_EQ(other, 0u);
    }
}

TEST(Tensor03, ForwardTransport) {
    Field f(5);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        Cube a = random_cube(f, {2, 2, 2}, rng);
        Matrix t = random_invertible(f, 2, rng);
        Cube b = apply_equiv(a, {t, t, t});
        auto ga = gadget_tensor03(a), gb = gadget_tensor03(b);
        EXPECT_TRUE(conformal(ga.dense(), gb.dense()));
        EXPECT_EQ(apply_block_equiv(ga.dense(), transport_tensor03(t)), gb.dense());
    }
}

TEST(LinkGadget, EmptyRelations) {
    Field f(3);
    std::mt19937_64 rng(10);
    Partition3 p({{{1, 1}, {2}, {1}}});
    BlockedCube x(random_cube(f, p.dims(), rng), p);
    LinkGadget lg = link_gadget(x, LinkedRelations::empty({2, 1, 1}));
    Partition3 expect({{{1, 1, 1}, {2, 1}, {1, 1}}});
    EXPECT_EQ(lg.out.part, expect);
    Cube d = lg.out.cube.to_dense();
    EXPECT_EQ(subcube_extract(d, {{{0, 2}, {0, 2}, {0, 1}}}), x.cube);
    EXPECT_EQ(d(2, 2, 1), 1u);
    std::size_t nz = 0;
    for (auto v : d.entries()) nz += v != 0;
    std::size_t xnz = 0;
    for (auto v : x.cube.entries()) xnz += v != 0;
    EXPECT_EQ(nz, xnz + 1);
}

TEST(LinkGadget, SingleDottedEdge) {
    Field f(3);
    auto r = LinkedRelations::closure({1, 1, 1}, {{L("1"), L("1'"), EdgeKind::Dotted}});
    for (Elem x = 0; x < 3; ++x) {
        BlockedCube a(Cube::from_entries(f, {1, 1, 1}, {x}), Partition3({{{1}, {1}, {1}}}));
        Cube d = link_gadget(a, r).out.cube.to_dense();
        EXPECT_EQ(d, Cube::from_entries(f, {2, 2, 2}, {x, 1, 0, 0, 0, 0, 0, 1}));
    }
}

TEST(LinkGadget, SolidEdgeUsesOneAuxStratum) {
    Field f(2);
    auto r = LinkedRelations::closure({1, 1, 1}, {{L("1"), L("1'"), EdgeKind::Solid}});
    BlockedCube a(Cube::from_entries(f, {1, 1, 1}, {1}), Partition3({{{1}, {1}, {1}}}));
    LinkGadget lg = link_gadget(a, r);
    EXPECT_EQ(lg.out.cube.dims(), (Coord{2, 2, 3}));
    ASSERT_EQ(lg.aux.size(), 1u);
    EXPECT_EQ(lg.aux[0].aux.axis, 2u);
    EXPECT_EQ(lg.identities.size(), 2u);
}

TEST(LinkGadget, ForwardTransport) {
    Field f(3);
    std::mt19937_64 rng(11);
    std::vector<std::vector<Edge>> systems{
        {{L("1"), L("2'"), EdgeKind::Dotted}},
        {{L("1"), L("1'"), EdgeKind::Solid}, {L("2"), L("1''"), EdgeKind::Dotted}},
        {{L("1"), L("2"), EdgeKind::Dotted}},
        {{L("1'"), L("2'"), EdgeKind::Solid}, {L("1"), L("2''"), EdgeKind::Dotted}},
    };
    Partition3 p({{{1, 1}, {1, 1}, {1, 1}}});
    for (auto& es : systems) {
        auto r = LinkedRelations::closure({2, 2, 2}, es);
        for (int i = 0; i < 5; ++i) {
            BlockedCube x(random_cube(f, p.dims(), rng), p);
            auto w = random_linked_witness(r, p, f, rng);
            LinkGadget gx = link_gadget(x, r);
            BlockedCube hy = link_gadget(apply_linked_equiv(x, r, w), r).out.dense();
            EXPECT_EQ(apply_block_equiv(gx.out.dense(), transport_link(gx, p, w)), hy);
            EXPECT_EQ(gx.extended.restrict_to({2, 2, 2}), r);
        }
    }
}

TEST(RepRelations, TwoInOneOut) {
    auto r = rep_relations({1, {{{0, ArrowDir::In}, {0, ArrowDir::In}, {0, ArrowDir::Out}}}});
    EXPECT_TRUE(r.sim(L("1"), L("1'")));
    EXPECT_TRUE(r.join(L("1''"), L("1")));
    EXPECT_TRUE(r.join(L("1''"), L("1'")));
}

TEST(RepRelations, DisjointVerticesUnrelated) {
    BipartiteGraph g{2, {{{0, ArrowDir::In}, {0, ArrowDir::In}, {0, ArrowDir::In}},
                         {{1, ArrowDir::Out}, {1, ArrowDir::In}, {1, ArrowDir::Out}}}};
    auto r = rep_relations(g);
    for (auto& e : r.edges()) EXPECT_EQ(e.a.index, e.b.index);
    EXPECT_THROW(rep_relations({1, {{{0, ArrowDir::In}}}}), InvalidGraph);
}

TEST(RepRelations, RandomGraphsSatisfyAxioms) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        BipartiteGraph g;
        g.right_count = 1 + rng() % 3;
        std::size_t p = 1 + rng() % 3;
        for (std::size_t t = 0; t < p; ++t) {
            std::vector<Arrow> as;
            for (int e = 0; e < 3; ++e) as.push_back({rng() % g.right_count, rng() % 2 ? ArrowDir::In : ArrowDir::Out});
            g.left.push_back(as);
        }
        EXPECT_FALSE(axiom_violation(rep_relations(g).sets()).has_value());
    }
}

TEST(RepGadgetFull, OperatorGraphScalar) {
    Field f(3);
    for (Elem a = 0; a < 3; ++a) {
        Representation r{{1, {{{0, ArrowDir::In}, {0, ArrowDir::Out}}}}, {1}, {Cube::from_entries(f, {1, 1, 1}, {a})}, f};
        FullGadget fg = rep_gadget_full(r);
        EXPECT_FALSE(find_overlap(fg.out.cube).has_value());
        EXPECT_FALSE(check_zero_one(fg.out).has_value());
        EXPECT_EQ(fg.out.read_back("X1"), r.arrays[0]);
        for (std::size_t ax = 0; ax < 3; ++ax) EXPECT_EQ(fg.out.part.count(ax), 1u);
    }
}

TEST(RepGadgetFull, ReadBackSeparatesInputs) {
    Field f(2);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
        Representation a = random_representation(f, rng), b = a;
        b.arrays = {};
        for (std::size_t t = 0; t < a.arrays.size(); ++t) b.arrays.push_back(random_cube(f, a.expected_dims(t), rng));
        FullGadget fa = rep_gadget_full(a), fb = rep_gadget_full(b);
        bool reads_equal = true;
        for (std::size_t t = 0; t < a.arrays.size(); ++t) {
            std::string id = "X" + std::to_string(t + 1);
            EXPECT_EQ(fa.out.read_back(id), a.arrays[t]);
            reads_equal = reads_equal && fa.out.read_back(id) == fb.out.read_back(id);
        }
        EXPECT_EQ(reads_equal, a == b);
    }
}

TEST(RepGadgetFull, ForwardTransport) {
    Field f(3);
    std::mt19937_64 rng(14);
    for (int i = 0; i < 5; ++i) {
        Representation a = random_representation(f, rng);
        IsoWitness w = random_iso_witness(a, rng);
        FullGadget fa = rep_gadget_full(a);
        EXPECT_TRUE(same_runs(apply_kron(fa.out.cube, transport_full(fa, w)), rep_gadget_full(apply_iso(a, w)).out.cube));
    }
}

TEST(GpPair, ScalarLayout) {
    Field f(5);
    auto [a, b] = gp_pair_gadget({Matrix::scalar(f, 3)}, f);
    EXPECT_EQ(a, Matrix::from_rows(f, {{0, 1}, {0, 0}}));
    EXPECT_EQ(b, Matrix::from_rows(f, {{0, 3}, {0, 0}}));
}

TEST(GpPair, ZeroTupleAndRaggedInput) {
    Field f(3);
    auto [a, b] = gp_pair_gadget({Matrix(f, 2, 2), Matrix(f, 2, 2)}, f);
    EXPECT_TRUE(b.is_zero());
    EXPECT_EQ(a.rows(), 6u);
    EXPECT_THROW(gp_pair_gadget({Matrix(f, 2, 2), Matrix(f, 1, 1)}, f), DimensionError);
}

TEST(GpPair, WitnessLift) {
    Field f(3);
    std::mt19937_64 rng(15);
    for (int i = 0; i < 20; ++i) {
        std::vector<Matrix> ms{random_matrix(f, 2, 2, rng), random_matrix(f, 2, 2, rng), random_matrix(f, 2, 2, rng)};
        Matrix c = random_invertible(f, 2, rng);
        auto x = gp_pair_gadget(ms, f), y = gp_pair_gadget(similarity(ms, c), f);
        Matrix big = gp_pair_lift(c, 3);
        EXPECT_EQ(similarity({x.first, x.second}, big), (std::vector<Matrix>{y.first, y.second}));
    }
}

TEST(PairEmbed, ScalarZeroLayout) {
    Field f(3);
    auto [m, n] = pair_embed_gadget(Matrix(f, 1, 1), Matrix(f, 1, 1));
    EXPECT_EQ(m, Matrix::from_rows(f, {{1}, {0}}));
    EXPECT_EQ(n, Matrix::from_rows(f, {{0, 0}, {1, 0}}));
    EXPECT_THROW(pair_embed_gadget(Matrix(f, 1, 1), Matrix(f, 2, 2)), DimensionError);
}

TEST(PairEmbed, IdentityAndLiftedSimilarity) {
    Field f(5);
    std::mt19937_64 rng(16);
    for (int i = 0; i < 20; ++i) {
        Matrix a = random_matrix(f, 2, 2, rng), b = random_matrix(f, 2, 2, rng), s = random_invertible(f, 2, rng);
        auto g = pair_embed_gadget(a, b);
        EXPECT_EQ(apply_pair_action(g, Matrix::identity(f, 4), Matrix::identity(f, 2)), g);
        auto [c, r] = pair_embed_lift(s);
        auto sim = similarity({a, b}, s);
        EXPECT_EQ(apply_pair_action(g, c, r), pair_embed_gadget(sim[0], sim[1]));
    }
}
