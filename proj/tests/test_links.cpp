#include <gtest/gtest.h>

#include <random>

#include "wild/links.hpp"

using namespace wild;

namespace {

Label L(const char* s) { return Label::parse(s); }
Edge solid(const char* a, const char* b) { return {L(a), L(b), EdgeKind::Solid}; }
Edge dotted(const char* a, const char* b) { return {L(a), L(b), EdgeKind::Dotted}; }

// Relation sets filled directly from edge lists, no closure applied.
RelationSets raw_sets(std::array<std::size_t, 3> counts, const std::vector<Edge>& edges) {
    auto r = LinkedRelations::empty(counts);
    RelationSets s = r.sets();
    for (auto& e : edges) {
        std::size_t x = r.flat(e.a), y = r.flat(e.b);
        auto& rel = e.kind == EdgeKind::Solid ? s.sim : s.join;
        rel[x][y] = rel[y][x] = true;
    }
    return s;
}

}  // namespace

TEST(Label, ParseAndPrint) {
    EXPECT_EQ(L("1").axis, 0u);
    EXPECT_EQ(L("2'").index, 1u);
    EXPECT_EQ(L("3''").axis, 2u);
    EXPECT_EQ(L("12'").str(), "12'");
    EXPECT_THROW(L("0"), ParseError);
    EXPECT_THROW(L("1'''"), ParseError);
    EXPECT_THROW(L("x"), ParseError);
}

TEST(Validate, EmptyRelationsAreValid) {
    EXPECT_FALSE(axiom_violation(LinkedRelations::empty({2, 2, 2}).sets()).has_value());
}

TEST(Validate, JoinTogetherWithSimIsInvalid) {
    EXPECT_TRUE(axiom_violation(raw_sets({1, 1, 1}, {dotted("1", "1'"), solid("1", "1'")})).has_value());
}

TEST(Validate, TwoJoinsWithoutSimIsInvalid) {
    auto s = raw_sets({1, 1, 1}, {dotted("1", "1'"), dotted("1'", "1''")});
    auto v = axiom_violation(s);
    ASSERT_TRUE(v.has_value());
    s = raw_sets({1, 1, 1}, {dotted("1", "1'"), dotted("1'", "1''"), solid("1", "1''")});
    EXPECT_FALSE(axiom_violation(s).has_value());
}

TEST(Validate, RelatedStrataMustShareSize) {
    auto r = LinkedRelations::closure({1, 1, 1}, {solid("1", "1'")});
    EXPECT_NO_THROW(check_relation_dims(r, Partition3({{{2}, {2}, {3}}})));
    EXPECT_THROW(check_relation_dims(r, Partition3({{{2}, {3}, {3}}})), DimensionError);
}

TEST(Closure, SimIsTransitive) {
    auto r = LinkedRelations::closure({1, 1, 1}, {solid("1", "1'"), solid("1'", "1''")});
    EXPECT_TRUE(r.sim(L("1"), L("1''")));
}

TEST(Closure, TwoJoinsForceSim) {
    auto r = LinkedRelations::closure({1, 1, 1}, {dotted("1", "1'"), dotted("1'", "1''")});
    EXPECT_TRUE(r.sim(L("1"), L("1''")));
    EXPECT_TRUE(r.join(L("1''"), L("1'")));
    EXPECT_FALSE(axiom_violation(r.sets()).has_value());
}

TEST(Closure, JoinPropagatesAlongSim) {
    auto r = LinkedRelations::closure({2, 1, 1}, {dotted("1", "1'"), solid("1", "2")});
    EXPECT_TRUE(r.join(L("2"), L("1'")));
    EXPECT_EQ(LinkedRelations::closure({2, 1, 1}, r.edges()), r);
}

TEST(Closure, InconsistentEdgesThrow) {
    EXPECT_THROW(LinkedRelations::closure({1, 1, 1}, {dotted("1", "1'"), solid("1", "1'")}), InvalidRelations);
    EXPECT_THROW(LinkedRelations::closure({2, 1, 1}, {dotted("1", "2"), dotted("2", "1'"), dotted("1'", "1")}),
                 InvalidRelations);
}

TEST(Closure, RandomEdgeSetsAreValidIdempotentAndMonotone) {
    std::mt19937_64 rng(5);
    std::array<std::size_t, 3> counts{2, 2, 2};
    auto all = LinkedRelations::empty(counts).labels();
    std::size_t ok = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Edge> es;
        int k = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) {
            Label a = all[rng() % all.size()], b = all[rng() % all.size()];
            if (a == b) continue;
            es.push_back({a, b, rng() % 2 ? EdgeKind::Solid : EdgeKind::Dotted});
        }
        LinkedRelations r;
        try {
            r = LinkedRelations::closure(counts, es);
        } catch (const InvalidRelations&) {
            continue;
        }
        ++ok;
        EXPECT_FALSE(axiom_violation(r.sets()).has_value());
        EXPECT_EQ(LinkedRelations::closure(counts, r.edges()), r);
        for (auto& e : es) EXPECT_TRUE(e.kind == EdgeKind::Solid ? r.sim(e.a, e.b) : r.join(e.a, e.b));
        // monotone: a subset of the edges closes to a sub-relation
        std::vector<Edge> sub(es.begin(), es.begin() + es.size() / 2);
        auto rs = LinkedRelations::closure(counts, sub).sets();
        auto rf = r.sets();
        for (std::size_t x = 0; x < rf.sim.size(); ++x)
            for (std::size_t y = 0; y < rf.sim.size(); ++y) {
                if (rs.sim[x][y]) { EXPECT_TRUE(rf.sim[x][y]); }
                if (rs.join[x][y]) { EXPECT_TRUE(rf.join[x][y]); }
            }
    }
    EXPECT_GT(ok, 100u);
}

TEST(ApplyLinked, TrivialRelationsMatchBlockAction) {
    Field f(3);
    std::mt19937_64 rng(1);
    Partition3 p({{{1, 2}, {2}, {1, 1}}});
    BlockedCube a(random_cube(f, p.dims(), rng), p);
    auto r = LinkedRelations::empty({2, 1, 2});
    auto w = random_linked_witness(r, p, f, rng);
    BlockWitness bw;
    for (auto& [l, m] : w) bw.blocks[l.axis].push_back(m);
    EXPECT_EQ(apply_linked_equiv(a, r, w), apply_block_equiv(a, bw));
}

TEST(ApplyLinked, ScalarJoinExample) {
    Field f(3);
    auto r = LinkedRelations::closure({1, 1, 1}, {dotted("1", "1'")});
    Partition3 p({{{1}, {1}, {1}}});
    LinkedWitness w{{L("1"), Matrix::scalar(f, 2)}, {L("1''"), Matrix::scalar(f, 2)}};
    for (Elem x = 0; x < 3; ++x) {
        BlockedCube a(Cube::from_entries(f, {1, 1, 1}, {x}), p);
        EXPECT_EQ(apply_linked_equiv(a, r, w).cube(0, 0, 0), f.mul(2, x));
    }
}

TEST(ApplyLinked, ContragredientGridPattern) {
    // 1 >< 2 and 2' >< 1'' give (R + R^-T, S + U^-T, U).
    Field f(3);
    std::mt19937_64 rng(2);
    auto r = LinkedRelations::closure({2, 2, 1}, {dotted("1", "2"), dotted("2'", "1''")});
    Partition3 p({{{2, 2}, {1, 2}, {2}}});
    Matrix R = random_invertible(f, 2, rng), S = random_invertible(f, 1, rng), U = random_invertible(f, 2, rng);
    LinkedWitness w{{L("1"), R}, {L("1'"), S}, {L("2'"), contragredient(U)}};
    auto bw = derive_block_witness(r, p, w);
    EXPECT_EQ(bw.blocks[0][0], R);
    EXPECT_EQ(bw.blocks[0][1], contragredient(R));
    EXPECT_EQ(bw.blocks[1][0], S);
    EXPECT_EQ(bw.blocks[1][1], contragredient(U));
    EXPECT_EQ(bw.blocks[2][0], U);
}

TEST(ApplyLinked, DerivedWitnessRespectsRelations) {
    Field f(5);
    std::mt19937_64 rng(3);
    auto r = LinkedRelations::closure({2, 2, 2}, {solid("1", "1'"), dotted("1", "2''"), solid("2", "1''")});
    Partition3 p({{{2, 1}, {2, 1}, {1, 2}}});
    auto bw = derive_block_witness(r, p, random_linked_witness(r, p, f, rng));
    auto labels = r.labels();
    for (auto& a : labels)
        for (auto& b : labels) {
            const Matrix& ma = bw.blocks[a.axis][a.index];
            const Matrix& mb = bw.blocks[b.axis][b.index];
            if (r.sim(a, b)) { EXPECT_EQ(ma, mb); }
            if (r.join(a, b)) { EXPECT_EQ(ma, contragredient(mb)); }
        }
}

TEST(ApplyLinked, RightGroupAction) {
    Field f(3);
    std::mt19937_64 rng(4);
    auto r = LinkedRelations::closure({2, 1, 2}, {dotted("1", "1'"), solid("2", "2''")});
    Partition3 p({{{1, 2}, {1}, {1, 2}}});
    for (int i = 0; i < 20; ++i) {
        BlockedCube a(random_cube(f, p.dims(), rng), p);
        auto s = random_linked_witness(r, p, f, rng), t = random_linked_witness(r, p, f, rng);
        LinkedWitness st;
        for (auto& [l, m] : s) st.emplace(l, m * t.at(l));
        EXPECT_EQ(apply_linked_equiv(apply_linked_equiv(a, r, s), r, t), apply_linked_equiv(a, r, st));
    }
}

TEST(ApplyLinked, SizeMismatchOnRelatedStrata) {
    Field f(2);
    auto r = LinkedRelations::closure({1, 1, 1}, {solid("1", "1'")});
    BlockedCube a(Cube(f, 1, 2, 1), Partition3({{{1}, {2}, {1}}}));
    LinkedWitness w{{L("1"), Matrix::identity(f, 1)}, {L("1''"), Matrix::identity(f, 1)}};
    EXPECT_THROW(apply_linked_equiv(a, r, w), DimensionError);
}
