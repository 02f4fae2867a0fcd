#include <gtest/gtest.h>

#include <random>

#include "wild/blocks.hpp"

using namespace wild;

namespace {

EquivWitness random_witness(Field f, Dims d, std::mt19937_64& rng) {
    return {random_invertible(f, d[0], rng), random_invertible(f, d[1], rng), random_invertible(f, d[2], rng)};
}

}  // namespace

TEST(ApplyEquiv, IdentityWitness) {
    Field f(3);
    std::mt19937_64 rng(1);
    Cube a = random_cube(f, {2, 3, 2}, rng);
    EXPECT_EQ(apply_equiv(a, identity_witness(f, a.dims())), a);
}

TEST(ApplyEquiv, ScalarCollapse) {
    Field f(5);
    Cube a = Cube::from_entries(f, {1, 1, 1}, {3});
    Cube b = apply_equiv(a, {Matrix::scalar(f, 2), Matrix::scalar(f, 4), Matrix::scalar(f, 3)});
    EXPECT_EQ(b(0, 0, 0), f.mul(3, f.mul(2, f.mul(4, 3))));
}

TEST(ApplyEquiv, SizeMismatchAndSingular) {
    Field f(2);
    Cube a(f, 2, 2, 2);
    auto w = identity_witness(f, {2, 2, 1});
    EXPECT_THROW(apply_equiv(a, w), DimensionError);
    EXPECT_THROW(apply_equiv(a, {Matrix(f, 2, 2), Matrix::identity(f, 2), Matrix::identity(f, 2)}), SingularMatrix);
}

TEST(ApplyEquiv, RightActionExhaustiveGF2) {
    Field f(2);
    auto gl = gl_enumerate(f, 2, 100);
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 4; ++rep) {
        Cube a = random_cube(f, {2, 2, 2}, rng);
        for (auto& s1 : gl)
            for (auto& t1 : gl) {
                EquivWitness s{s1, gl[rep], gl[(rep + 2) % 6]}, t{t1, gl[(rep + 1) % 6], gl[rep % 6]};
                EXPECT_EQ(apply_equiv(apply_equiv(a, s), t), apply_equiv(a, compose(s, t)));
            }
    }
}

TEST(ApplyEquiv, RightActionRandomGF3) {
    Field f(3);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        Cube a = random_cube(f, {3, 2, 2}, rng);
        auto s = random_witness(f, a.dims(), rng), t = random_witness(f, a.dims(), rng);
        EXPECT_EQ(apply_equiv(apply_equiv(a, s), t), apply_equiv(a, compose(s, t)));
        EquivWitness inv{inverse(s[0]), inverse(s[1]), inverse(s[2])};
        EXPECT_EQ(apply_equiv(apply_equiv(a, s), inv), a);
    }
}

TEST(SlicewiseApply, AgreesWithApplyEquivOnAll222OverGF2) {
    Field f(2);
    auto gl = gl_enumerate(f, 2, 100);
    std::size_t checked = 0;
    for (std::uint32_t code = 0; code < 256; ++code) {
        std::vector<Elem> e(8);
        for (int i = 0; i < 8; ++i) e[i] = (code >> i) & 1;
        Cube a = Cube::from_entries(f, {2, 2, 2}, e);
        for (auto& r : gl)
            for (auto& s : gl)
                for (auto& u : gl) {
                    EquivWitness w{r, s, u};
                    ASSERT_EQ(slicewise_apply(a, w), apply_equiv(a, w));
                    ++checked;
                }
    }
    EXPECT_EQ(checked, 256u * 216u);
}

TEST(SlicewiseApply, SliceSwap) {
    Field f(3);
    Cube a = Cube::from_entries(f, {1, 1, 2}, {1, 2});
    Matrix swap = Matrix::from_rows(f, {{0, 1}, {1, 0}});
    Cube b = slicewise_apply(a, {Matrix::identity(f, 1), Matrix::identity(f, 1), swap});
    EXPECT_EQ(b, Cube::from_entries(f, {1, 1, 2}, {2, 1}));
}

TEST(Reconstruct, Examples) {
    Field f(2);
    std::vector<Matrix> xs{Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{0, 1}})};
    auto same = reconstruct(xs, Matrix::identity(f, 2), 1, 2);
    EXPECT_EQ(same, xs);
    auto e = reconstruct(xs, Matrix::from_rows(f, {{1, 1}, {0, 1}}), 1, 2);
    EXPECT_EQ(e[0], xs[0]);
    EXPECT_EQ(e[1], xs[0] + xs[1]);
}

TEST(Reconstruct, RejectsSingularMixingAndRaggedSlices) {
    Field f(2);
    std::vector<Matrix> xs{Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{0, 1}})};
    EXPECT_THROW(reconstruct(xs, Matrix::from_rows(f, {{1, 1}, {1, 1}}), 1, 2), SingularMatrix);
    std::vector<Matrix> ragged{Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{1}})};
    EXPECT_THROW(reconstruct(ragged, Matrix::identity(f, 2), 1, 2), DimensionError);
}

TEST(Reconstruct, Composition) {
    Field f(3);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        std::vector<Matrix> xs;
        for (int k = 0; k < 3; ++k) xs.push_back(random_matrix(f, 2, 2, rng));
        auto u = random_invertible(f, 3, rng), v = random_invertible(f, 3, rng);
        auto once = reconstruct(xs, u, 2, 2);
        EXPECT_EQ(reconstruct(once, v, 2, 2), reconstruct(xs, u * v, 2, 2));
    }
}

TEST(Slices, RoundTripEveryAxis) {
    Field f(5);
    std::mt19937_64 rng(6);
    Cube a = random_cube(f, {2, 3, 4}, rng);
    for (auto kind : {SliceKind::Horizontal, SliceKind::Lateral, SliceKind::Frontal}) {
        auto ss = slices(a, kind);
        std::size_t rows = ss[0].rows(), cols = ss[0].cols();
        EXPECT_EQ(from_slices(f, kind, ss, rows, cols), a);
    }
    auto fr = slices(a, SliceKind::Frontal);
    ASSERT_EQ(fr.size(), 4u);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(fr[k](i, j), a(i, j, k));
}

TEST(Slices, EmptyFrontalAxis) {
    Field f(2);
    EXPECT_TRUE(slices(Cube(f, 2, 3, 0), SliceKind::Frontal).empty());
}

TEST(Slices, FrontalRankBelowR) {
    Field f(3);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
        Cube a = random_cube(f, {2, 3, 3}, rng);
        for (auto& s : slices(a, SliceKind::Frontal)) EXPECT_LT(rank(s), std::min<std::size_t>(2, 3) + 1);
    }
}

TEST(Decomposition, ThreeSingleAxisSteps) {
    Field f(3);
    std::mt19937_64 rng(9);
    Cube a = random_cube(f, {2, 3, 2}, rng);
    auto w = random_witness(f, a.dims(), rng);
    Cube stepwise = mode_product(mode_product(mode_product(a, 2, w[2]), 1, w[1]), 0, w[0]);
    EXPECT_EQ(stepwise, apply_equiv(a, w));
}

TEST(DirectSum, ScalarBlocks) {
    Field f(3);
    BlockedCube s = direct_sum(Cube::from_entries(f, {1, 1, 1}, {1}), Cube::from_entries(f, {1, 1, 1}, {2}));
    EXPECT_EQ(s.cube.dims(), (Dims{2, 2, 2}));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                Elem expect = (i == 0 && j == 0 && k == 0) ? 1 : (i == 1 && j == 1 && k == 1) ? 2 : 0;
                EXPECT_EQ(s.cube(i, j, k), expect);
            }
}

TEST(DirectSum, WithEmptyCube) {
    Field f(2);
    std::mt19937_64 rng(10);
    Cube a = random_cube(f, {2, 1, 2}, rng);
    BlockedCube s = direct_sum(a, Cube(f, 0, 0, 0));
    EXPECT_EQ(s.cube, a);
    EXPECT_EQ(block(s, 0, 0, 0), a);
    EXPECT_EQ(s.part.size(0, 1), 0u);
}

TEST(DirectSum, AssociativePlacement) {
    Field f(5);
    std::mt19937_64 rng(11);
    Cube a = random_cube(f, {1, 2, 1}, rng), b = random_cube(f, {2, 1, 1}, rng), c = random_cube(f, {1, 1, 2}, rng);
    BlockedCube ab = direct_sum(a, b);
    BlockedCube abc = direct_sum(ab.cube, c);
    EXPECT_EQ(subcube_extract(abc.cube, {{{0, 1}, {0, 2}, {0, 1}}}), a);
    EXPECT_EQ(direct_sum({a, b, c}, f).cube, abc.cube);
}

TEST(Subcube, ExtractExamples) {
    Field f(3);
    std::mt19937_64 rng(12);
    Cube a = random_cube(f, {2, 2, 3}, rng);
    EXPECT_EQ(subcube_extract(a, {{{0, 2}, {0, 2}, {0, 3}}}), a);
    BlockedCube s = direct_sum(Cube::from_entries(f, {1, 1, 1}, {2}), Cube::from_entries(f, {1, 1, 1}, {1}));
    EXPECT_EQ(subcube_extract(s.cube, {{{0, 1}, {0, 1}, {0, 1}}}), Cube::from_entries(f, {1, 1, 1}, {2}));
    EXPECT_THROW(subcube_extract(a, {{{0, 3}, {0, 1}, {0, 1}}}), DimensionError);
}

TEST(PermuteAxes, InverseRoundTrip) {
    Field f(5);
    std::mt19937_64 rng(13);
    Cube a = random_cube(f, {2, 3, 4}, rng);
    Cube p = permute_axes(a, {1, 2, 0});
    EXPECT_EQ(p.dims(), (Dims{3, 4, 2}));
    EXPECT_EQ(p(1, 2, 0), a(0, 1, 2));
    EXPECT_EQ(permute_axes(p, {2, 0, 1}), a);
}
