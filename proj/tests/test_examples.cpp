#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"

using namespace homyd;

namespace {

const RationalField Q{};
const PrimeField F7{7};
const PrimeField F11{11};
using LQ = LinearMap<RationalField>;

/// Adds a random nonzero value to one random entry.
template <class F>
LinearMap<F> mutate(const LinearMap<F>& m, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> r(0, m.rows() - 1), c(0, m.cols() - 1);
    std::uniform_int_distribution<int> v(1, 3);
    const auto i = r(rng), j = c(rng);
    return m.with_entry(i, j, m.at(i, j) + m.field().from_int(v(rng)));
}

}  // namespace

TEST(GroupPresentation, RejectsInvalidTables) {
    EXPECT_THROW(GroupPresentation("E", {}), PreconditionError);
    EXPECT_THROW(GroupPresentation("R", {{0, 1}, {1}}), PreconditionError);
    EXPECT_THROW(GroupPresentation("O", {{0, 2}, {1, 0}}), PreconditionError);
    // Left projection ab = a is associative but has no identity.
    EXPECT_THROW(GroupPresentation("L", {{0, 0}, {1, 1}}), PreconditionError);
    // Identity 0 but 1 * 1 = 1 leaves 1 without an inverse.
    EXPECT_THROW(GroupPresentation("M", {{0, 1}, {1, 1}}), PreconditionError);
    // Unital with inverses, yet (1*1)*2 = 2 and 1*(1*2) = 1.
    EXPECT_THROW(GroupPresentation("N", {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}), PreconditionError);
    EXPECT_NO_THROW(GroupPresentation("C2", {{0, 1}, {1, 0}}));
}

TEST(GroupPresentation, StandardGroups) {
    auto s3 = symmetric_group(3);
    EXPECT_EQ(s3.order(), 6u);
    EXPECT_EQ(s3.identity(), 0u);
    EXPECT_FALSE(s3.is_abelian());
    // Index 1 is (0 2 1), a transposition.
    EXPECT_EQ(s3.mul(1, 1), 0u);
    EXPECT_TRUE(cyclic_group(7).is_abelian());
    for (std::size_t a = 0; a < 6; ++a) EXPECT_EQ(s3.mul(a, s3.inverse(a)), s3.identity());
}

TEST(GroupBialgebra, SmallGroups) {
    auto c1 = group_bialgebra(Q, cyclic_group(1));
    EXPECT_EQ(c1.dim(), 1u);
    EXPECT_EQ(c1.mu().at(0, 0), Q.one());
    EXPECT_EQ(c1.delta().at(0, 0), Q.one());
    auto c2 = group_bialgebra(Q, cyclic_group(2));
    EXPECT_EQ(c2.dim(), 2u);
    // Delta(g) = g (x) g.
    EXPECT_EQ(c2.delta().column(1), (LQ::Column{{3, Q.one()}}));
    EXPECT_TRUE(check_classical_bialgebra(c2).passed());
}

TEST(GroupBialgebra, S3MatchesCayleyProduct) {
    auto g = symmetric_group(3);
    auto h = group_bialgebra(Q, g);
    EXPECT_TRUE(check_associative(h.algebra()).passed());
    EXPECT_TRUE(check_classical_bialgebra(h).passed());
    std::mt19937 rng(5);
    auto t = binary_tensor(h.mu());
    for (int trial = 0; trial < 10; ++trial) {
        auto x = oracle::random_dense(Q, rng, 1, 6, 3)[0], y = oracle::random_dense(Q, rng, 1, 6, 3)[0];
        EXPECT_EQ(oracle::apply_binary(Q, t, x, y), oracle::group_mul(Q, g, x, y));
    }
    EXPECT_NE(h.mu().at(g.mul(1, 3), 1 * 6 + 3), h.mu().at(g.mul(1, 3), 3 * 6 + 1));
}

TEST(CyclicEndoTwist, Examples) {
    EXPECT_EQ(cyclic_endo_twist(Q, 3, 1).mu(), group_bialgebra(Q, cyclic_group(3)).mu());
    EXPECT_EQ(cyclic_endo_twist(Q, 3, 1).alpha(), LQ::identity(Q, {3}));
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 0; k < n; ++k) {
            auto h = cyclic_endo_twist(Q, n, k);
            EXPECT_TRUE(check_hom_bialgebra(h).passed()) << n << " " << k;
            EXPECT_EQ(h.alpha_invertible(), std::gcd(n, k) == 1) << n << " " << k;
            // mu_alpha(g^i (x) g^j) = g^{k(i+j)}.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(oracle::basis_image(h.mu(), i * n + j), (k * (i + j)) % n);
        }
}

TEST(CyclicEndoTwist, PrimeFieldCopiesAgree) {
    auto a = cyclic_endo_twist(F7, 6, 5), b = cyclic_endo_twist(F7, 6, 5);
    EXPECT_EQ(a.mu(), b.mu());
    EXPECT_EQ(a.delta(), b.delta());
    EXPECT_EQ(a.alpha(), b.alpha());
    EXPECT_TRUE(check_hom_bialgebra(a).passed());
}

TEST(ConjugationYD, AbelianIdentityIsTrivialConjugation) {
    auto g = cyclic_group(4);
    auto y = conjugation_yd(Q, g, inner_automorphism(g, 0));
    EXPECT_TRUE(check_yd(y).passed());
    for (std::size_t h = 0; h < 4; ++h)
        for (std::size_t m = 0; m < 4; ++m) EXPECT_EQ(oracle::basis_image(y.act(), h * 4 + m), m);
    for (std::size_t m = 0; m < 4; ++m) EXPECT_EQ(oracle::basis_image(y.coact(), m), m * 4 + m);
}

TEST(ConjugationYD, S3Twists) {
    auto g = symmetric_group(3);
    auto classical = conjugation_classical_yd(Q, g);
    EXPECT_TRUE(check_classical_yd(classical).passed());
    auto plain = conjugation_yd(Q, g, inner_automorphism(g, 0));
    EXPECT_EQ(plain.act(), classical.act());
    EXPECT_EQ(plain.coact(), classical.coact());
    EXPECT_EQ(plain.alpha(), LQ::identity(Q, {6}));
    for (std::size_t t = 0; t < 6; ++t) {
        auto phi = inner_automorphism(g, t);
        auto y = conjugation_yd(Q, g, phi);
        EXPECT_TRUE(check_yd(y).passed()) << t;
        // h . m = phi(h m h^{-1}) and m -> phi(m) (x) phi(m).
        for (std::size_t h = 0; h < 6; ++h)
            for (std::size_t m = 0; m < 6; ++m) EXPECT_EQ(oracle::basis_image(y.act(), h * 6 + m), phi[g.mul(g.mul(h, m), g.inverse(h))]);
        for (std::size_t m = 0; m < 6; ++m) EXPECT_EQ(oracle::basis_image(y.coact(), m), phi[m] * 6 + phi[m]);
    }
    EXPECT_THROW(conjugation_yd(Q, g, GroupMap{0, 0, 0, 0, 0, 0}), PreconditionError);
    EXPECT_THROW(conjugation_yd(Q, g, GroupMap{0, 1, 3, 2, 4, 5}), PreconditionError);
}

TEST(RootsOfUnity, SmallestPrimesAndRoots) {
    EXPECT_EQ(smallest_prime_with_roots(2), 5u);
    EXPECT_EQ(smallest_prime_with_roots(3), 7u);
    EXPECT_EQ(smallest_prime_with_roots(5), 11u);
    EXPECT_EQ(smallest_prime_with_roots(8), 17u);
    auto w = primitive_root_of_unity(F11, 5);
    EXPECT_EQ(w, F11.from_int(3));
    EXPECT_EQ(primitive_root_of_unity(F7, 3), F7.from_int(2));
    EXPECT_THROW(primitive_root_of_unity(F7, 4), PreconditionError);
}

TEST(CyclicBicharacter, Examples) {
    auto s = cyclic_bicharacter_sigma(F7, 3, F7.from_int(2), 1);
    EXPECT_TRUE(check_cqt(s).passed());
    EXPECT_TRUE(check_sigma_invariance(s).passed());
    auto w = primitive_root_of_unity(F11, 5);
    auto t = cyclic_bicharacter_sigma(F11, 5, w, 4);
    EXPECT_TRUE(check_cqt(t).passed());
    EXPECT_TRUE(check_sigma_invariance(t).passed());
    EXPECT_FALSE(check_sigma_invariance(cyclic_bicharacter_sigma(F11, 5, w, 2)).passed());
    // 4 has order 5 in F11 too, but 2 has order 10.
    EXPECT_NO_THROW(cyclic_bicharacter_sigma(F11, 5, F11.from_int(4), 1));
    EXPECT_THROW(cyclic_bicharacter_sigma(F11, 5, F11.from_int(2), 1), PreconditionError);
}

TEST(CyclicRMatrix, Examples) {
    auto z2 = cyclic_r_matrix(Q, 2, Q.from_int(-1), 1);
    EXPECT_TRUE(check_qt(z2).passed());
    EXPECT_TRUE(check_r_invariance(z2).passed());
    EXPECT_TRUE(check_qt(cyclic_r_matrix(F7, 3, F7.from_int(2), 1)).passed());
    auto r5 = cyclic_r_matrix(F11, 5, primitive_root_of_unity(F11, 5), 4);
    EXPECT_TRUE(check_qt(r5).passed());
    EXPECT_TRUE(check_r_invariance(r5).passed());
    EXPECT_THROW(cyclic_r_matrix(Q, 3, Q.from_int(-1), 1), PreconditionError);
}

TEST(Generators, Deterministic) {
    auto g = symmetric_group(3);
    EXPECT_EQ(conjugation_yd(Q, g, inner_automorphism(g, 2)).act(), conjugation_yd(Q, g, inner_automorphism(g, 2)).act());
    EXPECT_EQ(graded_trivial_yd(F11, 5, 2, 4).coact(), graded_trivial_yd(F11, 5, 2, 4).coact());
    auto w = primitive_root_of_unity(F11, 5);
    EXPECT_EQ(cyclic_r_matrix(F11, 5, w, 4), cyclic_r_matrix(F11, 5, w, 4));
    EXPECT_EQ(cyclic_bicharacter_sigma(F11, 5, w, 4), cyclic_bicharacter_sigma(F11, 5, w, 4));
}

TEST(Mutation, SingleEntryMutationsAreCaught) {
    std::mt19937 rng(2024);
    auto g = symmetric_group(3);
    std::vector<YDModule<RationalField>> yds{
        conjugation_yd(Q, g, inner_automorphism(g, 0)), conjugation_yd(Q, g, inner_automorphism(g, 1)),
        conjugation_yd(Q, g, inner_automorphism(g, 3)), graded_trivial_yd(Q, 3, 1, 2),
        graded_trivial_yd(Q, 5, 2, 4),
    };
    std::vector<HomBialgebra<RationalField>> hs{cyclic_endo_twist(Q, 6, 5), cyclic_endo_twist(Q, 4, 2), cyclic_endo_twist(Q, 5, 3),
                                                 twist_bialgebra(group_bialgebra(Q, g), linearize(Q, inner_automorphism(g, 2))),
                                                 cyclic_endo_twist(Q, 3, 2)};
    for (const auto& y : yds) {
        ASSERT_TRUE(check_yd(y).passed());
        for (int t = 0; t < 4; ++t) {
            EXPECT_FALSE(check_yd(YDModule<RationalField>(y.base(), mutate(y.act(), rng), y.coact(), y.alpha())).passed());
            EXPECT_FALSE(check_yd(YDModule<RationalField>(y.base(), y.act(), mutate(y.coact(), rng), y.alpha())).passed());
            EXPECT_FALSE(check_yd(YDModule<RationalField>(y.base(), y.act(), y.coact(), mutate(y.alpha(), rng))).passed());
        }
    }
    for (const auto& h : hs) {
        ASSERT_TRUE(check_hom_bialgebra(h).passed());
        for (int t = 0; t < 4; ++t) {
            EXPECT_FALSE(check_hom_bialgebra(HomBialgebra<RationalField>(mutate(h.mu(), rng), h.delta(), h.alpha())).passed());
            EXPECT_FALSE(check_hom_bialgebra(HomBialgebra<RationalField>(h.mu(), mutate(h.delta(), rng), h.alpha())).passed());
            EXPECT_FALSE(check_hom_bialgebra(HomBialgebra<RationalField>(h.mu(), h.delta(), mutate(h.alpha(), rng))).passed());
        }
    }
}
