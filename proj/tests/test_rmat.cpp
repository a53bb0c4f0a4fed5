#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace homyd;

namespace {

const RationalField Q{};
const PrimeField F7{7};
const PrimeField F11{11};
using LQ = LinearMap<RationalField>;

Rational q(long n, long d = 1) { return Rational(mpq_class(n, d)); }

/// omega of order 5 in F11, found by trying powers directly.
ModP omega5() {
    for (long long w = 2; w < 11; ++w) {
        long long x = 1;
        for (int e = 0; e < 5; ++e) x = x * w % 11;
        if (x == 1) return F11.from_int(w);
    }
    return F11.one();
}

template <class F>
typename F::value_type pow_int(const F& k, typename F::value_type x, std::size_t e) {
    auto r = k.one();
    for (std::size_t i = 0; i < e; ++i) r = r * x;
    return r;
}

/// R entries read back as a dense table, R[i][j] = coefficient of g^i (x) g^j.
template <class F>
Matrix<typename F::value_type> r_table(const RElement<F>& r) {
    const auto d = r.base().dim();
    Matrix<typename F::value_type> out(d, std::vector<typename F::value_type>(d, r.base().field().zero()));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[i][j] = r.r().at(i * d + j, 0);
    return out;
}

template <class F>
RElement<F> zero_r(const HomBialgebra<F>& h) {
    return RElement<F>(h, LinearMap<F>(h.field(), {h.dim(), h.dim()}, {}));
}

template <class F>
SigmaForm<F> zero_sigma(const HomBialgebra<F>& h) {
    return SigmaForm<F>(h, LinearMap<F>(h.field(), {}, {h.dim(), h.dim()}));
}

template <class F>
bool has_law(const CheckReport<F>& r, const std::string& law) {
    for (const auto& f : r.failures)
        if (f.law == law) return true;
    return false;
}

}  // namespace

TEST(CheckQT, ZeroRPasses) {
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 2}, {4, 2}}) {
        auto h = cyclic_endo_twist(Q, n, k);
        EXPECT_TRUE(check_qt(zero_r(h)).passed());
        EXPECT_TRUE(check_r_invariance(zero_r(h)).passed());
    }
}

TEST(CheckQT, ClassicalZ2RMatrix) {
    auto r = cyclic_r_matrix(Q, 2, q(-1), 1);
    // R = (1/2)(1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g).
    Matrix<Rational> hand{{q(1, 2), q(1, 2)}, {q(1, 2), q(-1, 2)}};
    EXPECT_EQ(r_table(r), hand);
    EXPECT_TRUE(check_qt(r).passed());
    EXPECT_TRUE(check_r_invariance(r).passed());
    auto same = RElement<RationalField>::from_matrix(with_identity_twist(group_bialgebra(Q, cyclic_group(2))), hand);
    EXPECT_TRUE(check_qt(same).passed());
}

TEST(CheckQT, C3OverF7) {
    auto r = cyclic_r_matrix(F7, 3, F7.from_int(2), 1);
    // 3^{-1} = 5 and 2^{-1} = 4 mod 7, so R[i][j] = 5 * 4^{ij}.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(r_table(r)[i][j], F7.from_int(5) * pow_int(F7, F7.from_int(4), i * j)) << i << j;
    EXPECT_EQ(r_table(r)[1][1], F7.from_int(6));
    EXPECT_TRUE(check_qt(r).passed());
}

TEST(CheckQT, PerturbedRFails) {
    auto r = cyclic_r_matrix(F7, 3, F7.from_int(2), 1);
    for (std::size_t e = 0; e < 9; ++e) {
        RElement<PrimeField> bad(r.base(), r.r().with_entry(e, 0, r.r().at(e, 0) + F7.one()));
        EXPECT_FALSE(check_qt(bad).passed()) << e;
    }
}

TEST(RInvariance, C5OverF11) {
    const auto w = omega5();
    for (std::size_t k = 0; k < 5; ++k) {
        auto r = cyclic_r_matrix(F11, 5, w, k);
        // Invariance by direct re-indexing: R[ki][kj] summed into (i, j) must reproduce R.
        auto t = r_table(r);
        Matrix<ModP> moved(5, std::vector<ModP>(5, F11.zero()));
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) moved[(k * i) % 5][(k * j) % 5] += t[i][j];
        EXPECT_EQ(check_r_invariance(r).passed(), moved == t) << k;
        EXPECT_EQ(check_r_invariance(r).passed(), k == 1 || k == 4) << k;
    }
}

TEST(YDFromModule, ZeroRGivesZeroCoaction) {
    auto h = cyclic_endo_twist(Q, 3, 2);
    auto y = yd_from_module(regular_module(h), zero_r(h));
    EXPECT_EQ(y.coact().nonzeros(), 0u);
    EXPECT_TRUE(check_yd(y).passed());
}

TEST(YDFromModule, ClassicalZ2Coaction) {
    auto r = cyclic_r_matrix(Q, 2, q(-1), 1);
    auto y = yd_from_module(regular_module(r.base()), r);
    EXPECT_TRUE(check_yd(y).passed());
    // lambda(g^a) = sum_{ij} R[i][j] g^j (x) g^{i+a}.
    auto t = r_table(r);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t m = 0; m < 2; ++m) {
                auto expect = Q.zero();
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j)
                        if (j == x && (i + a) % 2 == m) expect += t[i][j];
                EXPECT_EQ(y.coact().at(x * 2 + m, a), expect);
            }
}

TEST(YDFromModule, TwistedC5) {
    auto r = cyclic_r_matrix(F11, 5, omega5(), 4);
    auto m = regular_module(r.base());
    EXPECT_TRUE(check_yd(yd_from_module(m, r)).passed());
}

TEST(YDFromModule, FailedPreconditionsNameTheAxiom) {
    auto r = cyclic_r_matrix(F11, 5, omega5(), 2);
    try {
        yd_from_module(regular_module(r.base()), r);
        FAIL() << "expected PreconditionError";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("invariant"), std::string::npos) << e.what();
    }
    auto good = cyclic_r_matrix(F7, 3, F7.from_int(2), 1);
    RElement<PrimeField> bad(good.base(), good.r().with_entry(0, 0, F7.from_int(3)));
    try {
        yd_from_module(regular_module(bad.base()), bad);
        FAIL() << "expected PreconditionError";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("quasitriangular"), std::string::npos) << e.what();
    }
    auto other = regular_module(cyclic_endo_twist(F7, 3, 2));
    EXPECT_THROW(yd_from_module(other, good), BaseMismatch);
}

TEST(QTCoincide, FixturesCoincideAndPerturbedRDoesNot) {
    auto z2 = cyclic_r_matrix(Q, 2, q(-1), 1);
    auto m2 = regular_module(z2.base());
    EXPECT_TRUE(check_qt_tensor_coincide(m2, m2, z2).passed());
    auto r5 = cyclic_r_matrix(F11, 5, omega5(), 4);
    auto m5 = regular_module(r5.base());
    EXPECT_TRUE(check_qt_tensor_coincide(m5, m5, r5).passed());
    std::size_t broken = 0;
    for (std::size_t e = 0; e < 25; ++e) {
        RElement<PrimeField> bad(r5.base(), r5.r().with_entry(e, 0, r5.r().at(e, 0) + F11.one()));
        ASSERT_FALSE(check_qt(bad).passed());
        auto c = check_qt_tensor_coincide(m5, m5, bad);
        if (!c.passed()) {
            ++broken;
            EXPECT_TRUE(has_law(c, "coincide_coaction"));
        }
    }
    EXPECT_EQ(broken, 25u);
}

TEST(QTBraiding, ClassicalZ2TriangularBraiding) {
    auto r = cyclic_r_matrix(Q, 2, q(-1), 1);
    auto m = regular_module(r.base());
    auto c = qt_braiding(m, m, r);
    // c(g^a (x) g^b) = sum_{ij} R[i][j] g^{j+b} (x) g^{i+a}.
    auto t = r_table(r);
    auto hand = oracle::zeros(Q, 4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) hand[((j + b) % 2) * 2 + (i + a) % 2][a * 2 + b] += t[i][j];
    EXPECT_EQ(c.dense(), hand);
    // R_21 R = 1 (x) 1 for this R, so the braiding is symmetric.
    auto id4 = oracle::zeros(Q, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) id4[i][i] = Q.one();
    EXPECT_EQ(oracle::mat_mul(Q, hand, hand), id4);
    EXPECT_EQ(compose(c, c), LQ::identity(Q, {2, 2}));
}

TEST(QTBraiding, AgreesWithInducedYDBraidings) {
    auto r = cyclic_r_matrix(F11, 5, omega5(), 4);
    auto m = regular_module(r.base());
    auto y = yd_from_module(m, r);
    EXPECT_EQ(qt_braiding(m, m, r), braiding_c(y, y));
    EXPECT_EQ(qt_B(m, m, r), braiding_B(y, y));
    EXPECT_EQ(qt_B(m, m, r), compose(tensor_map(m.alpha(), m.alpha()), qt_braiding(m, m, r)));
    auto b = qt_B(m, m, r);
    EXPECT_TRUE(check_hybe(b, b, b, m.alpha(), m.alpha(), m.alpha()).passed());
    auto z2 = cyclic_r_matrix(Q, 2, q(-1), 1);
    auto m2 = regular_module(z2.base());
    auto b2 = qt_B(m2, m2, z2);
    EXPECT_TRUE(check_hybe(b2, b2, b2, m2.alpha(), m2.alpha(), m2.alpha()).passed());
}

TEST(QTBraiding, NonInvertibleStructureMapOnlyBlocksC) {
    auto h = cyclic_endo_twist(Q, 4, 2);
    auto r = zero_r(h);
    auto m = regular_module(h);
    EXPECT_THROW(qt_braiding(m, m, r), NotInvertible);
    EXPECT_EQ(qt_B(m, m, r).nonzeros(), 0u);
}

TEST(CheckCQT, ZeroSigmaPasses) {
    auto h = cyclic_endo_twist(Q, 3, 2);
    EXPECT_TRUE(check_cqt(zero_sigma(h)).passed());
    EXPECT_TRUE(check_sigma_invariance(zero_sigma(h)).passed());
}

TEST(CheckCQT, BicharacterFixtures) {
    auto s3 = cyclic_bicharacter_sigma(F7, 3, F7.from_int(2), 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(s3.sigma().at(0, i * 3 + j), pow_int(F7, F7.from_int(2), i * j));
    EXPECT_TRUE(check_cqt(s3).passed());
    EXPECT_TRUE(check_cqt(cyclic_bicharacter_sigma(F11, 5, omega5(), 4)).passed());
    auto bad = SigmaForm<PrimeField>(s3.base(), s3.sigma().with_entry(0, 4, F7.from_int(5)));
    EXPECT_FALSE(check_cqt(bad).passed());
}

TEST(SigmaInvariance, SquareOneExponents) {
    const auto w = omega5();
    for (std::size_t k = 0; k < 5; ++k)
        EXPECT_EQ(check_sigma_invariance(cyclic_bicharacter_sigma(F11, 5, w, k)).passed(), (k * k) % 5 == 1) << k;
    for (std::size_t k = 0; k < 3; ++k)
        EXPECT_EQ(check_sigma_invariance(cyclic_bicharacter_sigma(F7, 3, F7.from_int(2), k)).passed(), (k * k) % 3 == 1) << k;
}

TEST(YDFromComodule, Examples) {
    auto h = cyclic_endo_twist(Q, 3, 2);
    auto z = yd_from_comodule(regular_comodule(h), zero_sigma(h));
    EXPECT_EQ(z.act().nonzeros(), 0u);
    EXPECT_TRUE(check_yd(z).passed());
    auto s3 = cyclic_bicharacter_sigma(F7, 3, F7.from_int(2), 1);
    auto y = yd_from_comodule(regular_comodule(s3.base()), s3);
    EXPECT_TRUE(check_yd(y).passed());
    // g . g^j = 2^j g^j.
    for (std::size_t j = 0; j < 3; ++j)
        EXPECT_EQ(y.act().column(1 * 3 + j), (LinearMap<PrimeField>::Column{{j, pow_int(F7, F7.from_int(2), j)}}));
    auto s5 = cyclic_bicharacter_sigma(F11, 5, omega5(), 4);
    EXPECT_TRUE(check_yd(yd_from_comodule(regular_comodule(s5.base()), s5)).passed());
    auto s5bad = cyclic_bicharacter_sigma(F11, 5, omega5(), 2);
    EXPECT_THROW(yd_from_comodule(regular_comodule(s5bad.base()), s5bad), PreconditionError);
}

TEST(CQTCoincide, FixturesCoincideAndPerturbedSigmaDoesNot) {
    auto s3 = cyclic_bicharacter_sigma(F7, 3, F7.from_int(2), 1);
    auto c3 = regular_comodule(s3.base());
    EXPECT_TRUE(check_cqt_tensor_coincide(c3, c3, s3).passed());
    auto s5 = cyclic_bicharacter_sigma(F11, 5, omega5(), 4);
    auto c5 = regular_comodule(s5.base());
    EXPECT_TRUE(check_cqt_tensor_coincide(c5, c5, s5).passed());
    for (std::size_t e = 0; e < 25; ++e) {
        SigmaForm<PrimeField> bad(s5.base(), s5.sigma().with_entry(0, e, s5.sigma().at(0, e) + F11.one()));
        auto r = check_cqt_tensor_coincide(c5, c5, bad);
        ASSERT_FALSE(r.passed()) << e;
        EXPECT_TRUE(has_law(r, "coincide_action"));
    }
}

TEST(CQTBraiding, AnyonicBraiding) {
    auto s = cyclic_bicharacter_sigma(F7, 3, F7.from_int(2), 1);
    auto m = regular_comodule(s.base());
    auto c = cqt_braiding(m, m, s);
    // c(g^i (x) g^j) = 2^{ij} g^j (x) g^i.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_EQ(c.column(i * 3 + j), (LinearMap<PrimeField>::Column{{j * 3 + i, pow_int(F7, F7.from_int(2), i * j)}}));
    EXPECT_TRUE(check_braid_relation(c, c, c).passed());
    EXPECT_FALSE(compose(c, c) == LinearMap<PrimeField>::identity(F7, {3, 3}));
}

TEST(CQTBraiding, AgreesWithInducedYDBraidings) {
    auto s = cyclic_bicharacter_sigma(F11, 5, omega5(), 4);
    auto m = regular_comodule(s.base());
    auto y = yd_from_comodule(m, s);
    EXPECT_EQ(cqt_braiding(m, m, s), braiding_c(y, y));
    EXPECT_EQ(cqt_B(m, m, s), braiding_B(y, y));
    EXPECT_EQ(cqt_B(m, m, s), compose(tensor_map(m.alpha(), m.alpha()), cqt_braiding(m, m, s)));
    auto b = cqt_B(m, m, s);
    EXPECT_TRUE(check_hybe(b, b, b, m.alpha(), m.alpha(), m.alpha()).passed());
    auto other = regular_comodule(cyclic_endo_twist(F11, 5, 1));
    EXPECT_THROW(cqt_B(other, m, s), BaseMismatch);
}
