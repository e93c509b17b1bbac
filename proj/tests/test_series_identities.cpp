#include <gtest/gtest.h>

#include "hilbzeta/series_identities.hpp"

using namespace hilbzeta;

namespace {

std::vector<Integer> ints(std::initializer_list<int> c) { return {c.begin(), c.end()}; }

std::vector<Integer> head(const ZSeries& s, int upto) {
    return {s.coeffs().begin(), s.coeffs().begin() + upto + 1};
}

} // namespace

TEST(GfC, Coefficients) {
    const auto g = gf_C(8);
    EXPECT_EQ(g[0], LaurentPoly(1));
    EXPECT_EQ(g[3], LaurentPoly(-3, {1, -1, -1, 2, -1, -1, 1}));
    EXPECT_EQ(g[6], poly_C(6).shifted(-6));
}

TEST(GfB, Coefficients) {
    const auto g = gf_B(6);
    EXPECT_EQ(g[0], LaurentPoly(1));
    EXPECT_EQ(g[2], LaurentPoly(0, {-1, 0, 1}));
    EXPECT_EQ(g[5], LaurentPoly(0, {-1, 1}) * LaurentPoly(0, {-1, 0, 1, 1, 1}));
}

TEST(GfA, Coefficients) {
    const auto g = gf_A(8);
    EXPECT_EQ(g[1], LaurentPoly::monomial(2));
    EXPECT_EQ(g[4], LaurentPoly(5, {1, 2, 1, 1}));
    EXPECT_EQ(g[8].eval(Integer(-1)), 2);
}

TEST(GfRect, SmallCoefficients) {
    const LaurentPoly qm1sq = LaurentPoly(0, {-1, 1}).pow(2);
    auto [l1, r1] = gf_rect_factor(1, 4);
    EXPECT_EQ(l1[1], qm1sq);
    EXPECT_EQ(r1[1], qm1sq);
    EXPECT_EQ(l1[2], qm1sq * LaurentPoly(0, {1, 0, 1}));
    EXPECT_EQ(r1[2], l1[2]);
    auto [l2, r2s] = gf_rect_factor(2, 4);
    EXPECT_EQ(l2[0], LaurentPoly(1));
    EXPECT_EQ(r2s[0], LaurentPoly(1));
    EXPECT_EQ(l2, r2s);
}

TEST(GfCoefficients, AAndC) {
    const auto c0 = gf_c(0, 10);
    EXPECT_EQ(head(c0, 10), ints({0, -2, 0, 2, 0, 0, -2, 0, 0, 0, 2}));
    EXPECT_EQ(gf_a(0, 10)[6], 2);
    for (int i = 1; i <= 6; ++i) {
        const auto a = gf_a(i, 12);
        for (int n = 0; n <= i; ++n) EXPECT_EQ(a[n], 0);
    }
}

TEST(GfP, Closed) {
    const auto g = gf_P_closed(6);
    EXPECT_EQ(g[1], LaurentPoly(1));
    EXPECT_EQ(g[2], LaurentPoly(-1, {1, 1, 1}));
    EXPECT_EQ(g[4], LaurentPoly(-3, {1, 1, 1, 1, 1, 1, 1}));
}

TEST(Eta, Expansions) {
    EXPECT_EQ(head(eta_quotient_expand(eta_for_root(3), 4), 4), ints({1, -3, 0, 6, -3}));
    EXPECT_EQ(eta_quotient_expand(EtaQuotient{}, 5), ZSeries::one(5));
    EXPECT_THROW(eta_quotient_expand(EtaQuotient{{{1, 1}}}, 5), std::invalid_argument);
    EXPECT_EQ(head(gf_root_of_unity(2, 5), 5), ints({1, -4, 4, 0, 4, -8}));
}

TEST(Eta, RootOfUnityMagnitudes) {
    const auto a3 = abs_series(gf_root_of_unity(3, 6));
    EXPECT_EQ(head(a3, 4), ints({1, 3, 0, 6, 3}));
    const auto a6 = abs_series(gf_root_of_unity(6, 6));
    EXPECT_EQ(head(a6, 5), ints({1, 1, 2, 0, 1, 4}));
    const auto a4 = abs_series(gf_root_of_unity(4, 6));
    EXPECT_EQ(head(a4, 6), ints({1, 2, 2, 4, 2, 0, 4}));
}

TEST(Theta, Basics) {
    EXPECT_EQ(head(theta_phi(4), 4), ints({1, 2, 0, 0, 2}));
    EXPECT_EQ(head(theta_psi(6), 6), ints({1, 1, 0, 1, 0, 0, 1}));
    const auto phi = theta_phi(20);
    const auto tail = ZSeries::monomial(20, 1, 2) * theta_psi(20).substitute_power(8);
    EXPECT_EQ(phi.substitute_power(4) + tail, phi);
}

TEST(Somos, Identities) {
    const auto r = somos_identity_check(40);
    for (const auto& c : r) EXPECT_TRUE(c.pass) << format_line(c);
    EXPECT_EQ(r2_prime(9), 6);
}

TEST(Scan, A6SumOfSquares) {
    EXPECT_TRUE(a6_sum_of_squares_scan(gf_root_of_unity(6, 60)).empty());
}

TEST(Suite, AllPassAtSmallOrder) {
    SeriesSuiteOptions o;
    o.order = 16;
    o.gauss_order = 40;
    o.euler_order = 30;
    o.theta_order = 30;
    o.lambda_bound = 60;
    const auto r = series_identity_suite(o);
    for (const auto& c : r) EXPECT_TRUE(c.pass) << format_line(c);
}

TEST(Suite, MutatedCoefficientFails) {
    SeriesSuiteOptions o;
    o.order = 10;
    o.gauss_order = o.euler_order = o.theta_order = o.lambda_bound = 10;
    Formulas f = standard_formulas();
    f.coeff_c = [](std::int64_t n, std::int64_t i) { return i == 0 ? -coeff_c(n, 0) : coeff_c(n, i); };
    EXPECT_FALSE(all_pass(series_identity_suite(o, f)));
}
