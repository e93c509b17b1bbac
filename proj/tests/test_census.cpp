#include <gtest/gtest.h>

#include "hilbzeta/census.hpp"

using namespace hilbzeta;

namespace {

// Descending coefficient list, last entry is the constant term.
LaurentPoly desc(std::initializer_list<int> c) {
    std::vector<Integer> v(c.begin(), c.end());
    std::reverse(v.begin(), v.end());
    return LaurentPoly(0, v);
}

const LaurentPoly Q = LaurentPoly::q();
const LaurentPoly ONE(1);

} // namespace

TEST(Cells, AffineAndSemiInvertible) {
    const auto p11 = Partition::from_parts({1, 1});
    const auto p2 = Partition::from_parts({2});
    EXPECT_EQ(cell_card_affine(p11), Q.pow(4));
    EXPECT_EQ(cell_card_affine(p2), Q.pow(3));
    EXPECT_EQ(poly_A(2), Q.pow(4) + Q.pow(3));
    EXPECT_EQ(poly_A(6), desc({1, 1, 2, 3, 3, 1, 0, 0, 0, 0, 0, 0, 0}));

    EXPECT_EQ(cell_card_semi_invertible(p11), (Q - ONE) * Q.pow(3));
    EXPECT_EQ(cell_card_semi_invertible(p2), (Q - ONE) * Q.pow(2));
    EXPECT_EQ(poly_B(2), (Q - ONE) * Q.pow(2) * (Q + ONE));
    EXPECT_EQ(poly_Bcirc(2), Q + ONE);
    for (int i = 1; i <= 4; ++i)
        for (int e = 1; e <= 4; ++e) {
            const auto rect = Partition::from_parts(std::vector<int>(static_cast<std::size_t>(e), i));
            EXPECT_EQ(cell_card_semi_invertible(rect), (Q - ONE) * Q.pow(static_cast<unsigned>(i * e + e - 1)));
        }
}

TEST(Cells, Invertible) {
    const auto qm1sq = (Q - ONE).pow(2);
    EXPECT_EQ(cell_card_invertible(Partition::from_parts({1, 1})), qm1sq * (Q.pow(2) + ONE));
    EXPECT_EQ(cell_card_invertible(Partition::from_parts({2})), qm1sq * Q);
    // t = 2, d = (1, 2)
    const auto la = Partition::from_increments({1, 2});
    EXPECT_EQ(la.n(), 4);
    EXPECT_EQ(poly_P_lambda(la), desc({1, -2, 2, -2, 1, 0}));
    for (int n = 1; n <= 24; ++n)
        for (auto d : divisors(n)) {
            const auto rect = Partition::from_parts(std::vector<int>(static_cast<std::size_t>(d), static_cast<int>(n / d)));
            EXPECT_EQ(poly_P_lambda(rect), q_square_integer(static_cast<int>(d)).shifted(n - d)) << rect.str();
        }
}

TEST(Cells, DegreesAreNPlusEll) {
    for (int n = 1; n <= 10; ++n)
        for_each_partition(n, [&](const Partition& la) {
            for (auto f : {CellFlavor::affine, CellFlavor::semi_invertible, CellFlavor::invertible}) {
                const auto c = cell_card(la, f);
                EXPECT_EQ(c.degree(), n + la.ell()) << la.str() << " " << flavor_name(f);
                EXPECT_EQ(c.leading_coeff(), 1);
                EXPECT_GE(c.low_degree(), 0);
            }
        });
}

TEST(Polys, TableValues) {
    EXPECT_EQ(poly_C(6), desc({1, -1, 0, 0, 0, 1, -2, 1, 0, 0, 0, -1, 1}));
    EXPECT_EQ(poly_P(5), desc({1, 1, 1, 0, 0, 0, 1, 1, 1}));
    EXPECT_EQ(poly_Bcirc(5), desc({1, 1, 1, 0, -1}));
    EXPECT_EQ(poly_C(1), desc({1, -2, 1}));
    EXPECT_EQ(poly_P(1), ONE);
    EXPECT_EQ(poly_P(2), desc({1, 1, 1}));
    EXPECT_EQ(poly_Bcirc(12), desc({1, 1, 1, 1, 1, 1, 1, 0, -1, -1, 0, 1}));
    EXPECT_EQ(poly_A(12).eval(Integer(1)), 77);
}

TEST(Polys, BAndBcircAgree) {
    for (int n = 1; n <= 18; ++n) EXPECT_EQ(poly_B(n), (Q - ONE) * poly_Bcirc(n).shifted(n)) << n;
}

TEST(Coefficients, CValues) {
    EXPECT_EQ(coeff_c(1, 0), -2);
    EXPECT_EQ(coeff_c(6, 0), -2);
    EXPECT_EQ(coeff_c(3, 0), 2);
    EXPECT_EQ(coeff_c(10, 0), 2);
    EXPECT_EQ(coeff_c(5, 2), -1);
    for (int n = 1; n <= 200; ++n) {
        EXPECT_EQ(coeff_c(n, n), 1);
        if (n >= 2) {
            EXPECT_EQ(coeff_c(n, n - 1), -1);
        }
    }
    EXPECT_THROW(coeff_c(3, 4), std::invalid_argument);
    EXPECT_THROW(coeff_c(0, 0), std::invalid_argument);
}

TEST(Coefficients, Trapezoidal) {
    EXPECT_EQ(is_trapezoidal(3, 0), std::optional<std::int64_t>(2));
    EXPECT_EQ(is_trapezoidal(5, 1), std::optional<std::int64_t>(2));
    EXPECT_EQ(is_trapezoidal(4, 1), std::nullopt);
    // brute force: n = (i+1) + ... + (i+k)
    for (int n = 1; n <= 300; ++n)
        for (int i = 0; i <= n; ++i) {
            std::optional<std::int64_t> brute;
            int s = 0;
            for (int k = 1; s < n; ++k) {
                s += i + k;
                if (s == n) brute = k;
            }
            ASSERT_EQ(is_trapezoidal(n, i), brute) << n << "," << i;
        }
}

TEST(Coefficients, AValues) {
    EXPECT_EQ(coeff_a(6, 0), 2);
    EXPECT_EQ(coeff_a(2, 1), 1);
    EXPECT_EQ(coeff_a(2, 0), 1);
    EXPECT_EQ(coeff_a(5, 7), 0);
    for (int n = 2; n <= 100; ++n) {
        EXPECT_EQ(coeff_a(n, n - 1), 1) << n;
        if (n >= 3) {
            EXPECT_EQ(coeff_a(n, n - 2), 1) << n;
        }
    }
}

TEST(Coefficients, MiddleDivisorsMatchFloatingDefinitionAwayFromBoundaries) {
    // a_{n,0}: divisors in (sqrt(n/2), sqrt(2n)], checked by squaring.
    for (int n = 1; n <= 2000; ++n) {
        int count = 0;
        for (auto d : divisors(n))
            if (2 * d * d > n && d * d <= 2 * n) ++count;
        ASSERT_EQ(coeff_a(n, 0), count) << n;
    }
}

TEST(ClosedForms, SmallCases) {
    EXPECT_EQ(poly_C_from_c(3), desc({1, -1, -1, 2, -1, -1, 1}));
    EXPECT_EQ(poly_P_from_a(1), ONE);
    const auto p12 = poly_P_from_a(12);
    for (int e = 9; e <= 13; ++e) EXPECT_EQ(p12.coeff(e), 2);
    EXPECT_EQ(p12.coeff(8), 1);
    EXPECT_EQ(p12.coeff(14), 1);
}

TEST(ClosedForms, EvenForm) {
    EXPECT_EQ(poly_P_even_form(1), ONE);
    EXPECT_EQ(poly_P_even_form(2), desc({1, 1, 1}));
    EXPECT_EQ(poly_P_even_form(6), poly_P(6));
}

TEST(ClosedForms, TripleAgreementSmall) {
    for (int n = 1; n <= 30; ++n) {
        const auto c = poly_C(n);
        ASSERT_EQ(c, poly_C_from_c(n)) << n;
        ASSERT_EQ(c, (Q - ONE).pow(2) * poly_P_from_a(n)) << n;
        ASSERT_EQ(poly_P_even_form(n), poly_P_from_a(n)) << n;
    }
}

TEST(ClosedForms, PalindromicDegreesValues) {
    for (int n = 1; n <= 40; ++n) {
        const auto c = poly_C_from_c(n);
        const auto p = poly_P_from_a(n);
        EXPECT_EQ(c.reflected().shifted(2 * n), c);
        EXPECT_EQ(p.reflected().shifted(2 * n - 2), p);
        EXPECT_EQ(c.degree(), 2 * n);
        EXPECT_EQ(c.leading_coeff(), 1);
        EXPECT_EQ(p.degree(), 2 * n - 2);
        EXPECT_EQ(p.leading_coeff(), 1);
        EXPECT_EQ(c.eval(Integer(1)), 0);
        EXPECT_EQ(c.eval(Integer(-1)), 4 * p.eval(Integer(-1)));
    }
}

TEST(ClosedForms, LinearRelations) {
    for (int n = 1; n <= 120; ++n) {
        EXPECT_EQ(coeff_c(n, 0), -2 * coeff_a(n, 0) + 2 * coeff_a(n, 1));
        for (int i = 1; i <= n; ++i) {
            const auto below = coeff_a(n, i - 1);
            EXPECT_EQ(coeff_c(n, i), coeff_a(n, i + 1) - 2 * coeff_a(n, i) + below) << n << "," << i;
        }
    }
}

TEST(Mutation, FormulasAreInjectable) {
    Formulas f = standard_formulas();
    f.coeff_c = [](std::int64_t n, std::int64_t i) { return i == 0 ? -coeff_c(n, 0) : coeff_c(n, i); };
    EXPECT_NE(poly_C_from_c(1, f), poly_C(1));
    EXPECT_EQ(poly_C_from_c(2, f), poly_C(2));  // c_{2,0} = 0
}

TEST(Valuation, WordPrefix) {
    const auto w = valuation_word(14);
    EXPECT_EQ(w.word.substr(0, 6), "001102");
    EXPECT_EQ(w.word[4], '0');
    EXPECT_EQ(w.word[11], '0');
    EXPECT_EQ(conjectured_valuation_word(12), "001102011110");
}
