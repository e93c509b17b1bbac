#include <gtest/gtest.h>

#include "hilbzeta/io.hpp"

using namespace hilbzeta;

TEST(Json, LaurentRoundTrip) {
    for (int n = 1; n <= 15; ++n)
        for (const auto& p : {poly_A(n), poly_Bcirc(n), poly_C(n), poly_P(n), poly_C(n).shifted(-n)})
            EXPECT_EQ(laurent_from_json(Json::parse(laurent_to_json(p).dump())), p);
    const LaurentPoly big = LaurentPoly::monomial(3, ipow(Integer(10), 30)) - 1;
    const Json j = laurent_to_json(big);
    EXPECT_TRUE(j["coeffs"][3].is_string());
    EXPECT_EQ(laurent_from_json(j), big);
    EXPECT_EQ(laurent_from_json(laurent_to_json(LaurentPoly())), LaurentPoly());
}

TEST(Json, IntegerEncoding) {
    EXPECT_TRUE(integer_to_json(Integer(42)).is_number_integer());
    EXPECT_EQ(integer_from_json(Json("123456789012345678901234567890")), Integer("123456789012345678901234567890"));
    EXPECT_THROW(integer_from_json(Json(1.5)), std::invalid_argument);
}

TEST(Poly, Reports) {
    const auto c8 = poly_report("C", 8);
    EXPECT_EQ(render(c8.poly), "q^16 - q^15 - q + 1");
    EXPECT_EQ(c8.companions[0].value, 4);
    EXPECT_EQ(render(poly_report("P", 1).poly), "1");
    EXPECT_EQ(render(poly_report("Bcirc", 12).poly), "q^11 + q^10 + q^9 + q^8 + q^7 + q^6 + q^5 - q^3 - q^2 + 1");
    const auto p10 = poly_report("P", 10);
    EXPECT_EQ(p10.companions[0].value, 18);
    EXPECT_EQ(p10.companions[1].value, 2);
    EXPECT_EQ(p10.companions[4].value, 0);
    EXPECT_THROW(poly_report("Z", 3), std::invalid_argument);
    EXPECT_THROW(poly_report("A", 0), std::invalid_argument);
    const Json j = Json::parse(render_poly_report(c8, OutputFormat::json));
    EXPECT_EQ(laurent_from_json(j["poly"]), c8.poly);
}

TEST(Tables, Shapes) {
    const auto t2 = make_table(2, 12);
    EXPECT_EQ(t2.columns.size(), 7u);
    EXPECT_EQ(t2.rows.size(), 12u);
    const auto t6 = make_table(6, 18);
    EXPECT_EQ(t6.rows.size(), 4u);
    EXPECT_EQ(t6.rows[2][3].text, "4");
    EXPECT_THROW(make_table(8, 3), std::invalid_argument);
}

TEST(Tables, FormatsAreStable) {
    for (int id = 1; id <= 7; ++id) {
        const auto t = make_table(id, 6);
        for (auto fmt : {OutputFormat::plain, OutputFormat::csv, OutputFormat::json})
            EXPECT_EQ(render_table(t, fmt), render_table(make_table(id, 6), fmt));
    }
    const Json j = Json::parse(render_table(make_table(1, 5), OutputFormat::json));
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(laurent_from_json(j["rows"][n - 1][1]), poly_C(n));
    const std::string csv = render_table(make_table(3, 2), OutputFormat::csv);
    EXPECT_EQ(csv, "n,B_n^o(q),B_n^o(1),B_n^o(-1)\n1,1,1,1\n2,q + 1,2,0\n");
}

TEST(Normalize, TypesetForms) {
    EXPECT_EQ(normalize_cell("q^{10} - q^9 - q^7+ q^6"), "q^10-q^9-q^7+q^6");
    EXPECT_EQ(normalize_cell("3q^{15} + " + std::string(" + 5q^{14}")), "3q^15+5q^14");
    EXPECT_EQ(normalize_cell(render(poly_C(5))), normalize_cell("q^{10} - q^9 - q^7+ q^6 +  q^4 - q^3 - q + 1"));
}
