#include "helpers.hpp"
#include "tridet/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>

using namespace tridet;

namespace {

std::size_t offset_of(const std::string& text) {
    try {
        parse_poly(text);
    } catch (const ParseError& e) {
        return e.offset;
    }
    FAIL("expected ParseError for \"" << text << "\"");
    return SIZE_MAX;
}

}  // namespace

TEST_CASE("parsing polynomial text") {
    SECTION("grammar forms") {
        CHECK(parse_poly("x^3 - x") == Poly{0, -1, 0, 1});
        CHECK(parse_poly("x^5-5*x^3+4*x") == Poly{0, 4, 0, -5, 0, 1});
        CHECK(parse_poly("1/2*x^2 - 1/3") == Poly{Rat(-1, 3), 0, Rat(1, 2)});
        CHECK(parse_poly("-x") == Poly{0, -1});
        CHECK(parse_poly("+x") == Poly{0, 1});
        CHECK(parse_poly("7") == Poly{7});
        CHECK(parse_poly("-3/4") == Poly{Rat(-3, 4)});
        CHECK(parse_poly("x") == Poly{0, 1});
        CHECK(parse_poly("2*x^0") == Poly{2});
        CHECK(parse_poly("0") == Poly{});
        CHECK(parse_poly("3x") == Poly{0, 3});  // '*' is optional
        CHECK(parse_poly("x + x - 1") == Poly{-1, 2});  // like terms combine
        CHECK(parse_poly("123456789012345678901234567890*x") ==
              Poly{0, Rat(Int("123456789012345678901234567890"))});
    }

    SECTION("whitespace never matters") {
        const Poly want{Rat(-1, 2), 0, 1};
        CHECK(parse_poly("x^2-1/2") == want);
        CHECK(parse_poly(" x ^ 2 - 1 / 2 ") == want);
        CHECK(parse_poly("x^2\t-\n1/2") == want);
    }

    SECTION("errors carry the offending byte offset") {
        CHECK(offset_of("2/0*x") == 2);   // zero denominator
        CHECK(offset_of("") == 0);        // empty input
        CHECK(offset_of("   ") == 3);
        CHECK(offset_of("x +") == 3);     // dangling sign
        CHECK(offset_of("x y") == 2);     // missing '+'/'-'
        CHECK(offset_of("x^") == 2);      // missing exponent
        CHECK(offset_of("x^1001") == 2);  // exponent too large
        CHECK(offset_of("5/") == 2);      // missing denominator
        CHECK(offset_of("2*3") == 2);     // '*' must be followed by x
        CHECK(parse_poly("x^1000").degree() == 1000);
    }
}

TEST_CASE("printing polynomial text") {
    SECTION("pinned canonical forms") {
        CHECK(poly_to_string(Poly{0, Rat(-1, 3), 0, 1}) == "x^3 - 1/3*x");
        CHECK(poly_to_string(Poly{}) == "0");
        CHECK(poly_to_string(Poly{2, 0, -1}) == "-x^2 + 2");
        CHECK(poly_to_string(Poly{Rat(1, 2)}) == "1/2");
        CHECK(poly_to_string(Poly{-1}) == "-1");
        CHECK(poly_to_string(Poly{5, 1}) == "x + 5");
        CHECK(poly_to_string(Poly{0, 0, 1}) == "x^2");
        CHECK(poly_to_string(Poly{0, -1}) == "-x");
        CHECK(poly_to_string(Poly{0, 4, 0, -5, 0, 1}) == "x^5 - 5*x^3 + 4*x");
    }

    SECTION("round trip") {
        testutil::Gen g(616);
        for (int it = 0; it < 50; ++it) {
            Poly p = g.monic(g.int_in(0, 7));
            if (g.int_in(0, 3) == 0) p = g.rat() * p;  // non-monic and zero cases too
            CHECK(parse_poly(poly_to_string(p)) == p);
        }
    }
}
