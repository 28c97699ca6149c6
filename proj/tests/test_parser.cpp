#include "polyharm/gen.hpp"
#include "polyharm/parser.hpp"

#include <doctest.h>

#include <string>

using namespace polyharm;

namespace {

const BiPoly z = BiPoly::z();
const BiPoly zb = BiPoly::zbar();
const GaussianRational I = GaussianRational::imaginary_unit();

std::size_t error_offset(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("no ParseError for: " << text);
    return 0;
}

}  // namespace

TEST_CASE("parse examples") {
    CHECK(parse("z^2 + conj(z)*abs2(z)") == z * z + z * zb * zb);
    BiPoly f = parse("(1/2 + 3/4*i)*z");
    REQUIRE(f.size() == 1);
    CHECK(f.coefficient(1, 0) == GaussianRational(make_rational(1, 2), make_rational(3, 4)));
    CHECK(parse("abs2(z+1)") == z * zb + z + zb + BiPoly(1));
    CHECK(parse("  z   *zbar ") == z * zb);
    CHECK(parse("conj(i*z^2)") == -I * zb * zb);
    CHECK(parse("6/4") == BiPoly(GaussianRational(make_rational(3, 2))));
    CHECK(parse("0*z").is_zero());
    CHECK(parse("z^0") == BiPoly(1));
}

TEST_CASE("precedence and associativity") {
    CHECK(parse("1 + 2*z^2") == BiPoly(1) + GaussianRational(2) * z * z);
    CHECK(parse("2*z^2") == parse("2*(z^2)"));
    CHECK_FALSE(parse("2*z^2") == parse("(2*z)^2"));
    CHECK(parse("z - 1 - 1") == z - BiPoly(2));
    CHECK(parse("-z + 1") == BiPoly(1) - z);
    CHECK(parse("-z^2") == -(z * z));
    CHECK(parse("(z+zbar)^2*i") == I * (z + zb).pow(2));
    CHECK(parse("1/2*z") == GaussianRational(make_rational(1, 2)) * z);
}

TEST_CASE("print examples") {
    CHECK(print(z * zb * zb) == "z*zbar^2");
    CHECK(print(BiPoly()) == "0");
    CHECK(print(z - zb) == "-zbar + z");
    CHECK(print(BiPoly(1) - z) == "1 - z");
}

TEST_CASE("print then parse is the identity") {
    SplitMix64 rng(61);
    for (int n = 0; n < 500; ++n) {
        BiPoly f = gen_bipoly(rng, 6, 8);
        CHECK(parse(print(f)) == f);
    }
}

TEST_CASE("malformed input reports a position") {
    CHECK(error_offset("") == 0);
    CHECK(error_offset("2z") == 1);
    CHECK(error_offset("z +") == 3);
    CHECK(error_offset("z ^ zbar") == 4);
    CHECK(error_offset("conj z") == 5);
    CHECK(error_offset("(z + 1") == 6);
    CHECK(error_offset("z)") == 1);
    CHECK(error_offset("w") == 0);
    CHECK(error_offset("z * $") == 4);
    CHECK(error_offset("z^99999999999") == 2);
    CHECK(error_offset("1/") == 2);
    CHECK(error_offset("z--1") == 2);
    CHECK(error_offset("1.5") == 1);

    try {
        parse("z + * 1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
        CHECK_FALSE(e.expected().empty());
        CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
    }
}

TEST_CASE("zero denominators") {
    CHECK_THROWS_AS(parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(parse("z + 3/00"), DivisionByZero);
}

TEST_CASE("ast shape") {
    ExprAst a = parse_ast("z + zbar*2");
    CHECK(a.kind == ExprAst::Kind::Add);
    REQUIRE(a.children.size() == 2);
    CHECK(a.children[0].kind == ExprAst::Kind::VarZ);
    CHECK(a.children[1].kind == ExprAst::Kind::Mul);
    CHECK(a.children[1].offset == 8);
    ExprAst p = parse_ast("abs2(z)^3");
    CHECK(p.kind == ExprAst::Kind::Pow);
    CHECK(p.exponent == 3);
    CHECK(p.children[0].kind == ExprAst::Kind::Abs2);
    ExprAst n = parse_ast("-z");
    CHECK(n.kind == ExprAst::Kind::Sub);
    CHECK(lower(n) == -z);
}
