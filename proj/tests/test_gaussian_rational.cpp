#include "polyharm/gaussian_rational.hpp"

#include <doctest.h>

using namespace polyharm;

TEST_CASE("rationals are kept in lowest terms") {
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK(make_rational(6, -4).get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
    CHECK(rational_to_string(make_rational(-3, 2)) == "-3/2");
    CHECK(rational_to_string(make_rational(4, 2)) == "2");
}

TEST_CASE("field arithmetic") {
    GaussianRational a(make_rational(1, 2), make_rational(3, 4));
    GaussianRational b(2, -1);
    CHECK(a + b == GaussianRational(make_rational(5, 2), make_rational(-1, 4)));
    CHECK(a - a == GaussianRational());
    // (1/2 + 3/4 i)(2 - i) = 1 + 3/4 + (3/2 - 1/2) i
    CHECK(a * b == GaussianRational(make_rational(7, 4), 1));
    CHECK((a * b) / b == a);
    CHECK(a / a == GaussianRational(1));
    CHECK_THROWS_AS(a / GaussianRational(), DivisionByZero);
    CHECK(GaussianRational::imaginary_unit().pow(2) == GaussianRational(-1));
    CHECK(GaussianRational::imaginary_unit().pow(0) == GaussianRational(1));
    CHECK(b.pow(3) == b * b * b);
}

TEST_CASE("conjugate and norm") {
    GaussianRational c(3, 4);
    CHECK(c.conj() == GaussianRational(3, -4));
    CHECK(c.norm() == 25);
    CHECK(c * c.conj() == GaussianRational(25));
    CHECK(GaussianRational(5).is_real());
    CHECK_FALSE(c.is_real());
    CHECK(GaussianRational().is_zero());
}

TEST_CASE("unit circle points have modulus one") {
    for (long t = 0; t < 20; ++t) {
        GaussianRational c = GaussianRational::unit_circle_point(t);
        CHECK(c.norm() == 1);
    }
    CHECK(GaussianRational::unit_circle_point(0) == GaussianRational(1));
    CHECK(GaussianRational::unit_circle_point(1) == GaussianRational::imaginary_unit());
    CHECK(GaussianRational::unit_circle_point(2) == GaussianRational(make_rational(-3, 5), make_rational(4, 5)));
    CHECK(GaussianRational::unit_circle_point(make_rational(1, 2)) ==
          GaussianRational(make_rational(3, 5), make_rational(4, 5)));
}

TEST_CASE("text form") {
    CHECK(GaussianRational().to_string() == "0");
    CHECK(GaussianRational(make_rational(-1, 3)).to_string() == "-1/3");
    CHECK(GaussianRational::imaginary_unit().to_string() == "i");
    CHECK((-GaussianRational::imaginary_unit()).to_string() == "-i");
    CHECK(GaussianRational(0, make_rational(2, 3)).to_string() == "2/3*i");
    CHECK(GaussianRational(make_rational(1, 2), make_rational(3, 4)).to_string() == "1/2 + 3/4*i");
    CHECK(GaussianRational(1, -1).to_string() == "1 - i");
}

TEST_CASE("to_complex") {
    auto v = GaussianRational(make_rational(1, 4), -2).to_complex();
    CHECK(v.real() == doctest::Approx(0.25));
    CHECK(v.imag() == doctest::Approx(-2.0));
}
