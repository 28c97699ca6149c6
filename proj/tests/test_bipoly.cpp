#include "oracles.hpp"
#include "polyharm/bipoly.hpp"
#include "polyharm/gen.hpp"

#include <doctest.h>

using namespace polyharm;

namespace {

const BiPoly z = BiPoly::z();
const BiPoly zb = BiPoly::zbar();
const GaussianRational I = GaussianRational::imaginary_unit();

GaussianRational q(long n, long d = 1) {
    return GaussianRational(make_rational(n, d));
}

}  // namespace

TEST_CASE("multiplication examples") {
    CHECK((z + zb) * (z - zb) == z * z - zb * zb);
    CHECK((z * zb) * (z * zb) == BiPoly::monomial(1, 2, 2));
    BiPoly lhs = (BiPoly(1) + I * z) * (BiPoly(1) - I * zb);
    CHECK(lhs == BiPoly(1) - I * zb + I * z + z * zb);
}

TEST_CASE("zero coefficients are never stored") {
    BiPoly f = z + zb;
    f -= z;
    CHECK(f == zb);
    CHECK(f.size() == 1);
    CHECK((z - z).is_zero());
    CHECK((z * BiPoly()).is_zero());
    CHECK(BiPoly::monomial(0, 3, 1).is_zero());
    CHECK(BiPoly(GaussianRational()).is_zero());
    BiPoly g = z;
    g *= GaussianRational();
    CHECK(g.is_zero());
}

TEST_CASE("degrees and coefficients") {
    BiPoly f = BiPoly::monomial(q(3), 2, 5) + BiPoly::monomial(I, 4, 0);
    CHECK(f.deg_z() == 4);
    CHECK(f.deg_zbar() == 5);
    CHECK(f.total_degree() == 7);
    CHECK(f.coefficient(2, 5) == q(3));
    CHECK(f.coefficient(1, 1).is_zero());
    CHECK(BiPoly().deg_z() == 0);
    CHECK(BiPoly(7).is_constant());
    CHECK(BiPoly().is_constant());
    CHECK_FALSE(z.is_constant());
    CHECK(BiPoly::abs2_power(3) == (z * zb).pow(3));
    CHECK(z.pow(0) == BiPoly(1));
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(GaussianRational(2) * z + I * zb * zb) == GaussianRational(2) * zb - I * z * z);
    CHECK(conjugate(z * zb) == z * zb);
    CHECK(conjugate(q(3, 4) * z.pow(3)) == q(3, 4) * zb.pow(3));
}

TEST_CASE("compose examples") {
    BiPoly w2 = z * z;
    CHECK(compose(w2, z + zb) == z * z + GaussianRational(2) * z * zb + zb * zb);
    CHECK(compose(zb, z * z) == zb * zb);
    GaussianRational c(make_rational(3, 5), make_rational(4, 5));
    CHECK(compose(z * zb, c * z * zb) == BiPoly::monomial(1, 2, 2));
    CHECK(compose(z, z * zb + I) == z * zb + I);
    CHECK(compose(BiPoly(5), z) == BiPoly(5));
    CHECK(compose(z + zb, BiPoly()).is_zero());
}

TEST_CASE("eval_exact examples") {
    CHECK(eval_exact(z * zb, GaussianRational(3, 4)) == GaussianRational(25));
    CHECK(eval_exact(z * z + zb * zb, I) == GaussianRational(-2));
    CHECK(eval_exact(BiPoly::monomial(1, 2, 3) + z, GaussianRational(1, 1)) == GaussianRational(5, -3));
    CHECK(eval_exact(BiPoly(), I).is_zero());
}

TEST_CASE("canonical_print examples") {
    CHECK(canonical_print(BiPoly()) == "0");
    CHECK(canonical_print(z * zb + BiPoly(4)) == "4 + z*zbar");
    CHECK(canonical_print(q(1, 2) * z * z) == "1/2*z^2");
    CHECK(canonical_print(z * zb * zb) == "z*zbar^2");
    CHECK(canonical_print(z - zb) == "-zbar + z");
    CHECK(canonical_print(-z) == "-z");
    CHECK(canonical_print(I * z - I * zb) == "-i*zbar + i*z");
    CHECK(canonical_print(GaussianRational(make_rational(1, 2), make_rational(3, 4)) * z) == "(1/2 + 3/4*i)*z");
    CHECK(canonical_print(BiPoly(-3) + q(-2, 7) * z.pow(2) * zb) == "-3 - 2/7*z^2*zbar");
}

TEST_CASE("ring laws on random polynomials") {
    SplitMix64 rng(11);
    for (int n = 0; n < 200; ++n) {
        BiPoly a = gen_bipoly(rng, 4, 6);
        BiPoly b = gen_bipoly(rng, 4, 6);
        BiPoly c = gen_bipoly(rng, 4, 6);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * BiPoly(1) == a);
        CHECK(a * b == oracle::naive_mul(a, b));
        CHECK(a.pow(3) == a * a * a);
    }
}

TEST_CASE("conjugation is an involutive ring automorphism") {
    SplitMix64 rng(12);
    for (int n = 0; n < 200; ++n) {
        BiPoly a = gen_bipoly(rng, 4, 6);
        BiPoly b = gen_bipoly(rng, 4, 6);
        CHECK(conjugate(conjugate(a)) == a);
        CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
        CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
    }
}

TEST_CASE("compose agrees with pointwise substitution and is associative") {
    SplitMix64 rng(13);
    for (int n = 0; n < 60; ++n) {
        BiPoly f = gen_bipoly(rng, 3, 4);
        BiPoly g = gen_bipoly(rng, 2, 3);
        BiPoly h = gen_bipoly(rng, 2, 3);
        BiPoly fg = compose(f, g);
        for (int k = 0; k < 3; ++k) {
            GaussianRational p = random_coefficient(rng);
            CHECK(oracle::compose_agrees_at(f, g, fg, p));
        }
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        CHECK(compose(f, z) == f);
        CHECK(compose(z, f) == f);
        CHECK(conjugate(compose(f, g)) == compose(conjugate(f), g));
    }
}

TEST_CASE("eval_exact is a ring homomorphism") {
    SplitMix64 rng(14);
    for (int n = 0; n < 200; ++n) {
        BiPoly a = gen_bipoly(rng, 4, 5);
        BiPoly b = gen_bipoly(rng, 4, 5);
        GaussianRational p = random_coefficient(rng);
        CHECK(eval_exact(a, p) == oracle::naive_eval(a, p));
        CHECK(eval_exact(a * b, p) == eval_exact(a, p) * eval_exact(b, p));
        CHECK(eval_exact(a + b, p) == eval_exact(a, p) + eval_exact(b, p));
        CHECK(eval_exact(conjugate(a), p) == eval_exact(a, p).conj());
    }
}
