#include "polyharm/classify.hpp"
#include "polyharm/gen.hpp"
#include "polyharm/parser.hpp"
#include "polyharm/wirtinger.hpp"

#include <doctest.h>

using namespace polyharm;

namespace {

BiPoly P(const char* text) {
    return parse(text);
}

}  // namespace

TEST_CASE("classify examples") {
    ClassReport a = classify(P("3*z + 2*zbar + 1"));
    CHECK(a.is_affine);
    CHECK(a.is_harmonic);
    CHECK(a.harmonic_degree == 1u);
    CHECK_FALSE(a.is_analytic);
    CHECK_FALSE(a.analytic_degree.has_value());

    ClassReport b = classify(P("z^2"));
    CHECK(b.is_analytic);
    CHECK(b.analytic_degree == 2u);
    CHECK_FALSE(b.is_affine);
    CHECK_FALSE(b.is_antianalytic);
    CHECK(b.order == 1);

    ClassReport c = classify(P("z*zbar"));
    CHECK(c.order == 2);
    CHECK_FALSE(c.is_analytic);
    CHECK_FALSE(c.is_antianalytic);
    CHECK_FALSE(c.is_harmonic);
    CHECK_FALSE(c.is_affine);
    CHECK_FALSE(c.harmonic_degree.has_value());
}

TEST_CASE("constants and zero are analytic and anti-analytic") {
    for (const BiPoly& f : {BiPoly(), BiPoly(5)}) {
        ClassReport r = classify(f);
        CHECK(r.is_analytic);
        CHECK(r.is_antianalytic);
        CHECK(r.is_affine);
        CHECK(r.analytic_degree == 0u);
        CHECK(r.harmonic_degree == 0u);
    }
    CHECK(classify(BiPoly()).order == 0);
}

TEST_CASE("harmonic split") {
    HarmonicSplit s = harmonic_split(P("2 + z^3 + i*zbar^2"));
    CHECK(s.h == P("2 + z^3"));
    CHECK(s.g == P("-i*z^2"));
    CHECK_THROWS(harmonic_split(P("z*zbar")));
    CHECK(classify(P("z + zbar^4")).harmonic_degree == 4u);
}

TEST_CASE("strict q-harmonic examples") {
    CHECK(is_strictly_q_harmonic(P("z*zbar"), 2));
    CHECK_FALSE(is_strictly_q_harmonic(P("z*zbar"), 3));
    CHECK(is_strictly_q_harmonic(P("z^2*zbar^2"), 3));
    CHECK(is_strictly_q_harmonic(P("z"), 1));
}

TEST_CASE("report invariants on random input") {
    SplitMix64 rng(31);
    for (int n = 0; n < 300; ++n) {
        BiPoly f = gen_bipoly(rng, 4, 5);
        ClassReport r = classify(f);
        CHECK(r.is_harmonic == (r.order <= 1));
        CHECK(r.order == polyharmonic_order(f));
        if (r.is_analytic || r.is_affine)
            CHECK(r.is_harmonic);
        CHECK(r.is_analytic == d_dzbar(f).is_zero());
        CHECK(r.is_antianalytic == d_dz(f).is_zero());
        CHECK(r.harmonic_degree.has_value() == r.is_harmonic);
        CHECK(r.analytic_degree.has_value() == r.is_analytic);
        if (r.is_harmonic) {
            HarmonicSplit s = harmonic_split(f);
            CHECK(s.h + conjugate(s.g) == f);
            CHECK(d_dzbar(s.h).is_zero());
            CHECK(d_dzbar(s.g).is_zero());
            CHECK(s.g.coefficient(0, 0).is_zero());
            CHECK(*r.harmonic_degree == std::max(s.h.deg_z(), s.g.deg_z()));
        }
    }
}
