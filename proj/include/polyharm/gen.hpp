#pragma once

#include "polyharm/bipoly.hpp"

#include <complex>
#include <cstdint>

namespace polyharm {

/// splitmix64 stream. All random draws in the project go through one of
/// these; there is no global generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    long in_range(long lo, long hi);
    bool chance(unsigned num, unsigned den) { return below(den) < num; }
    /// Uniform in [0, 1).
    double unit();

private:
    std::uint64_t state_;
};

/// Per-case seed; independent of how many draws earlier cases made.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Numerator in [-16, 16], denominator in [1, 16].
Rational random_rational(SplitMix64& rng, bool nonzero = false);
/// Real with probability 1/2, otherwise both parts drawn independently.
GaussianRational random_coefficient(SplitMix64& rng, bool nonzero = false);

struct HarmonicOptions {
    bool both_parts_nonconstant = false;
};

/// Analytic polynomial of degree d drawn in [0, max_degree]; the degree-d
/// coefficient is never zero.
BiPoly gen_analytic(SplitMix64& rng, unsigned max_degree);
BiPoly gen_analytic(std::uint64_t seed, unsigned max_degree);

/// h + conj(g), h and g analytic of degree <= max_degree, g(0) = 0.
BiPoly gen_harmonic(SplitMix64& rng, unsigned max_degree, HarmonicOptions opts = {});
BiPoly gen_harmonic(std::uint64_t seed, unsigned max_degree, HarmonicOptions opts = {});

/// sum_{k<=q} |z|^{2(k-1)} G_k with random harmonic G_k and G_q != 0, so the
/// result has polyharmonic order exactly q.
BiPoly gen_strict_q_harmonic(SplitMix64& rng, unsigned q, unsigned max_degree);
BiPoly gen_strict_q_harmonic(std::uint64_t seed, unsigned q, unsigned max_degree);

/// Arbitrary sparse polynomial with deg_z, deg_zbar <= max_degree and at most
/// max_terms terms (possibly zero).
BiPoly gen_bipoly(SplitMix64& rng, unsigned max_degree, unsigned max_terms);
BiPoly gen_bipoly(std::uint64_t seed, unsigned max_degree, unsigned max_terms);

/// Uniform point in the open disk of the given radius.
std::complex<double> gen_disk_point(SplitMix64& rng, double radius = 1.0);

}  // namespace polyharm
