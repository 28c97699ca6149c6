#include "polyharm/gen.hpp"

#include <cmath>
#include <numbers>

namespace polyharm {

namespace {
constexpr long kCoeffBound = 16;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

long SplitMix64::in_range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

double SplitMix64::unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (index * 0xd1b54a32d192ed03ULL));
    mix.next();
    return mix.next();
}

Rational random_rational(SplitMix64& rng, bool nonzero) {
    long num;
    do {
        num = rng.in_range(-kCoeffBound, kCoeffBound);
    } while (nonzero && num == 0);
    return make_rational(num, rng.in_range(1, kCoeffBound));
}

GaussianRational random_coefficient(SplitMix64& rng, bool nonzero) {
    while (true) {
        GaussianRational c = rng.chance(1, 2) ? GaussianRational(random_rational(rng))
                                              : GaussianRational(random_rational(rng), random_rational(rng));
        if (!nonzero || !c.is_zero())
            return c;
    }
}

namespace {

// Coefficients 0..degree of a one-variable polynomial, leading one nonzero,
// placed on z^n (or zbar^n when conj_side).
BiPoly univariate(SplitMix64& rng, unsigned degree, unsigned lowest, bool conj_side) {
    BiPoly p;
    for (unsigned n = lowest; n <= degree; ++n) {
        bool leading = n == degree;
        if (!leading && rng.chance(1, 3))
            continue;
        GaussianRational c = random_coefficient(rng, leading);
        p.add_term(conj_side ? Monomial{0, n} : Monomial{n, 0}, c);
    }
    return p;
}

}  // namespace

BiPoly gen_analytic(SplitMix64& rng, unsigned max_degree) {
    unsigned degree = static_cast<unsigned>(rng.in_range(0, max_degree));
    return univariate(rng, degree, 0, false);
}

BiPoly gen_analytic(std::uint64_t seed, unsigned max_degree) {
    SplitMix64 rng(seed);
    return gen_analytic(rng, max_degree);
}

BiPoly gen_harmonic(SplitMix64& rng, unsigned max_degree, HarmonicOptions opts) {
    const long min_degree = opts.both_parts_nonconstant && max_degree >= 1 ? 1 : 0;
    unsigned h_degree = static_cast<unsigned>(rng.in_range(min_degree, max_degree));
    unsigned g_degree = static_cast<unsigned>(rng.in_range(min_degree, max_degree));
    BiPoly h = univariate(rng, h_degree, 0, false);
    if (g_degree == 0)
        return h;
    return h + univariate(rng, g_degree, 1, true);
}

BiPoly gen_harmonic(std::uint64_t seed, unsigned max_degree, HarmonicOptions opts) {
    SplitMix64 rng(seed);
    return gen_harmonic(rng, max_degree, opts);
}

BiPoly gen_strict_q_harmonic(SplitMix64& rng, unsigned q, unsigned max_degree) {
    BiPoly f;
    for (unsigned k = 1; k <= q; ++k) {
        BiPoly g;
        if (k == q) {
            do {
                g = gen_harmonic(rng, max_degree);
            } while (g.is_zero());
        } else if (rng.chance(1, 2)) {
            g = gen_harmonic(rng, max_degree);
        }
        f += BiPoly::abs2_power(k - 1) * g;
    }
    return f;
}

BiPoly gen_strict_q_harmonic(std::uint64_t seed, unsigned q, unsigned max_degree) {
    SplitMix64 rng(seed);
    return gen_strict_q_harmonic(rng, q, max_degree);
}

BiPoly gen_bipoly(SplitMix64& rng, unsigned max_degree, unsigned max_terms) {
    BiPoly f;
    unsigned count = static_cast<unsigned>(rng.in_range(0, max_terms));
    for (unsigned n = 0; n < count; ++n) {
        Monomial m{static_cast<unsigned>(rng.in_range(0, max_degree)),
                   static_cast<unsigned>(rng.in_range(0, max_degree))};
        f.add_term(m, random_coefficient(rng, true));
    }
    return f;
}

BiPoly gen_bipoly(std::uint64_t seed, unsigned max_degree, unsigned max_terms) {
    SplitMix64 rng(seed);
    return gen_bipoly(rng, max_degree, max_terms);
}

std::complex<double> gen_disk_point(SplitMix64& rng, double radius) {
    // Slightly inside the boundary so stencils never straddle it.
    double r = radius * std::sqrt(rng.unit()) * 0.95;
    double theta = 2.0 * std::numbers::pi * rng.unit();
    return std::polar(r, theta);
}

}  // namespace polyharm
