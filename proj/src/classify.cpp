#include "polyharm/classify.hpp"

#include "polyharm/wirtinger.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyharm {

bool is_analytic(const BiPoly& f) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [](const auto& kv) { return kv.first.zbar_exp == 0; });
}

bool is_antianalytic(const BiPoly& f) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [](const auto& kv) { return kv.first.z_exp == 0; });
}

bool is_affine(const BiPoly& f) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [](const auto& kv) { return kv.first.total() <= 1; });
}

HarmonicSplit harmonic_split(const BiPoly& f) {
    if (!is_harmonic(f))
        throw std::invalid_argument("harmonic_split: mapping is not harmonic");
    HarmonicSplit split;
    for (const auto& [m, c] : f.terms()) {
        if (m.zbar_exp == 0)
            split.h.add_term(m, c);
        else
            split.g.add_term(Monomial{m.zbar_exp, 0}, c.conj());
    }
    return split;
}

ClassReport classify(const BiPoly& f) {
    ClassReport r;
    r.order = polyharmonic_order(f);
    r.is_analytic = is_analytic(f);
    r.is_antianalytic = is_antianalytic(f);
    r.is_harmonic = r.order <= 1;
    r.is_affine = is_affine(f);
    if (r.is_analytic)
        r.analytic_degree = f.deg_z();
    if (r.is_harmonic) {
        auto split = harmonic_split(f);
        r.harmonic_degree = std::max(split.h.deg_z(), split.g.deg_z());
    }
    return r;
}

bool is_strictly_q_harmonic(const BiPoly& f, unsigned q) {
    return polyharmonic_order(f) == q;
}

}  // namespace polyharm
