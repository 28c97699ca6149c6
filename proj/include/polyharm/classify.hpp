#pragma once

#include "polyharm/bipoly.hpp"

#include <optional>

namespace polyharm {

struct ClassReport {
    unsigned order = 0;
    bool is_analytic = false;
    bool is_antianalytic = false;
    bool is_harmonic = false;
    bool is_affine = false;
    std::optional<unsigned> analytic_degree;  // set iff is_analytic
    std::optional<unsigned> harmonic_degree;  // set iff is_harmonic

    friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

/// f = h + conj(g) with h, g analytic; the constant term goes to h.
struct HarmonicSplit {
    BiPoly h;
    BiPoly g;
};

bool is_analytic(const BiPoly& f);
bool is_antianalytic(const BiPoly& f);
bool is_affine(const BiPoly& f);

/// Requires a harmonic f.
HarmonicSplit harmonic_split(const BiPoly& f);

ClassReport classify(const BiPoly& f);

/// order(f) == q, i.e. f in H_q \ H_{q-1}.
bool is_strictly_q_harmonic(const BiPoly& f, unsigned q);

}  // namespace polyharm
