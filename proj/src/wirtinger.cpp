#include "polyharm/wirtinger.hpp"

#include <algorithm>
#include <string>

namespace polyharm {

BiPoly d_dz(const BiPoly& f) {
    BiPoly r;
    for (const auto& [m, c] : f.terms()) {
        if (m.z_exp == 0)
            continue;
        r.add_term(Monomial{m.z_exp - 1, m.zbar_exp}, c * GaussianRational(static_cast<long>(m.z_exp)));
    }
    return r;
}

BiPoly d_dzbar(const BiPoly& f) {
    BiPoly r;
    for (const auto& [m, c] : f.terms()) {
        if (m.zbar_exp == 0)
            continue;
        r.add_term(Monomial{m.z_exp, m.zbar_exp - 1}, c * GaussianRational(static_cast<long>(m.zbar_exp)));
    }
    return r;
}

BiPoly d_dz(const BiPoly& f, unsigned k) {
    BiPoly r = f;
    for (unsigned n = 0; n < k && !r.is_zero(); ++n)
        r = d_dz(r);
    return r;
}

BiPoly d_dzbar(const BiPoly& f, unsigned k) {
    BiPoly r = f;
    for (unsigned n = 0; n < k && !r.is_zero(); ++n)
        r = d_dzbar(r);
    return r;
}

BiPoly laplacian(const BiPoly& f, unsigned times) {
    if (times == 0)
        throw std::invalid_argument("laplacian: times must be >= 1");
    BiPoly r = f;
    for (unsigned n = 0; n < times && !r.is_zero(); ++n) {
        // Monomial law: Delta(z^i zbar^j) = 4ij z^{i-1} zbar^{j-1}.
        BiPoly next;
        for (const auto& [m, c] : r.terms()) {
            if (m.z_exp == 0 || m.zbar_exp == 0)
                continue;
            long factor = 4L * m.z_exp * m.zbar_exp;
            next.add_term(Monomial{m.z_exp - 1, m.zbar_exp - 1}, c * GaussianRational(factor));
        }
        r = std::move(next);
    }
    return r;
}

unsigned polyharmonic_order(const BiPoly& f) {
    if (f.is_zero())
        return 0;
    unsigned max_min = 0;
    for (const auto& [m, c] : f.terms())
        max_min = std::max(max_min, m.min_exp());
    return max_min + 1;
}

bool is_harmonic(const BiPoly& f) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [](const auto& kv) { return kv.first.min_exp() == 0; });
}

AlmansiForm almansi_decompose(const BiPoly& f) {
    AlmansiForm form;
    form.components.resize(polyharmonic_order(f));
    for (const auto& [m, c] : f.terms()) {
        unsigned k = m.min_exp();
        form.components[k].add_term(Monomial{m.z_exp - k, m.zbar_exp - k}, c);
    }
    return form;
}

BiPoly almansi_recompose(const AlmansiForm& form) {
    BiPoly r;
    for (std::size_t k = 0; k < form.components.size(); ++k) {
        const BiPoly& g = form.components[k];
        if (!is_harmonic(g))
            throw NonHarmonicComponent("Almansi component G_" + std::to_string(k + 1) +
                                       " is not harmonic");
        for (const auto& [m, c] : g.terms())
            r.add_term(Monomial{m.z_exp + static_cast<unsigned>(k), m.zbar_exp + static_cast<unsigned>(k)}, c);
    }
    return r;
}

}  // namespace polyharm
