#pragma once

#include "polyharm/bipoly.hpp"

#include <stdexcept>
#include <vector>

namespace polyharm {

struct NonHarmonicComponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// f = sum_{k=1}^p |z|^{2(k-1)} G_k with every G_k harmonic.
/// components[k-1] holds G_k; the list is empty only for f = 0.
struct AlmansiForm {
    std::vector<BiPoly> components;

    friend bool operator==(const AlmansiForm&, const AlmansiForm&) = default;
};

BiPoly d_dz(const BiPoly& f);
BiPoly d_dzbar(const BiPoly& f);

/// k-th derivative in z (resp. zbar); k = 0 returns f.
BiPoly d_dz(const BiPoly& f, unsigned k);
BiPoly d_dzbar(const BiPoly& f, unsigned k);

/// Delta^times f with Delta = 4 d/dz d/dzbar. Requires times >= 1.
BiPoly laplacian(const BiPoly& f, unsigned times = 1);

/// Least p with Delta^p f = 0; 0 for the zero mapping.
/// For f != 0 this is 1 + max over the support of min(i, j).
unsigned polyharmonic_order(const BiPoly& f);

/// True when every support pair has min(i, j) = 0.
bool is_harmonic(const BiPoly& f);

/// Routes c z^i zbar^j to G_{min(i,j)+1} as c z^{i-m} zbar^{j-m}.
AlmansiForm almansi_decompose(const BiPoly& f);

/// sum_k (z zbar)^{k-1} G_k. Throws NonHarmonicComponent if some G_k is not
/// harmonic.
BiPoly almansi_recompose(const AlmansiForm& form);

}  // namespace polyharm
