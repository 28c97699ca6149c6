#pragma once

#include "polyharm/bipoly.hpp"

#include <complex>

namespace polyharm {

using Complex = std::complex<double>;

struct FdReport {
    Complex point;
    double h = 0.0;
    Complex symbolic_value;
    Complex fd_value;
    double abs_error = 0.0;  // |symbolic_value - fd_value|

    double rel_error() const;
};

/// Nested Horner evaluation: outer in z, inner in conj(point).
Complex eval_float(const BiPoly& f, Complex point);

/// 5-point stencil of f against eval_float(laplacian(f), point).
FdReport fd_laplacian(const BiPoly& f, Complex point, double h);

/// Stencil applied twice to w -> exp(m f(w)), against
/// 16 m^2 exp(m f(point)) A_m(point). Meaningful for biharmonic f.
FdReport exp_identity_check(const BiPoly& f, long m, Complex point, double h);

}  // namespace polyharm
