#include "polyharm/numeric.hpp"

#include "polyharm/theorems.hpp"
#include "polyharm/wirtinger.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace polyharm {

double FdReport::rel_error() const {
    double scale = std::abs(symbolic_value);
    return scale == 0.0 ? abs_error : abs_error / scale;
}

Complex eval_float(const BiPoly& f, Complex point) {
    if (f.is_zero())
        return {0.0, 0.0};
    const Complex conj_point = std::conj(point);

    // rows[i] holds the zbar-coefficients of z^i.
    std::vector<std::vector<Complex>> rows(f.deg_z() + 1);
    for (const auto& [m, c] : f.terms()) {
        auto& row = rows[m.z_exp];
        if (row.size() <= m.zbar_exp)
            row.resize(m.zbar_exp + 1);
        row[m.zbar_exp] += c.to_complex();
    }

    Complex outer{0.0, 0.0};
    for (auto row = rows.rbegin(); row != rows.rend(); ++row) {
        Complex inner{0.0, 0.0};
        for (auto c = row->rbegin(); c != row->rend(); ++c)
            inner = inner * conj_point + *c;
        outer = outer * point + inner;
    }
    return outer;
}

namespace {

Complex stencil(const std::function<Complex(Complex)>& g, Complex p, double h) {
    const Complex dx{h, 0.0};
    const Complex dy{0.0, h};
    return (g(p + dx) + g(p - dx) + g(p + dy) + g(p - dy) - 4.0 * g(p)) / (h * h);
}

FdReport make_report(Complex point, double h, Complex symbolic, Complex fd) {
    return {point, h, symbolic, fd, std::abs(symbolic - fd)};
}

}  // namespace

FdReport fd_laplacian(const BiPoly& f, Complex point, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("fd_laplacian: h must be positive");
    auto g = [&f](Complex w) { return eval_float(f, w); };
    return make_report(point, h, eval_float(laplacian(f), point), stencil(g, point, h));
}

FdReport exp_identity_check(const BiPoly& f, long m, Complex point, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("exp_identity_check: h must be positive");
    if (m == 0 || std::labs(m) > 3)
        throw std::invalid_argument("exp_identity_check: need 0 < |m| <= 3");

    const double md = static_cast<double>(m);
    // Each inner stencil evaluation shares points with its neighbours; cache them.
    std::map<std::pair<double, double>, Complex> cache;
    auto exp_mf = [&](Complex w) {
        auto key = std::make_pair(w.real(), w.imag());
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
        Complex v = std::exp(md * eval_float(f, w));
        cache.emplace(key, v);
        return v;
    };
    auto inner = [&](Complex w) { return stencil(exp_mf, w, h); };
    Complex fd = stencil(inner, point, h);

    Complex symbolic = 16.0 * md * md * std::exp(md * eval_float(f, point)) * eval_float(a_m(f, m), point);
    return make_report(point, h, symbolic, fd);
}

}  // namespace polyharm
