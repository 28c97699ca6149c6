#pragma once

#include "polyharm/gaussian_rational.hpp"

#include <map>
#include <ostream>
#include <string>

namespace polyharm {

/// Exponent pair of z^i * zbar^j.
struct Monomial {
    unsigned z_exp = 0;
    unsigned zbar_exp = 0;

    unsigned total() const { return z_exp + zbar_exp; }
    unsigned min_exp() const { return z_exp < zbar_exp ? z_exp : zbar_exp; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Print order: total degree ascending, then z exponent ascending.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total())
            return a.total() < b.total();
        return a.z_exp < b.z_exp;
    }
};

/// Sparse polynomial in the formal commuting variables z and zbar with
/// Gaussian-rational coefficients. No stored coefficient is ever zero, so the
/// zero polynomial is the empty map and equality is structural.
class BiPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;

    BiPoly() = default;
    BiPoly(GaussianRational constant);
    BiPoly(long constant) : BiPoly(GaussianRational(constant)) {}

    static BiPoly z() { return monomial(1, 1, 0); }
    static BiPoly zbar() { return monomial(1, 0, 1); }
    static BiPoly monomial(const GaussianRational& c, unsigned z_exp, unsigned zbar_exp);
    /// |z|^{2k} = (z*zbar)^k.
    static BiPoly abs2_power(unsigned k) { return monomial(1, k, k); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    // Both 0 for the zero polynomial.
    unsigned deg_z() const;
    unsigned deg_zbar() const;
    unsigned total_degree() const;

    GaussianRational coefficient(unsigned z_exp, unsigned zbar_exp) const;

    /// Adds c*z^i*zbar^j in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const GaussianRational& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const GaussianRational& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const GaussianRational& c) { return a *= c; }
    friend BiPoly operator*(const GaussianRational& c, BiPoly a) { return a *= c; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    BiPoly pow(unsigned n) const;

private:
    TermMap terms_;
};

/// c_{ij} z^i zbar^j -> conj(c_{ij}) z^j zbar^i. An involutive ring automorphism.
BiPoly conjugate(const BiPoly& f);

/// outer∘inner: substitutes z -> inner and zbar -> conjugate(inner) in outer.
BiPoly compose(const BiPoly& outer, const BiPoly& inner);

/// Value at z = point, zbar = conj(point), exactly.
GaussianRational eval_exact(const BiPoly& f, const GaussianRational& point);

/// Deterministic text form, parseable by parse(). Terms are emitted in
/// MonomialOrder; zero prints as "0".
std::string canonical_print(const BiPoly& f);

std::ostream& operator<<(std::ostream& os, const BiPoly& f);

}  // namespace polyharm
