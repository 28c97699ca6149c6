#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyharm {

using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(long num, long den = 1);

/// Exact complex scalar a + b*i with a, b rational.
///
/// Both parts are always kept canonical (lowest terms, positive denominator),
/// so operator== is structural.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(Rational re, Rational im = 0);

    static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

    /// ((1 - t^2) + 2t*i) / (1 + t^2), a point with modulus exactly 1.
    static GaussianRational unit_circle_point(const Rational& t);

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    GaussianRational pow(unsigned n) const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// "a/b", "a/b*i" or "a/b + c/d*i" (no surrounding parentheses).
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& c);

/// Text form of a single rational, "p" or "p/q".
std::string rational_to_string(const Rational& r);

}  // namespace polyharm
