#include "polyharm/gaussian_rational.hpp"

namespace polyharm {

Rational make_rational(long num, long den) {
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::unit_circle_point(const Rational& t) {
    Rational t2 = t * t;
    Rational den = 1 + t2;
    return {Rational((1 - t2) / den), Rational(2 * t / den)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (sgn(n) == 0)
        throw DivisionByZero("division by zero Gaussian rational");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

GaussianRational GaussianRational::pow(unsigned n) const {
    GaussianRational result(1);
    GaussianRational base = *this;
    while (n != 0) {
        if (n & 1u)
            result *= base;
        n >>= 1;
        if (n != 0)
            base *= base;
    }
    return result;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0)
        return rational_to_string(re_);

    auto imag_text = [](const Rational& v) {
        Rational mag = abs(v);
        return mag == 1 ? std::string("i") : rational_to_string(mag) + "*i";
    };
    if (sgn(re_) == 0)
        return (sgn(im_) < 0 ? "-" : "") + imag_text(im_);
    return rational_to_string(re_) + (sgn(im_) < 0 ? " - " : " + ") + imag_text(im_);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) {
    return os << c.to_string();
}

}  // namespace polyharm
