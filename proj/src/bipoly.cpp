#include "polyharm/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace polyharm {

BiPoly::BiPoly(GaussianRational constant) {
    if (!constant.is_zero())
        terms_.emplace(Monomial{0, 0}, std::move(constant));
}

BiPoly BiPoly::monomial(const GaussianRational& c, unsigned z_exp, unsigned zbar_exp) {
    BiPoly p;
    if (!c.is_zero())
        p.terms_.emplace(Monomial{z_exp, zbar_exp}, c);
    return p;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

unsigned BiPoly::deg_z() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.z_exp);
    return d;
}

unsigned BiPoly::deg_zbar() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.zbar_exp);
    return d;
}

unsigned BiPoly::total_degree() const {
    // The map is ordered by total degree first.
    return terms_.empty() ? 0 : terms_.rbegin()->first.total();
}

GaussianRational BiPoly::coefficient(unsigned z_exp, unsigned zbar_exp) const {
    auto it = terms_.find(Monomial{z_exp, zbar_exp});
    return it == terms_.end() ? GaussianRational() : it->second;
}

void BiPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    if (a.is_zero() || b.is_zero())
        return r;
    // Accumulate without pruning, then drop cancelled entries once.
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.z_exp + mb.z_exp, ma.zbar_exp + mb.zbar_exp};
            auto [it, inserted] = r.terms_.try_emplace(m);
            if (inserted)
                it->second = ca * cb;
            else
                it->second += ca * cb;
        }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    *this = *this * o;
    return *this;
}

BiPoly& BiPoly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

BiPoly BiPoly::pow(unsigned n) const {
    BiPoly result(1);
    BiPoly base = *this;
    while (n != 0) {
        if (n & 1u)
            result *= base;
        n >>= 1;
        if (n != 0)
            base *= base;
    }
    return result;
}

BiPoly conjugate(const BiPoly& f) {
    BiPoly r;
    for (const auto& [m, c] : f.terms())
        r.add_term(Monomial{m.zbar_exp, m.z_exp}, c.conj());
    return r;
}

namespace {

std::vector<BiPoly> power_table(const BiPoly& base, unsigned max_exp) {
    std::vector<BiPoly> table;
    table.reserve(max_exp + 1);
    table.emplace_back(1);
    for (unsigned k = 1; k <= max_exp; ++k)
        table.push_back(table.back() * base);
    return table;
}

}  // namespace

BiPoly compose(const BiPoly& outer, const BiPoly& inner) {
    if (outer.is_zero())
        return {};
    const auto inner_pow = power_table(inner, outer.deg_z());
    const auto inner_conj_pow = power_table(conjugate(inner), outer.deg_zbar());

    // Group outer's terms by z exponent: outer = sum_i z^i * P_i(zbar).
    std::map<unsigned, BiPoly> by_z_exp;
    for (const auto& [m, c] : outer.terms())
        by_z_exp[m.z_exp] += c * inner_conj_pow[m.zbar_exp];

    BiPoly result;
    for (const auto& [i, partial] : by_z_exp)
        result += i == 0 ? partial : inner_pow[i] * partial;
    return result;
}

GaussianRational eval_exact(const BiPoly& f, const GaussianRational& point) {
    const GaussianRational point_conj = point.conj();
    std::vector<GaussianRational> z_pow{GaussianRational(1)};
    std::vector<GaussianRational> zbar_pow{GaussianRational(1)};
    for (unsigned k = 1; k <= f.deg_z(); ++k)
        z_pow.push_back(z_pow.back() * point);
    for (unsigned k = 1; k <= f.deg_zbar(); ++k)
        zbar_pow.push_back(zbar_pow.back() * point_conj);

    GaussianRational sum;
    for (const auto& [m, c] : f.terms())
        sum += c * z_pow[m.z_exp] * zbar_pow[m.zbar_exp];
    return sum;
}

namespace {

std::string monomial_text(const Monomial& m) {
    std::string out;
    auto append = [&out](const char* var, unsigned e) {
        if (e == 0)
            return;
        if (!out.empty())
            out += "*";
        out += var;
        if (e > 1)
            out += "^" + std::to_string(e);
    };
    append("z", m.z_exp);
    append("zbar", m.zbar_exp);
    return out;
}

}  // namespace

std::string canonical_print(const BiPoly& f) {
    if (f.is_zero())
        return "0";

    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        // Sign is folded into the separator for real and purely imaginary
        // coefficients; a coefficient with both parts is parenthesized.
        bool negative = false;
        std::string coeff;
        if (c.is_real() || sgn(c.real()) == 0) {
            const Rational& part = c.is_real() ? c.real() : c.imag();
            negative = sgn(part) < 0;
            GaussianRational mag = c.is_real() ? GaussianRational(abs(part))
                                               : GaussianRational(0, abs(part));
            coeff = mag.to_string();
        } else {
            coeff = "(" + c.to_string() + ")";
        }

        std::string mono = monomial_text(m);
        std::string term;
        if (mono.empty())
            term = coeff;
        else if (coeff == "1")
            term = mono;
        else
            term = coeff + "*" + mono;

        if (first)
            out += negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& f) {
    return os << canonical_print(f);
}

}  // namespace polyharm
