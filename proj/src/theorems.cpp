#include "polyharm/theorems.hpp"

#include "polyharm/classify.hpp"
#include "polyharm/wirtinger.hpp"

#include <algorithm>
#include <functional>

namespace polyharm {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Compliant: return "compliant";
    case Verdict::Violation: return "violation";
    case Verdict::ConjectureOnly: return "conjecture_only";
    }
    return "?";
}

const char* to_string(PreForm v) {
    switch (v) {
    case PreForm::Compliant: return "compliant";
    case PreForm::NonCompliant: return "non_compliant";
    case PreForm::ConjectureOnly: return "conjecture_only";
    }
    return "?";
}

GaussianRational circle_point(unsigned index) {
    return GaussianRational::unit_circle_point(Rational(index));
}

unsigned degree_bound(unsigned q, unsigned l) {
    if (q < 2 || l < 1)
        throw std::invalid_argument("degree_bound: requires q >= 2 and l >= 1");
    return (l - 1) / (q - 1);
}

namespace {

bool in_strict_class(const BiPoly& F, unsigned q) {
    if (q == 0)
        return is_analytic(F);
    if (q == 1)
        return polyharmonic_order(F) == 1 && !is_analytic(F);
    return polyharmonic_order(F) == q;
}

std::string param_text(const char* name, unsigned value) {
    return std::string(name) + "=" + std::to_string(value);
}

// Recomputes the composition from scratch and checks the class of F before a
// Violation is surfaced.
void recheck(const WitnessResult& r, const BiPoly& outer, const BiPoly& inner,
             const std::function<bool(const BiPoly&)>& witness_in_class) {
    if (!r.witness_F || !r.composition_order)
        throw InternalInconsistency("witness result without witness");
    if (!witness_in_class(*r.witness_F))
        throw InternalInconsistency("witness " + canonical_print(*r.witness_F) +
                                    " is outside the required class");
    unsigned order = polyharmonic_order(compose(outer, inner));
    if (order != *r.composition_order || order <= r.required_bound)
        throw InternalInconsistency("witness " + canonical_print(*r.witness_F) +
                                    " does not re-verify");
}

}  // namespace

bool allowed_form_post(const BiPoly& f, unsigned q, unsigned l) {
    if (l < 1)
        throw std::invalid_argument("allowed_form_post: l must be >= 1");
    if (q == 0)
        return is_harmonic(f);
    if (q == 1)
        return is_affine(f);
    if (!is_harmonic(f))
        return false;
    unsigned t_max = std::min(1u, degree_bound(q, l));
    return std::max(f.deg_z(), f.deg_zbar()) <= t_max;
}

WitnessResult find_witness_post(const BiPoly& f, unsigned q, unsigned l) {
    if (allowed_form_post(f, q, l))
        throw NotApplicable("f already has the allowed form; no witness exists");

    const unsigned d = std::max(f.deg_z(), f.deg_zbar());
    const unsigned m_lo = l + 1;
    const unsigned m_hi = l + d + 2;
    // c^n a + conj(c)^n b vanishes for at most 2n points of the circle unless
    // a = b = 0, so 2d + 1 distinct points always leave a nonvanishing one.
    const unsigned circle_count = std::max(2 * polyharmonic_order(f), 2 * d + 1);

    auto attempt = [&](const BiPoly& F, std::string tag) -> std::optional<WitnessResult> {
        unsigned order = polyharmonic_order(compose(f, F));
        if (order <= l)
            return std::nullopt;
        WitnessResult r{Verdict::Violation, F, order, l, std::move(tag)};
        recheck(r, f, F, [q](const BiPoly& w) { return in_strict_class(w, q); });
        return r;
    };

    const BiPoly z = BiPoly::z();
    const BiPoly zbar = BiPoly::zbar();

    if (q == 0) {
        // f∘z^m = sum_k |z|^{2m(k-1)} G_k(z^m) has order m(t-1)+1.
        for (unsigned m = m_lo; m <= m_hi; ++m)
            if (auto r = attempt(z.pow(m), "z^m; " + param_text("m", m)))
                return *r;
    } else if (q == 1) {
        if (!is_harmonic(f))
            for (unsigned m = m_lo; m <= m_hi; ++m)
                if (auto r = attempt(zbar.pow(m), "zbar^m; " + param_text("m", m)))
                    return *r;
        for (unsigned m = m_lo; m <= m_hi; ++m) {
            for (unsigned k = 0; k < circle_count; ++k) {
                BiPoly F = z.pow(m) + BiPoly::monomial(circle_point(k).pow(m), 0, m);
                if (auto r = attempt(F, "z^m+(c*zbar)^m; " + param_text("m", m) + ", " +
                                            "c=" + circle_point(k).to_string()))
                    return *r;
            }
        }
    } else {
        const BiPoly weight = BiPoly::abs2_power(q - 1);
        for (unsigned k = 0; k < circle_count; ++k) {
            if (auto r = attempt(circle_point(k) * weight,
                                 "c*|z|^(2(q-1)); c=" + circle_point(k).to_string()))
                return *r;
        }
        // f∘F splits into pieces E_n |z|^{2n(q-1)}; with m > l + d the pieces
        // coming from G_k, k >= 2, land above order l.
        for (unsigned m = m_lo; m <= m_hi; ++m)
            if (auto r = attempt(weight * z.pow(m * (q - 1)),
                                 "|z|^(2(q-1))*z^(m(q-1)); " + param_text("m", m)))
                return *r;
        for (unsigned m = m_lo; m <= m_hi; ++m) {
            BiPoly wave = weight * (z.pow(2 * m) + zbar.pow(2 * m));
            for (unsigned k = 0; k < circle_count; ++k) {
                if (auto r = attempt(circle_point(k) * wave,
                                     "c*|z|^(2(q-1))*(z^(2m)+zbar^(2m)); " + param_text("m", m) +
                                         ", c=" + circle_point(k).to_string()))
                    return *r;
            }
        }
    }
    throw InternalInconsistency("no witness family member violates the bound for f = " +
                                canonical_print(f));
}

PreForm allowed_form_pre(const BiPoly& f, unsigned q, unsigned l) {
    if (l < 1)
        throw std::invalid_argument("allowed_form_pre: l must be >= 1");
    if (q <= 1) {
        unsigned order = polyharmonic_order(f);
        if (order <= 1 || l <= 2)
            return is_analytic(f) || is_antianalytic(f) ? PreForm::Compliant : PreForm::NonCompliant;
        // F = w is harmonic and gives F∘f = f.
        if (order > l)
            return PreForm::NonCompliant;
        return PreForm::ConjectureOnly;
    }
    unsigned bound = degree_bound(q, l);
    if (is_analytic(f) && f.deg_z() <= bound)
        return PreForm::Compliant;
    if (is_antianalytic(f) && f.deg_zbar() <= bound)
        return PreForm::Compliant;
    return PreForm::NonCompliant;
}

WitnessResult find_witness_pre(const BiPoly& f, unsigned q, unsigned l) {
    const PreForm form = allowed_form_pre(f, q, l);
    if (form == PreForm::Compliant)
        throw NotApplicable("f already has the allowed form; no witness exists");

    const unsigned d = std::max(f.deg_z(), f.deg_zbar());
    auto witness_ok = [q](const BiPoly& F) {
        return q <= 1 ? is_harmonic(F) : polyharmonic_order(F) == q;
    };
    auto found = [&](BiPoly F, unsigned order, std::string tag) {
        WitnessResult r{Verdict::Violation, std::move(F), order, l, std::move(tag)};
        recheck(r, *r.witness_F, f, witness_ok);
        if (form == PreForm::ConjectureOnly)
            r.verdict = Verdict::ConjectureOnly;
        return r;
    };

    if (q <= 1) {
        if (polyharmonic_order(f) > l)
            return found(BiPoly::z(), polyharmonic_order(f), "w (identity)");
        // The exponential witness of the harmonic case is replaced by powers:
        // the top-bidegree part of f^m is the m-th power of that of f, so its
        // mixed terms have min exponent growing linearly in m once both h and
        // g are nonconstant. Every hit is still re-verified exactly.
        const unsigned m_lo = 2 * l + 2;
        const unsigned m_hi = m_lo + 2 * (l + d) + 8;
        BiPoly power = f.pow(m_lo);
        for (unsigned m = m_lo; m <= m_hi; ++m, power *= f) {
            unsigned order = polyharmonic_order(power);
            if (order > l)
                return found(BiPoly::z().pow(m), order, "w^m; " + param_text("m", m));
        }
    } else {
        // F = |w|^{2(q-1)} w^m gives F∘f = f^{q-1+m} conj(f)^{q-1}; for analytic
        // f of degree t and m = 0 the order is exactly t(q-1)+1.
        const unsigned m_hi = 2 * (l + d) + 8;
        BiPoly weight = f.pow(q - 1) * conjugate(f).pow(q - 1);
        BiPoly candidate = weight;
        for (unsigned m = 0; m <= m_hi; ++m, candidate *= f) {
            unsigned order = polyharmonic_order(candidate);
            if (order > l)
                return found(BiPoly::abs2_power(q - 1) * BiPoly::z().pow(m), order,
                             "|w|^(2(q-1))*w^m; " + param_text("m", m));
        }
    }

    if (form == PreForm::ConjectureOnly) {
        WitnessResult r;
        r.verdict = Verdict::ConjectureOnly;
        r.required_bound = l;
        r.family_tag = "none found";
        return r;
    }
    throw InternalInconsistency("no witness family member violates the bound for f = " +
                                canonical_print(f));
}

BiPoly separable_laplacian(const BiPoly& H, const BiPoly& G, unsigned l) {
    if (!is_analytic(H) || !is_analytic(G))
        throw NotAnalytic("separable_laplacian: H and G must be analytic");
    BiPoly scale = BiPoly(GaussianRational(4).pow(l));
    return scale * d_dz(H, l) * conjugate(d_dz(G, l));
}

BiPoly a_m(const BiPoly& f, long m) {
    if (m == 0)
        throw std::invalid_argument("a_m: m must be nonzero");
    const BiPoly fz = d_dz(f);
    const BiPoly fzb = d_dzbar(f);
    const BiPoly fzz = d_dz(fz);
    const BiPoly fzbzb = d_dzbar(fzb);
    const BiPoly fzzb = d_dzbar(fz);
    const BiPoly fz_zb2 = d_dzbar(fzzb);
    const BiPoly fz2_zb = d_dz(fzzb);
    const GaussianRational mc(m);

    BiPoly constant_part = BiPoly(2) * (fzzb * fzzb + fz * fz_zb2 + fzb * fz2_zb) + fzz * fzbzb;
    BiPoly linear_part = fz * fz * fzbzb + fzb * fzb * fzz + BiPoly(4) * fz * fzb * fzzb;
    BiPoly prod = fz * fzb;
    return constant_part + mc * linear_part + (mc * mc) * (prod * prod);
}

bool reich_condition_check(const BiPoly& G, const GaussianRational& alpha, const Rational& c) {
    if (!is_analytic(G))
        throw NotAnalytic("reich_condition_check: G must be analytic");
    const BiPoly dG = d_dz(G);
    const BiPoly G2 = G * G;
    const BiPoly rhs = (alpha * alpha) * (G2 * G2) + GaussianRational(2 * c) * (G2 * G) +
                       (alpha.conj() * alpha.conj()) * G2;
    return dG * dG == rhs;
}

}  // namespace polyharm
