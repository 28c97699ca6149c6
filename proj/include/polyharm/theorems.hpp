#pragma once

#include "polyharm/bipoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace polyharm {

// Composition classes used below, for q >= 0:
//   H_q        mappings with polyharmonic order <= q (H_0: analytic)
//   H_q^*      order exactly q for q >= 1; H_0^* = H_0
// "Post" statements are about f∘F, "pre" statements about F∘f, with F
// ranging over H_q^*.

struct NotApplicable : std::logic_error {
    using std::logic_error::logic_error;
};

/// A bounded witness search came back empty. That would contradict a proved
/// statement, so it is never swallowed.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotAnalytic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Verdict { Compliant, Violation, ConjectureOnly };

/// Result of checking f against the pre-composition characterization.
enum class PreForm { Compliant, NonCompliant, ConjectureOnly };

const char* to_string(Verdict v);
const char* to_string(PreForm v);

struct WitnessResult {
    Verdict verdict = Verdict::Compliant;
    std::optional<BiPoly> witness_F;
    std::optional<unsigned> composition_order;
    unsigned required_bound = 0;
    std::string family_tag;
};

/// i-th rational point on the unit circle, t = i in ((1-t^2) + 2ti)/(1+t^2).
/// Distinct for distinct i.
GaussianRational circle_point(unsigned index);

/// floor((l-1)/(q-1)) for q >= 2.
unsigned degree_bound(unsigned q, unsigned l);

/// Does f∘F stay in H_l for every F in H_q^*?
///   q = 0: iff f harmonic
///   q = 1: iff f affine
///   q >= 2: iff f is a harmonic polynomial of degree <= min(1, floor((l-1)/(q-1)))
bool allowed_form_post(const BiPoly& f, unsigned q, unsigned l);

/// Explicit F in H_q^* with order(f∘F) > l, taken from the families of the
/// necessity argument. Throws NotApplicable when f is compliant and
/// InternalInconsistency when the bounded search exhausts.
WitnessResult find_witness_post(const BiPoly& f, unsigned q, unsigned l);

/// Does F∘f stay in H_l for every F in H_q^* (every harmonic F when q <= 1)?
///   q <= 1: f analytic or anti-analytic when f is harmonic or l <= 2;
///           ConjectureOnly when 2 <= order(f) <= l and l >= 3;
///           NonCompliant when order(f) > l (F = w already fails).
///   q >= 2: f or conj(f) analytic of degree <= floor((l-1)/(q-1)).
PreForm allowed_form_pre(const BiPoly& f, unsigned q, unsigned l);

/// Explicit outer F with order(F∘f) > l. For ConjectureOnly inputs the same
/// search runs and its outcome is attached as evidence; verdict stays
/// ConjectureOnly. Throws NotApplicable for compliant f.
WitnessResult find_witness_pre(const BiPoly& f, unsigned q, unsigned l);

/// 4^l * H^(l) * conj(G^(l)) for analytic H, G; equals Delta^l(H * conj(G)).
BiPoly separable_laplacian(const BiPoly& H, const BiPoly& G, unsigned l);

/// The polynomial A_m in the Wirtinger derivatives of f with
/// Delta^2(e^{mf}) = 16 m^2 e^{mf} A_m, valid for f with f_{z^2 zbar^2} = 0:
///   A_m = 2(f_{zzb}^2 + f_z f_{zzb^2} + f_zb f_{z^2zb}) + f_{z^2} f_{zb^2}
///       + m(f_z^2 f_{zb^2} + f_zb^2 f_{z^2} + 4 f_z f_zb f_{zzb})
///       + m^2 (f_z f_zb)^2
BiPoly a_m(const BiPoly& f, long m);

/// (G')^2 == alpha^2 G^4 + 2c G^3 + conj(alpha)^2 G^2 as polynomials.
bool reich_condition_check(const BiPoly& G, const GaussianRational& alpha, const Rational& c);

}  // namespace polyharm
