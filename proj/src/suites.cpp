#include "polyharm/suites.hpp"

#include "polyharm/classify.hpp"
#include "polyharm/gen.hpp"
#include "polyharm/theorems.hpp"
#include "polyharm/wirtinger.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace polyharm {

std::size_t SuiteReport::counter(std::string_view name) const {
    for (const auto& [key, value] : counters)
        if (key == name)
            return value;
    return 0;
}

namespace {

struct CaseOutcome {
    std::optional<SuiteFailure> failure;
    std::vector<std::size_t> counts;
};

// Collects the first failing expectation of one case plus counter bumps.
class CaseScope {
public:
    explicit CaseScope(std::size_t counters) { outcome_.counts.assign(counters, 0); }

    bool expect(bool ok, const std::string& input, const std::string& expected, const std::string& got) {
        if (!ok && !outcome_.failure)
            outcome_.failure = SuiteFailure{input, expected, got};
        return ok;
    }

    void bump(std::size_t counter) { ++outcome_.counts[counter]; }
    bool failed() const { return outcome_.failure.has_value(); }
    CaseOutcome take() { return std::move(outcome_); }

private:
    CaseOutcome outcome_;
};

using CaseFn = std::function<void(SplitMix64&, std::size_t index, std::uint64_t case_seed, CaseScope&)>;

struct SuiteDef {
    std::string name;
    std::vector<std::string> counters;
    CaseFn run;
};

std::string show(const BiPoly& f) { return canonical_print(f); }
std::string show(unsigned v) { return std::to_string(v); }

std::string pair_input(const char* a_name, const BiPoly& a, const char* b_name, const BiPoly& b) {
    return std::string(a_name) + " = " + show(a) + "; " + b_name + " = " + show(b);
}

unsigned urange(SplitMix64& rng, unsigned lo, unsigned hi) {
    return static_cast<unsigned>(rng.in_range(lo, hi));
}

BiPoly maybe_conjugate(SplitMix64& rng, BiPoly f) {
    return rng.chance(1, 2) ? conjugate(f) : f;
}

BiPoly non_analytic_harmonic(SplitMix64& rng, unsigned max_degree) {
    return gen_harmonic(rng, max_degree, HarmonicOptions{.both_parts_nonconstant = true});
}

// Analytic polynomial of degree exactly in [lo, hi], lo >= 1.
BiPoly analytic_with_degree(SplitMix64& rng, unsigned lo, unsigned hi) {
    while (true) {
        BiPoly f = gen_analytic(rng, hi);
        if (f.deg_z() >= lo)
            return f;
    }
}

// Independent check of a post-composition witness.
void check_post_witness(CaseScope& scope, const BiPoly& f, unsigned q, unsigned l, const WitnessResult& w) {
    std::string input = "f = " + show(f) + "; q = " + show(q) + "; l = " + show(l);
    if (!scope.expect(w.verdict == Verdict::Violation && w.witness_F.has_value(), input, "violation",
                      to_string(w.verdict)))
        return;
    const BiPoly& F = *w.witness_F;
    bool in_class = q == 0   ? is_analytic(F)
                    : q == 1 ? polyharmonic_order(F) == 1 && !is_analytic(F)
                             : polyharmonic_order(F) == q;
    scope.expect(in_class, input, "witness in class H_q^*", show(F));
    unsigned order = polyharmonic_order(compose(f, F));
    scope.expect(order > l, input + "; F = " + show(F), "order(f∘F) > l", show(order));
}

void check_pre_witness(CaseScope& scope, const BiPoly& f, unsigned q, unsigned l, const WitnessResult& w) {
    std::string input = "f = " + show(f) + "; q = " + show(q) + "; l = " + show(l);
    if (!scope.expect(w.verdict == Verdict::Violation && w.witness_F.has_value(), input, "violation",
                      to_string(w.verdict)))
        return;
    const BiPoly& F = *w.witness_F;
    bool in_class = q <= 1 ? polyharmonic_order(F) <= 1 : polyharmonic_order(F) == q;
    scope.expect(in_class, input, "witness in the required class", show(F));
    unsigned order = polyharmonic_order(compose(F, f));
    scope.expect(order > l, input + "; F = " + show(F), "order(F∘f) > l", show(order));
}

// --- Theorem on post-composition, sufficiency ------------------------------

void thm1_suff_case(SplitMix64& rng, std::size_t, std::uint64_t, CaseScope& scope) {
    {
        BiPoly f = gen_harmonic(rng, 4);
        BiPoly F = gen_analytic(rng, 3);
        std::string input = pair_input("f", f, "F", F);
        scope.expect(is_harmonic(f) && is_analytic(F), input, "generator contract", "violated");
        unsigned order = polyharmonic_order(compose(f, F));
        scope.expect(order <= 1, input, "order(f∘F) <= 1", show(order));
        scope.bump(0);
    }
    {
        BiPoly f = gen_harmonic(rng, 1);
        BiPoly F = non_analytic_harmonic(rng, 3);
        std::string input = pair_input("f", f, "F", F);
        scope.expect(is_affine(f) && polyharmonic_order(F) == 1 && !is_analytic(F), input,
                     "generator contract", "violated");
        unsigned order = polyharmonic_order(compose(f, F));
        scope.expect(order <= 1, input, "order(f∘F) <= 1", show(order));
        scope.bump(1);
    }
    {
        unsigned q = urange(rng, 2, 4);
        BiPoly f = gen_harmonic(rng, 1);
        BiPoly F = gen_strict_q_harmonic(rng, q, 2);
        std::string input = pair_input("f", f, "F", F);
        scope.expect(polyharmonic_order(F) == q, input, "generator contract", "violated");
        unsigned order = polyharmonic_order(compose(f, F));
        scope.expect(order <= q, input, "order(f∘F) <= " + show(q), show(order));
        scope.bump(2);

        unsigned l = urange(rng, 1, 8);
        unsigned t_max = std::min(1u, degree_bound(q, l));
        BiPoly g = t_max == 0 ? BiPoly(random_coefficient(rng)) : gen_harmonic(rng, 1);
        input = pair_input("f", g, "F", F) + "; l = " + show(l);
        scope.expect(allowed_form_post(g, q, l), input, "allowed form", "rejected");
        order = polyharmonic_order(compose(g, F));
        scope.expect(order <= l, input, "order(f∘F) <= l", show(order));
        scope.bump(3);
    }
}

// --- Theorem on post-composition, necessity --------------------------------

void thm1_nec_case(SplitMix64& rng, std::size_t, std::uint64_t, CaseScope& scope) {
    auto run = [&](const BiPoly& f, unsigned q, unsigned l, std::size_t counter) {
        std::string input = "f = " + show(f) + "; q = " + show(q) + "; l = " + show(l);
        if (!scope.expect(!allowed_form_post(f, q, l), input, "non-compliant sample", "compliant"))
            return;
        try {
            check_post_witness(scope, f, q, l, find_witness_post(f, q, l));
        } catch (const InternalInconsistency& e) {
            scope.bump(3);
            scope.expect(false, input, "verified witness", e.what());
        }
        scope.bump(counter);
    };

    {
        unsigned l = urange(rng, 1, 4);
        run(gen_strict_q_harmonic(rng, urange(rng, 2, 3), 2), 0, l, 0);
    }
    {
        unsigned l = urange(rng, 1, 4);
        BiPoly f;
        if (rng.chance(1, 2)) {
            f = gen_strict_q_harmonic(rng, urange(rng, 2, 3), 2);
        } else {
            do {
                f = gen_harmonic(rng, 3);
            } while (is_affine(f));
        }
        run(f, 1, l, 1);
    }
    {
        unsigned q = urange(rng, 2, 3);
        unsigned l = urange(rng, 1, 5);
        BiPoly f;
        switch (rng.below(3)) {
        case 0: f = gen_strict_q_harmonic(rng, urange(rng, 2, 3), 2); break;
        case 1:
            do {
                f = gen_harmonic(rng, 3);
            } while (is_affine(f));
            break;
        default: f = gen_harmonic(rng, 1, HarmonicOptions{.both_parts_nonconstant = rng.chance(1, 2)}); break;
        }
        if (allowed_form_post(f, q, l))
            f = gen_strict_q_harmonic(rng, 2, 2);
        run(f, q, l, 2);
    }
}

// --- Theorem on pre-composition, sufficiency -------------------------------

void thm2_suff_case(SplitMix64& rng, std::size_t, std::uint64_t, CaseScope& scope) {
    {
        BiPoly f = maybe_conjugate(rng, gen_analytic(rng, 3));
        BiPoly F = gen_harmonic(rng, 3);
        std::string input = pair_input("f", f, "F", F);
        unsigned order = polyharmonic_order(compose(F, f));
        scope.expect(order <= 1, input, "order(F∘f) <= 1", show(order));
        scope.bump(0);
    }
    {
        BiPoly f = maybe_conjugate(rng, gen_analytic(rng, 4));
        unsigned q = urange(rng, 2, 4);
        BiPoly F = gen_strict_q_harmonic(rng, q, 2);
        unsigned t = std::max(f.deg_z(), f.deg_zbar());
        unsigned bound = t * (q - 1) + 1;
        std::string input = pair_input("f", f, "F", F) + "; q = " + show(q);
        scope.expect(allowed_form_pre(f, q, bound) == PreForm::Compliant, input,
                     "compliant at l = t(q-1)+1", "rejected");
        unsigned order = polyharmonic_order(compose(F, f));
        scope.expect(order <= bound, input, "order(F∘f) <= " + show(bound), show(order));
        scope.bump(1);
    }
}

// --- Theorem on pre-composition, necessity ---------------------------------

void thm2_nec_case(SplitMix64& rng, std::size_t, std::uint64_t, CaseScope& scope) {
    auto run = [&](const BiPoly& f, unsigned q, unsigned l, std::size_t counter) {
        std::string input = "f = " + show(f) + "; q = " + show(q) + "; l = " + show(l);
        if (!scope.expect(allowed_form_pre(f, q, l) == PreForm::NonCompliant, input, "non-compliant sample",
                          to_string(allowed_form_pre(f, q, l))))
            return;
        try {
            check_pre_witness(scope, f, q, l, find_witness_pre(f, q, l));
        } catch (const InternalInconsistency& e) {
            scope.expect(false, input, "verified witness", e.what());
        }
        scope.bump(counter);
    };

    {
        unsigned q = urange(rng, 0, 1);
        unsigned l = urange(rng, 1, 4);
        run(non_analytic_harmonic(rng, 2), q, l, 0);
    }
    {
        unsigned q = urange(rng, 2, 4);
        unsigned l = urange(rng, 1, 4);
        unsigned bound = degree_bound(q, l);
        BiPoly f = rng.chance(2, 3) ? maybe_conjugate(rng, analytic_with_degree(rng, bound + 1, bound + 2))
                                    : non_analytic_harmonic(rng, 2);
        run(f, q, l, 1);
    }
    {
        BiPoly H = gen_analytic(rng, 4);
        BiPoly G = gen_analytic(rng, 4);
        unsigned l = urange(rng, 1, 5);
        BiPoly lhs = laplacian(H * conjugate(G), l);
        BiPoly rhs = separable_laplacian(H, G, l);
        scope.expect(lhs == rhs, pair_input("H", H, "G", G) + "; l = " + show(l), show(lhs), show(rhs));
        scope.bump(2);
    }
}

// --- Pre-composition into H_1 and H_2 --------------------------------------

void thm3_case(SplitMix64& rng, std::size_t, std::uint64_t, CaseScope& scope) {
    auto expect_form = [&](const BiPoly& f, unsigned q, unsigned l, PreForm want) {
        PreForm got = allowed_form_pre(f, q, l);
        return scope.expect(got == want,
                            "f = " + show(f) + "; q = " + show(q) + "; l = " + show(l),
                            to_string(want), to_string(got));
    };
    auto expect_witness = [&](const BiPoly& f, unsigned q, unsigned l) {
        try {
            check_pre_witness(scope, f, q, l, find_witness_pre(f, q, l));
        } catch (const InternalInconsistency& e) {
            scope.expect(false, "f = " + show(f), "verified witness", e.what());
        }
    };
    auto expect_stays = [&](const BiPoly& f, const BiPoly& F, unsigned l) {
        unsigned order = polyharmonic_order(compose(F, f));
        scope.expect(order <= l, pair_input("f", f, "F", F), "order(F∘f) <= " + show(l), show(order));
    };

    // (a) harmonic outer maps, l in {1, 2}.
    {
        unsigned l = urange(rng, 1, 2);
        unsigned q = urange(rng, 0, 1);
        BiPoly good = maybe_conjugate(rng, gen_analytic(rng, 3));
        if (expect_form(good, q, l, PreForm::Compliant))
            expect_stays(good, gen_harmonic(rng, 3), 1);

        BiPoly bad;
        do {
            bad = gen_strict_q_harmonic(rng, urange(rng, 1, 3), 2);
        } while (is_analytic(bad) || is_antianalytic(bad));
        if (expect_form(bad, q, l, PreForm::NonCompliant))
            expect_witness(bad, q, l);
        scope.bump(l == 1 ? 0 : 1);
    }
    // (b) strictly q-harmonic outer maps into H_1: only constants survive.
    {
        unsigned q = urange(rng, 2, 3);
        BiPoly constant(random_coefficient(rng));
        if (expect_form(constant, q, 1, PreForm::Compliant)) {
            BiPoly F = gen_strict_q_harmonic(rng, q, 2);
            BiPoly composed = compose(F, constant);
            scope.expect(composed.is_constant(), pair_input("f", constant, "F", F), "constant", show(composed));
        }
        BiPoly bad;
        do {
            bad = gen_strict_q_harmonic(rng, urange(rng, 1, 2), 2);
        } while (bad.is_constant());
        if (expect_form(bad, q, 1, PreForm::NonCompliant))
            expect_witness(bad, q, 1);
        scope.bump(2);
    }
    // (c) into H_2: f or conj(f) analytic of degree <= floor(1/(q-1)).
    {
        unsigned q = urange(rng, 2, 3);
        unsigned bound = degree_bound(q, 2);
        BiPoly good = maybe_conjugate(rng, gen_analytic(rng, bound));
        if (expect_form(good, q, 2, PreForm::Compliant))
            expect_stays(good, gen_strict_q_harmonic(rng, q, 2), 2);

        BiPoly bad = rng.chance(1, 2) ? maybe_conjugate(rng, analytic_with_degree(rng, bound + 1, bound + 2))
                                      : gen_strict_q_harmonic(rng, urange(rng, 1, 2), 2);
        if (bad.is_constant() || (is_analytic(bad) && bad.deg_z() <= bound) ||
            (is_antianalytic(bad) && bad.deg_zbar() <= bound))
            bad = non_analytic_harmonic(rng, 2);
        if (expect_form(bad, q, 2, PreForm::NonCompliant))
            expect_witness(bad, q, 2);
        scope.bump(3);
    }
}

// --- Inclusion steps --------------------------------------------------------

void prop21_case(SplitMix64& rng, std::size_t, std::uint64_t, CaseScope& scope) {
    {
        unsigned p = urange(rng, 1, 4);
        unsigned r;
        do {
            r = urange(rng, 1, 4);
        } while (r == p);
        BiPoly f = gen_strict_q_harmonic(rng, p, 3);
        BiPoly g = gen_strict_q_harmonic(rng, r, 3);
        unsigned order = polyharmonic_order(f + g);
        scope.expect(order == std::max(p, r), pair_input("f", f, "g", g), show(std::max(p, r)), show(order));
        scope.bump(0);
    }
    {
        unsigned q = urange(rng, 1, 3);
        BiPoly upper = gen_strict_q_harmonic(rng, q + 1, 2);
        BiPoly lower = gen_strict_q_harmonic(rng, q, 2);
        scope.expect(is_strictly_q_harmonic(upper + lower, q + 1), pair_input("F_{q+1}", upper, "F_q", lower),
                     "strictly (q+1)-harmonic sum", show(polyharmonic_order(upper + lower)));
        scope.bump(2);
    }
    {
        BiPoly f = gen_bipoly(rng, 6, 8);
        BiPoly same = compose(BiPoly::z(), f);
        scope.expect(same == f, "f = " + show(f), show(f), show(same));
        scope.expect(polyharmonic_order(conjugate(f)) == polyharmonic_order(f), "f = " + show(f),
                     "order preserved by conjugation", show(polyharmonic_order(conjugate(f))));
        scope.bump(1);
    }
}

// --- Biharmonic pre-composition with exponentials ---------------------------

void prop22_case(SplitMix64& rng, std::size_t, std::uint64_t, CaseScope& scope) {
    BiPoly f;
    switch (rng.below(4)) {
    case 0: f = gen_analytic(rng, 4); break;
    case 1: f = conjugate(gen_analytic(rng, 4)); break;
    default: f = gen_bipoly(rng, 4, 6); break;
    }
    const std::string input = "f = " + show(f);

    BiPoly a1 = a_m(f, 1);
    BiPoly a2 = a_m(f, 2);
    BiPoly a3 = a_m(f, 3);
    bool all_vanish = a1.is_zero() && a2.is_zero() && a3.is_zero();
    BiPoly fz = d_dz(f);
    BiPoly fzb = d_dzbar(f);
    BiPoly product = fz * fzb;
    bool degenerate = is_analytic(f) || is_antianalytic(f);

    scope.expect(all_vanish == product.is_zero(), input, "A_1=A_2=A_3=0 iff f_z f_zbar = 0",
                 all_vanish ? "A vanish, product nonzero" : "A nonzero, product vanishes");
    scope.expect(product.is_zero() == degenerate, input, "f_z f_zbar = 0 iff analytic or anti-analytic",
                 degenerate ? "degenerate with nonzero product" : "zero product, not degenerate");

    // A_2 - A_1 = Q + 3R and A_3 - A_2 = Q + 5R with R = (f_z f_zbar)^2.
    BiPoly fzz = d_dz(fz);
    BiPoly fzbzb = d_dzbar(fzb);
    BiPoly fzzb = d_dzbar(fz);
    BiPoly Q = fz * fz * fzbzb + fzb * fzb * fzz + BiPoly(4) * fz * fzb * fzzb;
    BiPoly R = product * product;
    scope.expect(a2 - a1 == Q + BiPoly(3) * R, input, "A_2 - A_1 = Q + 3R", show(a2 - a1));
    scope.expect(a3 - a2 == Q + BiPoly(5) * R, input, "A_3 - A_2 = Q + 5R", show(a3 - a2));
    scope.bump(degenerate ? 0 : 1);
}

// --- Open pre-composition statement ----------------------------------------

unsigned conjecture_l(const SuiteOptions& options, std::size_t index) {
    return options.l != 0 ? options.l : 3 + static_cast<unsigned>(index % 2);
}

SuiteDef make_conjecture_suite(const SuiteOptions& options) {
    return {"conjecture_search",
            {"sampled_violation", "family_violation", "candidates"},
            [options](SplitMix64&, std::size_t index, std::uint64_t case_seed, CaseScope& scope) {
                unsigned l = conjecture_l(options, index);
                ConjectureCase c = conjecture_case(case_seed, l);
                if (c.sampled_violation)
                    scope.bump(0);
                else if (c.family_violation)
                    scope.bump(1);
                else
                    scope.bump(2);
                scope.expect(!c.candidate(),
                             "case_seed = " + std::to_string(case_seed) + "; l = " + show(l) + "; f = " + show(c.f),
                             "some harmonic F with order(F∘f) > l",
                             "none among sampled F and the w^m family (sampled evidence only)");
            }};
}

std::vector<SuiteDef> suite_table(const SuiteOptions& options) {
    return {
        {"thm1_suff", {"branch_a", "branch_b", "branch_c", "branch_c_form"}, thm1_suff_case},
        {"thm1_nec", {"q0", "q1", "q2plus", "internal_inconsistency"}, thm1_nec_case},
        {"thm2_suff", {"analytic_into_harmonic", "degree_bound"}, thm2_suff_case},
        {"thm2_nec", {"q_le_1", "q_ge_2", "separable_identity"}, thm2_nec_case},
        {"thm3", {"a_l1", "a_l2", "b", "c"}, thm3_case},
        {"prop21", {"order_of_sum", "identity_compose", "strict_sum"}, prop21_case},
        {"prop22", {"degenerate", "nondegenerate"}, prop22_case},
        make_conjecture_suite(options),
    };
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& def : suite_table({}))
            out.push_back(def.name);
        return out;
    }();
    return names;
}

ConjectureCase conjecture_case(std::uint64_t case_seed, unsigned l) {
    if (l < 3)
        throw std::invalid_argument("conjecture_case: the open range is l >= 3");
    SplitMix64 rng(case_seed);
    ConjectureCase c;
    c.case_seed = case_seed;
    c.l = l;
    // order(f) > l is settled by F = w, so only 2 <= order(f) <= l is drawn.
    c.f = gen_strict_q_harmonic(rng, urange(rng, 2, l), 2);

    for (int k = 0; k < 3; ++k) {
        BiPoly F = gen_harmonic(rng, l);
        if (polyharmonic_order(compose(F, c.f)) > l) {
            c.sampled_violation = true;
            c.violating_F = F;
            return c;
        }
    }
    WitnessResult w = find_witness_pre(c.f, 1, l);
    if (w.witness_F) {
        c.family_violation = true;
        c.violating_F = w.witness_F;
    }
    return c;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::size_t cases, SuiteOptions options) {
    auto table = suite_table(options);
    auto it = std::find_if(table.begin(), table.end(), [&](const SuiteDef& d) { return d.name == name; });
    if (it == table.end())
        throw UnknownSuite("unknown suite: " + std::string(name));
    const SuiteDef& def = *it;

    std::vector<CaseOutcome> outcomes(cases);
    auto run_one = [&](std::size_t index) {
        std::uint64_t case_seed = derive_seed(seed, index);
        SplitMix64 rng(case_seed);
        CaseScope scope(def.counters.size());
        try {
            def.run(rng, index, case_seed, scope);
        } catch (const std::exception& e) {
            scope.expect(false, "case_seed = " + std::to_string(case_seed), "no exception", e.what());
        }
        outcomes[index] = scope.take();
    };

    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cases, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < cases; ++i)
            run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cases; i = next++)
                    run_one(i);
            });
    }

    SuiteReport report;
    report.suite_name = def.name;
    report.seed = seed;
    report.cases_run = cases;
    for (const auto& counter : def.counters)
        report.counters.emplace_back(counter, 0);
    for (auto& outcome : outcomes) {
        for (std::size_t k = 0; k < outcome.counts.size(); ++k)
            report.counters[k].second += outcome.counts[k];
        if (outcome.failure) {
            ++report.failures;
            if (!report.first_failure)
                report.first_failure = std::move(outcome.failure);
        }
    }
    return report;
}

}  // namespace polyharm
