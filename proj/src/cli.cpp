#include "polyharm/cli.hpp"

#include "polyharm/classify.hpp"
#include "polyharm/gen.hpp"
#include "polyharm/numeric.hpp"
#include "polyharm/parser.hpp"
#include "polyharm/suites.hpp"
#include "polyharm/theorems.hpp"
#include "polyharm/wirtinger.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

namespace polyharm::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Expression text paired with its parse, so errors can point into it.
struct ExprArg {
    std::string text;
    BiPoly value;
};

struct Outcome {
    int code = kExitOk;
    Json json = Json::object();
    std::string text;
};

class ExprParseFailure : public std::runtime_error {
public:
    ExprParseFailure(const std::string& text, const ParseError& e)
        : std::runtime_error(e.what()), text_(text), offset_(e.offset()) {}
    const std::string& text() const { return text_; }
    std::size_t offset() const { return offset_; }

private:
    std::string text_;
    std::size_t offset_;
};

ExprArg parse_arg(const std::string& text) {
    try {
        return {text, parse(text)};
    } catch (const ParseError& e) {
        throw ExprParseFailure(text, e);
    }
}

GaussianRational parse_constant(const std::string& text, const char* what) {
    ExprArg arg = parse_arg(text);
    if (!arg.value.is_constant())
        throw UsageError(std::string(what) + " must be a constant, got " + text);
    return arg.value.coefficient(0, 0);
}

Rational parse_real(const std::string& text, const char* what) {
    GaussianRational c = parse_constant(text, what);
    if (!c.is_real())
        throw UsageError(std::string(what) + " must be real, got " + text);
    return c.real();
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string format_complex(Complex c) {
    return "(" + format_double(c.real()) + ", " + format_double(c.imag()) + ")";
}

Json optional_json(const std::optional<unsigned>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag)
        return *flag;
    if (const char* env = std::getenv("POLYHARM_SEED"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == nullptr || *end != '\0')
            throw UsageError(std::string("POLYHARM_SEED is not an unsigned integer: ") + env);
        return v;
    }
    return 1;
}

Outcome poly_result(const BiPoly& f) {
    Outcome o;
    o.json["result"] = canonical_print(f);
    o.json["order"] = polyharmonic_order(f);
    o.text = canonical_print(f) + "\n";
    return o;
}

Outcome classify_outcome(const BiPoly& f) {
    ClassReport r = classify(f);
    Outcome o;
    o.json["order"] = r.order;
    o.json["is_analytic"] = r.is_analytic;
    o.json["is_antianalytic"] = r.is_antianalytic;
    o.json["is_harmonic"] = r.is_harmonic;
    o.json["is_affine"] = r.is_affine;
    o.json["analytic_degree"] = optional_json(r.analytic_degree);
    o.json["harmonic_degree"] = optional_json(r.harmonic_degree);
    std::ostringstream os;
    for (const auto& [key, value] : o.json.items())
        os << key << "=" << (value.is_null() ? std::string("none") : value.dump()) << "\n";
    o.text = os.str();
    return o;
}

Outcome witness_outcome(const std::string& theorem, const BiPoly& f, unsigned q, unsigned l) {
    const bool post = theorem[0] == '1';
    Outcome o;
    o.json["theorem"] = theorem;
    o.json["direction"] = post ? "post" : "pre";
    o.json["q"] = q;
    o.json["l"] = l;

    WitnessResult w;
    bool compliant = post ? allowed_form_post(f, q, l) : allowed_form_pre(f, q, l) == PreForm::Compliant;
    if (compliant) {
        w.verdict = Verdict::Compliant;
        w.required_bound = l;
    } else {
        w = post ? find_witness_post(f, q, l) : find_witness_pre(f, q, l);
    }

    o.json["verdict"] = to_string(w.verdict);
    o.json["witness"] = w.witness_F ? Json(canonical_print(*w.witness_F)) : Json(nullptr);
    o.json["composition_order"] = optional_json(w.composition_order);
    o.json["required_bound"] = w.required_bound;
    o.json["family"] = w.family_tag.empty() ? Json(nullptr) : Json(w.family_tag);

    std::ostringstream os;
    os << "verdict: " << to_string(w.verdict) << "\n";
    if (w.witness_F) {
        os << "family: " << w.family_tag << "\n";
        os << "witness: F = " << canonical_print(*w.witness_F) << "\n";
        os << "composition_order: " << *w.composition_order << "\n";
    }
    os << "required_bound: " << w.required_bound << "\n";
    if (w.verdict == Verdict::ConjectureOnly)
        os << "note: open case; the characterization is conjectured, not proved\n";
    o.text = os.str();
    o.code = w.verdict == Verdict::Violation ? kExitViolation : kExitOk;
    return o;
}

Outcome suite_outcome(const SuiteReport& r, bool conjecture) {
    Outcome o;
    o.json["suite"] = r.suite_name;
    o.json["cases_run"] = r.cases_run;
    o.json["failures"] = r.failures;
    o.json["seed"] = r.seed;
    Json counters = Json::object();
    for (const auto& [key, value] : r.counters)
        counters[key] = value;
    o.json["counters"] = counters;
    if (r.first_failure)
        o.json["first_failure"] = {{"input", r.first_failure->input},
                                   {"expected", r.first_failure->expected},
                                   {"got", r.first_failure->got}};
    else
        o.json["first_failure"] = nullptr;
    if (conjecture)
        o.json["note"] = "sampled evidence only; zero candidates is not a proof";

    std::ostringstream os;
    os << "suite: " << r.suite_name << "\n"
       << "seed: " << r.seed << "\n"
       << "cases_run: " << r.cases_run << "\n"
       << "failures: " << r.failures << "\n";
    for (const auto& [key, value] : r.counters)
        os << key << ": " << value << "\n";
    if (r.first_failure)
        os << "first_failure.input: " << r.first_failure->input << "\n"
           << "first_failure.expected: " << r.first_failure->expected << "\n"
           << "first_failure.got: " << r.first_failure->got << "\n";
    if (conjecture)
        os << "note: sampled evidence only; zero candidates is not a proof\n";
    o.text = os.str();
    o.code = r.failures == 0 ? kExitOk : kExitViolation;
    return o;
}

Outcome fdcheck_outcome(const BiPoly& f, unsigned points, double h, std::uint64_t seed, double abs_tol,
                        double rel_tol) {
    SplitMix64 rng(seed);
    Outcome o;
    Json list = Json::array();
    std::ostringstream os;
    double worst = 0.0;
    bool passed = true;
    for (unsigned n = 0; n < points; ++n) {
        FdReport r = fd_laplacian(f, gen_disk_point(rng), h);
        bool ok = r.abs_error <= std::max(abs_tol, rel_tol * std::abs(r.symbolic_value));
        passed = passed && ok;
        worst = std::max(worst, r.abs_error);
        list.push_back({{"point", {r.point.real(), r.point.imag()}},
                        {"symbolic", {r.symbolic_value.real(), r.symbolic_value.imag()}},
                        {"fd", {r.fd_value.real(), r.fd_value.imag()}},
                        {"abs_error", r.abs_error},
                        {"ok", ok}});
        os << "point=" << format_complex(r.point) << " symbolic=" << format_complex(r.symbolic_value)
           << " fd=" << format_complex(r.fd_value) << " abs_error=" << format_double(r.abs_error)
           << (ok ? " ok" : " FAIL") << "\n";
    }
    o.json["seed"] = seed;
    o.json["h"] = h;
    o.json["points"] = list;
    o.json["abs_error"] = worst;
    o.json["passed"] = passed;
    os << "max abs_error=" << format_double(worst) << (passed ? " passed" : " failed") << "\n";
    o.text = os.str();
    o.code = passed ? kExitOk : kExitViolation;
    return o;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for polyharmonic polynomial mappings of one complex variable.\n\n"
                 "Expression grammar:\n" +
                 std::string(kGrammarHelp)};
    app.name("polyharm");
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    app.add_flag("--json", json, "Print a single JSON object instead of text");

    std::string expr;
    std::string expr2;
    unsigned times = 1;
    std::string theorem;
    std::optional<unsigned> l_flag;
    std::optional<unsigned> q_flag;
    std::optional<std::uint64_t> seed_flag;
    std::size_t cases = 100;
    std::string suite;
    std::string alpha = "0";
    std::string c_text = "0";
    std::string at;
    unsigned points = 5;
    double h = 1e-4;
    double abs_tol = 1e-5;
    double rel_tol = 1e-6;

    auto add_expr = [&](CLI::App* sub, const char* name = "EXPR") {
        sub->add_option(name, expr, "Mapping in the expression grammar")->required();
    };

    auto* order_cmd = app.add_subcommand("order", "Polyharmonic order (least p with Delta^p f = 0)");
    add_expr(order_cmd);
    auto* dz_cmd = app.add_subcommand("dz", "Wirtinger derivative d/dz");
    add_expr(dz_cmd);
    auto* dzbar_cmd = app.add_subcommand("dzbar", "Wirtinger derivative d/dzbar");
    add_expr(dzbar_cmd);
    auto* lap_cmd = app.add_subcommand("laplacian", "Iterated complex Laplacian, Delta = 4 d^2/dz dzbar");
    lap_cmd->add_option("--times", times, "Number of applications")->check(CLI::PositiveNumber);
    add_expr(lap_cmd);
    auto* almansi_cmd = app.add_subcommand("almansi", "Almansi components G_1..G_p");
    add_expr(almansi_cmd);
    auto* compose_cmd = app.add_subcommand("compose", "OUTER∘INNER");
    compose_cmd->add_option("OUTER", expr, "Mapping applied second")->required();
    compose_cmd->add_option("INNER", expr2, "Mapping applied first")->required();
    auto* classify_cmd = app.add_subcommand("classify", "Structural classification");
    add_expr(classify_cmd);

    auto* witness_cmd = app.add_subcommand("witness", "Check a composition characterization, with witness");
    witness_cmd->add_option("--theorem", theorem, "1a, 1b, 1c (f∘F); 2a, 2b, 3b, 3c (F∘f)")
        ->required()
        ->check(CLI::IsMember({"1a", "1b", "1c", "2a", "2b", "3b", "3c"}));
    witness_cmd->add_option("--l", l_flag, "Target class H_l")->check(CLI::PositiveNumber);
    witness_cmd->add_option("--q", q_flag, "Class H_q^* of F");
    add_expr(witness_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run a seeded verification suite");
    verify_cmd->add_option("--suite", suite, "Suite name")->required();
    verify_cmd->add_option("--seed", seed_flag, "Seed (default: POLYHARM_SEED, then 1)");
    verify_cmd->add_option("--cases", cases, "Number of cases");

    auto* conj_cmd = app.add_subcommand("conjecture", "Seeded search for candidates against the open case");
    conj_cmd->add_option("--seed", seed_flag, "Seed (default: POLYHARM_SEED, then 1)");
    conj_cmd->add_option("--cases", cases, "Number of cases");
    conj_cmd->add_option("--l", l_flag, "Target class H_l, l >= 3")->check(CLI::Range(3u, 1000u));

    auto* reich_cmd = app.add_subcommand("reich", "Test (G')^2 = a^2 G^4 + 2c G^3 + conj(a)^2 G^2");
    reich_cmd->add_option("--alpha", alpha, "Complex constant (expression)");
    reich_cmd->add_option("--c", c_text, "Real rational constant");
    add_expr(reich_cmd, "G_EXPR");

    auto* eval_cmd = app.add_subcommand("eval", "Exact value at a Gaussian-rational point");
    add_expr(eval_cmd);
    eval_cmd->add_option("--at", at, "Point as x,y with rational x and y")->required();

    auto* fd_cmd = app.add_subcommand("fdcheck", "Finite-difference check of the Laplacian");
    fd_cmd->set_help_flag("--help", "Print this help message and exit");
    add_expr(fd_cmd);
    fd_cmd->add_option("--points", points, "Number of random points in the unit disk");
    fd_cmd->add_option("--h", h, "Stencil step")->check(CLI::PositiveNumber);
    fd_cmd->add_option("--seed", seed_flag, "Seed (default: POLYHARM_SEED, then 1)");
    fd_cmd->add_option("--abs-tol", abs_tol, "Absolute tolerance");
    fd_cmd->add_option("--rel-tol", rel_tol, "Relative tolerance");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        Outcome o;
        if (order_cmd->parsed()) {
            BiPoly f = parse_arg(expr).value;
            o.json["order"] = polyharmonic_order(f);
            o.text = std::to_string(polyharmonic_order(f)) + "\n";
        } else if (dz_cmd->parsed()) {
            o = poly_result(d_dz(parse_arg(expr).value));
        } else if (dzbar_cmd->parsed()) {
            o = poly_result(d_dzbar(parse_arg(expr).value));
        } else if (lap_cmd->parsed()) {
            o = poly_result(laplacian(parse_arg(expr).value, times));
            o.json["times"] = times;
        } else if (almansi_cmd->parsed()) {
            AlmansiForm form = almansi_decompose(parse_arg(expr).value);
            Json comps = Json::array();
            std::ostringstream os;
            for (std::size_t k = 0; k < form.components.size(); ++k) {
                comps.push_back(canonical_print(form.components[k]));
                os << "G_" << k + 1 << " = " << canonical_print(form.components[k]) << "\n";
            }
            if (form.components.empty())
                os << "(zero mapping: no components)\n";
            o.json["order"] = form.components.size();
            o.json["components"] = comps;
            o.text = os.str();
        } else if (compose_cmd->parsed()) {
            BiPoly outer = parse_arg(expr).value;
            BiPoly inner = parse_arg(expr2).value;
            o = poly_result(compose(outer, inner));
        } else if (classify_cmd->parsed()) {
            o = classify_outcome(parse_arg(expr).value);
        } else if (witness_cmd->parsed()) {
            BiPoly f = parse_arg(expr).value;
            unsigned q = 0;
            unsigned l = 0;
            if (theorem == "3b" || theorem == "3c") {
                unsigned fixed = theorem == "3b" ? 1 : 2;
                if (l_flag && *l_flag != fixed)
                    throw UsageError("--theorem " + theorem + " fixes l = " + std::to_string(fixed));
                l = fixed;
            } else {
                if (!l_flag)
                    throw UsageError("--l is required for --theorem " + theorem);
                l = *l_flag;
            }
            if (theorem == "1a" || theorem == "1b") {
                q = theorem == "1a" ? 0 : 1;
                if (q_flag && *q_flag != q)
                    throw UsageError("--theorem " + theorem + " fixes q = " + std::to_string(q));
            } else if (theorem == "2a") {
                q = q_flag.value_or(1);
                if (q > 1)
                    throw UsageError("--theorem 2a takes q in {0, 1}");
            } else {
                q = q_flag.value_or(2);
                if (q < 2)
                    throw UsageError("--theorem " + theorem + " needs q >= 2");
            }
            o = witness_outcome(theorem, f, q, l);
        } else if (verify_cmd->parsed()) {
            o = suite_outcome(run_suite(suite, resolve_seed(seed_flag), cases), suite == "conjecture_search");
        } else if (conj_cmd->parsed()) {
            SuiteOptions opts;
            opts.l = l_flag.value_or(0);
            o = suite_outcome(run_suite("conjecture_search", resolve_seed(seed_flag), cases, opts), true);
            o.json["l"] = l_flag ? Json(*l_flag) : Json("3,4");
        } else if (reich_cmd->parsed()) {
            BiPoly G = parse_arg(expr).value;
            bool holds = reich_condition_check(G, parse_constant(alpha, "--alpha"), parse_real(c_text, "--c"));
            o.json["reich_condition"] = holds;
            o.text = holds ? "true\n" : "false\n";
        } else if (eval_cmd->parsed()) {
            BiPoly f = parse_arg(expr).value;
            auto comma = at.find(',');
            if (comma == std::string::npos)
                throw UsageError("--at expects x,y");
            GaussianRational point(parse_real(at.substr(0, comma), "--at x"),
                                   parse_real(at.substr(comma + 1), "--at y"));
            GaussianRational v = eval_exact(f, point);
            o.json["value"] = v.to_string();
            o.json["re"] = rational_to_string(v.real());
            o.json["im"] = rational_to_string(v.imag());
            o.text = v.to_string() + "\n";
        } else if (fd_cmd->parsed()) {
            o = fdcheck_outcome(parse_arg(expr).value, points, h, resolve_seed(seed_flag), abs_tol, rel_tol);
        }

        if (json)
            out << o.json.dump() << "\n";
        else
            out << o.text;
        return o.code;
    } catch (const ExprParseFailure& e) {
        err << "error: " << e.what() << "\n  " << e.text() << "\n  " << std::string(e.offset(), ' ') << "^\n";
        return kExitUsage;
    } catch (const DivisionByZero& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownSuite& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalInconsistency& e) {
        if (json)
            out << Json{{"verdict", "internal_inconsistency"}, {"error", e.what()}}.dump() << "\n";
        err << "internal inconsistency: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace polyharm::cli
