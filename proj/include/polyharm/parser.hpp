#pragma once

#include "polyharm/bipoly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyharm {

// Grammar (whitespace insignificant):
//   expr     := ["-"] term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := atom ("^" uint)?
//   atom     := "z" | "zbar" | "i" | rational
//             | "conj" "(" expr ")" | "abs2" "(" expr ")" | "(" expr ")"
//   rational := uint ("/" uint)?
// A leading "-" means 0 - term. abs2(e) is e*conj(e). There is no implicit
// multiplication.
inline constexpr std::string_view kGrammarHelp =
    "expr     := [\"-\"] term ((\"+\"|\"-\") term)*\n"
    "term     := factor (\"*\" factor)*\n"
    "factor   := atom (\"^\" uint)?\n"
    "atom     := \"z\" | \"zbar\" | \"i\" | rational | \"conj\" \"(\" expr \")\"\n"
    "          | \"abs2\" \"(\" expr \")\" | \"(\" expr \")\"\n"
    "rational := int (\"/\" uint)?\n"
    "whitespace is insignificant; implicit multiplication (\"2z\") is rejected\n";

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    /// Byte offset into the input.
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

struct ExprAst {
    enum class Kind { Add, Sub, Mul, Pow, Conj, Abs2, VarZ, VarZbar, ImagUnit, RationalLiteral };

    Kind kind = Kind::RationalLiteral;
    std::vector<ExprAst> children;
    unsigned exponent = 0;  // Pow only
    Rational literal;       // RationalLiteral only
    std::size_t offset = 0;
};

/// Throws ParseError, or DivisionByZero for a "p/0" literal.
ExprAst parse_ast(std::string_view text);

/// Lowers by exact ring operations.
BiPoly lower(const ExprAst& ast);

BiPoly parse(std::string_view text);

/// Same as canonical_print; parse(print(f)) == f.
std::string print(const BiPoly& f);

}  // namespace polyharm
