#include "polyharm/parser.hpp"

#include <cctype>
#include <limits>

namespace polyharm {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty())
            out += ", ";
        out += item;
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected one of {" +
                         join(expected) + "}, found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { End, Plus, Minus, Star, Caret, Slash, LParen, RParen, Number, Z, Zbar, I, Conj, Abs2 };

struct Token {
    Tok kind = Tok::End;
    std::size_t offset = 0;
    std::string_view text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        Token t;
        t.offset = pos_;
        if (pos_ >= src_.size())
            return t;

        char c = src_[pos_];
        auto single = [&](Tok kind) {
            t.kind = kind;
            t.text = src_.substr(pos_++, 1);
            return t;
        };
        switch (c) {
        case '+': return single(Tok::Plus);
        case '-': return single(Tok::Minus);
        case '*': return single(Tok::Star);
        case '^': return single(Tok::Caret);
        case '/': return single(Tok::Slash);
        case '(': return single(Tok::LParen);
        case ')': return single(Tok::RParen);
        default: break;
        }

        std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            t.kind = Tok::Number;
            t.text = src_.substr(start, pos_ - start);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            t.text = src_.substr(start, pos_ - start);
            if (t.text == "z")
                t.kind = Tok::Z;
            else if (t.text == "zbar")
                t.kind = Tok::Zbar;
            else if (t.text == "i")
                t.kind = Tok::I;
            else if (t.text == "conj")
                t.kind = Tok::Conj;
            else if (t.text == "abs2")
                t.kind = Tok::Abs2;
            else
                throw ParseError(start, atom_starts(), "identifier '" + std::string(t.text) + "'");
            return t;
        }
        throw ParseError(start, {"operator", "atom"}, "character '" + std::string(1, c) + "'");
    }

    static std::vector<std::string> atom_starts() {
        return {"z", "zbar", "i", "integer", "conj", "abs2", "("};
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

std::string describe(const Token& t) {
    return t.kind == Tok::End ? std::string("end of input") : "'" + std::string(t.text) + "'";
}

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    ExprAst parse_all() {
        ExprAst e = expr();
        if (cur_.kind != Tok::End)
            fail({"+", "-", "*", "^", "end of input"});
        return e;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(cur_.offset, std::move(expected), describe(cur_));
    }

    static ExprAst binary(ExprAst::Kind kind, ExprAst lhs, ExprAst rhs, std::size_t offset) {
        ExprAst node;
        node.kind = kind;
        node.offset = offset;
        node.children.push_back(std::move(lhs));
        node.children.push_back(std::move(rhs));
        return node;
    }

    ExprAst expr() {
        ExprAst lhs;
        if (cur_.kind == Tok::Minus) {
            std::size_t at = cur_.offset;
            advance();
            ExprAst zero;
            zero.literal = 0;
            zero.offset = at;
            lhs = binary(ExprAst::Kind::Sub, std::move(zero), term(), at);
        } else {
            lhs = term();
        }
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            auto kind = cur_.kind == Tok::Plus ? ExprAst::Kind::Add : ExprAst::Kind::Sub;
            std::size_t at = cur_.offset;
            advance();
            lhs = binary(kind, std::move(lhs), term(), at);
        }
        return lhs;
    }

    ExprAst term() {
        ExprAst lhs = factor();
        while (cur_.kind == Tok::Star) {
            std::size_t at = cur_.offset;
            advance();
            lhs = binary(ExprAst::Kind::Mul, std::move(lhs), factor(), at);
        }
        return lhs;
    }

    ExprAst factor() {
        ExprAst base = atom();
        if (cur_.kind != Tok::Caret)
            return base;
        std::size_t at = cur_.offset;
        advance();
        if (cur_.kind != Tok::Number)
            fail({"unsigned integer exponent"});
        mpz_class value(std::string(cur_.text));
        if (value > std::numeric_limits<unsigned>::max())
            fail({"exponent that fits in 32 bits"});
        advance();
        ExprAst node;
        node.kind = ExprAst::Kind::Pow;
        node.offset = at;
        node.exponent = static_cast<unsigned>(value.get_ui());
        node.children.push_back(std::move(base));
        return node;
    }

    ExprAst atom() {
        ExprAst node;
        node.offset = cur_.offset;
        switch (cur_.kind) {
        case Tok::Z: node.kind = ExprAst::Kind::VarZ; advance(); return node;
        case Tok::Zbar: node.kind = ExprAst::Kind::VarZbar; advance(); return node;
        case Tok::I: node.kind = ExprAst::Kind::ImagUnit; advance(); return node;
        case Tok::Number: return rational();
        case Tok::Conj:
        case Tok::Abs2: {
            node.kind = cur_.kind == Tok::Conj ? ExprAst::Kind::Conj : ExprAst::Kind::Abs2;
            advance();
            if (cur_.kind != Tok::LParen)
                fail({"("});
            advance();
            node.children.push_back(expr());
            expect_close();
            return node;
        }
        case Tok::LParen: {
            advance();
            ExprAst inner = expr();
            expect_close();
            return inner;
        }
        default: fail(Lexer::atom_starts());
        }
    }

    void expect_close() {
        if (cur_.kind != Tok::RParen)
            fail({"+", "-", "*", "^", ")"});
        advance();
    }

    ExprAst rational() {
        ExprAst node;
        node.kind = ExprAst::Kind::RationalLiteral;
        node.offset = cur_.offset;
        mpz_class num(std::string(cur_.text));
        advance();
        mpz_class den = 1;
        if (cur_.kind == Tok::Slash) {
            advance();
            if (cur_.kind != Tok::Number)
                fail({"unsigned integer denominator"});
            den = mpz_class(std::string(cur_.text));
            if (den == 0)
                throw DivisionByZero("division by zero in literal at offset " + std::to_string(cur_.offset));
            advance();
        }
        node.literal = Rational(num, den);
        node.literal.canonicalize();
        return node;
    }

    Lexer lexer_;
    Token cur_;
};

}  // namespace

ExprAst parse_ast(std::string_view text) {
    return Parser(text).parse_all();
}

BiPoly lower(const ExprAst& ast) {
    using Kind = ExprAst::Kind;
    switch (ast.kind) {
    case Kind::Add: return lower(ast.children[0]) + lower(ast.children[1]);
    case Kind::Sub: return lower(ast.children[0]) - lower(ast.children[1]);
    case Kind::Mul: return lower(ast.children[0]) * lower(ast.children[1]);
    case Kind::Pow: return lower(ast.children[0]).pow(ast.exponent);
    case Kind::Conj: return conjugate(lower(ast.children[0]));
    case Kind::Abs2: {
        BiPoly e = lower(ast.children[0]);
        return e * conjugate(e);
    }
    case Kind::VarZ: return BiPoly::z();
    case Kind::VarZbar: return BiPoly::zbar();
    case Kind::ImagUnit: return BiPoly(GaussianRational::imaginary_unit());
    case Kind::RationalLiteral: return BiPoly(GaussianRational(ast.literal));
    }
    return {};
}

BiPoly parse(std::string_view text) {
    return lower(parse_ast(text));
}

std::string print(const BiPoly& f) {
    return canonical_print(f);
}

}  // namespace polyharm
