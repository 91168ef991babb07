#include "derivkernel/parser.hpp"

#include <cctype>

#include "derivkernel/errors.hpp"

namespace dk {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            current_ = {Tok::Number, text_.substr(start, pos_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size()) {
                char k = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(k)) || k == '_')
                    ++pos_;
                else
                    break;
            }
            current_ = {Tok::Ident, text_.substr(start, pos_ - start), start};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': current_ = {Tok::Plus, "+", start}; return;
            case '-': current_ = {Tok::Minus, "-", start}; return;
            case '*': current_ = {Tok::Star, "*", start}; return;
            case '/': current_ = {Tok::Slash, "/", start}; return;
            case '^': current_ = {Tok::Caret, "^", start}; return;
            case '(': current_ = {Tok::LParen, "(", start}; return;
            case ')': current_ = {Tok::RParen, ")", start}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(const std::string& text, VarSetPtr vars) : lex_(text), vars_(std::move(vars)) {}

    Polynomial parse_expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            Polynomial t = parse_term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    void expect_end() {
        if (lex_.peek().kind != Tok::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
    }

    // One optional top-level '/' for rational-function input.
    RationalFunction parse_rf() {
        Polynomial num = parse_expr();
        if (lex_.peek().kind == Tok::Slash) {
            lex_.take();
            Polynomial den = parse_expr();
            expect_end();
            if (den.is_zero()) throw DomainError("zero denominator");
            return RationalFunction(std::move(num), std::move(den));
        }
        expect_end();
        return RationalFunction(std::move(num));
    }

private:
    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token t = lex_.peek();
            if (t.kind != Tok::Number) throw ParseError("expected exponent", t.pos);
            lex_.take();
            unsigned long e = std::stoul(t.text);
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_base() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: {
                lex_.take();
                Rational c = parse_number_tail(t.text);
                return Polynomial::constant(vars_, c);
            }
            case Tok::Minus: {
                // A sign directly inside a coefficient position, e.g. "(-3)".
                lex_.take();
                Token n = lex_.peek();
                if (n.kind != Tok::Number) throw ParseError("expected number after '-'", n.pos);
                lex_.take();
                return Polynomial::constant(vars_, -parse_number_tail(n.text));
            }
            case Tok::Ident: {
                lex_.take();
                auto idx = vars_->index(t.text);
                if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.pos);
                return Polynomial::variable(vars_, *idx);
            }
            case Tok::LParen: {
                lex_.take();
                Polynomial inner = parse_expr();
                Token close = lex_.peek();
                if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
                lex_.take();
                return inner;
            }
            case Tok::End:
                throw ParseError("unexpected end of input", t.pos);
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    // `first` digits already consumed; consumes "/posint" when present.
    Rational parse_number_tail(const std::string& first) {
        if (lex_.peek().kind == Tok::Slash) {
            // Only a numeric denominator belongs to the literal; otherwise
            // leave the '/' for the rational-function split.
            Lexer probe = lex_;
            probe.take();
            if (probe.peek().kind == Tok::Number) {
                lex_.take();
                Token den = lex_.take();
                try {
                    return Rational::parse(first + "/" + den.text);
                } catch (const DomainError&) {
                    throw ParseError("zero denominator", den.pos);
                }
            }
        }
        return Rational::parse(first);
    }

    Lexer lex_;
    VarSetPtr vars_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarSetPtr& vars) {
    Parser p(text, vars);
    Polynomial result = p.parse_expr();
    p.expect_end();
    return result;
}

RationalFunction parse_rational_function(const std::string& text, const VarSetPtr& vars) {
    Parser p(text, vars);
    return p.parse_rf();
}

}  // namespace dk
