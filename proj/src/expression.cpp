// Recursive-descent parser for the shared expression grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' exponent)?
//   exponent:= ['+' | '-'] digits | '(' ['+' | '-'] digits ')'
//   primary := literal | identifier | '(' expr ')'
//
// A literal is the whitespace-free token digits['/'digits]['i'] and is
// atomic, so `1/2i` is (1/2)*i and `3/4^2` is (3/4)^2.

#include "clusterwp/laurent.hpp"

#include <algorithm>
#include <cctype>

namespace clusterwp {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

enum class Tok { end, number, ident, plus, minus, star, slash, caret, lparen, rparen };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        throw ParseError("column " + std::to_string(pos + 1) + ": " + msg + " in '" + std::string(s_) + "'");
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        cur_ = Token{};
        cur_.pos = pos_;
        if (pos_ >= s_.size()) return;
        const char c = s_[pos_];
        if (digit(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && digit(s_[pos_ + 1])) {
                ++pos_;
                while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
            }
            if (pos_ < s_.size() && s_[pos_] == 'i' && (pos_ + 1 >= s_.size() || !ident_char(s_[pos_ + 1]))) ++pos_;
            if (pos_ < s_.size() && ident_char(s_[pos_])) fail("malformed number", start);
            cur_.kind = Tok::number;
            cur_.text = std::string(s_.substr(start, pos_ - start));
            return;
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            cur_.kind = Tok::ident;
            cur_.text = std::string(s_.substr(start, pos_ - start));
            return;
        }
        ++pos_;
        switch (c) {
            case '+': cur_.kind = Tok::plus; break;
            case '-': cur_.kind = Tok::minus; break;
            case '*': cur_.kind = Tok::star; break;
            case '/': cur_.kind = Tok::slash; break;
            case '^': cur_.kind = Tok::caret; break;
            case '(': cur_.kind = Tok::lparen; break;
            case ')': cur_.kind = Tok::rparen; break;
            default: fail(std::string("unexpected character '") + c + "'", pos_ - 1);
        }
        cur_.text = std::string(1, c);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Token cur_;
};

class Parser {
public:
    Parser(std::string_view text, const VarTablePtr& vars) : lex_(text), vars_(vars) {}

    RationalFn parse() {
        RationalFn r = expr();
        if (lex_.peek().kind != Tok::end) lex_.fail("unexpected '" + lex_.peek().text + "'", lex_.peek().pos);
        return r;
    }

private:
    RationalFn expr() {
        RationalFn acc = term();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k != Tok::plus && k != Tok::minus) return acc;
            lex_.take();
            RationalFn rhs = term();
            acc = k == Tok::plus ? acc + rhs : acc - rhs;
        }
    }

    RationalFn term() {
        RationalFn acc = unary();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k != Tok::star && k != Tok::slash) return acc;
            Token op = lex_.take();
            RationalFn rhs = unary();
            if (k == Tok::star) {
                acc = acc * rhs;
            } else {
                if (rhs.is_zero()) lex_.fail("division by zero", op.pos);
                acc = acc / rhs;
            }
        }
    }

    RationalFn unary() {
        Tok k = lex_.peek().kind;
        if (k == Tok::minus) {
            lex_.take();
            return -unary();
        }
        if (k == Tok::plus) {
            lex_.take();
            return unary();
        }
        return power();
    }

    RationalFn power() {
        RationalFn base = primary();
        if (lex_.peek().kind != Tok::caret) return base;
        Token caret = lex_.take();
        bool paren = false;
        if (lex_.peek().kind == Tok::lparen) {
            lex_.take();
            paren = true;
        }
        bool neg = false;
        if (lex_.peek().kind == Tok::minus || lex_.peek().kind == Tok::plus) neg = lex_.take().kind == Tok::minus;
        Token e = lex_.take();
        if (e.kind != Tok::number || e.text.find_first_not_of("0123456789") != std::string::npos)
            lex_.fail("exponent must be an integer", e.pos);
        if (paren && lex_.take().kind != Tok::rparen) lex_.fail("expected ')' after exponent", e.pos);
        if (lex_.peek().kind == Tok::caret) lex_.fail("chained '^' is ambiguous; use parentheses", lex_.peek().pos);
        const unsigned long n = std::stoul(e.text);
        RationalFn r = RationalFn(LaurentPoly::constant(vars_, 1));
        RationalFn b = base;
        for (unsigned long k = n; k > 0; k >>= 1) {
            if (k & 1u) r = r * b;
            if (k > 1) b = b * b;
        }
        if (neg) {
            if (r.is_zero()) lex_.fail("zero raised to a negative power", caret.pos);
            r = RationalFn(LaurentPoly::constant(vars_, 1)) / r;
        }
        return r;
    }

    RationalFn primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::number:
                return RationalFn(LaurentPoly::constant(vars_, GaussianRational::parse(t.text)));
            case Tok::ident:
                if (vars_->contains(t.text)) return RationalFn(LaurentPoly::variable(vars_, t.text));
                if (t.text == "i") return RationalFn(LaurentPoly::constant(vars_, GaussianRational::i()));
                lex_.fail("unknown identifier '" + t.text + "'", t.pos);
            case Tok::lparen: {
                RationalFn r = expr();
                if (lex_.take().kind != Tok::rparen) lex_.fail("expected ')'", t.pos);
                return r;
            }
            case Tok::end:
                lex_.fail("unexpected end of expression", t.pos);
            default:
                lex_.fail("unexpected '" + t.text + "'", t.pos);
        }
    }

    Lexer lex_;
    const VarTablePtr& vars_;
};

}  // namespace

RationalFn parse_expression(std::string_view text, const VarTablePtr& vars) {
    return Parser(text, vars).parse();
}

std::vector<std::string> expression_identifiers(std::string_view text) {
    std::vector<std::string> out;
    Lexer lex(text);
    while (lex.peek().kind != Tok::end) {
        Token t = lex.take();
        if (t.kind == Tok::ident && t.text != "i" && std::find(out.begin(), out.end(), t.text) == out.end())
            out.push_back(t.text);
    }
    return out;
}

}  // namespace clusterwp
