#include "ratint/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace ratint {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { next(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        next();
        return t;
    }

  private:
    void next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        size_t start = pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Tok::end, "", {start, start}};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '.') {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
            }
            tok_ = {Tok::number, s_.substr(start, pos_ - start), {start, pos_}};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Tok::ident, s_.substr(start, pos_ - start), {start, pos_}};
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            default:
                throw parse_error({start, start + 1},
                                  "a token (found '" + std::string(1, c) + "')");
        }
        ++pos_;
        tok_ = {k, s_.substr(start, 1), {start, pos_}};
    }

    const std::string& s_;
    size_t pos_ = 0;
    Token tok_;
};

Rat rat_from_number(const std::string& text, SourceSpan span) {
    auto dot = text.find('.');
    try {
        if (dot == std::string::npos) return Rat::from_string(text);
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac = text.size() - dot - 1;
        mpz_class num(digits.empty() ? "0" : digits), den = 1;
        for (size_t i = 0; i < frac; ++i) den *= 10;
        return Rat(num, den);
    } catch (const error&) {
        throw parse_error(span, "a number");
    }
}

std::optional<FunKind> fun_from_name(const std::string& name) {
    if (name == "sin") return FunKind::sin;
    if (name == "cos") return FunKind::cos;
    if (name == "atan" || name == "arctan") return FunKind::atan;
    if (name == "log") return FunKind::log;
    if (name == "sqrt") return FunKind::sqrt;
    return std::nullopt;
}

class Parser {
  public:
    explicit Parser(const std::string& s) : lex_(s) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (lex_.peek().kind != Tok::end)
            throw parse_error(lex_.peek().span, "end of input");
        return e;
    }

  private:
    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::plus) {
                lex_.take();
                e = expr_add(e, term());
            } else if (k == Tok::minus) {
                lex_.take();
                e = expr_sub(e, term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::star) {
                lex_.take();
                e = expr_mul(e, factor());
            } else if (k == Tok::slash) {
                lex_.take();
                e = expr_div(e, factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            return expr_neg(factor());
        }
        ExprPtr b = base();
        if (lex_.peek().kind == Tok::caret) {
            lex_.take();
            bool neg = false;
            if (lex_.peek().kind == Tok::minus) {
                lex_.take();
                neg = true;
            }
            Token t = lex_.peek();
            if (t.kind != Tok::number || t.text.find('.') != std::string::npos)
                throw parse_error(t.span, "integer exponent");
            lex_.take();
            long e = std::stol(t.text);
            return expr_pow(b, neg ? -e : e);
        }
        return b;
    }

    ExprPtr base() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::number:
                lex_.take();
                return expr_num(rat_from_number(t.text, t.span));
            case Tok::ident: {
                lex_.take();
                if (t.text == "pi") return expr_pi();
                if (auto f = fun_from_name(t.text)) {
                    expect(Tok::lparen, "'(' after function name");
                    ExprPtr arg = expr();
                    expect(Tok::rparen, "')'");
                    return expr_fun(*f, arg);
                }
                return expr_var(t.text);
            }
            case Tok::lparen: {
                lex_.take();
                ExprPtr e = expr();
                expect(Tok::rparen, "')'");
                return e;
            }
            default:
                throw parse_error(t.span, "a number, identifier or '('");
        }
    }

    void expect(Tok k, const std::string& what) {
        if (lex_.peek().kind != k) throw parse_error(lex_.peek().span, what);
        lex_.take();
    }

    Lexer lex_;
};

// Precedence levels used by the printer: 1 add/sub, 2 mul/div, 3 unary minus,
// 4 power, 5 atom.
int prec_of(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::num:
            if (!e->value.is_integer()) return 2;  // prints with a '/'
            return e->value.sign() < 0 ? 3 : 5;
        case ExprKind::pi:
        case ExprKind::var:
        case ExprKind::fun: return 5;
        case ExprKind::add:
        case ExprKind::sub: return 1;
        case ExprKind::mul:
        case ExprKind::div: return 2;
        case ExprKind::neg: return 3;
        case ExprKind::pow: return 4;
    }
    return 5;
}

void render(const ExprPtr& e, std::string& out);

void render_child(const ExprPtr& child, int parent_prec, bool right_side, std::string& out) {
    int p = prec_of(child);
    bool parens = p < parent_prec || (p == parent_prec && right_side && parent_prec <= 2);
    if (parens) out += '(';
    render(child, out);
    if (parens) out += ')';
}

void render(const ExprPtr& e, std::string& out) {
    switch (e->kind) {
        case ExprKind::num: out += e->value.str(); return;
        case ExprKind::pi: out += "pi"; return;
        case ExprKind::var: out += e->name; return;
        case ExprKind::add:
            render_child(e->lhs, 1, false, out);
            out += '+';
            render_child(e->rhs, 1, true, out);
            return;
        case ExprKind::sub:
            render_child(e->lhs, 1, false, out);
            out += '-';
            render_child(e->rhs, 1, true, out);
            return;
        case ExprKind::mul:
            render_child(e->lhs, 2, false, out);
            out += '*';
            render_child(e->rhs, 2, true, out);
            return;
        case ExprKind::div:
            render_child(e->lhs, 2, false, out);
            out += '/';
            render_child(e->rhs, 2, true, out);
            return;
        case ExprKind::neg:
            out += '-';
            render_child(e->lhs, 3, false, out);
            return;
        case ExprKind::pow: {
            int p = prec_of(e->lhs);
            bool parens = p < 5;
            if (parens) out += '(';
            render(e->lhs, out);
            if (parens) out += ')';
            out += '^';
            out += std::to_string(e->exponent);
            return;
        }
        case ExprKind::fun:
            out += fun_name(e->fn);
            out += '(';
            render(e->lhs, out);
            out += ')';
            return;
    }
}

}  // namespace

ExprPtr parse_expr_text(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const ExprPtr& e) {
    std::string out;
    render(e, out);
    return out;
}

}  // namespace ratint
