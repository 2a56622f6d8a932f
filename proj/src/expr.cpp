#include "ratsode/expr.hpp"

#include <cctype>
#include <sstream>

namespace ratsode {

namespace {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::End, "", line, col};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                num += src_[pos_];
                advance();
            }
            return {Token::Int, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                id += src_[pos_];
                advance();
            }
            return {Token::Ident, id, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Plus, "+", line, col};
            case '-': return {Token::Minus, "-", line, col};
            case '*': return {Token::Star, "*", line, col};
            case '/': return {Token::Slash, "/", line, col};
            case '^': return {Token::Caret, "^", line, col};
            case '(': return {Token::LParen, "(", line, col};
            case ')': return {Token::RParen, ")", line, col};
            default:
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lexer_(src) { look_ = lexer_.next(); }

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        if (look_.kind != Token::End) {
            throw ParseError(look_.line, look_.col, "unexpected token '" + look_.text + "'");
        }
        return e;
    }

private:
    Token consume() {
        Token t = look_;
        look_ = lexer_.next();
        return t;
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_product();
        while (look_.kind == Token::Plus || look_.kind == Token::Minus) {
            char op = look_.kind == Token::Plus ? '+' : '-';
            consume();
            ExprPtr rhs = parse_product();
            lhs = std::make_shared<Expr>(Expr{Expr::Binary{op, lhs, rhs}});
        }
        return lhs;
    }

    ExprPtr parse_product() {
        ExprPtr lhs = parse_unary();
        while (look_.kind == Token::Star || look_.kind == Token::Slash) {
            char op = look_.kind == Token::Star ? '*' : '/';
            consume();
            ExprPtr rhs = parse_unary();
            lhs = std::make_shared<Expr>(Expr{Expr::Binary{op, lhs, rhs}});
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (look_.kind == Token::Minus) {
            consume();
            ExprPtr operand = parse_unary();
            return std::make_shared<Expr>(Expr{Expr::Unary{operand}});
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (look_.kind == Token::Caret) {
            consume();
            long e = parse_exponent();
            return std::make_shared<Expr>(Expr{Expr::Pow{base, e}});
        }
        return base;
    }

    // Exponents are integer literals (with optional sign); the tower
    // n1 ^ n2 ^ n3 folds right-associatively to an integer.
    long parse_exponent() {
        bool negate = false;
        while (look_.kind == Token::Minus) {
            consume();
            negate = !negate;
        }
        if (look_.kind != Token::Int) {
            throw ParseError(look_.line, look_.col, "exponent must be an integer literal");
        }
        Token t = consume();
        long base;
        try {
            base = std::stol(t.text);
        } catch (const std::exception&) {
            throw ParseError(t.line, t.col, "exponent out of range");
        }
        if (look_.kind == Token::Caret) {
            consume();
            long e = parse_exponent();
            if (e < 0) throw ParseError(t.line, t.col, "negative exponent tower");
            long acc = 1;
            for (long i = 0; i < e; ++i) {
                acc *= base;
                if (acc > 100000 || acc < -100000) {
                    throw ParseError(t.line, t.col, "exponent too large");
                }
            }
            base = acc;
        }
        if (base > 100000 || base < -100000) {
            throw ParseError(t.line, t.col, "exponent too large");
        }
        return negate ? -base : base;
    }

    ExprPtr parse_atom() {
        switch (look_.kind) {
            case Token::Int: {
                Token t = consume();
                auto val = Rational::parse(t.text);
                if (!val) throw ParseError(t.line, t.col, "malformed integer literal");
                return std::make_shared<Expr>(Expr{Expr::Lit{*val}});
            }
            case Token::Ident: {
                Token t = consume();
                auto v = var_from_name(t.text);
                bool allowed = v && (*v == Var::z || *v == Var::w || *v == Var::wp ||
                                     *v == Var::t || *v == Var::lambda);
                if (!allowed) {
                    throw ParseError(t.line, t.col, "unknown identifier '" + t.text + "'");
                }
                return std::make_shared<Expr>(Expr{Expr::Sym{*v}});
            }
            case Token::LParen: {
                consume();
                ExprPtr e = parse_sum();
                if (look_.kind != Token::RParen) {
                    throw ParseError(look_.line, look_.col, "expected ')'");
                }
                consume();
                return e;
            }
            default:
                throw ParseError(look_.line, look_.col,
                                 "expected a number, variable or '(' but found '" + look_.text + "'");
        }
    }

    Lexer lexer_;
    Token look_;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p(text);
    return p.parse();
}

RatFunc expr_to_ratfunc(const ExprPtr& e) {
    struct Eval {
        RatFunc operator()(const Expr::Lit& n) const { return RatFunc(n.value); }
        RatFunc operator()(const Expr::Sym& n) const { return RatFunc::variable(n.var); }
        RatFunc operator()(const Expr::Unary& n) const { return -expr_to_ratfunc(n.operand); }
        RatFunc operator()(const Expr::Binary& n) const {
            RatFunc a = expr_to_ratfunc(n.lhs), b = expr_to_ratfunc(n.rhs);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                default:
                    if (b.is_zero()) throw std::domain_error("expression divides by zero");
                    return a / b;
            }
        }
        RatFunc operator()(const Expr::Pow& n) const {
            RatFunc b = expr_to_ratfunc(n.base);
            if (b.is_zero() && n.exponent < 0) {
                throw std::domain_error("expression divides by zero");
            }
            return b.pow(n.exponent);
        }
    };
    return std::visit(Eval{}, e->node);
}

RatFunc parse_ratfunc(const std::string& text) {
    return expr_to_ratfunc(parse_expr(text));
}

namespace {

std::string render_coeff_mono(const Rational& c, const Mono& m, bool leading) {
    std::ostringstream os;
    Rational a = c.abs();
    std::string sign = c.sign() < 0 ? "-" : "";
    if (leading) {
        os << sign;
    } else {
        os << (c.sign() < 0 ? " - " : " + ");
    }
    std::vector<std::string> pieces;
    for (int i = 0; i < kNumVars; ++i) {
        if (m[i] == 0) continue;
        std::string p = var_name(static_cast<Var>(i));
        if (m[i] > 1) p += "^" + std::to_string(m[i]);
        pieces.push_back(p);
    }
    if (pieces.empty()) {
        os << a.str();
    } else {
        if (!a.is_one()) os << a.str() << "*";
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (i) os << "*";
            os << pieces[i];
        }
    }
    return os.str();
}

}  // namespace

std::string render_expr(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // Highest term first reads naturally.
    bool leading = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        out += render_coeff_mono(it->second, it->first, leading);
        leading = false;
    }
    return out;
}

std::string render_expr(const RatFunc& r) {
    std::string num = render_expr(r.num());
    if (r.is_polynomial()) {
        // den is the constant 1 by normalization.
        return num;
    }
    if (r.num().terms().size() > 1) num = "(" + num + ")";
    return num + "/(" + render_expr(r.den()) + ")";
}

}  // namespace ratsode
