#include "ectcert/parser.hpp"

#include <cctype>

namespace ect {
namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t pos;
    std::string text;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::Number: return "number";
        case Token::Kind::Ident: return "identifier";
        case Token::Kind::Plus: return "'+'";
        case Token::Kind::Minus: return "'-'";
        case Token::Kind::Star: return "'*'";
        case Token::Kind::Slash: return "'/'";
        case Token::Kind::Caret: return "'^'";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && (s[i] == '.' || std::isalpha(static_cast<unsigned char>(s[i])))) {
                if (s[i] == '.')
                    throw ParseError(i, "integer literal (use p/q for rationals)", "'.'");
                throw ParseError(i, "operator after number (implicit multiplication is not allowed)",
                                 std::string("'") + s[i] + "'");
            }
            out.push_back({Token::Kind::Number, start, s.substr(start, i - start)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Token::Kind::Ident, start, s.substr(start, i - start)});
            continue;
        }
        switch (c) {
            case '+': out.push_back({Token::Kind::Plus, i, "+"}); break;
            case '-': out.push_back({Token::Kind::Minus, i, "-"}); break;
            case '*':
                if (i + 1 < s.size() && s[i + 1] == '*')
                    throw ParseError(i, "'^' for powers", "'**'");
                out.push_back({Token::Kind::Star, i, "*"});
                break;
            case '/': out.push_back({Token::Kind::Slash, i, "/"}); break;
            case '^': out.push_back({Token::Kind::Caret, i, "^"}); break;
            case '(': out.push_back({Token::Kind::LParen, i, "("}); break;
            case ')': out.push_back({Token::Kind::RParen, i, ")"}); break;
            default:
                throw ParseError(i, "a number, identifier, or operator",
                                 std::string("'") + c + "'");
        }
        ++i;
    }
    out.push_back({Token::Kind::End, s.size(), ""});
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        expect(Token::Kind::End);
        return e;
    }

  private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    Token take() { return toks_[at_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++at_;
            return true;
        }
        return false;
    }
    void expect(Token::Kind k) {
        if (peek().kind != k)
            throw ParseError(peek().pos, token_name(k),
                             peek().kind == Token::Kind::End ? "end of input"
                                                             : "'" + peek().text + "'");
        ++at_;
    }

    static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            Token op = take();
            ExprPtr rhs = term();
            Expr e;
            e.kind = op.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
            e.pos = op.pos;
            e.lhs = lhs;
            e.rhs = rhs;
            lhs = node(std::move(e));
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (true) {
            if (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
                Token op = take();
                ExprPtr rhs = unary();
                Expr e;
                e.kind = op.kind == Token::Kind::Star ? Expr::Kind::Mul : Expr::Kind::Div;
                e.pos = op.pos;
                e.lhs = lhs;
                e.rhs = rhs;
                lhs = node(std::move(e));
                continue;
            }
            // adjacency such as "2x" or ")(" means a '*' was omitted
            if (peek().kind == Token::Kind::Number || peek().kind == Token::Kind::Ident ||
                peek().kind == Token::Kind::LParen)
                throw ParseError(peek().pos,
                                 "an operator (implicit multiplication is not allowed)",
                                 "'" + peek().text + "'");
            break;
        }
        return lhs;
    }

    ExprPtr unary() {
        if (peek().kind == Token::Kind::Minus) {
            Token op = take();
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.pos = op.pos;
            e.lhs = unary();
            return node(std::move(e));
        }
        if (peek().kind == Token::Kind::Plus) {
            take();
            return unary();
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (peek().kind == Token::Kind::Caret) {
            Token op = take();
            bool neg = accept(Token::Kind::Minus);
            if (peek().kind != Token::Kind::Number)
                throw ParseError(peek().pos, "integer exponent",
                                 peek().kind == Token::Kind::End ? "end of input"
                                                                 : "'" + peek().text + "'");
            Token expo = take();
            long ev = 0;
            try {
                ev = std::stol(expo.text);
            } catch (const std::exception&) {
                throw ParseError(expo.pos, "integer exponent in range", "'" + expo.text + "'");
            }
            if (peek().kind == Token::Kind::Caret)
                throw ParseError(peek().pos, "no chained '^' (parenthesize)", "'^'");
            Expr e;
            e.kind = Expr::Kind::Pow;
            e.pos = op.pos;
            e.lhs = base;
            e.exponent = neg ? -ev : ev;
            return node(std::move(e));
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                Token n = take();
                Expr e;
                e.kind = Expr::Kind::Number;
                e.pos = n.pos;
                e.value = Int(n.text);
                return node(std::move(e));
            }
            case Token::Kind::Ident: {
                Token id = take();
                if (id.text == "sqrt") {
                    expect(Token::Kind::LParen);
                    ExprPtr arg = expr();
                    expect(Token::Kind::RParen);
                    Expr e;
                    e.kind = Expr::Kind::Sqrt;
                    e.pos = id.pos;
                    e.lhs = arg;
                    return node(std::move(e));
                }
                Expr e;
                e.kind = Expr::Kind::Variable;
                e.pos = id.pos;
                e.name = id.text;
                return node(std::move(e));
            }
            case Token::Kind::LParen: {
                take();
                ExprPtr inner = expr();
                expect(Token::Kind::RParen);
                return inner;
            }
            default:
                throw ParseError(t.pos, "a number, variable, or '('",
                                 t.kind == Token::Kind::End ? "end of input"
                                                            : "'" + t.text + "'");
        }
    }
};

// generic lowering over any field-like value type
template <class V, class Ctx>
V lower(const ExprPtr& e, const Ctx& ctx) {
    switch (e->kind) {
        case Expr::Kind::Number: return ctx.number(e->value);
        case Expr::Kind::Variable: return ctx.variable(e->name, e->pos);
        case Expr::Kind::Add: return lower<V>(e->lhs, ctx) + lower<V>(e->rhs, ctx);
        case Expr::Kind::Sub: return lower<V>(e->lhs, ctx) - lower<V>(e->rhs, ctx);
        case Expr::Kind::Mul: return lower<V>(e->lhs, ctx) * lower<V>(e->rhs, ctx);
        case Expr::Kind::Div: {
            V d = lower<V>(e->rhs, ctx);
            if (ctx.is_zero_value(d))
                throw ParseError(e->pos, "nonzero divisor", "a zero expression");
            return lower<V>(e->lhs, ctx) / d;
        }
        case Expr::Kind::Neg: return ctx.negate(lower<V>(e->lhs, ctx));
        case Expr::Kind::Pow: {
            V b = lower<V>(e->lhs, ctx);
            long k = e->exponent;
            if (k < 0) {
                if (ctx.is_zero_value(b))
                    throw ParseError(e->pos, "nonzero base for negative power", "zero");
                return ctx.power_neg(b, -k);
            }
            V acc = ctx.number(Int(1));
            for (long i = 0; i < k; ++i) acc = acc * b;
            return acc;
        }
        case Expr::Kind::Sqrt: return ctx.sqrt_value(lower<V>(e->lhs, ctx), e->pos);
    }
    throw ParseError(e->pos, "a valid expression", "unknown node");
}

struct RatFuncCtx {
    const std::string& var;
    RatFunc number(const Int& v) const { return ratfunc_of(Rat(v)); }
    RatFunc variable(const std::string& name, std::size_t pos) const {
        if (name == var) return ratfunc_of(PolyQ::variable());
        throw ParseError(pos, "variable '" + var + "'", "'" + name + "'");
    }
    bool is_zero_value(const RatFunc& f) const { return is_zero(f); }
    RatFunc negate(const RatFunc& f) const { return -f; }
    RatFunc power_neg(const RatFunc& b, long k) const {
        RatFunc inv = ratfunc_of(Rat(1)) / b;
        RatFunc acc = ratfunc_of(Rat(1));
        for (long i = 0; i < k; ++i) acc = acc * inv;
        return acc;
    }
    RatFunc sqrt_value(const RatFunc&, std::size_t pos) const {
        throw ParseError(pos, "a rational expression (sqrt is only allowed in constants)",
                         "'sqrt'");
    }
};

struct BiRatCtx {
    const std::string& var1;
    const std::string& var2;
    BiRat number(const Int& v) const { return birat_of(BiQ(Rat(v))); }
    BiRat variable(const std::string& name, std::size_t pos) const {
        if (name == var1) {
            BiQ p;
            p.add_term(1, 0, Rat(1));
            return birat_of(p);
        }
        if (name == var2) {
            BiQ p;
            p.add_term(0, 1, Rat(1));
            return birat_of(p);
        }
        throw ParseError(pos, "variable '" + var1 + "' or '" + var2 + "'", "'" + name + "'");
    }
    bool is_zero_value(const BiRat& f) const { return is_zero(f); }
    BiRat negate(const BiRat& f) const { return -f; }
    BiRat power_neg(const BiRat& b, long k) const {
        BiRat inv = birat_of(BiQ(Rat(1))) / b;
        BiRat acc = birat_of(BiQ(Rat(1)));
        for (long i = 0; i < k; ++i) acc = acc * inv;
        return acc;
    }
    BiRat sqrt_value(const BiRat&, std::size_t pos) const {
        throw ParseError(pos, "a rational expression (sqrt is only allowed in constants)",
                         "'sqrt'");
    }
};

struct SurdCtx {
    Surd number(const Int& v) const { return Surd(Rat(v)); }
    Surd variable(const std::string&, std::size_t pos) const {
        throw ParseError(pos, "a constant expression", "a variable");
    }
    bool is_zero_value(const Surd& s) const { return is_zero(s); }
    Surd negate(const Surd& s) const { return -s; }
    Surd power_neg(const Surd& b, long k) const {
        Surd inv = Surd(Rat(1)) / b;
        Surd acc = Surd(Rat(1));
        for (long i = 0; i < k; ++i) acc = acc * inv;
        return acc;
    }
    Surd sqrt_value(const Surd& s, std::size_t pos) const {
        if (!s.is_rational())
            throw ParseError(pos, "a rational argument to sqrt (no nested radicals)",
                             "a surd");
        if (sign(s) < 0)
            throw ParseError(pos, "a nonnegative argument to sqrt", "a negative value");
        return sqrt_of_rat(s.a);
    }
};

} // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).run(); }

RatFunc lower_ratfunc(const ExprPtr& e, const std::string& var) {
    return lower<RatFunc>(e, RatFuncCtx{var});
}

BiRat lower_birat(const ExprPtr& e, const std::string& var1, const std::string& var2) {
    return lower<BiRat>(e, BiRatCtx{var1, var2});
}

Surd lower_surd(const ExprPtr& e) { return lower<Surd>(e, SurdCtx{}); }

PolyQ lower_poly(const ExprPtr& e, const std::string& var) {
    RatFunc f = lower_ratfunc(e, var);
    if (f.d.degree() > 0)
        throw ParseError(e->pos, "a polynomial expression", "a rational function");
    return Rat(1 / f.d.coeff(0)) * f.n;
}

RatFunc parse_ratfunc(const std::string& text, const std::string& var) {
    return lower_ratfunc(parse_expression(text), var);
}
BiRat parse_birat(const std::string& text, const std::string& var1, const std::string& var2) {
    return lower_birat(parse_expression(text), var1, var2);
}
Surd parse_surd(const std::string& text) { return lower_surd(parse_expression(text)); }
PolyQ parse_poly(const std::string& text, const std::string& var) {
    return lower_poly(parse_expression(text), var);
}

} // namespace ect
