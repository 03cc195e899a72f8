#include "dps/expr.hpp"

#include <algorithm>
#include <cctype>

namespace dps {

SyntaxError::SyntaxError(const std::string& msg, int l, int c)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}

bool Expr::operator==(const Expr& o) const {
    return kind == o.kind && seg == o.seg && lo == o.lo && hi == o.hi && name == o.name && children == o.children;
}

namespace {

enum class Tok { End, Name, Number, NuCaret, LParen, RParen, LBracket, RBracket, Comma, Semi, Times, Rtimes };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_ws();
            const int l = line_, c = col_;
            if (i_ >= s_.size()) {
                out.push_back({Tok::End, "", l, c});
                return out;
            }
            const char ch = s_[i_];
            if (s_.compare(i_, 3, "|x|") == 0) {
                adv(3);
                out.push_back({Tok::Rtimes, "|x|", l, c});
            } else if (s_.compare(i_, 3, "nu^") == 0) {
                adv(3);
                out.push_back({Tok::NuCaret, "nu^", l, c});
            } else if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t j = i_ + 1;
                while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '/')) ++j;
                out.push_back({Tok::Number, s_.substr(i_, j - i_), l, c});
                adv(j - i_);
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::size_t j = i_ + 1;
                while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
                if (j < s_.size() && s_[j] == '~') ++j;
                std::string word = s_.substr(i_, j - i_);
                out.push_back({word == "x" ? Tok::Times : Tok::Name, word, l, c});
                adv(j - i_);
            } else {
                Tok k;
                switch (ch) {
                    case '(': k = Tok::LParen; break;
                    case ')': k = Tok::RParen; break;
                    case '[': k = Tok::LBracket; break;
                    case ']': k = Tok::RBracket; break;
                    case ',': k = Tok::Comma; break;
                    case ';': k = Tok::Semi; break;
                    default: throw SyntaxError(std::string("unexpected character '") + ch + "'", l, c);
                }
                adv(1);
                out.push_back({k, std::string(1, ch), l, c});
            }
        }
    }

private:
    void adv(std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i_) {
            if (s_[i_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
        }
    }
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) adv(1);
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

const char* tok_name(Tok k) {
    switch (k) {
        case Tok::End: return "end of input";
        case Tok::Name: return "symbol name";
        case Tok::Number: return "number";
        case Tok::NuCaret: return "'nu^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Semi: return "';'";
        case Tok::Times: return "'x'";
        case Tok::Rtimes: return "'|x|'";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::vector<Token> t) : t_(std::move(t)) {}

    Expr parse() {
        Expr e = rtimes();
        if (peek().kind != Tok::End) fail("unexpected " + std::string(tok_name(peek().kind)));
        return e;
    }

private:
    const Token& peek() const { return t_[p_]; }
    Token take() { return t_[p_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, peek().line, peek().col); }
    Token expect(Tok k) {
        if (peek().kind != k)
            fail(std::string("expected ") + tok_name(k) + ", found " + tok_name(peek().kind) +
                 (peek().text.empty() ? "" : " '" + peek().text + "'"));
        return take();
    }

    HalfInt number() {
        Token t = expect(Tok::Number);
        try {
            return HalfInt::parse(t.text);
        } catch (const std::invalid_argument&) {
            throw SyntaxError("malformed half-integer '" + t.text + "'", t.line, t.col);
        }
    }

    Expr rtimes() {
        Expr left = product();
        if (peek().kind != Tok::Rtimes) return left;
        Token op = take();
        Expr out;
        out.kind = Expr::Kind::Rtimes;
        out.line = op.line;
        out.column = op.col;
        out.children = {std::move(left), rtimes()};
        return out;
    }

    Expr product() {
        Expr first = primary();
        if (peek().kind != Tok::Times) return first;
        Expr out;
        out.kind = Expr::Kind::Product;
        out.line = first.line;
        out.column = first.column;
        out.children.push_back(std::move(first));
        while (peek().kind == Tok::Times) {
            take();
            out.children.push_back(primary());
        }
        return out;
    }

    Expr primary() {
        const Token& t = peek();
        Expr e;
        e.line = t.line;
        e.column = t.col;
        switch (t.kind) {
            case Tok::Number:
                if (t.text != "1") fail("a bare number is only allowed as the unit '1'");
                take();
                e.kind = Expr::Kind::One;
                return e;
            case Tok::NuCaret:
                take();
                e.kind = Expr::Kind::Cusp;
                e.lo = e.hi = number();
                e.name = expect(Tok::Name).text;
                return e;
            case Tok::LParen: {
                take();
                Expr inner = rtimes();
                expect(Tok::RParen);
                return inner;
            }
            case Tok::Name:
                if ((t.text == "d" || t.text == "z") && t_[p_ + 1].kind == Tok::LParen) return segment();
                take();
                e.kind = Expr::Kind::Name;
                e.name = t.text;
                return e;
            default: fail("unexpected " + std::string(tok_name(t.kind)));
        }
    }

    Expr segment() {
        Token k = take();
        Expr e;
        e.kind = Expr::Kind::Seg;
        e.seg = k.text == "d" ? SegKind::Delta : SegKind::Zeta;
        e.line = k.line;
        e.column = k.col;
        expect(Tok::LParen);
        expect(Tok::LBracket);
        e.lo = number();
        expect(Tok::Comma);
        const Token& hi_tok = peek();
        const int hl = hi_tok.line, hc = hi_tok.col;
        e.hi = number();
        expect(Tok::Semi);
        e.name = expect(Tok::Name).text;
        expect(Tok::RBracket);
        expect(Tok::RParen);
        if (e.hi < e.lo) throw SyntaxError("segment has hi < lo (" + e.hi.str() + " < " + e.lo.str() + ")", hl, hc);
        if (!e.lo.same_class(e.hi)) throw SyntaxError("segment endpoints differ by a non-integer", hl, hc);
        return e;
    }

    std::vector<Token> t_;
    std::size_t p_ = 0;
};

bool needs_parens_in_product(const Expr& e) { return e.kind == Expr::Kind::Product || e.kind == Expr::Kind::Rtimes; }

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(Lexer(text).run()).parse(); }

std::string render(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::One: return "1";
        case Expr::Kind::Cusp: return "nu^" + e.lo.str() + " " + e.name;
        case Expr::Kind::Seg:
            return std::string(e.seg == SegKind::Delta ? "d" : "z") + "([" + e.lo.str() + "," + e.hi.str() + ";" + e.name + "])";
        case Expr::Kind::Name: return e.name;
        case Expr::Kind::Product: {
            std::string out;
            for (const auto& c : e.children) {
                if (!out.empty()) out += " x ";
                out += needs_parens_in_product(c) ? "(" + render(c) + ")" : render(c);
            }
            return out;
        }
        case Expr::Kind::Rtimes: {
            const auto& l = e.children[0];
            std::string left = l.kind == Expr::Kind::Rtimes ? "(" + render(l) + ")" : render(l);
            return left + " |x| " + render(e.children[1]);
        }
    }
    return "";
}

namespace {

CuspidalGL gl_symbol(const Expr& e, const SymbolTable& t) {
    std::string base = e.name;
    bool dual = false;
    if (!base.empty() && base.back() == '~') {
        base.pop_back();
        dual = true;
    }
    auto it = std::find_if(t.gl.begin(), t.gl.end(), [&](const CuspidalGL& r) { return r.label == base; });
    if (it == t.gl.end()) throw SyntaxError("unknown GL symbol '" + e.name + "'", e.line, e.column);
    CuspidalGL r = *it;
    r.dual = dual;
    return r;
}

}  // namespace

bool is_g_valued(const Expr& e) {
    if (e.kind == Expr::Kind::Rtimes) return true;
    return false;
}

GLWord lower_gl(const Expr& e, const SymbolTable& t) {
    switch (e.kind) {
        case Expr::Kind::One: return GLWord();
        case Expr::Kind::Cusp: return GLWord::of(Segment::cusp(gl_symbol(e, t), e.lo));
        case Expr::Kind::Seg: return GLWord::of(Segment::make(e.seg, gl_symbol(e, t), e.lo, e.hi));
        case Expr::Kind::Name: return GLWord::of(Segment::cusp(gl_symbol(e, t), 0));
        case Expr::Kind::Product: {
            GLWord w;
            for (const auto& c : e.children) w *= lower_gl(c, t);
            return w;
        }
        case Expr::Kind::Rtimes: throw SyntaxError("'|x|' inside a GL expression", e.line, e.column);
    }
    return {};
}

GWord lower_g(const Expr& e, const SymbolTable& t) {
    if (e.kind == Expr::Kind::Name) {
        if (std::find(t.g.begin(), t.g.end(), e.name) == t.g.end())
            throw SyntaxError("unknown G symbol '" + e.name + "'", e.line, e.column);
        return GWord{GLWord(), CuspidalAtom{e.name}};
    }
    if (e.kind != Expr::Kind::Rtimes)
        throw SyntaxError("expected a G-side expression ending in '|x| sigma'", e.line, e.column);
    GWord right = lower_g(e.children[1], t);
    return GWord{lower_gl(e.children[0], t) * right.gl, right.atom};
}

}  // namespace dps
