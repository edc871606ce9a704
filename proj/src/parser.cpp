#include "knv/parser.hpp"

#include <cctype>
#include <sstream>

namespace knv {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    bool eof() {
        skip_ws();
        return pos == text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

    char take() {
        skip_ws();
        if (pos == text.size()) fail("unexpected end of input");
        ++col;
        return text[pos++];
    }

    void expect(char c) {
        char got = take();
        if (got != c) fail(std::string("expected '") + c + "', got '" + got + "'");
    }

    bool accept(char c) {
        if (peek() == c) {
            take();
            return true;
        }
        return false;
    }

    bool number_next() { return std::isdigit(static_cast<unsigned char>(peek())); }

    unsigned long take_uint() {
        skip_ws();
        if (!number_next()) fail("expected a number");
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + unsigned(text[pos] - '0');
            ++pos;
            ++col;
        }
        return v;
    }

    bool ident_next() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c));
    }

    std::string take_ident() {
        skip_ws();
        std::string s;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            s += text[pos++];
            ++col;
        }
        if (s.empty()) fail("expected a symbol");
        return s;
    }
};

class ExprParser {
  public:
    explicit ExprParser(const std::string& text) : lex_(text) {}

    RingElem parse_all() {
        RingElem e = expr();
        if (!lex_.eof()) lex_.fail("trailing input");
        return e;
    }

    WnlOp parse_operator_all() {
        WnlOp op = operator_sum();
        if (!lex_.eof()) lex_.fail("trailing input");
        return canonicalize(op);
    }

  private:
    Lexer lex_;

    RingElem expr() {
        bool neg = lex_.accept('-');
        RingElem acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (lex_.accept('+')) {
                acc += term();
            } else if (lex_.accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RingElem term() {
        RingElem acc = factor();
        for (;;) {
            if (lex_.accept('*')) {
                acc *= factor();
            } else if (lex_.accept('/')) {
                RingElem d = factor();
                if (d.is_zero()) lex_.fail("division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RingElem factor() {
        RingElem b = base();
        if (lex_.accept('^')) {
            bool neg = lex_.accept('-');
            long e = long(lex_.take_uint());
            if (neg && b.is_zero()) lex_.fail("zero to a negative power");
            return b.pow(neg ? -e : e);
        }
        return b;
    }

    RingElem base() {
        if (lex_.accept('(')) {
            RingElem e = expr();
            lex_.expect(')');
            return e;
        }
        if (lex_.number_next()) return RingElem(long(lex_.take_uint()));
        if (!lex_.ident_next()) lex_.fail("expected a number, symbol, or '('");
        int line = lex_.line, col = lex_.col;
        std::string id = lex_.take_ident();
        return symbol(id, line, col);
    }

    RingElem symbol(const std::string& id, int line, int col) {
        if (id == "d") {
            lex_.expect('(');
            RingElem e = expr();
            unsigned long k = 1;
            if (lex_.accept(',')) k = lex_.take_uint();
            lex_.expect(')');
            return total_derivative(e, unsigned(k));
        }
        if (id == "alpha") return RingElem::var(kParamAlpha);
        if (id == "beta") return RingElem::var(kParamBeta);
        if (id == "gamma") return RingElem::var(kParamGamma);
        if (id == "P") return PolyP::P();
        if (id == "Pu") return PolyP::Pu();
        if (id == "Puu") return PolyP::Puu();
        if (id == "Puuu") return PolyP::Puuu();
        if (id == "Puuuu") return PolyP::Puuuu();
        if (id.size() == 2 && id[0] == 'p' && id[1] >= '0' && id[1] <= '4')
            return RingElem::var(VarId::param(unsigned(id[1] - '0')));
        if (id[0] == 'u') {
            unsigned long n = 0;
            for (size_t i = 1; i < id.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(id[i])))
                    throw ParseError("unknown symbol '" + id + "'", line, col);
                n = n * 10 + unsigned(id[i] - '0');
            }
            return RingElem::var(VarId::jet(0, unsigned(n)));
        }
        if (id[0] == 'w') {
            size_t us = id.find('_');
            if (us != std::string::npos && us > 1) {
                bool digits = true;
                for (size_t i = 1; i < id.size(); ++i)
                    if (i != us && !std::isdigit(static_cast<unsigned char>(id[i]))) digits = false;
                if (digits && us + 1 < id.size()) {
                    unsigned dep = unsigned(std::stoul(id.substr(1, us - 1)));
                    unsigned ord = unsigned(std::stoul(id.substr(us + 1)));
                    if (dep == 0) throw ParseError("w dependents are numbered from 1", line, col);
                    return RingElem::var(VarId::jet(dep, ord));
                }
            }
        }
        throw ParseError("unknown symbol '" + id + "'", line, col);
    }

    // operator := ["-"] opterm (("+"|"-") opterm)*
    // opterm   := "(" expr ")" ("*"? "D" ("^" uint)? | "*"? "Dinv" "*"? "(" expr ")")?
    WnlOp operator_sum() {
        WnlOp acc;
        bool neg = lex_.accept('-');
        acc += opterm(neg);
        for (;;) {
            if (lex_.accept('+')) {
                acc += opterm(false);
            } else if (lex_.accept('-')) {
                acc += opterm(true);
            } else {
                return acc;
            }
        }
    }

    WnlOp opterm(bool neg) {
        lex_.expect('(');
        RingElem c = expr();
        lex_.expect(')');
        if (neg) c = -c;
        bool star = lex_.accept('*');
        if (lex_.ident_next()) {
            int line = lex_.line, col = lex_.col;
            std::string id = lex_.take_ident();
            if (id == "D") {
                unsigned long k = 1;
                if (lex_.accept('^')) k = lex_.take_uint();
                return WnlOp(LocalOp::monomial(std::move(c), unsigned(k)));
            }
            if (id == "Dinv") {
                lex_.accept('*');
                lex_.expect('(');
                RingElem q = expr();
                lex_.expect(')');
                return WnlOp::tail(std::move(c), std::move(q));
            }
            throw ParseError("expected D or Dinv, got '" + id + "'", line, col);
        }
        if (star) lex_.fail("expected D or Dinv after '*'");
        return WnlOp(LocalOp::mul(std::move(c)));
    }
};

std::string format_coeff(const Coeff& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Coeff c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        bool need_coeff = (c != 1) || t.mon.empty();
        if (need_coeff) out += format_coeff(c);
        bool need_star = need_coeff;
        for (const auto& [var, exp] : t.mon.e) {
            if (need_star) out += "*";
            out += VarId{var}.name();
            if (exp > 1) out += "^" + std::to_string(exp);
            need_star = true;
        }
    }
    return out;
}

}  // namespace

RingElem parse(const std::string& text) { return ExprParser(text).parse_all(); }

WnlOp parse_operator(const std::string& text) { return ExprParser(text).parse_operator_all(); }

std::string format(const RingElem& e) {
    if (e.den().is_one()) return format_poly(e.num());
    return "(" + format_poly(e.num()) + ")/(" + format_poly(e.den()) + ")";
}

std::string format(const LocalOp& op) {
    if (op.is_zero()) return "(0)*D^0";
    std::string out;
    for (int k = op.order(); k >= 0; --k) {
        const RingElem& c = op.coeff(unsigned(k));
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + format(c) + ")*D^" + std::to_string(k);
    }
    return out;
}

std::string format(const WnlOp& op) {
    std::string out;
    if (!op.local.is_zero()) out = format(op.local);
    for (const auto& t : op.tails) {
        if (!out.empty()) out += " + ";
        out += "(" + format(t.p) + ") Dinv (" + format(t.q) + ")";
    }
    if (out.empty()) out = "(0)*D^0";
    return out;
}

}  // namespace knv
