#include "detdisc/parser.hpp"

#include <cctype>
#include <sstream>

namespace detdisc {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseError("expected '" + std::string(1, c) + "' at position " + std::to_string(pos) +
                             " in \"" + s + "\"");
        ++pos;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected a number at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lex;
    RingPtr ring;

    Poly expr() {
        bool neg = false;
        while (true) {
            if (lex.accept('+')) continue;
            if (lex.accept('-')) {
                neg = !neg;
                continue;
            }
            break;
        }
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            char c = lex.peek();
            if (c == '+') {
                ++lex.pos;
                acc = acc + term();
            } else if (c == '-') {
                ++lex.pos;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (lex.accept('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (lex.accept('^')) {
            std::string d = lex.digits();
            unsigned long k = std::stoul(d);
            if (k > 0xFFFF) throw ParseError("exponent too large: " + d);
            return pow(b, static_cast<unsigned>(k));
        }
        return b;
    }

    Poly base() {
        char c = lex.peek();
        if (c == '(') {
            ++lex.pos;
            Poly p = expr();
            lex.expect(')');
            return p;
        }
        if (c == '-') {
            ++lex.pos;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.digits();
            // "num/den" is a single rational literal; '/' appears nowhere else
            if (lex.peek() == '/') {
                ++lex.pos;
                std::string den = lex.digits();
                Rat q(mpz_class(num), mpz_class(den));
                if (q.get_den() == 0) throw ParseError("rational literal with zero denominator");
                q.canonicalize();
                return Poly::constant(ring, ring->field().from_rat(q));
            }
            return Poly::constant(ring, ring->field().from_rat(Rat(mpz_class(num))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lex.ident();
            int idx = ring->var_index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'");
            return Poly::variable(ring, idx);
        }
        throw ParseError("unexpected character at position " + std::to_string(lex.pos) + " in \"" +
                         lex.s + "\"");
    }
};

void print_monomial(std::ostringstream& os, const Ring& R, const Monomial& m, bool lead_star) {
    bool first = !lead_star;
    for (int i = 0; i < R.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << R.var_name(i);
        if (m.e[i] > 1) os << '^' << m.e[i];
    }
}

void print_ring_poly(std::ostringstream& os, const Poly& p, std::uint32_t comp) {
    const Ring& R = *p.ring();
    const Field& F = R.field();
    bool first = true;
    bool any = false;
    for (const auto& t : p.terms()) {
        if (t.comp != comp) continue;
        any = true;
        std::string cs = F.to_string(t.c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? '-' : '+');
        }
        first = false;
        if (t.m.is_unit()) {
            os << cs;
        } else if (cs == "1") {
            print_monomial(os, R, t.m, false);
        } else {
            os << cs;
            print_monomial(os, R, t.m, true);
        }
    }
    if (!any) os << '0';
}

} // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    Parser p{Lexer{text}, ring};
    Poly r = p.expr();
    p.lex.skip_ws();
    if (p.lex.pos != text.size())
        throw ParseError("trailing input at position " + std::to_string(p.lex.pos) + " in \"" + text +
                         "\"");
    return r;
}

std::string to_string(const Poly& p) {
    std::ostringstream os;
    print_ring_poly(os, p, 0);
    return os.str();
}

std::string module_to_string(const Poly& p, std::uint32_t rank) {
    std::ostringstream os;
    os << '[';
    for (std::uint32_t c = 0; c < rank; ++c) {
        if (c) os << ", ";
        print_ring_poly(os, p, c);
    }
    os << ']';
    return os.str();
}

} // namespace detdisc
