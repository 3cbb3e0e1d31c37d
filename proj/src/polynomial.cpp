#include "n7/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace n7 {

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (a != 1 || m.total_degree() == 0) {
            out << n7::to_string(a);
            printed_coeff = true;
        }
        for (int v = 0; v < int(var_names.size()); ++v) {
            int e = m.exponent(v);
            if (e == 0) continue;
            if (printed_coeff) out << "*";
            out << var_names[std::size_t(v)];
            if (e > 1) out << "^" << e;
            printed_coeff = true;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                    ": " + what + " in \"" + s + "\"");
    }

    Polynomial parse_expression() {
        Polynomial acc = eat('-') ? -parse_term() : parse_term();
        for (;;) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_power();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc *= parse_power();
            } else if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                                          s[pos] == '(')) {
                acc *= parse_power();  // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent");
            int e = std::stoi(s.substr(start, pos - start));
            Polynomial out{Rat(1)};
            for (int i = 0; i < e; ++i) out *= base;
            return out;
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (eat('(')) {
            Polynomial inner = parse_expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            Int num(s.substr(start, pos - start));
            if (eat('/')) {
                skip_ws();
                std::size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (dstart == pos) fail("expected denominator");
                Int den(s.substr(dstart, pos - dstart));
                return Polynomial(Rat(num, den));
            }
            return Polynomial(Rat(num));
        }
        // Variable: longest name match.
        int best = -1;
        std::size_t best_len = 0;
        for (int v = 0; v < int(vars.size()); ++v) {
            const auto& name = vars[std::size_t(v)];
            if (name.size() > best_len && s.compare(pos, name.size(), name) == 0) {
                best = v;
                best_len = name.size();
            }
        }
        if (best < 0) fail("expected number, variable or '('");
        pos += best_len;
        return Polynomial::variable(best);
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& var_names) {
    Parser p{text, var_names};
    Polynomial out = p.parse_expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace n7
