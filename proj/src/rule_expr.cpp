#include "n7/rule_expr.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace n7 {

struct RuleExpr::Node {
    enum class Kind { Const, Var, Add, Sub, Mul, Div, Pow, Sqrt, Sign, Neg } kind;
    double value = 0;
    int exponent = 1;
    std::shared_ptr<const Node> a, b;

    double eval(double k) const {
        switch (kind) {
            case Kind::Const: return value;
            case Kind::Var: return k;
            case Kind::Add: return a->eval(k) + b->eval(k);
            case Kind::Sub: return a->eval(k) - b->eval(k);
            case Kind::Mul: return a->eval(k) * b->eval(k);
            case Kind::Div: return a->eval(k) / b->eval(k);
            case Kind::Pow: return std::pow(a->eval(k), exponent);
            case Kind::Sqrt: return std::sqrt(a->eval(k));
            case Kind::Sign: {
                double v = a->eval(k);
                return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0);
            }
            case Kind::Neg: return -a->eval(k);
        }
        return 0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const RuleExpr::Node>;
using Kind = RuleExpr::Node::Kind;

NodePtr make(Kind kind, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<RuleExpr::Node>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("rule parse error at " + std::to_string(pos) + ": " + what +
                                    " in \"" + s + "\"");
    }

    NodePtr expression() {
        NodePtr acc = eat('-') ? make(Kind::Neg, term()) : term();
        for (;;) {
            if (eat('+'))
                acc = make(Kind::Add, acc, term());
            else if (eat('-'))
                acc = make(Kind::Sub, acc, term());
            else
                break;
        }
        return acc;
    }

    NodePtr term() {
        NodePtr acc = power();
        for (;;) {
            if (eat('*'))
                acc = make(Kind::Mul, acc, power());
            else if (eat('/'))
                acc = make(Kind::Div, acc, power());
            else
                break;
        }
        return acc;
    }

    NodePtr power() {
        NodePtr base = atom();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent");
            auto n = std::make_shared<RuleExpr::Node>();
            n->kind = Kind::Pow;
            n->a = base;
            n->exponent = std::stoi(s.substr(start, pos - start)) * (neg ? -1 : 1);
            if (n->exponent < 0) {
                // a^-e == 1/a^e
                auto inv = std::make_shared<RuleExpr::Node>();
                inv->kind = Kind::Pow;
                inv->a = base;
                inv->exponent = -n->exponent;
                auto one = std::make_shared<RuleExpr::Node>();
                one->kind = Kind::Const;
                one->value = 1.0;
                return make(Kind::Div, one, inv);
            }
            return n;
        }
        return base;
    }

    NodePtr atom() {
        skip();
        if (eat('(')) {
            NodePtr inner = expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (pos < s.size() &&
            (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
                ++pos;
            auto n = std::make_shared<RuleExpr::Node>();
            n->kind = Kind::Const;
            n->value = std::stod(s.substr(start, pos - start));
            return n;
        }
        if (s.compare(pos, 4, "sqrt") == 0) {
            pos += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            NodePtr inner = expression();
            if (!eat(')')) fail("expected ')'");
            return make(Kind::Sqrt, inner);
        }
        if (s.compare(pos, 4, "sign") == 0) {
            pos += 4;
            if (!eat('(')) fail("expected '(' after sign");
            NodePtr inner = expression();
            if (!eat(')')) fail("expected ')'");
            return make(Kind::Sign, inner);
        }
        if (pos < s.size() && (s[pos] == 'k')) {
            ++pos;
            return make(Kind::Var);
        }
        fail("expected number, k, sqrt(), sign() or '('");
    }
};

}  // namespace

RuleExpr RuleExpr::parse(const std::string& text) {
    Parser p{text};
    RuleExpr e;
    e.root_ = p.expression();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    e.text_ = text;
    return e;
}

double RuleExpr::operator()(double k) const {
    if (!root_) throw std::logic_error("evaluating an empty rule");
    return root_->eval(k);
}

}  // namespace n7
