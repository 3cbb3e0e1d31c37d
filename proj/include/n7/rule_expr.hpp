#pragma once

#include <memory>
#include <string>

namespace n7 {

// Closed-form schedule rules over the index k: constants, + - * /, integer
// powers, sqrt, sign, and the variable k.  Example: "1/k^2", "sqrt(k)+3".
class RuleExpr {
  public:
    static RuleExpr parse(const std::string& text);
    double operator()(double k) const;
    const std::string& text() const { return text_; }

    RuleExpr() = default;

    struct Node;

  private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace n7
