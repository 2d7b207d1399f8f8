#pragma once

#include <string>

#include "gg/scalar.hpp"

namespace gg {

/// Builds "c1*b1 + c2*b2 - ..." from scalar coefficients and basis symbols,
/// skipping zero coefficients. Output re-parses with the model grammar.
class LinearText {
 public:
  void add(const Scalar& coeff, const std::string& basis) {
    if (coeff.is_zero()) return;
    bool negative = false;
    std::string body;
    if (coeff.is_polynomial() && coeff.num().terms().size() == 1) {
      const auto& term = coeff.num().leading();
      CoefficientText ct = coefficient_text(term.coeff);
      negative = ct.negative;
      if (!ct.unit) body = ct.magnitude + "*";
      if (!term.mono.is_one()) body += term.mono.str() + "*";
    } else {
      body = "(" + coeff.str() + ")*";
    }
    body += basis;
    if (out_.empty()) {
      out_ = negative ? "-" + body : body;
    } else {
      out_ += (negative ? " - " : " + ") + body;
    }
  }

  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

}  // namespace gg
