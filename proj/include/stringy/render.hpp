#pragma once

// Plain-text and LaTeX renderings of polynomials, factored rational functions
// and exact rationals.

#include <cstddef>
#include <numeric>
#include <string>

#include "stringy/polynomial.hpp"
#include "stringy/stringy.hpp"

namespace stringy::render {

enum class Markup { plain, latex };
enum class TermOrder { ascending, descending };
enum class Spacing { spaced, compact };

/// How the computational variable is displayed. `scale` = l means the stored
/// variable is t = q^(1/l), so t^i prints as q^{i/l}.
struct VariableStyle {
  unsigned scale = 1;
  bool bivariate = false;
};

inline std::string power(std::size_t i, const VariableStyle& var, Markup markup) {
  const std::string base = var.bivariate ? "(uv)" : "q";
  if (i == 0) return "";
  const std::size_t g = std::gcd(i, static_cast<std::size_t>(var.scale));
  const std::size_t num = i / g;
  const std::size_t den = var.scale / g;
  if (num == 1 && den == 1) return base;
  std::string exponent = std::to_string(num);
  if (den != 1) exponent += "/" + std::to_string(den);
  if (markup == Markup::latex || den != 1) return base + "^{" + exponent + "}";
  return base + "^" + exponent;
}

inline std::string polynomial(const Polynomial& p, TermOrder order, Spacing spacing, const VariableStyle& var,
                              Markup markup) {
  if (p.is_zero()) return "0";
  const auto c = p.coeffs();
  std::string out;
  bool first = true;
  auto emit = [&](std::size_t i) {
    if (c[i] == 0) return;
    const bool negative = c[i] < 0;
    const BigInt magnitude = negative ? BigInt(-c[i]) : c[i];
    std::string term = power(i, var, markup);
    if (term.empty()) {
      term = magnitude.str();
    } else if (magnitude != 1) {
      term = magnitude.str() + term;
    }
    if (first) {
      out += negative ? "-" + term : term;
    } else if (spacing == Spacing::spaced) {
      out += (negative ? " - " : " + ") + term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
    first = false;
  };
  if (order == TermOrder::ascending) {
    for (std::size_t i = 0; i < c.size(); ++i) emit(i);
  } else {
    for (std::size_t i = c.size(); i-- > 0;) emit(i);
  }
  return out;
}

inline std::string cyclotomic_factor(CyclotomicIndex d, unsigned mult, const VariableStyle& var, Markup markup) {
  const std::string idx = std::to_string(d.value());
  std::string arg;
  if (markup == Markup::latex || var.scale != 1 || var.bivariate) {
    arg = var.scale == 1 ? (var.bivariate ? "uv" : "q") : power(1, var, markup);
    arg = "(" + arg + ")";
  }
  std::string out = markup == Markup::latex ? "\\Phi_{" + idx + "}" + arg : "Phi_" + idx + arg;
  if (mult != 1) out += markup == Markup::latex ? "^{" + std::to_string(mult) + "}" : "^" + std::to_string(mult);
  return out;
}

/// Expanded descending form for polynomials; otherwise the numerator is split as
/// (cofactor) q^v over the product of Phi_d factors.
inline std::string rational_function(const FactoredRationalFunction& f, const VariableStyle& var, Markup markup) {
  const Polynomial& num = f.numerator();
  if (f.is_polynomial()) return polynomial(num, TermOrder::descending, Spacing::spaced, var, markup);

  const std::size_t v = num.valuation();
  const Polynomial cofactor = num.unshifted(v);
  std::string top;
  if (cofactor.term_count() > 1) {
    const Spacing spacing = markup == Markup::latex ? Spacing::spaced : Spacing::compact;
    const std::string inner = polynomial(cofactor, TermOrder::descending, spacing, var, markup);
    top = markup == Markup::latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")";
    if (v > 0) top += " " + power(v, var, markup);
  } else if (v == 0) {
    top = cofactor.leading().str();
  } else if (cofactor.leading() == 1) {
    top = power(v, var, markup);
  } else if (cofactor.leading() == -1) {
    top = "-" + power(v, var, markup);
  } else {
    top = cofactor.leading().str() + " " + power(v, var, markup);
  }

  std::string bottom;
  for (const auto& [d, mult] : f.denominator()) {
    if (!bottom.empty()) bottom += " ";
    bottom += cyclotomic_factor(d, mult, var, markup);
  }
  if (markup == Markup::latex) return "\\frac{" + top + "}{" + bottom + "}";
  return top + " / " + bottom;
}

inline std::string rational(const BigRational& r, Markup markup) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  if (markup == Markup::plain) return num.str() + "/" + den.str();
  const bool negative = num < 0;
  const BigInt magnitude = negative ? BigInt(-num) : num;
  return std::string(negative ? "-" : "") + "\\frac{" + magnitude.str() + "}{" + den.str() + "}";
}

}  // namespace stringy::render
