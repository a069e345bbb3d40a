#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "hypersect/error.hpp"
#include "hypersect/field.hpp"
#include "hypersect/polynomial.hpp"

namespace hypersect {

namespace detail {

// expr   := [+|-] term { (+|-) term }
// term   := factor { * factor }
// factor := integer [ / integer ] | x<index> [ ^ integer ]
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, FieldSpec field, std::size_t num_vars)
      : text_(text), field_(field), num_vars_(num_vars) {}

  Polynomial parse() {
    Polynomial result(field_, num_vars_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Polynomial t = parse_term();
      result += negative ? -t : t;
      skip_space();
      if (at_end()) break;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        continue;
      }
      fail(std::string("unexpected '") + peek() + "'");
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Scalar coeff(field_, 1);
    std::vector<int> exps(num_vars_, 0);
    while (true) {
      skip_space();
      if (at_end()) fail("expected a number or variable");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_literal();
      } else if (c == 'x' || c == 'X') {
        const std::size_t start = pos_;
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected variable index after 'x'");
        }
        const unsigned long index = parse_unsigned();
        if (index >= num_vars_) {
          throw ParseError("variable x" + std::to_string(index) +
                               " out of range for " +
                               std::to_string(num_vars_) + " variables",
                           start);
        }
        int e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected exponent after '^'");
          }
          const unsigned long value = parse_unsigned();
          if (value > 1000) fail("exponent too large");
          e = static_cast<int>(value);
        }
        exps[index] += e;
      } else {
        fail(std::string("unexpected '") + c + "'");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      if (!at_end() && peek() != '+' && peek() != '-') {
        fail("expected an operator (juxtaposition is not allowed)");
      }
      break;
    }
    return Polynomial::monomial(field_, Monomial(std::move(exps)), coeff);
  }

  Scalar parse_literal() {
    const std::size_t start = pos_;
    mpz_class num(parse_digits());
    mpz_class den(1);
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected denominator after '/'");
      }
      den = mpz_class(parse_digits());
      if (den == 0) throw ParseError("zero denominator", start);
    }
    mpq_class q(num, den);
    q.canonicalize();
    try {
      return Scalar(field_, q);
    } catch (const PreconditionViolation&) {
      throw ParseError("coefficient " + num.get_str() + "/" + den.get_str() +
                           " not representable in " + field_.name(),
                       start);
    }
  }

  std::string parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned long parse_unsigned() {
    const std::size_t start = pos_;
    const std::string digits = parse_digits();
    if (digits.size() > 9) throw ParseError("integer too large", start);
    return std::stoul(digits);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  std::string_view text_;
  FieldSpec field_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the ASCII grammar `x0^3 + 2*x1*x2^2 - 1/3*x4^3`: variables
/// x0..x<n>, integer or a/b literals, operators + - * ^. Like terms are merged.
inline Polynomial parse_polynomial(std::string_view text, FieldSpec field,
                                   std::size_t num_vars) {
  if (num_vars == 0) throw PreconditionViolation("num_vars must be >= 1");
  return detail::PolynomialParser(text, field, num_vars).parse();
}

}  // namespace hypersect
