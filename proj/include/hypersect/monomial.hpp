#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hypersect/error.hpp"

namespace hypersect {

/// Exponent vector X_0^e_0 ... X_n^e_n. Ordered graded-lexicographically with
/// X_0 > X_1 > ... > X_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents)
      : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
      if (e < 0) throw PreconditionViolation("negative exponent in monomial");
    }
  }

  static Monomial one(std::size_t num_vars) {
    return Monomial(std::vector<int>(num_vars, 0));
  }
  static Monomial variable(std::size_t num_vars, std::size_t i) {
    std::vector<int> e(num_vars, 0);
    e.at(i) = 1;
    return Monomial(std::move(e));
  }

  std::size_t num_vars() const noexcept { return exponents_.size(); }
  int degree() const noexcept {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0);
  }
  int operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) {
      throw DimensionMismatch("monomials in different rings");
    }
    std::vector<int> e(a.exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents_[i];
    return Monomial(std::move(e));
  }

  /// a / b when b divides a.
  std::optional<Monomial> divide(const Monomial& b) const {
    std::vector<int> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] -= b.exponents_[i];
      if (e[i] < 0) return std::nullopt;
    }
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exponents_ <=> b.exponents_;
  }

  /// "x0^2*x3", or "1" for the unit monomial.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      if (exponents_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'x' + std::to_string(i);
      if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<int> exponents_;
};

namespace detail {
inline void enumerate_monomials(std::size_t var, int remaining,
                                std::vector<int>& current,
                                std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    enumerate_monomials(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}
}  // namespace detail

/// All monomials of degree d in num_vars variables, largest first.
inline std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int d) {
  if (num_vars == 0) throw PreconditionViolation("num_vars must be >= 1");
  if (d < 0) throw PreconditionViolation("degree must be >= 0");
  std::vector<Monomial> out;
  std::vector<int> current(num_vars, 0);
  detail::enumerate_monomials(0, d, current, out);
  return out;
}

/// C(num_vars + d - 1, d), the dimension of R_d.
inline std::size_t count_monomials(std::size_t num_vars, int d) {
  if (d < 0) return 0;
  // C(n+d-1, d) computed incrementally; exact at every step.
  std::size_t result = 1;
  for (int i = 1; i <= d; ++i) {
    result = result * (num_vars - 1 + static_cast<std::size_t>(i)) /
             static_cast<std::size_t>(i);
  }
  return result;
}

/// Ordered monomial basis of R_d with reverse lookup.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t num_vars, int degree)
      : num_vars_(num_vars),
        degree_(degree),
        monomials_(degree >= 0 ? monomials_of_degree(num_vars, degree)
                               : std::vector<Monomial>{}) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      index_.emplace(monomials_[i], i);
    }
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  std::size_t index_of(const Monomial& m) const {
    const auto it = index_.find(m);
    if (it == index_.end()) {
      throw DimensionMismatch("monomial " + m.to_string() +
                              " not in degree-" + std::to_string(degree_) +
                              " basis");
    }
    return it->second;
  }

 private:
  std::size_t num_vars_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

}  // namespace hypersect
