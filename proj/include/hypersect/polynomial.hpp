#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypersect/error.hpp"
#include "hypersect/field.hpp"
#include "hypersect/matrix.hpp"
#include "hypersect/monomial.hpp"

namespace hypersect {

/// Multivariate polynomial in num_vars variables over a FieldSpec. Terms are
/// kept leading-first in graded-lex order and never store a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, std::greater<>>;

  Polynomial(FieldSpec field, std::size_t num_vars)
      : field_(field), num_vars_(num_vars) {}

  static Polynomial constant(FieldSpec field, std::size_t num_vars,
                             const Scalar& c) {
    Polynomial p(field, num_vars);
    p.add_term(Monomial::one(num_vars), c);
    return p;
  }
  static Polynomial variable(FieldSpec field, std::size_t num_vars,
                             std::size_t i) {
    Polynomial p(field, num_vars);
    p.add_term(Monomial::variable(num_vars, i), Scalar(field, 1));
    return p;
  }
  static Polynomial monomial(FieldSpec field, const Monomial& m,
                             const Scalar& c) {
    Polynomial p(field, m.num_vars());
    p.add_term(m, c);
    return p;
  }
  /// Σ coords[i] · basis[i]
  static Polynomial from_coordinates(FieldSpec field, const MonomialBasis& basis,
                                     const Vector& coords) {
    if (coords.size() != basis.size()) {
      throw DimensionMismatch("coordinate vector does not match basis");
    }
    Polynomial p(field, basis.num_vars());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      p.add_term(basis[i], coords[i]);
    }
    return p;
  }

  FieldSpec field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Adds c·m, merging with an existing term and dropping zeros.
  void add_term(const Monomial& m, const Scalar& c) {
    if (m.num_vars() != num_vars_) {
      throw DimensionMismatch("monomial has " + std::to_string(m.num_vars()) +
                              " variables, polynomial has " +
                              std::to_string(num_vars_));
    }
    if (c.field() != field_) throw FieldMismatch();
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(field_) : it->second;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
      if (m.degree() != d) return false;
    }
    return true;
  }

  /// Degree of a nonzero homogeneous polynomial; nullopt otherwise.
  std::optional<int> degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.degree();
  }

  /// Coordinates in the monomial basis of R_k; requires homogeneity of
  /// degree basis.degree() (zero is allowed).
  Vector coordinates(const MonomialBasis& basis) const {
    Vector v = zero_vector(field_, basis.size());
    for (const auto& [m, c] : terms_) {
      if (m.degree() != basis.degree()) {
        throw PreconditionViolation("polynomial is not homogeneous of degree " +
                                    std::to_string(basis.degree()));
      }
      v[basis.index_of(m)] = c;
    }
    return v;
  }

  Scalar evaluate(const Vector& point) const {
    if (point.size() != num_vars_) {
      throw DimensionMismatch("evaluation point has wrong length");
    }
    Scalar total(field_);
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < num_vars_; ++i) {
        for (int e = 0; e < m[i]; ++e) t *= point[i];
      }
      total += t;
    }
    return total;
  }

  Polynomial operator-() const {
    Polynomial out(field_, num_vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.field_, a.num_vars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    if (s.field() != p.field_) throw FieldMismatch();
    Polynomial out(p.field_, p.num_vars_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(field_, num_vars_, Scalar(field_, 1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ &&
           a.terms_ == b.terms_;
  }

  /// Canonical text, e.g. "x0^3 + 2*x1*x2^2 - 1/3*x4^3"; "0" for zero.
  /// Re-parses to the same term map.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string coeff = c.to_string();
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const bool unit_monomial = m.degree() == 0;
      if (unit_monomial) {
        out += coeff;
      } else if (coeff == "1") {
        out += m.to_string();
      } else {
        out += coeff + '*' + m.to_string();
      }
    }
    return out;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (o.field_ != field_) throw FieldMismatch();
    if (o.num_vars_ != num_vars_) {
      throw DimensionMismatch("polynomials in different numbers of variables");
    }
  }

  FieldSpec field_;
  std::size_t num_vars_;
  TermMap terms_;
};

/// Formal ∂F/∂X_i with coefficients reduced in the field.
inline Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  if (i >= f.num_vars()) {
    throw PreconditionViolation("variable index " + std::to_string(i) +
                                " out of range");
  }
  Polynomial out(f.field(), f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    const int e = m[i];
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[i] -= 1;
    out.add_term(Monomial(std::move(exps)), Scalar(f.field(), e) * c);
  }
  return out;
}

inline std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> out;
  out.reserve(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    out.push_back(partial_derivative(f, i));
  }
  return out;
}

/// Checks Σ X_i ∂F/∂X_i = d·F.
inline bool euler_check(const Polynomial& f) {
  if (!f.is_homogeneous()) {
    throw PreconditionViolation("euler_check requires a homogeneous form");
  }
  if (f.is_zero()) return true;
  const int d = *f.degree();
  Polynomial lhs(f.field(), f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    lhs += Polynomial::variable(f.field(), f.num_vars(), i) *
           partial_derivative(f, i);
  }
  return lhs == Scalar(f.field(), d) * f;
}

/// X_0^d + ... + X_{n}^d in num_vars variables.
inline Polynomial fermat_form(FieldSpec field, std::size_t num_vars, int d) {
  Polynomial f(field, num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) {
    std::vector<int> e(num_vars, 0);
    e[i] = d;
    f.add_term(Monomial(std::move(e)), Scalar(field, 1));
  }
  return f;
}

/// A nonzero homogeneous polynomial of degree one.
class LinearForm {
 public:
  explicit LinearForm(Polynomial p) : poly_(std::move(p)) {
    if (poly_.is_zero()) throw PreconditionViolation("linear form is zero");
    if (poly_.degree() != 1) {
      throw PreconditionViolation("not a linear form: " + poly_.to_string());
    }
  }

  static LinearForm from_coefficients(FieldSpec field, const Vector& coeffs) {
    Polynomial p(field, coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      p.add_term(Monomial::variable(coeffs.size(), i), coeffs[i]);
    }
    return LinearForm(std::move(p));
  }
  static LinearForm variable(FieldSpec field, std::size_t num_vars,
                             std::size_t i) {
    return LinearForm(Polynomial::variable(field, num_vars, i));
  }

  const Polynomial& polynomial() const noexcept { return poly_; }
  FieldSpec field() const noexcept { return poly_.field(); }
  std::size_t num_vars() const noexcept { return poly_.num_vars(); }

  Scalar coefficient(std::size_t i) const {
    return poly_.coefficient(Monomial::variable(num_vars(), i));
  }
  Vector coefficients() const {
    Vector v;
    for (std::size_t i = 0; i < num_vars(); ++i) v.push_back(coefficient(i));
    return v;
  }
  /// Smallest index with a nonzero coefficient.
  std::size_t pivot_index() const {
    for (std::size_t i = 0; i < num_vars(); ++i) {
      if (!coefficient(i).is_zero()) return i;
    }
    return num_vars();  // unreachable: the form is nonzero
  }

  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  Polynomial poly_;
};

}  // namespace hypersect
