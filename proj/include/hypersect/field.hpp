#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "hypersect/error.hpp"

namespace hypersect {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p
/// with p < 2^31.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxPrime = 0x7fffffffu;

  constexpr FieldSpec() noexcept = default;

  static constexpr FieldSpec rationals() noexcept { return FieldSpec{}; }

  static FieldSpec prime(std::uint32_t p) {
    if (p > kMaxPrime || !is_prime(p)) {
      throw PreconditionViolation("field characteristic " + std::to_string(p) +
                                  " is not a prime below 2^31");
    }
    FieldSpec f;
    f.characteristic_ = p;
    return f;
  }

  /// Accepts "Q" or "F<p>" (e.g. "F7", "F10007").
  static FieldSpec parse(std::string_view text) {
    if (text == "Q" || text == "q") return rationals();
    if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
      std::uint64_t p = 0;
      for (char c : text.substr(1)) {
        if (c < '0' || c > '9' || p > kMaxPrime) {
          throw PreconditionViolation("bad field '" + std::string(text) + "'");
        }
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      if (p > kMaxPrime) {
        throw PreconditionViolation("bad field '" + std::string(text) + "'");
      }
      return prime(static_cast<std::uint32_t>(p));
    }
    throw PreconditionViolation("bad field '" + std::string(text) +
                                "' (expected Q or F<p>)");
  }

  constexpr std::uint32_t characteristic() const noexcept {
    return characteristic_;
  }
  constexpr bool is_rational() const noexcept { return characteristic_ == 0; }

  std::string name() const {
    return is_rational() ? "Q" : "F" + std::to_string(characteristic_);
  }

  friend constexpr bool operator==(FieldSpec, FieldSpec) noexcept = default;

  static constexpr bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t q = 3; static_cast<std::uint64_t>(q) * q <= n; q += 2) {
      if (n % q == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t characteristic_ = 0;
};

namespace detail {

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DivisionByZero();
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

/// Residue of a rational number modulo p; throws when p divides the
/// denominator.
inline std::uint32_t rational_mod(const mpq_class& q, std::uint32_t p) {
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) {
    throw PreconditionViolation("coefficient " + q.get_str() +
                                " is not representable in F" +
                                std::to_string(p));
  }
  const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(num) *
      inverse_mod(static_cast<std::uint32_t>(den), p) % p);
}

/// Arithmetic on raw residues with a Barrett reduction for products.
struct PrimeOps {
  using value_type = std::uint32_t;

  explicit PrimeOps(std::uint32_t modulus)
      : p(modulus), barrett(~std::uint64_t{0} / modulus) {}

  std::uint32_t reduce(std::uint64_t a) const noexcept {
    const auto q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * barrett) >> 64);
    std::uint64_t r = a - q * p;
    while (r >= p) r -= p;
    return static_cast<std::uint32_t>(r);
  }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  value_type inv(value_type a) const { return inverse_mod(a, p); }
  /// a <- a - f * b
  void submul(value_type& a, value_type f, value_type b) const noexcept {
    a = reduce(static_cast<std::uint64_t>(a) +
               static_cast<std::uint64_t>(p - f) * b);
  }
  void scale(value_type& a, value_type f) const noexcept { a = mul(a, f); }

  std::uint32_t p;
  std::uint64_t barrett;
};

struct RationalOps {
  using value_type = mpq_class;

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const {
    return a * b;
  }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw DivisionByZero();
    return 1 / a;
  }
  void submul(value_type& a, const value_type& f, const value_type& b) const {
    a -= f * b;
  }
  void scale(value_type& a, const value_type& f) const { a *= f; }
};

}  // namespace detail

/// An exact element of a FieldSpec. Rationals are kept as reduced fractions
/// with positive denominator; residues lie in [0, p).
class Scalar {
 public:
  explicit Scalar(FieldSpec field = FieldSpec::rationals()) : field_(field) {
    if (field.is_rational()) value_ = mpq_class(0);
  }

  Scalar(FieldSpec field, long long value) : field_(field) {
    if (field.is_rational()) {
      value_ = mpq_class(static_cast<long>(value));
    } else {
      const long long p = field.characteristic();
      long long r = value % p;
      if (r < 0) r += p;
      value_ = static_cast<std::uint32_t>(r);
    }
  }

  Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
    if (field.is_rational()) {
      mpq_class q = value;
      q.canonicalize();
      value_ = std::move(q);
    } else {
      value_ = detail::rational_mod(value, field.characteristic());
    }
  }

  static Scalar residue(FieldSpec field, std::uint32_t r) {
    if (field.is_rational()) return Scalar(field, static_cast<long long>(r));
    Scalar s(field);
    s.value_ = r % field.characteristic();
    return s;
  }

  FieldSpec field() const noexcept { return field_; }

  bool is_zero() const {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
  }
  bool is_one() const {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
  }

  /// Residue in [0,p); only valid over a prime field.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  /// Reduced fraction; only valid over the rationals.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar operator-() const {
    Scalar out(field_);
    if (field_.is_rational()) {
      out.value_ = mpq_class(-rational());
    } else {
      const std::uint32_t r = residue();
      out.value_ = r == 0 ? 0u : field_.characteristic() - r;
    }
    return out;
  }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar out(field_);
    if (field_.is_rational()) {
      out.value_ = mpq_class(1 / rational());
    } else {
      out.value_ = detail::inverse_mod(residue(), field_.characteristic());
    }
    return out;
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    return binary(x, y, [](const mpq_class& a, const mpq_class& b) {
      return mpq_class(a + b);
    }, [](std::uint64_t a, std::uint64_t b, std::uint64_t p) {
      return (a + b) % p;
    });
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    return binary(x, y, [](const mpq_class& a, const mpq_class& b) {
      return mpq_class(a - b);
    }, [](std::uint64_t a, std::uint64_t b, std::uint64_t p) {
      return (a + p - b) % p;
    });
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    return binary(x, y, [](const mpq_class& a, const mpq_class& b) {
      return mpq_class(a * b);
    }, [](std::uint64_t a, std::uint64_t b, std::uint64_t p) {
      return a * b % p;
    });
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) {
    if (x.field_ != y.field_) throw FieldMismatch();
    return x * y.inverse();
  }
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.field_ == y.field_ && x.value_ == y.value_;
  }

  /// "5/6", "-2", or a residue such as "5".
  std::string to_string() const {
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
  }

 private:
  template <class Q, class P>
  static Scalar binary(const Scalar& x, const Scalar& y, Q&& q, P&& p) {
    if (x.field_ != y.field_) throw FieldMismatch();
    Scalar out(x.field_);
    if (x.field_.is_rational()) {
      out.value_ = q(x.rational(), y.rational());
    } else {
      out.value_ = static_cast<std::uint32_t>(
          p(x.residue(), y.residue(), x.field_.characteristic()));
    }
    return out;
  }

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace hypersect
