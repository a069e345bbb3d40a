#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypersect/error.hpp"
#include "hypersect/field.hpp"

namespace hypersect {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(FieldSpec field, std::size_t n) {
  return Vector(n, Scalar(field));
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

/// Dense row-major matrix over a single FieldSpec. Residues and fractions are
/// stored unboxed so the elimination kernels run on raw values.
class ExactMatrix {
 public:
  using ResidueStorage = std::vector<std::uint32_t>;
  using RationalStorage = std::vector<mpq_class>;

  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols) {
    if (field.is_rational()) {
      data_ = RationalStorage(rows * cols, mpq_class(0));
    } else {
      data_ = ResidueStorage(rows * cols, 0u);
    }
  }

  static ExactMatrix identity(FieldSpec field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(field, 1));
    return m;
  }

  static ExactMatrix from_rows(FieldSpec field, const std::vector<Vector>& rows,
                               std::size_t cols) {
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw DimensionMismatch("ragged rows in matrix construction");
      }
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
  }

  static ExactMatrix from_rows(FieldSpec field, const std::vector<Vector>& rows) {
    return from_rows(field, rows, rows.empty() ? 0 : rows.front().size());
  }

  /// Matrix whose columns are the given vectors (each of length `rows`).
  static ExactMatrix from_columns(FieldSpec field,
                                  const std::vector<Vector>& columns,
                                  std::size_t rows) {
    ExactMatrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) {
        throw DimensionMismatch("ragged columns in matrix construction");
      }
      for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
    }
    return m;
  }

  FieldSpec field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const {
    const std::size_t i = r * cols_ + c;
    if (const auto* res = std::get_if<ResidueStorage>(&data_)) {
      return Scalar::residue(field_, (*res)[i]);
    }
    return Scalar(field_, std::get<RationalStorage>(data_)[i]);
  }

  void set(std::size_t r, std::size_t c, const Scalar& value) {
    if (value.field() != field_) throw FieldMismatch();
    const std::size_t i = r * cols_ + c;
    if (auto* res = std::get_if<ResidueStorage>(&data_)) {
      (*res)[i] = value.residue();
    } else {
      std::get<RationalStorage>(data_)[i] = value.rational();
    }
  }

  Vector row(std::size_t r) const {
    Vector out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
  }

  Vector column(std::size_t c) const {
    Vector out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
  }

  /// M * v
  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        const Scalar a = at(r, c);
        if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
      }
    }
    return out;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.field_ != b.field_) throw FieldMismatch();
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size");
    ExactMatrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar bkj = b.at(k, j);
          if (!bkj.is_zero()) out.set(i, j, out.at(i, j) + aik * bkj);
        }
      }
    }
    return out;
  }

  ExactMatrix transpose() const {
    ExactMatrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    }
    return out;
  }

  bool is_zero() const {
    return std::visit(
        [](const auto& data) {
          using T = typename std::decay_t<decltype(data)>::value_type;
          return std::all_of(data.begin(), data.end(),
                             [](const T& x) { return x == 0; });
        },
        data_);
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

  const std::variant<ResidueStorage, RationalStorage>& storage() const {
    return data_;
  }
  std::variant<ResidueStorage, RationalStorage>& storage() { return data_; }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::variant<ResidueStorage, RationalStorage> data_;
};

namespace detail {

/// In-place Gauss(-Jordan) elimination on a row-major array. Pivots are the
/// first nonzero entries in column order and are scaled to one. With
/// `reduced`, entries above pivots are cleared as well. Stops early once
/// `max_rank` pivots are found. Returns the pivot columns.
template <class Ops>
std::vector<std::size_t> echelonize(
    const Ops& ops, std::size_t rows, std::size_t cols,
    std::vector<typename Ops::value_type>& a, bool reduced,
    std::size_t max_rank = std::numeric_limits<std::size_t>::max()) {
  using T = typename Ops::value_type;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nonzero;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows && rank < max_rank; ++c) {
    std::size_t pr = rank;
    while (pr < rows && ops.is_zero(a[pr * cols + c])) ++pr;
    if (pr == rows) continue;
    if (pr != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pr * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pr + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    }
    T* pivot_row = a.data() + rank * cols;
    const T inv = ops.inv(pivot_row[c]);
    nonzero.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (!ops.is_zero(pivot_row[j])) {
        ops.scale(pivot_row[j], inv);
        nonzero.push_back(j);
      }
    }
    const std::size_t first = reduced ? 0 : rank + 1;
    for (std::size_t i = first; i < rows; ++i) {
      if (i == rank) continue;
      T* target = a.data() + i * cols;
      if (ops.is_zero(target[c])) continue;
      const T factor = target[c];
      for (std::size_t j : nonzero) ops.submul(target[j], factor, pivot_row[j]);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

inline constexpr std::uint32_t kCertificatePrime = 2147483647u;

/// Rank of a rational matrix modulo `p`, or nullopt when some denominator
/// vanishes modulo p. This is a lower bound for the rank over Q.
inline std::optional<std::size_t> rank_mod_prime(
    const ExactMatrix::RationalStorage& data, std::size_t rows,
    std::size_t cols, std::uint32_t p) {
  std::vector<std::uint32_t> residues;
  residues.reserve(data.size());
  for (const mpq_class& q : data) {
    if (sgn(q) == 0) {
      residues.push_back(0);
      continue;
    }
    if (mpz_divisible_ui_p(q.get_den_mpz_t(), p)) return std::nullopt;
    residues.push_back(rational_mod(q, p));
  }
  return echelonize(PrimeOps(p), rows, cols, residues, false).size();
}

/// Over Q, a full rank modulo a prime certifies full rank over Q.
inline std::optional<std::size_t> certified_full_rank(const ExactMatrix& m) {
  if (!m.field().is_rational()) return std::nullopt;
  const std::size_t full = std::min(m.rows(), m.cols());
  const auto r = rank_mod_prime(std::get<ExactMatrix::RationalStorage>(m.storage()),
                                m.rows(), m.cols(), kCertificatePrime);
  if (r && *r == full) return full;
  return std::nullopt;
}

}  // namespace detail

struct RrefResult {
  ExactMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. Rows past `rank` are zero.
inline RrefResult rref(const ExactMatrix& m) {
  if (m.field().is_rational() && m.cols() <= m.rows() && m.cols() > 0) {
    if (detail::certified_full_rank(m)) {
      ExactMatrix r(m.field(), m.rows(), m.cols());
      std::vector<std::size_t> pivots(m.cols());
      for (std::size_t i = 0; i < m.cols(); ++i) {
        r.set(i, i, Scalar(m.field(), 1));
        pivots[i] = i;
      }
      return {std::move(r), m.cols(), std::move(pivots)};
    }
  }
  ExactMatrix r = m;
  std::vector<std::size_t> pivots = std::visit(
      [&](auto& data) {
        using T = typename std::decay_t<decltype(data)>::value_type;
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          return detail::echelonize(detail::PrimeOps(m.field().characteristic()),
                                    m.rows(), m.cols(), data, true);
        } else {
          return detail::echelonize(detail::RationalOps{}, m.rows(), m.cols(),
                                    data, true);
        }
      },
      r.storage());
  const std::size_t rank = pivots.size();
  return {std::move(r), rank, std::move(pivots)};
}

/// Rank by forward elimination only.
inline std::size_t rank(const ExactMatrix& m) {
  if (auto full = detail::certified_full_rank(m)) return *full;
  ExactMatrix r = m;
  const std::size_t full = std::min(m.rows(), m.cols());
  return std::visit(
      [&](auto& data) {
        using T = typename std::decay_t<decltype(data)>::value_type;
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          return detail::echelonize(detail::PrimeOps(m.field().characteristic()),
                                    m.rows(), m.cols(), data, false, full)
              .size();
        } else {
          return detail::echelonize(detail::RationalOps{}, m.rows(), m.cols(),
                                    data, false, full)
              .size();
        }
      },
      r.storage());
}

/// Basis of {v : M v = 0}, one vector per non-pivot column, in column order.
inline std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivot_columns) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[f] = Scalar(m.field(), 1);
    for (std::size_t k = 0; k < r.rank; ++k) {
      v[r.pivot_columns[k]] = -r.reduced.at(k, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coordinates c with c·B = v, where the rows of `basis` are in RREF (zero
/// rows allowed). nullopt when v is outside the row span.
inline std::optional<Vector> in_span(const Vector& v, const ExactMatrix& basis) {
  if (v.size() != basis.cols()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " against basis of width " +
                            std::to_string(basis.cols()));
  }
  const FieldSpec field = basis.field();
  for (const Scalar& s : v) {
    if (s.field() != field) throw FieldMismatch();
  }
  Vector coords = zero_vector(field, basis.rows());
  Vector residual = v;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::size_t p = 0;
    while (p < basis.cols() && basis.at(r, p).is_zero()) ++p;
    if (p == basis.cols()) continue;
    coords[r] = v[p] / basis.at(r, p);
    if (coords[r].is_zero()) continue;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      residual[c] -= coords[r] * basis.at(r, c);
    }
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

/// One solution of A x = b (free variables set to zero), or nullopt.
inline std::optional<Vector> solve(const ExactMatrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side size");
  ExactMatrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
    aug.set(r, a.cols(), b[r]);
  }
  const RrefResult red = rref(aug);
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == a.cols()) {
    return std::nullopt;
  }
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t k = 0; k < red.rank; ++k) {
    x[red.pivot_columns[k]] = red.reduced.at(k, a.cols());
  }
  return x;
}

inline std::optional<ExactMatrix> inverse(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square");
  const std::size_t n = a.rows();
  ExactMatrix aug(a.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, a.at(r, c));
    aug.set(r, n + r, Scalar(a.field(), 1));
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivot_columns[n - 1] != n - 1)) {
    return std::nullopt;
  }
  ExactMatrix inv(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, red.reduced.at(r, n + c));
  }
  return inv;
}

/// A subspace of F^n held as an RREF basis, with normal-form reduction.
class Subspace {
 public:
  Subspace(FieldSpec field, std::size_t ambient)
      : field_(field), ambient_(ambient) {}

  static Subspace row_space(const ExactMatrix& generators) {
    Subspace s(generators.field(), generators.cols());
    const RrefResult r = rref(generators);
    s.pivots_ = r.pivot_columns;
    s.rows_.reserve(r.rank);
    for (std::size_t k = 0; k < r.rank; ++k) s.rows_.push_back(r.reduced.row(k));
    return s;
  }

  FieldSpec field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t ambient_dimension() const noexcept { return ambient_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept {
    return pivots_;
  }
  const std::vector<Vector>& basis_rows() const noexcept { return rows_; }

  ExactMatrix basis() const {
    return ExactMatrix::from_rows(field_, rows_, ambient_);
  }

  /// Columns that are not pivots; the quotient F^n / S has these as a basis.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (k < pivots_.size() && pivots_[k] == c) {
        ++k;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  /// Normal form of v modulo the subspace: zero at every pivot column.
  Vector reduce(Vector v) const {
    if (v.size() != ambient_) throw DimensionMismatch("reduce: vector size");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar f = v[pivots_[k]];
      if (f.is_zero()) continue;
      const Vector& row = rows_[k];
      for (std::size_t c = pivots_[k]; c < ambient_; ++c) {
        if (!row[c].is_zero()) v[c] -= f * row[c];
      }
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  /// Coordinates of the class of v in the basis of free columns.
  Vector quotient_coordinates(const Vector& v) const {
    const Vector r = reduce(v);
    Vector out;
    for (std::size_t c : free_columns()) out.push_back(r[c]);
    return out;
  }

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> rows_;
};

}  // namespace hypersect
