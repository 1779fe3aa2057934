#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "ccm/error.hpp"

namespace ccm {

/// Arithmetic in the prime field F_p, 2 <= p < 2^31. Elements are residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p)) {
      throw error(errc::invalid_input, "not a prime below 2^31: " + std::to_string(p));
    }
  }

  std::uint32_t prime() const noexcept { return p_; }

  value_type reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type pow(value_type a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1, x = a;
    while (e) {
      if (e & 1) r = r * x % p_;
      x = x * x % p_;
      e >>= 1;
    }
    return static_cast<value_type>(r);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw error(errc::invalid_input, "inverse of zero");
    return pow(a, p_ - 2);
  }

  static bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  using value_type = std::uint32_t;

  Matrix() : field_(2) {}
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Integer entries are reduced mod p.
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols,
                          std::uint32_t p) {
    Matrix m(rows.size(), cols, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw error(errc::invalid_input, "ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = m.field_.reduce(rows[r][c]);
    }
    return m;
  }

  static Matrix column_vector(const std::vector<value_type>& v, std::uint32_t p) {
    Matrix m(v.size(), 1, p);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t prime() const noexcept { return field_.prime(); }
  const PrimeField& field() const noexcept { return field_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<value_type>& data() const noexcept { return data_; }

  bool is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](value_type v) { return v == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, prime());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix row(std::size_t r) const { return block(r, 0, 1, cols_); }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc, prime());
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  Matrix scaled(value_type s) const {
    Matrix m = *this;
    for (auto& v : m.data_) v = field_.mul(v, s);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols_ != b.rows_) throw error(errc::arity_mismatch, "matrix product shape mismatch");
    const auto p = static_cast<std::uint64_t>(a.prime());
    Matrix c(a.rows_, b.cols_, a.prime());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) = static_cast<value_type>((c(i, j) + aik * b(k, j)) % p);
      }
    }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.prime() == b.prime() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows_ != b.rows_) throw error(errc::arity_mismatch, "hstack row mismatch");
    Matrix m(a.rows_, a.cols_ + b.cols_, a.prime());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols_ != b.cols_) throw error(errc::arity_mismatch, "vstack column mismatch");
    Matrix m(a.rows_ + b.rows_, a.cols_, a.prime());
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
  }

  static Matrix random(std::size_t rows, std::size_t cols, std::uint32_t p, std::mt19937_64& rng) {
    Matrix m(rows, cols, p);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (auto& v : m.data_) v = dist(rng);
    return m;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ",[" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? "," : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  static void check_same_field(const Matrix& a, const Matrix& b) {
    if (a.prime() != b.prime()) throw error(errc::arity_mismatch, "matrices over different primes");
  }
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error(errc::arity_mismatch, "matrix shape mismatch");
  }

  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

/// Fully reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

inline Echelon echelon(Matrix m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const auto inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

/// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
inline Matrix row_basis(const Matrix& m) {
  auto e = echelon(m);
  return e.reduced.block(0, 0, e.pivots.size(), m.cols());
}

/// Canonical basis (as columns) of the column space.
inline Matrix column_basis(const Matrix& m) { return row_basis(m.transpose()).transpose(); }

/// Columns form a basis of {v : m v = 0}; the transposed basis is in reduced echelon form.
inline Matrix kernel_basis(const Matrix& m) {
  const auto e = echelon(m);
  const auto& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  const std::size_t nullity = m.cols() - e.pivots.size();
  Matrix k(m.cols(), nullity, m.prime());
  std::size_t j = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(free, j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = f.neg(e.reduced(r, free));
    ++j;
  }
  if (nullity == 0) return k;
  return row_basis(k.transpose()).transpose();
}

/// Some x with a x = b, if one exists.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw error(errc::arity_mismatch, "solve: row mismatch");
  const auto e = echelon(Matrix::hstack(a, b));
  Matrix x(a.cols(), b.cols(), a.prime());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const auto p = e.pivots[r];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = e.reduced(r, a.cols() + c);
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.rows(), a.prime()));
}

/// True when every column of v lies in the column space of basis.
inline bool in_column_span(const Matrix& basis, const Matrix& v) {
  if (v.cols() == 0) return true;
  if (basis.cols() == 0) return v.is_zero();
  return rank(Matrix::hstack(basis, v)) == rank(basis);
}

inline Matrix power(const Matrix& m, std::size_t e) {
  Matrix r = Matrix::identity(m.rows(), m.prime());
  Matrix b = m;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

inline bool is_nilpotent(const Matrix& m) { return m.rows() == 0 || power(m, m.rows()).is_zero(); }

}  // namespace ccm
