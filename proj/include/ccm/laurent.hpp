#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccm/error.hpp"
#include "ccm/rational_poly.hpp"

namespace ccm {

/// Exponent vector of a monomial; also used for dimension vectors, g-vectors and indices.
using ExpVector = std::vector<int>;

inline ExpVector operator+(ExpVector a, const ExpVector& b) {
  if (a.size() != b.size()) throw error(errc::arity_mismatch, "exponent vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline ExpVector operator-(ExpVector a) {
  for (auto& v : a) v = -v;
  return a;
}

inline ExpVector operator-(const ExpVector& a, const ExpVector& b) { return a + (-b); }

inline ExpVector unit_vector(std::size_t n, std::size_t i) {
  ExpVector e(n, 0);
  e.at(i) = 1;
  return e;
}

inline std::string to_string(const ExpVector& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

/// Integer Laurent polynomial in a fixed number of variables.
///
/// Terms are kept in a map ordered lexicographically on exponent vectors, which is also the
/// printing order; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<ExpVector, BigInt>;

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const BigInt& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(ExpVector(nvars, 0), c);
    return p;
  }

  static LaurentPoly monomial(const ExpVector& e, const BigInt& c = 1) {
    LaurentPoly p(e.size());
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  static LaurentPoly variable(std::size_t nvars, std::size_t i) { return monomial(unit_vector(nvars, i)); }

  std::size_t arity() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(const ExpVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const ExpVector& e, const BigInt& c) {
    if (e.size() != nvars_) throw error(errc::arity_mismatch, "term arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_arity(b);
    LaurentPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Canonical text, e.g. `1 + y2 + y1*y2` or `x1^-1 + x1^-1*x2`.
  std::string to_string(char var = 'x') const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const BigInt mag = negative ? BigInt(-c) : c;
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += var + std::to_string(i + 1);
        if (e[i] != 1) mono += '^' + std::to_string(e[i]);
      }
      if (mono.empty()) {
        os << mag;
      } else {
        if (mag != 1) os << mag << '*';
        os << mono;
      }
    }
    return os.str();
  }

 private:
  void check_arity(const LaurentPoly& o) const {
    if (o.nvars_ != nvars_) throw error(errc::arity_mismatch, "Laurent polynomials of different arity");
  }

  std::size_t nvars_;
  Terms terms_;
};

inline LaurentPoly monomial(const ExpVector& e) { return LaurentPoly::monomial(e); }

/// Integer square matrix, used for exchange matrices.
using IntMatrix = std::vector<std::vector<int>>;

inline ExpVector multiply(const IntMatrix& b, const ExpVector& e) {
  ExpVector r(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].size() != e.size()) throw error(errc::arity_mismatch, "matrix-vector arity mismatch");
    for (std::size_t j = 0; j < e.size(); ++j) r[i] += b[i][j] * e[j];
  }
  return r;
}

/// f(ŷ_1, ..., ŷ_n) with ŷ_j = prod_i x_i^{B_ij}: each y^e becomes x^{B e}.
inline LaurentPoly substitute_yhat(const LaurentPoly& f, const IntMatrix& b) {
  if (b.size() != f.arity()) throw error(errc::arity_mismatch, "B matrix size differs from polynomial arity");
  LaurentPoly r(f.arity());
  for (const auto& [e, c] : f.terms()) {
    for (int v : e)
      if (v < 0) throw error(errc::invalid_input, "y-substitution needs nonnegative exponents");
    r.add_term(multiply(b, e), c);
  }
  return r;
}

}  // namespace ccm
