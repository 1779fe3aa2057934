#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccm/error.hpp"

namespace ccm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial in q with exact rational coefficients, lowest degree first.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& q) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      Rational a = c < 0 ? Rational(-c) : c;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      if (k == 0 || a != 1) os << a << (k ? "*" : "");
      if (k >= 1) os << 'q';
      if (k >= 2) os << '^' << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// The unique polynomial of degree < points.size() through all (q, count) points (Newton form).
inline RationalPoly interpolate(const std::vector<std::pair<std::int64_t, BigInt>>& points) {
  if (points.empty()) throw error(errc::invalid_input, "interpolate needs at least one point");
  std::set<std::int64_t> seen;
  for (const auto& [q, _] : points)
    if (!seen.insert(q).second) throw error(errc::duplicate_abscissa, "repeated abscissa " + std::to_string(q));

  const std::size_t n = points.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = Rational(points[i].second);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);

  // Expand the Newton form from the innermost factor outward.
  std::vector<Rational> poly{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    const Rational shift(points[i].first);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= shift * poly[k];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  return RationalPoly(std::move(poly));
}

}  // namespace ccm
