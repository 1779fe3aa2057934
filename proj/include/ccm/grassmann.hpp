#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ccm/error.hpp"
#include "ccm/field.hpp"
#include "ccm/homological.hpp"
#include "ccm/laurent.hpp"
#include "ccm/rational_poly.hpp"
#include "ccm/representation.hpp"

namespace ccm {

/// A module that can be realized over several prime fields, one Representation per prime.
using ModuleFamily = std::function<Representation(std::uint32_t)>;

inline const std::vector<std::uint32_t>& default_primes() {
  static const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  return primes;
}

/// The first `count` primes, starting from the configured list and continuing past its end.
inline std::vector<std::uint32_t> primes_for(std::size_t count, const std::vector<std::uint32_t>& base) {
  std::vector<std::uint32_t> out(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(std::min(count, base.size())));
  std::uint32_t c = out.empty() ? 1 : out.back();
  while (out.size() < count) {
    ++c;
    if (PrimeField::is_prime(c)) out.push_back(c);
  }
  return out;
}

struct GrassmannOptions {
  std::vector<std::uint32_t> primes = default_primes();
  int max_total_dim = 10;
};

/// Subspace of F_q^d in reduced row echelon form (rows are basis vectors).
struct Subspace {
  Matrix rows;
  std::vector<std::size_t> pivots;

  bool contains(std::vector<std::uint32_t> w, const PrimeField& f) const {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const auto c = w[pivots[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, rows(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
  }

  /// Basis vectors as columns.
  Matrix columns() const { return rows.transpose(); }
};

/// All k-dimensional subspaces of F_p^d, enumerated through their reduced echelon forms.
inline std::vector<Subspace> enumerate_subspaces(std::size_t d, std::size_t k, std::uint32_t p) {
  std::vector<Subspace> out;
  if (k > d) return out;
  std::vector<std::size_t> piv(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t start) {
    if (idx == k) {
      // Free entries: row i, column c > piv[i] with c not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = piv[i] + 1; c < d; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
      Matrix base(k, d, p);
      for (std::size_t i = 0; i < k; ++i) base(i, piv[i]) = 1;
      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        Matrix m = base;
        for (std::size_t f = 0; f < free.size(); ++f) m(free[f].first, free[f].second) = digits[f];
        out.push_back(Subspace{std::move(m), piv});
        std::size_t f = 0;
        while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
        if (f == digits.size()) break;
      }
      return;
    }
    for (std::size_t c = start; c + (k - idx) <= d; ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

inline void check_dimension_vector(const Representation& m, const DimVector& e) {
  if (e.size() != m.dims().size()) throw error(errc::bad_dimension_vector, "dimension vector has the wrong length");
  for (std::size_t v = 0; v < e.size(); ++v)
    if (e[v] < 0 || e[v] > m.dims()[v]) throw error(errc::bad_dimension_vector, "dimension vector out of range " + to_string(e));
}

/// Calls visit(subspaces) for every subrepresentation of m with dimension vector e.
///
/// Vertices are assigned in decreasing out-degree order; an assignment is rejected as soon as
/// some arrow between assigned vertices maps the source subspace outside the target subspace.
template <class Visit>
void for_each_subrepresentation(const Representation& m, const DimVector& e, Visit&& visit) {
  check_dimension_vector(m, e);
  const auto& alg = m.algebra();
  const auto& q = alg->quiver();
  const auto& f = alg->field();
  const int n = alg->vertex_count();

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return q.out_degree(a) > q.out_degree(b); });
  std::vector<std::size_t> position(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = i;

  // Arrows checked once both endpoints are assigned, keyed by the later-assigned endpoint.
  std::vector<std::vector<std::size_t>> checks(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    const auto later = std::max(position[static_cast<std::size_t>(arr.source)], position[static_cast<std::size_t>(arr.target)]);
    checks[later].push_back(a);
  }

  std::vector<std::vector<Subspace>> choices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    choices[static_cast<std::size_t>(v)] = enumerate_subspaces(m.dim(v), static_cast<std::size_t>(e[static_cast<std::size_t>(v)]), m.prime());

  std::vector<const Subspace*> current(static_cast<std::size_t>(n), nullptr);
  auto closed = [&](std::size_t a) {
    const auto& arr = q.arrow(a);
    const auto& us = *current[static_cast<std::size_t>(arr.source)];
    const auto& ut = *current[static_cast<std::size_t>(arr.target)];
    const auto& ma = m.map(a);
    for (std::size_t i = 0; i < us.rows.rows(); ++i) {
      std::vector<std::uint32_t> w(ma.rows(), 0);
      for (std::size_t r = 0; r < ma.rows(); ++r)
        for (std::size_t c = 0; c < ma.cols(); ++c) w[r] = f.add(w[r], f.mul(ma(r, c), us.rows(i, c)));
      if (!ut.contains(std::move(w), f)) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> assign = [&](std::size_t depth) {
    if (depth == order.size()) {
      visit(current);
      return;
    }
    const auto v = static_cast<std::size_t>(order[depth]);
    for (const auto& s : choices[v]) {
      current[v] = &s;
      bool ok = true;
      for (auto a : checks[depth])
        if (!closed(a)) {
          ok = false;
          break;
        }
      if (ok) assign(depth + 1);
    }
    current[v] = nullptr;
  };
  assign(0);
}

/// Number of F_q-points of the quiver Grassmannian Gr_e(m), q the prime of m.
inline std::uint64_t count_subreps(const Representation& m, const DimVector& e) {
  std::uint64_t count = 0;
  for_each_subrepresentation(m, e, [&](const auto&) { ++count; });
  return count;
}

inline std::uint64_t count_subreps(const Representation& m, const DimVector& e, std::uint32_t q) {
  if (q != m.prime()) throw error(errc::invalid_input, "count_subreps: q differs from the module's field");
  return count_subreps(m, e);
}

/// Upper bound for the degree of the counting polynomial: dim of the ambient product of Grassmannians.
inline int grassmannian_degree_bound(const DimVector& dims, const DimVector& e) {
  int d = 0;
  for (std::size_t v = 0; v < dims.size(); ++v) d += e[v] * (dims[v] - e[v]);
  return d;
}

struct GrCount {
  DimVector e;
  std::map<std::uint32_t, std::uint64_t> counts;
  RationalPoly counting_poly;
  BigInt euler = 0;
};

namespace detail {

class FamilyCache {
 public:
  explicit FamilyCache(const ModuleFamily& family) : family_(family) {}
  const Representation& at(std::uint32_t q) {
    auto it = cache_.find(q);
    if (it == cache_.end()) it = cache_.emplace(q, family_(q)).first;
    return it->second;
  }

 private:
  const ModuleFamily& family_;
  std::map<std::uint32_t, Representation> cache_;
};

inline GrCount euler_char_cached(FamilyCache& cache, const DimVector& dims, const DimVector& e, const GrassmannOptions& opt) {
  const auto degree = static_cast<std::size_t>(grassmannian_degree_bound(dims, e));
  const auto primes = primes_for(degree + 2, opt.primes);
  GrCount g{e, {}, {}, 0};
  std::vector<std::pair<std::int64_t, BigInt>> pts;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto& m = cache.at(primes[i]);
    if (m.dims() != dims) throw std::logic_error("module family changes dimension vector across primes");
    const auto c = count_subreps(m, e);
    g.counts[primes[i]] = c;
    if (i + 1 < primes.size()) pts.emplace_back(primes[i], BigInt(c));
  }
  g.counting_poly = interpolate(pts);
  const auto held_out = primes.back();
  if (g.counting_poly(Rational(held_out)) != Rational(g.counts[held_out]))
    throw error(errc::not_polynomial_count,
                "counts for e=" + to_string(e) + " are not polynomial in q (held-out prime " + std::to_string(held_out) + ")");
  const Rational at_one = g.counting_poly(Rational(1));
  if (boost::multiprecision::denominator(at_one) != 1)
    throw error(errc::not_polynomial_count, "counting polynomial has a non-integral value at q = 1");
  g.euler = boost::multiprecision::numerator(at_one);
  return g;
}

inline void check_ceiling(const DimVector& dims, const GrassmannOptions& opt) {
  int total = 0;
  for (int d : dims) total += d;
  if (total > opt.max_total_dim)
    throw error(errc::dimension_too_large, "module of total dimension " + std::to_string(total) + " exceeds the ceiling " +
                                               std::to_string(opt.max_total_dim));
}

}  // namespace detail

/// Euler characteristic of Gr_e as the interpolated counting polynomial at q = 1, with one
/// extra prime held out to check polynomiality.
inline GrCount euler_char(const ModuleFamily& family, const DimVector& e, const GrassmannOptions& opt = {}) {
  detail::FamilyCache cache(family);
  const auto dims = cache.at(opt.primes.front()).dims();
  check_dimension_vector(cache.at(opt.primes.front()), e);
  return detail::euler_char_cached(cache, dims, e, opt);
}

/// F-polynomial: y-generating function of Euler characteristics of all quiver Grassmannians.
struct FPolynomial {
  LaurentPoly value;

  /// Constant term 1 and top term y^{dim m} with coefficient 1.
  bool well_formed(const DimVector& dims) const {
    ExpVector top(dims.begin(), dims.end());
    return value.coefficient(ExpVector(dims.size(), 0)) == 1 && value.coefficient(top) == 1;
  }
};

inline FPolynomial f_polynomial(const ModuleFamily& family, const GrassmannOptions& opt = {}) {
  detail::FamilyCache cache(family);
  const auto dims = cache.at(opt.primes.front()).dims();
  detail::check_ceiling(dims, opt);
  FPolynomial fp{LaurentPoly(dims.size())};
  DimVector e(dims.size(), 0);
  while (true) {
    const auto g = detail::euler_char_cached(cache, dims, e, opt);
    fp.value.add_term(ExpVector(e.begin(), e.end()), g.euler);
    std::size_t v = 0;
    while (v < e.size() && ++e[v] > dims[v]) e[v++] = 0;
    if (v == e.size()) break;
  }
  if (!fp.well_formed(dims)) throw std::logic_error("F-polynomial lacks constant or top term 1");
  return fp;
}

/// Family of one module whose matrices are fixed integers: realized by reduction mod q.
struct IntegralModule {
  BoundQuiver presentation;
  DimVector dims;
  std::vector<std::vector<std::vector<std::int64_t>>> maps;  // per arrow, row-major

  Representation over(const AlgebraPtr& alg) const {
    if (!(alg->presentation() == presentation)) throw error(errc::algebra_mismatch, "module realized over a different algebra");
    std::vector<Matrix> ms;
    for (std::size_t a = 0; a < maps.size(); ++a) {
      const auto& arr = presentation.quiver.arrow(a);
      const auto cols = static_cast<std::size_t>(dims.at(static_cast<std::size_t>(arr.source)));
      const auto& rows = maps[a];
      if (rows.size() != static_cast<std::size_t>(dims.at(static_cast<std::size_t>(arr.target))))
        throw error(errc::invalid_input, "matrix for arrow '" + arr.id + "' has the wrong number of rows");
      ms.push_back(Matrix::from_rows(rows, cols, alg->prime()));
    }
    return Representation(alg, dims, std::move(ms));
  }
};

// ---------------------------------------------------------------------------
// Fiber census for U -> (iota^{-1} U, pi U)

struct FiberBucket {
  DimVector dim_a;
  DimVector dim_c;
  std::uint64_t count = 0;
  std::size_t hom_dim = 0;
  std::uint64_t expected = 0;
  bool is_zero_n = false;
  bool ok = false;
};

struct FiberCensus {
  DimVector g;
  std::uint32_t q = 0;
  std::vector<FiberBucket> buckets;
  std::uint64_t total = 0;           // number of U in Gr_g(M)
  std::uint64_t grassmannian = 0;    // independent count_subreps(M, g)
  std::size_t missing_pairs = 0;     // (A, C) != (0, N) pairs with an empty fiber
  bool zero_n_empty = true;
  bool passed = false;
};

namespace detail {

inline std::string subspace_key(const std::vector<Matrix>& cols) {
  std::string key;
  for (const auto& c : cols) {
    const Matrix rb = c.cols() == 0 ? Matrix(0, c.rows(), c.prime()) : row_basis(c.transpose());
    key += std::to_string(rb.rows()) + ":";
    for (auto x : rb.data()) key += std::to_string(x) + ",";
    key += "|";
  }
  return key;
}

inline std::vector<Matrix> as_column_bases(const std::vector<const Subspace*>& us) {
  std::vector<Matrix> out;
  for (const auto* u : us) out.push_back(u->columns());
  return out;
}

}  // namespace detail

inline FiberCensus fiber_census(const ShortExactSeq& s, const DimVector& g, std::uint32_t q) {
  if (s.middle.prime() != q) throw error(errc::invalid_input, "fiber_census: q differs from the sequence's field");
  if (splits(s)) throw error(errc::split_sequence, "fiber census needs a non-split sequence");
  const auto& alg = s.middle.algebra();
  const int n = alg->vertex_count();
  FiberCensus census{g, q, {}, 0, 0, 0, true, false};

  struct Acc {
    std::vector<Matrix> a, c;
    std::uint64_t count = 0;
  };
  std::map<std::string, Acc> buckets;
  for_each_subrepresentation(s.middle, g, [&](const std::vector<const Subspace*>& us) {
    std::vector<Matrix> a_bases, c_bases;
    for (int v = 0; v < n; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      const Matrix u = us[vi]->columns();
      const Matrix& iota = s.inject.components[vi];
      // A_v = {x : iota x in U_v}
      Matrix neg_u = u.scaled(s.middle.prime() - 1);
      const Matrix ker = kernel_basis(Matrix::hstack(iota, neg_u));
      a_bases.push_back(column_basis(ker.block(0, 0, iota.cols(), ker.cols())));
      c_bases.push_back(column_basis(s.project.components[vi] * u));
    }
    const auto key = detail::subspace_key(a_bases) + "#" + detail::subspace_key(c_bases);
    auto& acc = buckets[key];
    if (acc.count++ == 0) {
      acc.a = std::move(a_bases);
      acc.c = std::move(c_bases);
    }
    ++census.total;
  });

  bool ok = true;
  for (const auto& [key, acc] : buckets) {
    FiberBucket b;
    for (const auto& m : acc.a) b.dim_a.push_back(static_cast<int>(m.cols()));
    for (const auto& m : acc.c) b.dim_c.push_back(static_cast<int>(m.cols()));
    b.count = acc.count;
    b.is_zero_n = std::all_of(b.dim_a.begin(), b.dim_a.end(), [](int x) { return x == 0; }) && b.dim_c == s.right.dims();
    if (b.is_zero_n) {
      census.zero_n_empty = false;
      b.ok = false;
    } else {
      const auto c_mod = submodule(s.right, acc.c).module;
      const auto l_mod_a = quotient(s.left, acc.a).module;
      b.hom_dim = hom_dim(c_mod, l_mod_a);
      b.expected = 1;
      for (std::size_t k = 0; k < b.hom_dim; ++k) b.expected *= q;
      b.ok = b.expected == b.count;
    }
    ok = ok && b.ok;
    census.buckets.push_back(std::move(b));
  }

  // Every pair (A, C) other than (0, N) must have a nonempty fiber.
  DimVector e(static_cast<std::size_t>(n), 0);
  while (true) {
    bool valid = true;
    DimVector f(static_cast<std::size_t>(n));
    for (std::size_t v = 0; v < e.size(); ++v) {
      f[v] = g[v] - e[v];
      if (f[v] < 0 || f[v] > s.right.dims()[v] || e[v] > s.left.dims()[v]) valid = false;
    }
    if (valid) {
      std::vector<std::vector<Matrix>> subs_a, subs_c;
      for_each_subrepresentation(s.left, e, [&](const auto& us) { subs_a.push_back(detail::as_column_bases(us)); });
      for_each_subrepresentation(s.right, f, [&](const auto& us) { subs_c.push_back(detail::as_column_bases(us)); });
      for (const auto& a : subs_a)
        for (const auto& c : subs_c) {
          const bool a_zero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
          if (a_zero && f == s.right.dims()) continue;
          if (!buckets.count(detail::subspace_key(a) + "#" + detail::subspace_key(c))) ++census.missing_pairs;
        }
    }
    std::size_t v = 0;
    while (v < e.size() && ++e[v] > g[v]) e[v++] = 0;
    if (v == e.size()) break;
  }

  census.grassmannian = count_subreps(s.middle, g);
  census.passed = ok && census.zero_n_empty && census.missing_pairs == 0 && census.grassmannian == census.total;
  return census;
}

}  // namespace ccm
