#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "ccm/error.hpp"
#include "ccm/field.hpp"

namespace ccm {

struct Arrow {
  std::string id;
  int source = 0;  // 0-based vertex
  int target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver. Vertices are 0-based internally and 1-based in every external format.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertices, std::vector<Arrow> arrows) : vertices_(vertices), arrows_(std::move(arrows)) {
    if (vertices_ < 0) throw error(errc::invalid_input, "negative vertex count");
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      const auto& a = arrows_[i];
      if (a.source < 0 || a.source >= vertices_ || a.target < 0 || a.target >= vertices_)
        throw error(errc::invalid_input, "arrow '" + a.id + "' has an endpoint out of range");
      for (std::size_t j = 0; j < i; ++j)
        if (arrows_[j].id == a.id) throw error(errc::invalid_input, "duplicate arrow id '" + a.id + "'");
    }
  }

  int vertex_count() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

  std::size_t arrow_index(const std::string& id) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].id == id) return i;
    throw error(errc::invalid_input, "unknown arrow '" + id + "'");
  }

  std::size_t out_degree(int v) const {
    return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v; }));
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int vertices_ = 0;
  std::vector<Arrow> arrows_;
};

/// A path in traversal order: arrows[0] leaves `source`, the last arrow ends at `target`.
/// Length-zero paths are the vertex idempotents.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  std::size_t length() const noexcept { return arrows.size(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) {
    return std::tie(a.source, a.target, a.arrows) <=> std::tie(b.source, b.target, b.arrows);
  }
};

inline Path concat(const Path& a, const Path& b) {
  if (a.target != b.source) throw error(errc::invalid_input, "concatenating non-composable paths");
  Path r{a.source, b.target, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

struct RelationTerm {
  std::int64_t coef = 1;
  std::vector<int> arrows;  // traversal order

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

using Relation = std::vector<RelationTerm>;

/// Quiver with integer relations: the prime-independent description of an algebra.
struct BoundQuiver {
  Quiver quiver;
  std::vector<Relation> relations;

  friend bool operator==(const BoundQuiver&, const BoundQuiver&) = default;
};

struct AlgebraLimits {
  std::size_t max_path_length = 24;
  std::size_t max_paths = 200000;
};

/// Basic algebra kQ/I over F_p with a basis of residue classes of paths.
///
/// The relation ideal is truncated at the first length L with J^L contained in I + J^{L+1};
/// the algebra is then kQ/(I + J^L) and every path of length >= L is zero.
class Algebra {
 public:
  const BoundQuiver& presentation() const noexcept { return bq_; }
  const Quiver& quiver() const noexcept { return bq_.quiver; }
  int vertex_count() const noexcept { return bq_.quiver.vertex_count(); }
  std::uint32_t prime() const noexcept { return field_.prime(); }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::size_t nilpotency_bound() const noexcept { return loewy_bound_; }

  const std::vector<Path>& basis() const noexcept { return basis_; }

  /// Indices into basis() of the paths from i to j.
  const std::vector<std::size_t>& basis_between(int i, int j) const {
    return between_.at(static_cast<std::size_t>(i) * vertex_count() + j);
  }

  /// Coordinates of a path relative to basis_between(path.source, path.target).
  std::vector<std::uint32_t> reduce(const Path& path) const {
    const auto n = basis_between(path.source, path.target).size();
    if (path.length() >= loewy_bound_) return std::vector<std::uint32_t>(n, 0);
    return normal_forms_.at(path);
  }

  /// Position of basis element `index` inside basis_between(source, target).
  std::size_t local_index(std::size_t index) const { return local_index_.at(index); }

  Path idempotent(int v) const { return Path{v, v, {}}; }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.prime() == b.prime() && a.bq_ == b.bq_;
  }

 private:
  friend std::shared_ptr<const Algebra> build_algebra(const BoundQuiver&, std::uint32_t, const AlgebraLimits&);

  Algebra(BoundQuiver bq, std::uint32_t p) : bq_(std::move(bq)), field_(p) {}

  BoundQuiver bq_;
  PrimeField field_;
  std::size_t loewy_bound_ = 1;
  std::vector<Path> basis_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> local_index_;
  std::map<Path, std::vector<std::uint32_t>> normal_forms_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

namespace detail {

inline std::vector<Path> paths_up_to(const Quiver& q, std::size_t max_len, std::size_t max_count) {
  std::vector<Path> all;
  for (int v = 0; v < q.vertex_count(); ++v) all.push_back(Path{v, v, {}});
  std::size_t frontier_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t frontier_end = all.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        if (arr.source != all[i].target) continue;
        Path p = all[i];
        p.arrows.push_back(static_cast<int>(a));
        p.target = arr.target;
        all.push_back(std::move(p));
        if (all.size() > max_count) throw error(errc::infinite_dimensional, "path enumeration exceeds bound");
      }
    }
    frontier_begin = frontier_end;
  }
  return all;
}

inline int endpoint_source(const Quiver& q, const RelationTerm& t) { return q.arrow(t.arrows.front()).source; }
inline int endpoint_target(const Quiver& q, const RelationTerm& t) { return q.arrow(t.arrows.back()).target; }

inline void validate_relations(const BoundQuiver& bq) {
  const auto& q = bq.quiver;
  for (const auto& rel : bq.relations) {
    if (rel.empty()) throw error(errc::bad_relation, "empty relation");
    for (const auto& t : rel) {
      if (t.arrows.size() < 2) throw error(errc::bad_relation, "relation term of length < 2 (not admissible)");
      for (std::size_t k = 0; k < t.arrows.size(); ++k) {
        if (t.arrows[k] < 0 || static_cast<std::size_t>(t.arrows[k]) >= q.arrows().size())
          throw error(errc::bad_relation, "relation uses an unknown arrow");
        if (k > 0 && q.arrow(t.arrows[k - 1]).target != q.arrow(t.arrows[k]).source)
          throw error(errc::bad_relation, "relation term is not a path");
      }
      if (endpoint_source(q, t) != endpoint_source(q, rel.front()) || endpoint_target(q, t) != endpoint_target(q, rel.front()))
        throw error(errc::bad_relation, "relation mixes non-parallel paths");
    }
  }
}

// Spanning set of the ideal generated by the relations, with terms longer than `keep_below`
// discarded; only multiples u*r*v whose shortest term is shorter than `keep_below` are kept.
inline std::map<std::pair<int, int>, std::vector<std::map<Path, std::int64_t>>> ideal_elements(
    const BoundQuiver& bq, const std::vector<Path>& paths, std::size_t keep_below) {
  std::map<std::pair<int, int>, std::vector<std::map<Path, std::int64_t>>> out;
  const auto& q = bq.quiver;
  for (const auto& rel : bq.relations) {
    std::size_t min_len = rel.front().arrows.size();
    for (const auto& t : rel) min_len = std::min(min_len, t.arrows.size());
    const int rs = endpoint_source(q, rel.front());
    const int rt = endpoint_target(q, rel.front());
    for (const auto& u : paths) {
      if (u.target != rs || u.length() + min_len >= keep_below) continue;
      for (const auto& v : paths) {
        if (v.source != rt || u.length() + v.length() + min_len >= keep_below) continue;
        std::map<Path, std::int64_t> elem;
        for (const auto& t : rel) {
          Path p{u.source, v.target, u.arrows};
          p.arrows.insert(p.arrows.end(), t.arrows.begin(), t.arrows.end());
          p.arrows.insert(p.arrows.end(), v.arrows.begin(), v.arrows.end());
          if (p.length() >= keep_below) continue;
          elem[p] += t.coef;
        }
        out[{u.source, v.target}].push_back(std::move(elem));
      }
    }
  }
  return out;
}

// Paths sorted so that longer (then lexicographically larger) paths come first: pivots of the
// echelon form are then the largest paths and the surviving basis consists of short paths.
inline bool path_greater(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.arrows > b.arrows;
}

}  // namespace detail

inline AlgebraPtr build_algebra(const BoundQuiver& bq, std::uint32_t p, const AlgebraLimits& limits = {}) {
  detail::validate_relations(bq);
  const PrimeField field(p);
  const auto& q = bq.quiver;
  const int n = q.vertex_count();

  std::size_t bound = 0;
  for (std::size_t len = 1; len <= limits.max_path_length; ++len) {
    const auto paths = detail::paths_up_to(q, len, limits.max_paths);
    const auto ideal = detail::ideal_elements(bq, paths, len + 1);
    bool all_in_ideal = true;
    for (int i = 0; i < n && all_in_ideal; ++i) {
      for (int j = 0; j < n && all_in_ideal; ++j) {
        std::vector<Path> cols;
        for (const auto& pth : paths)
          if (pth.source == i && pth.target == j) cols.push_back(pth);
        std::vector<Path> top;
        for (const auto& pth : cols)
          if (pth.length() == len) top.push_back(pth);
        if (top.empty()) continue;
        auto it = ideal.find({i, j});
        const std::size_t nrel = it == ideal.end() ? 0 : it->second.size();
        Matrix rel(nrel, cols.size(), p);
        for (std::size_t r = 0; r < nrel; ++r)
          for (std::size_t c = 0; c < cols.size(); ++c) {
            auto f = it->second[r].find(cols[c]);
            if (f != it->second[r].end()) rel(r, c) = field.reduce(f->second);
          }
        for (const auto& t : top) {
          Matrix v(cols.size(), 1, p);
          v(static_cast<std::size_t>(std::find(cols.begin(), cols.end(), t) - cols.begin()), 0) = 1;
          if (!in_column_span(rel.transpose(), v)) {
            all_in_ideal = false;
            break;
          }
        }
      }
    }
    if (all_in_ideal) {
      bound = len;
      break;
    }
  }
  if (bound == 0) throw error(errc::infinite_dimensional, "no power of the arrow ideal lies in the relation ideal within the configured bound");

  auto alg = std::shared_ptr<Algebra>(new Algebra(bq, p));
  alg->loewy_bound_ = bound;
  alg->between_.assign(static_cast<std::size_t>(n) * n, {});
  const auto paths = detail::paths_up_to(q, bound - 1, limits.max_paths);
  const auto ideal = detail::ideal_elements(bq, paths, bound);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Path> cols;
      for (const auto& pth : paths)
        if (pth.source == i && pth.target == j) cols.push_back(pth);
      if (cols.empty()) continue;
      std::sort(cols.begin(), cols.end(), detail::path_greater);
      auto it = ideal.find({i, j});
      const std::size_t nrel = it == ideal.end() ? 0 : it->second.size();
      Matrix rel(nrel, cols.size(), p);
      for (std::size_t r = 0; r < nrel; ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
          auto f = it->second[r].find(cols[c]);
          if (f != it->second[r].end()) rel(r, c) = field.reduce(f->second);
        }
      const auto ech = echelon(rel);
      std::vector<int> pivot_row(cols.size(), -1);
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) pivot_row[ech.pivots[r]] = static_cast<int>(r);

      // Basis: non-pivot paths, listed shortest first.
      std::vector<std::size_t> free_cols;
      for (std::size_t c = cols.size(); c-- > 0;)
        if (pivot_row[c] < 0) free_cols.push_back(c);
      auto& local = alg->between_[static_cast<std::size_t>(i) * n + j];
      for (std::size_t k = 0; k < free_cols.size(); ++k) {
        local.push_back(alg->basis_.size());
        alg->local_index_.push_back(k);
        alg->basis_.push_back(cols[free_cols[k]]);
      }
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<std::uint32_t> coords(free_cols.size(), 0);
        if (pivot_row[c] < 0) {
          coords[static_cast<std::size_t>(std::find(free_cols.begin(), free_cols.end(), c) - free_cols.begin())] = 1;
        } else {
          for (std::size_t k = 0; k < free_cols.size(); ++k)
            coords[k] = field.neg(ech.reduced(static_cast<std::size_t>(pivot_row[c]), free_cols[k]));
        }
        alg->normal_forms_.emplace(cols[c], std::move(coords));
      }
    }
  }
  return alg;
}

/// One bound quiver realized over any prime on demand; realizations are cached.
class AlgebraFamily {
 public:
  explicit AlgebraFamily(BoundQuiver bq, AlgebraLimits limits = {}) : bq_(std::move(bq)), limits_(limits) {
    detail::validate_relations(bq_);
  }

  const BoundQuiver& presentation() const noexcept { return bq_; }

  AlgebraPtr at(std::uint32_t p) const {
    std::lock_guard lock(mu_);
    auto it = cache_.find(p);
    if (it == cache_.end()) it = cache_.emplace(p, build_algebra(bq_, p, limits_)).first;
    return it->second;
  }

 private:
  BoundQuiver bq_;
  AlgebraLimits limits_;
  mutable std::mutex mu_;
  mutable std::map<std::uint32_t, AlgebraPtr> cache_;
};

using AlgebraFamilyPtr = std::shared_ptr<const AlgebraFamily>;

}  // namespace ccm
