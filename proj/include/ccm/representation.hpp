#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ccm/algebra.hpp"
#include "ccm/error.hpp"
#include "ccm/field.hpp"

namespace ccm {

/// Dimension vector of a representation, one entry per vertex.
using DimVector = std::vector<int>;

/// Representation of a bound quiver: arrow a: i -> j acts by a matrix M_j x M_i.
class Representation {
 public:
  Representation() = default;

  Representation(AlgebraPtr algebra, DimVector dims, std::vector<Matrix> maps)
      : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
    validate();
  }

  static Representation zero(AlgebraPtr algebra) {
    const auto& q = algebra->quiver();
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) maps.emplace_back(0, 0, algebra->prime());
    return Representation(algebra, DimVector(static_cast<std::size_t>(q.vertex_count()), 0), std::move(maps));
  }

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::uint32_t prime() const noexcept { return algebra_->prime(); }
  const DimVector& dims() const noexcept { return dims_; }
  std::size_t dim(int v) const { return static_cast<std::size_t>(dims_.at(static_cast<std::size_t>(v))); }
  int total_dim() const noexcept { return std::accumulate(dims_.begin(), dims_.end(), 0); }
  bool is_zero() const noexcept { return total_dim() == 0; }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }

  /// Action of a path (traversal order), a dims[target] x dims[source] matrix.
  Matrix evaluate(const Path& path) const {
    Matrix m = Matrix::identity(dim(path.source), prime());
    for (int a : path.arrows) m = maps_.at(static_cast<std::size_t>(a)) * m;
    return m;
  }

 private:
  void validate() const {
    if (!algebra_) throw error(errc::invalid_input, "representation without algebra");
    const auto& q = algebra_->quiver();
    if (dims_.size() != static_cast<std::size_t>(q.vertex_count()))
      throw error(errc::invalid_input, "dimension vector length differs from vertex count");
    for (int d : dims_)
      if (d < 0) throw error(errc::invalid_input, "negative dimension");
    if (maps_.size() != q.arrows().size()) throw error(errc::invalid_input, "one matrix per arrow required");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
      const auto& arr = q.arrow(a);
      if (maps_[a].rows() != dim(arr.target) || maps_[a].cols() != dim(arr.source) || maps_[a].prime() != prime())
        throw error(errc::invalid_input, "matrix for arrow '" + arr.id + "' has the wrong shape");
    }
    const auto& f = algebra_->field();
    for (const auto& rel : algebra_->presentation().relations) {
      const auto& first = rel.front();
      const int s = q.arrow(first.arrows.front()).source;
      const int t = q.arrow(first.arrows.back()).target;
      Matrix sum(dim(t), dim(s), prime());
      for (const auto& term : rel) sum = sum + evaluate(Path{s, t, term.arrows}).scaled(f.reduce(term.coef));
      if (!sum.is_zero()) throw error(errc::invalid_input, "representation violates a relation");
    }
  }

  AlgebraPtr algebra_;
  DimVector dims_;
  std::vector<Matrix> maps_;
};

inline void require_same_algebra(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra() && !(*m.algebra() == *n.algebra()))
    throw error(errc::algebra_mismatch, "representations over different algebras");
}

/// Module homomorphism given by one linear map per vertex (dims_target x dims_source).
struct Morphism {
  std::vector<Matrix> components;

  const Matrix& at(int v) const { return components.at(static_cast<std::size_t>(v)); }

  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

inline Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components[v] * f.components[v]);
  return h;
}

inline Morphism identity_morphism(const Representation& m) {
  Morphism id;
  for (int v = 0; v < m.algebra()->vertex_count(); ++v) id.components.push_back(Matrix::identity(m.dim(v), m.prime()));
  return id;
}

inline Morphism zero_morphism(const Representation& from, const Representation& to) {
  Morphism z;
  for (int v = 0; v < from.algebra()->vertex_count(); ++v) z.components.emplace_back(to.dim(v), from.dim(v), from.prime());
  return z;
}

inline Morphism linear_combination(const std::vector<Morphism>& basis, const std::vector<std::uint32_t>& coeffs,
                                   const Morphism& zero) {
  Morphism r = zero;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t v = 0; v < r.components.size(); ++v)
      r.components[v] = r.components[v] + basis[k].components[v].scaled(coeffs[k]);
  }
  return r;
}

inline bool is_module_map(const Representation& from, const Representation& to, const Morphism& f) {
  const auto& q = from.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(to.map(a) * f.at(arr.source) == f.at(arr.target) * from.map(a))) return false;
  }
  return true;
}

inline bool is_injective(const Morphism& f) {
  for (const auto& c : f.components)
    if (rank(c) != c.cols()) return false;
  return true;
}

inline bool is_surjective(const Morphism& f) {
  for (const auto& c : f.components)
    if (rank(c) != c.rows()) return false;
  return true;
}

/// A representation together with a structural map to or from another one.
struct Embedded {
  Representation module;
  Morphism map;
};

/// Subrepresentation spanned at each vertex by the columns of bases[v]; the columns must be
/// independent and the span closed under every arrow.
inline Embedded submodule(const Representation& m, const std::vector<Matrix>& bases) {
  const auto& alg = m.algebra();
  const auto& q = alg->quiver();
  DimVector dims;
  for (const auto& b : bases) dims.push_back(static_cast<int>(b.cols()));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& bs = bases.at(static_cast<std::size_t>(arr.source));
    const auto& bt = bases.at(static_cast<std::size_t>(arr.target));
    auto x = solve(bt, m.map(a) * bs);
    if (!x) throw error(errc::invalid_input, "subspace family is not closed under the arrows");
    maps.push_back(*x);
  }
  return {Representation(alg, dims, std::move(maps)), Morphism{bases}};
}

/// Complete the columns of `basis` to a basis of F_p^n using standard vectors (greedy, in order).
inline Matrix complement_columns(const Matrix& basis, std::size_t n) {
  Matrix acc = basis;
  Matrix comp(n, 0, basis.prime());
  for (std::size_t i = 0; i < n && acc.cols() < n; ++i) {
    Matrix e(n, 1, basis.prime());
    e(i, 0) = 1;
    if (!in_column_span(acc, e)) {
      acc = Matrix::hstack(acc, e);
      comp = Matrix::hstack(comp, e);
    }
  }
  return comp;
}

/// Quotient by the subrepresentation spanned by bases[v]; returns the quotient and the projection.
inline Embedded quotient(const Representation& m, const std::vector<Matrix>& bases) {
  const auto& alg = m.algebra();
  const auto& q = alg->quiver();
  const int n = alg->vertex_count();
  std::vector<Matrix> comps, projections;
  DimVector dims;
  for (int v = 0; v < n; ++v) {
    const auto& b = bases.at(static_cast<std::size_t>(v));
    Matrix c = complement_columns(b, m.dim(v));
    Matrix full = Matrix::hstack(b, c);
    auto inv = inverse(full);
    if (!inv) throw error(errc::invalid_input, "quotient: subspace basis not independent");
    projections.push_back(inv->block(b.cols(), 0, c.cols(), m.dim(v)));
    comps.push_back(std::move(c));
    dims.push_back(static_cast<int>(comps.back().cols()));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    maps.push_back(projections[static_cast<std::size_t>(arr.target)] * m.map(a) * comps[static_cast<std::size_t>(arr.source)]);
  }
  return {Representation(alg, dims, std::move(maps)), Morphism{std::move(projections)}};
}

inline Embedded kernel(const Representation& from, const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& c : f.components) bases.push_back(kernel_basis(c));
  return submodule(from, bases);
}

inline Embedded image(const Representation& to, const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& c : f.components) bases.push_back(column_basis(c));
  return submodule(to, bases);
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_algebra(a, b);
  const auto& q = a.algebra()->quiver();
  DimVector dims;
  for (std::size_t v = 0; v < a.dims().size(); ++v) dims.push_back(a.dims()[v] + b.dims()[v]);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& arr = q.arrow(k);
    Matrix m(static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]),
             static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]), a.prime());
    m.set_block(0, 0, a.map(k));
    m.set_block(a.dim(arr.target), a.dim(arr.source), b.map(k));
    maps.push_back(std::move(m));
  }
  return Representation(a.algebra(), dims, std::move(maps));
}

inline Representation direct_sum(const std::vector<Representation>& parts, const AlgebraPtr& alg) {
  Representation acc = Representation::zero(alg);
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

/// 0 -> left --inject--> middle --project--> right -> 0
struct ShortExactSeq {
  Representation left;
  Representation middle;
  Representation right;
  Morphism inject;
  Morphism project;

  /// Vertexwise exactness plus the module-map property of both morphisms.
  bool is_exact() const {
    if (!is_module_map(left, middle, inject) || !is_module_map(middle, right, project)) return false;
    if (!is_injective(inject) || !is_surjective(project)) return false;
    for (std::size_t v = 0; v < inject.components.size(); ++v) {
      if (!(project.components[v] * inject.components[v]).is_zero()) return false;
      if (rank(inject.components[v]) + rank(project.components[v]) != middle.dim(static_cast<int>(v))) return false;
    }
    return true;
  }
};

// ---------------------------------------------------------------------------
// Canonical modules

inline Representation simple(const AlgebraPtr& alg, int v) {
  DimVector dims(static_cast<std::size_t>(alg->vertex_count()), 0);
  dims.at(static_cast<std::size_t>(v)) = 1;
  std::vector<Matrix> maps;
  for (const auto& arr : alg->quiver().arrows())
    maps.emplace_back(static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]),
                      static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]), alg->prime());
  return Representation(alg, dims, std::move(maps));
}

/// P_v: at vertex w the span of basis paths v -> w; arrows act by right concatenation.
inline Representation projective(const AlgebraPtr& alg, int v) {
  const int n = alg->vertex_count();
  const auto& q = alg->quiver();
  DimVector dims;
  for (int w = 0; w < n; ++w) dims.push_back(static_cast<int>(alg->basis_between(v, w).size()));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& src = alg->basis_between(v, arr.source);
    Matrix m(alg->basis_between(v, arr.target).size(), src.size(), alg->prime());
    for (std::size_t c = 0; c < src.size(); ++c) {
      Path p = alg->basis()[src[c]];
      p.arrows.push_back(static_cast<int>(a));
      p.target = arr.target;
      const auto coords = alg->reduce(p);
      for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = coords[r];
    }
    maps.push_back(std::move(m));
  }
  return Representation(alg, dims, std::move(maps));
}

/// I_v: at vertex w the dual of the span of basis paths w -> v.
inline Representation injective(const AlgebraPtr& alg, int v) {
  const int n = alg->vertex_count();
  const auto& q = alg->quiver();
  DimVector dims;
  for (int w = 0; w < n; ++w) dims.push_back(static_cast<int>(alg->basis_between(w, v).size()));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& src = alg->basis_between(arr.source, v);
    const auto& tgt = alg->basis_between(arr.target, v);
    Matrix m(tgt.size(), src.size(), alg->prime());
    // (a.f)(b') = f(a b') for b' a path target(a) -> v.
    for (std::size_t r = 0; r < tgt.size(); ++r) {
      Path p = alg->basis()[tgt[r]];
      p.arrows.insert(p.arrows.begin(), static_cast<int>(a));
      p.source = arr.source;
      const auto coords = alg->reduce(p);
      for (std::size_t c = 0; c < coords.size(); ++c) m(r, c) = coords[c];
    }
    maps.push_back(std::move(m));
  }
  return Representation(alg, dims, std::move(maps));
}

/// Sum of the images of all arrows, as a subrepresentation.
inline Embedded radical(const Representation& m) {
  const auto& alg = m.algebra();
  const auto& q = alg->quiver();
  std::vector<Matrix> bases;
  for (int v = 0; v < alg->vertex_count(); ++v) {
    Matrix span(m.dim(v), 0, m.prime());
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
      if (q.arrow(a).target == v) span = Matrix::hstack(span, m.map(a));
    bases.push_back(column_basis(span));
  }
  return submodule(m, bases);
}

/// Intersection of the kernels of all outgoing arrows, as a subrepresentation.
inline Embedded socle(const Representation& m) {
  const auto& alg = m.algebra();
  const auto& q = alg->quiver();
  std::vector<Matrix> bases;
  for (int v = 0; v < alg->vertex_count(); ++v) {
    Matrix stacked(0, m.dim(v), m.prime());
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
      if (q.arrow(a).source == v) stacked = Matrix::vstack(stacked, m.map(a));
    bases.push_back(kernel_basis(stacked));
  }
  return submodule(m, bases);
}

inline Embedded top(const Representation& m) { return quotient(m, radical(m).map.components); }

/// Quotient by the socle component sitting at vertex j (I_j / S_j for an injective I_j).
inline Embedded socle_quotient(const Representation& m, int j) {
  auto soc = socle(m).map.components;
  for (int v = 0; v < m.algebra()->vertex_count(); ++v)
    if (v != j) soc[static_cast<std::size_t>(v)] = Matrix(m.dim(v), 0, m.prime());
  return quotient(m, soc);
}

inline Embedded sub_quotient(const Representation& m, const std::vector<Matrix>& bases) { return quotient(m, bases); }

}  // namespace ccm
