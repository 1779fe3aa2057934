#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "ccm/character.hpp"
#include "ccm/typea.hpp"

using namespace ccm;

namespace {

BoundQuiver one_vertex() { return {Quiver(1, {}), {}}; }
BoundQuiver a2() { return {Quiver(2, {{"a", 0, 1}}), {}}; }
BoundQuiver a3() { return {Quiver(3, {{"a", 0, 1}, {"b", 1, 2}}), {}}; }
BoundQuiver cycle3() {
  return {Quiver(3, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}}),
          {{RelationTerm{1, {0, 1}}}, {RelationTerm{1, {1, 2}}}, {RelationTerm{1, {2, 0}}}}};
}

AlgebraFamilyPtr family(const BoundQuiver& bq) { return std::make_shared<AlgebraFamily>(bq); }

ModuleFamily simple_family(const AlgebraFamilyPtr& algs, int v) {
  return [algs, v](std::uint32_t q) { return simple(algs->at(q), v); };
}

LaurentPoly x(int i) { return LaurentPoly::variable(2, static_cast<std::size_t>(i - 1)); }
LaurentPoly c(std::int64_t k) { return LaurentPoly::constant(2, k); }
LaurentPoly inv(int i) { return monomial(-unit_vector(2, static_cast<std::size_t>(i - 1))); }

// The five cluster variables of type A2, written out directly.
std::vector<LaurentPoly> classical_a2() {
  return {x(1), x(2), (c(1) + x(2)) * inv(1), (c(1) + x(1) + x(2)) * inv(1) * inv(2), (c(1) + x(1)) * inv(2)};
}

bool same_set(std::vector<LaurentPoly> a, std::vector<LaurentPoly> b) {
  auto key = [](const LaurentPoly& p) { return p.to_string(); };
  std::vector<std::string> ka, kb;
  for (const auto& p : a) ka.push_back(key(p));
  for (const auto& p : b) kb.push_back(key(p));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

bool skew_symmetric(const IntMatrix& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[i][j] != -b[j][i]) return false;
  return true;
}

}  // namespace

TEST_CASE("exchange matrices") {
  CHECK(b_matrix(build_algebra(one_vertex(), 3)) == IntMatrix{{0}});
  const auto ba2 = b_matrix(build_algebra(a2(), 3));
  CHECK((ba2 == IntMatrix{{0, 1}, {-1, 0}} || ba2 == IntMatrix{{0, -1}, {1, 0}}));
  const IntMatrix cyc{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  IntMatrix neg = cyc;
  for (auto& row : neg)
    for (auto& v : row) v = -v;
  const auto bc = b_matrix(build_algebra(cycle3(), 3));
  CHECK((bc == cyc || bc == neg));
  for (const auto& bq : {a2(), a3(), cycle3()})
    for (int sign : {-1, 1}) CHECK(skew_symmetric(b_matrix(build_algebra(bq, 5), sign)));
  for (const auto& t : enumerate_triangulations(3)) CHECK(skew_symmetric(b_matrix(algebra_from_triangulation(t).algebras->at(2))));
}

TEST_CASE("g-vectors") {
  const auto alg = build_algebra(a2(), 3);
  CHECK(g_vector(Representation::zero(alg)) == ExpVector{0, 0});
  const auto semi = build_algebra({Quiver(2, {}), {}}, 3);
  CHECK(g_vector(simple(semi, 0)) == ExpVector{-1, 0});
  CHECK(g_vector(simple(semi, 1)) == ExpVector{0, -1});
  // S1: Hom(S1,S1) = 1, no extensions into S1. S2: Ext^1(S1,S2) = 1 from the arrow, Hom(S2,S2) = 1.
  CHECK(g_vector(simple(alg, 0)) == ExpVector{-1, 0});
  CHECK(g_vector(simple(alg, 1)) == ExpVector{1, -1});
}

TEST_CASE("g-vectors of injectives are minus unit vectors") {
  for (const auto& bq : {a2(), a3(), cycle3()}) CHECK(check_injective_g_vectors(build_algebra(bq, 3)).passed);
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_triangulations(n)) CHECK(check_injective_g_vectors(algebra_from_triangulation(t).algebras->at(2)).passed);
}

TEST_CASE("C' of the zero module is 1") {
  const auto algs = family(a2());
  const ModuleFamily zero = [algs](std::uint32_t q) { return Representation::zero(algs->at(q)); };
  CHECK(c_prime(zero).value == c(1));
}

TEST_CASE("C' over A2 gives the classical cluster variables") {
  const auto algs = family(a2());
  std::vector<LaurentPoly> values{x(1), x(2)};
  for (const auto& d : std::vector<DimVector>{{1, 0}, {0, 1}, {1, 1}}) {
    const ModuleFamily m = [algs, d](std::uint32_t q) {
      for (const auto& r : enumerate_indecomposables(algs->at(q)))
        if (r.dims() == d) return r;
      throw std::logic_error("missing indecomposable");
    };
    values.push_back(c_prime(m).value);
  }
  CHECK(same_set(values, classical_a2()));
}

TEST_CASE("C' over the one-vertex algebra") {
  const auto algs = family(one_vertex());
  const auto v = c_prime(simple_family(algs, 0)).value;
  LaurentPoly want = LaurentPoly::monomial({-1}, 2);
  CHECK(v == want);
}

TEST_CASE("decorated characters") {
  const auto algs = family(a2());
  const ModuleFamily zero = [algs](std::uint32_t q) { return Representation::zero(algs->at(q)); };
  CHECK(cluster_character({zero, {0, 1}}).value == x(2));
  CHECK(cluster_character({zero, {1, 0}}).value == x(1));
  const auto s1 = simple_family(algs, 0);
  CHECK(cluster_character({s1, {0, 0}}).value == c_prime(s1).value);
  CHECK(cluster_character({s1, {1, 2}}).value == c_prime(s1).value * x(1) * x(2) * x(2));
  CHECK(cluster_character({s1, {1, 2}}).g == g_vector(s1(2)) + ExpVector{1, 2});
  CHECK_THROWS_AS(cluster_character({s1, {-1, 0}}), error);
}

TEST_CASE("character equals x^ind times F(yhat)") {
  for (const auto& t : enumerate_triangulations(3)) {
    const auto m = algebra_from_triangulation(t);
    const auto b = b_matrix(m.algebras->at(2));
    for (const auto& z : all_arcs(3)) {
      const auto obj = e_module(m, std::vector<Arc>{z, sigma(z, 3)});
      const auto f = f_polynomial(obj.module);
      CHECK(cluster_character(obj).value == monomial(index_of(obj)) * substitute_yhat(f.value, b));
    }
  }
}

TEST_CASE("F-polynomial identities over A2") {
  const auto algs = family(a2());
  const auto s1 = simple_family(algs, 0);
  const auto ar = check_ar_f_identity(s1);
  CHECK(ar.passed);
  // (1 + y1)(1 + y2) = (1 + y2 + y1*y2) + y1
  CHECK(ar.lhs == "1 + y2 + y1 + y1*y2");
  CHECK(ar.lhs == ar.rhs);
  for (int v = 0; v < 2; ++v) {
    CHECK(check_projective_f_identity(algs, v).passed);
    CHECK(check_injective_f_identity(algs, v).passed);
  }
}

TEST_CASE("F-polynomial identities over A3 and the 3-cycle") {
  for (const auto& bq : {a3(), cycle3()}) {
    const auto algs = family(bq);
    auto atlas = std::make_shared<IndecomposableAtlas>(algs);
    for (const auto& m : atlas->at(2)) {
      if (is_projective(m)) continue;
      const auto v = check_ar_f_identity(atlas->family(m.dims()));
      CHECK(v.passed);
      if (!v.passed) WARN(v.lhs + " vs " + v.rhs);
    }
    for (int v = 0; v < 3; ++v) {
      CHECK(check_projective_f_identity(algs, v).passed);
      CHECK(check_injective_f_identity(algs, v).passed);
    }
  }
}

TEST_CASE("index identities: trivial and T-summand cases") {
  const auto algs = family(a2());
  const ModuleFamily zero = [algs](std::uint32_t q) { return Representation::zero(algs->at(q)); };
  const TriangleData nothing{{zero, {0, 0}}, {zero, {0, 0}}, {zero, {0, 0}}, "zero"};
  CHECK(check_ind1(nothing).passed);
  CHECK(check_ind2(nothing).passed);

  // Pentagon fan: Z = T_1 = [1,3].
  const auto m = algebra_from_triangulation(enumerate_triangulations(2).front());
  const auto tr = ar_triangle(m, Arc{1, 3});
  CHECK(tr.data.z.t_mult == ExpVector{1, 0});
  const auto v = check_ind2(tr.data);
  CHECK(v.passed);
  CHECK(index_of(tr.data.sigma_z) == ExpVector{-1, 0});
  const auto b = b_matrix(m.algebras->at(2));
  CHECK(index_of(tr.data.y) == multiply(b, ExpVector{1, 0}));
}

TEST_CASE("index identities on the pentagon fan") {
  const auto m = algebra_from_triangulation(enumerate_triangulations(2).front());
  for (const auto& z : all_arcs(2)) {
    const auto tr = ar_triangle(m, z);
    CHECK(check_ind1(tr.data).passed);
    CHECK(check_ind2(tr.data).passed);
    if (!m.t.contains(z)) CHECK(index_of(tr.data.y) == index_of(tr.data.sigma_z) + index_of(tr.data.z));
  }
}

TEST_CASE("multiplication formula on the pentagon") {
  for (const auto& t : enumerate_triangulations(2)) {
    const auto m = algebra_from_triangulation(t);
    for (const auto& z : all_arcs(2)) {
      const auto v = verify_theorem(ar_triangle(m, z).data);
      CHECK(v.passed);
      if (!v.passed) WARN(v.instance + ": " + v.lhs + " vs " + v.rhs);
    }
  }
}

TEST_CASE("the character values of the fan are the classical cluster variables") {
  const auto m = algebra_from_triangulation(Triangulation{2, {{1, 3}, {1, 4}}});
  std::vector<LaurentPoly> values;
  for (const auto& z : all_arcs(2)) values.push_back(cluster_character(e_module(m, z)).value);
  CHECK(same_set(values, classical_a2()));
}

TEST_CASE("dropping T-summands breaks the identity over the 3-cycle") {
  const auto m = algebra_from_triangulation(Triangulation{3, {{1, 3}, {1, 5}, {3, 5}}});
  REQUIRE(m.presentation().relations.size() == 3);
  int undecorated_failures = 0;
  for (const auto& z : all_arcs(3)) {
    const auto tr = ar_triangle(m, z);
    CHECK(verify_theorem(tr.data).passed);
    const bool touches_t = m.t.contains(z) || m.t.contains(tr.sigma_z) ||
                           std::any_of(tr.y_summands.begin(), tr.y_summands.end(), [&](const Arc& a) { return m.t.contains(a); });
    const auto u = verify_undecorated(tr.data);
    if (!u.passed) {
      ++undecorated_failures;
      CHECK(u.lhs != u.rhs);
      CHECK(touches_t);
    }
  }
  CHECK(undecorated_failures > 0);
}

TEST_CASE("only one sign and orientation pairing satisfies the identities") {
  auto failures = [](int sign, bool follow) {
    CharacterOptions opt;
    opt.sign = sign;
    int bad = 0;
    for (const auto& t : enumerate_triangulations(2)) {
      const auto m = algebra_from_triangulation(t, follow);
      for (const auto& z : all_arcs(2)) {
        const auto tr = ar_triangle(m, z);
        if (!verify_theorem(tr.data, opt).passed || !check_ind1(tr.data, opt).passed) ++bad;
      }
    }
    return bad;
  };
  CHECK(failures(exchange_sign, arrows_follow_vertex_order) == 0);
  CHECK(failures(-exchange_sign, arrows_follow_vertex_order) > 0);
  CHECK(failures(exchange_sign, !arrows_follow_vertex_order) > 0);
  CHECK(failures(-exchange_sign, !arrows_follow_vertex_order) > 0);
}

TEST_CASE("memoized families realize each prime once") {
  int calls = 0;
  const auto algs = family(a2());
  const auto f = memoize([&calls, algs](std::uint32_t q) {
    ++calls;
    return simple(algs->at(q), 0);
  });
  f(2);
  f(2);
  f(3);
  CHECK(calls == 2);
}
