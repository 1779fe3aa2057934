#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccm/algebra.hpp"
#include "ccm/error.hpp"
#include "ccm/grassmann.hpp"
#include "ccm/typea.hpp"

namespace ccm {

/// Algebra and named modules read from a JSON fixture.
///
/// `p` is the working prime for structural computations. Module matrices are stored as the
/// integers in the file, each entry reduced mod p; realizing a module over another counting
/// prime reduces those same integers.
struct Fixture {
  std::uint32_t p = 2;
  AlgebraFamilyPtr algebras;
  std::map<std::string, IntegralModule> modules;

  AlgebraPtr algebra() const { return algebras->at(p); }

  ModuleFamily family(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw error(errc::invalid_input, "no module named '" + name + "'");
    auto algs = algebras;
    auto im = it->second;
    return [algs, im](std::uint32_t q) { return im.over(algs->at(q)); };
  }
};

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw error(errc::invalid_input, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const nlohmann::json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw error(errc::invalid_input, std::string("field '") + what + "' has the wrong type");
  }
}

}  // namespace detail

inline Fixture parse_fixture(const nlohmann::json& j) {
  Fixture fx;
  const auto p = detail::get<std::int64_t>(detail::field(j, "p"), "p");
  if (p < 2 || p >= (std::int64_t{1} << 31) || !PrimeField::is_prime(static_cast<std::uint32_t>(p)))
    throw error(errc::invalid_input, "p must be a prime below 2^31");
  fx.p = static_cast<std::uint32_t>(p);
  const auto nv = detail::get<int>(detail::field(j, "vertices"), "vertices");
  if (nv < 0) throw error(errc::invalid_input, "negative vertex count");

  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    for (const auto& a : detail::field(j, "arrows")) {
      const auto id = detail::get<std::string>(detail::field(a, "id"), "id");
      const auto s = detail::get<int>(detail::field(a, "src"), "src");
      const auto t = detail::get<int>(detail::field(a, "tgt"), "tgt");
      arrows.push_back({id, s - 1, t - 1});
    }
  }
  Quiver q(nv, std::move(arrows));

  std::vector<Relation> relations;
  if (j.contains("relations")) {
    for (const auto& rel : j.at("relations")) {
      Relation r;
      for (const auto& term : rel) {
        RelationTerm rt;
        rt.coef = term.contains("coef") ? detail::get<std::int64_t>(term.at("coef"), "coef") : 1;
        for (const auto& id : detail::field(term, "path")) rt.arrows.push_back(static_cast<int>(q.arrow_index(detail::get<std::string>(id, "path"))));
        r.push_back(std::move(rt));
      }
      relations.push_back(std::move(r));
    }
  }
  fx.algebras = std::make_shared<AlgebraFamily>(BoundQuiver{q, std::move(relations)});
  const auto& bq = fx.algebras->presentation();

  if (j.contains("modules")) {
    for (const auto& [name, mj] : j.at("modules").items()) {
      IntegralModule im{bq, detail::get<DimVector>(detail::field(mj, "dims"), "dims"), {}};
      if (im.dims.size() != static_cast<std::size_t>(nv)) throw error(errc::invalid_input, "module '" + name + "': dims has the wrong length");
      for (int d : im.dims)
        if (d < 0) throw error(errc::invalid_input, "module '" + name + "': negative dimension");
      const auto maps = mj.contains("maps") ? mj.at("maps") : nlohmann::json::object();
      for (const auto& [id, _] : maps.items()) q.arrow_index(id);
      for (const auto& arr : q.arrows()) {
        const auto rows = static_cast<std::size_t>(im.dims[static_cast<std::size_t>(arr.target)]);
        const auto cols = static_cast<std::size_t>(im.dims[static_cast<std::size_t>(arr.source)]);
        std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
        if (maps.contains(arr.id)) {
          auto given = detail::get<std::vector<std::vector<std::int64_t>>>(maps.at(arr.id), "maps");
          if (given.size() != rows) throw error(errc::invalid_input, "module '" + name + "': matrix '" + arr.id + "' has the wrong shape");
          for (auto& row : given) {
            if (row.size() != cols) throw error(errc::invalid_input, "module '" + name + "': matrix '" + arr.id + "' has the wrong shape");
            for (auto& x : row) x = ((x % static_cast<std::int64_t>(fx.p)) + fx.p) % fx.p;
          }
          m = std::move(given);
        }
        im.maps.push_back(std::move(m));
      }
      im.over(fx.algebra());  // validates the relations at the working prime
      fx.modules.emplace(name, std::move(im));
    }
  }
  return fx;
}

inline Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::invalid_input, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(errc::invalid_input, std::string("malformed JSON: ") + e.what());
  }
  return parse_fixture(j);
}

/// `[[1,3],[1,4]]` -> arcs
inline std::vector<Arc> parse_arcs(const std::string& text, int n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw error(errc::invalid_input, "malformed arc list '" + text + "'");
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number()) j = nlohmann::json::array({j});
  std::vector<Arc> out;
  for (const auto& a : j) {
    const auto pair = detail::get<std::vector<int>>(a, "arc");
    if (pair.size() != 2) throw error(errc::invalid_input, "an arc has two endpoints");
    Arc arc{std::min(pair[0], pair[1]), std::max(pair[0], pair[1])};
    if (!is_diagonal(arc, n)) throw error(errc::invalid_input, "not a diagonal of the " + std::to_string(polygon_size(n)) + "-gon: " + to_string(arc));
    out.push_back(arc);
  }
  return out;
}

inline Triangulation parse_triangulation(const std::string& text, int n) {
  Triangulation t{n, parse_arcs(text, n)};
  std::sort(t.arcs.begin(), t.arcs.end());
  if (!is_triangulation(t)) throw error(errc::invalid_input, "not a triangulation: " + text);
  return t;
}

}  // namespace ccm
