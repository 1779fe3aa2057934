#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "ccm/character.hpp"
#include "ccm/grassmann.hpp"
#include "ccm/homological.hpp"
#include "ccm/io.hpp"
#include "ccm/typea.hpp"

namespace ccm {

struct SuiteOptions {
  CharacterOptions character;
  std::vector<std::uint32_t> census_primes{2, 3};
  std::uint32_t structure_prime = 2;  // prime for module-engine cross-checks in type A
  unsigned jobs = 0;                  // 0: hardware concurrency
  std::uint64_t seed = 0x5eed;
};

using Task = std::function<std::vector<Verdict>()>;

/// Runs tasks on up to `jobs` threads and concatenates their verdicts in task order.
/// A task that throws becomes one failed verdict carrying the error text.
inline std::vector<Verdict> run_tasks(const std::vector<std::pair<std::string, Task>>& tasks, unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<Verdict>> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i].second();
      } catch (const std::exception& e) {
        out[i] = {Verdict{"error", tasks[i].first, false, "", "", e.what()}};
      }
    }
  };
  std::vector<std::thread> pool;
  const auto n = std::min<std::size_t>(jobs, tasks.size());
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<Verdict> all;
  for (auto& v : out) all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  return all;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem", "prop-a", "prop-b", "prop-c", "ind", "lemma-fibers", "remark"};
  return names;
}

// ---------------------------------------------------------------------------
// Algebra-level suites (any representation-finite algebra whose indecomposables are
// determined by their dimension vectors)

namespace detail {

inline std::string prefix(const std::string& scope, const std::string& inst) { return scope.empty() ? inst : scope + " " + inst; }

inline Verdict census_verdict(const FiberCensus& c, const std::string& instance) {
  Verdict v{"lemma-fibers", instance, c.passed, "", "", ""};
  std::string got, want;
  for (const auto& b : c.buckets) {
    const std::string key = "A" + to_string(b.dim_a) + "C" + to_string(b.dim_c);
    got += key + ":" + std::to_string(b.count) + " ";
    want += key + ":" + (b.is_zero_n ? std::string("empty") : std::to_string(b.expected)) + " ";
  }
  v.lhs = got + "total " + std::to_string(c.total);
  v.rhs = want + "total " + std::to_string(c.grassmannian);
  v.detail = "missing pairs " + std::to_string(c.missing_pairs) + (c.zero_n_empty ? "" : ", (0,N) bucket nonempty");
  return v;
}

}  // namespace detail

inline std::vector<std::pair<std::string, Task>> algebra_tasks(const std::string& suite, const AlgebraFamilyPtr& algs,
                                                              const std::string& scope, const SuiteOptions& opt) {
  std::vector<std::pair<std::string, Task>> tasks;
  const auto& gopt = opt.character.grassmann;
  const auto q0 = gopt.primes.front();
  const int nv = algs->presentation().quiver.vertex_count();

  if (suite == "prop-b" || suite == "prop-c") {
    for (int v = 0; v < nv; ++v)
      tasks.emplace_back(scope, [=] {
        auto r = suite == "prop-b" ? check_projective_f_identity(algs, v, gopt) : check_injective_f_identity(algs, v, gopt);
        r.instance = detail::prefix(scope, r.instance);
        return std::vector<Verdict>{r};
      });
    return tasks;
  }
  if (suite == "prop-a") {
    auto atlas = std::make_shared<IndecomposableAtlas>(algs, q0);
    for (const auto& m : atlas->at(q0)) {
      if (is_projective(m)) continue;
      const auto d = m.dims();
      tasks.emplace_back(scope, [=] {
        auto r = check_ar_f_identity(atlas->family(d), gopt);
        r.instance = detail::prefix(scope, r.instance);
        return std::vector<Verdict>{r};
      });
    }
    return tasks;
  }
  if (suite == "lemma-fibers") {
    for (auto q : opt.census_primes) {
      const auto alg = algs->at(q);
      for (const auto& n : enumerate_indecomposables(alg)) {
        if (is_projective(n)) continue;
        tasks.emplace_back(scope, [=] {
          const auto seq = ar_sequence(n);
          std::vector<Verdict> out;
          DimVector g(seq.middle.dims().size(), 0);
          while (true) {
            const auto inst = detail::prefix(scope, "N=" + to_string(n.dims()) + " g=" + to_string(g) + " q=" + std::to_string(q));
            out.push_back(detail::census_verdict(fiber_census(seq, g, q), inst));
            std::size_t v = 0;
            while (v < g.size() && ++g[v] > seq.middle.dims()[v]) g[v++] = 0;
            if (v == g.size()) break;
          }
          return out;
        });
      }
    }
    return tasks;
  }
  throw error(errc::invalid_input, "suite '" + suite + "' needs a type A scope (--typeA-rank)");
}

// ---------------------------------------------------------------------------
// Type A sweeps: every triangulation of the (n+3)-gon

inline std::vector<std::pair<std::string, Task>> typea_tasks(const std::string& suite, int n, const SuiteOptions& opt) {
  std::vector<std::pair<std::string, Task>> tasks;
  for (const auto& t : enumerate_triangulations(n)) {
    const auto model = algebra_from_triangulation(t);
    const auto scope = to_string(t);
    if (suite == "prop-a" || suite == "prop-b" || suite == "prop-c" || suite == "lemma-fibers") {
      auto more = algebra_tasks(suite, model.algebras, scope, opt);
      tasks.insert(tasks.end(), more.begin(), more.end());
      continue;
    }
    if (suite == "ind") {
      tasks.emplace_back(scope, [=] {
        auto v = check_injective_g_vectors(model.algebras->at(opt.character.grassmann.primes.front()));
        v.instance = scope;
        return std::vector<Verdict>{v};
      });
    }
    for (const auto& z : all_arcs(n)) {
      const auto inst = scope + " z=" + to_string(z);
      if (suite == "theorem") {
        tasks.emplace_back(inst, [=] { return std::vector<Verdict>{verify_theorem(ar_triangle(model, z).data, opt.character)}; });
      } else if (suite == "ind") {
        tasks.emplace_back(inst, [=] {
          const auto tr = ar_triangle(model, z);
          return std::vector<Verdict>{check_ind1(tr.data, opt.character), check_ind2(tr.data, opt.character)};
        });
      } else if (suite == "remark") {
        tasks.emplace_back(inst, [=] {
          DecomposeOptions d;
          d.seed = opt.seed;
          return std::vector<Verdict>{crosscheck_remark(model, z, opt.structure_prime, d).verdict};
        });
      } else {
        throw error(errc::invalid_input, "unknown suite '" + suite + "'");
      }
    }
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// Report

struct Report {
  std::string suite;
  nlohmann::json scope;
  nlohmann::json environment;
  std::vector<Verdict> verdicts;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; }));
  }
  bool all_passed() const { return passed() == verdicts.size(); }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["scope"] = scope;
    j["environment"] = environment;
    auto& list = j["instances"] = nlohmann::ordered_json::array();
    for (const auto& v : verdicts) {
      nlohmann::ordered_json e;
      e["check"] = v.check;
      e["instance"] = v.instance;
      e["passed"] = v.passed;
      if (!v.passed) {
        e["lhs"] = v.lhs;
        e["rhs"] = v.rhs;
      }
      if (!v.detail.empty()) e["detail"] = v.detail;
      list.push_back(std::move(e));
    }
    j["summary"] = {{"total", verdicts.size()}, {"passed", passed()}, {"failed", verdicts.size() - passed()}};
    return j;
  }
};

inline nlohmann::json environment_json(const SuiteOptions& opt) {
  return {{"primes", opt.character.grassmann.primes},
          {"census_primes", opt.census_primes},
          {"max_total_dim", opt.character.grassmann.max_total_dim},
          {"exchange_sign", opt.character.sign},
          {"seed", opt.seed}};
}

inline Report run_typea_suite(const std::string& suite, int n, const SuiteOptions& opt) {
  Report r{suite, {{"typeA_rank", n}}, environment_json(opt), {}};
  r.verdicts = run_tasks(typea_tasks(suite, n, opt), opt.jobs);
  return r;
}

inline Report run_algebra_suite(const std::string& suite, const Fixture& fx, const std::string& label, const SuiteOptions& opt) {
  Report r{suite, {{"algebra", label}, {"p", fx.p}}, environment_json(opt), {}};
  r.verdicts = run_tasks(algebra_tasks(suite, fx.algebras, "", opt), opt.jobs);
  return r;
}

}  // namespace ccm
