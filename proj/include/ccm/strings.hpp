#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "ccm/algebra.hpp"
#include "ccm/error.hpp"
#include "ccm/grassmann.hpp"
#include "ccm/representation.hpp"

namespace ccm {

/// One step of a string: `direct` means the arrow points from the earlier vertex to the later.
struct StringLetter {
  int arrow = 0;
  bool direct = true;

  friend auto operator<=>(const StringLetter&, const StringLetter&) = default;
};

/// Walk v_0 - v_1 - ... - v_k in the quiver; letter i joins v_i and v_{i+1}.
struct StringDescriptor {
  std::vector<int> vertices;
  std::vector<StringLetter> letters;

  std::size_t length() const noexcept { return vertices.size(); }

  StringDescriptor inverse() const {
    StringDescriptor r{{vertices.rbegin(), vertices.rend()}, {}};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back({it->arrow, !it->direct});
    return r;
  }

  friend auto operator<=>(const StringDescriptor&, const StringDescriptor&) = default;
};

namespace detail {

// Monomial relations as arrow sequences; strings must avoid them (read in either direction).
inline std::vector<std::vector<int>> zero_relations(const BoundQuiver& bq) {
  std::vector<std::vector<int>> out;
  for (const auto& rel : bq.relations)
    if (rel.size() == 1) out.push_back(rel.front().arrows);
  return out;
}

}  // namespace detail

inline void validate_string(const BoundQuiver& bq, const StringDescriptor& s) {
  const auto& q = bq.quiver;
  if (s.vertices.empty() || s.letters.size() + 1 != s.vertices.size())
    throw error(errc::not_a_string, "a string needs k+1 vertices for k letters");
  for (int v : s.vertices)
    if (v < 0 || v >= q.vertex_count()) throw error(errc::not_a_string, "vertex out of range");
  for (std::size_t i = 0; i < s.letters.size(); ++i) {
    const auto& l = s.letters[i];
    if (l.arrow < 0 || static_cast<std::size_t>(l.arrow) >= q.arrows().size()) throw error(errc::not_a_string, "unknown arrow");
    const auto& arr = q.arrow(static_cast<std::size_t>(l.arrow));
    const int from = l.direct ? s.vertices[i] : s.vertices[i + 1];
    const int to = l.direct ? s.vertices[i + 1] : s.vertices[i];
    if (arr.source != from || arr.target != to) throw error(errc::not_a_string, "letter does not match its arrow's endpoints");
    if (i > 0 && s.letters[i - 1].arrow == l.arrow && s.letters[i - 1].direct != l.direct)
      throw error(errc::not_a_string, "string backtracks along an arrow");
  }
  for (const auto& rel : detail::zero_relations(bq)) {
    for (std::size_t i = 0; i + rel.size() <= s.letters.size(); ++i) {
      bool fwd = true, bwd = true;
      for (std::size_t k = 0; k < rel.size(); ++k) {
        const auto& a = s.letters[i + k];
        const auto& b = s.letters[i + rel.size() - 1 - k];
        fwd = fwd && a.direct && a.arrow == rel[k];
        bwd = bwd && !b.direct && b.arrow == rel[k];
      }
      if (fwd || bwd) throw error(errc::not_a_string, "string contains a zero relation");
    }
  }
}

inline DimVector string_dims(int vertex_count, const StringDescriptor& s) {
  DimVector d(static_cast<std::size_t>(vertex_count), 0);
  for (int v : s.vertices) ++d[static_cast<std::size_t>(v)];
  return d;
}

/// String module: one basis vector per position, each letter acting by a 1x1 identity block.
inline IntegralModule string_module(const BoundQuiver& bq, const StringDescriptor& s) {
  validate_string(bq, s);
  const auto& q = bq.quiver;
  const auto dims = string_dims(q.vertex_count(), s);
  std::vector<std::size_t> slot(s.vertices.size());
  std::vector<std::size_t> fill(dims.size(), 0);
  for (std::size_t i = 0; i < s.vertices.size(); ++i) slot[i] = fill[static_cast<std::size_t>(s.vertices[i])]++;
  IntegralModule m{bq, dims, {}};
  for (const auto& arr : q.arrows())
    m.maps.emplace_back(static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]),
                        std::vector<std::int64_t>(static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]), 0));
  for (std::size_t i = 0; i < s.letters.size(); ++i) {
    const auto& l = s.letters[i];
    const std::size_t from = l.direct ? i : i + 1, to = l.direct ? i + 1 : i;
    m.maps[static_cast<std::size_t>(l.arrow)][slot[to]][slot[from]] = 1;
  }
  return m;
}

/// Number of successor-closed position sets with dimension vector e (brute force over subsets).
inline std::uint64_t string_euler_char(const BoundQuiver& bq, const StringDescriptor& s, const DimVector& e) {
  validate_string(bq, s);
  const auto k = s.vertices.size();
  if (k > 30) throw error(errc::dimension_too_large, "string too long for subset enumeration");
  if (e.size() != static_cast<std::size_t>(bq.quiver.vertex_count())) throw error(errc::bad_dimension_vector, "wrong length");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    DimVector d(e.size(), 0);
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) ++d[static_cast<std::size_t>(s.vertices[i])];
    if (d != e) continue;
    bool closed = true;
    for (std::size_t i = 0; i < s.letters.size() && closed; ++i) {
      const std::size_t from = s.letters[i].direct ? i : i + 1, to = s.letters[i].direct ? i + 1 : i;
      if ((mask >> from & 1) && !(mask >> to & 1)) closed = false;
    }
    if (closed) ++count;
  }
  return count;
}

/// All strings with at most `max_length` positions, one representative per string/inverse pair.
inline std::vector<StringDescriptor> enumerate_strings(const BoundQuiver& bq, std::size_t max_length) {
  const auto& q = bq.quiver;
  std::set<StringDescriptor> seen;
  std::vector<StringDescriptor> out;
  std::vector<StringDescriptor> frontier;
  for (int v = 0; v < q.vertex_count(); ++v) frontier.push_back({{v}, {}});
  while (!frontier.empty()) {
    std::vector<StringDescriptor> next;
    for (auto& s : frontier) {
      const auto inv = s.inverse();
      const auto& canon = std::min(s, inv);
      if (seen.insert(canon).second) out.push_back(canon);
      if (s.length() >= max_length) continue;
      for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        for (bool direct : {true, false}) {
          const int from = direct ? arr.source : arr.target;
          if (from != s.vertices.back()) continue;
          StringDescriptor t = s;
          t.letters.push_back({static_cast<int>(a), direct});
          t.vertices.push_back(direct ? arr.target : arr.source);
          try {
            validate_string(bq, t);
          } catch (const error&) {
            continue;
          }
          next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace ccm
