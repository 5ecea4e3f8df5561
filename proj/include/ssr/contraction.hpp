#pragma once

#include <string>
#include <vector>

#include "ssr/checked.hpp"
#include "ssr/errors.hpp"
#include "ssr/run_vector.hpp"

namespace ssr {

/// The unique decomposition of a run vector in M* into proper odd components:
/// odd-length blocks whose interior even positions all equal 1, each ending
/// the vector, followed by a single coordinate, or followed by an entry > 1.
/// r_indexes satisfy r_0 = 0 < r_1 < ... < r_{I+1} = J+1 and component m
/// (1-based) spans entries (r_{m-1}, r_m]. The index ranges are authoritative;
/// components are materialized for display and tests.
struct ComponentDecomposition {
  std::vector<Int> r_indexes;
  std::vector<std::vector<Int>> components;
};

/// The distance vector D(V) = (tau(c_1), ..., tau(c_gamma)) over the c-indexes
/// of V, together with alpha = delta(V) + 1. d is empty when V has no entry
/// equal to 1 strictly inside (positions 2..J).
struct DistanceVectorWithAlpha {
  std::vector<Int> d;
  Int alpha = 0;
  std::vector<Int> c_indexes;

  bool empty() const { return d.empty(); }
};

namespace detail {

inline void require_m_star(const RunVector& v) {
  if (!in_M_star(v)) throw NotInMStar("operation requires first entry > 1");
}

}  // namespace detail

/// next(r) = r + 2t + 1 where t >= 0 is maximal with v_{r+2i} = 1 for
/// 1 <= i <= t and r + 2t <= J. Steps from one component boundary to the next.
inline Int next_index(const RunVector& v, Int r) {
  detail::require_m_star(v);
  if (r < 0 || r > v.J()) throw IndexOutOfRange("next index requires 0 <= r <= J");
  Int t = 0;
  while (r + 2 * (t + 1) <= v.J() && v.at(r + 2 * (t + 1)) == 1) ++t;
  return r + 2 * t + 1;
}

inline ComponentDecomposition component_decomposition(const RunVector& v) {
  detail::require_m_star(v);
  ComponentDecomposition out;
  out.r_indexes.push_back(0);
  while (out.r_indexes.back() < v.size()) {
    const Int r = out.r_indexes.back();
    const Int s = (r <= v.J()) ? next_index(v, r) : v.size();
    out.r_indexes.push_back(s);
    out.components.emplace_back(v.entries().begin() + r, v.entries().begin() + s);
  }
  detail::require(out.r_indexes.back() == v.size(), "r-indexes end at J+1");
  return out;
}

/// Contraction pi(V): each proper odd component collapses to its distance
/// measure, with one added on the last. Always lands back in M.
inline RunVector contract(const RunVector& v) {
  const ComponentDecomposition parts = component_decomposition(v);
  std::vector<Int> contracted;
  contracted.reserve(parts.components.size());
  for (const auto& g : parts.components) contracted.push_back(delta(g));
  contracted.back() = checked_add(contracted.back(), 1);
  return RunVector(std::move(contracted));
}

/// D(V) with alpha. The c-index scan starts after position c_i + 1, so an
/// entry 1 immediately following a c-index is skipped; position 1 is never a
/// c-index because V in M* forces v_1 > 1.
inline DistanceVectorWithAlpha distance_vector(const RunVector& v) {
  detail::require_m_star(v);
  DistanceVectorWithAlpha out;
  out.alpha = checked_add(delta(v), 1);
  bool has_inner_one = false;
  for (Int i = 2; i <= v.J() && !has_inner_one; ++i) has_inner_one = v.at(i) == 1;
  if (!has_inner_one) return out;
  Int c = 0;
  for (;;) {
    Int candidate = c + 2;
    while (candidate <= v.J() && v.at(candidate) != 1) ++candidate;
    if (candidate > v.J()) break;
    c = candidate;
    out.c_indexes.push_back(c);
    out.d.push_back(tau(v, c));
  }
  detail::require(!out.d.empty(), "inner 1-entry implies a c-index");
  return out;
}

/// Embraced rendering, e.g. "((2,1,2),(2),(3,1,3))".
inline std::string to_string(const ComponentDecomposition& decomposition) {
  std::string out = "(";
  for (std::size_t i = 0; i < decomposition.components.size(); ++i) {
    if (i > 0) out += ',';
    out += format_vector(decomposition.components[i]);
  }
  out += ')';
  return out;
}

}  // namespace ssr
