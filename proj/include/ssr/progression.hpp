#pragma once

#include <numeric>
#include <span>
#include <vector>

#include "ssr/checked.hpp"
#include "ssr/errors.hpp"

namespace ssr {

/// Result of the maximal-progression-coefficient search over a distance
/// vector D with respect to alpha: m_star divides gcd(alpha, #D), and
/// alpha = m_star * alpha_star, gamma = m_star * gamma_star.
struct LeastProgressionParams {
  Int m_star = 0;
  Int alpha_star = 0;
  Int gamma_star = 0;
};

/// Least positive integers with x * alpha = y * beta.
struct LeastPositiveSolution {
  Int x = 0;
  Int y = 0;
};

/// Combined step of the period recursion: the new least even vector period r
/// and prefix sum zeta, together with the (x, y) solution used.
struct OmegaResult {
  Int r = 0;
  Int zeta = 0;
  Int x = 0;
  Int y = 0;
};

namespace detail {

inline void require_distance_shape(std::span<const Int> d, Int alpha) {
  if (alpha <= 0) throw InvalidParams("alpha must be positive");
  if (d.empty()) throw InvalidParams("distance vector must be non-empty");
  Int prev = 0;
  for (Int value : d) {
    if (value <= 0) throw InvalidParams("distance entries must be positive");
    if (value < prev) throw InvalidParams("distance entries must be non-decreasing");
    prev = value;
  }
  if (d.back() > alpha) throw InvalidParams("distance entries must not exceed alpha");
}

}  // namespace detail

/// Tests whether m is a progression coefficient of D with respect to alpha:
/// with E = (D, D + alpha), beta = alpha/m and r = gamma/m, whether
/// e_{r+i} = d_i + beta for 1 <= i <= gamma.
inline bool is_progression_coefficient(std::span<const Int> d, Int alpha, Int m) {
  detail::require_distance_shape(d, alpha);
  const Int gamma = static_cast<Int>(d.size());
  if (m <= 0 || alpha % m != 0 || gamma % m != 0)
    throw NotADivisor("m must divide both alpha and gamma");
  const Int beta = alpha / m;
  const Int r = gamma / m;
  auto e = [&](Int index) {  // 1-based entry of E = (D, D + alpha)
    return index <= gamma ? d[static_cast<std::size_t>(index - 1)]
                          : checked_add(d[static_cast<std::size_t>(index - gamma - 1)], alpha);
  };
  for (Int i = 1; i <= gamma; ++i)
    if (e(r + i) != checked_add(d[static_cast<std::size_t>(i - 1)], beta)) return false;
  return true;
}

/// Tests divisors of gcd(alpha, gamma) in descending order and returns the
/// first (hence maximal) progression coefficient. m = 1 always succeeds.
inline LeastProgressionParams least_progression_parameters(std::span<const Int> d, Int alpha) {
  detail::require_distance_shape(d, alpha);
  const Int gamma = static_cast<Int>(d.size());
  const Int g = std::gcd(alpha, gamma);
  for (Int m = g; m >= 1; --m) {
    if (g % m != 0) continue;
    if (is_progression_coefficient(d, alpha, m)) return {m, alpha / m, gamma / m};
  }
  throw InternalError("m = 1 is always a progression coefficient");
}

/// Least positive integers x, y with x * alpha = y * beta: divide both sides
/// by gcd(alpha, beta).
inline LeastPositiveSolution least_positive_solution(Int alpha, Int beta) {
  if (alpha <= 0 || beta <= 0) throw InvalidParams("arguments must be positive");
  const Int g = std::gcd(alpha, beta);
  return {beta / g, alpha / g};
}

/// omega(alpha*, gamma*, j*, zeta*) = (r, zeta) with r = 2x gamma* + y j* and
/// zeta = y zeta* + r, where (x, y) solves x alpha* = y zeta* minimally.
inline OmegaResult omega(Int alpha_star, Int gamma_star, Int j_star, Int zeta_star) {
  if (alpha_star <= 0 || gamma_star <= 0 || j_star <= 0 || zeta_star <= 0)
    throw InvalidParams("omega arguments must be positive");
  const LeastPositiveSolution solution = least_positive_solution(alpha_star, zeta_star);
  OmegaResult out;
  out.x = solution.x;
  out.y = solution.y;
  out.r = checked_add(checked_mul(2, checked_mul(solution.x, gamma_star)),
                      checked_mul(solution.y, j_star));
  out.zeta = checked_add(checked_mul(solution.y, zeta_star), out.r);
  return out;
}

}  // namespace ssr
