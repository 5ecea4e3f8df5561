#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ssr/bitstring.hpp"
#include "ssr/checked.hpp"
#include "ssr/contraction.hpp"
#include "ssr/errors.hpp"
#include "ssr/generator.hpp"
#include "ssr/progression.hpp"
#include "ssr/run_vector.hpp"
#include "ssr/simulator.hpp"

namespace ssr {

/// Repeated contraction Q_p, Q_{p-1} = pi(Q_p), ..., Q_0. levels[i] holds Q_i,
/// so levels.front() is Q_0 and levels.back() the input Q_p.
struct ReductionChain {
  Int p = 0;
  std::vector<RunVector> levels;

  const RunVector& q(Int i) const { return levels[static_cast<std::size_t>(i)]; }
};

/// Everything computed for one induction level i >= 1 of the period
/// recursion.
struct LevelDynamics {
  Int level = 0;
  DistanceVectorWithAlpha distance;  // D(Q_i) with alpha_i
  // Filled only when D(Q_i) is non-empty:
  Int m_star = 0;
  Int alpha_star = 0;
  Int gamma_star = 0;
  Int x = 0;
  Int y = 0;
  Int j = 0;     // j_i
  Int zeta = 0;  // zeta_i
};

/// The dynamical parameters j_0..j_p and zeta_0..zeta_p of a reduction chain.
/// zeta_p is the minimal period of the generated sequence and j_p the least
/// even vector period of its run-length stream.
struct DynamicalParams {
  CyclicParams base;  // (j_0, zeta_0), cyclic parameters of extension(Q_0)
  std::vector<Int> j;
  std::vector<Int> zeta;
  std::vector<LevelDynamics> levels;  // levels[i-1] describes level i
};

inline ReductionChain reduction_chain(const RunVector& q, Int p) {
  if (p < 0) throw InvalidParams("p must be >= 0");
  if (!in_M_p_plus(q, p)) throw NotInMpPlus("reduction chain requires membership in M_p^+");
  ReductionChain chain;
  chain.p = p;
  chain.levels.assign(static_cast<std::size_t>(p) + 1, q);
  for (Int i = p; i >= 1; --i) {
    const RunVector contracted = contract(chain.q(i));
    detail::require(in_M_p_plus(contracted, i - 1), "contraction keeps M_p^+ membership");
    chain.levels[static_cast<std::size_t>(i - 1)] = contracted;
  }
  return chain;
}

inline DynamicalParams dynamical_parameters(const ReductionChain& chain) {
  DynamicalParams dyn;
  dyn.base = cyclic_parameters(extension(chain.q(0)));
  dyn.j.push_back(dyn.base.j);
  dyn.zeta.push_back(dyn.base.zeta);
  for (Int i = 1; i <= chain.p; ++i) {
    LevelDynamics level;
    level.level = i;
    level.distance = distance_vector(chain.q(i));
    if (level.distance.empty()) {
      level.j = dyn.j.back();
      level.zeta = checked_add(dyn.zeta.back(), level.j);
    } else {
      const LeastProgressionParams progression =
          least_progression_parameters(level.distance.d, level.distance.alpha);
      level.m_star = progression.m_star;
      level.alpha_star = progression.alpha_star;
      level.gamma_star = progression.gamma_star;
      const OmegaResult next =
          omega(progression.alpha_star, progression.gamma_star, dyn.j.back(), dyn.zeta.back());
      level.x = next.x;
      level.y = next.y;
      level.j = next.r;
      level.zeta = next.zeta;
    }
    dyn.j.push_back(level.j);
    dyn.zeta.push_back(level.zeta);
    dyn.levels.push_back(std::move(level));
  }
  return dyn;
}

/// Adjusted parameters such that the window weights of the generated sequence
/// attain both extremes k* and k* + p* + 1, leaving the register equation
/// unchanged.
struct NormalizedParams {
  Int k_star = 0;
  Int p_star = 0;
};

/// Simulates 2n steps, takes x = min and y = max of the weight parameters and
/// returns (k + x, y - x - 1). Requires k <= w(A) <= k+p+1; throws
/// ConstantWeight in the degenerate x = y case.
inline NormalizedParams normalize_parameters(const BitString& a, const RegisterParams& params) {
  params.validate();
  if (a.size() != params.n) throw LengthMismatch("bitstring length must equal n");
  const Int w = weight(a);
  if (w < params.k || w > params.k + params.p + 1)
    throw WeightOutOfBand("weight must satisfy k <= w(A) <= k+p+1");
  const WeightTrace trace = weight_trace(a, params, 2 * params.n);
  const auto [lo, hi] = std::minmax_element(trace.w.begin(), trace.w.end());
  if (*lo == *hi) throw ConstantWeight("weight parameters are constant over two full windows");
  return {params.k + *lo, *hi - *lo - 1};
}

/// Start configuration for the analytic machinery: the shift r and the window
/// A_r at that shift.
struct MainCaseStart {
  Int shift = 0;
  BitString window;
};

/// Finds r < 3n with w(A_r) = k+p+1, A_r starting with 1 and V(A_r) in M_p^+,
/// assuming the parameters are already normalized (weight parameters attain 0
/// and p+1). r is the maximal index with s <= r < t and w_r = p+1 where s is
/// the first index reaching p+1 and t the first later index reaching 0. The
/// postconditions are re-checked on every invocation.
inline MainCaseStart find_main_case_start(const BitString& a, const RegisterParams& params) {
  params.validate();
  if (a.size() != params.n) throw LengthMismatch("bitstring length must equal n");
  const Int n = params.n;
  const Int top = params.p + 1;
  const WeightTrace trace = weight_trace(a, params, 3 * n);

  Int s = -1;
  for (Int i = 0; i <= 2 * n && s < 0; ++i)
    if (trace.w[static_cast<std::size_t>(i)] == top) s = i;
  if (s < 0) throw NotNormalized("weight parameters never reach p+1 within 2n steps");
  Int t = -1;
  for (Int i = s + 1; i <= std::min<Int>(s + n, 3 * n) && t < 0; ++i)
    if (trace.w[static_cast<std::size_t>(i)] == 0) t = i;
  if (t < 0) throw NotNormalized("weight parameters never fall to 0 within n further steps");
  Int r = s;
  for (Int i = s + 1; i < t; ++i)
    if (trace.w[static_cast<std::size_t>(i)] == top) r = i;

  detail::require(r < 3 * n, "start shift stays below 3n");
  for (Int i = r + 1; i < t; ++i) {
    const Int w = trace.w[static_cast<std::size_t>(i)];
    detail::require(0 < w && w < top, "weights descend strictly inside the start window");
  }

  MainCaseStart out;
  out.shift = r;
  const BitString prefix = generate(a, params, r + n);
  out.window = prefix.substring(r, n);
  detail::require(weight(out.window) == params.k + top, "start window has maximal weight");
  detail::require(out.window.bit(0) == 1, "start window begins with 1");
  detail::require(in_M_p_plus(run_vector(out.window), params.p),
                  "start window run vector lies in M_p^+");
  return out;
}

/// How the period driver resolved its input.
enum class DriverPath {
  main_case,        // analytic reduction chain
  out_of_band,      // feedback never fires; pure rotation
  constant_weight,  // degenerate normalization; simulator fallback
};

/// Full reduction trace plus the exact minimal period.
struct PeriodReport {
  BitString input;
  RegisterParams params;
  Int input_weight = 0;
  DriverPath path = DriverPath::main_case;

  // main_case and constant_weight paths:
  NormalizedParams normalized;
  // main_case only:
  Int start_shift = 0;
  BitString start_window;
  ReductionChain chain;
  DynamicalParams dynamics;
  Int least_even_vector_period = 0;  // j_p

  Int minimal_period = 0;  // zeta_p on the main path
};

/// Exact minimal period of the sequence generated from A. Out-of-band weights
/// make the register a pure rotation; everything else is normalized, shifted
/// into the main case and resolved through the reduction chain. The register
/// map is a bijection, so the period is invariant under the start shift.
inline PeriodReport minimal_period(const BitString& a, const RegisterParams& params) {
  params.validate();
  if (a.size() != params.n) throw LengthMismatch("bitstring length must equal n");
  PeriodReport report;
  report.input = a;
  report.params = params;
  report.input_weight = weight(a);

  if (report.input_weight < params.k || report.input_weight > params.k + params.p + 1) {
    report.path = DriverPath::out_of_band;
    report.minimal_period = minimal_rotation_period(a);
    return report;
  }

  try {
    report.normalized = normalize_parameters(a, params);
  } catch (const ConstantWeight&) {
    report.path = DriverPath::constant_weight;
    report.minimal_period = orbit_period(a, params, 2 * params.n + 1);
    detail::require(report.minimal_period <= 2 * params.n,
                    "constant-weight orbits close within 2n steps");
    return report;
  }

  const RegisterParams adjusted{report.normalized.k_star, report.normalized.p_star, params.n};
  const MainCaseStart start = find_main_case_start(a, adjusted);
  report.start_shift = start.shift;
  report.start_window = start.window;
  report.chain = reduction_chain(run_vector(start.window), adjusted.p);
  report.dynamics = dynamical_parameters(report.chain);
  report.least_even_vector_period = report.dynamics.j.back();
  report.minimal_period = report.dynamics.zeta.back();
  return report;
}

}  // namespace ssr
