#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ssr/bitstring.hpp"
#include "ssr/checked.hpp"
#include "ssr/errors.hpp"

namespace ssr {

/// Register parameters: the feedback fires exactly when the window weight
/// a_2 + ... + a_n lies in the band [k, k+p].
struct RegisterParams {
  Int k = 0;
  Int p = 0;
  Int n = 0;

  void validate() const {
    if (k < 0 || p < 0 || n < 1 || k + p >= n)
      throw InvalidParams("register parameters need 0 <= k <= k+p < n");
  }
};

/// Weight parameters w_r = w(A_r) - k and the modified values w_r* = p+1 - w_r
/// used for wave plots; b(r) = w_r + w_{r+n} is exposed for tests.
struct WeightTrace {
  std::vector<Int> w;
  std::vector<Int> w_mod;
  RegisterParams params;

  Int b(Int r) const {
    if (r < 0 || r + params.n >= static_cast<Int>(w.size()))
      throw IndexOutOfRange("b(r) needs w values up to r+n");
    return w[static_cast<std::size_t>(r)] + w[static_cast<std::size_t>(r + params.n)];
  }
};

/// Cycle-length histogram of the register map over {0,1}^n.
struct CycleStructure {
  std::vector<std::pair<Int, Int>> histogram;  // (cycle length, count), ascending
};

namespace detail {

/// O(1)-per-bit stream simulator: keeps the current window in a ring buffer
/// together with its absolute weight.
class StreamSimulator {
 public:
  StreamSimulator(const BitString& a, const RegisterParams& params)
      : params_(params), ring_(a.bits()), window_weight_(weight(a)) {
    params.validate();
    if (a.size() != params.n) throw LengthMismatch("bitstring length must equal n");
  }

  /// Emits a_{r+n+1} and slides the window one step.
  int next_bit() {
    const int oldest = ring_[static_cast<std::size_t>(head_)];
    const Int inner = window_weight_ - oldest;  // w(a_{r+2} ... a_{r+n})
    const bool fires = params_.k <= inner && inner <= params_.k + params_.p;
    const int produced = fires ? oldest ^ 1 : oldest;
    ring_[static_cast<std::size_t>(head_)] = static_cast<std::uint8_t>(produced);
    head_ = head_ + 1 == params_.n ? 0 : head_ + 1;
    window_weight_ += produced - oldest;
    return produced;
  }

  /// Absolute weight w(A_r) of the current window.
  Int window_weight() const { return window_weight_; }

  /// Copies the current window A_r out of the ring.
  BitString window() const {
    std::vector<std::uint8_t> bits;
    bits.reserve(ring_.size());
    for (Int i = 0; i < params_.n; ++i)
      bits.push_back(ring_[static_cast<std::size_t>((head_ + i) % params_.n)]);
    return BitString(std::move(bits));
  }

  bool window_equals(const BitString& a) const {
    for (Int i = 0; i < params_.n; ++i)
      if (ring_[static_cast<std::size_t>((head_ + i) % params_.n)] != a.bit(i)) return false;
    return true;
  }

 private:
  RegisterParams params_;
  std::vector<std::uint8_t> ring_;
  Int head_ = 0;
  Int window_weight_ = 0;
};

}  // namespace detail

/// One application of the register map.
inline BitString step(const BitString& a, const RegisterParams& params) {
  detail::StreamSimulator sim(a, params);
  sim.next_bit();
  return sim.window();
}

/// Prefix a_1 .. a_length of the generated infinite sequence; length >= n.
inline BitString generate(const BitString& a, const RegisterParams& params, Int length) {
  if (length < params.n) throw InvalidParams("generate needs length >= n");
  detail::StreamSimulator sim(a, params);
  std::vector<std::uint8_t> bits = a.bits();
  bits.reserve(static_cast<std::size_t>(length));
  for (Int i = params.n; i < length; ++i)
    bits.push_back(static_cast<std::uint8_t>(sim.next_bit()));
  return BitString(std::move(bits));
}

/// Least r >= 1 with the r-th iterate of the register map fixing A. Because
/// the map is a bijection every state lies on a pure cycle, so this equals the
/// minimal period of the generated infinite sequence. Detection uses a rolling
/// window hash with exact verification on hash hits. cap = 0 selects the
/// default budget of 2^n steps (saturated).
inline Int orbit_period(const BitString& a, const RegisterParams& params, Int cap = 0) {
  params.validate();
  if (a.size() != params.n) throw LengthMismatch("bitstring length must equal n");
  const Int n = params.n;
  if (cap <= 0) cap = n < 62 ? (Int{1} << n) : std::numeric_limits<Int>::max();

  constexpr std::uint64_t kBase = 0x9e3779b97f4a7c55ull;  // odd multiplier
  std::uint64_t top = 1;                                  // kBase^(n-1)
  for (Int i = 1; i < n; ++i) top *= kBase;
  std::uint64_t target = 0;
  for (Int i = 0; i < n; ++i) target = target * kBase + static_cast<std::uint64_t>(a.bit(i));
  std::uint64_t hash = target;

  detail::StreamSimulator sim(a, params);
  std::vector<std::uint8_t> oldest_bits(a.bits());  // bit leaving the window at step r
  std::size_t oldest_pos = 0;
  Int r = 0;
  while (r < cap) {
    const std::uint8_t outgoing = oldest_bits[oldest_pos];
    const int incoming = sim.next_bit();
    oldest_bits[oldest_pos] = static_cast<std::uint8_t>(incoming);
    oldest_pos = oldest_pos + 1 == oldest_bits.size() ? 0 : oldest_pos + 1;
    hash = (hash - outgoing * top) * kBase + static_cast<std::uint64_t>(incoming);
    ++r;
    if (hash == target && sim.window_equals(a)) return r;
  }
  throw IterationBudgetExceeded("orbit longer than the configured step budget");
}

/// Weight parameters w_0 .. w_length (and modified values) of the sequence
/// generated from A, maintained incrementally in O(1) per step.
inline WeightTrace weight_trace(const BitString& a, const RegisterParams& params, Int length) {
  if (length < 0) throw InvalidParams("length must be >= 0");
  detail::StreamSimulator sim(a, params);
  WeightTrace trace;
  trace.params = params;
  trace.w.reserve(static_cast<std::size_t>(length) + 1);
  trace.w_mod.reserve(static_cast<std::size_t>(length) + 1);
  for (Int r = 0; r <= length; ++r) {
    const Int w = sim.window_weight() - params.k;
    trace.w.push_back(w);
    trace.w_mod.push_back(params.p + 1 - w);
    if (r < length) sim.next_bit();
  }
  return trace;
}

namespace detail {

/// Register map on integer-encoded states: bit n-1 of the state is a_1.
inline std::uint32_t step_state(std::uint32_t state, const RegisterParams& params) {
  const int a1 = (state >> (params.n - 1)) & 1u;
  const Int inner = std::popcount(state) - a1;
  const bool fires = params.k <= inner && inner <= params.k + params.p;
  const std::uint32_t incoming = fires ? (a1 ^ 1u) : static_cast<std::uint32_t>(a1);
  const std::uint32_t mask = (params.n == 32) ? 0xffffffffu : ((1u << params.n) - 1u);
  return ((state << 1) | incoming) & mask;
}

inline std::uint32_t encode_state(const BitString& a) {
  std::uint32_t state = 0;
  for (Int i = 0; i < a.size(); ++i) state = (state << 1) | static_cast<std::uint32_t>(a.bit(i));
  return state;
}

inline BitString decode_state(std::uint32_t state, Int n) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i)
    bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((state >> (n - 1 - i)) & 1u);
  return BitString(std::move(bits));
}

}  // namespace detail

/// Partitions {0,1}^n into cycles of the register map and returns the
/// cycle-length histogram. The weighted lengths always sum to 2^n.
inline CycleStructure cycle_structure(const RegisterParams& params, Int max_n = 20) {
  params.validate();
  if (params.n > max_n || params.n > 30)
    throw StateSpaceTooLarge("state space enumeration bounded to n <= " + std::to_string(max_n));
  const std::uint64_t count = std::uint64_t{1} << params.n;
  std::vector<bool> visited(count, false);
  std::map<Int, Int> histogram;
  for (std::uint64_t start = 0; start < count; ++start) {
    if (visited[start]) continue;
    Int length = 0;
    std::uint32_t state = static_cast<std::uint32_t>(start);
    do {
      visited[state] = true;
      state = detail::step_state(state, params);
      ++length;
    } while (state != start);
    histogram[length] += 1;
  }
  CycleStructure out;
  out.histogram.assign(histogram.begin(), histogram.end());
  return out;
}

}  // namespace ssr
