#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssr/checked.hpp"
#include "ssr/errors.hpp"
#include "ssr/run_vector.hpp"

namespace ssr {

/// Finite binary word a_1 ... a_n. The API is 0-indexed; documentation follows
/// the 1-indexed convention, so bit(i) is a_{i+1}.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
      if (b > 1) throw InvalidParams("bitstring symbols must be 0 or 1");
  }

  /// Parses an ASCII word over {'0','1'}; spaces are stripped.
  static BitString parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
      if (c == ' ' || c == '\t') continue;
      if (c == '0')
        bits.push_back(0);
      else if (c == '1')
        bits.push_back(1);
      else
        throw ParseError(std::string("bitstring symbol must be 0 or 1, got '") + c + "'");
    }
    if (bits.empty()) throw ParseError("bitstring must contain at least one symbol");
    return BitString(std::move(bits));
  }

  Int size() const { return static_cast<Int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }
  int bit(Int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out += static_cast<char>('0' + b);
    return out;
  }

  BitString substring(Int first, Int count) const {
    if (first < 0 || count < 0 || first + count > size())
      throw IndexOutOfRange("substring out of range");
    return BitString(std::vector<std::uint8_t>(bits_.begin() + first, bits_.begin() + first + count));
  }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Number of 1 symbols.
inline Int weight(const BitString& a) {
  Int w = 0;
  for (auto b : a.bits()) w += b;
  return w;
}

/// Number of ones minus number of zeros; 0 for the empty word.
inline Int positive_weight(const BitString& a) { return 2 * weight(a) - a.size(); }

/// Element-wise flip; an involution.
inline BitString complement(const BitString& a) {
  std::vector<std::uint8_t> bits = a.bits();
  for (auto& b : bits) b ^= 1u;
  return BitString(std::move(bits));
}

inline BitString rotated_left(const BitString& a, Int r) {
  const Int n = a.size();
  if (n == 0) return a;
  r %= n;
  if (r < 0) r += n;
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i) bits.push_back(static_cast<std::uint8_t>(a.bit((i + r) % n)));
  return BitString(std::move(bits));
}

/// Even vector representation V(A): run lengths of the maximal 1-blocks and
/// 0-blocks, padded with a trailing zero-run of length 0 when A ends in 1 so
/// that the run count is even. Requires A to start with 1.
inline RunVector run_vector(const BitString& a) {
  if (a.empty()) throw InvalidParams("bitstring must be non-empty");
  if (a.bit(0) != 1) throw StartsWithZero("run vector requires a word starting with 1");
  std::vector<Int> runs;
  Int i = 0;
  const Int n = a.size();
  while (i < n) {
    const int symbol = a.bit(i);
    Int j = i;
    while (j < n && a.bit(j) == symbol) ++j;
    runs.push_back(j - i);
    i = j;
  }
  if (runs.size() % 2 != 0) runs.push_back(0);
  return RunVector(std::move(runs));
}

/// A(V): the concatenation 1_{v_1} 0_{v_2} 1_{v_3} ... 0_{v_{J+1}}.
inline BitString from_run_vector(const RunVector& v) {
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(v.sum()));
  for (Int i = 1; i <= v.size(); ++i) {
    const std::uint8_t symbol = (i % 2 == 1) ? 1 : 0;
    for (Int c = 0; c < v.at(i); ++c) bits.push_back(symbol);
  }
  return BitString(std::move(bits));
}

/// Least r >= 1 dividing n such that rotating A left by r leaves it fixed.
inline Int minimal_rotation_period(const BitString& a) {
  const Int n = a.size();
  if (n == 0) throw InvalidParams("bitstring must be non-empty");
  for (Int r = 1; r <= n; ++r) {
    if (n % r != 0) continue;
    bool fixed = true;
    for (Int i = 0; i < n && fixed; ++i) fixed = a.bit(i) == a.bit((i + r) % n);
    if (fixed) return r;
  }
  throw InternalError("rotation by n always fixes a word");
}

}  // namespace ssr
