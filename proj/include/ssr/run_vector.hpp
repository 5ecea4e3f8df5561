#pragma once

#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssr/checked.hpp"
#include "ssr/errors.hpp"

namespace ssr {

/// A run vector (v_1, ..., v_J, v_{J+1}): alternating run lengths of a binary
/// word that starts with a 1-run, padded with a trailing zero-run that may be
/// empty. The class M of valid run vectors requires J >= 1 odd, v_i >= 1 for
/// i <= J and v_{J+1} >= 0.
///
/// Nested subclasses used throughout the calculus:
///   M*     first entry > 1,
///   M_p    odd-position sum v_1 + v_3 + ... + v_J >= p+1,
///   M_p^+  some odd prefix stays positive and reaches p+1 (see in_M_p_plus).
class RunVector {
 public:
  explicit RunVector(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2 || entries_.size() % 2 != 0)
      throw NotInM("run vector needs even length >= 2");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
      if (entries_[i] < 1) throw NotInM("run lengths before the last entry must be >= 1");
    if (entries_.back() < 0) throw NotInM("last entry must be >= 0");
  }

  const std::vector<Int>& entries() const { return entries_; }
  std::span<const Int> span() const { return entries_; }

  /// Number of entries, J+1.
  Int size() const { return static_cast<Int>(entries_.size()); }
  /// The odd index J; entries are (v_1..v_J, v_{J+1}).
  Int J() const { return size() - 1; }

  /// 1-based access v_i.
  Int at(Int i) const {
    if (i < 1 || i > size()) throw IndexOutOfRange("run vector index out of range");
    return entries_[static_cast<std::size_t>(i - 1)];
  }

  Int sum() const { return checked_sum(entries_); }

  friend bool operator==(const RunVector&, const RunVector&) = default;

 private:
  std::vector<Int> entries_;
};

/// Alternating parameters rho_0..rho_{J+1}: signed prefix sums with run signs
/// +,-,+,-,... starting from rho_0 = 0.
struct AlternatingParams {
  std::vector<Int> rho;
};

/// Least even rotation j fixing an even-length vector, and the prefix sum
/// zeta = v_1 + ... + v_j.
struct CyclicParams {
  Int j = 0;
  Int zeta = 0;
};

/// Distance measure: sum of the entries minus their count; 0 for the empty
/// vector.
inline Int delta(std::span<const Int> v) {
  return checked_sub(checked_sum(v), static_cast<Int>(v.size()));
}

inline Int delta(const RunVector& v) { return delta(v.span()); }

/// Distance function tau(r) = (v_1 - 1) + ... + (v_r - 1); tau(0) = 0.
inline Int tau(const RunVector& v, Int r) {
  if (r < 0 || r > v.size()) throw IndexOutOfRange("tau index must lie in [0, J+1]");
  return delta(v.span().subspan(0, static_cast<std::size_t>(r)));
}

/// Extension V*: add one to the last entry.
inline RunVector extension(const RunVector& v) {
  std::vector<Int> e = v.entries();
  e.back() = checked_add(e.back(), 1);
  return RunVector(std::move(e));
}

inline AlternatingParams alternating_params(const RunVector& v) {
  AlternatingParams params;
  params.rho.reserve(static_cast<std::size_t>(v.size()) + 1);
  params.rho.push_back(0);
  for (Int i = 0; i < v.size(); ++i) {
    Int step = v.at(i + 1);
    params.rho.push_back(i % 2 == 0 ? checked_add(params.rho.back(), step)
                                    : checked_sub(params.rho.back(), step));
  }
  return params;
}

/// Least odd t <= J with rho_i > 0 for 1 <= i <= t and rho_t >= p+1, if one
/// exists. (v_1..v_t) is then the shortest admissible start vector of V with
/// respect to p.
inline std::optional<Int> admissible_start_length(const RunVector& v, Int p) {
  if (p < 0) throw InvalidParams("p must be >= 0");
  Int rho = 0;
  for (Int i = 1; i <= v.J(); ++i) {
    Int step = v.at(i);
    rho = (i % 2 == 1) ? checked_add(rho, step) : checked_sub(rho, step);
    if (rho <= 0) return std::nullopt;
    if (i % 2 == 1 && rho >= p + 1) return i;
  }
  return std::nullopt;
}

/// Membership in M_p^+: p is an admissible p-value of V.
inline bool in_M_p_plus(const RunVector& v, Int p) {
  return admissible_start_length(v, p).has_value();
}

/// Membership in M_p: odd-position sum >= p+1.
inline bool in_M_p(const RunVector& v, Int p) {
  if (p < 0) throw InvalidParams("p must be >= 0");
  Int odd_sum = 0;
  for (Int i = 1; i <= v.J(); i += 2) odd_sum = checked_add(odd_sum, v.at(i));
  return odd_sum >= p + 1;
}

/// Membership in M*: first entry > 1.
inline bool in_M_star(const RunVector& v) { return v.at(1) > 1; }

namespace detail {

inline bool rotation_fixes(std::span<const Int> v, Int j) {
  const Int r = static_cast<Int>(v.size());
  for (Int i = 0; i < r; ++i)
    if (v[static_cast<std::size_t>((i + j) % r)] != v[static_cast<std::size_t>(i)]) return false;
  return true;
}

}  // namespace detail

/// Cyclic parameters of an even-length vector: the least even positive j with
/// rotate-left-by-j fixing the vector, and zeta = v_1 + ... + v_j. The least
/// such j is always a divisor of the length, so only even divisors are tried.
inline CyclicParams cyclic_parameters(std::span<const Int> v) {
  const Int r = static_cast<Int>(v.size());
  if (r <= 0 || r % 2 != 0) throw OddLength("cyclic parameters need even positive length");
  for (Int j = 2; j <= r; j += 2) {
    if (r % j != 0) continue;
    if (detail::rotation_fixes(v, j)) {
      CyclicParams out;
      out.j = j;
      out.zeta = checked_sum(v.subspan(0, static_cast<std::size_t>(j)));
      return out;
    }
  }
  throw InternalError("rotation by the full length always fixes a vector");
}

inline CyclicParams cyclic_parameters(const RunVector& v) { return cyclic_parameters(v.span()); }

/// Renders "(v_1,v_2,...)" with decimal entries.
inline std::string format_vector(std::span<const Int> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  out += ')';
  return out;
}

inline std::string to_string(const RunVector& v) { return format_vector(v.span()); }

/// Parses "(a,b,c)" or bare "a,b,c" with decimal entries.
inline std::vector<Int> parse_vector(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  if (begin < end && text[begin] == '(') {
    if (text[end - 1] != ')') throw ParseError("unbalanced parentheses in vector literal");
    ++begin;
    --end;
  }
  std::vector<Int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw ParseError("empty entry in vector literal");
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer in vector literal: " + token);
    }
    if (used != token.size()) throw ParseError("bad integer in vector literal: " + token);
    out.push_back(value);
    token.clear();
  };
  for (std::size_t i = begin; i < end; ++i) {
    char c = text[i];
    if (c == ',') {
      flush();
    } else if (c != ' ' && c != '\t') {
      token += c;
    }
  }
  flush();
  return out;
}

inline RunVector parse_run_vector(std::string_view text) { return RunVector(parse_vector(text)); }

}  // namespace ssr
