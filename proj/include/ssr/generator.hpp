#pragma once

#include <algorithm>
#include <vector>

#include "ssr/checked.hpp"
#include "ssr/errors.hpp"
#include "ssr/run_vector.hpp"

namespace ssr {

/// Streaming generator of the shift symmetric vector generated by
/// Q = (q_1..q_J, e_0) with respect to p: the run-length stream of the
/// register output, produced by integer recurrences instead of simulation.
///
/// Entries 1..J are copied from Q. With lambda_0 = p+1 the recurrences are
///   j even:  s_{j+1} = min(q_{j+1}, lambda_j),        lambda_{j+1} = lambda_j - s_{j+1}
///   j odd:   s_{j+1} = min(q_{j+1}, p+1 - lambda_j),  lambda_{j+1} = lambda_j + s_{j+1}
///   e_{j+1} = q_{j+1} - s_{j+1}
///   q_{J+j+1} = e_j + s_{j+1}
/// Each step checks the positivity and lambda-band invariants and fails hard
/// on violation.
class ShiftSymmetricGenerator {
 public:
  ShiftSymmetricGenerator(const RunVector& q, Int p) : p_(p), big_j_(q.J()) {
    if (p < 0) throw InvalidParams("p must be >= 0");
    q_.assign(q.entries().begin(), q.entries().end() - 1);  // q_1..q_J
    e_.push_back(q.entries().back());                       // e_0
    lambda_.push_back(p + 1);                               // lambda_0
  }

  /// Grows the stream to at least `length` entries and returns it.
  const std::vector<Int>& prefix(Int length) {
    while (static_cast<Int>(q_.size()) < length) step();
    return q_;
  }

  /// 1-based access to q_i, generating on demand.
  Int entry(Int i) {
    if (i < 1) throw IndexOutOfRange("stream entries are 1-based");
    prefix(i);
    return q_[static_cast<std::size_t>(i - 1)];
  }

  const std::vector<Int>& s() const { return s_; }
  const std::vector<Int>& e() const { return e_; }
  const std::vector<Int>& lambda() const { return lambda_; }
  Int J() const { return big_j_; }

 private:
  void step() {
    const Int j = static_cast<Int>(s_.size());  // next index to fill is s_{j+1}
    const Int qj1 = q_[static_cast<std::size_t>(j)];
    const Int lambda = lambda_.back();
    Int s, lambda_next;
    if (j % 2 == 0) {
      s = std::min(qj1, lambda);
      lambda_next = lambda - s;
    } else {
      s = std::min(qj1, p_ + 1 - lambda);
      lambda_next = lambda + s;
    }
    const Int e_next = qj1 - s;
    const Int q_next = checked_add(e_.back(), s);

    detail::require(s > 0, "generator step sizes stay positive");
    detail::require(q_next > 0, "generated run lengths stay positive");
    detail::require(e_next >= 0, "generator remainders stay non-negative");
    const bool next_even = (j + 1) % 2 == 0;
    detail::require(next_even ? (1 <= lambda_next && lambda_next <= p_ + 1)
                              : (0 <= lambda_next && lambda_next <= p_),
                    "lambda parameters stay inside their parity band");

    s_.push_back(s);
    e_.push_back(e_next);
    lambda_.push_back(lambda_next);
    q_.push_back(q_next);
  }

  Int p_;
  Int big_j_;
  std::vector<Int> q_;       // q_1, q_2, ...
  std::vector<Int> s_;       // s_1, s_2, ...
  std::vector<Int> e_;       // e_0, e_1, ...
  std::vector<Int> lambda_;  // lambda_0, lambda_1, ...
};

/// First `length` entries of the shift symmetric vector generated by Q and p.
inline std::vector<Int> shift_symmetric_prefix(const RunVector& q, Int p, Int length) {
  if (length < 0) throw InvalidParams("length must be >= 0");
  ShiftSymmetricGenerator generator(q, p);
  std::vector<Int> out = generator.prefix(length);
  out.resize(static_cast<std::size_t>(length));
  return out;
}

}  // namespace ssr
