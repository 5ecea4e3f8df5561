#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ssr/engine.hpp"

using namespace ssr;

namespace {

std::uint64_t test_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("SSR_TEST_SEED")) return std::strtoull(env, nullptr, 10);
  return fallback;
}

struct RandomRegister {
  BitString a;
  RegisterParams params;
};

/// Random register with k <= w(A) <= k+p+1 (the in-band configuration).
RandomRegister random_in_band(std::mt19937_64& rng, Int max_n = 14) {
  std::uniform_int_distribution<Int> n_dist(2, max_n);
  for (;;) {
    const Int n = n_dist(rng);
    std::uniform_int_distribution<Int> k_dist(0, n - 1);
    const Int k = k_dist(rng);
    std::uniform_int_distribution<Int> p_dist(0, n - 1 - k);
    const Int p = p_dist(rng);
    std::uniform_int_distribution<Int> w_dist(k, std::min(n, k + p + 1));
    const Int w = w_dist(rng);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    for (Int i = 0; i < w; ++i) bits[static_cast<std::size_t>(i)] = 1;
    std::shuffle(bits.begin(), bits.end(), rng);
    return {BitString(std::move(bits)), RegisterParams{k, p, n}};
  }
}

}  // namespace

TEST_CASE("reduction chains repeat the contraction") {
  const ReductionChain band = reduction_chain(RunVector({3, 4, 2, 4, 1, 0}), 2);
  REQUIRE(band.levels.size() == 3);
  CHECK(band.q(2) == RunVector({3, 4, 2, 4, 1, 0}));
  CHECK(band.q(1) == RunVector({2, 3, 1, 3}));
  CHECK(band.q(0) == RunVector({1, 5}));

  const ReductionChain tail = reduction_chain(RunVector({3, 3, 3, 3, 2, 2, 1, 998}), 2);
  CHECK(tail.q(1) == RunVector({2, 2, 2, 2, 1, 999}));
  CHECK(tail.q(0) == RunVector({1, 1, 1, 1000}));

  const ReductionChain flat = reduction_chain(RunVector({2, 1, 1, 4, 2, 1, 1, 3}), 0);
  REQUIRE(flat.levels.size() == 1);
  CHECK(flat.q(0) == RunVector({2, 1, 1, 4, 2, 1, 1, 3}));

  CHECK_THROWS_AS(reduction_chain(RunVector({1, 1, 1, 1}), 1), NotInMpPlus);
}

TEST_CASE("chain levels stay admissible at their own depth") {
  std::mt19937_64 rng(test_seed(71));
  std::uniform_int_distribution<Int> p_dist(0, 4);
  std::uniform_int_distribution<Int> pairs_dist(1, 4);
  std::uniform_int_distribution<Int> run(1, 5);
  std::uniform_int_distribution<Int> tail(0, 4);
  int hits = 0;
  while (hits < 500) {
    const Int p = p_dist(rng);
    const Int pairs = pairs_dist(rng);
    std::vector<Int> entries;
    for (Int i = 0; i < 2 * pairs - 1; ++i) entries.push_back(run(rng));
    entries.push_back(tail(rng));
    const RunVector q(entries);
    if (!in_M_p_plus(q, p)) continue;
    ++hits;
    const ReductionChain chain = reduction_chain(q, p);
    for (Int i = 0; i <= p; ++i) REQUIRE(in_M_p_plus(chain.q(i), i));
  }
}

TEST_CASE("dynamical parameters of the reference chains") {
  DynamicalParams dynamics = dynamical_parameters(reduction_chain(RunVector({3, 4, 2, 4, 1, 0}), 2));
  CHECK(dynamics.j == std::vector<Int>{2, 26, 370});
  CHECK(dynamics.zeta == std::vector<Int>{7, 68, 982});

  dynamics = dynamical_parameters(reduction_chain(RunVector({3, 3, 3, 3, 2, 2, 1, 998}), 2));
  CHECK(dynamics.j == std::vector<Int>{4, 6020, 1011778});
  CHECK(dynamics.zeta == std::vector<Int>{1004, 1013032, 128653810});
  REQUIRE(dynamics.levels.size() == 2);
  CHECK(dynamics.levels[0].alpha_star == 1003);
  CHECK(dynamics.levels[0].x == 1004);
  CHECK(dynamics.levels[0].y == 1003);
  CHECK(dynamics.levels[1].alpha_star == 1008);
  CHECK(dynamics.levels[1].x == 126629);
  CHECK(dynamics.levels[1].y == 126);

  // Empty distance vector at the top level: the vector period carries over.
  dynamics = dynamical_parameters(reduction_chain(RunVector({3, 2, 2, 5, 3, 2, 2, 3}), 1));
  CHECK(dynamics.j == std::vector<Int>{4, 4});
  CHECK(dynamics.zeta == std::vector<Int>{8, 12});

  dynamics =
      dynamical_parameters(reduction_chain(RunVector({2, 1, 2, 2, 2, 3, 1, 3, 3, 2, 1, 1, 2, 3}), 1));
  CHECK(dynamics.j == std::vector<Int>{4, 36});
  CHECK(dynamics.zeta == std::vector<Int>{8, 76});

  dynamics = dynamical_parameters(reduction_chain(RunVector({3, 4, 2, 3}), 2));
  CHECK(dynamics.j == std::vector<Int>{2, 26, 26});
  CHECK(dynamics.zeta == std::vector<Int>{7, 68, 94});
}

TEST_CASE("periods grow strictly along the chain") {
  std::mt19937_64 rng(test_seed(72));
  std::uniform_int_distribution<Int> p_dist(1, 4);
  std::uniform_int_distribution<Int> first(2, 6);
  std::uniform_int_distribution<Int> run(1, 5);
  std::uniform_int_distribution<Int> tail(0, 4);
  int hits = 0;
  while (hits < 500) {
    const Int p = p_dist(rng);
    std::vector<Int> entries{first(rng)};
    for (Int i = 1; i < 5; ++i) entries.push_back(run(rng));
    entries.push_back(tail(rng));
    const RunVector q(entries);
    if (!in_M_p_plus(q, p)) continue;
    ++hits;
    const DynamicalParams dynamics = dynamical_parameters(reduction_chain(q, p));
    for (std::size_t i = 1; i < dynamics.zeta.size(); ++i) {
      REQUIRE(dynamics.zeta[i] > dynamics.zeta[i - 1]);
      REQUIRE(dynamics.j[i] % 2 == 0);
      REQUIRE(dynamics.j[i] > 0);
    }
  }
}

TEST_CASE("reduced periods match the generated streams level by level") {
  // zeta_i is the prefix sum of the level-i stream over j_i entries, and j_i
  // is a vector period of that stream.
  std::mt19937_64 rng(test_seed(73));
  std::uniform_int_distribution<Int> p_dist(0, 3);
  std::uniform_int_distribution<Int> first(1, 5);
  std::uniform_int_distribution<Int> run(1, 4);
  std::uniform_int_distribution<Int> tail(0, 3);
  int hits = 0;
  while (hits < 120) {
    const Int p = p_dist(rng);
    std::vector<Int> entries{first(rng)};
    for (Int i = 1; i < 5; ++i) entries.push_back(run(rng));
    entries.push_back(tail(rng));
    const RunVector q(entries);
    if (!in_M_p_plus(q, p)) continue;
    ++hits;
    const ReductionChain chain = reduction_chain(q, p);
    const DynamicalParams dynamics = dynamical_parameters(chain);
    for (Int i = 0; i <= p; ++i) {
      const Int j_i = dynamics.j[static_cast<std::size_t>(i)];
      const Int zeta_i = dynamics.zeta[static_cast<std::size_t>(i)];
      const std::vector<Int> stream = shift_symmetric_prefix(chain.q(i), i, 2 * j_i + 16);
      Int prefix_sum = 0;
      for (Int m = 0; m < j_i; ++m) prefix_sum += stream[static_cast<std::size_t>(m)];
      REQUIRE(prefix_sum == zeta_i);
      for (Int m = 0; m < j_i + 16; ++m)
        REQUIRE(stream[static_cast<std::size_t>(m + j_i)] == stream[static_cast<std::size_t>(m)]);
    }
  }
}

TEST_CASE("parameter normalization from the observed weight band") {
  const NormalizedParams adjusted = normalize_parameters(BitString::parse("110"), {0, 2, 3});
  CHECK(adjusted.k_star == 0);
  CHECK(adjusted.p_star == 2);

  // Already-normalized inputs keep their parameters.
  const NormalizedParams kept = normalize_parameters(BitString::parse("11100001100001"), {3, 2, 14});
  CHECK(kept.k_star == 3);
  CHECK(kept.p_star == 2);

  CHECK_THROWS_AS(normalize_parameters(BitString::parse("100"), {2, 0, 3}), WeightOutOfBand);
  CHECK_THROWS_AS(normalize_parameters(BitString::parse("111"), {0, 0, 3}), WeightOutOfBand);
}

TEST_CASE("normalization never widens the band") {
  std::mt19937_64 rng(test_seed(74));
  for (int trial = 0; trial < 500; ++trial) {
    const RandomRegister reg = random_in_band(rng);
    NormalizedParams adjusted;
    try {
      adjusted = normalize_parameters(reg.a, reg.params);
    } catch (const ConstantWeight&) {
      continue;
    }
    REQUIRE(adjusted.k_star >= reg.params.k);
    REQUIRE(adjusted.p_star >= 0);
    REQUIRE(adjusted.p_star <= reg.params.p);
    REQUIRE(adjusted.k_star + adjusted.p_star <= reg.params.k + reg.params.p);
  }
}

TEST_CASE("main-case start search on a short register") {
  const MainCaseStart start = find_main_case_start(BitString::parse("110"), {0, 2, 3});
  CHECK(start.shift == 5);
  CHECK(start.window == BitString::parse("111"));
}

TEST_CASE("main-case start postconditions on random normalized inputs") {
  std::mt19937_64 rng(test_seed(75));
  for (int trial = 0; trial < 500; ++trial) {
    const RandomRegister reg = random_in_band(rng);
    NormalizedParams adjusted;
    try {
      adjusted = normalize_parameters(reg.a, reg.params);
    } catch (const ConstantWeight&) {
      continue;
    }
    const RegisterParams params{adjusted.k_star, adjusted.p_star, reg.params.n};
    const MainCaseStart start = find_main_case_start(reg.a, params);
    REQUIRE(start.shift < 3 * params.n);
    REQUIRE(weight(start.window) == params.k + params.p + 1);
    REQUIRE(start.window.bit(0) == 1);
    REQUIRE(in_M_p_plus(run_vector(start.window), params.p));
  }
}

TEST_CASE("minimal periods of the reference registers") {
  CHECK(minimal_period(BitString::parse("11100001100001"), {3, 2, 14}).minimal_period == 982);
  CHECK(minimal_period(BitString::parse("111000011000"), {2, 2, 12}).minimal_period == 94);
  CHECK(minimal_period(BitString::parse("110100001101000"), {5, 0, 15}).minimal_period == 8);
  CHECK(minimal_period(BitString::parse("110"), {0, 2, 3}).minimal_period == 6);
}

TEST_CASE("out-of-band weights reduce to pure rotation") {
  const PeriodReport low = minimal_period(BitString::parse("100"), {2, 0, 3});
  CHECK(low.path == DriverPath::out_of_band);
  CHECK(low.minimal_period == 3);
  CHECK(low.minimal_period == orbit_period(BitString::parse("100"), {2, 0, 3}));

  const PeriodReport high = minimal_period(BitString::parse("111"), {0, 0, 3});
  CHECK(high.path == DriverPath::out_of_band);
  CHECK(high.minimal_period == 1);
  CHECK(high.minimal_period == orbit_period(BitString::parse("111"), {0, 0, 3}));

  const PeriodReport alternating = minimal_period(BitString::parse("101010"), {5, 0, 6});
  CHECK(alternating.path == DriverPath::out_of_band);
  CHECK(alternating.minimal_period == 2);
}

TEST_CASE("analytic periods equal simulated orbit lengths (random spot check)") {
  std::mt19937_64 rng(test_seed(76));
  for (int trial = 0; trial < 300; ++trial) {
    const RandomRegister reg = random_in_band(rng, 12);
    const PeriodReport report = minimal_period(reg.a, reg.params);
    REQUIRE(report.minimal_period == orbit_period(reg.a, reg.params));
  }
}

TEST_CASE("analytic periods equal simulated orbit lengths (exhaustive small census)") {
  for (Int n = 1; n <= 7; ++n) {
    for (Int k = 0; k < n; ++k) {
      for (Int p = 0; k + p < n; ++p) {
        const RegisterParams params{k, p, n};
        for (std::uint32_t state = 0; state < (1u << n); ++state) {
          const BitString a = detail::decode_state(state, n);
          const PeriodReport report = minimal_period(a, params);
          REQUIRE(report.minimal_period == orbit_period(a, params));
        }
      }
    }
  }
}

TEST_CASE("every window along one cycle reports the same period") {
  // The register map is a bijection, so the period is a property of the whole
  // cycle; the driver must agree from any phase.
  const BitString a = BitString::parse("111000011000");
  const RegisterParams params{2, 2, 12};
  const Int period = minimal_period(a, params).minimal_period;
  const BitString stream = generate(a, params, period + params.n);
  std::mt19937_64 rng(test_seed(77));
  std::uniform_int_distribution<Int> shift(0, period - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const BitString window = stream.substring(shift(rng), params.n);
    CHECK(minimal_period(window, params).minimal_period == period);
  }
}
