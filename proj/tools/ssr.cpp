// Command-line front end: exact minimal periods of symmetric shift register
// sequences, the brute-force simulator, reduction traces, weight-wave plots,
// cycle censuses and the analytic-vs-simulated sweep.

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ssr/ssr.hpp"

namespace {

using ssr::Int;

struct SweepOutcome {
  Int cases = 0;
  Int mismatches = 0;
  Int max_period = 0;
  Int max_period_n = 0;
  double max_ratio = 0.0;  // max period / n^3, reported descriptively
};

SweepOutcome sweep_register_sizes(Int n_max, unsigned thread_count, bool in_band_only,
                                  std::ostream& log) {
  SweepOutcome total;
  for (Int n = 1; n <= n_max; ++n) {
    std::vector<std::pair<Int, Int>> bands;
    for (Int k = 0; k < n; ++k)
      for (Int p = 0; k + p < n; ++p) bands.emplace_back(k, p);

    std::atomic<Int> cases{0}, mismatches{0}, max_period{0};
    const std::uint64_t states = std::uint64_t{1} << n;
    const unsigned workers = std::max(1u, thread_count);
    std::vector<std::thread> pool;
    for (unsigned worker = 0; worker < workers; ++worker) {
      pool.emplace_back([&, worker] {
        Int local_cases = 0, local_mismatches = 0, local_max = 0;
        for (std::uint64_t state = worker; state < states; state += workers) {
          const ssr::BitString a = ssr::detail::decode_state(static_cast<std::uint32_t>(state), n);
          const Int w = ssr::weight(a);
          for (const auto& [k, p] : bands) {
            if (in_band_only && (w < k || w > k + p + 1)) continue;
            const ssr::RegisterParams params{k, p, n};
            const Int analytic = ssr::minimal_period(a, params).minimal_period;
            const Int simulated = ssr::orbit_period(a, params);
            ++local_cases;
            local_max = std::max(local_max, analytic);
            if (analytic != simulated) {
              ++local_mismatches;
              std::cerr << "mismatch: bits=" << a.to_string() << " k=" << k << " p=" << p
                        << " analytic=" << analytic << " simulated=" << simulated << "\n";
            }
          }
        }
        cases += local_cases;
        mismatches += local_mismatches;
        Int seen = max_period.load();
        while (local_max > seen && !max_period.compare_exchange_weak(seen, local_max)) {
        }
      });
    }
    for (auto& t : pool) t.join();

    total.cases += cases;
    total.mismatches += mismatches;
    const double ratio =
        static_cast<double>(max_period.load()) / (static_cast<double>(n) * n * n);
    if (max_period.load() > total.max_period) {
      total.max_period = max_period.load();
      total.max_period_n = n;
    }
    total.max_ratio = std::max(total.max_ratio, ratio);
    log << "n=" << n << ": " << cases.load() << " cases, " << mismatches.load()
        << " mismatches, max period " << max_period.load() << " (period/n^3 = " << ratio << ")\n";
  }
  return total;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ssr::Error("cannot open output file: " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric shift register period calculator"};
  app.require_subcommand(1);

  std::string bits_text, vector_text, format = "text", output_path;
  Int k = 0, p = 0, n = 0, length = 0, n_max = 8;
  bool verify = false, runs = false, in_band_only = false;
  unsigned threads = std::thread::hardware_concurrency();

  auto* period = app.add_subcommand("period", "Exact minimal period of the generated sequence");
  period->add_option("--bits", bits_text, "Register contents, a word over {0,1}")->required();
  period->add_option("--k", k, "Lower edge of the feedback band")->required();
  period->add_option("--p", p, "Width of the feedback band minus one")->required();
  period->add_flag("--verify", verify, "Cross-check against the brute-force simulator");
  period->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* simulate = app.add_subcommand("simulate", "Run the register and print the raw sequence");
  simulate->add_option("--bits", bits_text)->required();
  simulate->add_option("--k", k)->required();
  simulate->add_option("--p", p)->required();
  simulate->add_option("--length", length, "Number of sequence bits to emit")->required();
  simulate->add_flag("--runs", runs, "Also print the run-length decomposition");

  auto* reduce = app.add_subcommand("reduce", "Reduction chain and dynamical parameters");
  reduce->add_option("--vector", vector_text, "Run vector, e.g. \"(3,4,2,4,1,0)\"");
  reduce->add_option("--bits", bits_text, "Bitstring whose run vector is reduced");
  reduce->add_option("--p", p, "Reduction depth")->required();
  reduce->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* plot = app.add_subcommand("plot-weights", "Export the modified weight parameters");
  plot->add_option("--bits", bits_text)->required();
  plot->add_option("--k", k)->required();
  plot->add_option("--p", p)->required();
  plot->add_option("--length", length, "Number of steps to trace")->required();
  plot->add_option("--format", format, "Output format: text or svg")
      ->check(CLI::IsMember({"text", "svg"}));
  plot->add_option("--output", output_path, "Output file; '-' for stdout");

  auto* cycles = app.add_subcommand("cycles", "Cycle-length histogram over the whole state space");
  cycles->add_option("--k", k)->required();
  cycles->add_option("--p", p)->required();
  cycles->add_option("--n", n, "Register length")->required();

  auto* sweep = app.add_subcommand("sweep", "Exhaustive analytic-vs-simulated equivalence check");
  sweep->add_option("--n-max", n_max, "Largest register length to sweep");
  sweep->add_option("--threads", threads, "Worker threads");
  sweep->add_flag("--in-band-only", in_band_only, "Restrict to k <= w(A) <= k+p+1");

  CLI11_PARSE(app, argc, argv);

  try {
    if (period->parsed()) {
      const ssr::BitString a = ssr::BitString::parse(bits_text);
      const ssr::RegisterParams params{k, p, a.size()};
      const ssr::PeriodReport report = ssr::minimal_period(a, params);
      if (format == "json")
        std::cout << ssr::to_json(report).dump(2) << "\n";
      else
        std::cout << ssr::to_text(report);
      if (verify) {
        const Int simulated = ssr::orbit_period(a, params);
        if (simulated != report.minimal_period) {
          std::cerr << "verification FAILED: simulator found " << simulated << "\n";
          return 1;
        }
        std::cout << "verified: simulator agrees (" << simulated << ")\n";
      }
    } else if (simulate->parsed()) {
      const ssr::BitString a = ssr::BitString::parse(bits_text);
      const ssr::RegisterParams params{k, p, a.size()};
      const ssr::BitString stream = ssr::generate(a, params, length);
      std::cout << stream.to_string() << "\n";
      if (runs && stream.bit(0) == 1)
        std::cout << "runs: " << ssr::to_string(ssr::run_vector(stream)) << "\n";
    } else if (reduce->parsed()) {
      if (vector_text.empty() == bits_text.empty())
        throw ssr::InvalidParams("reduce needs exactly one of --vector and --bits");
      const ssr::RunVector q = vector_text.empty()
                                   ? ssr::run_vector(ssr::BitString::parse(bits_text))
                                   : ssr::parse_run_vector(vector_text);
      if (!ssr::in_M_p_plus(q, p))
        throw ssr::NotInMpPlus("no odd prefix of " + ssr::to_string(q) +
                               " stays positive and reaches p+1 = " + std::to_string(p + 1));
      const ssr::ReductionChain chain = ssr::reduction_chain(q, p);
      const ssr::DynamicalParams dynamics = ssr::dynamical_parameters(chain);
      if (format == "json") {
        nlohmann::json out;
        out["p"] = p;
        out["chain"] = nlohmann::json::array();
        for (Int i = chain.p; i >= 0; --i) {
          nlohmann::json level;
          level["level"] = i;
          level["vector"] = chain.q(i).entries();
          if (i >= 1) level["components"] = ssr::component_decomposition(chain.q(i)).components;
          out["chain"].push_back(level);
        }
        out["j"] = dynamics.j;
        out["zeta"] = dynamics.zeta;
        out["minimal_period"] = dynamics.zeta.back();
        std::cout << out.dump(2) << "\n";
      } else {
        for (Int i = chain.p; i >= 0; --i) {
          std::cout << "Q_" << i << " = " << ssr::to_string(chain.q(i));
          if (i >= 1) {
            std::cout << "  decomposition "
                      << ssr::to_string(ssr::component_decomposition(chain.q(i)));
            const ssr::DistanceVectorWithAlpha d = ssr::distance_vector(chain.q(i));
            std::cout << "  D = " << (d.empty() ? "()" : ssr::format_vector(d.d))
                      << "  alpha = " << d.alpha;
          }
          std::cout << "\n";
        }
        std::cout << "extension Q_0* = " << ssr::to_string(ssr::extension(chain.q(0))) << "\n";
        for (std::size_t i = 0; i < dynamics.j.size(); ++i)
          std::cout << "level " << i << ": j_" << i << " = " << dynamics.j[i] << ", zeta_" << i
                    << " = " << dynamics.zeta[i] << "\n";
        std::cout << "minimal period of the generated sequence: " << dynamics.zeta.back() << "\n";
      }
    } else if (plot->parsed()) {
      const ssr::BitString a = ssr::BitString::parse(bits_text);
      const ssr::RegisterParams params{k, p, a.size()};
      const ssr::WeightTrace trace = ssr::weight_trace(a, params, length);
      write_output(output_path,
                   format == "svg" ? ssr::weight_trace_svg(trace) : ssr::weight_trace_text(trace));
    } else if (cycles->parsed()) {
      const ssr::CycleStructure histogram = ssr::cycle_structure({k, p, n});
      Int total = 0;
      std::cout << "length count\n";
      for (const auto& [cycle_length, count] : histogram.histogram) {
        std::cout << cycle_length << " " << count << "\n";
        total += cycle_length * count;
      }
      std::cout << "states covered: " << total << " (2^" << n << ")\n";
    } else if (sweep->parsed()) {
      const SweepOutcome outcome = sweep_register_sizes(n_max, threads, in_band_only, std::cout);
      std::cout << outcome.cases << " cases, " << outcome.mismatches << " mismatches\n";
      std::cout << "max period " << outcome.max_period << " at n=" << outcome.max_period_n
                << "; max period/n^3 = " << outcome.max_ratio << " (descriptive only)\n";
      if (outcome.mismatches != 0) return 1;
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
