#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ssr/contraction.hpp"
#include "ssr/engine.hpp"
#include "ssr/simulator.hpp"

namespace ssr {

inline const char* to_cstring(DriverPath path) {
  switch (path) {
    case DriverPath::main_case:
      return "main_case";
    case DriverPath::out_of_band:
      return "out_of_band";
    case DriverPath::constant_weight:
      return "constant_weight";
  }
  return "unknown";
}

inline DriverPath driver_path_from_string(const std::string& text) {
  if (text == "main_case") return DriverPath::main_case;
  if (text == "out_of_band") return DriverPath::out_of_band;
  if (text == "constant_weight") return DriverPath::constant_weight;
  throw ParseError("unknown driver path: " + text);
}

/// Narrative rendering of a period report, one line per derivation step.
inline std::string to_text(const PeriodReport& report) {
  std::string out;
  auto line = [&out](const std::string& text) { out += text + "\n"; };
  line("input   : " + report.input.to_string());
  line("params  : k=" + std::to_string(report.params.k) + ", p=" + std::to_string(report.params.p) +
       ", n=" + std::to_string(report.params.n) + ", w(A)=" + std::to_string(report.input_weight));
  if (report.path == DriverPath::out_of_band) {
    line("path    : out of band (feedback never fires; pure rotation)");
    line("minimal period: " + std::to_string(report.minimal_period));
    return out;
  }
  if (report.path == DriverPath::constant_weight) {
    line("path    : constant weight (simulator fallback)");
    line("normalized: k*=" + std::to_string(report.normalized.k_star) +
         ", p*=" + std::to_string(report.normalized.p_star));
    line("minimal period: " + std::to_string(report.minimal_period));
    return out;
  }
  line("path    : main case");
  line("normalized: k*=" + std::to_string(report.normalized.k_star) +
       ", p*=" + std::to_string(report.normalized.p_star));
  line("start   : shift r=" + std::to_string(report.start_shift) + ", window " +
       report.start_window.to_string());
  const Int p = report.chain.p;
  for (Int i = p; i >= 0; --i) {
    std::string row = "  Q_" + std::to_string(i) + " = " + to_string(report.chain.q(i));
    if (i >= 1) row += "  decomposition " + to_string(component_decomposition(report.chain.q(i)));
    line(row);
  }
  line("level 0 : extension Q_0* = " + to_string(extension(report.chain.q(0))) +
       ", cyclic parameters j_0=" + std::to_string(report.dynamics.base.j) +
       ", zeta_0=" + std::to_string(report.dynamics.base.zeta));
  for (const LevelDynamics& level : report.dynamics.levels) {
    const std::string tag = std::to_string(level.level);
    if (level.distance.empty()) {
      line("level " + tag + " : D(Q_" + tag + ") is empty, alpha_" + tag + "=" +
           std::to_string(level.distance.alpha) + "  ->  j_" + tag + "=" + std::to_string(level.j) +
           ", zeta_" + tag + "=" + std::to_string(level.zeta));
    } else {
      line("level " + tag + " : D(Q_" + tag + ") = " + format_vector(level.distance.d) +
           ", alpha_" + tag + "=" + std::to_string(level.distance.alpha) +
           ", m*=" + std::to_string(level.m_star) + ", alpha*=" + std::to_string(level.alpha_star) +
           ", gamma*=" + std::to_string(level.gamma_star));
      line("          x=" + std::to_string(level.x) + ", y=" + std::to_string(level.y) +
           "  ->  j_" + tag + "=" + std::to_string(level.j) + ", zeta_" + tag + "=" +
           std::to_string(level.zeta));
    }
  }
  line("least even vector period: " + std::to_string(report.least_even_vector_period));
  line("minimal period: " + std::to_string(report.minimal_period));
  return out;
}

inline nlohmann::json to_json(const PeriodReport& report) {
  nlohmann::json j;
  j["input"]["bits"] = report.input.to_string();
  j["input"]["k"] = report.params.k;
  j["input"]["p"] = report.params.p;
  j["input"]["n"] = report.params.n;
  j["input"]["weight"] = report.input_weight;
  j["path"] = to_cstring(report.path);
  j["minimal_period"] = report.minimal_period;
  if (report.path == DriverPath::out_of_band) return j;
  j["normalized"]["k_star"] = report.normalized.k_star;
  j["normalized"]["p_star"] = report.normalized.p_star;
  if (report.path == DriverPath::constant_weight) return j;
  j["start"]["shift"] = report.start_shift;
  j["start"]["window"] = report.start_window.to_string();
  j["chain"] = nlohmann::json::array();
  for (Int i = report.chain.p; i >= 0; --i) {
    nlohmann::json level;
    level["level"] = i;
    level["vector"] = report.chain.q(i).entries();
    if (i >= 1) level["components"] = component_decomposition(report.chain.q(i)).components;
    j["chain"].push_back(level);
  }
  j["dynamics"]["base"]["j"] = report.dynamics.base.j;
  j["dynamics"]["base"]["zeta"] = report.dynamics.base.zeta;
  j["dynamics"]["levels"] = nlohmann::json::array();
  for (const LevelDynamics& level : report.dynamics.levels) {
    nlohmann::json entry;
    entry["level"] = level.level;
    entry["alpha"] = level.distance.alpha;
    entry["distance"] = level.distance.d;
    entry["c_indexes"] = level.distance.c_indexes;
    if (!level.distance.empty()) {
      entry["m_star"] = level.m_star;
      entry["alpha_star"] = level.alpha_star;
      entry["gamma_star"] = level.gamma_star;
      entry["x"] = level.x;
      entry["y"] = level.y;
    }
    entry["j"] = level.j;
    entry["zeta"] = level.zeta;
    j["dynamics"]["levels"].push_back(entry);
  }
  j["least_even_vector_period"] = report.least_even_vector_period;
  return j;
}

/// Inverse of to_json; parsing then re-rendering reproduces the document
/// byte for byte.
inline PeriodReport period_report_from_json(const nlohmann::json& j) {
  PeriodReport report;
  report.input = BitString::parse(j.at("input").at("bits").get<std::string>());
  report.params.k = j.at("input").at("k").get<Int>();
  report.params.p = j.at("input").at("p").get<Int>();
  report.params.n = j.at("input").at("n").get<Int>();
  report.input_weight = j.at("input").at("weight").get<Int>();
  report.path = driver_path_from_string(j.at("path").get<std::string>());
  report.minimal_period = j.at("minimal_period").get<Int>();
  if (report.path == DriverPath::out_of_band) return report;
  report.normalized.k_star = j.at("normalized").at("k_star").get<Int>();
  report.normalized.p_star = j.at("normalized").at("p_star").get<Int>();
  if (report.path == DriverPath::constant_weight) return report;
  report.start_shift = j.at("start").at("shift").get<Int>();
  report.start_window = BitString::parse(j.at("start").at("window").get<std::string>());
  const auto& chain = j.at("chain");
  report.chain.p = static_cast<Int>(chain.size()) - 1;
  report.chain.levels.clear();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    report.chain.levels.emplace_back(it->at("vector").get<std::vector<Int>>());
  report.dynamics.base.j = j.at("dynamics").at("base").at("j").get<Int>();
  report.dynamics.base.zeta = j.at("dynamics").at("base").at("zeta").get<Int>();
  report.dynamics.j.push_back(report.dynamics.base.j);
  report.dynamics.zeta.push_back(report.dynamics.base.zeta);
  for (const auto& entry : j.at("dynamics").at("levels")) {
    LevelDynamics level;
    level.level = entry.at("level").get<Int>();
    level.distance.alpha = entry.at("alpha").get<Int>();
    level.distance.d = entry.at("distance").get<std::vector<Int>>();
    level.distance.c_indexes = entry.at("c_indexes").get<std::vector<Int>>();
    if (!level.distance.empty()) {
      level.m_star = entry.at("m_star").get<Int>();
      level.alpha_star = entry.at("alpha_star").get<Int>();
      level.gamma_star = entry.at("gamma_star").get<Int>();
      level.x = entry.at("x").get<Int>();
      level.y = entry.at("y").get<Int>();
    }
    level.j = entry.at("j").get<Int>();
    level.zeta = entry.at("zeta").get<Int>();
    report.dynamics.j.push_back(level.j);
    report.dynamics.zeta.push_back(level.zeta);
    report.dynamics.levels.push_back(std::move(level));
  }
  report.least_even_vector_period = j.at("least_even_vector_period").get<Int>();
  return report;
}

/// Two-column export "index w_i*" of the modified weight parameters.
inline std::string weight_trace_text(const WeightTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.w_mod.size(); ++i)
    out += std::to_string(i) + " " + std::to_string(trace.w_mod[i]) + "\n";
  return out;
}

/// Self-contained SVG polyline of the modified weight parameters.
inline std::string weight_trace_svg(const WeightTrace& trace) {
  const Int top = trace.params.p + 1;
  const Int count = static_cast<Int>(trace.w_mod.size());
  const Int x_scale = 8, y_scale = 24, margin = 20;
  const Int width = margin * 2 + (count > 1 ? (count - 1) * x_scale : x_scale);
  const Int height = margin * 2 + top * y_scale;
  auto x_of = [&](Int i) { return margin + i * x_scale; };
  auto y_of = [&](Int w) { return height - margin - w * y_scale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  svg += "  <line x1=\"" + std::to_string(margin) + "\" y1=\"" + std::to_string(y_of(0)) +
         "\" x2=\"" + std::to_string(x_of(count - 1)) + "\" y2=\"" + std::to_string(y_of(0)) +
         "\" stroke=\"#888\" stroke-dasharray=\"2,3\"/>\n";
  for (Int level = 1; level <= top; ++level)
    svg += "  <text x=\"2\" y=\"" + std::to_string(y_of(level) + 4) +
           "\" font-size=\"10\" fill=\"#444\">" + std::to_string(level) + "</text>\n";
  svg += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (Int i = 0; i < count; ++i) {
    if (i > 0) svg += ' ';
    svg += std::to_string(x_of(i)) + "," + std::to_string(y_of(trace.w_mod[static_cast<std::size_t>(i)]));
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

}  // namespace ssr
