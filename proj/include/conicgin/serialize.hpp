#pragma once

// JSON and CSV forms of the library's value types.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conicgin/fatpoints.hpp"
#include "conicgin/polytope.hpp"
#include "conicgin/resolutions.hpp"
#include "conicgin/staircase.hpp"

namespace conicgin {

using json = nlohmann::json;

inline json staircase_to_json(const GinStaircase& s) {
  json gens = json::array();
  for (const Monomial& g : s.generators()) gens.push_back(to_string(g));
  return {{"alpha", s.alpha()}, {"lambdas", s.lambdas()}, {"generators", gens}};
}

inline GinStaircase staircase_from_json(const json& j) {
  return GinStaircase(j.at("alpha").get<int>(), j.at("lambdas").get<std::vector<int>>());
}

/// Header "a,lambda_a", one row per column of the staircase.
inline std::string staircase_csv(const GinStaircase& s) {
  std::string out = "a,lambda_a\n";
  for (int a = 0; a < s.alpha(); ++a) out += std::to_string(a) + "," + std::to_string(s.lambdas()[a]) + "\n";
  return out;
}

inline json shifts_to_json(const ShiftMultiset& shifts) {
  json arr = json::array();
  for (const auto& [shift, mult] : shifts.counts()) arr.push_back({{"shift", shift}, {"mult", mult}});
  return arr;
}

inline ShiftMultiset shifts_from_json(const json& arr) {
  ShiftMultiset out;
  for (const auto& entry : arr) out.add(entry.at("shift").get<int>(), entry.at("mult").get<int>());
  return out;
}

/// {"f0": [{"shift": d, "mult": k}, ...], "f1": [...]}, ascending by shift.
inline json betti_to_json(const BettiTable& b) { return {{"f0", shifts_to_json(b.f0)}, {"f1", shifts_to_json(b.f1)}}; }

inline BettiTable betti_from_json(const json& j) { return {shifts_from_json(j.at("f0")), shifts_from_json(j.at("f1"))}; }

/// {prime, r, m, seed, t_values}; mixed schemes carry "multiplicities" instead of "m".
inline json config_to_json(const FatPointConfig& cfg) {
  json j{{"prime", cfg.field().modulus()}, {"r", cfg.r()}, {"seed", cfg.seed()}, {"t_values", cfg.t_values()}};
  if (cfg.is_uniform()) {
    j["m"] = cfg.uniform_multiplicity();
  } else {
    j["multiplicities"] = cfg.multiplicities();
  }
  return j;
}

inline FatPointConfig config_from_json(const json& j) {
  PrimeField field(j.at("prime").get<std::uint32_t>());
  auto t_values = j.at("t_values").get<std::vector<FFElement>>();
  std::vector<int> mults = j.contains("multiplicities") ? j.at("multiplicities").get<std::vector<int>>()
                                                         : std::vector<int>(t_values.size(), j.at("m").get<int>());
  return FatPointConfig(field, std::move(t_values), std::move(mults), j.at("seed").get<std::uint64_t>());
}

inline std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "m,alpha,lambda0,gamma1_m,gamma2_m,dev1,dev2,covol_scaled\n";
  for (const auto& row : rows) {
    out += std::to_string(row.m) + "," + std::to_string(row.alpha) + "," + std::to_string(row.lambda0) + "," +
           format_rational(row.gamma1_m) + "," + format_rational(row.gamma2_m) + "," + format_rational(row.dev1) +
           "," + format_rational(row.dev2) + "," + format_rational(row.covol_scaled) + "\n";
  }
  return out;
}

}  // namespace conicgin
