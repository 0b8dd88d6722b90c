#pragma once

/**
 * Command implementations behind the conicgin executable. Each command takes a
 * validated RunConfig, writes its artifacts under out_dir and returns the text
 * meant for stdout. Oracle results are cached as JSON under out_dir/cache.
 */

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "conicgin/errors.hpp"
#include "conicgin/exactalg.hpp"
#include "conicgin/fatpoints.hpp"
#include "conicgin/figure.hpp"
#include "conicgin/ginlab.hpp"
#include "conicgin/parallel.hpp"
#include "conicgin/polytope.hpp"
#include "conicgin/resolutions.hpp"
#include "conicgin/serialize.hpp"

namespace conicgin {

struct RunConfig {
  std::string command;  // gin | resolve | limit | verify
  int r = 4;
  int m = 1;
  int m_max = 4;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = 3;
  std::string method;  // empty selects the command's default
  std::size_t jobs = 1;
  std::filesystem::path out_dir = "out";
  std::vector<std::string> formats;  // empty means every format the command emits
  bool use_cache = true;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

inline std::string effective_method(const RunConfig& c) {
  if (!c.method.empty()) return c.method;
  if (c.command == "gin") return "both";
  if (c.command == "resolve") return "closed";
  return "";
}

/// Largest multiplicity the command will touch.
inline int config_multiplicity(const RunConfig& c) {
  return (c.command == "limit" || c.command == "verify") ? c.m_max : c.m;
}

/**
 * r >= 2, m >= 1, trials >= 2, and a prime p > 1000 * (ceil(r m / 2) + 3)
 * for the largest m involved.
 */
inline void validate(const RunConfig& c) {
  auto invalid = [](const std::string& what) { return Error(ErrorKind::InvalidConfig, what); };
  if (c.command != "gin" && c.command != "resolve" && c.command != "limit" && c.command != "verify") {
    throw invalid("unknown command '" + c.command + "'");
  }
  if (c.r < 2) throw Error(ErrorKind::DegenerateInput, "r must be at least 2, got r=" + std::to_string(c.r));
  const int m = config_multiplicity(c);
  if (m < 1) throw invalid("multiplicity must be >= 1");
  if (c.trials < 2) throw invalid("trials must be >= 2");
  if (c.jobs < 1) throw invalid("jobs must be >= 1");
  if (!is_prime(c.prime)) throw invalid(std::to_string(c.prime) + " is not prime");
  const std::uint64_t guard = 1000ull * static_cast<std::uint64_t>(degree_cap(c.r, m));
  if (c.prime <= guard) {
    throw invalid("prime " + std::to_string(c.prime) + " is below the degree guard " + std::to_string(guard) +
                  " for r=" + std::to_string(c.r) + ", m=" + std::to_string(m));
  }
  const std::string method = effective_method(c);
  if (c.command == "gin" && method != "oracle" && method != "hilbert" && method != "both") {
    throw invalid("gin method must be oracle, hilbert or both");
  }
  if (c.command == "resolve" && method != "closed" && method != "recursion" && method != "both") {
    throw invalid("resolve method must be closed, recursion or both");
  }
  for (const auto& f : c.formats) {
    if (f != "json" && f != "csv" && f != "svg") throw invalid("unknown format '" + f + "'");
  }
}

inline bool wants_format(const RunConfig& c, const std::string& format) {
  return c.formats.empty() || std::ranges::find(c.formats, format) != c.formats.end();
}

/// Writes via a temporary file and rename, so readers never see partial files.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(path.parent_path());
  std::ostringstream suffix;
  suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  const std::filesystem::path tmp = path.string() + suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) throw Error(ErrorKind::InvalidConfig, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// JSON files keyed by (prime, r, m, seed, trials). An empty directory disables caching.
class OracleCache {
 public:
  explicit OracleCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::string key(std::uint32_t prime, int r, int m, std::uint64_t seed, int trials) {
    return "p" + std::to_string(prime) + "_r" + std::to_string(r) + "_m" + std::to_string(m) + "_s" +
           std::to_string(seed) + "_t" + std::to_string(trials);
  }

  std::optional<json> load(const std::string& key) const {
    if (dir_.empty()) return std::nullopt;
    auto text = read_file(dir_ / (key + ".json"));
    if (!text) return std::nullopt;
    try {
      return json::parse(*text);
    } catch (const json::exception&) {
      return std::nullopt;  // treat a corrupt entry as a miss
    }
  }

  void store(const std::string& key, const json& value) const {
    if (dir_.empty()) return;
    write_file_atomic(dir_ / (key + ".json"), value.dump(2) + "\n");
  }

 private:
  std::filesystem::path dir_;
};

inline OracleCache cache_for(const RunConfig& c) {
  return OracleCache(c.use_cache ? c.out_dir / "cache" : std::filesystem::path{});
}

/// Oracle output for one (r, m) cell.
struct GinRecord {
  FatPointConfig config;
  std::vector<int> h_vector;
  std::optional<GinStaircase> oracle;
};

inline GinRecord gin_record(const RunConfig& c, int m, bool need_oracle, const OracleCache& cache) {
  const PrimeField field(c.prime);
  GinRecord rec{FatPointConfig::uniform(c.r, m, c.seed, field), {}, std::nullopt};
  const std::string key = OracleCache::key(c.prime, c.r, m, c.seed, c.trials);
  if (auto hit = cache.load(key)) {
    rec.h_vector = hit->at("h_vector").get<std::vector<int>>();
    if (hit->contains("oracle")) rec.oracle = staircase_from_json(hit->at("oracle"));
    if (rec.oracle || !need_oracle) return rec;
  } else {
    rec.h_vector = artinian_h_vector(rec.config);
  }
  if (need_oracle) rec.oracle = generic_gin(rec.config, c.trials, c.seed);

  json entry{{"config", config_to_json(rec.config)}, {"trials", c.trials}, {"h_vector", rec.h_vector}};
  if (rec.oracle) entry["oracle"] = {{"alpha", rec.oracle->alpha()}, {"lambdas", rec.oracle->lambdas()}};
  cache.store(key, entry);
  return rec;
}

/// Oracle records for m = 1..m_max, computed concurrently up to c.jobs.
inline std::vector<GinRecord> gin_records(const RunConfig& c, int m_max) {
  const OracleCache cache = cache_for(c);
  std::vector<std::optional<GinRecord>> slots(m_max);
  parallel_for(static_cast<std::size_t>(m_max), c.jobs,
               [&](std::size_t i) { slots[i] = gin_record(c, static_cast<int>(i) + 1, true, cache); });
  std::vector<GinRecord> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline std::string cell_name(int r, int m) { return "r" + std::to_string(r) + "_m" + std::to_string(m); }

inline CommandResult cmd_gin(const RunConfig& c) {
  validate(c);
  const std::string method = effective_method(c);
  const GinRecord rec = gin_record(c, c.m, method != "hilbert", cache_for(c));

  std::optional<GinStaircase> from_h;
  if (method != "oracle") from_h = staircase_from_hilbert(rec.h_vector);
  std::string verdict = method + "-only";
  if (method == "both") verdict = (*rec.oracle == *from_h) ? "both-agree" : "disagree";
  const GinStaircase& result = rec.oracle ? *rec.oracle : *from_h;

  json doc = staircase_to_json(result);
  doc["h_vector"] = rec.h_vector;
  doc["provenance"] = {{"prime", c.prime}, {"r", c.r},
                       {"m", c.m},         {"seed", c.seed},
                       {"t_values", rec.config.t_values()}, {"trials", c.trials},
                       {"method", method}, {"verdict", verdict}};
  try {
    const ShapeCertificate cert = shape_certificate(result, c.r, c.m);
    doc["certificate"] = {{"pass", cert.pass},
                          {"alpha", cert.alpha},
                          {"predicted_alpha", cert.predicted_alpha},
                          {"lambda0", cert.lambda0},
                          {"predicted_lambda0", cert.predicted_lambda0}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedCase) throw;
    doc["certificate"] = "no closed-form certificate";
  }

  const std::string stem = "gin_" + cell_name(c.r, c.m);
  if (wants_format(c, "json")) write_file_atomic(c.out_dir / (stem + ".json"), doc.dump(2) + "\n");
  if (wants_format(c, "csv")) write_file_atomic(c.out_dir / (stem + ".csv"), staircase_csv(result));
  return {verdict == "disagree" ? 1 : 0, doc.dump(2) + "\n"};
}

inline CommandResult cmd_resolve(const RunConfig& c) {
  validate(c);
  const std::string method = effective_method(c);
  json doc{{"r", c.r}, {"m", c.m}, {"method", method}};
  BettiTable table;
  int exit_code = 0;
  if (method == "closed") {
    table = closed_form_resolution(c.r, c.m);
  } else if (method == "recursion") {
    table = catalisano_resolve(c.r, c.m);
  } else {
    table = closed_form_resolution(c.r, c.m);
    const bool equal = table == catalisano_resolve(c.r, c.m);
    doc["verdict"] = equal ? "equal" : "differ";
    exit_code = equal ? 0 : 1;
  }
  doc["f0"] = shifts_to_json(table.f0);
  doc["f1"] = shifts_to_json(table.f1);
  const ExtremalShifts ext = extremal_shifts(table);
  doc["extremal"] = {{"D", ext.D}, {"U", ext.U}};
  if (wants_format(c, "json")) {
    write_file_atomic(c.out_dir / ("resolve_" + cell_name(c.r, c.m) + ".json"), doc.dump(2) + "\n");
  }
  return {exit_code, doc.dump(2) + "\n"};
}

inline std::vector<std::pair<int, GinStaircase>> staircase_series(const std::vector<GinRecord>& records) {
  std::vector<std::pair<int, GinStaircase>> out;
  for (std::size_t i = 0; i < records.size(); ++i) out.emplace_back(static_cast<int>(i) + 1, *records[i].oracle);
  return out;
}

inline CommandResult cmd_limit(const RunConfig& c) {
  validate(c);
  const auto series = staircase_series(gin_records(c, c.m_max));
  const std::string csv = convergence_csv(convergence_report(c.r, series));
  const std::string stem = "limit_r" + std::to_string(c.r);
  if (wants_format(c, "csv")) write_file_atomic(c.out_dir / (stem + ".csv"), csv);
  if (wants_format(c, "svg")) write_file_atomic(c.out_dir / (stem + ".svg"), limit_figure_svg(c.r, series));
  const LimitShape limit = limit_shape(c.r);
  return {0, csv + "limit line: (" + format_rational(limit.gamma1) + ",0)-(0," + format_rational(limit.gamma2) +
                 ")\n"};
}

}  // namespace conicgin
