#pragma once

// The `verify` command: every invariant family for one r over m = 1..m_max.

#include <string>
#include <vector>

#include "conicgin/driver.hpp"

namespace conicgin {

struct FamilyResult {
  std::string name;
  std::string status = "pass";  // pass | fail | skipped
  std::vector<std::string> failures;
  std::vector<int> skipped_m;

  explicit FamilyResult(std::string family) : name(std::move(family)) {}

  void fail(std::string what) {
    status = "fail";
    failures.push_back(std::move(what));
  }
};

struct VerifyReport {
  int r = 0;
  int m_max = 0;
  std::vector<FamilyResult> families;

  bool all_pass() const {
    return std::ranges::none_of(families, [](const FamilyResult& f) { return f.status == "fail"; });
  }
};

inline bool has_closed_form(int r, int m) { return r >= 4 ? (r % 2 == 0 || m % 2 == 0) : (r == 3 && m % 2 == 0); }

/// A second prime for the dual-characteristic Hilbert check.
inline std::uint32_t second_prime(std::uint32_t prime) { return prime == 65521 ? kDefaultPrime : 65521; }

inline VerifyReport run_verification(const RunConfig& c) {
  validate(c);
  const int r = c.r;
  VerifyReport report{r, c.m_max, {}};
  const std::vector<GinRecord> records = gin_records(c, c.m_max);
  auto gin_of = [&](int m) -> const GinStaircase& { return *records[m - 1].oracle; };
  auto tag = [&](int m) { return cell_name(r, m); };

  FamilyResult recursion{"recursion_vs_closed"};
  FamilyResult extremal{"extremal_shifts"};
  FamilyResult oracle_hf{"oracle_hilbert"};
  FamilyResult cancellation{"cancellation"};
  for (int m = 1; m <= c.m_max; ++m) {
    if (!has_closed_form(r, m)) {
      for (auto* fam : {&recursion, &extremal, &oracle_hf, &cancellation}) fam->skipped_m.push_back(m);
      continue;
    }
    const BettiTable closed = closed_form_resolution(r, m);
    if (r >= 4) {
      if (!(catalisano_resolve(r, m) == closed)) recursion.fail(tag(m) + ": recursion differs from closed form");
    } else {
      recursion.skipped_m.push_back(m);
    }
    const ExtremalShifts got = extremal_shifts(closed);
    const ExtremalShifts want = predicted_extremal_shifts(r, m);
    if (!(got == want)) {
      extremal.fail(tag(m) + ": (D,U)=(" + std::to_string(got.D) + "," + std::to_string(got.U) + "), predicted (" +
                    std::to_string(want.D) + "," + std::to_string(want.U) + ")");
    }
    for (std::uint32_t p : {c.prime, second_prime(c.prime)}) {
      const auto cfg = FatPointConfig::uniform(r, m, c.seed, PrimeField(p));
      for (int d = 0; d <= degree_cap(r, m); ++d) {
        if (hf_from_betti(closed, d) != hilbert_function(cfg, d)) {
          oracle_hf.fail(tag(m) + ": HF mismatch at d=" + std::to_string(d) + " over GF(" + std::to_string(p) + ")");
        }
      }
    }
    auto seq = consecutive_cancellation_reachable(hilbert_burch_of_gin(gin_of(m)), closed);
    if (!seq) {
      cancellation.fail(tag(m) + ": gin table does not cancel to the closed form");
    } else if (std::ranges::find(*seq, want.U) != seq->end() || std::ranges::find(*seq, want.D) != seq->end()) {
      cancellation.fail(tag(m) + ": cancellation touches an extremal shift");
    }
  }

  FamilyResult structure{"gin_structure"};
  FamilyResult two_route{"two_route_gin"};
  FamilyResult convergence{"convergence"};
  const LimitShape limit = limit_shape(r);
  if (!gamma_product_check(limit, r)) convergence.fail("gamma1 * gamma2 != r");
  for (int m = 1; m <= c.m_max; ++m) {
    const GinStaircase& s = gin_of(m);
    if (!is_strongly_stable(s.generators())) structure.fail(tag(m) + ": not strongly stable");
    if (s.colength() != static_cast<long>(r) * m * (m + 1) / 2) structure.fail(tag(m) + ": colength mismatch");
    if (has_closed_form(r, m)) {
      if (!shape_certificate(s, r, m).pass) structure.fail(tag(m) + ": alpha/lambda0 differ from D(m), U(m)-1");
    } else {
      structure.skipped_m.push_back(m);
    }
    if (!(staircase_from_hilbert(records[m - 1].h_vector) == s)) two_route.fail(tag(m) + ": routes disagree");

    const auto [g1, g2] = scaled_intercepts(s, m);
    StaircasePolytope poly(s, Rational(1, m));
    for (const auto& corner : poly.corners()) {
      if (!limit.contains(poly.scale() * corner.u, poly.scale() * corner.v)) {
        convergence.fail(tag(m) + ": scaled staircase leaves the limit region");
        break;
      }
    }
    if (r >= 4 && has_closed_form(r, m)) {
      if (g1 != Rational(2) || g2 != Rational(r, 2) + Rational(1, m)) {
        convergence.fail(tag(m) + ": intercepts (" + format_rational(g1) + "," + format_rational(g2) + ")");
      }
    } else if (r == 3 && m % 2 == 0) {
      if (g1 != Rational(3, 2) || g2 != Rational(2)) {
        convergence.fail(tag(m) + ": intercepts (" + format_rational(g1) + "," + format_rational(g2) + ")");
      }
    } else if (r == 2) {
      if (abs_diff(g1, limit.gamma1) > Rational(1, m) || abs_diff(g2, limit.gamma2) > Rational(1, m)) {
        convergence.fail(tag(m) + ": intercepts more than 1/m from the limit");
      }
    } else {
      convergence.skipped_m.push_back(m);
    }
  }

  FamilyResult graded{"graded_system"};
  for (int i = 1; i <= c.m_max; ++i) {
    for (int j = i; i + j <= c.m_max; ++j) {
      if (!product_contained(gin_of(i).generators(), gin_of(j).generators(), gin_of(i + j).generators())) {
        graded.fail("gin(I^(" + std::to_string(i) + ")) gin(I^(" + std::to_string(j) + ")) not in gin(I^(" +
                    std::to_string(i + j) + "))");
      }
    }
  }
  if (c.m_max < 2) graded.status = "skipped";

  report.families = {recursion, extremal, oracle_hf, structure, two_route, cancellation, convergence, graded};
  for (auto& f : report.families) {
    if (f.failures.empty() && static_cast<int>(f.skipped_m.size()) == c.m_max) f.status = "skipped";
  }
  return report;
}

inline json report_to_json(const VerifyReport& report) {
  json families = json::array();
  for (const auto& f : report.families) {
    families.push_back({{"name", f.name}, {"status", f.status}, {"failures", f.failures}, {"skipped_m", f.skipped_m}});
  }
  return {{"r", report.r}, {"m_max", report.m_max}, {"all_pass", report.all_pass()}, {"families", families}};
}

inline CommandResult cmd_verify(const RunConfig& c) {
  const VerifyReport report = run_verification(c);
  const json doc = report_to_json(report);
  if (wants_format(c, "json")) {
    write_file_atomic(c.out_dir / ("verify_r" + std::to_string(c.r) + ".json"), doc.dump(2) + "\n");
  }
  std::string text;
  for (const auto& f : report.families) {
    std::string line = (f.status == "pass" ? "PASS " : f.status == "fail" ? "FAIL " : "SKIP ") + f.name;
    if (!f.skipped_m.empty()) {
      line += " (skipped m:";
      for (int m : f.skipped_m) line += " " + std::to_string(m);
      line += ")";
    }
    text += line + "\n";
    for (const auto& why : f.failures) text += "  " + why + "\n";
  }
  return {report.all_pass() ? 0 : 1, text};
}

inline CommandResult run_command(const RunConfig& c) {
  if (c.command == "gin") return cmd_gin(c);
  if (c.command == "resolve") return cmd_resolve(c);
  if (c.command == "limit") return cmd_limit(c);
  if (c.command == "verify") return cmd_verify(c);
  throw Error(ErrorKind::InvalidConfig, "unknown command '" + c.command + "'");
}

}  // namespace conicgin
