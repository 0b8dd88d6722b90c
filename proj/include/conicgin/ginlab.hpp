#pragma once

/**
 * Reverse-lex generic initial ideals of symbolic powers of points on the conic.
 *
 * Two independent routes produce the same staircase:
 *  - generic_gin: random change of coordinates, then the initial monomials of
 *    each graded piece read off as pivots of a row-reduced basis;
 *  - staircase_from_hilbert: the staircase forced by the h-vector of the
 *    artinian reduction, using that the gin is strongly stable and z-free.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "conicgin/errors.hpp"
#include "conicgin/exactalg.hpp"
#include "conicgin/fatpoints.hpp"
#include "conicgin/monomials.hpp"
#include "conicgin/parallel.hpp"
#include "conicgin/resolutions.hpp"
#include "conicgin/staircase.hpp"

namespace conicgin {

/// Pivot labels of the row-reduced degree-d piece: in(I)_d for the given points.
inline std::vector<Monomial> initial_monomials(const PrimeField& field, std::span<const ProjectivePoint> points,
                                               std::span<const int> multiplicities, int d) {
  auto basis = row_reduce(condition_matrix(field, points, multiplicities, d)).kernel_basis;
  FFMatrix<Monomial> forms(field, 0, monomials_of_degree(d, 3));
  for (const auto& v : basis) forms.append_row(v);
  return row_reduce(forms).pivot_columns;
}

/// Degree bound for the gin sweep: the default cap, but never below regularity + 1.
inline int gin_sweep_degree(const FatPointConfig& cfg) {
  const int m = cfg.uniform_multiplicity();
  const int reg_guard = stabilization_degree(cfg.field(), cfg.points(), cfg.multiplicities()) + 2;
  return std::max(degree_cap(cfg.r(), m), reg_guard);
}

namespace detail {

inline std::array<FFElement, 9> random_invertible(const PrimeField& f, std::mt19937_64& rng) {
  for (;;) {
    std::array<FFElement, 9> g{};
    for (auto& e : g) e = static_cast<FFElement>(rng() % f.modulus());
    auto m = [&](int i, int j) { return g[3 * i + j]; };
    FFElement det = f.mul(m(0, 0), f.sub(f.mul(m(1, 1), m(2, 2)), f.mul(m(1, 2), m(2, 1))));
    det = f.sub(det, f.mul(m(0, 1), f.sub(f.mul(m(1, 0), m(2, 2)), f.mul(m(1, 2), m(2, 0)))));
    det = f.add(det, f.mul(m(0, 2), f.sub(f.mul(m(1, 0), m(2, 1)), f.mul(m(1, 1), m(2, 0)))));
    if (det != 0) return g;
  }
}

inline ProjectivePoint transform(const PrimeField& f, const std::array<FFElement, 9>& g, const ProjectivePoint& q) {
  std::array<FFElement, 3> image{};
  for (int i = 0; i < 3; ++i) {
    FFElement acc = 0;
    for (int j = 0; j < 3; ++j) acc = f.add(acc, f.mul(g[3 * i + j], q[j]));
    image[i] = acc;
  }
  return ProjectivePoint(f, image);
}

/// One coordinate change and the resulting minimal generators of in(g.I).
inline MonomialSet gin_trial(const FatPointConfig& cfg, int max_degree, std::uint64_t seed, std::uint64_t trial) {
  const PrimeField& f = cfg.field();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  const auto g = random_invertible(f, rng);
  std::vector<ProjectivePoint> moved;
  for (const auto& q : cfg.points()) moved.push_back(transform(f, g, q));

  MonomialSet initial;
  for (int d = 0; d <= max_degree; ++d) {
    for (const Monomial& mon : initial_monomials(f, moved, cfg.multiplicities(), d)) initial.insert(mon);
  }
  return minimal_generators(initial);
}

}  // namespace detail

/**
 * The oracle route. Each trial draws an independent random g in GL_3(GF(p)),
 * moves the points, and collects initial monomials for d up to
 * gin_sweep_degree. All trials must produce the same strongly stable
 * staircase of the expected colength; otherwise GenericityFailure.
 */
inline GinStaircase generic_gin(const FatPointConfig& cfg, int trials = 3, std::uint64_t seed = 0,
                                std::size_t jobs = 1) {
  if (!cfg.is_uniform()) throw Error(ErrorKind::DomainError, "generic_gin needs uniform multiplicities");
  if (trials < 2) throw Error(ErrorKind::DomainError, "at least 2 trials are required");
  const int max_degree = gin_sweep_degree(cfg);

  std::vector<MonomialSet> results(trials);
  parallel_for(static_cast<std::size_t>(trials), jobs,
               [&](std::size_t t) { results[t] = detail::gin_trial(cfg, max_degree, seed, t); });

  for (int t = 1; t < trials; ++t) {
    if (results[t] != results[0]) {
      throw Error(ErrorKind::GenericityFailure,
                  "coordinate changes disagree (trial 0 vs trial " + std::to_string(t) + ")");
    }
  }
  if (!is_strongly_stable(results[0])) {
    throw Error(ErrorKind::GenericityFailure, "initial ideal is not strongly stable");
  }
  auto stair = staircase_from_generators(results[0]);
  if (!stair) throw Error(ErrorKind::GenericityFailure, "initial ideal is not a two-variable staircase");
  if (stair->colength() != scheme_length(cfg)) {
    throw Error(ErrorKind::GenericityFailure, "staircase colength " + std::to_string(stair->colength()) +
                                                  " differs from scheme length " +
                                                  std::to_string(scheme_length(cfg)));
  }
  return *stair;
}

/// First differences of HF(R/I), stopping where HF(R/I) reaches the scheme length.
inline std::vector<int> artinian_h_vector(const FatPointConfig& cfg) {
  if (!cfg.is_uniform()) throw Error(ErrorKind::DomainError, "artinian_h_vector needs uniform multiplicities");
  const long length = scheme_length(cfg);
  std::vector<int> h;
  long previous = 0;
  for (int d = 0; previous < length; ++d) {
    const long hf = quotient_hilbert_function(cfg, d);
    h.push_back(static_cast<int>(hf - previous));
    previous = hf;
  }
  return h;
}

/**
 * The staircase route: alpha = max h(e) and lambda_a = #{e : h(e) > a}. In a
 * strongly stable ideal of K[x,y] the standard monomials of degree e are
 * y^e, x y^{e-1}, ..., x^{h(e)-1} y^{e-h(e)+1}, which forces this rule.
 */
inline GinStaircase staircase_from_hilbert(std::span<const int> h) {
  if (h.empty() || h.front() != 1) throw Error(ErrorKind::MalformedHVector, "h(0) must be 1");
  int alpha = 0;
  for (int v : h) {
    if (v < 0) throw Error(ErrorKind::MalformedHVector, "negative h-vector entry");
    alpha = std::max(alpha, v);
  }
  std::vector<int> lambdas(alpha, 0);
  for (int a = 0; a < alpha; ++a) {
    lambdas[a] = static_cast<int>(std::ranges::count_if(h, [a](int v) { return v > a; }));
    if (a > 0 && lambdas[a] >= lambdas[a - 1]) {
      throw Error(ErrorKind::MalformedHVector, "reconstructed lambdas are not strictly decreasing");
    }
  }
  GinStaircase s(alpha, std::move(lambdas));
  std::vector<int> trimmed(h.begin(), h.end());
  while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
  if (h_vector_of(s) != trimmed) {
    throw Error(ErrorKind::MalformedHVector, "h-vector is not that of a strongly stable two-variable quotient");
  }
  return s;
}

struct ShapeCertificate {
  bool pass = false;
  int alpha = 0;
  int predicted_alpha = 0;  // D(m)
  int lambda0 = 0;
  int predicted_lambda0 = 0;  // U(m) - 1
};

/// Checks alpha = D(m) and lambda_0 = U(m) - 1 against the predicted extremal shifts.
inline ShapeCertificate shape_certificate(const GinStaircase& s, int r, int m) {
  const ExtremalShifts predicted = predicted_extremal_shifts(r, m);
  ShapeCertificate cert;
  cert.alpha = s.alpha();
  cert.predicted_alpha = predicted.D;
  cert.lambda0 = s.lambda0();
  cert.predicted_lambda0 = predicted.U - 1;
  cert.pass = cert.alpha == cert.predicted_alpha && cert.lambda0 == cert.predicted_lambda0;
  return cert;
}

}  // namespace conicgin
