#pragma once

/**
 * Fat point schemes supported on the conic xz = y^2 and the linear algebra
 * that realizes their ideals degree by degree.
 *
 * A form F of degree d lies in I_q^m exactly when every partial derivative of
 * F of order m-1 vanishes at q: Euler's identity pushes vanishing down to all
 * lower orders as long as d, d-1, ... are units mod p, which p > d ensures.
 * When d < m-1 the order is clamped to d, so every coefficient is forced to
 * zero (no nonzero form of degree d vanishes to order > d).
 */

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "conicgin/errors.hpp"
#include "conicgin/exactalg.hpp"
#include "conicgin/monomials.hpp"

namespace conicgin {

/// Point of P^2 over GF(p), normalized so its first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(const PrimeField& field, std::array<FFElement, 3> coords) {
    std::size_t lead = 0;
    while (lead < 3 && coords[lead] % field.modulus() == 0) ++lead;
    if (lead == 3) throw Error(ErrorKind::DegenerateInput, "the zero vector is not a projective point");
    const FFElement inv = field.inverse(coords[lead] % field.modulus());
    for (auto& c : coords) c = field.mul(c % field.modulus(), inv);
    coords_ = coords;
  }

  const std::array<FFElement, 3>& coords() const noexcept { return coords_; }
  FFElement operator[](std::size_t i) const { return coords_[i]; }
  bool operator==(const ProjectivePoint&) const = default;

 private:
  std::array<FFElement, 3> coords_{};
};

/// The point (1 : t : t^2) of the conic xz = y^2.
inline ProjectivePoint conic_point(const PrimeField& field, FFElement t) {
  return ProjectivePoint(field, {1, t % field.modulus(), field.mul(t, t)});
}

inline bool on_conic(const PrimeField& field, const ProjectivePoint& q) {
  return field.mul(q[0], q[2]) == field.mul(q[1], q[1]);
}

struct ConicSample {
  std::vector<FFElement> t_values;
  std::vector<ProjectivePoint> points;
};

/**
 * r distinct points (1 : t_i : t_i^2). The t_i are drawn from mt19937_64
 * outputs reduced mod p, skipping repeats, so the sample depends only on
 * (r, seed, p).
 */
inline ConicSample conic_points(int r, std::uint64_t seed, const PrimeField& field) {
  if (r < 2) throw Error(ErrorKind::DegenerateInput, "need at least 2 points, got r=" + std::to_string(r));
  if (static_cast<std::uint64_t>(r) >= field.modulus()) {
    throw Error(ErrorKind::DegenerateInput, "cannot draw " + std::to_string(r) + " distinct parameters mod " +
                                                std::to_string(field.modulus()));
  }
  std::mt19937_64 rng(seed);
  ConicSample out;
  std::unordered_set<FFElement> seen;
  while (out.t_values.size() < static_cast<std::size_t>(r)) {
    auto t = static_cast<FFElement>(rng() % field.modulus());
    if (!seen.insert(t).second) continue;
    out.t_values.push_back(t);
    out.points.push_back(conic_point(field, t));
  }
  return out;
}

/**
 * Points on the conic xz = y^2 with multiplicities. The ideal of the scheme is
 * the intersection of the I_{p_i}^{m_i}; uniform m gives the symbolic power
 * I^(m).
 */
class FatPointConfig {
 public:
  FatPointConfig(PrimeField field, std::vector<FFElement> t_values, std::vector<int> multiplicities,
                 std::uint64_t seed = 0)
      : field_(field), t_values_(std::move(t_values)), multiplicities_(std::move(multiplicities)), seed_(seed) {
    if (t_values_.size() < 2) throw Error(ErrorKind::DegenerateInput, "need at least 2 points");
    if (t_values_.size() != multiplicities_.size()) {
      throw Error(ErrorKind::DegenerateInput, "one multiplicity per point required");
    }
    std::unordered_set<FFElement> seen;
    for (std::size_t i = 0; i < t_values_.size(); ++i) {
      if (multiplicities_[i] < 1) throw Error(ErrorKind::DegenerateInput, "multiplicities must be >= 1");
      FFElement t = t_values_[i] % field_.modulus();
      if (!seen.insert(t).second) throw Error(ErrorKind::DegenerateInput, "points must be distinct");
      points_.push_back(conic_point(field_, t));
    }
  }

  /// r points from conic_points(r, seed, field), all of multiplicity m.
  static FatPointConfig uniform(int r, int m, std::uint64_t seed, const PrimeField& field) {
    if (m < 1) throw Error(ErrorKind::DegenerateInput, "multiplicity must be >= 1");
    ConicSample sample = conic_points(r, seed, field);
    return FatPointConfig(field, std::move(sample.t_values), std::vector<int>(r, m), seed);
  }

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
  const std::vector<int>& multiplicities() const noexcept { return multiplicities_; }
  const std::vector<FFElement>& t_values() const noexcept { return t_values_; }
  std::uint64_t seed() const noexcept { return seed_; }
  int r() const noexcept { return static_cast<int>(points_.size()); }

  bool is_uniform() const {
    for (int m : multiplicities_) {
      if (m != multiplicities_.front()) return false;
    }
    return true;
  }
  /// The common multiplicity; DomainError for mixed schemes.
  int uniform_multiplicity() const {
    if (!is_uniform()) throw Error(ErrorKind::DomainError, "mixed multiplicities");
    return multiplicities_.front();
  }

 private:
  PrimeField field_;
  std::vector<FFElement> t_values_;
  std::vector<int> multiplicities_;
  std::uint64_t seed_;
  std::vector<ProjectivePoint> points_;
};

/// Length of R/I for the scheme: sum of binom(m_i + 1, 2).
inline long scheme_length(std::span<const int> multiplicities) {
  long total = 0;
  for (int m : multiplicities) total += static_cast<long>(m) * (m + 1) / 2;
  return total;
}

inline long scheme_length(const FatPointConfig& cfg) { return scheme_length(cfg.multiplicities()); }

/// Default sweep bound ceil(rm/2) + 3.
inline int degree_cap(int r, int m) { return (r * m + 1) / 2 + 3; }

namespace detail {

inline FFElement falling_factorial(const PrimeField& f, int n, int k) {
  FFElement out = 1;
  for (int i = 0; i < k; ++i) out = f.mul(out, f.reduce(n - i));
  return out;
}

}  // namespace detail

/**
 * Rows: for each point q, the order-min(m_q - 1, d) partial derivatives
 * d^{i+j+k}/dx^i dy^j dz^k evaluated at q. Columns: degree-d monomials in
 * descending degrevlex.
 */
inline FFMatrix<Monomial> condition_matrix(const PrimeField& field, std::span<const ProjectivePoint> points,
                                           std::span<const int> multiplicities, int d) {
  if (d < 0) throw Error(ErrorKind::DomainError, "negative degree");
  if (points.size() != multiplicities.size()) throw Error(ErrorKind::DomainError, "points/multiplicities mismatch");
  if (static_cast<std::uint64_t>(d) >= field.modulus()) {
    throw Error(ErrorKind::CharacteristicHazard,
                "degree " + std::to_string(d) + " is not below the characteristic " + std::to_string(field.modulus()));
  }
  std::vector<Monomial> columns = monomials_of_degree(d, 3);
  FFMatrix<Monomial> out(field, 0, columns);
  std::vector<FFElement> row(columns.size());
  for (std::size_t q = 0; q < points.size(); ++q) {
    const int order = std::min(multiplicities[q] - 1, d);
    const auto& pt = points[q].coords();
    for (const Monomial& op : monomials_of_degree(order, 3)) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const Monomial& mon = columns[c];
        if (!divides(op, mon)) {
          row[c] = 0;
          continue;
        }
        FFElement v = detail::falling_factorial(field, mon.x, op.x);
        v = field.mul(v, detail::falling_factorial(field, mon.y, op.y));
        v = field.mul(v, detail::falling_factorial(field, mon.z, op.z));
        v = field.mul(v, field.pow(pt[0], mon.x - op.x));
        v = field.mul(v, field.pow(pt[1], mon.y - op.y));
        v = field.mul(v, field.pow(pt[2], mon.z - op.z));
        row[c] = v;
      }
      out.append_row(row);
    }
  }
  return out;
}

inline FFMatrix<Monomial> condition_matrix(const FatPointConfig& cfg, int d) {
  return condition_matrix(cfg.field(), cfg.points(), cfg.multiplicities(), d);
}

/// dim (R/I)_d, the rank of the condition matrix.
inline long quotient_hilbert_function(const PrimeField& field, std::span<const ProjectivePoint> points,
                                      std::span<const int> multiplicities, int d) {
  return static_cast<long>(row_reduce(condition_matrix(field, points, multiplicities, d)).rank);
}

inline long quotient_hilbert_function(const FatPointConfig& cfg, int d) {
  return quotient_hilbert_function(cfg.field(), cfg.points(), cfg.multiplicities(), d);
}

/// dim I_d = binom(d+2, 2) - rank.
inline long hilbert_function(const FatPointConfig& cfg, int d) {
  return static_cast<long>(d + 2) * (d + 1) / 2 - quotient_hilbert_function(cfg, d);
}

/// Coefficient vectors (against monomials_of_degree(d, 3)) spanning I_d.
inline std::vector<std::vector<FFElement>> symbolic_power_basis(const FatPointConfig& cfg, int d) {
  return row_reduce(condition_matrix(cfg, d)).kernel_basis;
}

/**
 * Smallest d with dim (R/I)_d equal to the scheme length. The ideal is
 * generated in degrees <= this value + 1 (its regularity).
 */
inline int stabilization_degree(const PrimeField& field, std::span<const ProjectivePoint> points,
                                 std::span<const int> multiplicities) {
  const long length = scheme_length(multiplicities);
  for (int d = 0;; ++d) {
    if (quotient_hilbert_function(field, points, multiplicities, d) == length) return d;
  }
}

}  // namespace conicgin
