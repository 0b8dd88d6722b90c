#pragma once

/**
 * Newton regions of gin staircases and the limiting shape of the system
 * {(1/m) P_{gin(I^(m))}}. Everything here is exact rational arithmetic.
 */

#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "conicgin/errors.hpp"
#include "conicgin/staircase.hpp"

namespace conicgin {

using Rational = boost::rational<long long>;

/// "n" for integers, "n/d" otherwise.
inline std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline Rational abs_diff(const Rational& a, const Rational& b) { return a > b ? a - b : b - a; }

struct LatticeCorner {
  long long u = 0;
  long long v = 0;
};

/// Staircase region generated by x^a y^{lambda_a} and x^alpha, scaled by `scale`.
class StaircasePolytope {
 public:
  StaircasePolytope(const GinStaircase& s, Rational scale) : scale_(scale) {
    if (scale <= 0) throw Error(ErrorKind::DomainError, "scale must be positive");
    for (int a = 0; a < s.alpha(); ++a) corners_.push_back({a, s.lambdas()[a]});
    corners_.push_back({s.alpha(), 0});
  }

  const std::vector<LatticeCorner>& corners() const noexcept { return corners_; }
  const Rational& scale() const noexcept { return scale_; }

  /// (u, v) dominates some scaled generator exponent.
  bool contains(const Rational& u, const Rational& v) const {
    for (const auto& c : corners_) {
      if (u >= scale_ * c.u && v >= scale_ * c.v) return true;
    }
    return false;
  }

  std::pair<Rational, Rational> intercepts() const {
    return {scale_ * corners_.back().u, scale_ * corners_.front().v};
  }

 private:
  std::vector<LatticeCorner> corners_;
  Rational scale_;
};

/// Region of R^2_{>=0} on or above the segment (gamma1, 0) -- (0, gamma2).
struct LimitShape {
  Rational gamma1;
  Rational gamma2;

  bool contains(const Rational& u, const Rational& v) const {
    return u >= 0 && v >= 0 && u / gamma1 + v / gamma2 >= 1;
  }
  bool operator==(const LimitShape&) const = default;
};

/// (2, r/2) for r >= 4 and (r/2, 2) for r in {2, 3}.
inline LimitShape limit_shape(int r) {
  if (r < 2) throw Error(ErrorKind::DomainError, "limit shape needs r >= 2, got r=" + std::to_string(r));
  if (r >= 4) return {Rational(2), Rational(r, 2)};
  return {Rational(r, 2), Rational(2)};
}

inline bool gamma_product_check(const LimitShape& ls, int r) { return ls.gamma1 * ls.gamma2 == Rational(r); }

/// Axis intercepts (alpha/m, lambda_0/m) of (1/m) P_{gin(I^(m))}.
inline std::pair<Rational, Rational> scaled_intercepts(const GinStaircase& s, int m) {
  if (m < 1) throw Error(ErrorKind::DomainError, "m must be >= 1");
  return {Rational(s.alpha(), m), Rational(s.lambda0(), m)};
}

/// Area of the complement of the staircase region in the quadrant.
inline long covolume(const GinStaircase& s) { return s.colength(); }

struct ConvergenceRow {
  int m = 0;
  int alpha = 0;
  int lambda0 = 0;
  Rational gamma1_m;
  Rational gamma2_m;
  Rational dev1;
  Rational dev2;
  Rational covol_scaled;  // covolume / m^2, tends to r/2
};

inline std::vector<ConvergenceRow> convergence_report(int r, const std::vector<std::pair<int, GinStaircase>>& staircases) {
  std::vector<ConvergenceRow> rows;
  if (staircases.empty()) return rows;
  const LimitShape limit = limit_shape(r);
  for (const auto& [m, s] : staircases) {
    auto [g1, g2] = scaled_intercepts(s, m);
    rows.push_back({m, s.alpha(), s.lambda0(), g1, g2, abs_diff(g1, limit.gamma1), abs_diff(g2, limit.gamma2),
                    Rational(covolume(s), static_cast<long long>(m) * m)});
  }
  return rows;
}

}  // namespace conicgin
