#pragma once

#include <optional>
#include <vector>

#include "conicgin/errors.hpp"
#include "conicgin/monomials.hpp"

namespace conicgin {

/// Monomial ideal (x^alpha, x^{alpha-1} y^{lambda_{alpha-1}}, ..., x y^{lambda_1}, y^{lambda_0}).
class GinStaircase {
 public:
  GinStaircase(int alpha, std::vector<int> lambdas) : alpha_(alpha), lambdas_(std::move(lambdas)) {
    if (alpha_ < 1 || static_cast<int>(lambdas_.size()) != alpha_) {
      throw Error(ErrorKind::DomainError, "staircase needs alpha >= 1 and exactly alpha lambdas");
    }
    for (std::size_t a = 0; a < lambdas_.size(); ++a) {
      if (lambdas_[a] < 1) throw Error(ErrorKind::DomainError, "lambdas must be positive");
      if (a > 0 && lambdas_[a] >= lambdas_[a - 1]) {
        throw Error(ErrorKind::DomainError, "lambdas must be strictly decreasing");
      }
    }
  }

  int alpha() const noexcept { return alpha_; }
  const std::vector<int>& lambdas() const noexcept { return lambdas_; }
  int lambda0() const { return lambdas_.front(); }

  /// x^a y^{lambda_a} for a < alpha, plus x^alpha.
  MonomialSet generators() const {
    MonomialSet out;
    for (int a = 0; a < alpha_; ++a) out.insert({a, lambdas_[a], 0});
    out.insert({alpha_, 0, 0});
    return out;
  }

  /// Number of standard monomials x^a y^b, i.e. the sum of the lambdas.
  long colength() const {
    long sum = 0;
    for (int l : lambdas_) sum += l;
    return sum;
  }

  bool operator==(const GinStaircase&) const = default;

 private:
  int alpha_;
  std::vector<int> lambdas_;
};

/**
 * Reads a staircase off a minimal generating set. nullopt when the set is not
 * of the expected shape: a z appears, the pure x-power is missing, or some
 * column 0..alpha-1 lacks exactly one generator x^a y^b with strictly
 * decreasing b.
 */
inline std::optional<GinStaircase> staircase_from_generators(const MonomialSet& gens) {
  int alpha = -1;
  for (const Monomial& g : gens) {
    if (g.z != 0) return std::nullopt;
    if (g.y == 0) {
      if (alpha != -1) return std::nullopt;
      alpha = g.x;
    }
  }
  if (alpha < 1) return std::nullopt;
  std::vector<int> lambdas(alpha, -1);
  for (const Monomial& g : gens) {
    if (g.y == 0) continue;
    if (g.x >= alpha || lambdas[g.x] != -1) return std::nullopt;
    lambdas[g.x] = g.y;
  }
  for (std::size_t a = 0; a < lambdas.size(); ++a) {
    if (lambdas[a] < 1) return std::nullopt;
    if (a > 0 && lambdas[a] >= lambdas[a - 1]) return std::nullopt;
  }
  return GinStaircase(alpha, std::move(lambdas));
}

/// Standard monomials of each degree in the staircase's two-variable quotient.
inline std::vector<int> h_vector_of(const GinStaircase& s) {
  std::vector<int> h(s.lambda0(), 0);
  for (int a = 0; a < s.alpha(); ++a) {
    for (int b = 0; b < s.lambdas()[a]; ++b) {
      if (a + b >= static_cast<int>(h.size())) h.resize(a + b + 1, 0);
      ++h[a + b];
    }
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace conicgin
