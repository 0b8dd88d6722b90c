// Prints the gin staircases of I^(m) for six points on the conic and their
// scaled intercepts next to the limiting line.

#include <iostream>

#include "conicgin/ginlab.hpp"
#include "conicgin/polytope.hpp"

int main() {
  using namespace conicgin;
  const int r = 6;
  const PrimeField field(kDefaultPrime);
  const LimitShape limit = limit_shape(r);
  std::cout << "limit line through (" << format_rational(limit.gamma1) << ", 0) and (0, "
            << format_rational(limit.gamma2) << ")\n";
  for (int m = 1; m <= 4; ++m) {
    const auto cfg = FatPointConfig::uniform(r, m, /*seed=*/7, field);
    const GinStaircase s = generic_gin(cfg);
    const auto [g1, g2] = scaled_intercepts(s, m);
    std::cout << "m=" << m << " gin generators:";
    for (const Monomial& g : s.generators()) std::cout << ' ' << to_string(g);
    std::cout << "  scaled intercepts (" << format_rational(g1) << ", " << format_rational(g2) << ")\n";
  }
}
