#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "conicgin/errors.hpp"

namespace conicgin {

/// Monomial x^x y^y z^z in K[x,y,z], stored by its exponent vector.
struct Monomial {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const noexcept { return x + y + z; }
  bool operator==(const Monomial&) const = default;
};

inline Monomial operator*(const Monomial& u, const Monomial& v) {
  return {u.x + v.x, u.y + v.y, u.z + v.z};
}

inline bool divides(const Monomial& u, const Monomial& v) {
  return u.x <= v.x && u.y <= v.y && u.z <= v.z;
}

/**
 * Degree reverse lexicographic order with x > y > z: higher degree wins, and
 * on a tie the monomial whose last nonzero exponent difference is negative is
 * the smaller one.
 */
inline std::strong_ordering degrevlex_compare(const Monomial& u, const Monomial& v) {
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  if (u.z != v.z) return v.z <=> u.z;
  if (u.y != v.y) return v.y <=> u.y;
  return std::strong_ordering::equal;  // equal degree, z and y forces equal x
}

struct DegrevlexGreater {
  bool operator()(const Monomial& u, const Monomial& v) const {
    return degrevlex_compare(u, v) == std::strong_ordering::greater;
  }
};

/// Finite set of monomials, iterated in descending degrevlex order.
using MonomialSet = std::set<Monomial, DegrevlexGreater>;

/// All monomials of degree d in the first nvars of x, y, z, descending.
inline std::vector<Monomial> monomials_of_degree(int d, int nvars) {
  if (d < 0) throw Error(ErrorKind::DomainError, "negative degree");
  if (nvars != 2 && nvars != 3) throw Error(ErrorKind::DomainError, "nvars must be 2 or 3");
  std::vector<Monomial> out;
  if (nvars == 2) {
    for (int a = d; a >= 0; --a) out.push_back({a, d - a, 0});
    return out;
  }
  // Descending degrevlex: smallest z first, then smallest y.
  for (int c = 0; c <= d; ++c) {
    for (int b = 0; b <= d - c; ++b) out.push_back({d - b - c, b, c});
  }
  return out;
}

inline bool ideal_contains(const MonomialSet& gens, const Monomial& m) {
  return std::ranges::any_of(gens, [&](const Monomial& g) { return divides(g, m); });
}

/// Elements of gens not divisible by another element of gens.
inline MonomialSet minimal_generators(const MonomialSet& gens) {
  MonomialSet out;
  for (const Monomial& m : gens) {
    bool redundant = std::ranges::any_of(gens, [&](const Monomial& g) {
      return !(g == m) && divides(g, m);
    });
    if (!redundant) out.insert(m);
  }
  return out;
}

/**
 * Borel-fixedness (char 0 sense): closure under y -> x and z -> y. Checking
 * the single-step moves on generators is enough.
 */
inline bool is_strongly_stable(const MonomialSet& gens) {
  if (gens.empty()) throw Error(ErrorKind::DomainError, "empty generator set");
  for (const Monomial& g : gens) {
    if (g.y > 0 && !ideal_contains(gens, {g.x + 1, g.y - 1, g.z})) return false;
    if (g.z > 0 && !ideal_contains(gens, {g.x, g.y + 1, g.z - 1})) return false;
  }
  return true;
}

/// Every product u*v of generators lies in the ideal generated by target.
inline bool product_contained(const MonomialSet& lhs, const MonomialSet& rhs,
                              const MonomialSet& target) {
  for (const Monomial& u : lhs) {
    for (const Monomial& v : rhs) {
      if (!ideal_contains(target, u * v)) return false;
    }
  }
  return true;
}

/// Text form "x^a*y^b*z^c"; zero exponents are omitted and the unit is "1".
inline std::string to_string(const Monomial& m) {
  std::string out;
  auto factor = [&](char var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    out += '^';
    out += std::to_string(e);
  };
  factor('x', m.x);
  factor('y', m.y);
  factor('z', m.z);
  return out.empty() ? "1" : out;
}

inline Monomial parse_monomial(std::string_view text) {
  Monomial m;
  if (text == "1") return m;
  auto fail = [&] { throw Error(ErrorKind::DomainError, "bad monomial text: " + std::string(text)); };
  while (!text.empty()) {
    auto star = text.find('*');
    std::string_view factor = text.substr(0, star);
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (factor.size() < 3 || factor[1] != '^') fail();
    int e = 0;
    for (char ch : factor.substr(2)) {
      if (ch < '0' || ch > '9') fail();
      e = e * 10 + (ch - '0');
    }
    switch (factor[0]) {
      case 'x': m.x += e; break;
      case 'y': m.y += e; break;
      case 'z': m.z += e; break;
      default: fail();
    }
  }
  return m;
}

}  // namespace conicgin
