#pragma once

/**
 * Shift data of length-one free resolutions 0 -> F1 -> F0 -> I -> 0.
 *
 * Only the twists of the free summands are tracked; maps are never built.
 * A table for I^(m) of r points on an irreducible conic comes from three
 * places: the uniform Catalisano recursion (r >= 4), the closed forms for
 * even r, odd r with even m, and r = 3 with even m, and the Hilbert-Burch
 * resolution of a gin staircase, which cancels down to the true table.
 */

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conicgin/errors.hpp"
#include "conicgin/staircase.hpp"

namespace conicgin {

/// Multiset of positive twists, stored as shift -> multiplicity.
class ShiftMultiset {
 public:
  ShiftMultiset() = default;
  ShiftMultiset(std::initializer_list<int> shifts) {
    for (int s : shifts) add(s);
  }

  void add(int shift, int mult = 1) {
    if (mult <= 0) return;
    counts_[shift] += mult;
  }

  /// Removes one copy; false when the shift is absent.
  bool remove(int shift) {
    auto it = counts_.find(shift);
    if (it == counts_.end()) return false;
    if (--it->second == 0) counts_.erase(it);
    return true;
  }

  int count(int shift) const {
    auto it = counts_.find(shift);
    return it == counts_.end() ? 0 : it->second;
  }

  int size() const {
    int n = 0;
    for (const auto& [shift, mult] : counts_) n += mult;
    return n;
  }
  bool empty() const noexcept { return counts_.empty(); }
  int min() const {
    if (empty()) throw Error(ErrorKind::EmptyTable, "min of an empty shift multiset");
    return counts_.begin()->first;
  }
  int max() const {
    if (empty()) throw Error(ErrorKind::EmptyTable, "max of an empty shift multiset");
    return counts_.rbegin()->first;
  }

  ShiftMultiset shifted(int by) const {
    ShiftMultiset out;
    for (const auto& [shift, mult] : counts_) out.add(shift + by, mult);
    return out;
  }

  bool includes(const ShiftMultiset& sub) const {
    return std::ranges::all_of(sub.counts_, [&](const auto& kv) { return count(kv.first) >= kv.second; });
  }

  /// this \ other as multisets; other must be included in this.
  ShiftMultiset minus(const ShiftMultiset& other) const {
    ShiftMultiset out = *this;
    for (const auto& [shift, mult] : other.counts_) {
      for (int i = 0; i < mult; ++i) {
        if (!out.remove(shift)) throw Error(ErrorKind::DomainError, "multiset difference of non-subset");
      }
    }
    return out;
  }

  /// Ascending list with repeats.
  std::vector<int> values() const {
    std::vector<int> out;
    for (const auto& [shift, mult] : counts_) out.insert(out.end(), mult, shift);
    return out;
  }

  const std::map<int, int>& counts() const noexcept { return counts_; }
  bool operator==(const ShiftMultiset&) const = default;

 private:
  std::map<int, int> counts_;
};

/// Generator twists f0 (summands of F0) and syzygy twists f1 (summands of F1).
struct BettiTable {
  ShiftMultiset f0;
  ShiftMultiset f1;

  /// Hilbert-Burch shape: |f0| = |f1| + 1 and every syzygy above min(f0).
  bool well_formed() const {
    if (f0.size() != f1.size() + 1) return false;
    return f1.empty() || f1.min() > f0.min();
  }

  bool operator==(const BettiTable&) const = default;
};

/// The resolution 0 -> 0 -> R -> I^(0) -> 0.
inline BettiTable base_table() { return {ShiftMultiset{0}, ShiftMultiset{}}; }

/**
 * One step I^(t-1) -> I^(t) of the uniform recursion for r >= 4 points on an
 * irreducible conic: every old twist moves up by 2, and
 *   rt even: F0 gains R(-rt/2), F1 gains R(-rt/2 - 2);
 *   rt odd:  F0 gains R^2(-(rt+1)/2), F1 gains R^2(-(rt+1)/2 - 1).
 */
inline BettiTable catalisano_step(const BettiTable& prev, int r, int t) {
  if (r < 4) throw Error(ErrorKind::DomainError, "the uniform recursion needs r >= 4 (r=" + std::to_string(r) + ")");
  if (t < 1) throw Error(ErrorKind::DomainError, "recursion step t must be >= 1");
  BettiTable next{prev.f0.shifted(2), prev.f1.shifted(2)};
  const int rt = r * t;
  if (rt % 2 == 0) {
    next.f0.add(rt / 2);
    next.f1.add(rt / 2 + 2);
  } else {
    next.f0.add((rt + 1) / 2, 2);
    next.f1.add((rt + 1) / 2 + 1, 2);
  }
  return next;
}

inline BettiTable catalisano_resolve(int r, int m) {
  if (r < 4) throw Error(ErrorKind::DomainError, "the uniform recursion needs r >= 4 (r=" + std::to_string(r) + ")");
  if (m < 0) throw Error(ErrorKind::DomainError, "negative multiplicity");
  BettiTable table = base_table();
  for (int t = 1; t <= m; ++t) table = catalisano_step(table, r, t);
  return table;
}

/// I^(t-2) -> I^(t) for odd r and even t, as the composite of its two steps.
inline BettiTable catalisano_double_step(const BettiTable& prev, int r, int t) {
  if (r % 2 == 0 || t % 2 != 0 || t < 2) {
    throw Error(ErrorKind::DomainError, "the double step is for odd r and even t >= 2");
  }
  return catalisano_step(catalisano_step(prev, r, t - 1), r, t);
}

/**
 * Closed-form tables:
 *  (a) r >= 4 even:       F0 = sum_{j=0}^m R(-2(m-j) - rj/2),
 *                         F1 = sum_{j=1}^m R(-2(m-j) - rj/2 - 2);
 *  (b) r >= 5 odd, m even: F0 = sum_{j=0}^{m/2} R(-2m - j(r-4))
 *                              + sum_{j=0}^{m/2-1} R^2(-2m - j(r-4) - (r-1)/2 + 1),
 *                         F1 = sum_{j=1}^{m/2} R(-2m - j(r-4) - 2)
 *                              + sum_{j=0}^{m/2-1} R^2(-2m - j(r-4) - (r-1)/2);
 *  (c) r = 3, m even:     F0 = R(-3m/2) + sum_{j=0}^{m/2-1} R^3(-3m/2 - j - 1),
 *                         F1 = sum_{j=0}^{m/2-1} R^3(-3m/2 - j - 2).
 */
inline BettiTable closed_form_resolution(int r, int m) {
  if (m < 0) throw Error(ErrorKind::DomainError, "negative multiplicity");
  auto unsupported = [&] {
    return Error(ErrorKind::UnsupportedCase,
                 "no closed form for r=" + std::to_string(r) + ", m=" + std::to_string(m));
  };
  BettiTable table;
  if (r >= 4 && r % 2 == 0) {
    for (int j = 0; j <= m; ++j) table.f0.add(2 * (m - j) + r * j / 2);
    for (int j = 1; j <= m; ++j) table.f1.add(2 * (m - j) + r * j / 2 + 2);
  } else if (r >= 5 && m % 2 == 0) {
    const int half = m / 2;
    for (int j = 0; j <= half; ++j) table.f0.add(2 * m + j * (r - 4));
    for (int j = 0; j < half; ++j) table.f0.add(2 * m + j * (r - 4) + (r - 1) / 2 - 1, 2);
    for (int j = 1; j <= half; ++j) table.f1.add(2 * m + j * (r - 4) + 2);
    for (int j = 0; j < half; ++j) table.f1.add(2 * m + j * (r - 4) + (r - 1) / 2, 2);
  } else if (r == 3 && m % 2 == 0) {
    const int half = m / 2;
    table.f0.add(3 * m / 2);
    for (int j = 0; j < half; ++j) table.f0.add(3 * m / 2 + j + 1, 3);
    for (int j = 0; j < half; ++j) table.f1.add(3 * m / 2 + j + 2, 3);
  } else {
    throw unsupported();
  }
  return table;
}

struct ExtremalShifts {
  int D = 0;  // smallest generator twist
  int U = 0;  // largest syzygy twist
  bool operator==(const ExtremalShifts&) const = default;
};

inline ExtremalShifts extremal_shifts(const BettiTable& b) {
  if (b.f0.empty() || b.f1.empty()) throw Error(ErrorKind::EmptyTable, "table has no generators or no syzygies");
  return {b.f0.min(), b.f1.max()};
}

/// (2m, rm/2 + 2) for even r >= 4 or odd r >= 5 with m even; (3m/2, 2m + 1) for r = 3, m even.
inline ExtremalShifts predicted_extremal_shifts(int r, int m) {
  if (m >= 1 && r >= 4 && (r % 2 == 0 || m % 2 == 0)) return {2 * m, r * m / 2 + 2};
  if (m >= 1 && r == 3 && m % 2 == 0) return {3 * m / 2, 2 * m + 1};
  throw Error(ErrorKind::UnsupportedCase,
              "no predicted shifts for r=" + std::to_string(r) + ", m=" + std::to_string(m));
}

/// F1 = sum_i R(-lambda_i - i - 1), F0 = sum_i R(-lambda_i - i) + R(-alpha), i < alpha.
inline BettiTable hilbert_burch_of_gin(const GinStaircase& s) {
  BettiTable table;
  for (int i = 0; i < s.alpha(); ++i) {
    table.f0.add(s.lambdas()[i] + i);
    table.f1.add(s.lambdas()[i] + i + 1);
  }
  table.f0.add(s.alpha());
  return table;
}

/**
 * Sequence of shifts v, ascending, such that cancelling one R(-v) from both F0
 * and F1 for each entry turns `from` into `to`. nullopt when no such sequence
 * exists. For length-one tables every consecutive cancellation pairs homological
 * degrees 0 and 1, so this is a multiset comparison.
 */
inline std::optional<std::vector<int>> consecutive_cancellation_reachable(const BettiTable& from,
                                                                          const BettiTable& to) {
  if (!from.f0.includes(to.f0) || !from.f1.includes(to.f1)) return std::nullopt;
  ShiftMultiset dropped0 = from.f0.minus(to.f0);
  ShiftMultiset dropped1 = from.f1.minus(to.f1);
  if (!(dropped0 == dropped1)) return std::nullopt;
  return dropped0.values();
}

/// binom(n, 2), zero for n < 2.
inline long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// dim I_d from the Euler characteristic of 0 -> F1 -> F0 -> I -> 0.
inline long hf_from_betti(const BettiTable& b, int d) {
  long total = 0;
  for (const auto& [shift, mult] : b.f0.counts()) total += mult * binom2(d - shift + 2);
  for (const auto& [shift, mult] : b.f1.counts()) total -= mult * binom2(d - shift + 2);
  return total;
}

}  // namespace conicgin
