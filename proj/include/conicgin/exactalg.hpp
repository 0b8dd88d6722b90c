#pragma once

/**
 * Arithmetic in GF(p) and dense Gauss-Jordan elimination with a fixed,
 * caller-supplied column order.
 *
 * The pivot search is deliberately naive: the first nonzero entry in the
 * current column wins. Pivot labels double as initial monomials downstream,
 * so the elimination must be reproducible bit for bit.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conicgin/errors.hpp"

namespace conicgin {

/// Residue in [0, p). The modulus lives in the owning PrimeField.
using FFElement = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

class PrimeField;

FFElement modular_inverse(const PrimeField& field, FFElement a);

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    // products are formed in 64 bits, so p must fit comfortably in 32
    if (!is_prime(p) || p >= (1u << 31)) {
      throw Error(ErrorKind::DomainError, "modulus " + std::to_string(p) + " is not a usable prime");
    }
  }

  std::uint32_t modulus() const noexcept { return p_; }

  FFElement reduce(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    return static_cast<FFElement>(r < 0 ? r + p : r);
  }

  FFElement add(FFElement a, FFElement b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  FFElement sub(FFElement a, FFElement b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  FFElement neg(FFElement a) const noexcept { return a == 0 ? 0 : p_ - a; }
  FFElement mul(FFElement a, FFElement b) const noexcept {
    return static_cast<FFElement>(static_cast<std::uint64_t>(a) * b % p_);
  }
  FFElement pow(FFElement base, std::uint64_t e) const noexcept {
    FFElement result = 1 % p_;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  FFElement inverse(FFElement a) const { return modular_inverse(*this, a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// b with a*b = 1 mod p, by the extended Euclidean algorithm.
inline FFElement modular_inverse(const PrimeField& field, FFElement a) {
  const std::int64_t p = field.modulus();
  std::int64_t r0 = p, r1 = a % p;
  if (r1 == 0) throw Error(ErrorKind::ZeroInverse, "0 has no inverse mod " + std::to_string(p));
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return field.reduce(s0);
}

/**
 * Dense row-major matrix over GF(p) whose columns carry labels. The label
 * order is the scan order used by row_reduce.
 */
template <typename Label>
class FFMatrix {
 public:
  FFMatrix(PrimeField field, std::size_t rows, std::vector<Label> column_labels)
      : field_(field), rows_(rows), labels_(std::move(column_labels)),
        entries_(rows * labels_.size(), 0) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      for (std::size_t j = i + 1; j < labels_.size(); ++j) {
        if (labels_[i] == labels_[j]) {
          throw Error(ErrorKind::DomainError, "column labels must be distinct");
        }
      }
    }
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return labels_.size(); }
  const std::vector<Label>& column_labels() const noexcept { return labels_; }

  FFElement operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value) {
    entries_[r * cols() + c] = field_.reduce(value);
  }

  std::span<const FFElement> row(std::size_t r) const {
    return {entries_.data() + r * cols(), cols()};
  }

  void append_row(std::span<const FFElement> values) {
    if (values.size() != cols()) throw Error(ErrorKind::DomainError, "row length mismatch");
    for (FFElement v : values) entries_.push_back(v % field_.modulus());
    ++rows_;
  }

  std::vector<FFElement> multiply(std::span<const FFElement> v) const {
    if (v.size() != cols()) throw Error(ErrorKind::DomainError, "vector length mismatch");
    std::vector<FFElement> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < cols(); ++c) {
        acc = (acc + static_cast<std::uint64_t>(entries_[r * cols() + c]) * v[c]) % field_.modulus();
      }
      out[r] = static_cast<FFElement>(acc);
    }
    return out;
  }

  std::vector<FFElement>& raw() noexcept { return entries_; }
  const std::vector<FFElement>& raw() const noexcept { return entries_; }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::vector<Label> labels_;
  std::vector<FFElement> entries_;
};

template <typename Label>
struct RowReduction {
  std::size_t rank = 0;
  std::vector<Label> pivot_columns;        // labels, in scan order
  std::vector<std::size_t> pivot_indices;  // column positions of the same pivots
  std::vector<std::vector<FFElement>> kernel_basis;
};

/// Reduced row-echelon form, scanning columns left to right.
template <typename Label>
RowReduction<Label> row_reduce(const FFMatrix<Label>& m) {
  const PrimeField& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<FFElement> a = m.raw();
  auto at = [&](std::size_t r, std::size_t c) -> FFElement& { return a[r * cols + c]; };

  RowReduction<Label> out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = pivot_row;
    while (found < rows && at(found, c) == 0) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(found, k), at(pivot_row, k));
    }
    const FFElement inv = f.inverse(at(pivot_row, c));
    for (std::size_t k = c; k < cols; ++k) at(pivot_row, k) = f.mul(at(pivot_row, k), inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const FFElement factor = at(r, c);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        at(r, k) = f.sub(at(r, k), f.mul(factor, at(pivot_row, k)));
      }
    }
    out.pivot_indices.push_back(c);
    out.pivot_columns.push_back(m.column_labels()[c]);
    ++pivot_row;
  }
  out.rank = pivot_row;

  // One kernel vector per free column: 1 in the free slot, minus the reduced
  // column entries in the pivot slots.
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : out.pivot_indices) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FFElement> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < out.rank; ++i) {
      v[out.pivot_indices[i]] = f.neg(at(i, free));
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

/// Column labels 0..n-1, for matrices without a natural labelling.
inline std::vector<std::size_t> index_labels(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return labels;
}

}  // namespace conicgin
