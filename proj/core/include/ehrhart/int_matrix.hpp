#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ehrhart {

// Arbitrary-precision scalars. All exact; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  void swap_rows(std::size_t i, std::size_t j);
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Exact determinant by fraction-free Bareiss elimination.
/// Throws std::invalid_argument on non-square input.
Int det_bareiss(const IntMatrix& m);

/// Row-style Hermite normal form: h = u * m with |det u| = 1.
/// Pivots positive, entries above each pivot reduced into [0, pivot).
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};
HnfResult hnf(const IntMatrix& m);

/// Smith normal form: s = u * m * v with u, v unimodular, s diagonal,
/// nonnegative, and each invariant factor dividing the next.
struct SnfResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};
SnfResult snf(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

}  // namespace ehrhart
