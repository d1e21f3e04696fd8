#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "nildist/bigint.hpp"

namespace nildist {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<BigInt> row(std::size_t i) const;
  void append_row(const std::vector<BigInt>& r);

  IntMatrix transpose() const;

  // Elementary operations.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& f);
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& f);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<BigInt> operator*(const IntMatrix& a,
                                       const std::vector<BigInt>& x);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct HermiteResult {
  IntMatrix H;  // row echelon, positive pivots, entries above pivots in [0, pivot)
  IntMatrix U;  // unimodular, H = U * A
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row of H
};

struct SmithResult {
  IntMatrix S;  // diagonal with d_1 | d_2 | ...
  IntMatrix U;
  IntMatrix V;  // S = U * A * V
  std::size_t rank = 0;
};

HermiteResult hermite_normal_form(const IntMatrix& a);
SmithResult smith_normal_form(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);

/// Determinant of a square matrix by fraction-free elimination.
BigInt determinant(const IntMatrix& a);

/// Reusable integer solver for A x = b with a fixed A. Factorizes the
/// transpose once: H = U A^T, so A x = b becomes H^T y = b with x = U^T y.
class IntegerSolver {
 public:
  IntegerSolver() = default;
  explicit IntegerSolver(const IntMatrix& a);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return hnf_.rank; }

  /// Some integral x with A x = b, or empty when none exists.
  std::optional<std::vector<BigInt>> solve(const std::vector<BigInt>& b) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  HermiteResult hnf_;
};

std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a,
                                                 const std::vector<BigInt>& b);

}  // namespace nildist
