#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "liecx/rational.hpp"

namespace liecx {

/// Dense exact-rational matrix. Sized for group templates and adjoint
/// matrices (a few dozen rows), not for the sparse solvers.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RatMat transpose() const;
  RatMat scaled(const Rat& k) const;

  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend RatMat operator+(const RatMat& a, const RatMat& b);
  friend RatMat operator-(const RatMat& a, const RatMat& b);
  friend bool operator==(const RatMat& a, const RatMat& b);

  Rat det() const;
  int rank() const;
  std::optional<RatMat> inverse() const;

  /// Writes this matrix into `dst` with its (0,0) entry at (row, col).
  void emplace_into(RatMat& dst, int row, int col) const;

  /// Block extraction: `rows` x `cols` submatrix anchored at (row, col).
  RatMat block(int row, int col, int rows, int cols) const;

  std::string str() const;  // debugging aid

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

/// Solves V * x = rhs where V's columns span a subspace; returns the unique
/// coordinate vector when rhs lies in the span (columns must be independent).
std::optional<std::vector<Rat>> solve_in_span(const RatMat& v, const std::vector<Rat>& rhs);

}  // namespace liecx
