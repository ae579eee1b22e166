#pragma once

#include <map>
#include <vector>

#include "liecx/rational.hpp"

namespace liecx {

/// One linear constraint, sorted by column index.
using SparseRow = std::vector<std::pair<int, Rat>>;
using SparseVec = std::map<int, Rat>;

/// Scales a row to integer entries with content 1 and positive first entry.
SparseRow normalize_row(const SparseVec& row);

/// A homogeneous exact linear system. Rows are normalized and deduplicated
/// on insertion.
class SparseSystem {
 public:
  explicit SparseSystem(int cols) : cols_(cols) {}

  void add_row(const SparseVec& row);

  int cols() const { return cols_; }
  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  int cols_;
  std::vector<SparseRow> rows_;
  std::map<SparseRow, int> seen_;
};

/// Result of a sparse exact elimination: rank plus the reduced pivot rows
/// (each pivot column has coefficient 1 and is eliminated from every other
/// pivot row).
struct Echelon {
  int rank = 0;
  std::map<int, SparseVec> pivot_rows;  // pivot column -> reduced row
};

/// Gaussian elimination over the rationals with a Markowitz-style pivot rule:
/// rows enter sparsest-first and each picks its least-populated unpivoted
/// column, which keeps fill-in small on the cocycle and invariant systems.
Echelon echelonize(const SparseSystem& sys);

/// Basis of the nullspace, one vector per free column, in ascending free
/// column order; deterministic.
std::vector<SparseVec> nullspace(const SparseSystem& sys);

int rank_of(const SparseSystem& sys);

/// Maintains a growing echelonized span of vectors; used for coboundary
/// quotients and primitive reduction.
class SpanReducer {
 public:
  /// Reduces `v` against the span in place; returns false if it reduced to 0.
  bool reduce(SparseVec& v) const;

  /// Reduces and, when nonzero survives, inserts the normalized remainder
  /// (leading coefficient 1) into the span. Returns true if rank grew.
  bool insert(SparseVec v);

  int rank() const { return static_cast<int>(pivots_.size()); }

  /// The reduced rows in ascending leading-coordinate order.
  std::vector<SparseVec> rows() const;

 private:
  std::map<int, SparseVec> pivots_;  // leading column -> row, leading coef 1
};

}  // namespace liecx
