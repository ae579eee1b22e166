#include "liecx/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace liecx {

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat RatMat::scaled(const Rat& k) const {
  RatMat m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * k;
  return m;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  RatMat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  RatMat c(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
  return c;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  RatMat c(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
  return c;
}

bool operator==(const RatMat& a, const RatMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Rat RatMat::det() const {
  if (!is_square()) throw std::invalid_argument("det of non-square matrix");
  RatMat m = *this;
  Rat d = 1;
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    for (int r = col + 1; r < rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat f = m.at(r, col) / m.at(col, col);
      for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return d;
}

int RatMat::rank() const {
  RatMat m = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    for (int r = rank + 1; r < rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat f = m.at(r, col) / m.at(rank, col);
      for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<RatMat> RatMat::inverse() const {
  if (!is_square()) return std::nullopt;
  int n = rows_;
  RatMat m = *this;
  RatMat inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rat p = m.at(col, col);
    for (int j = 0; j < n; ++j) {
      m.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

void RatMat::emplace_into(RatMat& dst, int row, int col) const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) dst.at(row + i, col + j) = at(i, j);
}

RatMat RatMat::block(int row, int col, int rows, int cols) const {
  RatMat b(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b.at(i, j) = at(row + i, col + j);
  return b;
}

std::string RatMat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << rat_str(at(i, j)) << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? "\n" : "]");
  }
  return os.str();
}

std::optional<std::vector<Rat>> solve_in_span(const RatMat& v, const std::vector<Rat>& rhs) {
  int n = v.rows();
  int m = v.cols();
  if (static_cast<int>(rhs.size()) != n) throw std::invalid_argument("rhs size mismatch");
  RatMat aug(n, m + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug.at(i, j) = v.at(i, j);
    aug.at(i, m) = rhs[i];
  }
  // Forward elimination to reduced echelon form, then read coordinates.
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int pivot = -1;
    for (int r = row; r < n; ++r)
      if (aug.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j <= m; ++j) std::swap(aug.at(pivot, j), aug.at(row, j));
    Rat p = aug.at(row, col);
    for (int j = col; j <= m; ++j) aug.at(row, j) /= p;
    for (int r = 0; r < n; ++r) {
      if (r == row || aug.at(r, col) == 0) continue;
      Rat f = aug.at(r, col);
      for (int j = col; j <= m; ++j) aug.at(r, j) -= f * aug.at(row, j);
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // Inconsistent if any zero-row has nonzero rhs.
  for (int r = row; r < n; ++r)
    if (aug.at(r, m) != 0) return std::nullopt;
  std::vector<Rat> x(m, Rat(0));
  for (size_t r = 0; r < pivot_col_of_row.size(); ++r) x[pivot_col_of_row[r]] = aug.at(r, m);
  return x;
}

}  // namespace liecx
