#include "liecx/sparse.hpp"

#include <algorithm>

namespace liecx {

SparseRow normalize_row(const SparseVec& row) {
  SparseRow out;
  out.reserve(row.size());
  for (const auto& [col, coef] : row)
    if (coef != 0) out.emplace_back(col, coef);
  if (out.empty()) return out;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (auto& [col, coef] : out) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), coef.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coef.get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(out.front().second) < 0) scale = -scale;
  for (auto& [col, coef] : out) {
    coef *= scale;
    coef.canonicalize();
  }
  return out;
}

void SparseSystem::add_row(const SparseVec& row) {
  SparseRow norm = normalize_row(row);
  if (norm.empty()) return;
  if (seen_.emplace(norm, 1).second) rows_.push_back(std::move(norm));
}

namespace {

void axpy(SparseVec& target, const Rat& k, const SparseVec& src) {
  for (const auto& [col, coef] : src) {
    auto it = target.find(col);
    if (it == target.end()) {
      target.emplace(col, k * coef);
    } else {
      it->second += k * coef;
      if (it->second == 0) target.erase(it);
    }
  }
}

}  // namespace

Echelon echelonize(const SparseSystem& sys) {
  // Static column counts approximate the Markowitz criterion without
  // maintaining a dynamic occupancy structure.
  std::map<int, int> col_count;
  for (const auto& r : sys.rows())
    for (const auto& [col, coef] : r) ++col_count[col];

  std::vector<int> order(sys.rows().size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sys.rows()[a].size() < sys.rows()[b].size();
  });

  Echelon ech;
  for (int idx : order) {
    SparseVec row(sys.rows()[idx].begin(), sys.rows()[idx].end());
    // Eliminate every pivoted column. Pivot rows carry no other pivot
    // columns, so the count of pivoted columns in `row` strictly drops.
    for (;;) {
      int hit = -1;
      for (const auto& [col, coef] : row)
        if (ech.pivot_rows.count(col)) {
          hit = col;
          break;
        }
      if (hit < 0) break;
      Rat k = -row.at(hit);
      axpy(row, k, ech.pivot_rows.at(hit));
    }
    if (row.empty()) continue;
    int pivot_col = row.begin()->first;
    int best = col_count[pivot_col];
    for (const auto& [col, coef] : row)
      if (col_count[col] < best) {
        best = col_count[col];
        pivot_col = col;
      }
    Rat inv = 1 / row.at(pivot_col);
    for (auto& [col, coef] : row) coef *= inv;
    // Keep the reduced-echelon invariant: clear the new pivot column from
    // every stored pivot row.
    for (auto& [pc, prow] : ech.pivot_rows) {
      auto it = prow.find(pivot_col);
      if (it == prow.end()) continue;
      Rat k = -it->second;
      axpy(prow, k, row);
    }
    ech.pivot_rows.emplace(pivot_col, std::move(row));
    ++ech.rank;
  }
  return ech;
}

std::vector<SparseVec> nullspace(const SparseSystem& sys) {
  Echelon ech = echelonize(sys);
  std::vector<SparseVec> basis;
  for (int col = 0; col < sys.cols(); ++col) {
    if (ech.pivot_rows.count(col)) continue;
    SparseVec v;
    v[col] = 1;
    for (const auto& [pc, prow] : ech.pivot_rows) {
      auto it = prow.find(col);
      if (it != prow.end()) v[pc] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_of(const SparseSystem& sys) { return echelonize(sys).rank; }

bool SpanReducer::reduce(SparseVec& v) const {
  while (!v.empty()) {
    auto lead = v.begin();
    auto it = pivots_.find(lead->first);
    if (it == pivots_.end()) return true;
    Rat k = -lead->second;
    axpy(v, k, it->second);
  }
  return false;
}

bool SpanReducer::insert(SparseVec v) {
  if (!reduce(v)) return false;
  Rat inv = 1 / v.begin()->second;
  for (auto& [col, coef] : v) coef *= inv;
  int lead = v.begin()->first;
  // Back-substitute into existing rows so lookups stay single-pass.
  for (auto& [pc, prow] : pivots_) {
    auto it = prow.find(lead);
    if (it == prow.end()) continue;
    Rat k = -it->second;
    axpy(prow, k, v);
  }
  pivots_.emplace(lead, std::move(v));
  return true;
}

std::vector<SparseVec> SpanReducer::rows() const {
  std::vector<SparseVec> out;
  out.reserve(pivots_.size());
  for (const auto& [lead, row] : pivots_) out.push_back(row);
  return out;
}

}  // namespace liecx
