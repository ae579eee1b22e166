#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liecx/matrix.hpp"
#include "liecx/rational.hpp"

namespace liecx {

/// Exact linear combination of basis generators, indexed against a fixed
/// algebra basis. Zero coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  void set(int gen, const Rat& c) {
    if (c == 0)
      coeffs_.erase(gen);
    else
      coeffs_[gen] = c;
  }
  void add(int gen, const Rat& c) {
    auto it = coeffs_.find(gen);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_.emplace(gen, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  Rat coeff(int gen) const {
    auto it = coeffs_.find(gen);
    return it == coeffs_.end() ? Rat(0) : it->second;
  }
  const std::map<int, Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [g, c] : o.coeffs_) add(g, c);
    return *this;
  }
  AlgebraElement scaled(const Rat& k) const {
    AlgebraElement r;
    if (k == 0) return r;
    for (const auto& [g, c] : coeffs_) r.coeffs_.emplace(g, c * k);
    return r;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<int, Rat> coeffs_;
};

/// Finite-dimensional Lie algebra given by a named basis and sparse structure
/// constants. Only pairs a < b are stored; antisymmetry is implied.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> basis);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& gen_name(int i) const { return basis_.at(i); }

  bool has_generator(const std::string& name) const { return index_.count(name) != 0; }
  int index(const std::string& name) const;

  /// Adds [basis_[a], basis_[b]] = rhs. Indices are normalized to a < b;
  /// diagonal entries and duplicates are rejected.
  void add_bracket(int a, int b, const AlgebraElement& rhs);
  void add_bracket(const std::string& a, const std::string& b,
                   const std::vector<std::pair<std::string, Rat>>& rhs);

  /// [Z_a, Z_b] for basis indices, any order.
  AlgebraElement bracket_basis(int a, int b) const;

  /// Overwrites [Z_a, Z_b] (a < b); used when deforming by central charges.
  void replace_bracket(int a, int b, const AlgebraElement& rhs);

  const std::map<std::pair<int, int>, AlgebraElement>& table() const { return table_; }

  /// Appends a central generator (no brackets). Returns its index.
  int append_central(const std::string& name);

  /// Structure-constant-level equality, including basis names and order.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.basis_ == b.basis_ && a.table_ == b.table_;
  }

  AlgebraElement element(const std::vector<std::pair<std::string, Rat>>& terms) const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, AlgebraElement> table_;  // keys a < b
};

/// Bilinear extension of the structure constants.
AlgebraElement bracket(const LieAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y);

struct JacobiViolation {
  int a, b, c;
  AlgebraElement residual;
};

/// Evaluates [Z_a,[Z_b,Z_c]] + cyclic for every unordered basis triple.
/// Empty result means the Jacobi identity holds.
std::vector<JacobiViolation> jacobi_check(const LieAlgebra& alg);

/// Adjoint matrix of z: entry (C,B) is sum_A z^A c^C_{A,B}.
RatMat adjoint_matrix(const LieAlgebra& alg, const AlgebraElement& z);

/// Antisymmetric form xi([Z_a, Z_b]) for a dual vector xi; its generic rank
/// counts the independent invariants as dim - rank.
RatMat kirillov_form(const LieAlgebra& alg, const std::vector<Rat>& xi);

/// Maximum exact rank of the kirillov form over `trials` pseudorandom integer
/// dual vectors with entries in [-10^6, 10^6], drawn deterministically from
/// `seed`. A lower bound that reaches the generic rank with overwhelming
/// probability; stabilization across seeds is part of the test suite.
int generic_rank(const LieAlgebra& alg, std::uint64_t seed, int trials);

/// dim - generic_rank.
int casimir_count(const LieAlgebra& alg, std::uint64_t seed = 1729, int trials = 5);

}  // namespace liecx
