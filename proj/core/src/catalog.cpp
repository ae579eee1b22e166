#include "liecx/catalog.hpp"

#include <stdexcept>

namespace liecx {

namespace {

std::string idx_name(const std::string& stem, int i) { return stem + std::to_string(i); }

std::string j_name(int i, int j) { return "J" + std::to_string(i) + std::to_string(j); }

std::vector<std::string> j_basis(int n) {
  std::vector<std::string> b;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) b.push_back(j_name(i, j));
  return b;
}

void append_range(std::vector<std::string>& basis, const std::string& stem, int n) {
  for (int i = 1; i <= n; ++i) basis.push_back(idx_name(stem, i));
}

// Signed lookup of J_{ij} for arbitrary index order: J_{ji} = -J_{ij}, J_{ii} = 0.
void add_j_term(const LieAlgebra& alg, AlgebraElement& e, int i, int j, const Rat& coef) {
  if (i == j) return;
  if (i < j)
    e.add(alg.index(j_name(i, j)), coef);
  else
    e.add(alg.index(j_name(j, i)), -coef);
}

// [J_ij, J_kl] = d_jk J_il + d_il J_jk - d_jl J_ik - d_ik J_jl.
void add_rotation_brackets(LieAlgebra& alg, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
          AlgebraElement rhs;
          if (j == k) add_j_term(alg, rhs, i, l, 1);
          if (i == l) add_j_term(alg, rhs, j, k, 1);
          if (j == l) add_j_term(alg, rhs, i, k, -1);
          if (i == k) add_j_term(alg, rhs, j, l, -1);
          if (!rhs.is_zero()) alg.add_bracket(alg.index(j_name(i, j)), alg.index(j_name(k, l)), rhs);
        }
}

// [J_ij, X_k] = d_jk X_i - d_ik X_j for a vector multiplet X1..Xn.
void add_vector_brackets(LieAlgebra& alg, int n, const std::string& stem) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      alg.add_bracket(j_name(i, j), idx_name(stem, j), {{idx_name(stem, i), 1}});
      alg.add_bracket(j_name(i, j), idx_name(stem, i), {{idx_name(stem, j), -1}});
    }
}

void add_delta_pair(LieAlgebra& alg, int n, const std::string& a, const std::string& b,
                    const std::string& target, const Rat& coef) {
  for (int i = 1; i <= n; ++i)
    alg.add_bracket(idx_name(a, i), idx_name(b, i), {{target, coef}});
}

int pair_count(int m) { return m * (m - 1) / 2; }

std::string w_name(int a, int b) { return "W" + std::to_string(a) + "_" + std::to_string(b); }

}  // namespace

Rat catalog_zeta(int size, bool extended, int a, int b) {
  int m = extended ? size - 2 : size;  // plain block dimension 2n
  int half = m / 2;
  if (a <= m && b <= m) {
    if (b == a + half) return 1;
    if (a == b + half) return -1;
    return 0;
  }
  if (extended) {
    if (a == m + 1 && b == m + 2) return -1;
    if (a == m + 2 && b == m + 1) return 1;
  }
  return 0;
}

LieAlgebra make_heisenberg(int n) {
  std::vector<std::string> basis;
  append_range(basis, "P", n);
  append_range(basis, "Q", n);
  basis.push_back("I");
  LieAlgebra alg("h(" + std::to_string(n) + ")", basis);
  add_delta_pair(alg, n, "P", "Q", "I", 1);
  return alg;
}

LieAlgebra make_hamilton(int n) {
  std::vector<std::string> basis = j_basis(n);
  append_range(basis, "G", n);
  append_range(basis, "F", n);
  basis.push_back("R");
  LieAlgebra alg("Ha(" + std::to_string(n) + ")", basis);
  add_rotation_brackets(alg, n);
  add_vector_brackets(alg, n, "G");
  add_vector_brackets(alg, n, "F");
  add_delta_pair(alg, n, "G", "F", "R", 1);
  return alg;
}

LieAlgebra make_inhomogeneous_euclidean(int n) {
  std::vector<std::string> basis = j_basis(n);
  append_range(basis, "G", n);
  append_range(basis, "P", n);
  basis.push_back("E");
  LieAlgebra alg("IE(" + std::to_string(n) + ")", basis);
  add_rotation_brackets(alg, n);
  add_vector_brackets(alg, n, "G");
  add_vector_brackets(alg, n, "P");
  for (int i = 1; i <= n; ++i)
    alg.add_bracket("E", idx_name("G", i), {{idx_name("P", i), -1}});
  return alg;
}

namespace {

void add_inhomogeneous_hamilton_brackets(LieAlgebra& alg, int n) {
  add_rotation_brackets(alg, n);
  for (const char* stem : {"G", "F", "P", "Q"}) add_vector_brackets(alg, n, stem);
  add_delta_pair(alg, n, "G", "F", "R", 1);
  add_delta_pair(alg, n, "G", "Q", "T", 1);
  add_delta_pair(alg, n, "F", "P", "T", 1);
  for (int i = 1; i <= n; ++i) {
    alg.add_bracket("E", idx_name("G", i), {{idx_name("P", i), -1}});
    alg.add_bracket("E", idx_name("F", i), {{idx_name("Q", i), 1}});
  }
  alg.add_bracket("E", "R", {{"T", 2}});
}

std::vector<std::string> inhomogeneous_hamilton_basis(int n) {
  std::vector<std::string> basis = j_basis(n);
  append_range(basis, "G", n);
  append_range(basis, "F", n);
  basis.push_back("R");
  append_range(basis, "P", n);
  append_range(basis, "Q", n);
  basis.push_back("E");
  basis.push_back("T");
  return basis;
}

}  // namespace

LieAlgebra make_inhomogeneous_hamilton(int n) {
  LieAlgebra alg("IHa(" + std::to_string(n) + ")", inhomogeneous_hamilton_basis(n));
  add_inhomogeneous_hamilton_brackets(alg, n);
  return alg;
}

LieAlgebra make_galilei(int n) {
  std::vector<std::string> basis = j_basis(n);
  append_range(basis, "G", n);
  append_range(basis, "P", n);
  basis.push_back("E");
  basis.push_back("M");
  LieAlgebra alg("Galilei(" + std::to_string(n) + ")", basis);
  add_rotation_brackets(alg, n);
  add_vector_brackets(alg, n, "G");
  add_vector_brackets(alg, n, "P");
  for (int i = 1; i <= n; ++i)
    alg.add_bracket("E", idx_name("G", i), {{idx_name("P", i), -1}});
  add_delta_pair(alg, n, "G", "P", "M", 1);
  return alg;
}

LieAlgebra make_extended_hamilton(int n) {
  std::vector<std::string> basis = inhomogeneous_hamilton_basis(n);
  basis.push_back("I");
  basis.push_back("M");
  basis.push_back("A");
  LieAlgebra alg("QHa(" + std::to_string(n) + ")", basis);
  add_inhomogeneous_hamilton_brackets(alg, n);
  add_delta_pair(alg, n, "P", "Q", "I", 1);
  alg.add_bracket("E", "T", {{"I", -1}});
  add_delta_pair(alg, n, "G", "P", "M", 1);
  add_delta_pair(alg, n, "F", "Q", "A", 1);
  return alg;
}

namespace {

// Symmetric W lookup: W_{ba} = W_{ab}.
void add_w_term(const LieAlgebra& alg, AlgebraElement& e, int a, int b, const Rat& coef) {
  if (a > b) std::swap(a, b);
  e.add(alg.index(w_name(a, b)), coef);
}

LieAlgebra make_symplectic_like(const std::string& name, int m, bool extended, bool inhomogeneous) {
  std::vector<std::string> basis;
  for (int a = 1; a <= m; ++a)
    for (int b = a; b <= m; ++b) basis.push_back(w_name(a, b));
  if (inhomogeneous) append_range(basis, "Y", m);
  LieAlgebra alg(name, basis);
  auto zeta = [&](int a, int b) { return catalog_zeta(m, extended, a, b); };
  // [W_ab, W_kd] = z_bk W_ad + z_ak W_bd + z_bd W_ak + z_ad W_bk
  std::vector<std::pair<int, int>> wpairs;
  for (int a = 1; a <= m; ++a)
    for (int b = a; b <= m; ++b) wpairs.emplace_back(a, b);
  for (size_t p = 0; p < wpairs.size(); ++p)
    for (size_t q = p + 1; q < wpairs.size(); ++q) {
      auto [a, b] = wpairs[p];
      auto [k, d] = wpairs[q];
      AlgebraElement rhs;
      if (zeta(b, k) != 0) add_w_term(alg, rhs, a, d, zeta(b, k));
      if (zeta(a, k) != 0) add_w_term(alg, rhs, b, d, zeta(a, k));
      if (zeta(b, d) != 0) add_w_term(alg, rhs, a, k, zeta(b, d));
      if (zeta(a, d) != 0) add_w_term(alg, rhs, b, k, zeta(a, d));
      if (!rhs.is_zero()) alg.add_bracket(alg.index(w_name(a, b)), alg.index(w_name(k, d)), rhs);
    }
  if (inhomogeneous) {
    // [W_ab, Y_k] = z_bk Y_a + z_ak Y_b
    for (auto [a, b] : wpairs)
      for (int k = 1; k <= m; ++k) {
        AlgebraElement rhs;
        if (zeta(b, k) != 0) rhs.add(alg.index(idx_name("Y", a)), zeta(b, k));
        if (zeta(a, k) != 0) rhs.add(alg.index(idx_name("Y", b)), zeta(a, k));
        if (!rhs.is_zero()) alg.add_bracket(alg.index(w_name(a, b)), alg.index(idx_name("Y", k)), rhs);
      }
  }
  return alg;
}

}  // namespace

LieAlgebra make_inhomogeneous_symplectic(int n) {
  return make_symplectic_like("ISp(" + std::to_string(2 * n + 2) + ")", 2 * n + 2, true, true);
}

LieAlgebra make_sp(int n) {
  return make_symplectic_like("sp(" + std::to_string(2 * n) + ")", 2 * n, false, false);
}

LieAlgebra make_so(int n) {
  LieAlgebra alg("so(" + std::to_string(n) + ")", j_basis(n));
  add_rotation_brackets(alg, n);
  return alg;
}

LieAlgebra make_euclidean(int n) {
  std::vector<std::string> basis = j_basis(n);
  append_range(basis, "P", n);
  LieAlgebra alg("e(" + std::to_string(n) + ")", basis);
  add_rotation_brackets(alg, n);
  add_vector_brackets(alg, n, "P");
  return alg;
}

LieAlgebra make_translations(int m) {
  std::vector<std::string> basis;
  append_range(basis, "X", m);
  return LieAlgebra("T(" + std::to_string(m) + ")", basis);
}

const std::vector<FamilyInfo>& catalog_families() {
  static const std::vector<FamilyInfo> families = [] {
    std::vector<FamilyInfo> f;
    auto poly = [](int a, int b, int c, int den) {
      return [=](int n) { return (a * n * n + b * n + c) / den; };
    };
    f.push_back({"h", "H(n)", "2n+1", 1, 9, true, make_heisenberg, poly(0, 2, 1, 1)});
    f.push_back({"ha", "Ha(n)", "n(n-1)/2 + 2n + 1", 1, 9, true, make_hamilton,
                 [](int n) { return pair_count(n) + 2 * n + 1; }});
    f.push_back({"hsp", "HSp(2n)", "n(2n+1) + 2n + 1", 1, 9, true, nullptr,
                 [](int n) { return n * (2 * n + 1) + 2 * n + 1; }});
    f.push_back({"ie", "IE(n)", "n(n-1)/2 + 2n + 1", 1, 9, true, make_inhomogeneous_euclidean,
                 [](int n) { return pair_count(n) + 2 * n + 1; }});
    f.push_back({"iha", "IHa(n)", "n(n-1)/2 + 4n + 3", 1, 9, true, make_inhomogeneous_hamilton,
                 [](int n) { return pair_count(n) + 4 * n + 3; }});
    f.push_back({"isp", "ISp(2n+2)", "(n+1)(2n+3) + 2n + 2", 1, 6, false, make_inhomogeneous_symplectic,
                 [](int n) { return (n + 1) * (2 * n + 3) + 2 * n + 2; }});
    f.push_back({"galilei", "Galilei(n)", "(n^2+3n+4)/2", 1, 9, false, make_galilei, poly(1, 3, 4, 2)});
    f.push_back({"qha", "QHa(n)", "(n^2+7n+12)/2", 1, 9, false, make_extended_hamilton, poly(1, 7, 12, 2)});
    f.push_back({"so", "so(n)", "n(n-1)/2", 2, 9, false, make_so,
                 [](int n) { return pair_count(n); }});
    f.push_back({"sp", "sp(2n)", "n(2n+1)", 1, 6, false, make_sp,
                 [](int n) { return n * (2 * n + 1); }});
    f.push_back({"e", "e(n)", "n(n-1)/2 + n", 2, 9, false, make_euclidean,
                 [](int n) { return pair_count(n) + n; }});
    f.push_back({"t", "T(m)", "m", 1, 99, false, make_translations, [](int m) { return m; }});
    return f;
  }();
  return families;
}

LieAlgebra build_catalog_algebra(const std::string& key, int n) {
  for (const auto& fam : catalog_families()) {
    if (fam.key != key) continue;
    if (n < fam.min_n || n > fam.max_n)
      throw std::out_of_range("family '" + key + "' supports n in [" + std::to_string(fam.min_n) +
                              "," + std::to_string(fam.max_n) + "]");
    if (!fam.build) throw std::out_of_range("family '" + key + "' has no hand-entered algebra; derive it from matrices");
    return fam.build(n);
  }
  throw std::out_of_range("unknown family: " + key);
}

}  // namespace liecx
