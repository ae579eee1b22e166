#include "liecx/algebra.hpp"

#include "liecx/rng.hpp"

namespace liecx {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
    if (!index_.emplace(basis_[i], i).second)
      throw std::invalid_argument("duplicate generator name: " + basis_[i]);
  }
}

int LieAlgebra::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown generator: " + name);
  return it->second;
}

void LieAlgebra::add_bracket(int a, int b, const AlgebraElement& rhs) {
  if (a == b) throw std::invalid_argument("diagonal bracket [" + basis_.at(a) + "," + basis_.at(a) + "]");
  AlgebraElement value = rhs;
  if (a > b) {
    std::swap(a, b);
    value = value.scaled(-1);
  }
  for (const auto& [g, c] : value.coeffs())
    if (g < 0 || g >= dim()) throw std::out_of_range("bracket target out of range");
  if (value.is_zero()) return;
  auto [it, fresh] = table_.emplace(std::make_pair(a, b), value);
  if (!fresh)
    throw std::invalid_argument("duplicate bracket entry [" + basis_.at(a) + "," + basis_.at(b) + "]");
}

void LieAlgebra::add_bracket(const std::string& a, const std::string& b,
                             const std::vector<std::pair<std::string, Rat>>& rhs) {
  AlgebraElement e;
  for (const auto& [g, c] : rhs) e.add(index(g), c);
  add_bracket(index(a), index(b), e);
}

AlgebraElement LieAlgebra::bracket_basis(int a, int b) const {
  if (a == b) return {};
  bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = table_.find({a, b});
  if (it == table_.end()) return {};
  return flip ? it->second.scaled(-1) : it->second;
}

void LieAlgebra::replace_bracket(int a, int b, const AlgebraElement& rhs) {
  if (a >= b) throw std::invalid_argument("replace_bracket expects a < b");
  table_.erase({a, b});
  if (!rhs.is_zero()) add_bracket(a, b, rhs);
}

int LieAlgebra::append_central(const std::string& name) {
  if (index_.count(name)) throw std::invalid_argument("duplicate generator name: " + name);
  basis_.push_back(name);
  index_.emplace(name, dim() - 1);
  return dim() - 1;
}

AlgebraElement LieAlgebra::element(const std::vector<std::pair<std::string, Rat>>& terms) const {
  AlgebraElement e;
  for (const auto& [g, c] : terms) e.add(index(g), c);
  return e;
}

AlgebraElement bracket(const LieAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [a, xa] : x.coeffs())
    for (const auto& [b, yb] : y.coeffs()) {
      if (a == b) continue;
      AlgebraElement t = alg.bracket_basis(a, b);
      if (t.is_zero()) continue;
      out += t.scaled(xa * yb);
    }
  return out;
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& alg) {
  std::vector<JacobiViolation> bad;
  int n = alg.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        AlgebraElement r;
        // [Z_a,[Z_b,Z_c]] + [Z_b,[Z_c,Z_a]] + [Z_c,[Z_a,Z_b]]
        const AlgebraElement bc = alg.bracket_basis(b, c);
        const AlgebraElement ca = alg.bracket_basis(c, a);
        const AlgebraElement ab = alg.bracket_basis(a, b);
        for (const auto& [d, k] : bc.coeffs()) r += alg.bracket_basis(a, d).scaled(k);
        for (const auto& [d, k] : ca.coeffs()) r += alg.bracket_basis(b, d).scaled(k);
        for (const auto& [d, k] : ab.coeffs()) r += alg.bracket_basis(c, d).scaled(k);
        if (!r.is_zero()) bad.push_back({a, b, c, std::move(r)});
      }
  return bad;
}

RatMat adjoint_matrix(const LieAlgebra& alg, const AlgebraElement& z) {
  int n = alg.dim();
  RatMat m(n, n);
  for (const auto& [a, za] : z.coeffs())
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const AlgebraElement t = alg.bracket_basis(a, b);
      for (const auto& [c, k] : t.coeffs()) m.at(c, b) += za * k;
    }
  return m;
}

RatMat kirillov_form(const LieAlgebra& alg, const std::vector<Rat>& xi) {
  int n = alg.dim();
  RatMat m(n, n);
  for (const auto& [ab, rhs] : alg.table()) {
    Rat v = 0;
    for (const auto& [c, k] : rhs.coeffs()) v += xi.at(c) * k;
    m.at(ab.first, ab.second) = v;
    m.at(ab.second, ab.first) = -v;
  }
  return m;
}

int generic_rank(const LieAlgebra& alg, std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  DetRng rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Rat> xi(alg.dim());
    for (auto& x : xi) x = rat(rng.int_in(-1000000, 1000000));
    best = std::max(best, kirillov_form(alg, xi).rank());
  }
  return best;
}

int casimir_count(const LieAlgebra& alg, std::uint64_t seed, int trials) {
  return alg.dim() - generic_rank(alg, seed, trials);
}

}  // namespace liecx
