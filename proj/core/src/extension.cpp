#include "liecx/extension.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecx {

namespace {

int pair_pos(int dim, int a, int b) {
  // lex position of (a,b), a < b, among all pairs
  return a * dim - a * (a + 1) / 2 + (b - a - 1);
}

const std::string kEmpty;

}  // namespace

CocycleAnsatz::CocycleAnsatz(LieAlgebra alg) : alg_(std::move(alg)) {
  int n = alg_.dim();
  pairs_.reserve(n * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      pair_index_[{a, b}] = static_cast<int>(pairs_.size());
      pairs_.emplace_back(a, b);
    }
  pruned_.assign(pairs_.size(), std::string());
}

int CocycleAnsatz::unknown_index(int a, int b) const {
  auto it = pair_index_.find({a, b});
  if (it == pair_index_.end()) throw std::out_of_range("no such unknown pair");
  return it->second;
}

const std::string& CocycleAnsatz::pruned_by(int a, int b) const {
  auto it = pair_index_.find({a, b});
  if (it == pair_index_.end()) return kEmpty;
  return pruned_[it->second];
}

void CocycleAnsatz::prune(int a, int b, const std::string& reason) {
  pruned_[unknown_index(a, b)] = reason;
}

int CocycleAnsatz::active_count() const {
  int n = 0;
  for (const auto& p : pruned_)
    if (p.empty()) ++n;
  return n;
}

std::vector<std::pair<int, int>> CocycleAnsatz::active_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(pairs_.size());
  for (size_t i = 0; i < pairs_.size(); ++i)
    if (pruned_[i].empty()) out.push_back(pairs_[i]);
  return out;
}

CocycleAnsatz build_ansatz(const LieAlgebra& alg) {
  if (!jacobi_check(alg).empty())
    throw std::invalid_argument("algebra fails the Jacobi identity: " + alg.name());
  return CocycleAnsatz(alg);
}

namespace {

/// Restriction of `alg` to a bracket-closed generator subset, re-indexed.
LieAlgebra restrict_to(const LieAlgebra& alg, const std::vector<int>& gens) {
  std::map<int, int> reindex;
  std::vector<std::string> basis;
  for (int g : gens) {
    reindex[g] = static_cast<int>(basis.size());
    basis.push_back(alg.gen_name(g));
  }
  LieAlgebra sub("sub[" + alg.name() + "]", basis);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      const AlgebraElement rhs = alg.bracket_basis(gens[i], gens[j]);
      AlgebraElement mapped;
      for (const auto& [g, c] : rhs.coeffs()) {
        auto it = reindex.find(g);
        if (it == reindex.end()) throw std::invalid_argument("subset not closed under bracket");
        mapped.add(it->second, c);
      }
      if (!mapped.is_zero()) sub.add_bracket(static_cast<int>(i), static_cast<int>(j), mapped);
    }
  return sub;
}

std::string table_key(const LieAlgebra& alg) {
  std::string key;
  for (const auto& b : alg.basis()) key += b + ";";
  for (const auto& [ab, rhs] : alg.table()) {
    key += std::to_string(ab.first) + "," + std::to_string(ab.second) + ":";
    for (const auto& [g, c] : rhs.coeffs()) key += std::to_string(g) + "=" + rat_str(c) + ",";
    key += "|";
  }
  return key;
}

/// Extension-free registry, keyed by the structure-constant table and filled
/// by running the unpruned solver on the subalgebra once.
bool verified_extension_free(const LieAlgebra& sub) {
  static std::map<std::string, bool> cache;
  std::string key = table_key(sub);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool free_of_extensions = solve_central_extension(sub).dimension == 0;
  cache.emplace(std::move(key), free_of_extensions);
  return free_of_extensions;
}

}  // namespace

CocycleAnsatz prune_by_subalgebras(CocycleAnsatz ansatz,
                                   const std::vector<std::vector<std::string>>& subsets) {
  const LieAlgebra& alg = ansatz.algebra();
  for (const auto& subset : subsets) {
    std::vector<int> gens;
    gens.reserve(subset.size());
    for (const auto& name : subset) gens.push_back(alg.index(name));
    std::sort(gens.begin(), gens.end());
    LieAlgebra sub = restrict_to(alg, gens);  // throws if not closed
    if (!verified_extension_free(sub)) continue;
    std::string reason = "extension-free subalgebra {";
    for (size_t i = 0; i < subset.size(); ++i) reason += (i ? "," : "") + subset[i];
    reason += "}";
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j) ansatz.prune(gens[i], gens[j], reason);
  }
  return ansatz;
}

SparseSystem jacobi_system(const CocycleAnsatz& ansatz) {
  const LieAlgebra& alg = ansatz.algebra();
  int n = alg.dim();
  // Columns index the active unknowns only; pruned charges are fixed zero.
  std::vector<std::pair<int, int>> active = ansatz.active_pairs();
  std::map<std::pair<int, int>, int> active_index;
  for (size_t i = 0; i < active.size(); ++i) active_index[active[i]] = static_cast<int>(i);
  SparseSystem sys(static_cast<int>(active.size()));
  auto scatter = [&](SparseVec& row, int x, int d, const Rat& coef) {
    // coef * M_{x,d} with antisymmetric normalization; pruned unknowns are 0.
    if (x == d) return;
    int a = x, b = d;
    Rat c = coef;
    if (a > b) {
      std::swap(a, b);
      c = -c;
    }
    auto ai = active_index.find({a, b});
    if (ai == active_index.end()) return;
    int idx = ai->second;
    auto it = row.find(idx);
    if (it == row.end()) {
      row.emplace(idx, c);
    } else {
      it->second += c;
      if (it->second == 0) row.erase(it);
    }
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        SparseVec row;
        const AlgebraElement bc = alg.bracket_basis(b, c);
        const AlgebraElement ca = alg.bracket_basis(c, a);
        const AlgebraElement ab = alg.bracket_basis(a, b);
        for (const auto& [d, k] : bc.coeffs()) scatter(row, a, d, k);
        for (const auto& [d, k] : ca.coeffs()) scatter(row, b, d, k);
        for (const auto& [d, k] : ab.coeffs()) scatter(row, c, d, k);
        sys.add_row(row);
      }
  return sys;
}

std::vector<SparseVec> coboundary_space(const LieAlgebra& alg) {
  int n = alg.dim();
  std::vector<SparseVec> out(n);
  for (const auto& [ab, rhs] : alg.table()) {
    int pos = pair_pos(n, ab.first, ab.second);
    for (const auto& [g, c] : rhs.coeffs()) out[g][pos] = c;
  }
  return out;
}

int coboundary_rank_with(const LieAlgebra& alg, const std::vector<Cocycle>& extra) {
  SpanReducer span;
  for (auto& v : coboundary_space(alg)) span.insert(std::move(v));
  for (const auto& coc : extra) {
    SparseVec v;
    for (const auto& [ab, c] : coc) v[pair_pos(alg.dim(), ab.first, ab.second)] = c;
    span.insert(std::move(v));
  }
  return span.rank();
}

ExtensionResult solve_central_extension(const LieAlgebra& alg, const ExtensionOptions& opts) {
  CocycleAnsatz ansatz = build_ansatz(alg);
  if (!opts.prune_subsets.empty()) ansatz = prune_by_subalgebras(std::move(ansatz), opts.prune_subsets);

  std::vector<std::pair<int, int>> active = ansatz.active_pairs();
  std::vector<SparseVec> solutions = nullspace(jacobi_system(ansatz));

  // Quotient by the coboundaries, canonicalized by reduced echelon form over
  // lexicographic pair order.
  SpanReducer coboundaries;
  for (auto& v : coboundary_space(alg)) coboundaries.insert(std::move(v));
  int dim = alg.dim();
  SpanReducer classes;
  for (auto& sol : solutions) {
    // Map active unknown indices to full pair positions (pruned coordinates
    // are zero by construction).
    SparseVec full;
    for (const auto& [idx, c] : sol) {
      auto [a, b] = active[idx];
      full[pair_pos(dim, a, b)] = c;
    }
    if (!coboundaries.reduce(full)) continue;
    classes.insert(std::move(full));
  }
  std::vector<SparseVec> canonical = classes.rows();

  ExtensionResult result;
  result.algebra = alg;
  result.extended = alg;
  result.dimension = static_cast<int>(canonical.size());
  int counter = 0;
  for (const auto& vec : canonical) {
    ++counter;
    std::string name = "Z" + std::to_string(counter);
    while (result.extended.has_generator(name)) name = "Z" + name;
    int zi = result.extended.append_central(name);
    result.central_names.push_back(name);
    Cocycle coc;
    for (const auto& [pos, c] : vec) {
      // invert pair_pos
      int a = 0;
      int rem = pos;
      while (rem >= dim - 1 - a) {
        rem -= dim - 1 - a;
        ++a;
      }
      int b = a + 1 + rem;
      coc[{a, b}] = c;
    }
    for (const auto& [ab, c] : coc) {
      AlgebraElement charge;
      charge.add(zi, c);
      // merge with existing bracket
      AlgebraElement rhs = result.extended.bracket_basis(ab.first, ab.second);
      rhs += charge;
      result.extended.replace_bracket(ab.first, ab.second, rhs);
    }
    result.cocycle_basis.push_back(std::move(coc));
  }

  if (!jacobi_check(result.extended).empty())
    throw std::logic_error("extended algebra fails Jacobi; solver bug");
  result.extended.set_name(alg.name() + "^ext");
  return result;
}

}  // namespace liecx
