#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecx/algebra.hpp"
#include "liecx/sparse.hpp"

namespace liecx {

/// One antisymmetric central-charge unknown M_{a,b} per basis pair a < b.
/// Pruned unknowns are fixed to zero and carry the subalgebra that blocked
/// them.
class CocycleAnsatz {
 public:
  explicit CocycleAnsatz(LieAlgebra alg);

  const LieAlgebra& algebra() const { return alg_; }
  const std::vector<std::pair<int, int>>& unknowns() const { return pairs_; }
  int unknown_index(int a, int b) const;  // requires a < b
  bool is_pruned(int a, int b) const { return !pruned_by(a, b).empty(); }
  const std::string& pruned_by(int a, int b) const;
  void prune(int a, int b, const std::string& reason);
  int active_count() const;

  /// Active (unpruned) pairs in lex order; the Jacobi system is indexed
  /// against this list, since pruned unknowns are fixed to zero.
  std::vector<std::pair<int, int>> active_pairs() const;

 private:
  LieAlgebra alg_;
  std::vector<std::pair<int, int>> pairs_;          // lex order
  std::map<std::pair<int, int>, int> pair_index_;
  std::vector<std::string> pruned_;                 // empty = active
};

CocycleAnsatz build_ansatz(const LieAlgebra& alg);

/// Fixes intra-subset unknowns to zero for every subset that is (a) closed
/// under the bracket and (b) verified extension-free by running the unpruned
/// solver on the subalgebra (results are cached per subalgebra). Pruning is
/// an optimization only; solve results are identical with or without it.
/// Throws std::invalid_argument if a subset is not closed.
CocycleAnsatz prune_by_subalgebras(CocycleAnsatz ansatz,
                                   const std::vector<std::vector<std::string>>& subsets);

/// The linear constraints on the unknowns implied by the Jacobi identities
/// of the extended brackets: c^d_{bc} M_{a,d} + c^d_{ca} M_{b,d} +
/// c^d_{ab} M_{c,d} = 0 per unordered triple. Rows are normalized and
/// deduplicated; columns are ansatz unknown indices.
SparseSystem jacobi_system(const CocycleAnsatz& ansatz);

/// For each generator g the trivial cocycle (a,b) -> c^g_{a,b}, as vectors
/// over all basis pairs (spanning set, not necessarily independent).
std::vector<SparseVec> coboundary_space(const LieAlgebra& alg);

/// A 2-cocycle class representative: unknown pair -> charge.
using Cocycle = std::map<std::pair<int, int>, Rat>;

struct ExtensionResult {
  LieAlgebra algebra;                 // the input algebra
  std::vector<Cocycle> cocycle_basis; // canonical class representatives
  std::vector<std::string> central_names;
  int dimension = 0;                  // N_e
  LieAlgebra extended;                // one new central generator per class
};

struct ExtensionOptions {
  /// Subalgebra generator subsets to prune through (optional speedup).
  std::vector<std::vector<std::string>> prune_subsets;
};

/// Exact nullspace of the Jacobi system, echelonized against the coboundary
/// span. Canonical representatives: reduce each nullspace vector modulo the
/// coboundaries, then reduced-echelon over lexicographic pair order. The
/// extended algebra appends one central generator per class and is verified
/// against the Jacobi identity before returning.
ExtensionResult solve_central_extension(const LieAlgebra& alg, const ExtensionOptions& opts = {});

/// Rank of the coboundary span together with `extra` vectors; used by tests
/// for nontriviality (appending a returned cocycle must raise the rank).
int coboundary_rank_with(const LieAlgebra& alg, const std::vector<Cocycle>& extra);

}  // namespace liecx
