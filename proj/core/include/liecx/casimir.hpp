#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecx/enveloping.hpp"

namespace liecx {

struct LabeledInvariant {
  std::string label;
  EnvelopingPoly poly;
};

/// Invariant operators of one algebra, primitivity-reduced.
struct CasimirSet {
  const LieAlgebra* algebra = nullptr;
  std::vector<LabeledInvariant> elements;
  int max_degree_searched = 0;
};

struct CommutantResidual {
  std::string generator;       // first generator with nonzero commutator
  EnvelopingPoly residual;
};

/// True iff [p, Z_a] = 0 exactly for every generator; otherwise reports the
/// first nonzero residual.
std::optional<CommutantResidual> verify_casimir(Enveloping& env, const EnvelopingPoly& p);

/// Thrown when a bounded-degree search would exceed the monomial ceiling.
struct SearchSizing {
  long long monomials;
  long long ceiling;
};
class SizingError : public std::runtime_error {
 public:
  SizingError(const SearchSizing& s)
      : std::runtime_error("monomial ansatz of size " + std::to_string(s.monomials) +
                           " exceeds ceiling " + std::to_string(s.ceiling)),
        sizing(s) {}
  SearchSizing sizing;
};

inline constexpr long long kDefaultMonomialCeiling = 50000;

/// Generic-coefficient ansatz over all monomials of degree 1..max_degree;
/// imposes commutation with every generator, solves the exact nullspace and
/// primitivity-reduces against `prior` and products of lower-degree finds.
CasimirSet search_casimirs(Enveloping& env, int max_degree, const CasimirSet& prior = {},
                           long long ceiling = kDefaultMonomialCeiling);

/// Keeps only vectors outside the span of normal-ordered products (of total
/// degree <= max_degree) of previously accepted invariants; the survivors are
/// re-echelonized for sparsity. Inputs must already commute with the algebra.
std::vector<EnvelopingPoly> primitive_reduce(Enveloping& env,
                                             const std::vector<EnvelopingPoly>& found,
                                             const CasimirSet& prior, int max_degree);

/// The closed-form invariants of the Galilei and extended Hamilton algebras,
/// in polynomialized form (cleared of central denominators):
///   Galilei: M; 2ME - P.P; sum_{i<j} (M J_ij - G_j P_i + G_i P_j)^2.
///   QHa: I; M; A; TT + IR; sum_{i<j} (C J_ij + D_ij)^2 with
///        C = -AM + T^2 + IR and
///        D_ij = A(G_jP_i - G_iP_j) + M(F_jQ_i - F_iQ_j) + R(P_iQ_j - P_jQ_i)
///              - I(F_iG_j - F_jG_i) + T(F_iP_j - F_jP_i + G_iQ_j - G_jQ_i).
/// Degenerate-n entries evaluate to the zero polynomial.
/// `family` is "galilei" or "qha"; requires n <= 3.
CasimirSet reference_casimirs(Enveloping& env, const std::string& family, int n);

}  // namespace liecx
