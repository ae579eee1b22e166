#pragma once

#include <functional>
#include <string>
#include <vector>

#include "liecx/algebra.hpp"

namespace liecx {

/// h(n): P1..Pn, Q1..Qn, I with [P_i,Q_i] = I.
LieAlgebra make_heisenberg(int n);
/// Ha(n): J (i<j), G, F, R. Rotations, velocity, force, power.
LieAlgebra make_hamilton(int n);
/// IE(n): J, G, P, E. Inhomogeneous Euclidean precursor of Galilei.
LieAlgebra make_inhomogeneous_euclidean(int n);
/// IHa(n): J, G, F, R, P, Q, E, T.
LieAlgebra make_inhomogeneous_hamilton(int n);
/// Galilei(n): IE(n) plus the mass charge [G_i,P_i] = M.
LieAlgebra make_galilei(int n);
/// QHa(n): IHa(n) plus the central charges I, M, A.
LieAlgebra make_extended_hamilton(int n);
/// ISp(2n+2): W (symmetric pairs) acting on translations Y.
LieAlgebra make_inhomogeneous_symplectic(int n);
/// so(n) rotations.
LieAlgebra make_so(int n);
/// sp(2n).
LieAlgebra make_sp(int n);
/// e(n) = so(n) + translations.
LieAlgebra make_euclidean(int n);
/// T(m) abelian translations.
LieAlgebra make_translations(int m);

/// The symplectic metric entry zeta_{ab} (1-based) used by sp/ISp catalog
/// algebras: block [[0,I],[-I,0]] on the first 2n indices and, for the
/// extended metric, the bordering rows (2n+1, 2n+2) = -1, (2n+2, 2n+1) = +1.
Rat catalog_zeta(int size, bool extended, int a, int b);

struct FamilyInfo {
  std::string key;       // CLI spelling, lower case
  std::string display;   // e.g. "Galilei(n)"
  std::string dim_formula;
  int min_n;
  int max_n;
  bool has_matrix_template;
  std::function<LieAlgebra(int)> build;
  std::function<int(int)> dim;
};

/// All algebra families known to the engine, in catalog order.
const std::vector<FamilyInfo>& catalog_families();

/// Builds a catalog algebra by CLI key, e.g. ("galilei", 3). Throws
/// std::out_of_range for unknown keys or unsupported n.
LieAlgebra build_catalog_algebra(const std::string& key, int n);

}  // namespace liecx
