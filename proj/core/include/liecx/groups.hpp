#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecx/algebra.hpp"
#include "liecx/matrix.hpp"
#include "liecx/rng.hpp"

namespace liecx {

/// Parameterized matrix families. All are exact-rational subgroups of GL.
enum class Family { kH, kHa, kHSp, kIHa, kIHSp, kIE, kAutH };

std::string family_key(Family f);
std::optional<Family> family_from_key(const std::string& key);
int family_matrix_size(Family f, int n);

/// Parameter values: scalars are 1x1, vectors are k x 1, blocks k x k.
/// Keys per family:
///   H:    w (2n), iota
///   Ha:   eps, R (n, orthogonal), v, f (n), r
///   HSp:  eps, A (2n, symplectic), w (2n), r
///   IHa:  eps, R, v, f, r, q, p (n), e, t
///   IHSp: eps, A, w (2n), r, z (2n), e, t
///   IE:   eps, R, v (n), q (n), t
///   AutH: eps, a (nonzero), A (2n, symplectic), w (2n), r
using Params = std::map<std::string, RatMat>;

struct GroupElement {
  Family family;
  int n;
  Params params;
  RatMat matrix;
};

struct GeneratorMatrix {
  std::string name;
  RatMat matrix;
};

/// The symplectic metric: the plain block form on 2n coordinates, or the
/// extended (2n+2) form with the bordered energy-time rows.
struct SymplecticMetric {
  int n;
  bool extended;
  RatMat matrix;
};
SymplecticMetric symplectic_metric(int n, bool extended);

/// Evaluates the family template at the given parameters. Validates arity,
/// eps in {+1,-1}, orthogonality of rotation blocks and symplecticity of A
/// blocks, and checks the parameter/matrix round trip.
GroupElement build_element(Family family, int n, const Params& params);

/// Recovers template parameters from a raw matrix; nullopt when the matrix
/// does not match the family pattern.
std::optional<Params> extract_params(Family family, int n, const RatMat& m);

/// Exact product, re-identified with template parameters. Throws
/// std::runtime_error if the product leaves the family pattern.
GroupElement compose(const GroupElement& g, const GroupElement& h);

/// Exact inverse (invertibility is a type invariant).
GroupElement inverse(const GroupElement& g);

/// First-order coefficient matrices of the template at the identity, one per
/// continuous parameter, with constrained blocks charted by their own algebra
/// coordinates (skew matrices for rotations, Hamiltonian matrices for
/// symplectic blocks). For the catalog-matched families (H, Ha, IHa, IE) the
/// generators carry the catalog normalization so that the derived structure
/// constants equal the hand-entered algebras constant by constant.
std::vector<GeneratorMatrix> derive_generators(Family family, int n);

/// Expands every pairwise commutator of the derived generators in the
/// generator basis (exact linear solve) and returns the resulting algebra.
/// Throws std::runtime_error if a commutator leaves the span.
LieAlgebra structure_constants_from_matrices(Family family, int n);

/// g X g^{-1}.
RatMat conjugate_generator(const GroupElement& g, const RatMat& x);

/// Exact test S zeta S^T = zeta.
bool check_symplectic(const RatMat& s, const SymplecticMetric& metric);

/// Parameters of an HSp element recovered from a symplectic matrix that
/// commutes with the time generator.
struct TimeInvarianceResult {
  Rat eps;
  RatMat a;  // symplectic block
  RatMat w;  // 2n column
  Rat r;
};

/// True iff S T S^{-1} = T exactly (S symplectic w.r.t. the extended
/// metric); on success the Gamma-degree block pattern is verified and the
/// parameters returned.
std::optional<TimeInvarianceResult> check_time_invariance(const RatMat& s);

/// Exact-rational random draws used by the verification suites.
RatMat random_orthogonal(int n, DetRng& rng, bool allow_reflection = true);
RatMat random_symplectic(int n, DetRng& rng);  // 2n x 2n
GroupElement random_element(Family family, int n, DetRng& rng);

}  // namespace liecx
