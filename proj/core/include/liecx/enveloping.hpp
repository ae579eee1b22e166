#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "liecx/algebra.hpp"
#include "liecx/rng.hpp"

namespace liecx {

/// Normal-ordered monomial in the universal enveloping algebra: factors
/// sorted by ascending generator index, positive exponents.
struct PBWMonomial {
  std::vector<std::pair<int, int>> factors;  // (generator, exponent)

  int degree() const {
    int d = 0;
    for (auto& [g, e] : factors) d += e;
    return d;
  }
  bool empty() const { return factors.empty(); }
  std::vector<int> word() const {
    std::vector<int> w;
    for (auto& [g, e] : factors) w.insert(w.end(), e, g);
    return w;
  }
  static PBWMonomial from_word(const std::vector<int>& sorted_word);

  /// Degree-then-lex order; total, deterministic.
  friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.factors < b.factors;
  }
  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return a.factors == b.factors;
  }
};

/// PBW-normal-ordered noncommutative polynomial with exact coefficients.
class EnvelopingPoly {
 public:
  EnvelopingPoly() = default;

  void add(const PBWMonomial& m, const Rat& c);
  const std::map<PBWMonomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  EnvelopingPoly& operator+=(const EnvelopingPoly& o);
  EnvelopingPoly scaled(const Rat& k) const;
  friend bool operator==(const EnvelopingPoly& a, const EnvelopingPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<PBWMonomial, Rat> terms_;
};

/// Rewrite schedules for resolving out-of-order adjacent factors. The
/// leftmost strategy is the production path; the others exist to exercise
/// confluence (the result is schedule-independent because the bracket
/// satisfies the Jacobi identity).
enum class SwapSchedule { kLeftmost, kRightmost, kSeeded };

/// Enveloping-algebra arithmetic bound to one algebra. Caches normalized
/// two-factor swaps; treat one instance as single-threaded.
class Enveloping {
 public:
  explicit Enveloping(const LieAlgebra& alg) : alg_(&alg) {}

  const LieAlgebra& algebra() const { return *alg_; }

  EnvelopingPoly one_term(const std::vector<int>& word, const Rat& coef = 1) const;
  EnvelopingPoly generator(int g, const Rat& coef = 1) const;
  EnvelopingPoly generator(const std::string& name, const Rat& coef = 1) const;

  /// Repeatedly swaps adjacent out-of-order factors Z_b Z_a -> Z_a Z_b +
  /// [Z_b, Z_a], recursing on the bracket terms until every monomial is
  /// ordered.
  EnvelopingPoly normal_order(const std::vector<int>& word);

  /// Schedule-controlled variant without memoization; used by the
  /// confluence tests.
  EnvelopingPoly normal_order_scheduled(const std::vector<int>& word, SwapSchedule schedule,
                                        std::uint64_t seed = 0) const;

  EnvelopingPoly multiply(const EnvelopingPoly& p, const EnvelopingPoly& q);

  /// [p, Z_a], normal ordered. Degree never increases.
  EnvelopingPoly commutator_generator(const EnvelopingPoly& p, int gen);

 private:
  EnvelopingPoly normalize_word_memo(const std::vector<int>& word);

  const LieAlgebra* alg_;
  std::map<std::vector<int>, EnvelopingPoly> cache_;
};

}  // namespace liecx
