#include "liecx/casimir.hpp"

#include <algorithm>
#include <functional>

#include "liecx/sparse.hpp"

namespace liecx {

namespace {

/// Echelonized span of enveloping polynomials, keyed by leading (highest
/// deglex) monomial.
class PolySpan {
 public:
  /// Reduces p in place; returns false when it lands in the span.
  bool reduce(EnvelopingPoly& p) const {
    while (!p.is_zero()) {
      const PBWMonomial& lead = p.terms().rbegin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) return true;
      Rat k = -(p.terms().rbegin()->second);
      p += it->second.scaled(k);
    }
    return false;
  }

  bool insert(EnvelopingPoly p) {
    if (!reduce(p)) return false;
    Rat inv = 1 / p.terms().rbegin()->second;
    p = p.scaled(inv);
    PBWMonomial lead = p.terms().rbegin()->first;
    for (auto& [l, row] : pivots_) {
      auto it = row.terms().find(lead);
      if (it == row.terms().end()) continue;
      Rat k = -it->second;
      row += p.scaled(k);
    }
    pivots_.emplace(std::move(lead), std::move(p));
    return true;
  }

  /// Rows in ascending leading-monomial order.
  std::vector<EnvelopingPoly> rows() const {
    std::vector<EnvelopingPoly> out;
    out.reserve(pivots_.size());
    for (const auto& [l, row] : pivots_) out.push_back(row);
    return out;
  }

 private:
  std::map<PBWMonomial, EnvelopingPoly> pivots_;
};

void enumerate_monomials(int dim, int max_degree, std::vector<PBWMonomial>& out) {
  // All monomials with 1 <= degree <= max_degree, generators ascending.
  out.clear();
  std::vector<std::pair<int, int>> stack;
  std::function<void(int, int)> rec = [&](int next_gen, int remaining) {
    for (int g = next_gen; g < dim; ++g)
      for (int e = 1; e <= remaining; ++e) {
        stack.emplace_back(g, e);
        PBWMonomial m;
        m.factors = stack;
        out.push_back(std::move(m));
        if (remaining - e > 0) rec(g + 1, remaining - e);
        stack.pop_back();
      }
  };
  rec(0, max_degree);
}

long long ansatz_size(int dim, int max_degree) {
  mpz_class total = 1;  // C(dim + d, d) counts monomials of degree <= d
  for (int i = 1; i <= max_degree; ++i) {
    total *= dim + i;
    total /= i;
  }
  total -= 1;  // drop the constant monomial
  if (!total.fits_slong_p()) return -1;
  return total.get_si();
}

/// All products of the accepted invariants with total degree <= max_degree,
/// inserted into `span` (the accepted elements themselves included).
void build_product_span(Enveloping& env, const std::vector<EnvelopingPoly>& accepted,
                        int max_degree, PolySpan& span) {
  std::function<void(size_t, int, const EnvelopingPoly&)> rec =
      [&](size_t from, int budget, const EnvelopingPoly& prod) {
        for (size_t i = from; i < accepted.size(); ++i) {
          int d = accepted[i].degree();
          if (d == 0 || d > budget) continue;
          EnvelopingPoly next = env.multiply(prod, accepted[i]);
          if (next.is_zero()) continue;
          span.insert(next);
          rec(i, budget - d, next);
        }
      };
  EnvelopingPoly one;
  one.add(PBWMonomial{}, 1);
  rec(0, max_degree, one);
}

}  // namespace

std::optional<CommutantResidual> verify_casimir(Enveloping& env, const EnvelopingPoly& p) {
  const LieAlgebra& alg = env.algebra();
  for (int a = 0; a < alg.dim(); ++a) {
    EnvelopingPoly r = env.commutator_generator(p, a);
    if (!r.is_zero()) return CommutantResidual{alg.gen_name(a), std::move(r)};
  }
  return std::nullopt;
}

std::vector<EnvelopingPoly> primitive_reduce(Enveloping& env,
                                             const std::vector<EnvelopingPoly>& found,
                                             const CasimirSet& prior, int max_degree) {
  std::vector<EnvelopingPoly> accepted;
  for (const auto& e : prior.elements)
    if (!e.poly.is_zero()) accepted.push_back(e.poly);

  std::vector<EnvelopingPoly> sorted = found;
  std::sort(sorted.begin(), sorted.end(), [](const EnvelopingPoly& a, const EnvelopingPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.terms() < b.terms();
  });

  PolySpan products;
  build_product_span(env, accepted, max_degree, products);
  std::vector<EnvelopingPoly> fresh;
  for (const auto& cand : sorted) {
    EnvelopingPoly r = cand;
    if (!products.reduce(r)) continue;
    r = r.scaled(1 / r.terms().rbegin()->second);
    fresh.push_back(r);
    accepted.push_back(r);
    products = PolySpan();
    build_product_span(env, accepted, max_degree, products);
  }

  // Re-echelonize the new primitives against each other for sparsity.
  PolySpan canon;
  for (auto& p : fresh) canon.insert(std::move(p));
  std::vector<EnvelopingPoly> out = canon.rows();
  std::sort(out.begin(), out.end(), [](const EnvelopingPoly& a, const EnvelopingPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.terms() < b.terms();
  });
  return out;
}

CasimirSet search_casimirs(Enveloping& env, int max_degree, const CasimirSet& prior,
                           long long ceiling) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  const LieAlgebra& alg = env.algebra();
  long long size = ansatz_size(alg.dim(), max_degree);
  if (size < 0 || size > ceiling) throw SizingError({size, ceiling});

  std::vector<PBWMonomial> columns;
  enumerate_monomials(alg.dim(), max_degree, columns);
  std::map<PBWMonomial, int> col_index;
  for (size_t i = 0; i < columns.size(); ++i) col_index[columns[i]] = static_cast<int>(i);

  // Constraint rows are indexed by (generator, result monomial).
  std::map<std::pair<int, PBWMonomial>, SparseVec> rows;
  for (size_t col = 0; col < columns.size(); ++col) {
    EnvelopingPoly mono;
    mono.add(columns[col], 1);
    for (int a = 0; a < alg.dim(); ++a) {
      EnvelopingPoly comm = env.commutator_generator(mono, a);
      for (const auto& [m, c] : comm.terms()) rows[{a, m}][static_cast<int>(col)] += c;
    }
  }
  SparseSystem sys(static_cast<int>(columns.size()));
  for (auto& [key, row] : rows) sys.add_row(row);

  std::vector<EnvelopingPoly> solutions;
  for (const auto& vec : nullspace(sys)) {
    EnvelopingPoly p;
    for (const auto& [col, c] : vec) p.add(columns[col], c);
    solutions.push_back(std::move(p));
  }

  std::vector<EnvelopingPoly> fresh = primitive_reduce(env, solutions, prior, max_degree);

  CasimirSet out;
  out.algebra = &alg;
  out.max_degree_searched = std::max(max_degree, prior.max_degree_searched);
  out.elements = prior.elements;
  for (auto& p : fresh) out.elements.push_back({"", std::move(p)});
  for (size_t i = 0; i < out.elements.size(); ++i)
    out.elements[i].label = "C" + std::to_string(i + 1);
  return out;
}

namespace {

EnvelopingPoly gen_product(Enveloping& env, std::initializer_list<const char*> names) {
  EnvelopingPoly p;
  bool first = true;
  for (const char* name : names) {
    if (first) {
      p = env.generator(name);
      first = false;
    } else {
      p = env.multiply(p, env.generator(name));
    }
  }
  return p;
}

std::string num(const std::string& stem, int i) { return stem + std::to_string(i); }

}  // namespace

CasimirSet reference_casimirs(Enveloping& env, const std::string& family, int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("reference invariants are tabulated for n <= 3");
  const LieAlgebra& alg = env.algebra();
  CasimirSet set;
  set.algebra = &alg;
  auto J = [&](int i, int j) { return "J" + std::to_string(i) + std::to_string(j); };

  if (family == "galilei") {
    EnvelopingPoly c2 = gen_product(env, {"M", "E"}).scaled(2);
    for (int i = 1; i <= n; ++i) {
      auto p = num("P", i);
      c2 += env.multiply(env.generator(p), env.generator(p)).scaled(-1);
    }
    EnvelopingPoly c3;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        EnvelopingPoly s = env.multiply(env.generator("M"), env.generator(J(i, j)));
        s += env.multiply(env.generator(num("G", j)), env.generator(num("P", i))).scaled(-1);
        s += env.multiply(env.generator(num("G", i)), env.generator(num("P", j)));
        c3 += env.multiply(s, s);
      }
    set.elements = {{"C1", env.generator("M")}, {"C2", std::move(c2)}, {"C3", std::move(c3)}};
    return set;
  }

  if (family == "qha") {
    EnvelopingPoly c4 = gen_product(env, {"T", "T"});
    c4 += gen_product(env, {"I", "R"});
    EnvelopingPoly big_c = gen_product(env, {"A", "M"}).scaled(-1);
    big_c += c4;
    EnvelopingPoly c5;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        auto gi = num("G", i), gj = num("G", j), fi = num("F", i), fj = num("F", j);
        auto pi = num("P", i), pj = num("P", j), qi = num("Q", i), qj = num("Q", j);
        EnvelopingPoly d;  // D_ij
        EnvelopingPoly d1 = env.multiply(env.generator(gj), env.generator(pi));
        d1 += env.multiply(env.generator(gi), env.generator(pj)).scaled(-1);
        d += env.multiply(env.generator("A"), d1);
        EnvelopingPoly d2 = env.multiply(env.generator(fj), env.generator(qi));
        d2 += env.multiply(env.generator(fi), env.generator(qj)).scaled(-1);
        d += env.multiply(env.generator("M"), d2);
        EnvelopingPoly d3 = env.multiply(env.generator(pi), env.generator(qj));
        d3 += env.multiply(env.generator(pj), env.generator(qi)).scaled(-1);
        d += env.multiply(env.generator("R"), d3);
        EnvelopingPoly d4 = env.multiply(env.generator(fi), env.generator(gj));
        d4 += env.multiply(env.generator(fj), env.generator(gi)).scaled(-1);
        d += env.multiply(env.generator("I"), d4).scaled(-1);
        EnvelopingPoly d56 = env.multiply(env.generator(fi), env.generator(pj));
        d56 += env.multiply(env.generator(fj), env.generator(pi)).scaled(-1);
        d56 += env.multiply(env.generator(gi), env.generator(qj));
        d56 += env.multiply(env.generator(gj), env.generator(qi)).scaled(-1);
        d += env.multiply(env.generator("T"), d56);
        EnvelopingPoly s = env.multiply(big_c, env.generator(J(i, j)));
        s += d;
        c5 += env.multiply(s, s);
      }
    set.elements = {{"C1", env.generator("I")},
                    {"C2", env.generator("M")},
                    {"C3", env.generator("A")},
                    {"C4", std::move(c4)},
                    {"C5", std::move(c5)}};
    return set;
  }
  throw std::invalid_argument("no tabulated invariants for family: " + family);
}

}  // namespace liecx
