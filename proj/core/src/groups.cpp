#include "liecx/groups.hpp"

#include <functional>
#include <stdexcept>

namespace liecx {

namespace {

RatMat zeta0(int n) {
  RatMat z(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    z.at(i, n + i) = 1;
    z.at(n + i, i) = -1;
  }
  return z;
}

// row vector t(w) * zeta0 * A as a 1 x 2n matrix
RatMat wt_zeta_a(const RatMat& w, const RatMat& a) {
  int n2 = w.rows();
  RatMat wt(1, n2);
  for (int i = 0; i < n2; ++i) wt.at(0, i) = w.at(i, 0);
  return wt * zeta0(n2 / 2) * a;
}

bool is_orthogonal(const RatMat& r) {
  return r.is_square() && r.transpose() * r == RatMat::identity(r.rows());
}

bool is_symplectic_block(const RatMat& a) {
  if (!a.is_square() || a.rows() % 2 != 0) return false;
  RatMat z = zeta0(a.rows() / 2);
  return a * z * a.transpose() == z;
}

const RatMat& param(const Params& p, const std::string& key, int rows, int cols) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter: " + key);
  if (it->second.rows() != rows || it->second.cols() != cols)
    throw std::invalid_argument("parameter '" + key + "' has wrong shape");
  return it->second;
}

Rat scalar(const Params& p, const std::string& key) { return param(p, key, 1, 1).at(0, 0); }

RatMat scalar_mat(const Rat& x) {
  RatMat m(1, 1);
  m.at(0, 0) = x;
  return m;
}

void require_eps(const Rat& eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
}

void require_keys(const Params& p, std::initializer_list<const char*> keys) {
  if (p.size() != keys.size()) throw std::invalid_argument("wrong parameter arity");
  for (const char* k : keys)
    if (!p.count(k)) throw std::invalid_argument(std::string("missing parameter: ") + k);
}

std::optional<Rat> rational_sqrt(const Rat& x) {
  if (sgn(x) < 0) return std::nullopt;
  mpz_class num = x.get_num(), den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rat r(sn, sd);
  r.canonicalize();
  return r;
}

RatMat template_matrix(Family family, int n, const Params& p) {
  int size = family_matrix_size(family, n);
  RatMat m(size, size);
  switch (family) {
    case Family::kH: {
      require_keys(p, {"w", "iota"});
      const RatMat& w = param(p, "w", 2 * n, 1);
      RatMat::identity(2 * n).emplace_into(m, 0, 0);
      w.emplace_into(m, 0, size - 1);
      RatMat row = wt_zeta_a(w, RatMat::identity(2 * n)).scaled(-1);
      row.emplace_into(m, 2 * n, 0);
      m.at(2 * n, 2 * n) = 1;
      m.at(2 * n, size - 1) = scalar(p, "iota");
      m.at(size - 1, size - 1) = 1;
      return m;
    }
    case Family::kHSp: {
      require_keys(p, {"eps", "A", "w", "r"});
      Rat eps = scalar(p, "eps");
      require_eps(eps);
      const RatMat& a = param(p, "A", 2 * n, 2 * n);
      if (!is_symplectic_block(a)) throw std::invalid_argument("A block is not symplectic");
      const RatMat& w = param(p, "w", 2 * n, 1);
      a.emplace_into(m, 0, 0);
      w.emplace_into(m, 0, size - 1);
      wt_zeta_a(w, a).scaled(-eps).emplace_into(m, 2 * n, 0);
      m.at(2 * n, 2 * n) = eps;
      m.at(2 * n, size - 1) = scalar(p, "r");
      m.at(size - 1, size - 1) = eps;
      return m;
    }
    case Family::kHa: {
      require_keys(p, {"eps", "R", "v", "f", "r"});
      Rat eps = scalar(p, "eps");
      require_eps(eps);
      const RatMat& rot = param(p, "R", n, n);
      if (!is_orthogonal(rot)) throw std::invalid_argument("R block is not orthogonal");
      const RatMat& v = param(p, "v", n, 1);
      const RatMat& f = param(p, "f", n, 1);
      rot.emplace_into(m, 0, 0);
      rot.emplace_into(m, n, n);
      f.emplace_into(m, 0, size - 1);
      v.emplace_into(m, n, size - 1);
      RatMat vt = (v.transpose() * rot).scaled(eps);
      RatMat ft = (f.transpose() * rot).scaled(-eps);
      vt.emplace_into(m, 2 * n, 0);
      ft.emplace_into(m, 2 * n, n);
      m.at(2 * n, 2 * n) = eps;
      m.at(2 * n, size - 1) = scalar(p, "r");
      m.at(size - 1, size - 1) = eps;
      return m;
    }
    case Family::kIHSp: {
      require_keys(p, {"eps", "A", "w", "r", "z", "e", "t"});
      Rat eps = scalar(p, "eps");
      require_eps(eps);
      const RatMat& a = param(p, "A", 2 * n, 2 * n);
      if (!is_symplectic_block(a)) throw std::invalid_argument("A block is not symplectic");
      const RatMat& w = param(p, "w", 2 * n, 1);
      const RatMat& z = param(p, "z", 2 * n, 1);
      a.emplace_into(m, 0, 0);
      w.emplace_into(m, 0, 2 * n + 1);
      z.emplace_into(m, 0, 2 * n + 2);
      wt_zeta_a(w, a).scaled(-eps).emplace_into(m, 2 * n, 0);
      m.at(2 * n, 2 * n) = eps;
      m.at(2 * n, 2 * n + 1) = scalar(p, "r");
      m.at(2 * n, 2 * n + 2) = scalar(p, "e");
      m.at(2 * n + 1, 2 * n + 1) = eps;
      m.at(2 * n + 1, 2 * n + 2) = scalar(p, "t");
      m.at(2 * n + 2, 2 * n + 2) = 1;
      return m;
    }
    case Family::kIHa:
    case Family::kIE: {
      Params full;
      if (family == Family::kIE) {
        require_keys(p, {"eps", "R", "v", "q", "t"});
        full = p;
        RatMat zero_n(n, 1);
        full["f"] = zero_n;
        full["p"] = zero_n;
        full["r"] = scalar_mat(0);
        full["e"] = scalar_mat(0);
      } else {
        require_keys(p, {"eps", "R", "v", "f", "r", "q", "p", "e", "t"});
        full = p;
      }
      Rat eps = scalar(full, "eps");
      require_eps(eps);
      const RatMat& rot = param(full, "R", n, n);
      if (!is_orthogonal(rot)) throw std::invalid_argument("R block is not orthogonal");
      const RatMat& v = param(full, "v", n, 1);
      const RatMat& f = param(full, "f", n, 1);
      const RatMat& q = param(full, "q", n, 1);
      const RatMat& pp = param(full, "p", n, 1);
      rot.emplace_into(m, 0, 0);
      rot.emplace_into(m, n, n);
      f.emplace_into(m, 0, 2 * n + 1);
      pp.emplace_into(m, 0, 2 * n + 2);
      v.emplace_into(m, n, 2 * n + 1);
      q.emplace_into(m, n, 2 * n + 2);
      (v.transpose() * rot).scaled(eps).emplace_into(m, 2 * n, 0);
      (f.transpose() * rot).scaled(-eps).emplace_into(m, 2 * n, n);
      m.at(2 * n, 2 * n) = eps;
      m.at(2 * n, 2 * n + 1) = scalar(full, "r");
      m.at(2 * n, 2 * n + 2) = scalar(full, "e");
      m.at(2 * n + 1, 2 * n + 1) = eps;
      m.at(2 * n + 1, 2 * n + 2) = scalar(full, "t");
      m.at(2 * n + 2, 2 * n + 2) = 1;
      return m;
    }
    case Family::kAutH: {
      require_keys(p, {"eps", "a", "A", "w", "r"});
      Rat eps = scalar(p, "eps");
      require_eps(eps);
      Rat a = scalar(p, "a");
      if (a == 0) throw std::invalid_argument("scale a must be nonzero");
      const RatMat& ablk = param(p, "A", 2 * n, 2 * n);
      if (!is_symplectic_block(ablk)) throw std::invalid_argument("A block is not symplectic");
      const RatMat& w = param(p, "w", 2 * n, 1);
      ablk.scaled(a).emplace_into(m, 0, 0);
      w.emplace_into(m, 0, size - 1);
      wt_zeta_a(w, ablk).scaled(-eps * a).emplace_into(m, 2 * n, 0);
      m.at(2 * n, 2 * n) = eps * a * a;
      m.at(2 * n, size - 1) = scalar(p, "r");
      m.at(size - 1, size - 1) = eps;
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::string family_key(Family f) {
  switch (f) {
    case Family::kH: return "h";
    case Family::kHa: return "ha";
    case Family::kHSp: return "hsp";
    case Family::kIHa: return "iha";
    case Family::kIHSp: return "ihsp";
    case Family::kIE: return "ie";
    case Family::kAutH: return "auth";
  }
  return "?";
}

std::optional<Family> family_from_key(const std::string& key) {
  for (Family f : {Family::kH, Family::kHa, Family::kHSp, Family::kIHa, Family::kIHSp,
                   Family::kIE, Family::kAutH})
    if (family_key(f) == key) return f;
  return std::nullopt;
}

int family_matrix_size(Family f, int n) {
  switch (f) {
    case Family::kH:
    case Family::kHa:
    case Family::kHSp:
    case Family::kAutH: return 2 * n + 2;
    case Family::kIHa:
    case Family::kIHSp:
    case Family::kIE: return 2 * n + 3;
  }
  return 0;
}

SymplecticMetric symplectic_metric(int n, bool extended) {
  if (!extended) return {n, false, zeta0(n)};
  RatMat z(2 * n + 2, 2 * n + 2);
  zeta0(n).emplace_into(z, 0, 0);
  z.at(2 * n, 2 * n + 1) = -1;
  z.at(2 * n + 1, 2 * n) = 1;
  return {n, true, z};
}

GroupElement build_element(Family family, int n, const Params& params) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Params canon = params;
  if (family == Family::kAutH) {
    // Canonical scale a > 0; (a, A) and (-a, -A) give the same matrix.
    Rat a = scalar(params, "a");
    if (a < 0) {
      canon["a"] = scalar_mat(-a);
      canon["A"] = param(params, "A", 2 * n, 2 * n).scaled(-1);
    }
  }
  RatMat m = template_matrix(family, n, canon);
  auto back = extract_params(family, n, m);
  if (!back || !(*back == canon)) throw std::logic_error("template round-trip failed");
  return {family, n, std::move(canon), std::move(m)};
}

std::optional<Params> extract_params(Family family, int n, const RatMat& m) {
  int size = family_matrix_size(family, n);
  if (m.rows() != size || m.cols() != size) return std::nullopt;
  Params p;
  switch (family) {
    case Family::kH: {
      p["w"] = m.block(0, size - 1, 2 * n, 1);
      p["iota"] = scalar_mat(m.at(2 * n, size - 1));
      break;
    }
    case Family::kHSp: {
      p["eps"] = scalar_mat(m.at(size - 1, size - 1));
      p["A"] = m.block(0, 0, 2 * n, 2 * n);
      p["w"] = m.block(0, size - 1, 2 * n, 1);
      p["r"] = scalar_mat(m.at(2 * n, size - 1));
      break;
    }
    case Family::kHa: {
      p["eps"] = scalar_mat(m.at(size - 1, size - 1));
      p["R"] = m.block(0, 0, n, n);
      p["f"] = m.block(0, size - 1, n, 1);
      p["v"] = m.block(n, size - 1, n, 1);
      p["r"] = scalar_mat(m.at(2 * n, size - 1));
      break;
    }
    case Family::kIHSp: {
      p["eps"] = scalar_mat(m.at(2 * n + 1, 2 * n + 1));
      p["A"] = m.block(0, 0, 2 * n, 2 * n);
      p["w"] = m.block(0, 2 * n + 1, 2 * n, 1);
      p["r"] = scalar_mat(m.at(2 * n, 2 * n + 1));
      p["z"] = m.block(0, 2 * n + 2, 2 * n, 1);
      p["e"] = scalar_mat(m.at(2 * n, 2 * n + 2));
      p["t"] = scalar_mat(m.at(2 * n + 1, 2 * n + 2));
      break;
    }
    case Family::kIHa: {
      p["eps"] = scalar_mat(m.at(2 * n + 1, 2 * n + 1));
      p["R"] = m.block(0, 0, n, n);
      p["f"] = m.block(0, 2 * n + 1, n, 1);
      p["p"] = m.block(0, 2 * n + 2, n, 1);
      p["v"] = m.block(n, 2 * n + 1, n, 1);
      p["q"] = m.block(n, 2 * n + 2, n, 1);
      p["r"] = scalar_mat(m.at(2 * n, 2 * n + 1));
      p["e"] = scalar_mat(m.at(2 * n, 2 * n + 2));
      p["t"] = scalar_mat(m.at(2 * n + 1, 2 * n + 2));
      break;
    }
    case Family::kIE: {
      p["eps"] = scalar_mat(m.at(2 * n + 1, 2 * n + 1));
      p["R"] = m.block(0, 0, n, n);
      p["v"] = m.block(n, 2 * n + 1, n, 1);
      p["q"] = m.block(n, 2 * n + 2, n, 1);
      p["t"] = scalar_mat(m.at(2 * n + 1, 2 * n + 2));
      break;
    }
    case Family::kAutH: {
      RatMat corner = m.block(0, 0, 2 * n, 2 * n);
      RatMat k = corner * zeta0(n) * corner.transpose();
      Rat a2 = k.at(0, n);
      auto a = rational_sqrt(a2);
      if (!a || *a == 0) return std::nullopt;
      p["eps"] = scalar_mat(m.at(size - 1, size - 1));
      p["a"] = scalar_mat(*a);
      p["A"] = corner.scaled(1 / *a);
      p["w"] = m.block(0, size - 1, 2 * n, 1);
      p["r"] = scalar_mat(m.at(2 * n, size - 1));
      break;
    }
  }
  try {
    if (!(template_matrix(family, n, p) == m)) return std::nullopt;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return p;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (g.family != h.family || g.n != h.n)
    throw std::invalid_argument("cannot compose elements of different families");
  RatMat prod = g.matrix * h.matrix;
  auto p = extract_params(g.family, g.n, prod);
  if (!p)
    throw std::runtime_error("product left the " + family_key(g.family) +
                             " template; catalog bug");
  return {g.family, g.n, std::move(*p), std::move(prod)};
}

GroupElement inverse(const GroupElement& g) {
  auto inv = g.matrix.inverse();
  if (!inv) throw std::logic_error("group element not invertible; invariant broken");
  auto p = extract_params(g.family, g.n, *inv);
  if (!p)
    throw std::runtime_error("inverse left the " + family_key(g.family) + " template; catalog bug");
  return {g.family, g.n, std::move(*p), std::move(*inv)};
}

namespace {

RatMat unit(int size, int i, int j) {
  RatMat m(size, size);
  m.at(i, j) = 1;
  return m;
}

// E(a, col) - sum_b zeta0_{a,b} E(2n, b): the w-direction generators shared
// by the H, HSp and AutH templates.
RatMat w_generator(int n, int size, int a) {
  RatMat m(size, size);
  m.at(a, size - 1) = 1;
  RatMat z = zeta0(n);
  for (int b = 0; b < 2 * n; ++b)
    if (z.at(a, b) != 0) m.at(2 * n, b) = -z.at(a, b);
  return m;
}

// Skew basis K_ij embedded at (block, block) for each given block offset.
RatMat rotation_generator(int size, int i, int j, std::initializer_list<int> offsets) {
  RatMat m(size, size);
  for (int off : offsets) {
    m.at(off + i, off + j) = 1;
    m.at(off + j, off + i) = -1;
  }
  return m;
}

std::string num_name(const std::string& stem, int i) { return stem + std::to_string(i); }

void append_sp_generators(int n, int size, std::vector<GeneratorMatrix>& out) {
  // Hamiltonian matrices zeta0 * S with S symmetric span the symplectic block.
  RatMat z = zeta0(n);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a; b < 2 * n; ++b) {
      RatMat s(2 * n, 2 * n);
      s.at(a, b) += 1;
      s.at(b, a) += 1;
      RatMat gen(size, size);
      (z * s).emplace_into(gen, 0, 0);
      out.push_back({"W" + std::to_string(a + 1) + "_" + std::to_string(b + 1), std::move(gen)});
    }
}

}  // namespace

std::vector<GeneratorMatrix> derive_generators(Family family, int n) {
  int size = family_matrix_size(family, n);
  std::vector<GeneratorMatrix> out;
  auto add_rotations = [&](std::initializer_list<int> offsets) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        out.push_back({"J" + std::to_string(i + 1) + std::to_string(j + 1),
                       rotation_generator(size, i, j, offsets)});
  };
  switch (family) {
    case Family::kH:
      for (int i = 0; i < n; ++i) out.push_back({num_name("P", i + 1), w_generator(n, size, i)});
      for (int i = 0; i < n; ++i)
        out.push_back({num_name("Q", i + 1), w_generator(n, size, n + i)});
      out.push_back({"I", unit(size, 2 * n, size - 1).scaled(-2)});
      return out;
    case Family::kHa:
      add_rotations({0, n});
      for (int i = 0; i < n; ++i) {
        RatMat g = unit(size, n + i, size - 1) + unit(size, 2 * n, i);
        out.push_back({num_name("G", i + 1), std::move(g)});
      }
      for (int i = 0; i < n; ++i) {
        RatMat f = unit(size, i, size - 1) - unit(size, 2 * n, n + i);
        out.push_back({num_name("F", i + 1), std::move(f)});
      }
      out.push_back({"R", unit(size, 2 * n, size - 1).scaled(2)});
      return out;
    case Family::kIE:
      add_rotations({0, n});
      for (int i = 0; i < n; ++i) {
        RatMat g = unit(size, n + i, 2 * n + 1) + unit(size, 2 * n, i);
        out.push_back({num_name("G", i + 1), std::move(g)});
      }
      for (int i = 0; i < n; ++i)
        out.push_back({num_name("P", i + 1), unit(size, n + i, 2 * n + 2).scaled(-1)});
      out.push_back({"E", unit(size, 2 * n + 1, 2 * n + 2).scaled(-1)});
      return out;
    case Family::kIHa:
      add_rotations({0, n});
      for (int i = 0; i < n; ++i) {
        RatMat g = unit(size, n + i, 2 * n + 1) + unit(size, 2 * n, i);
        out.push_back({num_name("G", i + 1), std::move(g)});
      }
      for (int i = 0; i < n; ++i) {
        RatMat f = unit(size, i, 2 * n + 1) - unit(size, 2 * n, n + i);
        out.push_back({num_name("F", i + 1), std::move(f)});
      }
      out.push_back({"R", unit(size, 2 * n, 2 * n + 1).scaled(2)});
      for (int i = 0; i < n; ++i)
        out.push_back({num_name("P", i + 1), unit(size, n + i, 2 * n + 2).scaled(-1)});
      for (int i = 0; i < n; ++i)
        out.push_back({num_name("Q", i + 1), unit(size, i, 2 * n + 2)});
      out.push_back({"E", unit(size, 2 * n + 1, 2 * n + 2).scaled(-1)});
      out.push_back({"T", unit(size, 2 * n, 2 * n + 2)});
      return out;
    case Family::kHSp:
      append_sp_generators(n, size, out);
      for (int a = 0; a < 2 * n; ++a)
        out.push_back({num_name("X", a + 1), w_generator(n, size, a)});
      out.push_back({"R", unit(size, 2 * n, size - 1)});
      return out;
    case Family::kIHSp:
      append_sp_generators(n, size, out);
      for (int a = 0; a < 2 * n; ++a)
        out.push_back({num_name("X", a + 1), w_generator(n, size, a)});
      out.push_back({"R", unit(size, 2 * n, 2 * n + 1)});
      for (int a = 0; a < 2 * n; ++a)
        out.push_back({num_name("Y", a + 1), unit(size, a, 2 * n + 2)});
      out.push_back({"Ye", unit(size, 2 * n, 2 * n + 2)});
      out.push_back({"Yt", unit(size, 2 * n + 1, 2 * n + 2)});
      return out;
    case Family::kAutH: {
      RatMat d(size, size);
      for (int i = 0; i < 2 * n; ++i) d.at(i, i) = 1;
      d.at(2 * n, 2 * n) = 2;
      out.push_back({"D", std::move(d)});
      append_sp_generators(n, size, out);
      for (int a = 0; a < 2 * n; ++a)
        out.push_back({num_name("X", a + 1), w_generator(n, size, a)});
      out.push_back({"R", unit(size, 2 * n, size - 1)});
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

LieAlgebra structure_constants_from_matrices(Family family, int n) {
  std::vector<GeneratorMatrix> gens = derive_generators(family, n);
  int size = family_matrix_size(family, n);
  int m = static_cast<int>(gens.size());
  RatMat span(size * size, m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) span.at(i * size + j, k) = gens[k].matrix.at(i, j);

  std::vector<std::string> basis;
  basis.reserve(m);
  for (const auto& g : gens) basis.push_back(g.name);
  LieAlgebra alg(family_key(family) + "(" + std::to_string(n) + ")|matrix", basis);

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      RatMat comm = gens[a].matrix * gens[b].matrix - gens[b].matrix * gens[a].matrix;
      if (comm.is_zero()) continue;
      std::vector<Rat> rhs(size * size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) rhs[i * size + j] = comm.at(i, j);
      auto x = solve_in_span(span, rhs);
      if (!x)
        throw std::runtime_error("commutator [" + gens[a].name + "," + gens[b].name +
                                 "] is not in the generator span; template bug");
      AlgebraElement e;
      for (int k = 0; k < m; ++k) e.add(k, (*x)[k]);
      alg.add_bracket(a, b, e);
    }
  return alg;
}

RatMat conjugate_generator(const GroupElement& g, const RatMat& x) {
  auto inv = g.matrix.inverse();
  if (!inv) throw std::logic_error("group element not invertible");
  return g.matrix * x * *inv;
}

bool check_symplectic(const RatMat& s, const SymplecticMetric& metric) {
  if (!s.is_square() || s.rows() != metric.matrix.rows()) return false;
  return s * metric.matrix * s.transpose() == metric.matrix;
}

std::optional<TimeInvarianceResult> check_time_invariance(const RatMat& s) {
  if (!s.is_square() || s.rows() < 4 || s.rows() % 2 != 0) return std::nullopt;
  int n = (s.rows() - 2) / 2;
  if (!check_symplectic(s, symplectic_metric(n, true))) return std::nullopt;
  // T is the elementary matrix mapping the T-slot onto the E-slot.
  RatMat t(s.rows(), s.rows());
  t.at(2 * n, 2 * n + 1) = 1;
  if (!(s * t == t * s)) return std::nullopt;
  // The commutation forces the HSp block pattern; recover and verify it.
  auto p = extract_params(Family::kHSp, n, s);
  if (!p) return std::nullopt;
  TimeInvarianceResult res{p->at("eps").at(0, 0), p->at("A"), p->at("w"), p->at("r").at(0, 0)};
  return res;
}

RatMat random_orthogonal(int n, DetRng& rng, bool allow_reflection) {
  RatMat s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat x = rng.rational(2, 2);
      s.at(i, j) = x;
      s.at(j, i) = -x;
    }
  RatMat id = RatMat::identity(n);
  auto inv = (id + s).inverse();
  if (!inv) throw std::logic_error("I + skew is always invertible");
  RatMat r = (id - s) * *inv;
  if (allow_reflection && rng.coin()) {
    for (int i = 0; i < n; ++i) r.at(i, 0) = -r.at(i, 0);
  }
  return r;
}

RatMat random_symplectic(int n, DetRng& rng) {
  RatMat a = RatMat::identity(2 * n);
  RatMat z = zeta0(n);
  for (int k = 0; k < 3; ++k) {
    RatMat u(2 * n, 1);
    for (int i = 0; i < 2 * n; ++i) u.at(i, 0) = rat(rng.int_in(-2, 2));
    Rat t = rng.rational(2, 2);
    // transvection x -> x + t * (u^T zeta0 x) u
    RatMat ut_z = u.transpose() * z;
    RatMat tv = RatMat::identity(2 * n) + (u * ut_z).scaled(t);
    a = a * tv;
  }
  return a;
}

GroupElement random_element(Family family, int n, DetRng& rng) {
  Params p;
  auto vec = [&](int k) {
    RatMat v(k, 1);
    for (int i = 0; i < k; ++i) v.at(i, 0) = rng.rational(3, 2);
    return v;
  };
  Rat eps = rng.coin() ? 1 : -1;
  switch (family) {
    case Family::kH:
      p["w"] = vec(2 * n);
      p["iota"] = scalar_mat(rng.rational(3, 2));
      break;
    case Family::kHSp:
      p["eps"] = scalar_mat(eps);
      p["A"] = random_symplectic(n, rng);
      p["w"] = vec(2 * n);
      p["r"] = scalar_mat(rng.rational(3, 2));
      break;
    case Family::kHa:
      p["eps"] = scalar_mat(eps);
      p["R"] = random_orthogonal(n, rng);
      p["v"] = vec(n);
      p["f"] = vec(n);
      p["r"] = scalar_mat(rng.rational(3, 2));
      break;
    case Family::kIHSp:
      p["eps"] = scalar_mat(eps);
      p["A"] = random_symplectic(n, rng);
      p["w"] = vec(2 * n);
      p["r"] = scalar_mat(rng.rational(3, 2));
      p["z"] = vec(2 * n);
      p["e"] = scalar_mat(rng.rational(3, 2));
      p["t"] = scalar_mat(rng.rational(3, 2));
      break;
    case Family::kIHa:
      p["eps"] = scalar_mat(eps);
      p["R"] = random_orthogonal(n, rng);
      p["v"] = vec(n);
      p["f"] = vec(n);
      p["r"] = scalar_mat(rng.rational(3, 2));
      p["q"] = vec(n);
      p["p"] = vec(n);
      p["e"] = scalar_mat(rng.rational(3, 2));
      p["t"] = scalar_mat(rng.rational(3, 2));
      break;
    case Family::kIE:
      p["eps"] = scalar_mat(eps);
      p["R"] = random_orthogonal(n, rng);
      p["v"] = vec(n);
      p["q"] = vec(n);
      p["t"] = scalar_mat(rng.rational(3, 2));
      break;
    case Family::kAutH:
      p["eps"] = scalar_mat(eps);
      p["a"] = scalar_mat(rat(rng.int_in(1, 3), rng.int_in(1, 2)));
      p["A"] = random_symplectic(n, rng);
      p["w"] = vec(2 * n);
      p["r"] = scalar_mat(rng.rational(3, 2));
      break;
  }
  return build_element(family, n, p);
}

}  // namespace liecx
