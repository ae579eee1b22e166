#include "liecx/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace liecx {

using Json = nlohmann::ordered_json;

namespace {

std::string idx(const std::string& stem, size_t i) {
  return stem + "[" + std::to_string(i) + "]";
}

const Json& field(const Json& j, const std::string& path, const std::string& key,
                  Json::value_t type) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, "missing field '" + key + "'");
  if (it->type() != type &&
      !(type == Json::value_t::array && it->type() == Json::value_t::array))
    throw ParseError(path + "." + key, "wrong type");
  return *it;
}

}  // namespace

LieAlgebra parse_algebra(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("$", "document must be an object");
  const Json& name = field(doc, "$", "name", Json::value_t::string);
  const Json& basis = field(doc, "$", "basis", Json::value_t::array);

  std::vector<std::string> gens;
  std::set<std::string> seen;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) throw ParseError("$." + idx("basis", i), "generator must be a string");
    std::string g = basis[i].get<std::string>();
    if (!seen.insert(g).second)
      throw ParseError("$." + idx("basis", i), "duplicate generator '" + g + "'");
    gens.push_back(std::move(g));
  }
  LieAlgebra alg(name.get<std::string>(), gens);

  const Json& brackets = field(doc, "$", "brackets", Json::value_t::array);
  std::set<std::pair<int, int>> pairs;
  for (size_t i = 0; i < brackets.size(); ++i) {
    std::string bp = "$." + idx("brackets", i);
    const Json& b = brackets[i];
    if (!b.is_object()) throw ParseError(bp, "bracket must be an object");
    auto gen_index = [&](const char* key) {
      const Json& v = field(b, bp, key, Json::value_t::string);
      std::string g = v.get<std::string>();
      if (!alg.has_generator(g))
        throw ParseError(bp + "." + key, "unknown generator '" + g + "'");
      return alg.index(g);
    };
    int a = gen_index("a");
    int c = gen_index("b");
    if (a == c) throw ParseError(bp, "diagonal bracket [" + alg.gen_name(a) + "," + alg.gen_name(a) + "]");
    std::pair<int, int> key = a < c ? std::make_pair(a, c) : std::make_pair(c, a);
    if (!pairs.insert(key).second)
      throw ParseError(bp, "duplicate bracket entry [" + alg.gen_name(key.first) + "," +
                               alg.gen_name(key.second) + "]");
    const Json& rhs = field(b, bp, "rhs", Json::value_t::array);
    AlgebraElement e;
    for (size_t k = 0; k < rhs.size(); ++k) {
      std::string tp = bp + "." + idx("rhs", k);
      const Json& term = rhs[k];
      if (!term.is_object()) throw ParseError(tp, "term must be an object");
      const Json& gname = field(term, tp, "gen", Json::value_t::string);
      std::string g = gname.get<std::string>();
      if (!alg.has_generator(g)) throw ParseError(tp + ".gen", "unknown generator '" + g + "'");
      const Json& coef = field(term, tp, "coef", Json::value_t::string);
      auto r = parse_rational(coef.get<std::string>());
      if (!r)
        throw ParseError(tp + ".coef",
                         "malformed rational literal '" + coef.get<std::string>() + "'");
      e.add(alg.index(g), *r);
    }
    if (!e.is_zero()) alg.add_bracket(a, c, e);
  }
  return alg;
}

LieAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("$", "cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

namespace {

Json algebra_doc(const LieAlgebra& alg) {
  Json doc;
  doc["name"] = alg.name();
  doc["basis"] = alg.basis();
  Json brackets = Json::array();
  for (const auto& [ab, rhs] : alg.table()) {
    Json b;
    b["a"] = alg.gen_name(ab.first);
    b["b"] = alg.gen_name(ab.second);
    Json terms = Json::array();
    for (const auto& [g, c] : rhs.coeffs()) {
      Json t;
      t["gen"] = alg.gen_name(g);
      t["coef"] = rat_str(c);
      terms.push_back(std::move(t));
    }
    b["rhs"] = std::move(terms);
    brackets.push_back(std::move(b));
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

}  // namespace

std::string serialize_algebra(const LieAlgebra& alg) { return algebra_doc(alg).dump(2) + "\n"; }

std::string extension_to_json(const ExtensionResult& result) {
  const LieAlgebra& alg = result.algebra;
  Json doc;
  doc["algebra"] = alg.name();
  doc["N_e"] = result.dimension;
  Json cocycles = Json::array();
  for (size_t k = 0; k < result.cocycle_basis.size(); ++k) {
    Json c;
    Json charges = Json::array();
    for (const auto& [ab, coef] : result.cocycle_basis[k]) {
      Json t;
      t["a"] = alg.gen_name(ab.first);
      t["b"] = alg.gen_name(ab.second);
      t["coef"] = rat_str(coef);
      charges.push_back(std::move(t));
    }
    c["charges"] = std::move(charges);
    c["central_name"] = result.central_names[k];
    cocycles.push_back(std::move(c));
  }
  doc["cocycles"] = std::move(cocycles);
  doc["extended_algebra"] = algebra_doc(result.extended);
  return doc.dump(2) + "\n";
}

std::string extension_to_text(const ExtensionResult& result) {
  const LieAlgebra& alg = result.algebra;
  std::ostringstream os;
  os << "algebra " << alg.name() << ": N_e = " << result.dimension << "\n";
  for (size_t k = 0; k < result.cocycle_basis.size(); ++k) {
    os << "  " << result.central_names[k] << ":";
    for (const auto& [ab, coef] : result.cocycle_basis[k])
      os << "  [" << alg.gen_name(ab.first) << "," << alg.gen_name(ab.second)
         << "] += " << rat_str(coef) << "*" << result.central_names[k];
    os << "\n";
  }
  return os.str();
}

std::string poly_to_text(const LieAlgebra& alg, const EnvelopingPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (const auto& [g, e] : m.factors) {
      os << "*" << alg.gen_name(g);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

Json casimir_doc(Enveloping& env, const CasimirSet& set) {
  const LieAlgebra& alg = env.algebra();
  Json doc;
  doc["algebra"] = alg.name();
  int count = 0;
  for (const auto& e : set.elements)
    if (!e.poly.is_zero()) ++count;
  doc["count"] = count;
  doc["searched_degree"] = set.max_degree_searched;
  Json list = Json::array();
  for (const auto& e : set.elements) {
    if (e.poly.is_zero()) continue;
    Json c;
    c["label"] = e.label;
    c["degree"] = e.poly.degree();
    Json terms = Json::array();
    for (const auto& [m, coef] : e.poly.terms()) {
      Json t;
      Json mono = Json::array();
      for (const auto& [g, ex] : m.factors) mono.push_back(Json::array({alg.gen_name(g), ex}));
      t["monomial"] = std::move(mono);
      t["coef"] = rat_str(coef);
      terms.push_back(std::move(t));
    }
    c["terms"] = std::move(terms);
    c["verified"] = !verify_casimir(env, e.poly).has_value();
    list.push_back(std::move(c));
  }
  doc["casimirs"] = std::move(list);
  return doc;
}

}  // namespace

std::string casimirs_to_json(Enveloping& env, const CasimirSet& set) {
  return casimir_doc(env, set).dump(2) + "\n";
}

std::string casimirs_to_text(Enveloping& env, const CasimirSet& set) {
  const LieAlgebra& alg = env.algebra();
  std::ostringstream os;
  os << "algebra " << alg.name() << ", searched degree " << set.max_degree_searched << "\n";
  for (const auto& e : set.elements) {
    if (e.poly.is_zero()) continue;
    bool ok = !verify_casimir(env, e.poly).has_value();
    os << "  " << e.label << " (degree " << e.poly.degree() << ", "
       << (ok ? "verified" : "NOT INVARIANT") << "): " << poly_to_text(alg, e.poly) << "\n";
  }
  return os.str();
}

std::string group_element_to_json(const GroupElement& g) {
  Json doc;
  doc["family"] = family_key(g.family);
  doc["n"] = g.n;
  Json params;
  for (const auto& [key, value] : g.params) {
    if (value.rows() == 1 && value.cols() == 1) {
      params[key] = rat_str(value.at(0, 0));
    } else if (value.cols() == 1) {
      Json v = Json::array();
      for (int i = 0; i < value.rows(); ++i) v.push_back(rat_str(value.at(i, 0)));
      params[key] = std::move(v);
    } else {
      Json rows = Json::array();
      for (int i = 0; i < value.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < value.cols(); ++j) row.push_back(rat_str(value.at(i, j)));
        rows.push_back(std::move(row));
      }
      params[key] = std::move(rows);
    }
  }
  doc["params"] = std::move(params);
  Json rows = Json::array();
  for (int i = 0; i < g.matrix.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < g.matrix.cols(); ++j) row.push_back(rat_str(g.matrix.at(i, j)));
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace liecx
