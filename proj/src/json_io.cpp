#include "polyred/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace polyred {

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["exp"] = m.exponents();
    t["re"] = c.re().get_str();
    t["im"] = c.im().get_str();
    terms.push_back(std::move(t));
  }
  Json j;
  j["nvars"] = p.nvars();
  j["terms"] = std::move(terms);
  return j;
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

bool non_negative_integer(const Json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::size_t unsigned_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!non_negative_integer(v)) throw SchemaError(path + "." + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

mpq_class rational_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a rational string \"p/q\"");
  try {
    return Coefficient::parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(path + "." + key, e.what());
  }
}

}  // namespace

Polynomial polynomial_from_json(const Json& j, const std::string& path) {
  const std::size_t nvars = unsigned_field(j, "nvars", path);
  const Json& terms = field(j, "terms", path);
  if (!terms.is_array()) throw SchemaError(path + ".terms", "expected an array");
  Polynomial p(nvars);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = path + ".terms[" + std::to_string(t) + "]";
    const Json& e = field(terms[t], "exp", tp);
    if (!e.is_array()) throw SchemaError(tp + ".exp", "expected an array");
    if (e.size() != nvars)
      throw SchemaError(tp + ".exp",
                        "expected " + std::to_string(nvars) + " exponents, got " + std::to_string(e.size()));
    std::vector<std::uint32_t> exps;
    for (const auto& x : e) {
      if (!non_negative_integer(x)) throw SchemaError(tp + ".exp", "exponents must be non-negative integers");
      exps.push_back(x.get<std::uint32_t>());
    }
    p.add_term(Monomial(std::move(exps)), Coefficient(rational_field(terms[t], "re", tp), rational_field(terms[t], "im", tp)));
  }
  return p;
}

Json system_to_json(const SystemFile& file) {
  Json j;
  j["version"] = 1;
  j["nvars"] = file.system.nvars();
  j["degree_bound"] = file.system.degree_bound();
  Json comps = Json::array();
  for (const auto& c : file.system.components()) comps.push_back(polynomial_to_json(c));
  j["components"] = std::move(comps);
  if (file.provenance) j["provenance"] = *file.provenance;
  return j;
}

SystemFile system_from_json(const Json& j) {
  const std::string root = "system";
  if (!j.is_object()) throw SchemaError(root, "expected an object");
  if (unsigned_field(j, "version", root) != 1) throw SchemaError(root + ".version", "unsupported version");
  const std::size_t nvars = unsigned_field(j, "nvars", root);
  const std::size_t bound = unsigned_field(j, "degree_bound", root);
  const Json& comps = field(j, "components", root);
  if (!comps.is_array()) throw SchemaError(root + ".components", "expected an array");
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string cp = "components[" + std::to_string(i) + "]";
    Polynomial p = polynomial_from_json(comps[i], cp);
    if (p.nvars() != nvars)
      throw SchemaError(cp + ".nvars", "expected " + std::to_string(nvars) + ", got " + std::to_string(p.nvars()));
    if (p.degree() > static_cast<int>(bound))
      throw SchemaError(cp, "degree " + std::to_string(p.degree()) + " exceeds degree_bound " + std::to_string(bound));
    polys.push_back(std::move(p));
  }
  SystemFile out{PolySystem(nvars, std::move(polys), static_cast<unsigned>(bound)), std::nullopt};
  if (auto it = j.find("provenance"); it != j.end()) out.provenance = *it;
  return out;
}

std::string emit_system(const SystemFile& file) { return system_to_json(file).dump(2) + "\n"; }

SystemFile parse_system(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("<document>", e.what());
  }
  return system_from_json(j);
}

SystemFile read_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Json graded_series_to_json(const GradedSeriesVector& g) {
  Json grades = Json::array();
  for (unsigned r = 0; r <= g.order(); ++r) {
    Json comps = Json::array();
    for (const auto& p : g.grade(r)) comps.push_back(polynomial_to_json(p));
    Json entry;
    entry["grade"] = r;
    entry["components"] = std::move(comps);
    grades.push_back(std::move(entry));
  }
  Json j;
  j["order"] = g.order();
  j["grades"] = std::move(grades);
  return j;
}

Json graded_series_to_json(const GradedSeries& g) {
  Json grades = Json::array();
  for (unsigned r = 0; r <= g.order(); ++r) {
    Json entry;
    entry["grade"] = r;
    entry["value"] = polynomial_to_json(g.grade(r));
    grades.push_back(std::move(entry));
  }
  Json j;
  j["order"] = g.order();
  j["grades"] = std::move(grades);
  return j;
}

}  // namespace polyred
