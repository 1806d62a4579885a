#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>

#include "CLI11.hpp"
#include "polyred/acceptance.hpp"
#include "polyred/elimination.hpp"
#include "polyred/example_family.hpp"
#include "polyred/json_io.hpp"
#include "polyred/reduction.hpp"
#include "polyred/series_qft.hpp"

namespace polyred::cli {

namespace {

constexpr unsigned kFallbackOrder = 5;
constexpr const char* kOrderEnv = "POLYRED_ORDER";
constexpr const char* kCapSource = "classical bound d^(n-1) (imported, not from the source construction)";

unsigned default_order() {
  if (const char* v = std::getenv(kOrderEnv)) {
    try {
      return static_cast<unsigned>(std::stoul(v));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(kOrderEnv) + " is not a non-negative integer: " + v);
    }
  }
  return kFallbackOrder;
}

struct Globals {
  std::string out_path;
  std::string format = "json";
  bool timing = false;
};

class Reporter {
 public:
  explicit Reporter(bool pretty) : pretty_(pretty) {}

  Json poly(const Polynomial& p) const { return pretty_ ? Json(p.to_string()) : polynomial_to_json(p); }
  Json polys(const std::vector<Polynomial>& ps) const {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(poly(p));
    return a;
  }
  Json opt_poly(const std::optional<Polynomial>& p) const { return p ? poly(*p) : Json(nullptr); }
  Json series(const GradedSeriesVector& g) const {
    if (!pretty_) return graded_series_to_json(g);
    Json grades = Json::array();
    for (unsigned r = 0; r <= g.order(); ++r) grades.push_back(polys(g.grade(r)));
    return Json{{"order", g.order()}, {"grades", grades}};
  }
  Json series(const GradedSeries& g) const {
    if (!pretty_) return graded_series_to_json(g);
    Json grades = Json::array();
    for (const auto& p : g.grades()) grades.push_back(poly(p));
    return Json{{"order", g.order()}, {"grades", grades}};
  }
  Json verdict(const MembershipVerdict& v) const {
    Json j;
    j["verdict"] = to_string(v.verdict);
    j["constant"] = v.constant ? Json(v.constant->to_string()) : Json(nullptr);
    j["witness"] = opt_poly(v.witness);
    if (!v.inverse.empty()) j["inverse"] = polys(v.inverse);
    j["detail"] = v.detail;
    return j;
  }

 private:
  bool pretty_;
};

struct Outcome {
  Json report;
  int code = 0;
};

Json coefficient_list(const std::vector<Coefficient>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(c.to_string());
  return a;
}

Outcome cmd_check_jlin(const std::string& path, const Reporter& rep) {
  const SystemFile f = read_system_file(path);
  const MembershipVerdict v = is_jlin(f.system);
  Json j;
  j["command"] = "check-jlin";
  j["input"] = path;
  j["verdict"] = to_string(v.verdict);
  j["constant"] = v.verdict == Verdict::member ? Json(v.constant->to_string()) : Json(nullptr);
  j["offending_term"] = v.verdict == Verdict::non_member ? rep.opt_poly(v.witness) : Json(nullptr);
  j["detail"] = v.detail;
  return {j, 0};
}

Outcome cmd_check_partial(const std::string& path, std::size_t n1, bool lin, std::optional<unsigned> cap,
                          const Reporter& rep) {
  const SystemFile f = read_system_file(path);
  const MembershipVerdict v = lin ? is_jlin_partial(f.system, n1) : is_j_partial(f.system, n1, cap);
  Json j;
  j["command"] = "check-partial";
  j["input"] = path;
  j["n1"] = n1;
  j["predicate"] = lin ? "jlin_partial" : "j_partial";
  j.update(rep.verdict(v));
  if (!lin) j["degree_cap_source"] = cap ? "user" : kCapSource;
  return {j, 0};
}

Outcome cmd_eliminate(const std::string& path, std::size_t n1, const Reporter& rep) {
  const SystemFile f = read_system_file(path);
  const SplitSystem sp = split(f.system, n1);
  const PartialInverse rinv = invert_R(sp);
  Json j;
  j["command"] = "eliminate";
  j["input"] = path;
  j["n1"] = n1;
  j["R"] = rep.polys(sp.R());
  j["R_certified"] = rinv.certified;
  j["R_status"] = to_string(rinv.status);
  j["route"] = rinv.route;
  int code = 0;
  if (rinv.certified) {
    j["Rinv"] = rep.polys(rinv.Rinv);
    j["H"] = rep.polys(build_H(sp, rinv));
    const SchurReport s = schur_identity_check(sp, rinv);
    j["schur"] = Json{{"holds", s.holds}, {"difference", rep.poly(s.difference)}};
    if (!s.holds) code = 1;
  } else {
    j["witness"] = rep.opt_poly(rinv.witness);
  }
  j["detail"] = rinv.detail;
  return {j, code};
}

Json index_map(std::size_t n) {
  Json a = Json::array();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) a.push_back(Json{{"i", i}, {"j", j}, {"coordinate", i * n + j}});
  return a;
}

Outcome cmd_reduce(const std::string& path, const std::string& variant_name, bool pretty, const Reporter& rep) {
  const SystemFile f = read_system_file(path);
  const PhiVariant variant = parse_phi_variant(variant_name);
  const ReducedSystem r = phi(f.system, variant);
  Json prov;
  prov["source_dim"] = r.source_dim;
  prov["source_degree"] = r.source_degree;
  prov["variant"] = to_string(variant);
  prov["index_map"] = index_map(r.source_dim);
  if (!pretty) return {system_to_json(SystemFile{r.system, prov}), 0};
  Json j;
  j["command"] = "reduce";
  j["input"] = path;
  j["components"] = rep.polys(r.system.components());
  j["provenance"] = prov;
  return {j, 0};
}

Outcome cmd_invert(const std::string& path, unsigned order, const std::string& oracle, const Reporter& rep) {
  const SystemFile f = read_system_file(path);
  const CouplingTensor w = extract_couplings(f.system);
  const GradedSeriesVector G = formal_inverse_fixed_point(w, order);
  const SeriesCheck defect = inversion_defect(w, G);
  Json j;
  j["command"] = "invert";
  j["input"] = path;
  j["order"] = order;
  j["series"] = rep.series(G);
  j["defect"] = Json{{"holds", defect.holds}, {"detail", defect.detail}};
  int code = defect.holds ? 0 : 1;
  if (oracle == "trees") {
    const bool equal = tree_oracle_inverse(w, order) == G;
    j["oracle"] = Json{{"kind", "trees"}, {"equal", equal}};
    if (!equal) code = 1;
  } else if (!oracle.empty()) {
    throw std::invalid_argument("unknown oracle '" + oracle + "' (expected trees)");
  }
  return {j, code};
}

Outcome cmd_partition(const std::string& path, unsigned order, const Reporter& rep) {
  if (order < 1) throw std::invalid_argument("partition: order must be at least 1");
  const SystemFile f = read_system_file(path);
  const CouplingTensor w = extract_couplings(f.system);
  const PartitionReport r = z_det_identity_check(w, order);
  Json j;
  j["command"] = "partition";
  j["input"] = path;
  j["order"] = order;
  j["log_z"] = rep.series(r.log_z);
  j["det"] = rep.series(r.det);
  j["z_det_identity"] = Json{{"holds", r.z_det.holds}, {"detail", r.z_det.detail}};
  j["log_z_equals_minus_log_det"] = r.log_det_agrees;
  return {j, r.z_det.holds && r.log_det_agrees ? 0 : 1};
}

Outcome cmd_example(unsigned d, std::uint64_t seed, std::size_t count, const std::string& emit_dir,
                    const Reporter& rep) {
  const auto corpus = sample_family_corpus(d, count, seed);
  const FamilyReport report = equality_jlin_j_partial_check(corpus);
  Json instances = Json::array();
  for (std::size_t id = 0; id < report.instances.size(); ++id) {
    const FamilyVerdicts& v = report.instances[id];
    Json e;
    e["id"] = id;
    e["a1"] = coefficient_list(v.instance.a1);
    e["a2"] = coefficient_list(v.instance.a2);
    e["jlin"] = to_string(v.jlin);
    e["jlin_partial"] = to_string(v.jlin_partial);
    e["j_partial"] = to_string(v.j_partial);
    e["closed_form_jlin"] = v.closed_jlin;
    e["closed_form_partial"] = v.closed_partial;
    e["jlin_partial_witness"] = rep.opt_poly(v.jlin_partial_witness);
    if (!v.j_partial_inverse.empty()) e["restricted_inverse"] = rep.polys(v.j_partial_inverse);
    instances.push_back(std::move(e));
    if (!emit_dir.empty()) {
      std::filesystem::create_directories(emit_dir);
      Json prov;
      prov["family"] = Json{{"d", d}, {"a1", coefficient_list(v.instance.a1)}, {"a2", coefficient_list(v.instance.a2)}};
      prov["seed"] = seed;
      prov["id"] = id;
      char name[64];
      std::snprintf(name, sizeof(name), "family_d%u_%04zu.json", d, id);
      write_text_file((std::filesystem::path(emit_dir) / name).string(),
                      emit_system(SystemFile{family_system(v.instance), prov}));
    }
  }
  Json j;
  j["command"] = "example-s4";
  j["d"] = d;
  j["seed"] = seed;
  j["count"] = count;
  j["instances"] = std::move(instances);
  j["summary"] = Json{{"closed_form_jlin_mismatches", report.jlin_mismatches},
                      {"closed_form_partial_mismatches", report.partial_mismatches},
                      {"jlin_partial_vs_j_partial_mismatches", report.lin_vs_j_mismatches},
                      {"in_partial_not_classical", report.partial_not_classical},
                      {"in_classical_not_partial", report.classical_not_partial}};
  return {j, report.passed() ? 0 : 1};
}

Outcome cmd_verify_all(int criterion, std::uint64_t seed) {
  std::vector<acceptance::CriterionResult> results;
  if (criterion > 0)
    results.push_back(acceptance::run_criterion(criterion, seed));
  else
    results = acceptance::run_all(seed);
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json subs = Json::array();
    for (const auto& s : r.subchecks) subs.push_back(Json{{"label", s.label}, {"passed", s.passed}, {"detail", s.detail}});
    list.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"subchecks", subs}});
    all = all && r.passed;
  }
  Json j;
  j["command"] = "verify-all";
  j["seed"] = seed;
  j["criteria"] = std::move(list);
  j["all_passed"] = all;
  return {j, all ? 0 : 1};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polynomial-map reduction, elimination and formal-inverse toolkit", "polyred"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out_path, "Write the report to this path instead of stdout");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "pretty"}));
  app.add_flag("--timing", g.timing, "Include wall-clock timing in the report");

  std::string input;
  std::size_t n1 = 0;
  bool lin = false;
  std::optional<unsigned> cap;
  std::string variant;
  std::optional<unsigned> order;
  std::string oracle;
  unsigned family_d = 2;
  std::uint64_t seed = acceptance::kDefaultSeed;
  std::size_t count = 20;
  std::string emit_dir;
  int criterion = 0;

  auto* jlin = app.add_subcommand("check-jlin", "Constant-Jacobian test for a square system");
  jlin->add_option("system", input, "System JSON file")->required();

  auto* partial = app.add_subcommand("check-partial", "Partial classes after eliminating the last n-n1 variables");
  partial->add_option("system", input, "System JSON file")->required();
  partial->add_option("--n1", n1, "Size of the kept block")->required();
  partial->add_flag("--lin", lin, "Jacobian version instead of the invertibility version");
  partial->add_option("--cap", cap, "Degree cap for the inverse search");

  auto* elim = app.add_subcommand("eliminate", "Emit R, R^-1 and H for a split system");
  elim->add_option("system", input, "System JSON file")->required();
  elim->add_option("--n1", n1, "Size of the kept block")->required();

  auto* reduce = app.add_subcommand("reduce", "Apply the degree-reduction map");
  reduce->add_option("system", input, "System JSON file")->required();
  reduce->add_option("--variant", variant, "algebraic or qft")->required()->check(CLI::IsMember({"algebraic", "qft"}));

  auto* invert = app.add_subcommand("invert", "Theta-graded formal inverse of a normalized system");
  invert->add_option("system", input, "System JSON file")->required();
  invert->add_option("--order", order, "Truncation order (default from POLYRED_ORDER, else 5)");
  invert->add_option("--oracle", oracle, "Cross-check with an independent oracle")->check(CLI::IsMember({"trees"}));

  auto* part = app.add_subcommand("partition", "ln Z(0,u) and the Z * det identity");
  part->add_option("system", input, "System JSON file")->required();
  part->add_option("--order", order, "Truncation order (default from POLYRED_ORDER, else 5)");

  auto* example = app.add_subcommand("example-s4", "Two-dimensional degree-d family corpus run");
  example->add_option("--d", family_d, "Degree d >= 2")->required()->check(CLI::Range(2U, 16U));
  example->add_option("--seed", seed, "Corpus seed");
  example->add_option("--count", count, "Number of instances");
  example->add_option("--emit", emit_dir, "Directory for the generated system files");

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_option("--criterion", criterion, "Run a single criterion")->check(CLI::Range(1, acceptance::kCriterionCount));
  verify->add_option("--seed", seed, "Suite seed");

  for (auto* sc : {jlin, partial, elim, reduce, invert, part, example, verify}) sc->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool pretty = g.format == "pretty";
  const Reporter rep(pretty);
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    const unsigned ord = order ? *order : default_order();
    if (jlin->parsed()) result = cmd_check_jlin(input, rep);
    else if (partial->parsed()) result = cmd_check_partial(input, n1, lin, cap, rep);
    else if (elim->parsed()) result = cmd_eliminate(input, n1, rep);
    else if (reduce->parsed()) result = cmd_reduce(input, variant, pretty, rep);
    else if (invert->parsed()) result = cmd_invert(input, ord, oracle, rep);
    else if (part->parsed()) result = cmd_partition(input, ord, rep);
    else if (example->parsed()) result = cmd_example(family_d, seed, count, emit_dir, rep);
    else result = cmd_verify_all(criterion, seed);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (g.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result.report["timing_ms"] = ms;
  }

  const std::string text = result.report.dump(2) + "\n";
  if (g.out_path.empty()) {
    out << text;
  } else {
    try {
      write_text_file(g.out_path, text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return result.code;
}

}  // namespace polyred::cli
