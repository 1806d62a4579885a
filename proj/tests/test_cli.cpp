#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "polyred/example_family.hpp"
#include "polyred/json_io.hpp"

using namespace polyred;
using namespace th;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = polyred::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "polyred_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_system(const std::string& name, const PolySystem& S) {
  const std::string path = (scratch() / name).string();
  write_text_file(path, emit_system(SystemFile{S, std::nullopt}));
  return path;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("system files round trip byte for byte") {
    const PolySystem S(2, {z(2, 0) + mono({0, 2}, q(-3, 7)), z(2, 1) + mono({1, 1}, Coefficient(mpq_class(1, 2), mpq_class(-1)))});
    Json prov;
    prov["note"] = "fixture";
    const std::string text = emit_system(SystemFile{S, prov});
    const SystemFile back = parse_system(text);
    CHECK(back.system == S);
    CHECK(emit_system(back) == text);
    CHECK(text.back() == '\n');
  }

  TEST_CASE("schema errors name the offending field") {
    const PolySystem S(2, {z(2, 0), z(2, 1)});
    Json j = system_to_json(SystemFile{S, std::nullopt});
    j["components"][1]["terms"][0]["exp"] = Json::array({1});
    try {
      system_from_json(j);
      FAIL("schema error expected");
    } catch (const SchemaError& e) {
      CHECK_MESSAGE(std::string(e.what()).find("components[1]") != std::string::npos, std::string(e.what()));
    }
    CHECK_THROWS_AS(parse_system("{not json"), SchemaError);
    Json v = system_to_json(SystemFile{S, std::nullopt});
    v["version"] = 2;
    CHECK_THROWS_AS(system_from_json(v), SchemaError);
  }

  TEST_CASE("check-jlin") {
    const std::string member = write_system("shear.json", PolySystem(2, {z(2, 0) + mono({0, 2}), z(2, 1)}));
    const Run r = invoke({"check-jlin", member});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["verdict"] == "member");
    CHECK(j["constant"] == "1");

    const std::string other = write_system("fold.json", PolySystem(1, {z(1, 0) - mono({2})}));
    const Json k2 = Json::parse(invoke({"check-jlin", other}).out);
    CHECK(k2["verdict"] == "non_member");
    CHECK(k2["offending_term"].is_object());
  }

  TEST_CASE("reduce then check-partial agrees with check-jlin") {
    const std::vector<PolySystem> cases{
        PolySystem(2, {z(2, 0) + mono({0, 3}), z(2, 1)}, 3),
        PolySystem(1, {z(1, 0) - mono({3})}, 3),
    };
    std::size_t idx = 0;
    for (const auto& F : cases) {
      const std::string src = write_system("src" + std::to_string(idx) + ".json", F);
      for (const std::string variant : {"algebraic", "qft"}) {
        const std::string red = (scratch() / ("red" + std::to_string(idx) + variant + ".json")).string();
        REQUIRE(invoke({"--out", red, "reduce", src, "--variant", variant}).code == 0);
        const SystemFile rf = read_system_file(red);
        CHECK((*rf.provenance)["variant"] == variant);
        CHECK((*rf.provenance)["source_dim"] == F.nvars());
        const Json lin = Json::parse(invoke({"check-partial", red, "--n1", std::to_string(F.nvars()), "--lin"}).out);
        const Json src_verdict = Json::parse(invoke({"check-jlin", src}).out);
        CHECK(lin["verdict"] == src_verdict["verdict"]);
      }
      ++idx;
    }
  }

  TEST_CASE("eliminate") {
    const std::string path = write_system("elim.json", PolySystem(2, {z(2, 0) + z(2, 1), z(2, 1) + mono({2, 0})}));
    const Run r = invoke({"--format", "pretty", "eliminate", path, "--n1", "1"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["Rinv"][0] == "-z1^2 + z2");
    CHECK(j["schur"]["holds"] == true);
  }

  TEST_CASE("invert with the tree oracle") {
    const std::string path = write_system("cubic.json", PolySystem(2, {z(2, 0) - mono({1, 2}), z(2, 1) - mono({2, 0})}, 3));
    const Run r = invoke({"invert", path, "--order", "3", "--oracle", "trees"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["oracle"]["equal"] == true);
    CHECK(j["defect"]["holds"] == true);
    CHECK(j["series"]["order"] == 3);
  }

  TEST_CASE("partition") {
    const std::string path = write_system("quad.json", PolySystem(1, {z(1, 0) - mono({2}, 5)}, 2));
    const Run r = invoke({"partition", path, "--order", "3"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["log_z_equals_minus_log_det"] == true);
  }

  TEST_CASE("example-s4 emits parseable family files") {
    const fs::path dir = scratch() / "family";
    fs::remove_all(dir);
    const Run r = invoke({"example-s4", "--d", "3", "--count", "6", "--seed", "9", "--emit", dir.string()});
    CHECK(r.code == 0);
    const auto corpus = sample_family_corpus(3, 6, 9);
    for (std::size_t id = 0; id < corpus.size(); ++id) {
      char name[64];
      std::snprintf(name, sizeof(name), "family_d3_%04zu.json", id);
      const SystemFile f = read_system_file((dir / name).string());
      CHECK(family_instance_from_system(f.system) == corpus[id]);
      CHECK((*f.provenance)["id"] == id);
    }
  }

  TEST_CASE("runs are deterministic") {
    const fs::path a = scratch() / "det_a";
    const fs::path b = scratch() / "det_b";
    fs::remove_all(a);
    fs::remove_all(b);
    const Run ra = invoke({"example-s4", "--d", "2", "--count", "4", "--emit", a.string()});
    const Run rb = invoke({"example-s4", "--d", "2", "--count", "4", "--emit", b.string()});
    CHECK(ra.out == rb.out);
    CHECK(slurp(a / "family_d2_0003.json") == slurp(b / "family_d2_0003.json"));
  }

  TEST_CASE("errors") {
    CHECK(invoke({"check-jlin", (scratch() / "missing.json").string()}).code == 2);
    CHECK(invoke({"reduce", "x.json", "--variant", "other"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
    const std::string bad = (scratch() / "bad.json").string();
    write_text_file(bad, "{\"version\": 1}\n");
    const Run r = invoke({"check-jlin", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("nvars") != std::string::npos);
  }
}
