#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "gpack/json_io.hpp"

using gpack::Json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gpack");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = gpack::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string group_file(const std::string& name) { return (gpack::gallery::data_dir() / "groups" / (name + ".json")).string(); }
std::string figure_file(int k) { return (gpack::gallery::data_dir() / "figures" / ("figure" + std::to_string(k) + ".json")).string(); }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = fs::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("scheme command") {
  auto r = run({"scheme", group_file("s3")});
  REQUIRE(r.code == gpack::cli::kOk);
  auto j = r.json();
  CHECK(j["orbitals"] == 2);
  CHECK(j["commutative"] == true);
  auto pairs = run({"scheme", group_file("sl2_f8"), "--action", "pairs"}).json();
  CHECK(pairs["points"] == 72);
  CHECK(pairs["commutative"] == false);
  auto regular = run({"scheme", group_file("s3"), "--action", "regular"}).json();
  CHECK(regular["points"] == 6);
  CHECK(regular["commutative"] == false);
}

TEST_CASE("idempotents are deterministic across runs and seeds") {
  auto a = run({"idempotents", group_file("agl_lines")});
  auto b = run({"idempotents", group_file("agl_lines")});
  auto c = run({"idempotents", group_file("agl_lines"), "--seed", "12345"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.json()["ranks"] == c.json()["ranks"]);
  CHECK(a.json()["ranks"] == Json::array({1, 6, 7, 14}));
}

TEST_CASE("scan-etf") {
  auto r = run({"scan-etf", group_file("agl_lines"), "--max-subset-size", "1"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["multiplicity_free"] == true);
  CHECK(j["results"].size() == 4);
  bool found = false;
  for (const auto& row : j["results"])
    if (row["rank"] == 7) {
      found = true;
      CHECK(row["report"]["is_etf"] == true);
    }
  CHECK(found);
  auto one = run({"scan-etf", group_file("z7"), "--action", "regular", "--subset", "0,1,2"}).json();
  CHECK(one["results"].size() == 1);
  auto reduced = run({"scan-etf", group_file("m11"), "--action", "pairs", "--reduce", "--subset", "0,1"});
  CHECK(reduced.code == 0);
  CHECK(run({"scan-etf", group_file("s3"), "--policy", "bogus"}).code == gpack::cli::kInputError);
  CHECK(run({"scan-etf", group_file("s3"), "--subset", "0,9"}).code == gpack::cli::kInputError);
}

TEST_CASE("reduce command") {
  auto gram = write_temp("gpack_pair.json", R"({"n": 2, "entries": [[[1,0],[-1,0]],[[-1,0],[1,0]]]})");
  auto r = run({"reduce", gram});
  REQUIRE(r.code == 0);
  CHECK(r.json()["class_map"] == Json::array({0, 0}));
}

TEST_CASE("heisenberg command") {
  auto r = run({"heisenberg", "--moduli", "5", "--parity", "even", "--verify"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["exact_etf"] == true);
  CHECK(j["closed_form_equals_direct"] == true);
  CHECK(j["report"]["d"] == 15);
  CHECK(run({"heisenberg", "--moduli", "3", "--exact"}).json()["gram"]["entries"].size() == 9);
  CHECK(run({"heisenberg", "--moduli", "4"}).code == gpack::cli::kInputError);
  CHECK(run({"heisenberg", "--parity", "sideways"}).code == gpack::cli::kInputError);
  CHECK(run({"heisenberg", "--gamma", "3"}).code == gpack::cli::kInputError);
  CHECK(run({"heisenberg", "--moduli", "51", "--verify"}).code == gpack::cli::kResourceError);
}

TEST_CASE("harmonic command") {
  auto j = run({"harmonic", "--moduli", "7", "--subset", "1;2;4"}).json();
  CHECK(j["difference_set"] == true);
  CHECK(j["lambda"] == 1);
  CHECK(j["report"]["is_etf"] == true);
  auto no = run({"harmonic", "--moduli", "4", "--subset", "0;1"}).json();
  CHECK(no["difference_set"] == false);
  CHECK(no["lambda"].is_null());
  CHECK(run({"harmonic", "--moduli", "4", "--subset", "0;x"}).code == gpack::cli::kInputError);
}

TEST_CASE("symmetry command") {
  auto j = run({"symmetry", figure_file(2)}).json();
  CHECK(j["n"] == 28);
  CHECK(j["transitive"] == true);
  auto colours = write_temp("gpack_colours.json", "[[0,1,1],[1,0,1],[1,1,0]]");
  CHECK(run({"symmetry", "--assume-colors", colours}).json()["order"] == "6");
  CHECK(run({"symmetry"}).code == gpack::cli::kInputError);
  auto ambiguous = write_temp("gpack_ambiguous.json",
                              R"({"n": 3, "entries": [[[1,0],[0.5,0],[0.500000005,0]],[[0.5,0],[1,0],[0.2,0]],[[0.500000005,0],[0.2,0],[1,0]]]})");
  CHECK(run({"symmetry", ambiguous, "--tol", "1e-9"}).code == gpack::cli::kNumericError);
  auto identity = write_temp("gpack_identity.json", R"({"n": 3, "entries": [[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]})");
  CHECK(run({"symmetry", identity, "--node-cap", "1"}).code == gpack::cli::kResourceError);
}

TEST_CASE("exit codes for bad input and limits") {
  CHECK(run({"scheme", "/nonexistent.json"}).code == gpack::cli::kInputError);
  CHECK(run({"scheme", group_file("s3"), "--action", "sideways"}).code == gpack::cli::kInputError);
  CHECK(run({"scheme", group_file("agl_lines"), "--action", "regular", "--element-limit", "100"}).code ==
        gpack::cli::kResourceError);
  CHECK(run({"no-such-command"}).code == gpack::cli::kInputError);
  CHECK(run({"scheme", group_file("s3"), "--tol", "-1"}).code == gpack::cli::kInputError);
}

TEST_CASE("output flag writes the same JSON") {
  auto path = (fs::temp_directory_path() / "gpack_scheme_out.json").string();
  auto direct = run({"scheme", group_file("s3")});
  auto filed = run({"scheme", group_file("s3"), "--output", path});
  CHECK(filed.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == direct.out);
  fs::remove(path);
}

TEST_CASE("verify-figures passes on the shipped fixtures") {
  auto r = run({"verify-figures"});
  CHECK(r.code == gpack::cli::kOk);
  CHECK(r.json()["all_pass"] == true);
}

TEST_CASE("gallery writes loadable groups") {
  auto dir = fs::temp_directory_path() / "gpack_gallery_test";
  auto r = run({"gallery", "--dir", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "agl_lines.json"));
  CHECK(run({"scheme", (dir / "agl_lines.json").string()}).json()["orbitals"] == 4);
  fs::remove_all(dir);
}
