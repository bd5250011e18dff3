#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "quadpencil/fixtures.hpp"
#include "quadpencil/io.hpp"
#include "quadpencil/report.hpp"
#include "quadpencil/suites.hpp"

using namespace qp;
using io::Json;

namespace {

const std::vector<Place> kPlaces{Place::Real(), Place::Prime(2), Place::Prime(3)};

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "qpencil_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(const std::string& args) {
  auto out = scratch("stdout.txt"), err = scratch("stderr.txt");
  std::string cmd = std::string(QPENCIL_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

std::string write_file(const std::string& name, const std::string& text) {
  auto p = scratch(name);
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

}  // namespace

TEST_CASE("pencil and form JSON round trip") {
  for (auto& f : fixtures::taxonomy()) {
    CAPTURE(f.name);
    Json j = io::pencil_to_json(f.pencil);
    Pencil back = io::pencil_from_json(io::parse_json_text(io::dump(j)));
    CHECK(back.F() == f.pencil.F());
    CHECK(back.G() == f.pencil.G());
  }
  RatMatrix q = rat_matrix({{Rat(1, 2), 3}, {3, Rat(-7, 5)}});
  CHECK(io::form_from_json(io::form_to_json(q)) == q);
  // integers are accepted for entries and the schema field may be omitted
  CHECK(io::form_from_json(io::parse_json_text(R"({"n": 1, "gram": [[4]]})")) == rat_diag({4}));
}

TEST_CASE("strict input schema") {
  auto parse = [](const std::string& text) { return io::form_from_json(io::parse_json_text(text)); };
  CHECK_THROWS_AS(parse(R"({"n": 1, "gram": [["1"]], "extra": 0})"), io::ParseError);
  CHECK_THROWS_AS(parse(R"({"schema": 2, "n": 1, "gram": [["1"]]})"), io::ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 2, "gram": [["1"]]})"), io::ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "gram": [["1/0"]]})"), io::ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "gram": [[true]]})"), io::ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 0, "gram": []})"), io::ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 2, "gram": [["1", "2"], ["3", "1"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_json_text("{\"n\": 1,"), io::ParseError);
  CHECK_THROWS_WITH_AS(io::pencil_from_json(io::parse_json_text(R"({"n": 1, "F": [["1"]]})")), "$.G: missing field",
                       io::ParseError);
}

TEST_CASE("analysis report is a fixed point of serialize, reparse, re-analyze") {
  for (auto& f : fixtures::taxonomy()) {
    CAPTURE(f.name);
    Json first = report::to_json(report::analyze(f.pencil, kPlaces));
    auto reparsed = report::analysis_from_json(io::parse_json_text(io::dump(first)));
    CHECK(report::to_json(reparsed) == first);
    Json again = report::to_json(report::analyze(reparsed.input, kPlaces));
    CHECK(io::dump(again) == io::dump(first));
    CHECK(first.at("class").at("tag") == to_string(f.expected));
  }
}

TEST_CASE("analysis report sections") {
  auto obstructed = report::analyze(fixtures::diagonal_rank6_standard(), {});
  CHECK(obstructed.tag == "Rank6OverBase");
  REQUIRE(obstructed.plane_criterion.value);
  CHECK(obstructed.plane_criterion.value->tag == "ObstructionAt");
  CHECK(obstructed.plane_criterion.value->point == "t");
  CHECK(obstructed.plane_criterion.value->residue_class == "-1");
  CHECK_FALSE(obstructed.decomposition.value);
  CHECK(obstructed.decomposition.skipped == "class is Rank6OverBase, not FourRank6");

  auto four = report::analyze(fixtures::four_rank6_normal_form(), {});
  REQUIRE(four.decomposition.value);
  CHECK(four.decomposition.value->verified);
  CHECK(four.decomposition.value->eigenspace_dims == std::vector<std::size_t>{2, 2, 2, 2});

  auto degenerate = report::analyze(fixtures::degenerate(), kPlaces);
  CHECK(degenerate.tag == "DegeneratePencil");
  CHECK_FALSE(degenerate.sweep.skipped.empty());
  CHECK_FALSE(degenerate.residues.value);
  CHECK(degenerate.places.size() == 3);

  auto small = report::analyze(Pencil(rat_diag({1, 1, 1}), rat_diag({1, 2, 3})), {});
  CHECK(small.out_of_taxonomy);
  CHECK(std::find(small.warnings.begin(), small.warnings.end(), "out-of-taxonomy dimension") != small.warnings.end());
}

TEST_CASE("analysis reports reject unknown fields") {
  Json j = report::to_json(report::analyze(fixtures::regular_diagonal(), {}));
  j["surprise"] = 1;
  CHECK_THROWS_AS(report::analysis_from_json(j), io::ParseError);
  Json k = report::to_json(report::analyze(fixtures::regular_diagonal(), {}));
  k["class"]["surprise"] = 1;
  CHECK_THROWS_AS(report::analysis_from_json(k), io::ParseError);
}

TEST_CASE("suite registry and seeds") {
  auto names = verify::suite_names();
  CHECK(names.size() == 12);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  CHECK_THROWS_WITH(verify::make_suite("nope"), "unknown suite: nope");
  CHECK(verify::substream_seed(42, "a") != verify::substream_seed(42, "b"));
  CHECK(verify::substream_seed(42, "a") != verify::substream_seed(43, "a"));
  CHECK(verify::substream_seed(42, "a") == verify::substream_seed(42, "a"));
}

TEST_CASE("suites are deterministic per seed and independent of other suites") {
  auto gen = [](std::uint64_t seed, const std::string& name) {
    auto s = verify::make_suite(name);
    verify::Rng rng(verify::substream_seed(seed, name));
    return s.generate(rng, 1);
  };
  CHECK(gen(42, "hilbert-reciprocity") == gen(42, "hilbert-reciprocity"));
  CHECK(gen(42, "hilbert-reciprocity") != gen(43, "hilbert-reciprocity"));
  auto a = verify::run_suite({42, "mordell-sweep", 1});
  auto b = verify::run_suite({42, "mordell-sweep", 1});
  CHECK(a.cases == 50);
  CHECK(a.cases == b.cases);
  CHECK(a.passed());
  // a run restricted to one suite reports exactly what the full registry would
  verify::VerifyOptions one;
  one.seed = 42;
  one.suites = {"hilbert-laws"};
  auto r1 = verify::run_verify(one);
  one.suites = {"taxonomy", "hilbert-laws"};
  one.jobs = 2;
  auto r2 = verify::run_verify(one);
  CHECK(r1.report.at("suites").at(0) == r2.report.at("suites").at(1));
  CHECK(r2.report.at("suites").at(0).at("name") == "taxonomy");
}

TEST_CASE("counterexample files replay") {
  auto s = verify::make_suite("taxonomy");
  verify::Rng rng(0);
  auto cases = s.generate(rng, 1);
  REQUIRE(cases.size() == 7);
  Json good = verify::counterexample_json("taxonomy", 42, 0, cases[0], "none");
  CHECK(verify::replay(io::parse_json_text(io::dump(good))).passed);

  Json wrong = cases[2];
  wrong["expected"] = "Regular";
  auto r = verify::replay(verify::counterexample_json("taxonomy", 42, 2, wrong, "tag"));
  CHECK_FALSE(r.passed);
  CHECK(r.detail == "classified as Rank6OverBase");

  Json bad = good;
  bad["extra"] = 1;
  CHECK_THROWS_AS(verify::replay(bad), io::ParseError);
  bad = good;
  bad["suite"] = "nope";
  CHECK_THROWS_AS(verify::replay(bad), std::invalid_argument);
}

TEST_CASE("command-line exit codes") {
  std::string pencil = write_file("pencil.json", io::dump(io::pencil_to_json(fixtures::diagonal_rank6_standard())));
  std::string asym = write_file("asym.json", R"({"schema": 1, "n": 2, "gram": [["1", "2"], ["3", "1"]]})");
  std::string form = write_file("form.json", io::dump(io::form_to_json(rat_diag({1, -1, 2, 3}))));
  std::string broken = write_file("broken.json", "{\"n\": 2, ");
  std::string extra = write_file("extra.json", R"({"n": 1, "gram": [["1"]], "x": 0})");

  auto ok = run_cli("analyze " + pencil + " --places inf,2");
  CHECK(ok.code == 0);
  Json j = io::parse_json_text(ok.out);
  CHECK(j.at("plane_criterion").at("tag") == "ObstructionAt");

  auto out = scratch("out.json");
  std::filesystem::remove(out);
  auto to_file = run_cli("--json-out " + out.string() + " witt " + form + " --place 2");
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(io::read_json_file(out.string()).at("kind") == "witt");

  for (auto& [args, code] : std::vector<std::pair<std::string, int>>{{"witt " + asym + " --place 2", 2},
                                                                      {"witt " + broken + " --place 2", 1},
                                                                      {"witt " + extra + " --place 2", 1},
                                                                      {"witt " + form + " --place 4", 1},
                                                                      {"planes " + form + " --fq 4 --m 0", 1},
                                                                      {"verify --suite nope", 1},
                                                                      {"frobnicate", 1},
                                                                      {"analyze", 1},
                                                                      {"residues " + write_file("deg.json", io::dump(io::pencil_to_json(fixtures::degenerate()))), 2}}) {
    CAPTURE(args);
    auto r = run_cli(args);
    CHECK(r.code == code);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  auto broken_run = run_cli("witt " + broken + " --place 2");
  CHECK(broken_run.err.find("byte") != std::string::npos);
}

TEST_CASE("verify command writes and replays counterexamples") {
  auto pass = run_cli("verify --suite taxonomy --suite hilbert-oracle --seed 5");
  CHECK(pass.code == 0);
  Json j = io::parse_json_text(pass.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("suites").size() == 2);

  verify::Rng rng(0);
  Json wrong = verify::make_suite("taxonomy").generate(rng, 1)[3];
  wrong["expected"] = "Regular";
  std::string file = write_file("cex.json", io::dump(verify::counterexample_json("taxonomy", 5, 3, wrong, "x")));
  auto replay = run_cli("verify --replay " + file);
  CHECK(replay.code == 3);
  CHECK(io::parse_json_text(replay.out).at("passed") == false);
}
