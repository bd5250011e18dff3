// qpencil: command-line front end for pencils of rational quadratic forms.
//
// Exit codes: 0 success, 1 usage or parse error (or unknown suite),
// 2 validation error, 3 verification failure. On error nothing is written
// to stdout and the message goes to stderr.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "quadpencil/geometry.hpp"
#include "quadpencil/io.hpp"
#include "quadpencil/local.hpp"
#include "quadpencil/report.hpp"
#include "quadpencil/residues.hpp"
#include "quadpencil/suites.hpp"

namespace {

using namespace qp;
using io::Json;

enum ExitCode { kOk = 0, kParse = 1, kValidation = 2, kSuiteFailure = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Place> parse_places(const std::string& s) {
  std::vector<Place> out;
  for (auto& item : split_list(s)) {
    try {
      out.push_back(io::place_from_string(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

/// "p" or "p^k".
GaloisField parse_fq(const std::string& s) {
  auto caret = s.find('^');
  try {
    std::size_t used = 0;
    unsigned long p = std::stoul(s.substr(0, caret), &used);
    if (used != (caret == std::string::npos ? s.size() : caret)) throw std::invalid_argument(s);
    unsigned long k = 1;
    if (caret != std::string::npos) {
      std::string ks = s.substr(caret + 1);
      k = std::stoul(ks, &used);
      if (used != ks.size()) throw std::invalid_argument(s);
    }
    return GaloisField(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
  } catch (const std::logic_error&) {
    throw UsageError("bad field size: " + s + " (expected p or p^k)");
  }
}

Json codes(const Matrix<GFElem>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).code());
    rows.push_back(row);
  }
  return rows;
}

Json point_json(const std::vector<Int>& x) {
  Json a = Json::array();
  for (auto& c : x) a.push_back(c.get_str());
  return a;
}

struct Options {
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  std::string json_out;

  std::string input;
  std::string places = "inf,2";
  std::string primes;
  bool real = false;
  std::string place;
  std::string fq;
  std::size_t m = 0;
  long height = 3;
  std::optional<long> prime;
  int precision = 3;
  std::vector<std::string> suites;
  int size = 1;
  std::string dump_dir;
  std::string replay;
};

Json cmd_analyze(const Options& o) {
  Pencil p = io::pencil_from_json(io::read_json_file(o.input));
  return report::to_json(report::analyze(p, parse_places(o.places)));
}

Json cmd_local(const Options& o) {
  RatMatrix q = io::form_from_json(io::read_json_file(o.input));
  std::vector<Place> places;
  if (o.real) places.push_back(Place::Real());
  for (auto& v : parse_places(o.primes)) places.push_back(v);
  if (places.empty()) throw UsageError("local: give --primes and/or --real");
  Json rows = Json::array();
  for (auto& v : places) rows.push_back(report::witt_json(witt_index_local(q, v)));
  Json j;
  j["schema"] = io::kSchemaVersion;
  j["kind"] = "local";
  j["places"] = rows;
  return j;
}

Json cmd_witt(const Options& o) {
  RatMatrix q = io::form_from_json(io::read_json_file(o.input));
  auto places = parse_places(o.place);
  if (places.size() != 1) throw UsageError("witt: --place takes exactly one place");
  Json j;
  j["schema"] = io::kSchemaVersion;
  j["kind"] = "witt";
  j["witt"] = report::witt_json(witt_index_local(q, places.front()));
  return j;
}

Json cmd_planes(const Options& o) {
  RatMatrix q = io::form_from_json(io::read_json_file(o.input));
  GaloisField k = parse_fq(o.fq);
  FqMatrix qk = reduce(k, q);
  auto W = isotropic_subspace_Fq(k, qk, o.m);
  Json j;
  j["schema"] = io::kSchemaVersion;
  j["kind"] = "planes";
  j["field"] = k.name();
  j["m"] = o.m;
  j["witt_index"] = witt_index_Fq(k, qk);
  j["found"] = W.has_value();
  j["basis"] = W ? codes(W->basis) : Json(nullptr);
  return j;
}

Json cmd_residues(const Options& o) {
  Pencil p = io::pencil_from_json(io::read_json_file(o.input));
  Json rows = Json::array();
  for (auto& r : residue_table(p)) rows.push_back(report::residue_row_json(r));
  Json j;
  j["schema"] = io::kSchemaVersion;
  j["kind"] = "residues";
  j["points"] = rows;
  return j;
}

Json cmd_plane_criterion(const Options& o) {
  Pencil p = io::pencil_from_json(io::read_json_file(o.input));
  auto v = plane_criterion(p);
  Json rows = Json::array();
  for (auto& r : v.points) rows.push_back(report::residue_row_json(r));
  Json j;
  j["schema"] = io::kSchemaVersion;
  j["kind"] = "plane-criterion";
  j["verdict"] = report::to_json(report::verdict_row(v));
  j["points"] = rows;
  return j;
}

Json cmd_search(const Options& o) {
  Pencil p = io::pencil_from_json(io::read_json_file(o.input));
  Json j;
  j["schema"] = io::kSchemaVersion;
  j["kind"] = "search";
  j["height"] = o.height;
  auto x = rational_point_search(p, o.height);
  j["rational_point"] = x ? point_json(*x) : Json(nullptr);
  if (o.prime) {
    auto r = local_point_search_intersection(p, Int(*o.prime), o.precision);
    Json l;
    l["p"] = r.p.get_str();
    l["precision"] = r.precision;
    l["found"] = r.found;
    l["point"] = r.found ? point_json(r.point) : Json(nullptr);
    j["local"] = l;
  }
  return j;
}

int cmd_verify(const Options& o, Json& out) {
  if (!o.replay.empty()) {
    auto r = verify::replay(io::read_json_file(o.replay));
    out["schema"] = io::kSchemaVersion;
    out["kind"] = "replay";
    out["passed"] = r.passed;
    out["detail"] = r.detail;
    return r.passed ? kOk : kSuiteFailure;
  }
  verify::VerifyOptions v;
  v.seed = o.seed;
  v.size = o.size;
  v.jobs = o.jobs;
  v.suites = o.suites;
  if (!o.dump_dir.empty()) v.dump_dir = o.dump_dir;
  auto run = verify::run_verify(v);
  out = run.report;
  return run.passed ? kOk : kSuiteFailure;
}

void emit(const Options& o, const Json& j) {
  std::string text = io::dump(j);
  if (o.json_out.empty()) {
    std::cout << text;
  } else {
    io::write_json_file(o.json_out, j);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of pencils of two rational quadratic forms"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for verify (default 42)");
  app.add_option("--jobs", o.jobs, "concurrent suites for verify")->check(CLI::PositiveNumber);
  app.add_option("--json-out", o.json_out, "write the JSON result to PATH instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "full report for a pencil file");
  analyze->add_option("pencil", o.input, "pencil JSON {n, F, G}")->required();
  analyze->add_option("--places", o.places, "comma-separated places, e.g. inf,2,3");

  auto* local = app.add_subcommand("local", "Witt data of a form at several places");
  local->add_option("form", o.input, "form JSON {n, gram}")->required();
  local->add_option("--primes", o.primes, "comma-separated primes");
  local->add_flag("--real", o.real, "include the real place");

  auto* witt = app.add_subcommand("witt", "Witt data of a form at one place");
  witt->add_option("form", o.input, "form JSON {n, gram}")->required();
  witt->add_option("--place", o.place, "inf or a prime")->required();

  auto* planes = app.add_subcommand("planes", "totally isotropic subspace of the reduction mod p");
  planes->add_option("form", o.input, "form JSON {n, gram}")->required();
  planes->add_option("--fq", o.fq, "field size p or p^k")->required();
  planes->add_option("--m", o.m, "projective dimension of the subspace")->required();

  auto* residues = app.add_subcommand("residues", "residues of the Clifford class at the singular points");
  residues->add_option("pencil", o.input, "pencil JSON")->required();

  auto* criterion = app.add_subcommand("plane-criterion", "verdict from the residues");
  criterion->add_option("pencil", o.input, "pencil JSON")->required();

  auto* search = app.add_subcommand("search", "bounded search for rational and p-adic points of F = G = 0");
  search->add_option("pencil", o.input, "pencil JSON")->required();
  search->add_option("--height", o.height, "coordinate bound")->check(CLI::NonNegativeNumber);
  search->add_option("--prime", o.prime, "also search mod p and Hensel-lift");
  search->add_option("--precision", o.precision, "lift to p^precision")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the seeded property suites");
  verify->add_option("--suite", o.suites, "suite name (repeatable; default all)");
  verify->add_option("--size", o.size, "case-count multiplier")->check(CLI::PositiveNumber);
  verify->add_option("--dump-dir", o.dump_dir, "directory for counterexample files");
  verify->add_option("--replay", o.replay, "re-run a counterexample file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  if (o.jobs == 0) o.jobs = 1;

  try {
    Json out;
    int code = kOk;
    if (*analyze) out = cmd_analyze(o);
    else if (*local) out = cmd_local(o);
    else if (*witt) out = cmd_witt(o);
    else if (*planes) out = cmd_planes(o);
    else if (*residues) out = cmd_residues(o);
    else if (*criterion) out = cmd_plane_criterion(o);
    else if (*search) out = cmd_search(o);
    else if (*verify) code = cmd_verify(o, out);
    emit(o, out);
    if (code == kSuiteFailure) std::cerr << "qpencil: verification failed\n";
    return code;
  } catch (const io::ParseError& e) {
    std::cerr << "qpencil: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "qpencil: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    std::cerr << "qpencil: " << msg << "\n";
    return msg.rfind("unknown suite", 0) == 0 ? kParse : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "qpencil: " << e.what() << "\n";
    return kValidation;
  }
}
