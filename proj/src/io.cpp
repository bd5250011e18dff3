#include "quadpencil/io.hpp"

#include <fstream>
#include <sstream>

namespace qp::io {

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump(j);
  if (!out) throw std::runtime_error("failed writing " + path);
}

ObjectReader::ObjectReader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
  if (!j_.is_object()) throw ParseError(path_ + ": expected an object");
}

bool ObjectReader::has(const std::string& key) const { return j_.contains(key); }

const Json& ObjectReader::at(const std::string& key) {
  if (!j_.contains(key)) throw ParseError(path(key) + ": missing field");
  seen_.insert(key);
  return j_.at(key);
}

std::string ObjectReader::string(const std::string& key) {
  const Json& v = at(key);
  if (!v.is_string()) throw ParseError(path(key) + ": expected a string");
  return v.get<std::string>();
}

bool ObjectReader::boolean(const std::string& key) {
  const Json& v = at(key);
  if (!v.is_boolean()) throw ParseError(path(key) + ": expected a boolean");
  return v.get<bool>();
}

long long ObjectReader::integer(const std::string& key) {
  const Json& v = at(key);
  if (!v.is_number_integer()) throw ParseError(path(key) + ": expected an integer");
  return v.get<long long>();
}

std::size_t ObjectReader::size(const std::string& key) {
  long long v = integer(key);
  if (v < 0) throw ParseError(path(key) + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

ObjectReader ObjectReader::object(const std::string& key) { return ObjectReader(at(key), path(key)); }

void ObjectReader::schema() {
  if (!has("schema")) return;
  if (integer("schema") != kSchemaVersion)
    throw ParseError(path("schema") + ": unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
}

void ObjectReader::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it)
    if (!seen_.count(it.key())) throw ParseError(path(it.key()) + ": unknown field");
}

Json to_json(const Rat& x) { return format_rat(x); }

Rat rat_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(Int(j.dump()));
  if (!j.is_string()) throw ParseError(path + ": expected a rational string or an integer");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j, const std::string& path, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError(path + ": expected " + std::to_string(n) + " rows");
  RatMatrix m(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != n) throw ParseError(rp + ": expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = rat_from_json(j[i][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

Json to_json(const QPoly& p) {
  Json a = Json::array();
  for (auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

QPoly poly_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected a coefficient array");
  std::vector<Rat> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rat_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return QPoly(std::move(c));
}

namespace {

std::size_t read_n(ObjectReader& r) {
  std::size_t n = r.size("n");
  if (n == 0) throw ParseError(r.path("n") + ": must be positive");
  return n;
}

}  // namespace

Json form_to_json(const RatMatrix& q) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = q.rows();
  j["gram"] = to_json(q);
  return j;
}

RatMatrix form_from_json(const Json& j) {
  ObjectReader r(j, "$");
  r.schema();
  std::size_t n = read_n(r);
  RatMatrix q = matrix_from_json(r.at("gram"), r.path("gram"), n);
  r.finish();
  require_symmetric(q);
  return q;
}

Json pencil_to_json(const Pencil& p) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = p.n();
  j["F"] = to_json(p.F());
  j["G"] = to_json(p.G());
  return j;
}

Pencil pencil_from_json(const Json& j) {
  ObjectReader r(j, "$");
  r.schema();
  std::size_t n = read_n(r);
  RatMatrix F = matrix_from_json(r.at("F"), r.path("F"), n);
  RatMatrix G = matrix_from_json(r.at("G"), r.path("G"), n);
  r.finish();
  require_symmetric(F, "F");
  require_symmetric(G, "G");
  return Pencil(F, G);
}

Json to_json(const SquareClass& c) {
  Json j;
  j["field"] = c.d == 0 ? std::string("Q") : "Q(sqrt(" + c.d.get_str() + "))";
  j["class"] = c.to_string();
  return j;
}

Json to_json(const WittData& w) {
  Json j;
  j["place"] = w.place.to_string();
  j["dim"] = w.dim;
  j["radical_dim"] = w.radical_dim;
  j["disc"] = w.disc.to_string();
  j["hasse"] = w.hasse;
  if (w.signature)
    j["signature"] = Json::array({w.signature->first, w.signature->second});
  else
    j["signature"] = nullptr;
  j["witt_index"] = w.witt_index;
  return j;
}

Place place_from_string(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "real") return Place::Real();
  Int p;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || p.set_str(s, 10) != 0)
    throw std::invalid_argument("bad place: " + s);
  return Place::Prime(p);
}

}  // namespace qp::io
