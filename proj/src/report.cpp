#include "quadpencil/report.hpp"

namespace qp::report {

using io::ObjectReader;
using io::ParseError;

namespace {

std::vector<std::string> strings(const QPoly& p) { return to_strings(p); }

std::string func_string(const RatFunc& f, bool at_infinity) { return f.to_string(at_infinity ? "u" : "t"); }

WittRow witt_row(const WittData& w) {
  WittRow r;
  r.place = w.place.to_string();
  r.dim = w.dim;
  r.radical_dim = w.radical_dim;
  r.disc = w.disc.to_string();
  r.hasse = w.hasse;
  r.signature = w.signature;
  r.witt_index = w.witt_index;
  return r;
}

std::vector<std::string> evidence_loci(const PencilClass& pc, std::size_t n) {
  std::vector<std::string> out;
  for (auto& m : pc.evidence) {
    bool relevant = pc.tag == PencilTag::RankAtMost5 ? m.rank + 3 <= n
                    : pc.tag == PencilTag::Regular   ? false
                                                     : m.rank == 6;
    if (relevant) out.push_back(m.locus());
  }
  return out;
}

template <class T, class F>
void attempt(Section<T>& s, F&& f) {
  try {
    s.value = f();
  } catch (const DegeneratePencilError& e) {
    s.skipped = e.what();
  } catch (const std::invalid_argument& e) {
    s.skipped = e.what();
  }
}

// ---- JSON helpers

Json strings_json(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (auto& s : v) a.push_back(s);
  return a;
}

std::vector<std::string> strings_from(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of strings");
  std::vector<std::string> out;
  for (auto& x : j) {
    if (!x.is_string()) throw ParseError(path + ": expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

std::optional<std::string> optional_string_from(ObjectReader& r, const std::string& key) {
  const Json& v = r.at(key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) throw ParseError(r.path(key) + ": expected a string or null");
  return v.get<std::string>();
}

template <class T, class ToJ>
Json section_json(const Section<T>& s, ToJ&& to) {
  if (s.value) return to(*s.value);
  Json j;
  j["skipped"] = s.skipped;
  return j;
}

// A skipped section is exactly {"skipped": reason}.
template <class T, class FromJ>
Section<T> section_from(ObjectReader& parent, const std::string& key, FromJ&& from) {
  Section<T> s;
  const Json& j = parent.at(key);
  if (j.is_object() && j.contains("skipped")) {
    ObjectReader r(j, parent.path(key));
    s.skipped = r.string("skipped");
    r.finish();
  } else {
    s.value = from(j, parent.path(key));
  }
  return s;
}

Json to_json(const WittRow& w) {
  Json j;
  j["place"] = w.place;
  j["dim"] = w.dim;
  j["radical_dim"] = w.radical_dim;
  j["disc"] = w.disc;
  j["hasse"] = w.hasse;
  if (w.signature)
    j["signature"] = Json::array({w.signature->first, w.signature->second});
  else
    j["signature"] = nullptr;
  j["witt_index"] = w.witt_index;
  return j;
}

WittRow witt_from(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  WittRow w;
  w.place = r.string("place");
  w.dim = r.size("dim");
  w.radical_dim = r.size("radical_dim");
  w.disc = r.string("disc");
  w.hasse = static_cast<int>(r.integer("hasse"));
  const Json& s = r.at("signature");
  if (!s.is_null()) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer())
      throw ParseError(r.path("signature") + ": expected [n_plus, n_minus] or null");
    w.signature = std::make_pair(s[0].get<int>(), s[1].get<int>());
  }
  w.witt_index = r.size("witt_index");
  r.finish();
  return w;
}

Json to_json(const SweepRow& s) {
  Json j;
  j["lambda"] = s.lambda;
  j["mu"] = s.mu;
  j["signature"] = Json::array({s.n_plus, s.n_minus});
  j["samples_tried"] = s.samples_tried;
  return j;
}

SweepRow sweep_from(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  SweepRow s;
  s.lambda = r.string("lambda");
  s.mu = r.string("mu");
  const Json& sig = r.at("signature");
  if (!sig.is_array() || sig.size() != 2 || !sig[0].is_number_integer() || !sig[1].is_number_integer())
    throw ParseError(r.path("signature") + ": expected [n_plus, n_minus]");
  s.n_plus = sig[0].get<int>();
  s.n_minus = sig[1].get<int>();
  s.samples_tried = r.size("samples_tried");
  r.finish();
  return s;
}

Json to_json(const DecompositionRow& d) {
  Json j;
  j["field"] = strings_json(d.field);
  j["A"] = Json::array({d.A.first, d.A.second});
  j["B"] = Json::array({d.B.first, d.B.second});
  j["roots"] = strings_json(d.roots);
  j["alphas"] = strings_json(d.alphas);
  j["eigenspace_dims"] = d.eigenspace_dims;
  j["verified"] = d.verified;
  return j;
}

std::pair<std::string, std::string> pair_from(ObjectReader& r, const std::string& key) {
  auto v = strings_from(r.at(key), r.path(key));
  if (v.size() != 2) throw ParseError(r.path(key) + ": expected [lambda, mu]");
  return {v[0], v[1]};
}

DecompositionRow decomposition_from(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  DecompositionRow d;
  d.field = strings_from(r.at("field"), r.path("field"));
  d.A = pair_from(r, "A");
  d.B = pair_from(r, "B");
  d.roots = strings_from(r.at("roots"), r.path("roots"));
  d.alphas = strings_from(r.at("alphas"), r.path("alphas"));
  const Json& dims = r.at("eigenspace_dims");
  if (!dims.is_array()) throw ParseError(r.path("eigenspace_dims") + ": expected an array");
  for (auto& x : dims) {
    if (!x.is_number_unsigned()) throw ParseError(r.path("eigenspace_dims") + ": expected nonnegative integers");
    d.eigenspace_dims.push_back(x.get<std::size_t>());
  }
  d.verified = r.boolean("verified");
  r.finish();
  return d;
}

Json to_json(const CurveRow& c) {
  Json j;
  j["disc"] = strings_json(c.disc);
  j["constant"] = c.constant;
  j["square_part"] = strings_json(c.square_part);
  j["squarefree_part"] = strings_json(c.squarefree_part);
  j["geometrically_reducible"] = c.geometrically_reducible;
  j["constant_class"] = c.constant_class;
  return j;
}

CurveRow curve_from(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  CurveRow c;
  c.disc = strings_from(r.at("disc"), r.path("disc"));
  c.constant = r.string("constant");
  c.square_part = strings_from(r.at("square_part"), r.path("square_part"));
  c.squarefree_part = strings_from(r.at("squarefree_part"), r.path("squarefree_part"));
  c.geometrically_reducible = r.boolean("geometrically_reducible");
  c.constant_class = r.string("constant_class");
  r.finish();
  return c;
}

ResidueRow residue_from(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  ResidueRow x;
  x.point = r.string("point");
  x.units = strings_from(r.at("units"), r.path("units"));
  x.uniformizers = strings_from(r.at("uniformizers"), r.path("uniformizers"));
  x.residue = r.string("residue");
  x.residue_field = r.string("residue_field");
  x.residue_class = optional_string_from(r, "residue_class");
  x.ramified = r.boolean("ramified");
  x.split = r.boolean("split");
  x.contribution = r.string("contribution");
  x.conventions_agree = r.boolean("conventions_agree");
  r.finish();
  return x;
}

VerdictRow verdict_from(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  VerdictRow v;
  v.tag = r.string("tag");
  verdict_tag_from_string(v.tag);
  v.point = optional_string_from(r, "point");
  v.residue_class = optional_string_from(r, "residue_class");
  v.reason = r.string("reason");
  r.finish();
  return v;
}

}  // namespace

ResidueRow residue_row(const PointResidue& r) {
  ResidueRow x;
  bool inf = r.point.at_infinity;
  x.point = r.point.to_string();
  for (auto& e : r.dvr.units) x.units.push_back(func_string(e.entry, inf));
  for (auto& e : r.dvr.uniformizers) x.uniformizers.push_back(func_string(e.entry, inf));
  x.residue = r.residue.to_string("a");
  x.residue_field = r.residue_field;
  if (r.residue_class) x.residue_class = r.residue_class->to_string();
  x.ramified = r.ramified;
  x.split = r.split;
  x.contribution = to_string(r.contribution);
  x.conventions_agree = r.conventions_agree;
  return x;
}

VerdictRow verdict_row(const PlaneCriterionVerdict& v) {
  VerdictRow r;
  r.tag = to_string(v.tag);
  if (v.point) r.point = v.point->to_string();
  if (v.residue_class) r.residue_class = v.residue_class->to_string();
  r.reason = v.reason;
  return r;
}

Json to_json(const ResidueRow& r) {
  Json j;
  j["point"] = r.point;
  j["units"] = strings_json(r.units);
  j["uniformizers"] = strings_json(r.uniformizers);
  j["residue"] = r.residue;
  j["residue_field"] = r.residue_field;
  j["residue_class"] = optional_string(r.residue_class);
  j["ramified"] = r.ramified;
  j["split"] = r.split;
  j["contribution"] = r.contribution;
  j["conventions_agree"] = r.conventions_agree;
  return j;
}

Json to_json(const VerdictRow& v) {
  Json j;
  j["tag"] = v.tag;
  j["point"] = optional_string(v.point);
  j["residue_class"] = optional_string(v.residue_class);
  j["reason"] = v.reason;
  return j;
}

Json residue_row_json(const PointResidue& r) { return to_json(residue_row(r)); }

Json witt_json(const WittData& w) { return to_json(witt_row(w)); }

AnalysisReport analyze(const Pencil& p, const std::vector<Place>& places) {
  AnalysisReport r(p);
  std::size_t n = p.n();
  auto pc = classify(p);
  r.out_of_taxonomy = pc.out_of_taxonomy;
  r.tag = to_string(pc.tag);
  r.rank6_geometric_count = pc.rank6_geometric_count;
  r.evidence = evidence_loci(pc, n);
  for (auto& v : places) r.places.push_back({v.to_string(), witt_row(witt_index_local(p.F(), v)), witt_row(witt_index_local(p.G(), v))});
  r.warnings.push_back("geometric integrality not checked");
  if (pc.out_of_taxonomy) r.warnings.push_back("out-of-taxonomy dimension");

  auto cp = char_poly(p);
  r.chi = strings(cp.chi);
  if (pc.tag == PencilTag::DegeneratePencil) {
    const std::string why = DegeneratePencilError().what();
    r.sweep.skipped = r.decomposition.skipped = r.curve.skipped = r.residues.skipped = r.plane_criterion.skipped = why;
    r.chi_constant = "0";
    return r;
  }
  auto fac = factor_over_Q(cp.chi);
  r.chi_constant = format_rat(fac.constant);
  for (auto& [f, e] : fac.factors) r.chi_factors.push_back({strings(f), e});
  for (auto& m : pc.evidence) r.members.push_back({m.locus(), m.at_infinity, strings(m.factor), m.multiplicity, m.rank, m.degree});

  attempt(r.sweep, [&] {
    auto s = mordell_sweep(p);
    return SweepRow{format_rat(s.lambda), format_rat(s.mu), s.signature.first, s.signature.second, s.samples_tried};
  });
  if (pc.tag == PencilTag::FourRank6) {
    try {
      auto d = four_rank6_decompose(p);
      DecompositionRow row;
      row.field = strings(d.field.minpoly());
      row.A = {format_rat(d.a_lambda), format_rat(d.a_mu)};
      row.B = {format_rat(d.b_lambda), format_rat(d.b_mu)};
      for (auto& x : d.roots) row.roots.push_back(x.to_string("a"));
      for (auto& x : d.alphas) row.alphas.push_back(x.to_string("a"));
      for (auto& v : d.eigenspaces) row.eigenspace_dims.push_back(v.dim());
      row.verified = verify_decomposition(p, d);
      r.decomposition.value = row;
    } catch (const std::runtime_error& e) {
      r.decomposition.skipped = e.what();
    }
  } else {
    r.decomposition.skipped = "class is " + r.tag + ", not FourRank6";
  }
  attempt(r.curve, [&] {
    auto c = build_curve_C(p);
    return CurveRow{strings(c.disc), strings(c.square_part), strings(c.squarefree_part), format_rat(c.constant),
                    c.constant_class.to_string(), c.geometrically_reducible};
  });
  attempt(r.residues, [&] {
    std::vector<ResidueRow> rows;
    for (auto& x : residue_table(p)) rows.push_back(residue_row(x));
    return rows;
  });
  attempt(r.plane_criterion, [&] { return verdict_row(plane_criterion(p)); });
  return r;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = io::kSchemaVersion;
  j["kind"] = "analysis";
  Json in;
  in["n"] = r.input.n();
  in["F"] = io::to_json(r.input.F());
  in["G"] = io::to_json(r.input.G());
  j["input"] = in;
  j["out_of_taxonomy"] = r.out_of_taxonomy;
  Json chi;
  chi["coeffs"] = strings_json(r.chi);
  chi["constant"] = r.chi_constant;
  Json fs = Json::array();
  for (auto& f : r.chi_factors) {
    Json x;
    x["factor"] = strings_json(f.factor);
    x["multiplicity"] = f.multiplicity;
    fs.push_back(x);
  }
  chi["factors"] = fs;
  j["chi"] = chi;
  Json ms = Json::array();
  for (auto& m : r.members) {
    Json x;
    x["locus"] = m.locus;
    x["at_infinity"] = m.at_infinity;
    x["factor"] = strings_json(m.factor);
    x["multiplicity"] = m.multiplicity;
    x["rank"] = m.rank;
    x["degree"] = m.degree;
    ms.push_back(x);
  }
  j["members"] = ms;
  Json cls;
  cls["tag"] = r.tag;
  cls["rank6_geometric_count"] = r.rank6_geometric_count;
  cls["evidence"] = strings_json(r.evidence);
  j["class"] = cls;
  Json ps = Json::array();
  for (auto& p : r.places) {
    Json x;
    x["place"] = p.place;
    x["F"] = to_json(p.F);
    x["G"] = to_json(p.G);
    ps.push_back(x);
  }
  j["places"] = ps;
  j["sweep"] = section_json(r.sweep, [](const SweepRow& s) { return to_json(s); });
  j["decomposition"] = section_json(r.decomposition, [](const DecompositionRow& d) { return to_json(d); });
  j["curve"] = section_json(r.curve, [](const CurveRow& c) { return to_json(c); });
  j["residues"] = section_json(r.residues, [](const std::vector<ResidueRow>& rows) {
    Json a = Json::array();
    for (auto& x : rows) a.push_back(to_json(x));
    return a;
  });
  j["plane_criterion"] = section_json(r.plane_criterion, [](const VerdictRow& v) { return to_json(v); });
  j["warnings"] = strings_json(r.warnings);
  return j;
}

AnalysisReport analysis_from_json(const Json& j) {
  ObjectReader r(j, "$");
  if (r.integer("schema") != io::kSchemaVersion) throw ParseError("$.schema: unsupported schema version");
  if (r.string("kind") != "analysis") throw ParseError("$.kind: expected \"analysis\"");
  Json in = r.at("input");
  in["schema"] = io::kSchemaVersion;
  AnalysisReport a(io::pencil_from_json(in));
  a.out_of_taxonomy = r.boolean("out_of_taxonomy");
  {
    auto c = r.object("chi");
    a.chi = strings_from(c.at("coeffs"), c.path("coeffs"));
    a.chi_constant = c.string("constant");
    const Json& fs = c.at("factors");
    if (!fs.is_array()) throw ParseError(c.path("factors") + ": expected an array");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      ObjectReader f(fs[i], c.path("factors") + "[" + std::to_string(i) + "]");
      FactorRow row;
      row.factor = strings_from(f.at("factor"), f.path("factor"));
      row.multiplicity = static_cast<unsigned>(f.size("multiplicity"));
      f.finish();
      a.chi_factors.push_back(row);
    }
    c.finish();
  }
  {
    const Json& ms = r.at("members");
    if (!ms.is_array()) throw ParseError("$.members: expected an array");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      ObjectReader m(ms[i], "$.members[" + std::to_string(i) + "]");
      MemberRow row;
      row.locus = m.string("locus");
      row.at_infinity = m.boolean("at_infinity");
      row.factor = strings_from(m.at("factor"), m.path("factor"));
      row.multiplicity = static_cast<unsigned>(m.size("multiplicity"));
      row.rank = m.size("rank");
      row.degree = m.size("degree");
      m.finish();
      a.members.push_back(row);
    }
  }
  {
    auto c = r.object("class");
    a.tag = c.string("tag");
    pencil_tag_from_string(a.tag);
    a.rank6_geometric_count = c.size("rank6_geometric_count");
    a.evidence = strings_from(c.at("evidence"), c.path("evidence"));
    c.finish();
  }
  {
    const Json& ps = r.at("places");
    if (!ps.is_array()) throw ParseError("$.places: expected an array");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      std::string path = "$.places[" + std::to_string(i) + "]";
      ObjectReader p(ps[i], path);
      PlaceRow row;
      row.place = p.string("place");
      row.F = witt_from(p.at("F"), p.path("F"));
      row.G = witt_from(p.at("G"), p.path("G"));
      p.finish();
      a.places.push_back(row);
    }
  }
  a.sweep = section_from<SweepRow>(r, "sweep", sweep_from);
  a.decomposition = section_from<DecompositionRow>(r, "decomposition", decomposition_from);
  a.curve = section_from<CurveRow>(r, "curve", curve_from);
  a.residues = section_from<std::vector<ResidueRow>>(r, "residues", [](const Json& x, const std::string& path) {
    if (!x.is_array()) throw ParseError(path + ": expected an array");
    std::vector<ResidueRow> rows;
    for (std::size_t i = 0; i < x.size(); ++i) rows.push_back(residue_from(x[i], path + "[" + std::to_string(i) + "]"));
    return rows;
  });
  a.plane_criterion = section_from<VerdictRow>(r, "plane_criterion", verdict_from);
  a.warnings = strings_from(r.at("warnings"), "$.warnings");
  r.finish();
  return a;
}

}  // namespace qp::report
