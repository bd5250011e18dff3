#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadpencil/io.hpp"
#include "quadpencil/residues.hpp"

namespace qp::report {

using io::Json;

// Report sections are plain data (strings and integers) so that a report
// reparses from its JSON without recomputation.

struct FactorRow {
  std::vector<std::string> factor;  // coefficients, lowest degree first
  unsigned multiplicity = 0;
};

struct MemberRow {
  std::string locus;
  bool at_infinity = false;
  std::vector<std::string> factor;
  unsigned multiplicity = 0;
  std::size_t rank = 0, degree = 1;
};

struct WittRow {
  std::string place;
  std::size_t dim = 0, radical_dim = 0;
  std::string disc;
  int hasse = 1;
  std::optional<std::pair<int, int>> signature;
  std::size_t witt_index = 0;
};

struct PlaceRow {
  std::string place;
  WittRow F, G;
};

struct SweepRow {
  std::string lambda, mu;
  int n_plus = 0, n_minus = 0;
  std::size_t samples_tried = 0;
};

struct DecompositionRow {
  std::vector<std::string> field;  // minimal polynomial of the splitting field
  std::pair<std::string, std::string> A, B;  // (λ, μ) of the two chosen members
  std::vector<std::string> roots, alphas;
  std::vector<std::size_t> eigenspace_dims;
  bool verified = false;
};

struct CurveRow {
  std::vector<std::string> disc, square_part, squarefree_part;
  std::string constant, constant_class;
  bool geometrically_reducible = false;
};

struct ResidueRow {
  std::string point;
  std::vector<std::string> units, uniformizers;  // the diagonal entries as rational functions
  std::string residue, residue_field;
  std::optional<std::string> residue_class;
  bool ramified = false, split = false, conventions_agree = true;
  std::string contribution;
};

struct VerdictRow {
  std::string tag;
  std::optional<std::string> point, residue_class;
  std::string reason;
};

/// A section whose preconditions may fail; `skipped` then holds the reason.
template <class T>
struct Section {
  std::optional<T> value;
  std::string skipped;
};

struct AnalysisReport {
  explicit AnalysisReport(Pencil p) : input(std::move(p)) {}

  Pencil input;
  bool out_of_taxonomy = false;
  std::vector<std::string> chi;
  std::string chi_constant;
  std::vector<FactorRow> chi_factors;
  std::vector<MemberRow> members;
  std::string tag;
  std::size_t rank6_geometric_count = 0;
  std::vector<std::string> evidence;  // loci of the members that decided the tag
  std::vector<PlaceRow> places;
  Section<SweepRow> sweep;
  Section<DecompositionRow> decomposition;
  Section<CurveRow> curve;
  Section<std::vector<ResidueRow>> residues;
  Section<VerdictRow> plane_criterion;
  std::vector<std::string> warnings;
};

/// Runs every analysis whose preconditions hold; the others carry the reason
/// they were skipped (a degenerate pencil gets tag DegeneratePencil and only
/// the invariants of F and G).
AnalysisReport analyze(const Pencil& p, const std::vector<Place>& places);

Json to_json(const AnalysisReport& r);
/// Strict inverse of to_json; throws io::ParseError on schema violations.
AnalysisReport analysis_from_json(const Json& j);

// Single-purpose outputs of the other commands.
Json witt_json(const WittData& w);
Json residue_row_json(const PointResidue& r);
ResidueRow residue_row(const PointResidue& r);
VerdictRow verdict_row(const PlaneCriterionVerdict& v);
Json to_json(const ResidueRow& r);
Json to_json(const VerdictRow& v);

}  // namespace qp::report
