#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadpencil/pencil.hpp"
#include "quadpencil/squareclass.hpp"

namespace qp {

using FuncMatrix = MatrixOf<FunctionField>;

/// A closed point of P^1 over Q: the zero locus of a monic irreducible π(t),
/// or the point at infinity (uniformizer u = 1/t).
struct LocalPoint {
  bool at_infinity = false;
  QPoly pi;  // monic irreducible; u itself at infinity

  static LocalPoint Infinity();
  /// Throws unless pi is monic and irreducible over Q.
  static LocalPoint Finite(const QPoly& pi);
  std::size_t degree() const { return at_infinity ? 1 : static_cast<std::size_t>(pi.degree()); }
  std::string to_string() const;  // "t^2 + 1" or "infinity"
  friend bool operator==(const LocalPoint& a, const LocalPoint& b) {
    return a.at_infinity == b.at_infinity && a.pi == b.pi;
  }
};

/// Finite points by factor order, infinity last.
bool local_point_less(const LocalPoint& a, const LocalPoint& b);

/// ord_π of a nonzero rational function.
int valuation(const RatFunc& f, const QPoly& pi);

/// Image of a π-unit in the residue field Q[a]/(π).
NFElem reduce_unit(const NumberField& k, const RatFunc& f);

/// Ψ = F + tG over Q(t), and Ψ(1/u) = F + u^{-1} G over Q(u).
FuncMatrix psi_matrix(const Pencil& p);
FuncMatrix psi_at_infinity(const Pencil& p);

struct DvrEntry {
  RatFunc entry;   // π^valuation * unit
  int valuation = 0;  // 0 or 1
  RatFunc unit;
  NFElem residue;  // the unit reduced into the residue field
};

struct DvrDiagonal {
  LocalPoint point;
  NumberField residue_field;
  FuncMatrix gram;    // the form that was diagonalized (Ψ, or Ψ(1/u) at infinity)
  FuncMatrix change;  // columns: the new basis; change^T gram change = diag(units, uniformizers)
  std::vector<DvrEntry> units, uniformizers;

  std::vector<RatFunc> diagonal() const;
};

/// Orthogonal basis of a nondegenerate form over the local ring at π: the
/// pivot is always an entry of least valuation, so every elimination step
/// stays inside the local ring; even powers of π are then moved into the
/// basis, leaving valuations 0 or 1. The congruence identity is verified
/// exactly before returning. Throws std::invalid_argument for a degenerate form.
DvrDiagonal dvr_diagonalize_form(const FuncMatrix& gram, const LocalPoint& point);

/// The same for Ψ of a pencil. Throws DegeneratePencilError when chi ≡ 0.
DvrDiagonal dvr_diagonalize(const Pencil& p, const LocalPoint& point);

/// (-1)^{m(m-1)/2} prod v̄_i over the m uniformizer entries π v_i, in the
/// residue field; the discriminant of the second residue form. 1 when m = 0.
NFElem residue_value(const DvrDiagonal& d);

/// The other natural convention, the bare product prod v̄_i.
NFElem residue_value_unsigned(const DvrDiagonal& d);

/// Square class of residue_value. Throws std::invalid_argument("unsupported
/// residue field degree") above degree 2.
SquareClass residue_of_clifford(const DvrDiagonal& d);
SquareClass residue_of_clifford(const Pencil& p, const LocalPoint& point);

/// C : y^2 = disc(Ψ) = (-1)^{n(n-1)/2} chi(t), written constant * H^2 * S with
/// S monic squarefree.
struct CurveC {
  QPoly disc;
  Rat constant;
  QPoly square_part;       // H
  QPoly squarefree_part;   // S
  bool geometrically_reducible = false;  // S = 1; then disc = a H^2 with a = constant
  SquareClass constant_class;
};

CurveC build_curve_C(const Pencil& p);

enum class Contribution { Trivial, Nontrivial, Unsupported };
std::string to_string(Contribution c);

/// The points of the normalization of C above one singular point of P^1.
struct PointResidue {
  LocalPoint point;
  DvrDiagonal dvr;
  bool ramified = false;  // odd number of uniformizer entries: one point, residue field Q(t0)
  bool split = false;     // unramified and delta a square in Q(t0): two points
  NFElem delta;           // unit part of disc(Ψ) at the point, in Q(t0)
  std::string residue_field;  // description of the residue field on C̃
  NFElem residue;             // residue_value(dvr)
  Contribution contribution = Contribution::Trivial;
  std::optional<SquareClass> residue_class;  // class on C̃ when computable
  bool conventions_agree = true;  // signed and unsigned conventions give the same verdict
  std::string note;
};

/// Residues above every singular point of P^1 (roots of chi, and infinity
/// when G is singular), in point order.
std::vector<PointResidue> residue_table(const Pencil& p);

enum class VerdictTag { ResiduesAllTrivial, ObstructionAt, Unsupported };
std::string to_string(VerdictTag t);
VerdictTag verdict_tag_from_string(const std::string& s);

struct PlaneCriterionVerdict {
  VerdictTag tag = VerdictTag::ResiduesAllTrivial;
  std::optional<LocalPoint> point;         // ObstructionAt / Unsupported
  std::optional<SquareClass> residue_class;  // ObstructionAt
  std::string reason;                      // Unsupported
  std::vector<PointResidue> points;
};

/// Requires an even number of variables and no geometric member of rank
/// <= N - 3 (throws std::invalid_argument("rank ≤ 5 member present")).
/// The first nontrivial residue gives ObstructionAt; otherwise an
/// undecidable point gives Unsupported.
PlaneCriterionVerdict plane_criterion(const Pencil& p);

}  // namespace qp
