#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadpencil/factor.hpp"
#include "quadpencil/forms.hpp"

namespace qp {

/// The pencil λF + μG of two rational quadratic forms in N variables.
class Pencil {
 public:
  /// Validates symmetry, equal dimension, and non-proportionality.
  Pencil(RatMatrix F, RatMatrix G);

  std::size_t n() const { return F_.rows(); }  // number of variables
  const RatMatrix& F() const { return F_; }
  const RatMatrix& G() const { return G_; }
  RatMatrix member(const Rat& lambda, const Rat& mu) const;
  Pencil swapped() const { return Pencil(G_, F_); }

 private:
  RatMatrix F_, G_;
};

/// Raised when det(λF + μG) vanishes identically.
struct DegeneratePencilError : std::runtime_error {
  DegeneratePencilError() : std::runtime_error("degenerate pencil: det(F + tG) is identically zero") {}
};

struct CharPoly {
  QPoly chi;              // det(F + tG)
  std::size_t g_rank = 0; // rank of G, the member at (0:1)
};

CharPoly char_poly(const Pencil& p);

/// One Galois orbit of singular members: the roots of an irreducible factor
/// of chi, or the member G at (λ:μ) = (0:1).
struct SingularMember {
  bool at_infinity = false;
  QPoly factor;               // monic irreducible; empty at infinity
  unsigned multiplicity = 0;  // order of vanishing of det(λF + μG)
  std::size_t rank = 0;       // rank at one (hence every) root of the orbit
  std::size_t degree = 1;     // size of the orbit

  std::string locus() const;  // "t^2 + 1" or "infinity"
};

/// Throws DegeneratePencilError when chi ≡ 0. Members are ordered by
/// factor (degree, then coefficients), with the member at infinity last.
std::vector<SingularMember> singular_members(const Pencil& p);

/// The same, from a precomputed chi.
std::vector<SingularMember> singular_members(const Pencil& p, const CharPoly& cp);

enum class PencilTag { DegeneratePencil, RankAtMost5, Rank6OverBase, ConjugateRank6Pair, ThreeRank6Cubic, FourRank6, Regular };

std::string to_string(PencilTag t);
PencilTag pencil_tag_from_string(const std::string& s);

struct PencilClass {
  PencilTag tag = PencilTag::Regular;
  std::vector<SingularMember> evidence;
  bool out_of_taxonomy = false;  // N != 8: only Degenerate / RankAtMost / Regular
  std::size_t rank6_geometric_count = 0;
};

PencilClass classify(const Pencil& p);

/// Number of geometric members (counted over the algebraic closure) with rank <= r.
std::size_t geometric_members_with_rank_at_most(const std::vector<SingularMember>& ms, std::size_t r);

struct SweepResult {
  Rat lambda, mu;
  std::pair<int, int> signature;
  std::size_t samples_tried = 0;
};

/// Real-place sweep over the arcs of P^1(R) cut out by the real roots of chi:
/// returns the first sample (λ:μ) with |n+ - n-| <= 2. Samples in order:
/// (1:0), (0:1), then one simplest rational per arc from left to right.
SweepResult mordell_sweep(const Pencil& p);

struct FourRank6Decomposition {
  NumberField field;                 // splitting field (degree 1 or 2)
  Rat a_lambda, a_mu, b_lambda, b_mu; // A = a_λF + a_μG, B = b_λF + b_μG
  std::vector<NFElem> roots;         // λ_i with rank(A - λ_i B) = 6
  std::vector<NFElem> alphas;        // α_i = 1/λ_i: B|V_i = α_i A|V_i
  std::vector<Subspace<NFElem>> eigenspaces;  // V_i = ker(A - λ_i B)
  std::vector<Matrix<NFElem>> induced_forms;  // φ_i = A|V_i in the basis of V_i
  Matrix<NFElem> basis;                       // columns: concatenated bases of V_i
};

/// Requires classify(p).tag == FourRank6. Throws std::invalid_argument when
/// the hypothesis fails and std::runtime_error("splitting field too large")
/// when the rank-6 roots do not all lie in one field of degree <= 2.
FourRank6Decomposition four_rank6_decompose(const Pencil& p);

/// Re-checks every structural identity of a decomposition: the V_i span,
/// are pairwise orthogonal for A and B, φ_i nondegenerate, B|V_i = α_i φ_i,
/// α_i distinct.
bool verify_decomposition(const Pencil& p, const FourRank6Decomposition& d);

/// Interpolates det(A + tB) from evaluations at t = 0..n.
QPoly det_pencil_poly(const RatMatrix& A, const RatMatrix& B);

}  // namespace qp
