#include "quadpencil/residues.hpp"

#include <algorithm>

namespace qp {

namespace {

FunctionField K;

RatFunc pi_power(const QPoly& pi, int e) {
  if (e >= 0) return RatFunc(pow(pi, static_cast<unsigned>(e)));
  return RatFunc(QPoly::constant(1), pow(pi, static_cast<unsigned>(-e)));
}

int floor_half(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

// e_i <- e_i + c e_j on the form and the basis
void add_multiple(FuncMatrix& M, FuncMatrix& C, std::size_t i, std::size_t j, const RatFunc& c) {
  std::size_t n = M.rows();
  for (std::size_t r = 0; r < n; ++r) M(r, i) += c * M(r, j);
  for (std::size_t r = 0; r < n; ++r) M(i, r) += c * M(j, r);
  for (std::size_t r = 0; r < n; ++r) C(r, i) += c * C(r, j);
}

void swap_basis(FuncMatrix& M, FuncMatrix& C, std::size_t i, std::size_t j) {
  if (i == j) return;
  std::size_t n = M.rows();
  M.swap_rows(i, j);
  for (std::size_t r = 0; r < n; ++r) std::swap(M(r, i), M(r, j));
  for (std::size_t r = 0; r < n; ++r) std::swap(C(r, i), C(r, j));
}

NFElem product(const NumberField& k, const std::vector<DvrEntry>& es) {
  NFElem x = k.one();
  for (auto& e : es) x *= e.residue;
  return x;
}

struct Decision {
  Contribution c = Contribution::Unsupported;
  std::optional<SquareClass> cls;
};

// Is rho a square in the residue field on C̃: Q(t0) when split, Q(t0)(√delta) otherwise?
Decision decide(const NFElem& rho, const NFElem& delta, bool split, std::size_t degree) {
  Decision out;
  if (degree == 1) {
    Rat r = rho.rational_value();
    if (split) {
      out.c = is_rational_square(r) ? Contribution::Trivial : Contribution::Nontrivial;
      out.cls = square_class(r);
    } else {
      Rat d = delta.rational_value();
      out.c = is_square_in_quadratic_field(r, 0, d) ? Contribution::Trivial : Contribution::Nontrivial;
      out.cls = square_class_quadratic(r, 0, squarefree_part(d));
    }
    return out;
  }
  if (degree == 2) {
    if (is_square(rho)) {
      out.c = Contribution::Trivial;
      if (split) out.cls = square_class(rho);
    } else if (split) {
      out.c = Contribution::Nontrivial;
      out.cls = square_class(rho);
    }
    return out;
  }
  if (rho.rep() == QPoly::constant(1)) out.c = Contribution::Trivial;
  return out;
}

}  // namespace

LocalPoint LocalPoint::Infinity() { return {true, QPoly::x()}; }

LocalPoint LocalPoint::Finite(const QPoly& pi) {
  if (pi.degree() < 1 || pi.lead() != 1) throw std::invalid_argument("point must be a monic nonconstant polynomial");
  if (!is_irreducible_over_Q(pi)) throw std::invalid_argument("point polynomial is not irreducible");
  return {false, pi};
}

std::string LocalPoint::to_string() const { return at_infinity ? "infinity" : pi.to_string("t"); }

bool local_point_less(const LocalPoint& a, const LocalPoint& b) {
  if (a.at_infinity != b.at_infinity) return b.at_infinity;
  if (a.at_infinity) return false;
  return poly_less(a.pi, b.pi);
}

int valuation(const RatFunc& f, const QPoly& pi) {
  if (is_zero(f)) throw std::invalid_argument("valuation of zero");
  return poly_valuation(f.num(), pi) - poly_valuation(f.den(), pi);
}

NFElem reduce_unit(const NumberField& k, const RatFunc& f) {
  const QPoly& pi = k.minpoly();
  QPoly num = f.num() % pi, den = f.den() % pi;
  if (num.is_zero() || den.is_zero()) throw std::invalid_argument("not a unit at the point");
  return k.from_poly(num) / k.from_poly(den);
}

FuncMatrix psi_matrix(const Pencil& p) {
  std::size_t n = p.n();
  FuncMatrix m = zeros(K, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = RatFunc(QPoly(std::vector<Rat>{p.F()(i, j), p.G()(i, j)}));
  return m;
}

FuncMatrix psi_at_infinity(const Pencil& p) {
  std::size_t n = p.n();
  FuncMatrix m = zeros(K, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = RatFunc(QPoly(std::vector<Rat>{p.G()(i, j), p.F()(i, j)}), QPoly::x());
  return m;
}

std::vector<RatFunc> DvrDiagonal::diagonal() const {
  std::vector<RatFunc> d;
  for (auto& e : units) d.push_back(e.entry);
  for (auto& e : uniformizers) d.push_back(e.entry);
  return d;
}

DvrDiagonal dvr_diagonalize_form(const FuncMatrix& gram, const LocalPoint& point) {
  if (!is_symmetric(gram)) throw std::invalid_argument("form must be symmetric");
  std::size_t n = gram.rows();
  const QPoly& pi = point.pi;
  FuncMatrix M = gram, C = identity(K, n);
  for (std::size_t k = 0; k < n; ++k) {
    // an entry of least valuation in the remaining block
    std::optional<int> best;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (is_zero(M(i, j))) continue;
        int v = valuation(M(i, j), pi);
        // prefer diagonal entries at equal valuation
        if (!best || v < *best || (v == *best && i == j && bi != bj)) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (!best) throw std::invalid_argument("degenerate form");
    if (bi != bj) {
      // the diagonal entries have larger valuation, so e_i + e_j has value
      // 2 M(i,j) + (higher order terms) of the least valuation
      add_multiple(M, C, bi, bj, K.one());
      if (valuation(M(bi, bi), pi) != *best) throw std::logic_error("pivot repair failed");
    }
    swap_basis(M, C, k, bi);
    // e_j <- e_j - f_j e_k for j > k, f_j = M(j,k)/M(k,k) in the local ring;
    // the remaining block becomes the Schur complement
    RatFunc inv = K.one() / M(k, k);
    std::vector<RatFunc> f(n);
    for (std::size_t j = k + 1; j < n; ++j)
      if (!is_zero(M(j, k))) f[j] = M(j, k) * inv;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(f[i])) continue;
      for (std::size_t j = i; j < n; ++j)
        if (!is_zero(M(k, j))) {
          M(i, j) -= f[i] * M(k, j);
          M(j, i) = M(i, j);
        }
      for (std::size_t r = 0; r < n; ++r)
        if (!is_zero(C(r, k))) C(r, i) -= f[i] * C(r, k);
    }
    for (std::size_t j = k + 1; j < n; ++j) M(j, k) = M(k, j) = K.zero();
  }

  DvrDiagonal out;
  out.point = point;
  out.residue_field = NumberField::trusted(pi);
  out.gram = gram;
  std::vector<DvrEntry> entries;
  std::vector<std::vector<RatFunc>> cols;
  for (std::size_t k = 0; k < n; ++k) {
    int v = valuation(M(k, k), pi);
    int h = floor_half(v);
    RatFunc s = pi_power(pi, -h);
    std::vector<RatFunc> col = C.col(k);
    for (auto& x : col) x = x * s;
    DvrEntry e;
    e.entry = M(k, k) * s * s;
    e.valuation = v - 2 * h;
    e.unit = e.entry * pi_power(pi, -e.valuation);
    e.residue = reduce_unit(out.residue_field, e.unit);
    entries.push_back(std::move(e));
    cols.push_back(std::move(col));
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return entries[i].valuation == 0; });
  std::vector<std::vector<RatFunc>> sorted_cols;
  for (auto i : order) {
    sorted_cols.push_back(cols[i]);
    (entries[i].valuation == 0 ? out.units : out.uniformizers).push_back(entries[i]);
  }
  out.change = from_columns(K, n, sorted_cols);
  if (!(congruence(K, gram, out.change) == diagonal_matrix(K, out.diagonal())))
    throw std::logic_error("local diagonalization failed the congruence check");
  return out;
}

DvrDiagonal dvr_diagonalize(const Pencil& p, const LocalPoint& point) {
  if (char_poly(p).chi.is_zero()) throw DegeneratePencilError();
  return dvr_diagonalize_form(point.at_infinity ? psi_at_infinity(p) : psi_matrix(p), point);
}

NFElem residue_value_unsigned(const DvrDiagonal& d) { return product(d.residue_field, d.uniformizers); }

NFElem residue_value(const DvrDiagonal& d) {
  std::size_t m = d.uniformizers.size();
  NFElem x = residue_value_unsigned(d);
  return (m * (m - 1) / 2) % 2 == 1 ? -x : x;
}

SquareClass residue_of_clifford(const DvrDiagonal& d) { return square_class(residue_value(d)); }

SquareClass residue_of_clifford(const Pencil& p, const LocalPoint& point) {
  return residue_of_clifford(dvr_diagonalize(p, point));
}

CurveC build_curve_C(const Pencil& p) {
  auto cp = char_poly(p);
  if (cp.chi.is_zero()) throw DegeneratePencilError();
  std::size_t n = p.n();
  CurveC c;
  c.disc = (n * (n - 1) / 2) % 2 == 1 ? -cp.chi : cp.chi;
  c.constant = c.disc.lead();
  c.square_part = QPoly::constant(1);
  c.squarefree_part = QPoly::constant(1);
  for (auto& [s, e] : squarefree_decomposition(c.disc)) {
    c.square_part *= pow(s, e / 2);
    if (e % 2 == 1) c.squarefree_part *= s;
  }
  c.geometrically_reducible = c.squarefree_part.is_constant();
  c.constant_class = square_class(c.constant);
  return c;
}

std::string to_string(Contribution c) {
  switch (c) {
    case Contribution::Trivial: return "trivial";
    case Contribution::Nontrivial: return "nontrivial";
    case Contribution::Unsupported: return "unsupported";
  }
  return "?";
}

std::vector<PointResidue> residue_table(const Pencil& p) {
  std::size_t n = p.n();
  std::vector<PointResidue> out;
  for (auto& m : singular_members(p)) {
    PointResidue r;
    r.point = m.at_infinity ? LocalPoint::Infinity() : LocalPoint{false, m.factor};
    r.dvr = dvr_diagonalize_form(m.at_infinity ? psi_at_infinity(p) : psi_matrix(p), r.point);
    const NumberField& k = r.dvr.residue_field;
    std::size_t deg = k.degree();
    std::string base = deg == 1 ? "Q" : k.name();
    r.delta = product(k, r.dvr.units) * product(k, r.dvr.uniformizers);
    if ((n * (n - 1) / 2) % 2 == 1) r.delta = -r.delta;
    r.residue = residue_value(r.dvr);
    r.ramified = r.dvr.uniformizers.size() % 2 == 1;
    if (r.ramified) {
      // π is a unit times the square of a uniformizer of C̃: every entry becomes a unit
      r.residue_field = base;
      r.contribution = Contribution::Trivial;
      if (deg <= 2) r.residue_class = square_class(k.one());
      r.note = "ramified: all entries are units on the curve";
      out.push_back(std::move(r));
      continue;
    }
    r.split = deg <= 2 && is_square(r.delta);
    if (r.split) {
      r.residue_field = base;
    } else if (deg == 1) {
      r.residue_field = "Q(sqrt(" + squarefree_part(r.delta.rational_value()).get_str() + "))";
    } else {
      r.residue_field = base + "(sqrt(" + r.delta.to_string() + "))";
    }
    auto signed_ = decide(r.residue, r.delta, r.split, deg);
    r.contribution = signed_.c;
    r.residue_class = signed_.cls;
    if (r.contribution == Contribution::Unsupported) r.note = "unsupported residue field degree";
    auto unsigned_ = decide(residue_value_unsigned(r.dvr), r.delta, r.split, deg);
    if (signed_.c != Contribution::Unsupported && unsigned_.c != Contribution::Unsupported)
      r.conventions_agree = signed_.c == unsigned_.c;
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::ResiduesAllTrivial: return "ResiduesAllTrivial";
    case VerdictTag::ObstructionAt: return "ObstructionAt";
    case VerdictTag::Unsupported: return "Unsupported";
  }
  return "?";
}

VerdictTag verdict_tag_from_string(const std::string& s) {
  for (auto t : {VerdictTag::ResiduesAllTrivial, VerdictTag::ObstructionAt, VerdictTag::Unsupported})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown verdict tag: " + s);
}

PlaneCriterionVerdict plane_criterion(const Pencil& p) {
  std::size_t n = p.n();
  if (n % 2 == 1) throw std::invalid_argument("odd number of variables");
  auto ms = singular_members(p);
  if (n >= 3 && geometric_members_with_rank_at_most(ms, n - 3) > 0) throw std::invalid_argument("rank ≤ 5 member present");
  PlaneCriterionVerdict v;
  v.points = residue_table(p);
  for (auto& r : v.points)
    if (r.contribution == Contribution::Nontrivial) {
      v.tag = VerdictTag::ObstructionAt;
      v.point = r.point;
      v.residue_class = r.residue_class;
      return v;
    }
  for (auto& r : v.points)
    if (r.contribution == Contribution::Unsupported) {
      v.tag = VerdictTag::Unsupported;
      v.point = r.point;
      v.reason = "unsupported residue field degree at " + r.point.to_string();
      return v;
    }
  return v;
}

}  // namespace qp
