#include "quadpencil/pencil.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "quadpencil/squareclass.hpp"
#include "quadpencil/sturm.hpp"

namespace qp {

namespace {

const RationalField kQ;

bool proportional(const RatMatrix& F, const RatMatrix& G) {
  // rank of the 2 × n² matrix of entries
  std::size_t n = F.rows();
  RatMatrix m(2, n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(0, i * n + j) = F(i, j);
      m(1, i * n + j) = G(i, j);
    }
  return rank(kQ, m) < 2;
}

}  // namespace

Pencil::Pencil(RatMatrix F, RatMatrix G) : F_(std::move(F)), G_(std::move(G)) {
  require_symmetric(F_, "F");
  require_symmetric(G_, "G");
  if (F_.rows() != G_.rows()) throw std::invalid_argument("F and G have different dimensions");
  if (proportional(F_, G_)) throw std::invalid_argument("F and G are proportional");
}

RatMatrix Pencil::member(const Rat& lambda, const Rat& mu) const {
  return add(kQ, scale(kQ, lambda, F_), scale(kQ, mu, G_));
}

QPoly det_pencil_poly(const RatMatrix& A, const RatMatrix& B) {
  std::size_t n = A.rows();
  // Newton divided differences on t = 0..n
  std::vector<Rat> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Rat t(static_cast<long>(k));
    xs.push_back(t);
    ys.push_back(det(kQ, add(kQ, A, scale(kQ, t, B))));
  }
  std::vector<Rat> coef = ys;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  QPoly result;
  for (std::size_t i = n + 1; i-- > 0;) {
    result = result * QPoly(std::vector<Rat>{-xs[i], Rat(1)}) + QPoly::constant(coef[i]);
  }
  return result;
}

CharPoly char_poly(const Pencil& p) { return {det_pencil_poly(p.F(), p.G()), rank(p.G())}; }

std::string SingularMember::locus() const { return at_infinity ? "infinity" : factor.to_string("t"); }

std::vector<SingularMember> singular_members(const Pencil& p) { return singular_members(p, char_poly(p)); }

std::vector<SingularMember> singular_members(const Pencil& p, const CharPoly& cp) {
  if (cp.chi.is_zero()) throw DegeneratePencilError();
  std::vector<SingularMember> out;
  std::size_t n = p.n();
  if (cp.chi.degree() > 0) {
    auto fac = factor_over_Q(cp.chi);
    for (auto& [q, m] : fac.factors) {
      NumberField K = NumberField::trusted(q);
      auto M = add(K, lift(K, p.F()), scale(K, K.generator(), lift(K, p.G())));
      SingularMember s;
      s.factor = q;
      s.multiplicity = m;
      s.rank = rank(K, M);
      s.degree = static_cast<std::size_t>(q.degree());
      out.push_back(std::move(s));
    }
  }
  if (static_cast<std::size_t>(cp.chi.degree()) < n) {
    SingularMember s;
    s.at_infinity = true;
    s.multiplicity = static_cast<unsigned>(n - cp.chi.degree());
    s.rank = cp.g_rank;
    s.degree = 1;
    out.push_back(std::move(s));
  }
  return out;
}

std::string to_string(PencilTag t) {
  switch (t) {
    case PencilTag::DegeneratePencil: return "DegeneratePencil";
    case PencilTag::RankAtMost5: return "RankAtMost5";
    case PencilTag::Rank6OverBase: return "Rank6OverBase";
    case PencilTag::ConjugateRank6Pair: return "ConjugateRank6Pair";
    case PencilTag::ThreeRank6Cubic: return "ThreeRank6Cubic";
    case PencilTag::FourRank6: return "FourRank6";
    case PencilTag::Regular: return "Regular";
  }
  return "?";
}

PencilTag pencil_tag_from_string(const std::string& s) {
  for (auto t : {PencilTag::DegeneratePencil, PencilTag::RankAtMost5, PencilTag::Rank6OverBase, PencilTag::ConjugateRank6Pair,
                 PencilTag::ThreeRank6Cubic, PencilTag::FourRank6, PencilTag::Regular})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown pencil tag: " + s);
}

std::size_t geometric_members_with_rank_at_most(const std::vector<SingularMember>& ms, std::size_t r) {
  std::size_t c = 0;
  for (auto& m : ms)
    if (m.rank <= r) c += m.degree;
  return c;
}

PencilClass classify(const Pencil& p) {
  PencilClass pc;
  std::size_t n = p.n();
  pc.out_of_taxonomy = n != 8;
  auto cp = char_poly(p);
  if (cp.chi.is_zero()) {
    pc.tag = PencilTag::DegeneratePencil;
    return pc;
  }
  pc.evidence = singular_members(p, cp);
  if (n >= 3 && geometric_members_with_rank_at_most(pc.evidence, n - 3) > 0) {
    pc.tag = PencilTag::RankAtMost5;
    return pc;
  }
  if (pc.out_of_taxonomy) {
    pc.tag = PencilTag::Regular;
    return pc;
  }
  bool deg1 = false, deg2 = false, deg3 = false;
  for (auto& m : pc.evidence) {
    if (m.rank != 6) continue;
    pc.rank6_geometric_count += m.degree;
    deg1 |= m.degree == 1;
    deg2 |= m.degree == 2;
    deg3 |= m.degree == 3;
  }
  if (pc.rank6_geometric_count >= 4) pc.tag = PencilTag::FourRank6;
  else if (deg1) pc.tag = PencilTag::Rank6OverBase;
  else if (deg2) pc.tag = PencilTag::ConjugateRank6Pair;
  else if (deg3) pc.tag = PencilTag::ThreeRank6Cubic;
  else pc.tag = PencilTag::Regular;
  return pc;
}

SweepResult mordell_sweep(const Pencil& p) {
  auto cp = char_poly(p);
  if (cp.chi.is_zero()) throw DegeneratePencilError();
  auto members = singular_members(p, cp);
  std::size_t n = p.n();
  if (n >= 3 && geometric_members_with_rank_at_most(members, n - 3) > 0) throw std::invalid_argument("rank ≤ 5 member present");

  std::vector<std::pair<Rat, Rat>> samples;
  if (!is_zero(cp.chi.eval(0))) samples.emplace_back(1, 0);
  if (static_cast<std::size_t>(cp.chi.degree()) == n) samples.emplace_back(0, 1);
  if (cp.chi.degree() > 0) {
    QPoly sf = squarefree_part(cp.chi);
    auto roots = separate(sf, isolate_real_roots(sf));
    if (!roots.empty()) {
      samples.emplace_back(1, simplest_between(roots.front().lo - 1, roots.front().lo));
      for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        samples.emplace_back(1, simplest_between(roots[i].hi, roots[i + 1].lo));
      samples.emplace_back(1, simplest_between(roots.back().hi, roots.back().hi + 1));
    }
  }
  SweepResult r;
  for (auto& [l, m] : samples) {
    ++r.samples_tried;
    auto q = p.member(l, m);
    auto s = signature(q);
    if (static_cast<std::size_t>(s.first + s.second) != n) continue;  // landed on a root
    if (std::abs(s.first - s.second) <= 2) {
      r.lambda = l;
      r.mu = m;
      r.signature = s;
      return r;
    }
  }
  throw std::logic_error("sweep exhausted");
}

// ---------------------------------------------------------------------------

FourRank6Decomposition four_rank6_decompose(const Pencil& p) {
  auto cls = classify(p);
  if (cls.out_of_taxonomy) throw std::invalid_argument("four rank-6 decomposition needs 8 variables");
  if (cls.tag != PencilTag::FourRank6)
    throw std::invalid_argument("fewer than 4 rank-6 members (class " + to_string(cls.tag) + ")");

  FourRank6Decomposition d;
  // two nondegenerate members of small height
  std::vector<std::pair<Rat, Rat>> chosen;
  for (long h = 1; h <= 20 && chosen.size() < 2; ++h) {
    std::vector<std::pair<long, long>> cand;
    for (long a = 0; a <= h; ++a)
      for (long b = -h; b <= h; ++b) {
        if (std::max(std::labs(a), std::labs(b)) != h) continue;
        if (a == 0 && b <= 0) continue;
        Int g;
        mpz_gcd(g.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
        if (g != 1) continue;
        cand.emplace_back(a, b);
      }
    // F and G first, then by decreasing λ and increasing |μ|
    std::sort(cand.begin(), cand.end(), [](auto x, auto y) {
      auto key = [](std::pair<long, long> v) {
        int rank = v == std::pair<long, long>{1, 0} ? 0 : v == std::pair<long, long>{0, 1} ? 1 : 2;
        return std::tuple<int, long, long, long>(rank, -v.first, std::labs(v.second), -v.second);
      };
      return key(x) < key(y);
    });
    for (auto [a, b] : cand) {
      if (chosen.size() == 2) break;
      if (!is_zero(det(kQ, p.member(a, b)))) chosen.emplace_back(a, b);
    }
  }
  if (chosen.size() < 2) throw std::runtime_error("no two nondegenerate members of height <= 20");
  d.a_lambda = chosen[0].first;
  d.a_mu = chosen[0].second;
  d.b_lambda = chosen[1].first;
  d.b_mu = chosen[1].second;
  RatMatrix A = p.member(d.a_lambda, d.a_mu), B = p.member(d.b_lambda, d.b_mu);
  std::size_t n = p.n();

  // det(A - xB): the rank-6 members are its roots where A - xB has rank 6
  QPoly h = det_pencil_poly(A, scale(kQ, Rat(-1), B));
  auto fac = factor_over_Q(h);
  std::vector<QPoly> rank6;
  for (auto& [q, m] : fac.factors) {
    NumberField K = NumberField::trusted(q);
    auto M = add(K, lift(K, A), scale(K, -K.generator(), lift(K, B)));
    if (rank(K, M) == n - 2) rank6.push_back(q);
  }
  Int dd = 1;
  for (auto& q : rank6) {
    if (q.degree() > 2) throw std::runtime_error("splitting field too large");
    if (q.degree() == 2) {
      Rat disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(0);
      Int s = squarefree_part(disc);
      if (dd != 1 && s != dd) throw std::runtime_error("splitting field too large");
      dd = s;
    }
  }
  d.field = dd == 1 ? NumberField() : NumberField::trusted(QPoly(std::vector<Rat>{Rat(-dd), Rat(0), Rat(1)}));
  const NumberField& K = d.field;
  for (auto& q : rank6) {
    if (q.degree() == 1) {
      d.roots.push_back(K.from_rat(-q.coeff(0)));
    } else {
      Rat b = q.coeff(1), disc = b * b - 4 * q.coeff(0);
      Rat k = rational_sqrt(disc / Rat(dd));  // sqrt(disc) = k * a, a^2 = dd
      NFElem sq = K.from_rat(k) * K.generator();
      d.roots.push_back((K.from_rat(-b) + sq) * K.from_rat(Rat(1, 2)));
      d.roots.push_back((K.from_rat(-b) - sq) * K.from_rat(Rat(1, 2)));
    }
  }
  if (d.roots.size() != 4) throw std::logic_error("expected four rank-6 roots");
  auto AK = lift(K, A), BK = lift(K, B);
  std::vector<std::vector<NFElem>> cols;
  for (auto& lam : d.roots) {
    auto V = form_kernel(K, add(K, AK, scale(K, -lam, BK)));
    if (V.dim() != 2) throw std::logic_error("rank-6 eigenspace is not 2-dimensional");
    d.eigenspaces.push_back(V);
    d.induced_forms.push_back(restrict_form(K, AK, V));
    d.alphas.push_back(lam.inverse());
    for (std::size_t i = 0; i < V.dim(); ++i) cols.push_back(V.basis.row(i));
  }
  d.basis = from_columns(K, n, cols);
  if (!verify_decomposition(p, d)) throw std::logic_error("decomposition failed verification");
  return d;
}

bool verify_decomposition(const Pencil& p, const FourRank6Decomposition& d) {
  const NumberField& K = d.field;
  std::size_t n = p.n();
  if (d.eigenspaces.size() != 4 || d.alphas.size() != 4 || d.induced_forms.size() != 4) return false;
  auto AK = lift(K, p.member(d.a_lambda, d.a_mu)), BK = lift(K, p.member(d.b_lambda, d.b_mu));
  if (d.basis.rows() != n || d.basis.cols() != n || is_zero(det(K, d.basis))) return false;
  auto At = congruence(K, AK, d.basis), Bt = congruence(K, BK, d.basis);
  std::size_t off = 0;
  for (std::size_t b = 0; b < 4; ++b) {
    std::size_t sz = d.eigenspaces[b].dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool in_block = i >= off && i < off + sz && j >= off && j < off + sz;
        bool i_in = i >= off && i < off + sz;
        if (!i_in) continue;
        if (in_block) {
          const NFElem& phi = d.induced_forms[b](i - off, j - off);
          if (!(At(i, j) == phi)) return false;
          if (!(Bt(i, j) == d.alphas[b] * phi)) return false;
        } else if (!is_zero(At(i, j)) || !is_zero(Bt(i, j))) {
          return false;
        }
      }
    if (is_zero(det(K, d.induced_forms[b]))) return false;
    off += sz;
  }
  if (off != n) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (d.alphas[i] == d.alphas[j]) return false;
  return true;
}

}  // namespace qp
