#include "quadpencil/sturm.hpp"

#include <stdexcept>

namespace qp {

namespace {

int sign_at(const QPoly& p, const Rat& x) { return sgn(p.eval(x)); }

std::size_t variations(const std::vector<QPoly>& s, const Rat& x) {
  std::size_t v = 0;
  int last = 0;
  for (auto& p : s) {
    int sg = sign_at(p, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

void isolate(const QPoly& f, const std::vector<QPoly>& s, const Rat& a, const Rat& b, std::size_t c,
             std::vector<RootInterval>& out) {
  if (c == 0) return;
  if (c == 1) {
    if (is_zero(f.eval(b))) out.push_back({b, b, true});
    else out.push_back({a, b, false});
    return;
  }
  Rat m = (a + b) / 2;
  std::size_t left = count_roots(s, a, m);
  isolate(f, s, a, m, left, out);
  isolate(f, s, m, b, c - left, out);
}

}  // namespace

std::vector<QPoly> sturm_sequence(const QPoly& f) {
  std::vector<QPoly> s{f, f.derivative()};
  while (!s.back().is_zero()) {
    QPoly r = s[s.size() - 2] % s.back();
    if (r.is_zero()) break;
    // scale by a positive constant to keep coefficients tame
    Rat l = abs(r.lead());
    s.push_back(-r.scaled(Rat(1) / l));
  }
  if (s.back().is_zero()) s.pop_back();
  return s;
}

std::size_t count_roots(const std::vector<QPoly>& sturm, const Rat& a, const Rat& b) {
  std::size_t va = variations(sturm, a), vb = variations(sturm, b);
  return va >= vb ? va - vb : 0;
}

std::vector<RootInterval> isolate_real_roots(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("real roots of zero polynomial");
  if (f.degree() == 0) return {};
  if (gcd(f, f.derivative()).degree() > 0) throw std::invalid_argument("take squarefree part first");
  Rat bound = 0;
  for (auto& c : f.coeffs()) bound = std::max(bound, Rat(abs(c / f.lead())));
  bound += 1;
  auto s = sturm_sequence(f);
  std::vector<RootInterval> out;
  isolate(f, s, -bound, bound, count_roots(s, -bound, bound), out);
  return out;
}

RootInterval refine(const QPoly& f, const RootInterval& iv) {
  if (iv.exact) return iv;
  Rat m = (iv.lo + iv.hi) / 2;
  int sm = sign_at(f, m);
  if (sm == 0) return {m, m, true};
  int sl = sign_at(f, iv.lo);
  // a simple root flips the sign; lo itself is not a root of an open interval
  if (sl != 0 && sl != sm) return {iv.lo, m, false};
  if (sl == 0) {
    // lo is a neighbouring exact root; decide via the sign at hi
    int sh = sign_at(f, iv.hi);
    if (sh != sm) return {m, iv.hi, false};
    return {iv.lo, m, false};
  }
  return {m, iv.hi, false};
}

std::vector<RootInterval> separate(const QPoly& f, std::vector<RootInterval> ivs) {
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
    while (!(ivs[i].hi < ivs[i + 1].lo)) {
      if (!ivs[i].exact) ivs[i] = refine(f, ivs[i]);
      if (!ivs[i + 1].exact) ivs[i + 1] = refine(f, ivs[i + 1]);
      if (ivs[i].exact && ivs[i + 1].exact && !(ivs[i].hi < ivs[i + 1].lo))
        throw std::logic_error("coincident isolated roots");
    }
  }
  return ivs;
}

}  // namespace qp
