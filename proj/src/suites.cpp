#include "quadpencil/suites.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <thread>

#include "quadpencil/fixtures.hpp"
#include "quadpencil/geometry.hpp"
#include "quadpencil/local.hpp"
#include "quadpencil/oracles.hpp"
#include "quadpencil/residues.hpp"

namespace qp::verify {

namespace {

using io::ObjectReader;

RationalField Q;
FunctionField K;

// Portable draws: the report must not depend on the standard library's
// distribution implementations.
long draw(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

long draw_nonzero(Rng& rng, long bound) {
  for (;;) {
    long x = draw(rng, -bound, bound);
    if (x != 0) return x;
  }
}

CaseResult pass() { return {}; }
CaseResult fail(std::string why) { return {false, std::move(why)}; }

Rat rat(const Json& c, const char* key) { return io::rat_from_json(c.at(key), key); }

Json long_array(const std::vector<long>& v) {
  Json a = Json::array();
  for (long x : v) a.push_back(x);
  return a;
}

// ---- pencils and F_q matrices inside cases

RatMatrix random_symmetric(Rng& rng, std::size_t n, long bound) {
  RatMatrix m(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = draw(rng, -bound, bound);
  return m;
}

Json pencil_case(const RatMatrix& F, const RatMatrix& G) {
  Json c;
  c["n"] = F.rows();
  c["F"] = io::to_json(F);
  c["G"] = io::to_json(G);
  return c;
}

Pencil pencil_of(const Json& c) {
  Json j = c;
  for (auto& key : {"suite_seed", "fixture"}) j.erase(key);
  return io::pencil_from_json(j);
}

FqMatrix fq_matrix(const GaloisField& k, const Json& j) {
  std::size_t n = j.size();
  FqMatrix m(n, n, k.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      long v = j.at(i).at(c).get<long>();
      if (v < 0 || v >= static_cast<long>(k.size())) throw io::ParseError("field element code out of range");
      m(i, c) = k.element(static_cast<std::uint32_t>(v));
    }
  if (!is_symmetric(m)) throw std::invalid_argument("form must be symmetric");
  return m;
}

Json fq_json(const FqMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).code());
    rows.push_back(row);
  }
  return rows;
}

FqMatrix random_symmetric_Fq(const GaloisField& k, Rng& rng, std::size_t n) {
  FqMatrix m(n, n, k.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = k.element(static_cast<std::uint32_t>(rng() % k.size()));
  return m;
}

std::vector<fixtures::Named> named_fixtures() {
  auto all = fixtures::taxonomy();
  all.push_back({"regular-diagonal", fixtures::regular_diagonal(), PencilTag::Regular});
  return all;
}

fixtures::Named fixture(const std::string& name) {
  for (auto& f : named_fixtures())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fixture: " + name);
}

// ---- Hilbert symbols

std::vector<Place> support(const Rat& a, const Rat& b) {
  std::set<Int> primes{2};
  for (auto& p : prime_support(a)) primes.insert(p);
  for (auto& p : prime_support(b)) primes.insert(p);
  std::vector<Place> out{Place::Real()};
  for (auto& p : primes) out.push_back(Place::Prime(p));
  return out;
}

Suite hilbert_reciprocity() {
  return {"hilbert-reciprocity", "product over all places of (a,b)_v is 1",
          [](Rng& rng, int size) {
            std::vector<Json> cases;
            for (int i = 0; i < 500 * size; ++i) cases.push_back({{"a", draw_nonzero(rng, 10000)}, {"b", draw_nonzero(rng, 10000)}});
            return cases;
          },
          [](const Json& c) {
            Rat a = rat(c, "a"), b = rat(c, "b");
            int prod = 1;
            for (auto& v : support(a, b)) prod *= hilbert_symbol(a, b, v);
            return prod == 1 ? pass() : fail("product of Hilbert symbols is -1");
          }};
}

Suite hilbert_laws() {
  return {"hilbert-laws", "symmetry, bilinearity and (a,-a) = 1 at 2, 3, 5, 7 and the real place",
          [](Rng& rng, int size) {
            std::vector<Json> cases;
            for (const char* v : {"inf", "2", "3", "5", "7"})
              for (int i = 0; i < 500 * size; ++i)
                cases.push_back({{"place", v}, {"a", draw_nonzero(rng, 1000)}, {"b", draw_nonzero(rng, 1000)}, {"c", draw_nonzero(rng, 1000)}});
            return cases;
          },
          [](const Json& c) {
            Place v = io::place_from_string(c.at("place").get<std::string>());
            Rat a = rat(c, "a"), b = rat(c, "b"), d = rat(c, "c");
            if (hilbert_symbol(a, b, v) != hilbert_symbol(b, a, v)) return fail("not symmetric");
            if (hilbert_symbol(a * d, b, v) != hilbert_symbol(a, b, v) * hilbert_symbol(d, b, v)) return fail("not bilinear");
            if (hilbert_symbol(a, -a, v) != 1) return fail("(a,-a) != 1");
            return pass();
          }};
}

Suite hilbert_oracle() {
  return {"hilbert-oracle", "closed-form (a,b)_p equals isotropy of <1,-a,-b> by Hensel search",
          [](Rng& rng, int size) {
            std::vector<Json> cases;
            for (int i = 0; i < 100 * size; ++i) {
              long a = draw_nonzero(rng, 60), b = draw_nonzero(rng, 60);
              for (long p : {2, 3, 5, 7}) cases.push_back({{"a", a}, {"b", b}, {"p", p}});
            }
            return cases;
          },
          [](const Json& c) {
            Rat a = rat(c, "a"), b = rat(c, "b");
            long p = c.at("p").get<long>();
            int h = hilbert_symbol(a, b, Place::Prime(p)), o = oracle::hilbert_bruteforce(a, b, p);
            return h == o ? pass() : fail("formula " + std::to_string(h) + ", oracle " + std::to_string(o));
          }};
}

// ---- Witt index against the brute-force oracle

Suite witt_oracle() {
  auto memo = std::make_shared<std::map<std::pair<std::vector<long>, long>, std::size_t>>();
  return {"witt-oracle", "witt_index_local equals the Hensel brute-force index for every diagonal form over {±1,±2,±3,±5}, dim <= 5",
          [](Rng&, int) {
            const std::vector<long> entries{1, -1, 2, -2, 3, -3, 5, -5};
            std::vector<Json> cases;
            for (std::size_t n = 1; n <= 5; ++n) {
              std::vector<std::size_t> idx(n, 0);
              for (;;) {
                std::vector<long> d;
                for (auto i : idx) d.push_back(entries[i]);
                for (long p : {2, 3, 5, 7}) cases.push_back({{"d", long_array(d)}, {"p", p}});
                std::size_t t = 0;
                while (t < n && ++idx[t] == entries.size()) idx[t++] = 0;
                if (t == n) break;
              }
            }
            return cases;
          },
          [memo](const Json& c) {
            auto d = c.at("d").get<std::vector<long>>();
            long p = c.at("p").get<long>();
            std::vector<Rat> dr(d.begin(), d.end());
            std::size_t formula = witt_index_local(rat_diag(dr), Place::Prime(p)).witt_index;
            // a permutation of the entries is an isometry
            auto key = d;
            std::sort(key.begin(), key.end());
            auto [it, fresh] = memo->try_emplace({key, p}, 0);
            if (fresh) it->second = oracle::witt_index_bruteforce(dr, p);
            if (formula != it->second)
              return fail("formula " + std::to_string(formula) + ", oracle " + std::to_string(it->second));
            return pass();
          }};
}

// ---- pencils

Suite rank_multiplicity() {
  return {"lemma-rank-multiplicity", "every singular member satisfies multiplicity >= N - rank (N variables)",
          [](Rng& rng, int size) {
            std::vector<Json> cases;
            while (static_cast<int>(cases.size()) < 100 * size) {
              std::size_t n = static_cast<std::size_t>(draw(rng, 4, 8));
              RatMatrix F = random_symmetric(rng, n, 10), G = random_symmetric(rng, n, 10);
              // integer entries of size <= 10, with a random chance of a low-rank G
              if (draw(rng, 0, 2) == 0) {
                std::size_t r = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(n) - 1));
                RatMatrix L(n, r, Rat(0));
                for (std::size_t i = 0; i < n; ++i)
                  for (std::size_t j = 0; j < r; ++j) L(i, j) = draw(rng, -1, 1);
                G = mul(Q, L, transpose(L));
              }
              if (char_poly(Pencil(F, G)).chi.is_zero()) continue;
              cases.push_back(pencil_case(F, G));
            }
            return cases;
          },
          [](const Json& c) {
            Pencil X = pencil_of(c);
            for (auto& m : singular_members(X))
              if (m.multiplicity + m.rank < X.n())
                return fail("member " + m.locus() + ": multiplicity " + std::to_string(m.multiplicity) + ", rank " + std::to_string(m.rank));
            return pass();
          }};
}

Suite taxonomy() {
  return {"taxonomy", "hand-built fixtures get their intended tags; the four rank-6 decomposition is orthogonal",
          [](Rng&, int) {
            std::vector<Json> cases;
            for (auto& f : fixtures::taxonomy()) {
              Json c = pencil_case(f.pencil.F(), f.pencil.G());
              c["fixture"] = f.name;
              c["expected"] = to_string(f.expected);
              cases.push_back(c);
            }
            return cases;
          },
          [](const Json& c) {
            Json j = c;
            auto expected = pencil_tag_from_string(j.at("expected").get<std::string>());
            j.erase("expected");
            Pencil X = pencil_of(j);
            auto tag = classify(X).tag;
            if (tag != expected) return fail("classified as " + to_string(tag));
            if (tag == PencilTag::FourRank6) {
              auto d = four_rank6_decompose(X);
              if (!verify_decomposition(X, d)) return fail("decomposition identities fail");
              // both orthogonality identities, checked directly
              NumberField k = d.field;
              auto A = lift(k, X.member(d.a_lambda, d.a_mu)), B = lift(k, X.member(d.b_lambda, d.b_mu));
              for (std::size_t i = 0; i < d.eigenspaces.size(); ++i)
                for (std::size_t l = i + 1; l < d.eigenspaces.size(); ++l) {
                  auto Vi = basis_columns(d.eigenspaces[i]), Vl = basis_columns(d.eigenspaces[l]);
                  if (!is_zero_matrix(mul(k, transpose(Vi), mul(k, A, Vl))) || !is_zero_matrix(mul(k, transpose(Vi), mul(k, B, Vl))))
                    return fail("eigenspaces not orthogonal");
                }
            }
            return pass();
          }};
}

Suite residue_example() {
  return {"residue-example",
          "diagonal rank-6 family at t = 0: chi has t^2, residue -1, obstruction; regular pencils have trivial residues",
          [](Rng& rng, int size) {
            std::vector<Json> cases;
            Json std_case;
            std_case["fixture"] = "rank6-over-base";
            std_case["expect"] = "obstruction";
            cases.push_back(std_case);
            for (const char* name : {"regular", "regular-diagonal"}) {
              Json c;
              c["fixture"] = name;
              c["expect"] = "trivial";
              cases.push_back(c);
            }
            int made = 0;
            while (made < 3 * size) {
              RatMatrix F = random_symmetric(rng, 8, 3), G = random_symmetric(rng, 8, 3);
              Pencil X(F, G);
              if (classify(X).tag != PencilTag::Regular) continue;
              Json c = pencil_case(F, G);
              c["expect"] = "trivial";
              cases.push_back(c);
              ++made;
            }
            return cases;
          },
          [](const Json& c) {
            Json j = c;
            std::string expect = j.at("expect").get<std::string>();
            j.erase("expect");
            Pencil X = j.contains("fixture") ? fixture(j.at("fixture").get<std::string>()).pencil : pencil_of(j);
            auto v = plane_criterion(X);
            if (expect == "trivial") {
              if (v.tag != VerdictTag::ResiduesAllTrivial) return fail("verdict " + to_string(v.tag));
              return pass();
            }
            QPoly t = QPoly::x();
            bool double_t = false;
            for (auto& m : singular_members(X)) double_t |= !m.at_infinity && m.factor == t && m.multiplicity == 2;
            if (!double_t) return fail("chi does not have the factor t with multiplicity 2");
            auto r = residue_of_clifford(X, LocalPoint::Finite(t));
            if (!r.rational || r.r != -1) return fail("residue at t = 0 is " + r.to_string());
            if (v.tag != VerdictTag::ObstructionAt || !v.point || !(v.point->pi == t)) return fail("verdict " + to_string(v.tag));
            return pass();
          }};
}

Suite residue_consistency() {
  return {"residue-consistency", "residues are unchanged by random unimodular changes of basis over Z[t] (50 per fixture)",
          [](Rng& rng, int size) {
            std::vector<Json> cases;
            for (auto& f : named_fixtures()) {
              if (f.expected == PencilTag::DegeneratePencil) continue;
              for (int i = 0; i < 50 * size; ++i) cases.push_back({{"fixture", f.name}, {"trial", i}, {"trial_seed", rng()}});
            }
            return cases;
          },
          [](const Json& c) {
            Pencil X = fixture(c.at("fixture").get<std::string>()).pencil;
            std::vector<LocalPoint> pts;
            for (auto& m : singular_members(X)) {
              auto pt = m.at_infinity ? LocalPoint::Infinity() : LocalPoint::Finite(m.factor);
              if (pt.degree() <= 2) pts.push_back(pt);
            }
            if (pts.empty()) return fail("no singular point of degree <= 2");
            auto& pt = pts[c.at("trial").get<std::size_t>() % pts.size()];
            auto base = dvr_diagonalize(X, pt);
            Rng rng(c.at("trial_seed").get<std::uint64_t>());
            std::size_t n = X.n();
            FuncMatrix U = identity(K, n);
            for (std::size_t step = 0; step < n; ++step) {
              std::size_t i = rng() % n, j = rng() % n;
              if (i == j) {
                std::size_t k = rng() % n;
                for (std::size_t r = 0; r < n; ++r) std::swap(U(r, i), U(r, k));
                continue;
              }
              long c0 = draw(rng, -2, 2), c1 = std::max(0L, draw(rng, -3, 1));
              RatFunc f(QPoly(std::vector<Rat>{c0, c1}));
              for (std::size_t r = 0; r < n; ++r) U(r, i) += f * U(r, j);
            }
            auto moved = dvr_diagonalize_form(congruence(K, base.gram, U), pt);
            if (moved.uniformizers.size() != base.uniformizers.size()) return fail("uniformizer count changed at " + pt.to_string());
            if (!is_square(residue_value(moved) * residue_value(base))) return fail("residue class changed at " + pt.to_string());
            return pass();
          }};
}

Suite mordell() {
  return {"mordell-sweep", "pencils without members of rank <= 5 have a member with |n+ - n-| <= 2",
          [](Rng& rng, int size) {
            std::vector<Json> cases;
            while (static_cast<int>(cases.size()) < 50 * size) {
              RatMatrix F = random_symmetric(rng, 8, 5), G = random_symmetric(rng, 8, 5);
              Pencil X(F, G);
              auto cp = char_poly(X);
              if (cp.chi.is_zero() || geometric_members_with_rank_at_most(singular_members(X, cp), 5) > 0) continue;
              cases.push_back(pencil_case(F, G));
            }
            return cases;
          },
          [](const Json& c) {
            Pencil X = pencil_of(c);
            auto s = mordell_sweep(X);
            auto sig = signature(X.member(s.lambda, s.mu));
            if (sig != s.signature) return fail("reported signature differs from the member's");
            if (std::abs(sig.first - sig.second) > 2) return fail("|n+ - n-| > 2");
            return pass();
          }};
}

// ---- finite fields

Suite dual_quadric_suite() {
  return {"dual-quadric", "points of Q_A whose polar hyperplane is tangent to Q_B are exactly Q_A ∩ Q_{AB^-1A}",
          [](Rng& rng, int size) {
            std::vector<Json> cases;
            for (long p : {3, 5}) {
              GaloisField k(static_cast<std::uint32_t>(p));
              for (std::size_t vars : {3u, 4u})
                for (int t = 0; t < 20 * size; ++t) {
                  FqMatrix A, B;
                  do {
                    A = random_symmetric_Fq(k, rng, vars);
                    B = random_symmetric_Fq(k, rng, vars);
                  } while (rank(k, A) < vars || rank(k, B) < vars || proportional(k, A, B));
                  cases.push_back({{"p", p}, {"A", fq_json(A)}, {"B", fq_json(B)}});
                }
            }
            return cases;
          },
          [](const Json& c) {
            GaloisField k(c.at("p").get<std::uint32_t>());
            FqMatrix A = fq_matrix(k, c.at("A")), B = fq_matrix(k, c.at("B"));
            auto Ap = dual_quadric(k, A, B);
            auto QB = enumerate_points_Fq(k, {B});
            auto both = enumerate_points_Fq(k, {A, Ap});
            std::vector<FqPoint> tangent;
            for (auto& P : enumerate_points_Fq(k, {A}))
              if (oracle::hyperplane_tangent(k, B, QB, apply(k, A, P))) tangent.push_back(P);
            return tangent == both ? pass() : fail("tangency set differs from the intersection with A B^-1 A");
          }};
}

Suite hyperbolic_splitting() {
  return {"hyperbolic-splitting", "over F_3, m+1 hyperbolic planes split off iff a totally isotropic P^m exists (diagonal, dim <= 8, m <= 2)",
          [](Rng&, int) {
            std::vector<Json> cases;
            for (std::size_t n = 1; n <= 8; ++n)
              for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::vector<long> d;
                for (std::size_t i = 0; i < n; ++i) d.push_back((mask >> i) & 1u ? 2 : 1);
                for (long m = 0; m <= 2; ++m) cases.push_back({{"p", 3}, {"d", long_array(d)}, {"m", m}});
              }
            return cases;
          },
          [](const Json& c) {
            GaloisField k(c.at("p").get<std::uint32_t>());
            auto d = c.at("d").get<std::vector<long>>();
            std::size_t m = c.at("m").get<std::size_t>();
            FqMatrix q(d.size(), d.size(), k.zero());
            for (std::size_t i = 0; i < d.size(); ++i) q(i, i) = k.from_int(d[i]);
            bool splits = witt_index_Fq(k, q) >= m + 1;
            auto W = isotropic_subspace_Fq(k, q, m);
            if (splits != W.has_value()) return fail(splits ? "splits but no subspace found" : "subspace found but does not split");
            if (W) {
              if (W->dim() != m + 1) return fail("subspace of the wrong dimension");
              for (std::size_t r = 0; r <= m; ++r)
                for (std::size_t s = 0; s <= m; ++s)
                  if (!is_zero(bilinear(k, q, W->basis.row(r), W->basis.row(s)))) return fail("subspace is not totally isotropic");
            }
            return pass();
          }};
}

Suite amer_brumer() {
  return {"amer-brumer", "an intersection of two quadrics in P^3 over F_3 with an odd-degree point over F_27 has an F_3-point",
          [](Rng& rng, int size) {
            GaloisField k3(3);
            std::vector<Json> cases;
            for (int t = 0; t < 50 * size; ++t) {
              FqMatrix F, G;
              do {
                F = random_symmetric_Fq(k3, rng, 4);
                G = random_symmetric_Fq(k3, rng, 4);
              } while (proportional(k3, F, G));
              cases.push_back({{"F", fq_json(F)}, {"G", fq_json(G)}});
            }
            return cases;
          },
          [](const Json& c) {
            GaloisField k3(3), k27(3, 3);
            FqMatrix F = fq_matrix(k3, c.at("F")), G = fq_matrix(k3, c.at("G"));
            bool odd = false;
            for (auto& P : enumerate_points_Fq(k27, {embed(k27, F), embed(k27, G)})) odd |= frobenius_orbit_size(k27, P) % 2 == 1;
            if (odd && enumerate_points_Fq(k3, {F, G}).empty()) return fail("odd-degree point but no F_3-point");
            return pass();
          }};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string counterexample_path(const std::string& dir, const std::string& suite, std::size_t index) {
  return (std::filesystem::path(dir) / (suite + "-" + std::to_string(index) + ".json")).string();
}

constexpr std::size_t kReportedFailures = 10;

}  // namespace

std::vector<Suite> make_suites() {
  return {hilbert_reciprocity(), hilbert_laws(),      hilbert_oracle(),      witt_oracle(),
          rank_multiplicity(),   dual_quadric_suite(), hyperbolic_splitting(), taxonomy(),
          residue_example(),     mordell(),           amer_brumer(),          residue_consistency()};
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (auto& s : make_suites()) out.push_back(s.name);
  return out;
}

Suite make_suite(const std::string& name) {
  for (auto& s : make_suites())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown suite: " + name);
}

std::uint64_t substream_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(seed ^ h);
}

SuiteOutcome run_suite(const SuiteConfig& config) {
  Suite s = make_suite(config.suite);
  Rng rng(substream_seed(config.seed, s.name));
  auto cases = s.generate(rng, std::max(1, config.size));
  SuiteOutcome out;
  out.name = s.name;
  out.cases = cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    CaseResult r;
    try {
      r = s.check(cases[i]);
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    if (!r.passed) out.failures.push_back({i, r.detail, cases[i]});
  }
  return out;
}

VerifyRun run_verify(const VerifyOptions& options) {
  std::vector<std::string> names = options.suites.empty() ? suite_names() : options.suites;
  for (auto& n : names) make_suite(n);  // reject unknown names before any work
  std::vector<SuiteOutcome> outcomes(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) outcomes[i] = run_suite({options.seed, names[i], options.size});
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(names.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  VerifyRun run;
  Json suites = Json::array();
  for (auto& o : outcomes) {
    Json s;
    s["name"] = o.name;
    s["cases"] = o.cases;
    s["failures"] = o.failures.size();
    s["passed"] = o.passed();
    Json listed = Json::array();
    for (std::size_t i = 0; i < o.failures.size() && i < kReportedFailures; ++i) {
      auto& f = o.failures[i];
      Json x;
      x["index"] = f.index;
      x["detail"] = f.detail;
      if (options.dump_dir) {
        std::filesystem::create_directories(*options.dump_dir);
        std::string path = counterexample_path(*options.dump_dir, o.name, f.index);
        io::write_json_file(path, counterexample_json(o.name, options.seed, f.index, f.case_data, f.detail));
        x["file"] = path;
      }
      listed.push_back(x);
    }
    s["counterexamples"] = listed;
    run.passed = run.passed && o.passed();
    suites.push_back(s);
  }
  run.report["schema"] = io::kSchemaVersion;
  run.report["kind"] = "verify";
  run.report["seed"] = options.seed;
  run.report["size"] = options.size;
  run.report["suites"] = suites;
  run.report["passed"] = run.passed;
  return run;
}

Json counterexample_json(const std::string& suite, std::uint64_t seed, std::size_t index, const Json& case_data,
                         const std::string& detail) {
  Json j;
  j["schema"] = io::kSchemaVersion;
  j["kind"] = "counterexample";
  j["suite"] = suite;
  j["seed"] = seed;
  j["index"] = index;
  j["case"] = case_data;
  j["detail"] = detail;
  return j;
}

CaseResult replay(const Json& counterexample) {
  ObjectReader r(counterexample, "$");
  r.schema();
  if (r.string("kind") != "counterexample") throw io::ParseError("$.kind: expected \"counterexample\"");
  Suite s = make_suite(r.string("suite"));
  r.integer("seed");
  r.size("index");
  r.string("detail");
  const Json& c = r.at("case");
  r.finish();
  try {
    return s.check(c);
  } catch (const io::ParseError&) {
    throw;
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
}

}  // namespace qp::verify
