#pragma once
// Invariant and oracle suites. Each suite runs for every n' in 1..n and
// returns a deterministic JSON report; sampling is driven by the seed only.

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "equivariant.hpp"
#include "exactpoly.hpp"
#include "indexcomb.hpp"
#include "presentation.hpp"
#include "qfun.hpp"

namespace lgschub {

using Json = nlohmann::ordered_json;

struct CheckOptions {
  std::uint64_t seed = 0;
  int points = 20;
  int parallelism = 1;
};

inline std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) h = (h ^ c) * 16777619u;
  return h;
}

/// Rational sample points with distinct positive coordinates, so that
/// x_i - x_j and x_i + x_j never vanish.
class Sampler {
 public:
  Sampler(std::uint64_t seed, const std::string& stream, int n) {
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), fnv1a(stream),
                      std::uint32_t(n)};
    rng_.seed(seq);
  }

  Rat value() {
    Rat r(Integer(std::to_string(num_(rng_))), Integer(std::to_string(den_(rng_))));
    r.canonicalize();
    return r;
  }
  Rat signed_value() { return sign_(rng_) ? Rat(-value()) : value(); }

  std::vector<Rat> distinct(int count) {
    std::vector<Rat> v;
    while (int(v.size()) < count) {
      Rat r = value();
      if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
    }
    return v;
  }
  std::vector<Rat> any(int count) {
    std::vector<Rat> v;
    for (int i = 0; i < count; ++i) v.push_back(signed_value());
    return v;
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> num_{1, 1000000};
  std::uniform_int_distribution<long> den_{1, 1000};
  std::uniform_int_distribution<int> sign_{0, 1};
};

/// Accumulates instance counts and failures for one suite at one n.
class SuiteRun {
 public:
  SuiteRun(std::string suite, int n) : suite_(std::move(suite)), n_(n) {}

  void expect(bool ok, const std::string& instance, const std::string& expected = "",
              const std::string& actual = "") {
    ++instances_;
    if (ok) return;
    failures_.push_back({{"suite", suite_}, {"n", n_}, {"instance", instance}, {"expected", expected}, {"actual", actual}});
  }
  void expect_eq(const Poly& expected, const Poly& actual, const std::string& instance) {
    bool ok = expected == actual;
    expect(ok, instance, ok ? "" : to_string(expected), ok ? "" : to_string(actual));
  }
  void expect_zero(const Poly& p, const std::string& instance) { expect_eq(Poly{}, p, instance); }

  /// Runs body as one or more instances; an exception counts as a failure.
  void guarded(const std::string& instance, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, instance, "no error", e.what());
    }
  }

  bool passed() const { return failures_.empty(); }
  Json report() const {
    return {{"suite", suite_}, {"n", n_}, {"instances", instances_}, {"passed", passed()}, {"failures", failures_}};
  }

 private:
  std::string suite_;
  int n_;
  long instances_ = 0;
  Json failures_ = Json::array();
};

/// Restriction tables and structure constants shared by the suites of one run.
class TableCache {
 public:
  explicit TableCache(int parallelism) : parallelism_(parallelism) {}
  const RestrictionTable& table(int n) {
    auto& t = tables_[n];
    if (!t) t = std::make_unique<RestrictionTable>(RestrictionTable::build(n, parallelism_));
    return *t;
  }
  const StructureConstants& constants(int n) {
    auto& c = constants_[n];
    if (!c) c = std::make_unique<StructureConstants>(StructureConstants::build(table(n)));
    return *c;
  }

 private:
  int parallelism_;
  std::map<int, std::unique_ptr<RestrictionTable>> tables_;
  std::map<int, std::unique_ptr<StructureConstants>> constants_;
};

namespace suites {

inline std::string lam(const StrictPartition& l) { return l.str(); }

inline void bijection(SuiteRun& run, int n, TableCache&, const CheckOptions&) {
  for (const auto& l : enumerate(n)) {
    auto w = strict_to_perm(l);
    auto d = strict_to_diagram(l);
    auto m = strict_to_mask(l);
    run.expect(perm_to_strict(w) == l, "perm round trip " + lam(l));
    run.expect(diagram_to_strict(d) == l, "diagram round trip " + lam(l));
    run.expect(mask_to_strict(m) == l, "mask round trip " + lam(l));
    run.expect(perm_to_diagram(w) == d && diagram_to_perm(d) == w, "perm/diagram " + lam(l));
    run.expect(perm_to_mask(w) == m && mask_to_perm(m) == w, "perm/mask " + lam(l));
    run.expect(diagram_to_mask(d) == m && mask_to_diagram(m) == d, "diagram/mask " + lam(l));
    run.expect(d.shifted_box_count() == l.size(), "box count " + lam(l), std::to_string(l.size()),
               std::to_string(d.shifted_box_count()));
  }
  auto all = enumerate(n);
  for (const auto& l : all) {
    auto cov = covers(l);
    int expected_count = 0;
    for (const auto& lp : all) {
      if (lp.size() != l.size() + 1 || !contains(l, lp)) continue;
      ++expected_count;
      auto it = std::find_if(cov.begin(), cov.end(), [&](const Cover& c) { return c.target == lp; });
      run.expect(it != cov.end(), "cover listed " + lam(l) + "->" + lam(lp));
      if (it == cov.end()) continue;
      int want = lp.length() == l.length() ? 2 : 1;
      run.expect(it->multiplicity == want, "multiplicity " + lam(l) + "->" + lam(lp), std::to_string(want),
                 std::to_string(it->multiplicity));
      int move = diagram_move_multiplicity(l, lp);
      run.expect(move == it->multiplicity, "diagram move " + lam(l) + "->" + lam(lp),
                 std::to_string(it->multiplicity), std::to_string(move));
    }
    run.expect(int(cov.size()) == expected_count, "cover count " + lam(l), std::to_string(expected_count),
               std::to_string(cov.size()));
  }
  if (n == 5) {
    SignedPerm w(5, {1, 3, 4, 6, 9});
    auto d = perm_to_diagram(w);
    run.expect(d.rows == std::vector<int>{5, 4, 4, 3, 1}, "example diagram", "[5,4,4,3,1]", Json(d.rows).dump());
    auto s = diagram_to_strict(d);
    run.expect(s.parts() == std::vector<int>{5, 3, 2}, "example strict", "[5,3,2]", Json(s.parts()).dump());
    auto m = perm_to_mask(w);
    run.expect(m.bits == std::vector<int>{1, 0, 1, 1, 0}, "example mask", "[1,0,1,1,0]", Json(m.bits).dump());
  }
}

/// sigma(k,1) and sigma(k,2) in terms of the special classes.
inline void two_row_forms(SuiteRun& run, int n, const RestrictionTable& t) {
  Specialization sp{n};
  auto special = [&](int j, int mi) -> Poly {
    if (j == 0) return 1;
    if (j > n) return {};
    return t.at(t.position(StrictPartition(n, {j})), mi);
  };
  for (int k = 2; k <= n; ++k)
    for (int mi = 0; mi < t.size(); ++mi) {
      Poly rhs = special(k, mi) * special(1, mi) - special(k + 1, mi) * 2 - sp.a(k + 1) * special(k, mi) * 2;
      run.expect_eq(rhs, t.at(t.position(StrictPartition(n, {k, 1})), mi),
                    "sigma(" + std::to_string(k) + ",1) at " + lam(t.index()[mi]));
    }
  for (int k = 3; k <= n; ++k)
    for (int mi = 0; mi < t.size(); ++mi) {
      Poly b1 = sp.a(k + 1), b2 = sp.a(k + 2), c = sp.a(2);
      Poly rhs = special(k, mi) * special(2, mi) - special(k + 1, mi) * special(1, mi) * 2 + special(k + 2, mi) * 2 -
                 b1 * special(k, mi) * special(1, mi) * 2 + (b1 + b2 + c) * special(k + 1, mi) * 2 +
                 (b1 * b1 + b1 * c) * special(k, mi) * 2;
      run.expect_eq(rhs, t.at(t.position(StrictPartition(n, {k, 2})), mi),
                    "sigma(" + std::to_string(k) + ",2) at " + lam(t.index()[mi]));
    }
}

inline void closedforms(SuiteRun& run, int n, TableCache& cache, const CheckOptions&) {
  const auto& t = cache.table(n);
  for (const auto& l : t.index()) {
    run.expect_eq(diagonal_product(l), t(l, l), "diagonal " + lam(l));
    run.expect_eq(divisor_restriction(l), t(StrictPartition(n, {1}), l), "divisor at " + lam(l));
  }
  two_row_forms(run, n, t);
  if (n == 5) {
    auto x = [](int i) { return Poly::x(i); };
    Poly want = x(1) * 2 * (x(1) + x(3)) * (x(1) - x(5)) * (x(1) - x(4)) * (x(1) - x(2)) * x(3) * 2 * (x(3) - x(5)) *
                (x(3) - x(4));
    StrictPartition l(5, {5, 3});
    run.expect_eq(want, diagonal_product(l), "example diagonal (5,3)");
    run.expect(strict_to_perm(l) == SignedPerm(5, {1, 3, 6, 7, 9}), "example perm (5,3)", "1 3 5\u0304 4\u0304 2\u0304",
               strict_to_perm(l).barred());
  }
}

inline void recurrence(SuiteRun& run, int n, TableCache& cache, const CheckOptions& opt) {
  const auto& t = cache.table(n);
  std::vector<Poly> div;
  for (const auto& l : t.index()) div.push_back(divisor_restriction(l));
  for (int vi = 0; vi < t.size(); ++vi)
    for (int wi = 0; wi < t.size(); ++wi) {
      const auto& w = t.index()[wi];
      std::string inst = "rec w=" + lam(w) + " v=" + lam(t.index()[vi]);
      run.guarded(inst, [&] {
        Poly sum;
        for (const auto& c : covers(w)) sum += t.at(t.position(c.target), vi) * long(c.multiplicity);
        Poly d = div[vi] - div[wi];
        run.expect_eq(d * t.at(wi, vi), sum, inst);
        if (wi != vi) run.expect_eq(t.at(wi, vi), exact_div(sum, d), inst + " division");
      });
    }
  Sampler sampler(opt.seed, "recurrence", n);
  for (int mi = 0; mi < t.size(); ++mi) {
    const auto& mu = t.index()[mi];
    for (int p = 0; p < opt.points; ++p) {
      std::vector<Rat> x;
      std::vector<Rat> vals;
      for (;;) {
        x = sampler.distinct(n);
        try {
          vals = recurrence_solve(mu, x);
          break;
        } catch (const DegeneratePoint&) {
        }
      }
      Point pt;
      for (int i = 0; i < n; ++i) pt.set(VarId::x(i + 1), x[i]);
      for (int li = 0; li < t.size(); ++li) {
        Rat want = eval_at(t.at(li, mi), pt);
        bool ok = want == vals[li];
        run.expect(ok, "solve mu=" + lam(mu) + " lambda=" + lam(t.index()[li]) + " point " + std::to_string(p),
                   ok ? "" : want.get_str(), ok ? "" : vals[li].get_str());
      }
    }
  }
}

inline void oracle(SuiteRun& run, int n, TableCache&, const CheckOptions& opt) {
  QContext ctx{n};
  Sampler sampler(opt.seed, "oracle", n);
  for (const auto& l : enumerate(n)) {
    Poly q = factorial_Q(l, ctx);
    int amax = 2 * n + 1;
    for (int p = 0; p < opt.points; ++p) {
      auto x = sampler.distinct(n);
      auto a = sampler.any(amax - 1);
      Point pt;
      for (int i = 0; i < n; ++i) pt.set(VarId::x(i + 1), x[i]);
      for (int j = 2; j <= amax; ++j) pt.set(VarId::a(j), a[j - 2]);
      Rat got = nimmo_eval(l.parts(), x, a);
      Rat want = eval_at(q, pt);
      bool ok = got == want;
      run.expect(ok, "nimmo " + lam(l) + " point " + std::to_string(p), ok ? "" : want.get_str(),
                 ok ? "" : got.get_str());
    }
  }
}

inline void pieri(SuiteRun& run, int n, TableCache&, const CheckOptions&) {
  QContext ctx{n};
  for (const auto& l : enumerate(n))
    run.guarded("pieri " + lam(l), [&] { run.expect_zero(pieri_defect(l.parts(), ctx), "pieri " + lam(l)); });
}

inline void genfun(SuiteRun& run, int n, TableCache&, const CheckOptions&) {
  auto defects = genfun_defects(QContext{n}, 2 * n);
  for (std::size_t k = 0; k < defects.size(); ++k) run.expect_zero(defects[k], "z^" + std::to_string(k));
}

inline void rectangle(SuiteRun& run, int n, TableCache&, const CheckOptions&) {
  QContext ctx{n};
  for (int k = 2; k <= n; ++k)
    for (int l = 1; l < k; ++l)
      run.expect_zero(rectangle_defect(k, l, ctx), "rectangle k=" + std::to_string(k) + " l=" + std::to_string(l));
}

inline void square(SuiteRun& run, int n, TableCache&, const CheckOptions&) {
  QContext ctx{n};
  for (int k = 1; k <= n; ++k) run.expect_zero(square_relation(k, ctx), "square k=" + std::to_string(k));
}

/// Strict partitions outside SP_n with largest part <= n+2 and at most n+1 parts.
inline std::vector<std::vector<int>> outside_shapes(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned s = 1; s < (1u << (n + 2)); ++s) {
    std::vector<int> parts;
    for (int v = n + 2; v >= 1; --v)
      if (s & (1u << (v - 1))) parts.push_back(v);
    if (parts[0] > n && int(parts.size()) <= n + 1) out.push_back(parts);
  }
  return out;
}

inline void vanishing(SuiteRun& run, int n, TableCache& cache, const CheckOptions&) {
  auto shapes = outside_shapes(n);
  for (const auto& mu : enumerate(n)) {
    auto family = fixed_point_family(mu);
    for (const auto& p : shapes)
      run.expect_zero(family(p), "Q" + StrictPartition(n + 2, p).str() + " at " + lam(mu));
  }
  // Bruhat vanishing, nonzero diagonal and degrees of the table itself.
  const auto& t = cache.table(n);
  for (int li = 0; li < t.size(); ++li)
    for (int mi = 0; mi < t.size(); ++mi) {
      const auto& l = t.index()[li];
      const auto& m = t.index()[mi];
      const Poly& e = t.at(li, mi);
      std::string inst = "entry " + lam(l) + " at " + lam(m);
      if (!contains(l, m)) run.expect_zero(e, inst + " vanishes");
      if (li == mi) run.expect(!e.is_zero(), inst + " nonzero", "nonzero", "0");
      if (l.empty()) run.expect_eq(1, e, inst);
      run.expect(e.is_zero() || (e.is_homogeneous(l.size())), inst + " degree",
                 std::to_string(l.size()), std::to_string(e.degree()));
    }
}

inline void giambelli(SuiteRun& run, int n, TableCache& cache, const CheckOptions&) {
  const auto& t = cache.table(n);
  for (const auto& l : t.index()) run.expect(giambelli_check(l, t), "giambelli " + lam(l));
}

inline void structure(SuiteRun& run, int n, TableCache& cache, const CheckOptions&) {
  const auto& t = cache.table(n);
  const StructureConstants* sc = nullptr;
  run.guarded("build", [&] { sc = &cache.constants(n); });
  if (!sc) return;
  const auto& idx = t.index();
  for (int wi = 0; wi < t.size(); ++wi)
    for (int vi = 0; vi < t.size(); ++vi) {
      std::string pair = lam(idx[wi]) + "*" + lam(idx[vi]);
      if (vi < wi) {
        run.guarded("symmetry " + pair, [&] {
          auto swapped = structure_constants(idx[wi], idx[vi], t);
          for (int ui = 0; ui < t.size(); ++ui)
            run.expect_eq((*sc)(vi, wi, ui), swapped[ui], "symmetry " + pair + " at " + lam(idx[ui]));
        });
      }
      for (int ui = 0; ui < t.size(); ++ui) {
        const Poly& c = (*sc)(wi, vi, ui);
        std::string inst = pair + " -> " + lam(idx[ui]);
        if (c.is_zero()) continue;
        run.expect(contains(idx[wi], idx[ui]) && contains(idx[vi], idx[ui]), "support " + inst);
        int deg = idx[wi].size() + idx[vi].size() - idx[ui].size();
        run.expect(c.is_homogeneous(deg), "degree " + inst, std::to_string(deg),
                   std::to_string(c.degree()));
        run.expect(c.is_constant() == (deg == 0), "classical limit " + inst);
      }
    }
  // Chevalley row: sigma(1) * sigma(lambda).
  const int one = t.position(StrictPartition(n, {1}));
  for (int wi = 0; wi < t.size(); ++wi) {
    const auto& w = idx[wi];
    std::vector<Poly> want(t.size());
    want[wi] = divisor_restriction(w);
    for (const auto& c : covers(w)) want[t.position(c.target)] = long(c.multiplicity);
    for (int ui = 0; ui < t.size(); ++ui)
      run.expect_eq(want[ui], (*sc)(one, wi, ui), "chevalley (1)*" + lam(w) + " -> " + lam(idx[ui]));
  }
  if (n == 2) {
    // sigma(1)^2 = 2 sigma(2) + 2 x_2 sigma(1)
    run.expect_eq(Poly::x(2) * 2, (*sc)(one, one, t.position(StrictPartition(2, {1}))), "sigma(1)^2 at (1)");
    run.expect_eq(2, (*sc)(one, one, t.position(StrictPartition(2, {2}))), "sigma(1)^2 at (2)");
  }
}

inline void positivity(SuiteRun& run, int n, TableCache& cache, const CheckOptions&) {
  const auto& t = cache.table(n);
  const StructureConstants* sc = nullptr;
  run.guarded("build", [&] { sc = &cache.constants(n); });
  if (!sc) return;
  const auto& idx = t.index();
  for (int wi = 0; wi < t.size(); ++wi)
    for (int vi = wi; vi < t.size(); ++vi)
      for (int ui = 0; ui < t.size(); ++ui) {
        const Poly& c = (*sc)(wi, vi, ui);
        if (c.is_zero()) continue;
        auto b = beta_expand(c, n);
        run.expect(b.nonnegative_integral(), "beta " + lam(idx[wi]) + "*" + lam(idx[vi]) + " -> " + lam(idx[ui]),
                   "nonnegative integers", b.str());
      }
  for (int li = 0; li < t.size(); ++li) {
    auto b = beta_expand(t.at(li, li), n);
    run.expect(b.nonnegative_integral(), "beta diagonal " + lam(idx[li]), "nonnegative integers", b.str());
  }
}

inline void presentation(SuiteRun& run, int n, TableCache& cache, const CheckOptions& opt) {
  const auto& t = cache.table(n);
  for (int k = 1; k <= n; ++k) {
    auto rel = relation_X(k, k, n);
    long steps = 0;
    auto nf = normal_form(rel, n, &steps);
    run.expect(nf.is_zero(), "normal form X_{" + std::to_string(k) + "," + std::to_string(k) + "}", "0", nf.str());
    for (const auto& v : phi_vector(rel, t))
      run.expect_zero(v, "phi X_{" + std::to_string(k) + "," + std::to_string(k) + "}");
  }
  const auto& pres = Presentation::get(n);
  run.expect(pres.unitriangular(), "pfaffians unitriangular over strict monomials");
  for (int li = 0; li < t.size(); ++li) {
    auto v = phi_vector(pres.pfaffian_normal_form(li), t);
    for (int mi = 0; mi < t.size(); ++mi)
      run.expect_eq(t.at(li, mi), v[mi], "phi X" + lam(t.index()[li]) + " at " + lam(t.index()[mi]));
  }
  Sampler sampler(opt.seed, "presentation", n);
  int rank = strict_monomial_rank(t, sampler.distinct(n));
  run.expect(rank == t.size(), "strict monomial rank", std::to_string(t.size()), std::to_string(rank));
  if (n <= 3) {
    const auto& sc = cache.constants(n);
    for (int wi = 0; wi < t.size(); ++wi)
      for (int vi = wi; vi < t.size(); ++vi) {
        auto coords = pres.product(wi, vi);
        for (int ui = 0; ui < t.size(); ++ui)
          run.expect_eq(sc(wi, vi, ui), coords[ui],
                        "product " + lam(t.index()[wi]) + "*" + lam(t.index()[vi]) + " -> " + lam(t.index()[ui]));
      }
  }
}

}  // namespace suites

using SuiteFn = void (*)(SuiteRun&, int, TableCache&, const CheckOptions&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"bijection", suites::bijection},   {"closedforms", suites::closedforms}, {"recurrence", suites::recurrence},
      {"oracle", suites::oracle},         {"pieri", suites::pieri},             {"genfun", suites::genfun},
      {"rectangle", suites::rectangle},   {"square", suites::square},           {"vanishing", suites::vanishing},
      {"giambelli", suites::giambelli},   {"structure", suites::structure},     {"positivity", suites::positivity},
      {"presentation", suites::presentation},
  };
  return r;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_registry()) names.push_back(name);
  return names;
}

/// Runs one suite (or "all") for every n' in 1..n.
inline Json run_checks(const std::string& suite, int n, const CheckOptions& opt) {
  std::vector<std::pair<std::string, SuiteFn>> selected;
  for (const auto& entry : suite_registry())
    if (suite == "all" || suite == entry.first) selected.push_back(entry);
  if (selected.empty()) throw std::invalid_argument("unknown suite: " + suite);
  TableCache cache(opt.parallelism);
  Json runs = Json::array();
  Json failures = Json::array();
  bool passed = true;
  for (const auto& [name, fn] : selected)
    for (int m = 1; m <= n; ++m) {
      SuiteRun run(name, m);
      run.guarded(name, [&] { fn(run, m, cache, opt); });
      Json r = run.report();
      passed = passed && run.passed();
      for (const auto& f : r["failures"]) failures.push_back(f);
      r.erase("failures");
      runs.push_back(std::move(r));
    }
  return {{"schema", "lgschub/1"},
          {"command", "check"},
          {"suite", suite},
          {"n", n},
          {"seed", opt.seed},
          {"points", opt.points},
          {"passed", passed},
          {"runs", runs},
          {"failures", failures}};
}

}  // namespace lgschub
