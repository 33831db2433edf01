// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sset/exhibits.hpp"
#include "sset/hom.hpp"
#include "sset/oracle.hpp"
#include "sset/regularity.hpp"
#include "support.hpp"

using namespace sset;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checks = 0;
};

// Records the first failure and keeps counting.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++out_.checks;
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.detail = what;
    }
  }
  void note(const std::string& s) {
    if (out_.pass)
      out_.detail = s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

SimplicialSet delta3_mod_boundary() { return delta_quotient(3, facets_opposite(3, {0, 1, 2, 3})); }

Degree dim_of(const SimplicialSet& X) { return static_cast<Degree>(std::max(0, X.dimension())); }

// Regular targets for the exhaustive Hom criteria.
std::vector<testing::Named> hom_corpus() {
  auto out = testing::regular_hom_corpus();
  out.push_back({"delta 3", delta(3)});
  out.push_back({"delta 3 / {0 3}", delta_quotient(3, {{0, 3}})});
  out.push_back({"boundary 3", boundary_delta(3)});
  out.push_back({"horn 3 1", horn(3, 1)});
  out.push_back({"nerve a<b<c<d, e<d", nerve_poset(testing::chain_poset(
                                            {"a", "b", "c", "d", "e"}, {{0, 1}, {1, 2}, {2, 3}, {4, 3}}))});
  return out;
}

const std::vector<CorpusEntry>& big_corpus() {
  static const std::vector<CorpusEntry> c = corpus(2024, 200);
  return c;
}

// ---------------------------------------------------------------------------

Outcome tight_dimensions() {
  Tally t;
  const struct {
    Degree n, q;
    long long expected;
  } cases[] = {{1, 1, 2}, {2, 1, 3}, {1, 2, 4}, {2, 2, 6}};
  std::ostringstream got;
  for (const auto& c : cases) {
    const HomDimension d = dim_hom(delta(c.q), c.n);
    got << d.to_string() << " ";
    t.expect(d.exact && d.value == c.expected,
             "dim Hom(Δ^" + std::to_string(c.n) + ", Δ^" + std::to_string(c.q) + ") = " + d.to_string());
  }
  t.note("dims " + got.str());
  return t.result();
}

Outcome dimension_bound() {
  Tally t;
  std::size_t sets = 0;
  for (const auto& [name, X] : hom_corpus()) {
    if (!is_regular(X).verdict) {
      t.expect(false, name + " is not regular");
      continue;
    }
    ++sets;
    const Degree q = dim_of(X);
    for (Degree n = 1; n <= 2; ++n) {
      const HomDimension d = dim_hom(X, n);
      t.expect(d.exact && d.value <= static_cast<long long>((n + 1) * q),
               name + " n=" + std::to_string(n) + ": dim " + d.to_string());
      // Independently of the search: nothing nondegenerate one degree above.
      bool all_degenerate = true;
      for_each_hom_simplex(X, n, (n + 1) * q + 1, [&](const HomSimplex& f) {
        all_degenerate = is_degenerate_hom(X, f);
        return all_degenerate;
      });
      t.expect(all_degenerate, name + " n=" + std::to_string(n) + ": nondegenerate above the bound");
    }
  }
  t.note(std::to_string(sets) + " regular sets, n in {1,2}");
  return t.result();
}

Outcome nondegenerate_tower() {
  Tally t;
  for (Degree p = 4; p <= 12; ++p) {
    const LurieFamily L = lurie_family(3, 1, facets_opposite(3, {0, 1, 2, 3}), p);
    t.expect(is_compatible(L.quotient, L.simplex), "q=3 p=" + std::to_string(p) + " incompatible");
    t.expect(!is_degenerate_hom(L.quotient, L.simplex), "q=3 p=" + std::to_string(p) + " degenerate");
    t.expect(!hom1_is_degenerate(L.quotient, L.components), "q=3 p=" + std::to_string(p) + " degenerate");
  }
  for (Degree p = 5; p <= 8; ++p) {
    const LurieFamily L = lurie_family(4, 1, facets_opposite(4, {1, 2}), p);
    t.expect(is_compatible(L.quotient, L.simplex), "q=4 p=" + std::to_string(p) + " incompatible");
    t.expect(!is_degenerate_hom(L.quotient, L.simplex), "q=4 p=" + std::to_string(p) + " degenerate");
  }
  t.note("nondegenerate up to p=12 (q=3) and p=8 (q=4)");
  return t.result();
}

Outcome oracle_equivalence() {
  Tally t;
  std::size_t instances = 0;
  for (const CorpusEntry& e : big_corpus())
    for (Degree n = 0; n <= 2; ++n)
      for (Degree p = 0; p <= 2; ++p) {
        const auto engine = count_hom_simplices(e.set, n, p);
        const auto oracle = brute_force_hom_count(n, e.set, p);
        ++instances;
        t.expect(engine == oracle, e.name + " n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                       ": " + std::to_string(engine) + " vs " + std::to_string(oracle));
      }
  for (Degree q = 0; q <= 3; ++q)
    for (Degree n = 0; n <= 6; ++n)
      for (Degree p = 0; p + n <= 6; ++p) {
        const auto grid = count_monotone_grid_maps(p, n, q);
        ++instances;
        t.expect(count_hom_simplices(delta(q), n, p) == grid && brute_force_hom_count(n, delta(q), p) == grid,
                 "Δ^" + std::to_string(q) + " n=" + std::to_string(n) + " p=" + std::to_string(p));
      }
  t.note(std::to_string(instances) + " instances");
  return t.result();
}

Outcome almost_degenerate_equivalence() {
  Tally t;
  std::uint64_t simplices = 0;
  for (const auto& [name, X] : hom_corpus())
    for (Degree n = 1; n <= 2; ++n)
      for (Degree p = 1; p <= (n + 1) * dim_of(X); ++p)
        for_each_hom_simplex(X, n, p, [&](const HomSimplex& f) {
          ++simplices;
          const bool almost = almost_degenerate_column(X, f).has_value();
          t.expect(almost == is_degenerate_hom(X, f), name + " n=" + std::to_string(n) + " p=" + std::to_string(p));
          return true;
        });
  const SimplicialSet Y = delta3_mod_boundary();
  bool exhibited = false;
  for_each_hom_simplex(Y, 1, 4, [&](const HomSimplex& f) {
    exhibited = almost_degenerate_column(Y, f).has_value() && !is_degenerate_hom(Y, f);
    return !exhibited;
  });
  t.expect(exhibited, "no almost-degenerate nondegenerate simplex into Δ^3/∂Δ^3");
  t.note(std::to_string(simplices) + " simplices agree; counterexample found in Δ^3/∂Δ^3");
  return t.result();
}

Outcome pr_characterizations() {
  Tally t;
  for (const CorpusEntry& e : big_corpus()) {
    const SimplicialSet& X = e.set;
    const Degree q = dim_of(X);
    const bool strong = is_strongly_regular(X).verdict;
    const bool p1 = satisfies_pr(X, 1, q + 3).verdict;
    const bool p2 = satisfies_pr(X, 2, q + 3).verdict;
    const bool p3 = satisfies_pr(X, 3, q + 3).verdict;
    t.expect(!strong || (p1 && p2 && p3), e.name + ": strongly regular without P_r");
    t.expect(!(p1 && p2) || strong, e.name + ": P_1 and P_2 without strong regularity");
    const bool regular = is_regular(X).verdict;
    t.expect(regular == satisfies_pr(X, 1, q + 2).verdict, e.name + ": edge check vs P_1");
    t.expect(regular == satisfies_edge_criterion(X, q + 2).verdict, e.name + ": edge check vs edge criterion");
  }
  for (Degree p = 1; p <= 6; ++p) {
    for (Degree r = 1; r <= p; ++r)
      for (Degree i = 0; i + r <= p; ++i)
        for (Degree k = 0; k < p; ++k) {
          const MonotoneMap lhs = compose(MonotoneMap::codegeneracy(k, p - 1), edge_map(i, r, p));
          const MonotoneMap rhs = k < i       ? edge_map(i - 1, r, p - 1)
                                  : k < i + r ? edge_map(i, r - 1, p - 1)
                                              : edge_map(i, r, p - 1);
          t.expect(lhs == rhs, "degeneracy table");
        }
    for (Degree l = 0; l + 1 <= p; ++l)
      for (Degree k = 0; k <= p + 1; ++k) {
        const MonotoneMap lhs = compose(MonotoneMap::coface(k, p + 1), edge_map(l, 1, p));
        const MonotoneMap rhs = k <= l       ? edge_map(l + 1, 1, p + 1)
                                : k == l + 1 ? edge_map(l, 2, p + 1)
                                             : edge_map(l, 1, p + 1);
        t.expect(lhs == rhs, "face table");
      }
  }
  t.note("200 sets; both tables for p <= 6");
  return t.result();
}

Outcome closure() {
  Tally t;
  std::vector<const CorpusEntry*> regular;
  for (const CorpusEntry& e : big_corpus())
    if (is_regular(e.set).verdict)
      regular.push_back(&e);
  std::size_t built = 0;
  for (std::size_t a = 0; a < regular.size(); ++a) {
    const SimplicialSet& X = regular[a]->set;
    const SimplicialSet& Y = regular[(a * 13 + 5) % regular.size()]->set;
    t.expect(is_regular(disjoint_sum(X, Y)).verdict, "sum " + regular[a]->name);
    ++built;
    if (X.size() * Y.size() <= 400) {
      t.expect(is_regular(product(X, Y)).verdict, "product " + regular[a]->name);
      ++built;
    }
    for (CellId c = 0; c < X.size(); ++c) {
      const std::vector<CellId> g{c};
      t.expect(is_regular(subcomplex(X, g)).verdict, "subcomplex of " + regular[a]->name);
      const std::vector<CellId> h{static_cast<CellId>((c * 7 + 3) % X.size())};
      const std::vector<Subcomplex> parts{Subcomplex::closure(X, g), Subcomplex::closure(X, h)};
      t.expect(is_regular(union_of(X, parts)).verdict, "union in " + regular[a]->name);
      built += 2;
    }
  }
  std::size_t nerves = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    for (const CorpusEntry& e : corpus(seed, 20))
      if (e.name.rfind("nerve", 0) == 0) {
        ++nerves;
        t.expect(is_regular(e.set).verdict, "nerve " + e.name);
      }
  for (Degree k = 1; k <= 3; ++k) {
    ++nerves;
    t.expect(is_regular(nerve_poset(testing::powerset_poset(k))).verdict, "powerset nerve");
  }
  t.note(std::to_string(built) + " constructions, " + std::to_string(nerves) + " nerves");
  return t.result();
}

Outcome hom_regular() {
  Tally t;
  for (const auto& [name, X] : hom_corpus())
    for (Degree n = 1; n <= 2; ++n) {
      const RegularityReport r = hom_is_regular_through(X, n, (n + 1) * dim_of(X));
      t.expect(r.verdict, name + " n=" + std::to_string(n));
    }
  t.note(std::to_string(hom_corpus().size()) + " regular targets, n in {1,2}");
  return t.result();
}

Outcome general_source_bound() {
  Tally t;
  const std::vector<testing::Named> sources{
      {"delta 0", delta(0)},
      {"delta 1", delta(1)},
      {"boundary 2", boundary_delta(2)},
      {"horn 2 1", horn(2, 1)},
      {"delta 1 + delta 1", disjoint_sum(delta(1), delta(1))},
      {"delta 0 + delta 1", disjoint_sum(delta(0), delta(1))},
      {"nerve a<b a<c", nerve_poset(testing::chain_poset({"a", "b", "c"}, {{0, 1}, {0, 2}}))},
  };
  const std::vector<testing::Named> targets{
      {"delta 0", delta(0)},        {"delta 1", delta(1)}, {"delta 2", delta(2)},
      {"delta 2 / {0 2}", delta_quotient(2, {{0, 2}})}, {"boundary 2", boundary_delta(2)},
      {"horn 2 1", horn(2, 1)},
  };
  std::size_t pairs = 0;
  for (const auto& [un, U] : sources) {
    std::size_t positive = 0;
    for (CellId c = 0; c < U.size(); ++c)
      positive += U.dim(c) > 0;
    t.expect(positive <= 3, un + " has too many cells");
    for (const auto& [xn, X] : targets) {
      const auto bound = theorem1bis_bound(U, X);
      const HomDimension d = hom_general_dimension(U, X, static_cast<Degree>(bound + 1), true);
      ++pairs;
      t.expect(d.exact && d.value <= static_cast<long long>(bound),
               "Hom(" + un + ", " + xn + "): " + d.to_string() + " > " + std::to_string(bound));
    }
  }
  t.note(std::to_string(pairs) + " pairs");
  return t.result();
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "tight dimension (n+1)q of Hom(Δ^n, Δ^q)", 60, tight_dimensions},
      {2, "dimension bound for regular targets", 600, dimension_bound},
      {3, "nondegenerate tower in Hom(Δ^1, Δ^q/F)", 60, nondegenerate_tower},
      {4, "path engine agrees with brute force", 600, oracle_equivalence},
      {5, "almost degenerate iff degenerate for regular targets", 600, almost_degenerate_equivalence},
      {6, "P_r characterizations of (strong) regularity", 600, pr_characterizations},
      {7, "closure of regular sets, nerves regular", 600, closure},
      {8, "Hom into a regular set is regular", 600, hom_regular},
      {9, "dimension bound for general sources", 600, general_source_bound},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), 0};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::printf("%s  criterion %d: %s  [%zu checks, %.2f s%s]  %s\n", pass ? "PASS" : "FAIL", c.id, c.title,
                o.checks, secs, in_time ? "" : ", over time limit", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
