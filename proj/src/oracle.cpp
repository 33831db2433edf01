#include "sset/oracle.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace sset {

namespace {

// Maps S -> X are determined by the images of the maximal cells. Cells are
// visited by decreasing dimension; each assignment is pushed down to every
// face, so only cells not yet forced by a larger one are branched on.
class MapSearch {
 public:
  MapSearch(const SimplicialSet& S, const SimplicialSet& X, std::uint64_t budget)
      : S_(S), X_(X), budget_(budget), value_(S.size()) {
    for (CellId c = 0; c < S.size(); ++c)
      order_.push_back(c);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](CellId a, CellId b) { return S.dim(a) > S.dim(b); });
    for (int d = 0; d <= S.dimension(); ++d)
      candidates_.push_back(simplices_of_degree(X, static_cast<Degree>(d)));
  }

  std::uint64_t run() {
    search(0);
    return count_;
  }

 private:
  void search(std::size_t pos) {
    while (pos < order_.size() && value_[order_[pos]])
      ++pos;
    if (pos == order_.size()) {
      ++count_;
      return;
    }
    const CellId c = order_[pos];
    for (const FormalSimplex& x : candidates_[S_.dim(c)]) {
      if (++nodes_ > budget_)
        throw BudgetExceeded("brute-force search exceeded its node budget");
      const std::size_t mark = trail_.size();
      if (assign(c, x))
        search(pos + 1);
      undo(mark);
    }
  }

  bool assign(CellId c, const FormalSimplex& x) {
    if (value_[c])
      return *value_[c] == x;
    value_[c] = x;
    trail_.push_back(c);
    const auto faces = S_.faces(c);
    for (Degree i = 0; i < faces.size(); ++i) {
      const FormalSimplex target = face(X_, x, i);
      const MonotoneMap& tau = faces[i].epi;
      // Any section of tau recovers the value on the generator.
      std::vector<Degree> section(tau.target_degree() + 1, 0);
      for (Degree j = tau.source_degree() + 1; j-- > 0;)
        section[tau(j)] = j;
      const FormalSimplex g = apply_map(X_, MonotoneMap(section, tau.source_degree()), target);
      if (apply_map(X_, tau, g) != target)
        return false;
      if (!assign(faces[i].generator, g))
        return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()].reset();
      trail_.pop_back();
    }
  }

  const SimplicialSet& S_;
  const SimplicialSet& X_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  std::vector<CellId> order_;
  std::vector<std::vector<FormalSimplex>> candidates_;
  std::vector<std::optional<FormalSimplex>> value_;
  std::vector<CellId> trail_;
};

}  // namespace

std::uint64_t brute_force_hom_count(const SimplicialSet& U, const SimplicialSet& X, Degree p,
                                    std::uint64_t node_budget) {
  const SimplicialSet S = product(delta(p), U);
  if (S.empty())
    return 1;
  return MapSearch(S, X, node_budget).run();
}

std::uint64_t brute_force_hom_count(Degree n, const SimplicialSet& X, Degree p,
                                    std::uint64_t node_budget) {
  return brute_force_hom_count(delta(n), X, p, node_budget);
}

std::uint64_t count_monotone_grid_maps(Degree p, Degree n, Degree q) {
  // Fill column by column; each cell must dominate its left and lower neighbours.
  std::vector<Degree> f((p + 1) * (n + 1));
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == f.size()) {
      ++count;
      return;
    }
    const Degree i = static_cast<Degree>(k / (n + 1));
    const Degree j = static_cast<Degree>(k % (n + 1));
    Degree lo = 0;
    if (i > 0)
      lo = std::max(lo, f[k - (n + 1)]);
    if (j > 0)
      lo = std::max(lo, f[k - 1]);
    for (Degree v = lo; v <= q; ++v) {
      f[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace sset
