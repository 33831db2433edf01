#include "sset/hom.hpp"

#include <algorithm>
#include <unordered_map>

namespace sset {

const FormalSimplex& HomSimplex::at(const LatticePath& a) const {
  return assignment.at(path_catalog(p, n).index_of(a));
}

bool is_compatible(const SimplicialSet& X, const HomSimplex& f) {
  const PathCatalog& cat = path_catalog(f.p, f.n);
  if (f.assignment.size() != cat.size())
    return false;
  for (const auto& s : f.assignment)
    if (s.degree() != f.p + f.n || s.generator >= X.size())
      return false;
  for (const SquareFlip& flip : cat.flips()) {
    const Degree i = flip.face_index();
    if (face(X, f.assignment[flip.lower], i) != face(X, f.assignment[flip.upper], i))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Simplices of one degree with their faces indexed into the degree below, and
// for every face position an inverted index from face value to candidates.
class CandidateTable {
 public:
  CandidateTable(const SimplicialSet& X, Degree d) : degree_(d), simplices_(simplices_of_degree(X, d)) {
    if (d == 0)
      return;
    const auto lower = simplices_of_degree(X, d - 1);
    std::unordered_map<FormalSimplex, std::uint32_t> lower_index;
    for (std::uint32_t k = 0; k < lower.size(); ++k)
      lower_index.emplace(lower[k], k);
    faces_.resize(simplices_.size() * (d + 1));
    buckets_.assign(d + 1, std::vector<std::vector<std::uint32_t>>(lower.size()));
    for (std::uint32_t c = 0; c < simplices_.size(); ++c) {
      for (Degree i = 0; i <= d; ++i) {
        const std::uint32_t fi = lower_index.at(sset::face(X, simplices_[c], i));
        faces_[c * (d + 1) + i] = fi;
        buckets_[i][fi].push_back(c);
      }
    }
  }

  std::size_t size() const { return simplices_.size(); }
  const FormalSimplex& simplex(std::uint32_t c) const { return simplices_[c]; }
  std::uint32_t face(std::uint32_t c, Degree i) const { return faces_[c * (degree_ + 1) + i]; }
  const std::vector<std::uint32_t>& with_face(Degree i, std::uint32_t f) const {
    return buckets_[i][f];
  }

 private:
  Degree degree_;
  std::vector<FormalSimplex> simplices_;
  std::vector<std::uint32_t> faces_;
  std::vector<std::vector<std::vector<std::uint32_t>>> buckets_;
};

class HomSearch {
 public:
  HomSearch(const SimplicialSet& X, Degree n, Degree p)
      : n_(n), p_(p), catalog_(path_catalog(p, n)), table_(X, p + n) {
    constraints_.resize(catalog_.size());
    for (const SquareFlip& flip : catalog_.flips())
      constraints_[flip.upper].push_back({flip.lower, flip.face_index()});
    choice_.assign(catalog_.size(), 0);
    all_.resize(table_.size());
    for (std::uint32_t c = 0; c < all_.size(); ++c)
      all_[c] = c;
  }

  // leaf(choice) returns false to stop.
  template <typename Leaf>
  void run(Leaf&& leaf) {
    stopped_ = false;
    descend(0, leaf);
  }

  HomSimplex materialize() const {
    HomSimplex f{p_, n_, {}};
    f.assignment.reserve(choice_.size());
    for (std::uint32_t c : choice_)
      f.assignment.push_back(table_.simplex(c));
    return f;
  }

 private:
  struct Constraint {
    std::size_t earlier;
    Degree face;
  };

  template <typename Leaf>
  void descend(std::size_t a, Leaf& leaf) {
    if (a == choice_.size()) {
      if (!leaf())
        stopped_ = true;
      return;
    }
    const auto& cons = constraints_[a];
    const std::vector<std::uint32_t>* pool = &all_;
    if (!cons.empty())
      pool = &table_.with_face(cons[0].face, table_.face(choice_[cons[0].earlier], cons[0].face));
    for (std::uint32_t c : *pool) {
      bool ok = true;
      for (std::size_t k = 1; k < cons.size() && ok; ++k)
        ok = table_.face(c, cons[k].face) == table_.face(choice_[cons[k].earlier], cons[k].face);
      if (!ok)
        continue;
      choice_[a] = c;
      descend(a + 1, leaf);
      if (stopped_)
        return;
    }
  }

  Degree n_, p_;
  const PathCatalog& catalog_;
  CandidateTable table_;
  std::vector<std::vector<Constraint>> constraints_;
  std::vector<std::uint32_t> choice_;
  std::vector<std::uint32_t> all_;
  bool stopped_ = false;
};

}  // namespace

void for_each_hom_simplex(const SimplicialSet& X, Degree n, Degree p,
                          const std::function<bool(const HomSimplex&)>& visit) {
  if (X.empty())
    return;
  HomSearch search(X, n, p);
  search.run([&] { return visit(search.materialize()); });
}

std::vector<HomSimplex> enumerate_hom_simplices(const SimplicialSet& X, Degree n, Degree p) {
  std::vector<HomSimplex> out;
  for_each_hom_simplex(X, n, p, [&](const HomSimplex& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::uint64_t count_hom_simplices(const SimplicialSet& X, Degree n, Degree p) {
  if (X.empty())
    return 0;
  std::uint64_t count = 0;
  HomSearch search(X, n, p);
  search.run([&] {
    ++count;
    return true;
  });
  return count;
}

// ---------------------------------------------------------------------------
// Simplicial structure

HomSimplex hom_pullback(const SimplicialSet& X, const HomSimplex& f, const MonotoneMap& theta,
                        const MonotoneMap& mu) {
  if (theta.target_degree() != f.p || mu.target_degree() != f.n)
    throw std::invalid_argument("reindexing maps do not land in [" + std::to_string(f.p) + "] x [" +
                                std::to_string(f.n) + "]");
  const Degree p2 = theta.source_degree(), n2 = mu.source_degree();
  const PathCatalog& src = path_catalog(p2, n2);
  const PathCatalog& dst = path_catalog(f.p, f.n);
  HomSimplex out{p2, n2, {}};
  out.assignment.reserve(src.size());
  std::vector<GridPoint> chain(p2 + n2 + 1);
  std::vector<Degree> psi(p2 + n2 + 1);
  for (const LatticePath& a2 : src.paths()) {
    for (Degree s = 0; s <= p2 + n2; ++s) {
      const GridPoint q = a2.point(s);
      chain[s] = {theta(q.x), mu(q.y)};
      psi[s] = chain[s].x + chain[s].y;
    }
    const LatticePath a = dst.least_path_through(chain);
    out.assignment.push_back(apply_map(X, MonotoneMap(psi, f.p + f.n), f.assignment[dst.index_of(a)]));
  }
  return out;
}

HomSimplex hom_reindex(const SimplicialSet& X, const HomSimplex& f, const MonotoneMap& theta) {
  return hom_pullback(X, f, theta, MonotoneMap::identity(f.n));
}

HomSimplex hom_face(const SimplicialSet& X, const HomSimplex& f, Degree i) {
  if (f.p == 0 || i > f.p)
    throw std::invalid_argument("face " + std::to_string(i) + " of a " + std::to_string(f.p) +
                                "-simplex");
  return hom_reindex(X, f, MonotoneMap::coface(i, f.p));
}

HomSimplex hom_degeneracy(const SimplicialSet& X, const HomSimplex& f, Degree k) {
  if (k > f.p)
    throw std::invalid_argument("degeneracy " + std::to_string(k) + " of a " +
                                std::to_string(f.p) + "-simplex");
  return hom_reindex(X, f, MonotoneMap::codegeneracy(k, f.p));
}

FormalSimplex restrict_to_segment(const SimplicialSet& X, const HomSimplex& f, GridPoint a,
                                  GridPoint b) {
  if (a.x > b.x || a.y > b.y || a == b)
    throw std::invalid_argument("segment endpoints must increase");
  const PathCatalog& cat = path_catalog(f.p, f.n);
  const LatticePath path = cat.least_path_through({a, b});
  return apply_map(X, MonotoneMap({a.x + a.y, b.x + b.y}, f.p + f.n),
                   f.assignment[cat.index_of(path)]);
}

FormalSimplex restrict_to_point(const SimplicialSet& X, const HomSimplex& f, GridPoint q) {
  const PathCatalog& cat = path_catalog(f.p, f.n);
  const LatticePath path = cat.least_path_through({q});
  return apply_map(X, MonotoneMap({q.x + q.y}, f.p + f.n), f.assignment[cat.index_of(path)]);
}

// ---------------------------------------------------------------------------
// Degeneracy

bool almost_degenerate_at(const SimplicialSet& X, const HomSimplex& f, Degree k) {
  if (k >= f.p)
    throw std::invalid_argument("column " + std::to_string(k) + " out of range");
  for (Degree j = 0; j <= f.n; ++j)
    if (!is_degenerate(restrict_to_segment(X, f, {k, j}, {k + 1, j})))
      return false;
  return true;
}

std::optional<Degree> almost_degenerate_column(const SimplicialSet& X, const HomSimplex& f) {
  for (Degree k = 0; k < f.p; ++k)
    if (almost_degenerate_at(X, f, k))
      return k;
  return std::nullopt;
}

namespace {

// Height at which m crosses from column x to x + 1.
Degree crossing_height(const LatticePath& m, Degree x) {
  for (Degree s = 0; s < m.length(); ++s)
    if (!m.vertical(s) && m.point(s).x == x)
      return m.point(s).y;
  throw std::logic_error("path never leaves column " + std::to_string(x));
}

}  // namespace

HomSimplex lemma4_witness(const SimplicialSet& X, const HomSimplex& f, Degree k) {
  if (!almost_degenerate_at(X, f, k))
    throw std::invalid_argument("simplex is not " + std::to_string(k) + "-almost-degenerate");
  const Degree p = f.p, n = f.n;
  const PathCatalog& smaller = path_catalog(p - 1, n);
  HomSimplex g{p - 1, n, {}};
  g.assignment.reserve(smaller.size());
  for (const LatticePath& m : smaller.paths()) {
    // m climbs column k from (k, alpha) to (k, beta); inserting an H step at
    // (k, t) gives the path e + b(alpha, t, beta) + c of the larger grid.
    const Degree alpha = k == 0 ? 0 : crossing_height(m, k - 1);
    const Degree beta = k + 1 == p ? n : crossing_height(m, k);
    const FormalSimplex y = face(X, f.at(m.insert_horizontal(k + beta)), k + beta + 1);
    for (Degree t = alpha; t <= beta; ++t) {
      const FormalSimplex& actual = f.at(m.insert_horizontal(k + t));
      if (actual != degeneracy(X, y, k + t))
        throw RegularityViolation("simplex on path " + m.insert_horizontal(k + t).word() +
                                      " is not s_" + std::to_string(k + t) + " of the witness",
                                  actual);
    }
    g.assignment.push_back(y);
  }
  for (const SquareFlip& flip : smaller.flips()) {
    const Degree i = flip.face_index();
    if (face(X, g.assignment[flip.lower], i) != face(X, g.assignment[flip.upper], i))
      throw RegularityViolation("witness is not a compatible family", g.assignment[flip.lower]);
  }
  return g;
}

bool is_degenerate_hom(const SimplicialSet& X, const HomSimplex& f) {
  for (Degree k = 0; k < f.p; ++k)
    if (hom_degeneracy(X, hom_face(X, f, k), k) == f)
      return true;
  return false;
}

bool is_degenerate_checked(const SimplicialSet& X, const HomSimplex& f, bool x_regular) {
  const bool generic = is_degenerate_hom(X, f);
  if (x_regular && generic != almost_degenerate_column(X, f).has_value())
    throw std::logic_error("degeneracy and almost-degeneracy disagree over a regular set");
  return generic;
}

std::string HomDimension::to_string() const {
  return (exact ? "" : "≥ ") + std::to_string(value);
}

namespace {

// s_k g is always k-almost-degenerate, so only those k need the round trip.
bool is_degenerate_filtered(const SimplicialSet& X, const HomSimplex& f) {
  for (Degree k = 0; k < f.p; ++k)
    if (almost_degenerate_at(X, f, k) && hom_degeneracy(X, hom_face(X, f, k), k) == f)
      return true;
  return false;
}

}  // namespace

std::optional<HomSimplex> find_nondegenerate(const SimplicialSet& X, Degree n, Degree p,
                                             bool x_regular) {
  std::optional<HomSimplex> found;
  for_each_hom_simplex(X, n, p, [&](const HomSimplex& f) {
    if (x_regular ? almost_degenerate_column(X, f).has_value() : is_degenerate_filtered(X, f))
      return true;
    found = f;
    return false;
  });
  return found;
}

HomDimension dim_hom(const SimplicialSet& X, Degree n, std::optional<Degree> cap) {
  if (X.empty())
    return {-1, true};
  const bool regular = is_regular(X).verdict;
  if (regular) {
    const auto top = static_cast<Degree>((n + 1) * static_cast<Degree>(X.dimension()));
    const Degree start = cap ? std::min(*cap, top) : top;
    for (Degree p = start + 1; p-- > 0;)
      if (find_nondegenerate(X, n, p, true))
        return {p, !(p == start && start < top)};
    return {-1, true};
  }
  if (!cap)
    throw CapRequired("Hom into a non-regular set needs a degree cap");
  for (Degree p = *cap + 1; p-- > 0;)
    if (find_nondegenerate(X, n, p, false))
      return {p, false};
  return {-1, false};
}

// ---------------------------------------------------------------------------
// General source

namespace {

struct HomSimplexHash {
  std::size_t operator()(const HomSimplex& f) const noexcept {
    std::size_t h = f.p * 131u + f.n;
    for (const auto& s : f.assignment)
      h = h * 1000003u ^ std::hash<FormalSimplex>{}(s);
    return h;
  }
};

struct Layer {
  std::vector<HomSimplex> candidates;
  std::unordered_map<HomSimplex, std::uint32_t, HomSimplexHash> index;
  // faces[c * (d+1) + i]: index of the restriction along the i-th coface, in the layer below.
  std::vector<std::uint32_t> faces;
};

}  // namespace

void for_each_hom_family(const SimplicialSet& U, const SimplicialSet& X, Degree p,
                         const std::function<bool(const HomFamily&)>& visit) {
  const int top = U.dimension();
  if (top < 0) {
    visit(HomFamily{p, {}});
    return;
  }
  std::vector<Layer> layers(static_cast<std::size_t>(top) + 1);
  for (Degree d = 0; d <= static_cast<Degree>(top); ++d) {
    Layer& L = layers[d];
    L.candidates = enumerate_hom_simplices(X, d, p);
    for (std::uint32_t c = 0; c < L.candidates.size(); ++c)
      L.index.emplace(L.candidates[c], c);
    if (d == 0)
      continue;
    L.faces.resize(L.candidates.size() * (d + 1));
    const MonotoneMap id = MonotoneMap::identity(p);
    for (std::uint32_t c = 0; c < L.candidates.size(); ++c)
      for (Degree i = 0; i <= d; ++i)
        L.faces[c * (d + 1) + i] = layers[d - 1].index.at(
            hom_pullback(X, L.candidates[c], id, MonotoneMap::coface(i, d)));
  }

  const MonotoneMap id = MonotoneMap::identity(p);
  std::vector<std::uint32_t> choice(U.size(), 0);
  bool stopped = false;
  auto descend = [&](auto&& self, CellId u) -> void {
    if (u == U.size()) {
      HomFamily fam{p, {}};
      fam.components.reserve(U.size());
      for (CellId v = 0; v < U.size(); ++v)
        fam.components.push_back(layers[U.dim(v)].candidates[choice[v]]);
      if (!visit(fam))
        stopped = true;
      return;
    }
    const Degree d = U.dim(u);
    // Required face restrictions, from the components already chosen.
    std::vector<std::uint32_t> required;
    for (const FormalSimplex& fc : U.faces(u)) {
      const HomSimplex& below = layers[U.dim(fc.generator)].candidates[choice[fc.generator]];
      const HomSimplex r = fc.epi.is_identity() ? below : hom_pullback(X, below, id, fc.epi);
      required.push_back(layers[d - 1].index.at(r));
    }
    const Layer& L = layers[d];
    for (std::uint32_t c = 0; c < L.candidates.size(); ++c) {
      bool ok = true;
      for (Degree i = 0; i < required.size() && ok; ++i)
        ok = L.faces[c * (d + 1) + i] == required[i];
      if (!ok)
        continue;
      choice[u] = c;
      self(self, u + 1);
      if (stopped)
        return;
    }
  };
  descend(descend, 0);
}

std::vector<HomFamily> hom_general(const SimplicialSet& U, const SimplicialSet& X, Degree p) {
  std::vector<HomFamily> out;
  for_each_hom_family(U, X, p, [&](const HomFamily& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::uint64_t count_hom_families(const SimplicialSet& U, const SimplicialSet& X, Degree p) {
  std::uint64_t count = 0;
  for_each_hom_family(U, X, p, [&](const HomFamily&) {
    ++count;
    return true;
  });
  return count;
}

bool is_degenerate_family(const SimplicialSet& X, const HomFamily& f) {
  for (Degree k = 0; k < f.p; ++k) {
    bool all = true;
    for (const HomSimplex& c : f.components) {
      if (hom_degeneracy(X, hom_face(X, c, k), k) != c) {
        all = false;
        break;
      }
    }
    if (all)
      return true;
  }
  return false;
}

HomDimension hom_general_dimension(const SimplicialSet& U, const SimplicialSet& X, Degree limit,
                                   bool stop_at_gap) {
  long long best = -1;
  for (Degree p = 0; p <= limit; ++p) {
    bool found = false;
    for_each_hom_family(U, X, p, [&](const HomFamily& f) {
      found = !is_degenerate_family(X, f);
      return !found;
    });
    if (found) {
      best = p;
    } else if (stop_at_gap) {
      return {best, true};
    }
  }
  return {best, false};
}

std::uint64_t theorem1bis_bound(const SimplicialSet& U, const SimplicialSet& X) {
  const auto q = static_cast<std::uint64_t>(std::max(0, X.dimension()));
  std::uint64_t sum = 0;
  for (CellId u = 0; u < U.size(); ++u)
    sum += (U.dim(u) + 1) * q;
  return sum;
}

RegularityReport hom_is_regular_through(const SimplicialSet& X, Degree n, Degree max_p) {
  RegularityReport report;
  for (Degree p = 1; p <= max_p && report.verdict; ++p) {
    for_each_hom_simplex(X, n, p, [&](const HomSimplex& f) {
      if (is_degenerate_hom(X, f))
        return true;
      for (Degree k = 0; k < p; ++k) {
        const HomSimplex edge = hom_reindex(X, f, edge_map(k, 1, p));
        if (is_degenerate_hom(X, edge)) {
          report = {false, Violation{p, k, std::nullopt}};
          return false;
        }
      }
      return true;
    });
  }
  return report;
}

}  // namespace sset
