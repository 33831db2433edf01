#include "sset/simplicial_set.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace sset {

namespace {

std::atomic<std::uint64_t> next_uid{1};

std::string word_string(const MonotoneMap& epi) {
  std::string s;
  for (Degree i : surjection_to_word(epi).indices)
    s += "s" + std::to_string(i);
  return s;
}

// The surjection [p] -> [k] obtained from psi by ranking its values.
MonotoneMap corestriction(const MonotoneMap& psi, std::uint64_t mask) {
  std::array<Degree, kMaxDegree + 1> values{};
  const Degree p = psi.source_degree();
  for (Degree i = 0; i <= p; ++i) {
    const std::uint64_t below = mask & ((std::uint64_t{1} << psi(i)) - 1);
    values[i] = static_cast<Degree>(std::popcount(below));
  }
  return MonotoneMap(std::span<const Degree>(values.data(), p + 1),
                     static_cast<Degree>(std::popcount(mask) - 1));
}

}  // namespace

std::string FormalSimplex::to_string() const {
  std::string w = word_string(epi);
  return (w.empty() ? "" : w + "·") + "#" + std::to_string(generator);
}

FormalSimplex cell_simplex(CellId c, Degree d) {
  return {MonotoneMap::identity(d), c};
}

SimplicialSet::SimplicialSet() : uid_(next_uid++) {}

int SimplicialSet::dimension() const {
  int d = -1;
  for (const auto& c : cells_)
    d = std::max(d, static_cast<int>(c.dim));
  return d;
}

std::vector<CellId> SimplicialSet::cells_of_dimension(Degree d) const {
  std::vector<CellId> out;
  for (CellId c = 0; c < cells_.size(); ++c)
    if (cells_[c].dim == d)
      out.push_back(c);
  return out;
}

std::size_t SimplicialSet::count_of_dimension(Degree d) const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [d](const Cell& c) { return c.dim == d; }));
}

std::optional<CellId> SimplicialSet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end())
    return std::nullopt;
  return it->second;
}

void SimplicialSetBuilder::check_name(const std::string& name) const {
  if (set_.by_name_.count(name))
    throw SimplicialSetError("duplicate cell name '" + name + "'");
}

CellId SimplicialSetBuilder::add_vertex(std::string name) {
  return add_cell(std::move(name), {});
}

CellId SimplicialSetBuilder::add_cell(std::string name, std::vector<FormalSimplex> faces) {
  check_name(name);
  const auto dim = static_cast<Degree>(faces.empty() ? 0 : faces.size() - 1);
  if (dim > kMaxCellDimension)
    throw SimplicialSetError("cell '" + name + "' has dimension " + std::to_string(dim) +
                             " above the supported maximum");
  const auto id = static_cast<CellId>(set_.cells_.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const FormalSimplex& f = faces[i];
    if (f.generator >= id)
      throw SimplicialSetError("face " + std::to_string(i) + " of '" + name +
                               "' references an unknown cell");
    if (f.degree() + 1 != dim)
      throw SimplicialSetError("face " + std::to_string(i) + " of '" + name +
                               "' has the wrong degree");
    if (!f.epi.is_surjective() || f.epi.target_degree() != set_.cells_[f.generator].dim)
      throw SimplicialSetError("face " + std::to_string(i) + " of '" + name +
                               "' is not in normal form");
  }
  set_.by_name_.emplace(name, id);
  set_.cells_.push_back({dim, std::move(name)});
  set_.faces_.push_back(std::move(faces));
  return id;
}

SimplicialSet SimplicialSetBuilder::build() && {
  SimplicialSet& X = set_;
  X.subfaces_.clear();
  X.subfaces_.reserve(X.cells_.size());
  for (CellId c = 0; c < X.cells_.size(); ++c) {
    const Degree d = X.cells_[c].dim;
    const std::uint64_t full = (std::uint64_t{1} << (d + 1)) - 1;
    std::vector<FormalSimplex> table(full + 1, cell_simplex(c, d));
    // Each mask only needs the tables of lower cells, which are already built.
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      const auto v = static_cast<Degree>(std::countr_one(mask));
      const FormalSimplex& f = X.faces_[c][v];
      const std::uint64_t low = mask & ((std::uint64_t{1} << v) - 1);
      const std::uint64_t high = mask >> (v + 1);
      const std::uint64_t shifted = low | (high << v);
      // mono_mask = d^v o mono_shifted, so X(mono_mask) c = X(mono_shifted)(d_v c).
      const MonotoneMap m = mono_from_mask(shifted, d - 1);
      table[mask] = apply_map(X, m, f);
    }
    X.subfaces_.push_back(std::move(table));
  }
  if (!satisfies_simplicial_identities(X))
    throw SimplicialSetError("face data violates the simplicial identities");
  return std::move(set_);
}

FormalSimplex apply_map(const SimplicialSet& X, const MonotoneMap& phi, const FormalSimplex& x) {
  if (x.degree() != phi.target_degree())
    throw SimplicialSetError("cannot act by " + phi.to_string() + " on a simplex of degree " +
                             std::to_string(x.degree()));
  const MonotoneMap psi = compose(x.epi, phi);
  const std::uint64_t mask = image_mask(psi);
  const MonotoneMap e = corestriction(psi, mask);
  const FormalSimplex& base = X.subface(x.generator, mask);
  return {compose(base.epi, e), base.generator};
}

FormalSimplex face(const SimplicialSet& X, const FormalSimplex& x, Degree i) {
  return apply_map(X, MonotoneMap::coface(i, x.degree()), x);
}

FormalSimplex degeneracy(const SimplicialSet& X, const FormalSimplex& x, Degree i) {
  return apply_map(X, MonotoneMap::codegeneracy(i, x.degree()), x);
}

FormalSimplex elementary_edge(const SimplicialSet& X, const FormalSimplex& x, Degree i) {
  if (x.degree() == 0 || i >= x.degree())
    throw SimplicialSetError("elementary edge " + std::to_string(i) +
                             " out of range for a simplex of degree " +
                             std::to_string(x.degree()));
  return apply_map(X, edge_map(i, 1, x.degree()), x);
}

std::vector<FormalSimplex> simplices_of_degree(const SimplicialSet& X, Degree d) {
  struct Keyed {
    CellId gen;
    SurjectionWord word;
    FormalSimplex simplex;
  };
  std::vector<Keyed> keyed;
  for (CellId c = 0; c < X.size(); ++c) {
    if (X.dim(c) > d)
      continue;
    for (auto& s : all_surjections(d, X.dim(c)))
      keyed.push_back({c, surjection_to_word(s), {s, c}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.gen, a.word) < std::tie(b.gen, b.word);
  });
  std::vector<FormalSimplex> out;
  out.reserve(keyed.size());
  for (auto& k : keyed)
    out.push_back(std::move(k.simplex));
  return out;
}

bool satisfies_simplicial_identities(const SimplicialSet& X) {
  for (CellId c = 0; c < X.size(); ++c) {
    const Degree d = X.dim(c);
    if (d < 2)
      continue;
    const FormalSimplex x = X.simplex(c);
    for (Degree j = 1; j <= d; ++j)
      for (Degree i = 0; i < j; ++i)
        if (face(X, face(X, x, j), i) != face(X, face(X, x, i), j - 1))
          return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Standard simplices

namespace {

std::string vertex_list_name(std::uint64_t mask) {
  std::string s;
  for (Degree v = 0; v < 64; ++v)
    if (mask >> v & 1u)
      s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

// Cells are the nonempty vertex subsets accepted by `keep`, by size then lexicographically.
SimplicialSet delta_like(Degree n, const std::function<bool(std::uint64_t)>& keep) {
  if (n > kMaxCellDimension)
    throw SimplicialSetError("delta(" + std::to_string(n) + ") is too large");
  SimplicialSetBuilder b;
  std::unordered_map<std::uint64_t, CellId> id_of;
  for (Degree size = 1; size <= n + 1; ++size) {
    std::vector<bool> chosen(n + 1, false);
    std::fill(chosen.begin(), chosen.begin() + size, true);
    do {
      std::uint64_t mask = 0;
      for (Degree v = 0; v <= n; ++v)
        if (chosen[v])
          mask |= std::uint64_t{1} << v;
      if (!keep(mask))
        continue;
      std::vector<FormalSimplex> faces;
      if (size > 1) {
        std::uint64_t rest = mask;
        while (rest) {
          const std::uint64_t bit = rest & (~rest + 1);
          rest ^= bit;
          auto it = id_of.find(mask ^ bit);
          if (it == id_of.end())
            throw SimplicialSetError("vertex subsets must be face-closed");
          faces.push_back(cell_simplex(it->second, size - 2));
        }
      }
      id_of.emplace(mask, b.add_cell(vertex_list_name(mask), std::move(faces)));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
  }
  return std::move(b).build();
}

}  // namespace

SimplicialSet delta(Degree n) {
  return delta_like(n, [](std::uint64_t) { return true; });
}

SimplicialSet boundary_delta(Degree n) {
  const std::uint64_t top = (std::uint64_t{1} << (n + 1)) - 1;
  return delta_like(n, [top](std::uint64_t m) { return m != top; });
}

SimplicialSet horn(Degree n, Degree k) {
  if (n < 1 || k > n)
    throw SimplicialSetError("horn(" + std::to_string(n) + "," + std::to_string(k) +
                             ") does not exist");
  const std::uint64_t top = (std::uint64_t{1} << (n + 1)) - 1;
  const std::uint64_t facet = top ^ (std::uint64_t{1} << k);
  return delta_like(n, [top, facet](std::uint64_t m) { return m != top && m != facet; });
}

// ---------------------------------------------------------------------------
// Products

namespace {

struct PairKey {
  MonotoneMap alpha;
  CellId a;
  MonotoneMap beta;
  CellId b;

  friend bool operator<(const PairKey& x, const PairKey& y) {
    if (x.a != y.a)
      return x.a < y.a;
    if (x.b != y.b)
      return x.b < y.b;
    if (auto c = x.alpha <=> y.alpha; c != 0)
      return c < 0;
    return (x.beta <=> y.beta) < 0;
  }
};

std::uint64_t repeat_mask(const MonotoneMap& f) {
  std::uint64_t m = 0;
  for (Degree j = 0; j < f.source_degree(); ++j)
    if (f(j) == f(j + 1))
      m |= std::uint64_t{1} << j;
  return m;
}

// The surjection [r] -> [r - |J|] collapsing each j in J onto j + 1.
MonotoneMap collapse(Degree r, std::uint64_t J) {
  std::array<Degree, kMaxDegree + 1> v{};
  v[0] = 0;
  for (Degree j = 0; j < r; ++j)
    v[j + 1] = v[j] + ((J >> j & 1u) ? 0 : 1);
  return MonotoneMap(std::span<const Degree>(v.data(), r + 1), v[r]);
}

// f = g o collapse(J) for a map f constant across every j in J.
MonotoneMap divide(const MonotoneMap& f, std::uint64_t J) {
  std::vector<Degree> v;
  for (Degree j = 0; j <= f.source_degree(); ++j)
    if (j == 0 || !(J >> (j - 1) & 1u))
      v.push_back(f(j));
  return MonotoneMap(v, f.target_degree());
}

}  // namespace

SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y) {
  SimplicialSetBuilder b;
  std::map<PairKey, CellId> ids;
  const int top = std::max(0, X.dimension()) + std::max(0, Y.dimension());
  if (X.empty() || Y.empty())
    return std::move(b).build();

  for (int r = 0; r <= top; ++r) {
    const auto R = static_cast<Degree>(r);
    for (CellId a = 0; a < X.size(); ++a) {
      for (CellId c = 0; c < Y.size(); ++c) {
        const Degree da = X.dim(a), dc = Y.dim(c);
        if (R < std::max(da, dc) || R > da + dc)
          continue;
        const auto alphas = all_surjections(R, da);
        const auto betas = all_surjections(R, dc);
        for (const auto& alpha : alphas) {
          const std::uint64_t ra = repeat_mask(alpha);
          for (const auto& beta : betas) {
            if (ra & repeat_mask(beta))
              continue;
            std::vector<FormalSimplex> faces;
            if (R > 0) {
              for (Degree i = 0; i <= R; ++i) {
                const FormalSimplex x = face(X, {alpha, a}, i);
                const FormalSimplex y = face(Y, {beta, c}, i);
                const std::uint64_t J = repeat_mask(x.epi) & repeat_mask(y.epi);
                PairKey key{divide(x.epi, J), x.generator, divide(y.epi, J), y.generator};
                auto it = ids.find(key);
                if (it == ids.end())
                  throw SimplicialSetError("product face is not a known cell");
                faces.push_back({collapse(R - 1, J), it->second});
              }
            }
            std::string name = "(";
            std::string wa = word_string(alpha), wc = word_string(beta);
            name += (wa.empty() ? "" : wa + "·") + X.cell(a).name + ", " +
                    (wc.empty() ? "" : wc + "·") + Y.cell(c).name + ")";
            ids.emplace(PairKey{alpha, a, beta, c}, b.add_cell(std::move(name), std::move(faces)));
          }
        }
      }
    }
  }
  return std::move(b).build();
}

SimplicialSet disjoint_sum(const SimplicialSet& X, const SimplicialSet& Y) {
  SimplicialSetBuilder b;
  for (CellId c = 0; c < X.size(); ++c) {
    auto faces = std::vector<FormalSimplex>(X.faces(c).begin(), X.faces(c).end());
    b.add_cell("L." + X.cell(c).name, std::move(faces));
  }
  const auto offset = static_cast<CellId>(X.size());
  for (CellId c = 0; c < Y.size(); ++c) {
    std::vector<FormalSimplex> faces;
    for (const auto& f : Y.faces(c))
      faces.push_back({f.epi, f.generator + offset});
    b.add_cell("R." + Y.cell(c).name, std::move(faces));
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Subcomplexes and quotients

Subcomplex Subcomplex::closure(const SimplicialSet& ambient, std::span<const CellId> generators) {
  std::vector<bool> member(ambient.size(), false);
  std::vector<CellId> stack;
  for (CellId g : generators) {
    if (g >= ambient.size())
      throw SimplicialSetError("cell id " + std::to_string(g) + " out of range");
    stack.push_back(g);
  }
  while (!stack.empty()) {
    CellId c = stack.back();
    stack.pop_back();
    if (member[c])
      continue;
    member[c] = true;
    for (const auto& f : ambient.faces(c))
      stack.push_back(f.generator);
  }
  return Subcomplex(ambient.uid(), std::move(member));
}

Subcomplex Subcomplex::exactly(const SimplicialSet& ambient, std::span<const CellId> cells) {
  std::vector<bool> member(ambient.size(), false);
  for (CellId c : cells) {
    if (c >= ambient.size())
      throw SimplicialSetError("cell id " + std::to_string(c) + " out of range");
    member[c] = true;
  }
  for (CellId c : cells)
    for (const auto& f : ambient.faces(c))
      if (!member[f.generator])
        throw SimplicialSetError("cells are not closed under faces: '" + ambient.cell(c).name +
                                 "' has a face on '" + ambient.cell(f.generator).name + "'");
  return Subcomplex(ambient.uid(), std::move(member));
}

std::vector<CellId> Subcomplex::cells() const {
  std::vector<CellId> out;
  for (CellId c = 0; c < member_.size(); ++c)
    if (member_[c])
      out.push_back(c);
  return out;
}

std::size_t Subcomplex::size() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

Subcomplex Subcomplex::unite(std::span<const Subcomplex> parts) {
  if (parts.empty())
    throw SimplicialSetError("union of no subcomplexes");
  std::vector<bool> member = parts.front().member_;
  for (const auto& s : parts.subspan(1)) {
    if (s.ambient_uid_ != parts.front().ambient_uid_ || s.member_.size() != member.size())
      throw SimplicialSetError("union of subcomplexes of different simplicial sets");
    for (std::size_t c = 0; c < member.size(); ++c)
      if (s.member_[c])
        member[c] = true;
  }
  return Subcomplex(parts.front().ambient_uid_, std::move(member));
}

SimplicialSet restrict_to(const SimplicialSet& X, const Subcomplex& A) {
  if (A.ambient_uid() != X.uid())
    throw SimplicialSetError("subcomplex belongs to a different simplicial set");
  SimplicialSetBuilder b;
  std::vector<CellId> remap(X.size(), 0);
  for (CellId c = 0; c < X.size(); ++c) {
    if (!A.contains(c))
      continue;
    std::vector<FormalSimplex> faces;
    for (const auto& f : X.faces(c))
      faces.push_back({f.epi, remap[f.generator]});
    remap[c] = b.add_cell(X.cell(c).name, std::move(faces));
  }
  return std::move(b).build();
}

SimplicialSet subcomplex(const SimplicialSet& X, std::span<const CellId> generators) {
  return restrict_to(X, Subcomplex::closure(X, generators));
}

SimplicialSet union_of(const SimplicialSet& X, std::span<const Subcomplex> parts) {
  return restrict_to(X, Subcomplex::unite(parts));
}

SimplicialSet quotient(const SimplicialSet& X, const Subcomplex& A) {
  if (A.ambient_uid() != X.uid())
    throw SimplicialSetError("subcomplex belongs to a different simplicial set");
  if (A.empty())
    throw SimplicialSetError("cannot collapse an empty subcomplex");
  std::string star = "*";
  while (true) {
    auto existing = X.find(star);
    if (!existing || A.contains(*existing))
      break;
    star += "'";
  }
  SimplicialSetBuilder b;
  const CellId base = b.add_vertex(star);
  std::vector<CellId> remap(X.size(), base);
  for (CellId c = 0; c < X.size(); ++c) {
    if (A.contains(c))
      continue;
    std::vector<FormalSimplex> faces;
    for (const auto& f : X.faces(c)) {
      if (A.contains(f.generator))
        faces.push_back({MonotoneMap::constant(f.degree(), 0, 0), base});
      else
        faces.push_back({f.epi, remap[f.generator]});
    }
    remap[c] = b.add_cell(X.cell(c).name, std::move(faces));
  }
  return std::move(b).build();
}

SimplicialSet quotient(const SimplicialSet& X, std::span<const CellId> cells) {
  return quotient(X, Subcomplex::exactly(X, cells));
}

// ---------------------------------------------------------------------------
// Nerves

Poset Poset::generated_by(std::vector<std::string> names,
                          std::span<const std::pair<std::size_t, std::size_t>> relations) {
  Poset P;
  const std::size_t m = names.size();
  P.names = std::move(names);
  P.less.assign(m, std::vector<bool>(m, false));
  for (auto [a, b] : relations) {
    if (a >= m || b >= m)
      throw SimplicialSetError("relation refers to an unknown element");
    P.less[a][b] = true;
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (P.less[i][k])
        for (std::size_t j = 0; j < m; ++j)
          if (P.less[k][j])
            P.less[i][j] = true;
  for (std::size_t i = 0; i < m; ++i)
    if (P.less[i][i])
      throw SimplicialSetError("relations contain a cycle through '" + P.names[i] + "'");
  return P;
}

SimplicialSet nerve_poset(const Poset& order) {
  const std::size_t m = order.size();
  if (order.less.size() != m)
    throw SimplicialSetError("order relation has the wrong shape");
  for (std::size_t i = 0; i < m; ++i) {
    if (order.less[i].size() != m)
      throw SimplicialSetError("order relation has the wrong shape");
    if (order.less[i][i])
      throw SimplicialSetError("order is not irreflexive at '" + order.names[i] + "'");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (order.less[i][j] && order.less[j][k] && !order.less[i][k])
          throw SimplicialSetError("order is not transitive");

  SimplicialSetBuilder b;
  std::map<std::vector<std::size_t>, CellId> ids;
  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t i = 0; i < m; ++i)
    layer.push_back({i});
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    std::vector<std::vector<std::size_t>> next;
    for (const auto& chain : layer) {
      std::vector<FormalSimplex> faces;
      const auto q = static_cast<Degree>(chain.size() - 1);
      if (q > 0) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
          auto f = chain;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          faces.push_back(cell_simplex(ids.at(f), q - 1));
        }
      }
      std::string name;
      for (std::size_t e : chain)
        name += (name.empty() ? "" : " ") + order.names[e];
      ids.emplace(chain, b.add_cell(std::move(name), std::move(faces)));
      for (std::size_t e = 0; e < m; ++e) {
        if (order.less[chain.back()][e]) {
          auto longer = chain;
          longer.push_back(e);
          next.push_back(std::move(longer));
        }
      }
    }
    layer = std::move(next);
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

class IsoSearch {
 public:
  IsoSearch(const SimplicialSet& X, const SimplicialSet& Y)
      : X_(X), Y_(Y), to_(X.size(), kNone), from_(Y.size(), kNone) {
    for (CellId c = 0; c < X.size(); ++c)
      order_.push_back(c);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](CellId a, CellId b) { return X.dim(a) > X.dim(b); });
    sig_x_ = signatures(X);
    sig_y_ = signatures(Y);
  }

  bool run() { return search(0); }

 private:
  static constexpr CellId kNone = ~CellId{0};

  // Dimension plus how often the cell appears as a face generator, per epi.
  static std::vector<std::vector<std::string>> signatures(const SimplicialSet& S) {
    std::vector<std::vector<std::string>> sig(S.size());
    for (CellId c = 0; c < S.size(); ++c) {
      sig[c].push_back("d" + std::to_string(S.dim(c)));
      for (Degree i = 0; i < S.faces(c).size(); ++i)
        sig[S.faces(c)[i].generator].push_back(std::to_string(S.dim(c)) + ":" +
                                                std::to_string(i) + ":" +
                                                S.faces(c)[i].epi.to_string());
    }
    for (auto& s : sig)
      std::sort(s.begin() + 1, s.end());
    return sig;
  }

  bool bind(CellId x, CellId y, std::vector<CellId>& trail) {
    if (to_[x] != kNone)
      return to_[x] == y;
    if (from_[y] != kNone || sig_x_[x] != sig_y_[y])
      return false;
    to_[x] = y;
    from_[y] = x;
    trail.push_back(x);
    const auto fx = X_.faces(x);
    const auto fy = Y_.faces(y);
    for (std::size_t i = 0; i < fx.size(); ++i) {
      if (fx[i].epi != fy[i].epi)
        return false;
      if (!bind(fx[i].generator, fy[i].generator, trail))
        return false;
    }
    return true;
  }

  void undo(std::vector<CellId>& trail) {
    for (CellId x : trail) {
      from_[to_[x]] = kNone;
      to_[x] = kNone;
    }
    trail.clear();
  }

  bool search(std::size_t k) {
    while (k < order_.size() && to_[order_[k]] != kNone)
      ++k;
    if (k == order_.size())
      return true;
    const CellId x = order_[k];
    for (CellId y = 0; y < Y_.size(); ++y) {
      if (from_[y] != kNone)
        continue;
      std::vector<CellId> trail;
      if (bind(x, y, trail) && search(k + 1))
        return true;
      undo(trail);
    }
    return false;
  }

  const SimplicialSet& X_;
  const SimplicialSet& Y_;
  std::vector<CellId> to_, from_, order_;
  std::vector<std::vector<std::string>> sig_x_, sig_y_;
};

}  // namespace

bool isomorphic(const SimplicialSet& X, const SimplicialSet& Y) {
  if (X.size() != Y.size() || X.dimension() != Y.dimension())
    return false;
  for (int d = 0; d <= X.dimension(); ++d)
    if (X.count_of_dimension(static_cast<Degree>(d)) != Y.count_of_dimension(static_cast<Degree>(d)))
      return false;
  return IsoSearch(X, Y).run();
}

}  // namespace sset
