#include "sset/exhibits.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sset {

std::vector<Degree> LatticeFunction::column(Degree i) const {
  return {values.begin() + i * (n + 1), values.begin() + (i + 1) * (n + 1)};
}

Degree LatticeFunction::column_sum(Degree i) const {
  Degree s = 0;
  for (Degree j = 0; j <= n; ++j)
    s += (*this)(i, j);
  return s;
}

bool LatticeFunction::is_monotone() const {
  for (Degree i = 0; i <= p; ++i)
    for (Degree j = 0; j <= n; ++j) {
      if ((*this)(i, j) > q)
        return false;
      if (i > 0 && (*this)(i - 1, j) > (*this)(i, j))
        return false;
      if (j > 0 && (*this)(i, j - 1) > (*this)(i, j))
        return false;
    }
  return true;
}

bool LatticeFunction::is_degenerate() const {
  for (Degree i = 0; i < p; ++i)
    if (column(i) == column(i + 1))
      return true;
  return false;
}

LatticeFunction tight_simplex(Degree n, Degree q) {
  if (q == 0)
    throw std::invalid_argument("tight simplex needs q >= 1");
  const Degree p = (n + 1) * q;
  LatticeFunction f{p, n, q, std::vector<Degree>((p + 1) * (n + 1), 0)};
  for (Degree i = 1; i <= p; ++i) {
    const Degree k = (i - 1) / q;  // i = kq + a with 1 <= a <= q
    const Degree a = (i - 1) % q + 1;
    for (Degree j = 0; j <= n; ++j) {
      Degree v = 0;
      if (j + k == n)
        v = a;
      else if (j + k > n)
        v = q;
      f.values[i * (n + 1) + j] = v;
    }
  }
  return f;
}

namespace {

FormalSimplex delta_simplex(const SimplicialSet& delta_q, const MonotoneMap& m) {
  const EpiMono em = epi_mono_factor(m);
  std::string name;
  for (Degree v = 0; v <= em.mono.source_degree(); ++v)
    name += (v ? " " : "") + std::to_string(em.mono(v));
  const auto cell = delta_q.find(name);
  if (!cell)
    throw std::invalid_argument("set has no cell named '" + name + "'");
  return {em.epi, *cell};
}

}  // namespace

HomSimplex to_hom_simplex(const SimplicialSet& delta_q, const LatticeFunction& f) {
  if (!f.is_monotone())
    throw std::invalid_argument("lattice function is not monotone");
  const PathCatalog& cat = path_catalog(f.p, f.n);
  HomSimplex h{f.p, f.n, {}};
  std::vector<Degree> values(f.p + f.n + 1);
  for (const LatticePath& a : cat.paths()) {
    for (Degree s = 0; s <= a.length(); ++s) {
      const GridPoint pt = a.point(s);
      values[s] = f(pt.x, pt.y);
    }
    h.assignment.push_back(delta_simplex(delta_q, MonotoneMap(values, f.q)));
  }
  return h;
}

LatticeFunction to_lattice_function(const SimplicialSet& delta_q, const HomSimplex& f, Degree q) {
  LatticeFunction out{f.p, f.n, q, std::vector<Degree>((f.p + 1) * (f.n + 1), 0)};
  for (Degree i = 0; i <= f.p; ++i)
    for (Degree j = 0; j <= f.n; ++j) {
      const FormalSimplex v = restrict_to_point(delta_q, f, {i, j});
      out.values[i * (f.n + 1) + j] = static_cast<Degree>(std::stoul(delta_q.cell(v.generator).name));
    }
  return out;
}

Degree coupe(long long i, Degree q) {
  if (i <= 0)
    return 0;
  if (i >= static_cast<long long>(q))
    return q;
  return static_cast<Degree>(i);
}

std::vector<std::vector<Degree>> facets_opposite(Degree q, const std::vector<Degree>& vertices) {
  std::vector<std::vector<Degree>> out;
  for (Degree skip : vertices) {
    std::vector<Degree> facet;
    for (Degree v = 0; v <= q; ++v)
      if (v != skip)
        facet.push_back(v);
    out.push_back(std::move(facet));
  }
  return out;
}

namespace {

std::string vertex_name(const std::vector<Degree>& vertices) {
  std::vector<Degree> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::string name;
  for (Degree v : sorted)
    name += (name.empty() ? "" : " ") + std::to_string(v);
  return name;
}

std::vector<CellId> cells_named(const SimplicialSet& X, const std::vector<std::vector<Degree>>& lists) {
  std::vector<CellId> ids;
  for (const auto& l : lists) {
    const auto c = X.find(vertex_name(l));
    if (!c)
      throw std::invalid_argument("no cell with vertices '" + vertex_name(l) + "'");
    ids.push_back(*c);
  }
  return ids;
}

}  // namespace

SimplicialSet delta_quotient(Degree n, const std::vector<std::vector<Degree>>& faces) {
  const SimplicialSet D = delta(n);
  return quotient(D, Subcomplex::closure(D, cells_named(D, faces)));
}

LurieFamily lurie_family(Degree q, Degree a, const std::vector<std::vector<Degree>>& F, Degree p) {
  if (q < 3 || a == 0 || a + 1 >= q || p <= q)
    throw std::invalid_argument("need q >= 3, 0 < a < q - 1 and p > q");
  const SimplicialSet D = delta(q);
  const Subcomplex sub = Subcomplex::closure(D, cells_named(D, F));
  const std::uint64_t full = (std::uint64_t{1} << (q + 1)) - 1;
  auto in_F = [&](std::uint64_t mask) {
    const auto c = D.find(vertex_name([&] {
      std::vector<Degree> v;
      for (Degree i = 0; i <= q; ++i)
        if (mask >> i & 1u)
          v.push_back(i);
      return v;
    }()));
    return c && sub.contains(*c);
  };
  if (in_F(full))
    throw std::invalid_argument("F must lie in the boundary of the simplex");
  if (!in_F(full ^ (std::uint64_t{1} << a)) || !in_F(full ^ (std::uint64_t{1} << (a + 1))))
    throw std::invalid_argument("F must contain the facets opposite a and a+1");

  LurieFamily out{quotient(D, sub), {}, {}, {}};
  const SimplicialSet& X = out.quotient;
  for (Degree u = 0; u <= p; ++u) {
    std::vector<Degree> values;
    for (Degree i = 0; i <= p + 1; ++i)
      values.push_back(coupe(static_cast<long long>(i) - u + a, q));
    MonotoneMap z(values, q);
    // z_u o d^u misses a and z_u o d^(u+1) misses a+1, so both faces land in F.
    const MonotoneMap du = compose(z, MonotoneMap::coface(u, p + 1));
    const MonotoneMap du1 = compose(z, MonotoneMap::coface(u + 1, p + 1));
    if ((image_mask(du) >> a & 1u) || (image_mask(du1) >> (a + 1) & 1u))
      throw std::logic_error("z_u faces hit the excluded vertex");
    if (!in_F(image_mask(du)) || !in_F(image_mask(du1)))
      throw std::logic_error("z_u faces do not lie in F");

    const EpiMono em = epi_mono_factor(z);
    const std::uint64_t image = image_mask(z);
    FormalSimplex pushed{MonotoneMap::constant(p + 1, 0, 0), 0};
    if (!in_F(image)) {
      std::vector<Degree> verts;
      for (Degree v = 0; v <= em.mono.source_degree(); ++v)
        verts.push_back(em.mono(v));
      pushed = {em.epi, *X.find(vertex_name(verts))};
    }
    out.z.push_back(std::move(z));
    out.components.push_back(std::move(pushed));
  }
  out.simplex = hom1_from_components(out.components);
  if (!is_compatible(X, out.simplex))
    throw std::logic_error("family is not compatible across square flips");
  if (hom1_is_degenerate(X, out.components))
    throw std::logic_error("family is degenerate");
  return out;
}

std::vector<FormalSimplex> hom1_components(const HomSimplex& f) {
  if (f.n != 1)
    throw std::invalid_argument("not a simplex of Hom(Δ^1, X)");
  std::vector<FormalSimplex> out(f.p + 1, f.assignment.front());
  const PathCatalog& cat = path_catalog(f.p, 1);
  for (std::size_t k = 0; k < cat.size(); ++k) {
    const LatticePath& a = cat[k];
    for (Degree s = 0; s < a.length(); ++s)
      if (a.vertical(s))
        out[a.point(s).x] = f.assignment[k];
  }
  return out;
}

HomSimplex hom1_from_components(const std::vector<FormalSimplex>& components) {
  if (components.empty())
    throw std::invalid_argument("no components");
  const auto p = static_cast<Degree>(components.size() - 1);
  const PathCatalog& cat = path_catalog(p, 1);
  HomSimplex f{p, 1, {}};
  for (const LatticePath& a : cat.paths())
    for (Degree s = 0; s < a.length(); ++s)
      if (a.vertical(s))
        f.assignment.push_back(components[a.point(s).x]);
  return f;
}

bool hom1_degeneracy_test(const SimplicialSet& X, const std::vector<FormalSimplex>& f, Degree k) {
  if (f.empty())
    throw std::invalid_argument("no components");
  const auto p = static_cast<Degree>(f.size() - 1);
  for (Degree u = 0; u < p; ++u)
    if (face(X, f[u], u + 1) != face(X, f[u + 1], u + 1))
      throw std::invalid_argument("components are not compatible");
  if (k >= p)
    return false;
  std::vector<FormalSimplex> g;
  for (Degree u = 0; u <= p; ++u) {
    const Degree j = u <= k ? k + 1 : k;
    if (f[u].epi(j) != f[u].epi(j + 1))
      return false;
    const FormalSimplex gv = face(X, f[u], j);
    if (u == k + 1) {
      // g_k is determined twice, by f_k and by f_{k+1}.
      if (gv != g.back())
        return false;
      continue;
    }
    g.push_back(gv);
  }
  for (Degree v = 0; v + 1 < g.size(); ++v)
    if (face(X, g[v], v + 1) != face(X, g[v + 1], v + 1))
      return false;
  return true;
}

bool hom1_is_degenerate(const SimplicialSet& X, const std::vector<FormalSimplex>& f) {
  for (Degree k = 0; k + 1 < f.size(); ++k)
    if (hom1_degeneracy_test(X, f, k))
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Raw engine output keeps the sequence identical across standard libraries.
  Degree below(Degree k) { return static_cast<Degree>(engine_() % k); }
  Degree between(Degree lo, Degree hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

struct Generated {
  std::string name;
  SimplicialSet set;
  KnownRegularity known;
};

Generated random_poset_nerve(Rng& rng, Degree max_elements) {
  const Degree m = rng.between(1, max_elements);
  std::vector<std::string> names;
  for (Degree i = 0; i < m; ++i)
    names.push_back(std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::string desc;
  for (Degree i = 0; i < m; ++i)
    for (Degree j = i + 1; j < m; ++j)
      if (rng.below(3) == 0) {
        rel.emplace_back(i, j);
        desc += " " + std::to_string(i) + "<" + std::to_string(j);
      }
  return {"nerve{" + desc + " }", nerve_poset(Poset::generated_by(names, rel)),
          KnownRegularity::regular};
}

std::vector<Degree> random_face(Rng& rng, Degree n, Degree min_size, Degree max_size) {
  std::vector<Degree> verts(n + 1);
  for (Degree v = 0; v <= n; ++v)
    verts[v] = v;
  for (Degree v = n; v > 0; --v)
    std::swap(verts[v], verts[rng.below(v + 1)]);
  const Degree size = rng.between(min_size, std::min(max_size, n + 1));
  verts.resize(size);
  std::sort(verts.begin(), verts.end());
  return verts;
}

std::string list_name(const std::vector<Degree>& v) {
  std::string s;
  for (Degree x : v)
    s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// A small regular set, for building products and sums.
Generated small_regular(Rng& rng) {
  switch (rng.below(4)) {
    case 0: {
      const Degree n = rng.between(0, 2);
      return {"delta " + std::to_string(n), delta(n), KnownRegularity::regular};
    }
    case 1: {
      const Degree n = rng.between(1, 3);
      return {"boundary " + std::to_string(n), boundary_delta(n), KnownRegularity::regular};
    }
    case 2: {
      const Degree k = rng.between(0, 2);
      return {"horn 2 " + std::to_string(k), horn(2, k), KnownRegularity::regular};
    }
    default:
      return random_poset_nerve(rng, 3);
  }
}

Generated generate(Rng& rng) {
  switch (rng.below(10)) {
    case 0: {
      const Degree n = rng.between(0, 3);
      return {"delta " + std::to_string(n), delta(n), KnownRegularity::regular};
    }
    case 1: {
      const Degree n = rng.between(1, 4);
      return {"boundary " + std::to_string(n), boundary_delta(n), KnownRegularity::regular};
    }
    case 2: {
      const Degree n = rng.between(1, 3);
      const Degree k = rng.between(0, n);
      return {"horn " + std::to_string(n) + " " + std::to_string(k), horn(n, k),
              KnownRegularity::regular};
    }
    case 3:
      return random_poset_nerve(rng, 5);
    case 4: {
      Generated a = small_regular(rng), b = small_regular(rng);
      return {"(" + a.name + ") x (" + b.name + ")", product(a.set, b.set), KnownRegularity::regular};
    }
    case 5: {
      const Degree n = rng.between(2, 3);
      if (rng.coin())
        return {"delta " + std::to_string(n) + " / {0 " + std::to_string(n) + "}",
                delta_quotient(n, {{0, n}}), KnownRegularity::regular};
      const auto f1 = random_face(rng, n, 1, n);
      const auto f2 = random_face(rng, n, 1, n);
      return {"delta " + std::to_string(n) + " / {" + list_name(f1) + "; " + list_name(f2) + "}",
              delta_quotient(n, {f1, f2}), KnownRegularity::unknown};
    }
    case 6: {
      Generated a = generate(rng), b = small_regular(rng);
      KnownRegularity k = KnownRegularity::unknown;
      if (a.known == KnownRegularity::regular)
        k = KnownRegularity::regular;
      else if (a.known == KnownRegularity::not_regular)
        k = KnownRegularity::not_regular;
      return {"(" + a.name + ") + (" + b.name + ")", disjoint_sum(a.set, b.set), k};
    }
    case 7: {
      const SimplicialSet D = delta(3);
      const auto f1 = random_face(rng, 3, 1, 3);
      const auto f2 = random_face(rng, 3, 1, 3);
      const std::vector<Subcomplex> parts{
          Subcomplex::closure(D, cells_named(D, {f1})), Subcomplex::closure(D, cells_named(D, {f2}))};
      return {"union {" + list_name(f1) + "} {" + list_name(f2) + "} in delta 3",
              union_of(D, parts), KnownRegularity::regular};
    }
    case 8: {
      const Degree n = rng.between(2, 3);
      const auto f = random_face(rng, n, 2, n);
      const SimplicialSet Q = delta_quotient(n, {f});
      std::vector<CellId> positive;
      for (CellId c = 0; c < Q.size(); ++c)
        if (Q.dim(c) > 0)
          positive.push_back(c);
      const std::vector<CellId> gens{positive[rng.below(static_cast<Degree>(positive.size()))]};
      return {"sub of delta " + std::to_string(n) + " / {" + list_name(f) + "}",
              subcomplex(Q, gens), KnownRegularity::unknown};
    }
    default: {
      const Degree n = rng.between(2, 3);
      if (rng.coin()) {
        std::vector<std::vector<Degree>> facets = facets_opposite(n, [n] {
          std::vector<Degree> all;
          for (Degree v = 0; v <= n; ++v)
            all.push_back(v);
          return all;
        }());
        return {"delta " + std::to_string(n) + " / boundary", delta_quotient(n, facets),
                KnownRegularity::not_regular};
      }
      const Degree i = rng.between(0, n - 1);
      return {"delta " + std::to_string(n) + " / {" + std::to_string(i) + " " +
                  std::to_string(i + 1) + "}",
              delta_quotient(n, {{i, i + 1}}), KnownRegularity::not_regular};
    }
  }
}

}  // namespace

std::vector<CorpusEntry> corpus(std::uint64_t seed, std::size_t count, std::size_t budget) {
  std::vector<CorpusEntry> out;
  out.push_back({"delta 2 / {0 2}", delta_quotient(2, {{0, 2}}), KnownRegularity::regular});
  out.push_back({"delta 3 / boundary", delta_quotient(3, facets_opposite(3, {0, 1, 2, 3})),
                 KnownRegularity::not_regular});
  Rng rng(seed);
  while (out.size() < count) {
    Generated g = generate(rng);
    if (g.set.size() > budget || g.set.empty())
      continue;
    out.push_back({std::move(g.name), std::move(g.set), g.known});
  }
  out.resize(std::min(out.size(), count));
  return out;
}

}  // namespace sset
