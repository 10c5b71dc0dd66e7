#include "ausglue/ar.hpp"

#include <algorithm>
#include <set>

#include "ausglue/errors.hpp"
#include "ausglue/homology.hpp"

namespace ausglue {

int ARQuiver::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return static_cast<int>(i);
  return -1;
}

int ARQuiver::multiplicity(int src, int dst) const {
  for (const auto& a : arrows)
    if (a.src == src && a.dst == dst) return a.multiplicity;
  return 0;
}

int ARQuiver::find(const CatModule& m) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (is_isomorphic(vertices[i].module, m)) return static_cast<int>(i);
  return -1;
}

FinCategory path_category(const DynkinSpec& spec) {
  return category_from_presentation(BoundPresentation(dynkin_quiver(spec), {}));
}

namespace {

std::vector<int> order_by_arrows(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < edges.size(); ++i)
    arrows.push_back({"e" + std::to_string(i), edges[i].first, edges[i].second});
  Quiver q(names, arrows);
  if (!q.is_acyclic()) {
    std::vector<int> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    return id;
  }
  return q.topological_order();
}

}  // namespace

std::string module_name(const FinCategory& c, const CatModule& m) {
  int n = static_cast<int>(c.size());
  std::vector<int> dims = m.dims();
  auto named = [&](const char* kind, int x) {
    const std::string& l = c.label(x);
    return kind + (l.size() == 1 ? l : "(" + l + ")");
  };
  auto unit_at = [&](const std::vector<int>& d) {
    int at = -1;
    for (int x = 0; x < n; ++x)
      if (d[x] != 0) {
        if (d[x] != 1 || at >= 0) return -1;
        at = x;
      }
    return at;
  };
  if (is_projective(m)) {
    auto top = top_multiplicities(m);
    for (int x = 0; x < n; ++x)
      if (top[x] == 1) return named("P", x);
  }
  if (is_injective(m)) {
    auto soc = socle_multiplicities(m);
    for (int x = 0; x < n; ++x)
      if (soc[x] == 1) return named("I", x);
  }
  int s = unit_at(dims);
  if (s >= 0) return named("S", s);
  std::string out = "M";
  for (int d : dims) out += std::to_string(d);
  return out;
}

ARQuiver knit(const FinCategory& c, int budget, int max_module_dim) {
  int n = static_cast<int>(c.size());
  std::vector<std::pair<int, int>> gab;
  for (const auto& a : c.gabriel_quiver()) gab.push_back({a.src, a.dst});
  std::vector<int> seeds = order_by_arrows(n, gab);

  std::vector<CatModule> mods;
  std::vector<std::pair<int, int>> tau_links;  // (M, tau^- M)
  for (int x : seeds) {
    CatModule m = projective_module(c, x);
    int prev = -1;
    while (m.total_dim() > 0) {
      int idx = find_isomorphic(mods, m);
      bool fresh = idx < 0;
      if (fresh) {
        if (static_cast<int>(mods.size()) >= budget)
          throw BudgetExceeded("more than " + std::to_string(budget) + " indecomposables");
        if (m.total_dim() > max_module_dim)
          throw BudgetExceeded("indecomposable of dimension " + std::to_string(m.total_dim()));
        if (hom_dim(m, m) != 1) throw NonSchurianVertex("indecomposable " + m.dim_string() + " has a non-trivial endomorphism");
        mods.push_back(m);
        idx = static_cast<int>(mods.size()) - 1;
      }
      if (prev >= 0) tau_links.push_back({prev, idx});
      if (!fresh) break;
      prev = idx;
      m = tau_inv(m);
    }
  }

  std::vector<std::string> tmp_labels;
  for (std::size_t i = 0; i < mods.size(); ++i) tmp_labels.push_back("v" + std::to_string(i));
  ModuleCategory mc = module_category(mods, tmp_labels);
  std::vector<std::pair<int, int>> edges;
  for (const auto& a : mc.cat.gabriel_quiver()) edges.push_back({a.src, a.dst});
  for (const auto& [a, b] : tau_links) edges.push_back({a, b});
  std::vector<int> perm = order_by_arrows(mods.size(), edges);
  std::vector<int> pos(mods.size());
  for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);

  ARQuiver q;
  q.algebra = c;
  std::set<std::string> used;
  for (int old : perm) {
    ARVertex v;
    v.module = mods[old];
    v.dims = mods[old].dims();
    v.projective = is_projective(v.module);
    v.injective = is_injective(v.module);
    std::string name = module_name(c, v.module);
    std::string id = name;
    for (int k = 2; used.count(id); ++k) id = name + "_" + std::to_string(k);
    used.insert(id);
    v.id = id;
    q.vertices.push_back(v);
  }
  for (const auto& a : mc.cat.gabriel_quiver()) q.arrows.push_back({pos[a.src], pos[a.dst], a.multiplicity});
  std::sort(q.arrows.begin(), q.arrows.end(),
            [](const ARArrow& a, const ARArrow& b) { return std::pair(a.src, a.dst) < std::pair(b.src, b.dst); });
  q.tau.assign(mods.size(), -1);
  q.tau_inv.assign(mods.size(), -1);
  for (const auto& [a, b] : tau_links) {
    q.tau_inv[pos[a]] = pos[b];
    q.tau[pos[b]] = pos[a];
  }

  std::vector<std::string> ids;
  for (const auto& v : q.vertices) ids.push_back(v.id);
  ModuleCategory sorted;
  std::size_t m = perm.size();
  sorted.basis.assign(m, std::vector<std::vector<ModuleMap>>(m));
  sorted.coord.assign(m, std::vector<Mat>(m));
  for (std::size_t i = 0; i < m; ++i) {
    sorted.objects.push_back(mods[perm[i]]);
    for (std::size_t j = 0; j < m; ++j) {
      sorted.basis[i][j] = mc.basis[perm[i]][perm[j]];
      sorted.coord[i][j] = mc.coord[perm[i]][perm[j]];
    }
  }
  sorted.cat = FinCategory::build(
      ids, [&] {
        std::vector<std::vector<int>> d(m, std::vector<int>(m));
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) d[i][j] = mc.cat.dim(perm[i], perm[j]);
        return d;
      }(),
      [&](int x, int y, int z, int g, int f) { return mc.cat.left(perm[x], perm[y], perm[z], g).col(f); });
  q.category = sorted;
  return q;
}

std::optional<std::string> mesh_violation(const ARQuiver& q) {
  int n = static_cast<int>(q.size());
  const auto& c = q.algebra;
  auto add = [](std::vector<int>& acc, const std::vector<int>& d, int mult) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += mult * d[i];
  };
  for (int z = 0; z < n; ++z) {
    const auto& v = q.vertices[z];
    if ((q.tau[z] < 0) != v.projective) return "tau is not defined exactly off the projectives at " + v.id;
    if ((q.tau_inv[z] < 0) != v.injective) return "tau inverse is not defined exactly off the injectives at " + v.id;
    std::vector<int> into(c.size(), 0);
    for (const auto& a : q.arrows)
      if (a.dst == z) add(into, q.vertices[a.src].dims, a.multiplicity);
    if (v.projective) {
      auto rad = radical_spaces(v.module);
      for (std::size_t x = 0; x < rad.size(); ++x)
        if (static_cast<int>(rad[x].cols()) != into[x]) return "radical of " + v.id + " differs from its predecessors";
      continue;
    }
    int t = q.tau[z];
    for (int y = 0; y < n; ++y)
      if (q.multiplicity(y, z) != q.multiplicity(t, y))
        return "mesh at " + v.id + " has unmatched arrow through " + q.vertices[y].id;
    std::vector<int> ends = v.dims;
    add(ends, q.vertices[t].dims, 1);
    if (ends != into) return "dimension vectors are not additive on the mesh ending at " + v.id;
  }
  for (int z = 0; z < n; ++z) {
    const auto& v = q.vertices[z];
    if (!v.injective) continue;
    std::vector<int> out(c.size(), 0);
    for (const auto& a : q.arrows)
      if (a.src == z) add(out, q.vertices[a.dst].dims, a.multiplicity);
    auto soc = socle_multiplicities(v.module);
    for (std::size_t x = 0; x < soc.size(); ++x)
      if (v.dims[x] - soc[x] != out[x]) return "top of " + v.id + " over its socle differs from its successors";
  }
  return std::nullopt;
}

std::vector<int> hammock(const ARQuiver& q, int x) {
  int n = static_cast<int>(q.size());
  std::vector<int> h(n, 0);
  h[x] = 1;
  for (int v = x + 1; v < n; ++v) {
    int s = 0;
    for (const auto& a : q.arrows)
      if (a.dst == v) s += a.multiplicity * h[a.src];
    if (!q.vertices[v].projective) s -= h[q.tau[v]];
    h[v] = s;
  }
  return h;
}

int aus_rank(const DynkinSpec& spec) {
  spec.validate();
  return static_cast<int>(knit(path_category(spec)).size());
}

}  // namespace ausglue
