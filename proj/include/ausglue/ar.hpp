#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ausglue/fincat.hpp"
#include "ausglue/quiver.hpp"

namespace ausglue {

struct ARVertex {
  std::string id;
  CatModule module;
  std::vector<int> dims;
  bool projective = false;
  bool injective = false;
};

struct ARArrow {
  int src = 0;
  int dst = 0;
  int multiplicity = 1;
};

struct ARQuiver {
  FinCategory algebra;
  std::vector<ARVertex> vertices;  // in topological order of the arrows
  std::vector<ARArrow> arrows;
  std::vector<int> tau;      // -1 on projective vertices
  std::vector<int> tau_inv;  // -1 on injective vertices
  // Full subcategory of mod on the vertices, in vertex order.
  ModuleCategory category;

  std::size_t size() const { return vertices.size(); }
  int index_of(const std::string& id) const;
  int multiplicity(int src, int dst) const;
  // Vertex isomorphic to m, or -1.
  int find(const CatModule& m) const;
};

// Indecomposables as tau-inverse orbits of the projectives, for
// representation-finite algebras without tau-periodic modules. Throws
// BudgetExceeded after `budget` vertices or on a vertex of total dimension
// above `max_module_dim`, and NonSchurianVertex when an indecomposable has
// endomorphisms beyond the scalars.
ARQuiver knit(const FinCategory& c, int budget = 500, int max_module_dim = 64);

// Mesh relations hold with matching multiplicities and additive dimension
// vectors; also checks radicals of projectives and tops of injectives
// against the neighbouring vertices. Returns a description of the first
// failure.
std::optional<std::string> mesh_violation(const ARQuiver& q);

// dim Hom(vertex x, -) on all vertices, from the mesh recursion alone.
std::vector<int> hammock(const ARQuiver& q, int x);

// P<x> or I<x> for indecomposable projectives and injectives, S<x> for
// simples, otherwise M followed by the dimension vector. Labels longer than
// one character are parenthesised.
std::string module_name(const FinCategory& c, const CatModule& m);

// The category of indecomposables in AR vertex order, labelled by vertex id.
inline const FinCategory& auslander_algebra(const ARQuiver& q) { return q.category.cat; }

int aus_rank(const DynkinSpec& spec);
FinCategory path_category(const DynkinSpec& spec);

}  // namespace ausglue
