#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ausglue/field.hpp"

namespace ausglue {

struct Arrow {
  std::string id;
  int src = 0;
  int dst = 0;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t size() const { return vertices_.size(); }
  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& id) const;
  bool is_acyclic() const;
  // Kahn order with ties broken by vertex index; throws if a cycle exists.
  std::vector<int> topological_order() const;
  std::string str() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// Orientation is one flag per canonical edge (u, v) of the diagram:
// true means u -> v.
struct DynkinSpec {
  char letter = 'A';
  int rank = 1;
  std::vector<bool> forward;

  static DynkinSpec linear(char letter, int rank);
  static DynkinSpec alternating(char letter, int rank);
  // "A3", "D4", "E6"; orientation "linear", "alt"/"alternating", or a string of f/b per edge.
  static DynkinSpec parse(const std::string& name, const std::string& orientation = "linear");
  std::string name() const;
  std::string orientation_string() const;
  void validate() const;
};

std::vector<std::pair<int, int>> dynkin_edges(char letter, int rank);
Quiver dynkin_quiver(const DynkinSpec& spec);
// Positive root count, equal to the number of indecomposable representations.
int positive_root_count(const DynkinSpec& spec);
// Recognises a connected simply-laced Dynkin underlying graph (orientation kept).
std::optional<DynkinSpec> classify_dynkin(const Quiver& q);

struct RelationTerm {
  Rational coeff;
  std::vector<int> path;  // arrow indices in traversal order
};

struct Relation {
  std::vector<RelationTerm> terms;
};

class BoundPresentation {
 public:
  BoundPresentation() = default;
  BoundPresentation(Quiver q, std::vector<Relation> relations);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int path_source(const std::vector<int>& path) const;
  int path_target(const std::vector<int>& path) const;
  std::string path_string(const std::vector<int>& path) const;
  std::string str() const;

 private:
  Quiver quiver_;
  std::vector<Relation> relations_;
};

BoundPresentation nakayama_linear(int m, int ell);
Quiver opposite(const Quiver& q);
BoundPresentation opposite(const BoundPresentation& p);

struct QuiverSpecFile {
  BoundPresentation presentation;
  std::optional<DynkinSpec> dynkin;
};

// Text format: header `dynkin <letter> <rank>` or `quiver`, then
// `vertex <name>` (optional), `arrow <id> <src> <dst>`, and
// `relation <coeff>*<a.b.c>;<coeff>*<path>...` lines. `#` starts a comment.
QuiverSpecFile parse_quiver_spec(const std::string& text);
QuiverSpecFile load_quiver_spec(const std::string& path);

}  // namespace ausglue
