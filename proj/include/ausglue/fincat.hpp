#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ausglue/linalg.hpp"
#include "ausglue/quiver.hpp"

namespace ausglue {

// A morphism src -> dst that is irreducible (radical modulo radical squared),
// given by its coordinates in the hom basis.
struct Generator {
  int src = 0;
  int dst = 0;
  Mat vec;
};

struct GabrielArrow {
  int src = 0;
  int dst = 0;
  int multiplicity = 0;
};

namespace detail {
struct CatData;
}

// Finite K-linear category with explicit hom bases. Basis element 0 of
// hom(x, x) is always the identity. Objects are assumed pairwise
// non-isomorphic with local endomorphism rings.
class FinCategory {
 public:
  // coordinates of (basis g of hom(y,z)) o (basis f of hom(x,y)) in hom(x,z)
  using ComposeFn = std::function<Mat(int x, int y, int z, int g, int f)>;

  FinCategory() = default;
  static FinCategory build(std::vector<std::string> labels, std::vector<std::vector<int>> dims,
                           const ComposeFn& compose,
                           std::vector<std::vector<std::string>> basis_names = {});

  std::size_t size() const;
  const std::string& label(int x) const;
  int index_of(const std::string& label) const;
  int dim(int x, int y) const;
  std::size_t total_dim() const;
  const std::string& basis_name(int x, int y, int b) const;
  const Field& field() const;
  bool is_opposite() const { return op_; }
  FinCategory opposite() const;

  // Left multiplication by basis g of hom(y,z), as a map hom(x,y) -> hom(x,z).
  const Mat& left(int x, int y, int z, int g) const;
  // Right multiplication by basis f of hom(x,y), as a map hom(y,z) -> hom(x,z).
  const Mat& right(int x, int y, int z, int f) const;
  Mat left_by(int x, int y, int z, const Mat& g) const;
  Mat right_by(int x, int y, int z, const Mat& f) const;
  Mat compose(int x, int y, int z, const Mat& g, const Mat& f) const;
  Mat identity(int x) const;
  // The scalar by which basis b of hom(x,x) acts on the simple at x.
  Scalar character(int x, int b) const;

  Mat radical(int x, int y) const;
  Mat radical_squared(int x, int y) const;
  const std::vector<Generator>& generators() const;
  std::vector<GabrielArrow> gabriel_quiver() const;
  // Exhaustive check on all basis triples; also checks identities.
  bool is_associative() const;

 private:
  std::shared_ptr<detail::CatData> d_;
  bool op_ = false;
};

class CatModule {
 public:
  CatModule() = default;
  // act[x * n + y][b] is the action of basis b of hom(x,y), a dims[y] x dims[x] matrix.
  CatModule(FinCategory cat, std::vector<int> dims, std::vector<std::vector<Mat>> act);

  const FinCategory& category() const { return cat_; }
  int dim(int x) const { return dims_[x]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Mat& action(int x, int y, int b) const;
  Mat act_by(int x, int y, const Mat& coeffs) const;
  bool is_functorial() const;
  std::string dim_string() const;

 private:
  FinCategory cat_;
  std::vector<int> dims_;
  std::vector<std::vector<Mat>> act_;
};

// Natural transformation; comp[x] is dims_N[x] x dims_M[x].
struct ModuleMap {
  std::vector<Mat> comp;

  bool is_zero() const;
  Mat total() const;  // block diagonal over all objects
  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap scaled(const Scalar& s) const;
  Mat flat() const;  // concatenated row-major flattenings
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap identity_map(const CatModule& m);
ModuleMap zero_map(const CatModule& m, const CatModule& n);
bool is_module_map(const CatModule& m, const CatModule& n, const ModuleMap& f);

CatModule projective_module(const FinCategory& c, int x);
CatModule injective_module(const FinCategory& c, int x);
CatModule simple_module(const FinCategory& c, int x);
CatModule zero_module(const FinCategory& c);
// Module over the opposite category.
CatModule dual(const CatModule& m);
// D f : D N -> D M for f : M -> N.
ModuleMap dual(const ModuleMap& f);

std::vector<ModuleMap> hom_basis(const CatModule& m, const CatModule& n);
int hom_dim(const CatModule& m, const CatModule& n);

struct SubModule {
  CatModule module;
  ModuleMap inclusion;
};
struct QuotientModule {
  CatModule module;
  ModuleMap projection;
};

// bases[x] has independent columns spanning a subspace closed under the action.
SubModule submodule(const CatModule& m, const std::vector<Mat>& bases);
QuotientModule quotient(const CatModule& m, const std::vector<Mat>& bases);
SubModule kernel(const CatModule& m, const ModuleMap& f);
SubModule image(const CatModule& n, const ModuleMap& f);
QuotientModule cokernel(const CatModule& n, const ModuleMap& f);

struct DirectSum {
  CatModule module;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<CatModule>& parts);

// rad M(x), spanned by images of the generators.
std::vector<Mat> radical_spaces(const CatModule& m);
// Columns completing rad M(x) to M(x); one per summand of the projective cover.
std::vector<Mat> top_generators(const CatModule& m);
std::vector<int> top_multiplicities(const CatModule& m);
std::vector<int> socle_multiplicities(const CatModule& m);

// Dimension of End(M) modulo its radical (computed from the trace form).
int end_semisimple_rank(const CatModule& m);
bool is_indecomposable(const CatModule& m);
std::vector<CatModule> decompose(const CatModule& m);
bool is_isomorphic(const CatModule& m, const CatModule& n);
// Index of the first module in `list` isomorphic to m, or -1.
int find_isomorphic(const std::vector<CatModule>& list, const CatModule& m);
bool is_projective(const CatModule& m);
bool is_injective(const CatModule& m);

FinCategory category_from_presentation(const BoundPresentation& p, int max_len = 64);
FinCategory full_subcategory(const FinCategory& c, const std::vector<int>& objs);
inline FinCategory endomorphism_category(const FinCategory& c, const std::vector<int>& objs) {
  return full_subcategory(c, objs);
}
inline FinCategory opposite_category(const FinCategory& c) { return c.opposite(); }

// The full subcategory of mod C on a list of modules, with the hom bases kept
// so that maps can be converted to coordinates.
struct ModuleCategory {
  FinCategory cat;
  std::vector<CatModule> objects;
  std::vector<std::vector<std::vector<ModuleMap>>> basis;  // basis[x][y]
  std::vector<std::vector<Mat>> coord;                      // left inverses of flattened bases

  Mat coordinates(int x, int y, const ModuleMap& f) const;
  ModuleMap map_of(int x, int y, const Mat& coords) const;
};
ModuleCategory module_category(const std::vector<CatModule>& mods, const std::vector<std::string>& labels);

}  // namespace ausglue
