#pragma once

#include <limits>
#include <string>
#include <vector>

#include "ausglue/fincat.hpp"

namespace ausglue {

// Symbolic infinity for dimensions (self-injective dominant dimension).
inline constexpr int kInfinite = std::numeric_limits<int>::max();
std::string dim_string(int d);

// A direct sum of indecomposable projectives P_{x_0} + P_{x_1} + ...
CatModule projective_sum(const FinCategory& c, const std::vector<int>& summands);
// The map from projective_sum(summands) to y sending the generator of the
// i-th summand to elems[i], a column of y(summands[i]).
ModuleMap map_from_projective(const FinCategory& c, const std::vector<int>& summands, const CatModule& y,
                              const std::vector<Mat>& elems);
// Offset of summand i inside projective_sum(summands)(z).
std::size_t summand_offset(const FinCategory& c, const std::vector<int>& summands, std::size_t i, int z);

enum class Direction { Projective, Injective };

struct Resolution {
  Direction direction = Direction::Projective;
  CatModule module;
  // Projective: terms P_0, P_1, ... with differentials[0] = P_0 -> M and
  // differentials[n] = P_n -> P_{n-1}.
  // Injective: terms I^0, I^1, ... with differentials[0] = M -> I^0 and
  // differentials[n] = I^{n-1} -> I^n.
  std::vector<CatModule> terms;
  std::vector<std::vector<int>> summands;
  std::vector<ModuleMap> differentials;
  // Projective only: elements[n][j] is the image of the j-th generator of P_n,
  // a column of P_{n-1}(x_j), or of M(x_j) when n = 0.
  std::vector<std::vector<Mat>> elements;
  bool minimal = true;
  bool truncated = false;

  // Index of the last nonzero term, or -1 for the zero module.
  int length() const { return static_cast<int>(terms.size()) - 1; }
};

Resolution min_proj_resolution(const CatModule& m, int max_len);
Resolution min_proj_resolution(const CatModule& m);
// Computed as the dual of the minimal projective resolution of DM.
Resolution min_inj_resolution(const CatModule& m, int max_len);
Resolution min_inj_resolution(const CatModule& m);
int default_max_len(const FinCategory& c);

// d o d = 0, exactness and degree-0 homology, checked exactly.
bool is_exact_resolution(const Resolution& r);
// Images of the differentials lie in the radical (projective case) or the
// kernels contain the socle (injective case).
bool is_minimal_resolution(const Resolution& r);

// These throw Truncated when the resolution does not stop in time.
int pdim(const CatModule& m, int max_len);
int pdim(const CatModule& m);
int idim(const CatModule& m, int max_len);
int idim(const CatModule& m);
int gldim(const FinCategory& c);
int domdim(const FinCategory& c);
// Leading projective terms of the minimal injective coresolution of m.
int domdim_module(const CatModule& m, int max_len);

// Ext^n(X, Y) computed from the minimal projective resolution of X. A cochain
// is a column vector stacking one element of Y(x_i) per summand P_{x_i} of P_n.
struct ExtSpace {
  CatModule source, target;
  int degree = 0;
  Resolution res;
  Mat cocycles;      // basis of the cocycles in cochain coordinates
  Mat coboundaries;  // basis of the coboundaries
  Mat reps;          // cocycles completing the coboundaries; one per basis class
  Mat coord;         // rows of the left inverse of [coboundaries | reps] for the reps

  int dim() const { return static_cast<int>(reps.cols()); }
  std::size_t cochain_len() const;
  bool is_cocycle(const Mat& cochain) const;
  // Class of a cocycle in the basis of reps.
  Mat coordinates(const Mat& cochain) const;
  Mat cochain_of(const Mat& coords) const;
  // The cocycle as a module map P_n -> Y.
  ModuleMap cocycle_map(const Mat& cochain) const;
};

ExtSpace ext(const CatModule& x, const CatModule& y, int n);
// Same, reusing a minimal projective resolution of X known through degree n + 1.
ExtSpace ext(const Resolution& res_x, const CatModule& y, int n);
int ext_dim(const CatModule& x, const CatModule& y, int n);

// Chain map between minimal projective resolutions lifting f : X' -> X, in
// degrees 0..up_to. Each map is given by the images of the generators.
std::vector<std::vector<Mat>> lift_chain_map(const Resolution& src, const Resolution& dst, const ModuleMap& f,
                                             int up_to);
ModuleMap chain_component(const Resolution& src, const Resolution& dst, const std::vector<Mat>& images, int degree);

// g o e for g : Y -> Z and a cochain of Ext^n(X, Y); the result is a cochain
// for the same resolution of X with values in Z.
Mat postcompose_cochain(const ExtSpace& e, const Mat& cochain, const ModuleMap& g);
// e o f for f : X' -> X, where `lift` is the degree-n part of the chain map
// from the resolution `src` of X' to that of X. The result is a cochain on src.
Mat precompose_cochain(const ExtSpace& e, const Mat& cochain, const Resolution& src, const std::vector<Mat>& lift);

// The class in Ext^1(Z, M) of an exact sequence 0 -> M -f-> E -g-> Z -> 0,
// as a degree-1 cochain on res_z.
Mat extension_class(const Resolution& res_z, const CatModule& e, const ModuleMap& f, const ModuleMap& g);

CatModule syzygy(const CatModule& m);
CatModule cosyzygy(const CatModule& m);
// Tr M over the opposite category, from the minimal projective presentation.
CatModule transpose(const CatModule& m);
CatModule tau(const CatModule& m);
CatModule tau_inv(const CatModule& m);
CatModule tau_n(const CatModule& m, int n);
CatModule tau_n_inv(const CatModule& m, int n);
CatModule nakayama(const CatModule& m);
CatModule nakayama_inv(const CatModule& m);

}  // namespace ausglue
