#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ausglue/ar.hpp"
#include "ausglue/glue.hpp"

namespace ausglue {

struct Claim {
  std::string id;
  std::string statement;
  std::string expected;
  std::string computed;
  std::string status;  // "pass", "fail" or "skipped"
  std::string witness;
};

struct TowerReport {
  std::string input;
  int k = 0;
  int n = 1;
  int algebra_rank = 0;
  int cluster_size = 0;
  int rank_gamma = -1;
  int gldim_gamma = -1;
  int domdim_gamma = -1;
  int projinj_count = -1;
  int rank_sigma = -1;
  int gldim_sigma = -1;
  int projinj_sigma = -1;
  int inj_not_proj_gamma = -1;
  int inj_not_proj_sigma = -1;
  std::optional<bool> rigidity_ok;
  std::optional<bool> tau_d_closure_ok;
  std::vector<Claim> claims;

  bool passed() const;
  const Claim* claim(const std::string& id) const;
};

// The glued category read as an algebra: modules over the result are
// contravariant functors on the glued category.
FinCategory gamma(const Glued& s);
// Objects x whose projective P_x is also injective.
std::vector<int> projective_injectives(const FinCategory& c);
// Injective base modules in copy 0 together with every object of the higher
// copies, as glued object indices.
std::vector<int> described_projective_injectives(const Glued& s);
// Full subcategory on the projective-injective objects.
FinCategory sigma(const FinCategory& gamma_cat);

// (source label, target label) -> multiplicity
using LabeledQuiver = std::map<std::pair<std::string, std::string>, int>;
LabeledQuiver labeled_gabriel_quiver(const FinCategory& c);
// Copies of the AR quiver of lambda, labelled as in the glued category,
// joined by arrows I_a[j] -> P_b[j+1], one for each arrow P_b -> P_a.
LabeledQuiver ar_quiver_by_copies(const ARQuiver& q, int k);
// First difference between two labelled quivers.
std::optional<std::string> quiver_difference(const LabeledQuiver& a, const LabeledQuiver& b);

TowerReport verify_theorem_dynkin(const DynkinSpec& spec, int k);
// Throws NotHereditary, or NotRepFinite when lambda cannot be knitted.
TowerReport verify_theorem_hereditary(const FinCategory& lambda, int k, const std::string& description);
TowerReport verify_theorem_higher(const GlueInput& input, const std::string& description);

// X -> I^0 -> ... -> I^n -> X[n] for each non-injective X of the cluster,
// from its minimal injective coresolution. Throws NoApproximation if a term
// leaves add of the cluster or the coresolution does not have length n.
struct Angle {
  std::vector<std::string> terms;
  std::string str() const;
};
std::vector<Angle> connecting_angles(const GlueInput& input);

// Labels for the members of a cluster list via module_name.
std::vector<std::string> cluster_labels(const FinCategory& algebra, const std::vector<CatModule>& cluster);

}  // namespace ausglue
