#include "ausglue/errors.hpp"
#include "ausglue/homology.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace ausglue;

namespace {

FinCategory path_category(const DynkinSpec& s) {
  return category_from_presentation(BoundPresentation(dynkin_quiver(s), {}));
}

using fixtures::auslander_a3;

// All indecomposables of a hereditary representation-finite algebra, as
// tau-inverse orbits of the projectives.
std::vector<CatModule> orbit_modules(const FinCategory& c) {
  std::vector<CatModule> out;
  for (int x = 0; x < static_cast<int>(c.size()); ++x) {
    CatModule m = projective_module(c, x);
    while (m.total_dim() > 0) {
      if (find_isomorphic(out, m) < 0) out.push_back(m);
      m = tau_inv(m);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("projective modules have length-zero resolutions") {
  FinCategory c = path_category(DynkinSpec::linear('A', 3));
  for (int x = 0; x < 3; ++x) {
    Resolution r = min_proj_resolution(projective_module(c, x));
    CHECK(r.length() == 0);
    CHECK(is_exact_resolution(r));
  }
}

TEST_CASE("resolution of S_1 over A2") {
  FinCategory c = path_category(DynkinSpec::linear('A', 2));
  Resolution r = min_proj_resolution(simple_module(c, 0));
  REQUIRE(r.length() == 1);
  CHECK(r.summands[0] == std::vector<int>{0});
  CHECK(r.summands[1] == std::vector<int>{1});
  CHECK(is_exact_resolution(r));
  CHECK(is_minimal_resolution(r));
  CHECK(is_isomorphic(syzygy(simple_module(c, 0)), projective_module(c, 1)));
  CHECK(syzygy(projective_module(c, 0)).total_dim() == 0);
}

TEST_CASE("truncation is reported") {
  FinCategory c = path_category(DynkinSpec::linear('A', 2));
  Resolution r = min_proj_resolution(simple_module(c, 0), 0);
  CHECK(r.truncated);
  CHECK_THROWS_AS(pdim(simple_module(c, 0), 0), Truncated);
}

TEST_CASE("global dimensions") {
  CHECK(gldim(path_category(DynkinSpec::linear('A', 1))) == 0);
  CHECK(gldim(path_category(DynkinSpec::linear('A', 3))) == 1);
  CHECK(gldim(path_category(DynkinSpec::alternating('A', 4))) == 1);
  CHECK(gldim(path_category(DynkinSpec::linear('D', 4))) == 1);
  CHECK(gldim(category_from_presentation(nakayama_linear(4, 3))) == 2);
  CHECK(gldim(auslander_a3()) == 2);
}

TEST_CASE("dominant dimensions") {
  CHECK(domdim(path_category(DynkinSpec::linear('A', 1))) == kInfinite);
  CHECK(dim_string(kInfinite) == "inf");
  CHECK(domdim(auslander_a3()) == 2);
  CHECK(domdim(path_category(DynkinSpec::linear('A', 3))) == 1);
  // rad^2 = 0 on a 2-cycle is self-injective
  Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}});
  FinCategory cyc = category_from_presentation(
      BoundPresentation(q, {{{{Rational(1), {0, 1}}}}, {{{Rational(1), {1, 0}}}}}));
  CHECK(domdim(cyc) == kInfinite);
}

TEST_CASE("resolutions over the Auslander algebra are exact and minimal") {
  FinCategory c = auslander_a3();
  for (int x = 0; x < static_cast<int>(c.size()); ++x) {
    for (const auto& m : {simple_module(c, x), injective_module(c, x)}) {
      Resolution p = min_proj_resolution(m);
      CHECK(is_exact_resolution(p));
      CHECK(is_minimal_resolution(p));
      Resolution i = min_inj_resolution(m);
      CHECK(is_exact_resolution(i));
      CHECK(is_minimal_resolution(i));
    }
  }
}

TEST_CASE("Ext over A2") {
  FinCategory c = path_category(DynkinSpec::linear('A', 2));
  CatModule s1 = simple_module(c, 0), s2 = simple_module(c, 1);
  CHECK(ext_dim(s1, s2, 1) == 1);
  CHECK(ext_dim(s2, s1, 1) == 0);
  CHECK(ext_dim(s1, s1, 0) == 1);
  CHECK(ext_dim(s1, s2, 0) == 0);
  CHECK(ext_dim(s1, s2, 2) == 0);
  for (int x = 0; x < 2; ++x) CHECK(ext_dim(projective_module(c, x), s2, 1) == 0);
}

TEST_CASE("Ext^0 agrees with Hom") {
  FinCategory c = auslander_a3();
  std::vector<CatModule> mods;
  for (int x = 0; x < static_cast<int>(c.size()); ++x) {
    mods.push_back(simple_module(c, x));
    mods.push_back(injective_module(c, x));
  }
  for (const auto& a : mods)
    for (const auto& b : mods) CHECK(ext_dim(a, b, 0) == hom_dim(a, b));
}

TEST_CASE("Ext vanishes beyond the global dimension") {
  FinCategory c = category_from_presentation(nakayama_linear(4, 3));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(ext_dim(simple_module(c, x), simple_module(c, y), 3) == 0);
  CHECK(ext_dim(simple_module(c, 0), simple_module(c, 3), 2) == 1);
}

TEST_CASE("tau and its inverse") {
  FinCategory c = path_category(DynkinSpec::linear('A', 2));
  CHECK(is_isomorphic(tau(simple_module(c, 0)), simple_module(c, 1)));
  CHECK(tau(projective_module(c, 0)).total_dim() == 0);
  CHECK(tau_inv(injective_module(c, 1)).total_dim() == 0);
  CHECK(is_isomorphic(tau_n(simple_module(c, 0), 1), tau(simple_module(c, 0))));

  FinCategory d = path_category(DynkinSpec::linear('D', 4));
  for (const auto& m : orbit_modules(d)) {
    if (is_projective(m)) continue;
    CatModule t = tau(m);
    CHECK(t.is_functorial());
    CHECK(is_isomorphic(tau_inv(t), m));
  }
}

TEST_CASE("indecomposable counts from tau orbits") {
  CHECK(orbit_modules(path_category(DynkinSpec::linear('A', 3))).size() == 6);
  CHECK(orbit_modules(path_category(DynkinSpec::alternating('A', 4))).size() == 10);
  CHECK(orbit_modules(path_category(DynkinSpec::linear('D', 4))).size() == 12);
}

TEST_CASE("AR duality on A3 and D4") {
  for (auto spec : {DynkinSpec::linear('A', 3), DynkinSpec::linear('D', 4)}) {
    FinCategory c = path_category(spec);
    auto mods = orbit_modules(c);
    for (const auto& x : mods)
      for (const auto& y : mods) CHECK(hom_dim(x, tau(y)) == ext_dim(y, x, 1));
  }
}

TEST_CASE("Nakayama functor on projectives and injectives") {
  FinCategory c = path_category(DynkinSpec::linear('A', 3));
  for (int x = 0; x < 3; ++x) {
    CHECK(is_isomorphic(nakayama(projective_module(c, x)), injective_module(c, x)));
    CHECK(is_isomorphic(nakayama_inv(injective_module(c, x)), projective_module(c, x)));
  }
  FinCategory a = auslander_a3();
  for (int x = 0; x < static_cast<int>(a.size()); ++x)
    CHECK(is_isomorphic(nakayama(projective_module(a, x)), injective_module(a, x)));
  FinCategory one = path_category(DynkinSpec::linear('A', 1));
  CHECK(is_isomorphic(nakayama(simple_module(one, 0)), simple_module(one, 0)));
}

TEST_CASE("higher translate on the Nakayama algebra") {
  FinCategory c = category_from_presentation(nakayama_linear(4, 3));
  CatModule m = tau_n(injective_module(c, 0), 2);
  CHECK(m.total_dim() > 0);
  CHECK(is_indecomposable(m));
  CHECK(is_isomorphic(tau_n_inv(m, 2), injective_module(c, 0)));
}

TEST_CASE("Yoneda products with identities and lifts") {
  FinCategory c = auslander_a3();
  CatModule x = simple_module(c, 4), y = simple_module(c, 5);
  ExtSpace e = ext(x, y, 1);
  REQUIRE(e.dim() >= 1);
  Mat v = e.cochain_of(Mat::unit(e.dim(), 0));
  CHECK(e.is_cocycle(v));
  Mat post = postcompose_cochain(e, v, identity_map(y));
  CHECK(e.coordinates(post) == Mat::unit(e.dim(), 0));
  auto lift = lift_chain_map(e.res, e.res, identity_map(x), 1);
  Mat pre = precompose_cochain(e, v, e.res, lift[1]);
  CHECK(e.coordinates(pre) == Mat::unit(e.dim(), 0));
  for (int k = 0; k <= 1 && k <= e.res.length(); ++k) {
    ModuleMap f = chain_component(e.res, e.res, lift[k], k);
    CHECK(is_module_map(e.res.terms[k], e.res.terms[k], f));
  }
}

TEST_CASE("field independence of homological dimensions") {
  for (auto f : {Field::prime(32003), Field::rationals()}) {
    FieldGuard g(f);
    FinCategory c = auslander_a3();
    CHECK(gldim(c) == 2);
    CHECK(domdim(c) == 2);
  }
}
