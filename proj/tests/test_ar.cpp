#include "ausglue/ar.hpp"
#include "ausglue/errors.hpp"
#include "ausglue/homology.hpp"
#include "doctest.h"

using namespace ausglue;

TEST_CASE("AR quiver of A2") {
  ARQuiver q = knit(path_category(DynkinSpec::linear('A', 2)));
  REQUIRE(q.size() == 3);
  int p1 = q.index_of("P1"), p2 = q.index_of("P2"), s1 = q.index_of("I1");
  REQUIRE(p1 >= 0);
  REQUIRE(p2 >= 0);
  REQUIRE(s1 >= 0);
  CHECK(q.vertices[s1].dims == std::vector<int>{1, 0});
  CHECK(q.multiplicity(p2, p1) == 1);
  CHECK(q.multiplicity(p1, s1) == 1);
  CHECK(q.arrows.size() == 2);
  CHECK(q.tau[s1] == p2);
  CHECK(q.tau_inv[p2] == s1);
  CHECK(q.tau[p1] == -1);
  CHECK_FALSE(mesh_violation(q).has_value());
}

TEST_CASE("vertex counts match positive roots") {
  for (auto spec : {DynkinSpec::linear('A', 1), DynkinSpec::linear('A', 3), DynkinSpec::alternating('A', 3),
                    DynkinSpec::linear('A', 4), DynkinSpec::linear('D', 4), DynkinSpec::parse("D4", "fbb"),
                    DynkinSpec::linear('D', 5)}) {
    ARQuiver q = knit(path_category(spec));
    CHECK(static_cast<int>(q.size()) == positive_root_count(spec));
    CHECK(aus_rank(spec) == positive_root_count(spec));
    auto bad = mesh_violation(q);
    CHECK_MESSAGE(!bad.has_value(), spec.name() << ": " << bad.value_or(""));
    int arrows = 0;
    for (const auto& a : q.arrows) arrows += a.multiplicity;
    CHECK((arrows > 0) == (q.size() > 1));
  }
}

TEST_CASE("A3 triangle shape") {
  ARQuiver q = knit(path_category(DynkinSpec::linear('A', 3)));
  REQUIRE(q.size() == 6);
  CHECK(q.arrows.size() == 6);
  int proj = 0, inj = 0;
  for (const auto& v : q.vertices) {
    proj += v.projective;
    inj += v.injective;
  }
  CHECK(proj == 3);
  CHECK(inj == 3);
}

TEST_CASE("every vertex is schurian and rad/rad^2 matches the meshes") {
  ARQuiver q = knit(path_category(DynkinSpec::linear('D', 4)));
  int total = 0;
  for (std::size_t i = 0; i < q.size(); ++i) total += hom_dim(q.vertices[i].module, q.vertices[i].module);
  CHECK(total == 12);
}

TEST_CASE("hammock recursion agrees with Hom dimensions") {
  for (auto spec : {DynkinSpec::linear('A', 2), DynkinSpec::linear('A', 3), DynkinSpec::alternating('A', 3),
                    DynkinSpec::linear('D', 4)}) {
    ARQuiver q = knit(path_category(spec));
    for (std::size_t x = 0; x < q.size(); ++x) {
      auto h = hammock(q, static_cast<int>(x));
      for (std::size_t y = 0; y < q.size(); ++y)
        CHECK(h[y] == hom_dim(q.vertices[x].module, q.vertices[y].module));
    }
  }
}

TEST_CASE("knitting a non-hereditary algebra") {
  FinCategory c = category_from_presentation(nakayama_linear(4, 3));
  ARQuiver q = knit(c);
  CHECK(q.size() == 9);
  CHECK_FALSE(mesh_violation(q).has_value());
  for (std::size_t x = 0; x < q.size(); ++x) {
    auto h = hammock(q, static_cast<int>(x));
    for (std::size_t y = 0; y < q.size(); ++y) CHECK(h[y] == hom_dim(q.vertices[x].module, q.vertices[y].module));
  }
}

TEST_CASE("the Kronecker quiver exceeds any budget") {
  Quiver k({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
  FinCategory c = category_from_presentation(BoundPresentation(k, {}));
  CHECK_THROWS_AS(knit(c, 20), BudgetExceeded);
}

TEST_CASE("the module category of the AR quiver is the Auslander algebra") {
  ARQuiver q = knit(path_category(DynkinSpec::linear('A', 3)));
  const FinCategory& a = q.category.cat;
  CHECK(a.size() == 6);
  CHECK(a.is_associative());
  CHECK(gldim(a) == 2);
  CHECK(domdim(a) == 2);
  int arrows = 0;
  for (const auto& g : a.gabriel_quiver()) arrows += g.multiplicity;
  CHECK(arrows == 6);
}
