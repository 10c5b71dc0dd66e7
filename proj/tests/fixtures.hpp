#pragma once

#include "ausglue/fincat.hpp"

namespace ausglue::fixtures {

// Auslander algebra of linearly oriented A3, vertices named after their
// position in the AR quiver: 1 -> 2 -> 3, 2 -> x, 3 -> 4, x -> 4, 4 -> 5,
// with the two zero relations and one commutativity relation of the meshes.
inline BoundPresentation auslander_a3_presentation() {
  Quiver q({"1", "2", "3", "x", "4", "5"},
           {{"a", 0, 1}, {"b", 1, 2}, {"c", 1, 3}, {"d", 2, 4}, {"e", 3, 4}, {"f", 4, 5}});
  std::vector<Relation> rel{
      {{{Rational(1), {0, 2}}}},
      {{{Rational(1), {1, 3}}, {Rational(-1), {2, 4}}}},
      {{{Rational(1), {4, 5}}}},
  };
  return BoundPresentation(q, rel);
}

inline FinCategory auslander_a3() { return category_from_presentation(auslander_a3_presentation()); }

inline FinCategory kronecker() {
  Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
  return category_from_presentation(BoundPresentation(q, {}));
}

}  // namespace ausglue::fixtures
