#pragma once

#include <optional>
#include <vector>

#include "catmates/functor.hpp"

namespace catmates {

struct Diagram {
  CategoryPtr shape;
  Functor labeling;  // shape -> ambient
};

struct Cocone {
  ObjId apex = 0;
  std::vector<MorId> legs;  // per shape object
  bool operator==(const Cocone&) const = default;
};

// All cocones with the given apex, legs enumerated in hom order.
std::vector<Cocone> cocones(const Diagram& d, ObjId apex);
std::vector<Cocone> all_cocones(const Diagram& d);

// The mediating morphisms u: from.apex -> to.apex with u∘from.legs = to.legs.
std::vector<MorId> factorizations(const Diagram& d, const Cocone& from, const Cocone& to);

// An initial cocone, preferring the smallest apex and then the first legs in
// hom order. nullopt when the diagram has no colimit.
std::optional<Cocone> colimit(const Diagram& d);

// The unique mediating morphism out of a colimit; throws NoColimit if the
// factorization is not unique.
MorId factor_through(const Diagram& d, const Cocone& colim, const Cocone& other);

}  // namespace catmates
