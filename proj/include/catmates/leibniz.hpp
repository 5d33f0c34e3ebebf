#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catmates/colimit.hpp"
#include "catmates/multiadjoint.hpp"

namespace catmates {

// F : A_1 x ... x A_n -> A_0 and morphisms f_i : a_i0 -> a_i1 in A_i.
struct HatRequest {
  Functor F;
  std::vector<CategoryPtr> factors;
  std::vector<MorId> fs;
};

struct HatResult {
  MorId morphism = 0;  // in A_0, also the object of arrow_category(A_0)
  Cocone colimit;      // over the punctured cube
  Diagram diagram;
};

// The punctured n-cube {0,1}^n minus (1, ..., 1), as a poset category whose
// object k is the bit-vector with slot 0 most significant.
CategoryPtr punctured_cube(std::size_t n);

// The map colim_{k != 1..1} F(a_{1k_1}, ..., a_{nk_n}) -> F(a_11, ..., a_n1).
// Throws NoColimit, IndexOutOfRange or BoundaryMismatch.
HatResult hat_morphism(const HatRequest& r);

// The hat functor prod_i arrow(A_i) -> arrow(A_0), on squares by the induced
// maps of colimits. Throws NoColimit, or NaturalityFailure when an induced
// square is missing from arrow(A_0).
Functor hat_functor(const Functor& F, std::span<const CategoryPtr> factors);

struct HatAdjunctionCheck {
  bool skipped = false;
  std::string reason;  // why it was skipped
  Report report;
  // On cats arrow(A_0), arrow(A_1•)•, ..., arrow(A_n•)•.
  std::optional<MultiAdjunction> hatted;
};

// Each F_k : prod A_j -> A_k• is hatted in its left-adjoint form
// prod A_j• -> A_k, so colimits are taken in A_k. Hats F_0, finds the
// one-variable adjoints of the result per slot and tuple (law NotAdjoint),
// and compares every found adjoint with the hat of the corresponding F_k up
// to isomorphism (law HatAdjoint).
HatAdjunctionCheck hat_preserves_adjunction_check(const MultiAdjunction& m);
// Only the first part, for a primary functor F0 : A_1 x ... x A_n -> A_0•.
HatAdjunctionCheck hat_adjunction_search(std::span<const CategoryPtr> cats, const Functor& F0);

}  // namespace catmates
