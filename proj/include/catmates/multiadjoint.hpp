#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "catmates/adjoint.hpp"

namespace catmates {

enum class Chirality { Left, Right };

// Left chirality: F_i : A_{i+1} x ... x A_{i-1} -> A_i• (indices mod n+1) and
// isos[i][t] : A_{i-1}(F_{i-1}(...), a_{i-1}) -> A_i(F_i(...), a_i) at the full
// object tuple with index t. Right chirality uses hom-sets A_i(a_i, F_i(...)).
struct MultiAdjunction {
  Chirality chirality = Chirality::Left;
  std::vector<CategoryPtr> cats;
  std::vector<Functor> funs;
  std::vector<std::vector<Permutation>> isos;

  std::size_t arity() const { return cats.size() - 1; }
  bool operator==(const MultiAdjunction& o) const;
};

// Slots feeding F_i, in cyclic order i+1, ..., i-1.
std::vector<std::size_t> input_slots(std::size_t n, std::size_t i);

// Index arithmetic for full tuples (a_0, ..., a_n) and the product sources of
// the functors F_i.
class MadjLayout {
 public:
  MadjLayout() = default;
  explicit MadjLayout(std::span<const CategoryPtr> cats);

  std::size_t arity() const { return n_; }
  const TupleSpace& full() const { return full_; }
  const std::vector<std::size_t>& inputs(std::size_t i) const { return inputs_[i]; }
  // Index of (a_{i+1}, ..., a_{i-1}) in the object set of F_i's source.
  std::size_t input_object(std::size_t i, std::span<const ObjId> full) const;
  // Same for a full tuple of morphisms (entry i ignored).
  std::size_t input_morphism(std::size_t i, std::span<const MorId> full) const;

 private:
  std::size_t n_ = 0;
  TupleSpace full_;
  std::vector<std::vector<std::size_t>> inputs_;
  std::vector<std::vector<std::size_t>> obj_stride_;  // [i][slot]
  std::vector<std::vector<std::size_t>> mor_stride_;
};

// The hom-set H_i at a full tuple as (source, target) in A_i.
struct HomSet {
  ObjId src;
  ObjId tgt;
};
HomSet hom_at(const MultiAdjunction& m, const MadjLayout& L, std::size_t i, std::span<const ObjId> full);

Report verify_cycle(const MultiAdjunction& m);

// Composite isomorphism H_i -> H_j at a full tuple (identity when i == j).
Permutation composite_iso(const MultiAdjunction& m, const MadjLayout& L, std::size_t i, std::size_t j,
                          std::span<const ObjId> full);

// The 1-variable adjunction between slots j and i with the other entries of
// full fixed: F = F_i(..., -_j, ...) : A_j -> A_i•, G = F_j(..., -_i, ...).
MutualLeftAdjunction pair_adjunction(const MultiAdjunction& m, std::size_t i, std::size_t j,
                                     std::span<const ObjId> full);

// For slot k in 1..n and inputs (a_1, ..., a_n) with entry k ignored, the
// adjunction between F_0(..., -_k, ...) : A_k -> A_0• and its adjoint.
using OneVariableAdjoints =
    std::function<std::optional<MutualLeftAdjunction>(std::size_t k, std::span<const ObjId> inputs)>;

// Adjoints found by adjoint_search on the restrictions of F0.
OneVariableAdjoints searched_adjoints(const Functor& F0, std::span<const CategoryPtr> cats);
// Adjoints read off an existing n-variable adjunction.
OneVariableAdjoints adjoints_of(const MultiAdjunction& m);

// cats = A_0..A_n; F0 : A_1 x ... x A_n -> A_0•.
// Throws NotAdjoint (slot and tuple in the message) or NaturalityFailure.
MultiAdjunction from_primary(std::span<const CategoryPtr> cats, const Functor& F0,
                             const OneVariableAdjoints& adjoints);

// Restriction of a left 1-variable mutual adjunction on (A, B) to
// MultiAdjunction form with A_0 = B, A_1 = A, and back.
MultiAdjunction as_multi(const MutualLeftAdjunction& c);
MutualLeftAdjunction as_mutual(const MultiAdjunction& m);

MultiAdjunction restrict(const MultiAdjunction& m, std::size_t k, ObjId a_k);
MultiAdjunction cyclic_shift(const MultiAdjunction& m);
MultiAdjunction dualize(const MultiAdjunction& m);

// The identity 1-ary adjunction on x: A_0 = x•, A_1 = x, both functors identities.
MultiAdjunction identity_madj(const CategoryPtr& x);

MultiAdjunction compose_multi(const MultiAdjunction& g, std::span<const MultiAdjunction> fs);
// g ∘_i f, padding the other slots of g with identities (i is 1-based).
MultiAdjunction compose_at(const MultiAdjunction& g, std::size_t i, const MultiAdjunction& f);

}  // namespace catmates
