#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "catmates/category.hpp"
#include "catmates/report.hpp"

namespace catmates {

struct Functor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<ObjId> obj;
  std::vector<MorId> mor;

  ObjId on_object(ObjId a) const { return obj[a]; }
  MorId on_morphism(MorId m) const { return mor[m]; }
  bool operator==(const Functor& o) const;
};

struct NatTransformation {
  Functor source;
  Functor target;
  std::vector<MorId> components;  // indexed by objects of the source category
  bool operator==(const NatTransformation& o) const;
};

Report validate_functor(const Functor& f);
Report validate_natural(const NatTransformation& t);

Functor identity_functor(const CategoryPtr& c);
Functor constant_functor(const CategoryPtr& source, const CategoryPtr& target, ObjId x);
// g∘f
Functor compose(const Functor& g, const Functor& f);
// The same tables read as a functor between opposite categories.
Functor opposite(const Functor& f);
Functor product_functor(std::span<const Functor> fs);
std::vector<Functor> projections(std::span<const CategoryPtr> factors);
// F(..., -, ...) : factors[slot] -> target for F : product(factors) -> target,
// with the other entries fixed at the objects in fixed (entry slot ignored).
Functor partial_functor(const Functor& F, std::span<const CategoryPtr> factors,
                        std::span<const ObjId> fixed, std::size_t slot);
// dom, cod: arrow_category(c) -> c
Functor arrow_domain(const CategoryPtr& c);
Functor arrow_codomain(const CategoryPtr& c);

// A functor between thin categories determined by its object map; throws
// NaturalityFailure (with the offending morphism) if the map is not monotone.
Functor thin_functor(const CategoryPtr& source, const CategoryPtr& target, std::vector<ObjId> obj);
Functor thin_functor(const CategoryPtr& source, const CategoryPtr& target,
                     const std::function<ObjId(ObjId)>& f);

// Every functor source -> target, in lexicographic order of (obj, mor) tables.
std::vector<Functor> enumerate_functors(const CategoryPtr& source, const CategoryPtr& target,
                                        std::size_t limit = static_cast<std::size_t>(-1));

NatTransformation identity_transformation(const Functor& f);
// beta∘alpha
NatTransformation vertical(const NatTransformation& beta, const NatTransformation& alpha);
// alpha H: components alpha_{H x}
NatTransformation whisker_left(const NatTransformation& alpha, const Functor& h);
// K alpha: components K(alpha_x)
NatTransformation whisker_right(const Functor& k, const NatTransformation& alpha);
// beta * alpha for alpha: F => G (A -> B), beta: H => K (B -> C);
// components beta_{G a} ∘ H(alpha_a).
NatTransformation horizontal(const NatTransformation& beta, const NatTransformation& alpha);

}  // namespace catmates
