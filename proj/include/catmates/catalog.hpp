#pragma once

#include <functional>
#include <optional>
#include <span>

#include "catmates/functor.hpp"

// Small standard categories used by fixtures, tests and the CLI.
namespace catmates {

CategoryPtr heyting3();  // "H3": the chain 0 <= 1 <= 2
CategoryPtr boolean2();  // "B2": bot <= a, b <= top
CategoryPtr z2_monoid(); // "Z2": one object, {e, s} with s∘s = e

// Looks up one of the above by name ("C<n>" gives a chain); nullptr if unknown.
CategoryPtr builtin_category(std::string_view name);

bool leq(const FinCategory& thin, ObjId x, ObjId y);
std::optional<ObjId> meet(const FinCategory& thin, ObjId x, ObjId y);
std::optional<ObjId> join(const FinCategory& thin, ObjId x, ObjId y);
// Largest z with meet(z, x) <= y.
std::optional<ObjId> implication(const FinCategory& thin, ObjId x, ObjId y);

// Functor out of product(sources) into a thin target, given on object tuples.
Functor thin_functor_n(std::span<const CategoryPtr> sources, const CategoryPtr& target,
                       const std::function<ObjId(std::span<const ObjId>)>& fn);

}  // namespace catmates
