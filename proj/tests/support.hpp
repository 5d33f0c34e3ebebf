#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "catmates/adjoint.hpp"
#include "catmates/catalog.hpp"
#include "catmates/error.hpp"
#include "catmates/multiadjoint.hpp"

namespace testing_support {

using namespace catmates;

// Seeded generator shared by the property tests; every test picks its own seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& xs) { return xs[below(xs.size())]; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline MorId le(const CategoryPtr& c, ObjId x, ObjId y) { return c->hom(x, y)[0]; }

// Monotone maps between two thin categories, as object tables.
inline std::vector<Functor> monotone_maps(const CategoryPtr& s, const CategoryPtr& t) {
  return enumerate_functors(s, t);
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;  // sentinel, tests compare against the expected code
}

// The cyclic group of order n as a one-object category.
inline CategoryPtr cyclic_group(std::uint32_t n) {
  FinCategory::Tables t;
  t.name = "Z" + std::to_string(n) + "g";
  t.objects = {"*"};
  for (std::uint32_t k = 0; k < n; ++k) t.morphisms.push_back({"g" + std::to_string(k), 0, 0});
  t.identities = {0};
  return FinCategory::assemble(std::move(t), [n](MorId g, MorId f) { return (g + f) % n; });
}

// cats [H3, H3•, H3•], F0 = meet.
inline MultiAdjunction h3_meet() {
  auto h = heyting3(), ho = opposite(h);
  std::vector<CategoryPtr> cats{h, ho, ho};
  std::vector<CategoryPtr> src{ho, ho};
  auto F0 = thin_functor_n(src, ho, [](std::span<const ObjId> t) { return std::min(t[0], t[1]); });
  return from_primary(cats, F0, searched_adjoints(F0, cats));
}

// (- ∧ 1) -| (1 ⇒ -) as a 1-ary adjunction with cats [H3, H3•].
inline MultiAdjunction h3_meet_one() {
  auto h = heyting3(), ho = opposite(h);
  std::vector<CategoryPtr> cats{h, ho};
  auto F0 = thin_functor(ho, ho, std::vector<ObjId>{0, 1, 1});
  return from_primary(cats, F0, searched_adjoints(F0, cats));
}

// Group multiplication of Z3 as a 2-variable adjunction: cats [Z3•, Z3, Z3].
inline MultiAdjunction z3_mult() {
  auto z = cyclic_group(3);
  std::vector<CategoryPtr> cats{opposite(z), z, z};
  auto P = product({z, z});
  Functor F0{P, z, {0}, std::vector<MorId>(9)};
  for (MorId a = 0; a < 3; ++a)
    for (MorId b = 0; b < 3; ++b) F0.mor[a * 3 + b] = (a + b) % 3;
  return from_primary(cats, F0, searched_adjoints(F0, cats));
}

}  // namespace testing_support
