#include "catmates/catalog.hpp"

#include <string>

#include "catmates/error.hpp"

namespace catmates {

CategoryPtr heyting3() {
  static CategoryPtr c = chain(3, "H3");
  return c;
}

CategoryPtr boolean2() {
  static CategoryPtr c = poset_category("B2", {"bot", "a", "b", "top"}, [](std::size_t x, std::size_t y) {
    // bit encoding: bot=00, a=01, b=10, top=11
    return (x & y) == x;
  });
  return c;
}

CategoryPtr z2_monoid() {
  static CategoryPtr c = [] {
    FinCategory::Tables t;
    t.name = "Z2";
    t.objects = {"*"};
    t.morphisms = {{"e", 0, 0}, {"s", 0, 0}};
    t.identities = {0};
    return FinCategory::assemble(std::move(t), [](MorId g, MorId f) { return g ^ f; });
  }();
  return c;
}

CategoryPtr builtin_category(std::string_view name) {
  if (name == "H3") return heyting3();
  if (name == "B2") return boolean2();
  if (name == "Z2") return z2_monoid();
  if (name.size() >= 2 && name[0] == 'C') {
    std::size_t n = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') return nullptr;
      n = n * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (n == 0 || n > 64) return nullptr;
    static std::vector<CategoryPtr> chains(65);
    if (!chains[n]) chains[n] = chain(n);
    return chains[n];
  }
  return nullptr;
}

bool leq(const FinCategory& c, ObjId x, ObjId y) { return !c.hom(x, y).empty(); }

std::optional<ObjId> meet(const FinCategory& c, ObjId x, ObjId y) {
  std::optional<ObjId> best;
  for (ObjId z = 0; z < c.object_count(); ++z)
    if (leq(c, z, x) && leq(c, z, y) && (!best || leq(c, *best, z))) best = z;
  if (best)
    for (ObjId z = 0; z < c.object_count(); ++z)
      if (leq(c, z, x) && leq(c, z, y) && !leq(c, z, *best)) return std::nullopt;
  return best;
}

std::optional<ObjId> join(const FinCategory& c, ObjId x, ObjId y) {
  std::optional<ObjId> best;
  for (ObjId z = 0; z < c.object_count(); ++z)
    if (leq(c, x, z) && leq(c, y, z) && (!best || leq(c, z, *best))) best = z;
  if (best)
    for (ObjId z = 0; z < c.object_count(); ++z)
      if (leq(c, x, z) && leq(c, y, z) && !leq(c, *best, z)) return std::nullopt;
  return best;
}

std::optional<ObjId> implication(const FinCategory& c, ObjId x, ObjId y) {
  std::optional<ObjId> best;
  for (ObjId z = 0; z < c.object_count(); ++z) {
    auto m = meet(c, z, x);
    if (m && leq(c, *m, y) && (!best || leq(c, *best, z))) best = z;
  }
  return best;
}

Functor thin_functor_n(std::span<const CategoryPtr> sources, const CategoryPtr& target,
                       const std::function<ObjId(std::span<const ObjId>)>& fn) {
  CategoryPtr src = product(sources);
  TupleSpace os = object_space(sources);
  std::vector<ObjId> obj(os.size());
  std::vector<std::uint32_t> tup(sources.size());
  for (std::size_t i = 0; i < os.size(); ++i) {
    os.decode_into(i, tup);
    obj[i] = fn(tup);
  }
  return thin_functor(src, target, std::move(obj));
}

}  // namespace catmates
