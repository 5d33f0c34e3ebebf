#include "catmates/colimit.hpp"

#include "catmates/error.hpp"

namespace catmates {

std::vector<Cocone> cocones(const Diagram& d, ObjId apex) {
  const FinCategory& J = *d.shape;
  const FinCategory& C = *d.labeling.target;
  const Functor& D = d.labeling;
  std::vector<Cocone> out;
  Cocone cur{apex, std::vector<MorId>(J.object_count())};
  // Backtrack over shape objects; a leg is checked against every shape
  // morphism between already-assigned objects.
  auto compatible = [&](ObjId j) {
    for (ObjId i = 0; i <= j; ++i) {
      for (MorId m : J.hom(i, j))
        if (C.compose(cur.legs[j], D.mor[m]) != cur.legs[i]) return false;
      if (i == j) continue;
      for (MorId m : J.hom(j, i))
        if (C.compose(cur.legs[i], D.mor[m]) != cur.legs[j]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, ObjId j) -> void {
    if (j == J.object_count()) {
      out.push_back(cur);
      return;
    }
    for (MorId leg : C.hom(D.obj[j], apex)) {
      cur.legs[j] = leg;
      if (compatible(j)) self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Cocone> all_cocones(const Diagram& d) {
  std::vector<Cocone> out;
  for (ObjId x = 0; x < d.labeling.target->object_count(); ++x) {
    auto cs = cocones(d, x);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

std::vector<MorId> factorizations(const Diagram& d, const Cocone& from, const Cocone& to) {
  const FinCategory& C = *d.labeling.target;
  std::vector<MorId> out;
  for (MorId u : C.hom(from.apex, to.apex)) {
    bool ok = true;
    for (std::size_t j = 0; j < from.legs.size() && ok; ++j)
      ok = C.compose(u, from.legs[j]) == to.legs[j];
    if (ok) out.push_back(u);
  }
  return out;
}

std::optional<Cocone> colimit(const Diagram& d) {
  auto all = all_cocones(d);
  for (const auto& cand : all) {
    bool initial = true;
    for (const auto& other : all)
      if (factorizations(d, cand, other).size() != 1) {
        initial = false;
        break;
      }
    if (initial) return cand;
  }
  return std::nullopt;
}

MorId factor_through(const Diagram& d, const Cocone& colim, const Cocone& other) {
  auto us = factorizations(d, colim, other);
  if (us.size() != 1) fail(ErrorCode::NoColimit, "cocone is not initial");
  return us.front();
}

}  // namespace catmates
