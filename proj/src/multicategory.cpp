#include "catmates/multicategory.hpp"

#include "catmates/catalog.hpp"
#include "catmates/error.hpp"

#include <memory>

namespace catmates {

FinMulticategory::FinMulticategory(std::string name, std::vector<std::string> objects, std::vector<Map> maps,
                                   std::vector<MapId> identities, std::size_t arity_bound, Composer composer)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      maps_(std::move(maps)),
      identities_(std::move(identities)),
      bound_(arity_bound),
      composer_(std::move(composer)),
      into_(objects_.size()) {
  for (MapId f = 0; f < maps_.size(); ++f) {
    into_[maps_[f].output].push_back(f);
    std::vector<ObjIx> key = maps_[f].inputs;
    key.push_back(maps_[f].output);
    homs_[key].push_back(f);
  }
}

MapId FinMulticategory::compose(MapId g, std::span<const MapId> fs) const {
  if (!overrides_.empty()) {
    std::vector<MapId> key{g};
    key.insert(key.end(), fs.begin(), fs.end());
    if (auto it = overrides_.find(key); it != overrides_.end()) return it->second;
  }
  return composer_(*this, g, fs);
}

std::span<const MapId> FinMulticategory::hom(std::span<const ObjIx> inputs, ObjIx output) const {
  std::vector<ObjIx> key(inputs.begin(), inputs.end());
  key.push_back(output);
  auto it = homs_.find(key);
  if (it == homs_.end()) return {};
  return it->second;
}

void FinMulticategory::override_composite(MapId g, std::vector<MapId> fs, MapId r) {
  fs.insert(fs.begin(), g);
  overrides_[std::move(fs)] = r;
}

FinMulticategory endomorphism_multicategory(std::size_t set_size, std::size_t arity_bound, std::size_t max_maps) {
  if (set_size == 0) fail(ErrorCode::NotFinite, "endomorphism multicategory of the empty set");
  // offsets[n]: first id of arity n; a map of arity n is its value table, read
  // as a base-set_size number with the first tuple most significant.
  std::vector<std::size_t> offsets{0}, tuples;
  std::size_t total = 0;
  for (std::size_t n = 0; n <= arity_bound; ++n) {
    std::size_t t = 1, count = 1;
    for (std::size_t k = 0; k < n; ++k) t *= set_size;
    for (std::size_t k = 0; k < t; ++k) {
      count *= set_size;
      if (count > max_maps) fail(ErrorCode::SizeOverflow, "endomorphism multicategory: arity " + std::to_string(n));
    }
    tuples.push_back(t);
    total += count;
    if (total > max_maps) fail(ErrorCode::SizeOverflow, "endomorphism multicategory: more than " + std::to_string(max_maps));
    offsets.push_back(total);
  }
  auto arity_of = [offsets](MapId f) {
    std::size_t n = 0;
    while (f >= offsets[n + 1]) ++n;
    return n;
  };
  auto table = [=](MapId f) {
    std::size_t n = arity_of(f), code = f - offsets[n];
    std::vector<std::size_t> out(tuples[n]);
    for (std::size_t k = tuples[n]; k-- > 0;) {
      out[k] = code % set_size;
      code /= set_size;
    }
    return out;
  };
  auto encode = [=](const std::vector<std::size_t>& values) {
    std::size_t n = 0;
    while (tuples[n] != values.size()) ++n;
    std::size_t code = 0;
    for (auto v : values) code = code * set_size + v;
    return offsets[n] + code;
  };
  auto tables = std::make_shared<std::vector<std::vector<std::size_t>>>();
  std::vector<FinMulticategory::Map> maps(total);
  for (MapId f = 0; f < total; ++f) {
    tables->push_back(table(f));
    maps[f].inputs.assign(arity_of(f), 0);
    std::string s = "f[";
    for (auto v : tables->back()) s += std::to_string(v);
    maps[f].name = s + "]";
  }
  std::vector<std::size_t> id_table(set_size);
  for (std::size_t v = 0; v < set_size; ++v) id_table[v] = v;
  const MapId id = encode(id_table);
  auto composer = [=](const FinMulticategory& m, MapId g, std::span<const MapId> fs) -> MapId {
    std::size_t n = 0;
    for (auto f : fs) n += m.inputs(f).size();
    if (n > arity_bound) return kNoMap;
    const auto& gt = (*tables)[g];
    std::size_t count = 1;
    for (std::size_t k = 0; k < n; ++k) count *= set_size;
    // Walk the input tuples in order, tracking each f_i's argument index.
    std::vector<std::size_t> digits(n, 0);
    std::size_t code = 0;
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t pos = 0, gi = 0;
      for (auto f : fs) {
        std::size_t fi = 0;
        for (std::size_t k = 0, a = m.inputs(f).size(); k < a; ++k) fi = fi * set_size + digits[pos++];
        gi = gi * set_size + (*tables)[f][fi];
      }
      code = code * set_size + gt[gi];
      for (std::size_t k = n; k-- > 0;) {
        if (++digits[k] < set_size) break;
        digits[k] = 0;
      }
    }
    return offsets[n] + code;
  };
  return FinMulticategory("End" + std::to_string(set_size), {"X"}, std::move(maps), {id}, arity_bound, composer);
}

FinMulticategory terminal_multicategory(std::size_t arity_bound) {
  std::vector<FinMulticategory::Map> maps;
  for (std::size_t n = 0; n <= arity_bound; ++n)
    maps.push_back({std::vector<ObjIx>(n, 0), 0, "m" + std::to_string(n)});
  auto composer = [arity_bound](const FinMulticategory& m, MapId, std::span<const MapId> fs) -> MapId {
    std::size_t n = 0;
    for (auto f : fs) n += m.inputs(f).size();
    return n > arity_bound ? kNoMap : n;
  };
  return FinMulticategory("Term", {"*"}, std::move(maps), {1}, arity_bound, composer);
}

FinMulticategory monoid_multicategory(std::string name, std::size_t size,
                                      const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& op,
                                      std::uint64_t unit) {
  if (unit >= size) fail(ErrorCode::NotFinite, name + ": unit " + std::to_string(unit) + " outside the carrier");
  std::vector<MapId> table(size * size);
  for (std::uint64_t a = 0; a < size; ++a)
    for (std::uint64_t b = 0; b < size; ++b) {
      std::uint64_t c = op(a, b);
      if (c >= size)
        fail(ErrorCode::NotFinite, name + ": " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                                       std::to_string(c) + " outside the carrier");
      table[a * size + b] = c;
    }
  std::vector<FinMulticategory::Map> maps;
  for (std::uint64_t a = 0; a < size; ++a) maps.push_back({{0}, 0, std::to_string(a)});
  auto composer = [table, size](const FinMulticategory&, MapId g, std::span<const MapId> fs) -> MapId {
    return table[g * size + fs[0]];
  };
  return FinMulticategory(std::move(name), {"*"}, std::move(maps), {unit}, 1, composer);
}

FinMulticategory monoidal_poset_multicategory(const CategoryPtr& c, const std::function<ObjId(ObjId, ObjId)>& tensor,
                                              ObjId unit, std::size_t arity_bound) {
  if (!c->is_thin()) fail(ErrorCode::BoundaryMismatch, c->name() + " is not thin");
  const std::size_t k = c->object_count();
  std::vector<std::string> objects;
  for (ObjId x = 0; x < k; ++x) objects.push_back(c->object_name(x));
  std::vector<FinMulticategory::Map> maps;
  std::vector<MapId> ids(k);
  for (std::size_t n = 0; n <= arity_bound; ++n) {
    std::vector<ObjIx> t(n, 0);
    while (true) {
      ObjId prod = unit;
      for (auto x : t) prod = tensor(prod, static_cast<ObjId>(x));
      for (ObjId out = 0; out < k; ++out) {
        if (!leq(*c, prod, out)) continue;
        std::string name;
        for (std::size_t i = 0; i < n; ++i) name += (i ? "," : "") + objects[t[i]];
        if (n == 1 && t[0] == out) ids[out] = maps.size();
        maps.push_back({t, out, name + "<=" + objects[out]});
      }
      std::size_t s = n;
      while (s > 0 && ++t[s - 1] == k) t[--s] = 0;
      if (s == 0) break;
    }
  }
  auto composer = [arity_bound](const FinMulticategory& m, MapId g, std::span<const MapId> fs) -> MapId {
    std::vector<ObjIx> in;
    for (auto f : fs) {
      auto fi = m.inputs(f);
      in.insert(in.end(), fi.begin(), fi.end());
    }
    if (in.size() > arity_bound) return kNoMap;
    auto h = m.hom(in, m.output(g));
    return h.empty() ? kNoMap : h[0];
  };
  return FinMulticategory("M_" + c->name(), std::move(objects), std::move(maps), std::move(ids), arity_bound,
                          composer);
}

CyclicStructure trivial_cyclic_structure(const FinMulticategory& m) {
  CyclicStructure c;
  for (ObjIx x = 0; x < m.object_count(); ++x) c.star.push_back(x);
  for (MapId f = 0; f < m.map_count(); ++f) c.sigma.push_back(f);
  return c;
}

CyclicStructure thin_cyclic_structure(const FinMulticategory& m, std::vector<ObjIx> star) {
  CyclicStructure c{std::move(star), {}};
  for (MapId f = 0; f < m.map_count(); ++f) {
    const auto& mp = m.map(f);
    if (mp.inputs.empty()) {
      c.sigma.push_back(f);
      continue;
    }
    std::vector<ObjIx> in(mp.inputs.begin() + 1, mp.inputs.end());
    in.push_back(c.star[mp.output]);
    auto h = m.hom(in, c.star[mp.inputs[0]]);
    c.sigma.push_back(h.empty() ? kNoMap : h[0]);
  }
  return c;
}

}  // namespace catmates
