#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "catmates/category.hpp"
#include "catmates/report.hpp"

namespace catmates {

using MapId = std::size_t;
using ObjIx = std::size_t;
inline constexpr MapId kNoMap = static_cast<MapId>(-1);

// A finite multicategory presented by ids. The laws quantify over the
// multimaps 0..map_count()-1 (listed by output in maps_into); compose and
// sigma may return further ids, or kNoMap when the result lies outside the
// universe. compose is only called when the result arity is within the bound.
template <class M>
concept MulticategoryModel = requires(M& m, ObjIx x, MapId f, std::span<const MapId> fs) {
  { m.object_count() } -> std::convertible_to<std::size_t>;
  { m.map_count() } -> std::convertible_to<std::size_t>;
  { m.arity_bound() } -> std::convertible_to<std::size_t>;
  { m.maps_into(x) } -> std::convertible_to<std::span<const MapId>>;
  { m.inputs(f) } -> std::convertible_to<std::span<const ObjIx>>;
  { m.output(f) } -> std::convertible_to<ObjIx>;
  { m.identity(x) } -> std::convertible_to<MapId>;
  { m.compose(f, fs) } -> std::convertible_to<MapId>;
  { m.object_name(x) } -> std::convertible_to<std::string>;
  { m.map_name(f) } -> std::convertible_to<std::string>;
};

// sigma : X(x1..xn; x0) -> X(x2..xn, x0*; x1*); on nullary maps it is the identity.
template <class M>
concept CyclicModel = MulticategoryModel<M> && requires(M& m, ObjIx x, MapId f) {
  { m.star(x) } -> std::convertible_to<ObjIx>;
  { m.sigma(f) } -> std::convertible_to<MapId>;
};

struct CheckOptions {
  // Per law: when a law has more instances than this, that many are drawn at random.
  std::size_t max_instances = 200000;
  std::uint64_t seed = 1;
};

// Multicategory given by tables, with composition computed by a callback.
class FinMulticategory {
 public:
  struct Map {
    std::vector<ObjIx> inputs;
    ObjIx output = 0;
    std::string name;
  };
  using Composer = std::function<MapId(const FinMulticategory&, MapId g, std::span<const MapId> fs)>;

  FinMulticategory(std::string name, std::vector<std::string> objects, std::vector<Map> maps,
                   std::vector<MapId> identities, std::size_t arity_bound, Composer composer);

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t map_count() const { return maps_.size(); }
  std::size_t arity_bound() const { return bound_; }
  std::span<const MapId> maps_into(ObjIx x) const { return into_[x]; }
  std::span<const ObjIx> inputs(MapId f) const { return maps_[f].inputs; }
  ObjIx output(MapId f) const { return maps_[f].output; }
  MapId identity(ObjIx x) const { return identities_[x]; }
  MapId compose(MapId g, std::span<const MapId> fs) const;
  std::string object_name(ObjIx x) const { return objects_[x]; }
  std::string map_name(MapId f) const { return f < maps_.size() ? maps_[f].name : "<none>"; }

  const Map& map(MapId f) const { return maps_[f]; }
  // The hom-set X(inputs; output), in id order.
  std::span<const MapId> hom(std::span<const ObjIx> inputs, ObjIx output) const;

  // Perturbation hook: compose(g, fs) returns r from now on.
  void override_composite(MapId g, std::vector<MapId> fs, MapId r);

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Map> maps_;
  std::vector<MapId> identities_;
  std::size_t bound_;
  Composer composer_;
  std::vector<std::vector<MapId>> into_;
  std::map<std::vector<ObjIx>, std::vector<MapId>> homs_;  // key: inputs then output
  std::map<std::vector<MapId>, MapId> overrides_;
};

struct CyclicStructure {
  std::vector<ObjIx> star;
  std::vector<MapId> sigma;  // kNoMap where no image exists
};

// A FinMulticategory together with a cyclic structure, as a CyclicModel.
class CyclicFinMulticategory {
 public:
  CyclicFinMulticategory(const FinMulticategory& m, const CyclicStructure& c) : m_(m), c_(c) {}
  std::size_t object_count() const { return m_.object_count(); }
  std::size_t map_count() const { return m_.map_count(); }
  std::size_t arity_bound() const { return m_.arity_bound(); }
  std::span<const MapId> maps_into(ObjIx x) const { return m_.maps_into(x); }
  std::span<const ObjIx> inputs(MapId f) const { return m_.inputs(f); }
  ObjIx output(MapId f) const { return m_.output(f); }
  MapId identity(ObjIx x) const { return m_.identity(x); }
  MapId compose(MapId g, std::span<const MapId> fs) const { return m_.compose(g, fs); }
  std::string object_name(ObjIx x) const { return m_.object_name(x); }
  std::string map_name(MapId f) const { return m_.map_name(f); }
  ObjIx star(ObjIx x) const { return c_.star[x]; }
  MapId sigma(MapId f) const { return f < c_.sigma.size() ? c_.sigma[f] : kNoMap; }

 private:
  const FinMulticategory& m_;
  const CyclicStructure& c_;
};

// Functions X^n -> X on {0..set_size-1} for n <= arity_bound. SizeOverflow
// when there would be more than max_maps of them.
FinMulticategory endomorphism_multicategory(std::size_t set_size, std::size_t arity_bound,
                                            std::size_t max_maps = 100000);
// One object and exactly one multimap of each arity.
FinMulticategory terminal_multicategory(std::size_t arity_bound);
// A monoid on {0..size-1} as a one-object multicategory with unary maps only.
// NotFinite when op leaves the carrier.
FinMulticategory monoid_multicategory(std::string name, std::size_t size,
                                      const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& op,
                                      std::uint64_t unit);
// M_C(x1..xk; x0) = C(x1 ⊗ ... ⊗ xk, x0) for a thin category C with a monotone
// associative tensor and unit (the empty tensor).
FinMulticategory monoidal_poset_multicategory(const CategoryPtr& c, const std::function<ObjId(ObjId, ObjId)>& tensor,
                                              ObjId unit, std::size_t arity_bound);

// star = identity on objects, sigma = identity on maps.
CyclicStructure trivial_cyclic_structure(const FinMulticategory& m);
// For a multicategory with at most one map per hom-set: sigma(f) is the unique
// map of the target hom-set, kNoMap when that hom-set is empty.
CyclicStructure thin_cyclic_structure(const FinMulticategory& m, std::vector<ObjIx> star);

namespace mc_detail {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

 private:
  std::mt19937_64 rng_;
};

template <class M>
std::string describe(M& m, MapId f) {
  if (f == kNoMap) return "<none>";
  std::string s = m.map_name(f) + ":(";
  auto in = m.inputs(f);
  for (std::size_t i = 0; i < in.size(); ++i) s += (i ? "," : "") + m.object_name(in[i]);
  return s + ";" + m.object_name(m.output(f)) + ")";
}

template <class M>
std::vector<ObjIx> inputs_of(M& m, MapId f) {
  auto in = m.inputs(f);
  return {in.begin(), in.end()};
}

// compose with typing check; records a Typing violation on a mistyped result.
template <class M>
MapId checked_compose(M& m, MapId g, std::span<const MapId> fs, Report& r) {
  MapId c = m.compose(g, fs);
  if (c == kNoMap) {
    std::string w = describe(m, g) + " after";
    for (auto f : fs) w += " " + describe(m, f);
    r.fail("Closure", w);
    return kNoMap;
  }
  std::vector<ObjIx> want;
  for (auto f : fs) {
    auto in = m.inputs(f);
    want.insert(want.end(), in.begin(), in.end());
  }
  auto got = m.inputs(c);
  if (m.output(c) != m.output(g) || !std::equal(got.begin(), got.end(), want.begin(), want.end()))
    r.fail("Typing", "composite of " + describe(m, g) + " is " + describe(m, c));
  return c;
}

// g ∘_i f (i 0-based), identities elsewhere.
template <class M>
MapId compose_at(M& m, MapId g, std::size_t i, MapId f, Report& r) {
  auto in = inputs_of(m, g);
  std::vector<MapId> fs;
  for (std::size_t j = 0; j < in.size(); ++j) fs.push_back(j == i ? f : m.identity(in[j]));
  return checked_compose(m, g, fs, r);
}

template <class M>
std::size_t arity(M& m, MapId f) {
  return m.inputs(f).size();
}

// Runs body over the instances produced by enumerate (exhaustively) unless
// there are more than opt.max_instances of them, in which case body runs on
// opt.max_instances instances from sample (which may return false to skip).
template <class Inst, class Enumerate, class Sample, class Body>
void over_instances(const CheckOptions& opt, Draw& draw, Enumerate&& enumerate, Sample&& sample, Body&& body) {
  std::size_t count = 0;
  enumerate([&](const Inst&) { return ++count <= opt.max_instances; });
  if (count <= opt.max_instances) {
    enumerate([&](const Inst& x) {
      body(x);
      return true;
    });
    return;
  }
  Inst x;
  std::size_t done = 0;
  for (std::size_t tries = 0; done < opt.max_instances && tries < 20 * opt.max_instances; ++tries)
    if (sample(draw, x)) {
      body(x);
      ++done;
    }
}

struct Single {
  MapId g = 0;
  std::size_t slot = 0;
  MapId f = 0;
};

struct Nested {
  MapId g = 0;
  std::vector<MapId> fs;
  std::vector<std::vector<MapId>> hs;
};

template <class M>
std::vector<MapId> non_nullary(M& m) {
  std::vector<MapId> out;
  for (MapId g = 0; g < m.map_count(); ++g)
    if (arity(m, g) > 0) out.push_back(g);
  return out;
}

// All (g, i, f) with f composable into slot i and result arity within the bound.
template <class M>
auto single_enumerator(M& m) {
  return [&m](auto&& visit) {
    for (MapId g = 0; g < m.map_count(); ++g) {
      auto in = inputs_of(m, g);
      for (std::size_t i = 0; i < in.size(); ++i)
        for (MapId f : m.maps_into(in[i])) {
          if (in.size() + arity(m, f) - 1 > m.arity_bound()) continue;
          if (!visit(Single{g, i, f})) return;
        }
    }
  };
}

template <class M>
auto single_sampler(M& m, std::vector<MapId> gs) {
  return [&m, gs = std::move(gs)](Draw& d, Single& x) {
    if (gs.empty()) return false;
    x.g = gs[d.below(gs.size())];
    auto in = inputs_of(m, x.g);
    x.slot = d.below(in.size());
    auto into = m.maps_into(in[x.slot]);
    if (into.empty()) return false;
    x.f = into[d.below(into.size())];
    return in.size() + arity(m, x.f) - 1 <= m.arity_bound();
  };
}

}  // namespace mc_detail

template <MulticategoryModel M>
Report check_multicategory(M& m, const CheckOptions& opt = {}) {
  using namespace mc_detail;
  Report r;
  Draw draw(opt.seed);
  for (ObjIx x = 0; x < m.object_count(); ++x) {
    MapId id = m.identity(x);
    auto in = m.inputs(id);
    r.expect(in.size() == 1 && in[0] == x && m.output(id) == x, "Typing", "identity of " + m.object_name(x));
    for (MapId f : m.maps_into(x)) r.expect(m.output(f) == x, "Typing", [&] { return describe(m, f); });
  }
  for (MapId f = 0; f < m.map_count(); ++f) {
    r.expect(arity(m, f) <= m.arity_bound(), "Typing", [&] { return "arity of " + describe(m, f); });
    MapId id = m.identity(m.output(f));
    MapId left = checked_compose(m, id, std::span<const MapId>(&f, 1), r);
    r.expect(left == f, "LeftUnit", [&] { return describe(m, f); });
    std::vector<MapId> ids;
    for (ObjIx x : inputs_of(m, f)) ids.push_back(m.identity(x));
    r.expect(checked_compose(m, f, ids, r) == f, "RightUnit", [&] { return describe(m, f); });
  }

  // (g ∘ (f_i)) ∘ (h_ij) = g ∘ (f_i ∘ (h_ij)), intermediate and final arities within the bound.
  const std::size_t bound = m.arity_bound();
  auto enumerate = [&](auto&& visit) {
    Nested x;
    bool go = true;
    std::function<void(std::size_t, std::size_t, std::size_t)> hs;  // (slot i, input j, arity so far)
    std::function<void(std::size_t, std::size_t)> fs;              // (slot i, middle arity so far)
    std::vector<ObjIx> gin;
    hs = [&](std::size_t i, std::size_t j, std::size_t total) {
      if (!go) return;
      if (i == x.fs.size()) {
        go = visit(x);
        return;
      }
      auto fin = inputs_of(m, x.fs[i]);
      if (j == fin.size()) return hs(i + 1, 0, total);
      for (MapId h : m.maps_into(fin[j])) {
        std::size_t t = total + arity(m, h);
        if (t > bound) continue;
        x.hs[i].push_back(h);
        hs(i, j + 1, t);
        x.hs[i].pop_back();
        if (!go) return;
      }
    };
    fs = [&](std::size_t i, std::size_t a) {
      if (!go) return;
      if (i == gin.size()) {
        x.hs.assign(x.fs.size(), {});
        return hs(0, 0, 0);
      }
      for (MapId f : m.maps_into(gin[i])) {
        std::size_t t = a + arity(m, f);
        if (t > bound) continue;
        x.fs.push_back(f);
        fs(i + 1, t);
        x.fs.pop_back();
        if (!go) return;
      }
    };
    for (MapId g = 0; g < m.map_count() && go; ++g) {
      x.g = g;
      x.fs.clear();
      gin = inputs_of(m, g);
      fs(0, 0);
    }
  };
  auto sample = [&](Draw& d, Nested& x) {
    if (m.map_count() == 0) return false;
    x.g = d.below(m.map_count());
    x.fs.clear();
    x.hs.clear();
    std::size_t a = 0, t = 0;
    for (ObjIx y : inputs_of(m, x.g)) {
      auto into = m.maps_into(y);
      if (into.empty()) return false;
      MapId f = into[d.below(into.size())];
      a += arity(m, f);
      x.fs.push_back(f);
      x.hs.emplace_back();
      for (ObjIx z : inputs_of(m, f)) {
        auto into2 = m.maps_into(z);
        if (into2.empty()) return false;
        MapId h = into2[d.below(into2.size())];
        t += arity(m, h);
        x.hs.back().push_back(h);
      }
    }
    return a <= bound && t <= bound;
  };
  over_instances<Nested>(opt, draw, enumerate, sample, [&](const Nested& x) {
    MapId gf = checked_compose(m, x.g, x.fs, r);
    std::vector<MapId> flat, inner;
    for (std::size_t i = 0; i < x.fs.size(); ++i) {
      flat.insert(flat.end(), x.hs[i].begin(), x.hs[i].end());
      inner.push_back(checked_compose(m, x.fs[i], x.hs[i], r));
    }
    if (gf == kNoMap || std::find(inner.begin(), inner.end(), kNoMap) != inner.end()) return;
    MapId lhs = checked_compose(m, gf, flat, r);
    MapId rhs = checked_compose(m, x.g, inner, r);
    r.expect(lhs == rhs, "Associativity", [&] {
      std::string w = describe(m, x.g);
      for (auto f : x.fs) w += " | " + describe(m, f);
      return w;
    });
  });
  return r;
}

template <CyclicModel M>
Report check_cyclic(M& m, const CheckOptions& opt = {}) {
  using namespace mc_detail;
  Report r;
  Draw draw(opt.seed + 1);
  for (ObjIx x = 0; x < m.object_count(); ++x) {
    ObjIx s = m.star(x);
    r.expect(s < m.object_count() && m.star(s) == x, "Involution", m.object_name(x));
  }
  if (!r.ok()) return r;
  // Typing of sigma and axiom 1: sigma^(n+1) = 1 on n-ary maps.
  for (MapId f = 0; f < m.map_count(); ++f) {
    auto in = inputs_of(m, f);
    MapId s = m.sigma(f);
    if (s == kNoMap) {
      r.fail("SigmaTyping", describe(m, f) + " has no image");
      continue;
    }
    std::vector<ObjIx> want;
    ObjIx out = m.output(f);
    if (!in.empty()) {
      want.assign(in.begin() + 1, in.end());
      want.push_back(m.star(out));
      out = m.star(in[0]);
    }
    auto got = m.inputs(s);
    if (m.output(s) != out || !std::equal(got.begin(), got.end(), want.begin(), want.end())) {
      r.fail("SigmaTyping", describe(m, f) + " goes to " + describe(m, s));
      continue;
    }
    MapId c = f;
    for (std::size_t k = 0; k <= in.size() && c != kNoMap; ++k) c = m.sigma(c);
    r.expect(c == f, "Cyclicity", [&] { return describe(m, f); });
  }
  // Axiom 2: sigma(1_x) = 1_{x*}.
  for (ObjIx x = 0; x < m.object_count(); ++x)
    r.expect(m.sigma(m.identity(x)) == m.identity(m.star(x)), "IdentityPreserved", m.object_name(x));
  if (!r.ok()) return r;
  // Axiom 3: sigma(g ∘_1 f) = (sigma f) ∘_last (sigma g) for f of positive
  // arity, sigma(g ∘_i f) = (sigma g) ∘_{i-1} f for i >= 2.
  over_instances<Single>(opt, draw, single_enumerator(m), single_sampler(m, non_nullary(m)), [&](const Single& x) {
    const std::size_t n = arity(m, x.f);
    if (x.slot == 0 && n == 0) return;
    MapId c = compose_at(m, x.g, x.slot, x.f, r);
    if (c == kNoMap) return;
    MapId lhs = m.sigma(c);
    MapId rhs = x.slot == 0 ? compose_at(m, m.sigma(x.f), n - 1, m.sigma(x.g), r)
                            : compose_at(m, m.sigma(x.g), x.slot - 1, x.f, r);
    r.expect(lhs == rhs && lhs != kNoMap, "SigmaComposition", [&] {
      return describe(m, x.g) + " slot " + std::to_string(x.slot + 1) + " " + describe(m, x.f);
    });
  });
  return r;
}

inline Report check_multicategory(const FinMulticategory& m, const CheckOptions& opt = {}) {
  return check_multicategory<const FinMulticategory>(m, opt);
}
inline Report check_cyclic(const FinMulticategory& m, const CyclicStructure& c, const CheckOptions& opt = {}) {
  CyclicFinMulticategory v(m, c);
  return check_cyclic(v, opt);
}

// Forwards to a model, with single entries replaced. Used for mutation tests.
template <CyclicModel M>
class Mutant {
 public:
  explicit Mutant(M& base) : base_(base) {}
  std::map<MapId, MapId> sigma_at;
  std::map<ObjIx, MapId> identity_at;
  std::map<std::vector<MapId>, MapId> composite_at;  // key: g then fs

  std::size_t object_count() { return base_.object_count(); }
  std::size_t map_count() { return base_.map_count(); }
  std::size_t arity_bound() { return base_.arity_bound(); }
  std::span<const MapId> maps_into(ObjIx x) { return base_.maps_into(x); }
  std::span<const ObjIx> inputs(MapId f) { return base_.inputs(f); }
  ObjIx output(MapId f) { return base_.output(f); }
  MapId identity(ObjIx x) {
    auto it = identity_at.find(x);
    return it == identity_at.end() ? base_.identity(x) : it->second;
  }
  MapId compose(MapId g, std::span<const MapId> fs) {
    std::vector<MapId> key{g};
    key.insert(key.end(), fs.begin(), fs.end());
    auto it = composite_at.find(key);
    return it == composite_at.end() ? base_.compose(g, fs) : it->second;
  }
  std::string object_name(ObjIx x) { return base_.object_name(x); }
  std::string map_name(MapId f) { return base_.map_name(f); }
  ObjIx star(ObjIx x) { return base_.star(x); }
  MapId sigma(MapId f) {
    auto it = sigma_at.find(f);
    return it == sigma_at.end() ? base_.sigma(f) : it->second;
  }

 private:
  M& base_;
};

}  // namespace catmates
