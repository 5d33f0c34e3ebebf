#include "catmates/io.hpp"

#include <fstream>

#include "catmates/catalog.hpp"
#include "catmates/error.hpp"
#include "detail.hpp"

namespace catmates::io {

namespace fs = std::filesystem;
using detail::Tuple;

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::string text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  bad("expected a name, got " + v.dump());
}

std::size_t count(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("expected a non-negative integer for ") + what);
  return v.get<std::size_t>();
}

ObjId object_of(const FinCategory& c, const Json& v) {
  if (v.is_number_integer()) {
    auto k = v.get<long long>();
    if (k < 0 || static_cast<std::size_t>(k) >= c.object_count())
      bad("object index " + std::to_string(k) + " out of range in " + c.name());
    return static_cast<ObjId>(k);
  }
  return c.object(text(v));
}

MorId morphism_of(const FinCategory& c, const Json& v) {
  if (v.is_number_integer()) {
    auto k = v.get<long long>();
    if (k < 0 || static_cast<std::size_t>(k) >= c.morphism_count())
      bad("morphism index " + std::to_string(k) + " out of range in " + c.name());
    return static_cast<MorId>(k);
  }
  return c.morphism_id(text(v));
}

void expect_schema(const Json& doc, std::string_view schema) {
  if (schema_of(doc) != schema) bad("expected schema " + std::string(schema) + ", got " + schema_of(doc));
}

// Key of a tuple of objects: their names joined by commas.
std::string tuple_key(std::span<const CategoryPtr> cats, std::span<const ObjId> t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + cats[i]->object_name(t[i]);
  return s;
}

Permutation permutation(const Json& v, std::size_t size, const std::string& where) {
  if (!v.is_array() || v.size() != size) bad("permutation of size " + std::to_string(size) + " expected at " + where);
  Permutation p;
  std::vector<bool> seen(size);
  for (const auto& e : v) {
    std::size_t k = count(e, "permutation entries");
    if (k >= size || seen[k]) bad("not a permutation at " + where);
    seen[k] = true;
    p.push_back(static_cast<std::uint32_t>(k));
  }
  return p;
}

std::vector<ObjId> object_map(const Json& v, const FinCategory& src, const FinCategory& tgt) {
  std::vector<ObjId> out(src.object_count());
  if (v.is_array()) {
    if (v.size() != src.object_count()) bad("obj_map needs one entry per object of " + src.name());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = object_of(tgt, v[i]);
  } else if (v.is_object()) {
    if (v.size() != src.object_count()) bad("obj_map needs one entry per object of " + src.name());
    for (const auto& [k, x] : v.items()) out[src.object(k)] = object_of(tgt, x);
  } else {
    bad("obj_map must be an array or an object");
  }
  return out;
}

std::vector<MorId> morphism_map(const Json& v, const FinCategory& src, const FinCategory& tgt) {
  std::vector<MorId> out(src.morphism_count());
  if (v.is_array()) {
    if (v.size() != src.morphism_count()) bad("mor_map needs one entry per morphism of " + src.name());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = morphism_of(tgt, v[i]);
  } else if (v.is_object()) {
    if (v.size() != src.morphism_count()) bad("mor_map needs one entry per morphism of " + src.name());
    for (const auto& [k, x] : v.items()) out[src.morphism_id(k)] = morphism_of(tgt, x);
  } else {
    bad("mor_map must be an array or an object");
  }
  return out;
}

Chirality chirality_of(const Json& doc) {
  if (!doc.contains("chirality")) return Chirality::Left;
  auto c = text(doc.at("chirality"));
  if (c == "left") return Chirality::Left;
  if (c == "right") return Chirality::Right;
  bad("chirality must be \"left\" or \"right\"");
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    bad(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

std::string schema_of(const Json& doc) {
  if (!doc.is_object() || !doc.contains("schema") || !doc.at("schema").is_string())
    bad("document has no \"schema\" tag");
  return doc.at("schema").get<std::string>();
}

Json Loader::read(const fs::path& p) {
  std::error_code ec;
  fs::path key = fs::weakly_canonical(p, ec);
  if (ec) key = p;
  if (auto it = files_.find(key); it != files_.end()) return it->second;
  std::ifstream in(p);
  if (!in) bad("cannot open " + p.string());
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded()) bad("invalid JSON in " + p.string());
  return files_.emplace(key, std::move(doc)).first->second;
}

std::pair<Json, fs::path> Loader::resolve(const Json& ref, const fs::path& dir) {
  if (ref.is_string()) {
    fs::path p = dir / ref.get<std::string>();
    return {read(p), p.parent_path()};
  }
  if (ref.is_object()) return {ref, dir};
  bad("expected a file path or an inline document, got " + ref.dump());
}

RawCategory Loader::raw_category(const Json& doc) {
  return guarded([&] {
    expect_schema(doc, "fincat/1");
    RawCategory raw;
    raw.name = doc.contains("name") ? text(doc.at("name")) : std::string("unnamed");
    for (const auto& o : field(doc, "objects")) raw.objects.push_back(text(o));
    for (const auto& m : field(doc, "morphisms"))
      raw.morphisms.push_back({text(field(m, "id")), text(field(m, "src")), text(field(m, "tgt"))});
    const Json& ids = field(doc, "identities");
    if (!ids.is_object()) bad("identities must map objects to morphisms");
    for (const auto& [o, m] : ids.items()) raw.identities.emplace_back(o, text(m));
    for (const auto& c : field(doc, "composition")) {
      if (!c.is_array() || c.size() != 3) bad("composition entries are [g, f, g∘f]");
      raw.composition.push_back({text(c[0]), text(c[1]), text(c[2])});
    }
    return raw;
  });
}

CategoryPtr Loader::category(const Json& ref, const fs::path& dir) {
  return guarded([&]() -> CategoryPtr {
    if (ref.is_string()) {
      const auto s = ref.get<std::string>();
      if (s.starts_with("builtin:")) {
        if (auto c = builtin_category(std::string_view(s).substr(8))) return c;
        bad("unknown builtin category " + s);
      }
      std::error_code ec;
      fs::path key = fs::weakly_canonical(dir / s, ec);
      if (ec) key = dir / s;
      if (auto it = cats_.find(key); it != cats_.end()) return it->second;
      auto c = make_category(raw_category(read(dir / s)));
      cats_.emplace(key, c);
      return c;
    }
    if (ref.is_object() && ref.contains("opposite")) return opposite(category(ref.at("opposite"), dir));
    if (ref.is_object() && ref.contains("arrow")) return arrow_category(category(ref.at("arrow"), dir));
    if (ref.is_object() && ref.contains("product")) {
      std::vector<CategoryPtr> cs;
      for (const auto& r : ref.at("product")) cs.push_back(category(r, dir));
      return product(cs);
    }
    if (ref.is_object()) return make_category(raw_category(ref));
    bad("expected a category reference, got " + ref.dump());
  });
}

Functor Loader::functor(const Json& ref, const fs::path& dir) {
  return guarded([&] {
    auto [doc, d] = resolve(ref, dir);
    expect_schema(doc, "functor/1");
    Functor f;
    f.source = category(field(doc, "source"), d);
    f.target = category(field(doc, "target"), d);
    f.obj = object_map(field(doc, "obj_map"), *f.source, *f.target);
    if (doc.contains("mor_map")) {
      f.mor = morphism_map(doc.at("mor_map"), *f.source, *f.target);
    } else if (f.source->is_thin() && f.target->is_thin()) {
      f = thin_functor(f.source, f.target, f.obj);
    } else {
      bad("mor_map may only be omitted between thin categories");
    }
    return f;
  });
}

MutualLeftAdjunction Loader::adjunction(const Json& ref, const fs::path& dir) {
  return guarded([&] {
    auto [doc, d] = resolve(ref, dir);
    expect_schema(doc, "adj/1");
    MutualLeftAdjunction a;
    a.left = functor(field(doc, "F"), d);
    a.right = functor(field(doc, "G"), d);
    const FinCategory &A = *a.left.source, &B = *a.right.source;
    if (!same_category(a.left.target, opposite(a.right.source)) || !same_category(a.right.target, opposite(a.left.source)))
      fail(ErrorCode::BoundaryMismatch, "adj/1: F must be A -> B^op and G must be B -> A^op");
    const Json& phi = field(doc, "phi");
    for (ObjId x = 0; x < A.object_count(); ++x)
      for (ObjId y = 0; y < B.object_count(); ++y) {
        const std::string key = A.object_name(x) + "," + B.object_name(y);
        if (!phi.contains(key)) bad("phi is missing \"" + key + "\"");
        a.phi.push_back(permutation(phi.at(key), B.hom(a.left.obj[x], y).size(), "phi[" + key + "]"));
      }
    return a;
  });
}

MadjPtr Loader::madj(const Json& ref, const fs::path& dir) {
  std::optional<fs::path> key;
  if (ref.is_string()) {
    std::error_code ec;
    key = fs::weakly_canonical(dir / ref.get<std::string>(), ec);
    if (ec) key = dir / ref.get<std::string>();
    if (auto it = madjs_.find(*key); it != madjs_.end()) return it->second;
  }
  auto m = guarded([&] {
    auto [doc, d] = resolve(ref, dir);
    expect_schema(doc, "madj/1");
    MultiAdjunction m;
    m.chirality = chirality_of(doc);
    for (const auto& c : field(doc, "cats")) m.cats.push_back(category(c, d));
    if (m.cats.empty()) bad("madj/1 needs at least one category");
    const std::size_t n = m.arity();
    if (doc.contains("n") && count(doc.at("n"), "n") != n) bad("\"n\" does not match the number of categories");
    for (const auto& f : field(doc, "funs")) m.funs.push_back(functor(f, d));
    if (!doc.contains("isos")) {
      if (m.funs.size() != 1 || m.chirality != Chirality::Left)
        bad("madj/1 without isos must be left-handed and give F_0 only");
      return from_primary(m.cats, m.funs[0], searched_adjoints(m.funs[0], m.cats));
    }
    if (m.funs.size() != n + 1) bad("madj/1 needs n+1 functors");
    MadjLayout L(m.cats);
    const Json& isos = doc.at("isos");
    Tuple t(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const std::string si = std::to_string(i);
      if (!isos.contains(si)) bad("isos is missing slot " + si);
      const Json& slot = isos.at(si);
      m.isos.emplace_back();
      for (std::size_t x = 0; x < L.full().size(); ++x) {
        L.full().decode_into(x, t);
        const std::string k = tuple_key(m.cats, t);
        if (!slot.contains(k)) bad("isos[" + si + "] is missing \"" + k + "\"");
        const std::size_t j = (i + n) % (n + 1);
        HomSet h = hom_at(m, L, j, t);
        m.isos[i].push_back(permutation(slot.at(k), m.cats[j]->hom(h.src, h.tgt).size(), "isos[" + si + "][" + k + "]"));
      }
    }
    return m;
  });
  auto p = share(std::move(m));
  if (key) madjs_.emplace(*key, p);
  return p;
}

TwoCell Loader::twocell(const Json& ref, const fs::path& dir) {
  return guarded([&] {
    auto [doc, d] = resolve(ref, dir);
    expect_schema(doc, "twocell/1");
    TwoCell t;
    t.source = madj(field(doc, "source"), d);
    t.target = madj(field(doc, "target"), d);
    t.anchor = count(field(doc, "anchor"), "anchor");
    const std::size_t n = t.source->arity();
    if (t.anchor > n) fail(ErrorCode::InvalidAnchor, "twocell/1: anchor " + std::to_string(t.anchor) + " > arity");
    for (const auto& s : field(doc, "sides")) t.sides.push_back(functor(s, d));
    if (t.sides.size() != n + 1) bad("twocell/1 needs one side per category");
    std::vector<CategoryPtr> in;
    for (auto s : input_slots(n, t.anchor)) in.push_back(t.source->cats[s]);
    const TupleSpace os = object_space(in);
    const Json& comps = field(doc, "components");
    const FinCategory& out = *t.target->cats[t.anchor];
    Tuple x(in.size());
    for (std::size_t k = 0; k < os.size(); ++k) {
      os.decode_into(k, x);
      const std::string key = tuple_key(in, x);
      if (!comps.contains(key)) bad("components is missing \"" + key + "\"");
      t.components.push_back(morphism_of(out, comps.at(key)));
    }
    return t;
  });
}

Universe Loader::universe(const Json& ref, const fs::path& dir, std::optional<std::uint64_t> seed_override) {
  return guarded([&] {
    auto [doc, d] = resolve(ref, dir);
    expect_schema(doc, "universe/1");
    Universe u;
    for (const auto& c : field(doc, "cats")) u.cats.push_back(category(c, d));
    if (doc.contains("arity_bound")) u.arity_bound = count(doc.at("arity_bound"), "arity_bound");
    if (doc.contains("generate")) {
      const Json& g = doc.at("generate");
      std::size_t k = g.contains("cells_per_madj") ? count(g.at("cells_per_madj"), "cells_per_madj") : 2;
      std::uint64_t seed = g.contains("seed") ? count(g.at("seed"), "seed") : 1;
      if (seed_override) seed = *seed_override;
      return thin_universe(u.cats, u.arity_bound, k, seed);
    }
    const Json& fs_ = field(doc, "functors");
    if (fs_.is_string() && fs_.get<std::string>() == "all") {
      u.functors = all_functors(u.cats);
    } else {
      for (const auto& f : fs_) u.functors.push_back(functor(f, d));
    }
    const Json& ms = field(doc, "madjs");
    std::vector<MadjPtr> table;
    if (ms.is_string() && ms.get<std::string>() == "all") {
      u.madjs = all_madjs(u.cats, u.arity_bound);
    } else {
      for (const auto& m : ms) u.madjs.push_back(*madj(m, d));
    }
    if (doc.contains("twocells"))
      for (const auto& c : doc.at("twocells")) {
        // Integer source/target refer to the universe's madjs by position.
        Json cell = c.is_string() ? resolve(c, d).first : c;
        for (const char* end : {"source", "target"})
          if (cell.contains(end) && cell.at(end).is_number_integer()) {
            std::size_t k = count(cell.at(end), end);
            if (k >= u.madjs.size()) bad("twocell refers to madj " + std::to_string(k) + " out of range");
            cell[end] = to_json(u.madjs[k]);
          }
        u.cells.push_back(twocell(cell, d));
      }
    return u;
  });
}

std::vector<std::size_t> Loader::anchors(const Json& doc) {
  std::vector<std::size_t> out;
  if (doc.is_object() && doc.contains("anchors"))
    for (const auto& a : doc.at("anchors")) out.push_back(count(a, "anchors"));
  return out;
}

Json category_ref(const CategoryPtr& c) {
  if (auto b = builtin_category(c->name()); b && same_category(b, c)) return "builtin:" + c->name();
  if (same_category(c, terminal_category())) return Json{{"product", Json::array()}};
  switch (c->derivation()) {
    case Derivation::Opposite: return Json{{"opposite", category_ref(c->parents()[0])}};
    case Derivation::Arrow: return Json{{"arrow", category_ref(c->parents()[0])}};
    case Derivation::Product: {
      Json parts = Json::array();
      for (const auto& p : c->parents()) parts.push_back(category_ref(p));
      return Json{{"product", parts}};
    }
    case Derivation::Base: break;
  }
  return to_json(*c);
}

Json to_json(const FinCategory& c) {
  Json doc;
  doc["schema"] = "fincat/1";
  doc["name"] = c.name();
  doc["objects"] = c.tables().objects;
  Json ms = Json::array();
  for (MorId m = 0; m < c.morphism_count(); ++m)
    ms.push_back({{"id", c.morphism_name(m)}, {"src", c.object_name(c.src(m))}, {"tgt", c.object_name(c.tgt(m))}});
  doc["morphisms"] = ms;
  Json ids = Json::object();
  for (ObjId a = 0; a < c.object_count(); ++a) ids[c.object_name(a)] = c.morphism_name(c.identity(a));
  doc["identities"] = ids;
  Json comp = Json::array();
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g : c.outgoing(c.tgt(f)))
      comp.push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(c.compose(g, f))});
  doc["composition"] = comp;
  return doc;
}

Json to_json(const Functor& f) {
  Json doc;
  doc["schema"] = "functor/1";
  doc["source"] = category_ref(f.source);
  doc["target"] = category_ref(f.target);
  Json om = Json::array(), mm = Json::array();
  for (ObjId x : f.obj) om.push_back(f.target->object_name(x));
  for (MorId m : f.mor) mm.push_back(f.target->morphism_name(m));
  doc["obj_map"] = om;
  doc["mor_map"] = mm;
  return doc;
}

Json to_json(const MutualLeftAdjunction& a) {
  Json doc;
  doc["schema"] = "adj/1";
  doc["F"] = to_json(a.left);
  doc["G"] = to_json(a.right);
  const FinCategory &A = *a.left.source, &B = *a.right.source;
  Json phi = Json::object();
  for (ObjId x = 0; x < A.object_count(); ++x)
    for (ObjId y = 0; y < B.object_count(); ++y) phi[A.object_name(x) + "," + B.object_name(y)] = a.bijection(x, y);
  doc["phi"] = phi;
  return doc;
}

Json to_json(const MultiAdjunction& m) {
  Json doc;
  doc["schema"] = "madj/1";
  doc["n"] = m.arity();
  doc["chirality"] = m.chirality == Chirality::Left ? "left" : "right";
  Json cats = Json::array(), funs = Json::array();
  for (const auto& c : m.cats) cats.push_back(category_ref(c));
  for (const auto& f : m.funs) funs.push_back(to_json(f));
  doc["cats"] = cats;
  doc["funs"] = funs;
  MadjLayout L(m.cats);
  Json isos = Json::object();
  Tuple t(m.cats.size());
  for (std::size_t i = 0; i < m.isos.size(); ++i) {
    Json slot = Json::object();
    for (std::size_t x = 0; x < L.full().size(); ++x) {
      L.full().decode_into(x, t);
      slot[tuple_key(m.cats, t)] = m.isos[i][x];
    }
    isos[std::to_string(i)] = slot;
  }
  doc["isos"] = isos;
  return doc;
}

Json to_json(const TwoCell& t) {
  Json doc;
  doc["schema"] = "twocell/1";
  doc["source"] = to_json(*t.source);
  doc["target"] = to_json(*t.target);
  doc["anchor"] = t.anchor;
  Json sides = Json::array();
  for (const auto& s : t.sides) sides.push_back(to_json(s));
  doc["sides"] = sides;
  std::vector<CategoryPtr> in;
  for (auto s : input_slots(t.arity(), t.anchor)) in.push_back(t.source->cats[s]);
  const TupleSpace os = object_space(in);
  const FinCategory& out = *t.target->cats[t.anchor];
  Json comps = Json::object();
  Tuple x(in.size());
  for (std::size_t k = 0; k < os.size(); ++k) {
    os.decode_into(k, x);
    comps[tuple_key(in, x)] = out.morphism_name(t.components[k]);
  }
  doc["components"] = comps;
  return doc;
}

Json to_json(const Universe& u) {
  Json doc;
  doc["schema"] = "universe/1";
  Json cats = Json::array(), funs = Json::array(), madjs = Json::array(), cells = Json::array();
  for (const auto& c : u.cats) cats.push_back(category_ref(c));
  for (const auto& f : u.functors) funs.push_back(to_json(f));
  for (const auto& m : u.madjs) madjs.push_back(to_json(m));
  for (const auto& c : u.cells) {
    Json cell = to_json(c);
    // Refer to listed adjunctions by position to keep fixtures small.
    for (const char* end : {"source", "target"}) {
      const MultiAdjunction& m = end[0] == 's' ? *c.source : *c.target;
      for (std::size_t k = 0; k < u.madjs.size(); ++k)
        if (u.madjs[k] == m) {
          cell[end] = k;
          break;
        }
    }
    cells.push_back(cell);
  }
  doc["cats"] = cats;
  doc["functors"] = funs;
  doc["madjs"] = madjs;
  doc["twocells"] = cells;
  doc["arity_bound"] = u.arity_bound;
  return doc;
}

Json to_json(const Report& r) {
  Json doc;
  doc["checked"] = r.checked();
  doc["violations"] = r.total();
  Json ws = Json::array();
  for (const auto& v : r.violations()) ws.push_back({{"law", v.law}, {"witness", v.witness}});
  doc["witnesses"] = ws;
  return doc;
}

}  // namespace catmates::io
