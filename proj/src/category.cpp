#include "catmates/category.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

#include "catmates/error.hpp"

namespace catmates {

namespace {

constexpr std::size_t kDenseHomLimit = 2048;

std::size_t& max_size_slot() {
  static std::size_t value = [] {
    if (const char* env = std::getenv("MADJ_MAX_SIZE")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1000000};
  }();
  return value;
}

}  // namespace

std::size_t default_max_size() { return max_size_slot(); }
void set_default_max_size(std::size_t n) { max_size_slot() = n; }

struct CategoryAccess {
  static std::shared_ptr<FinCategory> fresh() {
    return std::shared_ptr<FinCategory>(new FinCategory());
  }
};

CategoryPtr FinCategory::assemble(Tables t, const Composer& composer, Derivation how,
                                  std::vector<CategoryPtr> parents,
                                  std::vector<std::pair<MorId, MorId>> squares) {
  auto c = CategoryAccess::fresh();
  c->t_ = std::move(t);
  c->how_ = how;
  c->parents_ = std::move(parents);
  c->squares_ = std::move(squares);
  c->build_indices();
  const std::size_t nm = c->t_.morphisms.size();
  c->comp_offset_.resize(nm);
  std::size_t total = 0;
  for (MorId f = 0; f < nm; ++f) {
    c->comp_offset_[f] = static_cast<std::uint32_t>(total);
    ObjId y = c->t_.morphisms[f].tgt;
    total += c->out_offset_[y + 1] - c->out_offset_[y];
  }
  c->comp_.resize(total);
  for (MorId f = 0; f < nm; ++f) {
    ObjId y = c->t_.morphisms[f].tgt;
    for (auto k = c->out_offset_[y]; k < c->out_offset_[y + 1]; ++k) {
      MorId g = c->out_list_[k];
      c->comp_[c->comp_offset_[f] + (k - c->out_offset_[y])] = composer(g, f);
    }
  }
  return c;
}

void FinCategory::build_indices() {
  const std::size_t no = t_.objects.size();
  const std::size_t nm = t_.morphisms.size();
  object_index_.reserve(no);
  for (ObjId a = 0; a < no; ++a) object_index_.emplace(t_.objects[a], a);
  morphism_index_.reserve(nm);
  for (MorId m = 0; m < nm; ++m) morphism_index_.emplace(t_.morphisms[m].id, m);

  out_offset_.assign(no + 1, 0);
  for (const auto& m : t_.morphisms) ++out_offset_[m.src + 1];
  for (std::size_t a = 0; a < no; ++a) out_offset_[a + 1] += out_offset_[a];
  out_list_.resize(nm);
  out_pos_.resize(nm);
  {
    std::vector<std::uint32_t> fill(out_offset_.begin(), out_offset_.end() - 1);
    for (MorId m = 0; m < nm; ++m) {
      ObjId a = t_.morphisms[m].src;
      out_pos_[m] = fill[a] - out_offset_[a];
      out_list_[fill[a]++] = m;
    }
  }

  // Hom lists: stable sort of morphism ids by (src, tgt).
  hom_list_.resize(nm);
  std::iota(hom_list_.begin(), hom_list_.end(), 0);
  std::stable_sort(hom_list_.begin(), hom_list_.end(), [&](MorId x, MorId y) {
    const auto& a = t_.morphisms[x];
    const auto& b = t_.morphisms[y];
    return a.src != b.src ? a.src < b.src : a.tgt < b.tgt;
  });
  hom_pos_.assign(nm, 0);
  hom_offset_.clear();
  hom_sparse_.clear();
  const bool dense = no <= kDenseHomLimit;
  if (dense) hom_offset_.assign(no * no + 1, 0);
  thin_ = true;
  std::size_t i = 0;
  while (i < nm) {
    std::size_t j = i;
    const auto& m0 = t_.morphisms[hom_list_[i]];
    while (j < nm && t_.morphisms[hom_list_[j]].src == m0.src &&
           t_.morphisms[hom_list_[j]].tgt == m0.tgt) {
      hom_pos_[hom_list_[j]] = static_cast<std::uint32_t>(j - i);
      ++j;
    }
    if (j - i > 1) thin_ = false;
    if (!dense) {
      std::uint64_t key = std::uint64_t{m0.src} * no + m0.tgt;
      hom_sparse_.emplace(key, std::pair{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
    i = j;
  }
  if (dense) {
    // offset[key] = first position whose (src,tgt) key is >= key.
    std::size_t pos = 0;
    for (std::uint64_t key = 0; key < no * no; ++key) {
      while (pos < nm) {
        const auto& m = t_.morphisms[hom_list_[pos]];
        if (std::uint64_t{m.src} * no + m.tgt >= key) break;
        ++pos;
      }
      hom_offset_[key] = static_cast<std::uint32_t>(pos);
    }
    hom_offset_[no * no] = static_cast<std::uint32_t>(nm);
  }
}

std::span<const MorId> FinCategory::hom(ObjId a, ObjId b) const {
  const std::size_t no = t_.objects.size();
  std::uint64_t key = std::uint64_t{a} * no + b;
  if (!hom_offset_.empty())
    return {hom_list_.data() + hom_offset_[key], hom_offset_[key + 1] - hom_offset_[key]};
  auto it = hom_sparse_.find(key);
  if (it == hom_sparse_.end()) return {};
  return {hom_list_.data() + it->second.first, it->second.second - it->second.first};
}

std::span<const MorId> FinCategory::outgoing(ObjId a) const {
  return {out_list_.data() + out_offset_[a], out_offset_[a + 1] - out_offset_[a]};
}

std::optional<MorId> FinCategory::try_compose(MorId g, MorId f) const {
  if (g >= morphism_count() || f >= morphism_count() || src(g) != tgt(f)) return std::nullopt;
  return compose(g, f);
}

std::optional<ObjId> FinCategory::find_object(std::string_view id) const {
  auto it = object_index_.find(std::string(id));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCategory::find_morphism(std::string_view id) const {
  auto it = morphism_index_.find(std::string(id));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

ObjId FinCategory::object(std::string_view id) const {
  if (auto a = find_object(id)) return *a;
  fail(ErrorCode::ParseError, "no object '" + std::string(id) + "' in " + name());
}

MorId FinCategory::morphism_id(std::string_view id) const {
  if (auto m = find_morphism(id)) return *m;
  fail(ErrorCode::ParseError, "no morphism '" + std::string(id) + "' in " + name());
}

bool FinCategory::same_tables(const FinCategory& o) const {
  return t_.name == o.t_.name && t_.objects == o.t_.objects &&
         t_.morphisms == o.t_.morphisms && t_.identities == o.t_.identities &&
         comp_ == o.comp_;
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_tables(*b);
}

// ---------------------------------------------------------------------------
// Validation of raw tables.

CategoryCheck validate_category(const RawCategory& raw) {
  CategoryCheck out;
  auto bad = [&](ErrorCode code, std::string witness) {
    out.violations.push_back({std::string(to_string(code)), std::move(witness)});
  };

  FinCategory::Tables t;
  t.name = raw.name;
  std::unordered_map<std::string, ObjId> objs;
  for (const auto& o : raw.objects) {
    if (!objs.emplace(o, static_cast<ObjId>(t.objects.size())).second)
      bad(ErrorCode::DuplicateId, "object " + o);
    else
      t.objects.push_back(o);
  }
  std::unordered_map<std::string, MorId> mors;
  for (const auto& m : raw.morphisms) {
    auto s = objs.find(m.src);
    auto d = objs.find(m.tgt);
    if (s == objs.end() || d == objs.end()) {
      bad(ErrorCode::DanglingEndpoint, "morphism " + m.id);
      continue;
    }
    if (!mors.emplace(m.id, static_cast<MorId>(t.morphisms.size())).second) {
      bad(ErrorCode::DuplicateId, "morphism " + m.id);
      continue;
    }
    t.morphisms.push_back({m.id, s->second, d->second});
  }
  constexpr MorId kNone = ~MorId{0};
  t.identities.assign(t.objects.size(), kNone);
  for (const auto& [o, m] : raw.identities) {
    auto oi = objs.find(o);
    auto mi = mors.find(m);
    if (oi == objs.end() || mi == mors.end()) {
      bad(ErrorCode::DanglingEndpoint, "identity " + o + " -> " + m);
      continue;
    }
    const auto& mm = t.morphisms[mi->second];
    if (mm.src != oi->second || mm.tgt != oi->second) {
      bad(ErrorCode::IdentityViolation, "identity of " + o + " is " + m + " with wrong endpoints");
      continue;
    }
    if (t.identities[oi->second] != kNone && t.identities[oi->second] != mi->second)
      bad(ErrorCode::DuplicateId, "identity of " + o);
    t.identities[oi->second] = mi->second;
  }
  for (ObjId a = 0; a < t.objects.size(); ++a)
    if (t.identities[a] == kNone) bad(ErrorCode::IdentityViolation, "no identity for " + t.objects[a]);

  std::map<std::pair<MorId, MorId>, MorId> table;
  for (const auto& c : raw.composition) {
    auto g = mors.find(c.g), f = mors.find(c.f), gf = mors.find(c.gf);
    if (g == mors.end() || f == mors.end() || gf == mors.end()) {
      bad(ErrorCode::DanglingEndpoint, "composite " + c.g + " o " + c.f + " = " + c.gf);
      continue;
    }
    const auto& G = t.morphisms[g->second];
    const auto& F = t.morphisms[f->second];
    const auto& GF = t.morphisms[gf->second];
    if (G.src != F.tgt || GF.src != F.src || GF.tgt != G.tgt) {
      bad(ErrorCode::DanglingEndpoint, "composite " + c.g + " o " + c.f + " = " + c.gf + " has mismatched endpoints");
      continue;
    }
    auto [it, fresh] = table.emplace(std::pair{g->second, f->second}, gf->second);
    if (!fresh && it->second != gf->second)
      bad(ErrorCode::DuplicateId, "composite " + c.g + " o " + c.f + " given twice");
  }
  if (!out.violations.empty()) return out;

  auto lookup = [&](MorId g, MorId f) -> std::optional<MorId> {
    auto it = table.find({g, f});
    if (it != table.end()) return it->second;
    return std::nullopt;
  };
  for (MorId f = 0; f < t.morphisms.size(); ++f)
    for (MorId g = 0; g < t.morphisms.size(); ++g)
      if (t.morphisms[g].src == t.morphisms[f].tgt && !lookup(g, f))
        bad(ErrorCode::MissingComposite, t.morphisms[g].id + " o " + t.morphisms[f].id);
  if (!out.violations.empty()) return out;

  auto c = FinCategory::assemble(std::move(t), [&](MorId g, MorId f) { return *lookup(g, f); });
  Report laws = check_category_laws(*c);
  if (!laws.ok()) {
    out.violations = laws.violations();
    return out;
  }
  out.category = std::move(c);
  return out;
}

CategoryPtr make_category(const RawCategory& raw) {
  auto r = validate_category(raw);
  if (r.category) return r.category;
  const auto& v = r.violations.front();
  ErrorCode code = ErrorCode::ParseError;
  for (int k = 0; k <= static_cast<int>(ErrorCode::ParseError); ++k)
    if (to_string(static_cast<ErrorCode>(k)) == v.law) code = static_cast<ErrorCode>(k);
  fail(code, v.law + ": " + v.witness);
}

Report check_category_laws(const FinCategory& c) {
  Report r;
  const std::size_t nm = c.morphism_count();
  for (MorId f = 0; f < nm; ++f) {
    bool ok = c.compose(c.identity(c.tgt(f)), f) == f && c.compose(f, c.identity(c.src(f))) == f;
    r.expect(ok, to_string(ErrorCode::IdentityViolation), c.morphism_name(f));
  }
  for (MorId f = 0; f < nm; ++f)
    for (MorId g : c.outgoing(c.tgt(f))) {
      MorId gf = c.compose(g, f);
      for (MorId h : c.outgoing(c.tgt(g))) {
        bool ok = c.compose(h, gf) == c.compose(c.compose(h, g), f);
        if (!ok)
          r.fail(std::string(to_string(ErrorCode::AssocViolation)),
                 c.morphism_name(h) + ", " + c.morphism_name(g) + ", " + c.morphism_name(f));
        else
          r.pass();
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Derived categories, cached so that repeated requests share one object.

namespace {

struct DerivedKey {
  Derivation how;
  std::vector<std::weak_ptr<const FinCategory>> parts;
  bool operator<(const DerivedKey& o) const {
    if (how != o.how) return how < o.how;
    if (parts.size() != o.parts.size()) return parts.size() < o.parts.size();
    std::owner_less<std::weak_ptr<const FinCategory>> less;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (less(parts[i], o.parts[i])) return true;
      if (less(o.parts[i], parts[i])) return false;
    }
    return false;
  }
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}
std::map<DerivedKey, std::weak_ptr<const FinCategory>>& cache() {
  static std::map<DerivedKey, std::weak_ptr<const FinCategory>> c;
  return c;
}

template <class Make>
CategoryPtr cached(Derivation how, std::span<const CategoryPtr> parts, Make&& make) {
  DerivedKey key{how, {}};
  for (const auto& p : parts) key.parts.emplace_back(p);
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end())
      if (auto live = it->second.lock()) return live;
  }
  CategoryPtr made = make();
  std::lock_guard lock(cache_mutex());
  auto& slot = cache()[key];
  if (auto live = slot.lock()) return live;
  slot = made;
  return made;
}

std::string tuple_name(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  return s + ")";
}

}  // namespace

CategoryPtr opposite(const CategoryPtr& c) {
  if (c->derivation() == Derivation::Opposite) return c->parents().front();
  if (c == terminal_category()) return c;  // self-dual on the nose
  CategoryPtr base[] = {c};
  return cached(Derivation::Opposite, base, [&] {
    FinCategory::Tables t = c->tables();
    t.name = c->name() + "^op";
    for (auto& m : t.morphisms) std::swap(m.src, m.tgt);
    const FinCategory& cc = *c;
    return FinCategory::assemble(std::move(t), [&](MorId g, MorId f) { return cc.compose(f, g); },
                                 Derivation::Opposite, {c});
  });
}

CategoryPtr terminal_category() {
  static CategoryPtr one = [] {
    FinCategory::Tables t;
    t.name = "1";
    t.objects = {"()"};
    t.morphisms = {{"()", 0, 0}};
    t.identities = {0};
    return FinCategory::assemble(std::move(t), [](MorId, MorId) { return MorId{0}; },
                                 Derivation::Product, {});
  }();
  return one;
}

TupleSpace::TupleSpace(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  stride_.assign(sizes_.size(), 1);
  total_ = 1;
  for (std::size_t k = sizes_.size(); k-- > 0;) {
    stride_[k] = total_;
    total_ *= sizes_[k];
  }
}

std::size_t TupleSpace::index(std::span<const std::uint32_t> tuple) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < sizes_.size(); ++k) idx += tuple[k] * stride_[k];
  return idx;
}

std::vector<std::uint32_t> TupleSpace::decode(std::size_t index) const {
  std::vector<std::uint32_t> out(sizes_.size());
  decode_into(index, out);
  return out;
}

void TupleSpace::decode_into(std::size_t index, std::span<std::uint32_t> out) const {
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    out[k] = static_cast<std::uint32_t>(index / stride_[k]);
    index %= stride_[k];
  }
}

TupleSpace object_space(std::span<const CategoryPtr> cs) {
  std::vector<std::size_t> s;
  for (const auto& c : cs) s.push_back(c->object_count());
  return TupleSpace(std::move(s));
}

TupleSpace morphism_space(std::span<const CategoryPtr> cs) {
  std::vector<std::size_t> s;
  for (const auto& c : cs) s.push_back(c->morphism_count());
  return TupleSpace(std::move(s));
}

CategoryPtr product(std::span<const CategoryPtr> cs, std::size_t max_size) {
  if (cs.empty()) return terminal_category();
  if (cs.size() == 1) return cs.front();
  return cached(Derivation::Product, cs, [&] {
    TupleSpace os = object_space(cs);
    TupleSpace ms = morphism_space(cs);
    if (ms.size() > max_size)
      fail(ErrorCode::SizeOverflow, "product has " + std::to_string(ms.size()) + " morphisms");
    FinCategory::Tables t;
    std::vector<std::string> names;
    for (const auto& c : cs) names.push_back(c->name());
    t.name = tuple_name(names);
    std::vector<std::uint32_t> tup(cs.size());
    std::vector<std::string> parts(cs.size());
    t.objects.reserve(os.size());
    for (std::size_t i = 0; i < os.size(); ++i) {
      os.decode_into(i, tup);
      for (std::size_t k = 0; k < cs.size(); ++k) parts[k] = cs[k]->object_name(tup[k]);
      t.objects.push_back(tuple_name(parts));
    }
    std::vector<std::uint32_t> st(cs.size()), tt(cs.size());
    t.morphisms.reserve(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) {
      ms.decode_into(i, tup);
      for (std::size_t k = 0; k < cs.size(); ++k) {
        parts[k] = cs[k]->morphism_name(tup[k]);
        st[k] = cs[k]->src(tup[k]);
        tt[k] = cs[k]->tgt(tup[k]);
      }
      t.morphisms.push_back({tuple_name(parts), static_cast<ObjId>(os.index(st)),
                             static_cast<ObjId>(os.index(tt))});
    }
    t.identities.resize(os.size());
    for (std::size_t i = 0; i < os.size(); ++i) {
      os.decode_into(i, tup);
      for (std::size_t k = 0; k < cs.size(); ++k) st[k] = cs[k]->identity(tup[k]);
      t.identities[i] = static_cast<MorId>(ms.index(st));
    }
    std::vector<CategoryPtr> factors(cs.begin(), cs.end());
    std::vector<std::uint32_t> gt(cs.size()), ft(cs.size()), rt(cs.size());
    return FinCategory::assemble(
        std::move(t),
        [&](MorId g, MorId f) {
          ms.decode_into(g, gt);
          ms.decode_into(f, ft);
          for (std::size_t k = 0; k < factors.size(); ++k) rt[k] = factors[k]->compose(gt[k], ft[k]);
          return static_cast<MorId>(ms.index(rt));
        },
        Derivation::Product, factors);
  });
}

CategoryPtr product(std::initializer_list<CategoryPtr> cs) {
  std::vector<CategoryPtr> v(cs);
  return product(std::span<const CategoryPtr>(v));
}

CategoryPtr arrow_category(const CategoryPtr& c, std::size_t max_size) {
  CategoryPtr base[] = {c};
  return cached(Derivation::Arrow, base, [&] {
    const FinCategory& C = *c;
    FinCategory::Tables t;
    t.name = C.name() + "^2";
    for (MorId f = 0; f < C.morphism_count(); ++f) t.objects.push_back(C.morphism_name(f));
    // Squares (u,v): f -> g with v∘f = g∘u, enumerated by f, g, u, v.
    std::vector<std::pair<MorId, MorId>> squares;
    t.identities.resize(C.morphism_count());
    for (MorId f = 0; f < C.morphism_count(); ++f)
      for (MorId g = 0; g < C.morphism_count(); ++g)
        for (MorId u : C.hom(C.src(f), C.src(g)))
          for (MorId v : C.hom(C.tgt(f), C.tgt(g))) {
            if (C.compose(v, f) != C.compose(g, u)) continue;
            if (squares.size() >= max_size)
              fail(ErrorCode::SizeOverflow, "arrow category of " + C.name() + " is too large");
            if (f == g && C.is_identity(u) && C.is_identity(v))
              t.identities[f] = static_cast<MorId>(squares.size());
            squares.push_back({u, v});
            t.morphisms.push_back({"(" + C.morphism_name(u) + "," + C.morphism_name(v) + "):" +
                                       C.morphism_name(f) + "->" + C.morphism_name(g),
                                   f, g});
          }
    std::map<std::tuple<ObjId, ObjId, MorId, MorId>, MorId> index;
    for (MorId s = 0; s < squares.size(); ++s)
      index.emplace(std::tuple{t.morphisms[s].src, t.morphisms[s].tgt, squares[s].first, squares[s].second}, s);
    std::vector<Morphism> ms = t.morphisms;
    return FinCategory::assemble(
        std::move(t),
        [&](MorId g, MorId f) {
          MorId u = C.compose(squares[g].first, squares[f].first);
          MorId v = C.compose(squares[g].second, squares[f].second);
          return index.at({ms[f].src, ms[g].tgt, u, v});
        },
        Derivation::Arrow, {c}, squares);
  });
}

CategoryPtr poset_category(std::string name, std::vector<std::string> elements,
                           const std::function<bool(std::size_t, std::size_t)>& leq) {
  FinCategory::Tables t;
  t.name = std::move(name);
  const std::size_t n = elements.size();
  std::vector<std::vector<MorId>> rel(n, std::vector<MorId>(n, ~MorId{0}));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq(x, y)) {
        rel[x][y] = static_cast<MorId>(t.morphisms.size());
        t.morphisms.push_back({elements[x] + "<=" + elements[y], static_cast<ObjId>(x),
                               static_cast<ObjId>(y)});
      }
  for (std::size_t x = 0; x < n; ++x) {
    if (rel[x][x] == ~MorId{0}) fail(ErrorCode::IdentityViolation, "relation is not reflexive");
    t.identities.push_back(rel[x][x]);
  }
  std::vector<Morphism> ms = t.morphisms;
  t.objects = std::move(elements);
  return FinCategory::assemble(std::move(t), [&](MorId g, MorId f) {
    MorId r = rel[ms[f].src][ms[g].tgt];
    if (r == ~MorId{0}) fail(ErrorCode::MissingComposite, "relation is not transitive");
    return r;
  });
}

CategoryPtr chain(std::size_t n, std::string name) {
  if (name.empty()) name = "C" + std::to_string(n);
  std::vector<std::string> els;
  for (std::size_t i = 0; i < n; ++i) els.push_back(std::to_string(i));
  return poset_category(std::move(name), std::move(els), [](std::size_t x, std::size_t y) { return x <= y; });
}

}  // namespace catmates
