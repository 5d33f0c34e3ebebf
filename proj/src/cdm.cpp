#include "catmates/cdm.hpp"

#include <map>
#include <random>
#include <unordered_map>

#include "catmates/catalog.hpp"
#include "catmates/error.hpp"

namespace catmates {

namespace {

void put(std::string& key, std::uint64_t v) {
  for (int k = 0; k < 8 && (k == 0 || v); ++k, v >>= 8) key.push_back(static_cast<char>(v & 0xff));
  key.push_back('\xff');
}

template <class Range>
void put_all(std::string& key, const Range& xs) {
  put(key, xs.size());
  for (auto x : xs) put(key, x);
}

constexpr ObjIx kNoObj = static_cast<ObjIx>(-1);

}  // namespace

struct CyclicDoubleMulticategory::State {
  Universe u;
  Chirality ch = Chirality::Left;
  std::vector<std::size_t> w;
  bool sigma_identity = false;

  std::vector<ObjIx> cat_star;
  std::unordered_map<const FinCategory*, ObjIx> cat_ptr;

  std::vector<Functor> funs;
  std::unordered_map<std::string, ObjIx> fun_ix;
  std::vector<std::vector<MapId>> cells_into;  // seed cells by output functor
  std::vector<ObjIx> fun_star, fun_identity_cell;

  std::vector<MadjPtr> madjs;
  std::unordered_map<std::string, MapId> madj_ix;
  std::vector<std::vector<ObjIx>> madj_in;
  std::vector<ObjIx> madj_out;
  std::vector<std::vector<MapId>> madj_into;
  std::vector<MapId> madj_identity, madj_sigma, madj_unit_cell;
  std::map<std::vector<MapId>, MapId> madj_comp;

  std::vector<TwoCell> cells;
  std::vector<TwoCell> base;  // left chirality, anchor 0
  std::unordered_map<std::string, MapId> cell_ix;
  std::vector<std::vector<ObjIx>> cell_in;
  std::vector<ObjIx> cell_out;
  std::vector<MapId> cell_src, cell_tgt, cell_sigma;
  std::size_t seeds = 0;
  std::map<std::vector<MapId>, MapId> cell_comp;
  std::map<std::pair<MapId, MapId>, MapId> cell_hor;

  std::size_t anchor(std::size_t n) const { return n < w.size() ? w[n] : 0; }

  ObjIx cat_id(const CategoryPtr& c) {
    if (auto it = cat_ptr.find(c.get()); it != cat_ptr.end()) return it->second;
    for (ObjIx x = 0; x < u.cats.size(); ++x)
      if (same_category(u.cats[x], c)) return cat_ptr[c.get()] = x;
    return kNoObj;
  }

  // Conversions between the stored convention and left chirality at anchor 0.
  MultiAdjunction to_left(const MultiAdjunction& m) const { return ch == Chirality::Right ? dualize(m) : m; }
  Functor to_left(const Functor& f) const { return ch == Chirality::Right ? opposite(f) : f; }
  TwoCell to_base(const TwoCell& t) const {
    TwoCell c = ch == Chirality::Right ? dual_cell(t) : t;
    return c.anchor == 0 ? c : mate_n(c, 0);
  }
  TwoCell from_base(TwoCell c) const {
    if (std::size_t a = anchor(c.arity()); a != 0) c = mate_n(c, a);
    return ch == Chirality::Right ? dual_cell(c) : c;
  }

  std::string functor_key(const Functor& f) {
    std::string key;
    put(key, cat_id(f.source));
    put(key, cat_id(f.target));
    put_all(key, f.obj);
    put_all(key, f.mor);
    return key;
  }

  ObjIx functor_id(const Functor& f) {
    ObjIx s = cat_id(f.source), t = cat_id(f.target);
    if (s == kNoObj || t == kNoObj) return kNoObj;
    std::string key = functor_key(f);
    if (auto it = fun_ix.find(key); it != fun_ix.end()) return it->second;
    ObjIx id = funs.size();
    fun_ix.emplace(std::move(key), id);
    funs.push_back(Functor{u.cats[s], u.cats[t], f.obj, f.mor});
    cells_into.emplace_back();
    fun_star.push_back(kNoObj);
    fun_identity_cell.push_back(kNoMap);
    return id;
  }

  ObjIx functor_star(ObjIx s) {
    if (fun_star[s] == kNoObj) {
      ObjIx o = functor_id(opposite(funs[s]));
      fun_star[s] = o;
    }
    return fun_star[s];
  }

  std::string madj_key(const MultiAdjunction& m) {
    std::string key;
    put(key, m.chirality == Chirality::Left ? 0 : 1);
    put(key, m.cats.size());
    for (const auto& c : m.cats) put(key, cat_id(c));
    for (const auto& f : m.funs) {
      put_all(key, f.obj);
      put_all(key, f.mor);
    }
    for (const auto& row : m.isos) {
      put(key, row.size());
      for (const auto& p : row) put_all(key, p);
    }
    return key;
  }

  MapId madj_id(const MultiAdjunction& m) {
    for (const auto& c : m.cats)
      if (cat_id(c) == kNoObj) return kNoMap;
    auto it = madj_ix.find(madj_key(m));
    return it == madj_ix.end() ? kNoMap : it->second;
  }

  // kNoMap when a boundary adjunction is outside the universe.
  MapId cell_id(const TwoCell& t) {
    MapId src = madj_id(*t.source), tgt = madj_id(*t.target);
    if (src == kNoMap || tgt == kNoMap) return kNoMap;
    std::vector<ObjIx> sides;
    for (const auto& S : t.sides) {
      ObjIx s = functor_id(S);
      if (s == kNoObj) return kNoMap;
      sides.push_back(s);
    }
    std::string key;
    put(key, src);
    put(key, tgt);
    put_all(key, sides);
    put(key, t.anchor);
    put_all(key, t.components);
    if (auto it = cell_ix.find(key); it != cell_ix.end()) return it->second;
    MapId id = cells.size();
    cell_ix.emplace(std::move(key), id);
    TwoCell c{madjs[src], madjs[tgt], {}, t.anchor, t.components};
    for (ObjIx s : sides) c.sides.push_back(funs[s]);
    base.push_back(to_base(c));
    cells.push_back(std::move(c));
    cell_in.emplace_back(sides.begin() + 1, sides.end());
    cell_out.push_back(functor_star(sides[0]));
    cell_src.push_back(src);
    cell_tgt.push_back(tgt);
    cell_sigma.push_back(kNoMap);
    return id;
  }

  MapId base_cell_id(const TwoCell& c) { return cell_id(from_base(c)); }
};

// ---------------------------------------------------------------------------
// Assembly.

namespace {

using State = CyclicDoubleMulticategory::State;

[[noreturn]] void not_closed(const std::string& what) { fail(ErrorCode::UniverseNotClosed, what); }

std::string cat_list(const MultiAdjunction& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.cats.size(); ++i) s += (i ? "," : "") + m.cats[i]->name();
  return s + ")";
}

std::unique_ptr<State> assemble(Universe u, std::vector<std::size_t> w, bool verify, std::size_t budget) {
  auto st = std::make_unique<State>();
  State& s = *st;
  s.w = std::move(w);
  for (std::size_t n = 0; n < s.w.size(); ++n)
    if (s.w[n] > n) fail(ErrorCode::InvalidAnchor, "anchor " + std::to_string(s.w[n]) + " for arity " + std::to_string(n));
  if (!u.madjs.empty()) s.ch = u.madjs.front().chirality;
  for (const auto& m : u.madjs)
    if (m.chirality != s.ch) fail(ErrorCode::BoundaryMismatch, "universe mixes left and right adjunctions");
  s.u.cats = u.cats;
  s.u.arity_bound = u.arity_bound;

  // Categories: closed under opposites.
  for (ObjIx x = 0; x < u.cats.size(); ++x) s.cat_ptr.emplace(u.cats[x].get(), x);
  for (ObjIx x = 0; x < u.cats.size(); ++x) {
    ObjIx o = s.cat_id(opposite(u.cats[x]));
    if (o == kNoObj) not_closed("opposite of " + u.cats[x]->name() + " (" + opposite(u.cats[x])->name() + ") is missing");
    s.cat_star.push_back(o);
  }

  // Functors: identities and opposites present; composites when within budget.
  for (const auto& f : u.functors) {
    if (s.cat_id(f.source) == kNoObj || s.cat_id(f.target) == kNoObj)
      not_closed("functor between categories outside the universe: " + f.source->name() + " -> " + f.target->name());
    s.functor_id(f);
  }
  const std::size_t nf = s.funs.size();
  if (verify) {
    for (ObjIx x = 0; x < u.cats.size(); ++x)
      if (s.fun_ix.find(s.functor_key(identity_functor(u.cats[x]))) == s.fun_ix.end())
        not_closed("identity functor on " + u.cats[x]->name() + " is missing");
    for (ObjIx f = 0; f < nf; ++f)
      if (s.fun_ix.find(s.functor_key(opposite(s.funs[f]))) == s.fun_ix.end())
        not_closed("opposite of functor " + std::to_string(f) + " is missing");
    if (nf * nf <= budget)
      for (ObjIx g = 0; g < nf; ++g)
        for (ObjIx f = 0; f < nf; ++f) {
          if (!same_category(s.funs[g].source, s.funs[f].target)) continue;
          if (s.fun_ix.find(s.functor_key(compose(s.funs[g], s.funs[f]))) == s.fun_ix.end())
            not_closed("composite of functors " + std::to_string(g) + " and " + std::to_string(f) + " is missing");
        }
  }

  // Vertical 1-cells.
  s.madj_into.resize(u.cats.size());
  for (const auto& m : u.madjs) {
    if (m.arity() > u.arity_bound) fail(ErrorCode::BoundaryMismatch, "adjunction of arity above the bound");
    std::vector<ObjIx> in;
    for (const auto& c : m.cats) {
      if (s.cat_id(c) == kNoObj) not_closed("adjunction over a category outside the universe: " + c->name());
    }
    for (std::size_t i = 1; i < m.cats.size(); ++i) in.push_back(s.cat_id(m.cats[i]));
    std::string key = s.madj_key(m);
    if (s.madj_ix.count(key)) continue;
    MapId id = s.madjs.size();
    s.madj_ix.emplace(std::move(key), id);
    MultiAdjunction copy = m;
    for (auto& c : copy.cats) c = u.cats[s.cat_id(c)];
    s.madjs.push_back(share(std::move(copy)));
    s.madj_in.push_back(std::move(in));
    ObjIx out = s.cat_star[s.cat_id(m.cats[0])];
    s.madj_out.push_back(out);
    s.madj_into[out].push_back(id);
  }
  for (const auto& m : s.madjs) s.u.madjs.push_back(*m);
  s.u.functors = s.funs;
  for (ObjIx x = 0; x < u.cats.size(); ++x) {
    MultiAdjunction id = s.ch == Chirality::Left ? identity_madj(u.cats[x]) : dualize(identity_madj(opposite(u.cats[x])));
    MapId i = s.madj_id(id);
    if (i == kNoMap) not_closed("identity adjunction on " + u.cats[x]->name() + " is missing");
    s.madj_identity.push_back(i);
  }
  for (const auto& m : s.madjs) {
    MultiAdjunction shifted = s.ch == Chirality::Left ? cyclic_shift(*m) : dualize(cyclic_shift(dualize(*m)));
    MapId i = s.madj_id(shifted);
    if (i == kNoMap) not_closed("cyclic shift of " + cat_list(*m) + " is missing");
    s.madj_sigma.push_back(i);
  }
  s.madj_unit_cell.assign(s.madjs.size(), kNoMap);

  // Single-slot composites, when within budget; the results are memoized.
  if (verify) {
    std::size_t count = 0;
    for (MapId g = 0; g < s.madjs.size(); ++g)
      for (ObjIx x : s.madj_in[g]) count += s.madj_into[x].size();
    if (count <= budget)
      for (MapId g = 0; g < s.madjs.size(); ++g)
        for (std::size_t i = 0; i < s.madj_in[g].size(); ++i)
          for (MapId f : s.madj_into[s.madj_in[g][i]]) {
            if (s.madj_in[g].size() + s.madj_in[f].size() - 1 > u.arity_bound) continue;
            MultiAdjunction c = compose_at(*s.madjs[g], i + 1, *s.madjs[f]);
            MapId id = s.madj_id(c);
            if (id == kNoMap)
              not_closed("composite of " + cat_list(*s.madjs[g]) + " at slot " + std::to_string(i + 1) + " with " +
                         cat_list(*s.madjs[f]) + " is missing");
            std::vector<MapId> key{g};
            for (std::size_t j = 0; j < s.madj_in[g].size(); ++j)
              key.push_back(j == i ? f : s.madj_identity[s.madj_in[g][j]]);
            s.madj_comp[key] = id;
          }
  }

  // Seed 2-cells, moved to the stored anchors.
  for (const auto& t : u.cells) {
    if (t.source->chirality != s.ch) fail(ErrorCode::BoundaryMismatch, "cell of the wrong chirality");
    if (s.madj_id(*t.source) == kNoMap || s.madj_id(*t.target) == kNoMap)
      not_closed("cell over an adjunction outside the universe: " + cat_list(*t.source));
    for (const auto& S : t.sides)
      if (s.fun_ix.find(s.functor_key(S)) == s.fun_ix.end())
        not_closed("side of a cell is not a listed functor: " + S.source->name() + " -> " + S.target->name());
    TwoCell stored = s.from_base(s.to_base(t));
    std::size_t before = s.cells.size();
    MapId id = s.cell_id(stored);
    if (s.cells.size() == before) continue;  // duplicate seed
    s.cells_into[s.cell_out[id]].push_back(id);
  }
  s.seeds = s.cells.size();
  s.u.cells = s.cells;
  return st;
}

}  // namespace

CyclicDoubleMulticategory::CyclicDoubleMulticategory(std::unique_ptr<State> s) : s_(std::move(s)) {}
CyclicDoubleMulticategory::CyclicDoubleMulticategory(CyclicDoubleMulticategory&&) noexcept = default;
CyclicDoubleMulticategory& CyclicDoubleMulticategory::operator=(CyclicDoubleMulticategory&&) noexcept = default;
CyclicDoubleMulticategory::~CyclicDoubleMulticategory() = default;

CyclicDoubleMulticategory build_madj(Universe u, const BuildOptions& opt) {
  return CyclicDoubleMulticategory(assemble(std::move(u), opt.anchors, true, opt.closure_budget));
}

const Universe& CyclicDoubleMulticategory::universe() const { return s_->u; }
Chirality CyclicDoubleMulticategory::chirality() const { return s_->ch; }
std::size_t CyclicDoubleMulticategory::anchor(std::size_t n) const { return s_->anchor(n); }
const std::vector<std::size_t>& CyclicDoubleMulticategory::anchors() const { return s_->w; }
const CategoryPtr& CyclicDoubleMulticategory::cat(ObjIx x) const { return s_->u.cats[x]; }
const Functor& CyclicDoubleMulticategory::functor(ObjIx f) const { return s_->funs[f]; }
const MultiAdjunction& CyclicDoubleMulticategory::madj(MapId f) const { return *s_->madjs[f]; }
const TwoCell& CyclicDoubleMulticategory::cell(MapId a) const { return s_->cells[a]; }

ObjIx CyclicDoubleMulticategory::source_object(ObjIx f) const { return s_->cat_id(s_->funs[f].source); }
ObjIx CyclicDoubleMulticategory::target_object(ObjIx f) const { return s_->cat_id(s_->funs[f].target); }
MapId CyclicDoubleMulticategory::source_map(MapId a) const { return s_->cell_src[a]; }
MapId CyclicDoubleMulticategory::target_map(MapId a) const { return s_->cell_tgt[a]; }
ObjIx CyclicDoubleMulticategory::unit_object(ObjIx x) const { return s_->functor_id(identity_functor(s_->u.cats[x])); }

MapId CyclicDoubleMulticategory::unit_map(MapId f) const {
  State& s = *s_;
  if (s.madj_unit_cell[f] == kNoMap) {
    MadjPtr m = s.ch == Chirality::Left ? s.madjs[f] : share(dualize(*s.madjs[f]));
    MapId id = s.base_cell_id(identity_cell(m));
    s.madj_unit_cell[f] = id;
  }
  return s.madj_unit_cell[f];
}

ObjIx CyclicDoubleMulticategory::horizontal_object(ObjIx t, ObjIx f) const {
  const Functor &T = s_->funs[t], &S = s_->funs[f];
  if (!same_category(T.source, S.target)) return kNoObj;
  return s_->functor_id(compose(T, S));
}

MapId CyclicDoubleMulticategory::horizontal_map(MapId b, MapId a) const {
  State& s = *s_;
  if (a == kNoMap || b == kNoMap || s.cell_tgt[a] != s.cell_src[b]) return kNoMap;
  auto key = std::make_pair(b, a);
  if (auto it = s.cell_hor.find(key); it != s.cell_hor.end()) return it->second;
  MapId id = s.base_cell_id(horizontal_cells(s.base[b], s.base[a]));
  s.cell_hor[key] = id;
  return id;
}

ObjIx CyclicDoubleMulticategory::functor_id(const Functor& f) const { return s_->functor_id(f); }
MapId CyclicDoubleMulticategory::madj_id(const MultiAdjunction& m) const { return s_->madj_id(m); }
MapId CyclicDoubleMulticategory::cell_id(const TwoCell& t) const { return s_->cell_id(t); }
void CyclicDoubleMulticategory::perturb_cell_sigma_identity() { s_->sigma_identity = true; }

// ---------------------------------------------------------------------------
// Views.

std::size_t VerticalView::object_count() const { return d_->s_->u.cats.size(); }
std::size_t VerticalView::map_count() const { return d_->s_->madjs.size(); }
std::size_t VerticalView::arity_bound() const { return d_->s_->u.arity_bound; }
std::span<const MapId> VerticalView::maps_into(ObjIx x) const { return d_->s_->madj_into[x]; }
std::span<const ObjIx> VerticalView::inputs(MapId f) const { return d_->s_->madj_in[f]; }
ObjIx VerticalView::output(MapId f) const { return d_->s_->madj_out[f]; }
MapId VerticalView::identity(ObjIx x) const { return d_->s_->madj_identity[x]; }
std::string VerticalView::object_name(ObjIx x) const { return d_->s_->u.cats[x]->name(); }
std::string VerticalView::map_name(MapId f) const {
  return f < map_count() ? "adj" + std::to_string(f) + cat_list(*d_->s_->madjs[f]) : "<none>";
}
ObjIx VerticalView::star(ObjIx x) const { return d_->s_->cat_star[x]; }
MapId VerticalView::sigma(MapId f) const { return d_->s_->madj_sigma[f]; }

MapId VerticalView::compose(MapId g, std::span<const MapId> fs) const {
  State& s = *d_->s_;
  std::vector<MapId> key{g};
  key.insert(key.end(), fs.begin(), fs.end());
  if (auto it = s.madj_comp.find(key); it != s.madj_comp.end()) return it->second;
  MapId id = kNoMap;
  try {
    if (s.madj_in[g].empty()) fail(ErrorCode::BoundaryMismatch, "nullary");
    std::vector<MultiAdjunction> parts;
    for (MapId f : fs) parts.push_back(*s.madjs[f]);
    id = s.madj_id(compose_multi(*s.madjs[g], parts));
  } catch (const Error&) {
    id = kNoMap;
  }
  if (s.madj_in[g].empty() && fs.empty()) id = g;
  s.madj_comp[key] = id;
  return id;
}

std::size_t CellView::object_count() const { return d_->s_->funs.size(); }
std::size_t CellView::map_count() const { return d_->s_->seeds; }
std::size_t CellView::arity_bound() const { return d_->s_->u.arity_bound; }
std::span<const MapId> CellView::maps_into(ObjIx x) const { return d_->s_->cells_into[x]; }
std::span<const ObjIx> CellView::inputs(MapId f) const { return d_->s_->cell_in[f]; }
ObjIx CellView::output(MapId f) const { return d_->s_->cell_out[f]; }
std::string CellView::object_name(ObjIx x) const {
  const Functor& f = d_->s_->funs[x];
  return "F" + std::to_string(x) + ":" + f.source->name() + "->" + f.target->name();
}
std::string CellView::map_name(MapId a) const {
  const State& s = *d_->s_;
  if (a >= s.cells.size()) return "<none>";
  return "cell" + std::to_string(a) + "@" + std::to_string(s.cells[a].anchor) + "[adj" + std::to_string(s.cell_src[a]) +
         "=>adj" + std::to_string(s.cell_tgt[a]) + "]";
}
ObjIx CellView::star(ObjIx x) const { return d_->s_->functor_star(x); }

MapId CellView::identity(ObjIx x) const {
  State& s = *d_->s_;
  if (s.fun_identity_cell[x] == kNoMap) {
    MapId id = s.base_cell_id(identity_on_side(s.to_left(s.funs[x])));
    s.fun_identity_cell[x] = id;
  }
  return s.fun_identity_cell[x];
}

MapId CellView::compose(MapId g, std::span<const MapId> fs) const {
  State& s = *d_->s_;
  std::vector<MapId> key{g};
  key.insert(key.end(), fs.begin(), fs.end());
  if (auto it = s.cell_comp.find(key); it != s.cell_comp.end()) return it->second;
  MapId id = kNoMap;
  if (s.cell_in[g].empty() && fs.empty()) {
    id = g;
  } else {
    try {
      std::vector<TwoCell> parts;
      for (MapId f : fs) parts.push_back(s.base[f]);
      id = s.base_cell_id(compose_cells(s.base[g], parts));
    } catch (const Error&) {
      id = kNoMap;
    }
  }
  s.cell_comp[key] = id;
  return id;
}

MapId CellView::sigma(MapId a) const {
  State& s = *d_->s_;
  if (s.sigma_identity) return a;
  if (s.cell_sigma[a] == kNoMap) {
    MapId id = s.base_cell_id(sigma_cell(s.base[a]));
    s.cell_sigma[a] = id;
  }
  return s.cell_sigma[a];
}

// ---------------------------------------------------------------------------
// Category-object laws.

namespace {

struct FunctorPair {
  ObjIx t = 0, s = 0;  // t∘s
};
struct CellPair {
  MapId a = 0, b = 0;  // b * a
};
struct CellTriple {
  MapId a = 0, b = 0, c = 0;  // c * b * a
};
// (outer2 ∘_slot inner2) * (outer ∘_slot inner)
struct Pasting {
  MapId outer = 0;
  std::size_t slot = 0;
  MapId inner = 0, outer2 = 0, inner2 = 0;
};

}  // namespace

Report check_category_object(const CyclicDoubleMulticategory& d, const CheckOptions& opt) {
  using namespace mc_detail;
  Report r;
  VerticalView A = d.vertical();
  CellView B = d.cells();
  r.merge(check_multicategory(A, opt), "vertical");
  r.merge(check_cyclic(A, opt), "vertical");
  r.merge(check_multicategory(B, opt), "cells");
  r.merge(check_cyclic(B, opt), "cells");

  const std::size_t nC = A.object_count(), nM = A.map_count(), nF = d.universe().functors.size(),
                    nS = B.map_count();
  std::vector<std::vector<ObjIx>> funs_from(nC);
  for (ObjIx f = 0; f < nF; ++f) funs_from[d.source_object(f)].push_back(f);
  std::vector<std::vector<MapId>> cells_from(nM);
  for (MapId a = 0; a < nS; ++a) cells_from[d.source_map(a)].push_back(a);
  Draw draw(opt.seed + 2);
  auto cell = [&](MapId a) { return describe(B, a); };

  for (MapId a = 0; a < nS; ++a) {
    Report v = validate_two_cell(d.cell(a));
    r.expect(v.ok(), "CellValidity", [&] { return cell(a) + ": " + v.summary(); });
  }

  // Law 1: s(S*) = s(S)* and t(S*) = t(S)*.
  for (ObjIx f = 0; f < nF; ++f) {
    ObjIx o = B.star(f);
    r.expect(o != kNoMap && d.source_object(o) == A.star(d.source_object(f)) &&
                 d.target_object(o) == A.star(d.target_object(f)),
             "SourceTargetInvolution", [&] { return B.object_name(f); });
  }
  // Law 2: I_{x*} = (I_x)*.
  for (ObjIx x = 0; x < nC; ++x)
    r.expect(d.unit_object(A.star(x)) == B.star(d.unit_object(x)), "IdentityInvolution",
             [&] { return A.object_name(x); });

  // Law 3: (T∘S)* = T*∘S*, with the boundary and identities of gamma on objects.
  auto functor_pairs = [&](auto&& visit) {
    for (ObjIx s = 0; s < nF; ++s)
      for (ObjIx t : funs_from[d.target_object(s)])
        if (!visit(FunctorPair{t, s})) return;
  };
  auto functor_pair_sample = [&](Draw& dr, FunctorPair& x) {
    if (nF == 0) return false;
    x.s = dr.below(nF);
    const auto& ts = funs_from[d.target_object(x.s)];
    if (ts.empty()) return false;
    x.t = ts[dr.below(ts.size())];
    return true;
  };
  over_instances<FunctorPair>(opt, draw, functor_pairs, functor_pair_sample, [&](const FunctorPair& x) {
    auto name = [&] { return B.object_name(x.t) + " after " + B.object_name(x.s); };
    ObjIx ts = d.horizontal_object(x.t, x.s);
    if (!r.expect(ts != kNoMap, "HorizontalClosure", name)) return;
    r.expect(B.star(ts) == d.horizontal_object(B.star(x.t), B.star(x.s)), "CompositionInvolution", name);
    r.expect(d.source_object(ts) == d.source_object(x.s) && d.target_object(ts) == d.target_object(x.t),
             "HorizontalBoundary", name);
    r.expect(d.horizontal_map(B.identity(x.t), B.identity(x.s)) == B.identity(ts), "HorizontalIdentities", name);
  });

  // Law 4: s(σα) = σ(sα) and t(σα) = σ(tα).
  for (MapId a = 0; a < nS; ++a) {
    MapId sa = B.sigma(a);
    r.expect(sa != kNoMap && d.source_map(sa) == A.sigma(d.source_map(a)) &&
                 d.target_map(sa) == A.sigma(d.target_map(a)),
             "SourceTargetSigma", [&] { return cell(a); });
  }
  // Law 5: σ(I_f) = I_{σf}, with the boundary of I_f.
  for (MapId f = 0; f < nM; ++f) {
    MapId i = d.unit_map(f);
    if (!r.expect(i != kNoMap, "IdentityClosure", [&] { return describe(A, f); })) continue;
    r.expect(B.sigma(i) == d.unit_map(A.sigma(f)), "IdentitySigma", [&] { return describe(A, f); });
    bool boundary = d.source_map(i) == f && d.target_map(i) == f && B.output(i) == d.unit_object(A.output(f));
    auto in = A.inputs(f);
    for (std::size_t k = 0; k < in.size(); ++k) boundary &= B.inputs(i)[k] == d.unit_object(in[k]);
    r.expect(boundary, "IdentityBoundary", [&] { return describe(A, f); });
  }
  // s, t and I preserve identities.
  for (ObjIx x = 0; x < nC; ++x)
    r.expect(d.unit_map(A.identity(x)) == B.identity(d.unit_object(x)), "IdentityUnits",
             [&] { return A.object_name(x); });
  for (ObjIx f = 0; f < nF; ++f) {
    MapId i = B.identity(f);
    r.expect(i != kNoMap && d.source_map(i) == A.identity(d.source_object(f)) &&
                 d.target_map(i) == A.identity(d.target_object(f)),
             "SourceTargetUnits", [&] { return B.object_name(f); });
  }

  // s and t preserve composition.
  over_instances<Single>(opt, draw, single_enumerator(B), single_sampler(B, non_nullary(B)), [&](const Single& x) {
    MapId c = compose_at(B, x.g, x.slot, x.f, r);
    if (c == kNoMap) return;
    MapId sc = compose_at(A, d.source_map(x.g), x.slot, d.source_map(x.f), r);
    MapId tc = compose_at(A, d.target_map(x.g), x.slot, d.target_map(x.f), r);
    r.expect(d.source_map(c) == sc && d.target_map(c) == tc, "SourceTargetComposition",
             [&] { return cell(x.g) + " slot " + std::to_string(x.slot + 1) + " " + cell(x.f); });
  });
  // I preserves composition.
  over_instances<Single>(opt, draw, single_enumerator(A), single_sampler(A, non_nullary(A)), [&](const Single& x) {
    MapId c = compose_at(A, x.g, x.slot, x.f, r);
    if (c == kNoMap) return;
    MapId ic = compose_at(B, d.unit_map(x.g), x.slot, d.unit_map(x.f), r);
    r.expect(d.unit_map(c) == ic, "IdentityComposition", [&] {
      return describe(A, x.g) + " slot " + std::to_string(x.slot + 1) + " " + describe(A, x.f);
    });
  });

  // Horizontal composition: law 6, boundary and units.
  auto cell_pairs = [&](auto&& visit) {
    for (MapId a = 0; a < nS; ++a)
      for (MapId b : cells_from[d.target_map(a)])
        if (!visit(CellPair{a, b})) return;
  };
  auto cell_pair_sample = [&](Draw& dr, CellPair& x) {
    if (nS == 0) return false;
    x.a = dr.below(nS);
    const auto& bs = cells_from[d.target_map(x.a)];
    if (bs.empty()) return false;
    x.b = bs[dr.below(bs.size())];
    return true;
  };
  over_instances<CellPair>(opt, draw, cell_pairs, cell_pair_sample, [&](const CellPair& x) {
    auto name = [&] { return cell(x.b) + " * " + cell(x.a); };
    MapId c = d.horizontal_map(x.b, x.a);
    if (!r.expect(c != kNoMap, "HorizontalClosure", name)) return;
    r.expect(B.sigma(c) == d.horizontal_map(B.sigma(x.b), B.sigma(x.a)), "HorizontalSigma", name);
    bool boundary = d.source_map(c) == d.source_map(x.a) && d.target_map(c) == d.target_map(x.b) &&
                    B.output(c) == d.horizontal_object(B.output(x.b), B.output(x.a));
    for (std::size_t k = 0; k < B.inputs(c).size(); ++k)
      boundary &= B.inputs(c)[k] == d.horizontal_object(B.inputs(x.b)[k], B.inputs(x.a)[k]);
    r.expect(boundary, "HorizontalBoundary", name);
  });
  for (MapId a = 0; a < nS; ++a) {
    r.expect(d.horizontal_map(d.unit_map(d.target_map(a)), a) == a &&
                 d.horizontal_map(a, d.unit_map(d.source_map(a))) == a,
             "HorizontalUnits", [&] { return cell(a); });
  }
  auto cell_triples = [&](auto&& visit) {
    for (MapId a = 0; a < nS; ++a)
      for (MapId b : cells_from[d.target_map(a)])
        for (MapId c : cells_from[d.target_map(b)])
          if (!visit(CellTriple{a, b, c})) return;
  };
  auto cell_triple_sample = [&](Draw& dr, CellTriple& x) {
    CellPair p;
    if (!cell_pair_sample(dr, p)) return false;
    const auto& cs = cells_from[d.target_map(p.b)];
    if (cs.empty()) return false;
    x = {p.a, p.b, cs[dr.below(cs.size())]};
    return true;
  };
  over_instances<CellTriple>(opt, draw, cell_triples, cell_triple_sample, [&](const CellTriple& x) {
    MapId lhs = d.horizontal_map(d.horizontal_map(x.c, x.b), x.a);
    MapId rhs = d.horizontal_map(x.c, d.horizontal_map(x.b, x.a));
    r.expect(lhs == rhs && lhs != kNoMap, "HorizontalAssociativity",
             [&] { return cell(x.c) + " * " + cell(x.b) + " * " + cell(x.a); });
  });

  // Interchange: (β' ∘_i β) * (α' ∘_i α) = (β' * α') ∘_i (β * α).
  auto matching = [&](MapId a, MapId outer2, std::size_t slot) {
    std::vector<MapId> out;
    for (MapId b : cells_from[d.target_map(a)])
      if (B.output(b) == B.inputs(outer2)[slot]) out.push_back(b);
    return out;
  };
  auto pastings = [&](auto&& visit) {
    for (MapId o = 0; o < nS; ++o) {
      auto in = B.inputs(o);
      for (std::size_t i = 0; i < in.size(); ++i)
        for (MapId a : B.maps_into(in[i])) {
          if (in.size() + B.inputs(a).size() - 1 > B.arity_bound()) continue;
          for (MapId o2 : cells_from[d.target_map(o)])
            for (MapId a2 : matching(a, o2, i))
              if (!visit(Pasting{o, i, a, o2, a2})) return;
        }
    }
  };
  auto pasting_sample = [&, outer = non_nullary(B)](Draw& dr, Pasting& x) {
    if (outer.empty()) return false;
    x.outer = outer[dr.below(outer.size())];
    auto in = B.inputs(x.outer);
    x.slot = dr.below(in.size());
    auto into = B.maps_into(in[x.slot]);
    if (into.empty()) return false;
    x.inner = into[dr.below(into.size())];
    if (in.size() + B.inputs(x.inner).size() - 1 > B.arity_bound()) return false;
    const auto& o2 = cells_from[d.target_map(x.outer)];
    if (o2.empty()) return false;
    x.outer2 = o2[dr.below(o2.size())];
    auto a2 = matching(x.inner, x.outer2, x.slot);
    if (a2.empty()) return false;
    x.inner2 = a2[dr.below(a2.size())];
    return true;
  };
  over_instances<Pasting>(opt, draw, pastings, pasting_sample, [&](const Pasting& x) {
    MapId top = compose_at(B, x.outer, x.slot, x.inner, r);
    MapId bottom = compose_at(B, x.outer2, x.slot, x.inner2, r);
    MapId lhs = d.horizontal_map(bottom, top);
    MapId h_outer = d.horizontal_map(x.outer2, x.outer), h_inner = d.horizontal_map(x.inner2, x.inner);
    if (h_outer == kNoMap || h_inner == kNoMap) {
      r.fail("HorizontalClosure", cell(x.outer2) + " * " + cell(x.outer));
      return;
    }
    MapId rhs = compose_at(B, h_outer, x.slot, h_inner, r);
    r.expect(lhs == rhs && lhs != kNoMap, "Interchange", [&] {
      return "(" + cell(x.outer2) + " slot " + std::to_string(x.slot + 1) + " " + cell(x.inner2) + ") * (" +
             cell(x.outer) + " slot " + std::to_string(x.slot + 1) + " " + cell(x.inner) + ")";
    });
  });
  return r;
}

// ---------------------------------------------------------------------------
// Reindexing and duality.

CyclicDoubleMulticategory reindex_w(const CyclicDoubleMulticategory& d, std::vector<std::size_t> w) {
  Universe u = d.universe();
  return CyclicDoubleMulticategory(assemble(std::move(u), std::move(w), false, 0));
}

CyclicDoubleMulticategory lr_duality(const CyclicDoubleMulticategory& d) {
  const Universe& u = d.universe();
  Universe v;
  v.arity_bound = u.arity_bound;
  for (const auto& c : u.cats) v.cats.push_back(opposite(c));
  for (const auto& f : u.functors) v.functors.push_back(opposite(f));
  for (const auto& m : u.madjs) v.madjs.push_back(dualize(m));
  for (const auto& t : u.cells) v.cells.push_back(dual_cell(t));
  return CyclicDoubleMulticategory(assemble(std::move(v), d.anchors(), false, 0));
}

bool same_instance(const CyclicDoubleMulticategory& a, const CyclicDoubleMulticategory& b) {
  const Universe &u = a.universe(), &v = b.universe();
  if (a.chirality() != b.chirality() || u.arity_bound != v.arity_bound) return false;
  for (std::size_t n = 0; n <= u.arity_bound; ++n)
    if (a.anchor(n) != b.anchor(n)) return false;
  if (u.cats.size() != v.cats.size() || u.functors != v.functors || u.madjs != v.madjs || u.cells != v.cells)
    return false;
  for (std::size_t x = 0; x < u.cats.size(); ++x)
    if (!same_category(u.cats[x], v.cats[x])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Universe construction.

std::vector<CategoryPtr> close_under_opposite(std::vector<CategoryPtr> cats) {
  const std::size_t n = cats.size();
  for (std::size_t x = 0; x < n; ++x) {
    CategoryPtr o = opposite(cats[x]);
    bool present = false;
    for (const auto& c : cats) present |= same_category(c, o);
    if (!present) cats.push_back(o);
  }
  return cats;
}

std::vector<Functor> all_functors(std::span<const CategoryPtr> cats) {
  std::vector<Functor> out;
  for (const auto& s : cats)
    for (const auto& t : cats) {
      auto fs = enumerate_functors(s, t);
      out.insert(out.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
    }
  return out;
}

std::vector<MultiAdjunction> all_madjs(std::span<const CategoryPtr> cats, std::size_t bound) {
  std::vector<MultiAdjunction> out;
  for (std::size_t n = 0; n <= bound; ++n) {
    std::vector<std::size_t> t(n + 1, 0);
    while (true) {
      std::vector<CategoryPtr> cs;
      for (auto i : t) cs.push_back(cats[i]);
      std::vector<CategoryPtr> factors(cs.begin() + 1, cs.end());
      for (const auto& F0 : enumerate_functors(product(factors), opposite(cs[0]))) {
        try {
          out.push_back(from_primary(cs, F0, searched_adjoints(F0, cs)));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotAdjoint && e.code() != ErrorCode::NaturalityFailure) throw;
        }
      }
      std::size_t k = t.size();
      while (k > 0 && ++t[k - 1] == cats.size()) t[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

Universe thin_universe(std::vector<CategoryPtr> cats, std::size_t bound, std::size_t cells_per_madj,
                       std::uint64_t seed) {
  Universe u;
  u.arity_bound = bound;
  u.cats = close_under_opposite(std::move(cats));
  u.functors = all_functors(u.cats);
  u.madjs = all_madjs(u.cats, bound);

  std::map<std::pair<const FinCategory*, const FinCategory*>, std::vector<std::size_t>> between;
  for (std::size_t f = 0; f < u.functors.size(); ++f)
    between[{u.functors[f].source.get(), u.functors[f].target.get()}].push_back(f);
  std::map<std::size_t, std::vector<std::size_t>> by_arity;
  std::vector<MadjPtr> shared;
  for (std::size_t m = 0; m < u.madjs.size(); ++m) {
    by_arity[u.madjs[m].arity()].push_back(m);
    shared.push_back(share(u.madjs[m]));
  }
  for (const auto& m : shared) u.cells.push_back(identity_cell(m));
  for (const auto& S : u.functors) u.cells.push_back(identity_on_side(S));

  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::size_t tries = 20 * cells_per_madj;
  for (std::size_t m = 0; m < shared.size(); ++m) {
    const auto& peers = by_arity[shared[m]->arity()];
    std::size_t found = 0;
    for (std::size_t k = 0; k < tries && found < cells_per_madj; ++k) {
      const MadjPtr& tgt = shared[k % 2 == 0 ? m : peers[below(peers.size())]];
      std::vector<Functor> sides;
      for (std::size_t i = 0; i < tgt->cats.size(); ++i) {
        const auto& options = between[{shared[m]->cats[i].get(), tgt->cats[i].get()}];
        if (options.empty()) break;
        sides.push_back(u.functors[options[below(options.size())]]);
      }
      if (sides.size() != tgt->cats.size()) continue;
      auto cells = enumerate_cells(shared[m], tgt, sides, 0, 1);
      if (cells.empty()) continue;
      u.cells.push_back(std::move(cells[0]));
      ++found;
    }
  }
  return u;
}

}  // namespace catmates
