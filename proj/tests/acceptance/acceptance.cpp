// Acceptance criteria, one PASS/FAIL line each. Usage: acceptance [criterion|all]
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "catmates/cdm.hpp"
#include "catmates/leibniz.hpp"
#include "catmates/mates.hpp"
#include "catmates/multicategory.hpp"
#include "support.hpp"

using namespace catmates;
using testing_support::le;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records a failure once, keeping the first witness.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;
  void expect(bool ok, const std::function<std::string()>& witness) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = witness();
  }
  Outcome outcome(const std::string& what) const {
    if (failed == 0) return {true, std::to_string(checked) + " " + what};
    return {false, std::to_string(failed) + " of " + std::to_string(checked) + " " + what + " failed; first: " + first};
  }
};

std::vector<CategoryPtr> chains(std::size_t max_len) {
  std::vector<CategoryPtr> out;
  for (std::size_t k = 1; k <= max_len; ++k) out.push_back(chain(k));
  return out;
}

// Classical form of every adjunction found by adjoint_search between the chains.
struct Found {
  MutualLeftAdjunction mutual;
  OrdinaryAdjunction classical;
};

std::vector<Found> searched_chain_adjunctions(std::size_t max_len) {
  std::vector<Found> out;
  for (const auto& X : chains(max_len))
    for (const auto& Y : chains(max_len))
      for (const auto& F : enumerate_functors(X, opposite(Y)))
        if (auto a = adjoint_search(F).adjunction) out.push_back({*a, to_ordinary(*a)});
  return out;
}

// Monotone maps between thin categories, cached per pair.
const std::vector<Functor>& monotone(const CategoryPtr& a, const CategoryPtr& b) {
  static std::map<std::pair<const FinCategory*, const FinCategory*>, std::vector<Functor>> cache;
  auto key = std::make_pair(a.get(), b.get());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_functors(a, b)).first;
  return it->second;
}

// The unique square L'S => TL between thin adjunctions, if it exists.
std::optional<NatTransformation> thin_square(const OrdinaryAdjunction& a, const OrdinaryAdjunction& a2,
                                             const Functor& S, const Functor& T) {
  const FinCategory& Yp = *a2.left.target;
  Functor src = compose(a2.left, S), tgt = compose(T, a.left);
  NatTransformation alpha{src, tgt, {}};
  for (ObjId x = 0; x < src.obj.size(); ++x) {
    auto h = Yp.hom(src.obj[x], tgt.obj[x]);
    if (h.empty()) return std::nullopt;
    alpha.components.push_back(h[0]);
  }
  return alpha;
}

struct Square {
  std::size_t from, to;  // indices of the adjunctions
  Functor S, T;
  NatTransformation alpha;
};

std::vector<Square> all_squares(const std::vector<OrdinaryAdjunction>& adjs) {
  std::vector<Square> out;
  for (std::size_t i = 0; i < adjs.size(); ++i)
    for (std::size_t j = 0; j < adjs.size(); ++j) {
      const auto& a = adjs[i];
      const auto& a2 = adjs[j];
      for (const auto& S : monotone(a.left.source, a2.left.source))
        for (const auto& T : monotone(a.left.target, a2.left.target))
          if (auto alpha = thin_square(a, a2, S, T)) out.push_back({i, j, S, T, std::move(*alpha)});
    }
  return out;
}

// L -| R between thin categories with the unique unit and counit.
OrdinaryAdjunction thin_classical(const Functor& L, const Functor& R) {
  const auto &X = L.source, &Z = L.target;
  OrdinaryAdjunction c{L, R, {identity_functor(X), compose(R, L), {}}, {compose(L, R), identity_functor(Z), {}}};
  for (ObjId x = 0; x < X->object_count(); ++x) c.eta.components.push_back(le(X, x, R.obj[L.obj[x]]));
  for (ObjId z = 0; z < Z->object_count(); ++z) c.epsilon.components.push_back(le(Z, L.obj[R.obj[z]], z));
  return c;
}

// Galois connections between chains, found by brute force over monotone pairs.
std::vector<OrdinaryAdjunction> galois_chain_adjunctions(std::size_t max_len) {
  std::vector<OrdinaryAdjunction> out;
  for (const auto& X : chains(max_len))
    for (const auto& Y : chains(max_len))
      for (const auto& L : monotone(X, Y))
        for (const auto& R : monotone(Y, X)) {
          bool galois = true;
          for (ObjId x = 0; x < X->object_count(); ++x)
            for (ObjId y = 0; y < Y->object_count(); ++y)
              galois &= Y->hom(L.obj[x], y).empty() == X->hom(x, R.obj[y]).empty();
          if (galois) out.push_back(thin_classical(L, R));
        }
  return out;
}

OrdinaryAdjunction thin_composite(const OrdinaryAdjunction& a, const OrdinaryAdjunction& b) {
  return thin_classical(compose(b.left, a.left), compose(a.right, b.right));
}

Outcome criterion1() {
  auto adjs = searched_chain_adjunctions(4);
  Tally t;
  std::size_t squares = 0;
  for (std::size_t i = 0; i < adjs.size(); ++i)
    for (std::size_t j = 0; j < adjs.size(); ++j) {
      const auto &a = adjs[i].classical, &a2 = adjs[j].classical;
      const auto &m = adjs[i].mutual, &m2 = adjs[j].mutual;
      const auto uc = unit_counit(m), uc2 = unit_counit(m2);
      const auto mt = transpose(m), mt2 = transpose(m2);
      const auto uct = unit_counit(mt), uct2 = unit_counit(mt2);
      for (const auto& S : monotone(a.left.source, a2.left.source))
        for (const auto& T : monotone(a.left.target, a2.left.target)) {
          auto alpha = thin_square(a, a2, S, T);
          if (!alpha) continue;
          ++squares;
          auto beta = mate1(*alpha, S, T, a, a2);
          auto where = [&] { return "adjunctions " + std::to_string(i) + ", " + std::to_string(j); };
          t.expect(validate_natural(beta).ok(), where);
          t.expect(mate1_inverse(beta, S, T, a, a2) == *alpha, where);
          t.expect(mate1(mate1_inverse(beta, S, T, a, a2), S, T, a, a2) == beta, where);
          // The same square in the mutual form: the mate of the mate is the original.
          auto once = mate_mutual(m, uc, m2, uc2, opposite(S), T, alpha->components);
          t.expect(once == beta.components, where);
          t.expect(mate_mutual(mt, uct, mt2, uct2, T, opposite(S), once) == alpha->components, where);
        }
    }
  auto o = t.outcome("round trips");
  o.detail += " over " + std::to_string(adjs.size()) + " adjunctions and " + std::to_string(squares) + " squares";
  return o;
}

Outcome criterion2() {
  auto adjs = galois_chain_adjunctions(3);
  // Oracle: the brute-force set has one adjunction per successful adjoint_search.
  const std::size_t searched = searched_chain_adjunctions(3).size();
  if (searched != adjs.size())
    return {false, std::to_string(adjs.size()) + " Galois connections but " + std::to_string(searched) +
                       " searched adjunctions"};
  auto squares = all_squares(adjs);
  std::vector<std::vector<std::size_t>> into(adjs.size()), out_of(adjs.size());
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> between;
  for (std::size_t k = 0; k < squares.size(); ++k) {
    into[squares[k].to].push_back(k);
    out_of[squares[k].from].push_back(k);
    between[{squares[k].from, squares[k].to}].push_back(k);
  }
  std::vector<NatTransformation> mates;
  for (const auto& s : squares) mates.push_back(mate1(s.alpha, s.S, s.T, adjs[s.from], adjs[s.to]));

  Tally h;
  for (std::size_t mid = 0; mid < adjs.size(); ++mid)
    for (auto k1 : into[mid])
      for (auto k2 : out_of[mid]) {
        const Square &s1 = squares[k1], &s2 = squares[k2];
        const auto &a1 = adjs[s1.from], &a3 = adjs[s2.to];
        Functor S = compose(s2.S, s1.S), T = compose(s2.T, s1.T);
        const FinCategory& Ypp = *a3.left.target;
        NatTransformation pasted{compose(a3.left, S), compose(T, a1.left), {}};
        for (ObjId x = 0; x < S.obj.size(); ++x)
          pasted.components.push_back(Ypp.compose(s2.T.mor[s1.alpha.components[x]], s2.alpha.components[s1.S.obj[x]]));
        auto lhs = mate1(pasted, S, T, a1, a3);
        const FinCategory& Xpp = *a3.left.source;
        bool ok = true;
        for (ObjId y = 0; y < lhs.components.size(); ++y)
          ok &= lhs.components[y] ==
                Xpp.compose(mates[k2].components[s1.T.obj[y]], s2.S.mor[mates[k1].components[y]]);
        h.expect(ok, [&] { return "horizontal pair " + std::to_string(k1) + ", " + std::to_string(k2); });
      }

  // Vertical: squares on a and b stacked along a shared middle side.
  Tally v;
  for (const auto& [ends1, group1] : between)
    for (const auto& [ends2, group2] : between) {
      const auto &a = adjs[ends1.first], &ap = adjs[ends1.second];
      const auto &b = adjs[ends2.first], &bp = adjs[ends2.second];
      if (!same_category(b.left.source, a.left.target) || !same_category(bp.left.source, ap.left.target)) continue;
      auto ab = thin_composite(a, b), abp = thin_composite(ap, bp);
      v.expect(verify_ordinary(ab).ok() && verify_ordinary(abp).ok(), [&] { return std::string("composite adjunction"); });
      for (auto k1 : group1)
        for (auto k2 : group2) {
          const Square &s1 = squares[k1], &s2 = squares[k2];
          if (!(s2.S == s1.T)) continue;
          const FinCategory& Zp = *bp.left.target;
          NatTransformation pasted{compose(abp.left, s1.S), compose(s2.T, ab.left), {}};
          for (ObjId x = 0; x < s1.S.obj.size(); ++x)
            pasted.components.push_back(
                Zp.compose(s2.alpha.components[a.left.obj[x]], bp.left.mor[s1.alpha.components[x]]));
          auto lhs = mate1(pasted, s1.S, s2.T, ab, abp);
          const FinCategory& Xp = *ap.left.source;
          bool ok = true;
          for (ObjId z = 0; z < lhs.components.size(); ++z)
            ok &= lhs.components[z] ==
                  Xp.compose(ap.right.mor[mates[k2].components[z]], mates[k1].components[b.right.obj[z]]);
          v.expect(ok, [&] { return "vertical pair " + std::to_string(k1) + ", " + std::to_string(k2); });
        }
    }
  auto oh = h.outcome("horizontal pastings"), ov = v.outcome("vertical pastings");
  return {oh.pass && ov.pass && h.checked > 0 && v.checked > 0, oh.detail + "; " + ov.detail};
}

// Sides for a madj whose slots are base categories or their opposites.
std::vector<Functor> sides_for(const MultiAdjunction& m, const std::vector<Functor>& base) {
  std::vector<Functor> out;
  for (std::size_t s = 0; s < base.size(); ++s)
    out.push_back(same_category(m.cats[s], base[s].source) ? base[s] : opposite(base[s]));
  return out;
}

// Every cell m -> m over all side triples of monotone endomaps of H3.
std::vector<TwoCell> all_cells(const MadjPtr& m) {
  const auto& endos = monotone(heyting3(), heyting3());
  std::vector<TwoCell> out;
  const std::size_t n1 = m->cats.size();
  std::vector<std::size_t> pick(n1, 0);
  while (true) {
    std::vector<Functor> base;
    for (auto p : pick) base.push_back(endos[p]);
    for (auto& c : enumerate_cells(m, m, sides_for(*m, base))) out.push_back(std::move(c));
    std::size_t s = 0;
    while (s < n1 && ++pick[s] == endos.size()) pick[s++] = 0;
    if (s == n1) break;
  }
  return out;
}

Outcome criterion3() {
  auto m = share(testing_support::h3_meet());
  auto cells = all_cells(m);
  Tally t;
  for (const auto& c : cells) {
    // From every anchor i, the mate of the mate via j equals the direct mate to k.
    for (std::size_t i = 0; i < 3; ++i) {
      auto ti = i == 0 ? c : mate_n(c, i);
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          if (i == j || j == k || i == k) continue;
          t.expect(mate_n(mate_n(ti, j), k) == mate_n(ti, k), [&] {
            return "anchor " + std::to_string(i) + " via " + std::to_string(j) + " to " + std::to_string(k);
          });
        }
    }
  }
  auto o = t.outcome("double mates");
  o.detail += " on " + std::to_string(cells.size()) + " cells";
  o.pass &= !cells.empty();
  return o;
}

Outcome criterion4() {
  auto h = heyting3();
  std::vector<CategoryPtr> cats{h, opposite(h)};
  std::size_t madjs = 0, cells = 0;
  Report r;
  for (auto& m : all_madjs(cats, 2)) {
    if (m.arity() != 2) continue;
    ++madjs;
    auto cs = all_cells(share(std::move(m)));
    cells += cs.size();
    r.merge(check_mate_coherence(cs));
  }
  Outcome o{r.ok() && cells > 0, std::to_string(r.checked()) + " transitivity/orbit instances on " +
                                     std::to_string(cells) + " cells over " + std::to_string(madjs) + " adjunctions"};
  if (!r.ok()) o.detail += "; " + r.summary();
  return o;
}

Outcome criterion5() {
  using V = std::vector<MultiAdjunction>;
  auto h = heyting3(), ho = opposite(h);
  std::vector<CategoryPtr> pc{h};
  auto pick2f = constant_functor(terminal_category(), ho, 2);
  // Fixture set: every entry has inputs H3• and output H3•, so all composites typecheck.
  const V fixtures{testing_support::h3_meet(), testing_support::h3_meet_one(), identity_madj(ho),
                   from_primary(pc, pick2f, searched_adjoints(pick2f, pc))};
  const char* names[] = {"meet", "meet1", "id", "pick2"};

  Tally oracle;
  auto check_oracle = [&](const MultiAdjunction& c, const std::string& what) {
    oracle.expect(verify_cycle(c).ok(), [&] { return what + ": verify_cycle"; });
    auto searched = from_primary(c.cats, c.funs[0], searched_adjoints(c.funs[0], c.cats));
    oracle.expect(searched == c, [&] { return what + ": differs from the searched adjoints"; });
  };
  // Every g with every tuple of fixtures (covers identity padding, nullary
  // slots and 2 ∘ (1, 1)), and every single-slot composite.
  std::map<std::string, std::size_t> cases;
  for (std::size_t g = 0; g < fixtures.size(); ++g) {
    const std::size_t n = fixtures[g].arity();
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      V fs;
      std::string what = std::string(names[g]) + "(";
      for (std::size_t i = 0; i < n; ++i) {
        fs.push_back(fixtures[pick[i]]);
        what += (i ? "," : "") + std::string(names[pick[i]]);
      }
      check_oracle(compose_multi(fixtures[g], fs), what + ")");
      ++cases["tuple"];
      std::size_t s = 0;
      while (s < n && ++pick[s] == fixtures.size()) pick[s++] = 0;
      if (s == n) break;
    }
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t f = 0; f < fixtures.size(); ++f) {
        check_oracle(compose_at(fixtures[g], i, fixtures[f]),
                     std::string(names[g]) + " o_" + std::to_string(i) + " " + names[f]);
        ++cases["padded"];
      }
  }

  // Three-level bracketings g ∘ (f_i) ∘ (h_ij) with composite arity at most 4.
  Tally assoc;
  for (std::size_t g = 0; g < fixtures.size(); ++g) {
    const std::size_t n = fixtures[g].arity();
    std::vector<std::size_t> fpick(n, 0);
    while (true) {
      V fs;
      std::size_t mid = 0;
      for (auto p : fpick) {
        fs.push_back(fixtures[p]);
        mid += fixtures[p].arity();
      }
      std::vector<std::size_t> hpick(mid, 0);
      while (mid <= 4) {
        V hs;
        std::size_t total = 0;
        for (auto p : hpick) {
          hs.push_back(fixtures[p]);
          total += fixtures[p].arity();
        }
        if (total <= 4) {
          auto left = compose_multi(compose_multi(fixtures[g], fs), hs);
          V inner;
          std::size_t at = 0;
          for (const auto& f : fs) {
            V part(hs.begin() + static_cast<std::ptrdiff_t>(at), hs.begin() + static_cast<std::ptrdiff_t>(at + f.arity()));
            inner.push_back(compose_multi(f, part));
            at += f.arity();
          }
          auto right = compose_multi(fixtures[g], inner);
          assoc.expect(left == right, [&] { return std::string("bracketing under ") + names[g]; });
        }
        std::size_t s = 0;
        while (s < mid && ++hpick[s] == fixtures.size()) hpick[s++] = 0;
        if (s == mid) break;
      }
      std::size_t s = 0;
      while (s < n && ++fpick[s] == fixtures.size()) fpick[s++] = 0;
      if (s == n) break;
    }
    // Units on both sides.
    V ids(n, identity_madj(ho));
    assoc.expect(compose_multi(fixtures[g], ids) == fixtures[g], [&] { return std::string("right unit on ") + names[g]; });
    assoc.expect(compose_multi(identity_madj(ho), V{fixtures[g]}) == fixtures[g],
                 [&] { return std::string("left unit on ") + names[g]; });
  }
  auto o1 = oracle.outcome("oracle comparisons"), o2 = assoc.outcome("associativity/unit instances");
  return {o1.pass && o2.pass, o1.detail + " (" + std::to_string(cases["tuple"]) + " tuple and " +
                                  std::to_string(cases["padded"]) + " padded composites); " + o2.detail};
}

std::vector<ObjIx> reversal(std::size_t n) {
  std::vector<ObjIx> s(n);
  for (std::size_t x = 0; x < n; ++x) s[x] = static_cast<ObjIx>(n - 1 - x);
  return s;
}

Outcome criterion6a() {
  auto h = heyting3();
  auto m = monoidal_poset_multicategory(h, [](ObjId a, ObjId b) { return std::min(a, b); }, 2, 3);
  Report base = check_multicategory(m);
  if (!base.ok()) return {false, "multicategory laws: " + base.summary()};
  // The axiom suite needs a cyclic structure; try every involution of the objects.
  std::string witnesses;
  for (const auto& s : std::vector<std::vector<ObjIx>>{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}}) {
    Report r = check_cyclic(m, thin_cyclic_structure(m, s));
    if (r.ok()) return {true, "cyclic with x* = (" + std::to_string(s[0]) + std::to_string(s[1]) + std::to_string(s[2]) + ")"};
    const auto& v = r.violations().front();
    witnesses += " [x*=" + std::to_string(s[0]) + std::to_string(s[1]) + std::to_string(s[2]) + ": " + v.law + " at " +
                 v.witness + "]";
  }
  return {false, "multicategory laws pass (" + std::to_string(base.checked()) +
                     " instances), but no involution on {0,1,2} makes M_H3 with meet cyclic:" + witnesses};
}

Outcome criterion6b() {
  auto d = build_madj(thin_universe({heyting3()}, 2, 2, 7));
  auto A = d.vertical();
  CheckOptions opt{.max_instances = 5000};
  Report r = check_multicategory(A, opt);
  r.merge(check_cyclic(A, opt));
  if (!r.ok()) return {false, r.summary()};
  std::string detail = std::to_string(r.checked()) + " axiom instances on " + std::to_string(A.map_count()) + " maps";

  // One mutant per axiom family.
  MapId f = kNoMap, other = kNoMap;
  for (MapId g = 0; g < A.map_count() && f == kNoMap; ++g) {
    if (A.inputs(g).size() != 1) continue;
    MapId s = A.sigma(g);
    for (MapId h : A.maps_into(A.output(s)))
      if (h != s && A.inputs(h).size() == 1 && A.inputs(h)[0] == A.inputs(s)[0]) {
        f = g;
        other = h;
        break;
      }
  }
  if (f == kNoMap) return {false, detail + "; no 1-ary map with a second element in its sigma hom-set"};
  std::vector<std::string> missed;
  {
    Mutant<VerticalView> m(A);
    m.sigma_at[f] = other;
    if (!check_cyclic(m, opt).has_law("Cyclicity")) missed.push_back("Cyclicity");
  }
  {
    Mutant<VerticalView> m(A);
    ObjIx x = A.inputs(f)[0];
    m.identity_at[x] = f == A.identity(x) ? other : f;
    if (!check_cyclic(m, opt).has_law("IdentityPreserved")) missed.push_back("IdentityPreserved");
  }
  {
    Mutant<VerticalView> m(A);
    bool placed = false;
    for (MapId g = 0; g < A.map_count() && !placed; ++g) {
      if (A.inputs(g).size() != 2) continue;
      for (MapId h : A.maps_into(A.inputs(g)[1])) {
        if (!A.inputs(h).empty()) continue;
        std::vector<MapId> fs{A.identity(A.inputs(g)[0]), h};
        MapId c = A.compose(g, fs);
        for (MapId e : A.maps_into(A.output(c)))
          if (e != c && A.inputs(e).size() == 1 && A.inputs(e)[0] == A.inputs(c)[0]) {
            std::vector<MapId> key{g};
            key.insert(key.end(), fs.begin(), fs.end());
            m.composite_at[key] = e;
            placed = true;
            break;
          }
        if (placed) break;
      }
    }
    Report mr = check_cyclic(m, {.max_instances = 200000});
    if (!placed || !mr.has_law("SigmaComposition")) missed.push_back("SigmaComposition");
  }
  if (!missed.empty()) {
    std::string s;
    for (const auto& x : missed) s += " " + x;
    return {false, detail + "; mutants not caught:" + s};
  }
  return {true, detail + "; mutants caught: Cyclicity, IdentityPreserved, SigmaComposition"};
}

Outcome criterion7() {
  auto d = build_madj(thin_universe({heyting3()}, 2, 2, 7), {.closure_budget = 100000000});
  Report r = check_category_object(d, {.max_instances = 5000});
  std::string detail = std::to_string(d.universe().madjs.size()) + " adjunctions, " +
                       std::to_string(d.universe().cells.size()) + " seed cells, " + std::to_string(r.checked()) +
                       " law instances";
  if (!r.ok()) return {false, detail + "; " + r.summary()};
  auto w = reindex_w(d, {0, 0, 1});
  bool moved = w.anchor(2) == 1;
  bool round_trip = same_instance(reindex_w(w, {0, 0, 0}), d);
  bool involutive = same_instance(lr_duality(lr_duality(d)), d);
  Outcome o{moved && round_trip && involutive, detail};
  o.detail += round_trip ? "; reindex_w(w2=1) round-trips" : "; reindex_w(w2=1) does not round-trip";
  o.detail += involutive ? "; lr_duality is involutive" : "; lr_duality is not involutive";
  return o;
}

Outcome criterion8() {
  auto b = boolean2();
  const FinCategory& B = *b;
  Tally t;
  auto F = thin_functor_n(std::vector<CategoryPtr>{b, b}, b,
                          [&](std::span<const ObjId> x) { return *meet(B, x[0], x[1]); });
  for (MorId f = 0; f < B.morphism_count(); ++f)
    for (MorId g = 0; g < B.morphism_count(); ++g) {
      auto r = hat_morphism({F, {b, b}, {f, g}});
      ObjId a0 = B.src(f), a1 = B.tgt(f), b0 = B.src(g), b1 = B.tgt(g);
      ObjId dom = *join(B, *meet(B, a0, b1), *meet(B, a1, b0));
      t.expect(r.morphism == le(b, dom, *meet(B, a1, b1)),
               [&] { return "pushout-product at " + B.morphism_name(f) + ", " + B.morphism_name(g); });
    }
  for (const auto& G : monotone(b, b))
    for (MorId f = 0; f < B.morphism_count(); ++f)
      t.expect(hat_morphism({G, {b}, {f}}).morphism == G.mor[f],
               [&] { return "n = 1 at " + B.morphism_name(f); });
  auto bo = opposite(b);
  std::vector<CategoryPtr> cats{b, bo, bo};
  auto F0 = thin_functor_n(std::vector<CategoryPtr>{bo, bo}, bo,
                           [&](std::span<const ObjId> x) { return *meet(B, x[0], x[1]); });
  auto m = from_primary(cats, F0, searched_adjoints(F0, cats));
  auto res = hat_preserves_adjunction_check(m);
  auto o = t.outcome("hat values");
  if (res.skipped) return {false, o.detail + "; hatted adjunction skipped: " + res.reason};
  o.pass &= res.report.ok() && res.hatted.has_value();
  o.detail += "; hatted meet adjunction: " + res.report.summary();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::pair<std::string, std::function<Outcome()>>>> all{
      {"1", {"conjugation involution on chains of length <= 4", criterion1}},
      {"2", {"mates respect horizontal and vertical composition", criterion2}},
      {"3", {"two-variable double mate equals the direct mate on H3 meet", criterion3}},
      {"4", {"n = 2 transitivity and orbit identity on the H3 universe", criterion4}},
      {"5", {"composite adjoints match the search oracle; associativity and units", criterion5}},
      {"6a", {"cyclic multicategory axioms on M_H3 (meet), arity <= 3", criterion6a}},
      {"6b", {"cyclic multicategory axioms on the flagship MAdj instance, with mutants", criterion6b}},
      {"7", {"double multicategory laws, reindexing and duality on the flagship instance", criterion7}},
      {"8", {"Leibniz construction on B2", criterion8}},
  };
  const std::string which = argc > 1 ? argv[1] : "all";
  bool ok = true, any = false;
  for (const auto& [id, entry] : all) {
    if (which != "all" && which != id) continue;
    any = true;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = entry.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s: %s -- %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id.c_str(), entry.first.c_str(),
                o.detail.c_str(), secs);
    ok &= o.pass;
  }
  if (!any) {
    std::printf("unknown criterion %s\n", which.c_str());
    return 2;
  }
  return ok ? 0 : 1;
}
