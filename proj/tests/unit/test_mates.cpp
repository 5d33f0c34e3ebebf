#include <doctest.h>

#include <algorithm>
#include <array>

#include "catmates/mates.hpp"
#include "support.hpp"

using namespace catmates;
using testing_support::Gen;
using testing_support::h3_meet;
using testing_support::h3_meet_one;
using testing_support::z3_mult;

namespace {

// Sides for a madj whose slots are base categories or their opposites: base[s]
// is read through opposite() when slot s holds X•.
std::vector<Functor> sides_for(const MultiAdjunction& m, const std::vector<Functor>& base) {
  std::vector<Functor> out;
  for (std::size_t s = 0; s < base.size(); ++s)
    out.push_back(same_category(m.cats[s], base[s].source) ? base[s] : opposite(base[s]));
  return out;
}

// The monoid of all maps {0,1} -> {0,1}: id, swap, const0, const1.
CategoryPtr maps2() {
  FinCategory::Tables t;
  t.name = "End2";
  t.objects = {"*"};
  const std::vector<std::array<int, 2>> f{{0, 1}, {1, 0}, {0, 0}, {1, 1}};
  for (const char* id : {"id", "swap", "c0", "c1"}) t.morphisms.push_back({id, 0, 0});
  t.identities = {0};
  return FinCategory::assemble(std::move(t), [f](MorId g, MorId h) {
    std::array<int, 2> gh{f[g][f[h][0]], f[g][f[h][1]]};
    return static_cast<MorId>(std::find(f.begin(), f.end(), gh) - f.begin());
  });
}

// Mate by transporting S_i(e^{j->i}) ∘ alpha along the composite isomorphism of
// the target adjunction, with e^{j->i} read from the composite isomorphism of
// the source at the identity of F_j.
std::vector<MorId> transport_mate(const TwoCell& t, std::size_t j) {
  const MultiAdjunction& f = *t.source;
  const MultiAdjunction& g = *t.target;
  const std::size_t i = t.anchor, n = f.arity();
  MadjLayout L(f.cats), Lg(g.cats);
  std::vector<CategoryPtr> icats;
  for (auto s : L.inputs(j)) icats.push_back(f.cats[s]);
  TupleSpace space = object_space(icats);
  std::vector<MorId> out(space.size());
  std::vector<ObjId> tt(icats.size()), full(n + 1, 0), st(n + 1);
  for (std::size_t x = 0; x < space.size(); ++x) {
    space.decode_into(x, tt);
    for (std::size_t q = 0; q < tt.size(); ++q) full[L.inputs(j)[q]] = tt[q];
    full[j] = f.funs[j].obj[x];
    const FinCategory& Aj = *f.cats[j];
    const FinCategory& Ai = *f.cats[i];
    auto back = composite_iso(f, L, j, i, full);
    auto hi = hom_at(f, L, i, full);
    MorId e = Ai.hom(hi.src, hi.tgt)[back[Aj.hom_index(Aj.identity(full[j]))]];
    MorId a = t.components[L.input_object(i, full)];
    MorId h = g.cats[i]->compose(t.sides[i].mor[e], a);
    for (std::size_t s = 0; s <= n; ++s) st[s] = t.sides[s].obj[full[s]];
    auto hgi = hom_at(g, Lg, i, st);
    auto hgj = hom_at(g, Lg, j, st);
    REQUIRE(g.cats[i]->src(h) == hgi.src);
    REQUIRE(g.cats[i]->tgt(h) == hgi.tgt);
    auto fwd = composite_iso(g, Lg, i, j, st);
    out[x] = g.cats[j]->hom(hgj.src, hgj.tgt)[fwd[g.cats[i]->hom_index(h)]];
  }
  return out;
}

// Every valid cell on (m, m) over all side triples built from the given endofunctors.
std::vector<TwoCell> all_cells(const MadjPtr& m, const std::vector<Functor>& endos) {
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

std::vector<Functor> h3_endos() { return enumerate_functors(heyting3(), heyting3()); }
std::vector<Functor> z3_endos() {
  auto z = opposite(z3_mult().cats[0]);
  return enumerate_functors(z, z);
}

}  // namespace

TEST_CASE("identity cells are valid and their mates are identities") {
  for (const auto& raw : {h3_meet(), h3_meet_one(), z3_mult(), cyclic_shift(h3_meet())}) {
    auto m = share(raw);
    auto id = identity_cell(m);
    CHECK(validate_two_cell(id).ok());
    auto orbit = mate_orbit(id);
    CHECK(orbit.size() == m->cats.size());
    for (std::size_t j = 0; j < m->cats.size(); ++j) {
      auto mj = j == 0 ? id : mate_n(id, j);
      CHECK(mj.anchor == j);
      CHECK(validate_two_cell(mj).ok());
      for (std::size_t x = 0; x < mj.components.size(); ++x) {
        CHECK(m->cats[j]->is_identity(mj.components[x]));
        CHECK(mj.components[x] == m->cats[j]->identity(m->funs[j].obj[x]));
      }
    }
  }
}

TEST_CASE("H3 meet with every side min(-,1)") {
  auto m = share(h3_meet());
  auto h = heyting3();
  auto S = thin_functor(h, h, std::vector<ObjId>{0, 1, 1});
  auto sides = sides_for(*m, {S, S, S});
  auto cells = enumerate_cells(m, m, sides);
  REQUIRE(cells.size() == 1);
  const TwoCell& t = cells[0];
  CHECK(validate_two_cell(t).ok());
  // min(min(a,1), min(b,1)) <= min(min(a,b), 1) holds with equality.
  for (ObjId a = 0; a < 3; ++a)
    for (ObjId b = 0; b < 3; ++b) CHECK(t.components[a * 3 + b] == h->identity(std::min({a, b, ObjId{1}})));
  for (std::size_t j = 1; j <= 2; ++j) {
    auto mj = mate_n(t, j);
    auto unique = enumerate_cells(m, m, sides, j);
    REQUIRE(unique.size() == 1);
    CHECK(mj == unique[0]);
  }
  // Anchored at 1 the component at (c, a) runs F'_1(Sc, Sa) -> S F_1(c, a) in
  // H3•, i.e. min(c ⇒ a, 1) <= min(c,1) ⇒ min(a,1) in H3.
  auto m1 = mate_n(t, 1);
  auto imp = [](ObjId x, ObjId y) { return x <= y ? ObjId{2} : y; };
  for (ObjId c = 0; c < 3; ++c)
    for (ObjId a = 0; a < 3; ++a) {
      const auto& mor = h->morphism(m1.components[c * 3 + a]);
      CHECK(mor.src == std::min(imp(c, a), ObjId{1}));
      CHECK(mor.tgt == imp(std::min(c, ObjId{1}), std::min(a, ObjId{1})));
    }
}

TEST_CASE("perturbed component tables are reported") {
  SUBCASE("wrong endpoints in a poset") {
    auto t = identity_cell(share(h3_meet()));
    t.components[4] = heyting3()->identity(0);
    auto r = validate_two_cell(t);
    CHECK(r.has_law("ComponentEndpoints"));
    CHECK(r.violations()[0].witness.find("(1,1)") != std::string::npos);
  }
  SUBCASE("a non-natural endomorphism") {
    auto e = maps2();
    auto t = identity_cell(share(identity_madj(e)));
    REQUIRE(validate_two_cell(t).ok());
    t.components[0] = e->morphism_id("c0");
    auto r = validate_two_cell(t);
    CHECK(r.has_law("Naturality"));
    CHECK(r.violations()[0].witness.find("swap") != std::string::npos);
    // Only the identity is central in this monoid.
    CHECK(enumerate_cells(t.source, t.target, t.sides).size() == 1);
  }
  SUBCASE("boundary and anchor errors") {
    auto t = identity_cell(share(h3_meet()));
    CHECK(testing_support::code_of([&] { mate_n(t, 0); }) == ErrorCode::InvalidAnchor);
    CHECK(testing_support::code_of([&] { mate_n(t, 3); }) == ErrorCode::InvalidAnchor);
    auto bad = t;
    bad.sides.pop_back();
    CHECK(testing_support::code_of([&] { mate_n(bad, 1); }) == ErrorCode::BoundaryMismatch);
    CHECK(validate_two_cell(bad).has_law("BoundaryMismatch"));
  }
}

TEST_CASE("mates agree with transport along the composite isomorphisms") {
  std::size_t checked = 0;
  for (auto [raw, endos] : {std::pair{h3_meet(), h3_endos()}, std::pair{z3_mult(), z3_endos()},
                            std::pair{cyclic_shift(z3_mult()), z3_endos()}, std::pair{h3_meet_one(), h3_endos()}}) {
    auto m = share(raw);
    for (const auto& t : all_cells(m, endos))
      for (std::size_t j = 1; j <= t.arity(); ++j) {
        auto mj = mate_n(t, j);
        CHECK(mj.components == transport_mate(t, j));
        CHECK(validate_two_cell(mj).ok());
        for (std::size_t k = 0; k <= t.arity(); ++k)
          if (k != j) CHECK(mate_n(mj, k).components == transport_mate(mj, k));
        ++checked;
      }
  }
  CHECK(checked > 50);
}

TEST_CASE("one variable: mate_n is the classical mate") {
  auto m = h3_meet_one();
  auto c = as_mutual(m);
  auto h = heyting3();
  auto mp = share(m);
  for (const auto& S0 : h3_endos())
    for (const auto& S1 : h3_endos()) {
      auto sides = sides_for(m, {S0, S1});
      for (const auto& t : enumerate_cells(mp, mp, sides)) {
        auto b = mate_n(t, 1);
        CHECK(b.components == mate_mutual(c, c, sides[1], sides[0], t.components));
        CHECK(mate_n(b, 0) == t);
        CHECK(mate_orbit(t).size() == 2);
      }
    }
}

TEST_CASE("coherence on the H3 universe with all monotone sides") {
  auto m = share(h3_meet());
  auto cells = all_cells(m, h3_endos());
  CHECK(cells.size() > 100);
  auto r = check_mate_coherence(cells);
  CHECK(r.ok());
  CHECK(r.checked() > 0);
  for (const auto& t : cells) {
    auto orbit = mate_orbit(t);
    REQUIRE(orbit.size() == 3);
    CHECK(orbit[1].anchor == 1);
    CHECK(orbit[2].anchor == 2);
    CHECK(mate_n(orbit[2], 0) == t);
    // The double mate equals the direct mate to the last slot.
    CHECK(orbit[2] == mate_n(t, 2));
  }
}

TEST_CASE("coherence on Z3 and on a composite") {
  auto z = share(z3_mult());
  auto cells = all_cells(z, z3_endos());
  // Naturality forces the three endomorphisms to agree; then every element works.
  CHECK(cells.size() == 9);
  CHECK(check_mate_coherence(cells).ok());

  std::vector<MultiAdjunction> fs{h3_meet(), h3_meet_one()};
  auto comp = share(compose_multi(h3_meet(), fs));
  REQUIRE(comp->arity() == 3);
  auto id = identity_cell(comp);
  CHECK(check_mate_coherence(std::span<const TwoCell>(&id, 1)).ok());
  Gen gen(17);
  auto endos = h3_endos();
  std::vector<TwoCell> sampled;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Functor> base;
    for (std::size_t s = 0; s < 4; ++s) base.push_back(gen.pick(endos));
    for (auto& c : enumerate_cells(comp, comp, sides_for(*comp, base))) sampled.push_back(c);
  }
  CHECK(!sampled.empty());
  CHECK(check_mate_coherence(sampled).ok());
  for (const auto& t : sampled)
    for (std::size_t j = 1; j <= 3; ++j) CHECK(mate_n(t, j).components == transport_mate(t, j));
}

TEST_CASE("generalized triangle identities") {
  for (const auto& m : {h3_meet(), h3_meet_one(), z3_mult(), cyclic_shift(h3_meet()), identity_madj(boolean2())}) {
    auto r = check_triangles(m);
    CHECK(r.ok());
    CHECK(r.checked() > 0);
    CHECK(check_triangles(dualize(m)).ok());
  }
}

TEST_CASE("right chirality goes through the duality") {
  auto m = share(z3_mult());
  for (const auto& t : all_cells(m, z3_endos())) {
    auto d = dual_cell(t);
    CHECK(d.source->chirality == Chirality::Right);
    CHECK(dual_cell(d) == t);
    CHECK(validate_two_cell(d).ok());
    CHECK(mate_n(d, 2) == dual_cell(mate_n(t, 2)));
  }
  auto d = dual_cell(identity_cell(share(h3_meet())));
  CHECK(enumerate_cells(d.source, d.target, d.sides).size() == 1);
}

TEST_CASE("cell composition: units") {
  auto g = share(h3_meet());
  auto endos = h3_endos();
  for (const auto& beta : all_cells(g, endos)) {
    for (std::size_t i = 1; i <= 2; ++i) {
      auto c = compose_cells_at(beta, i, identity_on_side(beta.sides[i]));
      CHECK(c.components == beta.components);
      CHECK(c.sides == beta.sides);
      CHECK(*c.source == *beta.source);
    }
    auto left = compose_cells(identity_on_side(opposite(beta.sides[0])), std::span<const TwoCell>(&beta, 1));
    CHECK(left.components == beta.components);
    CHECK(left.sides == beta.sides);
  }
  auto id = identity_cell(g);
  std::vector<TwoCell> ids{identity_cell(share(h3_meet_one())), identity_cell(g)};
  auto c = compose_cells(id, ids);
  CHECK(validate_two_cell(c).ok());
  CHECK(c == identity_cell(c.source));
}

TEST_CASE("mates respect composition: sigma laws on cells") {
  struct Universe {
    MadjPtr g, f;
    std::vector<Functor> endos;
  };
  std::vector<Universe> us{{share(h3_meet()), share(h3_meet()), h3_endos()},
                           {share(h3_meet()), share(h3_meet_one()), h3_endos()},
                           {share(z3_mult()), share(z3_mult()), z3_endos()}};
  Gen gen(2024);
  std::size_t pairs = 0;
  for (const auto& u : us) {
    auto betas = all_cells(u.g, u.endos);
    auto alphas = all_cells(u.f, u.endos);
    for (int trial = 0; trial < 60; ++trial) {
      const TwoCell& beta = gen.pick(betas);
      for (std::size_t i = 1; i <= beta.arity(); ++i) {
        std::vector<const TwoCell*> fits;
        for (const auto& a : alphas)
          if (beta.sides[i] == opposite(a.sides[0])) fits.push_back(&a);
        if (fits.empty()) continue;
        const TwoCell& alpha = *gen.pick(fits);
        auto c = compose_cells_at(beta, i, alpha);
        REQUIRE(validate_two_cell(c).ok());
        auto lhs = sigma_cell(c);
        auto rhs = i == 1 ? compose_cells_at(sigma_cell(alpha), alpha.arity(), sigma_cell(beta))
                          : compose_cells_at(sigma_cell(beta), i - 1, alpha);
        CHECK(lhs.components == rhs.components);
        CHECK(lhs.sides == rhs.sides);
        CHECK(*lhs.source == *rhs.source);
        ++pairs;
      }
    }
  }
  CHECK(pairs > 100);
}

TEST_CASE("mates respect horizontal composition") {
  auto m = share(z3_mult());
  auto cells = all_cells(m, z3_endos());
  Gen gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoCell& a = gen.pick(cells);
    const TwoCell& b = gen.pick(cells);
    auto h = horizontal_cells(b, a);
    REQUIRE(validate_two_cell(h).ok());
    CHECK(sigma_cell(h) == horizontal_cells(sigma_cell(b), sigma_cell(a)));
    for (std::size_t j = 1; j <= 2; ++j) {
      auto mj = mate_n(h, j);
      for (std::size_t x = 0; x < mj.components.size(); ++x) {
        // (b * a)_j = T_j(a_j) ∘ b_j at S of the input tuple, as at anchor 0.
        auto aj = mate_n(a, j), bj = mate_n(b, j);
        CHECK(mj.components[x] == m->cats[j]->compose(b.sides[j].mor[aj.components[x]], bj.components[0]));
      }
    }
  }
  auto hm = share(h3_meet());
  auto hc = all_cells(hm, h3_endos());
  for (int trial = 0; trial < 100; ++trial) {
    const TwoCell& a = gen.pick(hc);
    const TwoCell& b = gen.pick(hc);
    auto h = horizontal_cells(b, a);
    CHECK(validate_two_cell(h).ok());
    CHECK(sigma_cell(h) == horizontal_cells(sigma_cell(b), sigma_cell(a)));
  }
}

TEST_CASE("nullary cells: sigma is the identity") {
  auto x = chain(3);
  std::vector<CategoryPtr> cats{x};
  auto F0 = constant_functor(terminal_category(), opposite(x), 2);
  auto m = share(from_primary(cats, F0, searched_adjoints(F0, cats)));
  auto id = identity_cell(m);
  CHECK(validate_two_cell(id).ok());
  CHECK(sigma_cell(id) == id);
  CHECK(mate_orbit(id).size() == 1);
  CHECK(check_mate_coherence(std::span<const TwoCell>(&id, 1)).ok());
}
