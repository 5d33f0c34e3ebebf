#include <doctest.h>

#include "catmates/multiadjoint.hpp"
#include "support.hpp"

using namespace catmates;
using testing_support::Gen;
using testing_support::h3_meet;
using testing_support::h3_meet_one;
using testing_support::z3_mult;

namespace {

ObjId imp3(ObjId x, ObjId y) { return x <= y ? 2 : y; }

}  // namespace

TEST_CASE("input slots rotate") {
  CHECK(input_slots(2, 0) == std::vector<std::size_t>{1, 2});
  CHECK(input_slots(2, 1) == std::vector<std::size_t>{2, 0});
  CHECK(input_slots(2, 2) == std::vector<std::size_t>{0, 1});
  CHECK(input_slots(0, 0).empty());
}

TEST_CASE("H3 meet: adjoints are the two implications") {
  auto m = h3_meet();
  REQUIRE(verify_cycle(m).ok());
  // F_1(a2, a0) = a2 ⇒ a0 and F_2(a0, a1) = a1 ⇒ a0, tuples in cyclic input order.
  for (ObjId x = 0; x < 3; ++x)
    for (ObjId y = 0; y < 3; ++y) {
      CHECK(m.funs[1].obj[x * 3 + y] == imp3(x, y));
      CHECK(m.funs[2].obj[x * 3 + y] == imp3(y, x));
    }
  CHECK(m.funs[1].obj[1 * 3 + 0] == 0);
  // All 27 triples: a1 ∧ a2 <= a0 iff a1 <= a2 ⇒ a0 iff a2 <= a1 ⇒ a0, and the
  // stored hom sizes agree.
  MadjLayout L(m.cats);
  for (ObjId a0 = 0; a0 < 3; ++a0)
    for (ObjId a1 = 0; a1 < 3; ++a1)
      for (ObjId a2 = 0; a2 < 3; ++a2) {
        bool p = std::min(a1, a2) <= a0, q = a1 <= imp3(a2, a0), r = a2 <= imp3(a1, a0);
        CHECK(p == q);
        CHECK(q == r);
        std::vector<ObjId> t{a0, a1, a2};
        for (std::size_t i = 0; i < 3; ++i) {
          auto h = hom_at(m, L, i, t);
          CHECK(m.cats[i]->hom(h.src, h.tgt).size() == (p ? 1u : 0u));
        }
      }
}

TEST_CASE("tensor/hom/cotensor shape") {
  // A(a,[b,c]) ≅ B(b, a⋔c) ≅ C(a⊗b, c): slot 0 is C, the inputs are A and B.
  auto m = h3_meet();
  auto a = m.cats[1], b = m.cats[2], c = m.cats[0];
  CHECK(m.funs[0].source == product({a, b}));
  CHECK(same_category(m.funs[1].source, product({b, c})));
  CHECK(same_category(m.funs[2].source, product({c, a})));
  CHECK(same_category(m.funs[1].target, opposite(a)));
  CHECK(same_category(m.funs[2].target, opposite(b)));
}

TEST_CASE("n = 1 with identity primary functor is the identity adjunction") {
  for (auto x : {chain(2), heyting3(), z2_monoid(), boolean2()}) {
    auto id = identity_madj(x);
    REQUIRE(verify_cycle(id).ok());
    auto built = from_primary(id.cats, id.funs[0], searched_adjoints(id.funs[0], id.cats));
    CHECK(built == id);
    CHECK(as_multi(as_mutual(id)) == id);
    CHECK(verify_mutual_left(as_mutual(id)).ok());
  }
}

TEST_CASE("n = 0 instances pass vacuously and are fixed by the shift") {
  for (auto x : {chain(3), z2_monoid()}) {
    std::vector<CategoryPtr> cats{x};
    auto F0 = constant_functor(terminal_category(), opposite(x), 0);
    auto m = from_primary(cats, F0, searched_adjoints(F0, cats));
    CHECK(m.arity() == 0);
    CHECK(verify_cycle(m).ok());
    CHECK(cyclic_shift(m) == m);
    CHECK(dualize(dualize(m)) == m);
  }
}

TEST_CASE("perturbed isomorphism yields a naturality witness") {
  auto m = z3_mult();
  REQUIRE(verify_cycle(m).ok());
  // Inversion on a hom-set of Z3 is a bijection that does not commute with translation.
  auto bad = m;
  Permutation& p = bad.isos[2][0];
  std::swap(p[1], p[2]);
  auto r = verify_cycle(bad);
  CHECK(!r.ok());
  CHECK(r.has_law("Naturality"));
  REQUIRE(!r.violations().empty());
  CHECK(r.violations()[0].witness.find("i=2") != std::string::npos);
}

TEST_CASE("restriction of H3 meet") {
  auto m = h3_meet();
  auto top = restrict(m, 2, 2);
  REQUIRE(top.arity() == 1);
  CHECK(verify_cycle(top).ok());
  CHECK(top.funs[0].obj == std::vector<ObjId>{0, 1, 2});
  CHECK(top.funs[1].obj == std::vector<ObjId>{0, 1, 2});
  auto bot = restrict(m, 2, 0);
  CHECK(verify_cycle(bot).ok());
  CHECK(bot.funs[0].obj == std::vector<ObjId>{0, 0, 0});
  CHECK(bot.funs[1].obj == std::vector<ObjId>{2, 2, 2});
  auto zero = restrict(restrict(m, 2, 1), 1, 2);
  CHECK(zero.arity() == 0);
  CHECK(verify_cycle(zero).ok());
  CHECK(zero.funs[0].obj == std::vector<ObjId>{1});
  CHECK(testing_support::code_of([&] { restrict(zero, 0, 0); }) == ErrorCode::IndexOutOfRange);
  CHECK(testing_support::code_of([&] { restrict(m, 3, 0); }) == ErrorCode::IndexOutOfRange);
  // Fixing slot 0 starts the remaining cycle at old slot 1.
  auto r0 = restrict(m, 0, 1);
  CHECK(verify_cycle(r0).ok());
  CHECK(r0.funs[0] == restrict(m, 0, 1).funs[0]);
}

TEST_CASE("cyclic shift is a rotation of order n+1") {
  auto m = h3_meet();
  auto s = cyclic_shift(m);
  CHECK(verify_cycle(s).ok());
  CHECK(s.funs[0] == m.funs[1]);
  CHECK(cyclic_shift(cyclic_shift(s)) == m);
  CHECK(!(s == m));
  auto one = h3_meet_one();
  CHECK(cyclic_shift(cyclic_shift(one)) == one);
  auto z = z3_mult();
  CHECK(cyclic_shift(cyclic_shift(cyclic_shift(z))) == z);
}

TEST_CASE("dualize is an involution compatible with restriction") {
  auto m = h3_meet();
  auto d = dualize(m);
  CHECK(d.chirality == Chirality::Right);
  CHECK(verify_cycle(d).ok());
  CHECK(dualize(d) == m);
  for (std::size_t k = 0; k <= 2; ++k)
    for (ObjId a = 0; a < 3; ++a) CHECK(restrict(dualize(m), k, a) == dualize(restrict(m, k, a)));
  auto id = identity_madj(chain(2));
  CHECK(dualize(id).funs[0].obj == id.funs[0].obj);
  CHECK(dualize(dualize(id)) == id);
}

TEST_CASE("from_primary is idempotent on its own output") {
  for (const auto& m : {h3_meet(), h3_meet_one(), z3_mult(), cyclic_shift(h3_meet())}) {
    auto again = from_primary(m.cats, m.funs[0], adjoints_of(m));
    CHECK(again == m);
  }
}

TEST_CASE("from_primary reports missing adjoints") {
  auto h = heyting3(), ho = opposite(h);
  std::vector<CategoryPtr> cats{h, ho, ho};
  std::vector<CategoryPtr> src{ho, ho};
  // Join does not preserve meets in H3•, so it has no adjoint in either slot.
  auto J = thin_functor_n(src, ho, [](std::span<const ObjId> t) { return std::max(t[0], t[1]); });
  try {
    from_primary(cats, J, searched_adjoints(J, cats));
    FAIL("expected NotAdjoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAdjoint);
    CHECK(std::string(e.what()).find("slot 1") != std::string::npos);
  }
  // A provider whose left functor disagrees with F0.
  auto m = h3_meet();
  auto wrong = [&](std::size_t k, std::span<const ObjId> in) -> std::optional<MutualLeftAdjunction> {
    std::vector<ObjId> shifted(in.begin(), in.end());
    shifted[2 - k] = (shifted[2 - k] + 1) % 3;
    return adjoints_of(m)(k, shifted);
  };
  CHECK(testing_support::code_of([&] { from_primary(cats, m.funs[0], wrong); }) ==
        ErrorCode::NaturalityFailure);
}

TEST_CASE("composition: units, nullary slots, and the adjoint oracle") {
  auto m = h3_meet();
  auto h = heyting3();
  CHECK(compose_multi(identity_madj(opposite(h)), std::vector<MultiAdjunction>{m}) == m);
  auto ho = opposite(h);
  CHECK(compose_multi(m, std::vector<MultiAdjunction>{identity_madj(ho), identity_madj(ho)}) == m);
  CHECK(testing_support::code_of([&] { compose_multi(m, std::vector<MultiAdjunction>{m}); }) ==
        ErrorCode::BoundaryMismatch);

  // Slot 2 filled by a 0-variable adjunction picking 2.
  std::vector<CategoryPtr> pc{h};
  auto pick2f = constant_functor(terminal_category(), ho, 2);
  auto pick2 = from_primary(pc, pick2f, searched_adjoints(pick2f, pc));
  CHECK(compose_at(m, 2, pick2) == restrict(m, 2, 2));
  CHECK(compose_multi(m, std::vector<MultiAdjunction>{identity_madj(ho), pick2}) == restrict(m, 2, 2));

  // 2-ary ∘ (1-ary, 1-ary): primary (a ∧ 1) ∧ (b ∧ 1).
  auto one = h3_meet_one();
  auto c = compose_multi(m, std::vector<MultiAdjunction>{one, one});
  REQUIRE(verify_cycle(c).ok());
  for (ObjId a = 0; a < 3; ++a)
    for (ObjId b = 0; b < 3; ++b)
      CHECK(c.funs[0].obj[a * 3 + b] == std::min<ObjId>(std::min<ObjId>(a, 1), std::min<ObjId>(b, 1)));
  auto searched = from_primary(c.cats, c.funs[0], searched_adjoints(c.funs[0], c.cats));
  CHECK(searched == c);
  auto c1 = compose_at(m, 1, one);
  CHECK(verify_cycle(c1).ok());
  for (ObjId a = 0; a < 3; ++a)
    for (ObjId b = 0; b < 3; ++b) CHECK(c1.funs[0].obj[a * 3 + b] == std::min<ObjId>(std::min<ObjId>(a, 1), b));
  CHECK(from_primary(c1.cats, c1.funs[0], searched_adjoints(c1.funs[0], c1.cats)) == c1);
}

TEST_CASE("composition is associative across bracketings") {
  using V = std::vector<MultiAdjunction>;
  auto m = h3_meet(), one = h3_meet_one();
  // (g ∘ (f1, f2)) ∘ (h1, h2, h3) against g ∘ (f1 ∘ (h1, h2), f2 ∘ (h3)).
  auto left = compose_multi(compose_multi(m, V{m, one}), V{one, m, one});
  auto right = compose_multi(m, V{compose_multi(m, V{one, m}), compose_multi(one, V{one})});
  CHECK(left.arity() == 4);
  CHECK(verify_cycle(left).ok());
  CHECK(left == right);

  auto z = z3_mult();
  auto zid = identity_madj(z.cats[1]);
  auto zl = compose_multi(compose_multi(z, V{z, zid}), V{zid, z, zid});
  auto zr = compose_multi(z, V{compose_multi(z, V{zid, z}), compose_multi(zid, V{zid})});
  CHECK(verify_cycle(zl).ok());
  CHECK(zl == zr);
  CHECK(compose_multi(z, V{zid, zid}) == z);
}

TEST_CASE("property: every binary map on H3 that admits adjoints yields a valid cycle") {
  auto h = heyting3(), ho = opposite(h);
  std::vector<CategoryPtr> cats{h, ho, ho};
  auto P = product({ho, ho});
  std::size_t built = 0, rejected = 0;
  for (auto& F0 : enumerate_functors(P, ho)) {
    MultiAdjunction m;
    try {
      m = from_primary(cats, F0, searched_adjoints(F0, cats));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAdjoint);
      ++rejected;
      continue;
    }
    ++built;
    CHECK(verify_cycle(m).ok());
    CHECK(cyclic_shift(cyclic_shift(cyclic_shift(m))) == m);
    CHECK(verify_cycle(cyclic_shift(m)).ok());
    CHECK(dualize(dualize(m)) == m);
    CHECK(from_primary(m.cats, m.funs[0], adjoints_of(m)) == m);
    for (std::size_t k = 0; k <= 2; ++k)
      for (ObjId a = 0; a < 3; ++a) {
        auto r = restrict(m, k, a);
        CHECK(verify_cycle(r).ok());
        CHECK(restrict(dualize(m), k, a) == dualize(r));
      }
  }
  CHECK(built > 1);
  CHECK(rejected > 0);
}

TEST_CASE("property: sampled binary maps on B2") {
  Gen gen(7);
  auto b = boolean2(), bo = opposite(b);
  std::vector<CategoryPtr> cats{b, bo, bo};
  auto all = enumerate_functors(product({bo, bo}), bo);
  std::size_t built = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& F0 = gen.pick(all);
    auto s0 = searched_adjoints(F0, cats);
    MultiAdjunction m;
    try {
      m = from_primary(cats, F0, s0);
    } catch (const Error&) {
      continue;
    }
    ++built;
    CHECK(verify_cycle(m).ok());
    CHECK(from_primary(m.cats, m.funs[0], adjoints_of(m)) == m);
  }
  // meet itself is always available
  auto meet2 = thin_functor_n(std::vector<CategoryPtr>{bo, bo}, bo, [](std::span<const ObjId> t) { return t[0] & t[1]; });
  auto mm = from_primary(cats, meet2, searched_adjoints(meet2, cats));
  CHECK(verify_cycle(mm).ok());
  CHECK(mm.funs[1].obj[1 * 4 + 0] == 2);  // a ⇒ bot = b in B2
  (void)built;
}
