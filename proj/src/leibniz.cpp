#include "catmates/leibniz.hpp"

#include "catmates/error.hpp"
#include "detail.hpp"

namespace catmates {

using detail::Tuple;

namespace {

constexpr bool bit(std::size_t k, std::size_t n, std::size_t i) { return (k >> (n - 1 - i)) & 1u; }

bool isomorphic(const FinCategory& c, ObjId x, ObjId y) {
  for (MorId m : c.hom(x, y))
    for (MorId m2 : c.hom(y, x))
      if (c.is_identity(c.compose(m2, m)) && c.is_identity(c.compose(m, m2))) return true;
  return false;
}

// Evaluation of F on cube vertices and edges for a fixed tuple of morphisms.
struct Cube {
  const Functor& F;
  std::span<const CategoryPtr> factors;
  std::span<const MorId> fs;
  TupleSpace os, ms;

  Cube(const Functor& F_, std::span<const CategoryPtr> factors_, std::span<const MorId> fs_)
      : F(F_), factors(factors_), fs(fs_), os(object_space(factors_)), ms(morphism_space(factors_)) {}

  std::size_t n() const { return fs.size(); }
  ObjId end(std::size_t i, bool one) const {
    return one ? factors[i]->tgt(fs[i]) : factors[i]->src(fs[i]);
  }
  ObjId vertex(std::size_t k) const {
    Tuple t(n());
    for (std::size_t i = 0; i < n(); ++i) t[i] = end(i, bit(k, n(), i));
    return F.obj[os.index(t)];
  }
  // F of the cube edge k <= k2, with side[i] used where slot i moves from 0 to 1.
  MorId edge(std::size_t k, std::size_t k2, std::span<const MorId> side) const {
    Tuple t(n());
    for (std::size_t i = 0; i < n(); ++i) {
      bool a = bit(k, n(), i), b = bit(k2, n(), i);
      t[i] = a == b ? factors[i]->identity(end(i, a)) : side[i];
    }
    return F.mor[ms.index(t)];
  }
  Diagram diagram(const CategoryPtr& shape) const {
    Functor label{shape, F.target, {}, {}};
    for (ObjId k = 0; k < shape->object_count(); ++k) label.obj.push_back(vertex(k));
    for (MorId e = 0; e < shape->morphism_count(); ++e) label.mor.push_back(edge(shape->src(e), shape->tgt(e), fs));
    return {shape, std::move(label)};
  }
};

void check_request(const Functor& F, std::span<const CategoryPtr> factors, std::span<const MorId> fs) {
  if (fs.size() != factors.size())
    fail(ErrorCode::BoundaryMismatch, "hat: expected one morphism per factor");
  if (!same_category(F.source, product(factors)))
    fail(ErrorCode::BoundaryMismatch, "hat: F is not defined on the product of the factors");
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i] >= factors[i]->morphism_count())
      fail(ErrorCode::IndexOutOfRange, "hat: morphism " + std::to_string(fs[i]) + " in factor " + std::to_string(i + 1));
}

std::vector<CategoryPtr> opposites(std::span<const CategoryPtr> cs) {
  std::vector<CategoryPtr> out;
  for (const auto& c : cs) out.push_back(opposite(c));
  return out;
}

// F : prod A_i -> A_0• read as prod A_i• -> A_0, the form in which it is a
// left adjoint in each variable. Ids are unchanged.
Functor left_form(const Functor& F, std::span<const CategoryPtr> factors) {
  return {product(opposites(factors)), opposite(F.target), F.obj, F.mor};
}

}  // namespace

CategoryPtr punctured_cube(std::size_t n) {
  const std::size_t top = (std::size_t{1} << n) - 1;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < top; ++k) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += bit(k, n, i) ? '1' : '0';
    names.push_back(s.empty() ? "()" : s);
  }
  return poset_category("cube" + std::to_string(n), std::move(names),
                        [](std::size_t a, std::size_t b) { return (a & b) == a; });
}

HatResult hat_morphism(const HatRequest& r) {
  check_request(r.F, r.factors, r.fs);
  const std::size_t n = r.fs.size(), top = (std::size_t{1} << n) - 1;
  Cube cube(r.F, r.factors, r.fs);
  HatResult out;
  out.diagram = cube.diagram(punctured_cube(n));
  auto c = colimit(out.diagram);
  if (!c) fail(ErrorCode::NoColimit, "hat: the punctured " + std::to_string(n) + "-cube has no colimit in " + r.F.target->name());
  out.colimit = *c;
  Cocone to_top{cube.vertex(top), {}};
  for (std::size_t k = 0; k < top; ++k) to_top.legs.push_back(cube.edge(k, top, r.fs));
  out.morphism = factor_through(out.diagram, out.colimit, to_top);
  return out;
}

Functor hat_functor(const Functor& F, std::span<const CategoryPtr> factors) {
  const std::size_t n = factors.size(), top = (std::size_t{1} << n) - 1;
  std::vector<CategoryPtr> arrows;
  for (const auto& a : factors) arrows.push_back(arrow_category(a));
  const CategoryPtr A0 = F.target, target = arrow_category(A0);
  Functor out{product(arrows), target, {}, {}};
  const TupleSpace os = object_space(arrows), ms = morphism_space(arrows);
  const TupleSpace fms = morphism_space(factors);

  std::vector<HatResult> hats;
  Tuple t(n);
  for (std::size_t x = 0; x < os.size(); ++x) {
    os.decode_into(x, t);
    hats.push_back(hat_morphism({F, {factors.begin(), factors.end()}, {t.begin(), t.end()}}));
    out.obj.push_back(hats.back().morphism);
  }
  std::vector<MorId> u(n), v(n);
  Tuple from(n), to(n);
  for (std::size_t x = 0; x < ms.size(); ++x) {
    ms.decode_into(x, t);
    for (std::size_t i = 0; i < n; ++i) {
      std::tie(u[i], v[i]) = arrows[i]->squares()[t[i]];
      from[i] = arrows[i]->src(t[i]);
      to[i] = arrows[i]->tgt(t[i]);
    }
    const HatResult& hf = hats[os.index(from)];
    const HatResult& hg = hats[os.index(to)];
    // Cocone over f's cube with apex colim_g: leg k is colim_g(k) ∘ F(x_k).
    Cocone via{hg.colimit.apex, {}};
    for (std::size_t k = 0; k < top; ++k) {
      Tuple w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = bit(k, n, i) ? v[i] : u[i];
      via.legs.push_back(A0->compose(hg.colimit.legs[k], F.mor[fms.index(w)]));
    }
    const MorId dom = factor_through(hf.diagram, hf.colimit, via);
    const MorId cod = F.mor[fms.index(v)];
    MorId found = ~MorId{0};
    for (MorId s : target->hom(hf.morphism, hg.morphism))
      if (target->squares()[s] == std::make_pair(dom, cod)) found = s;
    if (found == ~MorId{0}) fail(ErrorCode::NaturalityFailure, "hat: induced square is missing for " + target->name());
    out.mor.push_back(found);
  }
  return out;
}

HatAdjunctionCheck hat_adjunction_search(std::span<const CategoryPtr> cats, const Functor& F0) {
  HatAdjunctionCheck out;
  const std::size_t n = cats.size() - 1;
  std::vector<CategoryPtr> factors(cats.begin() + 1, cats.end());
  Functor H;
  try {
    H = hat_functor(left_form(F0, factors), opposites(factors));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoColimit) throw;
    out.skipped = true;
    out.reason = e.what();
    return out;
  }
  // H : prod arrow(A_i•) -> arrow(A_0), retyped as a primary functor.
  std::vector<CategoryPtr> hcats{H.target};
  for (const auto& a : factors) hcats.push_back(opposite(arrow_category(opposite(a))));
  std::vector<CategoryPtr> hfactors(hcats.begin() + 1, hcats.end());
  const Functor Hop{product(hfactors), opposite(H.target), H.obj, H.mor};
  auto adjoints = searched_adjoints(Hop, hcats);
  const TupleSpace os = object_space(hfactors);
  Tuple t(n);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t x = 0; x < os.size(); ++x) {
      os.decode_into(x, t);
      if (t[k - 1] != 0) continue;  // entry k is free
      bool ok = adjoints(k, t).has_value();
      out.report.expect(ok, "NotAdjoint", [&] {
        std::string w = "slot " + std::to_string(k) + " at (";
        for (std::size_t i = 0; i < n; ++i)
          w += (i ? "," : "") + (i + 1 == k ? std::string("-") : hfactors[i]->object_name(t[i]));
        return w + ")";
      });
    }
  if (!out.report.ok()) return out;
  try {
    out.hatted = from_primary(hcats, Hop, adjoints);
    out.report.pass();
  } catch (const Error& e) {
    out.report.fail(std::string(to_string(e.code())), e.what());
  }
  return out;
}

HatAdjunctionCheck hat_preserves_adjunction_check(const MultiAdjunction& mm) {
  const MultiAdjunction m = mm.chirality == Chirality::Left ? mm : dualize(mm);
  const std::size_t n = m.arity();
  HatAdjunctionCheck out;
  try {
    out = hat_adjunction_search(m.cats, m.funs[0]);
    if (out.skipped || !out.hatted) return out;
    // Each found adjoint agrees with the hat of the left form of F_k up to isomorphism.
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<CategoryPtr> kfactors;
      for (auto s : input_slots(n, k)) kfactors.push_back(m.cats[s]);
      const Functor Fk = left_form(m.funs[k], kfactors);
      const auto opk = opposites(kfactors);
      const Functor& found = out.hatted->funs[k];
      const FinCategory& target = *found.target;
      // Objects of arrow categories are morphisms, with the same ids.
      const TupleSpace ms = morphism_space(opk);
      Tuple t(n);
      for (std::size_t x = 0; x < ms.size(); ++x) {
        ms.decode_into(x, t);
        MorId h = hat_morphism({Fk, opk, {t.begin(), t.end()}}).morphism;
        ObjId got = found.obj[x];
        out.report.expect(got == h || isomorphic(target, got, h), "HatAdjoint", [&] {
          return "F" + std::to_string(k) + " at tuple " + std::to_string(x) + ": adjoint " + target.object_name(got) +
                 ", hat " + target.object_name(h);
        });
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoColimit) throw;
    out.skipped = true;
    out.reason = e.what();
    out.hatted.reset();
  }
  return out;
}

}  // namespace catmates
