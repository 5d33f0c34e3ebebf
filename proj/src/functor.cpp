#include "catmates/functor.hpp"

#include "catmates/error.hpp"

namespace catmates {

bool Functor::operator==(const Functor& o) const {
  return obj == o.obj && mor == o.mor && same_category(source, o.source) &&
         same_category(target, o.target);
}

bool NatTransformation::operator==(const NatTransformation& o) const {
  return components == o.components && source == o.source && target == o.target;
}

Report validate_functor(const Functor& f) {
  Report r;
  const FinCategory& A = *f.source;
  const FinCategory& B = *f.target;
  if (f.obj.size() != A.object_count() || f.mor.size() != A.morphism_count()) {
    r.fail("FunctorShape", "table sizes do not match the source category");
    return r;
  }
  for (ObjId a = 0; a < A.object_count(); ++a)
    r.expect(f.obj[a] < B.object_count() && B.identity(f.obj[a]) == f.mor[A.identity(a)],
             "FunctorIdentity", A.object_name(a));
  for (MorId m = 0; m < A.morphism_count(); ++m) {
    bool ok = f.mor[m] < B.morphism_count() && B.src(f.mor[m]) == f.obj[A.src(m)] &&
              B.tgt(f.mor[m]) == f.obj[A.tgt(m)];
    r.expect(ok, "FunctorEndpoints", A.morphism_name(m));
  }
  if (!r.ok()) return r;
  for (MorId m = 0; m < A.morphism_count(); ++m)
    for (MorId g : A.outgoing(A.tgt(m))) {
      bool ok = f.mor[A.compose(g, m)] == B.compose(f.mor[g], f.mor[m]);
      if (!ok)
        r.fail("FunctorComposition", A.morphism_name(g) + " o " + A.morphism_name(m));
      else
        r.pass();
    }
  return r;
}

Report validate_natural(const NatTransformation& t) {
  Report r;
  const Functor& F = t.source;
  const Functor& G = t.target;
  if (!same_category(F.source, G.source) || !same_category(F.target, G.target)) {
    r.fail(std::string(to_string(ErrorCode::BoundaryMismatch)), "functors are not parallel");
    return r;
  }
  const FinCategory& A = *F.source;
  const FinCategory& B = *F.target;
  if (t.components.size() != A.object_count()) {
    r.fail("ComponentShape", "component table size");
    return r;
  }
  for (ObjId a = 0; a < A.object_count(); ++a) {
    MorId c = t.components[a];
    bool ok = c < B.morphism_count() && B.src(c) == F.obj[a] && B.tgt(c) == G.obj[a];
    r.expect(ok, "ComponentEndpoints", A.object_name(a));
  }
  if (!r.ok()) return r;
  for (MorId m = 0; m < A.morphism_count(); ++m) {
    bool ok = B.compose(G.mor[m], t.components[A.src(m)]) ==
              B.compose(t.components[A.tgt(m)], F.mor[m]);
    r.expect(ok, "Naturality", A.morphism_name(m));
  }
  return r;
}

Functor identity_functor(const CategoryPtr& c) {
  Functor f{c, c, {}, {}};
  f.obj.resize(c->object_count());
  f.mor.resize(c->morphism_count());
  for (ObjId a = 0; a < f.obj.size(); ++a) f.obj[a] = a;
  for (MorId m = 0; m < f.mor.size(); ++m) f.mor[m] = m;
  return f;
}

Functor constant_functor(const CategoryPtr& source, const CategoryPtr& target, ObjId x) {
  return Functor{source, target, std::vector<ObjId>(source->object_count(), x),
                 std::vector<MorId>(source->morphism_count(), target->identity(x))};
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.target, g.source))
    fail(ErrorCode::BoundaryMismatch,
         "cannot compose " + f.source->name() + "->" + f.target->name() + " with " +
             g.source->name() + "->" + g.target->name());
  Functor h{f.source, g.target, {}, {}};
  h.obj.resize(f.obj.size());
  h.mor.resize(f.mor.size());
  for (std::size_t a = 0; a < f.obj.size(); ++a) h.obj[a] = g.obj[f.obj[a]];
  for (std::size_t m = 0; m < f.mor.size(); ++m) h.mor[m] = g.mor[f.mor[m]];
  return h;
}

Functor opposite(const Functor& f) {
  return Functor{opposite(f.source), opposite(f.target), f.obj, f.mor};
}

Functor product_functor(std::span<const Functor> fs) {
  if (fs.size() == 1) return fs.front();
  std::vector<CategoryPtr> srcs, tgts;
  for (const auto& f : fs) {
    srcs.push_back(f.source);
    tgts.push_back(f.target);
  }
  Functor p{product(srcs), product(tgts), {}, {}};
  TupleSpace so = object_space(srcs), to = object_space(tgts);
  TupleSpace sm = morphism_space(srcs), tm = morphism_space(tgts);
  std::vector<std::uint32_t> tup(fs.size());
  p.obj.resize(so.size());
  for (std::size_t i = 0; i < so.size(); ++i) {
    so.decode_into(i, tup);
    for (std::size_t k = 0; k < fs.size(); ++k) tup[k] = fs[k].obj[tup[k]];
    p.obj[i] = static_cast<ObjId>(to.index(tup));
  }
  p.mor.resize(sm.size());
  for (std::size_t i = 0; i < sm.size(); ++i) {
    sm.decode_into(i, tup);
    for (std::size_t k = 0; k < fs.size(); ++k) tup[k] = fs[k].mor[tup[k]];
    p.mor[i] = static_cast<MorId>(tm.index(tup));
  }
  return p;
}

std::vector<Functor> projections(std::span<const CategoryPtr> factors) {
  CategoryPtr P = product(factors);
  std::vector<Functor> out;
  TupleSpace os = object_space(factors), ms = morphism_space(factors);
  std::vector<std::uint32_t> tup(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    Functor p{P, factors[k], std::vector<ObjId>(os.size()), std::vector<MorId>(ms.size())};
    for (std::size_t i = 0; i < os.size(); ++i) {
      os.decode_into(i, tup);
      p.obj[i] = tup[k];
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
      ms.decode_into(i, tup);
      p.mor[i] = tup[k];
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

Functor arrow_projection(const CategoryPtr& c, bool domain) {
  CategoryPtr ar = arrow_category(c);
  Functor p{ar, c, std::vector<ObjId>(ar->object_count()), std::vector<MorId>(ar->morphism_count())};
  for (ObjId f = 0; f < ar->object_count(); ++f) p.obj[f] = domain ? c->src(f) : c->tgt(f);
  for (MorId s = 0; s < ar->morphism_count(); ++s)
    p.mor[s] = domain ? ar->squares()[s].first : ar->squares()[s].second;
  return p;
}

}  // namespace

Functor arrow_domain(const CategoryPtr& c) { return arrow_projection(c, true); }
Functor arrow_codomain(const CategoryPtr& c) { return arrow_projection(c, false); }

Functor partial_functor(const Functor& F, std::span<const CategoryPtr> factors,
                        std::span<const ObjId> fixed, std::size_t slot) {
  const CategoryPtr& X = factors[slot];
  Functor out{X, F.target, std::vector<ObjId>(X->object_count()), std::vector<MorId>(X->morphism_count())};
  TupleSpace os = object_space(factors), ms = morphism_space(factors);
  std::vector<std::uint32_t> tup(fixed.begin(), fixed.end());
  for (ObjId x = 0; x < X->object_count(); ++x) {
    tup[slot] = x;
    out.obj[x] = F.obj[os.index(tup)];
  }
  for (std::size_t s = 0; s < factors.size(); ++s)
    if (s != slot) tup[s] = factors[s]->identity(fixed[s]);
  for (MorId u = 0; u < X->morphism_count(); ++u) {
    tup[slot] = u;
    out.mor[u] = F.mor[ms.index(tup)];
  }
  return out;
}

Functor thin_functor(const CategoryPtr& source, const CategoryPtr& target, std::vector<ObjId> obj) {
  Functor f{source, target, std::move(obj), std::vector<MorId>(source->morphism_count())};
  for (MorId m = 0; m < source->morphism_count(); ++m) {
    auto h = target->hom(f.obj[source->src(m)], f.obj[source->tgt(m)]);
    if (h.size() != 1)
      fail(ErrorCode::NaturalityFailure,
           "object map is not functorial on " + source->morphism_name(m));
    f.mor[m] = h.front();
  }
  return f;
}

Functor thin_functor(const CategoryPtr& source, const CategoryPtr& target,
                     const std::function<ObjId(ObjId)>& fn) {
  std::vector<ObjId> obj(source->object_count());
  for (ObjId a = 0; a < obj.size(); ++a) obj[a] = fn(a);
  return thin_functor(source, target, std::move(obj));
}

std::vector<Functor> enumerate_functors(const CategoryPtr& source, const CategoryPtr& target,
                                        std::size_t limit) {
  const FinCategory& A = *source;
  const FinCategory& B = *target;
  std::vector<Functor> out;
  Functor cur{source, target, std::vector<ObjId>(A.object_count()),
              std::vector<MorId>(A.morphism_count(), ~MorId{0})};
  // Morphisms are assigned in stored order once both endpoints have images.
  // Objects are assigned in stored order; after each object, every morphism
  // whose endpoints are now both assigned becomes eligible.
  std::vector<std::vector<MorId>> ready(A.object_count());
  for (MorId m = 0; m < A.morphism_count(); ++m)
    ready[std::max(A.src(m), A.tgt(m))].push_back(m);

  auto consistent = [&](MorId m) {
    MorId fm = cur.mor[m];
    if (A.is_identity(m) && fm != B.identity(cur.obj[A.src(m)])) return false;
    // Check composites among assigned morphisms that involve m.
    for (MorId g : A.outgoing(A.tgt(m))) {
      if (cur.mor[g] == ~MorId{0}) continue;
      MorId gm = A.compose(g, m);
      if (cur.mor[gm] != ~MorId{0} && cur.mor[gm] != B.compose(cur.mor[g], fm)) return false;
    }
    for (MorId f = 0; f < A.morphism_count(); ++f) {
      if (A.tgt(f) != A.src(m) || cur.mor[f] == ~MorId{0}) continue;
      MorId mf = A.compose(m, f);
      if (cur.mor[mf] != ~MorId{0} && cur.mor[mf] != B.compose(fm, cur.mor[f])) return false;
    }
    // m as the composite of assigned pairs.
    for (MorId f = 0; f < A.morphism_count(); ++f) {
      if (cur.mor[f] == ~MorId{0} || A.src(f) != A.src(m)) continue;
      for (MorId g : A.outgoing(A.tgt(f)))
        if (cur.mor[g] != ~MorId{0} && A.compose(g, f) == m && B.compose(cur.mor[g], cur.mor[f]) != fm)
          return false;
    }
    return true;
  };

  std::function<void(ObjId, std::size_t)> assign_mor;
  std::function<void(ObjId)> assign_obj = [&](ObjId a) {
    if (out.size() >= limit) return;
    if (a == A.object_count()) {
      out.push_back(cur);
      return;
    }
    for (ObjId x = 0; x < B.object_count(); ++x) {
      cur.obj[a] = x;
      assign_mor(a, 0);
    }
  };
  assign_mor = [&](ObjId a, std::size_t k) {
    if (out.size() >= limit) return;
    if (k == ready[a].size()) {
      assign_obj(a + 1);
      return;
    }
    MorId m = ready[a][k];
    for (MorId y : B.hom(cur.obj[A.src(m)], cur.obj[A.tgt(m)])) {
      cur.mor[m] = y;
      if (consistent(m)) assign_mor(a, k + 1);
    }
    cur.mor[m] = ~MorId{0};
  };
  assign_obj(0);
  return out;
}

NatTransformation identity_transformation(const Functor& f) {
  NatTransformation t{f, f, std::vector<MorId>(f.source->object_count())};
  for (ObjId a = 0; a < t.components.size(); ++a) t.components[a] = f.target->identity(f.obj[a]);
  return t;
}

NatTransformation vertical(const NatTransformation& beta, const NatTransformation& alpha) {
  if (!(alpha.target == beta.source))
    fail(ErrorCode::BoundaryMismatch, "vertical composite of non-adjacent transformations");
  NatTransformation t{alpha.source, beta.target, std::vector<MorId>(alpha.components.size())};
  const FinCategory& B = *alpha.source.target;
  for (std::size_t a = 0; a < t.components.size(); ++a)
    t.components[a] = B.compose(beta.components[a], alpha.components[a]);
  return t;
}

NatTransformation whisker_left(const NatTransformation& alpha, const Functor& h) {
  NatTransformation t{compose(alpha.source, h), compose(alpha.target, h),
                      std::vector<MorId>(h.source->object_count())};
  for (ObjId x = 0; x < t.components.size(); ++x) t.components[x] = alpha.components[h.obj[x]];
  return t;
}

NatTransformation whisker_right(const Functor& k, const NatTransformation& alpha) {
  NatTransformation t{compose(k, alpha.source), compose(k, alpha.target),
                      std::vector<MorId>(alpha.components.size())};
  for (std::size_t x = 0; x < t.components.size(); ++x) t.components[x] = k.mor[alpha.components[x]];
  return t;
}

NatTransformation horizontal(const NatTransformation& beta, const NatTransformation& alpha) {
  if (!same_category(alpha.source.target, beta.source.source))
    fail(ErrorCode::BoundaryMismatch, "horizontal composite of non-composable transformations");
  return vertical(whisker_left(beta, alpha.target), whisker_right(beta.source, alpha));
}

}  // namespace catmates
