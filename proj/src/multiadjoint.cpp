#include "catmates/multiadjoint.hpp"

#include <algorithm>
#include <numeric>

#include "catmates/error.hpp"
#include "detail.hpp"

namespace catmates {

namespace {

using namespace detail;

void require_left(const MultiAdjunction& m, const char* what) {
  if (m.chirality != Chirality::Left) fail(ErrorCode::BoundaryMismatch, std::string(what) + ": expected a left adjunction");
}

}  // namespace

bool MultiAdjunction::operator==(const MultiAdjunction& o) const {
  if (chirality != o.chirality || cats.size() != o.cats.size()) return false;
  for (std::size_t i = 0; i < cats.size(); ++i)
    if (!same_category(cats[i], o.cats[i])) return false;
  return funs == o.funs && isos == o.isos;
}

std::vector<std::size_t> input_slots(std::size_t n, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t <= n; ++t) out.push_back((i + t) % (n + 1));
  return out;
}

MadjLayout::MadjLayout(std::span<const CategoryPtr> cats) : n_(cats.size() - 1), full_(object_space(cats)) {
  for (std::size_t i = 0; i <= n_; ++i) {
    inputs_.push_back(input_slots(n_, i));
    std::vector<std::size_t> os(n_ + 1, 0), ms(n_ + 1, 0);
    std::size_t so = 1, sm = 1;
    for (auto it = inputs_[i].rbegin(); it != inputs_[i].rend(); ++it) {
      os[*it] = so;
      ms[*it] = sm;
      so *= cats[*it]->object_count();
      sm *= cats[*it]->morphism_count();
    }
    obj_stride_.push_back(std::move(os));
    mor_stride_.push_back(std::move(ms));
  }
}

std::size_t MadjLayout::input_object(std::size_t i, std::span<const ObjId> full) const {
  std::size_t x = 0;
  for (auto s : inputs_[i]) x += full[s] * obj_stride_[i][s];
  return x;
}

std::size_t MadjLayout::input_morphism(std::size_t i, std::span<const MorId> full) const {
  std::size_t x = 0;
  for (auto s : inputs_[i]) x += full[s] * mor_stride_[i][s];
  return x;
}

HomSet hom_at(const MultiAdjunction& m, const MadjLayout& L, std::size_t i, std::span<const ObjId> full) {
  ObjId fi = m.funs[i].obj[L.input_object(i, full)];
  if (m.chirality == Chirality::Left) return {fi, full[i]};
  return {full[i], fi};
}

Permutation composite_iso(const MultiAdjunction& m, const MadjLayout& L, std::size_t i, std::size_t j,
                          std::span<const ObjId> full) {
  const std::size_t n1 = m.cats.size();
  std::size_t t = L.full().index(full);
  HomSet h = hom_at(m, L, i, full);
  Permutation p = identity_perm(m.cats[i]->hom(h.src, h.tgt).size());
  for (std::size_t s = (i + 1) % n1; s != (j + 1) % n1 && i != j; s = (s + 1) % n1) p = then(p, m.isos[s][t]);
  return p;
}

Report verify_cycle(const MultiAdjunction& m) {
  if (m.chirality == Chirality::Right) return verify_cycle(dualize(m));
  Report r;
  if (m.cats.empty() || m.funs.size() != m.cats.size() || m.isos.size() != m.cats.size()) {
    r.fail("Shape", "expected n+1 categories, functors and iso families");
    return r;
  }
  const std::size_t n = m.arity();
  MadjLayout L(m.cats);
  for (std::size_t i = 0; i <= n; ++i) {
    auto src = product(pick(m.cats, L.inputs(i)));
    const Functor& F = m.funs[i];
    if (!same_category(F.source, src) || !same_category(F.target, opposite(m.cats[i]))) {
      r.fail(std::string(to_string(ErrorCode::BoundaryMismatch)), "F_" + std::to_string(i));
      continue;
    }
    r.merge(validate_functor(F), "F_" + std::to_string(i));
  }
  if (!r.ok()) return r;

  const TupleSpace& full = L.full();
  Tuple t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t prev = (i + n) % (n + 1);
    if (m.isos[i].size() != full.size()) {
      r.fail("Shape", "isos[" + std::to_string(i) + "] has the wrong number of tuples");
      return r;
    }
    for (std::size_t x = 0; x < full.size(); ++x) {
      full.decode_into(x, t);
      HomSet a = hom_at(m, L, prev, t), b = hom_at(m, L, i, t);
      auto na = m.cats[prev]->hom(a.src, a.tgt).size(), nb = m.cats[i]->hom(b.src, b.tgt).size();
      r.expect(na == nb && is_permutation_of(m.isos[i][x], na), "Bijection",
               "i=" + std::to_string(i) + " at " + label(m.cats, t));
    }
  }
  if (!r.ok()) return r;

  // The action of u: t[k] -> y on H_j at t, landing in H_j at t[k := y].
  Tuple mt(n + 1);
  auto act = [&](std::size_t j, std::size_t k, MorId u, const Tuple& at, MorId h) -> MorId {
    const FinCategory& A = *m.cats[j];
    if (k == j) return A.compose(u, h);
    for (std::size_t s = 0; s <= n; ++s) mt[s] = m.cats[s]->identity(at[s]);
    mt[k] = u;
    return A.compose(h, m.funs[j].mor[L.input_morphism(j, mt)]);
  };
  auto apply = [&](std::size_t i, std::size_t x, const Tuple& at, MorId h) -> MorId {
    const std::size_t prev = (i + n) % (n + 1);
    HomSet b = hom_at(m, L, i, at);
    return m.cats[i]->hom(b.src, b.tgt)[m.isos[i][x][m.cats[prev]->hom_index(h)]];
  };
  Tuple t2(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t prev = (i + n) % (n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      const FinCategory& K = *m.cats[k];
      for (std::size_t x = 0; x < full.size(); ++x) {
        full.decode_into(x, t);
        HomSet a = hom_at(m, L, prev, t);
        for (MorId u : K.outgoing(t[k])) {
          if (K.is_identity(u)) continue;
          t2 = t;
          t2[k] = K.tgt(u);
          std::size_t x2 = full.index(t2);
          for (MorId h : m.cats[prev]->hom(a.src, a.tgt)) {
            MorId lhs = apply(i, x2, t2, act(prev, k, u, t, h));
            MorId rhs = act(i, k, u, t, apply(i, x, t, h));
            r.expect(lhs == rhs, "Naturality",
                     "i=" + std::to_string(i) + " slot " + std::to_string(k) + " along " + K.morphism_name(u) +
                         " at " + label(m.cats, t));
          }
        }
      }
    }
  }

  for (std::size_t x = 0; x < full.size(); ++x) {
    full.decode_into(x, t);
    HomSet h = hom_at(m, L, n, t);
    Permutation p = identity_perm(m.cats[n]->hom(h.src, h.tgt).size());
    for (std::size_t i = 0; i <= n; ++i) p = then(p, m.isos[i][x]);
    r.expect(p == identity_perm(p.size()), "Cycle", label(m.cats, t));
  }
  return r;
}

namespace {

MutualLeftAdjunction pair_adjunction(const MultiAdjunction& m, const MadjLayout& L, std::size_t i,
                                     std::size_t j, std::span<const ObjId> full) {
  const auto inputs_i = pick(m.cats, L.inputs(i));
  const auto inputs_j = pick(m.cats, L.inputs(j));
  Tuple fi, fj;
  std::size_t pos_j = 0, pos_i = 0;
  for (std::size_t q = 0; q < L.inputs(i).size(); ++q) {
    if (L.inputs(i)[q] == j) pos_j = q;
    fi.push_back(full[L.inputs(i)[q]]);
  }
  for (std::size_t q = 0; q < L.inputs(j).size(); ++q) {
    if (L.inputs(j)[q] == i) pos_i = q;
    fj.push_back(full[L.inputs(j)[q]]);
  }
  MutualLeftAdjunction c{partial_functor(m.funs[i], inputs_i, fi, pos_j),
                         partial_functor(m.funs[j], inputs_j, fj, pos_i), {}};
  const std::size_t na = m.cats[j]->object_count(), nb = m.cats[i]->object_count();
  c.phi.resize(na * nb);
  Tuple t(full.begin(), full.end());
  for (ObjId a = 0; a < na; ++a)
    for (ObjId b = 0; b < nb; ++b) {
      t[j] = a;
      t[i] = b;
      c.phi[a * nb + b] = composite_iso(m, L, i, j, t);
    }
  return c;
}

}  // namespace

MutualLeftAdjunction pair_adjunction(const MultiAdjunction& m, std::size_t i, std::size_t j,
                                     std::span<const ObjId> full) {
  if (i == j || i > m.arity() || j > m.arity()) fail(ErrorCode::IndexOutOfRange, "pair_adjunction: slots");
  if (m.chirality == Chirality::Right) return pair_adjunction(dualize(m), i, j, full);
  return pair_adjunction(m, MadjLayout(m.cats), i, j, full);
}

OneVariableAdjoints searched_adjoints(const Functor& F0, std::span<const CategoryPtr> cats) {
  std::vector<CategoryPtr> factors(cats.begin() + 1, cats.end());
  return [F0, factors](std::size_t k, std::span<const ObjId> inputs) -> std::optional<MutualLeftAdjunction> {
    auto res = adjoint_search(partial_functor(F0, factors, inputs, k - 1));
    return res.adjunction;
  };
}

OneVariableAdjoints adjoints_of(const MultiAdjunction& m) {
  auto shared = std::make_shared<std::pair<MultiAdjunction, MadjLayout>>(
      m.chirality == Chirality::Left ? m : dualize(m), MadjLayout(m.cats));
  return [shared](std::size_t k, std::span<const ObjId> inputs) -> std::optional<MutualLeftAdjunction> {
    Tuple full(inputs.size() + 1, 0);
    std::copy(inputs.begin(), inputs.end(), full.begin() + 1);
    full[k] = 0;
    return pair_adjunction(shared->first, shared->second, 0, k, full);
  };
}

MultiAdjunction from_primary(std::span<const CategoryPtr> cats, const Functor& F0,
                             const OneVariableAdjoints& adjoints) {
  if (cats.empty()) fail(ErrorCode::BoundaryMismatch, "from_primary: no categories");
  const std::size_t n = cats.size() - 1;
  std::vector<CategoryPtr> factors(cats.begin() + 1, cats.end());
  if (!same_category(F0.source, product(factors)) || !same_category(F0.target, opposite(cats[0])))
    fail(ErrorCode::BoundaryMismatch, "from_primary: F0 must be A_1 x ... x A_n -> A_0^op");

  MultiAdjunction m;
  m.cats.assign(cats.begin(), cats.end());
  m.funs.resize(n + 1);
  m.funs[0] = F0;
  m.isos.assign(n + 1, {});
  MadjLayout L(m.cats);
  const TupleSpace& full = L.full();
  Tuple t(n + 1);
  if (n == 0) {
    for (std::size_t x = 0; x < full.size(); ++x) {
      full.decode_into(x, t);
      HomSet h = hom_at(m, L, 0, t);
      m.isos[0].push_back(identity_perm(cats[0]->hom(h.src, h.tgt).size()));
    }
    return m;
  }

  const FinCategory& A0 = *cats[0];
  const Functor id0 = identity_functor(cats[0]);
  // psi[k][x] : H_0 -> H_k at full tuple x.
  std::vector<std::vector<Permutation>> psi(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    const FinCategory& Ak = *cats[k];
    const Functor idk = identity_functor(cats[k]);
    std::vector<std::size_t> params;
    for (std::size_t s = 1; s <= n; ++s)
      if (s != k) params.push_back(s);
    auto pcats = pick(cats, params);
    TupleSpace pobj = object_space(pcats), pmor = morphism_space(pcats);

    std::vector<MutualLeftAdjunction> M;
    std::vector<UnitCounit> UC;
    Tuple inputs(n), p;
    for (std::size_t x = 0; x < pobj.size(); ++x) {
      p = pobj.decode(x);
      for (std::size_t q = 0; q < params.size(); ++q) inputs[params[q] - 1] = p[q];
      inputs[k - 1] = 0;
      auto got = adjoints(k, inputs);
      std::string where = "slot " + std::to_string(k) + " at (";
      for (std::size_t q = 0; q < n; ++q)
        where += (q ? "," : "") + (q + 1 == k ? std::string("-") : cats[q + 1]->object_name(inputs[q]));
      where += ")";
      if (!got) fail(ErrorCode::NotAdjoint, "from_primary: no adjoint for " + where);
      if (!same_category(got->left.source, cats[k]) || !same_category(got->right.source, cats[0]) ||
          !verify_mutual_left(*got).ok())
        fail(ErrorCode::NotAdjoint, "from_primary: invalid adjunction for " + where);
      if (!(got->left == partial_functor(F0, factors, inputs, k - 1)))
        fail(ErrorCode::NaturalityFailure, "from_primary: supplied left functor differs from F0 for " + where);
      UC.push_back(unit_counit(*got, false));
      M.push_back(std::move(*got));
    }

    // Action of a parameter morphism tuple mp: p -> p' on F_k(-, a_0), as the
    // mate of F_0(mp, -) with identity sides; action[mp][a_0]: F_k(p', a_0) -> F_k(p, a_0) in A_k.
    std::vector<std::vector<MorId>> action(pmor.size());
    Tuple mp, src(params.size()), tgt(params.size()), f0m(n);
    TupleSpace f0mor = morphism_space(factors);
    for (std::size_t y = 0; y < pmor.size(); ++y) {
      mp = pmor.decode(y);
      bool ident = true;
      for (std::size_t q = 0; q < params.size(); ++q) {
        src[q] = pcats[q]->src(mp[q]);
        tgt[q] = pcats[q]->tgt(mp[q]);
        ident &= pcats[q]->is_identity(mp[q]);
      }
      const std::size_t ps = pobj.index(src), pt = pobj.index(tgt);
      if (ident) {
        action[y].resize(A0.object_count());
        for (ObjId a0 = 0; a0 < A0.object_count(); ++a0) action[y][a0] = Ak.identity(M[ps].right.obj[a0]);
        continue;
      }
      for (std::size_t q = 0; q < params.size(); ++q) f0m[params[q] - 1] = mp[q];
      std::vector<MorId> alpha(Ak.object_count());
      for (ObjId xk = 0; xk < Ak.object_count(); ++xk) {
        f0m[k - 1] = Ak.identity(xk);
        alpha[xk] = F0.mor[f0mor.index(f0m)];
      }
      action[y] = mate_mutual(M[ps], UC[ps], M[pt], UC[pt], idk, id0, alpha);
    }

    const auto& in = L.inputs(k);
    auto icats = pick(cats, in);
    Functor Fk{product(icats), opposite(cats[k]), {}, {}};
    TupleSpace iobj = object_space(icats), imor = morphism_space(icats);
    Fk.obj.resize(iobj.size());
    Tuple it(n);
    auto split = [&](const Tuple& tup, std::uint32_t& slot0, Tuple& par) {
      par.assign(params.size(), 0);
      for (std::size_t q = 0; q < in.size(); ++q) {
        if (in[q] == 0) {
          slot0 = tup[q];
          continue;
        }
        auto pos = std::find(params.begin(), params.end(), in[q]) - params.begin();
        par[pos] = tup[q];
      }
    };
    std::uint32_t a0 = 0;
    for (std::size_t x = 0; x < iobj.size(); ++x) {
      iobj.decode_into(x, it);
      split(it, a0, p);
      Fk.obj[x] = M[pobj.index(p)].right.obj[a0];
    }
    Fk.mor.resize(imor.size());
    for (std::size_t x = 0; x < imor.size(); ++x) {
      imor.decode_into(x, it);
      std::uint32_t m0 = 0;
      split(it, m0, mp);
      for (std::size_t q = 0; q < params.size(); ++q) tgt[q] = pcats[q]->tgt(mp[q]);
      // F_k(mp, m0) = F_k(p', m0) ∘ F_k(mp, a0) in A_k•, i.e. X ∘ Y in A_k.
      MorId Y = M[pobj.index(tgt)].right.mor[m0];
      MorId X = action[pmor.index(mp)][A0.src(m0)];
      Fk.mor[x] = Ak.compose(X, Y);
    }
    m.funs[k] = std::move(Fk);

    psi[k].resize(full.size());
    p.resize(params.size());
    for (std::size_t x = 0; x < full.size(); ++x) {
      full.decode_into(x, t);
      for (std::size_t q = 0; q < params.size(); ++q) p[q] = t[params[q]];
      psi[k][x] = M[pobj.index(p)].bijection(t[k], t[0]);
    }
  }

  for (std::size_t x = 0; x < full.size(); ++x) {
    m.isos[0].push_back(invert(psi[n][x]));
    m.isos[1].push_back(psi[1][x]);
    for (std::size_t k = 2; k <= n; ++k) m.isos[k].push_back(then(invert(psi[k - 1][x]), psi[k][x]));
  }
  return m;
}

MultiAdjunction as_multi(const MutualLeftAdjunction& c) {
  MultiAdjunction m;
  m.cats = {c.b_cat(), c.a_cat()};
  m.funs = {c.left, c.right};
  const std::size_t na = c.a_cat()->object_count(), nb = c.b_cat()->object_count();
  m.isos.assign(2, std::vector<Permutation>(na * nb));
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t a = 0; a < na; ++a) {
      m.isos[1][b * na + a] = c.phi[a * nb + b];
      m.isos[0][b * na + a] = invert(c.phi[a * nb + b]);
    }
  return m;
}

MutualLeftAdjunction as_mutual(const MultiAdjunction& m) {
  if (m.arity() != 1) fail(ErrorCode::IndexOutOfRange, "as_mutual: arity must be 1");
  require_left(m, "as_mutual");
  MutualLeftAdjunction c{m.funs[0], m.funs[1], {}};
  const std::size_t nb = m.cats[0]->object_count(), na = m.cats[1]->object_count();
  c.phi.resize(na * nb);
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t a = 0; a < na; ++a) c.phi[a * nb + b] = m.isos[1][b * na + a];
  return c;
}

MultiAdjunction restrict(const MultiAdjunction& m, std::size_t k, ObjId a_k) {
  const std::size_t n = m.arity();
  if (m.cats.empty() || n == 0) fail(ErrorCode::IndexOutOfRange, "restrict: arity 0 has no slots");
  if (k > n) fail(ErrorCode::IndexOutOfRange, "restrict: slot " + std::to_string(k));
  if (a_k >= m.cats[k]->object_count()) fail(ErrorCode::IndexOutOfRange, "restrict: object out of range");

  // Remaining slots in cyclic order, starting at old slot 0 (or 1 if 0 is fixed).
  std::vector<std::size_t> old_of_new;
  for (std::size_t s = 0; s <= n; ++s)
    if (s != k) old_of_new.push_back(s);

  MadjLayout L(m.cats);
  MultiAdjunction out;
  out.chirality = m.chirality;
  for (auto s : old_of_new) out.cats.push_back(m.cats[s]);
  MadjLayout L2(out.cats);
  const std::size_t n2 = n - 1;

  Tuple full(n + 1), mfull(n + 1);
  for (std::size_t i = 0; i <= n2; ++i) {
    const std::size_t j = old_of_new[i];
    auto icats = pick(out.cats, L2.inputs(i));
    Functor F{product(icats), m.funs[j].target, {}, {}};
    TupleSpace os = object_space(icats), ms = morphism_space(icats);
    Tuple it(icats.size());
    F.obj.resize(os.size());
    for (std::size_t x = 0; x < os.size(); ++x) {
      os.decode_into(x, it);
      for (std::size_t q = 0; q < it.size(); ++q) full[old_of_new[L2.inputs(i)[q]]] = it[q];
      full[k] = a_k;
      F.obj[x] = m.funs[j].obj[L.input_object(j, full)];
    }
    F.mor.resize(ms.size());
    for (std::size_t x = 0; x < ms.size(); ++x) {
      ms.decode_into(x, it);
      for (std::size_t q = 0; q < it.size(); ++q) mfull[old_of_new[L2.inputs(i)[q]]] = it[q];
      mfull[k] = m.cats[k]->identity(a_k);
      F.mor[x] = m.funs[j].mor[L.input_morphism(j, mfull)];
    }
    out.funs.push_back(std::move(F));
  }

  out.isos.assign(n2 + 1, {});
  const TupleSpace& nf = L2.full();
  Tuple t2(n2 + 1);
  for (std::size_t x = 0; x < nf.size(); ++x) {
    nf.decode_into(x, t2);
    for (std::size_t q = 0; q <= n2; ++q) full[old_of_new[q]] = t2[q];
    full[k] = a_k;
    const std::size_t ox = L.full().index(full);
    for (std::size_t i = 0; i <= n2; ++i) {
      const std::size_t j = old_of_new[i];
      const std::size_t prev = (j + n) % (n + 1);
      if (prev != k)
        out.isos[i].push_back(m.isos[j][ox]);
      else
        out.isos[i].push_back(then(m.isos[k][ox], m.isos[j][ox]));
    }
  }
  return out;
}

MultiAdjunction cyclic_shift(const MultiAdjunction& m) {
  const std::size_t n1 = m.cats.size();
  MultiAdjunction out;
  out.chirality = m.chirality;
  out.cats = m.cats;
  out.funs = m.funs;
  std::rotate(out.cats.begin(), out.cats.begin() + 1, out.cats.end());
  std::rotate(out.funs.begin(), out.funs.begin() + 1, out.funs.end());
  TupleSpace oldf = object_space(m.cats), newf = object_space(out.cats);
  out.isos.assign(n1, std::vector<Permutation>(newf.size()));
  Tuple t(n1), o(n1);
  for (std::size_t x = 0; x < newf.size(); ++x) {
    newf.decode_into(x, t);
    for (std::size_t j = 0; j < n1; ++j) o[j] = t[(j + n1 - 1) % n1];
    const std::size_t ox = oldf.index(o);
    for (std::size_t i = 0; i < n1; ++i) out.isos[i][x] = m.isos[(i + 1) % n1][ox];
  }
  return out;
}

MultiAdjunction dualize(const MultiAdjunction& m) {
  MultiAdjunction out;
  out.chirality = m.chirality == Chirality::Left ? Chirality::Right : Chirality::Left;
  for (const auto& c : m.cats) out.cats.push_back(opposite(c));
  const std::size_t n = m.arity();
  for (std::size_t i = 0; i <= n; ++i) {
    auto icats = pick(out.cats, input_slots(n, i));
    out.funs.push_back(Functor{product(icats), m.cats[i], m.funs[i].obj, m.funs[i].mor});
  }
  out.isos = m.isos;
  return out;
}

MultiAdjunction identity_madj(const CategoryPtr& x) {
  MultiAdjunction m;
  auto xo = opposite(x);
  m.cats = {xo, x};
  Functor f0 = identity_functor(x);
  f0.target = opposite(xo);
  Functor f1 = identity_functor(xo);
  m.funs = {f0, f1};
  const std::size_t n = x->object_count();
  m.isos.assign(2, {});
  for (ObjId a0 = 0; a0 < n; ++a0)
    for (ObjId a1 = 0; a1 < n; ++a1) {
      auto p = identity_perm(x->hom(a0, a1).size());
      m.isos[0].push_back(p);
      m.isos[1].push_back(p);
    }
  return m;
}

MultiAdjunction compose_multi(const MultiAdjunction& g, std::span<const MultiAdjunction> fs) {
  if (g.chirality == Chirality::Right) {
    std::vector<MultiAdjunction> dual;
    for (const auto& f : fs) dual.push_back(dualize(f));
    return dualize(compose_multi(dualize(g), dual));
  }
  const std::size_t k = g.arity();
  if (fs.size() != k) fail(ErrorCode::BoundaryMismatch, "compose_multi: expected one adjunction per slot of g");
  for (std::size_t i = 0; i < k; ++i) {
    require_left(fs[i], "compose_multi");
    if (!same_category(g.cats[i + 1], opposite(fs[i].cats[0])))
      fail(ErrorCode::BoundaryMismatch, "compose_multi: slot " + std::to_string(i + 1) + " of g does not match");
  }
  if (k == 0) return g;

  // Result slot q >= 1 is slot `inner[q]` of fs[block[q]].
  std::vector<CategoryPtr> cats{g.cats[0]};
  std::vector<std::size_t> block{0}, inner{0}, first(k);
  for (std::size_t i = 0; i < k; ++i) {
    first[i] = cats.size();
    for (std::size_t j = 1; j < fs[i].cats.size(); ++j) {
      cats.push_back(fs[i].cats[j]);
      block.push_back(i);
      inner.push_back(j);
    }
  }
  const std::size_t n = cats.size() - 1;
  std::vector<CategoryPtr> factors(cats.begin() + 1, cats.end());
  MadjLayout Lg(g.cats);
  std::vector<MadjLayout> Lf;
  for (const auto& f : fs) Lf.emplace_back(f.cats);

  // H_00 = G_0(F_10, ..., F_k0) on object and morphism tuples.
  Functor H{product(factors), opposite(cats[0]), {}, {}};
  TupleSpace os = object_space(factors), ms = morphism_space(factors);
  Tuple it(n), gt(k + 1);
  std::vector<Tuple> ft(k);
  for (std::size_t i = 0; i < k; ++i) ft[i].assign(fs[i].cats.size(), 0);
  auto eval = [&](bool objects) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 1; j < fs[i].cats.size(); ++j) ft[i][j] = it[first[i] + j - 2];
      gt[i + 1] = objects ? fs[i].funs[0].obj[Lf[i].input_object(0, ft[i])]
                          : fs[i].funs[0].mor[Lf[i].input_morphism(0, ft[i])];
    }
    return objects ? g.funs[0].obj[Lg.input_object(0, gt)] : g.funs[0].mor[Lg.input_morphism(0, gt)];
  };
  H.obj.resize(os.size());
  for (std::size_t x = 0; x < os.size(); ++x) {
    os.decode_into(x, it);
    H.obj[x] = eval(true);
  }
  H.mor.resize(ms.size());
  for (std::size_t x = 0; x < ms.size(); ++x) {
    ms.decode_into(x, it);
    H.mor[x] = eval(false);
  }

  auto provider = [&](std::size_t q, std::span<const ObjId> inputs) -> std::optional<MutualLeftAdjunction> {
    const std::size_t i = block[q], j = inner[q];
    Tuple fi(fs[i].cats.size(), 0);
    for (std::size_t jj = 1; jj < fs[i].cats.size(); ++jj) fi[jj] = inputs[first[i] + jj - 2];
    fi[j] = 0;
    Tuple gtup(k + 1, 0);
    for (std::size_t ii = 0; ii < k; ++ii) {
      if (ii == i) continue;
      Tuple fo(fs[ii].cats.size(), 0);
      for (std::size_t jj = 1; jj < fs[ii].cats.size(); ++jj) fo[jj] = inputs[first[ii] + jj - 2];
      gtup[ii + 1] = fs[ii].funs[0].obj[Lf[ii].input_object(0, fo)];
    }
    auto m1 = pair_adjunction(fs[i], Lf[i], 0, j, fi);
    auto m2 = pair_adjunction(g, Lg, 0, i + 1, gtup);
    return compose_mutual(m1, m2);
  };
  return from_primary(cats, H, provider);
}

MultiAdjunction compose_at(const MultiAdjunction& g, std::size_t i, const MultiAdjunction& f) {
  if (i == 0 || i > g.arity()) fail(ErrorCode::IndexOutOfRange, "compose_at: slot " + std::to_string(i));
  std::vector<MultiAdjunction> fs;
  for (std::size_t s = 1; s <= g.arity(); ++s) {
    if (s == i) {
      fs.push_back(f);
      continue;
    }
    MultiAdjunction id = identity_madj(g.cats[s]);
    if (g.chirality == Chirality::Right) id = dualize(identity_madj(opposite(g.cats[s])));
    fs.push_back(std::move(id));
  }
  return compose_multi(g, fs);
}

}  // namespace catmates
