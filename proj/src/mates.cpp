#include "catmates/mates.hpp"

#include <algorithm>
#include <functional>

#include "catmates/error.hpp"
#include "detail.hpp"

namespace catmates {

using namespace detail;

namespace {

bool same_madj(const MadjPtr& a, const MadjPtr& b) { return a == b || (a && b && *a == *b); }

std::size_t step(std::size_t i, std::size_t n1) { return (i + 1) % n1; }

// Position of phi_{i->j} applied to the hom element at position pos of H_i.
std::uint32_t transport(const MultiAdjunction& m, std::size_t x, std::size_t i, std::size_t j, std::uint32_t pos) {
  const std::size_t n1 = m.cats.size();
  while (i != j) {
    i = step(i, n1);
    pos = m.isos[i][x][pos];
  }
  return pos;
}

void require_anchor0(const TwoCell& t, const char* what) {
  if (t.anchor != 0) fail(ErrorCode::InvalidAnchor, std::string(what) + ": expected a cell anchored at 0");
  if (t.source->chirality != Chirality::Left)
    fail(ErrorCode::BoundaryMismatch, std::string(what) + ": expected left adjunctions");
}

// Per-slot generator morphisms between input tuples of F_i, as needed by the
// naturality checks: (from tuple, to tuple, P(u), Q(u)).
struct Square {
  std::size_t from, to;
  MorId p, q;
  std::string what;
};

std::vector<Square> naturality_squares(const TwoCell& t, bool names) {
  const MultiAdjunction& f = *t.source;
  const MultiAdjunction& g = *t.target;
  const std::size_t i = t.anchor, n = f.arity();
  MadjLayout L(f.cats), Lg(g.cats);
  const auto& in = L.inputs(i);
  auto icats = pick(f.cats, in);
  TupleSpace space = object_space(icats);
  std::vector<Square> out;
  Tuple it(in.size()), full(n + 1, 0), mt(n + 1, 0), smt(n + 1, 0);
  for (std::size_t x = 0; x < space.size(); ++x) {
    space.decode_into(x, it);
    for (std::size_t q = 0; q < in.size(); ++q) full[in[q]] = it[q];
    for (std::size_t q = 0; q < in.size(); ++q) {
      const std::size_t k = in[q];
      const FinCategory& K = *f.cats[k];
      for (MorId u : K.outgoing(full[k])) {
        if (K.is_identity(u)) continue;
        for (std::size_t s = 0; s <= n; ++s) {
          mt[s] = f.cats[s]->identity(full[s]);
          smt[s] = t.sides[s].mor[mt[s]];
        }
        mt[k] = u;
        smt[k] = t.sides[k].mor[u];
        Tuple to = it;
        to[q] = K.tgt(u);
        Square sq{x, space.index(to), t.sides[i].mor[f.funs[i].mor[L.input_morphism(i, mt)]],
                  g.funs[i].mor[Lg.input_morphism(i, smt)], {}};
        if (names) sq.what = "slot " + std::to_string(k) + " along " + K.morphism_name(u) + " at " + label(icats, it);
        out.push_back(std::move(sq));
      }
    }
  }
  return out;
}

// (source, target) in A'_i of the component at each input tuple.
std::vector<std::pair<ObjId, ObjId>> component_ends(const TwoCell& t) {
  const MultiAdjunction& f = *t.source;
  const MultiAdjunction& g = *t.target;
  const std::size_t i = t.anchor, n = f.arity();
  MadjLayout Lg(g.cats);
  MadjLayout L(f.cats);
  const auto& in = L.inputs(i);
  TupleSpace space = object_space(pick(f.cats, in));
  std::vector<std::pair<ObjId, ObjId>> out(space.size());
  Tuple it(in.size()), st(n + 1, 0);
  for (std::size_t x = 0; x < space.size(); ++x) {
    space.decode_into(x, it);
    for (std::size_t q = 0; q < in.size(); ++q) st[in[q]] = t.sides[in[q]].obj[it[q]];
    out[x] = {g.funs[i].obj[Lg.input_object(i, st)], t.sides[i].obj[f.funs[i].obj[x]]};
  }
  return out;
}

Report check_boundary(const TwoCell& t) {
  Report r;
  if (!t.source || !t.target) {
    r.fail("Shape", "missing adjunction");
    return r;
  }
  const MultiAdjunction& f = *t.source;
  const MultiAdjunction& g = *t.target;
  if (f.chirality != g.chirality || f.cats.size() != g.cats.size() || f.cats.empty()) {
    r.fail(std::string(to_string(ErrorCode::BoundaryMismatch)), "source and target adjunctions differ in shape");
    return r;
  }
  if (t.anchor > f.arity()) {
    r.fail(std::string(to_string(ErrorCode::InvalidAnchor)), std::to_string(t.anchor));
    return r;
  }
  if (t.sides.size() != f.cats.size()) {
    r.fail(std::string(to_string(ErrorCode::BoundaryMismatch)), "expected one side per slot");
    return r;
  }
  for (std::size_t s = 0; s < f.cats.size(); ++s) {
    const Functor& S = t.sides[s];
    if (!same_category(S.source, f.cats[s]) || !same_category(S.target, g.cats[s])) {
      r.fail(std::string(to_string(ErrorCode::BoundaryMismatch)), "side " + std::to_string(s));
      continue;
    }
    r.merge(validate_functor(S), "S_" + std::to_string(s));
  }
  return r;
}

}  // namespace

bool TwoCell::operator==(const TwoCell& o) const {
  return anchor == o.anchor && components == o.components && sides == o.sides && same_madj(source, o.source) &&
         same_madj(target, o.target);
}

Report validate_two_cell(const TwoCell& t) {
  if (t.source && t.source->chirality == Chirality::Right) return validate_two_cell(dual_cell(t));
  Report r = check_boundary(t);
  if (!r.ok()) return r;
  const FinCategory& A = *t.target->cats[t.anchor];
  auto ends = component_ends(t);
  if (t.components.size() != ends.size()) {
    r.fail("Shape", "expected " + std::to_string(ends.size()) + " components");
    return r;
  }
  MadjLayout L(t.source->cats);
  auto icats = pick(t.source->cats, L.inputs(t.anchor));
  TupleSpace space = object_space(icats);
  for (std::size_t x = 0; x < ends.size(); ++x) {
    MorId c = t.components[x];
    bool ok = c < A.morphism_count() && A.src(c) == ends[x].first && A.tgt(c) == ends[x].second;
    r.expect(ok, "ComponentEndpoints", label(icats, space.decode(x)));
  }
  if (!r.ok()) return r;
  for (const auto& sq : naturality_squares(t, true)) {
    bool ok = A.compose(t.components[sq.from], sq.q) == A.compose(sq.p, t.components[sq.to]);
    r.expect(ok, "Naturality", sq.what);
  }
  return r;
}

MorId transported_identity(const MultiAdjunction& m, const MadjLayout& L, std::size_t i, std::size_t j,
                           std::span<const ObjId> full) {
  Tuple s(full.begin(), full.end());
  s[i] = m.funs[i].obj[L.input_object(i, s)];
  const FinCategory& Ai = *m.cats[i];
  std::uint32_t pos = Ai.hom_index(Ai.identity(s[i]));
  pos = transport(m, L.full().index(s), i, j, pos);
  HomSet h = hom_at(m, L, j, s);
  return m.cats[j]->hom(h.src, h.tgt)[pos];
}

TwoCell mate_n(const TwoCell& t, std::size_t j) {
  if (t.source->chirality == Chirality::Right) return dual_cell(mate_n(dual_cell(t), j));
  const std::size_t i = t.anchor, n = t.arity();
  if (j == i || j > n) fail(ErrorCode::InvalidAnchor, "mate_n: target anchor " + std::to_string(j));
  Report b = check_boundary(t);
  if (!b.ok()) fail(ErrorCode::BoundaryMismatch, "mate_n: " + b.summary());
  const MultiAdjunction& f = *t.source;
  const MultiAdjunction& g = *t.target;
  MadjLayout L(f.cats), Lg(g.cats);
  const FinCategory& Aj = *g.cats[j];
  const auto& in = L.inputs(j);
  TupleSpace space = object_space(pick(f.cats, in));
  if (t.components.size() != object_space(pick(f.cats, L.inputs(i))).size())
    fail(ErrorCode::BoundaryMismatch, "mate_n: component count");

  TwoCell out{t.source, t.target, t.sides, j, std::vector<MorId>(space.size())};
  Tuple it(in.size()), full(n + 1, 0), u(n + 1), v(n + 1), mt(n + 1);
  for (std::size_t x = 0; x < space.size(); ++x) {
    space.decode_into(x, it);
    for (std::size_t q = 0; q < in.size(); ++q) full[in[q]] = it[q];
    const ObjId gb = f.funs[j].obj[x];
    // eps_b = e^{j->i} with a_j := G b.
    const MorId eps = transported_identity(f, L, j, i, full);
    u = full;
    u[j] = gb;
    const MorId alpha = t.components[L.input_object(i, u)];
    for (std::size_t s = 0; s <= n; ++s) v[s] = t.sides[s].obj[u[s]];
    for (std::size_t s = 0; s <= n; ++s) mt[s] = g.cats[s]->identity(v[s]);
    mt[i] = t.sides[i].mor[eps];
    const MorId g_eps = g.funs[j].mor[Lg.input_morphism(j, mt)];
    mt[i] = alpha;
    const MorId g_alpha = g.funs[j].mor[Lg.input_morphism(j, mt)];
    const MorId eta = transported_identity(g, Lg, i, j, v);
    // eta'_{S_j G b} ∘ G'(alpha_{G b}) ∘ G'(S_i eps_b), all in A'_j.
    out.components[x] = Aj.compose(eta, Aj.compose(g_alpha, g_eps));
  }
  return out;
}

std::vector<TwoCell> mate_orbit(const TwoCell& t) {
  if (t.anchor != 0) fail(ErrorCode::InvalidAnchor, "mate_orbit: expected a cell anchored at 0");
  std::vector<TwoCell> out{t};
  for (std::size_t k = 1; k <= t.arity(); ++k) out.push_back(mate_n(out.back(), k));
  return out;
}

Report check_triangles(const MultiAdjunction& m) {
  if (m.chirality == Chirality::Right) return check_triangles(dualize(m));
  Report r;
  const std::size_t n = m.arity();
  MadjLayout L(m.cats);
  const TupleSpace& full = L.full();
  Tuple t(n + 1), s(n + 1), mt(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t k = 0; k <= n; ++k) {
        if (i == j || j == k) continue;
        for (std::size_t x = 0; x < full.size(); ++x) {
          full.decode_into(x, t);
          if (t[i] != 0) continue;  // slot i is overwritten below
          s = t;
          s[i] = m.funs[i].obj[L.input_object(i, s)];
          const MorId eij = transported_identity(m, L, i, j, s);
          const MorId ejk = transported_identity(m, L, j, k, s);
          for (std::size_t q = 0; q <= n; ++q) mt[q] = m.cats[q]->identity(s[q]);
          mt[j] = eij;
          const MorId fk = m.funs[k].mor[L.input_morphism(k, mt)];
          const MorId lhs = m.cats[k]->compose(ejk, fk);
          const MorId rhs = i == k ? m.cats[k]->identity(s[k]) : transported_identity(m, L, i, k, s);
          r.expect(lhs == rhs, "Triangle",
                   "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ") at " +
                       label(m.cats, s));
        }
      }
  return r;
}

Report check_mate_coherence(std::span<const TwoCell> cells) {
  Report r;
  std::vector<const MultiAdjunction*> seen;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const TwoCell& t = cells[c];
    const std::size_t n = t.arity(), i = t.anchor;
    const std::string tag = "cell " + std::to_string(c);
    std::vector<TwoCell> m(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
      if (j != i) m[j] = mate_n(t, j);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      r.expect(mate_n(m[j], i) == t, "Involution", tag + " via " + std::to_string(j));
      for (std::size_t k = 0; k <= n; ++k) {
        if (k == i || k == j) continue;
        bool ok = mate_n(m[j], k) == m[k];
        r.expect(ok, n == 2 ? "DoubleMate" : "Transitivity",
                 tag + " (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
    TwoCell cur = t;
    for (std::size_t s = 1; s <= n; ++s) cur = mate_n(cur, (i + s) % (n + 1));
    if (n > 0) cur = mate_n(cur, i);
    r.expect(cur == t, "Orbit", tag);
    for (const MadjPtr& p : {t.source, t.target}) {
      if (std::find(seen.begin(), seen.end(), p.get()) != seen.end()) continue;
      seen.push_back(p.get());
      r.merge(check_triangles(*p), tag);
    }
  }
  return r;
}

TwoCell dual_cell(const TwoCell& t) {
  TwoCell out{share(dualize(*t.source)), t.source == t.target ? nullptr : share(dualize(*t.target)), {}, t.anchor,
              t.components};
  if (!out.target) out.target = out.source;
  for (const auto& S : t.sides) out.sides.push_back(opposite(S));
  return out;
}

TwoCell identity_cell(const MadjPtr& f) {
  if (f->chirality != Chirality::Left) fail(ErrorCode::BoundaryMismatch, "identity_cell: expected a left adjunction");
  TwoCell t{f, f, {}, 0, {}};
  for (const auto& c : f->cats) t.sides.push_back(identity_functor(c));
  const FinCategory& A0 = *f->cats[0];
  for (ObjId y : f->funs[0].obj) t.components.push_back(A0.identity(y));
  return t;
}

TwoCell identity_on_side(const Functor& S) {
  TwoCell t{share(identity_madj(S.source)), share(identity_madj(S.target)), {opposite(S), S}, 0, {}};
  for (ObjId a = 0; a < S.source->object_count(); ++a) t.components.push_back(S.target->identity(S.obj[a]));
  return t;
}

TwoCell compose_cells(const TwoCell& beta, std::span<const TwoCell> alphas) {
  require_anchor0(beta, "compose_cells");
  const std::size_t k = beta.arity();
  if (alphas.size() != k) fail(ErrorCode::BoundaryMismatch, "compose_cells: expected one cell per slot");
  std::vector<MultiAdjunction> fs, fps;
  for (std::size_t i = 0; i < k; ++i) {
    require_anchor0(alphas[i], "compose_cells");
    if (!(beta.sides[i + 1] == opposite(alphas[i].sides[0])))
      fail(ErrorCode::BoundaryMismatch, "compose_cells: side " + std::to_string(i + 1) + " does not match");
    fs.push_back(*alphas[i].source);
    fps.push_back(*alphas[i].target);
  }
  TwoCell out{share(compose_multi(*beta.source, fs)), share(compose_multi(*beta.target, fps)), {beta.sides[0]}, 0, {}};
  for (const auto& a : alphas)
    for (std::size_t s = 1; s < a.sides.size(); ++s) out.sides.push_back(a.sides[s]);

  const MultiAdjunction& g = *beta.source;
  const MultiAdjunction& gp = *beta.target;
  MadjLayout Lg(g.cats), Lgp(gp.cats);
  std::vector<MadjLayout> Lf;
  for (const auto& f : fs) Lf.emplace_back(f.cats);
  std::vector<CategoryPtr> flat(out.source->cats.begin() + 1, out.source->cats.end());
  TupleSpace space = object_space(flat);
  const FinCategory& B0 = *gp.cats[0];
  Tuple it(flat.size()), b(k + 1, 0), mt(k + 1, 0);
  std::vector<Tuple> ft(k);
  for (std::size_t i = 0; i < k; ++i) ft[i].assign(fs[i].cats.size(), 0);
  out.components.resize(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    space.decode_into(x, it);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 1; j < fs[i].cats.size(); ++j) ft[i][j] = it[pos++];
      const std::size_t ix = Lf[i].input_object(0, ft[i]);
      b[i + 1] = fs[i].funs[0].obj[ix];
      mt[i + 1] = alphas[i].components[ix];
    }
    const MorId g_alpha = gp.funs[0].mor[Lgp.input_morphism(0, mt)];
    out.components[x] = B0.compose(beta.components[Lg.input_object(0, b)], g_alpha);
  }
  return out;
}

TwoCell compose_cells_at(const TwoCell& beta, std::size_t i, const TwoCell& alpha) {
  if (i == 0 || i > beta.arity()) fail(ErrorCode::IndexOutOfRange, "compose_cells_at: slot " + std::to_string(i));
  std::vector<TwoCell> cells;
  for (std::size_t s = 1; s <= beta.arity(); ++s) cells.push_back(s == i ? alpha : identity_on_side(beta.sides[s]));
  return compose_cells(beta, cells);
}

TwoCell horizontal_cells(const TwoCell& beta, const TwoCell& alpha) {
  require_anchor0(alpha, "horizontal_cells");
  require_anchor0(beta, "horizontal_cells");
  if (!same_madj(alpha.target, beta.source))
    fail(ErrorCode::BoundaryMismatch, "horizontal_cells: target of the first cell is not the source of the second");
  const MultiAdjunction& f = *alpha.source;
  const MultiAdjunction& fp = *alpha.target;
  const std::size_t n = f.arity();
  TwoCell out{alpha.source, beta.target, {}, 0, std::vector<MorId>(alpha.components.size())};
  for (std::size_t s = 0; s <= n; ++s) out.sides.push_back(compose(beta.sides[s], alpha.sides[s]));
  MadjLayout L(f.cats), Lp(fp.cats);
  TupleSpace space = object_space(pick(f.cats, L.inputs(0)));
  const FinCategory& C0 = *beta.target->cats[0];
  Tuple it(n), st(n + 1, 0);
  for (std::size_t x = 0; x < space.size(); ++x) {
    space.decode_into(x, it);
    for (std::size_t q = 0; q < n; ++q) st[q + 1] = alpha.sides[q + 1].obj[it[q]];
    const MorId b = beta.components[Lp.input_object(0, st)];
    out.components[x] = C0.compose(beta.sides[0].mor[alpha.components[x]], b);
  }
  return out;
}

TwoCell sigma_cell(const TwoCell& t) {
  require_anchor0(t, "sigma_cell");
  if (t.arity() == 0) return t;
  TwoCell m = mate_n(t, 1);
  TwoCell out{share(cyclic_shift(*t.source)), t.source == t.target ? nullptr : share(cyclic_shift(*t.target)),
              t.sides, 0, std::move(m.components)};
  if (!out.target) out.target = out.source;
  std::rotate(out.sides.begin(), out.sides.begin() + 1, out.sides.end());
  return out;
}

std::vector<TwoCell> enumerate_cells(const MadjPtr& source, const MadjPtr& target, const std::vector<Functor>& sides,
                                     std::size_t anchor, std::size_t limit) {
  if (source->chirality == Chirality::Right) {
    TwoCell probe{source, target, sides, anchor, {}};
    TwoCell d = dual_cell(probe);
    auto cells = enumerate_cells(d.source, d.target, d.sides, anchor, limit);
    std::vector<TwoCell> out;
    for (auto& c : cells) {
      probe.components = std::move(c.components);
      out.push_back(probe);
    }
    return out;
  }
  TwoCell t{source, target, sides, anchor, {}};
  Report b = check_boundary(t);
  if (!b.ok()) fail(ErrorCode::BoundaryMismatch, "enumerate_cells: " + b.summary());
  const FinCategory& A = *target->cats[anchor];
  auto ends = component_ends(t);
  auto squares = naturality_squares(t, false);
  // Each square is checked once both of its tuples are assigned.
  std::vector<std::vector<const Square*>> due(ends.size());
  for (const auto& sq : squares) due[std::max(sq.from, sq.to)].push_back(&sq);
  std::vector<TwoCell> out;
  t.components.assign(ends.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (out.size() >= limit) return;
    if (x == ends.size()) {
      out.push_back(t);
      return;
    }
    for (MorId c : A.hom(ends[x].first, ends[x].second)) {
      t.components[x] = c;
      bool ok = true;
      for (const Square* sq : due[x])
        if (A.compose(t.components[sq->from], sq->q) != A.compose(sq->p, t.components[sq->to])) {
          ok = false;
          break;
        }
      if (ok) rec(x + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace catmates
