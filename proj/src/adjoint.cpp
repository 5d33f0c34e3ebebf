#include "catmates/adjoint.hpp"

#include <algorithm>

#include "catmates/error.hpp"
#include "detail.hpp"

namespace catmates {

namespace {

std::string pair_name(const FinCategory& A, ObjId a, const FinCategory& B, ObjId b) {
  return "(" + A.object_name(a) + "," + B.object_name(b) + ")";
}

using detail::invert;
using detail::is_permutation_of;

}  // namespace

Report verify_mutual_left(const MutualLeftAdjunction& c) {
  Report r;
  const Functor& F = c.left;
  const Functor& G = c.right;
  if (!same_category(F.target, opposite(G.source)) || !same_category(G.target, opposite(F.source))) {
    r.fail(std::string(to_string(ErrorCode::BoundaryMismatch)),
           "expected F: A -> B^op and G: B -> A^op");
    return r;
  }
  r.merge(validate_functor(F), "F");
  r.merge(validate_functor(G), "G");
  if (!r.ok()) return r;
  const FinCategory& A = *F.source;
  const FinCategory& B = *G.source;
  if (c.phi.size() != A.object_count() * B.object_count()) {
    r.fail("BijectionShape", "phi has the wrong number of entries");
    return r;
  }
  for (ObjId a = 0; a < A.object_count(); ++a)
    for (ObjId b = 0; b < B.object_count(); ++b) {
      auto hb = B.hom(F.obj[a], b);
      auto ha = A.hom(G.obj[b], a);
      bool ok = hb.size() == ha.size() && is_permutation_of(c.bijection(a, b), hb.size());
      r.expect(ok, "Bijection", pair_name(A, a, B, b));
    }
  if (!r.ok()) return r;
  auto phi = [&](ObjId a, ObjId b, MorId h) { return A.hom(G.obj[b], a)[c.bijection(a, b)[B.hom_index(h)]]; };
  // Naturality in a: phi_{a,b}(h ∘ F(u)) = u ∘ phi_{a',b}(h) for u: a' -> a.
  for (MorId u = 0; u < A.morphism_count(); ++u) {
    ObjId a1 = A.src(u), a = A.tgt(u);
    for (ObjId b = 0; b < B.object_count(); ++b)
      for (MorId h : B.hom(F.obj[a1], b)) {
        bool ok = phi(a, b, B.compose(h, F.mor[u])) == A.compose(u, phi(a1, b, h));
        r.expect(ok, "NaturalityA", A.morphism_name(u) + " at " + B.object_name(b) + ", h=" + B.morphism_name(h));
      }
  }
  // Naturality in b: phi_{a,b'}(v ∘ h) = phi_{a,b}(h) ∘ G(v) for v: b -> b'.
  for (MorId v = 0; v < B.morphism_count(); ++v) {
    ObjId b = B.src(v), b1 = B.tgt(v);
    for (ObjId a = 0; a < A.object_count(); ++a)
      for (MorId h : B.hom(F.obj[a], b)) {
        bool ok = phi(a, b1, B.compose(v, h)) == A.compose(phi(a, b, h), G.mor[v]);
        r.expect(ok, "NaturalityB", B.morphism_name(v) + " at " + A.object_name(a) + ", h=" + B.morphism_name(h));
      }
  }
  if (!r.ok()) return r;
  UnitCounit uc = unit_counit(c, false);
  for (ObjId a = 0; a < A.object_count(); ++a)
    r.expect(B.compose(uc.epsilon[F.obj[a]], F.mor[uc.eta[a]]) == B.identity(F.obj[a]), "TriangleF",
             A.object_name(a));
  for (ObjId b = 0; b < B.object_count(); ++b)
    r.expect(A.compose(uc.eta[G.obj[b]], G.mor[uc.epsilon[b]]) == A.identity(G.obj[b]), "TriangleG",
             B.object_name(b));
  return r;
}

MutualLeftAdjunction to_mutual_left(const MutualRightAdjunction& c) {
  // F: A• -> B = (B•)•, G: B• -> A = (A•)•, and B•(Fa, b) = B(b, Fa).
  return MutualLeftAdjunction{c.left, c.right, c.phi};
}

MutualRightAdjunction to_mutual_right(const MutualLeftAdjunction& c) {
  return MutualRightAdjunction{c.left, c.right, c.phi};
}

Report verify_mutual_right(const MutualRightAdjunction& c) { return verify_mutual_left(to_mutual_left(c)); }

MutualLeftAdjunction transpose(const MutualLeftAdjunction& c) {
  const std::size_t na = c.left.source->object_count();
  const std::size_t nb = c.right.source->object_count();
  MutualLeftAdjunction t{c.right, c.left, std::vector<Permutation>(na * nb)};
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) t.phi[b * na + a] = invert(c.phi[a * nb + b]);
  return t;
}

UnitCounit unit_counit(const MutualLeftAdjunction& c, bool check) {
  if (check) {
    Report r = verify_mutual_left(c);
    if (!r.ok()) fail(ErrorCode::InvalidAdjunction, r.summary());
  }
  const FinCategory& A = *c.left.source;
  const FinCategory& B = *c.right.source;
  const Functor& F = c.left;
  const Functor& G = c.right;
  UnitCounit uc;
  uc.eta.resize(A.object_count());
  uc.epsilon.resize(B.object_count());
  for (ObjId a = 0; a < A.object_count(); ++a) {
    ObjId fa = F.obj[a];
    MorId id = B.identity(fa);
    uc.eta[a] = A.hom(G.obj[fa], a)[c.bijection(a, fa)[B.hom_index(id)]];
  }
  for (ObjId b = 0; b < B.object_count(); ++b) {
    ObjId gb = G.obj[b];
    MorId id = A.identity(gb);
    const Permutation& p = c.bijection(gb, b);
    auto pos = static_cast<std::uint32_t>(std::find(p.begin(), p.end(), A.hom_index(id)) - p.begin());
    uc.epsilon[b] = B.hom(F.obj[gb], b)[pos];
  }
  return uc;
}

OrdinaryAdjunction to_ordinary(const MutualLeftAdjunction& c) {
  UnitCounit uc = unit_counit(c);
  Functor L = opposite(c.left);  // A• -> B
  const Functor& R = c.right;    // B -> A•
  OrdinaryAdjunction out{L, R, {}, {}};
  out.eta = NatTransformation{identity_functor(L.source), compose(R, L), uc.eta};
  out.epsilon = NatTransformation{compose(L, R), identity_functor(R.source), uc.epsilon};
  return out;
}

Report verify_ordinary(const OrdinaryAdjunction& a) {
  Report r;
  const Functor& L = a.left;
  const Functor& R = a.right;
  if (!same_category(L.target, R.source) || !same_category(R.target, L.source)) {
    r.fail(std::string(to_string(ErrorCode::BoundaryMismatch)), "left/right are not opposed");
    return r;
  }
  r.merge(validate_natural(a.eta), "eta");
  r.merge(validate_natural(a.epsilon), "epsilon");
  if (!r.ok()) return r;
  const FinCategory& X = *L.source;
  const FinCategory& Y = *R.source;
  for (ObjId x = 0; x < X.object_count(); ++x)
    r.expect(Y.compose(a.epsilon.components[L.obj[x]], L.mor[a.eta.components[x]]) == Y.identity(L.obj[x]),
             "TriangleLeft", X.object_name(x));
  for (ObjId y = 0; y < Y.object_count(); ++y)
    r.expect(X.compose(R.mor[a.epsilon.components[y]], a.eta.components[R.obj[y]]) == X.identity(R.obj[y]),
             "TriangleRight", Y.object_name(y));
  return r;
}

MutualLeftAdjunction from_unit_counit(const OrdinaryAdjunction& adj) {
  Report r = verify_ordinary(adj);
  if (!r.ok()) fail(ErrorCode::TriangleFailure, r.summary());
  const Functor& L = adj.left;   // X -> Y
  const Functor& R = adj.right;  // Y -> X
  const FinCategory& X = *L.source;
  const FinCategory& Y = *R.source;
  MutualLeftAdjunction m{opposite(L), R, {}};
  // A = X•, B = Y; phi_{a,b}(h) = R(h) ∘ eta_a in X(a, Rb) = A(Rb, a).
  m.phi.resize(X.object_count() * Y.object_count());
  for (ObjId a = 0; a < X.object_count(); ++a)
    for (ObjId b = 0; b < Y.object_count(); ++b) {
      auto hb = Y.hom(L.obj[a], b);
      Permutation p(hb.size());
      for (std::size_t i = 0; i < hb.size(); ++i)
        p[i] = X.hom_index(X.compose(R.mor[hb[i]], adj.eta.components[a]));
      m.phi[std::size_t{a} * Y.object_count() + b] = std::move(p);
    }
  return m;
}

std::vector<MorId> mate_components(const FinCategory& Xp, const Functor& R, const Functor& Rp,
                                   const Functor& S, const Functor& T,
                                   std::span<const MorId> eps, std::span<const MorId> eta_p,
                                   std::span<const MorId> alpha) {
  std::vector<MorId> out(R.obj.size());
  for (ObjId y = 0; y < out.size(); ++y) {
    ObjId ry = R.obj[y];
    MorId a = Rp.mor[alpha[ry]];
    MorId e = Rp.mor[T.mor[eps[y]]];
    out[y] = Xp.compose(Xp.compose(e, a), eta_p[S.obj[ry]]);
  }
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::BoundaryMismatch, what);
}

}  // namespace

NatTransformation mate1(const NatTransformation& alpha, const Functor& S, const Functor& T,
                        const OrdinaryAdjunction& adj, const OrdinaryAdjunction& adj2) {
  require(alpha.source == compose(adj2.left, S), "mate1: source of alpha is not L'S");
  require(alpha.target == compose(T, adj.left), "mate1: target of alpha is not TL");
  NatTransformation out{compose(S, adj.right), compose(adj2.right, T), {}};
  out.components = mate_components(*adj2.left.source, adj.right, adj2.right, S, T,
                                   adj.epsilon.components, adj2.eta.components, alpha.components);
  return out;
}

NatTransformation mate1_inverse(const NatTransformation& beta, const Functor& S, const Functor& T,
                                const OrdinaryAdjunction& adj, const OrdinaryAdjunction& adj2) {
  require(beta.source == compose(S, adj.right), "mate1_inverse: source of beta is not SR");
  require(beta.target == compose(adj2.right, T), "mate1_inverse: target of beta is not R'T");
  const Functor& L = adj.left;
  const Functor& Lp = adj2.left;
  const FinCategory& Yp = *Lp.target;
  NatTransformation out{compose(Lp, S), compose(T, L), std::vector<MorId>(L.source->object_count())};
  for (ObjId x = 0; x < out.components.size(); ++x) {
    ObjId lx = L.obj[x];
    MorId first = Lp.mor[S.mor[adj.eta.components[x]]];
    MorId second = Lp.mor[beta.components[lx]];
    MorId third = adj2.epsilon.components[T.obj[lx]];
    out.components[x] = Yp.compose(third, Yp.compose(second, first));
  }
  return out;
}

std::vector<MorId> mate_mutual(const MutualLeftAdjunction& m, const UnitCounit& uc,
                               const MutualLeftAdjunction& m2, const UnitCounit& uc2,
                               const Functor& SA, const Functor& SB, std::span<const MorId> alpha) {
  // Classical reading: X = A•, L = F•, R = G; S = SA•, T = SB. Composition in
  // X' = A'• is composition in A' with the arguments swapped.
  const FinCategory& Ap = *m2.left.source;
  const Functor& G = m.right;
  const Functor& Gp = m2.right;
  std::vector<MorId> out(G.obj.size());
  for (ObjId b = 0; b < out.size(); ++b) {
    ObjId gb = G.obj[b];
    MorId a = Gp.mor[alpha[gb]];
    MorId e = Gp.mor[SB.mor[uc.epsilon[b]]];
    // eta'_{SA Gb} ∘ G'(alpha_{Gb}) ∘ G'(SB eps_b), all in A'.
    out[b] = Ap.compose(uc2.eta[SA.obj[gb]], Ap.compose(a, e));
  }
  return out;
}

std::vector<MorId> mate_mutual(const MutualLeftAdjunction& m, const MutualLeftAdjunction& m2,
                               const Functor& SA, const Functor& SB, std::span<const MorId> alpha) {
  require(same_category(SA.source, m.a_cat()) && same_category(SA.target, m2.a_cat()),
          "mate: side SA does not match the adjunctions");
  require(same_category(SB.source, m.b_cat()) && same_category(SB.target, m2.b_cat()),
          "mate: side SB does not match the adjunctions");
  require(alpha.size() == m.a_cat()->object_count(), "mate: component count");
  return mate_mutual(m, unit_counit(m, false), m2, unit_counit(m2, false), SA, SB, alpha);
}

MutualLeftAdjunction compose_mutual(const MutualLeftAdjunction& m1, const MutualLeftAdjunction& m2) {
  // m1 on (X, Y), m2 on (Y•, Z).
  require(same_category(m2.left.source, opposite(m1.right.source)),
          "compose_mutual: middle categories do not match");
  MutualLeftAdjunction m{compose(m2.left, m1.left), compose(m1.right, m2.right), {}};
  const std::size_t nx = m1.left.source->object_count();
  const std::size_t nz = m2.right.source->object_count();
  m.phi.resize(nx * nz);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t z = 0; z < nz; ++z) {
      ObjId f1x = m1.left.obj[x];
      ObjId g2z = m2.right.obj[z];
      const Permutation& p2 = m2.bijection(f1x, static_cast<ObjId>(z));
      const Permutation& p1 = m1.bijection(static_cast<ObjId>(x), g2z);
      Permutation p(p2.size());
      for (std::size_t i = 0; i < p2.size(); ++i) p[i] = p1[p2[i]];
      m.phi[x * nz + z] = std::move(p);
    }
  return m;
}

AdjointSearch adjoint_search(const Functor& F) {
  const FinCategory& A = *F.source;
  CategoryPtr Bp = opposite(F.target);
  const FinCategory& B = *Bp;
  AdjointSearch out;
  std::vector<ObjId> gobj(B.object_count());
  std::vector<MorId> elem(B.object_count());
  std::vector<Permutation> phi(A.object_count() * B.object_count());
  for (ObjId b = 0; b < B.object_count(); ++b) {
    bool found = false;
    for (ObjId x = 0; x < A.object_count() && !found; ++x)
      for (MorId e : B.hom(F.obj[x], b)) {
        // theta_e : A(x, a) -> B(Fa, b), h |-> e ∘ F(h); must be bijective for all a.
        bool ok = true;
        for (ObjId a = 0; a < A.object_count() && ok; ++a) {
          auto src = A.hom(x, a);
          auto dst = B.hom(F.obj[a], b);
          if (src.size() != dst.size()) {
            ok = false;
            break;
          }
          Permutation inv(dst.size(), ~std::uint32_t{0});
          for (std::uint32_t i = 0; i < src.size(); ++i) {
            auto j = B.hom_index(B.compose(e, F.mor[src[i]]));
            if (inv[j] != ~std::uint32_t{0}) {
              ok = false;
              break;
            }
            inv[j] = i;
          }
          if (ok) phi[std::size_t{a} * B.object_count() + b] = std::move(inv);
        }
        if (ok) {
          gobj[b] = x;
          elem[b] = e;
          found = true;
          break;
        }
      }
    if (!found) {
      out.witness = b;
      return out;
    }
  }
  MutualLeftAdjunction m{F, Functor{Bp, opposite(F.source), gobj, std::vector<MorId>(B.morphism_count())},
                         std::move(phi)};
  // G(v) = phi_{Gb, b'}(v ∘ e_b) for v: b -> b'.
  for (MorId v = 0; v < B.morphism_count(); ++v) {
    ObjId b = B.src(v), b1 = B.tgt(v);
    MorId h = B.compose(v, elem[b]);
    m.right.mor[v] = A.hom(gobj[b1], gobj[b])[m.bijection(gobj[b], b1)[B.hom_index(h)]];
  }
  out.adjunction = std::move(m);
  return out;
}

}  // namespace catmates
