#pragma once

#include <memory>
#include <vector>

#include "catmates/multiadjoint.hpp"

namespace catmates {

using MadjPtr = std::shared_ptr<const MultiAdjunction>;

inline MadjPtr share(MultiAdjunction m) { return std::make_shared<const MultiAdjunction>(std::move(m)); }

// A 2-cell from source (cats A_i, functors F_i) to target (cats A'_i, F'_i)
// with sides S_i : A_i -> A'_i. Anchored at i, the component at an input tuple
// â of F_i is a morphism F'_i(S â) -> S_i F_i(â) in A'_i; components are
// indexed like the objects of F_i's source. For right adjunctions the same ids
// are read in the opposite categories.
struct TwoCell {
  MadjPtr source;
  MadjPtr target;
  std::vector<Functor> sides;
  std::size_t anchor = 0;
  std::vector<MorId> components;

  std::size_t arity() const { return source->arity(); }
  bool operator==(const TwoCell& o) const;
};

Report validate_two_cell(const TwoCell& t);

// Throws InvalidAnchor (j == anchor or out of range) or BoundaryMismatch.
TwoCell mate_n(const TwoCell& t, std::size_t j);
// [t, t_01, (t_01)_12, ...] for t anchored at 0; n+1 cells.
std::vector<TwoCell> mate_orbit(const TwoCell& t);

// The element e^{i->j} = phi_{i->j}(id) in A_j(F_j(...), a_j) at the full tuple
// with a_i replaced by F_i(â_i).
MorId transported_identity(const MultiAdjunction& m, const MadjLayout& L, std::size_t i, std::size_t j,
                           std::span<const ObjId> full);

// e^{j->k}[a_j := F_j(â_j)] ∘ F_k(..., e^{i->j}, ...) = e^{i->k} for i != j != k,
// with e^{i->i} = id (the case i == k is the pair of triangle identities).
Report check_triangles(const MultiAdjunction& m);

// Pairwise involution, transitivity (t_ij)_jk = t_ik, the orbit of length n+1,
// and the generalized triangles of every adjunction involved.
Report check_mate_coherence(std::span<const TwoCell> cells);

// The same data read in the right-adjunction convention: madjs dualized,
// sides S•, identical components. Involutive.
TwoCell dual_cell(const TwoCell& t);

// Cell operations in the anchor-0 convention (BoundaryMismatch otherwise).
TwoCell identity_cell(const MadjPtr& f);
// The identity multimap on a side S : X -> X' (a 1-ary cell between identity adjunctions).
TwoCell identity_on_side(const Functor& S);
// beta on g, alphas[i] on f_i: the cell on compose_multi(g, f).
TwoCell compose_cells(const TwoCell& beta, std::span<const TwoCell> alphas);
// beta ∘_i alpha, padding the other slots with identity_on_side (i is 1-based).
TwoCell compose_cells_at(const TwoCell& beta, std::size_t i, const TwoCell& alpha);
// beta * alpha for alpha.target == beta.source: sides T_i S_i, components T_0(alpha) ∘ beta_S.
TwoCell horizontal_cells(const TwoCell& beta, const TwoCell& alpha);
// Mate to anchor 1 then rotate; the cyclic action on anchor-0 cells.
TwoCell sigma_cell(const TwoCell& t);

// Every natural family of components for the given boundary, in lexicographic
// order of component tables, at most limit of them.
std::vector<TwoCell> enumerate_cells(const MadjPtr& source, const MadjPtr& target, const std::vector<Functor>& sides,
                                     std::size_t anchor = 0, std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace catmates
