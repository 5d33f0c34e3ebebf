#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "catmates/mates.hpp"
#include "catmates/multicategory.hpp"

namespace catmates {

// Finite data for an instance of MAdj: 0-cells, horizontal 1-cells (functors
// between listed categories), vertical 1-cells and seed 2-cells. All
// adjunctions share one chirality.
struct Universe {
  std::vector<CategoryPtr> cats;
  std::vector<Functor> functors;
  std::vector<MultiAdjunction> madjs;
  std::vector<TwoCell> cells;
  std::size_t arity_bound = 2;
};

struct BuildOptions {
  // anchors[n]: the anchor of the stored 2-cells of arity n; empty means all 0.
  std::vector<std::size_t> anchors;
  // Composites checked for closure at build time when their number is at most this.
  std::size_t closure_budget = 200000;
};

class CyclicDoubleMulticategory;

// 0-cells and vertical 1-cells: categories and multivariable adjunctions. A
// multimap with cats (c0, ..., cn) has inputs c1..cn and output c0•.
class VerticalView {
 public:
  std::size_t object_count() const;
  std::size_t map_count() const;
  std::size_t arity_bound() const;
  std::span<const MapId> maps_into(ObjIx x) const;
  std::span<const ObjIx> inputs(MapId f) const;
  ObjIx output(MapId f) const;
  MapId identity(ObjIx x) const;
  MapId compose(MapId g, std::span<const MapId> fs) const;
  std::string object_name(ObjIx x) const;
  std::string map_name(MapId f) const;
  ObjIx star(ObjIx x) const;
  MapId sigma(MapId f) const;

 private:
  friend class CyclicDoubleMulticategory;
  explicit VerticalView(const CyclicDoubleMulticategory& d) : d_(&d) {}
  const CyclicDoubleMulticategory* d_;
};

// Horizontal 1-cells and 2-cells: functors and cells. A cell has inputs
// sides[1..n] and output sides[0]•. The laws range over the seed cells;
// composites and images of sigma are added on demand.
class CellView {
 public:
  std::size_t object_count() const;
  std::size_t map_count() const;
  std::size_t arity_bound() const;
  std::span<const MapId> maps_into(ObjIx x) const;
  std::span<const ObjIx> inputs(MapId f) const;
  ObjIx output(MapId f) const;
  MapId identity(ObjIx x) const;
  MapId compose(MapId g, std::span<const MapId> fs) const;
  std::string object_name(ObjIx x) const;
  std::string map_name(MapId f) const;
  ObjIx star(ObjIx x) const;
  MapId sigma(MapId f) const;

 private:
  friend class CyclicDoubleMulticategory;
  explicit CellView(const CyclicDoubleMulticategory& d) : d_(&d) {}
  const CyclicDoubleMulticategory* d_;
};

// MAdj_w (or its right-adjunction counterpart) on a finite universe. Ids:
// objects of the vertical view index cats, objects of the cell view index
// functors, maps index madjs and cells; the first ids are the universe's own
// entries in order. Operations not native to the stored anchors go through
// the mates correspondence: transport to anchor 0, compute, transport back.
class CyclicDoubleMulticategory {
 public:
  CyclicDoubleMulticategory(CyclicDoubleMulticategory&&) noexcept;
  CyclicDoubleMulticategory& operator=(CyclicDoubleMulticategory&&) noexcept;
  ~CyclicDoubleMulticategory();

  const Universe& universe() const;
  Chirality chirality() const;
  // Anchor used for stored cells of arity n.
  std::size_t anchor(std::size_t n) const;
  const std::vector<std::size_t>& anchors() const;

  VerticalView vertical() const { return VerticalView(*this); }
  CellView cells() const { return CellView(*this); }

  const CategoryPtr& cat(ObjIx x) const;
  const Functor& functor(ObjIx s) const;
  const MultiAdjunction& madj(MapId f) const;
  const TwoCell& cell(MapId a) const;

  // Structure maps: s, t : B -> A, I : A -> B and gamma : B x_A B -> B, on
  // objects and on maps. kNoMap / kNoMap-like results mean "outside the universe".
  ObjIx source_object(ObjIx s) const;
  ObjIx target_object(ObjIx s) const;
  MapId source_map(MapId a) const;
  MapId target_map(MapId a) const;
  ObjIx unit_object(ObjIx x) const;
  MapId unit_map(MapId f) const;
  ObjIx horizontal_object(ObjIx t, ObjIx s) const;  // t∘s
  MapId horizontal_map(MapId b, MapId a) const;     // b * a, a.target == b.source

  // Interning of arbitrary data: the id of an equal entry, adding it if new.
  // Vertical 1-cells are not added; kNoMap when absent.
  ObjIx functor_id(const Functor& f) const;
  MapId madj_id(const MultiAdjunction& m) const;
  MapId cell_id(const TwoCell& t) const;

  // Perturbation hook: sigma on 2-cells becomes the identity.
  void perturb_cell_sigma_identity();

  // Opaque; constructed by build_madj, reindex_w and lr_duality.
  struct State;
  explicit CyclicDoubleMulticategory(std::unique_ptr<State> s);

 private:
  friend class VerticalView;
  friend class CellView;
  std::unique_ptr<State> s_;
};

// Throws UniverseNotClosed (naming the missing entry), InvalidAnchor or
// BoundaryMismatch (mixed chirality, cells over unknown adjunctions).
CyclicDoubleMulticategory build_madj(Universe u, const BuildOptions& opt = {});

// Laws 1-6 of the category-object description, the remaining category-object
// laws (s, t, I, gamma are multicategory maps; horizontal units and
// associativity) and interchange, plus the multicategory and cyclic axioms of
// both views (prefixed "vertical" and "cells").
Report check_category_object(const CyclicDoubleMulticategory& d, const CheckOptions& opt = {});

// Stored cells of arity n moved to anchor w[n] (missing entries mean 0).
CyclicDoubleMulticategory reindex_w(const CyclicDoubleMulticategory& d, std::vector<std::size_t> w);
// Opposite categories and functors, dualized adjunctions, dual cells.
CyclicDoubleMulticategory lr_duality(const CyclicDoubleMulticategory& d);

// Equality of the stored universes and anchors, entry by entry.
bool same_instance(const CyclicDoubleMulticategory& a, const CyclicDoubleMulticategory& b);

// cats plus their missing opposites, in order.
std::vector<CategoryPtr> close_under_opposite(std::vector<CategoryPtr> cats);

// Every functor between listed categories, in list order of (source, target).
std::vector<Functor> all_functors(std::span<const CategoryPtr> cats);

// Every left multivariable adjunction of arity <= bound among the categories
// whose primary functor has one-variable adjoints, found by adjoint_search.
std::vector<MultiAdjunction> all_madjs(std::span<const CategoryPtr> cats, std::size_t bound);

// The universe of a list of thin categories: closed under opposites, all
// functors, all adjunctions up to the bound, and as seed cells the identity
// cells, the identities on every functor and up to cells_per_madj random
// cells out of each adjunction.
Universe thin_universe(std::vector<CategoryPtr> cats, std::size_t bound, std::size_t cells_per_madj,
                       std::uint64_t seed);

}  // namespace catmates
