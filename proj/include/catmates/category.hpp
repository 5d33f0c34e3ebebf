#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catmates/report.hpp"

namespace catmates {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

struct Morphism {
  std::string id;
  ObjId src = 0;
  ObjId tgt = 0;
  bool operator==(const Morphism&) const = default;
};

class FinCategory;
using CategoryPtr = std::shared_ptr<const FinCategory>;

enum class Derivation { Base, Opposite, Product, Arrow };

// Unvalidated tables as read from a file or written by hand.
struct RawCategory {
  struct Arrow {
    std::string id, src, tgt;
  };
  struct Composite {
    std::string g, f, gf;
  };
  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object, morphism
  std::vector<Composite> composition;
};

class FinCategory {
 public:
  struct Tables {
    std::string name;
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<MorId> identities;
  };
  using Composer = std::function<MorId(MorId g, MorId f)>;

  // Trusted construction: composer is queried once per composable pair and
  // the laws are not re-checked. Used for derived categories.
  static CategoryPtr assemble(Tables t, const Composer& composer,
                              Derivation how = Derivation::Base,
                              std::vector<CategoryPtr> parents = {},
                              std::vector<std::pair<MorId, MorId>> squares = {});

  const std::string& name() const { return t_.name; }
  std::size_t object_count() const { return t_.objects.size(); }
  std::size_t morphism_count() const { return t_.morphisms.size(); }

  const std::string& object_name(ObjId a) const { return t_.objects[a]; }
  const Morphism& morphism(MorId m) const { return t_.morphisms[m]; }
  const std::string& morphism_name(MorId m) const { return t_.morphisms[m].id; }
  ObjId src(MorId m) const { return t_.morphisms[m].src; }
  ObjId tgt(MorId m) const { return t_.morphisms[m].tgt; }
  MorId identity(ObjId a) const { return t_.identities[a]; }
  bool is_identity(MorId m) const { return t_.identities[src(m)] == m; }

  std::optional<ObjId> find_object(std::string_view id) const;
  std::optional<MorId> find_morphism(std::string_view id) const;
  ObjId object(std::string_view id) const;      // throws ParseError
  MorId morphism_id(std::string_view id) const;  // throws ParseError

  // g∘f; requires src(g) == tgt(f).
  MorId compose(MorId g, MorId f) const {
    return comp_[comp_offset_[f] + out_pos_[g]];
  }
  std::optional<MorId> try_compose(MorId g, MorId f) const;

  std::span<const MorId> hom(ObjId a, ObjId b) const;
  // Position of m inside hom(src(m), tgt(m)).
  std::uint32_t hom_index(MorId m) const { return hom_pos_[m]; }
  std::span<const MorId> outgoing(ObjId a) const;
  bool is_thin() const { return thin_; }

  Derivation derivation() const { return how_; }
  // Factors of a product, or the single base of an opposite/arrow category.
  const std::vector<CategoryPtr>& parents() const { return parents_; }
  // For arrow categories: the pair (u, v) of each square.
  const std::vector<std::pair<MorId, MorId>>& squares() const { return squares_; }

  bool same_tables(const FinCategory& other) const;
  const Tables& tables() const { return t_; }

 private:
  FinCategory() = default;
  void build_indices();

  Tables t_;
  Derivation how_ = Derivation::Base;
  std::vector<CategoryPtr> parents_;
  std::vector<std::pair<MorId, MorId>> squares_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
  std::vector<std::uint32_t> out_offset_;  // per object, into out_list_
  std::vector<MorId> out_list_;
  std::vector<std::uint32_t> out_pos_;      // per morphism
  std::vector<std::uint32_t> comp_offset_;  // per morphism f
  std::vector<MorId> comp_;
  std::vector<MorId> hom_list_;
  std::vector<std::uint32_t> hom_offset_;  // dense (a,b) index when small
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> hom_sparse_;
  std::vector<std::uint32_t> hom_pos_;
  bool thin_ = true;

  friend struct CategoryAccess;
};

bool same_category(const CategoryPtr& a, const CategoryPtr& b);

struct CategoryCheck {
  CategoryPtr category;  // null when violations is nonempty
  std::vector<Violation> violations;
};

CategoryCheck validate_category(const RawCategory& raw);
// Throws Error with the first violation's code when raw is not a category.
CategoryPtr make_category(const RawCategory& raw);

// Exhaustive associativity and identity check of an already built category.
Report check_category_laws(const FinCategory& c);

// Morphism-count bound for derived categories. Defaults to 10^6, or the value
// of MADJ_MAX_SIZE when set.
std::size_t default_max_size();
void set_default_max_size(std::size_t n);

CategoryPtr opposite(const CategoryPtr& c);
CategoryPtr terminal_category();
CategoryPtr product(std::span<const CategoryPtr> cs, std::size_t max_size = default_max_size());
CategoryPtr product(std::initializer_list<CategoryPtr> cs);
CategoryPtr arrow_category(const CategoryPtr& c, std::size_t max_size = default_max_size());

// Mixed-radix index of a tuple of components in a product of categories of
// the given sizes; slot 0 is most significant. An empty tuple maps to 0.
class TupleSpace {
 public:
  TupleSpace() = default;
  explicit TupleSpace(std::vector<std::size_t> sizes);

  std::size_t size() const { return total_; }
  std::size_t arity() const { return sizes_.size(); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }

  std::size_t index(std::span<const std::uint32_t> tuple) const;
  std::vector<std::uint32_t> decode(std::size_t index) const;
  void decode_into(std::size_t index, std::span<std::uint32_t> out) const;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> stride_;
  std::size_t total_ = 1;
};

TupleSpace object_space(std::span<const CategoryPtr> cs);
TupleSpace morphism_space(std::span<const CategoryPtr> cs);

// Category-valued helpers used throughout tests and fixtures.
CategoryPtr chain(std::size_t n, std::string name = {});
CategoryPtr poset_category(std::string name, std::vector<std::string> elements,
                           const std::function<bool(std::size_t, std::size_t)>& leq);

}  // namespace catmates
