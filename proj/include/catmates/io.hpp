#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "catmates/cdm.hpp"
#include "catmates/mates.hpp"

// JSON documents: fincat/1, functor/1, adj/1, madj/1, twocell/1, universe/1.
//
// Wherever a category is expected, a reference may be a path (relative to the
// referring file), "builtin:NAME" (H3, B2, Z2, C<n>), {"opposite": ref},
// {"product": [refs]}, {"arrow": ref} or an inline fincat/1 document. Functor,
// adjunction and madj references are paths or inline documents. Objects and
// morphisms are named by their ids; integers are accepted as stored indices.
namespace catmates::io {

using Json = nlohmann::ordered_json;

// Reads files once per canonical path, so repeated references share pointers.
class Loader {
 public:
  Json read(const std::filesystem::path& p);  // ParseError on I/O or syntax errors

  CategoryPtr category(const Json& ref, const std::filesystem::path& dir);
  // Unvalidated tables of an inline or file fincat/1 document.
  RawCategory raw_category(const Json& doc);
  Functor functor(const Json& ref, const std::filesystem::path& dir);
  MutualLeftAdjunction adjunction(const Json& ref, const std::filesystem::path& dir);
  // A madj/1 document without "isos" and with only F_0 in "funs" is completed
  // by searching for the one-variable adjoints.
  MadjPtr madj(const Json& ref, const std::filesystem::path& dir);
  TwoCell twocell(const Json& ref, const std::filesystem::path& dir);
  // "generate": {"cells_per_madj": K, "seed": s} builds thin_universe(cats, ...);
  // seed_override replaces s when set.
  Universe universe(const Json& ref, const std::filesystem::path& dir,
                    std::optional<std::uint64_t> seed_override = std::nullopt);
  std::vector<std::size_t> anchors(const Json& doc);

 private:
  std::pair<Json, std::filesystem::path> resolve(const Json& ref, const std::filesystem::path& dir);

  std::map<std::filesystem::path, Json> files_;
  std::map<std::filesystem::path, CategoryPtr> cats_;
  std::map<std::filesystem::path, MadjPtr> madjs_;
};

// Schema tag of a document; ParseError when absent.
std::string schema_of(const Json& doc);

Json category_ref(const CategoryPtr& c);  // compact reference, inline tables as a last resort
Json to_json(const FinCategory& c);
Json to_json(const Functor& f);
Json to_json(const MutualLeftAdjunction& a);
Json to_json(const MultiAdjunction& m);
Json to_json(const TwoCell& t);
Json to_json(const Universe& u);
Json to_json(const Report& r);

}  // namespace catmates::io
