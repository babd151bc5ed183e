#ifndef SGT_IO_HPP_
#define SGT_IO_HPP_

#include <filesystem>  // for path
#include <map>         // for map
#include <string>      // for string

#include "json.hpp"

#include "sgt/constructions.hpp"
#include "sgt/report.hpp"
#include "sgt/semigroup.hpp"

namespace sgt {

  using Json = nlohmann::ordered_json;

  //! {"name", "order", "table", optional "labels", optional "subsets"}.
  struct SemigroupFile {
    std::string                       name;
    FiniteSemigroup                   semigroup;
    std::map<std::string, ElementSet> subsets;

    bool operator==(SemigroupFile const&) const = default;
  };

  //! Throws SchemaError on a malformed document and the validate_table
  //! errors on a malformed table.  `where` prefixes error messages.
  SemigroupFile semigroup_from_json(Json const& j, std::string const& where = "");
  Json          to_json(SemigroupFile const& f);

  //! Reads JSON from disk; SchemaError names the path.
  Json          read_json(std::filesystem::path const& path);
  void          write_json(std::filesystem::path const& path, Json const& j);
  SemigroupFile parse_semigroup(std::filesystem::path const& path);
  void          serialize(SemigroupFile const& f, std::filesystem::path const& path);

  //! Input files of the construct command.  Nested semigroups use the
  //! SemigroupFile schema; maps are objects keyed "x,y" then "f,g".
  StructureSkeleton skeleton_from_json(Json const& j);
  StructureInput    structure_input_from_json(Json const& j);
  ActionTable       action_table_from_json(Json const& j);
  Json              to_json(StructureSkeleton const& sk);
  Json              to_json(StructureInput const& in);
  Json              to_json(ActionTable const& in);

  //! {"l": file with subset "transversal", "r": likewise, optional
  //! "identification": {"x": a}}.
  struct SpinedInput {
    SpinedFactor                              l;
    SpinedFactor                              r;
    std::optional<std::map<Element, Element>> identification;
  };

  SpinedInput spined_input_from_json(Json const& j);
  Json        to_json(SpinedInput const& in);

  Json to_json(Report const& r);
  Json to_json(BuiltSemigroup const& b);

}  // namespace sgt

#endif  // SGT_IO_HPP_
