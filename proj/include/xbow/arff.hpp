#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xbow/attribute_spec.hpp"
#include "xbow/dataset.hpp"

namespace xbow {

struct ArffAttribute {
  enum class Type { numeric, string, nominal };

  std::string name;
  Type type = Type::numeric;
  std::vector<std::string> nominal_values;
};

struct ArffFile {
  std::string relation;
  std::vector<ArffAttribute> attributes;
  std::vector<std::vector<std::string>> rows;  // unquoted field values
  std::vector<std::size_t> row_lines;          // 1-based source line per row
};

/// Parses the dense ARFF subset: @relation, @attribute (numeric, real,
/// integer, string, date, nominal) and @data. '%' starts a comment.
ArffFile parse_arff(std::string_view text);

/// Role inference from attribute declarations:
///   string/nominal "name"               -> name
///   numeric "frameTime" or "time"       -> time
///   "class" or "label", or any nominal  -> label (the last one wins)
///   other string                        -> text
///   other numeric                       -> numeric(1)
AttributeSpec infer_arff_spec(const std::vector<ArffAttribute>& attributes);

/// Reads an ARFF file. An explicit spec replaces inference and must cover
/// every declared attribute.
std::pair<Dataset, AttributeSpec> read_arff(const std::filesystem::path& path,
                                            const std::optional<AttributeSpec>& spec = {});

std::pair<Dataset, AttributeSpec> parse_arff_dataset(std::string_view text,
                                                     const std::optional<AttributeSpec>& spec = {});

}  // namespace xbow
