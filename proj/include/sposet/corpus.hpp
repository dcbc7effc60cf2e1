#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sposet/poset.hpp"

namespace sposet::corpus {

struct CorpusEntry {
  std::string name;
  std::string description;
  SimplicialPoset poset;
  nlohmann::ordered_json expected;  // golden fragment; null when absent
};

/// Names in listing order.
const std::vector<std::string>& names();

/// Throws UnknownName.
CorpusEntry entry(std::string_view name);
SimplicialPoset poset(std::string_view name);

}  // namespace sposet::corpus
