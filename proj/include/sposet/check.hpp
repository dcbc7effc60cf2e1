#pragma once

#include <algorithm>
#include <span>
#include <string>

namespace sposet {

/// Outcome of one named verification. `applicable` is false when the
/// statement is only claimed for a class the input does not belong to;
/// `holds` is still evaluated where it is defined.
struct Check {
  std::string name;
  bool applicable = true;
  bool holds = false;
  std::string note;

  bool ok() const { return !applicable || holds; }
  friend bool operator==(const Check&, const Check&) = default;
};

inline bool all_ok(std::span<const Check> checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

}  // namespace sposet
