#pragma once

// Published examples, keyed by dotted names such as "gl8.u" or
// "gl12.y.word". Words are compact generator strings (1-9, a, b, c).

#include <string>
#include <string_view>
#include <vector>

namespace cellgeom {

struct ReferenceEntry {
  std::string key;
  std::string value;
  std::string location;
};

const std::vector<ReferenceEntry>& reference_data();
/// Throws Error for an unknown key.
const ReferenceEntry& reference_entry(std::string_view key);
const std::string& reference_value(std::string_view key);

/// Block layout of a displayed normal slice: rows separated by '/', blocks by
/// ','. Labels are "0", "J" or a block name such as "A1".
std::vector<std::vector<std::string>> parse_block_layout(const std::string& s);

}  // namespace cellgeom
