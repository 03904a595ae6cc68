#pragma once

#include <string>

#include "group.hpp"

namespace charposet {

/// Parses {"name", "cayley"} or {"name", "degree", "perm_gens"}.
GroupTable group_from_json(const std::string& text, const Limits& limits = {});
GroupTable group_from_file(const std::string& path, const Limits& limits = {});

/// "@path" reads a group file; anything else is a built-in family spec.
GroupTable load_group(const std::string& source, const Limits& limits = {});

}  // namespace charposet
