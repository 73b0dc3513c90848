#pragma once

#include <string>

#include "group.hpp"

namespace gtpa {

// Build a group context from the JSON config format. Groups can be given as
// an explicit table, as a closed list of named permutations, or as
// permutation generators (closed breadth-first). See README.md for the schema.
GroupContext load_context_json(const std::string& json_text);
GroupContext load_context_file(const std::string& path);

}  // namespace gtpa
