#pragma once

// The synthetic TimeML corpus used to exercise every check.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace tmlwb {

// filename -> file content, in filename order. Byte-for-byte deterministic.
std::map<std::string, std::string> fixture_files();

// Writes fixture_files() into `dir` (created if needed) and returns the
// paths written.
std::vector<std::filesystem::path> generate_fixtures(const std::filesystem::path& dir);

} // namespace tmlwb
