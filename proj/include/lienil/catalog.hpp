#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lienil/group.hpp"

namespace lienil {

/// Parses a catalog document: a JSON list of
/// {"name", "degree", "generators": [[images...], ...], "primes": [...]}.
/// Throws Errc::ParseError (with line/column where known) or Errc::DegreeMismatch.
std::vector<GroupSpec> parse_catalog(std::string_view text);

std::vector<GroupSpec> load_catalog(const std::filesystem::path &path);

/// Compact single-entry serialization, e.g.
/// {"name":"C3","degree":3,"generators":[[2,3,1]],"primes":[3]}
std::string to_catalog_entry(const GroupSpec &spec);

} // namespace lienil
