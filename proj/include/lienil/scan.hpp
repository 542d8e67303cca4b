#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lienil/classify.hpp"
#include "lienil/group.hpp"

namespace lienil {

struct ScanOptions {
  std::optional<std::string> group; // only this catalog entry
  std::optional<unsigned> prime;    // replaces the declared primes
  std::size_t max_order = default_max_order;
  unsigned jobs = 1;
};

struct ScanResult {
  std::vector<CheckReport> reports; // sorted by (name, p)
  std::vector<std::string> skipped; // entries whose closure exceeded max_order
};

/// cross_check over every selected (group, prime) pair, up to `jobs` at a time.
ScanResult scan_catalog(const std::vector<GroupSpec> &catalog, const ScanOptions &options);

} // namespace lienil
