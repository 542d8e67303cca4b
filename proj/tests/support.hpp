#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lienil/algebra.hpp"
#include "lienil/catalog.hpp"
#include "lienil/error.hpp"
#include "lienil/group.hpp"

namespace testing {

inline const std::vector<lienil::GroupSpec> &catalog() {
  static const auto specs = lienil::load_catalog(LIENIL_TEST_CATALOG);
  return specs;
}

inline const lienil::GroupSpec &spec(const std::string &name) {
  for (const auto &s : catalog())
    if (s.name == name)
      return s;
  throw lienil::Error(lienil::Errc::ParseError, "no catalog entry " + name);
}

inline std::shared_ptr<const lienil::Group> group(const std::string &name) {
  return std::make_shared<const lienil::Group>(lienil::build_group(spec(name).generators));
}

inline lienil::AlgebraContext algebra(const std::string &name, unsigned p) {
  return lienil::AlgebraContext(group(name), p);
}

inline std::vector<lienil::Permutation> perms(std::vector<std::vector<std::uint32_t>> images) {
  std::vector<lienil::Permutation> out;
  for (auto &v : images)
    out.emplace_back(std::move(v));
  return out;
}

/// True when `f` throws lienil::Error with the given code.
template <typename F> bool throws_code(F &&f, lienil::Errc code) {
  try {
    f();
  } catch (const lienil::Error &e) {
    return e.code() == code;
  }
  return false;
}

} // namespace testing
