#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lienil {

using Elem = std::uint32_t;

/// Permutation of {1..degree}, stored as 1-based images.
class Permutation {
public:
  /// Throws Errc::InvalidPermutation unless `images` is a bijection on {1..n}.
  explicit Permutation(std::vector<std::uint32_t> images);

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<std::uint32_t> &images() const noexcept { return images_; }

  /// Image of a 0-based point, 0-based.
  std::uint32_t apply0(std::uint32_t point) const { return images_[point] - 1; }

  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  std::vector<std::uint32_t> images_;
};

/// A catalog entry.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<unsigned> primes;

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// Sorted set of element indices of a parent group.
class Subgroup {
public:
  Subgroup() = default;
  explicit Subgroup(std::vector<Elem> members);

  const std::vector<Elem> &members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem x) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }

  friend bool operator==(const Subgroup &, const Subgroup &) = default;

private:
  std::vector<Elem> members_;
};

/// Finite group as a Cayley table. Element 0 is the identity; elements are
/// numbered breadth-first from the identity, right-multiplying by the
/// generators in declared order. The product x*y means "x, then y" on the
/// underlying permutations.
class Group {
public:
  static constexpr Elem identity = 0;

  Group(std::vector<Elem> table, std::vector<Elem> inverses,
        std::vector<Elem> generators, std::vector<std::string> names);

  std::size_t order() const noexcept { return inv_.size(); }
  Elem mul(Elem x, Elem y) const { return table_[std::size_t(x) * order() + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  Elem pow(Elem x, std::uint64_t k) const;
  std::size_t element_order(Elem x) const;

  /// Product of a word, left to right.
  Elem product(std::span<const Elem> word) const;
  Elem product(std::initializer_list<Elem> word) const {
    return product(std::span<const Elem>(word.begin(), word.size()));
  }

  /// Element indices of the declared generators.
  const std::vector<Elem> &generators() const noexcept { return gens_; }
  const std::string &name_of(Elem x) const { return names_[x]; }
  const std::vector<Elem> &table() const noexcept { return table_; }

  bool is_abelian() const;
  Subgroup whole() const;

private:
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
  std::vector<std::string> names_;
};

inline constexpr std::size_t default_max_order = 512;

Group build_group(std::span<const Permutation> generators,
                  std::size_t max_order = default_max_order);

/// (x, y) = x^-1 y^-1 x y
Elem group_commutator(const Group &G, Elem x, Elem y);

/// Left-normed (x1, ..., xn).
Elem group_commutator(const Group &G, std::span<const Elem> args);

Subgroup subgroup_generated(const Group &G, std::span<const Elem> seed);

/// Subgroup generated by all (x, y), x in H, y in K.
Subgroup commutator_subgroup(const Group &G, const Subgroup &H, const Subgroup &K);

/// [G, gamma_2, gamma_3, ...], stopping at the first repeated term.
std::vector<Subgroup> lower_central_series(const Group &G);

bool is_nilpotent(std::span<const Subgroup> series);

/// Nilpotency class from a lower central series; -1 when not nilpotent.
int nilpotency_class(std::span<const Subgroup> series);

/// Cyclic invariants of an abelian subgroup as prime powers, primes ascending
/// and powers descending within each prime. Throws Errc::NotAbelian.
std::vector<std::uint64_t> abelian_type(const Group &G, const Subgroup &H);

bool is_prime(std::uint64_t n);

/// Prime factors of n, ascending and without repetition.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// True when n is p^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);

} // namespace lienil
