#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lienil/algebra.hpp"
#include "lienil/echelon.hpp"

namespace lienil {

/// Dimension profile of a descending chain and the index of its first zero term.
struct ChainResult {
  std::vector<std::size_t> dims; // dims[n-1] = dimension of the n-th term; ends in 0
  int index = 0;                 // least m with the m-th term zero (1-based)
};

struct SeriesReport {
  unsigned p = 0;
  std::string group_name;
  std::vector<std::size_t> lower_dims;
  std::vector<std::size_t> upper_dims;
  int t_lower = 0;
  int t_upper = 0;

  friend bool operator==(const SeriesReport &, const SeriesReport &) = default;
};

/// |G'| + 2: one step past the largest possible index.
std::size_t default_chain_bound(const Group &G);

/// Lie lower central series of KG: L_1 = KG, L_{n+1} = span [L_n, G].
/// L_n = 0 exactly when the lower Lie power R^[n] vanishes.
/// Throws Errc::BoundExceeded if L_bound is still nonzero.
ChainResult lower_chain(const AlgebraContext &ctx, std::optional<std::size_t> bound = {});

/// Same chain, also returning the basis of every term.
std::vector<EchelonBasis> lower_chain_terms(const AlgebraContext &ctx,
                                            std::optional<std::size_t> bound = {});

/// R^(1) = KG, R^(n) = two-sided ideal generated by [R^(n-1), KG].
ChainResult upper_chain(const AlgebraContext &ctx, std::optional<std::size_t> bound = {});

std::vector<EchelonBasis> upper_chain_terms(const AlgebraContext &ctx,
                                            std::optional<std::size_t> bound = {});

/// Two-sided ideal of KG generated by the span of `seed`.
EchelonBasis ideal_closure(const AlgebraContext &ctx, EchelonBasis seed);

SeriesReport compute_series(const AlgebraContext &ctx, const std::string &group_name,
                            std::optional<std::size_t> bound = {});

inline constexpr std::size_t oracle_max_order = 16;

/// Independent evaluation of t_L by enumerating left-normed commutators of
/// group elements, extending only tuples whose commutator was new to the span
/// of its weight. Returns nullopt (unresolved) if weight max_weight is still
/// nonzero. Throws Errc::ScaleExceeded for |G| > 16.
std::optional<int> brute_force_t_lower(const AlgebraContext &ctx, std::size_t max_weight);

} // namespace lienil
