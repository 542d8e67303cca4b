#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lienil/algebra.hpp"
#include "lienil/group.hpp"
#include "lienil/lie_series.hpp"

namespace lienil {

enum class NilpotencyReason { Ok, GNotNilpotent, DerivedNotPGroup, CharZero };

struct NilpotencyStatus {
  bool lie_nilpotent = false;
  NilpotencyReason reason = NilpotencyReason::GNotNilpotent;

  friend bool operator==(const NilpotencyStatus &, const NilpotencyStatus &) = default;
};

/// Conditions (i)-(iv) for an almost maximal lower Lie nilpotency index.
enum class Condition { I, II, III, IV, None };

enum class PredictionKind { Maximal, AlmostMaximal, Below, Commutative };

/// Predicted index: exact for Maximal/AlmostMaximal/Commutative, an upper
/// bound for Below.
struct Prediction {
  PredictionKind kind = PredictionKind::Below;
  std::int64_t value = 0;

  friend bool operator==(const Prediction &, const Prediction &) = default;
};

struct Classification {
  Condition condition = Condition::None;
  Prediction predicted;

  friend bool operator==(const Classification &, const Classification &) = default;
};

/// Structural summary of a finite group.
struct GroupInvariants {
  std::size_t order = 0;
  int nilpotency_class = -1; // -1: not nilpotent
  std::vector<std::size_t> gamma_orders;
  std::vector<std::uint64_t> derived_type; // empty when G' is trivial or nonabelian
  bool derived_abelian = true;
  std::vector<std::uint64_t> gamma3_type;

  std::size_t derived_order() const { return gamma_orders.size() > 1 ? gamma_orders[1] : 1; }
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;

  friend bool operator==(const Check &, const Check &) = default;
};

struct CheckReport {
  std::string group_name;
  unsigned p = 0;
  std::size_t order = 0;
  int nilpotency_class = -1;
  std::vector<std::size_t> gamma_orders;
  std::vector<std::uint64_t> derived_type;
  NilpotencyStatus status;
  std::optional<Classification> classification;
  std::optional<SeriesReport> computed;
  std::vector<Check> checks;

  bool all_pass() const;
  friend bool operator==(const CheckReport &, const CheckReport &) = default;
};

std::string_view to_string(NilpotencyReason r);
std::string_view to_string(Condition c);
std::string_view to_string(PredictionKind k);
std::optional<NilpotencyReason> parse_reason(std::string_view s);
std::optional<Condition> parse_condition(std::string_view s);
std::optional<PredictionKind> parse_prediction_kind(std::string_view s);

GroupInvariants group_invariants(const Group &G);

/// KG over GF(p) is Lie nilpotent iff G is nilpotent and G' is a p-group.
NilpotencyStatus lie_nilpotency_status(const Group &G, unsigned p);

/// Throws Errc::NotLieNilpotent when KG is not Lie nilpotent.
Classification classify_theorem1(const Group &G, unsigned p);

/// Computes both indices (when KG is Lie nilpotent) and evaluates the named
/// consistency checks. Check failures are recorded, never thrown.
CheckReport cross_check(std::shared_ptr<const Group> G, const std::string &name, unsigned p);

inline constexpr std::uint64_t default_max_units = std::uint64_t{1} << 15;

/// Nilpotency class of the unit group of KG for a p-group G, by enumerating
/// the normalized units. Throws Errc::ScaleExceeded if p^(|G|-1) > max_units
/// and Errc::NotPGroup if |G| is not a power of p.
int unit_group_class(const AlgebraContext &ctx, std::uint64_t max_units = default_max_units);

/// True when p^(|G|-1) <= max_units.
bool units_in_scale(std::size_t order, unsigned p, std::uint64_t max_units = default_max_units);

} // namespace lienil
