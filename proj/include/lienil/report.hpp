#pragma once

#include <string>
#include <string_view>

#include "lienil/classify.hpp"
#include "lienil/proof.hpp"

namespace lienil {

/// One-line JSON object for a check report:
/// {"name","p","order","class","gamma_orders","derived_type","status",
///  "t_lower","t_upper","lower_dims","upper_dims","condition","predicted","checks"}.
/// Fields that were not computed are null.
std::string to_json(const CheckReport &report);

/// Inverse of to_json. Throws Errc::ParseError.
CheckReport parse_report(std::string_view line);

std::string to_json(const SeriesReport &series);
std::string to_json(const GroupInvariants &inv, const std::string &name);

/// Witness and chain summary for verify-proof.
std::string to_json(const std::string &name, const WitnessProfile &w, const ChainReport &chain,
                    const Group &G);

} // namespace lienil
