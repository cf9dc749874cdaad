#pragma once

#include <span>
#include <string>
#include <vector>

#include "trioscan/group.hpp"
#include "trioscan/subset.hpp"

namespace trioscan {

/// Ascending comma-joined element indices, e.g. "0,1,3"; the empty set
/// renders as the empty string.
std::string render_set(const Subset& s);

/// Set literals joined by ';'.
std::string render_sets(std::span<const Subset> sets);

/// Parses "6" or "2x4" or "2x2x2" into a cyclic product group.  Malformed
/// literals throw ContractError naming the offending token.
Group parse_group(const std::string& literal);

/// Parses "0,1,3" against g.  Order is free and duplicates collapse; the
/// empty string (or all blanks) is the empty set.  Out-of-range indices and
/// malformed tokens throw ContractError naming the token.
Subset parse_set(const Group& g, const std::string& literal);

/// Splits on ';' and parses each piece, so "0,1;;2" yields three sets with
/// an empty one in the middle.
std::vector<Subset> parse_sets(const Group& g, const std::string& literal);

}  // namespace trioscan
