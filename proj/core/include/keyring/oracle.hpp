#pragma once

#include <optional>

#include "keyring/extract.hpp"
#include "keyring/graph.hpp"

namespace keyring {

/// Exhaustive keyring existence check: some vertex u with degree >= r+2 lies
/// on a cycle C with |C| + r >= k and at least r neighbors off C. Exact but
/// exponential; intended for hosts with roughly n <= 12.
bool oracle_exists_keyring(const Graph& g, int k, int r, const SearchLimits& limits = {});

/// Witness-producing variant; the returned keyring passes verify_keyring.
std::optional<Keyring> oracle_find_keyring(const Graph& g, int k, int r,
                                           const SearchLimits& limits = {});

}  // namespace keyring
