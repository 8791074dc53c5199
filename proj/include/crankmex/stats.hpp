#pragma once

#include <string>
#include <vector>

#include "crankmex/enumerate.hpp"

namespace crankmex {

/// Reference values of m_{1,2}(n) — partitions of n with odd mex,
/// equivalently nonnegative crank — for n = 2..30. This is the frozen
/// prefix of OEIS A064428 the engine cross-checks itself against; it is
/// embedded so nothing at runtime depends on network access.
const StatTable& odd_mex_reference();

/// Names accepted by stat_table(): the nine refined mex statistics of
/// the summary table plus crank-side and Frobenius-side counts.
const std::vector<std::string>& stat_names();
bool stat_uses_j(const std::string& name);

/// The sequence of a named statistic for n = 0..max_n (statistics whose
/// small-n values follow the generating-function conventions use them).
/// Throws std::invalid_argument for unknown names.
StatTable stat_table(const std::string& name, int max_n, int j = 0);

/// The nine-row summary table of refined odd-mex statistics for
/// n = 2..15, in canonical row order.
std::vector<StatTable> table1();

/// Canonical CSV for a group of equally-indexed rows: a header
/// "stat,first_n,...", then one row per statistic.
std::string rows_to_csv(const std::vector<StatTable>& rows);

/// Canonical CSV for one sequence: header "n,<name>", one row per n.
std::string table_to_csv(const StatTable& table);
std::string table_to_json(const StatTable& table);
std::string rows_to_json(const std::vector<StatTable>& rows);

} // namespace crankmex
