#pragma once

// Human-readable and JSON reports shared by the C API and the CLI.

#include "kcharge/serialize.hpp"
#include "kcharge/statistics.hpp"
#include "kcharge/verify.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kcharge {

/// Tableaux separated by blank lines, then "count: N".
std::string enumerate_report(int k, std::span<const int> weight, std::span<const KTableau> tableaux, Format format);

/// Both formulations of both statistics, then per-sequence tables of the
/// index vectors, residue orders and diag corrections.
std::string stat_report(const KTableau& t, Format format);

/// One "shape: polynomial" line per shape. `k` is empty for the classical table.
std::string table_report(std::optional<int> k, const Partition& mu, Formulation f, const ChargeTable& table,
                         Format format);

std::string classical_report(const Tableau& t, Format format);

std::string verify_text(const VerifyReport& report, Format format);

}  // namespace kcharge
