#pragma once

// Lascoux-Schutzenberger charge on semistandard Young tableaux and the
// Kostka-Foulkes polynomials it generates.

#include "kcharge/statistics.hpp"
#include "kcharge/tableau.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kcharge {

/// Charge of a word whose content is a partition, by standard subword
/// extraction (scan leftward cyclically from the right end, the index
/// increases on each wrap).
std::int64_t word_charge(std::span<const int> word);

/// Requires a semistandard tableau with partition content.
std::int64_t classical_charge(const Tableau& t);
/// n(content) - charge.
std::int64_t classical_cocharge(const Tableau& t);

/// Semistandard tableaux of the given shape and content.
std::vector<Tableau> semistandard_tableaux(const Partition& shape, std::span<const int> content);

/// All partitions of n in canonical order.
std::vector<Partition> partitions_of(int n);

/// Shape -> K_{shape, mu}(t) for all shapes of size |mu| with a non-zero
/// polynomial (or only `shape` when given).
ChargeTable kostka_foulkes_table(const Partition& mu, const std::optional<Partition>& shape = std::nullopt);

}  // namespace kcharge
