#pragma once

// Exhaustive sweep that checks the statistics identities on every k-tableau
// within the given bounds.

#include "kcharge/tableau.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kcharge {

struct VerifyOptions {
    int min_k = 1;
    int max_k = 1;
    int max_weight = 0;  // largest |mu| swept; 0 sweeps nothing
    int threads = 1;
    bool check_oracle = false;  // also compare FAST and ORACLE enumeration per weight
};

struct CheckTally {
    std::string name;
    std::int64_t checked = 0;
    std::int64_t failed = 0;
};

struct Counterexample {
    std::string check;
    int k = 0;
    std::vector<int> weight;
    std::string tableau;  // text form; empty for per-weight checks
    std::string detail;
};

struct VerifyReport {
    VerifyOptions options;
    std::int64_t weights = 0;
    std::int64_t tableaux = 0;
    std::int64_t standard_tableaux = 0;
    std::int64_t same_residue_steps = 0;
    std::vector<CheckTally> checks;
    std::optional<Counterexample> first_failure;

    bool passed() const noexcept { return !first_failure.has_value(); }
};

/// Names of all checks in report order.
const std::vector<std::string>& verify_check_names();

/// Checks one tableau, adding to `report`. Exposed for targeted tests.
void verify_tableau(const KTableau& t, VerifyReport& report);

VerifyReport verify_sweep(const VerifyOptions& options);

}  // namespace kcharge
