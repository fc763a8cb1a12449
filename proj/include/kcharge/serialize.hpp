#pragma once

// Text and JSON forms of tableaux and polynomials.
//
// Tableau text form: a header line "k=<k>", then one line per row, TOP row
// first, entries "letter" or "letter_residue" separated by single spaces.
// JSON form: {"k":..,"rows":[[..],..],"shape":[..]} with rows bottom first.

#include "kcharge/polynomial.hpp"
#include "kcharge/tableau.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kcharge {

enum class Format { Text, Json };

struct ParsedTableau {
    std::optional<int> k;
    Tableau filling;
};

/// Text form; the k header is optional here (residue annotations need it).
ParsedTableau parse_tableau_text(std::string_view text);

/// Text or JSON (detected by a leading '{'); k is required.
KTableau parse_k_tableau(std::string_view text);

std::string to_text(const KTableau& t, bool with_residues = true);
std::string to_json(const KTableau& t);

/// Exponent -> coefficient with string keys, e.g. {"1":1,"2":1}.
std::string to_json(const TPolynomial& p);
TPolynomial polynomial_from_json(std::string_view text);

/// "3,2,1" or "(3,2,1)" into parts; used for weights, which may be compositions.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace kcharge
