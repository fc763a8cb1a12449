#pragma once

// k-tableaux: representation, validation, restrictions, standard sequences
// and exhaustive enumeration.

#include "kcharge/cores.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kcharge {

/// A filling of a partition diagram by positive letters. Rows are stored
/// bottom row first. No ordering conditions are imposed here.
class Tableau {
public:
    Tableau() = default;
    /// Throws DomainError unless row lengths form a partition and letters are positive.
    explicit Tableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int letter(Cell c) const;
    int max_letter() const noexcept { return max_letter_; }

    /// Number of cells carrying each letter 1..max_letter.
    std::vector<int> content() const;
    /// Rows bottom to top, each left to right. Used for canonical ordering.
    std::vector<int> bottom_up_word() const;
    /// Rows top to bottom, each left to right (the classical reading word).
    std::vector<int> reading_word() const;

    /// Rows weakly increase and columns strictly increase.
    bool is_semistandard() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
    int max_letter_ = 0;
};

/// A filling of a (k+1)-core. Construction checks only the diagram; use
/// validate() for the k-tableau conditions.
class KTableau {
public:
    KTableau() = default;
    KTableau(int k, Tableau filling);
    KTableau(int k, std::vector<std::vector<int>> rows) : KTableau(k, Tableau(std::move(rows))) {}

    int k() const noexcept { return k_; }
    int modulus() const noexcept { return k_ + 1; }
    const Tableau& filling() const noexcept { return filling_; }
    const Partition& shape() const noexcept { return filling_.shape(); }
    int letter(Cell c) const { return filling_.letter(c); }
    int max_letter() const noexcept { return filling_.max_letter(); }
    Residue residue_of(Cell c) const { return residue(c, modulus()); }

    /// For each letter 1..max_letter, the number of distinct residues it occupies.
    std::vector<int> weight() const;
    /// All cells filled with `letter`.
    CellSet cells_of(int letter) const;

    friend bool operator==(const KTableau&, const KTableau&) = default;

private:
    int k_ = 1;
    Tableau filling_;
};

struct Validation {
    bool valid = true;
    std::string message;
    std::optional<Cell> cell;

    explicit operator bool() const noexcept { return valid; }
};

/// Checks every k-tableau condition and reports the first violation: core
/// shape, semistandard rows and columns, residue counts per letter (against
/// `expected_weight` when given), the bounded-hook total, and that every
/// restriction to letters <= i is again a core.
Validation validate(const KTableau& t);
Validation validate(const KTableau& t, std::optional<std::span<const int>> expected_weight);

/// Sub-tableau on the cells with letters <= i.
KTableau restrict_leq(const KTableau& t, int i);

bool is_partition(std::span<const int> weight);

struct SequenceEntry {
    int letter = 0;
    Residue residue;
    CellSet cells;  // every cell with this letter and residue
};

/// One standard sequence: letters 1..length(), one residue class each.
class StandardSequence {
public:
    explicit StandardSequence(std::vector<SequenceEntry> entries);

    int length() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<SequenceEntry>& entries() const noexcept { return entries_; }
    const SequenceEntry& entry(int letter) const;
    bool has(int letter) const noexcept { return letter >= 1 && letter <= length(); }

private:
    std::vector<SequenceEntry> entries_;
};

/// Standard sequences in construction order. The first entry of each
/// sequence is the right-most unused 1. Each later letter takes the unused
/// residue r' minimising (r - r') mod (k+1), r being the previous residue.
/// Requires a partition weight with parts <= k.
std::vector<StandardSequence> standard_sequences(const KTableau& t);

/// Number of steps in `seqs` where a letter repeats its predecessor's residue.
int same_residue_steps(std::span<const StandardSequence> seqs);

/// Union of the cells of letters <= i within one sequence.
CellSet restrict_sequence(const StandardSequence& s, int i);

Cell lowest_occurrence(const StandardSequence& s, int i);
Cell highest_occurrence(const StandardSequence& s, int i);

enum class Strategy { Fast, Oracle };

/// All k-tableaux of the given weight (a composition with parts <= k),
/// optionally restricted to one shape, ordered by canonical shape order then
/// by bottom-up reading word.
std::vector<KTableau> enumerate_k_tableaux(int k, std::span<const int> weight,
                                           const std::optional<Partition>& shape = std::nullopt,
                                           Strategy strategy = Strategy::Fast);

/// Canonical ordering used for enumeration output.
bool canonical_less(const KTableau& a, const KTableau& b);

}  // namespace kcharge
