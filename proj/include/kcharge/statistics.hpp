#pragma once

// Affine charge and cocharge of k-tableaux.
//
// Two formulations are provided for each statistic. The LP forms sum the
// index vectors L (cocharge) and I (charge), whose recursions can step
// downwards. The Morse forms sum M_i + diag(i_low, c_(i)) and
// J_i + diag(i_high, c^(i)), where every term is non-negative. Both are
// computed per standard sequence and summed.

#include "kcharge/polynomial.hpp"
#include "kcharge/tableau.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kcharge {

/// Number of diagonals strictly between c1 and c2 whose residue mod k+1
/// equals the residue of the lower cell. On a row tie the cell with the
/// smaller diagonal index counts as lower.
int diag(Cell c1, Cell c2, int k);

/// (1, 1 + last column used in row 1). Throws if X has no row-1 cell.
Cell lowest_addable(const CellSet& x);
/// (1 + top row used, 1). Throws if X has no row-1 cell.
Cell highest_addable(const CellSet& x);

enum class OrderDirection { Low, High };

/// Cyclic total order on residues {0..k}. LOW pivoted at x reads
/// x > x+1 > ... > k > 0 > ... > x-1; HIGH reads x > x-1 > ... > 0 > k > ... > x+1.
class ResidueOrder {
public:
    ResidueOrder(int modulus, Residue pivot, OrderDirection direction);

    int modulus() const noexcept { return modulus_; }
    Residue pivot() const noexcept { return pivot_; }
    OrderDirection direction() const noexcept { return direction_; }

    /// Position in the order, 0 for the greatest residue.
    int rank(Residue r) const;
    bool greater(Residue a, Residue b) const { return rank(a) < rank(b); }
    /// Residues from greatest to least.
    std::vector<Residue> descending() const;
    /// "2 > 3 > 4 > 0 > 1"
    std::string to_string() const;

private:
    int modulus_;
    Residue pivot_;
    OrderDirection direction_;
};

ResidueOrder low_order(const CellSet& x, int k);
ResidueOrder high_order(const CellSet& x, int k);

using IndexVector = std::vector<int>;

/// One row of the per-letter statistics table of a standard sequence.
struct LetterStatistics {
    int letter = 0;
    Residue residue;
    Cell lowest;
    Cell highest;
    int diag_lowest_previous = 0;   // diag(i_low, (i-1)_low), 0 for the first letter
    int diag_highest_previous = 0;  // diag(i_high, (i-1)_high)
    int L = 0;
    int M = 0;
    int I = 0;
    int J = 0;
    ResidueOrder low{2, Residue{0}, OrderDirection::Low};
    ResidueOrder high{2, Residue{0}, OrderDirection::High};
    Cell low_addable;
    Cell high_addable;
    int diag_low_addable = 0;   // diag(i_low, c_(i))
    int diag_high_addable = 0;  // diag(i_high, c^(i))
};

struct SequenceStatistics {
    std::vector<LetterStatistics> letters;

    std::int64_t sum_L() const;
    std::int64_t sum_I() const;
    /// sum of M_i + diag(i_low, c_(i))
    std::int64_t morse_cocharge() const;
    /// sum of J_i + diag(i_high, c^(i))
    std::int64_t morse_charge() const;
};

SequenceStatistics sequence_statistics(const StandardSequence& s, int k);

IndexVector index_L(const StandardSequence& s, const KTableau& t);
IndexVector index_M(const StandardSequence& s, const KTableau& t);
IndexVector index_I(const StandardSequence& s, const KTableau& t);
IndexVector index_J(const StandardSequence& s, const KTableau& t);

enum class Formulation { LapointePinto, Morse };

std::int64_t k_cocharge(const KTableau& t, Formulation f = Formulation::Morse);
std::int64_t k_charge(const KTableau& t, Formulation f = Formulation::Morse);

/// Standard sequences of a tableau with their statistics and all four totals.
struct TableauAnalysis {
    std::vector<StandardSequence> sequences;
    std::vector<SequenceStatistics> statistics;
    std::int64_t cocharge_lp = 0;
    std::int64_t cocharge_morse = 0;
    std::int64_t charge_lp = 0;
    std::int64_t charge_morse = 0;
};

TableauAnalysis analyze(const KTableau& t);

/// Shape -> sum of t^{k-charge} over k-tableaux of weight mu, for every
/// (k+1)-core shape that occurs (or only `shape` when given).
using ChargeTable = std::map<Partition, TPolynomial, CanonicalLess>;

ChargeTable charge_table(int k, const Partition& mu, Formulation f = Formulation::Morse,
                         const std::optional<Partition>& shape = std::nullopt, int threads = 1);

}  // namespace kcharge
