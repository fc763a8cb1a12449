#include "kcharge/statistics.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kcharge {

int diag(Cell c1, Cell c2, int k) {
    const int n = k + 1;
    const int d1 = c1.diagonal();
    const int d2 = c2.diagonal();
    Cell lower = c1;
    if (c2.row < c1.row || (c2.row == c1.row && d2 < d1)) lower = c2;
    const int r = residue(lower, n).value;
    const int lo = std::min(d1, d2);
    const int hi = std::max(d1, d2);
    if (hi - lo < 2) return 0;
    auto floor_div = [n](long long a) { return a >= 0 ? a / n : -((-a + n - 1) / n); };
    // #{d in (lo, hi) : d = r mod n}
    return static_cast<int>(floor_div(hi - 1 - r) - floor_div(lo - r));
}

Cell lowest_addable(const CellSet& x) {
    int last = 0;
    for (const Cell c : x)
        if (c.row == 1) last = std::max(last, c.col);
    if (last == 0) throw DomainError("cell set has no cell in row 1");
    return {1, last + 1};
}

Cell highest_addable(const CellSet& x) {
    bool bottom = false;
    int top = 0;
    for (const Cell c : x) {
        bottom = bottom || c.row == 1;
        top = std::max(top, c.row);
    }
    if (!bottom) throw DomainError("cell set has no cell in row 1");
    return {top + 1, 1};
}

ResidueOrder::ResidueOrder(int modulus, Residue pivot, OrderDirection direction)
    : modulus_(modulus), pivot_(pivot), direction_(direction) {
    if (modulus < 2) throw DomainError("residue order needs modulus >= 2");
    if (pivot.value < 0 || pivot.value >= modulus) throw DomainError("pivot residue out of range");
}

int ResidueOrder::rank(Residue r) const {
    const int diff = direction_ == OrderDirection::Low ? r.value - pivot_.value : pivot_.value - r.value;
    return ((diff % modulus_) + modulus_) % modulus_;
}

std::vector<Residue> ResidueOrder::descending() const {
    std::vector<Residue> out;
    for (int step = 0; step < modulus_; ++step) {
        const int offset = direction_ == OrderDirection::Low ? step : -step;
        out.push_back(Residue{((pivot_.value + offset) % modulus_ + modulus_) % modulus_});
    }
    return out;
}

std::string ResidueOrder::to_string() const {
    std::ostringstream os;
    const auto order = descending();
    for (std::size_t i = 0; i < order.size(); ++i) os << (i ? " > " : "") << order[i].value;
    return os.str();
}

ResidueOrder low_order(const CellSet& x, int k) {
    return ResidueOrder(k + 1, residue(lowest_addable(x), k + 1), OrderDirection::Low);
}

ResidueOrder high_order(const CellSet& x, int k) {
    return ResidueOrder(k + 1, residue(highest_addable(x), k + 1), OrderDirection::High);
}

std::int64_t SequenceStatistics::sum_L() const {
    return std::accumulate(letters.begin(), letters.end(), std::int64_t{0},
                           [](std::int64_t acc, const LetterStatistics& l) { return acc + l.L; });
}

std::int64_t SequenceStatistics::sum_I() const {
    return std::accumulate(letters.begin(), letters.end(), std::int64_t{0},
                           [](std::int64_t acc, const LetterStatistics& l) { return acc + l.I; });
}

std::int64_t SequenceStatistics::morse_cocharge() const {
    return std::accumulate(letters.begin(), letters.end(), std::int64_t{0},
                           [](std::int64_t acc, const LetterStatistics& l) { return acc + l.M + l.diag_low_addable; });
}

std::int64_t SequenceStatistics::morse_charge() const {
    return std::accumulate(letters.begin(), letters.end(), std::int64_t{0},
                           [](std::int64_t acc, const LetterStatistics& l) { return acc + l.J + l.diag_high_addable; });
}

SequenceStatistics sequence_statistics(const StandardSequence& s, int k) {
    SequenceStatistics out;
    CellSet restriction;  // cells of letters <= i in this sequence
    for (int i = 1; i <= s.length(); ++i) {
        const auto& entry = s.entry(i);
        restriction.merge(entry.cells);

        LetterStatistics row;
        row.letter = i;
        row.residue = entry.residue;
        row.lowest = lowest_occurrence(s, i);
        row.highest = highest_occurrence(s, i);
        row.low = low_order(restriction, k);
        row.high = high_order(restriction, k);
        row.low_addable = lowest_addable(restriction);
        row.high_addable = highest_addable(restriction);
        row.diag_low_addable = diag(row.lowest, row.low_addable, k);
        row.diag_high_addable = diag(row.highest, row.high_addable, k);

        if (i > 1) {
            const auto& prev = out.letters.back();
            row.diag_lowest_previous = diag(row.lowest, prev.lowest, k);
            row.diag_highest_previous = diag(row.highest, prev.highest, k);
            row.L = prev.lowest.row < row.lowest.row ? prev.L + 1 + row.diag_lowest_previous
                                                     : prev.L - row.diag_lowest_previous;
            row.I = row.highest.col > prev.highest.col ? prev.I + 1 + row.diag_highest_previous
                                                       : prev.I - row.diag_highest_previous;
            row.M = prev.M + (row.low.greater(row.residue, prev.residue) ? 1 : 0);
            row.J = prev.J + (row.high.greater(row.residue, prev.residue) ? 1 : 0);
        }
        out.letters.push_back(row);
    }
    return out;
}

namespace {

IndexVector column(const StandardSequence& s, const KTableau& t, int LetterStatistics::*field) {
    IndexVector out;
    for (const auto& row : sequence_statistics(s, t.k()).letters) out.push_back(row.*field);
    return out;
}

}  // namespace

IndexVector index_L(const StandardSequence& s, const KTableau& t) { return column(s, t, &LetterStatistics::L); }
IndexVector index_M(const StandardSequence& s, const KTableau& t) { return column(s, t, &LetterStatistics::M); }
IndexVector index_I(const StandardSequence& s, const KTableau& t) { return column(s, t, &LetterStatistics::I); }
IndexVector index_J(const StandardSequence& s, const KTableau& t) { return column(s, t, &LetterStatistics::J); }

TableauAnalysis analyze(const KTableau& t) {
    TableauAnalysis out;
    out.sequences = standard_sequences(t);
    for (const auto& s : out.sequences) {
        auto stats = sequence_statistics(s, t.k());
        out.cocharge_lp += stats.sum_L();
        out.cocharge_morse += stats.morse_cocharge();
        out.charge_lp += stats.sum_I();
        out.charge_morse += stats.morse_charge();
        out.statistics.push_back(std::move(stats));
    }
    return out;
}

std::int64_t k_cocharge(const KTableau& t, Formulation f) {
    const auto a = analyze(t);
    return f == Formulation::Morse ? a.cocharge_morse : a.cocharge_lp;
}

std::int64_t k_charge(const KTableau& t, Formulation f) {
    const auto a = analyze(t);
    return f == Formulation::Morse ? a.charge_morse : a.charge_lp;
}

ChargeTable charge_table(int k, const Partition& mu, Formulation f, const std::optional<Partition>& shape,
                         int threads) {
    const auto tableaux = enumerate_k_tableaux(k, mu.parts(), shape, Strategy::Fast);
    std::vector<std::int64_t> charges(tableaux.size());
    detail::parallel_for(tableaux.size(), threads, [&](std::size_t i) { charges[i] = k_charge(tableaux[i], f); });
    ChargeTable table;
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
        if (charges[i] < 0) throw DomainError("negative k-charge; polynomial exponents must be non-negative");
        table[tableaux[i].shape()].add_term(static_cast<int>(charges[i]), 1);
    }
    return table;
}

}  // namespace kcharge
