#include "kcharge/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kcharge {

namespace {

std::string cell_str(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.empty()) throw DomainError("tableau rows must be non-empty");
        lengths.push_back(static_cast<int>(r.size()));
    }
    try {
        return Partition(std::move(lengths));
    } catch (const DomainError&) {
        throw DomainError("tableau row lengths must weakly decrease from the bottom row up");
    }
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)), shape_(shape_of_rows(rows_)) {
    for (const auto& row : rows_)
        for (int v : row) {
            if (v < 1) throw DomainError("tableau letters must be positive");
            max_letter_ = std::max(max_letter_, v);
        }
}

int Tableau::letter(Cell c) const {
    if (!shape_.contains(c)) throw DomainError("cell " + cell_str(c) + " is outside the tableau");
    return rows_[c.row - 1][c.col - 1];
}

std::vector<int> Tableau::content() const {
    std::vector<int> out(max_letter_, 0);
    for (const auto& row : rows_)
        for (int v : row) ++out[v - 1];
    return out;
}

std::vector<int> Tableau::bottom_up_word() const {
    std::vector<int> w;
    w.reserve(shape_.size());
    for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> w;
    w.reserve(shape_.size());
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

bool Tableau::is_semistandard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && rows_[r][c] < rows_[r][c - 1]) return false;
            if (r > 0 && rows_[r][c] <= rows_[r - 1][c]) return false;
        }
    return true;
}

KTableau::KTableau(int k, Tableau filling) : k_(k), filling_(std::move(filling)) {
    if (k < 1) throw DomainError("k must be positive");
}

std::vector<int> KTableau::weight() const {
    std::vector<std::set<int>> residues(max_letter());
    for (const Cell c : shape().cells()) residues[letter(c) - 1].insert(residue_of(c).value);
    std::vector<int> out;
    out.reserve(residues.size());
    for (const auto& s : residues) out.push_back(static_cast<int>(s.size()));
    return out;
}

CellSet KTableau::cells_of(int letter) const {
    std::vector<Cell> out;
    for (const Cell c : shape().cells())
        if (this->letter(c) == letter) out.push_back(c);
    return CellSet(std::move(out));
}

Validation validate(const KTableau& t, std::optional<std::span<const int>> expected_weight) {
    const int k = t.k();
    const Partition& shape = t.shape();
    auto fail = [](std::string msg, std::optional<Cell> c = std::nullopt) { return Validation{false, std::move(msg), c}; };

    for (const Cell c : shape.cells())
        if (hook_length(shape, c) == k + 1)
            return fail("shape " + shape.to_string() + " is not a " + std::to_string(k + 1) + "-core: cell " +
                            cell_str(c) + " has hook length " + std::to_string(k + 1),
                        c);

    for (const Cell c : shape.cells()) {
        if (c.col > 1 && t.letter(c) < t.letter({c.row, c.col - 1}))
            return fail("row " + std::to_string(c.row) + " decreases at cell " + cell_str(c), c);
        if (c.row > 1 && t.letter(c) <= t.letter({c.row - 1, c.col}))
            return fail("column " + std::to_string(c.col) + " does not strictly increase at cell " + cell_str(c), c);
    }

    const auto weight = t.weight();
    for (std::size_t i = 0; i < weight.size(); ++i) {
        const int letter = static_cast<int>(i) + 1;
        if (weight[i] == 0) return fail("letter " + std::to_string(letter) + " does not occur");
        const CellSet cells = t.cells_of(letter);
        if (expected_weight) {
            const auto& w = *expected_weight;
            if (i >= w.size())
                return fail("letter " + std::to_string(letter) + " exceeds the expected weight length", cells.cells().front());
            if (weight[i] != w[i])
                return fail("letter " + std::to_string(letter) + " occupies " + std::to_string(weight[i]) +
                                " residue(s), expected " + std::to_string(w[i]),
                            cells.cells().front());
        }
        if (weight[i] > k)
            return fail("letter " + std::to_string(letter) + " occupies " + std::to_string(weight[i]) +
                            " residues, more than k=" + std::to_string(k),
                        cells.cells().front());
    }
    if (expected_weight && expected_weight->size() != weight.size())
        return fail("tableau uses " + std::to_string(weight.size()) + " letters, expected weight has " +
                    std::to_string(expected_weight->size()));

    int total = 0;
    for (int w : weight) total += w;
    const int bounded = k_bounded_hooks(shape, k);
    if (total != bounded)
        return fail("weight sums to " + std::to_string(total) + " but the shape has " + std::to_string(bounded) + " " +
                    std::to_string(k) + "-bounded hooks");

    for (int i = 1; i < t.max_letter(); ++i) {
        const Partition sub = restrict_leq(t, i).shape();
        if (!is_n_core(sub, k + 1))
            return fail("cells with letters <= " + std::to_string(i) + " form " + sub.to_string() + ", not a " +
                        std::to_string(k + 1) + "-core");
    }
    return {};
}

Validation validate(const KTableau& t) { return validate(t, std::nullopt); }

KTableau restrict_leq(const KTableau& t, int i) {
    if (i < 1 || i > t.max_letter())
        throw DomainError("letter " + std::to_string(i) + " outside 1.." + std::to_string(t.max_letter()));
    std::vector<std::vector<int>> rows;
    for (const auto& row : t.filling().rows()) {
        std::vector<int> kept;
        for (int v : row)
            if (v <= i) kept.push_back(v);
        if (kept.empty()) break;
        rows.push_back(std::move(kept));
    }
    return KTableau(t.k(), Tableau(std::move(rows)));
}

bool is_partition(std::span<const int> weight) {
    for (std::size_t i = 0; i < weight.size(); ++i)
        if (weight[i] < 1 || (i > 0 && weight[i] > weight[i - 1])) return false;
    return true;
}

StandardSequence::StandardSequence(std::vector<SequenceEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].letter != static_cast<int>(i) + 1) throw DomainError("sequence letters must be 1, 2, ...");
        if (entries_[i].cells.empty()) throw DomainError("sequence entries must carry cells");
    }
}

const SequenceEntry& StandardSequence::entry(int letter) const {
    if (!has(letter)) throw DomainError("letter " + std::to_string(letter) + " is not in the standard sequence");
    return entries_[letter - 1];
}

std::vector<StandardSequence> standard_sequences(const KTableau& t) {
    const auto weight = t.weight();
    if (!is_partition(weight)) throw DomainError("standard sequences need a partition weight");
    for (int w : weight)
        if (w > t.k()) throw DomainError("weight parts must not exceed k");

    const int n = t.modulus();
    // groups[letter-1][residue] -> cells
    std::vector<std::map<int, CellSet>> groups(t.max_letter());
    for (const Cell c : t.shape().cells()) groups[t.letter(c) - 1][t.residue_of(c).value].insert(c);

    std::vector<StandardSequence> out;
    while (!groups.empty() && !groups[0].empty()) {
        std::vector<SequenceEntry> entries;
        // right-most unused 1: letter-1 cells all sit in row 1
        auto first = std::max_element(groups[0].begin(), groups[0].end(), [](const auto& a, const auto& b) {
            return a.second.cells().back().col < b.second.cells().back().col;
        });
        int r = first->first;
        entries.push_back({1, Residue{r}, std::move(first->second)});
        groups[0].erase(first);
        for (std::size_t letter = 1; letter < groups.size() && !groups[letter].empty(); ++letter) {
            auto& avail = groups[letter];
            auto best = std::min_element(avail.begin(), avail.end(), [&](const auto& a, const auto& b) {
                return ((r - a.first) % n + n) % n < ((r - b.first) % n + n) % n;
            });
            r = best->first;
            entries.push_back({static_cast<int>(letter) + 1, Residue{r}, std::move(best->second)});
            avail.erase(best);
        }
        out.emplace_back(std::move(entries));
    }
    return out;
}

int same_residue_steps(std::span<const StandardSequence> seqs) {
    int count = 0;
    for (const auto& s : seqs)
        for (int i = 2; i <= s.length(); ++i) count += s.entry(i).residue == s.entry(i - 1).residue ? 1 : 0;
    return count;
}

CellSet restrict_sequence(const StandardSequence& s, int i) {
    if (!s.has(i)) throw DomainError("letter " + std::to_string(i) + " is not in the standard sequence");
    CellSet out;
    for (int j = 1; j <= i; ++j) out.merge(s.entry(j).cells);
    return out;
}

// Cells of one residue class in a tableau sit in distinct rows, so the
// (row, col) order of a CellSet picks the unique extreme.
Cell lowest_occurrence(const StandardSequence& s, int i) { return s.entry(i).cells.cells().front(); }
Cell highest_occurrence(const StandardSequence& s, int i) { return s.entry(i).cells.cells().back(); }

bool canonical_less(const KTableau& a, const KTableau& b) {
    if (a.shape() != b.shape()) return canonical_less(a.shape(), b.shape());
    return a.filling().bottom_up_word() < b.filling().bottom_up_word();
}

namespace {

void check_weight(int k, std::span<const int> weight) {
    if (k < 1) throw DomainError("k must be positive");
    for (int w : weight) {
        if (w < 1) throw DomainError("weight parts must be positive");
        if (w > k) throw DomainError("weight part " + std::to_string(w) + " exceeds k=" + std::to_string(k));
    }
}

bool fits_inside(const Partition& p, const Partition& outer) {
    if (p.length() > outer.length()) return false;
    for (int r = 1; r <= p.length(); ++r)
        if (p.row_length(r) > outer.row_length(r)) return false;
    return true;
}

std::vector<std::vector<int>> place(const std::vector<std::vector<int>>& rows, std::span<const Cell> cells, int letter) {
    auto out = rows;
    for (const Cell c : cells) {
        if (c.row > static_cast<int>(out.size())) out.resize(c.row);
        auto& row = out[c.row - 1];
        if (static_cast<int>(row.size()) + 1 != c.col) throw DomainError("cells added out of order");
        row.push_back(letter);
    }
    return out;
}

// Grows one letter at a time. A residue set S is applied as in the affine
// Pieri rule: each maximal cyclic run of S is applied in increasing order,
// every residue adding all of its addable corners.
class FastEnumerator {
public:
    FastEnumerator(int k, std::span<const int> weight, const std::optional<Partition>& target)
        : k_(k), n_(k + 1), weight_(weight), target_(target) {}

    std::vector<KTableau> run() {
        grow(Partition{}, {}, 0);
        return std::move(out_);
    }

private:
    void grow(const Partition& shape, const std::vector<std::vector<int>>& rows, std::size_t index) {
        if (index == weight_.size()) {
            if (!target_ || shape == *target_) out_.emplace_back(k_, Tableau(rows));
            return;
        }
        const int size = weight_[index];
        std::vector<int> subset(size);
        for (int i = 0; i < size; ++i) subset[i] = i;
        while (true) {
            try_subset(shape, rows, index, subset);
            // next combination of `size` residues out of n_
            int i = size - 1;
            while (i >= 0 && subset[i] == n_ - size + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
    }

    void try_subset(const Partition& shape, const std::vector<std::vector<int>>& rows, std::size_t index,
                    const std::vector<int>& subset) {
        std::vector<bool> in(n_, false);
        for (int r : subset) in[r] = true;
        int start = subset.front();
        for (int r : subset)
            if (!in[(r - 1 + n_) % n_]) {
                start = r;
                break;
            }
        Partition current = shape;
        std::vector<Cell> added;
        for (int step = 0; step < n_; ++step) {
            const int r = (start + step) % n_;
            if (!in[r]) continue;
            const std::size_t before = added.size();
            current = add_residue(current, Residue{r}, n_, &added);
            if (added.size() == before) return;
        }
        std::set<int> columns;
        for (const Cell c : added)
            if (!columns.insert(c.col).second) return;
        if (target_ && !fits_inside(current, *target_)) return;
        std::sort(added.begin(), added.end());
        grow(current, place(rows, added, static_cast<int>(index) + 1), index + 1);
    }

    int k_;
    int n_;
    std::span<const int> weight_;
    const std::optional<Partition>& target_;
    std::vector<KTableau> out_;
};

// Brute force: every row-weak, column-strict filling of every candidate core,
// kept when validate() accepts it.
class OracleEnumerator {
public:
    OracleEnumerator(int k, std::span<const int> weight) : k_(k), n_(k + 1), weight_(weight) {}

    std::vector<KTableau> run(const std::optional<Partition>& target) {
        int total = 0;
        for (int w : weight_) total += w;
        for (const Partition& core : enumerate_cores(n_, total)) {
            if (k_bounded_hooks(core, k_) != total) continue;
            if (target && core != *target) continue;
            outer_ = core;
            fill(Partition{}, {}, 0);
        }
        return std::move(out_);
    }

private:
    void fill(const Partition& shape, const std::vector<std::vector<int>>& rows, std::size_t index) {
        if (index == weight_.size()) {
            if (shape != outer_) return;
            KTableau t(k_, Tableau(rows));
            if (validate(t, weight_)) out_.push_back(std::move(t));
            return;
        }
        std::vector<int> lengths(outer_.length());
        strip(shape, rows, index, 1, lengths);
    }

    // Chooses the new length of each row so the added cells form a horizontal strip.
    void strip(const Partition& shape, const std::vector<std::vector<int>>& rows, std::size_t index, int row,
               std::vector<int>& lengths) {
        if (row > outer_.length()) {
            std::vector<Cell> added;
            std::vector<int> parts;
            for (int r = 1; r <= outer_.length(); ++r) {
                for (int c = shape.row_length(r) + 1; c <= lengths[r - 1]; ++c) added.push_back({r, c});
                if (lengths[r - 1] > 0) parts.push_back(lengths[r - 1]);
            }
            if (added.empty()) return;
            std::set<int> residues;
            for (const Cell c : added) residues.insert(residue(c, n_).value);
            if (static_cast<int>(residues.size()) != weight_[index]) return;
            fill(Partition(std::move(parts)), place(rows, added, static_cast<int>(index) + 1), index + 1);
            return;
        }
        const int low = shape.row_length(row);
        const int high = row == 1 ? outer_.row_length(1) : std::min(outer_.row_length(row), shape.row_length(row - 1));
        for (int len = low; len <= high; ++len) {
            lengths[row - 1] = len;
            strip(shape, rows, index, row + 1, lengths);
        }
    }

    int k_;
    int n_;
    std::span<const int> weight_;
    Partition outer_;
    std::vector<KTableau> out_;
};

}  // namespace

std::vector<KTableau> enumerate_k_tableaux(int k, std::span<const int> weight, const std::optional<Partition>& shape,
                                           Strategy strategy) {
    check_weight(k, weight);
    auto out = strategy == Strategy::Fast ? FastEnumerator(k, weight, shape).run()
                                          : OracleEnumerator(k, weight).run(shape);
    std::sort(out.begin(), out.end(), [](const KTableau& a, const KTableau& b) { return canonical_less(a, b); });
    return out;
}

}  // namespace kcharge
