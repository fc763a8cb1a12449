#pragma once

// Partitions, Ferrers geometry and n-core combinatorics.
//
// Cells are addressed as (row, col) with row 1 the BOTTOM row and col 1 the
// leftmost column (French convention). The diagonal index of a cell is
// col - row.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kcharge {

/// Raised when an argument falls outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a textual or JSON input cannot be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Cell {
    int row = 1;
    int col = 1;

    constexpr int diagonal() const noexcept { return col - row; }
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

struct Residue {
    int value = 0;
    friend constexpr auto operator<=>(const Residue&, const Residue&) = default;
};

/// (col - row) mod n, in [0, n).
Residue residue(Cell c, int n);

/// Weakly decreasing sequence of positive parts. Immutable once built.
class Partition {
public:
    /// Largest part or length accepted; keeps coordinates in machine ints.
    static constexpr int kMaxExtent = 1'000'000;

    Partition() = default;
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Length of row `row` (1-based); 0 beyond the last row.
    int row_length(int row) const noexcept;
    /// Height of column `col` (1-based); 0 beyond the first row.
    int column_height(int col) const noexcept;
    bool contains(Cell c) const noexcept;

    Partition conjugate() const;
    /// All cells, bottom row first, left to right.
    std::vector<Cell> cells() const;

    /// "(7,3,2,1,1)"; the empty partition is "()".
    std::string to_string() const;
    /// Accepts "(7,3,2,1,1)", "()" and bare "7,3,2,1,1".
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Canonical order: size ascending, then parts lexicographically descending.
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

/// Finite set of cells kept sorted by (row, col). Not necessarily a diagram.
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(std::vector<Cell> cells);

    static CellSet of(const Partition& shape);

    void insert(Cell c);
    void merge(const CellSet& other);
    bool contains(Cell c) const noexcept;

    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    auto begin() const noexcept { return cells_.begin(); }
    auto end() const noexcept { return cells_.end(); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    std::vector<Cell> cells_;
};

struct Corner {
    Cell cell;
    Residue residue;
    friend bool operator==(const Corner&, const Corner&) = default;
};

/// Arm + leg + 1. Throws DomainError if `c` is not a cell of `shape`.
int hook_length(const Partition& shape, Cell c);

/// True iff no cell has hook length exactly n. Requires n >= 2.
bool is_n_core(const Partition& shape, int n);

/// Cells (i,j) outside `shape` with (i,j-1) and (i-1,j) inside, where row 0
/// and column 0 count as filled. Ordered bottom to top.
std::vector<Corner> addable_corners(const Partition& shape, int n);

/// Cells (i,j) of `shape` with (i,j+1) and (i+1,j) outside. Bottom to top.
std::vector<Corner> removable_corners(const Partition& shape, int n);

/// Cells with hook length > k.
CellSet k_interior(const Partition& shape, int k);

/// Number of cells with hook length <= k.
int k_bounded_hooks(const Partition& shape, int k);

/// sum (i-1) * mu_i.
std::int64_t n_stat(const Partition& mu);

/// Adds every addable corner of residue r. `added` receives the new cells.
Partition add_residue(const Partition& shape, Residue r, int n, std::vector<Cell>* added = nullptr);

/// All n-cores with at most `max_bounded_hooks` (n-1)-bounded hooks, grown by
/// residue closure from the empty core, in canonical order.
std::vector<Partition> enumerate_cores(int n, int max_bounded_hooks);

}  // namespace kcharge
