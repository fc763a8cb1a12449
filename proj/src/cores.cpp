#include "kcharge/cores.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace kcharge {

namespace {

void require_modulus(int n) {
    if (n < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(n));
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

Residue residue(Cell c, int n) {
    require_modulus(n);
    const int d = c.diagonal() % n;
    return Residue{d < 0 ? d + n : d};
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
    if (!parts_.empty() && (parts_.front() > kMaxExtent || length() > kMaxExtent))
        throw DomainError("partition exceeds the supported extent of 10^6 rows or columns");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_length(int row) const noexcept {
    return (row >= 1 && row <= length()) ? parts_[row - 1] : 0;
}

int Partition::column_height(int col) const noexcept {
    if (col < 1) return 0;
    // parts are decreasing, so the rows reaching `col` form a prefix
    const auto it = std::partition_point(parts_.begin(), parts_.end(), [col](int p) { return p >= col; });
    return static_cast<int>(it - parts_.begin());
}

bool Partition::contains(Cell c) const noexcept {
    return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.reserve(parts_.front());
        for (int col = 1; col <= parts_.front(); ++col) conj.push_back(column_height(col));
    }
    return Partition(std::move(conj));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(size_);
    for (int r = 1; r <= length(); ++r)
        for (int c = 1; c <= parts_[r - 1]; ++c) out.push_back({r, c});
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Partition Partition::parse(std::string_view text) {
    auto body = trim(text);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("unbalanced parenthesis in partition '" + std::string(text) + "'");
        body = trim(body.substr(1, body.size() - 2));
    }
    std::vector<int> parts;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const auto token = trim(body.substr(0, comma));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError("bad partition part '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
        if (trim(body).empty()) throw ParseError("trailing comma in partition");
    }
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(), a.parts().end());
}

CellSet::CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

CellSet CellSet::of(const Partition& shape) { return CellSet(shape.cells()); }

void CellSet::insert(Cell c) {
    const auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) cells_.insert(it, c);
}

void CellSet::merge(const CellSet& other) {
    std::vector<Cell> out;
    out.reserve(cells_.size() + other.cells_.size());
    std::set_union(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(), std::back_inserter(out));
    cells_ = std::move(out);
}

bool CellSet::contains(Cell c) const noexcept { return std::binary_search(cells_.begin(), cells_.end(), c); }

int hook_length(const Partition& shape, Cell c) {
    if (!shape.contains(c))
        throw DomainError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is not in " +
                          shape.to_string());
    const int arm = shape.row_length(c.row) - c.col;
    const int leg = shape.column_height(c.col) - c.row;
    return arm + leg + 1;
}

namespace {

// Calls f(hook) for every cell; uses the conjugate once instead of per cell.
template <class F>
void for_each_hook(const Partition& shape, F&& f) {
    const auto parts = shape.parts();
    if (parts.empty()) return;
    std::vector<int> heights(parts.front());
    for (int col = 1; col <= parts.front(); ++col) heights[col - 1] = shape.column_height(col);
    for (int row = 1; row <= shape.length(); ++row)
        for (int col = 1; col <= parts[row - 1]; ++col)
            f(Cell{row, col}, parts[row - 1] - col + heights[col - 1] - row + 1);
}

}  // namespace

bool is_n_core(const Partition& shape, int n) {
    require_modulus(n);
    bool core = true;
    for_each_hook(shape, [&](Cell, int h) { core = core && h != n; });
    return core;
}

std::vector<Corner> addable_corners(const Partition& shape, int n) {
    std::vector<Corner> out;
    for (int row = 1; row <= shape.length() + 1; ++row) {
        const Cell c{row, shape.row_length(row) + 1};
        // row 1 sits on the virtual row 0, so it is always extendable
        if (row == 1 || shape.row_length(row - 1) >= c.col) out.push_back({c, residue(c, n)});
    }
    return out;
}

std::vector<Corner> removable_corners(const Partition& shape, int n) {
    std::vector<Corner> out;
    for (int row = 1; row <= shape.length(); ++row) {
        const Cell c{row, shape.row_length(row)};
        if (shape.row_length(row + 1) < c.col) out.push_back({c, residue(c, n)});
    }
    return out;
}

CellSet k_interior(const Partition& shape, int k) {
    if (k < 1) throw DomainError("k must be positive");
    std::vector<Cell> cells;
    for_each_hook(shape, [&](Cell c, int h) {
        if (h > k) cells.push_back(c);
    });
    return CellSet(std::move(cells));
}

int k_bounded_hooks(const Partition& shape, int k) {
    int count = 0;
    for_each_hook(shape, [&](Cell, int h) { count += h <= k ? 1 : 0; });
    return count;
}

std::int64_t n_stat(const Partition& mu) {
    std::int64_t total = 0;
    for (int i = 0; i < mu.length(); ++i) total += static_cast<std::int64_t>(i) * mu.parts()[i];
    return total;
}

Partition add_residue(const Partition& shape, Residue r, int n, std::vector<Cell>* added) {
    std::vector<int> rows(shape.parts().begin(), shape.parts().end());
    for (const auto& corner : addable_corners(shape, n)) {
        if (corner.residue != r) continue;
        if (corner.cell.row > static_cast<int>(rows.size())) rows.push_back(0);
        ++rows[corner.cell.row - 1];
        if (added) added->push_back(corner.cell);
    }
    return Partition(std::move(rows));
}

std::vector<Partition> enumerate_cores(int n, int max_bounded_hooks) {
    require_modulus(n);
    if (max_bounded_hooks < 0) throw DomainError("bound must be non-negative");
    std::set<Partition, CanonicalLess> seen{Partition{}};
    std::deque<Partition> frontier{Partition{}};
    while (!frontier.empty()) {
        const Partition core = std::move(frontier.front());
        frontier.pop_front();
        for (int r = 0; r < n; ++r) {
            std::vector<Cell> added;
            Partition next = add_residue(core, Residue{r}, n, &added);
            if (added.empty() || k_bounded_hooks(next, n - 1) > max_bounded_hooks) continue;
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace kcharge
