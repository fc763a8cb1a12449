#include "kcharge/classical.hpp"

#include <algorithm>
#include <functional>

namespace kcharge {

std::int64_t word_charge(std::span<const int> word) {
    int max_letter = 0;
    for (int v : word) {
        if (v < 1) throw DomainError("word letters must be positive");
        max_letter = std::max(max_letter, v);
    }
    std::vector<int> content(max_letter, 0);
    for (int v : word) ++content[v - 1];
    if (!is_partition(content)) throw DomainError("charge needs a word with partition content");

    const int length = static_cast<int>(word.size());
    std::vector<bool> used(word.size(), false);
    std::int64_t total = 0;
    for (int extracted = 0; extracted < length;) {
        // right-most unused 1
        int pos = -1;
        for (int p = length - 1; p >= 0 && pos < 0; --p)
            if (!used[p] && word[p] == 1) pos = p;
        used[pos] = true;
        ++extracted;
        int index = 0;
        for (int letter = 2;; ++letter) {
            int found = -1;
            for (int p = pos - 1; p >= 0 && found < 0; --p)
                if (!used[p] && word[p] == letter) found = p;
            if (found < 0) {
                for (int p = length - 1; p > pos && found < 0; --p)
                    if (!used[p] && word[p] == letter) found = p;
                if (found < 0) break;
                ++index;
            }
            used[found] = true;
            ++extracted;
            total += index;
            pos = found;
        }
    }
    return total;
}

namespace {

void require_semistandard(const Tableau& t) {
    if (!t.is_semistandard()) throw DomainError("classical charge needs a semistandard tableau");
}

}  // namespace

std::int64_t classical_charge(const Tableau& t) {
    require_semistandard(t);
    const auto w = t.reading_word();
    return word_charge(w);
}

std::int64_t classical_cocharge(const Tableau& t) {
    const std::int64_t charge = classical_charge(t);
    return n_stat(Partition(t.content())) - charge;
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, std::span<const int> content) {
    int total = 0;
    for (int c : content) {
        if (c < 1) throw DomainError("content parts must be positive");
        total += c;
    }
    std::vector<Tableau> out;
    if (total != shape.size()) return out;

    std::vector<std::vector<int>> rows(shape.length());
    // letter by letter, each a horizontal strip of the prescribed size
    std::function<void(std::vector<int>&, std::size_t)> grow = [&](std::vector<int>& lengths, std::size_t letter) {
        if (letter == content.size()) {
            out.emplace_back(rows);
            return;
        }
        std::vector<int> old = lengths;
        std::function<void(int, int)> choose = [&](int row, int remaining) {
            if (row > shape.length()) {
                if (remaining == 0) grow(lengths, letter + 1);
                return;
            }
            const int low = old[row - 1];
            int high = shape.row_length(row);
            if (row > 1) high = std::min(high, old[row - 2]);
            for (int len = low; len <= high && len - low <= remaining; ++len) {
                lengths[row - 1] = len;
                for (int c = low; c < len; ++c) rows[row - 1].push_back(static_cast<int>(letter) + 1);
                choose(row + 1, remaining - (len - low));
                rows[row - 1].resize(low);
            }
            lengths[row - 1] = low;
        };
        choose(1, content[letter]);
    };
    std::vector<int> lengths(shape.length(), 0);
    grow(lengths, 0);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

ChargeTable kostka_foulkes_table(const Partition& mu, const std::optional<Partition>& shape) {
    ChargeTable table;
    const auto shapes = shape ? std::vector<Partition>{*shape} : partitions_of(mu.size());
    for (const auto& lambda : shapes)
        for (const auto& t : semistandard_tableaux(lambda, mu.parts()))
            table[lambda].add_term(static_cast<int>(classical_charge(t)), 1);
    return table;
}

}  // namespace kcharge
