#include "kcharge/tableau.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

using namespace kcharge;

namespace {

std::vector<std::vector<int>> compositions(int n, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= std::min(left, max_part); ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

}  // namespace

TEST_CASE("tableau basics") {
    const Tableau t({{1, 1, 2}, {2, 3}});
    CHECK(t.shape() == Partition({3, 2}));
    CHECK(t.letter({2, 2}) == 3);
    CHECK(t.max_letter() == 3);
    CHECK(t.content() == std::vector<int>{2, 2, 1});
    CHECK(t.reading_word() == std::vector<int>{2, 3, 1, 1, 2});
    CHECK(t.bottom_up_word() == std::vector<int>{1, 1, 2, 2, 3});
    CHECK(t.is_semistandard());
    CHECK_FALSE(Tableau({{1, 2}, {1}}).is_semistandard());
    CHECK_FALSE(Tableau({{2, 1}}).is_semistandard());
    CHECK_THROWS_AS(Tableau({{1}, {1, 2}}), DomainError);
    CHECK_THROWS_AS(Tableau(std::vector<std::vector<int>>{{0}}), DomainError);
}

TEST_CASE("weights count distinct residues") {
    CHECK(fixtures::weight_222_k3().weight() == std::vector<int>{2, 2, 2});
    CHECK(fixtures::standard_k4().weight() == std::vector<int>(9, 1));
    CHECK(fixtures::semistandard_k4().weight() == std::vector<int>{2, 2, 2, 2, 2, 2, 1});
}

TEST_CASE("validation") {
    CHECK(validate(fixtures::weight_222_k3()).valid);
    CHECK(validate(fixtures::standard_k4()).valid);
    CHECK(validate(fixtures::semistandard_k4()).valid);

    SUBCASE("residue count below the expected weight") {
        // Letter 3 sits on one residue only.
        const KTableau t(3, {{1, 1, 2, 2, 3}, {2, 3}, {4}});
        REQUIRE(validate(t).valid);
        const std::vector<int> expected{2, 2, 2};
        const auto v = validate(t, std::span<const int>(expected));
        CHECK_FALSE(v.valid);
        CHECK(v.message.find("letter 3") != std::string::npos);
    }
    SUBCASE("shape that is not a (k+1)-core") {
        const auto v = validate(KTableau(2, {{1, 2}, {3, 4}}));
        CHECK_FALSE(v.valid);
        CHECK(v.message.find("core") != std::string::npos);
        // The same diagram is a 4-core, and this filling is a valid 3-tableau.
        CHECK(validate(KTableau(3, {{1, 2}, {3, 4}})).valid);
    }
    SUBCASE("column strictness") {
        const auto v = validate(KTableau(3, {{1, 2}, {1}}));
        CHECK_FALSE(v.valid);
        REQUIRE(v.cell.has_value());
        CHECK(*v.cell == Cell{2, 1});
    }
    SUBCASE("bounded hook total") {
        // Three residue classes on a 2-core with two bounded hooks.
        CHECK_FALSE(validate(KTableau(1, {{1, 2}, {3}})).valid);
    }
}

TEST_CASE("restriction to small letters") {
    const auto t = fixtures::standard_k4();
    const auto r5 = restrict_leq(t, 5);
    CHECK(r5 == KTableau(4, {{1, 2, 3, 5}, {4}, {5}}));
    CHECK(r5.shape() == Partition({4, 1, 1}));
    CHECK(restrict_leq(t, 9) == t);
    CHECK(restrict_leq(t, 1) == KTableau(4, std::vector<std::vector<int>>{{1}}));
    CHECK(restrict_leq(fixtures::semistandard_k4(), 1) == KTableau(4, {{1, 1}}));
    CHECK_THROWS_AS(restrict_leq(t, 0), DomainError);
    CHECK_THROWS_AS(restrict_leq(t, 10), DomainError);
}

TEST_CASE("standard sequences of a standard tableau") {
    const auto t = fixtures::standard_k4();
    const auto seqs = standard_sequences(t);
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].length() == 9);
    CHECK(lowest_occurrence(seqs[0], 5) == Cell{1, 4});
    CHECK(highest_occurrence(seqs[0], 5) == Cell{3, 1});
    CHECK(lowest_occurrence(seqs[0], 1) == highest_occurrence(seqs[0], 1));
    CHECK(restrict_sequence(seqs[0], 9) == CellSet::of(t.shape()));
    CHECK(restrict_sequence(seqs[0], 5) == CellSet::of(Partition({4, 1, 1})));
    CHECK_THROWS_AS(lowest_occurrence(seqs[0], 10), DomainError);
}

TEST_CASE("standard sequences of a semi-standard tableau") {
    const auto t = fixtures::semistandard_k4();
    const auto seqs = standard_sequences(t);
    REQUIRE(seqs.size() == 2);

    // First sequence starts at the right-most 1 and takes 5 at residue 2.
    std::vector<int> first, second;
    for (const auto& e : seqs[0].entries()) first.push_back(e.residue.value);
    for (const auto& e : seqs[1].entries()) second.push_back(e.residue.value);
    CHECK(first == std::vector<int>{1, 4, 3, 0, 2, 1, 0});
    CHECK(second == std::vector<int>{0, 2, 0, 4, 1, 3});
    CHECK(seqs[0].entry(5).cells == CellSet({{1, 8}, {2, 4}, {4, 1}}));
    CHECK(highest_occurrence(seqs[0], 7) == Cell{6, 1});
    CHECK_FALSE(seqs[1].has(7));
    CHECK_THROWS_AS(restrict_sequence(seqs[1], 7), DomainError);

    CHECK(restrict_sequence(seqs[1], 5) == CellSet({{1, 1}, {1, 3}, {1, 5}, {1, 7}, {2, 2}, {2, 3}, {3, 2}}));
    CHECK(restrict_sequence(seqs[1], 1) == CellSet({{1, 1}}));

    // Sequences partition the cells.
    CellSet all;
    std::size_t total = 0;
    for (const auto& s : seqs)
        for (const auto& e : s.entries()) {
            all.merge(e.cells);
            total += e.cells.size();
        }
    CHECK(total == all.size());
    CHECK(all == CellSet::of(t.shape()));
    CHECK(same_residue_steps(seqs) == 0);
}

TEST_CASE("standard sequences need a partition weight with parts <= k") {
    const std::vector<int> composition{1, 2};
    const auto found = enumerate_k_tableaux(2, composition);
    REQUIRE_FALSE(found.empty());
    const auto& t = found.front();
    CHECK_THROWS_AS(standard_sequences(t), DomainError);
}

TEST_CASE("the two 3-tableaux of weight (3,2,1)") {
    const std::vector<int> w{3, 2, 1};
    const auto got = enumerate_k_tableaux(3, w);
    const std::vector<KTableau> want{
        KTableau(3, {{1, 1, 1, 2, 2}, {2, 2}, {3}}),
        KTableau(3, {{1, 1, 1, 2, 2, 3}, {2, 2, 3}}),
    };
    CHECK(got == want);
    CHECK(got[0].shape() == Partition({5, 2, 1}));
    CHECK(got[1].shape() == Partition({6, 3}));
}

TEST_CASE("the four standard 2-tableaux on four letters") {
    const std::vector<int> w{1, 1, 1, 1};
    const auto got = enumerate_k_tableaux(2, w);
    const std::vector<KTableau> want{
        KTableau(2, {{1, 2, 3}, {3}, {4}}),
        KTableau(2, {{1, 3, 4}, {2}, {3}}),
        KTableau(2, {{1, 2, 3, 4}, {3, 4}}),
        KTableau(2, {{1, 3}, {2, 4}, {3}, {4}}),
    };
    CHECK(got == want);
    CHECK(enumerate_k_tableaux(2, w, Partition({3, 1, 1})).size() == 2);
    CHECK(enumerate_k_tableaux(2, w, Partition({3, 1})).empty());
}

TEST_CASE("single letter") {
    const std::vector<int> w{1};
    for (int k = 1; k <= 6; ++k) {
        const auto got = enumerate_k_tableaux(k, w);
        REQUIRE(got.size() == 1);
        CHECK(got[0] == KTableau(k, std::vector<std::vector<int>>{{1}}));
    }
}

TEST_CASE("enumeration rejects parts larger than k") {
    const std::vector<int> w{3, 1};
    CHECK_THROWS_AS(enumerate_k_tableaux(2, w), DomainError);
    const std::vector<int> zero{1, 0};
    CHECK_THROWS_AS(enumerate_k_tableaux(2, zero), DomainError);
}

TEST_CASE("fast enumeration agrees with the brute-force oracle on compositions") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 5; ++n)
            for (const auto& w : compositions(n, k)) {
                const auto fast = enumerate_k_tableaux(k, w, std::nullopt, Strategy::Fast);
                const auto oracle = enumerate_k_tableaux(k, w, std::nullopt, Strategy::Oracle);
                CHECK(fast == oracle);
                CHECK(std::is_sorted(fast.begin(), fast.end(),
                                     [](const KTableau& a, const KTableau& b) { return canonical_less(a, b); }));
                for (const auto& t : fast) {
                    CHECK(validate(t, std::span<const int>(w)).valid);
                    for (int i = 1; i <= t.max_letter(); ++i) CHECK(is_n_core(restrict_leq(t, i).shape(), k + 1));
                }
            }
}

TEST_CASE("letter 1 fills the start of the bottom row") {
    const std::vector<int> w{3, 2, 2, 1};
    for (const auto& t : enumerate_k_tableaux(3, w)) {
        CHECK(t.cells_of(1) == CellSet({{1, 1}, {1, 2}, {1, 3}}));
    }
}
