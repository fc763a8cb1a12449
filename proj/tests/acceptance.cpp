// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.
// Exit status is 0 only if every criterion passes within its limit.

#include "kcharge/classical.hpp"
#include "kcharge/statistics.hpp"
#include "kcharge/verify.hpp"

#include "support/fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace kcharge;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

template <class F>
std::vector<int> column(const SequenceStatistics& s, F f) {
    std::vector<int> out;
    for (const auto& l : s.letters) out.push_back(f(l));
    return out;
}

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

Outcome table_one() {
    Outcome o;
    const auto t = fixtures::standard_k4();
    const auto seqs = standard_sequences(t);
    o.expect(seqs.size() == 1, "expected one standard sequence");
    if (!o.ok) return o;
    const auto s = sequence_statistics(seqs[0], 4);
    o.expect(column(s, [](auto& l) { return l.L; }) == std::vector<int>{0, 0, 0, 1, 1, 2, 2, 4, 3}, "L column");
    o.expect(column(s, [](auto& l) { return l.M; }) == std::vector<int>{0, 0, 0, 1, 1, 2, 2, 3, 3}, "M column");
    o.expect(column(s, [](auto& l) { return l.diag_low_addable; }) == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 1, 0},
             "diag(i_low, c_(i)) column");
    o.expect(k_cocharge(t, Formulation::LapointePinto) == 13, "LP cocharge != 13");
    o.expect(k_cocharge(t, Formulation::Morse) == 13, "Morse cocharge != 13");
    return o;
}

Outcome table_two() {
    Outcome o;
    const auto t = fixtures::standard_k4();
    const auto s = sequence_statistics(standard_sequences(t).at(0), 4);
    o.expect(column(s, [](auto& l) { return l.I; }) == std::vector<int>{0, 1, 2, 2, 2, 3, 3, 3, 5}, "I column");
    o.expect(column(s, [](auto& l) { return l.J; }) == std::vector<int>{0, 1, 2, 2, 2, 3, 3, 3, 4}, "J column");
    o.expect(column(s, [](auto& l) { return l.diag_high_addable; }) == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 0, 1},
             "diag(i_high, c^(i)) column");
    o.expect(k_charge(t, Formulation::LapointePinto) == 21, "LP charge != 21");
    o.expect(k_charge(t, Formulation::Morse) == 21, "Morse charge != 21");
    return o;
}

Outcome table_three() {
    Outcome o;
    const auto t = fixtures::semistandard_k4();
    const auto a = analyze(t);
    o.expect(a.statistics.size() == 2, "expected two standard sequences");
    if (!o.ok) return o;
    o.expect(a.statistics[0].sum_I() == 5 && a.statistics[1].sum_I() == 7, "per-sequence I sums != 5, 7");
    o.expect(a.statistics[0].morse_charge() == 5 && a.statistics[1].morse_charge() == 7,
             "per-sequence (J+diag) sums != 5, 7");
    o.expect(a.charge_lp == 12 && a.charge_morse == 12, "k-charge != 12");
    o.expect(a.cocharge_lp == 16 && a.cocharge_morse == 16, "k-cocharge != 16");
    const auto n = n_stat(Partition({2, 2, 2, 2, 2, 2, 1}));
    const auto interior = static_cast<std::int64_t>(k_interior(Partition({9, 5, 3, 2, 1, 1}), 4).size());
    o.expect(n == 36 && interior == 8, "n(mu) or |Int^4| wrong");
    o.expect(a.charge_morse + a.cocharge_morse == n - interior, "charge + cocharge != 36 - 8");
    return o;
}

Outcome enumeration_counts() {
    Outcome o;
    const std::vector<int> w1{3, 2, 1};
    const std::vector<KTableau> want1{
        KTableau(3, {{1, 1, 1, 2, 2}, {2, 2}, {3}}),
        KTableau(3, {{1, 1, 1, 2, 2, 3}, {2, 2, 3}}),
    };
    o.expect(enumerate_k_tableaux(3, w1) == want1, "k=3 weight (3,2,1) fillings differ");
    const std::vector<int> w2{1, 1, 1, 1};
    const std::vector<KTableau> want2{
        KTableau(2, {{1, 2, 3}, {3}, {4}}),
        KTableau(2, {{1, 3, 4}, {2}, {3}}),
        KTableau(2, {{1, 2, 3, 4}, {3, 4}}),
        KTableau(2, {{1, 3}, {2, 4}, {3}, {4}}),
    };
    o.expect(enumerate_k_tableaux(2, w2) == want2, "k=2 weight (1^4) fillings differ");
    return o;
}

Outcome equivalence_sweep() {
    Outcome o;
    VerifyOptions opts;
    opts.min_k = 1;
    opts.max_k = 4;
    opts.max_weight = 6;
    opts.threads = 1;
    const auto report = verify_sweep(opts);
    o.expect(report.tableaux > 0, "sweep visited no tableaux");
    for (const auto& c : report.checks)
        o.expect(c.failed == 0, "check " + c.name + " failed" +
                                    (report.first_failure ? " on\n" + report.first_failure->tableau : ""));
    std::ostringstream os;
    os << report.tableaux << " tableaux over " << report.weights << " weights";
    if (o.ok) o.detail = os.str();
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::int64_t weights = 0, tableaux = 0;
    auto sweep = [&](int k, int max_size) {
        for (int n = 1; n <= max_size; ++n)
            for (const auto& w : compositions(n, k)) {
                const auto fast = enumerate_k_tableaux(k, w, std::nullopt, Strategy::Fast);
                const auto oracle = enumerate_k_tableaux(k, w, std::nullopt, Strategy::Oracle);
                ++weights;
                tableaux += static_cast<std::int64_t>(oracle.size());
                std::ostringstream os;
                os << "k=" << k << " weight";
                for (int p : w) os << ' ' << p;
                o.expect(fast == oracle, "fast and oracle differ for " + os.str());
            }
    };
    for (int k = 1; k <= 3; ++k) sweep(k, 6);
    sweep(4, 5);
    if (o.ok) o.detail = std::to_string(tableaux) + " tableaux over " + std::to_string(weights) + " compositions";
    return o;
}

Outcome large_k() {
    Outcome o;
    std::int64_t shapes = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            const auto affine = charge_table(n, mu);
            const auto classical = kostka_foulkes_table(mu);
            o.expect(affine == classical, "tables differ for weight " + mu.to_string());
            shapes += static_cast<std::int64_t>(classical.size());
        }
    const auto t = charge_table(3, Partition({1, 1, 1}));
    o.expect(t.count(Partition({2, 1})) && t.at(Partition({2, 1})).to_string() == "t + t^2",
             "K_(2,1),(1,1,1) != t + t^2");
    if (o.ok) o.detail = std::to_string(shapes) + " table rows";
    return o;
}

Outcome core_invariants() {
    Outcome o;
    std::int64_t cores = 0;
    for (int n = 2; n <= 5; ++n)
        for (int m = 0; m <= 12; ++m)
            for (const auto& lambda : partitions_of(m)) {
                if (!is_n_core(lambda, n)) continue;
                ++cores;
                std::vector<bool> addable(n, false), removable(n, false);
                for (const auto& c : addable_corners(lambda, n)) addable[c.residue.value] = true;
                for (const auto& c : removable_corners(lambda, n)) removable[c.residue.value] = true;
                for (int r = 0; r < n; ++r)
                    o.expect(!(addable[r] && removable[r]),
                             "residue " + std::to_string(r) + " both addable and removable in " + lambda.to_string());

                std::vector<Cell> extremal;
                for (const Cell c : lambda.cells())
                    if (!lambda.contains({c.row + 1, c.col + 1})) extremal.push_back(c);
                auto row_end = [&](Cell c) { return !lambda.contains({c.row, c.col + 1}); };
                auto column_top = [&](Cell c) { return !lambda.contains({c.row + 1, c.col}); };
                for (const Cell c : extremal)
                    for (const Cell d : extremal) {
                        if (residue(c, n) != residue(d, n)) continue;
                        if (d.row >= c.row && d.col <= c.col && row_end(c))
                            o.expect(row_end(d), "row-end propagation fails in " + lambda.to_string());
                        if (d.row <= c.row && d.col >= c.col && column_top(c))
                            o.expect(column_top(d), "column-top propagation fails in " + lambda.to_string());
                    }
            }
    if (o.ok) o.detail = std::to_string(cores) + " cores";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "cocharge table of the standard 4-tableau", 1.0, table_one},
        {2, "charge table of the standard 4-tableau", 1.0, table_two},
        {3, "charge table of the semi-standard 4-tableau", 1.0, table_three},
        {4, "enumeration counts and fillings", 1.0, enumeration_counts},
        {5, "formulation equivalence sweep", 300.0, equivalence_sweep},
        {6, "fast vs oracle enumeration", 600.0, oracle_equivalence},
        {7, "large-k degeneration to Kostka-Foulkes", 60.0, large_k},
        {8, "core invariants", 60.0, core_invariants},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.limit_seconds) {
            o.ok = false;
            o.detail = "exceeded time limit";
        }
        if (!o.ok) ++failures;
        std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_seconds, o.detail.empty() ? "" : " - ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
