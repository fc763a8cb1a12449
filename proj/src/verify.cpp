#include "kcharge/verify.hpp"

#include "kcharge/classical.hpp"
#include "kcharge/serialize.hpp"
#include "kcharge/statistics.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace kcharge {

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = {
        "valid",
        "restriction_core",
        "letter_one_strip",
        "sequence_partition",
        "sequence_entries",
        "cocharge_lp_equals_morse",
        "charge_lp_equals_morse",
        "charge_cocharge_duality",
        "morse_nonnegative",
        "standard_duality",
        "diagonal_filling",
        "diagonal_count",
        "large_k_classical",
        "oracle_equivalence",
    };
    return names;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

class Recorder {
public:
    Recorder(VerifyReport& report, const KTableau* t, std::vector<int> weight, int k)
        : report_(report), t_(t), weight_(std::move(weight)), k_(k) {}

    void record(const std::string& name, bool ok, const std::string& detail = {}) {
        auto& tally = tally_for(name);
        ++tally.checked;
        if (ok) return;
        ++tally.failed;
        if (!report_.first_failure)
            report_.first_failure = Counterexample{name, k_, weight_, t_ ? to_text(*t_) : std::string{}, detail};
    }

private:
    CheckTally& tally_for(const std::string& name) {
        for (auto& c : report_.checks)
            if (c.name == name) return c;
        throw std::logic_error("unknown check " + name);
    }

    VerifyReport& report_;
    const KTableau* t_;
    std::vector<int> weight_;
    int k_;
};

void init_checks(VerifyReport& report) {
    if (!report.checks.empty()) return;
    for (const auto& n : verify_check_names()) report.checks.push_back({n});
}

void check_sequences(const KTableau& t, const std::vector<StandardSequence>& seqs, Recorder& rec) {
    std::vector<Cell> all;
    bool entries_ok = true;
    std::string detail;
    for (const auto& s : seqs)
        for (const auto& e : s.entries()) {
            std::set<int> rows, cols;
            for (const Cell c : e.cells) {
                all.push_back(c);
                const bool ok = t.letter(c) == e.letter && t.residue_of(c) == e.residue && rows.insert(c.row).second &&
                                cols.insert(c.col).second;
                if (!ok && entries_ok) {
                    entries_ok = false;
                    detail = "entry " + std::to_string(e.letter) + "_" + std::to_string(e.residue.value) +
                             " breaks the one-residue, distinct-rows-and-columns rule";
                }
            }
        }
    rec.record("sequence_entries", entries_ok, detail);
    std::sort(all.begin(), all.end());
    const bool disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
    rec.record("sequence_partition", disjoint && all == t.shape().cells(),
               "standard sequence cells do not partition the tableau");
}

// Every residue-res(i) diagonal strictly between i_high and i_low carries an i,
// and beta_i + both addable corrections counts the residue-res(i) diagonals of T_{<=i}.
void check_standard_identities(const KTableau& t, const StandardSequence& s, const SequenceStatistics& stats,
                           Recorder& rec) {
    const int n = t.modulus();
    bool filling = true;
    bool count = true;
    std::string filling_detail, count_detail;
    CellSet restriction;
    for (int i = 1; i <= s.length(); ++i) {
        const auto& e = s.entry(i);
        restriction.merge(e.cells);
        const auto& row = stats.letters[i - 1];
        std::set<int> own;
        for (const Cell c : e.cells) own.insert(c.diagonal());
        const int lo = std::min(row.lowest.diagonal(), row.highest.diagonal());
        const int hi = std::max(row.lowest.diagonal(), row.highest.diagonal());
        for (int d = lo + 1; d < hi; ++d)
            if (((d % n) + n) % n == e.residue.value && !own.count(d) && filling) {
                filling = false;
                filling_detail = "diagonal " + std::to_string(d) + " lacks letter " + std::to_string(i);
            }
        std::set<int> diagonals;
        for (const Cell c : restriction)
            if (residue(c, n) == e.residue) diagonals.insert(c.diagonal());
        const int lhs = static_cast<int>(e.cells.size()) + row.diag_high_addable + row.diag_low_addable;
        if (lhs != static_cast<int>(diagonals.size()) && count) {
            count = false;
            count_detail = "letter " + std::to_string(i) + ": " + std::to_string(lhs) + " != " +
                           std::to_string(diagonals.size()) + " diagonals";
        }
    }
    rec.record("diagonal_filling", filling, filling_detail);
    rec.record("diagonal_count", count, count_detail);
}

}  // namespace

void verify_tableau(const KTableau& t, VerifyReport& report) {
    init_checks(report);
    const auto weight = t.weight();
    const int k = t.k();
    Recorder rec(report, &t, weight, k);
    ++report.tableaux;

    const auto validation = validate(t);
    rec.record("valid", validation.valid, validation.message);

    bool restriction_ok = true;
    for (int i = 1; i <= t.max_letter(); ++i)
        restriction_ok = restriction_ok && is_n_core(restrict_leq(t, i).shape(), k + 1);
    rec.record("restriction_core", restriction_ok, "a restriction T_{<=i} is not a core");

    if (!weight.empty()) {
        const CellSet ones = t.cells_of(1);
        std::vector<Cell> expected;
        for (int c = 1; c <= weight[0]; ++c) expected.push_back({1, c});
        rec.record("letter_one_strip", ones.cells() == expected, "letter 1 does not fill (1,1)..(1,alpha_1)");
    }

    const auto analysis = analyze(t);
    report.same_residue_steps += same_residue_steps(analysis.sequences);
    check_sequences(t, analysis.sequences, rec);

    auto pair = [](std::int64_t a, std::int64_t b) { return std::to_string(a) + " vs " + std::to_string(b); };
    rec.record("cocharge_lp_equals_morse", analysis.cocharge_lp == analysis.cocharge_morse,
               "cocharge lp vs morse: " + pair(analysis.cocharge_lp, analysis.cocharge_morse));
    rec.record("charge_lp_equals_morse", analysis.charge_lp == analysis.charge_morse,
               "charge lp vs morse: " + pair(analysis.charge_lp, analysis.charge_morse));

    const Partition mu(weight);
    const std::int64_t interior = static_cast<std::int64_t>(k_interior(t.shape(), k).size());
    const std::int64_t target = n_stat(mu) - interior;
    rec.record("charge_cocharge_duality", analysis.charge_morse + analysis.cocharge_morse == target,
               "charge + cocharge = " + std::to_string(analysis.charge_morse + analysis.cocharge_morse) +
                   ", expected " + std::to_string(target));

    bool nonnegative = true;
    for (const auto& stats : analysis.statistics)
        for (const auto& row : stats.letters)
            nonnegative = nonnegative && row.M >= 0 && row.J >= 0 && row.diag_low_addable >= 0 &&
                          row.diag_high_addable >= 0;
    rec.record("morse_nonnegative", nonnegative && analysis.charge_morse >= 0 && analysis.cocharge_morse >= 0,
               "negative Morse term");

    const bool standard = std::all_of(weight.begin(), weight.end(), [](int w) { return w == 1; });
    if (standard && !analysis.sequences.empty()) {
        ++report.standard_tableaux;
        const std::int64_t m = static_cast<std::int64_t>(weight.size());
        const auto& stats = analysis.statistics.front();
        rec.record("standard_duality", stats.morse_charge() == m * (m - 1) / 2 - interior - stats.morse_cocharge(),
                   "J-side " + std::to_string(stats.morse_charge()) + " vs m(m-1)/2 - |Int| - M-side");
        check_standard_identities(t, analysis.sequences.front(), stats, rec);
    }

    const auto& shape = t.shape();
    if (!shape.empty() && k > shape.parts().front() + shape.length() - 2) {
        const bool ssyt = t.filling().is_semistandard() && t.filling().content() == weight;
        bool ok = ssyt;
        std::string detail = "not a classical semistandard tableau of the same weight";
        if (ssyt) {
            const auto charge = classical_charge(t.filling());
            const auto cocharge = classical_cocharge(t.filling());
            ok = charge == analysis.charge_morse && cocharge == analysis.cocharge_morse;
            detail = "classical charge/cocharge " + pair(charge, cocharge) + ", k-statistics " +
                     pair(analysis.charge_morse, analysis.cocharge_morse);
        }
        rec.record("large_k_classical", ok, detail);
    }
}

namespace {

std::vector<std::vector<int>> bounded_partitions(int size, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(size, max_part);
    return out;
}

void merge_into(VerifyReport& total, const VerifyReport& part) {
    init_checks(total);
    total.weights += part.weights;
    total.tableaux += part.tableaux;
    total.standard_tableaux += part.standard_tableaux;
    total.same_residue_steps += part.same_residue_steps;
    for (std::size_t i = 0; i < part.checks.size(); ++i) {
        total.checks[i].checked += part.checks[i].checked;
        total.checks[i].failed += part.checks[i].failed;
    }
    if (!total.first_failure && part.first_failure) total.first_failure = part.first_failure;
}

}  // namespace

VerifyReport verify_sweep(const VerifyOptions& options) {
    if (options.min_k < 1 || options.max_k < options.min_k) throw DomainError("k bounds must satisfy 1 <= min <= max");
    if (options.max_weight < 0) throw DomainError("weight bound must be non-negative");

    struct Job {
        int k;
        std::vector<int> weight;
    };
    std::vector<Job> jobs;
    for (int k = options.min_k; k <= options.max_k; ++k)
        for (int size = 1; size <= options.max_weight; ++size)
            for (auto& w : bounded_partitions(size, k)) jobs.push_back({k, std::move(w)});

    std::vector<VerifyReport> parts(jobs.size());
    detail::parallel_for(jobs.size(), options.threads, [&](std::size_t j) {
        auto& part = parts[j];
        init_checks(part);
        ++part.weights;
        const auto& job = jobs[j];
        const auto fast = enumerate_k_tableaux(job.k, job.weight, std::nullopt, Strategy::Fast);
        for (const auto& t : fast) verify_tableau(t, part);
        if (options.check_oracle) {
            const auto oracle = enumerate_k_tableaux(job.k, job.weight, std::nullopt, Strategy::Oracle);
            Recorder rec(part, nullptr, job.weight, job.k);
            rec.record("oracle_equivalence", oracle == fast,
                       "fast found " + std::to_string(fast.size()) + ", oracle " + std::to_string(oracle.size()) +
                           " for weight " + join(job.weight));
        }
    });

    VerifyReport total;
    total.options = options;
    init_checks(total);
    for (const auto& p : parts) merge_into(total, p);
    return total;
}

}  // namespace kcharge
