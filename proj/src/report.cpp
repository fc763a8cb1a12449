#include "kcharge/report.hpp"

#include "kcharge/classical.hpp"
#include "json_util.hpp"

#include <iomanip>
#include <sstream>

namespace kcharge {

using detail::json;

namespace {

std::string list_str(std::span<const int> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string cell_str(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

std::string label(const LetterStatistics& row) {
    return std::to_string(row.letter) + "_" + std::to_string(row.residue.value);
}

std::vector<int> order_values(const ResidueOrder& o) {
    std::vector<int> out;
    for (const auto r : o.descending()) out.push_back(r.value);
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Left-aligned fixed-width table.
std::string render(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::ostringstream os;
    for (const auto& row : cells) {
        std::string line = "  ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << line << '\n';
    }
    return os.str();
}

}  // namespace

std::string enumerate_report(int k, std::span<const int> weight, std::span<const KTableau> tableaux, Format format) {
    if (format == Format::Json) {
        json j;
        j["k"] = k;
        j["weight"] = std::vector<int>(weight.begin(), weight.end());
        j["count"] = tableaux.size();
        j["tableaux"] = json::array();
        for (const auto& t : tableaux) j["tableaux"].push_back(detail::tableau_json(t));
        return dump(j);
    }
    std::ostringstream os;
    for (const auto& t : tableaux) os << to_text(t) << '\n';
    os << "count: " << tableaux.size() << '\n';
    return os.str();
}

std::string stat_report(const KTableau& t, Format format) {
    const auto analysis = analyze(t);
    const auto weight = t.weight();
    const std::int64_t n_weight = n_stat(Partition(weight));
    const auto interior = k_interior(t.shape(), t.k()).size();

    if (format == Format::Json) {
        json j;
        j["k"] = t.k();
        j["shape"] = std::vector<int>(t.shape().parts().begin(), t.shape().parts().end());
        j["weight"] = weight;
        j["k_cocharge"] = {{"lp", analysis.cocharge_lp}, {"morse", analysis.cocharge_morse}};
        j["k_charge"] = {{"lp", analysis.charge_lp}, {"morse", analysis.charge_morse}};
        j["n_weight"] = n_weight;
        j["interior"] = interior;
        j["sequences"] = json::array();
        for (const auto& stats : analysis.statistics) {
            json s;
            s["letters"] = json::array();
            for (const auto& row : stats.letters) {
                s["letters"].push_back({
                    {"letter", row.letter},
                    {"residue", row.residue.value},
                    {"lowest", detail::cell_json(row.lowest)},
                    {"highest", detail::cell_json(row.highest)},
                    {"diag_lowest_previous", row.diag_lowest_previous},
                    {"diag_highest_previous", row.diag_highest_previous},
                    {"L", row.L},
                    {"M", row.M},
                    {"I", row.I},
                    {"J", row.J},
                    {"low_order", order_values(row.low)},
                    {"high_order", order_values(row.high)},
                    {"lowest_addable", detail::cell_json(row.low_addable)},
                    {"highest_addable", detail::cell_json(row.high_addable)},
                    {"diag_lowest_addable", row.diag_low_addable},
                    {"diag_highest_addable", row.diag_high_addable},
                });
            }
            s["sum_L"] = stats.sum_L();
            s["sum_I"] = stats.sum_I();
            s["morse_cocharge"] = stats.morse_cocharge();
            s["morse_charge"] = stats.morse_charge();
            j["sequences"].push_back(std::move(s));
        }
        return dump(j);
    }

    std::ostringstream os;
    os << "k=" << t.k() << " shape=" << t.shape().to_string() << " weight=" << list_str(weight) << '\n';
    os << "k-cocharge: lp=" << analysis.cocharge_lp << " morse=" << analysis.cocharge_morse << '\n';
    os << "k-charge: lp=" << analysis.charge_lp << " morse=" << analysis.charge_morse << '\n';
    os << "n(weight)=" << n_weight << " |Int^k(shape)|=" << interior << '\n';
    for (std::size_t s = 0; s < analysis.statistics.size(); ++s) {
        const auto& stats = analysis.statistics[s];
        os << "\nsequence " << s + 1 << " of " << analysis.statistics.size() << '\n';
        std::vector<std::vector<std::string>> low{
            {"i_r", "low", "diag(low,prev)", "L", "low order", "M", "diag(low,c_(i))"}};
        std::vector<std::vector<std::string>> high{
            {"i_r", "high", "diag(high,prev)", "I", "high order", "J", "diag(high,c^(i))"}};
        for (const auto& row : stats.letters) {
            const bool first = row.letter == 1;
            low.push_back({label(row), cell_str(row.lowest), first ? "-" : std::to_string(row.diag_lowest_previous),
                           std::to_string(row.L), first ? "-" : row.low.to_string(), std::to_string(row.M),
                           std::to_string(row.diag_low_addable)});
            high.push_back({label(row), cell_str(row.highest),
                            first ? "-" : std::to_string(row.diag_highest_previous), std::to_string(row.I),
                            first ? "-" : row.high.to_string(), std::to_string(row.J),
                            std::to_string(row.diag_high_addable)});
        }
        os << "cocharge: sum L=" << stats.sum_L() << " sum(M+diag)=" << stats.morse_cocharge() << '\n'
           << render(low);
        os << "charge: sum I=" << stats.sum_I() << " sum(J+diag)=" << stats.morse_charge() << '\n' << render(high);
    }
    return os.str();
}

std::string table_report(std::optional<int> k, const Partition& mu, Formulation f, const ChargeTable& table,
                         Format format) {
    if (format == Format::Json) {
        json j;
        if (k)
            j["k"] = *k;
        else
            j["classical"] = true;
        j["weight"] = std::vector<int>(mu.parts().begin(), mu.parts().end());
        if (k) j["formulation"] = f == Formulation::Morse ? "morse" : "lp";
        j["table"] = json::array();
        for (const auto& [shape, poly] : table)
            j["table"].push_back({{"shape", std::vector<int>(shape.parts().begin(), shape.parts().end())},
                                  {"polynomial", detail::polynomial_json(poly)}});
        return dump(j);
    }
    std::ostringstream os;
    if (k)
        os << "k=" << *k << " weight=" << mu.to_string() << " formulation=" << (f == Formulation::Morse ? "morse" : "lp")
           << '\n';
    else
        os << "classical weight=" << mu.to_string() << '\n';
    for (const auto& [shape, poly] : table) os << shape.to_string() << ": " << poly.to_string() << '\n';
    os << "shapes: " << table.size() << '\n';
    return os.str();
}

std::string classical_report(const Tableau& t, Format format) {
    const auto charge = classical_charge(t);
    const auto cocharge = classical_cocharge(t);
    if (format == Format::Json) {
        json j;
        j["shape"] = std::vector<int>(t.shape().parts().begin(), t.shape().parts().end());
        j["rows"] = t.rows();
        j["charge"] = charge;
        j["cocharge"] = cocharge;
        return dump(j);
    }
    std::ostringstream os;
    os << "shape=" << t.shape().to_string() << " content=" << list_str(t.content()) << '\n';
    os << "charge: " << charge << '\n' << "cocharge: " << cocharge << '\n';
    return os.str();
}

std::string verify_text(const VerifyReport& report, Format format) {
    const auto& o = report.options;
    if (format == Format::Json) {
        json j;
        j["min_k"] = o.min_k;
        j["max_k"] = o.max_k;
        j["max_weight"] = o.max_weight;
        j["oracle"] = o.check_oracle;
        j["weights"] = report.weights;
        j["tableaux"] = report.tableaux;
        j["standard_tableaux"] = report.standard_tableaux;
        j["same_residue_steps"] = report.same_residue_steps;
        j["checks"] = json::array();
        for (const auto& c : report.checks)
            j["checks"].push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}});
        j["passed"] = report.passed();
        if (report.first_failure) {
            const auto& f = *report.first_failure;
            j["first_failure"] = {{"check", f.check}, {"k", f.k},          {"weight", f.weight},
                                  {"tableau", f.tableau}, {"detail", f.detail}};
        }
        return dump(j);
    }
    std::ostringstream os;
    os << "verify k=" << o.min_k << ".." << o.max_k << " |weight|<=" << o.max_weight
       << (o.check_oracle ? " with oracle" : "") << '\n';
    os << "weights: " << report.weights << " tableaux: " << report.tableaux
       << " standard: " << report.standard_tableaux << " same-residue steps: " << report.same_residue_steps << '\n';
    std::vector<std::vector<std::string>> rows{{"check", "checked", "failed"}};
    for (const auto& c : report.checks)
        rows.push_back({c.name, std::to_string(c.checked), std::to_string(c.failed)});
    os << render(rows);
    if (report.first_failure) {
        const auto& f = *report.first_failure;
        os << "FAIL " << f.check << " k=" << f.k << " weight=" << list_str(f.weight) << ": " << f.detail << '\n';
        if (!f.tableau.empty()) os << f.tableau;
    } else {
        os << "PASS\n";
    }
    return os.str();
}

}  // namespace kcharge
