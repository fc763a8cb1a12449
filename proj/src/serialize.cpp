#include "kcharge/serialize.hpp"

#include "json_util.hpp"

#include <charconv>
#include <sstream>

namespace kcharge {

namespace detail {

json cell_json(Cell c) { return json::array({c.row, c.col}); }

json tableau_json(const KTableau& t) {
    json j;
    j["k"] = t.k();
    j["shape"] = std::vector<int>(t.shape().parts().begin(), t.shape().parts().end());
    j["rows"] = t.filling().rows();
    return j;
}

json polynomial_json(const TPolynomial& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            j[std::to_string(e)] = static_cast<std::int64_t>(c);
        else
            j[std::to_string(e)] = c.str();
    }
    return j;
}

}  // namespace detail

namespace {

int parse_int(std::string_view token, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(std::string("bad ") + what + " '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    std::size_t first = 0;
    while (first < lines.size() && lines[first].empty()) ++first;
    return {lines.begin() + static_cast<std::ptrdiff_t>(first), lines.end()};
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
    auto trim = [](std::string_view v) {
        const auto a = v.find_first_not_of(" \t\r\n");
        if (a == std::string_view::npos) return std::string_view{};
        return v.substr(a, v.find_last_not_of(" \t\r\n") - a + 1);
    };
    auto body = trim(text);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("unbalanced parenthesis in '" + std::string(text) + "'");
        body = trim(body.substr(1, body.size() - 2));
    }
    std::vector<int> out;
    while (!body.empty()) {
        const auto comma = body.find(',');
        out.push_back(parse_int(trim(body.substr(0, comma)), "integer"));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (trim(body).empty()) throw ParseError("trailing comma in '" + std::string(text) + "'");
    }
    return out;
}

ParsedTableau parse_tableau_text(std::string_view text) {
    auto lines = split_lines(text);
    ParsedTableau out;
    std::size_t next = 0;
    if (!lines.empty() && lines[0].starts_with("k=")) {
        out.k = parse_int(lines[0].substr(2), "k");
        if (*out.k < 1) throw ParseError("k must be positive");
        next = 1;
    }
    // rows arrive top first; annotations are checked against their cell
    std::vector<std::vector<std::string_view>> tokens;
    for (std::size_t i = next; i < lines.size(); ++i) {
        if (lines[i].empty()) throw ParseError("blank line inside tableau");
        std::vector<std::string_view> row;
        std::string_view line = lines[i];
        while (!line.empty()) {
            const auto sp = line.find(' ');
            const auto tok = line.substr(0, sp);
            if (tok.empty()) throw ParseError("entries must be separated by single spaces");
            row.push_back(tok);
            if (sp == std::string_view::npos) break;
            line.remove_prefix(sp + 1);
            if (line.empty()) throw ParseError("trailing separator");
        }
        tokens.push_back(std::move(row));
    }
    std::vector<std::vector<int>> rows(tokens.size());
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        const int row = static_cast<int>(tokens.size() - t);
        for (std::size_t c = 0; c < tokens[t].size(); ++c) {
            const auto tok = tokens[t][c];
            const auto us = tok.find('_');
            const int letter = parse_int(tok.substr(0, us), "letter");
            if (us != std::string_view::npos) {
                if (!out.k) throw ParseError("residue annotations need a k=<k> header");
                const int res = parse_int(tok.substr(us + 1), "residue");
                const Cell cell{row, static_cast<int>(c) + 1};
                if (res != residue(cell, *out.k + 1).value)
                    throw ParseError("entry '" + std::string(tok) + "' at (" + std::to_string(cell.row) + "," +
                                     std::to_string(cell.col) + ") has residue " +
                                     std::to_string(residue(cell, *out.k + 1).value));
            }
            rows[row - 1].push_back(letter);
        }
    }
    try {
        out.filling = Tableau(std::move(rows));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return out;
}

KTableau parse_k_tableau(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        detail::json j;
        try {
            j = detail::json::parse(text);
        } catch (const detail::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        try {
            const int k = j.at("k").get<int>();
            auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
            KTableau t(k, Tableau(std::move(rows)));
            if (j.contains("shape")) {
                const Partition shape(j.at("shape").get<std::vector<int>>());
                if (shape != t.shape()) throw ParseError("JSON shape does not match its rows");
            }
            return t;
        } catch (const detail::json::exception& e) {
            throw ParseError(std::string("malformed tableau JSON: ") + e.what());
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    auto parsed = parse_tableau_text(text);
    if (!parsed.k) throw ParseError("missing k=<k> header");
    return KTableau(*parsed.k, std::move(parsed.filling));
}

std::string to_text(const KTableau& t, bool with_residues) {
    std::ostringstream os;
    os << "k=" << t.k() << '\n';
    const auto& rows = t.filling().rows();
    for (int r = static_cast<int>(rows.size()); r >= 1; --r) {
        for (std::size_t c = 0; c < rows[r - 1].size(); ++c) {
            if (c) os << ' ';
            os << rows[r - 1][c];
            if (with_residues) os << '_' << t.residue_of({r, static_cast<int>(c) + 1}).value;
        }
        os << '\n';
    }
    return os.str();
}

std::string to_json(const KTableau& t) { return detail::tableau_json(t).dump(); }

std::string to_json(const TPolynomial& p) { return detail::polynomial_json(p).dump(); }

TPolynomial polynomial_from_json(std::string_view text) {
    TPolynomial p;
    try {
        const auto j = detail::json::parse(text);
        for (const auto& [key, value] : j.items()) {
            const int e = parse_int(key, "exponent");
            p.add_term(e, value.is_string() ? BigInt(value.get<std::string>()) : BigInt(value.get<std::int64_t>()));
        }
    } catch (const detail::json::exception& e) {
        throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
    }
    return p;
}

}  // namespace kcharge
