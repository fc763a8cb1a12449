// kcharge command-line front end. Talks to the library only through the C API.

#include "kcharge/kcharge.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

enum Exit { kPass = 0, kVerifyFailed = 1, kUsage = 2, kInvalid = 3, kInternal = 4 };

struct CString {
    char* p = nullptr;
    ~CString() { kc_string_free(p); }
};

struct TableauHandle {
    kc_tableau* p = nullptr;
    ~TableauHandle() { kc_tableau_free(p); }
};

struct ListHandle {
    kc_tableau_list* p = nullptr;
    ~ListHandle() { kc_tableau_list_free(p); }
};

int exit_for(kc_status s) {
    switch (s) {
        case KC_OK: return kPass;
        case KC_ERR_ARGUMENT:
        case KC_ERR_PARSE:
        case KC_ERR_DOMAIN: return kUsage;
        case KC_ERR_INVALID: return kInvalid;
        default: return kInternal;
    }
}

int report_error(kc_status s) {
    std::cerr << "kcharge: " << kc_status_name(s) << ": " << kc_last_error() << "\n";
    return exit_for(s);
}

// Accepts "3,2,1", "(3,2,1)" or "3 2 1".
std::vector<int> parse_list(const std::string& text) {
    std::string cleaned;
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']') continue;
        cleaned += (c == ',') ? ' ' : c;
    }
    std::istringstream in(cleaned);
    std::vector<int> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError("list", "not an integer: " + token);
        }
        if (used != token.size()) throw CLI::ValidationError("list", "not an integer: " + token);
        out.push_back(v);
    }
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return kPass;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "kcharge: cannot write " << path << "\n";
        return kUsage;
    }
    return kPass;
}

int thread_count(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("KCHARGE_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0 && (n <= 0 || n > cap)) n = cap;
    }
    return n > 0 ? n : 1;
}

kc_format format_of(const std::string& f) { return f == "json" ? KC_FORMAT_JSON : KC_FORMAT_TEXT; }

const std::map<std::string, std::string> kFormats{{"text", "text"}, {"json", "json"}};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-tableaux, affine charge and cocharge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kc_version()));

    std::string format = "text";
    std::string output;
    int threads = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")->transform(CLI::IsMember(kFormats));
        sub->add_option("-o,--output", output, "write to a file instead of stdout");
    };

    // enumerate
    auto* en = app.add_subcommand("enumerate", "list all k-tableaux of a weight");
    int en_k = 0;
    std::string en_weight, en_shape, en_strategy = "fast";
    en->add_option("-k,--k", en_k, "k")->required();
    en->add_option("-w,--weight", en_weight, "weight, e.g. 3,2,1")->required();
    en->add_option("-s,--shape", en_shape, "only this shape");
    en->add_option("--strategy", en_strategy, "fast or oracle")
        ->transform(CLI::IsMember({"fast", "oracle"}));
    add_common(en);

    // stat
    auto* st = app.add_subcommand("stat", "k-charge and k-cocharge of one tableau");
    std::string st_input;
    st->add_option("input", st_input, "tableau file, or - for stdin")->required();
    add_common(st);

    // table
    auto* tb = app.add_subcommand("table", "charge polynomials by shape");
    int tb_k = 0;
    std::string tb_weight, tb_shape, tb_form = "morse";
    bool tb_classical = false;
    tb->add_option("-k,--k", tb_k, "k (omit with --classical)");
    tb->add_option("-w,--weight", tb_weight, "weight partition")->required();
    tb->add_option("-s,--shape", tb_shape, "only this shape");
    tb->add_option("--formulation", tb_form, "morse or lp")->transform(CLI::IsMember({"morse", "lp"}));
    tb->add_flag("--classical", tb_classical, "Kostka-Foulkes polynomials from classical charge");
    tb->add_option("-j,--threads", threads, "worker threads (default: all cores)");
    add_common(tb);

    // verify
    auto* vf = app.add_subcommand("verify", "check the identities on every tableau in range");
    int vf_min_k = 1, vf_max_k = 1, vf_max_weight = 0;
    bool vf_oracle = false;
    vf->add_option("--min-k", vf_min_k, "smallest k")->check(CLI::PositiveNumber);
    vf->add_option("--max-k", vf_max_k, "largest k")->required()->check(CLI::PositiveNumber);
    vf->add_option("--max-weight", vf_max_weight, "largest |weight|")->required()->check(CLI::NonNegativeNumber);
    vf->add_flag("--oracle", vf_oracle, "also compare fast and oracle enumeration");
    vf->add_option("-j,--threads", threads, "worker threads (default: all cores)");
    add_common(vf);

    // classical
    auto* cl = app.add_subcommand("classical", "classical charge and cocharge of a semistandard tableau");
    std::string cl_input;
    cl->add_option("input", cl_input, "tableau file, or - for stdin")->required();
    add_common(cl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    const kc_format fmt = format_of(format);
    try {
        if (*en) {
            const auto w = parse_list(en_weight);
            std::vector<int> shape;
            if (!en_shape.empty()) shape = parse_list(en_shape);
            ListHandle list;
            auto s = kc_enumerate(en_k, w.data(), w.size(), en_shape.empty() ? nullptr : shape.data(), shape.size(),
                                  en_strategy == "oracle" ? KC_STRATEGY_ORACLE : KC_STRATEGY_FAST, &list.p);
            if (s != KC_OK) return report_error(s);
            CString text;
            if ((s = kc_tableau_list_serialize(list.p, fmt, &text.p)) != KC_OK) return report_error(s);
            return write_output(text.p, output);
        }
        if (*st) {
            const std::string input = read_input(st_input);
            TableauHandle t;
            auto s = kc_tableau_parse(input.c_str(), &t.p);
            if (s != KC_OK) return report_error(s);
            CString text;
            if ((s = kc_tableau_report(t.p, fmt, &text.p)) != KC_OK) return report_error(s);
            return write_output(text.p, output);
        }
        if (*tb) {
            const auto w = parse_list(tb_weight);
            std::vector<int> shape;
            if (!tb_shape.empty()) shape = parse_list(tb_shape);
            const int* sp = tb_shape.empty() ? nullptr : shape.data();
            CString text;
            kc_status s;
            if (tb_classical) {
                s = kc_kostka_foulkes_table(w.data(), w.size(), sp, shape.size(), fmt, &text.p);
            } else {
                if (tb->count("--k") == 0) {
                    std::cerr << "kcharge: table needs --k unless --classical is given\n";
                    return kUsage;
                }
                s = kc_charge_table(tb_k, w.data(), w.size(), sp, shape.size(),
                                    tb_form == "lp" ? KC_FORMULATION_LP : KC_FORMULATION_MORSE,
                                    thread_count(threads), fmt, &text.p);
            }
            if (s != KC_OK) return report_error(s);
            return write_output(text.p, output);
        }
        if (*vf) {
            if (vf_min_k > vf_max_k) {
                std::cerr << "kcharge: --min-k exceeds --max-k\n";
                return kUsage;
            }
            kc_verify_options o{vf_min_k, vf_max_k, vf_max_weight, thread_count(threads), vf_oracle ? 1 : 0};
            int passed = 0;
            CString text;
            const auto s = kc_verify(&o, fmt, &passed, &text.p);
            if (s != KC_OK) return report_error(s);
            if (const int rc = write_output(text.p, output); rc != kPass) return rc;
            return passed ? kPass : kVerifyFailed;
        }
        if (*cl) {
            const std::string input = read_input(cl_input);
            CString text;
            const auto s = kc_classical_report(input.c_str(), fmt, &text.p);
            if (s != KC_OK) return report_error(s);
            return write_output(text.p, output);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "kcharge: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "kcharge: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
