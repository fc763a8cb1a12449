#include "kcharge/kcharge.h"

#include "kcharge/classical.hpp"
#include "kcharge/report.hpp"
#include "kcharge/serialize.hpp"
#include "kcharge/statistics.hpp"
#include "kcharge/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct kc_tableau {
    kcharge::KTableau value;
};

struct kc_tableau_list {
    int k;
    std::vector<int> weight;
    std::vector<kc_tableau> items;
};

namespace {

thread_local std::string last_error;

kc_status fail(kc_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Maps library exceptions onto status codes.
template <class F>
kc_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const kcharge::ParseError& e) {
        return fail(KC_ERR_PARSE, e.what());
    } catch (const kcharge::DomainError& e) {
        return fail(KC_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(KC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(KC_ERR_INTERNAL, e.what());
    }
}

char* copy_out(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

kcharge::Format to_format(kc_format f) {
    return f == KC_FORMAT_JSON ? kcharge::Format::Json : kcharge::Format::Text;
}

kcharge::Formulation to_formulation(kc_formulation f) {
    return f == KC_FORMULATION_LP ? kcharge::Formulation::LapointePinto : kcharge::Formulation::Morse;
}

std::vector<int> to_vector(const int* data, std::size_t len) {
    return data ? std::vector<int>(data, data + len) : std::vector<int>{};
}

std::optional<kcharge::Partition> to_shape(const int* data, std::size_t len) {
    if (!data) return std::nullopt;
    return kcharge::Partition(to_vector(data, len));
}

kc_status require_valid(const kcharge::KTableau& t) {
    const auto v = kcharge::validate(t);
    if (!v) return fail(KC_ERR_INVALID, v.message);
    return KC_OK;
}

std::size_t copy_parts(const std::vector<int>& v, int* parts, std::size_t capacity) {
    if (parts)
        for (std::size_t i = 0; i < v.size() && i < capacity; ++i) parts[i] = v[i];
    return v.size();
}

}  // namespace

extern "C" {

const char* kc_version(void) { return "1.0.0"; }

const char* kc_last_error(void) { return last_error.c_str(); }

const char* kc_status_name(kc_status status) {
    switch (status) {
        case KC_OK: return "ok";
        case KC_ERR_ARGUMENT: return "argument error";
        case KC_ERR_DOMAIN: return "domain error";
        case KC_ERR_PARSE: return "parse error";
        case KC_ERR_INVALID: return "invalid tableau";
        case KC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void kc_string_free(char* s) { std::free(s); }

kc_status kc_tableau_parse(const char* input, kc_tableau** out) {
    if (!input || !out) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new kc_tableau{kcharge::parse_k_tableau(input)};
        return KC_OK;
    });
}

kc_status kc_tableau_from_rows(int k, const int* letters, const size_t* row_lengths, size_t rows, kc_tableau** out) {
    if (!out || (rows > 0 && (!letters || !row_lengths))) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<std::vector<int>> data(rows);
        std::size_t offset = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            data[r].assign(letters + offset, letters + offset + row_lengths[r]);
            offset += row_lengths[r];
        }
        *out = new kc_tableau{kcharge::KTableau(k, std::move(data))};
        return KC_OK;
    });
}

void kc_tableau_free(kc_tableau* t) { delete t; }

kc_tableau* kc_tableau_clone(const kc_tableau* t) { return t ? new kc_tableau{t->value} : nullptr; }

int kc_tableau_k(const kc_tableau* t) { return t ? t->value.k() : 0; }

size_t kc_tableau_shape(const kc_tableau* t, int* parts, size_t capacity) {
    if (!t) return 0;
    const auto p = t->value.shape().parts();
    return copy_parts({p.begin(), p.end()}, parts, capacity);
}

size_t kc_tableau_weight(const kc_tableau* t, int* parts, size_t capacity) {
    return t ? copy_parts(t->value.weight(), parts, capacity) : 0;
}

int kc_tableau_letter(const kc_tableau* t, int row, int col) {
    if (!t || !t->value.shape().contains({row, col})) return 0;
    return t->value.letter({row, col});
}

kc_status kc_tableau_validate(const kc_tableau* t, int* valid, char** diagnostics) {
    if (!t || !valid) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto v = kcharge::validate(t->value);
        *valid = v.valid ? 1 : 0;
        if (diagnostics) *diagnostics = copy_out(v.message);
        return KC_OK;
    });
}

kc_status kc_tableau_serialize(const kc_tableau* t, kc_format format, char** out) {
    if (!t || !out) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = copy_out(format == KC_FORMAT_JSON ? kcharge::to_json(t->value) + "\n" : kcharge::to_text(t->value));
        return KC_OK;
    });
}

kc_status kc_tableau_k_charge(const kc_tableau* t, kc_formulation f, long long* out) {
    if (!t || !out) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        if (auto s = require_valid(t->value); s != KC_OK) return s;
        *out = kcharge::k_charge(t->value, to_formulation(f));
        return KC_OK;
    });
}

kc_status kc_tableau_k_cocharge(const kc_tableau* t, kc_formulation f, long long* out) {
    if (!t || !out) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        if (auto s = require_valid(t->value); s != KC_OK) return s;
        *out = kcharge::k_cocharge(t->value, to_formulation(f));
        return KC_OK;
    });
}

kc_status kc_tableau_report(const kc_tableau* t, kc_format format, char** out) {
    if (!t || !out) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        if (auto s = require_valid(t->value); s != KC_OK) return s;
        try {
            *out = copy_out(kcharge::stat_report(t->value, to_format(format)));
        } catch (const kcharge::DomainError& e) {
            return fail(KC_ERR_INVALID, e.what());
        }
        return KC_OK;
    });
}

kc_status kc_tableau_classical_charge(const kc_tableau* t, long long* charge, long long* cocharge) {
    if (!t || !charge || !cocharge) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *charge = kcharge::classical_charge(t->value.filling());
        *cocharge = kcharge::classical_cocharge(t->value.filling());
        return KC_OK;
    });
}

kc_status kc_classical_report(const char* input, kc_format format, char** out) {
    if (!input || !out) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const std::string_view text(input);
        const auto first = text.find_first_not_of(" \t\r\n");
        const kcharge::Tableau filling = (first != std::string_view::npos && text[first] == '{')
                                             ? kcharge::parse_k_tableau(text).filling()
                                             : kcharge::parse_tableau_text(text).filling;
        if (!filling.is_semistandard()) return fail(KC_ERR_INVALID, "tableau is not semistandard");
        if (!kcharge::is_partition(filling.content()))
            return fail(KC_ERR_INVALID, "classical charge needs partition content");
        *out = copy_out(kcharge::classical_report(filling, to_format(format)));
        return KC_OK;
    });
}

kc_status kc_enumerate(int k, const int* weight, size_t weight_len, const int* shape, size_t shape_len,
                       kc_strategy strategy, kc_tableau_list** out) {
    if (!out || (weight_len > 0 && !weight)) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto w = to_vector(weight, weight_len);
        const auto s = to_shape(shape, shape_len);
        auto found = kcharge::enumerate_k_tableaux(
            k, w, s, strategy == KC_STRATEGY_ORACLE ? kcharge::Strategy::Oracle : kcharge::Strategy::Fast);
        auto list = new kc_tableau_list{k, std::move(w), {}};
        list->items.reserve(found.size());
        for (auto& t : found) list->items.push_back({std::move(t)});
        *out = list;
        return KC_OK;
    });
}

size_t kc_tableau_list_size(const kc_tableau_list* list) { return list ? list->items.size() : 0; }

const kc_tableau* kc_tableau_list_get(const kc_tableau_list* list, size_t index) {
    return (list && index < list->items.size()) ? &list->items[index] : nullptr;
}

kc_status kc_tableau_list_serialize(const kc_tableau_list* list, kc_format format, char** out) {
    if (!list || !out) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<kcharge::KTableau> items;
        items.reserve(list->items.size());
        for (const auto& t : list->items) items.push_back(t.value);
        *out = copy_out(kcharge::enumerate_report(list->k, list->weight, items, to_format(format)));
        return KC_OK;
    });
}

void kc_tableau_list_free(kc_tableau_list* list) { delete list; }

kc_status kc_charge_table(int k, const int* weight, size_t weight_len, const int* shape, size_t shape_len,
                          kc_formulation f, int threads, kc_format format, char** out) {
    if (!out || (weight_len > 0 && !weight)) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto w = to_vector(weight, weight_len);
        if (!kcharge::is_partition(w)) return fail(KC_ERR_DOMAIN, "the weight must be a partition");
        const kcharge::Partition mu(w);
        const auto table = kcharge::charge_table(k, mu, to_formulation(f), to_shape(shape, shape_len),
                                                 threads > 0 ? threads : 1);
        *out = copy_out(kcharge::table_report(k, mu, to_formulation(f), table, to_format(format)));
        return KC_OK;
    });
}

kc_status kc_kostka_foulkes_table(const int* weight, size_t weight_len, const int* shape, size_t shape_len,
                                  kc_format format, char** out) {
    if (!out || (weight_len > 0 && !weight)) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto w = to_vector(weight, weight_len);
        if (!kcharge::is_partition(w)) return fail(KC_ERR_DOMAIN, "the weight must be a partition");
        const kcharge::Partition mu(w);
        const auto table = kcharge::kostka_foulkes_table(mu, to_shape(shape, shape_len));
        *out = copy_out(
            kcharge::table_report(std::nullopt, mu, kcharge::Formulation::Morse, table, to_format(format)));
        return KC_OK;
    });
}

kc_status kc_verify(const kc_verify_options* options, kc_format format, int* passed, char** out) {
    if (!options || !passed || !out) return fail(KC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        kcharge::VerifyOptions o;
        o.min_k = options->min_k;
        o.max_k = options->max_k;
        o.max_weight = options->max_weight;
        o.threads = options->threads > 0 ? options->threads : 1;
        o.check_oracle = options->check_oracle != 0;
        const auto report = kcharge::verify_sweep(o);
        *passed = report.passed() ? 1 : 0;
        *out = copy_out(kcharge::verify_text(report, to_format(format)));
        return KC_OK;
    });
}

}  // extern "C"
