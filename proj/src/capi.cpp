#include "ribbonschur.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "ribbonschur/json_io.hpp"

namespace {

using namespace ribbonschur;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
rs_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const invariant_error& e) {
        g_last_error = e.what();
        return RS_ERR_INTERNAL;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return RS_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RS_ERR_INTERNAL;
    }
}

// Overlap entries may be zero, so they get their own small parser.
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("cannot parse integer '" + tok + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

struct rs_ribbon {
    Ribbon ribbon;
    // Set when built as a monotone (alpha, p) pair; required by the witness,
    // support and companion paths.
    std::optional<std::pair<Partition, std::vector<int>>> pair;
};

extern "C" {

const char* rs_version(void) { return "0.1.0"; }

const char* rs_last_error(void) { return g_last_error.c_str(); }

rs_status rs_ribbon_from_pair(const char* alpha, const char* overlap, rs_ribbon** out) {
    return guarded([&]() -> rs_status {
        if (!alpha || !overlap || !out) throw std::invalid_argument("null argument");
        Partition a = parse_partition(alpha);
        std::vector<int> p = parse_int_list(overlap);
        Ribbon r = Ribbon::from_pair(a, p);
        *out = new rs_ribbon{std::move(r), std::make_pair(std::move(a), std::move(p))};
        return RS_OK;
    });
}

rs_status rs_ribbon_from_rows(const char* rows, const char* overlaps, int connected,
                              rs_ribbon** out) {
    return guarded([&]() -> rs_status {
        if (!rows || !out) throw std::invalid_argument("null argument");
        Composition comp = parse_composition(rows);
        std::vector<bool> flags;
        if (connected) {
            if (overlaps) throw std::invalid_argument("pass either overlaps or connected");
            flags.assign(static_cast<size_t>(std::max(0, comp.length() - 1)), true);
        } else {
            if (!overlaps) throw std::invalid_argument("need overlap flags or connected");
            for (int x : parse_int_list(overlaps)) {
                if (x != 0 && x != 1) throw std::invalid_argument("overlap flags are 0 or 1");
                flags.push_back(x == 1);
            }
        }
        Ribbon r(comp, flags);
        std::optional<std::pair<Partition, std::vector<int>>> pair;
        if (r.monotone())
            pair = std::make_pair(comp.sorted(), r.overlapping_partition());
        *out = new rs_ribbon{std::move(r), std::move(pair)};
        return RS_OK;
    });
}

void rs_ribbon_free(rs_ribbon* ribbon) { delete ribbon; }

rs_status rs_expand(const rs_ribbon* ribbon, char** json_out) {
    return guarded([&]() -> rs_status {
        if (!ribbon || !json_out) throw std::invalid_argument("null argument");
        *json_out = dup_string(to_json(schur_expansion(ribbon->ribbon)).dump());
        return RS_OK;
    });
}

rs_status rs_positive(const rs_ribbon* ribbon, const char* nu_text, int with_companion,
                      char** json_out) {
    return guarded([&]() -> rs_status {
        if (!ribbon || !nu_text || !json_out) throw std::invalid_argument("null argument");
        Partition nu = parse_partition(nu_text);
        if (ribbon->pair) {
            *json_out = dup_string(
                positivity_json(ribbon->pair->first, ribbon->pair->second, nu, with_companion != 0)
                    .dump());
            return RS_OK;
        }
        if (with_companion)
            throw std::invalid_argument("companion construction needs a monotone ribbon");
        bool positive = ribbon_coefficient(ribbon->ribbon, nu) > 0;
        nlohmann::json out{{"rows", to_string(ribbon->ribbon.rows())},
                           {"nu", to_string(nu)},
                           {"positive", positive}};
        *json_out = dup_string(out.dump());
        return RS_OK;
    });
}

rs_status rs_support(const rs_ribbon* ribbon, char** json_out) {
    return guarded([&]() -> rs_status {
        if (!ribbon || !json_out) throw std::invalid_argument("null argument");
        if (!ribbon->pair)
            throw std::invalid_argument("support lists need a monotone ribbon");
        *json_out =
            dup_string(support_json(ribbon->pair->first, ribbon->pair->second).dump());
        return RS_OK;
    });
}

rs_status rs_witness(const rs_ribbon* ribbon, char** json_out) {
    return guarded([&]() -> rs_status {
        if (!ribbon || !json_out) throw std::invalid_argument("null argument");
        if (!ribbon->pair)
            throw std::invalid_argument("witness vectors need a monotone ribbon");
        nlohmann::json out = to_json(witness_report(ribbon->pair->first, ribbon->pair->second));
        out["alpha"] = to_string(ribbon->pair->first);
        *json_out = dup_string(out.dump());
        return RS_OK;
    });
}

rs_status rs_equivalence(const char* alpha_text, int brute_cap, char** json_out) {
    return guarded([&]() -> rs_status {
        if (!alpha_text || !json_out) throw std::invalid_argument("null argument");
        Partition alpha = parse_partition(alpha_text);
        EquivalenceReport report = ghs_necessary(alpha);
        if (brute_cap > 0) report.brute_force = full_equivalence_bruteforce(alpha, brute_cap);
        *json_out = dup_string(to_json(report, alpha).dump());
        return RS_OK;
    });
}

rs_status rs_verify(int max_size, int max_length, int threads, char** json_out) {
    return guarded([&]() -> rs_status {
        if (!json_out) throw std::invalid_argument("null argument");
        ScanOptions opts;
        opts.max_size = max_size > 0 ? max_size : 10;
        opts.max_length = max_length > 0 ? max_length : 5;
        opts.threads = threads;
        std::vector<ScanResult> results = run_all_scans(opts);
        *json_out = dup_string(verify_json(results).dump());
        for (const ScanResult& r : results)
            if (!r.ok) return RS_ERR_VERIFY;
        return RS_OK;
    });
}

void rs_string_free(char* text) { std::free(text); }

}  // extern "C"
