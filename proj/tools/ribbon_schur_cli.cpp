// Command-line front end for ribbon Schur queries; all computation goes
// through the shared-library C API.
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ribbonschur.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

struct RibbonArgs {
    std::string alpha, overlap, rows, overlaps;
    bool connected = false;
};

void add_ribbon_options(CLI::App* cmd, RibbonArgs& args) {
    auto* alpha = cmd->add_option("--alpha", args.alpha, "row partition, e.g. 3,3,2,2,2");
    auto* overlap =
        cmd->add_option("--overlap", args.overlap, "overlapping partition, e.g. 2,2,1,1,0");
    auto* rows = cmd->add_option("--rows", args.rows, "row lengths top to bottom, e.g. 2,4,2");
    auto* overlaps = cmd->add_option("--overlaps", args.overlaps, "overlap flags, e.g. 1,0,1");
    auto* connected = cmd->add_flag("--connected", args.connected, "all adjacent rows overlap");
    overlap->needs(alpha);
    alpha->needs(overlap);
    alpha->excludes(rows);
    rows->excludes(alpha);
    overlaps->needs(rows);
    connected->needs(rows);
    overlaps->excludes(connected);
}

class Handle {
public:
    ~Handle() { rs_ribbon_free(ribbon_); }
    rs_ribbon** slot() { return &ribbon_; }
    const rs_ribbon* get() const { return ribbon_; }

private:
    rs_ribbon* ribbon_ = nullptr;
};

int open_ribbon(const RibbonArgs& args, Handle& handle) {
    rs_status status;
    if (!args.alpha.empty() || !args.overlap.empty()) {
        status = rs_ribbon_from_pair(args.alpha.c_str(), args.overlap.c_str(), handle.slot());
    } else if (!args.rows.empty()) {
        status = rs_ribbon_from_rows(args.rows.c_str(),
                                     args.overlaps.empty() ? nullptr : args.overlaps.c_str(),
                                     args.connected ? 1 : 0, handle.slot());
    } else {
        std::cerr << "error: describe the ribbon with --alpha/--overlap or --rows\n";
        return kExitUsage;
    }
    if (status != RS_OK) {
        std::cerr << "error: " << rs_last_error() << "\n";
        return kExitUsage;
    }
    return 0;
}

std::string take(char* text) {
    std::string out = text ? text : "";
    rs_string_free(text);
    return out;
}

void print_tableau(const json& t, const std::string& label) {
    std::cout << label << ": " << t.at("text").get<std::string>() << "\n";
}

int finish(rs_status status, const std::string& payload, bool as_json,
           const std::function<void(const json&)>& render) {
    if (status == RS_ERR_INVALID) {
        std::cerr << "error: " << rs_last_error() << "\n";
        return kExitUsage;
    }
    if (status == RS_ERR_INTERNAL) {
        std::cerr << "internal error: " << rs_last_error() << "\n";
        return kExitVerify;
    }
    json doc = json::parse(payload);
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        render(doc);
    return status == RS_ERR_VERIFY ? kExitVerify : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ribbon Schur functions: expansion, positivity, support, witnesses"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--format-json,--json", as_json, "emit raw JSON payloads");

    RibbonArgs expand_args, positive_args, support_args, witness_args;
    std::string nu_text, equivalence_alpha;
    bool with_companion = false, brute = false;
    int brute_cap = 14, max_size = 10, max_length = 5, threads = 0;

    CLI::App* expand = app.add_subcommand("expand", "Schur expansion of a ribbon");
    add_ribbon_options(expand, expand_args);

    CLI::App* positive = app.add_subcommand("positive", "decide coefficient positivity at nu");
    add_ribbon_options(positive, positive_args);
    positive->add_option("--nu", nu_text, "content partition")->required();
    positive->add_flag("--companion", with_companion, "also build a companion tableau");

    CLI::App* support_cmd = app.add_subcommand("support", "list the Schur support");
    add_ribbon_options(support_cmd, support_args);

    CLI::App* witness = app.add_subcommand("witness", "witness vectors and certificate");
    add_ribbon_options(witness, witness_args);

    CLI::App* equivalence = app.add_subcommand("equivalence", "full equivalence class report");
    equivalence->add_option("--alpha", equivalence_alpha, "partition with parts >= 2")->required();
    equivalence->add_flag("--brute", brute, "add the exhaustive rearrangement check");
    equivalence->add_option("--brute-cap", brute_cap, "size cap for the exhaustive check");

    CLI::App* verify = app.add_subcommand("verify", "run the oracle-equivalence scans");
    verify->add_option("--max-size", max_size, "largest ribbon size to scan");
    verify->add_option("--max-length", max_length, "largest row count to scan");
    verify->add_option("--threads", threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (expand->parsed()) {
        Handle h;
        if (int rc = open_ribbon(expand_args, h)) return rc;
        char* payload = nullptr;
        rs_status status = rs_expand(h.get(), &payload);
        return finish(status, take(payload), as_json, [](const json& doc) {
            const auto& interval = doc.at("interval");
            std::cout << "interval: [" << interval.at("bottom").get<std::string>() << "] .. ["
                      << interval.at("top").get<std::string>() << "]\n";
            for (const auto& entry : doc.at("coefficients"))
                std::cout << "  c[" << entry.at("nu").get<std::string>()
                          << "] = " << entry.at("c").get<long long>() << "\n";
            std::cout << "full support: " << (doc.at("full_support").get<bool>() ? "yes" : "no")
                      << "\n";
        });
    }
    if (positive->parsed()) {
        Handle h;
        if (int rc = open_ribbon(positive_args, h)) return rc;
        char* payload = nullptr;
        rs_status status = rs_positive(h.get(), nu_text.c_str(), with_companion ? 1 : 0, &payload);
        return finish(status, take(payload), as_json, [&](const json& doc) {
            std::cout << (doc.at("positive").get<bool>() ? "positive" : "zero") << "\n";
            if (doc.contains("companion")) {
                print_tableau(doc.at("companion"), "companion");
                const auto& filling = doc.at("filling");
                std::cout << "filling of " << filling.at("outer").get<std::string>() << " / "
                          << filling.at("inner").get<std::string>() << ":\n";
                for (const auto& row : filling.at("rows")) {
                    std::cout << " ";
                    for (const auto& v : row) std::cout << " " << v.get<int>();
                    std::cout << "\n";
                }
            }
        });
    }
    if (support_cmd->parsed()) {
        Handle h;
        if (int rc = open_ribbon(support_args, h)) return rc;
        char* payload = nullptr;
        rs_status status = rs_support(h.get(), &payload);
        return finish(status, take(payload), as_json, [](const json& doc) {
            const auto& interval = doc.at("interval");
            std::cout << "interval: [" << interval.at("bottom").get<std::string>() << "] .. ["
                      << interval.at("top").get<std::string>() << "]\n";
            for (const auto& nu : doc.at("support"))
                std::cout << "  " << nu.get<std::string>() << "\n";
            const auto& excluded = doc.at("excluded");
            if (excluded.empty())
                std::cout << "full support\n";
            else {
                std::cout << "excluded:\n";
                for (const auto& nu : excluded) std::cout << "  " << nu.get<std::string>() << "\n";
            }
        });
    }
    if (witness->parsed()) {
        Handle h;
        if (int rc = open_ribbon(witness_args, h)) return rc;
        char* payload = nullptr;
        rs_status status = rs_witness(h.get(), &payload);
        return finish(status, take(payload), as_json, [](const json& doc) {
            for (const auto& w : doc.at("witnesses")) {
                std::cout << "i=" << w.at("i").get<int>() << " rho=" << w.at("rho").get<long long>()
                          << " g=[";
                bool first = true;
                for (const auto& g : w.at("g")) {
                    if (!first) std::cout << ",";
                    std::cout << g.get<long long>();
                    first = false;
                }
                std::cout << "] slack=" << w.at("slack").get<long long>()
                          << (w.at("fits").get<bool>() ? " fits" : " oversized") << "\n";
            }
            bool full = doc.at("full_support").get<bool>();
            std::cout << "full support: " << (full ? "yes" : "no") << "\n";
            if (doc.contains("certificate"))
                std::cout << "excluded certificate: " << doc.at("certificate").get<std::string>()
                          << "\n";
        });
    }
    if (equivalence->parsed()) {
        char* payload = nullptr;
        rs_status status =
            rs_equivalence(equivalence_alpha.c_str(), brute ? brute_cap : 0, &payload);
        return finish(status, take(payload), as_json, [](const json& doc) {
            for (const auto& e : doc.at("entries"))
                std::cout << "j=" << e.at("j").get<int>() << " N=" << e.at("N").get<long long>()
                          << " rho=" << e.at("rho").get<long long>()
                          << (e.at("pass").get<bool>() ? " pass" : " fail") << "\n";
            std::cout << "necessary condition: "
                      << (doc.at("ghs_necessary").get<bool>() ? "holds" : "fails") << "\n";
            std::cout << "strict triangle: "
                      << (doc.at("strict_triangle").get<bool>() ? "yes" : "no") << "\n";
            if (!doc.at("brute_force").is_null())
                std::cout << "brute force equivalence: "
                          << (doc.at("brute_force").get<bool>() ? "yes" : "no") << "\n";
        });
    }
    if (verify->parsed()) {
        char* payload = nullptr;
        rs_status status = rs_verify(max_size, max_length, threads, &payload);
        return finish(status, take(payload), as_json, [](const json& doc) {
            for (const auto& suite : doc.at("suites")) {
                std::cout << (suite.at("ok").get<bool>() ? "ok   " : "FAIL ")
                          << suite.at("suite").get<std::string>() << " (checked "
                          << suite.at("checked").get<long long>() << ")\n";
                if (suite.contains("counterexample"))
                    std::cout << "     " << suite.at("counterexample").get<std::string>() << "\n";
            }
        });
    }
    return 0;
}
