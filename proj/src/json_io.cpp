#include "ribbonschur/json_io.hpp"

#include <algorithm>

namespace ribbonschur {

using nlohmann::json;

namespace {

std::string overlap_string(const std::vector<int>& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

}  // namespace

json to_json(const Tableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return json{{"rows", rows}, {"text", to_string(t)}};
}

json to_json(const SchurExpansion& expansion) {
    json coeffs = json::array();
    for (const auto& [nu, c] : expansion.coefficients)
        coeffs.push_back(json{{"nu", to_string(nu)}, {"c", c}});
    return json{{"coefficients", coeffs},
                {"interval",
                 json{{"bottom", to_string(expansion.bottom)}, {"top", to_string(expansion.top)}}},
                {"full_support", expansion.full_support}};
}

json to_json(const WitnessReport& report) {
    json witnesses = json::array();
    for (const Witness& w : report.witnesses)
        witnesses.push_back(json{{"i", w.index},
                                 {"rho", w.rho},
                                 {"g", w.g},
                                 {"size", w.size},
                                 {"slack", w.slack},
                                 {"fits", w.fits}});
    json out{{"full_support", report.full_support}, {"witnesses", witnesses}};
    if (report.certificate) out["certificate"] = to_string(*report.certificate);
    return out;
}

json to_json(const EquivalenceReport& report, const Partition& alpha) {
    json entries = json::array();
    for (const EquivalenceEntry& e : report.entries)
        entries.push_back(
            json{{"j", e.j}, {"N", e.threshold}, {"rho", e.rho}, {"pass", e.pass}});
    json out{{"alpha", to_string(alpha)},
             {"entries", entries},
             {"ghs_necessary", report.ghs_necessary},
             {"strict_triangle", report.triangle}};
    if (report.brute_force)
        out["brute_force"] = *report.brute_force;
    else
        out["brute_force"] = nullptr;
    return out;
}

json to_json(const ScanResult& result) {
    json out{{"suite", result.suite}, {"checked", result.checked}, {"ok", result.ok}};
    if (!result.ok) out["counterexample"] = result.counterexample;
    return out;
}

json support_json(const Partition& alpha, const std::vector<int>& p) {
    Ribbon r = Ribbon::from_pair(alpha, p);
    auto [bottom, top] = r.schur_interval();
    std::vector<Partition> sup = support(alpha, p);
    json members = json::array(), excluded = json::array();
    for (const Partition& nu : dominance_interval(bottom, top)) {
        if (std::find(sup.begin(), sup.end(), nu) != sup.end())
            members.push_back(to_string(nu));
        else
            excluded.push_back(to_string(nu));
    }
    return json{{"alpha", to_string(alpha)},
                {"overlap", overlap_string(p)},
                {"interval", json{{"bottom", to_string(bottom)}, {"top", to_string(top)}}},
                {"support", members},
                {"excluded", excluded},
                {"full_support", excluded.empty()}};
}

json positivity_json(const Partition& alpha, const std::vector<int>& p, const Partition& nu,
                     bool with_companion) {
    bool positive = positivity_inequalities(alpha, p, nu);
    json out{{"alpha", to_string(alpha)},
             {"overlap", overlap_string(p)},
             {"nu", to_string(nu)},
             {"positive", positive}};
    if (positive && with_companion) {
        Ribbon r = Ribbon::from_pair(alpha, p);
        Tableau companion = construct_companion(alpha, p, nu);
        out["companion"] = to_json(companion);
        SkewFilling filling = companion_filling(companion, r);
        json rows = json::array();
        for (const auto& row : filling.entries()) rows.push_back(row);
        out["filling"] = json{{"outer", to_string(filling.shape().outer())},
                              {"inner", to_string(filling.shape().inner())},
                              {"rows", rows}};
    }
    return out;
}

json verify_json(const std::vector<ScanResult>& results) {
    json suites = json::array();
    bool ok = true;
    for (const ScanResult& r : results) {
        suites.push_back(to_json(r));
        ok = ok && r.ok;
    }
    return json{{"ok", ok}, {"suites", suites}};
}

}  // namespace ribbonschur
