#include "ribbonschur/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "ribbonschur/criteria.hpp"
#include "ribbonschur/equivalence.hpp"
#include "ribbonschur/lr.hpp"

namespace ribbonschur {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RIBBON_SCHUR_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Shared tally for one suite: comparison count plus the first (in work-item
// order) counterexample, merged deterministically across workers.
class Tally {
public:
    void add(long long n) { checked_ += n; }
    void fail(long long order, const std::string& message) {
        std::lock_guard<std::mutex> lock(mu_);
        if (!failed_ || order < order_) {
            failed_ = true;
            order_ = order;
            message_ = message;
        }
    }
    ScanResult result(const std::string& suite) const {
        ScanResult r;
        r.suite = suite;
        r.checked = checked_.load();
        r.ok = !failed_;
        r.counterexample = message_;
        return r;
    }

private:
    std::atomic<long long> checked_{0};
    mutable std::mutex mu_;
    bool failed_ = false;
    long long order_ = 0;
    std::string message_;
};

void run_parallel(long long items, int threads, const std::function<void(long long)>& work) {
    threads = std::max(1, static_cast<int>(std::min<long long>(threads, items ? items : 1)));
    if (threads == 1) {
        for (long long i = 0; i < items; ++i) work(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (long long i = next.fetch_add(1); i < items; i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();
}

std::string overlap_string(const std::vector<int>& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

std::string shape_string(const SkewShape& a) {
    return to_string(a.outer()) + "/" + to_string(a.inner());
}

// Descent tables for every partition of n, aligned with partitions_of(n).
std::vector<DescentTable> tables_for(const std::vector<Partition>& shapes, int threads) {
    std::vector<DescentTable> tables(shapes.size());
    run_parallel(static_cast<long long>(shapes.size()), threads,
                 [&](long long i) { tables[static_cast<size_t>(i)] = syt_descent_table(shapes[static_cast<size_t>(i)]); });
    return tables;
}

}  // namespace

void for_each_basic_skew_shape(int max_boxes, const std::function<void(const SkewShape&)>& fn) {
    for (int n = 1; n <= max_boxes; ++n) {
        // Row lengths top-to-bottom, then leftmost columns bottom-up.
        std::vector<int> lengths;
        std::function<void(int)> pick_lengths = [&](int remaining) {
            if (remaining == 0) {
                std::vector<int> starts(lengths.size(), 0);
                int m = static_cast<int>(lengths.size());
                // Build from the bottom row (index m-1 in top-to-bottom order).
                std::function<void(int)> place = [&](int i) {
                    if (i < 0) {
                        std::vector<int> outer, inner;
                        for (int r = 0; r < m; ++r) {
                            inner.push_back(starts[static_cast<size_t>(r)] - 1);
                            outer.push_back(starts[static_cast<size_t>(r)] + lengths[static_cast<size_t>(r)] - 1);
                        }
                        fn(SkewShape(Partition(std::move(outer)), Partition(std::move(inner))));
                        return;
                    }
                    int below_start = starts[static_cast<size_t>(i + 1)];
                    int below_end = below_start + lengths[static_cast<size_t>(i + 1)] - 1;
                    int lo = std::max(below_start, below_end + 1 - lengths[static_cast<size_t>(i)]);
                    int hi = below_end + 1;
                    for (int s = lo; s <= hi; ++s) {
                        starts[static_cast<size_t>(i)] = s;
                        place(i - 1);
                    }
                };
                if (m == 1) {
                    starts[0] = 1;
                    place(-1);
                } else {
                    starts[static_cast<size_t>(m - 1)] = 1;
                    place(m - 2);
                }
                return;
            }
            for (int len = 1; len <= remaining; ++len) {
                lengths.push_back(len);
                pick_lengths(remaining - len);
                lengths.pop_back();
            }
        };
        pick_lengths(n);
    }
}

RibbonFamilyScan scan_ribbon_family(const ScanOptions& opts) {
    int threads = resolve_threads(opts.threads);
    Tally oracle, classification, certificates, companions;
    for (int n = 2 * std::max(1, opts.min_length); n <= opts.max_size; ++n) {
        std::vector<Partition> shapes = partitions_of(n);
        std::vector<DescentTable> tables = tables_for(shapes, threads);
        std::vector<Partition> alphas = partitions_of(n, 2, opts.min_length, opts.max_length);
        std::vector<std::pair<const Partition*, std::vector<int>>> items;
        for (const Partition& alpha : alphas)
            for (const std::vector<int>& p : all_overlap_partitions(alpha.length()))
                items.emplace_back(&alpha, p);
        run_parallel(static_cast<long long>(items.size()), threads, [&](long long idx) {
            const Partition& alpha = *items[static_cast<size_t>(idx)].first;
            const std::vector<int>& p = items[static_cast<size_t>(idx)].second;
            Ribbon r = Ribbon::from_pair(alpha, p);
            SkewShape skew = r.to_skew_shape();
            auto [bottom, top] = r.schur_interval();
            std::string tag = "alpha=" + to_string(alpha) + " p=" + overlap_string(p);
            long long interval_count = 0, support_count = 0;
            for (size_t s = 0; s < shapes.size(); ++s) {
                const Partition& nu = shapes[s];
                bool in_interval = dominates(nu, bottom) && dominates(top, nu);
                if (in_interval) ++interval_count;
                bool ineq = positivity_inequalities(alpha, p, nu);
                bool via_syt = ribbon_coefficient(r, nu, tables[s]) > 0;
                bool via_lr = lr_positive(skew, nu);
                oracle.add(1);
                if (ineq != via_syt || via_syt != via_lr)
                    oracle.fail(idx, tag + " nu=" + to_string(nu) +
                                         ": inequalities=" + std::to_string(ineq) +
                                         " descent-count=" + std::to_string(via_syt) +
                                         " lr-search=" + std::to_string(via_lr));
                if (via_lr) ++support_count;
                if (ineq) {
                    companions.add(1);
                    try {
                        Tableau t = construct_companion(alpha, p, nu);
                        if (!is_companion_valid(t, r) || !companion_filling(t, r).is_semistandard())
                            companions.fail(idx, tag + " nu=" + to_string(nu) +
                                                     ": constructed tableau is not a companion");
                    } catch (const std::exception& e) {
                        companions.fail(idx, tag + " nu=" + to_string(nu) + ": " + e.what());
                    }
                }
            }
            WitnessReport report = witness_report(alpha, p);
            classification.add(1);
            if (report.full_support != (support_count == interval_count))
                classification.fail(idx, tag + ": witness test says " +
                                             std::to_string(report.full_support) +
                                             ", enumeration says " +
                                             std::to_string(support_count == interval_count));
            if (!report.full_support) {
                certificates.add(1);
                if (!report.certificate)
                    certificates.fail(idx, tag + ": non-full support without a certificate");
                else {
                    const Partition& cert = *report.certificate;
                    bool inside = dominates(cert, bottom) && dominates(top, cert);
                    if (!inside || lr_positive(skew, cert))
                        certificates.fail(idx, tag + ": certificate " + to_string(cert) +
                                                   " is not an excluded interval point");
                }
            }
        });
    }
    RibbonFamilyScan out;
    out.oracle_equivalence = oracle.result("positivity-oracle-equivalence");
    out.support_classification = classification.result("full-support-classification");
    out.certificates = certificates.result("non-full-certificates");
    out.companion_totality = companions.result("companion-totality");
    return out;
}

ScanResult scan_connected_counts(const ScanOptions& opts) {
    int threads = resolve_threads(opts.threads);
    Tally tally;
    for (int n = 2; n <= opts.max_size; ++n) {
        std::vector<Partition> shapes = partitions_of(n);
        std::vector<DescentTable> tables = tables_for(shapes, threads);
        std::vector<Partition> alphas = partitions_of(n, 2, 1, -1);
        run_parallel(static_cast<long long>(alphas.size()), threads, [&](long long idx) {
            const Partition& alpha = alphas[static_cast<size_t>(idx)];
            Ribbon r = Ribbon::connected(Composition(alpha.parts()));
            SkewShape skew = r.to_skew_shape();
            for (size_t s = 0; s < shapes.size(); ++s) {
                long long via_descents = ribbon_coefficient(r, shapes[s], tables[s]);
                long long via_lr = lr_coefficient(skew, shapes[s]);
                tally.add(1);
                if (via_descents != via_lr)
                    tally.fail(idx, "alpha=" + to_string(alpha) + " nu=" + to_string(shapes[s]) +
                                        ": descent count " + std::to_string(via_descents) +
                                        " vs LR count " + std::to_string(via_lr));
            }
        });
    }
    return tally.result("connected-count-cross-oracle");
}

namespace {

SkewShape direct_sum(const SkewShape& a, const SkewShape& b) {
    int width = b.outer().part(1);
    std::vector<int> outer, inner;
    for (int r = 1; r <= a.row_count(); ++r) {
        outer.push_back(a.outer().part(r) + width);
        inner.push_back(a.inner().part(r) + width);
    }
    for (int r = 1; r <= b.row_count(); ++r) {
        outer.push_back(b.outer().part(r));
        inner.push_back(b.inner().part(r));
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

CoefficientMap product_expansion(const CoefficientMap& lhs, const CoefficientMap& rhs,
                                 long long total) {
    CoefficientMap out;
    for (const auto& [mu, cm] : lhs)
        for (const auto& [nu, cn] : rhs)
            for (const Partition& lambda : partitions_of(total)) {
                bool contains = true;
                for (int i = 1; i <= mu.length() && contains; ++i)
                    if (mu.part(i) > lambda.part(i)) contains = false;
                if (!contains) continue;
                long long c = lr_coefficient(SkewShape(lambda, mu), nu);
                if (c > 0) out[lambda] += cm * cn * c;
            }
    return out;
}

}  // namespace

ScanResult scan_symmetries(const ScanOptions& opts) {
    int threads = resolve_threads(opts.threads);
    Tally tally;
    std::vector<SkewShape> shapes;
    for_each_basic_skew_shape(opts.max_size, [&](const SkewShape& a) { shapes.push_back(a); });
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < shapes.size(); ++i) index[shape_string(shapes[i])] = i;
    std::vector<CoefficientMap> expansions(shapes.size());
    run_parallel(static_cast<long long>(shapes.size()), threads, [&](long long i) {
        expansions[static_cast<size_t>(i)] = skew_schur_expansion(shapes[static_cast<size_t>(i)]);
    });
    run_parallel(static_cast<long long>(shapes.size()), threads, [&](long long i) {
        const SkewShape& a = shapes[static_cast<size_t>(i)];
        const CoefficientMap& base = expansions[static_cast<size_t>(i)];
        SkewShape rotated = a.rotated180();
        auto rot = index.find(shape_string(rotated));
        tally.add(1);
        if (rot == index.end())
            tally.fail(i, "rotation left the enumeration: " + shape_string(a));
        else if (expansions[rot->second] != base)
            tally.fail(i, "expansion changed under rotation: " + shape_string(a));
        SkewShape conj = a.conjugated();
        auto con = index.find(shape_string(conj));
        tally.add(1);
        if (con == index.end())
            tally.fail(i, "conjugate left the enumeration: " + shape_string(a));
        else {
            CoefficientMap mapped;
            for (const auto& [nu, c] : expansions[con->second]) mapped[conjugate(nu)] = c;
            if (mapped != base)
                tally.fail(i, "expansion changed under conjugation: " + shape_string(a));
        }
    });

    // Direct sums multiply: straight shapes and small two-row ribbons.
    std::vector<SkewShape> summands;
    for (int n = 1; n <= std::min(4, opts.max_size); ++n)
        for (const Partition& lambda : partitions_of(n))
            summands.push_back(SkewShape(lambda, Partition{}));
    for (int n = 2; n <= std::min(5, opts.max_size); ++n)
        for (const Partition& alpha : partitions_of(n, 2, 1, 2))
            for (const std::vector<int>& p : all_overlap_partitions(alpha.length()))
                summands.push_back(Ribbon::from_pair(alpha, p).to_skew_shape());
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < summands.size(); ++i)
        for (size_t j = 0; j < summands.size(); ++j)
            if (summands[i].size() + summands[j].size() <= std::min<long long>(8, opts.max_size))
                pairs.emplace_back(i, j);
    run_parallel(static_cast<long long>(pairs.size()), threads, [&](long long k) {
        const SkewShape& a = summands[pairs[static_cast<size_t>(k)].first];
        const SkewShape& b = summands[pairs[static_cast<size_t>(k)].second];
        CoefficientMap sum = skew_schur_expansion(direct_sum(a, b));
        CoefficientMap prod = product_expansion(skew_schur_expansion(a), skew_schur_expansion(b),
                                                a.size() + b.size());
        tally.add(1);
        if (sum != prod)
            tally.fail(static_cast<long long>(shapes.size()) + k,
                       "direct sum " + shape_string(a) + " + " + shape_string(b) +
                           " does not multiply");
    });
    return tally.result("lr-symmetries");
}

ScanResult scan_equivalence(const ScanOptions& opts) {
    int threads = resolve_threads(opts.threads);
    Tally tally;
    std::vector<Partition> alphas;
    for (int n = 4; n <= opts.max_size; ++n)
        for (const Partition& alpha : partitions_of(n, 2, 2, opts.max_length))
            alphas.push_back(alpha);
    int brute_cap = std::min(opts.max_size, 12);
    run_parallel(static_cast<long long>(alphas.size()), threads, [&](long long idx) {
        const Partition& alpha = alphas[static_cast<size_t>(idx)];
        std::string tag = "alpha=" + to_string(alpha);
        bool full = witness_report(alpha, staircase_overlap(alpha.length())).full_support;
        tally.add(1);
        try {
            EquivalenceReport report = ghs_necessary(alpha);  // checks both threshold forms
            if (report.ghs_necessary != full)
                tally.fail(idx, tag + ": necessary-condition flag " +
                                    std::to_string(report.ghs_necessary) +
                                    " vs full-support " + std::to_string(full));
            if (report.triangle && !report.ghs_necessary)
                tally.fail(idx, tag + ": triangle condition without the necessary condition");
        } catch (const std::exception& e) {
            tally.fail(idx, tag + ": " + e.what());
        }
        if (alpha.length() >= 3 && alpha.sum() <= brute_cap) {
            bool brute = full_equivalence_bruteforce(alpha, brute_cap);
            tally.add(1);
            if (brute && !full)
                tally.fail(idx, tag + ": full equivalence class without full support");
            if (alpha.length() <= 4 && brute != full)
                tally.fail(idx, tag + ": short ribbon equivalence " + std::to_string(brute) +
                                    " vs full support " + std::to_string(full));
        }
    });
    return tally.result("equivalence-class-bridge");
}

ScanResult scan_composition_necessity(const ScanOptions& opts) {
    int threads = resolve_threads(opts.threads);
    Tally tally;
    std::vector<Partition> alphas;
    for (int n = 2; n <= std::min(opts.max_size, 12); ++n)
        for (const Partition& alpha : partitions_of(n, 2, 1, -1)) alphas.push_back(alpha);
    run_parallel(static_cast<long long>(alphas.size()), threads, [&](long long idx) {
        const Partition& alpha = alphas[static_cast<size_t>(idx)];
        std::vector<Partition> shapes = partitions_of(alpha.sum());
        for (const Composition& beta : rearrangements(alpha)) {
            SkewShape skew = Ribbon::connected(beta).to_skew_shape();
            for (const Partition& nu : shapes) {
                if (composition_necessary(beta, nu)) continue;
                tally.add(1);
                if (lr_positive(skew, nu))
                    tally.fail(idx, "beta=" + to_string(beta) + " nu=" + to_string(nu) +
                                        ": necessary condition fails but coefficient is positive");
            }
        }
    });

    // Length-3 classification table against enumeration.
    std::vector<Composition> threes;
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b)
            for (int c = 2; c <= 5; ++c) threes.push_back(Composition({a, b, c}));
    run_parallel(static_cast<long long>(threes.size()), threads, [&](long long idx) {
        const Composition& beta = threes[static_cast<size_t>(idx)];
        Ribbon r = Ribbon::connected(beta);
        SkewShape skew = r.to_skew_shape();
        auto [bottom, top] = r.schur_interval();
        bool brute_full = true;
        std::set<Partition> missing;
        for (const Partition& nu : dominance_interval(bottom, top))
            if (!lr_positive(skew, nu)) {
                brute_full = false;
                missing.insert(nu);
            }
        auto [full, excluded] = length3_classification(beta);
        tally.add(1);
        if (full != brute_full || (excluded && missing.count(*excluded) == 0))
            tally.fail(1000000 + idx, "beta=" + to_string(beta) + ": classification mismatch");
    });
    return tally.result("composition-necessity");
}

ScanResult scan_paper_regressions() {
    Tally tally;
    long long step = 0;
    auto expect = [&](bool cond, const std::string& what) {
        tally.add(1);
        if (!cond) tally.fail(step, what);
        ++step;
    };
    auto t = [](const char* text) { return parse_tableau(text); };

    Ribbon example11 = Ribbon::from_pair(Partition({3, 3, 2, 2, 2}), {2, 2, 1, 1, 0});
    auto [bottom, top] = example11.schur_interval();
    expect(bottom == Partition({3, 3, 2, 2, 2}) && top == Partition({10, 2}),
           "three-component interval");

    WitnessReport w = witness_report(Partition({7, 6, 6, 2, 2, 2, 2}), {6, 5, 4, 3, 2, 1, 0});
    expect(!w.full_support && w.certificate && *w.certificate == Partition({7, 6, 6, 6, 2}),
           "seven-row certificate");
    expect(witness_report(Partition({4, 3, 2, 2}), {3, 2, 1, 0}).full_support,
           "staircase full support");

    // Trace one.
    expect(rotation(t("1 1 1 2 2 2 3 3 / 3"), 2, 1) == t("1 1 1 2 2 3 3 3 / 2"), "trace 1 step");
    expect(construct_companion(Partition({3, 3, 3}), {1, 0, 0}, Partition({8, 1})) ==
               t("1 1 1 2 2 3 3 3 / 2"),
           "trace 1 result");

    // Trace two.
    Tableau t2a = rotation(t("1 1 1 1 2 2 2 3 3 / 3 4 4"), 2, 1);
    expect(t2a == t("1 1 1 1 2 2 3 3 3 / 2 4 4"), "trace 2 first step");
    expect(rotation(t2a, 3, 1) == t("1 1 1 1 2 2 3 3 4 / 2 3 4"), "trace 2 second step");
    expect(construct_companion(Partition({4, 3, 3, 2}), {3, 2, 1, 0}, Partition({9, 3})) ==
               t("1 1 1 1 2 2 3 3 4 / 2 3 4"),
           "trace 2 result");

    // Trace three.
    {
        std::vector<const char*> states{
            "1 1 1 2 2 3 3 4 4 / 5 5 / 6 6 / 7 7", "1 1 1 2 3 3 4 4 5 / 2 5 / 6 6 / 7 7",
            "1 1 1 2 3 4 4 5 5 / 2 3 / 6 6 / 7 7", "1 1 1 2 3 4 5 5 6 / 2 3 / 4 6 / 7 7",
            "1 1 1 2 3 4 5 6 6 / 2 3 / 4 5 / 7 7", "1 1 1 2 3 4 5 6 7 / 2 3 / 4 5 / 6 7"};
        std::vector<int> letters{2, 3, 4, 5, 6};
        Tableau cur = t(states[0]);
        Partition nu({9, 2, 2, 2});
        Composition alpha({3, 2, 2, 2, 2, 2, 2});
        expect(canonical_filling(nu, alpha) == cur, "trace 3 canonical start");
        for (size_t i = 0; i < letters.size(); ++i) {
            cur = rotation(cur, letters[i], 1);
            expect(cur == t(states[i + 1]), "trace 3 step " + std::to_string(i + 1));
        }
        Ribbon r = Ribbon::from_pair(Partition({3, 2, 2, 2, 2, 2, 2}), {6, 5, 4, 3, 2, 1, 0});
        expect(clear_critical_block(t(states[0]), {2, 3, 4}, 1, r) == t(states.back()),
               "trace 3 block clearing");
        expect(construct_companion(Partition({3, 2, 2, 2, 2, 2, 2}), {6, 5, 4, 3, 2, 1, 0}, nu) ==
                   t(states.back()),
               "trace 3 result");
    }

    // Trace four.
    {
        std::vector<const char*> states{
            "1 1 1 1 2 2 2 3 3 3 4 4 4 / 5 5 5 6 6 6 7 7 7 8 8 8 9 / 9 9",
            "1 1 1 1 2 2 3 3 3 4 4 4 5 / 2 5 5 6 6 6 7 7 7 8 8 8 9 / 9 9",
            "1 1 1 1 2 2 3 3 4 4 4 5 5 / 2 3 5 6 6 6 7 7 7 8 8 8 9 / 9 9",
            "1 1 1 1 2 2 3 3 4 4 5 5 5 / 2 3 4 6 6 6 7 7 7 8 8 8 9 / 9 9",
            "1 1 1 1 2 2 3 3 4 4 5 5 6 / 2 3 4 5 6 6 7 7 7 8 8 8 9 / 9 9",
            "1 1 1 1 2 2 3 3 4 4 5 5 6 / 2 3 4 5 6 6 7 7 7 8 8 9 9 / 8 9"};
        Partition alpha({4, 3, 3, 3, 3, 3, 3, 3, 3});
        Partition nu({13, 13, 2});
        Tableau cur = t(states[0]);
        expect(canonical_filling(nu, Composition(alpha.parts())) == cur, "trace 4 canonical start");
        std::vector<std::pair<int, int>> steps{{2, 1}, {3, 1}, {4, 1}, {5, 1}, {8, 2}};
        for (size_t i = 0; i < steps.size(); ++i) {
            cur = rotation(cur, steps[i].first, steps[i].second);
            expect(cur == t(states[i + 1]), "trace 4 step " + std::to_string(i + 1));
        }
        expect(construct_companion(alpha, staircase_overlap(9), nu) == t(states.back()),
               "trace 4 result");
    }
    return tally.result("paper-regressions");
}

std::vector<ScanResult> run_all_scans(const ScanOptions& opts) {
    std::vector<ScanResult> out;
    out.push_back(scan_paper_regressions());
    RibbonFamilyScan family = scan_ribbon_family(opts);
    out.push_back(family.oracle_equivalence);
    out.push_back(family.support_classification);
    out.push_back(family.certificates);
    out.push_back(family.companion_totality);
    ScanOptions counts = opts;
    counts.max_size = std::min(opts.max_size, 12);
    out.push_back(scan_connected_counts(counts));
    ScanOptions sym = opts;
    sym.max_size = std::min(opts.max_size, 10);
    out.push_back(scan_symmetries(sym));
    ScanOptions equiv = opts;
    equiv.max_length = std::max(opts.max_length, 6);
    out.push_back(scan_equivalence(equiv));
    out.push_back(scan_composition_necessity(opts));
    return out;
}

}  // namespace ribbonschur
