#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ribbonschur/partition.hpp"
#include "ribbonschur/ribbon.hpp"

namespace ribbonschur {

// One exhaustive cross-check; `checked` counts the individual comparisons,
// `counterexample` carries the first offending instance when not ok.
struct ScanResult {
    std::string suite;
    long long checked = 0;
    bool ok = true;
    std::string counterexample;
};

struct ScanOptions {
    int max_size = 10;    // cap on |alpha| (and on boxes for shape sweeps)
    int min_length = 2;   // row-count window for the ribbon sweeps
    int max_length = 5;
    int threads = 0;      // 0 = all available cores
};

int resolve_threads(int requested);

// Every basic skew shape (no empty row or column) with 1..max_boxes boxes.
void for_each_basic_skew_shape(int max_boxes, const std::function<void(const SkewShape&)>& fn);

// The monotone-ribbon family sweep: over every alpha with parts >= 2 and
// length in the window, every overlapping partition p and every nu of |alpha|.
struct RibbonFamilyScan {
    ScanResult oracle_equivalence;       // inequalities vs descent counts vs LR search
    ScanResult support_classification;   // witness full-support flag vs enumerated support
    ScanResult certificates;             // emitted certificates are excluded interval points
    ScanResult companion_totality;       // construction succeeds on every positive triple
};
RibbonFamilyScan scan_ribbon_family(const ScanOptions& opts);

// Connected ribbons: SYT descent counting equals LR enumeration exactly.
ScanResult scan_connected_counts(const ScanOptions& opts);

// LR coefficients under 180-degree rotation and conjugation, plus the
// direct-sum/product consistency of expansions.
ScanResult scan_symmetries(const ScanOptions& opts);

// Both forms of the equivalence threshold comparison, its coincidence with
// the full-support test, and the brute-force equivalence check.
ScanResult scan_equivalence(const ScanOptions& opts);

// The composition-level necessary condition never contradicts brute force;
// the length-3 classification table matches enumeration.
ScanResult scan_composition_necessity(const ScanOptions& opts);

// Fixed worked examples, including the four rotation traces.
ScanResult scan_paper_regressions();

// Everything above with one option set (the `verify` command).
std::vector<ScanResult> run_all_scans(const ScanOptions& opts);

}  // namespace ribbonschur
