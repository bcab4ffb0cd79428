#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ribbonschur/partition.hpp"

namespace ribbonschur {

// N_j: the largest k whose total shortfall sum over the first j parts below k
// stays within len(alpha)-j-2.
long long ghs_threshold(const Partition& alpha, int j);

struct EquivalenceEntry {
    int j = 0;
    long long threshold = 0;  // N_j
    long long rho = 0;        // rest of order j for the connected ribbon
    bool pass = false;        // N_j < rho_j
};

struct EquivalenceReport {
    std::vector<EquivalenceEntry> entries;
    bool ghs_necessary = true;            // all entries pass
    bool triangle = true;                 // every 3-multiset of parts is strictly triangular
    std::optional<bool> brute_force;      // filled by the exhaustive check when requested
};

// The necessary condition for a full equivalence class of the connected
// ribbon over alpha. Each comparison is evaluated in both equivalent forms
// (threshold against rest, and shortfall sum against len(alpha)-j-1); a
// disagreement raises invariant_error.
EquivalenceReport ghs_necessary(const Partition& alpha);

// True iff the support of the connected ribbon is the same for every
// rearrangement of alpha, by explicit LR enumeration.
bool full_equivalence_bruteforce(const Partition& alpha, long long size_cap = 18);

// Every 3-multiset {x<=y<=z} of parts satisfies z < x+y.
bool strict_triangle(const Composition& beta);

// Full-support decision for a connected length-3 ribbon: full unless the
// largest part sits first or last and reaches the sum of the other two, in
// which case the excluded partition is returned.
std::pair<bool, std::optional<Partition>> length3_classification(const Composition& beta);

}  // namespace ribbonschur
