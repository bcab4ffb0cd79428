#include "ribbonschur/equivalence.hpp"

#include <algorithm>

#include "ribbonschur/lr.hpp"
#include "ribbonschur/ribbon.hpp"

namespace ribbonschur {

namespace {

void require_fat_parts(const Partition& alpha) {
    for (int x : alpha.parts())
        if (x < 2) throw std::invalid_argument("parts must be at least two");
}

}  // namespace

long long ghs_threshold(const Partition& alpha, int j) {
    require_fat_parts(alpha);
    if (j < 1 || j > alpha.length() - 2)
        throw std::invalid_argument("ghs_threshold: index out of range");
    long long budget = alpha.length() - j - 2;
    long long k = 1;
    while (true) {
        long long shortfall = 0;
        for (int i = 1; i <= j; ++i)
            if (alpha.part(i) < k + 1) shortfall += (k + 1) - alpha.part(i);
        if (shortfall > budget) return k;
        ++k;
    }
}

EquivalenceReport ghs_necessary(const Partition& alpha) {
    require_fat_parts(alpha);
    EquivalenceReport report;
    std::vector<int> p = staircase_overlap(alpha.length());
    for (int j = 1; j <= alpha.length() - 2; ++j) {
        EquivalenceEntry e;
        e.j = j;
        e.threshold = ghs_threshold(alpha, j);
        e.rho = rest(alpha, p, j);
        e.pass = e.threshold < e.rho;
        long long shortfall = 0;
        for (int i = 1; i <= j; ++i)
            if (alpha.part(i) < e.rho) shortfall += e.rho - alpha.part(i);
        bool alternate = shortfall >= alpha.length() - j - 1;
        if (alternate != e.pass)
            throw invariant_error("ghs_necessary: the two comparison forms disagree");
        report.ghs_necessary = report.ghs_necessary && e.pass;
        report.entries.push_back(e);
    }
    report.triangle = alpha.length() < 3 || strict_triangle(Composition(alpha.parts()));
    return report;
}

bool full_equivalence_bruteforce(const Partition& alpha, long long size_cap) {
    require_fat_parts(alpha);
    if (alpha.length() < 3)
        throw std::invalid_argument("full_equivalence_bruteforce: need at least three rows");
    if (alpha.sum() > size_cap)
        throw std::invalid_argument("full_equivalence_bruteforce: size cap exceeded");
    std::vector<Partition> candidates = partitions_of(alpha.sum());
    std::optional<std::vector<bool>> reference;
    for (const Composition& beta : rearrangements(alpha)) {
        SkewShape shape = Ribbon::connected(beta).to_skew_shape();
        std::vector<bool> hits;
        hits.reserve(candidates.size());
        for (const Partition& nu : candidates) hits.push_back(lr_positive(shape, nu));
        if (!reference)
            reference = std::move(hits);
        else if (*reference != hits)
            return false;
    }
    return true;
}

bool strict_triangle(const Composition& beta) {
    if (beta.length() < 3) throw std::invalid_argument("strict_triangle: need three parts");
    Partition sorted = beta.sorted();
    int len = sorted.length();
    return sorted.part(1) < sorted.part(len - 1) + sorted.part(len);
}

std::pair<bool, std::optional<Partition>> length3_classification(const Composition& beta) {
    if (beta.length() != 3) throw std::invalid_argument("length3_classification: need length 3");
    for (int x : beta.parts())
        if (x < 2) throw std::invalid_argument("length3_classification: parts must be at least two");
    int b1 = beta.part(1), b2 = beta.part(2), b3 = beta.part(3);
    int big = std::max({b1, b2, b3});
    bool excluded = (b1 == big && big >= b2 + b3) || (b3 == big && big >= b1 + b2);
    if (!excluded) return {true, std::nullopt};
    int others = static_cast<int>(beta.sum()) - big;
    return {false, Partition(std::vector<int>{big, others})};
}

}  // namespace ribbonschur
