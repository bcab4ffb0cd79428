#include <algorithm>

#include "doctest.h"
#include "ribbonschur/partition.hpp"

using namespace ribbonschur;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Independent oracle for partition counts: p(n, k) = partitions of n with
// parts at most k, via the standard recurrence.
long long count_partitions(int n) {
    std::vector<std::vector<long long>> p(static_cast<size_t>(n + 1),
                                          std::vector<long long>(static_cast<size_t>(n + 1), 0));
    for (int k = 0; k <= n; ++k) p[0][static_cast<size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            p[static_cast<size_t>(m)][static_cast<size_t>(k)] =
                p[static_cast<size_t>(m)][static_cast<size_t>(k - 1)] +
                (m >= k ? p[static_cast<size_t>(m - k)][static_cast<size_t>(k)] : 0);
        }
    return p[static_cast<size_t>(n)][static_cast<size_t>(n)];
}

bool prefix_dominates(const Partition& big, const Partition& small) {
    long long a = 0, b = 0;
    for (int i = 1; i <= std::max(big.length(), small.length()); ++i) {
        a += big.part(i);
        b += small.part(i);
        if (b > a) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("conjugate on fixed shapes") {
    CHECK(conjugate(P({3, 2})) == P({2, 2, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(conjugate(P({4, 3, 2}))) == P({4, 3, 2}));
}

TEST_CASE("conjugate is an involution") {
    for (int n = 0; n <= 20; ++n)
        for (const Partition& lam : partitions_of(n)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("dominance order basics") {
    CHECK(dominates(P({10, 2}), P({3, 3, 2, 2, 2})));
    CHECK(dominates(P({3, 3}), P({3, 3})));
    CHECK_FALSE(dominates(P({3, 3}), P({4, 1, 1})));
    CHECK_FALSE(dominates(P({4, 1, 1}), P({3, 3})));
    CHECK_THROWS_AS(dominates(P({3}), P({2})), std::invalid_argument);
}

TEST_CASE("dominance is self-dual under conjugation") {
    for (int n = 1; n <= 12; ++n) {
        auto all = partitions_of(n);
        for (const Partition& lam : all)
            for (const Partition& mu : all)
                CHECK(dominates(lam, mu) == dominates(conjugate(mu), conjugate(lam)));
    }
}

TEST_CASE("extremes of the dominance lattice") {
    for (int n = 1; n <= 12; ++n) {
        Partition row(std::vector<int>{n});
        Partition column(std::vector<int>(static_cast<size_t>(n), 1));
        for (const Partition& lam : partitions_of(n)) {
            CHECK(dominates(row, lam));
            CHECK(dominates(lam, column));
        }
    }
}

TEST_CASE("partitions_of counts and order") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0] == Partition{});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(10).size() == 42);
    for (int n = 1; n <= 14; ++n) {
        auto all = partitions_of(n);
        CHECK(static_cast<long long>(all.size()) == count_partitions(n));
        for (size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].sum() == n);
            if (i > 0) CHECK(all[i - 1].parts() > all[i].parts());  // largest-first lexicographic
        }
    }
}

TEST_CASE("dominance_interval against an independent filter") {
    std::vector<Partition> got = dominance_interval(P({2, 2, 2}), P({4, 2}));
    std::vector<Partition> want{P({4, 2}), P({4, 1, 1}), P({3, 3}), P({3, 2, 1}), P({2, 2, 2})};
    CHECK(got == want);

    CHECK(dominance_interval(P({3, 1}), P({3, 1})) == std::vector<Partition>{P({3, 1})});

    auto interval = dominance_interval(P({3, 3, 2, 2, 2}), P({10, 2}));
    CHECK(std::find(interval.begin(), interval.end(), P({3, 3, 2, 2, 2})) != interval.end());
    CHECK(std::find(interval.begin(), interval.end(), P({10, 2})) != interval.end());

    CHECK_THROWS_AS(dominance_interval(P({4, 2}), P({2, 2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(dominance_interval(P({3}), P({2, 2})), std::invalid_argument);

    for (int n = 1; n <= 14; n += 3) {
        auto all = partitions_of(n);
        for (const Partition& bottom : all)
            for (const Partition& top : all) {
                if (!prefix_dominates(top, bottom)) continue;
                std::vector<Partition> fresh;
                for (const Partition& nu : all)
                    if (prefix_dominates(top, nu) && prefix_dominates(nu, bottom))
                        fresh.push_back(nu);
                CHECK(dominance_interval(bottom, top) == fresh);
            }
    }
}

TEST_CASE("text codecs") {
    CHECK(parse_partition("3,3,2,2,2") == P({3, 3, 2, 2, 2}));
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("0") == Partition{});
    CHECK(to_string(P({7, 6, 6, 6, 2})) == "7,6,6,6,2");
    CHECK(to_string(Partition{}) == "");
    CHECK(parse_composition("2,4,2").parts() == std::vector<int>{2, 4, 2});
    CHECK_THROWS_AS(parse_partition("2,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("3,0"), std::invalid_argument);
}

TEST_CASE("rearrangements deduplicate") {
    auto r = rearrangements(P({4, 2, 2}));
    CHECK(r.size() == 3);
    auto r2 = rearrangements(P({2, 2, 2}));
    CHECK(r2.size() == 1);
}
