#include <algorithm>

#include "doctest.h"
#include "ribbonschur/partition.hpp"
#include "ribbonschur/ribbon.hpp"

using namespace ribbonschur;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Composition C(std::vector<int> v) { return Composition(std::move(v)); }

}  // namespace

TEST_CASE("overlapping partition of worked ribbons") {
    CHECK(Ribbon::connected(C({2, 3, 2, 3})).overlapping_partition() ==
          std::vector<int>{3, 1, 0, 0});
    CHECK(Ribbon::horizontal_strip(C({3, 2, 2})).overlapping_partition() ==
          std::vector<int>{0, 0, 0});
    // Three components: rows 2-3 and rows 4-5 overlap.
    Ribbon r(C({3, 3, 2, 2, 2}), {false, true, false, true});
    CHECK(r.overlapping_partition() == std::vector<int>{2, 2, 1, 1, 0});
    CHECK(r.component_count() == 3);
}

TEST_CASE("ribbon from a partition pair") {
    Ribbon r = Ribbon::from_pair(P({3, 3, 2, 2, 2}), {2, 2, 1, 1, 0});
    CHECK(r.component_count() == 3);
    CHECK(r.overlaps() == std::vector<bool>{false, true, false, true});

    Ribbon staircase = Ribbon::from_pair(P({4, 4, 3, 2}), {3, 2, 1, 0});
    CHECK(staircase.connected_ribbon());

    Ribbon strip = Ribbon::from_pair(P({4, 3, 2}), {0, 0, 0});
    CHECK(strip.component_count() == 3);

    CHECK_THROWS_AS(Ribbon::from_pair(P({3, 3}), {2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Ribbon::from_pair(P({3, 3}), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Ribbon::from_pair(P({3, 1, 1}), {2, 1, 0}), std::invalid_argument);
}

TEST_CASE("pair encoding is a bijection on monotone ribbons") {
    for (int n = 4; n <= 18; ++n)
        for (const Partition& alpha : partitions_of(n, 2, 1, 6)) {
            if (alpha.part(1) > 5) continue;  // parts up to 5, lengths up to 6
            for (const std::vector<int>& p : all_overlap_partitions(alpha.length())) {
                Ribbon r = Ribbon::from_pair(alpha, p);
                CHECK(r.overlapping_partition() == p);
                CHECK(r.component_count() == alpha.length() - p[0]);
                // Contained in the staircase entrywise.
                for (int i = 0; i < alpha.length(); ++i)
                    CHECK(p[static_cast<size_t>(i)] <= alpha.length() - 1 - i);
            }
            // Distinct overlap partitions give distinct flag vectors and back.
            auto ps = all_overlap_partitions(alpha.length());
            CHECK(ps.size() == (1u << (alpha.length() - 1)));
        }
}

TEST_CASE("schur intervals") {
    Ribbon ex = Ribbon::from_pair(P({3, 3, 2, 2, 2}), {2, 2, 1, 1, 0});
    auto [bottom, top] = ex.schur_interval();
    CHECK(bottom == P({3, 3, 2, 2, 2}));
    CHECK(top == P({10, 2}));

    auto [b2, t2] = Ribbon::horizontal_strip(C({4, 3})).schur_interval();
    CHECK(t2 == P({7}));

    auto [b3, t3] = Ribbon::connected(C({4, 3, 2, 2})).schur_interval();
    CHECK(b3 == P({4, 3, 2, 2}));
    CHECK(t3 == P({8, 3}));
}

TEST_CASE("rests of a ribbon") {
    Partition a({7, 6, 6, 2, 2, 2, 2});
    std::vector<int> p{6, 5, 4, 3, 2, 1, 0};
    CHECK(rest(a, p, 3) == 6);
    CHECK(rest(P({4, 3, 2, 2}), std::vector<int>{3, 2, 1, 0}, 1) == 6);
    // Strictly decreasing chain below the column count.
    long long cols = a.sum() - p[0];
    long long prev = cols;
    for (int i = 1; i <= 5; ++i) {
        long long r = rest(a, p, i);
        CHECK(r < prev);
        prev = r;
    }
    CHECK_THROWS_AS(rest(a, p, 7), std::invalid_argument);
    CHECK_THROWS_AS(rest(a, p, 0), std::invalid_argument);
}

TEST_CASE("skew layouts of small ribbons") {
    SkewShape connected22 = Ribbon::connected(C({2, 2})).to_skew_shape();
    CHECK(connected22.outer() == P({3, 2}));
    CHECK(connected22.inner() == P({1}));

    SkewShape strip22 = Ribbon::horizontal_strip(C({2, 2})).to_skew_shape();
    CHECK(strip22.outer() == P({4, 2}));
    CHECK(strip22.inner() == P({2}));

    SkewShape big = Ribbon::connected(C({4, 3, 2, 2})).to_skew_shape();
    CHECK(big.outer() == P({8, 5, 3, 2}));
    CHECK(big.inner() == P({4, 2, 1}));
}

TEST_CASE("skew layout preserves ribbon structure") {
    for (int n = 4; n <= 14; n += 2)
        for (const Partition& alpha : partitions_of(n, 2, 2, 5))
            for (const std::vector<int>& p : all_overlap_partitions(alpha.length())) {
                Ribbon r = Ribbon::from_pair(alpha, p);
                SkewShape s = r.to_skew_shape();
                CHECK_FALSE(s.contains_2x2());
                CHECK(s.row_partition() == alpha);
                CHECK(s.component_count() == r.component_count());
                CHECK(s.size() == r.size());
                // Basic form: already no empty rows or columns.
                CHECK(s.basic_form() == s);
            }
}

TEST_CASE("general skew rows allow length one") {
    // Vertical domino stack: all rows of length 1 overlapping.
    SkewShape col = skew_shape_from_rows(C({1, 1, 1}), {true, true});
    CHECK(col.outer() == P({1, 1, 1}));
    CHECK(col.component_count() == 1);
    // Length-one middle row makes a column of length three.
    SkewShape hook = skew_shape_from_rows(C({2, 1, 2}), {true, true});
    CHECK(hook.outer() == P({3, 2, 2}));
    CHECK(hook.inner() == P({1, 1}));
}

TEST_CASE("rotation and conjugation of skew shapes") {
    SkewShape s = Ribbon::connected(C({4, 3, 2, 2})).to_skew_shape();
    CHECK(s.rotated180().rotated180() == s.basic_form());
    CHECK(s.conjugated().conjugated() == s);
    CHECK(s.conjugated().size() == s.size());
    CHECK(s.rotated180().size() == s.size());
    // Conjugating transposes row data into column data.
    CHECK(s.conjugated().column_partition_conjugate() == conjugate(s.row_partition()));
    CHECK(s.conjugated().row_partition() == conjugate(s.column_partition_conjugate()));
}
