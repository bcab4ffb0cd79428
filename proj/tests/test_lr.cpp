#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "ribbonschur/lr.hpp"

using namespace ribbonschur;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Composition C(std::vector<int> v) { return Composition(std::move(v)); }
Tableau T(const char* text) { return parse_tableau(text); }

// Inclusion-exclusion oracle for exact-descent-set SYT counts: the number of
// SYT of shape nu with descent set inside S(beta) equals the SSYT count of
// shape nu and content beta, so exact counts follow by alternating sums over
// subsets of s.
long long exact_descent_count_oracle(const Partition& nu, const std::vector<int>& s) {
    long long n = nu.sum();
    long long total = 0;
    for (unsigned pick = 0; pick < (1u << s.size()); ++pick) {
        std::vector<int> subset;
        for (size_t i = 0; i < s.size(); ++i)
            if (pick & (1u << i)) subset.push_back(s[i]);
        std::vector<int> parts;
        int prev = 0;
        for (int cut : subset) {
            parts.push_back(cut - prev);
            prev = cut;
        }
        parts.push_back(static_cast<int>(n) - prev);
        long long kostka = 0;
        for_each_ssyt(nu, C(parts), [&](const Tableau&) { ++kostka; });
        int sign = ((s.size() - subset.size()) % 2 == 0) ? 1 : -1;
        total += sign * kostka;
    }
    return total;
}

}  // namespace

TEST_CASE("yamanouchi words") {
    CHECK(is_yamanouchi({1, 1, 2, 2, 1, 1, 3, 2, 3}));
    CHECK_FALSE(is_yamanouchi({2}));
    CHECK(is_yamanouchi({1, 1, 2, 2}));
    CHECK_FALSE(is_yamanouchi({1, 2, 2}));
    CHECK(is_yamanouchi({}));
}

TEST_CASE("straight shapes have a single LR filling") {
    for (int n = 1; n <= 8; ++n)
        for (const Partition& nu : partitions_of(n)) {
            SkewShape straight(nu, Partition{});
            auto all = enumerate_lr_tableaux(straight, nu);
            REQUIRE(all.size() == 1);
            // The Yamanouchi tableau: row i filled with i.
            for (int r = 1; r <= nu.length(); ++r)
                for (int x : all[0].entries()[size_t(r - 1)]) CHECK(x == r);
        }
}

TEST_CASE("two-row ribbon expansion by hand") {
    SkewShape a = Ribbon::connected(C({2, 2})).to_skew_shape();
    CHECK(lr_coefficient(a, P({2, 2})) == 1);
    CHECK(lr_coefficient(a, P({3, 1})) == 1);
    CHECK(lr_coefficient(a, P({4})) == 0);
    CHECK(lr_coefficient(a, P({2, 1, 1})) == 0);
    auto fillings = enumerate_lr_tableaux(a, P({2, 2}));
    REQUIRE(fillings.size() == 1);
    CHECK(fillings[0].is_semistandard());
    CHECK(is_yamanouchi(fillings[0].reading_word()));
}

TEST_CASE("horizontal strips count Kostka numbers") {
    for (int n = 4; n <= 9; ++n)
        for (const Partition& alpha : partitions_of(n, 2, 1, 4)) {
            SkewShape strip = Ribbon::horizontal_strip(C(alpha.parts())).to_skew_shape();
            for (const Partition& nu : partitions_of(n)) {
                long long kostka = 0;
                for_each_ssyt(nu, C(alpha.parts()), [&](const Tableau&) { ++kostka; });
                CHECK(lr_coefficient(strip, nu) == kostka);
            }
        }
}

TEST_CASE("companion filling of the worked triple") {
    Ribbon r = Ribbon::from_pair(P({4, 2, 2, 2, 2}), {4, 3, 2, 1, 0});
    Tableau t = T("1 1 1 1 2 4 / 2 3 3 5 / 4 5");
    SkewFilling phi = companion_filling(t, r);
    CHECK(phi.entries() == std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}});
    CHECK(phi.is_semistandard());
    CHECK(phi.reading_word() == standardized_word(t));
    CHECK(is_yamanouchi(phi.reading_word()));
    CHECK(is_companion_valid(t, r));

    Tableau q = T("1 1 1 1 2 2 / 3 3 4 5 / 4 5");
    SkewFilling phiq = companion_filling(q, r);
    CHECK(phiq.entries() == std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 1}, {2, 2}, {2, 3}, {2, 3}});
    CHECK_FALSE(phiq.is_semistandard());  // ones stack in the rows 1-2 overlap
    CHECK_FALSE(is_companion_valid(q, r));
    Ribbon relaxed = Ribbon::from_pair(P({4, 2, 2, 2, 2}), {3, 3, 2, 1, 0});
    CHECK(is_companion_valid(q, relaxed));
    CHECK(companion_filling(q, relaxed).is_semistandard());

    Tableau v = T("1 1 1 1 3 3 / 2 2 4 5 / 4 5");
    CHECK_FALSE(companion_filling(v, r).is_semistandard());
    CHECK_FALSE(is_companion_valid(v, r));

    CHECK_THROWS_AS(companion_filling(T("1 1 / 2 2"), r), std::invalid_argument);
}

TEST_CASE("companion validity matches column strictness") {
    // Over every content-matching tableau of a few ribbons.
    std::vector<Ribbon> ribbons{
        Ribbon::from_pair(P({3, 2, 2}), {2, 1, 0}),
        Ribbon::from_pair(P({3, 2, 2}), {1, 1, 0}),
        Ribbon::from_pair(P({4, 2, 2}), {2, 1, 0}),
        Ribbon::from_pair(P({2, 2, 2, 2}), {3, 2, 1, 0}),
        Ribbon::from_pair(P({2, 2, 2, 2}), {1, 0, 0, 0}),
    };
    for (const Ribbon& r : ribbons)
        for (const Partition& nu : partitions_of(r.size()))
            for_each_ssyt(nu, r.rows(), [&](const Tableau& g) {
                CHECK(is_companion_valid(g, r) == companion_filling(g, r).is_semistandard());
            });
}

TEST_CASE("critical sets of canonical fillings") {
    CHECK(critical_set(canonical_filling(P({9, 2, 2, 2}), C({3, 2, 2, 2, 2, 2, 2})),
                       C({3, 2, 2, 2, 2, 2, 2})) == std::vector<int>{2, 3, 4});
    Composition wide({4, 3, 3, 3, 3, 3, 3, 3, 3});
    CHECK(critical_set(canonical_filling(P({13, 13, 2}), wide), wide) ==
          std::vector<int>{2, 3, 4, 6, 7, 8});
    // Full-length shapes put every letter at the start of its own row.
    Composition a({3, 2, 2});
    CHECK(critical_set(canonical_filling(P({3, 2, 2}), a), a).empty());
}

TEST_CASE("critical set via the chi table on canonical fillings") {
    for (int n = 6; n <= 10; ++n)
        for (const Partition& alpha : partitions_of(n, 2, 2, 5))
            for (const Partition& nu : partitions_of(n)) {
                Composition content(alpha.parts());
                if (!kostka_positive(nu, content)) continue;
                Tableau t = canonical_filling(nu, content);
                std::vector<int> expected;
                for (int j = 2; j <= content.length(); ++j) {
                    bool crit = false;
                    for (int i = 1; i <= nu.length(); ++i)
                        if (t.count_in_row(i, j - 1) == content.part(j - 1) &&
                            t.count_in_row(i, j) == content.part(j))
                            crit = true;
                    if (crit) expected.push_back(j);
                }
                CHECK(critical_set(t, content) == expected);
            }
}

TEST_CASE("negligible critical removal on the worked example") {
    Composition alpha({4, 2, 2, 2, 2});
    Tableau v = T("1 1 1 1 3 3 / 2 2 4 5 / 4 5");
    Tableau u = remove_negligible_criticals(v, alpha);
    CHECK(u == T("1 1 1 1 2 3 / 2 3 4 5 / 4 5"));
    CHECK(descent_set(standardize(u)) == std::vector<int>{4, 6, 8, 10});
    // Canonical fillings come back unchanged.
    Tableau c = canonical_filling(P({9, 2, 2, 2}), C({3, 2, 2, 2, 2, 2, 2}));
    CHECK(remove_negligible_criticals(c, C({3, 2, 2, 2, 2, 2, 2})) == c);
    // So does anything whose standardization already has the full descent set.
    Tableau t = T("1 1 1 1 2 4 / 2 3 3 5 / 4 5");
    CHECK(remove_negligible_criticals(t, alpha) == t);
}

TEST_CASE("negligible critical removal properties") {
    for (int n = 6; n <= 9; ++n)
        for (const Partition& alpha : partitions_of(n, 2, 2, 4)) {
            Composition content(alpha.parts());
            for (const Partition& nu : partitions_of(n))
                for_each_ssyt(nu, content, [&](const Tableau& t) {
                    Tableau fixed = remove_negligible_criticals(t, content);
                    CHECK(fixed.shape() == t.shape());
                    CHECK(fixed.content() == t.content());
                    CHECK(critical_set(fixed, content) == critical_set(t, content));
                    // No strictly-decreasing strip boundaries remain.
                    Word w = standardized_word(fixed);
                    long long acc = 0;
                    for (int j = 2; j <= content.length(); ++j) {
                        acc += content.part(j - 1);
                        CHECK(w[size_t(acc - 1)] <= w[static_cast<size_t>(acc)]);
                    }
                    // Processing order does not matter.
                    CHECK(remove_negligible_criticals(t, content, true) == fixed);
                });
        }
}

TEST_CASE("p-effectiveness follows the overlap flags") {
    Ribbon two_then_one = Ribbon::from_pair(P({3, 3, 3}), {1, 0, 0});
    CHECK(is_p_effective(2, two_then_one));
    CHECK_FALSE(is_p_effective(3, two_then_one));
    Ribbon one_then_two = Ribbon::from_pair(P({3, 3, 3}), {1, 1, 0});
    CHECK_FALSE(is_p_effective(2, one_then_two));
    CHECK(is_p_effective(3, one_then_two));
    Ribbon strip = Ribbon::horizontal_strip(C({3, 3, 3}));
    for (int j = 2; j <= 3; ++j) CHECK_FALSE(is_p_effective(j, strip));
    CHECK_THROWS_AS(is_p_effective(1, strip), std::invalid_argument);
}

TEST_CASE("descent-set SYT counts") {
    CHECK(count_syt_with_descent_set(P({2, 2}), {2}) == 1);
    CHECK(count_syt_with_descent_set(P({6}), {}) == 1);
    CHECK(count_syt_with_descent_set(P({4, 3, 2}), {2, 6, 8}) ==
          exact_descent_count_oracle(P({4, 3, 2}), {2, 6, 8}));
    CHECK(count_syt_with_descent_set(P({4, 3, 2}), {2, 6, 8}) >= 1);
    for (int n = 4; n <= 8; ++n)
        for (const Partition& nu : partitions_of(n))
            for (const Partition& mu : partitions_of(n, 2, 1, 4)) {
                std::vector<int> s = descent_set(C(mu.parts()));
                CHECK(count_syt_with_descent_set(nu, s) == exact_descent_count_oracle(nu, s));
            }
}

TEST_CASE("ribbon coefficients via descent sets") {
    Ribbon connected = Ribbon::from_pair(P({3, 3, 3}), {2, 1, 0});
    CHECK(ribbon_coefficient(connected, P({8, 1})) == 0);
    Ribbon split = Ribbon::from_pair(P({3, 3, 3}), {1, 0, 0});
    CHECK(ribbon_coefficient(split, P({8, 1})) == 1);
    for (const Partition& alpha : partitions_of(8, 2, 2, 4))
        for (const std::vector<int>& p : all_overlap_partitions(alpha.length()))
            CHECK(ribbon_coefficient(Ribbon::from_pair(alpha, p), alpha) == 1);
}

TEST_CASE("descent counting agrees with LR enumeration on small ribbons") {
    for (int n = 4; n <= 9; ++n)
        for (const Partition& alpha : partitions_of(n, 2, 1, 4))
            for (const std::vector<int>& p : all_overlap_partitions(alpha.length())) {
                Ribbon r = Ribbon::from_pair(alpha, p);
                SkewShape shape = r.to_skew_shape();
                for (const Partition& nu : partitions_of(n)) {
                    long long via_descents = ribbon_coefficient(r, nu);
                    long long via_lr = lr_coefficient(shape, nu);
                    CHECK(via_descents == via_lr);
                    CHECK(ribbon_coefficient(r, nu, syt_descent_table(nu)) == via_lr);
                }
            }
}

TEST_CASE("descent counting agrees on the six-row ribbons") {
    Partition alpha({2, 2, 2, 2, 2, 2});
    for (const std::vector<int>& p : all_overlap_partitions(alpha.length())) {
        Ribbon r = Ribbon::from_pair(alpha, p);
        SkewShape shape = r.to_skew_shape();
        for (const Partition& nu : partitions_of(12)) {
            DescentTable table = syt_descent_table(nu);
            CHECK(ribbon_coefficient(r, nu, table) == lr_coefficient(shape, nu));
        }
    }
}

TEST_CASE("schur expansion of ribbons") {
    SchurExpansion e = schur_expansion(Ribbon::from_pair(P({2, 2}), {1, 0}));
    CHECK(e.bottom == P({2, 2}));
    CHECK(e.top == P({3, 1}));
    REQUIRE(e.coefficients.size() == 2);
    CHECK(e.coefficients.at(P({2, 2})) == 1);
    CHECK(e.coefficients.at(P({3, 1})) == 1);
    CHECK(e.full_support);

    // Support always sits inside the dominance interval.
    for (const Partition& alpha : partitions_of(8, 2, 2, 4))
        for (const std::vector<int>& p : all_overlap_partitions(alpha.length())) {
            Ribbon r = Ribbon::from_pair(alpha, p);
            SchurExpansion exp = schur_expansion(r);
            for (const auto& [nu, c] : exp.coefficients) {
                CHECK(c > 0);
                CHECK(dominates(nu, exp.bottom));
                CHECK(dominates(exp.top, nu));
            }
        }

    // Horizontal strips expand with Kostka coefficients over the interval.
    SchurExpansion strip = schur_expansion(Ribbon::horizontal_strip(C({3, 2})));
    CHECK(strip.full_support);
    CHECK(strip.coefficients.at(P({3, 2})) == 1);
    CHECK(strip.coefficients.at(P({4, 1})) == 1);
    CHECK(strip.coefficients.at(P({5})) == 1);
}

TEST_CASE("skew expansion symmetries on small shapes") {
    std::vector<SkewShape> shapes{
        Ribbon::connected(C({2, 2})).to_skew_shape(),
        Ribbon::connected(C({3, 2, 2})).to_skew_shape(),
        Ribbon::from_pair(P({3, 2, 2}), {1, 1, 0}).to_skew_shape(),
        SkewShape(P({4, 3, 1}), P({2, 1})),
        SkewShape(P({3, 3, 2}), P({2, 2})),
        skew_shape_from_rows(C({2, 1, 2}), {true, true}),
    };
    for (const SkewShape& a : shapes) {
        CoefficientMap base = skew_schur_expansion(a);
        CoefficientMap rotated = skew_schur_expansion(a.rotated180());
        CHECK(base == rotated);
        CoefficientMap conj = skew_schur_expansion(a.conjugated());
        CoefficientMap mapped;
        for (const auto& [nu, c] : conj) mapped[conjugate(nu)] = c;
        CHECK(base == mapped);
        long long total = 0;
        for (const auto& [nu, c] : base) {
            CHECK(lr_coefficient(a, nu) == c);
            total += c;
        }
        CHECK(total >= 1);
        // Extremes of the interval carry coefficient one.
        CHECK(base.at(a.row_partition()) == 1);
        CHECK(base.at(a.column_partition_conjugate()) == 1);
    }
}
