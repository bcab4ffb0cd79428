#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ribbonschur/partition.hpp"
#include "ribbonschur/ribbon.hpp"
#include "ribbonschur/tableau.hpp"

namespace ribbonschur {

using Word = std::vector<int>;

// Every prefix holds at least as many i's as (i+1)'s, for all i.
bool is_yamanouchi(const Word& w);

// A filling of a skew shape; rows are stored left to right. Only the box
// counts are enforced here — column strictness is a property to query, since
// companion images may deliberately violate it.
class SkewFilling {
public:
    SkewFilling(SkewShape shape, std::vector<std::vector<int>> entries);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }

    bool is_semistandard() const;
    // Right to left within rows, top to bottom across rows.
    Word reading_word() const;
    std::vector<int> content() const;

    bool operator==(const SkewFilling& o) const {
        return shape_ == o.shape_ && entries_ == o.entries_;
    }

private:
    SkewShape shape_;
    std::vector<std::vector<int>> entries_;
};

// All semistandard fillings of A with content nu whose reading word is
// Yamanouchi; their number is the LR coefficient c_A^nu.
std::vector<SkewFilling> enumerate_lr_tableaux(const SkewShape& A, const Partition& nu);
long long lr_coefficient(const SkewShape& A, const Partition& nu);
bool lr_positive(const SkewShape& A, const Partition& nu);

using CoefficientMap = std::map<Partition, long long, DescLex>;

// Full expansion of the skew Schur function of A by one backtracking pass
// over all LR fillings of unconstrained content.
CoefficientMap skew_schur_expansion(const SkewShape& A);

// The word recording, for u = 1..n, the row of entry u in the
// standardization of T (the Yamanouchi word when T is a companion tableau).
Word standardized_word(const Tableau& t);

// The filling of R whose reading word is the standardized word of G: the
// multiplicity of letter j in row i of G tells how many i's go in ribbon row
// j, left-justified. Row semistandard by construction; columns not checked.
SkewFilling companion_filling(const Tableau& g, const Ribbon& r);

// True iff every overlapping adjacent row pair (j, j+1) of R has the partial
// sum alpha_1+..+alpha_j as a descent of the standardization of G;
// equivalently, companion_filling(G, R) is column-strict.
bool is_companion_valid(const Tableau& g, const Ribbon& r);

// Letters j in 2..len(alpha) whose strip boundary repeats a row in the
// standardized word (positions sum and sum+1 of equal value); such a j forces
// a repeated letter into an overlap column of any ribbon with these rows.
std::vector<int> critical_set(const Tableau& t, const Composition& alpha);

// The row shared by the two word positions witnessing j critical, if any.
std::optional<int> critical_row(const Tableau& t, const Composition& alpha, int j);

// Repairs every strictly-decreasing strip boundary (the removable kind of
// violation) by swapping one j against one j-1 across the two rows involved;
// shape, content and the critical set are preserved. The processing order is
// immaterial; `process_descending` exists so tests can assert that.
Tableau remove_negligible_criticals(const Tableau& t, const Composition& alpha,
                                    bool process_descending = false);

// Rows j-1 and j of the ribbon actually overlap.
bool is_p_effective(int j, const Ribbon& r);

// Number of standard Young tableaux of shape nu with descent set exactly s.
long long count_syt_with_descent_set(const Partition& nu, const std::vector<int>& s);

// Descent sets encoded as bitmasks (bit i-1 set when i is a descent).
using DescentTable = std::unordered_map<std::uint32_t, long long>;
DescentTable syt_descent_table(const Partition& nu);
std::uint32_t descent_mask(const std::vector<int>& s);

// Ribbon LR coefficient via descent-set counting: for connected ribbons the
// SYT of shape nu with descent set exactly the partial-sum set of the rows;
// in general descent sets sandwiched between that set minus the component
// breaks and the full set.
long long ribbon_coefficient(const Ribbon& r, const Partition& nu);
long long ribbon_coefficient(const Ribbon& r, const Partition& nu, const DescentTable& table);

struct SchurExpansion {
    Partition bottom, top;  // Schur interval endpoints
    CoefficientMap coefficients;
    bool full_support = false;
};

SchurExpansion schur_expansion(const Ribbon& r);

}  // namespace ribbonschur
