#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ribbonschur/partition.hpp"

namespace ribbonschur {

// Semistandard Young tableau of partition shape: rows weakly increase,
// columns strictly increase. Letters are 1-based positive integers; content
// vectors are 0-indexed, content()[i] counting the letter i+1.
class Tableau {
public:
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    long long size() const;
    std::vector<int> content() const;

    // Multiplicity of `letter` in 1-based row `row` (the chi table).
    int count_in_row(int row, int letter) const;

    // 1-based cell read.
    int at(int row, int col) const { return rows_[size_t(row - 1)][size_t(col - 1)]; }

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

// SYT: a tableau whose content is (1,1,...,1).
class StandardTableau {
public:
    explicit StandardTableau(Tableau t);
    explicit StandardTableau(std::vector<std::vector<int>> rows) : StandardTableau(Tableau(std::move(rows))) {}

    const Tableau& tableau() const { return t_; }
    const std::vector<std::vector<int>>& rows() const { return t_.rows(); }
    Partition shape() const { return t_.shape(); }

    // 1-based row of entry u.
    int row_of(int u) const { return row_of_[size_t(u - 1)]; }

    bool operator==(const StandardTableau& o) const { return t_ == o.t_; }

private:
    Tableau t_;
    std::vector<int> row_of_;
};

// Renumber boxes 1..n scanning letters in increasing value, ties broken
// southwest to northeast inside each horizontal strip of equal letters.
StandardTableau standardize(const Tableau& t);

// Inverse of standardization for a given content: letter j fills the boxes
// numbered sum(alpha_1..alpha_{j-1})+1 .. sum(alpha_1..alpha_j). Requires
// descent_set(u) to be contained in descent_set(alpha).
Tableau destandardize(const StandardTableau& u, const Composition& alpha);

// Entries i whose successor i+1 sits in a strictly lower row; sorted.
std::vector<int> descent_set(const StandardTableau& u);

// Partial sums alpha_1, alpha_1+alpha_2, ... (all but the total); the subset
// of [|alpha|-1] associated with the composition.
std::vector<int> descent_set(const Composition& alpha);

// True iff the sorted rearrangement of alpha is dominated by nu, i.e. the
// Kostka number K_{nu,alpha} is positive. Requires |nu| = |alpha|.
bool kostka_positive(const Partition& nu, const Composition& alpha);

// The greedy representative of Tab(nu, alpha): letter strips placed from the
// largest letter down, each strip as low as possible (longest columns first,
// rows filled right to left). Requires kostka_positive(nu, alpha).
Tableau canonical_filling(const Partition& nu, const Composition& alpha);

// All semistandard tableaux of shape nu and content alpha, by extending
// horizontal strips letter by letter; deterministic order.
std::vector<Tableau> enumerate_ssyt(const Partition& nu, const Composition& alpha);
void for_each_ssyt(const Partition& nu, const Composition& alpha,
                   const std::function<void(const Tableau&)>& fn);

// Text codec: rows separated by '/', entries space- or comma-separated.
Tableau parse_tableau(const std::string& text);
std::string to_string(const Tableau& t);

}  // namespace ribbonschur
