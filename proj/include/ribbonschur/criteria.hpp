#pragma once

#include <optional>
#include <vector>

#include "ribbonschur/lr.hpp"
#include "ribbonschur/partition.hpp"
#include "ribbonschur/ribbon.hpp"
#include "ribbonschur/tableau.hpp"

namespace ribbonschur {

// Exact positivity test for the ribbon coefficient of the monotone ribbon
// (alpha, p) at nu: nu lies in the Schur interval and
// nu_i <= alpha_i + ... + alpha_len - p_i for every i up to the number of
// nonzero entries of p.
bool positivity_inequalities(const Partition& alpha, const std::vector<int>& p,
                             const Partition& nu);

// One anticlockwise turn: the letters >= a of row ell and the leading run of
// letters b in the first lower row holding an entry >= a (b is the smallest
// such entry there). The leftmost rotated letter of row ell moves down to the
// front of that run and one b comes up into row ell.
Tableau rotation(const Tableau& t, int a, int ell);

// Clears a block of consecutive critical numbers sitting in row ell_bar:
// rotates each p-effective member in increasing order, then repeats on the
// critical numbers the rotations created, until none in that row is
// p-effective. Total rotations are bounded by p_{ell_bar}; exceeding the
// bound raises invariant_error.
Tableau clear_critical_block(const Tableau& t, const std::vector<int>& block, int ell_bar,
                             const Ribbon& r);

// Builds a companion tableau in Tab(nu, alpha) for an LR filling of the
// ribbon (alpha, p), starting from the canonical filling and clearing
// consecutive critical blocks smallest first. Requires
// positivity_inequalities(alpha, p, nu).
Tableau construct_companion(const Partition& alpha, const std::vector<int>& p,
                            const Partition& nu);

struct Witness {
    int index = 0;          // i
    long long rho = 0;      // rest of order i
    std::vector<long long> g;
    long long size = 0;     // |g|
    long long slack = 0;    // p_{i+1} - 1
    bool fits = false;      // size <= slack
};

struct WitnessReport {
    std::vector<Witness> witnesses;
    bool full_support = true;
    std::optional<Partition> certificate;  // in the interval, outside the support
};

// Witness vectors g^i with entries [rho_i - alpha_j]+ and slacks p_{i+1}-1.
// The support is full exactly when every witness oversizes its slack; a
// fitting witness yields a certificate partition.
WitnessReport witness_report(const Partition& alpha, const std::vector<int>& p);

// Closed-form full-support test for overlapping partitions with at most
// three nonzero entries (second entry 2 when there are three).
bool full_support_special(const Partition& alpha, const std::vector<int>& p);

// All partitions in the Schur interval passing the positivity inequalities,
// largest-first lexicographically.
std::vector<Partition> support(const Partition& alpha, const std::vector<int>& p);

// Necessary condition for a connected ribbon with rows beta in any order:
// failing it certifies a zero coefficient; passing it decides nothing.
bool composition_necessary(const Composition& beta, const Partition& nu);

}  // namespace ribbonschur
