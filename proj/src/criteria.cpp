#include "ribbonschur/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ribbonschur {

namespace {

void require_valid_pair(const Partition& alpha, const std::vector<int>& p) {
    for (int x : alpha.parts())
        if (x < 2) throw std::invalid_argument("alpha parts must be at least two");
    if (!valid_overlap_partition(alpha, p))
        throw std::invalid_argument("invalid overlapping partition for alpha");
}

int nonzero_length(const std::vector<int>& p) {
    int n = 0;
    for (int x : p)
        if (x > 0) ++n;
    return n;
}

}  // namespace

bool positivity_inequalities(const Partition& alpha, const std::vector<int>& p,
                             const Partition& nu) {
    require_valid_pair(alpha, p);
    if (nu.sum() != alpha.sum()) throw std::invalid_argument("positivity: sizes differ");
    int p1 = alpha.length() ? p[0] : 0;
    Partition top(std::vector<int>{static_cast<int>(alpha.sum()) - p1, p1});
    if (!dominates(nu, alpha) || !dominates(top, nu)) return false;
    long long tail = alpha.sum();
    for (int i = 1; i <= nonzero_length(p); ++i) {
        if (nu.part(i) > tail - p[size_t(i - 1)]) return false;
        tail -= alpha.part(i);
    }
    return true;
}

Tableau rotation(const Tableau& t, int a, int ell) {
    std::vector<std::vector<int>> rows = t.rows();
    if (ell < 1 || ell > static_cast<int>(rows.size()))
        throw std::invalid_argument("rotation: no such row");
    auto& top = rows[size_t(ell - 1)];
    auto first_ge_a = std::find_if(top.begin(), top.end(), [&](int x) { return x >= a; });
    if (first_ge_a == top.end())
        throw std::invalid_argument("rotation: row has no letter >= a");
    // Anticlockwise means a strictly larger letter comes up, so the target is
    // the first lower row holding something beyond the dropped letter.
    int ell2 = 0;
    for (int r = ell + 1; r <= static_cast<int>(rows.size()); ++r) {
        if (!rows[size_t(r - 1)].empty() && rows[size_t(r - 1)].back() > *first_ge_a) {
            ell2 = r;
            break;
        }
    }
    if (ell2 == 0) throw std::invalid_argument("rotation: no lower row with a large enough letter");
    auto& bottom = rows[size_t(ell2 - 1)];
    auto run_begin =
        std::find_if(bottom.begin(), bottom.end(), [&](int x) { return x > *first_ge_a; });
    int b = *run_begin;
    // One turn: the first rotated letter of row ell drops to the front of the
    // b-run, the rest shift left, and one b comes up into row ell.
    int dropped = *first_ge_a;
    top.erase(first_ge_a);
    top.insert(std::upper_bound(top.begin(), top.end(), b), b);
    *run_begin = dropped;
    Tableau out{std::move(rows)};  // the constructor re-checks semistandardness
    return out;
}

Tableau clear_critical_block(const Tableau& t, const std::vector<int>& block, int ell_bar,
                             const Ribbon& r) {
    const Composition& alpha = r.rows();
    std::vector<int> criticals = critical_set(t, alpha);
    for (int j : block) {
        if (!std::binary_search(criticals.begin(), criticals.end(), j))
            throw std::invalid_argument("clear_critical_block: block member is not critical");
        if (critical_row(t, alpha, j) != ell_bar)
            throw std::invalid_argument("clear_critical_block: block member not in the given row");
    }
    for (size_t i = 0; i + 1 < block.size(); ++i)
        if (block[i + 1] != block[i] + 1)
            throw std::invalid_argument("clear_critical_block: block must be consecutive");

    std::vector<int> p = r.overlapping_partition();
    long long budget = (ell_bar >= 1 && ell_bar <= static_cast<int>(p.size()))
                           ? p[size_t(ell_bar - 1)]
                           : 0;
    Tableau cur = t;
    long long rotations = 0;
    while (true) {
        int next = 0;
        for (int j : critical_set(cur, alpha)) {
            if (!is_p_effective(j, r)) continue;
            if (critical_row(cur, alpha, j) != ell_bar) continue;
            next = j;
            break;
        }
        if (next == 0) return cur;
        if (++rotations > budget)
            throw invariant_error("clear_critical_block: rotation budget exceeded");
        cur = rotation(cur, next, ell_bar);
    }
}

namespace {

// Depth-first walk over rotation moves. The primary move is always the one
// the block-clearing procedure would take (rotate the smallest effective
// critical in its own row); when that move is impossible or leads nowhere,
// letters from rows above the stuck row are pushed down instead. Every
// rotation strictly lowers the letter-weighted row sum, so the walk cannot
// cycle; the visited set only prevents re-exploring merged branches.
struct CompanionSearch {
    const Ribbon& ribbon;
    const Composition& rows;
    std::set<std::vector<std::vector<int>>> seen;
    long long budget = 50000;

    std::optional<Tableau> run(const Tableau& t) {
        if (!seen.insert(t.rows()).second) return std::nullopt;
        if (--budget < 0) throw invariant_error("construct_companion: search budget exceeded");
        std::vector<int> criticals = critical_set(t, rows);
        int seed = 0;
        for (int j : criticals)
            if (is_p_effective(j, ribbon)) {
                seed = j;
                break;
            }
        if (seed == 0) {
            // Push-down moves can leave strictly decreasing strip boundaries;
            // repairing them keeps the critical set intact.
            Tableau fixed = remove_negligible_criticals(t, rows);
            if (is_companion_valid(fixed, ribbon)) return fixed;
            return std::nullopt;
        }
        int seed_row = *critical_row(t, rows, seed);
        std::vector<Tableau> moves;
        auto try_move = [&](int a, int row) {
            try {
                moves.push_back(rotation(t, a, row));
            } catch (const std::invalid_argument&) {
            }
        };
        try_move(seed, seed_row);
        for (int r = seed_row - 1; r >= 1; --r) {
            const auto& above = t.rows()[size_t(r - 1)];
            int prev = 0;
            for (auto it = above.rbegin(); it != above.rend(); ++it) {
                if (*it == prev) continue;
                prev = *it;
                try_move(*it, r);
            }
        }
        for (const Tableau& next : moves)
            if (auto found = run(next)) return found;
        return std::nullopt;
    }
};

}  // namespace

Tableau construct_companion(const Partition& alpha, const std::vector<int>& p,
                            const Partition& nu) {
    if (!positivity_inequalities(alpha, p, nu))
        throw std::invalid_argument("construct_companion: coefficient is zero");
    Ribbon r = Ribbon::from_pair(alpha, p);
    Composition rows = r.rows();
    CompanionSearch search{r, rows, {}, 50000};
    std::optional<Tableau> found = search.run(canonical_filling(nu, rows));
    if (!found) throw invariant_error("construct_companion: no rotation path clears the criticals");
    if (!is_companion_valid(*found, r))
        throw invariant_error("construct_companion: output is not a companion tableau");
    return *found;
}

WitnessReport witness_report(const Partition& alpha, const std::vector<int>& p) {
    require_valid_pair(alpha, p);
    WitnessReport report;
    int lp = nonzero_length(p);
    if (lp < 2) return report;  // no witness vectors, full support
    for (int i = 1; i <= lp - 1; ++i) {
        Witness w;
        w.index = i;
        w.rho = rest(alpha, p, i);
        for (int j = 1; j <= i; ++j) w.g.push_back(std::max<long long>(0, w.rho - alpha.part(j)));
        w.size = std::accumulate(w.g.begin(), w.g.end(), 0LL);
        w.slack = p[static_cast<size_t>(i)] - 1;
        w.fits = w.size <= w.slack;
        report.witnesses.push_back(std::move(w));
    }
    for (const Witness& w : report.witnesses) {
        if (!w.fits) continue;
        report.full_support = false;
        std::vector<int> parts;
        for (int j = 1; j <= w.index; ++j)
            parts.push_back(alpha.part(j) + static_cast<int>(w.g[size_t(j - 1)]));
        parts.push_back(static_cast<int>(w.rho));
        parts.push_back(static_cast<int>(w.slack - w.size));
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        report.certificate = Partition(std::move(parts));
        break;
    }
    return report;
}

bool full_support_special(const Partition& alpha, const std::vector<int>& p) {
    require_valid_pair(alpha, p);
    int lp = nonzero_length(p);
    long long tail2 = alpha.sum() - alpha.part(1);
    long long tail3 = tail2 - alpha.part(2);
    switch (lp) {
        case 0:
        case 1:
            return true;
        case 2:
            return alpha.part(1) < tail2;
        case 3:
            if (p[1] != 2)
                throw std::invalid_argument(
                    "full_support_special: three-step form needs second entry 2");
            return alpha.part(1) < tail2 - 2 && alpha.part(2) < tail3;
        default:
            throw std::invalid_argument("full_support_special: more than three nonzero entries");
    }
}

std::vector<Partition> support(const Partition& alpha, const std::vector<int>& p) {
    require_valid_pair(alpha, p);
    int p1 = alpha.length() ? p[0] : 0;
    Partition top(std::vector<int>{static_cast<int>(alpha.sum()) - p1, p1});
    std::vector<Partition> out;
    for (const Partition& nu : dominance_interval(alpha, top)) {
        bool ok = true;
        for (int i = 1; i <= nonzero_length(p) - 1 && ok; ++i)
            if (nu.part(i + 1) >= rest(alpha, p, i)) ok = false;
        if (ok) out.push_back(nu);
    }
    return out;
}

bool composition_necessary(const Composition& beta, const Partition& nu) {
    for (int x : beta.parts())
        if (x < 2) throw std::invalid_argument("composition_necessary: parts must be at least two");
    if (nu.sum() != beta.sum()) throw std::invalid_argument("composition_necessary: sizes differ");
    Ribbon r = Ribbon::connected(beta);
    std::vector<int> p = r.overlapping_partition();
    Partition sorted = beta.sorted();
    long long tail = sorted.sum();
    for (int i = 1; i <= nonzero_length(p); ++i) {
        if (nu.part(i) > tail - p[size_t(i - 1)]) return false;
        tail -= sorted.part(i);
    }
    return true;
}

}  // namespace ribbonschur
