#include "ribbonschur/lr.hpp"

#include <algorithm>
#include <numeric>

namespace ribbonschur {

bool is_yamanouchi(const Word& w) {
    std::vector<int> cnt;
    for (int v : w) {
        if (v <= 0) throw std::invalid_argument("word letters must be positive");
        if (v > static_cast<int>(cnt.size())) cnt.resize(static_cast<size_t>(v), 0);
        ++cnt[static_cast<size_t>(v - 1)];
        if (v >= 2 && cnt[static_cast<size_t>(v - 1)] > cnt[static_cast<size_t>(v - 2)]) return false;
    }
    return true;
}

SkewFilling::SkewFilling(SkewShape shape, std::vector<std::vector<int>> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.row_count())
        throw std::invalid_argument("skew filling: row count mismatch");
    for (int r = 1; r <= shape_.row_count(); ++r)
        if (static_cast<int>(entries_[size_t(r - 1)].size()) != shape_.row_length(r))
            throw std::invalid_argument("skew filling: row length mismatch");
}

bool SkewFilling::is_semistandard() const {
    for (int r = 1; r <= shape_.row_count(); ++r) {
        const auto& row = entries_[size_t(r - 1)];
        for (size_t c = 0; c + 1 < row.size(); ++c)
            if (row[c] > row[c + 1]) return false;
        if (r > 1) {
            int lo = std::max(shape_.row_start(r), shape_.row_start(r - 1));
            int hi = std::min(shape_.row_end(r), shape_.row_end(r - 1));
            for (int c = lo; c <= hi; ++c) {
                int above = entries_[size_t(r - 2)][static_cast<size_t>(c - shape_.row_start(r - 1))];
                int below = entries_[size_t(r - 1)][static_cast<size_t>(c - shape_.row_start(r))];
                if (above >= below) return false;
            }
        }
    }
    return true;
}

Word SkewFilling::reading_word() const {
    Word w;
    for (const auto& row : entries_)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

std::vector<int> SkewFilling::content() const {
    std::vector<int> c;
    for (const auto& row : entries_)
        for (int x : row) {
            if (x > static_cast<int>(c.size())) c.resize(static_cast<size_t>(x), 0);
            ++c[static_cast<size_t>(x - 1)];
        }
    return c;
}

namespace {

// Backtracking over semistandard Yamanouchi fillings in reading order.
// `need` empty means unconstrained content. The sink returns false to stop.
class LrSearch {
public:
    LrSearch(const SkewShape& a, std::vector<int> need, int max_letter)
        : shape_(a), need_(std::move(need)), max_letter_(max_letter) {
        for (int r = 1; r <= shape_.row_count(); ++r) {
            vals_.emplace_back(static_cast<size_t>(shape_.row_length(r)), 0);
            for (int c = shape_.row_end(r); c >= shape_.row_start(r); --c) {
                Box b;
                b.row = r;
                b.offset = c - shape_.row_start(r);
                if (r > 1 && c >= shape_.row_start(r - 1) && c <= shape_.row_end(r - 1))
                    b.above_offset = c - shape_.row_start(r - 1);
                boxes_.push_back(b);
            }
        }
        cnt_.assign(static_cast<size_t>(max_letter_) + 1, 0);
    }

    void run(const std::function<bool(const std::vector<std::vector<int>>&, const std::vector<int>&)>& sink) {
        sink_ = &sink;
        stop_ = false;
        place(0);
    }

private:
    struct Box {
        int row = 0;
        int offset = 0;        // position within the row, 0-based
        int above_offset = -1; // offset in row-1, or -1 when no box above
    };

    void place(size_t i) {
        if (stop_) return;
        if (i == boxes_.size()) {
            std::vector<int> content(cnt_.begin() + 1, cnt_.end());
            while (!content.empty() && content.back() == 0) content.pop_back();
            if (!(*sink_)(vals_, content)) stop_ = true;
            return;
        }
        const Box& b = boxes_[i];
        auto& row = vals_[size_t(b.row - 1)];
        int hi = max_letter_;
        if (static_cast<size_t>(b.offset) + 1 < row.size())
            hi = std::min(hi, row[static_cast<size_t>(b.offset) + 1]);
        int lo = 1;
        if (b.above_offset >= 0) lo = vals_[size_t(b.row - 2)][static_cast<size_t>(b.above_offset)] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (!need_.empty() && need_[static_cast<size_t>(v - 1)] == 0) continue;
            if (v >= 2 && cnt_[static_cast<size_t>(v)] + 1 > cnt_[static_cast<size_t>(v - 1)]) continue;
            row[static_cast<size_t>(b.offset)] = v;
            ++cnt_[static_cast<size_t>(v)];
            if (!need_.empty()) --need_[static_cast<size_t>(v - 1)];
            place(i + 1);
            if (!need_.empty()) ++need_[static_cast<size_t>(v - 1)];
            --cnt_[static_cast<size_t>(v)];
            row[static_cast<size_t>(b.offset)] = 0;
            if (stop_) return;
        }
    }

    const SkewShape& shape_;
    std::vector<int> need_;
    int max_letter_;
    std::vector<Box> boxes_;
    std::vector<std::vector<int>> vals_;
    std::vector<int> cnt_;
    const std::function<bool(const std::vector<std::vector<int>>&, const std::vector<int>&)>* sink_ = nullptr;
    bool stop_ = false;
};

void check_sizes(const SkewShape& a, const Partition& nu) {
    if (a.size() != nu.sum())
        throw std::invalid_argument("LR enumeration: shape and content sizes differ");
}

}  // namespace

std::vector<SkewFilling> enumerate_lr_tableaux(const SkewShape& a, const Partition& nu) {
    check_sizes(a, nu);
    std::vector<SkewFilling> out;
    if (a.size() == 0) {
        out.emplace_back(a, std::vector<std::vector<int>>(static_cast<size_t>(a.row_count())));
        return out;
    }
    LrSearch search(a, nu.parts(), nu.length());
    search.run([&](const std::vector<std::vector<int>>& vals, const std::vector<int>&) {
        out.emplace_back(a, vals);
        return true;
    });
    return out;
}

long long lr_coefficient(const SkewShape& a, const Partition& nu) {
    check_sizes(a, nu);
    if (a.size() == 0) return 1;
    long long count = 0;
    LrSearch search(a, nu.parts(), nu.length());
    search.run([&](const std::vector<std::vector<int>>&, const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

bool lr_positive(const SkewShape& a, const Partition& nu) {
    check_sizes(a, nu);
    if (a.size() == 0) return true;
    bool found = false;
    LrSearch search(a, nu.parts(), nu.length());
    search.run([&](const std::vector<std::vector<int>>&, const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

CoefficientMap skew_schur_expansion(const SkewShape& a) {
    CoefficientMap out;
    if (a.size() == 0) {
        out[Partition{}] = 1;
        return out;
    }
    LrSearch search(a, {}, static_cast<int>(a.size()));
    search.run([&](const std::vector<std::vector<int>>&, const std::vector<int>& content) {
        ++out[Partition(content)];
        return true;
    });
    return out;
}

Word standardized_word(const Tableau& t) {
    StandardTableau u = standardize(t);
    Word w(static_cast<size_t>(t.size()));
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) w[size_t(i - 1)] = u.row_of(i);
    return w;
}

SkewFilling companion_filling(const Tableau& g, const Ribbon& r) {
    std::vector<int> content = g.content();
    const Composition& alpha = r.rows();
    if (static_cast<int>(content.size()) != alpha.length())
        throw std::invalid_argument("companion_filling: content does not match ribbon rows");
    for (int j = 1; j <= alpha.length(); ++j)
        if (content[size_t(j - 1)] != alpha.part(j))
            throw std::invalid_argument("companion_filling: content does not match ribbon rows");
    int height = g.shape().length();
    std::vector<std::vector<int>> entries(static_cast<size_t>(alpha.length()));
    for (int j = 1; j <= alpha.length(); ++j)
        for (int i = 1; i <= height; ++i)
            entries[size_t(j - 1)].insert(entries[size_t(j - 1)].end(),
                                          static_cast<size_t>(g.count_in_row(i, j)), i);
    return SkewFilling(r.to_skew_shape(), std::move(entries));
}

bool is_companion_valid(const Tableau& g, const Ribbon& r) {
    const Composition& alpha = r.rows();
    std::vector<int> d = descent_set(standardize(g));
    long long acc = 0;
    for (int j = 1; j < alpha.length(); ++j) {
        acc += alpha.part(j);
        if (r.overlaps()[size_t(j - 1)] &&
            !std::binary_search(d.begin(), d.end(), static_cast<int>(acc)))
            return false;
    }
    return true;
}

namespace {

void check_content(const Tableau& t, const Composition& alpha) {
    std::vector<int> c = t.content();
    if (static_cast<int>(c.size()) > alpha.length())
        throw std::invalid_argument("tableau content does not match the composition");
    for (int j = 1; j <= alpha.length(); ++j)
        if ((j <= static_cast<int>(c.size()) ? c[size_t(j - 1)] : 0) != alpha.part(j))
            throw std::invalid_argument("tableau content does not match the composition");
}

}  // namespace

std::vector<int> critical_set(const Tableau& t, const Composition& alpha) {
    check_content(t, alpha);
    Word w = standardized_word(t);
    std::vector<int> out;
    long long acc = 0;
    for (int j = 2; j <= alpha.length(); ++j) {
        acc += alpha.part(j - 1);
        if (w[static_cast<size_t>(acc - 1)] == w[static_cast<size_t>(acc)]) out.push_back(j);
    }
    return out;
}

std::optional<int> critical_row(const Tableau& t, const Composition& alpha, int j) {
    check_content(t, alpha);
    if (j < 2 || j > alpha.length()) throw std::invalid_argument("critical_row: index out of range");
    Word w = standardized_word(t);
    long long acc = 0;
    for (int k = 1; k < j; ++k) acc += alpha.part(k);
    if (w[static_cast<size_t>(acc - 1)] != w[static_cast<size_t>(acc)]) return std::nullopt;
    return w[static_cast<size_t>(acc - 1)];
}

Tableau remove_negligible_criticals(const Tableau& t, const Composition& alpha,
                                    bool process_descending) {
    check_content(t, alpha);
    std::vector<std::vector<int>> rows = t.rows();
    int guard = alpha.length() * alpha.length() + 1;
    while (guard-- > 0) {
        Word w = standardized_word(Tableau(rows));
        std::vector<int> violations;
        long long acc = 0;
        for (int j = 2; j <= alpha.length(); ++j) {
            acc += alpha.part(j - 1);
            if (w[static_cast<size_t>(acc - 1)] > w[static_cast<size_t>(acc)]) violations.push_back(j);
        }
        if (violations.empty()) return Tableau(rows);
        int j = process_descending ? violations.back() : violations.front();
        long long pos = 0;
        for (int k = 1; k < j; ++k) pos += alpha.part(k);
        int top_row = w[static_cast<size_t>(pos)];       // where the j-strip starts
        int bottom_row = w[static_cast<size_t>(pos - 1)];// where the (j-1)-strip ends
        auto& upper = rows[size_t(top_row - 1)];
        auto it = std::find(upper.begin(), upper.end(), j);
        if (it == upper.end()) throw invariant_error("negligible swap: letter placement lost");
        *it = j - 1;
        auto& lower = rows[size_t(bottom_row - 1)];
        auto rit = std::find(lower.rbegin(), lower.rend(), j - 1);
        if (rit == lower.rend()) throw invariant_error("negligible swap: letter placement lost");
        *rit = j;
    }
    throw invariant_error("remove_negligible_criticals: did not terminate");
}

bool is_p_effective(int j, const Ribbon& r) {
    if (j < 2 || j > r.row_count())
        throw std::invalid_argument("is_p_effective: index out of range");
    return r.overlaps()[static_cast<size_t>(j - 2)];
}

namespace {

void syt_masks(const Partition& nu, const std::function<void(std::uint32_t)>& fn) {
    long long n = nu.sum();
    std::vector<int> cur(static_cast<size_t>(nu.length()), 0);
    std::function<void(int, int, std::uint32_t)> grow = [&](int u, int prev_row, std::uint32_t mask) {
        if (u > n) {
            fn(mask);
            return;
        }
        for (int r = 1; r <= nu.length(); ++r) {
            if (cur[size_t(r - 1)] >= nu.part(r)) continue;
            if (r > 1 && cur[size_t(r - 1)] >= cur[size_t(r - 2)]) continue;
            ++cur[size_t(r - 1)];
            std::uint32_t m = mask;
            if (u > 1 && r > prev_row) m |= (1u << (u - 2));
            grow(u + 1, r, m);
            --cur[size_t(r - 1)];
        }
    };
    if (n == 0) {
        fn(0);
        return;
    }
    grow(1, 0, 0);
}

}  // namespace

std::uint32_t descent_mask(const std::vector<int>& s) {
    std::uint32_t m = 0;
    for (int i : s) {
        if (i < 1 || i > 31) throw std::invalid_argument("descent position out of mask range");
        m |= (1u << (i - 1));
    }
    return m;
}

long long count_syt_with_descent_set(const Partition& nu, const std::vector<int>& s) {
    std::uint32_t want = descent_mask(s);
    long long count = 0;
    syt_masks(nu, [&](std::uint32_t m) {
        if (m == want) ++count;
    });
    return count;
}

DescentTable syt_descent_table(const Partition& nu) {
    DescentTable table;
    syt_masks(nu, [&](std::uint32_t m) { ++table[m]; });
    return table;
}

namespace {

// Descent-set sandwich for a ribbon: all partial sums are allowed descents,
// and the partial sums at overlapping row pairs are required.
std::pair<std::uint32_t, std::uint32_t> ribbon_masks(const Ribbon& r) {
    const Composition& alpha = r.rows();
    std::uint32_t allowed = descent_mask(descent_set(alpha));
    std::uint32_t required = 0;
    long long acc = 0;
    for (int j = 1; j < alpha.length(); ++j) {
        acc += alpha.part(j);
        if (r.overlaps()[size_t(j - 1)]) required |= (1u << (acc - 1));
    }
    return {required, allowed};
}

}  // namespace

long long ribbon_coefficient(const Ribbon& r, const Partition& nu) {
    if (nu.sum() != r.size()) throw std::invalid_argument("ribbon_coefficient: sizes differ");
    auto [required, allowed] = ribbon_masks(r);
    long long count = 0;
    syt_masks(nu, [&](std::uint32_t m) {
        if ((m & ~allowed) == 0 && (required & ~m) == 0) ++count;
    });
    return count;
}

long long ribbon_coefficient(const Ribbon& r, const Partition& nu, const DescentTable& table) {
    if (nu.sum() != r.size()) throw std::invalid_argument("ribbon_coefficient: sizes differ");
    auto [required, allowed] = ribbon_masks(r);
    long long count = 0;
    for (const auto& [m, c] : table)
        if ((m & ~allowed) == 0 && (required & ~m) == 0) count += c;
    return count;
}

SchurExpansion schur_expansion(const Ribbon& r) {
    SchurExpansion out;
    auto [bottom, top] = r.schur_interval();
    out.bottom = bottom;
    out.top = top;
    std::vector<Partition> interval = dominance_interval(bottom, top);
    for (const Partition& nu : interval) {
        long long c = ribbon_coefficient(r, nu);
        if (c > 0) out.coefficients[nu] = c;
    }
    out.full_support = out.coefficients.size() == interval.size();
    return out;
}

}  // namespace ribbonschur
