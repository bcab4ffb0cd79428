#include "ribbonschur/ribbon.hpp"

#include <algorithm>
#include <numeric>

namespace ribbonschur {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (inner_.length() > outer_.length())
        throw std::invalid_argument("skew shape: inner longer than outer");
    for (int i = 1; i <= inner_.length(); ++i)
        if (inner_.part(i) > outer_.part(i))
            throw std::invalid_argument("skew shape: inner not contained in outer");
}

Partition SkewShape::row_partition() const {
    std::vector<int> lens;
    for (int r = 1; r <= row_count(); ++r)
        if (row_length(r) > 0) lens.push_back(row_length(r));
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

Partition SkewShape::column_partition_conjugate() const {
    std::vector<int> heights;
    for (int c = 1; c <= outer_.part(1); ++c) {
        int h = 0;
        for (int r = 1; r <= row_count(); ++r)
            if (row_start(r) <= c && c <= row_end(r)) ++h;
        if (h > 0) heights.push_back(h);
    }
    std::sort(heights.begin(), heights.end(), std::greater<int>());
    return conjugate(Partition(std::move(heights)));
}

SkewShape SkewShape::basic_form() const {
    std::vector<std::pair<int, int>> spans;  // [start, end] per nonempty row
    for (int r = 1; r <= row_count(); ++r)
        if (row_length(r) > 0) spans.emplace_back(row_start(r), row_end(r));
    if (spans.empty()) return SkewShape(Partition{}, Partition{});
    // Drop empty columns by compacting the used column set.
    std::vector<bool> used(static_cast<size_t>(outer_.part(1) + 1), false);
    for (auto [s, e] : spans)
        for (int c = s; c <= e; ++c) used[static_cast<size_t>(c)] = true;
    std::vector<int> shift(used.size(), 0);
    int seen = 0;
    for (size_t c = 1; c < used.size(); ++c) {
        if (used[c]) ++seen;
        shift[c] = seen;
    }
    std::vector<int> outer, inner;
    for (auto [s, e] : spans) {
        outer.push_back(shift[static_cast<size_t>(e)]);
        inner.push_back(shift[static_cast<size_t>(s)] - 1);
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

SkewShape SkewShape::rotated180() const {
    int m = row_count();
    int w = outer_.part(1);
    std::vector<int> outer, inner;
    for (int r = m; r >= 1; --r) {
        outer.push_back(w - inner_.part(r));
        inner.push_back(w - outer_.part(r));
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner))).basic_form();
}

SkewShape SkewShape::conjugated() const {
    return SkewShape(conjugate(outer_), conjugate(inner_));
}

bool SkewShape::contains_2x2() const {
    for (int r = 1; r < row_count(); ++r) {
        int lo = std::max(row_start(r), row_start(r + 1));
        int hi = std::min(row_end(r), row_end(r + 1));
        if (hi - lo >= 1) return true;
    }
    return false;
}

int SkewShape::component_count() const {
    int k = 0;
    bool prev_nonempty = false;
    for (int r = 1; r <= row_count(); ++r) {
        if (row_length(r) == 0) {
            prev_nonempty = false;
            continue;
        }
        bool joined = false;
        if (prev_nonempty) {
            int lo = std::max(row_start(r), row_start(r - 1));
            int hi = std::min(row_end(r), row_end(r - 1));
            joined = lo <= hi;
        }
        if (!joined) ++k;
        prev_nonempty = true;
    }
    return k;
}

SkewShape skew_shape_from_rows(const Composition& rows, const std::vector<bool>& overlaps) {
    int m = rows.length();
    if (static_cast<int>(overlaps.size()) != std::max(0, m - 1))
        throw std::invalid_argument("skew_shape_from_rows: need one overlap flag per adjacent pair");
    std::vector<int> start(static_cast<size_t>(m), 0);  // 0-based leftmost column
    for (int r = m - 1; r >= 1; --r) {
        int ov = overlaps[static_cast<size_t>(r - 1)] ? 1 : 0;
        if (ov > std::min(rows.part(r), rows.part(r + 1)))
            throw std::invalid_argument("skew_shape_from_rows: overlap wider than a row");
        start[size_t(r - 1)] = start[static_cast<size_t>(r)] + rows.part(r + 1) - ov;
    }
    std::vector<int> outer, inner;
    for (int r = 1; r <= m; ++r) {
        inner.push_back(start[size_t(r - 1)]);
        outer.push_back(start[size_t(r - 1)] + rows.part(r));
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

Ribbon::Ribbon(Composition rows, std::vector<bool> overlaps)
    : rows_(std::move(rows)), overlaps_(std::move(overlaps)) {
    if (rows_.length() == 0) throw std::invalid_argument("ribbon needs at least one row");
    for (int x : rows_.parts())
        if (x < 2) throw std::invalid_argument("ribbon rows must have length at least two");
    if (static_cast<int>(overlaps_.size()) != rows_.length() - 1)
        throw std::invalid_argument("ribbon needs one overlap flag per adjacent row pair");
}

Ribbon Ribbon::connected(const Composition& rows) {
    return Ribbon(rows, std::vector<bool>(static_cast<size_t>(std::max(0, rows.length() - 1)), true));
}

Ribbon Ribbon::horizontal_strip(const Composition& rows) {
    return Ribbon(rows, std::vector<bool>(static_cast<size_t>(std::max(0, rows.length() - 1)), false));
}

Ribbon Ribbon::from_pair(const Partition& alpha, const std::vector<int>& p) {
    if (!valid_overlap_partition(alpha, p))
        throw std::invalid_argument("from_pair: invalid overlapping partition for alpha");
    std::vector<bool> ov;
    for (int i = 1; i < alpha.length(); ++i)
        ov.push_back(p[static_cast<size_t>(i)] == p[size_t(i - 1)] - 1);
    return Ribbon(Composition(alpha.parts()), std::move(ov));
}

bool Ribbon::monotone() const {
    const auto& v = rows_.parts();
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

bool Ribbon::connected_ribbon() const {
    return std::all_of(overlaps_.begin(), overlaps_.end(), [](bool b) { return b; });
}

int Ribbon::component_count() const {
    int k = 1;
    for (bool b : overlaps_)
        if (!b) ++k;
    return k;
}

std::vector<Composition> Ribbon::components() const {
    std::vector<Composition> out;
    std::vector<int> cur{rows_.part(1)};
    for (int i = 1; i < rows_.length(); ++i) {
        if (!overlaps_[size_t(i - 1)]) {
            out.push_back(Composition(cur));
            cur.clear();
        }
        cur.push_back(rows_.part(i + 1));
    }
    out.push_back(Composition(cur));
    return out;
}

std::vector<int> Ribbon::overlapping_partition() const {
    int m = rows_.length();
    // Rows ranked smallest first, ties preferring the lower (larger index) row.
    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (rows_.part(a) != rows_.part(b)) return rows_.part(a) < rows_.part(b);
        return a > b;
    });
    std::vector<int> p(static_cast<size_t>(m), 0);
    for (int i = 1; i <= m; ++i) {
        std::vector<bool> selected(static_cast<size_t>(m + 1), false);
        for (int q = 0; q < m - i + 1; ++q) selected[static_cast<size_t>(order[static_cast<size_t>(q)])] = true;
        int count = 0;
        for (int j = 1; j < m; ++j)
            if (overlaps_[size_t(j - 1)] && selected[static_cast<size_t>(j)] && selected[static_cast<size_t>(j + 1)])
                ++count;
        p[size_t(i - 1)] = count;
    }
    return p;
}

std::pair<Partition, Partition> Ribbon::schur_interval() const {
    Partition bottom = rows_.sorted();
    int p1 = overlapping_partition()[0];
    std::vector<int> top{static_cast<int>(size()) - p1, p1};
    return {bottom, Partition(std::move(top))};
}

SkewShape Ribbon::to_skew_shape() const { return skew_shape_from_rows(rows_, overlaps_); }

bool valid_overlap_partition(const Partition& alpha, const std::vector<int>& p) {
    int m = alpha.length();
    if (static_cast<int>(p.size()) != m) return false;
    if (m == 0) return true;
    if (p.back() != 0) return false;
    for (int i = 0; i < m; ++i) {
        if (p[static_cast<size_t>(i)] < 0) return false;
        if (i + 1 < m) {
            int step = p[static_cast<size_t>(i)] - p[static_cast<size_t>(i + 1)];
            if (step != 0 && step != 1) return false;
        }
    }
    return true;
}

std::vector<int> staircase_overlap(int len) {
    std::vector<int> p;
    for (int i = len - 1; i >= 0; --i) p.push_back(i);
    return p;
}

std::vector<std::vector<int>> all_overlap_partitions(int len) {
    std::vector<std::vector<int>> out;
    if (len <= 0) return out;
    for (unsigned mask = 0; mask < (1u << (len - 1)); ++mask) {
        std::vector<int> p(static_cast<size_t>(len), 0);
        for (int i = len - 1; i >= 1; --i)
            p[size_t(i - 1)] = p[static_cast<size_t>(i)] + ((mask >> (i - 1)) & 1u);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long rest(const Partition& alpha, const std::vector<int>& p, int i) {
    if (!valid_overlap_partition(alpha, p)) throw std::invalid_argument("rest: invalid (alpha, p)");
    int lp = 0;
    for (int x : p)
        if (x > 0) ++lp;
    if (i < 1 || i > lp - 1) throw std::invalid_argument("rest: index out of range");
    long long tail = 0;
    for (int q = i + 1; q <= alpha.length(); ++q) tail += alpha.part(q);
    return 1 + tail - p[static_cast<size_t>(i)];
}

}  // namespace ribbonschur
