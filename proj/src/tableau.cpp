#include "ribbonschur/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ribbonschur {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw std::invalid_argument("tableau has an empty middle row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw std::invalid_argument("tableau shape is not a partition");
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] <= 0) throw std::invalid_argument("tableau entries must be positive");
            if (c > 0 && row[c] < row[c - 1])
                throw std::invalid_argument("tableau rows must weakly increase");
            if (r > 0 && rows_[r - 1][c] >= row[c])
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
}

Partition Tableau::shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
    return Partition(std::move(s));
}

long long Tableau::size() const {
    long long n = 0;
    for (const auto& row : rows_) n += static_cast<long long>(row.size());
    return n;
}

std::vector<int> Tableau::content() const {
    std::vector<int> c;
    for (const auto& row : rows_)
        for (int x : row) {
            if (x > static_cast<int>(c.size())) c.resize(static_cast<size_t>(x), 0);
            ++c[static_cast<size_t>(x - 1)];
        }
    return c;
}

int Tableau::count_in_row(int row, int letter) const {
    if (row < 1 || row > static_cast<int>(rows_.size())) return 0;
    const auto& r = rows_[static_cast<size_t>(row - 1)];
    return static_cast<int>(std::count(r.begin(), r.end(), letter));
}

StandardTableau::StandardTableau(Tableau t) : t_(std::move(t)) {
    long long n = t_.size();
    row_of_.assign(static_cast<size_t>(n), 0);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    const auto& rows = t_.rows();
    for (size_t r = 0; r < rows.size(); ++r)
        for (int x : rows[r]) {
            if (x > n || seen[static_cast<size_t>(x - 1)])
                throw std::invalid_argument("standard tableau must contain 1..n once each");
            seen[static_cast<size_t>(x - 1)] = true;
            row_of_[static_cast<size_t>(x - 1)] = static_cast<int>(r + 1);
        }
}

StandardTableau standardize(const Tableau& t) {
    struct Box {
        int row, col, letter;
    };
    std::vector<Box> boxes;
    const auto& rows = t.rows();
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            boxes.push_back({static_cast<int>(r + 1), static_cast<int>(c + 1), rows[r][c]});
    // Standard order: by letter, ties read SW to NE within the strip.
    std::stable_sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        if (a.letter != b.letter) return a.letter < b.letter;
        if (a.row != b.row) return a.row > b.row;
        return a.col < b.col;
    });
    std::vector<std::vector<int>> out(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) out[r].assign(rows[r].size(), 0);
    int next = 1;
    for (const Box& b : boxes) out[size_t(b.row - 1)][size_t(b.col - 1)] = next++;
    return StandardTableau(Tableau(std::move(out)));
}

std::vector<int> descent_set(const StandardTableau& u) {
    std::vector<int> d;
    long long n = u.tableau().size();
    for (int i = 1; i < n; ++i)
        if (u.row_of(i + 1) > u.row_of(i)) d.push_back(i);
    return d;
}

std::vector<int> descent_set(const Composition& alpha) {
    std::vector<int> s;
    long long acc = 0;
    for (int i = 1; i < alpha.length(); ++i) {
        acc += alpha.part(i);
        s.push_back(static_cast<int>(acc));
    }
    return s;
}

Tableau destandardize(const StandardTableau& u, const Composition& alpha) {
    if (alpha.sum() != u.tableau().size())
        throw std::invalid_argument("destandardize: content size mismatch");
    std::vector<int> d = descent_set(u);
    std::vector<int> s = descent_set(alpha);
    if (!std::includes(s.begin(), s.end(), d.begin(), d.end()))
        throw std::invalid_argument("destandardize: descent set not refined by the composition");
    std::vector<std::vector<int>> out;
    for (const auto& row : u.rows()) {
        out.emplace_back();
        for (int x : row) {
            int letter = 1;
            long long acc = alpha.part(1);
            while (x > acc) acc += alpha.part(++letter);
            out.back().push_back(letter);
        }
    }
    return Tableau(std::move(out));
}

bool kostka_positive(const Partition& nu, const Composition& alpha) {
    if (nu.sum() != alpha.sum())
        throw std::invalid_argument("kostka_positive: sizes differ");
    return dominates(nu, alpha.sorted());
}

Tableau canonical_filling(const Partition& nu, const Composition& alpha) {
    if (!kostka_positive(nu, alpha))
        throw std::invalid_argument("canonical_filling: content is not dominated by the shape");
    size_t m = static_cast<size_t>(nu.length());
    std::vector<int> cur(nu.parts());
    std::vector<std::vector<int>> grid(m);
    for (size_t r = 0; r < m; ++r) grid[r].assign(static_cast<size_t>(nu.part(int(r) + 1)), 0);
    for (int letter = alpha.length(); letter >= 1; --letter) {
        int need = alpha.part(letter);
        std::vector<int> before = cur;
        for (int r = static_cast<int>(m); r >= 1 && need > 0; --r) {
            int below = (r < static_cast<int>(m)) ? before[static_cast<size_t>(r)] : 0;
            int take = std::min(need, before[size_t(r - 1)] - below);
            for (int t = 0; t < take; ++t)
                grid[size_t(r - 1)][size_t(before[size_t(r - 1)] - 1 - t)] = letter;
            cur[size_t(r - 1)] -= take;
            need -= take;
        }
        if (need > 0) throw invariant_error("canonical_filling: strip placement failed");
    }
    return Tableau(std::move(grid));
}

namespace {

// Extends `shape` (row lengths inside nu) by a horizontal strip of the given
// letter, recursing over rows; calls sink when the whole content is placed.
void extend_strips(const Partition& nu, const Composition& alpha, int letter,
                   std::vector<int>& shape, std::vector<std::vector<int>>& grid,
                   const std::function<void(const Tableau&)>& sink) {
    if (letter > alpha.length()) {
        for (int r = 1; r <= nu.length(); ++r)
            if (shape[size_t(r - 1)] != nu.part(r)) return;
        sink(Tableau(grid));
        return;
    }
    int m = nu.length();
    // Choose the new row lengths row by row, top to bottom.
    std::vector<int> prev = shape;
    std::function<void(int, int)> place = [&](int r, int remaining) {
        if (r > m) {
            if (remaining == 0) extend_strips(nu, alpha, letter + 1, shape, grid, sink);
            return;
        }
        int low = prev[size_t(r - 1)];
        int cap = std::min(nu.part(r), r == 1 ? nu.part(1) : prev[size_t(r - 2)]);
        for (int len = low; len <= std::min(cap, low + remaining); ++len) {
            shape[size_t(r - 1)] = len;
            for (int c = low + 1; c <= len; ++c) grid[size_t(r - 1)][size_t(c - 1)] = letter;
            place(r + 1, remaining - (len - low));
            for (int c = low + 1; c <= len; ++c) grid[size_t(r - 1)][size_t(c - 1)] = 0;
            shape[size_t(r - 1)] = low;
        }
    };
    place(1, alpha.part(letter));
}

}  // namespace

void for_each_ssyt(const Partition& nu, const Composition& alpha,
                   const std::function<void(const Tableau&)>& fn) {
    if (nu.sum() != alpha.sum()) throw std::invalid_argument("for_each_ssyt: sizes differ");
    if (nu.empty()) {
        fn(Tableau({}));
        return;
    }
    std::vector<int> shape(static_cast<size_t>(nu.length()), 0);
    std::vector<std::vector<int>> grid(static_cast<size_t>(nu.length()));
    for (int r = 1; r <= nu.length(); ++r)
        grid[size_t(r - 1)].assign(static_cast<size_t>(nu.part(r)), 0);
    extend_strips(nu, alpha, 1, shape, grid, fn);
}

std::vector<Tableau> enumerate_ssyt(const Partition& nu, const Composition& alpha) {
    std::vector<Tableau> out;
    for_each_ssyt(nu, alpha, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

Tableau parse_tableau(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string rowtext;
    while (std::getline(ss, rowtext, '/')) {
        for (char& ch : rowtext)
            if (ch == ',') ch = ' ';
        std::stringstream rs(rowtext);
        std::vector<int> row;
        int v;
        while (rs >> v) row.push_back(v);
        if (!rs.eof()) throw std::invalid_argument("cannot parse tableau row '" + rowtext + "'");
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

std::string to_string(const Tableau& t) {
    std::string s;
    const auto& rows = t.rows();
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) s += " / ";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) s += ' ';
            s += std::to_string(rows[r][c]);
        }
    }
    return s;
}

}  // namespace ribbonschur
