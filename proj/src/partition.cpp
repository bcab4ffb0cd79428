#include "ribbonschur/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ribbonschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
        if (x <= 0) throw std::invalid_argument("composition parts must be positive");
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Composition::sorted() const {
    std::vector<int> v = parts_;
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    if (lambda.empty()) return Partition{};
    out.resize(static_cast<size_t>(lambda.part(1)));
    for (int i = 1; i <= static_cast<int>(out.size()); ++i) {
        int count = 0;
        for (int x : lambda.parts())
            if (x >= i) ++count;
        out[static_cast<size_t>(i - 1)] = count;
    }
    return Partition(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum())
        throw std::invalid_argument("dominance compares partitions of the same size");
    long long lsum = 0, msum = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 1; i <= len; ++i) {
        lsum += lambda.part(i);
        msum += mu.part(i);
        if (msum > lsum) return false;
    }
    return true;
}

namespace {

void emit_partitions(long long n, int max_first, int min_part, int min_len, int max_len,
                     std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        if (static_cast<int>(acc.size()) >= min_len) out.push_back(Partition(acc));
        return;
    }
    if (max_len >= 0 && static_cast<int>(acc.size()) >= max_len) return;
    int hi = static_cast<int>(std::min<long long>(n, max_first));
    for (int k = hi; k >= min_part; --k) {
        acc.push_back(k);
        emit_partitions(n - k, k, min_part, min_len, max_len, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long long n) { return partitions_of(n, 1, 0, -1); }

std::vector<Partition> partitions_of(long long n, int min_part, int min_len, int max_len) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(n, static_cast<int>(std::min<long long>(n, 1LL << 30)), std::max(1, min_part),
                    min_len, max_len, acc, out);
    return out;
}

std::vector<Partition> dominance_interval(const Partition& bottom, const Partition& top) {
    if (bottom.sum() != top.sum())
        throw std::invalid_argument("dominance_interval: endpoint sizes differ");
    if (!dominates(top, bottom))
        throw std::invalid_argument("dominance_interval: bottom is not dominated by top");
    std::vector<Partition> out;
    for (const Partition& nu : partitions_of(bottom.sum()))
        if (dominates(top, nu) && dominates(nu, bottom)) out.push_back(nu);
    return out;
}

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::string t = text;
    if (t.empty() || t == "0") return parts;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse part '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("cannot parse part '" + tok + "'");
        parts.push_back(v);
    }
    return parts;
}

}  // namespace

Partition parse_partition(const std::string& text) { return Partition(parse_parts(text)); }

Composition parse_composition(const std::string& text) { return Composition(parse_parts(text)); }

namespace {

std::string join_parts(const std::vector<int>& parts) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

}  // namespace

std::string to_string(const Partition& p) { return join_parts(p.parts()); }

std::string to_string(const Composition& c) { return join_parts(c.parts()); }

std::vector<Composition> rearrangements(const Partition& alpha) {
    std::vector<int> v = alpha.parts();
    std::sort(v.begin(), v.end());
    std::vector<Composition> out;
    do {
        out.push_back(Composition(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace ribbonschur
