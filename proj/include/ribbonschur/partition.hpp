#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbonschur {

// Raised when an internal consistency check fails (something a theorem
// guarantees cannot happen). Distinct from invalid_argument so callers can
// tell bad input from a genuine bug.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

// Integer partition: weakly decreasing positive parts, no trailing zeros
// stored. Out-of-range reads via part() return 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long sum() const { return sum_; }
    bool empty() const { return parts_.empty(); }

    // 1-based read; index beyond the length yields 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    long long sum_ = 0;
};

// Orders partitions largest-first lexicographically; this is the emission
// order of partitions_of and the iteration order of coefficient maps.
struct DescLex {
    bool operator()(const Partition& a, const Partition& b) const {
        return a.parts() > b.parts();
    }
};

// Sequence of positive integers in a fixed order (row lengths, contents).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long sum() const { return sum_; }
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }

    // Decreasing rearrangement.
    Partition sorted() const;

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    long long sum_ = 0;
};

Partition conjugate(const Partition& lambda);

// True iff mu is dominated by lambda (every prefix sum of mu is at most the
// corresponding prefix sum of lambda). Requires equal sizes.
bool dominates(const Partition& lambda, const Partition& mu);

// All partitions of n, largest-first lexicographically.
std::vector<Partition> partitions_of(long long n);

// Partitions of n with every part >= min_part and length in [min_len, max_len];
// same order as partitions_of. max_len < 0 means unbounded.
std::vector<Partition> partitions_of(long long n, int min_part, int min_len, int max_len);

// All nu with bottom <= nu <= top in dominance order, largest-first
// lexicographically. Requires |bottom| = |top| and bottom dominated by top.
std::vector<Partition> dominance_interval(const Partition& bottom, const Partition& top);

// Text codec: comma-separated parts, e.g. "3,3,2,2,2". The empty partition
// reads as "" or "0" and prints as "".
Partition parse_partition(const std::string& text);
Composition parse_composition(const std::string& text);
std::string to_string(const Partition& p);
std::string to_string(const Composition& c);

// Distinct rearrangements of the parts of alpha, in lexicographic order.
std::vector<Composition> rearrangements(const Partition& alpha);

}  // namespace ribbonschur
