#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ribbonschur/partition.hpp"

namespace ribbonschur {

// Skew shape outer/inner with inner contained in outer. Rows may be empty;
// basic_form() removes empty rows and columns.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    long long size() const { return outer_.sum() - inner_.sum(); }
    int row_count() const { return outer_.length(); }

    // 1-based row occupies 1-based columns inner(r)+1 .. outer(r).
    int row_start(int r) const { return inner_.part(r) + 1; }
    int row_end(int r) const { return outer_.part(r); }
    int row_length(int r) const { return outer_.part(r) - inner_.part(r); }

    // Row-length partition r(A) and conjugated column-length partition c(A)'.
    Partition row_partition() const;
    Partition column_partition_conjugate() const;

    SkewShape basic_form() const;
    SkewShape rotated180() const;
    SkewShape conjugated() const;

    bool contains_2x2() const;
    int component_count() const;

    bool operator==(const SkewShape& o) const { return outer_ == o.outer_ && inner_ == o.inner_; }
    auto operator<=>(const SkewShape& o) const {
        if (auto c = outer_ <=> o.outer_; c != 0) return c;
        return inner_ <=> o.inner_;
    }

private:
    Partition outer_, inner_;
};

// Builds the skew diagram with the given top-to-bottom row lengths, rows
// bottom-justified toward the left; adjacent rows share one column when their
// overlap flag is set and touch corner to corner otherwise. Rows of length 1
// are allowed here (columns may then exceed length two).
SkewShape skew_shape_from_rows(const Composition& rows, const std::vector<bool>& overlaps);

// Ribbon stored intrinsically: top-to-bottom row lengths (each at least two)
// plus one overlap flag per adjacent row pair.
class Ribbon {
public:
    Ribbon(Composition rows, std::vector<bool> overlaps);

    static Ribbon connected(const Composition& rows);
    static Ribbon horizontal_strip(const Composition& rows);

    // The unique monotone ribbon with the given row partition and overlapping
    // partition; rows i and i+1 overlap exactly when p drops by one there.
    static Ribbon from_pair(const Partition& alpha, const std::vector<int>& p);

    const Composition& rows() const { return rows_; }
    const std::vector<bool>& overlaps() const { return overlaps_; }
    int row_count() const { return rows_.length(); }
    long long size() const { return rows_.sum(); }
    bool monotone() const;
    bool connected_ribbon() const;
    int component_count() const;

    // Sizes of the connected components, top to bottom.
    std::vector<Composition> components() const;

    // p_i = number of length-two columns among the smallest row_count()-i+1
    // rows (ties broken toward the lowest position); length row_count(),
    // trailing zeros kept.
    std::vector<int> overlapping_partition() const;

    // [alpha^+, (|alpha|-p_1, p_1)] in dominance order.
    std::pair<Partition, Partition> schur_interval() const;

    SkewShape to_skew_shape() const;

private:
    Composition rows_;
    std::vector<bool> overlaps_;
};

// Validity of (alpha, p): p weakly decreasing with steps 0 or 1, as many
// entries as alpha has parts, ending at 0.
bool valid_overlap_partition(const Partition& alpha, const std::vector<int>& p);

// The overlapping partition of the connected ribbon: (len-1, ..., 2, 1, 0).
std::vector<int> staircase_overlap(int len);

// All valid overlapping partitions for a monotone alpha of the given length
// (one per overlap-flag vector), deterministic order.
std::vector<std::vector<int>> all_overlap_partitions(int len);

// Rest of order i (1 <= i <= number of nonzero p entries - 1): one more than
// the column count of the last len(alpha)-i rows of the ribbon.
long long rest(const Partition& alpha, const std::vector<int>& p, int i);

}  // namespace ribbonschur
