#pragma once

// Integer partitions viewed as Young diagrams with a columns-as-parts box
// embedding, arm/leg statistics, constrained enumeration, and the interlaced
// distinct-part tuples S(r,m) that index zero-dimensional attracting cells.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qcensus {

// A box position (col, row), both >= 0.  Probe coordinates outside a diagram
// are legal; arm/leg become negative there.
struct BoxCoord {
    int col = 0;
    int row = 0;
};

// Weakly decreasing positive parts; the empty partition is allowed.
//
// The diagram of lambda is the box set {(i,j) : 0 <= i < length, 0 <= j <
// parts[i]}: column i holds parts[i] boxes, so the column heights are exactly
// the parts, c_0 = first part and r_0 = number of parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Column height c_i, zero outside the diagram.
    int column_count(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    // Row width r_j = number of columns taller than j.
    int row_count(int j) const {
        if (j < 0) return 0;
        int n = 0;
        for (int p : parts_) {
            if (p > j)
                ++n;
            else
                break;
        }
        return n;
    }

    bool contains(BoxCoord s) const {
        return s.col >= 0 && s.row >= 0 && s.row < column_count(s.col);
    }

    bool has_distinct_parts() const {
        for (std::size_t k = 0; k + 1 < parts_.size(); ++k)
            if (parts_[k] == parts_[k + 1]) return false;
        return true;
    }

    std::vector<BoxCoord> boxes() const {
        std::vector<BoxCoord> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int i = 0; i < length(); ++i)
            for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j)
                out.push_back({i, j});
        return out;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

struct ArmLeg {
    int arm = 0;
    int leg = 0;
};

// a_Y(s) = c_i(Y) - j - 1 and l_Y(s) = r_j(Y) - i - 1.  Both are >= 0 exactly
// when s lies inside the diagram.
inline ArmLeg arm_leg(const Partition& host, BoxCoord s) {
    if (s.col < 0 || s.row < 0)
        throw std::invalid_argument("arm_leg: box coordinates must be nonnegative");
    return {host.column_count(s.col) - s.row - 1, host.row_count(s.row) - s.col - 1};
}

struct PartitionConstraints {
    bool distinct = false;
    std::optional<int> max_part;
    std::optional<int> max_length;
};

// All partitions of n meeting the constraints, in decreasing lexicographic
// order of part sequences: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
inline std::vector<Partition> enumerate_partitions(int n, const PartitionConstraints& c = {}) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    auto recurse = [&](auto&& self, int remaining, int part_bound) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(stack));
            return;
        }
        if (c.max_length && static_cast<int>(stack.size()) >= *c.max_length) return;
        for (int p = std::min(remaining, part_bound); p >= 1; --p) {
            stack.push_back(p);
            self(self, remaining - p, c.distinct ? p - 1 : p);
            stack.pop_back();
        }
    };
    int bound = c.max_part ? *c.max_part : n;
    recurse(recurse, n, bound);
    return out;
}

// Membership predicate of S(r,m): every entry has distinct parts and
// entry_i's largest part is at most length(entry_{i+1}), plus one when i = m
// (entries indexed 1..r).
inline bool in_s_set(const std::vector<Partition>& entries, int m) {
    const int r = static_cast<int>(entries.size());
    for (const Partition& p : entries)
        if (!p.has_distinct_parts()) return false;
    for (int i = 1; i <= r - 1; ++i) {
        int bound = entries[static_cast<std::size_t>(i)].length() + (i == m ? 1 : 0);
        if (entries[static_cast<std::size_t>(i - 1)].first_part() > bound) return false;
    }
    return true;
}

// An r-tuple of distinct-part partitions subject to the interlacing bound.
struct STuple {
    std::vector<Partition> entries;

    int total_size() const {
        int n = 0;
        for (const Partition& p : entries) n += p.size();
        return n;
    }

    friend auto operator<=>(const STuple&, const STuple&) = default;
};

// All members of S(r,m) of total size n.  Entries are generated from slot r
// down to slot 1 so every interlacing bound is known when a slot is filled;
// the output order is deterministic.
inline std::vector<STuple> enumerate_s_tuples(int r, int m, int n) {
    if (r < 1) throw std::invalid_argument("enumerate_s_tuples: r must be >= 1");
    if (m < 0 || m > r) throw std::invalid_argument("enumerate_s_tuples: m must satisfy 0 <= m <= r");
    if (n < 0) throw std::invalid_argument("enumerate_s_tuples: n must be >= 0");

    std::vector<STuple> out;
    std::vector<Partition> chosen(static_cast<std::size_t>(r));
    // slot: 1-based index of the entry being filled, moving r -> 1.
    auto fill = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == 0) {
            if (remaining == 0) {
                STuple t;
                t.entries = chosen;
                out.push_back(std::move(t));
            }
            return;
        }
        PartitionConstraints pc;
        pc.distinct = true;
        if (slot < r) {
            const Partition& next = chosen[static_cast<std::size_t>(slot)];
            pc.max_part = next.length() + (slot == m ? 1 : 0);
        }
        const int low = (slot == 1) ? remaining : 0;
        for (int sz = low; sz <= remaining; ++sz)
            for (Partition& p : enumerate_partitions(sz, pc)) {
                chosen[static_cast<std::size_t>(slot - 1)] = std::move(p);
                self(self, slot - 1, remaining - sz);
            }
    };
    fill(fill, r, n);
    return out;
}

inline std::size_t count_s_tuples(int r, int m, int n) {
    return enumerate_s_tuples(r, m, n).size();
}

}  // namespace qcensus
