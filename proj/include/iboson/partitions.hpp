#pragma once

#include <compare>
#include <string>
#include <vector>

#include "iboson/qsqrt2.hpp"

namespace iboson {

// Strictly decreasing positive parts; the empty partition is allowed.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    // Part i (0-based), 0 beyond the length.
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    bool contains(int p) const;

    // "5,2,1"; the empty string for the empty partition.
    std::string str() const;
    static StrictPartition parse(const std::string& text);

    auto operator<=>(const StrictPartition&) const = default;

private:
    std::vector<int> parts_;
};

struct TwoPartition {
    StrictPartition first;
    StrictPartition second;
    int weight() const { return first.weight() + second.weight(); }
    auto operator<=>(const TwoPartition&) const = default;
};

// Weight-graded, then lexicographic on the part sequence.
bool graded_less(const StrictPartition& a, const StrictPartition& b);

// mu > nu: mu_1 >= nu_1 >= mu_2 >= nu_2 >= ..., missing parts read as 0.
bool interlaces(const StrictPartition& mu, const StrictPartition& nu);

// Number of parts of mu that are not parts of nu.
int sharp_count(const StrictPartition& mu, const StrictPartition& nu);

// All strict partitions with at most n parts, each at most m, in graded order.
std::vector<StrictPartition> strict_partitions_in_box(int n, int m);

// All strict mu in the [n, m] box with mu > nu, in graded order.
std::vector<StrictPartition> interlacing_extensions(const StrictPartition& nu, int n, int m);

// All strict nu with nu < mu and at most max_len parts (max_len < 0: unbounded), in graded order.
std::vector<StrictPartition> interlacing_restrictions(const StrictPartition& mu, int max_len = -1);

}  // namespace iboson
