#pragma once

#include <string>
#include <vector>

#include "iboson/partitions.hpp"
#include "iboson/series.hpp"

namespace iboson {

// Matrix pi_{ij} >= 0, weakly decreasing along rows and columns. Stored without zero cells:
// row lengths weakly decrease and every stored entry is positive.
class PlanePartition {
public:
    PlanePartition() = default;
    // Accepts rows padded with zeros; zeros are trimmed.
    explicit PlanePartition(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_cols() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
    int at(int i, int j) const;  // 0-based, 0 outside the support
    int weight() const;
    int max_entry() const { return rows_.empty() ? 0 : rows_[0][0]; }
    bool empty() const { return rows_.empty(); }

    // One row per line, entries separated by spaces.
    std::string str() const;
    static PlanePartition parse(const std::string& text);

    auto operator<=>(const PlanePartition&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

using Slice = std::vector<int>;

// left[k] = pi_{-(k+1)}, right[k] = pi_{k+1}; trailing empty slices are omitted.
struct SlicedPP {
    std::vector<Slice> left;
    Slice center;
    std::vector<Slice> right;
    bool operator==(const SlicedPP&) const = default;
};

SlicedPP diagonal_slices(const PlanePartition& pi);
PlanePartition reassemble(const SlicedPP& s);

bool is_strict(const PlanePartition& pi);

enum class PathMethod { Formula, Regions };

int path_exponent(const PlanePartition& pi, PathMethod method);

// Strict plane partitions with at most n rows, l columns and entries at most m. A non-negative
// max_weight additionally bounds |pi|.
std::vector<PlanePartition> enumerate_boxed_strict(int n, int l, int m, int max_weight = -1);

// 2^{p(pi)} prod_i x_i^{|pi_{-i+1}|-|pi_{-i}|} z_i^{|pi_{i-1}|-|pi_i|}; x_vars[i-1] and z_vars[i-1]
// are variable indices in ctx.
MultiSeries b_weight(const PlanePartition& pi, const SeriesContextPtr& ctx, const std::vector<std::size_t>& x_vars,
                     const std::vector<std::size_t>& z_vars);

}  // namespace iboson
