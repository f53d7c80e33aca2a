#pragma once

#include <vector>

#include "iboson/series.hpp"

namespace iboson {

// Even-dimensional skew-symmetric matrix of series over a shared context.
class SkewMatrix {
public:
    // Builds from the strict upper triangle: upper[i][j - i - 1] = a_{ij} for i < j.
    static SkewMatrix from_upper(SeriesContextPtr ctx, const std::vector<std::vector<MultiSeries>>& upper);
    // Validates a full matrix against a_{ij} = -a_{ji}, a_{ii} = 0.
    static SkewMatrix from_full(SeriesContextPtr ctx, std::vector<std::vector<MultiSeries>> full);

    std::size_t dimension() const { return n_; }
    const MultiSeries& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const SeriesContextPtr& context() const { return ctx_; }

private:
    SkewMatrix(SeriesContextPtr ctx, std::size_t n);
    SeriesContextPtr ctx_;
    std::size_t n_;
    std::vector<std::vector<MultiSeries>> entries_;
};

// Expansion along the first row; the empty matrix has Pfaffian 1.
MultiSeries pfaffian(const SkewMatrix& a);

}  // namespace iboson
