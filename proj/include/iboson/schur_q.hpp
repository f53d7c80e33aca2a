#pragma once

#include <map>
#include <vector>

#include "iboson/partitions.hpp"
#include "iboson/series.hpp"

namespace iboson {

// Variables x_1..x_n of a Schur Q-function, given as indices into a series context.
struct QContext {
    SeriesContextPtr ctx;
    std::vector<std::size_t> vars;

    static QContext of(SeriesContextPtr ctx, const std::vector<std::string>& names);
};

// Coefficient of k^m in prod_i (1 + x_i k)/(1 - x_i k).
MultiSeries q_one_row(int m, const QContext& q);

MultiSeries schur_q_pfaffian(const StrictPartition& mu, const QContext& q);

// 2^{#(mu|nu)} x^{|mu|-|nu|} when mu > nu, else 0.
MultiSeries skew_q_one_var(const StrictPartition& mu, const StrictPartition& nu, const SeriesContextPtr& ctx,
                           std::size_t var);

MultiSeries schur_q_branching(const StrictPartition& mu, const QContext& q);

}  // namespace iboson
