#include "iboson/pfaffian.hpp"

namespace iboson {

SkewMatrix::SkewMatrix(SeriesContextPtr ctx, std::size_t n)
    : ctx_(std::move(ctx)), n_(n), entries_(n, std::vector<MultiSeries>(n, MultiSeries(ctx_))) {
    if (n % 2 != 0) throw DomainError("skew matrix dimension must be even");
}

SkewMatrix SkewMatrix::from_upper(SeriesContextPtr ctx, const std::vector<std::vector<MultiSeries>>& upper) {
    std::size_t n = upper.size() + (upper.empty() ? 0 : 1);
    if (upper.empty()) return SkewMatrix(ctx, 0);
    SkewMatrix a(ctx, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (upper[i].size() != n - i - 1) throw UsageError("skew matrix: ragged upper triangle");
        for (std::size_t j = i + 1; j < n; ++j) {
            a.entries_[i][j] = upper[i][j - i - 1];
            a.entries_[j][i] = -upper[i][j - i - 1];
        }
    }
    return a;
}

SkewMatrix SkewMatrix::from_full(SeriesContextPtr ctx, std::vector<std::vector<MultiSeries>> full) {
    std::size_t n = full.size();
    SkewMatrix a(ctx, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (full[i].size() != n) throw UsageError("skew matrix: not square");
        if (!full[i][i].is_zero()) throw DomainError("skew matrix: nonzero diagonal");
        for (std::size_t j = 0; j < i; ++j)
            if (!(full[i][j] == -full[j][i])) throw DomainError("skew matrix: not antisymmetric");
    }
    a.entries_ = std::move(full);
    return a;
}

namespace {

MultiSeries pf_rec(const SkewMatrix& a, std::vector<std::size_t>& idx) {
    if (idx.empty()) return MultiSeries::one(a.context());
    MultiSeries total(a.context());
    std::size_t first = idx[0];
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const MultiSeries& entry = a.at(first, idx[k]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != k) rest.push_back(idx[t]);
        MultiSeries term = entry * pf_rec(a, rest);
        // 1-based column k+1 gives sign (-1)^{k+1+1}.
        if (k % 2 == 0) total -= term;
        else total += term;
    }
    return total;
}

}  // namespace

MultiSeries pfaffian(const SkewMatrix& a) {
    std::vector<std::size_t> idx(a.dimension());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return pf_rec(a, idx);
}

}  // namespace iboson
