#include "iboson/schur_q.hpp"

#include <algorithm>

#include "iboson/pfaffian.hpp"

namespace iboson {

QContext QContext::of(SeriesContextPtr ctx, const std::vector<std::string>& names) {
    QContext q{std::move(ctx), {}};
    for (const auto& n : names) q.vars.push_back(q.ctx->index_of(n));
    return q;
}

namespace {

// q_0..q_max computed from one auxiliary expansion in k.
std::vector<MultiSeries> one_row_table(int max_index, const QContext& q) {
    const auto& ctx = *q.ctx;
    std::vector<std::string> names;
    std::vector<int> caps;
    for (std::size_t v : q.vars) {
        names.push_back(ctx.names()[v]);
        int c = ctx.effective_cap(v);
        caps.push_back(c == kUnbounded ? max_index : std::min(c, max_index));
    }
    std::string k = "k";
    while (std::find(names.begin(), names.end(), k) != names.end()) k += "_";
    names.push_back(k);
    caps.push_back(max_index);
    auto aux = SeriesContext::make(names, caps);
    std::size_t kv = names.size() - 1;
    MultiSeries prod = MultiSeries::one(aux);
    for (std::size_t i = 0; i < q.vars.size(); ++i) {
        Monomial xk(names.size(), 0);
        xk[i] = 1;
        xk[kv] = 1;
        MultiSeries num = MultiSeries::one(aux);
        num.add_term(xk, QSqrt2(1));
        MultiSeries den = MultiSeries::one(aux);
        den.add_term(xk, QSqrt2(-1));
        prod *= num * den.invert_unit();
    }
    std::vector<MultiSeries> table;
    for (int m = 0; m <= max_index; ++m) {
        MultiSeries coeff(aux);
        for (const auto& [mono, c] : prod.terms()) {
            if (mono[kv] != m) continue;
            Monomial stripped = mono;
            stripped[kv] = 0;
            coeff.add_term(stripped, c);
        }
        // The k variable no longer occurs, so rebasing drops it cleanly.
        std::vector<std::string> xnames(names.begin(), names.end() - 1);
        auto xctx = SeriesContext::make(xnames, std::vector<int>(xnames.size(), kUnbounded));
        MultiSeries tmp(xctx);
        for (const auto& [mono, c] : coeff.terms()) tmp.add_term(Monomial(mono.begin(), mono.end() - 1), c);
        table.push_back(tmp.rebase(q.ctx));
    }
    return table;
}

}  // namespace

MultiSeries q_one_row(int m, const QContext& q) {
    if (m < 0) throw UsageError("q_m needs m >= 0");
    return one_row_table(m, q)[static_cast<std::size_t>(m)];
}

MultiSeries schur_q_pfaffian(const StrictPartition& mu, const QContext& q) {
    std::vector<int> parts = mu.parts();
    if (parts.size() % 2 == 1) parts.push_back(0);
    if (parts.empty()) return MultiSeries::one(q.ctx);
    int max_index = parts[0] + (parts.size() > 1 ? parts[1] : 0);
    auto table = one_row_table(max_index, q);
    auto qm = [&](int m) -> const MultiSeries& { return table[static_cast<std::size_t>(m)]; };
    std::size_t n = parts.size();
    std::vector<std::vector<MultiSeries>> upper(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            int a = parts[i], b = parts[j];
            MultiSeries e = qm(a) * qm(b);
            for (int k = 1; k <= b; ++k) {
                MultiSeries t = qm(a + k) * qm(b - k);
                t.scale(QSqrt2(k % 2 == 0 ? 2 : -2));
                e += t;
            }
            upper[i].push_back(std::move(e));
        }
    }
    return pfaffian(SkewMatrix::from_upper(q.ctx, upper));
}

MultiSeries skew_q_one_var(const StrictPartition& mu, const StrictPartition& nu, const SeriesContextPtr& ctx,
                           std::size_t var) {
    MultiSeries out(ctx);
    if (!interlaces(mu, nu)) return out;
    Monomial m(ctx->size(), 0);
    m.at(var) = mu.weight() - nu.weight();
    out.add_term(m, pow2(sharp_count(mu, nu)));
    return out;
}

namespace {

struct Branching {
    const QContext& q;
    std::map<std::pair<std::size_t, StrictPartition>, MultiSeries> memo;

    MultiSeries eval(const StrictPartition& mu, std::size_t n) {
        if (n == 0) return mu.empty() ? MultiSeries::one(q.ctx) : MultiSeries(q.ctx);
        if (mu.length() > static_cast<int>(n)) return MultiSeries(q.ctx);
        auto key = std::make_pair(n, mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        MultiSeries total(q.ctx);
        for (const auto& nu : interlacing_restrictions(mu, static_cast<int>(n) - 1)) {
            MultiSeries rest = eval(nu, n - 1);
            if (rest.is_zero()) continue;
            total += skew_q_one_var(mu, nu, q.ctx, q.vars[n - 1]) * rest;
        }
        memo.emplace(key, total);
        return total;
    }
};

}  // namespace

MultiSeries schur_q_branching(const StrictPartition& mu, const QContext& q) {
    Branching b{q, {}};
    return b.eval(mu, q.vars.size());
}

}  // namespace iboson
