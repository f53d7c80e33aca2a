#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iboson/qsqrt2.hpp"

namespace iboson {

inline constexpr int kUnbounded = -1;

using Monomial = std::vector<int>;

// Ordered variable names with per-variable exponent caps and an optional total-degree cap.
class SeriesContext {
public:
    static std::shared_ptr<const SeriesContext> make(std::vector<std::string> names,
                                                     std::vector<int> caps,
                                                     int total_cap = kUnbounded);
    // Every variable gets the same cap.
    static std::shared_ptr<const SeriesContext> uniform(std::vector<std::string> names, int cap,
                                                        int total_cap = kUnbounded);

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& caps() const { return caps_; }
    int total_cap() const { return total_cap_; }
    std::size_t size() const { return names_.size(); }

    bool has(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;
    bool within(const Monomial& m) const;
    // Largest exponent the variable may carry, taking the total cap into account.
    int effective_cap(std::size_t var) const;

    bool operator==(const SeriesContext& o) const {
        return names_ == o.names_ && caps_ == o.caps_ && total_cap_ == o.total_cap_;
    }

    std::string monomial_str(const Monomial& m) const;

private:
    SeriesContext() = default;
    std::vector<std::string> names_;
    std::vector<int> caps_;
    int total_cap_ = kUnbounded;
};

using SeriesContextPtr = std::shared_ptr<const SeriesContext>;

bool same_context(const SeriesContextPtr& a, const SeriesContextPtr& b);

// Truncated multivariate power series over Q(sqrt2). Terms beyond the caps are never stored,
// zero coefficients are never stored.
class MultiSeries {
public:
    using Terms = std::map<Monomial, QSqrt2>;

    explicit MultiSeries(SeriesContextPtr ctx);

    static MultiSeries constant(SeriesContextPtr ctx, const QSqrt2& c);
    static MultiSeries one(SeriesContextPtr ctx) { return constant(std::move(ctx), QSqrt2(1)); }
    static MultiSeries variable(SeriesContextPtr ctx, std::size_t var, int power = 1);
    static MultiSeries variable(SeriesContextPtr ctx, const std::string& name, int power = 1);
    static MultiSeries monomial(SeriesContextPtr ctx, Monomial exps, const QSqrt2& c);

    const SeriesContextPtr& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Adds c * m; ignored when m lies outside the caps.
    void add_term(const Monomial& m, const QSqrt2& c);
    QSqrt2 coefficient(const Monomial& m) const;
    QSqrt2 constant_term() const;

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator-=(const MultiSeries& o);
    MultiSeries& operator*=(const MultiSeries& o);
    MultiSeries& scale(const QSqrt2& c);

    friend MultiSeries operator+(MultiSeries l, const MultiSeries& r) { return l += r; }
    friend MultiSeries operator-(MultiSeries l, const MultiSeries& r) { return l -= r; }
    friend MultiSeries operator*(const MultiSeries& l, const MultiSeries& r);
    friend MultiSeries operator*(MultiSeries l, const QSqrt2& c) { return l.scale(c); }
    friend MultiSeries operator-(MultiSeries x) { return x.scale(QSqrt2(-1)); }

    bool operator==(const MultiSeries& o) const;

    // s * t = 1 up to the caps; the constant term must be nonzero.
    MultiSeries invert_unit() const;

    // Re-expresses the series over another context, matching variables by name. A variable
    // missing from the target must not occur; terms beyond the target caps are dropped.
    MultiSeries rebase(SeriesContextPtr target) const;

    // Multiplies every monomial by x_var^power.
    MultiSeries shifted(std::size_t var, int power) const;

    bool all_rational_integers() const;
    std::string str() const;

private:
    SeriesContextPtr ctx_;
    Terms terms_;
};

MultiSeries series_mul(const MultiSeries& lhs, const MultiSeries& rhs);
MultiSeries series_invert_unit(const MultiSeries& s);

// Lexicographically smallest monomial whose coefficients differ.
std::optional<Monomial> first_difference(const MultiSeries& a, const MultiSeries& b);

// Short stable fingerprint of a series: term count plus FNV-1a hash of the canonical rendering.
std::string digest(const MultiSeries& s);

}  // namespace iboson
