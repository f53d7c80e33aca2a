#include "iboson/series.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace iboson {

std::shared_ptr<const SeriesContext> SeriesContext::make(std::vector<std::string> names,
                                                         std::vector<int> caps, int total_cap) {
    if (names.size() != caps.size()) throw UsageError("series context: names and caps differ in length");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (caps[i] < kUnbounded) throw UsageError("series context: negative cap for " + names[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (names[i] == names[j]) throw UsageError("series context: duplicate variable " + names[i]);
    }
    if (total_cap < kUnbounded) throw UsageError("series context: negative total cap");
    std::shared_ptr<SeriesContext> ctx(new SeriesContext());
    ctx->names_ = std::move(names);
    ctx->caps_ = std::move(caps);
    ctx->total_cap_ = total_cap;
    return ctx;
}

std::shared_ptr<const SeriesContext> SeriesContext::uniform(std::vector<std::string> names, int cap,
                                                            int total_cap) {
    std::vector<int> caps(names.size(), cap);
    return make(std::move(names), std::move(caps), total_cap);
}

bool SeriesContext::has(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t SeriesContext::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw UsageError("unknown series variable " + name);
    return static_cast<std::size_t>(it - names_.begin());
}

bool SeriesContext::within(const Monomial& m) const {
    int total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) return false;
        if (caps_[i] != kUnbounded && m[i] > caps_[i]) return false;
        total += m[i];
    }
    return total_cap_ == kUnbounded || total <= total_cap_;
}

int SeriesContext::effective_cap(std::size_t var) const {
    int c = caps_.at(var);
    if (total_cap_ != kUnbounded && (c == kUnbounded || total_cap_ < c)) c = total_cap_;
    return c;
}

std::string SeriesContext::monomial_str(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names_[i];
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

bool same_context(const SeriesContextPtr& a, const SeriesContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

namespace {

void require_same(const SeriesContextPtr& a, const SeriesContextPtr& b) {
    if (!same_context(a, b)) throw UsageError("series operands live in different contexts");
}

}  // namespace

MultiSeries::MultiSeries(SeriesContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw UsageError("series requires a context");
}

MultiSeries MultiSeries::constant(SeriesContextPtr ctx, const QSqrt2& c) {
    MultiSeries s(std::move(ctx));
    s.add_term(Monomial(s.ctx_->size(), 0), c);
    return s;
}

MultiSeries MultiSeries::variable(SeriesContextPtr ctx, std::size_t var, int power) {
    MultiSeries s(std::move(ctx));
    if (var >= s.ctx_->size()) throw UsageError("variable index out of range");
    Monomial m(s.ctx_->size(), 0);
    m[var] = power;
    s.add_term(m, QSqrt2(1));
    return s;
}

MultiSeries MultiSeries::variable(SeriesContextPtr ctx, const std::string& name, int power) {
    std::size_t idx = ctx->index_of(name);
    return variable(std::move(ctx), idx, power);
}

MultiSeries MultiSeries::monomial(SeriesContextPtr ctx, Monomial exps, const QSqrt2& c) {
    MultiSeries s(std::move(ctx));
    if (exps.size() != s.ctx_->size()) throw UsageError("monomial arity mismatch");
    s.add_term(exps, c);
    return s;
}

void MultiSeries::add_term(const Monomial& m, const QSqrt2& c) {
    if (c.is_zero() || !ctx_->within(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QSqrt2 MultiSeries::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QSqrt2() : it->second;
}

QSqrt2 MultiSeries::constant_term() const { return coefficient(Monomial(ctx_->size(), 0)); }

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    require_same(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
    require_same(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiSeries& MultiSeries::scale(const QSqrt2& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiSeries operator*(const MultiSeries& l, const MultiSeries& r) {
    require_same(l.ctx_, r.ctx_);
    MultiSeries out(l.ctx_);
    const auto& ctx = *l.ctx_;
    std::size_t n = ctx.size();
    Monomial m(n);
    for (const auto& [ma, ca] : l.terms_) {
        for (const auto& [mb, cb] : r.terms_) {
            for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            if (!ctx.within(m)) continue;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

MultiSeries& MultiSeries::operator*=(const MultiSeries& o) {
    *this = *this * o;
    return *this;
}

bool MultiSeries::operator==(const MultiSeries& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

MultiSeries MultiSeries::invert_unit() const {
    QSqrt2 c0 = constant_term();
    if (c0.is_zero()) throw DomainError("series inverse: constant term is not a unit");
    QSqrt2 inv0 = c0.inverse();
    // s = c0 (1 + r) with r free of constant term; 1/s = c0^{-1} sum (-r)^j, and the caps make
    // r nilpotent whenever the truncated series ring is finite in the relevant directions.
    MultiSeries r(ctx_);
    for (const auto& [m, c] : terms_)
        if (std::any_of(m.begin(), m.end(), [](int e) { return e != 0; })) r.add_term(m, -(c * inv0));
    MultiSeries sum = MultiSeries::one(ctx_);
    MultiSeries power = MultiSeries::one(ctx_);
    const int guard = 100000;
    for (int j = 0; j < guard; ++j) {
        power = power * r;
        if (power.is_zero()) return sum.scale(inv0);
        sum += power;
    }
    throw DomainError("series inverse: caps do not bound the expansion");
}

MultiSeries MultiSeries::rebase(SeriesContextPtr target) const {
    MultiSeries out(target);
    std::vector<long> map(ctx_->size(), -1);
    for (std::size_t i = 0; i < ctx_->size(); ++i)
        if (target->has(ctx_->names()[i])) map[i] = static_cast<long>(target->index_of(ctx_->names()[i]));
    Monomial m(target->size());
    for (const auto& [src, c] : terms_) {
        std::fill(m.begin(), m.end(), 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i] == 0) continue;
            if (map[i] < 0) throw UsageError("rebase: variable " + ctx_->names()[i] + " absent from target");
            m[static_cast<std::size_t>(map[i])] = src[i];
        }
        out.add_term(m, c);
    }
    return out;
}

MultiSeries MultiSeries::shifted(std::size_t var, int power) const {
    MultiSeries out(ctx_);
    for (const auto& [m, c] : terms_) {
        Monomial n = m;
        n.at(var) += power;
        out.add_term(n, c);
    }
    return out;
}

bool MultiSeries::all_rational_integers() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

std::string MultiSeries::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto deg = [](const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); };
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        int da = deg(a->first), db = deg(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const QSqrt2& c = t->second;
        std::string mono = ctx_->monomial_str(t->first);
        bool negative = c.is_rational() && sgn(c.a()) < 0;
        QSqrt2 mag = negative ? -c : c;
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        bool unit = mag == QSqrt2(1);
        if (mono == "1") os << mag.str();
        else if (unit) os << mono;
        else os << mag.str() << "*" << mono;
    }
    return os.str();
}

MultiSeries series_mul(const MultiSeries& lhs, const MultiSeries& rhs) { return lhs * rhs; }

MultiSeries series_invert_unit(const MultiSeries& s) { return s.invert_unit(); }

std::optional<Monomial> first_difference(const MultiSeries& a, const MultiSeries& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) return ia->first;
        if (ia == ea || ib->first < ia->first) return ib->first;
        if (!(ia->second == ib->second)) return ia->first;
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

std::string digest(const MultiSeries& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& [m, c] : s.terms()) {
        std::string piece = s.context()->monomial_str(m) + "=" + c.str() + ";";
        for (unsigned char ch : piece) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    }
    std::ostringstream os;
    os << s.size() << ":" << std::hex << h;
    return os.str();
}

}  // namespace iboson
