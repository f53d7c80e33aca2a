#include "iboson/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <thread>

#include "iboson/lattice.hpp"
#include "iboson/plane_partition.hpp"

namespace iboson {

namespace {

std::string fnv_hex(const std::string& text) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string chain(const std::string& acc, const std::string& next) {
    return acc.empty() ? next : fnv_hex(acc + "|" + next);
}

}  // namespace

void Outcome::fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
}

void Outcome::compare(const MultiSeries& lhs, const MultiSeries& rhs, const std::string& label) {
    lhs_digest = chain(lhs_digest, digest(lhs));
    rhs_digest = chain(rhs_digest, digest(rhs));
    if (lhs == rhs) return;
    auto m = first_difference(lhs, rhs);
    std::string mono = m ? lhs.context()->monomial_str(*m) : "?";
    if (mono.empty()) mono = "1";
    std::string w = (label.empty() ? "" : label + ": ") + "monomial " + mono;
    if (m) w += " lhs=" + lhs.coefficient(*m).str() + " rhs=" + rhs.coefficient(*m).str();
    fail(std::move(w));
}

const CheckInfo& find_check(const std::string& name) {
    for (const auto& c : check_registry())
        if (c.name == name) return c;
    throw UsageError("unknown check '" + name + "'");
}

nlohmann::json resolve_params(const CheckInfo& info, const nlohmann::json& params) {
    nlohmann::json out = info.defaults;
    if (params.is_null()) return out;
    if (!params.is_object()) throw UsageError(info.name + ": params must be an object");
    for (const auto& [k, v] : params.items()) {
        if (!out.contains(k)) throw UsageError(info.name + ": unknown parameter '" + k + "'");
        out[k] = v;
    }
    return out;
}

std::vector<CheckSpec> default_suite(int order) {
    if (order < 0) throw UsageError("suite order must be non-negative");
    using nlohmann::json;
    int w = std::min(order, 6);
    std::vector<CheckSpec> s;
    s.push_back({"figure", json::object()});
    s.push_back({"path-exponent", {{"box", {3, 3, 4}}}});
    s.push_back({"schur-q", {{"box", {3, 5}}, {"vars", {1, 2, 3}}}});
    for (auto dims : {json{1, 1, 1, 1}, json{2, 1, 2, 1}, json{2, 2, 3, 3}, json{0, 0, 2, 2}})
        s.push_back({"scalar-product", {{"dims", dims}, {"degree", order}}});
    s.push_back({"rtt", {{"max_m", 3}, {"points", 20}}});
    s.push_back({"bc-commute", {{"max_m", 4}}});
    s.push_back({"bc-routes", {{"max_m", 4}}});
    s.push_back({"admissible-interlacing", {{"max_m", 4}}});
    s.push_back({"vacuum-b-products", {{"n", 2}, {"m", 3}}});
    s.push_back({"skew-q-weights", {{"m", 4}}});
    s.push_back({"fock-pairing", {{"weight", 4}}});
    s.push_back({"gamma-commutation", {{"weight", w}, {"cap", w}}});
    s.push_back({"gamma-duality", {{"weight", w}}});
    s.push_back({"mode-conjugation", {{"modes", 4}, {"order", std::min(order, 4)}}});
    s.push_back({"lattice-gamma-minus", {{"m", order}, {"degree", order}}});
    s.push_back({"strict-buc", {{"order", order}}});
    s.push_back({"macmahon", {{"order", order}}});
    s.push_back({"infinite-lattice", {{"n1", 1}, {"n2", 1}, {"m", order}, {"degree", order}}});
    s.push_back({"stabilization", {{"n1", 1}, {"n2", 1}, {"max_degree", order}}});
    return s;
}

std::vector<Verdict> run_suite(const std::vector<CheckSpec>& specs, unsigned long long seed, int threads) {
    std::vector<const CheckInfo*> infos;
    std::vector<nlohmann::json> params;
    for (const auto& s : specs) {
        infos.push_back(&find_check(s.name));
        params.push_back(resolve_params(*infos.back(), s.params));
    }
    std::vector<Verdict> out(specs.size());
    std::vector<std::exception_ptr> usage(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            Verdict& v = out[i];
            v.name = specs[i].name;
            v.params = params[i];
            auto t0 = std::chrono::steady_clock::now();
            try {
                Outcome o = infos[i]->run(params[i], seed);
                v.pass = o.pass;
                v.lhs_digest = o.lhs_digest;
                v.rhs_digest = o.rhs_digest;
                v.witness = o.pass ? std::nullopt : std::optional<std::string>(o.witness.value_or("mismatch"));
                v.detail = o.detail;
            } catch (const UsageError&) {
                usage[i] = std::current_exception();
            } catch (const std::exception& e) {
                v.pass = false;
                v.witness = std::string("error: ") + e.what();
            }
            auto t1 = std::chrono::steady_clock::now();
            v.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
    };
    int n = std::max(1, std::min<int>(threads, static_cast<int>(specs.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : usage)
        if (e) std::rethrow_exception(e);
    return out;
}

bool all_pass(const std::vector<Verdict>& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j{{"name", v.name},       {"params", v.params},   {"pass", v.pass},
                     {"lhs", v.lhs_digest},  {"rhs", v.rhs_digest},  {"detail", v.detail},
                     {"millis", v.millis}};
    if (v.witness) j["witness"] = *v.witness;
    return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
    Verdict v;
    v.name = j.at("name").get<std::string>();
    v.params = j.at("params");
    v.pass = j.at("pass").get<bool>();
    v.lhs_digest = j.value("lhs", "");
    v.rhs_digest = j.value("rhs", "");
    v.detail = j.value("detail", "");
    v.millis = j.value("millis", 0.0);
    if (j.contains("witness")) v.witness = j.at("witness").get<std::string>();
    return v;
}

nlohmann::json report_json(const std::vector<Verdict>& verdicts, unsigned long long seed) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : verdicts) arr.push_back(to_json(v));
    return {{"schema", kReportSchema}, {"seed", seed}, {"verdicts", arr}};
}

nlohmann::json series_to_json(const MultiSeries& s) {
    std::vector<const MultiSeries::Terms::value_type*> order;
    for (const auto& t : s.terms()) order.push_back(&t);
    auto deg = [](const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); };
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        int da = deg(a->first), db = deg(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    nlohmann::json terms = nlohmann::json::array();
    for (auto* t : order)
        terms.push_back({{"exponents", t->first}, {"coefficient", {t->second.a().get_str(), t->second.b().get_str()}}});
    return {{"variables", s.context()->names()}, {"terms", terms}};
}

MultiSeries series_from_json(const nlohmann::json& j, SeriesContextPtr ctx) {
    if (j.at("variables").get<std::vector<std::string>>() != ctx->names())
        throw UsageError("series variables do not match the context");
    MultiSeries out(ctx);
    for (const auto& t : j.at("terms")) {
        auto c = t.at("coefficient").get<std::vector<std::string>>();
        if (c.size() != 2) throw UsageError("series coefficient must be [a, b]");
        Rational a(c[0]), b(c[1]);
        a.canonicalize();
        b.canonicalize();
        out.add_term(t.at("exponents").get<Monomial>(), QSqrt2(a, b));
    }
    return out;
}

// ---- product formulas and their enumeration oracles ----

namespace {

SeriesContextPtr pq_context(int order) { return SeriesContext::uniform({"p", "q"}, kUnbounded, order); }

MultiSeries one_minus(const SeriesContextPtr& ctx, std::size_t var, int n, int sign) {
    MultiSeries s = MultiSeries::one(ctx);
    s += MultiSeries::variable(ctx, var, n).scale(QSqrt2(sign));
    return s;
}

MultiSeries power(const MultiSeries& s, int e) {
    MultiSeries out = MultiSeries::one(s.context());
    for (int i = 0; i < e; ++i) out *= s;
    return out;
}

void plane_partitions_rec(const std::vector<int>& above, int budget, int used, std::vector<long long>& counts) {
    // Choose the next row: weakly decreasing, bounded entrywise by the row above, non-empty.
    std::vector<int> row;
    std::function<void(std::size_t, int, int)> fill = [&](std::size_t j, int bound, int left) {
        if (!row.empty()) {
            counts[static_cast<std::size_t>(used + (budget - left))] += 1;
            plane_partitions_rec(row, left, used + (budget - left), counts);
        }
        if (j >= above.size()) return;
        int hi = std::min({bound, above[j], left});
        for (int v = 1; v <= hi; ++v) {
            row.push_back(v);
            fill(j + 1, v, left - v);
            row.pop_back();
        }
    };
    fill(0, budget, budget);
}

}  // namespace

std::vector<long long> plane_partition_counts(int order) {
    if (order < 0) throw UsageError("order must be non-negative");
    std::vector<long long> counts(static_cast<std::size_t>(order) + 1, 0);
    counts[0] = 1;
    // The first row may be as long as the weight allows.
    plane_partitions_rec(std::vector<int>(static_cast<std::size_t>(order), order), order, 0, counts);
    return counts;
}

MultiSeries buc_macmahon_series(int order) {
    if (order < 0) throw UsageError("order must be non-negative");
    auto ctx = pq_context(order);
    MultiSeries den = MultiSeries::one(ctx);
    for (std::size_t var = 0; var < 2; ++var)
        for (int n = 1; n <= order; ++n) den *= power(one_minus(ctx, var, n, -1), n);
    return den.invert_unit();
}

MultiSeries strict_buc_series(int order) {
    if (order < 0) throw UsageError("order must be non-negative");
    auto ctx = pq_context(order);
    MultiSeries num = MultiSeries::one(ctx), den = MultiSeries::one(ctx);
    for (std::size_t var = 0; var < 2; ++var)
        for (int n = 1; n <= order; ++n) {
            num *= power(one_minus(ctx, var, n, 1), n);
            den *= power(one_minus(ctx, var, n, -1), n);
        }
    return num * den.invert_unit();
}

namespace {

MultiSeries pair_series(const std::vector<QSqrt2>& a, int order) {
    auto ctx = pq_context(order);
    MultiSeries out(ctx);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            out.add_term({i, j}, a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)]);
    return out;
}

}  // namespace

MultiSeries macmahon_enumeration(int order) {
    auto counts = plane_partition_counts(order);
    std::vector<QSqrt2> a;
    for (long long c : counts) a.emplace_back(Rational(static_cast<long>(c)));
    return pair_series(a, order);
}

MultiSeries strict_buc_enumeration(int order) {
    if (order < 0) throw UsageError("order must be non-negative");
    std::vector<QSqrt2> a(static_cast<std::size_t>(order) + 1, QSqrt2(0));
    for (const auto& pi : enumerate_boxed_strict(order, order, order, order))
        a[static_cast<std::size_t>(pi.weight())] += pow2(path_exponent(pi, PathMethod::Regions));
    return pair_series(a, order);
}

MultiSeries infinite_lattice_product(int n1, int n2, int total_degree) {
    ScalarProductSetup s = make_scalar_product_setup(n1, n2, 0, 0, total_degree);
    MultiSeries num = MultiSeries::one(s.ctx), den = MultiSeries::one(s.ctx);
    auto factor = [&](std::size_t a, std::size_t b) {
        Monomial m(s.ctx->size(), 0);
        m[a] = m[b] = 1;
        MultiSeries p = MultiSeries::one(s.ctx), q = MultiSeries::one(s.ctx);
        p.add_term(m, QSqrt2(1));
        q.add_term(m, QSqrt2(-1));
        num *= p;
        den *= q;
    };
    for (auto j : s.x)
        for (auto l : s.z) factor(j, l);
    for (auto j : s.y)
        for (auto k : s.v) factor(j, k);
    return num * den.invert_unit();
}

}  // namespace iboson
