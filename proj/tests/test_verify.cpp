#include <catch_amalgamated.hpp>

#include "iboson/plane_partition.hpp"
#include "iboson/verify.hpp"

using namespace iboson;
using nlohmann::json;

namespace {

std::string strip_millis(json report) {
    for (auto& v : report["verdicts"]) v.erase("millis");
    return report.dump();
}

}  // namespace

TEST_CASE("plane partition counts") {
    CHECK(plane_partition_counts(6) == std::vector<long long>{1, 1, 3, 6, 13, 24, 48});
}

TEST_CASE("MacMahon double product") {
    MultiSeries m = buc_macmahon_series(4);
    CHECK(m.coefficient({1, 0}) == QSqrt2(1));
    CHECK(m.coefficient({2, 0}) == QSqrt2(3));
    CHECK(m.coefficient({0, 3}) == QSqrt2(6));
    CHECK(m.coefficient({1, 2}) == QSqrt2(3));
    CHECK(m == macmahon_enumeration(4));
}

TEST_CASE("strict product against weighted enumeration") {
    MultiSeries s = strict_buc_series(5);
    const long known[] = {1, 2, 6, 16, 38};
    for (int w = 0; w <= 4; ++w) {
        CHECK(s.coefficient({0, w}) == QSqrt2(known[w]));
        CHECK(s.coefficient({w, 0}) == QSqrt2(known[w]));
    }
    // Weight 3 by hand: 2^{p(pi)} summed over strict plane partitions of 3.
    QSqrt2 by_hand(0);
    for (const auto& pi : enumerate_boxed_strict(3, 3, 3, 3))
        if (pi.weight() == 3) by_hand += pow2(path_exponent(pi, PathMethod::Formula));
    CHECK(by_hand == QSqrt2(16));
    CHECK(s == strict_buc_enumeration(5));
}

TEST_CASE("series json round trip") {
    auto ctx = SeriesContext::uniform({"a", "b"}, 3);
    MultiSeries s = MultiSeries::monomial(ctx, {1, 2}, QSqrt2(Rational(1, 3), Rational(-2))) +
                    MultiSeries::constant(ctx, QSqrt2(5));
    json j = series_to_json(s);
    CHECK(j["variables"] == json({"a", "b"}));
    CHECK(series_from_json(j, ctx) == s);
    CHECK(series_from_json(series_to_json(MultiSeries(ctx)), ctx).is_zero());
}

TEST_CASE("registry and parameter resolution") {
    CHECK_THROWS_AS(find_check("no-such-check"), UsageError);
    const CheckInfo& sp = find_check("scalar-product");
    json p = resolve_params(sp, {{"dims", {2, 1, 2, 1}}});
    CHECK(p["dims"] == json({2, 1, 2, 1}));
    CHECK(p["corrupt"] == false);
    CHECK_THROWS_AS(resolve_params(sp, {{"bogus", 1}}), UsageError);
    for (const auto& spec : default_suite(4)) CHECK_NOTHROW(find_check(spec.name));
}

TEST_CASE("suite runner basics") {
    CHECK(run_suite({}).empty());
    CHECK(all_pass({}));
    CHECK_THROWS_AS(run_suite({{"no-such-check", json::object()}}), UsageError);
    CHECK_THROWS_AS(run_suite({{"figure", {{"bogus", 1}}}}), UsageError);

    auto v = run_suite({{"path-exponent", {{"box", {3, 3, 4}}}}, {"figure", json::object()}});
    REQUIRE(v.size() == 2);
    CHECK(v[0].name == "path-exponent");
    CHECK(v[1].name == "figure");
    CHECK(all_pass(v));
    CHECK_FALSE(v[0].witness);
}

TEST_CASE("a corrupted scalar product is caught with a witness") {
    auto v = run_suite({{"scalar-product", {{"dims", {1, 1, 1, 1}}, {"corrupt", true}}}});
    REQUIRE(v.size() == 1);
    CHECK_FALSE(v[0].pass);
    REQUIRE(v[0].witness);
    CHECK(v[0].witness->find("x1*z1") != std::string::npos);
    CHECK_FALSE(all_pass(v));
}

TEST_CASE("verdict json round trip and report shape") {
    auto v = run_suite({{"scalar-product", {{"dims", {1, 1, 1, 1}}, {"corrupt", true}}}, {"figure", json::object()}}, 7);
    for (const auto& x : v) {
        Verdict back = verdict_from_json(to_json(x));
        CHECK(to_json(back) == to_json(x));
    }
    json r = report_json(v, 7);
    CHECK(r["schema"] == kReportSchema);
    CHECK(r["seed"] == 7);
    CHECK(r["verdicts"].size() == 2);
    CHECK(r["verdicts"][0].contains("witness"));
    CHECK_FALSE(r["verdicts"][1].contains("witness"));
}

TEST_CASE("reports do not depend on the thread count") {
    auto specs = default_suite(3);
    json one = report_json(run_suite(specs, kDefaultSeed, 1), kDefaultSeed);
    json many = report_json(run_suite(specs, kDefaultSeed, 8), kDefaultSeed);
    CHECK(strip_millis(one) == strip_millis(many));
    for (const auto& v : one["verdicts"]) CHECK(v["pass"] == true);
}
