#include <catch_amalgamated.hpp>

#include <random>

#include "iboson/pfaffian.hpp"
#include "iboson/qsqrt2.hpp"
#include "iboson/series.hpp"

using namespace iboson;

namespace {

QSqrt2 q(long a, long b = 0, long den = 1) { return QSqrt2(Rational(a, den), Rational(b, den)); }

QSqrt2 random_q(std::mt19937_64& rng) {
    auto r = [&] {
        Rational x(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1);
        x.canonicalize();
        return x;
    };
    return QSqrt2(r(), r());
}

MultiSeries random_series(std::mt19937_64& rng, const SeriesContextPtr& ctx, bool unit) {
    MultiSeries s(ctx);
    for (int t = 0; t < 6; ++t) {
        Monomial m(ctx->size());
        for (auto& e : m) e = static_cast<int>(rng() % 3);
        s.add_term(m, random_q(rng));
    }
    if (unit) {
        Monomial zero(ctx->size(), 0);
        if (s.coefficient(zero).is_zero()) s.add_term(zero, QSqrt2(1));
    }
    return s;
}

// Determinant by fraction-carrying Gaussian elimination over Q.
Rational det(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

}  // namespace

TEST_CASE("qsqrt2 arithmetic examples") {
    CHECK(qsqrt2_arith(ArithOp::Mul, q(1, 1), q(1, -1)) == q(-1));
    CHECK(qsqrt2_arith(ArithOp::Mul, QSqrt2::sqrt2(), QSqrt2::sqrt2()) == q(2));
    CHECK(qsqrt2_arith(ArithOp::Invert, q(1, 1)) == q(-1, 1));
    CHECK(qsqrt2_arith(ArithOp::Neg, q(3, -2)) == q(-3, 2));
    CHECK(qsqrt2_arith(ArithOp::Add, q(1, 2), q(3, 4)) == q(4, 6));
    CHECK(QSqrt2::inv_sqrt2() * QSqrt2::sqrt2() == q(1));
    CHECK_THROWS_AS(QSqrt2().inverse(), DomainError);
}

TEST_CASE("qsqrt2 canonical rationals") {
    QSqrt2 x(Rational(2, 4), Rational(-3, 6));
    CHECK(x.a() == Rational(1, 2));
    CHECK(x.a().get_den() == 2);
    CHECK(x == q(1, -1, 2));
    CHECK(pow2(-3) == q(1, 0, 8));
    CHECK(pow2(5) == q(32));
    CHECK(q(6).is_integer());
    CHECK_FALSE(q(1, 0, 2).is_integer());
}

TEST_CASE("qsqrt2 ring axioms and inverses on random elements") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        QSqrt2 a = random_q(rng), b = random_q(rng), c = random_q(rng);
        // (a+b sqrt2)(c+d sqrt2) = (ac+2bd) + (ad+bc) sqrt2
        QSqrt2 prod = a * b;
        CHECK(prod.a() == a.a() * b.a() + 2 * a.b() * b.b());
        CHECK(prod.b() == a.a() * b.b() + a.b() * b.a());
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == q(1));
    }
}

TEST_CASE("series multiplication examples") {
    auto ctx = SeriesContext::uniform({"t"}, 3);
    MultiSeries one = MultiSeries::one(ctx), t = MultiSeries::variable(ctx, "t");
    CHECK(series_mul(one + t, one - t) == one - MultiSeries::variable(ctx, "t", 2));

    MultiSeries s = one + t.scale(q(2)) + MultiSeries::variable(ctx, 0, 2).scale(q(2)) +
                    MultiSeries::variable(ctx, 0, 3).scale(q(2));
    CHECK(series_mul(s, one) == s);

    auto qc = SeriesContext::uniform({"q"}, 3);
    MultiSeries geom(qc), qv = MultiSeries::variable(qc, "q");
    for (int k = 0; k <= 3; ++k) geom.add_term({k}, q(1));
    MultiSeries expect(qc);
    expect.add_term({0}, q(1));
    for (int k = 1; k <= 3; ++k) expect.add_term({k}, q(2));
    CHECK(series_mul(MultiSeries::one(qc) + qv, geom) == expect);
}

TEST_CASE("series inversion examples") {
    auto ctx = SeriesContext::uniform({"t"}, 3);
    MultiSeries one = MultiSeries::one(ctx), t = MultiSeries::variable(ctx, "t");
    MultiSeries geom(ctx);
    for (int k = 0; k <= 3; ++k) geom.add_term({k}, q(1));
    CHECK(series_invert_unit(one - t) == geom);
    CHECK(series_invert_unit(one) == one);

    auto c4 = SeriesContext::uniform({"t"}, 4);
    MultiSeries o4 = MultiSeries::one(c4), t4 = MultiSeries::variable(c4, "t");
    MultiSeries ratio = (o4 + t4) * series_invert_unit(o4 - t4);
    CHECK(ratio.str() == "1 + 2*t + 2*t^2 + 2*t^3 + 2*t^4");
    CHECK_THROWS_AS(series_invert_unit(t), DomainError);
}

TEST_CASE("series caps and pruning") {
    auto ctx = SeriesContext::make({"x", "y"}, {2, kUnbounded}, 3);
    MultiSeries s(ctx);
    s.add_term({3, 0}, q(1));
    s.add_term({1, 3}, q(1));
    s.add_term({1, 2}, q(5));
    s.add_term({1, 2}, q(-5));
    CHECK(s.is_zero());
    s.add_term({2, 1}, q(1));
    CHECK(s.size() == 1);
    MultiSeries sq = s * s;
    CHECK(sq.is_zero());
    MultiSeries inv = (MultiSeries::variable(ctx, "y") + MultiSeries::one(ctx)).invert_unit();
    CHECK(inv.size() == 4);
    for (const auto& [m, c] : inv.terms()) {
        CHECK(ctx->within(m));
        CHECK_FALSE(c.is_zero());
    }
    auto other = SeriesContext::uniform({"x", "y"}, 5);
    CHECK_THROWS_AS(s + MultiSeries::one(other), UsageError);
}

TEST_CASE("series ring properties on random instances") {
    std::mt19937_64 rng(7);
    auto ctx = SeriesContext::make({"a", "b"}, {4, 3}, 5);
    for (int i = 0; i < 40; ++i) {
        MultiSeries a = random_series(rng, ctx, false), b = random_series(rng, ctx, false),
                    c = random_series(rng, ctx, false);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        MultiSeries u = random_series(rng, ctx, true);
        CHECK(u * u.invert_unit() == MultiSeries::one(ctx));
    }
}

TEST_CASE("series rebase and first difference") {
    auto small = SeriesContext::uniform({"y"}, kUnbounded);
    auto big = SeriesContext::uniform({"x", "y"}, 2);
    MultiSeries s = MultiSeries::variable(small, "y", 3) + MultiSeries::variable(small, "y", 1);
    MultiSeries r = s.rebase(big);
    CHECK(r == MultiSeries::variable(big, "y"));
    CHECK_THROWS_AS(MultiSeries::variable(big, "x").rebase(small), UsageError);

    MultiSeries a = MultiSeries::variable(big, "x") + MultiSeries::variable(big, "y");
    MultiSeries b = MultiSeries::variable(big, "y").scale(q(2)) + MultiSeries::variable(big, "x", 2);
    auto d = first_difference(a, b);
    REQUIRE(d);
    CHECK(*d == Monomial{0, 1});
    CHECK_FALSE(first_difference(a, a));
    CHECK(digest(a) == digest(MultiSeries::variable(big, "y") + MultiSeries::variable(big, "x")));
    CHECK(digest(a) != digest(b));
}

TEST_CASE("pfaffian examples") {
    auto ctx = SeriesContext::uniform({"a", "b", "c", "d", "e", "f"}, kUnbounded);
    auto v = [&](const char* n) { return MultiSeries::variable(ctx, n); };
    CHECK(pfaffian(SkewMatrix::from_upper(ctx, {{v("a")}})) == v("a"));
    auto four = SkewMatrix::from_upper(ctx, {{v("a"), v("b"), v("c")}, {v("d"), v("e")}, {v("f")}});
    CHECK(pfaffian(four) == v("a") * v("f") - v("b") * v("e") + v("c") * v("d"));
    CHECK(pfaffian(SkewMatrix::from_upper(ctx, {})) == MultiSeries::one(ctx));

    MultiSeries z(ctx);
    std::vector<std::vector<MultiSeries>> bad = {{z, v("a")}, {v("a"), z}};
    CHECK_THROWS_AS(SkewMatrix::from_full(ctx, bad), DomainError);
}

TEST_CASE("pfaffian squared equals determinant") {
    std::mt19937_64 rng(3);
    auto ctx = SeriesContext::uniform({}, kUnbounded);
    for (int n : {2, 4, 6}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
            std::vector<std::vector<MultiSeries>> upper;
            for (int i = 0; i < n; ++i) {
                std::vector<MultiSeries> row;
                for (int j = i + 1; j < n; ++j) {
                    Rational x(static_cast<long>(rng() % 15) - 7, static_cast<long>(rng() % 4) + 1);
                    x.canonicalize();
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
                    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -x;
                    row.push_back(MultiSeries::constant(ctx, QSqrt2(x)));
                }
                upper.push_back(row);
            }
            upper.pop_back();
            QSqrt2 pf = pfaffian(SkewMatrix::from_upper(ctx, upper)).constant_term();
            CHECK(pf * pf == QSqrt2(det(a)));
        }
    }
}
