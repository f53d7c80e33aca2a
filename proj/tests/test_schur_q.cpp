#include <catch_amalgamated.hpp>

#include <numeric>

#include "iboson/schur_q.hpp"

using namespace iboson;

namespace {

StrictPartition sp(std::vector<int> p) { return StrictPartition(std::move(p)); }

QContext vars(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return QContext::of(SeriesContext::uniform(names, kUnbounded), names);
}

MultiSeries mono(const QContext& q, Monomial m, long c) { return MultiSeries::monomial(q.ctx, std::move(m), QSqrt2(c)); }

}  // namespace

TEST_CASE("one-row functions") {
    QContext one = vars(1), two = vars(2);
    CHECK(q_one_row(0, one) == MultiSeries::one(one.ctx));
    CHECK(q_one_row(1, one) == mono(one, {1}, 2));
    CHECK(q_one_row(2, two) == mono(two, {2, 0}, 2) + mono(two, {0, 2}, 2) + mono(two, {1, 1}, 4));
    // prod (1+x_i k)/(1-x_i k) has coefficient 2 x^m for every m >= 1 in one variable.
    for (int m = 1; m <= 6; ++m) CHECK(q_one_row(m, one) == mono(one, {m}, 2));
}

TEST_CASE("Pfaffian Schur Q examples") {
    QContext one = vars(1);
    CHECK(schur_q_pfaffian(sp({1}), one) == mono(one, {1}, 2));
    CHECK(schur_q_pfaffian(sp({2, 1}), one).is_zero());
    CHECK(schur_q_pfaffian(sp({}), vars(3)) == MultiSeries::one(vars(3).ctx));
    QContext two = vars(2);
    // Q_(2,1)(x1,x2) = q2 q1 - 2 q3 = 4 x1^2 x2 + 4 x1 x2^2
    CHECK(schur_q_pfaffian(sp({2, 1}), two) == mono(two, {2, 1}, 4) + mono(two, {1, 2}, 4));
}

TEST_CASE("skew one-variable examples") {
    auto ctx = SeriesContext::uniform({"x"}, kUnbounded);
    CHECK(skew_q_one_var(sp({5, 2, 1}), sp({4, 1}), ctx, 0) == MultiSeries::monomial(ctx, {3}, QSqrt2(4)));
    CHECK(skew_q_one_var(sp({3, 1}), sp({3, 1}), ctx, 0) == MultiSeries::one(ctx));
    CHECK(skew_q_one_var(sp({1}), sp({2}), ctx, 0).is_zero());
}

TEST_CASE("branching examples") {
    QContext two = vars(2);
    CHECK(schur_q_branching(sp({1}), two) == mono(two, {1, 0}, 2) + mono(two, {0, 1}, 2));
    QContext one = vars(1);
    for (int m = 1; m <= 5; ++m) CHECK(schur_q_branching(sp({m}), one) == mono(one, {m}, 2));
    CHECK(schur_q_branching(sp({}), vars(2)) == MultiSeries::one(two.ctx));
    CHECK(schur_q_branching(sp({}), vars(0)) == MultiSeries::one(vars(0).ctx));
}

TEST_CASE("Pfaffian and branching agree on the [3,5] box") {
    for (int n = 1; n <= 3; ++n) {
        QContext q = vars(n);
        for (const auto& mu : strict_partitions_in_box(3, 5)) CHECK(schur_q_pfaffian(mu, q) == schur_q_branching(mu, q));
    }
}

TEST_CASE("Schur Q symmetry, degree and integrality") {
    for (int n = 2; n <= 3; ++n) {
        QContext q = vars(n);
        QContext rev{q.ctx, std::vector<std::size_t>(q.vars.rbegin(), q.vars.rend())};
        for (const auto& mu : strict_partitions_in_box(3, 4)) {
            MultiSeries s = schur_q_pfaffian(mu, q);
            CHECK(s == schur_q_pfaffian(mu, rev));
            CHECK(s.all_rational_integers());
            for (const auto& [m, c] : s.terms()) CHECK(std::accumulate(m.begin(), m.end(), 0) == mu.weight());
            if (mu.length() > n) CHECK(s.is_zero());
        }
    }
}

TEST_CASE("Schur Q inside a truncated context") {
    std::vector<std::string> names{"a", "x1", "x2"};
    auto ctx = SeriesContext::make(names, {kUnbounded, kUnbounded, kUnbounded}, 4);
    QContext q = QContext::of(ctx, {"x1", "x2"});
    MultiSeries full = schur_q_pfaffian(sp({3, 1}), vars(2)).rebase(ctx);
    CHECK(schur_q_pfaffian(sp({3, 1}), q) == full);
    CHECK(schur_q_pfaffian(sp({4, 1}), q).is_zero());
}
