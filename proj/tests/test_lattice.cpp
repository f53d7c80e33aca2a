#include <catch_amalgamated.hpp>

#include "iboson/lattice.hpp"
#include "iboson/monodromy.hpp"

using namespace iboson;

namespace {

LatticeConfig cfg(int species, std::vector<int> occ) { return LatticeConfig(species, std::move(occ)); }

LatticeVector ket1(const SeriesContextPtr& ctx, const LatticeConfig& c, int n0_cap = kUnbounded) {
    return LatticeVector::basis({c.size(), 0, n0_cap}, ctx, c, LatticeConfig::vacuum(2, 0));
}

bool integral(const LatticeVector& v) {
    for (const auto& [k, c] : v.terms())
        if (!c.all_rational_integers()) return false;
    return true;
}

}  // namespace

TEST_CASE("config text form") {
    LatticeConfig c = cfg(1, {2, 0, 1});
    CHECK(c.str() == "species:1 2,0,1");
    CHECK(LatticeConfig::parse("species:1 2,0,1") == c);
    CHECK(LatticeConfig::parse(cfg(2, {0, 1, 1, 0}).str()) == cfg(2, {0, 1, 1, 0}));
    CHECK_THROWS_AS(LatticeConfig::parse("species:1 0,2"), UsageError);
    CHECK_THROWS_AS(LatticeConfig::parse("species:3 0"), UsageError);
    CHECK_THROWS_AS(LatticeConfig::parse("1 0,1"), UsageError);
    CHECK_THROWS_AS(cfg(1, {0, 2}), DomainError);
    CHECK(c.particle_number() == 3);
}

TEST_CASE("single-mode actions") {
    const QSqrt2 r2 = QSqrt2::sqrt2(), ir2 = QSqrt2::inv_sqrt2();
    // Exclusion on sites >= 1.
    CHECK_FALSE(act_mode(ModeOp::Create, 1, cfg(1, {0, 1}), Side::Ket, kUnbounded));
    auto a = act_mode(ModeOp::Annihilate, 1, cfg(1, {0, 1}), Side::Ket, kUnbounded);
    REQUIRE(a);
    CHECK(a->config == cfg(1, {0, 0}));
    CHECK(a->factor == ir2);
    auto c = act_mode(ModeOp::Create, 2, cfg(1, {0, 1, 0}), Side::Ket, kUnbounded);
    REQUIRE(c);
    CHECK(c->factor == r2);

    // Site 0 as printed: phi_0 kills odd n0.
    CHECK_FALSE(act_mode(ModeOp::Annihilate, 0, cfg(1, {1}), Side::Ket, kUnbounded, Site0Rule::AsPrinted));
    auto p2 = act_mode(ModeOp::Annihilate, 0, cfg(1, {2}), Side::Ket, kUnbounded, Site0Rule::AsPrinted);
    REQUIRE(p2);
    CHECK(p2->factor == r2);
    // Default rule: the partner of the bra-side phi_0^dagger.
    auto d1 = act_mode(ModeOp::Annihilate, 0, cfg(1, {1}), Side::Ket, kUnbounded);
    REQUIRE(d1);
    CHECK(d1->config == cfg(1, {0}));
    CHECK(d1->factor == r2);
    CHECK_FALSE(act_mode(ModeOp::Annihilate, 0, cfg(1, {2}), Side::Ket, kUnbounded));
    CHECK_FALSE(act_mode(ModeOp::Annihilate, 0, cfg(1, {0}), Side::Ket, kUnbounded));

    // Bra side.
    auto b0 = act_mode(ModeOp::Annihilate, 0, cfg(1, {3}), Side::Bra, kUnbounded);
    REQUIRE(b0);
    CHECK(b0->config == cfg(1, {4}));
    CHECK(b0->factor == ir2);
    auto b0d = act_mode(ModeOp::Create, 0, cfg(1, {3}), Side::Bra, kUnbounded);
    REQUIRE(b0d);
    CHECK(b0d->factor == r2);
    CHECK_FALSE(act_mode(ModeOp::Create, 0, cfg(1, {2}), Side::Bra, kUnbounded));
    CHECK_FALSE(act_mode(ModeOp::Create, 1, cfg(1, {0, 0}), Side::Bra, kUnbounded));
    CHECK_FALSE(act_mode(ModeOp::Annihilate, 1, cfg(1, {0, 1}), Side::Bra, kUnbounded));

    // Number operator and the n0 cap.
    auto n = act_mode(ModeOp::Number, 0, cfg(1, {3, 1}), Side::Ket, kUnbounded);
    REQUIRE(n);
    CHECK(n->factor == QSqrt2(3));
    bool overflow = false;
    CHECK_FALSE(act_mode(ModeOp::Create, 0, cfg(1, {2}), Side::Ket, 2, Site0Rule::AlgebraConsistent, &overflow));
    CHECK(overflow);
    CHECK_THROWS_AS(act_mode(ModeOp::Create, 3, cfg(1, {0, 0}), Side::Ket, kUnbounded), UsageError);
}

TEST_CASE("deformed commutator [phi, phi^dagger] = (-1)^N on kets") {
    for (const auto& c : all_configs(1, 2, 5)) {
        for (int site = 0; site <= 2; ++site) {
            auto apply = [&](ModeOp first, ModeOp second) -> std::optional<ModeImage> {
                auto x = act_mode(first, site, c, Side::Ket, kUnbounded);
                if (!x) return std::nullopt;
                auto y = act_mode(second, site, x->config, Side::Ket, kUnbounded);
                if (!y) return std::nullopt;
                return ModeImage{y->config, x->factor * y->factor};
            };
            QSqrt2 total(0);
            if (auto ac = apply(ModeOp::Create, ModeOp::Annihilate)) total += ac->factor;
            if (auto ca = apply(ModeOp::Annihilate, ModeOp::Create)) total -= ca->factor;
            CHECK(total == QSqrt2(c.n(site) % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("inner product examples") {
    auto ctx = SeriesContext::uniform({}, kUnbounded);
    LatticeShape s1{1, 0, kUnbounded};
    CHECK(inner_product(LatticeVector::vacuum(s1, ctx), LatticeVector::vacuum(s1, ctx)) == MultiSeries::one(ctx));
    auto n1 = LatticeVector::basis(s1, ctx, cfg(1, {0, 1}), LatticeConfig::vacuum(2, 0));
    CHECK(inner_product(n1, n1).constant_term() == QSqrt2(Rational(1, 2)));
    auto m0 = LatticeVector::basis(s1, ctx, cfg(1, {1, 0}), LatticeConfig::vacuum(2, 0));
    CHECK(inner_product(m0, m0).constant_term() == QSqrt2(2));
    auto m2 = LatticeVector::basis(s1, ctx, cfg(1, {2, 0}), LatticeConfig::vacuum(2, 0));
    CHECK(inner_product(m2, m2).is_zero());
    CHECK(inner_product(m0, n1).is_zero());
}

TEST_CASE("admissibility examples") {
    LatticeConfig n = cfg(1, {0, 1, 0});
    CHECK(is_admissible(cfg(1, {1, 1, 0}), n));
    CHECK_FALSE(is_admissible(n, n));
    CHECK_FALSE(is_admissible(cfg(1, {0, 1, 1}).with(0, 1), n));
    CHECK(is_admissible(cfg(1, {0, 1, 1}), n));
    CHECK(is_admissible(cfg(1, {0, 0, 1}), cfg(1, {0, 1, 0})) == false);
    CHECK(is_admissible(cfg(1, {1, 0, 1}), cfg(1, {0, 1, 0})));
}

TEST_CASE("admissible configurations: DFS agrees with the tail-sum test") {
    for (int m = 0; m <= 4; ++m) {
        auto targets = all_configs(1, m, 3);
        for (const auto& n : all_configs(1, m, 2)) {
            std::vector<LatticeConfig> expect;
            for (const auto& c : targets)
                if (is_admissible(c, n)) expect.push_back(c);
            CHECK(admissible_configs(n) == expect);
            for (const auto& c : expect) {
                auto mu = map_to_fock(c, LatticeConfig::vacuum(2, 0)).pair.first;
                auto nu = map_to_fock(n, LatticeConfig::vacuum(2, 0)).pair.first;
                CHECK(interlaces(mu, nu));
                CHECK(c.particle_number() == n.particle_number() + 1);
            }
        }
    }
}

TEST_CASE("map to Fock labels") {
    FockImage e = map_to_fock(LatticeConfig::vacuum(1, 3), LatticeConfig::vacuum(2, 2));
    CHECK(e.pair.first.empty());
    CHECK(e.pair.second.empty());
    CHECK(e.exponent == 0);
    FockImage f = map_to_fock(cfg(1, {5, 1, 0, 1}), cfg(2, {0, 0, 1}));
    CHECK(f.pair.first == StrictPartition({3, 1}));
    CHECK(f.pair.second == StrictPartition({2}));
    CHECK(f.exponent == -3);
}

TEST_CASE("B and C on the vacuum, M = 1") {
    auto ctx = SeriesContext::uniform({"x"}, kUnbounded);
    for (BCMethod m : {BCMethod::Combinatorial, BCMethod::Matrix}) {
        LatticeVector vac = ket1(ctx, LatticeConfig::vacuum(1, 1));
        LatticeVector expect = ket1(ctx, cfg(1, {1, 0}));
        expect.add({cfg(1, {0, 1}), LatticeConfig::vacuum(2, 0)}, MultiSeries::monomial(ctx, {1}, QSqrt2(2)));
        CHECK(apply_B(1, 0, vac, m) == expect);
        CHECK(apply_C(1, 0, vac, m) == expect);
    }
}

TEST_CASE("B and C commute with themselves, both species") {
    auto ctx = SeriesContext::uniform({"x", "y"}, kUnbounded);
    for (int m = 0; m <= 3; ++m)
        for (int species : {1, 2}) {
            LatticeShape shape{species == 1 ? m : 1, species == 2 ? m : 1, kUnbounded};
            for (const auto& c : all_configs(species, m, 2)) {
                LatticeConfig other = LatticeConfig::vacuum(species == 1 ? 2 : 1, 1);
                LatticeVector v = species == 1 ? LatticeVector::basis(shape, ctx, c, other)
                                               : LatticeVector::basis(shape, ctx, other, c);
                for (BCMethod meth : {BCMethod::Combinatorial, BCMethod::Matrix}) {
                    CHECK(apply_B(species, 0, apply_B(species, 1, v, meth), meth) ==
                          apply_B(species, 1, apply_B(species, 0, v, meth), meth));
                    CHECK(apply_C(species, 0, apply_C(species, 1, v, meth), meth) ==
                          apply_C(species, 1, apply_C(species, 0, v, meth), meth));
                }
                // Different species commute as well.
                CHECK(apply_B(1, 0, apply_B(2, 1, v, BCMethod::Combinatorial), BCMethod::Combinatorial) ==
                      apply_B(2, 1, apply_B(1, 0, v, BCMethod::Combinatorial), BCMethod::Combinatorial));
            }
        }
}

TEST_CASE("combinatorial and matrix routes agree; outputs are integral and add one particle") {
    auto ctx = SeriesContext::uniform({"x"}, kUnbounded);
    for (int m = 0; m <= 3; ++m)
        for (const auto& c : all_configs(1, m, 3)) {
            LatticeVector v = ket1(ctx, c);
            LatticeVector b = apply_B(1, 0, v, BCMethod::Combinatorial);
            CHECK(b == apply_B(1, 0, v, BCMethod::Matrix));
            CHECK(apply_C(1, 0, v, BCMethod::Combinatorial) == apply_C(1, 0, v, BCMethod::Matrix));
            CHECK(integral(b));
            for (const auto& [k, coeff] : b.terms()) CHECK(k.first.particle_number() == c.particle_number() + 1);
        }
}

TEST_CASE("B on a capped lattice flags dropped terms") {
    auto ctx = SeriesContext::uniform({"x"}, kUnbounded);
    LatticeVector v = ket1(ctx, cfg(1, {1, 0}), 1);
    LatticeVector b = apply_B(1, 0, v, BCMethod::Combinatorial);
    CHECK(b.truncated());
    CHECK_FALSE(apply_B(1, 0, ket1(ctx, cfg(1, {0, 0}), 1), BCMethod::Combinatorial).truncated());
}

TEST_CASE("number operator eigenvalues on basis vectors") {
    auto ctx = SeriesContext::uniform({}, kUnbounded);
    for (const auto& c : all_configs(1, 2, 3)) {
        LatticeVector v = ket1(ctx, c);
        for (int site = 0; site <= 2; ++site) {
            LatticeVector n = apply_mode(ModeOp::Number, 1, site, v, Side::Ket);
            LatticeVector expect(v.shape(), ctx);
            if (c.n(site)) expect.add({c, LatticeConfig::vacuum(2, 0)}, MultiSeries::constant(ctx, QSqrt2(c.n(site))));
            CHECK(n == expect);
        }
    }
}

TEST_CASE("RTT relation at rational points") {
    auto pts = random_points(2024, 20);
    REQUIRE(pts.size() == 20);
    for (const auto& [u, w] : pts) {
        CHECK(u != 0);
        CHECK(abs(u.get_num()) <= 7);
        CHECK(u.get_den() <= 7);
    }
    CHECK(random_points(5, 4) == random_points(5, 4));
    std::string witness;
    for (int i = 0; i <= 2; ++i)
        CHECK(verify_rtt_matrix(LMatrix{i, 1}.entries(), 2, pts, Side::Ket, Site0Rule::AlgebraConsistent, &witness));
    CHECK(verify_rtt(2, random_points(9, 5), Side::Ket));
    CHECK(verify_rtt(2, random_points(9, 5), Side::Bra));
    // x = y makes the middle R entries degenerate.
    std::vector<std::pair<Rational, Rational>> diag{{Rational(2, 3), Rational(2, 3)}, {Rational(1), Rational(-1)}};
    CHECK(verify_rtt(2, diag, Side::Ket));
}

TEST_CASE("the printed site-0 ket rule breaks the local RTT relation") {
    std::string witness;
    CHECK_FALSE(verify_rtt_matrix(LMatrix{0, 1}.entries(), 0, random_points(1, 3), Side::Ket, Site0Rule::AsPrinted,
                                  &witness));
    CHECK(witness.find("species:1 0") != std::string::npos);
    // Sites >= 1 do not involve the rule.
    CHECK(verify_rtt_matrix(LMatrix{1, 1}.entries(), 1, random_points(1, 3), Side::Ket, Site0Rule::AsPrinted));
}

TEST_CASE("B and the scalar product do not depend on the site-0 ket rule") {
    auto ctx = SeriesContext::uniform({"x"}, kUnbounded);
    const OperatorMatrix& t = monodromy(2, false);
    for (const auto& c : all_configs(1, 2, 3))
        for (const auto& [word, l] : t(0, 1)) {
            auto a = apply_word(word, c, Side::Ket, kUnbounded, Site0Rule::AlgebraConsistent);
            auto b = apply_word(word, c, Side::Ket, kUnbounded, Site0Rule::AsPrinted);
            CHECK(a.has_value() == b.has_value());
            if (a && b) CHECK(a->factor == b->factor);
        }
}

TEST_CASE("scalar product examples") {
    ScalarProductSetup s = make_scalar_product_setup(1, 1, 1, 1);
    MultiSeries one = MultiSeries::one(s.ctx);
    MultiSeries expect = (one + MultiSeries::monomial(s.ctx, {1, 1, 0, 0}, QSqrt2(2))) *
                         (one + MultiSeries::monomial(s.ctx, {0, 0, 1, 1}, QSqrt2(2)));
    for (SPRoute r : {SPRoute::Lattice, SPRoute::PlanePartition, SPRoute::SchurQ}) CHECK(scalar_product(s, r) == expect);
    CHECK(scalar_product(s, SPRoute::Lattice, BCMethod::Matrix) == expect);

    ScalarProductSetup e = make_scalar_product_setup(0, 0, 3, 2);
    for (SPRoute r : {SPRoute::Lattice, SPRoute::PlanePartition, SPRoute::SchurQ})
        CHECK(scalar_product(e, r) == MultiSeries::one(e.ctx));

    // One species, large M: 1 + 2 sum (x z)^m up to the cap.
    ScalarProductSetup g = make_scalar_product_setup(1, 0, 6, 0, 12);
    MultiSeries geo = MultiSeries::one(g.ctx);
    for (int m = 1; m <= 6; ++m) geo += MultiSeries::monomial(g.ctx, {m, m}, QSqrt2(2));
    CHECK(scalar_product(g, SPRoute::Lattice) == geo);
}

TEST_CASE("three scalar-product routes agree on small lattices") {
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 1; ++n2)
            for (int m1 = 0; m1 <= 2; ++m1)
                for (int m2 = 0; m2 <= 2; ++m2) {
                    ScalarProductSetup s = make_scalar_product_setup(n1, n2, m1, m2);
                    MultiSeries lat = scalar_product(s, SPRoute::Lattice);
                    CHECK(lat == scalar_product(s, SPRoute::PlanePartition));
                    CHECK(lat == scalar_product(s, SPRoute::SchurQ));
                    CHECK(lat.all_rational_integers());
                }
}
