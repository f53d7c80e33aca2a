#include <algorithm>
#include <map>
#include <set>

#include "iboson/fock.hpp"
#include "iboson/lattice.hpp"
#include "iboson/monodromy.hpp"
#include "iboson/plane_partition.hpp"
#include "iboson/schur_q.hpp"
#include "iboson/verify.hpp"

namespace iboson {

namespace {

using nlohmann::json;

int get_int(const json& p, const char* key, int lo, int hi) {
    const json& v = p.at(key);
    if (!v.is_number_integer()) throw UsageError(std::string("parameter '") + key + "' must be an integer");
    int x = v.get<int>();
    if (x < lo || x > hi)
        throw UsageError(std::string("parameter '") + key + "' must lie in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return x;
}

std::vector<int> get_ints(const json& p, const char* key, std::size_t count, int lo, int hi) {
    const json& v = p.at(key);
    if (!v.is_array() || (count && v.size() != count))
        throw UsageError(std::string("parameter '") + key + "' must be an array of " + std::to_string(count) +
                         " integers");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw UsageError(std::string("parameter '") + key + "' must hold integers");
        int x = e.get<int>();
        if (x < lo || x > hi)
            throw UsageError(std::string("parameter '") + key + "' entries must lie in [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
        out.push_back(x);
    }
    return out;
}

bool get_bool(const json& p, const char* key) {
    const json& v = p.at(key);
    if (!v.is_boolean()) throw UsageError(std::string("parameter '") + key + "' must be a boolean");
    return v.get<bool>();
}

const std::vector<std::vector<int>> kFigure = {{5, 4, 3, 2, 1}, {4, 2, 2, 1}, {3, 1, 1}, {1}};

Outcome check_figure(const json&, unsigned long long) {
    Outcome o;
    PlanePartition pi(kFigure);
    SlicedPP s = diagonal_slices(pi);
    if (s.center != std::vector<int>{5, 2, 1}) o.fail("center slice " + StrictPartition(s.center).str());
    if (pi.weight() != 30) o.fail("weight " + std::to_string(pi.weight()));
    int f = path_exponent(pi, PathMethod::Formula), r = path_exponent(pi, PathMethod::Regions);
    if (f != 11 || r != 11) o.fail("path exponent formula=" + std::to_string(f) + " regions=" + std::to_string(r));
    std::vector<std::size_t> xv, zv;
    std::vector<std::string> names;
    for (int i = 1; i <= 4; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= 5; ++i) names.push_back("z" + std::to_string(i));
    auto ctx = SeriesContext::uniform(names, kUnbounded);
    for (std::size_t i = 0; i < 4; ++i) xv.push_back(i);
    for (std::size_t i = 4; i < 9; ++i) zv.push_back(i);
    MultiSeries b = b_weight(pi, ctx, xv, zv);
    const auto& [mono, coeff] = *b.terms().begin();
    int plain = 0, weighted = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        plain += mono[i];
        weighted += static_cast<int>(2 * i + 1) * mono[i];
    }
    for (std::size_t i = 0; i < 5; ++i) {
        plain += mono[4 + i];
        weighted += static_cast<int>(2 * i + 1) * mono[4 + i];
    }
    if (weighted != 2 * pi.weight()) o.fail("weighted exponent sum " + std::to_string(weighted));
    if (plain != 2 * 8) o.fail("plain exponent sum " + std::to_string(plain));
    if (!(coeff == pow2(11))) o.fail("b_weight coefficient " + coeff.str());
    o.lhs_digest = "p=" + std::to_string(f);
    o.rhs_digest = "p=" + std::to_string(r);
    o.detail = "center (5,2,1), |pi|=30, p=11";
    return o;
}

Outcome check_path_exponent(const json& p, unsigned long long) {
    auto box = get_ints(p, "box", 3, 0, 8);
    Outcome o;
    auto all = enumerate_boxed_strict(box[0], box[1], box[2]);
    long long sf = 0, sr = 0;
    for (const auto& pi : all) {
        int f = path_exponent(pi, PathMethod::Formula), r = path_exponent(pi, PathMethod::Regions);
        sf += f;
        sr += r;
        if (f != r) o.fail("partition [" + pi.str() + "] formula=" + std::to_string(f) + " regions=" + std::to_string(r));
    }
    o.lhs_digest = "sum=" + std::to_string(sf);
    o.rhs_digest = "sum=" + std::to_string(sr);
    o.detail = std::to_string(all.size()) + " strict plane partitions";
    return o;
}

Outcome check_schur_q(const json& p, unsigned long long) {
    auto box = get_ints(p, "box", 2, 0, 6);
    auto vars = get_ints(p, "vars", 0, 0, 4);
    Outcome o;
    std::size_t count = 0;
    for (int n : vars) {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        auto ctx = SeriesContext::uniform(names, kUnbounded);
        QContext q = QContext::of(ctx, names);
        for (const auto& mu : strict_partitions_in_box(box[0], box[1])) {
            o.compare(schur_q_pfaffian(mu, q), schur_q_branching(mu, q), "mu=(" + mu.str() + ") n=" + std::to_string(n));
            ++count;
        }
        if (n >= 1) o.compare(schur_q_pfaffian(StrictPartition({1}), q), q_one_row(1, q), "Q_(1) vs q_1");
    }
    auto one = SeriesContext::uniform({"x1"}, kUnbounded);
    QContext q1 = QContext::of(one, {"x1"});
    o.compare(schur_q_pfaffian(StrictPartition({2, 1}), q1), MultiSeries(one), "Q_(2,1) in one variable");
    o.compare(schur_q_branching(StrictPartition({2, 1}), q1), MultiSeries(one), "Q_(2,1) branching in one variable");
    o.detail = std::to_string(count) + " (mu, n) pairs";
    return o;
}

Outcome check_scalar_product(const json& p, unsigned long long) {
    auto d = get_ints(p, "dims", 4, 0, 6);
    int degree = get_int(p, "degree", -1, 40);
    bool corrupt = get_bool(p, "corrupt");
    std::string m = p.at("method").get<std::string>();
    if (m != "combinatorial" && m != "matrix") throw UsageError("method must be combinatorial or matrix");
    BCMethod method = m == "matrix" ? BCMethod::Matrix : BCMethod::Combinatorial;
    ScalarProductSetup s = make_scalar_product_setup(d[0], d[1], d[2], d[3], degree);
    MultiSeries lat = scalar_product(s, SPRoute::Lattice, method);
    MultiSeries pp = scalar_product(s, SPRoute::PlanePartition);
    MultiSeries sq = scalar_product(s, SPRoute::SchurQ);
    if (corrupt && !s.x.empty()) {
        // Mutation hook: one extra unit on x1*z1, as if the weight of [[1]] were 3 instead of 2.
        Monomial mono(s.ctx->size(), 0);
        mono[s.x[0]] = mono[s.z[0]] = 1;
        pp.add_term(mono, QSqrt2(1));
    }
    Outcome o;
    o.compare(lat, pp, "lattice vs plane partitions");
    o.compare(pp, sq, "plane partitions vs Schur Q");
    o.detail = std::to_string(lat.size()) + " terms";
    return o;
}

Outcome check_rtt(const json& p, unsigned long long seed) {
    int max_m = get_int(p, "max_m", 0, 6);
    int count = get_int(p, "points", 1, 200);
    auto pts = random_points(seed, count);
    Outcome o;
    for (int m = 0; m <= max_m; ++m)
        for (Side side : {Side::Ket, Side::Bra}) {
            std::string w;
            if (!verify_rtt(m, pts, side, Site0Rule::AlgebraConsistent, &w))
                o.fail("M=" + std::to_string(m) + (side == Side::Ket ? " ket " : " bra ") + w);
        }
    o.detail = std::to_string(count) + " points, M=0.." + std::to_string(max_m) + ", kets and bras";
    return o;
}

std::string config_label(const LatticeConfig& c) { return "[" + c.str() + "]"; }

Outcome check_bc_commute(const json& p, unsigned long long) {
    int max_m = get_int(p, "max_m", 0, 6);
    Outcome o;
    auto ctx = SeriesContext::uniform({"x", "y"}, kUnbounded);
    std::size_t checked = 0;
    for (int m = 0; m <= max_m; ++m) {
        LatticeShape shape{m, 0, kUnbounded};
        for (const auto& c : all_configs(1, m, 2)) {
            LatticeVector v = LatticeVector::basis(shape, ctx, c, LatticeConfig::vacuum(2, 0));
            LatticeVector bxy = apply_B(1, 0, apply_B(1, 1, v, BCMethod::Matrix), BCMethod::Matrix);
            LatticeVector byx = apply_B(1, 1, apply_B(1, 0, v, BCMethod::Matrix), BCMethod::Matrix);
            if (!(bxy == byx)) o.fail("[B(x),B(y)] on " + config_label(c));
            LatticeVector cxy = apply_C(1, 0, apply_C(1, 1, v, BCMethod::Matrix), BCMethod::Matrix);
            LatticeVector cyx = apply_C(1, 1, apply_C(1, 0, v, BCMethod::Matrix), BCMethod::Matrix);
            if (!(cxy == cyx)) o.fail("[C(x),C(y)] on " + config_label(c));
            ++checked;
        }
    }
    o.detail = std::to_string(checked) + " basis vectors";
    return o;
}

Outcome check_bc_routes(const json& p, unsigned long long) {
    int max_m = get_int(p, "max_m", 0, 6);
    Outcome o;
    auto ctx = SeriesContext::uniform({"x"}, kUnbounded);
    std::size_t checked = 0;
    for (int m = 0; m <= max_m; ++m) {
        LatticeShape shape{m, 0, kUnbounded};
        for (const auto& c : all_configs(1, m, 2)) {
            LatticeVector v = LatticeVector::basis(shape, ctx, c, LatticeConfig::vacuum(2, 0));
            if (!(apply_B(1, 0, v, BCMethod::Combinatorial) == apply_B(1, 0, v, BCMethod::Matrix)))
                o.fail("B on " + config_label(c));
            if (!(apply_C(1, 0, v, BCMethod::Combinatorial) == apply_C(1, 0, v, BCMethod::Matrix)))
                o.fail("C on " + config_label(c));
            ++checked;
        }
    }
    o.detail = std::to_string(checked) + " basis vectors";
    return o;
}

Outcome check_admissible_interlacing(const json& p, unsigned long long) {
    int max_m = get_int(p, "max_m", 0, 8);
    Outcome o;
    std::size_t pairs = 0;
    for (int m = 0; m <= max_m; ++m) {
        auto targets = all_configs(1, m, 3);
        for (const auto& n : all_configs(1, m, 2)) {
            std::set<LatticeConfig> dfs;
            for (const auto& c : admissible_configs(n)) dfs.insert(c);
            for (const auto& c : targets) {
                bool adm = is_admissible(c, n);
                if (adm != (dfs.count(c) > 0)) o.fail("admissibility routes differ at " + config_label(c));
                if (!adm) continue;
                ++pairs;
                auto mu = map_to_fock(c, LatticeConfig::vacuum(2, 0)).pair.first;
                auto nu = map_to_fock(n, LatticeConfig::vacuum(2, 0)).pair.first;
                if (!interlaces(mu, nu)) o.fail(config_label(c) + " admissible to " + config_label(n) + " but not interlacing");
            }
        }
    }
    o.detail = std::to_string(pairs) + " admissible pairs";
    return o;
}

Outcome check_vacuum_b_products(const json& p, unsigned long long) {
    int nmax = get_int(p, "n", 0, 3);
    int mmax = get_int(p, "m", 0, 5);
    Outcome o;
    std::size_t labels = 0;
    for (int n = 0; n <= nmax; ++n)
        for (int m = 0; m <= mmax; ++m) {
            ScalarProductSetup s = make_scalar_product_setup(n, n, m, m);
            LatticeVector ket = LatticeVector::vacuum({m, m, kUnbounded}, s.ctx);
            for (auto z : s.z) ket = apply_B(1, z, ket, BCMethod::Combinatorial);
            for (auto v : s.v) ket = apply_B(2, v, ket, BCMethod::Combinatorial);
            FockVector f = to_fock(ket);
            QContext qz{s.ctx, s.z}, qv{s.ctx, s.v};
            std::map<StrictPartition, MultiSeries> qzs, qvs;
            auto box = strict_partitions_in_box(n, m);
            for (const auto& mu : box) {
                qzs.emplace(mu, schur_q_pfaffian(mu, qz).scale(pow2(-mu.length())));
                qvs.emplace(mu, schur_q_pfaffian(mu, qv).scale(pow2(-mu.length())));
            }
            std::set<FockLabel> seen;
            for (const auto& a : box)
                for (const auto& b : box) {
                    FockLabel l = FockLabel::canonical({a, b});
                    seen.insert(l);
                    o.compare(f.coefficient(l), qzs.at(a) * qvs.at(b),
                              "N=" + std::to_string(n) + " M=" + std::to_string(m) + " label " + l.str());
                    ++labels;
                }
            for (const auto& [l, c] : f.terms())
                if (!seen.count(l)) o.fail("label " + l.str() + " outside the box");
        }
    o.detail = std::to_string(labels) + " labels";
    return o;
}

Outcome check_skew_q_weights(const json& p, unsigned long long) {
    int mmax = get_int(p, "m", 0, 6);
    Outcome o;
    std::size_t count = 0;
    auto ctx = SeriesContext::uniform({"z"}, kUnbounded);
    for (int m = 0; m <= mmax; ++m) {
        LatticeShape shape{m, 0, kUnbounded};
        for (const auto& n : all_configs(1, m, 1)) {
            FockVector img = to_fock(apply_B(1, 0, LatticeVector::basis(shape, ctx, n, LatticeConfig::vacuum(2, 0)),
                                             BCMethod::Combinatorial));
            StrictPartition nu = map_to_fock(n, LatticeConfig::vacuum(2, 0)).pair.first;
            FockVector expect(ctx);
            for (const auto& mu : interlacing_extensions(nu, m, m)) {
                // The lattice image keeps fermion parity only through n0, so compare coefficients by label.
                MultiSeries w = skew_q_one_var(mu, nu, ctx, 0).scale(pow2(-mu.length()));
                expect.add(FockLabel::canonical({mu, StrictPartition()}), w);
            }
            for (const auto& [l, c] : expect.terms()) o.compare(img.coefficient(l), c, config_label(n) + " -> " + l.str());
            for (const auto& [l, c] : img.terms())
                if (expect.coefficient(l).is_zero()) o.fail(config_label(n) + " produced unexpected " + l.str());
            ++count;
        }
    }
    o.detail = std::to_string(count) + " basis vectors";
    return o;
}

Outcome check_fock_pairing(const json& p, unsigned long long) {
    int w = get_int(p, "weight", 0, 6);
    auto labels = labels_up_to_weight(w);
    auto ctx = SeriesContext::uniform({}, kUnbounded);
    Outcome o;
    for (const auto& a : labels)
        for (const auto& b : labels) {
            FockVector bra = FockVector::basis(ctx, a), ket = FockVector::basis(ctx, b);
            o.compare(fock_inner(bra, ket, PairingMethod::ClosedForm), fock_inner(bra, ket, PairingMethod::Clifford),
                      "<" + a.str() + "|" + b.str() + ">");
        }
    o.detail = std::to_string(labels.size()) + " labels";
    return o;
}

Outcome gamma_commutation_check(const json& p, unsigned long long) {
    int w = get_int(p, "weight", 0, 8);
    int cap = get_int(p, "cap", 0, 8);
    Outcome o;
    auto labels = labels_up_to_weight(w);
    for (const auto& l : labels)
        if (!iboson::check_gamma_commutation(cap, {l})) o.fail("state " + l.str());
    o.detail = std::to_string(labels.size()) + " states";
    return o;
}

Outcome check_gamma_duality(const json& p, unsigned long long) {
    int w = get_int(p, "weight", 0, 8);
    auto ctx = SeriesContext::uniform({"z", "v"}, w);
    auto labels = labels_up_to_weight(w);
    Outcome o;
    FockVector vac = FockVector::basis(ctx, FockLabel{});
    if (!(gamma_plus(vac, 0, 1) == vac)) o.fail("Gamma_+|0> != |0>");
    if (!(gamma_minus_bra(vac, 0, 1) == vac)) o.fail("<0|Gamma_- != <0|");
    std::map<FockLabel, FockVector> minus, plus;
    for (const auto& l : labels) {
        FockVector b = FockVector::basis(ctx, l);
        minus.emplace(l, gamma_minus(b, 0, 1, w));
        plus.emplace(l, gamma_plus(b, 0, 1));
    }
    for (const auto& mu : labels)
        for (const auto& nu : labels) {
            MultiSeries lhs = fock_inner(FockVector::basis(ctx, mu), minus.at(nu), PairingMethod::ClosedForm);
            MultiSeries rhs = fock_inner(FockVector::basis(ctx, nu), plus.at(mu), PairingMethod::ClosedForm);
            o.compare(lhs, rhs, "<" + mu.str() + "|G-|" + nu.str() + ">");
        }
    // Bra actions against ket actions.
    for (const auto& mu : labels) {
        FockVector bra = FockVector::basis(ctx, mu);
        FockVector gm = gamma_minus_bra(bra, 0, 1);
        FockVector gp = gamma_plus_bra(bra, 0, 1, w);
        for (const auto& nu : labels) {
            FockVector ket = FockVector::basis(ctx, nu);
            o.compare(fock_inner(gm, ket, PairingMethod::ClosedForm), fock_inner(bra, minus.at(nu), PairingMethod::ClosedForm),
                      "<" + mu.str() + "|G- bra vs ket");
            o.compare(fock_inner(gp, ket, PairingMethod::ClosedForm), fock_inner(bra, plus.at(nu), PairingMethod::ClosedForm),
                      "<" + mu.str() + "|G+ bra vs ket");
        }
    }
    o.detail = std::to_string(labels.size()) + " labels";
    return o;
}

Outcome mode_conjugation_check(const json& p, unsigned long long) {
    int modes = get_int(p, "modes", 0, 8);
    int order = get_int(p, "order", 0, 8);
    Outcome o;
    for (int i = 0; i <= modes; ++i)
        for (Flavor f : {Flavor::Phi, Flavor::PhiBar})
            if (!iboson::check_mode_conjugation(i, f, order))
                o.fail(std::string(f == Flavor::Phi ? "phi_" : "phibar_") + std::to_string(i));
    o.detail = "modes 0.." + std::to_string(modes) + ", both flavors";
    return o;
}

// M o B1(z) B2(v) |n1, n2> against 2^{-l(nu1)-l(nu2)} Gamma_-(z,v)|nu1, nu2>, both cut at degree
// `degree`, on labels whose parts fit in the lattice.
Outcome lattice_gamma_minus(int m, int degree) {
    Outcome o;
    auto ctx = SeriesContext::uniform({"z", "v"}, kUnbounded, degree);
    LatticeShape shape{m, m, kUnbounded};
    std::vector<LatticeConfig> c1, c2;
    for (const auto& c : all_configs(1, m, 1))
        if (c.particle_number() - c.n(0) <= 2) c1.push_back(c);
    for (const auto& c : all_configs(2, m, 1))
        if (c.particle_number() - c.n(0) <= 1) c2.push_back(c);
    std::size_t states = 0, compared = 0;
    for (const auto& a : c1)
        for (const auto& b : c2) {
            LatticeVector v = LatticeVector::basis(shape, ctx, a, b);
            FockVector lhs = to_fock(apply_B(1, 0, apply_B(2, 1, v, BCMethod::Combinatorial), BCMethod::Combinatorial));
            FockImage img = map_to_fock(a, b);
            FockVector rhs = gamma_minus(FockVector::basis(ctx, FockLabel::canonical(img.pair)), 0, 1, degree);
            rhs *= MultiSeries::constant(ctx, pow2(img.exponent));
            auto fits = [&](const FockLabel& l) { return l.pair.first.part(0) <= m && l.pair.second.part(0) <= m; };
            std::string where = config_label(a) + " " + config_label(b);
            for (const auto& [l, c] : rhs.terms())
                if (fits(l)) {
                    o.compare(lhs.coefficient(l), c, where + " -> " + l.str());
                    ++compared;
                }
            for (const auto& [l, c] : lhs.terms())
                if (rhs.coefficient(l).is_zero()) o.fail(where + " lattice-only label " + l.str());
            ++states;
        }
    o.detail = std::to_string(states) + " states, " + std::to_string(compared) + " coefficients";
    return o;
}

Outcome check_lattice_gamma_minus(const json& p, unsigned long long) {
    return lattice_gamma_minus(get_int(p, "m", 0, 12), get_int(p, "degree", 0, 12));
}

Outcome check_strict_buc(const json& p, unsigned long long) {
    int order = get_int(p, "order", 0, 12);
    Outcome o;
    MultiSeries prod = strict_buc_series(order);
    o.compare(prod, strict_buc_enumeration(order), "product vs 2^p-weighted enumeration");
    const long known[] = {1, 2, 6, 16, 38};
    for (int w = 0; w <= std::min(order, 4); ++w) {
        QSqrt2 c = prod.coefficient({0, w});
        if (!(c == QSqrt2(known[w]))) o.fail("q^" + std::to_string(w) + " coefficient " + c.str());
    }
    o.detail = "order " + std::to_string(order);
    return o;
}

Outcome check_macmahon(const json& p, unsigned long long) {
    int order = get_int(p, "order", 0, 12);
    Outcome o;
    MultiSeries prod = buc_macmahon_series(order);
    o.compare(prod, macmahon_enumeration(order), "double product vs enumeration");
    // Termwise products of two single MacMahon sequences.
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            QSqrt2 c = prod.coefficient({i, j});
            if (!(c == prod.coefficient({i, 0}) * prod.coefficient({0, j})))
                o.fail("p^" + std::to_string(i) + " q^" + std::to_string(j) + " does not factor");
        }
    o.detail = "order " + std::to_string(order);
    return o;
}

Outcome check_infinite_lattice(const json& p, unsigned long long) {
    int n1 = get_int(p, "n1", 0, 3), n2 = get_int(p, "n2", 0, 3);
    int m = get_int(p, "m", 0, 12), degree = get_int(p, "degree", 0, 12);
    Outcome o;
    ScalarProductSetup s = make_scalar_product_setup(n1, n2, m, m, degree);
    o.compare(scalar_product(s, SPRoute::Lattice), infinite_lattice_product(n1, n2, degree),
              "lattice at M=" + std::to_string(m) + " vs product");
    Outcome g = lattice_gamma_minus(m, degree);
    o.lhs_digest += "/" + g.lhs_digest;
    o.rhs_digest += "/" + g.rhs_digest;
    if (!g.pass) o.fail("Gamma_- action: " + g.witness.value_or(""));
    o.detail = g.detail;
    return o;
}

Outcome check_stabilization(const json& p, unsigned long long) {
    int n1 = get_int(p, "n1", 0, 3), n2 = get_int(p, "n2", 0, 3);
    int dmax = get_int(p, "max_degree", 0, 12);
    Outcome o;
    for (int d = 0; d <= dmax; ++d) {
        MultiSeries a = scalar_product(make_scalar_product_setup(n1, n2, d, d, d), SPRoute::Lattice);
        MultiSeries b = scalar_product(make_scalar_product_setup(n1, n2, d + 1, d + 1, d), SPRoute::Lattice);
        o.compare(a, b, "D=" + std::to_string(d) + " M=D vs M=D+1");
        o.compare(a, infinite_lattice_product(n1, n2, d), "D=" + std::to_string(d) + " vs product");
    }
    o.detail = "D=0.." + std::to_string(dmax);
    return o;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> registry = [] {
        std::vector<CheckInfo> r;
        auto add = [&](const char* name, const char* summary, json defaults, CheckFn fn) {
            r.push_back({name, summary, std::move(defaults), std::move(fn)});
        };
        add("figure", "slices, weight and path exponent of the example matrix", json::object(), check_figure);
        add("path-exponent", "path exponent: slice formula equals region count", json({{"box", {3, 3, 4}}}), check_path_exponent);
        add("schur-q", "Pfaffian and branching Schur Q-functions agree", json({{"box", {3, 5}}, {"vars", {1, 2, 3}}}), check_schur_q);
        add("scalar-product", "lattice, plane-partition and Schur Q scalar products agree", json({{"dims", {1, 1, 1, 1}}, {"degree", -1}, {"corrupt", false}, {"method", "combinatorial"}}), check_scalar_product);
        add("rtt", "RTT relation at seeded rational points", json({{"max_m", 3}, {"points", 20}}), check_rtt);
        add("bc-commute", "[B(x),B(y)] = [C(x),C(y)] = 0 on basis vectors", json({{"max_m", 4}}), check_bc_commute);
        add("bc-routes", "combinatorial B, C equal the monodromy entries", json({{"max_m", 4}}), check_bc_routes);
        add("admissible-interlacing", "admissible configurations map to interlacing partitions", json({{"max_m", 4}}), check_admissible_interlacing);
        add("vacuum-b-products", "B-products on the vacuum give 2^{-l} Q coefficients", json({{"n", 2}, {"m", 3}}), check_vacuum_b_products);
        add("skew-q-weights", "one B application gives skew Q weights", json({{"m", 4}}), check_skew_q_weights);
        add("fock-pairing", "closed-form Fock pairing equals vev rewriting", json({{"weight", 4}}), check_fock_pairing);
        add("gamma-commutation", "Gamma_+ Gamma_- exchange relation on states", json({{"weight", 6}, {"cap", 6}}), gamma_commutation_check);
        add("gamma-duality", "matrix elements of Gamma_- and Gamma_+ are transposes", json({{"weight", 4}}), check_gamma_duality);
        add("mode-conjugation", "Gamma_+ conjugation of fermion modes on states", json({{"modes", 4}, {"order", 4}}), mode_conjugation_check);
        add("lattice-gamma-minus", "lattice B-action against Gamma_- at finite M", json({{"m", 8}, {"degree", 8}}), check_lattice_gamma_minus);
        add("strict-buc", "strict BUC product against weighted enumeration", json({{"order", 8}}), check_strict_buc);
        add("macmahon", "MacMahon double product against enumeration", json({{"order", 8}}), check_macmahon);
        add("infinite-lattice", "large-M scalar product against the infinite product", json({{"n1", 1}, {"n2", 1}, {"m", 10}, {"degree", 10}}), check_infinite_lattice);
        add("stabilization", "scalar products at M=D and M=D+1 agree to degree D", json({{"n1", 1}, {"n2", 1}, {"max_degree", 8}}), check_stabilization);
        return r;
    }();
    return registry;
}

}  // namespace iboson
