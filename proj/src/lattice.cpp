#include "iboson/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "iboson/monodromy.hpp"
#include "iboson/plane_partition.hpp"
#include "iboson/schur_q.hpp"

namespace iboson {

LatticeConfig::LatticeConfig(int species, std::vector<int> occupations)
    : species_(species), occ_(std::move(occupations)) {
    if (species != 1 && species != 2) throw UsageError("species must be 1 or 2");
    if (occ_.empty()) throw UsageError("lattice config needs site 0");
    if (occ_[0] < 0) throw DomainError("n0 must be non-negative");
    for (std::size_t i = 1; i < occ_.size(); ++i)
        if (occ_[i] != 0 && occ_[i] != 1) throw DomainError("sites >= 1 hold 0 or 1 particles");
}

LatticeConfig LatticeConfig::vacuum(int species, int size) {
    if (size < 0) throw UsageError("lattice size must be non-negative");
    return LatticeConfig(species, std::vector<int>(static_cast<std::size_t>(size) + 1, 0));
}

int LatticeConfig::particle_number() const { return std::accumulate(occ_.begin(), occ_.end(), 0); }

LatticeConfig LatticeConfig::with(int site, int value) const {
    std::vector<int> o = occ_;
    o.at(static_cast<std::size_t>(site)) = value;
    return LatticeConfig(species_, std::move(o));
}

std::string LatticeConfig::str() const {
    std::string out = "species:" + std::to_string(species_) + " ";
    for (std::size_t i = 0; i < occ_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(occ_[i]);
    }
    return out;
}

LatticeConfig LatticeConfig::parse(const std::string& text) {
    std::stringstream ss(text);
    std::string head, body;
    ss >> head >> body;
    std::string rest;
    if (head.rfind("species:", 0) != 0 || body.empty() || (ss >> rest))
        throw UsageError("lattice config must look like 'species:j n0,n1,...,nM': " + text);
    std::vector<int> occ;
    int species = 0;
    try {
        species = std::stoi(head.substr(8));
        std::stringstream bs(body);
        std::string item;
        while (std::getline(bs, item, ',')) occ.push_back(std::stoi(item));
    } catch (const std::exception&) {
        throw UsageError("lattice config: bad integer in '" + text + "'");
    }
    try {
        return LatticeConfig(species, std::move(occ));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

std::vector<LatticeConfig> all_configs(int species, int size, int max_n0) {
    std::vector<LatticeConfig> out;
    for (int n0 = 0; n0 <= max_n0; ++n0) {
        for (unsigned bits = 0; bits < (1u << size); ++bits) {
            std::vector<int> occ(static_cast<std::size_t>(size) + 1, 0);
            occ[0] = n0;
            for (int i = 1; i <= size; ++i) occ[static_cast<std::size_t>(i)] = (bits >> (i - 1)) & 1u;
            out.emplace_back(species, std::move(occ));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<ModeImage> act_mode(ModeOp op, int site, const LatticeConfig& c, Side side, int n0_cap, Site0Rule rule,
                                  bool* overflow) {
    if (site < 0 || site > c.size())
        throw UsageError("site " + std::to_string(site) + " outside 0.." + std::to_string(c.size()));
    const QSqrt2 r2 = QSqrt2::sqrt2();
    const QSqrt2 ir2 = QSqrt2::inv_sqrt2();
    int n = c.n(site);
    if (op == ModeOp::Number) {
        if (n == 0) return std::nullopt;
        return ModeImage{c, QSqrt2(n)};
    }
    auto raise0 = [&](const QSqrt2& f) -> std::optional<ModeImage> {
        if (n0_cap >= 0 && n + 1 > n0_cap) {
            if (overflow) *overflow = true;
            return std::nullopt;
        }
        return ModeImage{c.with(0, n + 1), f};
    };
    // Lowering in the sense of the state label, i.e. an annihilator on kets or a creator on bras.
    bool lowers = (side == Side::Ket) == (op == ModeOp::Annihilate);
    if (site >= 1) {
        if (lowers) {
            if (n == 0) return std::nullopt;
            return ModeImage{c.with(site, 0), ir2};
        }
        // (1 + (-1)^n)/sqrt2 = sqrt2 for n = 0, 0 for n = 1.
        if (n == 1) return std::nullopt;
        return ModeImage{c.with(site, 1), r2};
    }
    if (lowers) {
        // Ket phi_0 or bra phi_0^dagger.
        bool even = n % 2 == 0;
        bool nonzero = (side == Side::Ket && rule == Site0Rule::AsPrinted) ? even : !even;
        if (!nonzero || n == 0) return std::nullopt;
        return ModeImage{c.with(0, n - 1), r2};
    }
    return raise0(ir2);
}

LatticeVector::LatticeVector(LatticeShape shape, SeriesContextPtr ctx) : shape_(shape), ctx_(std::move(ctx)) {}

LatticeVector LatticeVector::vacuum(LatticeShape shape, SeriesContextPtr ctx) {
    return basis(shape, ctx, LatticeConfig::vacuum(1, shape.m1), LatticeConfig::vacuum(2, shape.m2));
}

LatticeVector LatticeVector::basis(LatticeShape shape, SeriesContextPtr ctx, const LatticeConfig& c1,
                                   const LatticeConfig& c2) {
    if (c1.species() != 1 || c2.species() != 2 || c1.size() != shape.m1 || c2.size() != shape.m2)
        throw UsageError("basis vector does not match the lattice shape");
    LatticeVector v(shape, ctx);
    v.add({c1, c2}, MultiSeries::one(ctx));
    return v;
}

void LatticeVector::add(const ConfigPair& key, const MultiSeries& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
    if (!(shape_ == o.shape_) || !same_context(ctx_, o.ctx_)) throw UsageError("lattice vectors differ in context");
    for (const auto& [k, c] : o.terms_) add(k, c);
    truncated_ = truncated_ || o.truncated_;
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
    if (!(shape_ == o.shape_) || !same_context(ctx_, o.ctx_)) throw UsageError("lattice vectors differ in context");
    for (const auto& [k, c] : o.terms_) add(k, -c);
    truncated_ = truncated_ || o.truncated_;
    return *this;
}

bool LatticeVector::operator==(const LatticeVector& o) const {
    return shape_ == o.shape_ && same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

std::string LatticeVector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")|" + k.first.str() + " ; " + k.second.str() + ">";
    }
    return out;
}

namespace {

const LatticeConfig& pick(const ConfigPair& p, int species) { return species == 1 ? p.first : p.second; }

ConfigPair replace(const ConfigPair& p, int species, const LatticeConfig& c) {
    return species == 1 ? ConfigPair{c, p.second} : ConfigPair{p.first, c};
}

void check_species(int species) {
    if (species != 1 && species != 2) throw UsageError("species must be 1 or 2");
}

}  // namespace

LatticeVector apply_mode(ModeOp op, int species, int site, const LatticeVector& v, Side side, Site0Rule rule) {
    check_species(species);
    LatticeVector out(v.shape(), v.context());
    if (v.truncated()) out.mark_truncated();
    if (site < 0 || site > v.shape().size(species))
        throw UsageError("site " + std::to_string(site) + " outside the lattice");
    for (const auto& [key, coeff] : v.terms()) {
        bool overflow = false;
        auto img = act_mode(op, site, pick(key, species), side, v.shape().n0_cap, rule, &overflow);
        if (overflow) out.mark_truncated();
        if (!img) continue;
        out.add(replace(key, species, img->config), MultiSeries(coeff).scale(img->factor));
    }
    return out;
}

namespace {

QSqrt2 config_pairing(const LatticeConfig& m, const LatticeConfig& n) {
    if (m != n) return QSqrt2(0);
    if (m.n(0) > 1) return QSqrt2(0);
    int e = m.n(0);
    for (int i = 1; i <= m.size(); ++i) e -= m.n(i);
    return pow2(e);
}

}  // namespace

MultiSeries inner_product(const LatticeVector& bra, const LatticeVector& ket) {
    if (!(bra.shape() == ket.shape()) || !same_context(bra.context(), ket.context()))
        throw UsageError("inner product: vectors differ in context");
    MultiSeries total(ket.context());
    for (const auto& [key, c] : ket.terms()) {
        auto it = bra.terms().find(key);
        if (it == bra.terms().end()) continue;
        QSqrt2 f = config_pairing(key.first, key.first) * config_pairing(key.second, key.second);
        if (f.is_zero()) continue;
        total += (it->second * c).scale(f);
    }
    return total;
}

bool is_admissible(const LatticeConfig& m, const LatticeConfig& n) {
    if (m.species() != n.species() || m.size() != n.size()) return false;
    int tail = 0;
    for (int i = m.size(); i >= 1; --i) {
        tail += m.n(i) - n.n(i);
        if (tail < 0 || tail > 1) return false;
    }
    tail += m.n(0) - n.n(0);
    return tail == 1;
}

namespace {

StrictPartition occupied_sites(const LatticeConfig& c) {
    std::vector<int> parts;
    for (int i = c.size(); i >= 1; --i)
        if (c.n(i) == 1) parts.push_back(i);
    return StrictPartition(parts);
}

}  // namespace

FockImage map_to_fock(const LatticeConfig& c1, const LatticeConfig& c2) {
    FockImage img{{occupied_sites(c1), occupied_sites(c2)}, 0};
    img.exponent = -img.pair.first.length() - img.pair.second.length();
    return img;
}

FockVector to_fock(const LatticeVector& v) {
    FockVector out(v.context());
    for (const auto& [key, c] : v.terms()) {
        FockImage img = map_to_fock(key.first, key.second);
        out.add(FockLabel::canonical(img.pair), MultiSeries(c).scale(pow2(img.exponent)));
    }
    return out;
}

namespace {

struct Admissible {
    LatticeConfig config;
    int doubled;   // number of sites with m_i - n_i = 1
    int exponent;  // sum_i i (m_i - n_i), which equals the number of sites i >= 1 with tail sum 1
};

void admissible_rec(const LatticeConfig& n, int site, int tail, std::vector<int>& occ, int doubled, int exponent,
                    int max_exponent, std::vector<Admissible>& out) {
    if (site == 0) {
        occ[0] = n.n(0) + 1 - tail;
        out.push_back({LatticeConfig(n.species(), occ), doubled, exponent});
        return;
    }
    for (int m = 0; m <= 1; ++m) {
        int d = m - n.n(site);
        int t = tail + d;
        if (t < 0 || t > 1) continue;
        if (max_exponent >= 0 && exponent + t > max_exponent) continue;
        occ[static_cast<std::size_t>(site)] = m;
        admissible_rec(n, site - 1, t, occ, doubled + (d == 1 ? 1 : 0), exponent + t, max_exponent, out);
    }
}

}  // namespace

std::vector<LatticeConfig> admissible_configs(const LatticeConfig& n) {
    std::vector<Admissible> found;
    std::vector<int> occ(static_cast<std::size_t>(n.size()) + 1, 0);
    admissible_rec(n, n.size(), 0, occ, 0, 0, kUnbounded, found);
    std::vector<LatticeConfig> out;
    for (auto& a : found) out.push_back(std::move(a.config));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// All m admissible to n with their weights 2^{doubled} x^{exponent}, exponent <= max_exponent.
std::vector<Admissible> admissible_images(const LatticeConfig& n, int max_exponent) {
    std::vector<Admissible> out;
    std::vector<int> occ(static_cast<std::size_t>(n.size()) + 1, 0);
    admissible_rec(n, n.size(), 0, occ, 0, 0, max_exponent, out);
    return out;
}

LatticeVector apply_combinatorial(int species, std::size_t var, const LatticeVector& v) {
    LatticeVector out(v.shape(), v.context());
    if (v.truncated()) out.mark_truncated();
    int cap = v.shape().n0_cap;
    int max_exponent = v.context()->effective_cap(var);
    for (const auto& [key, coeff] : v.terms()) {
        for (const auto& a : admissible_images(pick(key, species), max_exponent)) {
            if (cap >= 0 && a.config.n(0) > cap) {
                out.mark_truncated();
                continue;
            }
            MultiSeries c = coeff.shifted(var, a.exponent);
            if (c.is_zero()) continue;
            out.add(replace(key, species, a.config), c.scale(pow2(a.doubled)));
        }
    }
    return out;
}

LatticeVector apply_matrix(int species, std::size_t var, const LatticeVector& v, bool is_c) {
    int size = v.shape().size(species);
    const OperatorMatrix& t = monodromy(size, is_c);
    const OperatorEntry& entry = is_c ? t(1, 0) : t(0, 1);
    Side side = is_c ? Side::Bra : Side::Ket;
    LatticeVector out(v.shape(), v.context());
    if (v.truncated()) out.mark_truncated();
    for (const auto& [key, coeff] : v.terms()) {
        for (const auto& [word, laurent] : entry) {
            bool overflow = false;
            auto img = apply_word(word, pick(key, species), side, v.shape().n0_cap, Site0Rule::AlgebraConsistent,
                                  &overflow);
            if (overflow) out.mark_truncated();
            if (!img) continue;
            for (const auto& [e, c] : laurent) {
                int p = e + size;
                if (p < 0 || p % 2 != 0) throw DomainError("normalized monodromy entry has a non-polynomial term");
                MultiSeries term = coeff.shifted(var, p / 2);
                if (term.is_zero()) continue;
                out.add(replace(key, species, img->config), term.scale(c * img->factor));
            }
        }
    }
    return out;
}

}  // namespace

LatticeVector apply_B(int species, std::size_t var, const LatticeVector& ket, BCMethod method) {
    check_species(species);
    if (var >= ket.context()->size()) throw UsageError("spectral variable not in the series context");
    if (method == BCMethod::Combinatorial) return apply_combinatorial(species, var, ket);
    return apply_matrix(species, var, ket, false);
}

LatticeVector apply_C(int species, std::size_t var, const LatticeVector& bra, BCMethod method) {
    check_species(species);
    if (var >= bra.context()->size()) throw UsageError("spectral variable not in the series context");
    if (method == BCMethod::Combinatorial) return apply_combinatorial(species, var, bra);
    return apply_matrix(species, var, bra, true);
}

ScalarProductSetup make_scalar_product_setup(int n1, int n2, int m1, int m2, int total_degree) {
    if (n1 < 0 || n2 < 0 || m1 < 0 || m2 < 0) throw UsageError("scalar product sizes must be non-negative");
    ScalarProductSetup s{n1, n2, m1, m2, nullptr, {}, {}, {}, {}};
    std::vector<std::string> names;
    auto block = [&](const char* base, int count, std::vector<std::size_t>& idx) {
        for (int i = 1; i <= count; ++i) {
            idx.push_back(names.size());
            names.push_back(std::string(base) + std::to_string(i));
        }
    };
    block("x", n1, s.x);
    block("z", n1, s.z);
    block("y", n2, s.y);
    block("v", n2, s.v);
    s.ctx = SeriesContext::make(names, std::vector<int>(names.size(), kUnbounded), total_degree);
    return s;
}

namespace {

MultiSeries lattice_route(const ScalarProductSetup& s, BCMethod method) {
    LatticeShape shape{s.m1, s.m2, std::max(s.n1, s.n2)};
    LatticeVector ket = LatticeVector::vacuum(shape, s.ctx);
    for (std::size_t k = 0; k < s.z.size(); ++k) ket = apply_B(1, s.z[k], ket, method);
    for (std::size_t k = 0; k < s.v.size(); ++k) ket = apply_B(2, s.v[k], ket, method);
    LatticeVector bra = LatticeVector::vacuum(shape, s.ctx);
    for (std::size_t k = s.y.size(); k-- > 0;) bra = apply_C(2, s.y[k], bra, method);
    for (std::size_t k = 0; k < s.x.size(); ++k) bra = apply_C(1, s.x[k], bra, method);
    if (ket.truncated() || bra.truncated()) throw DomainError("scalar product lost terms at the n0 cap");
    return fock_inner(to_fock(bra), to_fock(ket), PairingMethod::ClosedForm);
}

MultiSeries plane_route(const ScalarProductSetup& s) {
    auto side = [&](int n, int m, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        MultiSeries sum(s.ctx);
        for (const auto& pi : enumerate_boxed_strict(n, n, m)) sum += b_weight(pi, s.ctx, a, b);
        return sum;
    };
    return side(s.n1, s.m1, s.x, s.z) * side(s.n2, s.m2, s.y, s.v);
}

MultiSeries schur_route(const ScalarProductSetup& s) {
    auto side = [&](int n, int m, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        QContext qa{s.ctx, a}, qb{s.ctx, b};
        MultiSeries sum(s.ctx);
        for (const auto& mu : strict_partitions_in_box(n, m)) {
            MultiSeries term = schur_q_pfaffian(mu, qa) * schur_q_pfaffian(mu, qb);
            sum += term.scale(pow2(-mu.length()));
        }
        return sum;
    };
    return side(s.n1, s.m1, s.x, s.z) * side(s.n2, s.m2, s.y, s.v);
}

}  // namespace

MultiSeries scalar_product(const ScalarProductSetup& s, SPRoute route, BCMethod method) {
    switch (route) {
        case SPRoute::Lattice: return lattice_route(s, method);
        case SPRoute::PlanePartition: return plane_route(s);
        case SPRoute::SchurQ: return schur_route(s);
    }
    throw UsageError("unknown scalar product route");
}

}  // namespace iboson
