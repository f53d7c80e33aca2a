#include "iboson/fock.hpp"

#include <algorithm>
#include <sstream>

namespace iboson {

FockLabel FockLabel::canonical(TwoPartition pair) {
    FockLabel l{std::move(pair), {false, false}};
    l.pad[0] = l.pair.first.length() % 2 == 1;
    l.pad[1] = l.pair.second.length() % 2 == 1;
    return l;
}

bool FockLabel::is_canonical() const { return *this == canonical(pair); }

std::string FockLabel::str() const {
    auto side = [](const StrictPartition& p, bool pad) {
        std::string s = p.str();
        if (pad) s += p.empty() ? "0" : ",0";
        return s;
    };
    return side(pair.first, pad[0]) + "|" + side(pair.second, pad[1]);
}

FockLabel FockLabel::parse(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
        throw UsageError("fock label must look like 'mu1|mu2': " + text);
    auto side = [&](std::string s, bool& pad) {
        s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
        pad = false;
        if (s == "0") {
            pad = true;
            return StrictPartition();
        }
        if (s.size() >= 2 && s.compare(s.size() - 2, 2, ",0") == 0) {
            pad = true;
            s.resize(s.size() - 2);
        }
        return StrictPartition::parse(s);
    };
    FockLabel l;
    l.pair.first = side(text.substr(0, bar), l.pad[0]);
    l.pair.second = side(text.substr(bar + 1), l.pad[1]);
    return l;
}

FockVector FockVector::basis(SeriesContextPtr ctx, const FockLabel& label) {
    FockVector v(ctx);
    v.add(label, MultiSeries::one(ctx));
    return v;
}

void FockVector::add(const FockLabel& label, const MultiSeries& coeff) {
    if (!same_context(ctx_, coeff.context())) throw UsageError("fock vector: coefficient context mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(label);
    if (it == terms_.end()) {
        terms_.emplace(label, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiSeries FockVector::coefficient(const FockLabel& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? MultiSeries(ctx_) : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
}

FockVector& FockVector::operator*=(const MultiSeries& s) {
    std::map<FockLabel, MultiSeries> next;
    for (const auto& [l, c] : terms_) {
        MultiSeries p = c * s;
        if (!p.is_zero()) next.emplace(l, std::move(p));
    }
    terms_ = std::move(next);
    return *this;
}

bool FockVector::operator==(const FockVector& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

std::string FockVector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [l, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")|" + l.str() + ">";
    }
    return out;
}

namespace {

// <0| w |0> for a single-flavor word.
QSqrt2 vev_single(const std::vector<int>& w) {
    if (w.empty()) return QSqrt2(1);
    if (w.size() % 2 == 1) return QSqrt2(0);
    long p = -1;
    for (long i = static_cast<long>(w.size()) - 1; i >= 0; --i)
        if (w[static_cast<std::size_t>(i)] < 0) {
            p = i;
            break;
        }
    if (p < 0) {
        // Only non-negative modes: a positive one anticommutes to the far left and dies on <0|.
        bool positive = std::any_of(w.begin(), w.end(), [](int m) { return m > 0; });
        return positive ? QSqrt2(0) : QSqrt2(1);
    }
    std::size_t q = static_cast<std::size_t>(p);
    if (q + 1 == w.size()) return QSqrt2(0);
    int a = w[q], b = w[q + 1];
    std::vector<int> swapped = w;
    std::swap(swapped[q], swapped[q + 1]);
    QSqrt2 result = -vev_single(swapped);
    if (a + b == 0) {
        std::vector<int> contracted;
        contracted.reserve(w.size() - 2);
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != q && i != q + 1) contracted.push_back(w[i]);
        int sign = (a % 2 == 0) ? 2 : -2;
        result += QSqrt2(sign) * vev_single(contracted);
    }
    return result;
}

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

QSqrt2 vev(const CliffordWord& word) {
    std::vector<int> phi, phibar;
    for (const auto& m : word) (m.flavor == Flavor::Phi ? phi : phibar).push_back(m.index);
    QSqrt2 a = vev_single(phi);
    if (a.is_zero()) return a;
    return a * vev_single(phibar);
}

CliffordWord ket_word(const FockLabel& label) {
    CliffordWord w;
    for (int c = 0; c < 2; ++c) {
        Flavor f = c == 0 ? Flavor::Phi : Flavor::PhiBar;
        for (int p : label.component(c).parts()) w.push_back({f, p});
        if (label.pad[static_cast<std::size_t>(c)]) w.push_back({f, 0});
    }
    return w;
}

std::pair<CliffordWord, int> bra_word(const FockLabel& label) {
    CliffordWord w;
    int sign = 1;
    for (int c = 1; c >= 0; --c) {
        Flavor f = c == 0 ? Flavor::Phi : Flavor::PhiBar;
        if (label.pad[static_cast<std::size_t>(c)]) w.push_back({f, 0});
        const auto& parts = label.component(c).parts();
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            sign *= parity_sign(*it);
            w.push_back({f, -*it});
        }
    }
    return {w, sign};
}

MultiSeries fock_inner(const FockVector& bra, const FockVector& ket, PairingMethod method) {
    if (!same_context(bra.context(), ket.context())) throw UsageError("fock pairing: context mismatch");
    MultiSeries total(ket.context());
    for (const auto& [bl, bc] : bra.terms()) {
        for (const auto& [kl, kc] : ket.terms()) {
            QSqrt2 value;
            if (method == PairingMethod::ClosedForm) {
                if (!(bl == kl)) continue;
                value = pow2(bl.pair.first.length() + bl.pair.second.length());
            } else {
                auto [w, sign] = bra_word(bl);
                CliffordWord k = ket_word(kl);
                w.insert(w.end(), k.begin(), k.end());
                value = vev(w) * QSqrt2(sign);
                if (value.is_zero()) continue;
            }
            total += (bc * kc).scale(value);
        }
    }
    return total;
}

namespace {

// phi_k on one component: returns (new partition, new pad, coefficient), coefficient 0 when killed.
struct ModeResult {
    StrictPartition part;
    bool pad = false;
    int coeff = 0;
};

ModeResult act_component(int k, const StrictPartition& mu, bool pad) {
    const auto& parts = mu.parts();
    if (k > 0) {
        if (mu.contains(k)) return {};
        int larger = static_cast<int>(std::count_if(parts.begin(), parts.end(), [k](int p) { return p > k; }));
        std::vector<int> np = parts;
        np.insert(np.begin() + larger, k);
        return {StrictPartition(np), pad, parity_sign(larger)};
    }
    if (k == 0) return {mu, !pad, parity_sign(mu.length())};
    int m = -k;
    auto it = std::find(parts.begin(), parts.end(), m);
    if (it == parts.end()) return {};
    int j = static_cast<int>(it - parts.begin());
    std::vector<int> np = parts;
    np.erase(np.begin() + j);
    return {StrictPartition(np), pad, parity_sign(j) * 2 * parity_sign(m)};
}

int image_pad(const StrictPartition& src, bool pad, const StrictPartition& img) {
    return ((src.length() + (pad ? 1 : 0) - img.length()) % 2 + 2) % 2;
}

std::vector<StrictPartition> upward(const StrictPartition& nu, int cap) {
    std::vector<StrictPartition> out;
    if (cap < 0) return out;
    for (auto& mu : interlacing_extensions(nu, nu.length() + 1, nu.part(0) + cap))
        if (mu.weight() - nu.weight() <= cap) out.push_back(std::move(mu));
    return out;
}

int var_cap(const SeriesContextPtr& ctx, std::size_t var, int cap) {
    int c = ctx->effective_cap(var);
    return c == kUnbounded ? cap : std::min(c, cap);
}

// Downward interlacing sum with 2^{#(mu|nu)} weights (Gamma_+ on kets, Gamma_- on bras).
FockVector down_sum(const FockVector& in, std::size_t z_var, std::size_t v_var) {
    FockVector out(in.context());
    for (const auto& [lab, coeff] : in.terms()) {
        const auto& mu1 = lab.pair.first;
        const auto& mu2 = lab.pair.second;
        auto below2 = interlacing_restrictions(mu2);
        for (const auto& nu1 : interlacing_restrictions(mu1)) {
            MultiSeries c1 = coeff.shifted(z_var, mu1.weight() - nu1.weight());
            if (c1.is_zero()) continue;
            c1.scale(pow2(sharp_count(mu1, nu1)));
            for (const auto& nu2 : below2) {
                MultiSeries c2 = c1.shifted(v_var, mu2.weight() - nu2.weight());
                if (c2.is_zero()) continue;
                c2.scale(pow2(sharp_count(mu2, nu2)));
                FockLabel img{{nu1, nu2}, {image_pad(mu1, lab.pad[0], nu1) == 1, image_pad(mu2, lab.pad[1], nu2) == 1}};
                out.add(img, c2);
            }
        }
    }
    return out;
}

// Upward interlacing sum with 2^{#(mu|nu)-l(mu)+l(nu)} weights (Gamma_- on kets, Gamma_+ on bras).
FockVector up_sum(const FockVector& in, std::size_t z_var, std::size_t v_var, int cap) {
    FockVector out(in.context());
    int cz = var_cap(in.context(), z_var, cap);
    int cv = var_cap(in.context(), v_var, cap);
    for (const auto& [lab, coeff] : in.terms()) {
        const auto& nu1 = lab.pair.first;
        const auto& nu2 = lab.pair.second;
        auto above2 = upward(nu2, cv);
        for (const auto& mu1 : upward(nu1, cz)) {
            int d1 = mu1.weight() - nu1.weight();
            MultiSeries c1 = coeff.shifted(z_var, d1);
            if (c1.is_zero()) continue;
            c1.scale(pow2(sharp_count(mu1, nu1) - mu1.length() + nu1.length()));
            for (const auto& mu2 : above2) {
                int d2 = mu2.weight() - nu2.weight();
                if (d1 + d2 > cap) continue;
                MultiSeries c2 = c1.shifted(v_var, d2);
                if (c2.is_zero()) continue;
                c2.scale(pow2(sharp_count(mu2, nu2) - mu2.length() + nu2.length()));
                FockLabel img{{mu1, mu2}, {image_pad(nu1, lab.pad[0], mu1) == 1, image_pad(nu2, lab.pad[1], mu2) == 1}};
                out.add(img, c2);
            }
        }
    }
    return out;
}

}  // namespace

FockVector apply_mode(const Mode& mode, const FockVector& ket) {
    FockVector out(ket.context());
    int c = mode.flavor == Flavor::Phi ? 0 : 1;
    for (const auto& [lab, coeff] : ket.terms()) {
        ModeResult r = act_component(mode.index, lab.component(c), lab.pad[static_cast<std::size_t>(c)]);
        if (r.coeff == 0) continue;
        FockLabel img = lab;
        (c == 0 ? img.pair.first : img.pair.second) = r.part;
        img.pad[static_cast<std::size_t>(c)] = r.pad;
        out.add(img, MultiSeries(coeff).scale(QSqrt2(r.coeff)));
    }
    return out;
}

FockVector gamma_plus(const FockVector& ket, std::size_t z_var, std::size_t v_var) {
    return down_sum(ket, z_var, v_var);
}

FockVector gamma_plus_bra(const FockVector& bra, std::size_t z_var, std::size_t v_var, int cap) {
    return up_sum(bra, z_var, v_var, cap);
}

FockVector gamma_minus(const FockVector& ket, std::size_t z_var, std::size_t v_var, int cap) {
    return up_sum(ket, z_var, v_var, cap);
}

FockVector gamma_minus_bra(const FockVector& bra, std::size_t z_var, std::size_t v_var) {
    return down_sum(bra, z_var, v_var);
}

bool check_mode_conjugation(int i, Flavor flavor, int order) {
    if (i < 0 || order < 0) throw UsageError("mode conjugation check needs i >= 0 and order >= 0");
    auto ctx = SeriesContext::uniform({"z", "v"}, order);
    std::size_t z = 0, v = 1;
    std::size_t w = flavor == Flavor::Phi ? z : v;
    std::vector<FockVector> states;
    FockVector vacuum = FockVector::basis(ctx, FockLabel{});
    states.push_back(vacuum);
    for (int j = 0; j <= order; ++j) {
        states.push_back(apply_mode({Flavor::Phi, j}, vacuum));
        states.push_back(apply_mode({Flavor::PhiBar, j}, vacuum));
    }
    for (const auto& s : states) {
        FockVector lhs = gamma_plus(apply_mode({flavor, i}, s), z, v);
        FockVector g = gamma_plus(s, z, v);
        FockVector rhs(ctx);
        for (int n = 0; n <= order; ++n) {
            FockVector term = apply_mode({flavor, i - n}, g);
            term *= MultiSeries::variable(ctx, w, n).scale(QSqrt2(n == 0 ? 1 : 2));
            rhs += term;
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool check_gamma_commutation(int order, const std::vector<FockLabel>& states) {
    if (order < 0) throw UsageError("commutation check needs order >= 0");
    auto ctx = SeriesContext::uniform({"x", "y", "z", "v"}, order);
    std::size_t x = 0, y = 1, z = 2, v = 3;
    auto factor = [&](std::size_t a, std::size_t b) {
        Monomial m(4, 0);
        m[a] = m[b] = 1;
        MultiSeries num = MultiSeries::one(ctx);
        num.add_term(m, QSqrt2(1));
        MultiSeries den = MultiSeries::one(ctx);
        den.add_term(m, QSqrt2(-1));
        return num * den.invert_unit();
    };
    MultiSeries f = factor(x, z) * factor(y, v);
    for (const auto& s : states) {
        FockVector st = FockVector::basis(ctx, s);
        FockVector lhs = gamma_plus(gamma_minus(st, x, y, 2 * order), z, v);
        FockVector rhs = gamma_minus(gamma_plus(st, z, v), x, y, 2 * order);
        rhs *= f;
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::vector<FockLabel> labels_up_to_weight(int max_weight) {
    std::vector<FockLabel> out;
    if (max_weight < 0) return out;
    auto parts = strict_partitions_in_box(max_weight, max_weight);
    for (const auto& a : parts) {
        if (a.weight() > max_weight) continue;
        for (const auto& b : parts)
            if (a.weight() + b.weight() <= max_weight) out.push_back(FockLabel::canonical({a, b}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace iboson
