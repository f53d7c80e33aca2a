#include "iboson/monodromy.hpp"

#include <memory>
#include <mutex>
#include <random>

namespace iboson {

namespace {

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            QSqrt2& slot = out[ea + eb];
            slot += ca * cb;
            if (slot.is_zero()) out.erase(ea + eb);
        }
    return out;
}

void accumulate(OperatorEntry& into, const OpWord& w, const Laurent& l) {
    Laurent& slot = into[w];
    for (const auto& [e, c] : l) {
        QSqrt2& s = slot[e];
        s += c;
        if (s.is_zero()) slot.erase(e);
    }
    if (slot.empty()) into.erase(w);
}

}  // namespace

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    OperatorMatrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (const auto& [wa, la] : a(i, k))
                    for (const auto& [wb, lb] : b(k, j)) {
                        OpWord w = wa;
                        w.insert(w.end(), wb.begin(), wb.end());
                        accumulate(out.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], w,
                                   laurent_mul(la, lb));
                    }
    return out;
}

OperatorMatrix LMatrix::entries(bool inverted) const {
    OperatorMatrix m;
    int s = inverted ? -1 : 1;
    m.e[0][0][{}] = Laurent{{-s, QSqrt2(1)}};
    m.e[0][1][{SiteOp{ModeOp::Create, site}}] = Laurent{{0, QSqrt2::sqrt2()}};
    m.e[1][0][{SiteOp{ModeOp::Annihilate, site}}] = Laurent{{0, QSqrt2::sqrt2()}};
    m.e[1][1][{}] = Laurent{{s, QSqrt2(1)}};
    return m;
}

const OperatorMatrix& monodromy(int size, bool inverted) {
    if (size < 0) throw UsageError("lattice size must be non-negative");
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::unique_ptr<OperatorMatrix>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{size, inverted}];
    if (!slot) {
        OperatorMatrix t = LMatrix{0, 1}.entries(inverted);
        for (int i = 1; i <= size; ++i) t = LMatrix{i, 1}.entries(inverted) * t;
        slot = std::make_unique<OperatorMatrix>(std::move(t));
    }
    return *slot;
}

std::optional<ModeImage> apply_word(const OpWord& w, const LatticeConfig& c, Side side, int n0_cap, Site0Rule rule,
                                    bool* overflow) {
    ModeImage cur{c, QSqrt2(1)};
    auto step = [&](const SiteOp& op) {
        auto img = act_mode(op.op, op.site, cur.config, side, n0_cap, rule, overflow);
        if (!img) return false;
        cur.config = img->config;
        cur.factor *= img->factor;
        return true;
    };
    if (side == Side::Ket) {
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            if (!step(*it)) return std::nullopt;
    } else {
        for (const auto& op : w)
            if (!step(op)) return std::nullopt;
    }
    return cur;
}

namespace {

QSqrt2 evaluate(const Laurent& l, const Rational& u) {
    QSqrt2 total(0);
    for (const auto& [e, c] : l) {
        Rational p = 1;
        Rational base = e >= 0 ? u : Rational(1) / u;
        for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
        total += c * QSqrt2(p);
    }
    return total;
}

void add_to(NumVector& v, const LatticeConfig& c, const QSqrt2& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = v.emplace(c, f);
    if (fresh) return;
    it->second += f;
    if (it->second.is_zero()) v.erase(it);
}

NumVector scaled(const NumVector& v, const QSqrt2& f) {
    NumVector out;
    if (f.is_zero()) return out;
    for (const auto& [c, x] : v) out.emplace(c, x * f);
    return out;
}

void add_all(NumVector& into, const NumVector& v) {
    for (const auto& [c, x] : v) add_to(into, c, x);
}

std::string render(const NumVector& v) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [c, x] : v) {
        if (!out.empty()) out += " + ";
        out += "(" + x.str() + ")[" + c.str() + "]";
    }
    return out;
}

}  // namespace

NumVector apply_entry(const OperatorEntry& entry, const Rational& u, const NumVector& v, Side side, Site0Rule rule) {
    NumVector out;
    for (const auto& [word, laurent] : entry) {
        QSqrt2 coeff = evaluate(laurent, u);
        if (coeff.is_zero()) continue;
        for (const auto& [c, x] : v) {
            auto img = apply_word(word, c, side, kUnbounded, rule);
            if (img) add_to(out, img->config, x * coeff * img->factor);
        }
    }
    return out;
}

bool verify_rtt_matrix(const OperatorMatrix& t, int size, const std::vector<std::pair<Rational, Rational>>& points,
                       Side side, Site0Rule rule, std::string* witness) {
    const auto configs = all_configs(1, size, 2);
    for (const auto& [u, w] : points) {
        Rational x = u * u, y = w * w;
        QSqrt2 r[4][4] = {};
        r[0][0] = r[3][3] = QSqrt2(x + y);
        r[1][1] = QSqrt2(y - x);
        r[2][2] = QSqrt2(x - y);
        r[1][2] = r[2][1] = QSqrt2(2 * u * w);
        for (const auto& cfg : configs) {
            NumVector start{{cfg, QSqrt2(1)}};
            // prod[k][c]: (T1 T2)_{kc} or (T2 T1)_{kc} applied to the basis vector.
            auto product = [&](bool x_first, int row, int col) {
                int a = row / 2, cc = row % 2, b = col / 2, d = col % 2;
                const OperatorEntry& ex = t(a, b);
                const OperatorEntry& ey = t(cc, d);
                NumVector mid = x_first ? apply_entry(ex, u, start, side, rule) : apply_entry(ey, w, start, side, rule);
                return x_first ? apply_entry(ey, w, mid, side, rule) : apply_entry(ex, u, mid, side, rule);
            };
            // T1 T2 = T(x)_{ab} T(y)_{cd}: kets see T(y) first, bras see T(x) first.
            bool t12_x_first = side == Side::Bra;
            NumVector p12[4][4], p21[4][4];
            for (int k = 0; k < 4; ++k)
                for (int c = 0; c < 4; ++c) {
                    p12[k][c] = product(t12_x_first, k, c);
                    p21[k][c] = product(!t12_x_first, k, c);
                }
            for (int row = 0; row < 4; ++row)
                for (int col = 0; col < 4; ++col) {
                    NumVector lhs, rhs;
                    for (int k = 0; k < 4; ++k) {
                        add_all(lhs, scaled(p12[k][col], r[row][k]));
                        add_all(rhs, scaled(p21[row][k], r[k][col]));
                    }
                    if (lhs != rhs) {
                        if (witness)
                            *witness = "u=" + to_string(u) + " w=" + to_string(w) + " entry (" + std::to_string(row) +
                                       "," + std::to_string(col) + ") on " + cfg.str() + ": " + render(lhs) +
                                       " vs " + render(rhs);
                        return false;
                    }
                }
        }
    }
    return true;
}

bool verify_rtt(int size, const std::vector<std::pair<Rational, Rational>>& points, Side side, Site0Rule rule,
                std::string* witness) {
    for (int i = 0; i <= size; ++i) {
        std::string local;
        if (!verify_rtt_matrix(LMatrix{i, 1}.entries(), size, points, side, rule, &local)) {
            if (witness) *witness = "L_" + std::to_string(i) + ": " + local;
            return false;
        }
    }
    std::string local;
    if (!verify_rtt_matrix(monodromy(size, false), size, points, side, rule, &local)) {
        if (witness) *witness = "T: " + local;
        return false;
    }
    return true;
}

std::vector<std::pair<Rational, Rational>> random_points(unsigned long long seed, int count) {
    std::mt19937_64 rng(seed);
    auto draw = [&] {
        long num = static_cast<long>(rng() % 7) + 1;
        if (rng() % 2) num = -num;
        long den = static_cast<long>(rng() % 7) + 1;
        Rational q(num, den);
        q.canonicalize();
        return q;
    };
    std::vector<std::pair<Rational, Rational>> out;
    for (int i = 0; i < count; ++i) {
        Rational u = draw();
        Rational w = draw();
        out.emplace_back(u, w);
    }
    return out;
}

}  // namespace iboson
