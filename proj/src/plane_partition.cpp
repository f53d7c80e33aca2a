#include "iboson/plane_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace iboson {

PlanePartition::PlanePartition(std::vector<std::vector<int>> rows) {
    for (auto& r : rows) {
        for (int v : r)
            if (v < 0) throw DomainError("plane partition entries must be non-negative");
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] == 0) throw DomainError("plane partition rows must be weakly decreasing");
            if (j + 1 < r.size() && r[j] < r[j + 1]) throw DomainError("plane partition rows must be weakly decreasing");
            if (i > 0) {
                const auto& up = rows[i - 1];
                if (j >= up.size() || up[j] < r[j])
                    throw DomainError("plane partition columns must be weakly decreasing");
            }
        }
    }
    rows_ = std::move(rows);
}

int PlanePartition::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= num_rows()) return 0;
    const auto& r = rows_[static_cast<std::size_t>(i)];
    return j < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(j)] : 0;
}

int PlanePartition::weight() const {
    int w = 0;
    for (const auto& r : rows_) w = std::accumulate(r.begin(), r.end(), w);
    return w;
}

std::string PlanePartition::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += "\n";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out += " ";
            out += std::to_string(rows_[i][j]);
        }
    }
    return out;
}

PlanePartition PlanePartition::parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::stringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw UsageError("plane partition: bad entry '" + tok + "'");
            }
            if (used != tok.size()) throw UsageError("plane partition: bad entry '" + tok + "'");
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    try {
        return PlanePartition(std::move(rows));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

SlicedPP diagonal_slices(const PlanePartition& pi) {
    SlicedPP s;
    auto read = [&](int di, int dj) {
        Slice sl;
        for (int k = 0;; ++k) {
            int v = pi.at(k + di, k + dj);
            if (v == 0) break;
            sl.push_back(v);
        }
        return sl;
    };
    s.center = read(0, 0);
    for (int i = 1; i < pi.num_cols(); ++i) s.right.push_back(read(0, i));
    for (int i = 1; i < pi.num_rows(); ++i) s.left.push_back(read(i, 0));
    return s;
}

PlanePartition reassemble(const SlicedPP& s) {
    int rows = static_cast<int>(s.center.size());
    int cols = rows;
    for (std::size_t i = 0; i < s.left.size(); ++i)
        if (!s.left[i].empty()) rows = std::max(rows, static_cast<int>(i + 1 + s.left[i].size()));
    for (std::size_t i = 0; i < s.right.size(); ++i)
        if (!s.right[i].empty()) cols = std::max(cols, static_cast<int>(i + 1 + s.right[i].size()));
    std::vector<std::vector<int>> m(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols), 0));
    for (std::size_t k = 0; k < s.center.size(); ++k) m[k][k] = s.center[k];
    for (std::size_t i = 0; i < s.right.size(); ++i)
        for (std::size_t k = 0; k < s.right[i].size(); ++k) m[k][k + i + 1] = s.right[i][k];
    for (std::size_t i = 0; i < s.left.size(); ++i)
        for (std::size_t k = 0; k < s.left[i].size(); ++k) m[k + i + 1][k] = s.left[i][k];
    return PlanePartition(std::move(m));
}

namespace {

bool strictly_decreasing(const Slice& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] <= s[i + 1]) return false;
    return true;
}

int weight_of(const Slice& s) { return std::accumulate(s.begin(), s.end(), 0); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

int regions(const PlanePartition& pi) {
    int rows = pi.num_rows(), cols = pi.num_cols();
    int cells = 0;
    for (const auto& r : pi.rows()) cells += static_cast<int>(r.size());
    UnionFind uf(rows * cols);
    int components = cells;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            int v = pi.at(i, j);
            if (v == 0) continue;
            if (pi.at(i + 1, j) == v && uf.unite(i * cols + j, (i + 1) * cols + j)) --components;
            if (pi.at(i, j + 1) == v && uf.unite(i * cols + j, i * cols + j + 1)) --components;
        }
    }
    return components;
}

int formula(const SlicedPP& s) {
    StrictPartition center(s.center);
    int p = -center.length();
    auto side = [&](const std::vector<Slice>& slices) {
        StrictPartition prev = center;
        for (const auto& sl : slices) {
            StrictPartition cur(sl);
            p += sharp_count(prev, cur);
            prev = cur;
        }
        p += sharp_count(prev, StrictPartition());
    };
    side(s.left);
    side(s.right);
    return p;
}

}  // namespace

bool is_strict(const PlanePartition& pi) {
    SlicedPP s = diagonal_slices(pi);
    if (!strictly_decreasing(s.center)) return false;
    for (const auto& sl : s.left)
        if (!strictly_decreasing(sl)) return false;
    for (const auto& sl : s.right)
        if (!strictly_decreasing(sl)) return false;
    return true;
}

int path_exponent(const PlanePartition& pi, PathMethod method) {
    if (!is_strict(pi)) throw DomainError("path exponent requires a strict plane partition");
    if (method == PathMethod::Regions) return regions(pi);
    return formula(diagonal_slices(pi));
}

namespace {

struct ChainBuilder {
    std::map<StrictPartition, std::vector<StrictPartition>> restrictions;

    const std::vector<StrictPartition>& below(const StrictPartition& mu) {
        auto it = restrictions.find(mu);
        if (it == restrictions.end()) it = restrictions.emplace(mu, interlacing_restrictions(mu)).first;
        return it->second;
    }

    // Chains start = pi_0 > pi_1 > ... > pi_steps = empty; records pi_1..pi_{steps-1} (trailing
    // empties dropped) together with their total weight, subject to a weight budget.
    void chains(const StrictPartition& cur, int steps, int budget, std::vector<StrictPartition>& acc, int acc_w,
                std::vector<std::pair<std::vector<StrictPartition>, int>>& out) {
        if (cur.length() > steps) return;
        if (cur.empty()) {
            out.emplace_back(acc, acc_w);
            return;
        }
        if (steps == 0) return;
        for (const auto& nu : below(cur)) {
            if (nu.length() > steps - 1) continue;
            if (budget >= 0 && acc_w + nu.weight() > budget) continue;
            if (nu.empty()) {
                out.emplace_back(acc, acc_w);
                continue;
            }
            acc.push_back(nu);
            chains(nu, steps - 1, budget, acc, acc_w + nu.weight(), out);
            acc.pop_back();
        }
    }
};

}  // namespace

std::vector<PlanePartition> enumerate_boxed_strict(int n, int l, int m, int max_weight) {
    if (n < 0 || l < 0 || m < 0) throw UsageError("box dimensions must be non-negative");
    std::vector<PlanePartition> out;
    ChainBuilder builder;
    for (const auto& center : strict_partitions_in_box(std::min(n, l), m)) {
        int cw = center.weight();
        if (max_weight >= 0 && cw > max_weight) continue;
        int budget = max_weight >= 0 ? max_weight - cw : -1;
        std::vector<std::pair<std::vector<StrictPartition>, int>> lefts, rights;
        std::vector<StrictPartition> acc;
        builder.chains(center, n, budget, acc, 0, lefts);
        builder.chains(center, l, budget, acc, 0, rights);
        for (const auto& [lc, lw] : lefts) {
            for (const auto& [rc, rw] : rights) {
                if (budget >= 0 && lw + rw > budget) continue;
                SlicedPP s;
                s.center = center.parts();
                for (const auto& p : lc) s.left.push_back(p.parts());
                for (const auto& p : rc) s.right.push_back(p.parts());
                out.push_back(reassemble(s));
            }
        }
    }
    return out;
}

MultiSeries b_weight(const PlanePartition& pi, const SeriesContextPtr& ctx, const std::vector<std::size_t>& x_vars,
                     const std::vector<std::size_t>& z_vars) {
    if (static_cast<std::size_t>(pi.num_rows()) > x_vars.size())
        throw UsageError("b_weight: " + std::to_string(pi.num_rows()) + " rows need as many x variables");
    if (static_cast<std::size_t>(pi.num_cols()) > z_vars.size())
        throw UsageError("b_weight: " + std::to_string(pi.num_cols()) + " columns need as many z variables");
    int p = path_exponent(pi, PathMethod::Regions);
    SlicedPP s = diagonal_slices(pi);
    Monomial mono(ctx->size(), 0);
    auto assign = [&](const std::vector<Slice>& side, const std::vector<std::size_t>& vars) {
        int prev = weight_of(s.center);
        for (std::size_t i = 0; i <= side.size(); ++i) {
            int cur = i < side.size() ? weight_of(side[i]) : 0;
            if (prev - cur != 0) mono.at(vars[i]) += prev - cur;
            prev = cur;
        }
    };
    if (!pi.empty()) {
        assign(s.left, x_vars);
        assign(s.right, z_vars);
    }
    return MultiSeries::monomial(ctx, mono, pow2(p));
}

}  // namespace iboson
