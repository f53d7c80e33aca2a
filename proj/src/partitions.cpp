#include "iboson/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace iboson {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("strict partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
            throw DomainError("strict partition parts must strictly decrease");
    }
}

int StrictPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool StrictPartition::contains(int p) const {
    return std::find(parts_.begin(), parts_.end(), p) != parts_.end();
}

std::string StrictPartition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

StrictPartition StrictPartition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    if (t.empty() || t == "∅") return StrictPartition();
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw UsageError("partition: empty part in '" + text + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("partition: bad part '" + item + "'");
        }
        if (used != item.size()) throw UsageError("partition: bad part '" + item + "'");
        parts.push_back(v);
    }
    if (!t.empty() && t.back() == ',') throw UsageError("partition: trailing comma in '" + text + "'");
    try {
        return StrictPartition(std::move(parts));
    } catch (const DomainError& e) {
        throw UsageError(std::string("partition '") + text + "': " + e.what());
    }
}

bool graded_less(const StrictPartition& a, const StrictPartition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts() < b.parts();
}

bool interlaces(const StrictPartition& mu, const StrictPartition& nu) {
    int n = std::max(mu.length(), nu.length()) + 1;
    for (int i = 0; i < n; ++i) {
        if (mu.part(i) < nu.part(i)) return false;
        if (nu.part(i) < mu.part(i + 1)) return false;
    }
    return true;
}

int sharp_count(const StrictPartition& mu, const StrictPartition& nu) {
    int c = 0;
    for (int p : mu.parts())
        if (!nu.contains(p)) ++c;
    return c;
}

namespace {

void sort_graded(std::vector<StrictPartition>& v) { std::sort(v.begin(), v.end(), graded_less); }

void box_rec(int n, int hi, std::vector<int>& cur, std::vector<StrictPartition>& out) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) >= n) return;
    for (int p = hi; p >= 1; --p) {
        cur.push_back(p);
        box_rec(n, p - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> strict_partitions_in_box(int n, int m) {
    if (n < 0 || m < 0) throw UsageError("box dimensions must be non-negative");
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    box_rec(n, m, cur, out);
    sort_graded(out);
    return out;
}

namespace {

// Positions 0..len-1 where mu_k ranges over [lo_k, hi_k], strictly decreasing, all positive.
void range_rec(const std::vector<int>& lo, const std::vector<int>& hi, std::size_t k, std::vector<int>& cur,
               std::vector<StrictPartition>& out) {
    if (k == lo.size()) {
        out.emplace_back(cur);
        return;
    }
    int top = hi[k];
    if (k > 0) top = std::min(top, cur.back() - 1);
    for (int p = top; p >= std::max(lo[k], 1); --p) {
        cur.push_back(p);
        range_rec(lo, hi, k + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> interlacing_extensions(const StrictPartition& nu, int n, int m) {
    if (n < 0 || m < 0) throw UsageError("box dimensions must be non-negative");
    std::vector<StrictPartition> out;
    int l = nu.length();
    if (l > n || (l > 0 && nu.part(0) > m)) return out;
    // mu_0 in [nu_0, m], mu_k in [nu_k, nu_{k-1}]; optionally one more part in [1, nu_{l-1}].
    for (int extra = 0; extra <= 1; ++extra) {
        int len = l + extra;
        if (len > n) break;
        std::vector<int> lo(static_cast<std::size_t>(len)), hi(static_cast<std::size_t>(len));
        for (int k = 0; k < len; ++k) {
            lo[static_cast<std::size_t>(k)] = nu.part(k);
            hi[static_cast<std::size_t>(k)] = k == 0 ? m : nu.part(k - 1);
        }
        std::vector<int> cur;
        range_rec(lo, hi, 0, cur, out);
    }
    sort_graded(out);
    return out;
}

std::vector<StrictPartition> interlacing_restrictions(const StrictPartition& mu, int max_len) {
    std::vector<StrictPartition> out;
    int l = mu.length();
    // nu_k in [mu_{k+1}, mu_k]; nu has length l or l-1 (its last slot may be 0).
    for (int len = l; len >= std::max(l - 1, 0); --len) {
        if (max_len >= 0 && len > max_len) continue;
        std::vector<int> lo(static_cast<std::size_t>(len)), hi(static_cast<std::size_t>(len));
        for (int k = 0; k < len; ++k) {
            lo[static_cast<std::size_t>(k)] = mu.part(k + 1);
            hi[static_cast<std::size_t>(k)] = mu.part(k);
        }
        std::vector<int> cur;
        range_rec(lo, hi, 0, cur, out);
    }
    sort_graded(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace iboson
