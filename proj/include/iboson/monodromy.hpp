#pragma once

#include <array>
#include <map>
#include <vector>

#include "iboson/lattice.hpp"

namespace iboson {

struct SiteOp {
    ModeOp op;
    int site;
    auto operator<=>(const SiteOp&) const = default;
};

// Operator product in written order: the leftmost factor acts last on kets, first on bras.
using OpWord = std::vector<SiteOp>;
// Laurent polynomial in u (x = u^2): exponent -> coefficient.
using Laurent = std::map<int, QSqrt2>;
using OperatorEntry = std::map<OpWord, Laurent>;

struct OperatorMatrix {
    std::array<std::array<OperatorEntry, 2>, 2> e;
    const OperatorEntry& operator()(int r, int c) const { return e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
};

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

// L_i(x) = [[x^{-1/2}, sqrt2 phi_i^dagger], [sqrt2 phi_i, x^{1/2}]] in u; inverted substitutes u -> 1/u.
struct LMatrix {
    int site;
    int species;
    OperatorMatrix entries(bool inverted = false) const;
};

// T(u) = L_M ... L_0 (cached per (M, inverted)).
const OperatorMatrix& monodromy(int size, bool inverted);

// Applies a word to one basis vector.
std::optional<ModeImage> apply_word(const OpWord& w, const LatticeConfig& c, Side side, int n0_cap, Site0Rule rule,
                                    bool* overflow = nullptr);

using NumVector = std::map<LatticeConfig, QSqrt2>;

// Entry evaluated at a rational u, applied to a vector with Q(sqrt2) coefficients.
NumVector apply_entry(const OperatorEntry& entry, const Rational& u, const NumVector& v, Side side, Site0Rule rule);

// R(x,y) T_1(x) T_2(y) = T_2(y) T_1(x) R(x,y) with x = u^2, y = w^2, checked entrywise on every
// basis vector with n0 <= 2: for each single L_i (i = 0..size) and for T = L_size ... L_0.
// On failure *witness receives a description of the first mismatch.
bool verify_rtt(int size, const std::vector<std::pair<Rational, Rational>>& points, Side side = Side::Ket,
                Site0Rule rule = Site0Rule::AlgebraConsistent, std::string* witness = nullptr);

// Same relation for one operator matrix family (used for single-site checks).
bool verify_rtt_matrix(const OperatorMatrix& t, int size, const std::vector<std::pair<Rational, Rational>>& points,
                       Side side, Site0Rule rule, std::string* witness = nullptr);

// Seeded rational points with |numerator|, denominator <= 7, numerator != 0.
std::vector<std::pair<Rational, Rational>> random_points(unsigned long long seed, int count);

}  // namespace iboson
