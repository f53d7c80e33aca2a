#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iboson/fock.hpp"
#include "iboson/partitions.hpp"
#include "iboson/series.hpp"

namespace iboson {

enum class Side { Ket, Bra };
enum class ModeOp { Annihilate, Create, Number };

// Ket-side phi_0 factor. AsPrinted uses (1+(-1)^{n0})/sqrt2; AlgebraConsistent uses
// (1-(-1)^{n0})/sqrt2, the partner of the bra-side phi_0^dagger rule.
enum class Site0Rule { AlgebraConsistent, AsPrinted };

// Occupations of one species on sites 0..M: n0 >= 0 unbounded, n_i in {0,1} for i >= 1.
class LatticeConfig {
public:
    LatticeConfig(int species, std::vector<int> occupations);
    static LatticeConfig vacuum(int species, int size);

    int species() const { return species_; }
    int size() const { return static_cast<int>(occ_.size()) - 1; }
    int n(int site) const { return occ_.at(static_cast<std::size_t>(site)); }
    const std::vector<int>& occupations() const { return occ_; }
    int particle_number() const;
    LatticeConfig with(int site, int value) const;

    // "species:j n0,n1,...,nM"
    std::string str() const;
    static LatticeConfig parse(const std::string& text);

    auto operator<=>(const LatticeConfig&) const = default;

private:
    int species_;
    std::vector<int> occ_;
};

// All configurations of one species on sites 0..size with n0 in [0, max_n0].
std::vector<LatticeConfig> all_configs(int species, int size, int max_n0);

struct ModeImage {
    LatticeConfig config;
    QSqrt2 factor;
};

// Image of a basis vector under one mode; nullopt when the image vanishes or leaves the
// state space. *overflow is set when an n0 > n0_cap term was dropped (n0_cap < 0: no cap).
std::optional<ModeImage> act_mode(ModeOp op, int site, const LatticeConfig& c, Side side, int n0_cap,
                                  Site0Rule rule = Site0Rule::AlgebraConsistent, bool* overflow = nullptr);

struct LatticeShape {
    int m1 = 0;
    int m2 = 0;
    int n0_cap = kUnbounded;
    int size(int species) const { return species == 1 ? m1 : m2; }
    bool operator==(const LatticeShape&) const = default;
};

using ConfigPair = std::pair<LatticeConfig, LatticeConfig>;

class LatticeVector {
public:
    LatticeVector(LatticeShape shape, SeriesContextPtr ctx);
    static LatticeVector vacuum(LatticeShape shape, SeriesContextPtr ctx);
    static LatticeVector basis(LatticeShape shape, SeriesContextPtr ctx, const LatticeConfig& c1,
                               const LatticeConfig& c2);

    const LatticeShape& shape() const { return shape_; }
    const SeriesContextPtr& context() const { return ctx_; }
    const std::map<ConfigPair, MultiSeries>& terms() const { return terms_; }
    bool truncated() const { return truncated_; }
    void mark_truncated() { truncated_ = true; }
    bool is_zero() const { return terms_.empty(); }

    void add(const ConfigPair& key, const MultiSeries& coeff);
    LatticeVector& operator+=(const LatticeVector& o);
    LatticeVector& operator-=(const LatticeVector& o);
    bool operator==(const LatticeVector& o) const;

    std::string str() const;

private:
    LatticeShape shape_;
    SeriesContextPtr ctx_;
    std::map<ConfigPair, MultiSeries> terms_;
    bool truncated_ = false;
};

LatticeVector apply_mode(ModeOp op, int species, int site, const LatticeVector& v, Side side,
                         Site0Rule rule = Site0Rule::AlgebraConsistent);

// Bilinear pairing: theta_0 = 2^{m0} for m0 in {0,1} (else 0) times prod 2^{-m_i} per species.
MultiSeries inner_product(const LatticeVector& bra, const LatticeVector& ket);

// Tail sums: Sigma_0(m) - Sigma_0(n) = 1 and 0 <= Sigma_i(m) - Sigma_i(n) <= 1 for i >= 1.
bool is_admissible(const LatticeConfig& m, const LatticeConfig& n);

// Every m admissible to n, sorted; built site by site from M down to 1.
std::vector<LatticeConfig> admissible_configs(const LatticeConfig& n);

struct FockImage {
    TwoPartition pair;
    int exponent;  // -l(nu1) - l(nu2)
};

FockImage map_to_fock(const LatticeConfig& c1, const LatticeConfig& c2);

// Applies M (kets) or M* (bras); both have the same form on basis vectors.
FockVector to_fock(const LatticeVector& v);

enum class BCMethod { Combinatorial, Matrix };

// Normalized B: u^{M} B(u) with x = u^2, acting on kets.
LatticeVector apply_B(int species, std::size_t var, const LatticeVector& ket, BCMethod method);
// Normalized C: u^{M} C(1/u) with x = u^2, acting on bras.
LatticeVector apply_C(int species, std::size_t var, const LatticeVector& bra, BCMethod method);

// Variables x1..xN1, z1..zN1, y1..yN2, v1..vN2 for the scalar product.
struct ScalarProductSetup {
    int n1 = 0, n2 = 0, m1 = 0, m2 = 0;
    SeriesContextPtr ctx;
    std::vector<std::size_t> x, z, y, v;
};

ScalarProductSetup make_scalar_product_setup(int n1, int n2, int m1, int m2, int total_degree = kUnbounded);

enum class SPRoute { Lattice, PlanePartition, SchurQ };

MultiSeries scalar_product(const ScalarProductSetup& s, SPRoute route, BCMethod method = BCMethod::Combinatorial);

}  // namespace iboson
