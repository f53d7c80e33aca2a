#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "iboson/partitions.hpp"
#include "iboson/series.hpp"

namespace iboson {

// Fock state label: a strict 2-partition plus, per component, whether the word ends in the
// zero mode phi_0 (the padded part mu_{2r} = 0). l(.) never counts the pad.
struct FockLabel {
    TwoPartition pair;
    std::array<bool, 2> pad{false, false};

    // Even-length words: pad exactly the odd-length components.
    static FockLabel canonical(TwoPartition pair);
    bool is_canonical() const;

    const StrictPartition& component(int c) const { return c == 0 ? pair.first : pair.second; }

    // "mu1|mu2", each side a partition string with an optional trailing ",0" pad marker.
    std::string str() const;
    static FockLabel parse(const std::string& text);

    auto operator<=>(const FockLabel&) const = default;
};

class FockVector {
public:
    explicit FockVector(SeriesContextPtr ctx) : ctx_(std::move(ctx)) {}

    static FockVector basis(SeriesContextPtr ctx, const FockLabel& label);

    const SeriesContextPtr& context() const { return ctx_; }
    const std::map<FockLabel, MultiSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const FockLabel& label, const MultiSeries& coeff);
    MultiSeries coefficient(const FockLabel& label) const;

    FockVector& operator+=(const FockVector& o);
    FockVector& operator*=(const MultiSeries& s);
    bool operator==(const FockVector& o) const;

    std::string str() const;

private:
    SeriesContextPtr ctx_;
    std::map<FockLabel, MultiSeries> terms_;
};

enum class Flavor { Phi, PhiBar };

struct Mode {
    Flavor flavor;
    int index;
    bool operator==(const Mode&) const = default;
};

using CliffordWord = std::vector<Mode>;

// <0| word |0> by normal-ordering rewriting.
QSqrt2 vev(const CliffordWord& word);

// phi_{mu_1} ... phi_{mu_2r} phibar_{...} for the ket |mu1, mu2>.
CliffordWord ket_word(const FockLabel& label);
// phibar*_{mu2_2r} ... phibar*_{mu2_1} phi*_{mu1_2r} ... phi*_{mu1_1} for the bra <mu2, mu1|,
// with phi*_n = (-1)^n phi_{-n}; returns the word and the accumulated sign.
std::pair<CliffordWord, int> bra_word(const FockLabel& label);

enum class PairingMethod { ClosedForm, Clifford };

MultiSeries fock_inner(const FockVector& bra, const FockVector& ket, PairingMethod method);

// phi_k acting on a ket, reduced back to labels.
FockVector apply_mode(const Mode& mode, const FockVector& ket);

// Gamma_+(z, v) on kets: finite interlacing sum.
FockVector gamma_plus(const FockVector& ket, std::size_t z_var, std::size_t v_var);
// <nu| Gamma_+(z, v): upward sum, truncated at added weight <= cap.
FockVector gamma_plus_bra(const FockVector& bra, std::size_t z_var, std::size_t v_var, int cap);
// Gamma_-(z, v) on kets: upward sum, truncated at added weight <= cap.
FockVector gamma_minus(const FockVector& ket, std::size_t z_var, std::size_t v_var, int cap);
// <mu| Gamma_-(z, v): finite interlacing sum.
FockVector gamma_minus_bra(const FockVector& bra, std::size_t z_var, std::size_t v_var);

// Gamma_+ phi_i = (phi_i + 2 sum_{n>=1} phi_{i-n} z^n) Gamma_+ on |0> and phi_j|0>, j <= order,
// with all series truncated at degree order.
bool check_mode_conjugation(int i, Flavor flavor, int order);

// Gamma_+(z,v) Gamma_-(x,y)|s> = (1+xz)/(1-xz) (1+yv)/(1-yv) Gamma_-(x,y) Gamma_+(z,v)|s>
// with every variable capped at order.
bool check_gamma_commutation(int order, const std::vector<FockLabel>& states);

// All canonical labels with |mu1| + |mu2| <= max_weight, sorted.
std::vector<FockLabel> labels_up_to_weight(int max_weight);

}  // namespace iboson
