#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "iboson/series.hpp"

namespace iboson {

inline constexpr const char* kReportSchema = "iboson-verify/1";
inline constexpr unsigned long long kDefaultSeed = 1729;

struct CheckSpec {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    // Comparisons are exact; kept so every report row has the same shape.
    int tolerance = 0;
};

struct Verdict {
    std::string name;
    nlohmann::json params;
    bool pass = false;
    std::string lhs_digest;
    std::string rhs_digest;
    std::optional<std::string> witness;  // present iff !pass
    std::string detail;
    double millis = 0;
};

// What a check body reports; the harness adds name, params and timing.
struct Outcome {
    bool pass = true;
    std::string lhs_digest;
    std::string rhs_digest;
    std::optional<std::string> witness;
    std::string detail;

    // Records a mismatch once; later calls keep the first witness.
    void fail(std::string w);
    // Series comparison with a first-differing-monomial witness.
    void compare(const MultiSeries& lhs, const MultiSeries& rhs, const std::string& label = "");
};

using CheckFn = std::function<Outcome(const nlohmann::json& params, unsigned long long seed)>;

struct CheckInfo {
    std::string name;
    std::string summary;
    nlohmann::json defaults;
    CheckFn run;
};

const std::vector<CheckInfo>& check_registry();
const CheckInfo& find_check(const std::string& name);  // UsageError when unknown

// Default params overlaid with the given ones; unknown keys are a usage error.
nlohmann::json resolve_params(const CheckInfo& info, const nlohmann::json& params);

// Default suite; order scales the series truncations and enumeration weights.
std::vector<CheckSpec> default_suite(int order);

// Runs every spec on a pool of `threads` workers; verdicts come back in spec order.
std::vector<Verdict> run_suite(const std::vector<CheckSpec>& specs, unsigned long long seed = kDefaultSeed,
                               int threads = 1);

bool all_pass(const std::vector<Verdict>& verdicts);

nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);
nlohmann::json report_json(const std::vector<Verdict>& verdicts, unsigned long long seed);

// {"variables": [...], "terms": [{"exponents": [...], "coefficient": [a, b]}]} for a + b sqrt2,
// terms in the order of MultiSeries::str().
nlohmann::json series_to_json(const MultiSeries& s);
MultiSeries series_from_json(const nlohmann::json& j, SeriesContextPtr ctx);

// Series and oracles used by the product-formula checks.
MultiSeries buc_macmahon_series(int order);
MultiSeries strict_buc_series(int order);
// Pairs of ordinary plane partitions weighted p^{|pi1|} q^{|pi2|}, by brute-force enumeration.
MultiSeries macmahon_enumeration(int order);
// Pairs of strict plane partitions weighted 2^{p(pi1)+p(pi2)} p^{|pi1|} q^{|pi2|}.
MultiSeries strict_buc_enumeration(int order);
// Ordinary plane partitions of each weight 0..order, counted by direct enumeration.
std::vector<long long> plane_partition_counts(int order);

// prod_{j,l} (1+x_j z_l)/(1-x_j z_l) prod_{j,k} (1+y_j v_k)/(1-y_j v_k) in the scalar product context.
MultiSeries infinite_lattice_product(int n1, int n2, int total_degree);

}  // namespace iboson
