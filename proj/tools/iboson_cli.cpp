// iboson: enumeration, Schur Q-functions, scalar products, series and the verification suite.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "iboson/lattice.hpp"
#include "iboson/plane_partition.hpp"
#include "iboson/schur_q.hpp"
#include "iboson/verify.hpp"

using namespace iboson;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_dims(const std::string& text, std::size_t count, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError(flag + ": bad integer '" + item + "'");
        }
        if (used != item.size() || v < 0) throw UsageError(flag + ": bad value '" + item + "'");
        out.push_back(v);
    }
    if (out.size() != count) throw UsageError(flag + " expects " + std::to_string(count) + " comma-separated values");
    return out;
}

void print_series(const MultiSeries& s, bool as_json, json extra = json::object()) {
    if (as_json) {
        extra["series"] = series_to_json(s);
        std::cout << extra.dump(2) << "\n";
    } else {
        std::cout << s.str() << "\n";
    }
}

void guard_terms(const MultiSeries& s, long max_terms) {
    if (max_terms >= 0 && static_cast<long>(s.size()) > max_terms)
        throw UsageError("result has " + std::to_string(s.size()) + " terms, above --max-terms " +
                         std::to_string(max_terms));
}

int env_threads() {
    const char* e = std::getenv("IBOSON_THREADS");
    if (!e || !*e) return 1;
    try {
        return std::max(1, std::stoi(e));
    } catch (const std::exception&) {
        throw UsageError("IBOSON_THREADS must be an integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strict plane partitions, Schur Q-functions and the generalized i-boson lattice"};
    app.require_subcommand(1);
    std::string format = "human";
    app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"human", "json"}))->capture_default_str();

    // enumerate
    auto* en = app.add_subcommand("enumerate", "List strict plane partitions or strict partitions in a box");
    std::string plane_dims, strict_dims;
    int max_weight = -1;
    long max_volume = 512, max_items = 200000;
    auto* plane_opt = en->add_option("--plane", plane_dims, "Strict plane partitions in an N,L,M box");
    auto* strict_opt = en->add_option("--strict", strict_dims, "Strict partitions in an N,M box");
    plane_opt->excludes(strict_opt);
    en->add_option("--max-weight", max_weight, "Only items of weight at most this (-1: no bound)")->capture_default_str();
    en->add_option("--max-volume", max_volume, "Refuse boxes with N*L*M (or N*M) above this")->capture_default_str();
    en->add_option("--max-items", max_items, "Refuse listings longer than this")->capture_default_str();

    // schurq
    auto* sq = app.add_subcommand("schurq", "Schur Q-function Q_mu(x_1..x_n)");
    std::string mu_text;
    int nvars = 1;
    std::string method = "both";
    long max_terms = 100000;
    sq->add_option("--mu", mu_text, "Strict partition, e.g. 3,1 (empty for the trivial partition)")->required();
    sq->add_option("--vars", nvars, "Number of variables")->check(CLI::Range(0, 12))->capture_default_str();
    sq->add_option("--method", method, "pfaffian, branching, or both (asserts equality)")
        ->check(CLI::IsMember({"pfaffian", "branching", "both"}))
        ->capture_default_str();
    sq->add_option("--max-terms", max_terms, "Refuse results with more terms")->capture_default_str();

    // scalar-product
    auto* sp = app.add_subcommand("scalar-product", "Scalar product of B- and C-strings on the two-species lattice");
    std::string sp_dims;
    int sp_degree = -1;
    std::string route = "all", bc_method = "combinatorial";
    sp->add_option("--dims", sp_dims, "N1,N2,M1,M2")->required();
    sp->add_option("--degree", sp_degree, "Total-degree truncation (-1: none)")->capture_default_str();
    sp->add_option("--route", route, "lattice, plane, schurq, or all (asserts agreement)")
        ->check(CLI::IsMember({"lattice", "plane", "schurq", "all"}))
        ->capture_default_str();
    sp->add_option("--method", bc_method, "B/C evaluation on the lattice")
        ->check(CLI::IsMember({"combinatorial", "matrix"}))
        ->capture_default_str();
    sp->add_option("--max-terms", max_terms, "Refuse results with more terms")->capture_default_str();

    // series
    auto* se = app.add_subcommand("series", "Product generating functions in p, q");
    std::string which;
    int order = 6;
    se->add_option("kind", which, "buc or strict-buc")->required()->check(CLI::IsMember({"buc", "strict-buc"}));
    se->add_option("--order", order, "Total-degree truncation")->check(CLI::Range(0, 30))->capture_default_str();

    // verify
    auto* ve = app.add_subcommand("verify", "Run named checks (or 'all' for the default suite)");
    std::vector<std::string> names;
    std::string box, dims, out_file;
    int v_order = 6, v_degree = -2, threads = 0;
    unsigned long long seed = kDefaultSeed;
    std::vector<std::string> raw_params;
    bool list = false;
    ve->add_option("checks", names, "Check names");
    ve->add_flag("--list", list, "List check names with their default parameters");
    ve->add_option("--box", box, "Box for path-exponent (N,L,M) or schur-q (N,M)");
    ve->add_option("--dims", dims, "N1,N2,M1,M2 for scalar-product");
    ve->add_option("--order", v_order, "Order for 'all' and for checks with an order parameter")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    ve->add_option("--degree", v_degree, "Degree for checks with a degree parameter");
    ve->add_option("--param", raw_params, "Extra parameter key=JSON, repeatable");
    ve->add_option("--threads", threads, "Worker threads (default: IBOSON_THREADS or 1)");
    ve->add_option("--seed", seed, "RNG seed for sampled checks")->capture_default_str();
    ve->add_option("--out", out_file, "Also write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    bool as_json = format == "json";

    try {
        if (*en) {
            if (plane_opt->count() == 0 && strict_opt->count() == 0) throw UsageError("enumerate needs --plane or --strict");
            json out;
            std::vector<std::string> lines;
            if (plane_opt->count()) {
                auto d = parse_dims(plane_dims, 3, "--plane");
                long volume = static_cast<long>(d[0]) * d[1] * d[2];
                if (volume > max_volume)
                    throw UsageError("box volume " + std::to_string(volume) + " exceeds --max-volume " +
                                     std::to_string(max_volume));
                auto all = enumerate_boxed_strict(d[0], d[1], d[2], max_weight);
                if (static_cast<long>(all.size()) > max_items)
                    throw UsageError(std::to_string(all.size()) + " items exceed --max-items " + std::to_string(max_items));
                json items = json::array();
                for (const auto& pi : all) {
                    items.push_back(pi.rows());
                    lines.push_back(pi.empty() ? "(empty)" : pi.str());
                }
                out = {{"kind", "plane"}, {"box", d}, {"items", items}, {"count", all.size()}};
            } else {
                auto d = parse_dims(strict_dims, 2, "--strict");
                long volume = static_cast<long>(d[0]) * d[1];
                if (volume > max_volume)
                    throw UsageError("box volume " + std::to_string(volume) + " exceeds --max-volume " +
                                     std::to_string(max_volume));
                json items = json::array();
                for (const auto& mu : strict_partitions_in_box(d[0], d[1])) {
                    if (max_weight >= 0 && mu.weight() > max_weight) continue;
                    items.push_back(mu.parts());
                    lines.push_back(mu.empty() ? "(empty)" : mu.str());
                }
                if (static_cast<long>(items.size()) > max_items)
                    throw UsageError(std::to_string(items.size()) + " items exceed --max-items " + std::to_string(max_items));
                out = {{"kind", "strict"}, {"box", d}, {"items", items}, {"count", items.size()}};
            }
            if (as_json) {
                std::cout << out.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < lines.size(); ++i) {
                    if (plane_opt->count() && i) std::cout << "--\n";
                    std::cout << lines[i] << "\n";
                }
                std::cout << "count: " << lines.size() << "\n";
            }
            return 0;
        }

        if (*sq) {
            StrictPartition mu = StrictPartition::parse(mu_text);
            std::vector<std::string> vars;
            for (int i = 1; i <= nvars; ++i) vars.push_back("x" + std::to_string(i));
            auto ctx = SeriesContext::uniform(vars, kUnbounded);
            QContext q = QContext::of(ctx, vars);
            MultiSeries result(ctx);
            if (method == "branching") {
                result = schur_q_branching(mu, q);
            } else {
                result = schur_q_pfaffian(mu, q);
                if (method == "both" && !(result == schur_q_branching(mu, q))) {
                    std::cerr << "error: Pfaffian and branching results differ\n";
                    return kExitFail;
                }
            }
            guard_terms(result, max_terms);
            print_series(result, as_json, {{"mu", mu.parts()}, {"method", method}});
            return 0;
        }

        if (*sp) {
            auto d = parse_dims(sp_dims, 4, "--dims");
            ScalarProductSetup s = make_scalar_product_setup(d[0], d[1], d[2], d[3], sp_degree);
            BCMethod m = bc_method == "matrix" ? BCMethod::Matrix : BCMethod::Combinatorial;
            MultiSeries result(s.ctx);
            if (route == "lattice") result = scalar_product(s, SPRoute::Lattice, m);
            else if (route == "plane") result = scalar_product(s, SPRoute::PlanePartition);
            else if (route == "schurq") result = scalar_product(s, SPRoute::SchurQ);
            else {
                result = scalar_product(s, SPRoute::Lattice, m);
                if (!(result == scalar_product(s, SPRoute::PlanePartition)) ||
                    !(result == scalar_product(s, SPRoute::SchurQ))) {
                    std::cerr << "error: scalar product routes disagree\n";
                    return kExitFail;
                }
            }
            guard_terms(result, max_terms);
            print_series(result, as_json, {{"dims", d}, {"degree", sp_degree}, {"route", route}});
            return 0;
        }

        if (*se) {
            MultiSeries s = which == "buc" ? buc_macmahon_series(order) : strict_buc_series(order);
            print_series(s, as_json, {{"kind", which}, {"order", order}});
            return 0;
        }

        if (*ve) {
            if (list) {
                for (const auto& c : check_registry())
                    std::cout << c.name << "  " << c.defaults.dump() << "  " << c.summary << "\n";
                return 0;
            }
            std::vector<CheckSpec> specs;
            json overlay = json::object();
            if (!box.empty()) {
                std::size_t n = static_cast<std::size_t>(std::count(box.begin(), box.end(), ',')) + 1;
                overlay["box"] = parse_dims(box, n, "--box");
            }
            if (!dims.empty()) overlay["dims"] = parse_dims(dims, 4, "--dims");
            if (ve->count("--degree")) overlay["degree"] = v_degree;
            std::set<std::string> unused;
            for (const auto& raw : raw_params) {
                auto eq = raw.find('=');
                if (eq == std::string::npos) throw UsageError("--param expects key=JSON");
                json value = json::parse(raw.substr(eq + 1), nullptr, false);
                if (value.is_discarded()) throw UsageError("--param " + raw.substr(0, eq) + ": value is not JSON");
                overlay[raw.substr(0, eq)] = value;
                unused.insert(raw.substr(0, eq));
            }
            for (const auto& n : names) {
                if (n == "all") {
                    for (auto& s : default_suite(v_order)) specs.push_back(std::move(s));
                    continue;
                }
                const CheckInfo& info = find_check(n);
                json params = json::object();
                for (const auto& [k, v] : overlay.items())
                    if (info.defaults.contains(k)) {
                        params[k] = v;
                        unused.erase(k);
                    }
                if (ve->count("--order") && info.defaults.contains("order")) params["order"] = v_order;
                specs.push_back({n, params});
            }
            // --param keys must reach some named check; suite members keep their own params.
            if (!unused.empty()) throw UsageError("--param " + *unused.begin() + ": no selected check takes it");
            int t = threads > 0 ? threads : env_threads();
            auto verdicts = run_suite(specs, seed, t);
            json report = report_json(verdicts, seed);
            if (!out_file.empty()) {
                std::ofstream f(out_file);
                if (!f) throw UsageError("cannot write " + out_file);
                f << report.dump(2) << "\n";
            }
            if (as_json) {
                std::cout << report.dump(2) << "\n";
            } else {
                std::cout << "seed " << seed << "\n";
                for (const auto& v : verdicts) {
                    std::cout << (v.pass ? "PASS " : "FAIL ") << v.name << " " << v.params.dump() << " ("
                              << static_cast<long>(v.millis) << " ms)";
                    if (!v.detail.empty()) std::cout << "  " << v.detail;
                    std::cout << "\n";
                    if (v.witness) std::cout << "  witness: " << *v.witness << "\n";
                }
            }
            return all_pass(verdicts) ? 0 : kExitFail;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
