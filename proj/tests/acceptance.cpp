// Acceptance run: one PASS/FAIL line per criterion, with wall-time budgets.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "iboson/verify.hpp"

using namespace iboson;
using nlohmann::json;

namespace {

struct Result {
    bool ok = true;
    std::string note;
};

Result suite(const std::vector<CheckSpec>& specs) {
    Result r;
    for (const auto& v : run_suite(specs)) {
        if (v.pass) continue;
        r.ok = false;
        if (r.note.empty()) r.note = v.name + ": " + v.witness.value_or("");
    }
    return r;
}

std::pair<int, std::string> capture(const std::string& args) {
    std::string cmd = std::string("\"") + IBOSON_CLI + "\" " + args;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string strip_millis(const std::string& text) {
    json j = json::parse(text);
    for (auto& v : j["verdicts"]) v.erase("millis");
    return j.dump();
}

Result determinism() {
    auto [s1, a] = capture("--format json verify all --threads 1");
    auto [s8, b] = capture("--format json verify all --threads 8");
    if (s1 != 0 || s8 != 0) return {false, "exit codes " + std::to_string(s1) + " " + std::to_string(s8)};
    if (strip_millis(a) != strip_millis(b)) return {false, "reports differ"};
    return {true, std::to_string(json::parse(a)["verdicts"].size()) + " verdicts"};
}

}  // namespace

int main() {
    std::vector<CheckSpec> sweep;
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 2; ++n2)
            for (int m1 = 0; m1 <= 3; ++m1)
                for (int m2 = 0; m2 <= 3; ++m2)
                    sweep.push_back({"scalar-product", {{"dims", {n1, n2, m1, m2}}, {"degree", 8}}});

    struct Criterion {
        int id;
        const char* what;
        double budget_s;
        std::function<Result()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "figure", 1, [] { return suite({{"figure"}}); }},
        {2, "path exponent on [3,3,4]", 30, [] { return suite({{"path-exponent", {{"box", {3, 3, 4}}}}}); }},
        {3, "Schur Q Pfaffian vs branching", 30, [] { return suite({{"schur-q", {{"box", {3, 5}}, {"vars", {1, 2, 3}}}}}); }},
        {4, "three-route scalar product", 120, [&] { return suite(sweep); }},
        {5, "RTT and B/C commutativity", 60,
         [] { return suite({{"rtt", {{"max_m", 3}, {"points", 20}}}, {"bc-commute", {{"max_m", 4}}}}); }},
        {6, "Fock pairing", 60, [] { return suite({{"fock-pairing", {{"weight", 4}}}}); }},
        {7, "vertex operators", 120,
         [] {
             return suite({{"gamma-commutation", {{"weight", 6}, {"cap", 6}}},
                           {"mode-conjugation", {{"modes", 4}, {"order", 4}}},
                           {"lattice-gamma-minus", {{"m", 8}, {"degree", 8}}}});
         }},
        {8, "product formulas", 60, [] { return suite({{"strict-buc", {{"order", 8}}}, {"macmahon", {{"order", 8}}}}); }},
        {9, "infinite lattice", 300,
         [] {
             return suite({{"infinite-lattice", {{"n1", 1}, {"n2", 1}, {"m", 10}, {"degree", 10}}},
                           {"stabilization", {{"n1", 1}, {"n2", 1}, {"max_degree", 8}}}});
         }},
        {10, "thread-count determinism", 300, determinism},
    };

    bool all = true;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("error: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.ok && secs > c.budget_s) {
            r.ok = false;
            r.note = "over budget";
        }
        all = all && r.ok;
        std::printf("%s %d %s (%.2fs)%s%s\n", r.ok ? "PASS" : "FAIL", c.id, c.what, secs, r.note.empty() ? "" : " ",
                    r.note.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
