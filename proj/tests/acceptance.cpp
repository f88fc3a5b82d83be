// Acceptance suite: runs every verification battery at its contract
// parameters and prints one pass/fail line per criterion.

#include "kqm/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace {

using kqm::CheckResult;
using kqm::VerificationReport;

struct Criterion {
    int id;
    std::string label;
    bool passed;
    std::string detail;
};

const CheckResult* find_check(const VerificationReport& report, const std::string& name) {
    for (const CheckResult& check : report.checks) {
        if (check.name == name) return &check;
    }
    return nullptr;
}

// Asserts residual <= bound for a named check, accumulating a detail string.
bool check_below(const VerificationReport& report, const std::string& name, double bound,
                 std::string& detail) {
    const CheckResult* check = find_check(report, name);
    char buf[160];
    if (check == nullptr) {
        std::snprintf(buf, sizeof(buf), " [%s missing]", name.c_str());
        detail += buf;
        return false;
    }
    const bool ok = check->residual <= bound;
    std::snprintf(buf, sizeof(buf), " %s=%.3e%s", name.c_str(), check->residual,
                  ok ? "" : " EXCEEDS");
    detail += buf;
    return ok;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    kqm::VerifyOptions opts; // suite defaults, seed 1
    opts.seed = 1;

    std::map<std::string, VerificationReport> reports;
    std::map<std::string, double> elapsed;
    const auto t_begin = clock::now();
    for (const std::string& name : kqm::suite_names()) {
        const auto t0 = clock::now();
        reports.emplace(name, kqm::run_suite(name, opts));
        elapsed[name] = std::chrono::duration<double>(clock::now() - t0).count();
    }
    const double total_first_pass = std::chrono::duration<double>(clock::now() - t_begin).count();

    std::vector<Criterion> criteria;

    {
        const VerificationReport& r = reports.at("axioms");
        std::string detail;
        bool ok = check_below(r, "g-equals-omega-J", 1e-12, detail);
        ok &= check_below(r, "omega-equals-gJ", 1e-12, detail);
        ok &= check_below(r, "omega-J-invariant", 1e-12, detail);
        ok &= check_below(r, "g-J-invariant", 1e-12, detail);
        ok &= r.passed;
        const bool in_time = elapsed.at("axioms") < 10.0;
        char buf[64];
        std::snprintf(buf, sizeof(buf), " runtime=%.2fs%s", elapsed.at("axioms"),
                      in_time ? "" : " EXCEEDS 10s");
        detail += buf;
        criteria.push_back({1, "Kahler axiom suite (10^4 triples, n up to 64, <1e-12)",
                            ok && in_time, detail});
    }
    {
        const VerificationReport& r = reports.at("correspondence");
        std::string detail;
        const bool ok = check_below(r, "inner-product-identity", 1e-12, detail) && r.passed;
        criteria.push_back({2, "inner product equals g + i*omega through gamma (<1e-12)", ok,
                            detail});
    }
    {
        const VerificationReport& r = reports.at("spectral");
        std::string detail;
        bool ok = check_below(r, "even-multiplicity", 0.0, detail);
        ok &= check_below(r, "eigenvector-residual", 1e-10, detail);
        ok &= check_below(r, "J-partner-eigenvector-residual", 1e-10, detail);
        criteria.push_back({3, "double degeneracy on 500 random operators (<1e-10 ||L||)", ok,
                            detail});
    }
    {
        const VerificationReport& r = reports.at("spectral");
        std::string detail;
        bool ok = check_below(r, "reconstruction", 1e-10, detail);
        ok &= check_below(r, "completeness", 1e-10, detail);
        ok &= check_below(r, "projector-idempotent", 1e-10, detail);
        ok &= check_below(r, "projector-pairwise-orthogonal", 1e-10, detail);
        ok &= check_below(r, "projector-J-commuting", 1e-10, detail);
        criteria.push_back({4, "resolution of identity and projector algebra (<1e-10)", ok,
                            detail});
    }
    {
        const VerificationReport& r = reports.at("spectral");
        std::string detail;
        bool ok = check_below(r, "closed-form-dense-agreement", 1e-9, detail);
        ok &= check_below(r, "closed-form-near-singular-fallback", 1e-10, detail);
        criteria.push_back({5, "closed-form K^4 spectrum, 1000 generic + 1000 near-singular", ok,
                            detail});
    }
    {
        const VerificationReport& r = reports.at("tensor");
        std::string detail;
        bool ok = check_below(r, "projector-P-identity", 1e-13, detail);
        ok &= check_below(r, "gamma-kron-intertwine", 1e-13, detail);
        ok &= check_below(r, "bilinear-g-R", 1e-11, detail);
        ok &= check_below(r, "bilinear-omega-R", 1e-11, detail);
        ok &= check_below(r, "bilinear-g-K", 1e-11, detail);
        ok &= check_below(r, "bilinear-omega-K", 1e-11, detail);
        criteria.push_back({6, "tensor identities and the four bilinear-form laws", ok, detail});
    }
    {
        const VerificationReport& r = reports.at("born");
        std::string detail;
        bool ok = check_below(r, "probability-oracle-match", 1e-12, detail);
        ok &= check_below(r, "probability-sum", 1e-10, detail);
        ok &= check_below(r, "bell-sampling-frequencies", 3.0 * std::sqrt(0.25 / 100000.0),
                          detail);
        ok &= check_below(r, "bell-sampling-impossible-outcomes", 0.0, detail);
        criteria.push_back({7, "Born-rule equivalence and Bell sampling at 10^5 shots", ok,
                            detail});
    }
    {
        const VerificationReport& r = reports.at("reconstruction");
        std::string detail;
        const bool ok = check_below(r, "correlation-reconstruction", 1e-10, detail);
        criteria.push_back({8, "reconstruction theorem, chains k<=5, n<=16, 200 trials", ok,
                            detail});
    }
    {
        const VerificationReport& r = reports.at("groups");
        std::string detail;
        bool ok = check_below(r, "lifted-unitary-memberships", 1e-12, detail);
        ok &= check_below(r, "counterexample-pattern", 0.0, detail);
        ok &= check_below(r, "exp-G2-phase-grid", 1e-12, detail);
        criteria.push_back({9, "U(n) = Sp(2n,R) intersect O(2n) membership battery", ok, detail});
    }
    {
        // Determinism: a second full pass must serialize byte-identically.
        std::string first_doc = kqm::reports_to_json(
            [&] {
                std::vector<VerificationReport> ordered;
                for (const std::string& name : kqm::suite_names())
                    ordered.push_back(reports.at(name));
                return ordered;
            }(),
            opts.seed).dump();
        const auto rerun = kqm::run_all(opts);
        const std::string second_doc = kqm::reports_to_json(rerun, opts.seed).dump();
        const bool identical = first_doc == second_doc;
        const bool in_time = total_first_pass < 120.0;
        char buf[128];
        std::snprintf(buf, sizeof(buf), " identical=%s runtime=%.2fs%s",
                      identical ? "yes" : "NO", total_first_pass,
                      in_time ? "" : " EXCEEDS 120s");
        criteria.push_back({10, "byte-identical reports, full run under 2 minutes",
                            identical && in_time, std::string(buf)});
    }

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        if (!criterion.passed) ++failures;
        std::printf("[%s] criterion %2d: %s --%s\n", criterion.passed ? "PASS" : "FAIL",
                    criterion.id, criterion.label.c_str(), criterion.detail.c_str());
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
