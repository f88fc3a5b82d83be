#include "kqm/json_io.hpp"
#include "kqm/oracle.hpp"
#include "kqm/quantum.hpp"
#include "kqm/rng.hpp"
#include "kqm/verify.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using nlohmann::json;

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output path: " + out_path);
    out << doc.dump(2) << "\n";
}

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input path: " + path);
    return json::parse(in);
}

int cmd_verify(const std::string& suite, const kqm::VerifyOptions& opts,
               const std::string& out_path) {
    if (suite == "all") {
        const auto reports = kqm::run_all(opts);
        const json doc = kqm::reports_to_json(reports, opts.seed);
        emit(doc, out_path);
        return doc.at("passed").get<bool>() ? 0 : 1;
    }
    const kqm::VerificationReport report = kqm::run_suite(suite, opts);
    emit(report.to_json(), out_path);
    return report.passed ? 0 : 1;
}

int cmd_spectral(const std::string& input, const std::string& method,
                 const std::string& out_path) {
    const kqm::KahlerOperator op = kqm::kahler_operator_from_json(load(input));
    kqm::SpectralDecomposition decomp = [&] {
        if (method == "closed-form") return kqm::eigen_closed_form_n2(op);
        if (method == "dense") return kqm::eigen_dense(op);
        return kqm::eigen_structured(op);
    }();
    emit(kqm::to_json(decomp), out_path);
    return 0;
}

int cmd_correlate(const std::string& query_path, const std::string& out_path) {
    const kqm::CorrelationQuery query = kqm::correlation_query_from_json(load(query_path));
    const kqm::CorrelationResult result = kqm::correlation(query);
    const double tolerance = 1e-10 * (1.0 + std::abs(result.value));
    const bool ok = result.residual < tolerance;
    emit(json{{"value", {{"re", result.value.real()}, {"im", result.value.imag()}}},
              {"residual", result.residual},
              {"tolerance", tolerance},
              {"passed", ok}},
         out_path);
    return ok ? 0 : 1;
}

int cmd_simulate_bell(int shots, std::uint64_t seed, bool rank_divisor,
                      const std::string& out_path) {
    const kqm::KahlerVector bell = kqm::bell_state();
    kqm::CMat reg = kqm::CMat::Zero(4, 4);
    reg(1, 1) = 1;
    reg(2, 2) = 2;
    reg(3, 3) = 3;
    const auto outcomes = kqm::born_probabilities(bell, kqm::lift_operator(reg), rank_divisor);

    double total = 0;
    for (const auto& outcome : outcomes) total += outcome.probability;

    const std::array<const char*, 4> labels{"00", "01", "10", "11"};
    std::array<long long, 4> counts{0, 0, 0, 0};
    kqm::Rng rng(kqm::derive_seed(seed, 0x62656c6cULL, 0)); // stream tag "bell"
    for (int s = 0; s < shots; ++s) {
        const double u = rng.uniform() * total;
        double acc = 0;
        std::size_t outcome = outcomes.size() - 1;
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            acc += outcomes[i].probability;
            if (u < acc) {
                outcome = i;
                break;
            }
        }
        ++counts[outcome];
    }

    json probabilities, frequencies, counts_json;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        probabilities[labels[i]] = outcomes[i].probability;
        frequencies[labels[i]] = shots > 0 ? static_cast<double>(counts[i]) / shots : 0.0;
        counts_json[labels[i]] = counts[i];
    }
    emit(json{{"shots", shots},
              {"seed", seed},
              {"born_rank_divisor", rank_divisor},
              {"probabilities", probabilities},
              {"probability_sum", total},
              {"frequencies", frequencies},
              {"counts", counts_json}},
         out_path);
    return 0;
}

int cmd_group_check(const std::string& input, const std::string& out_path) {
    const kqm::Mat m = kqm::real_matrix_from_json(load(input));
    emit(kqm::to_json(kqm::check_memberships(m)), out_path);
    return 0;
}

int cmd_bench(const std::vector<int>& dims, int trials, std::uint64_t seed,
              const std::string& out_path) {
    using clock = std::chrono::steady_clock;
    json records = json::array();
    for (int n : dims) {
        double structured_time = 0, dense_time = 0;
        double structured_resid = 0, dense_resid = 0;
        for (int t = 0; t < trials; ++t) {
            kqm::Rng rng(kqm::derive_seed(seed, 0x62656e6368ULL, // stream tag "bench"
                                          static_cast<std::uint64_t>(n) * 1000003ULL + t));
            const kqm::KahlerOperator op = kqm::random_k_hermitian(rng, n);
            const kqm::Mat expanded = op.expanded();
            const double scale = std::max(1e-12, expanded.norm());

            const auto t0 = clock::now();
            const auto structured = kqm::eigen_structured(op);
            const auto t1 = clock::now();
            const auto dense = kqm::eigen_dense(op);
            const auto t2 = clock::now();

            structured_time += std::chrono::duration<double>(t1 - t0).count();
            dense_time += std::chrono::duration<double>(t2 - t1).count();
            structured_resid =
                std::max(structured_resid, (structured.reconstruct() - expanded).norm() / scale);
            dense_resid = std::max(dense_resid, (dense.reconstruct() - expanded).norm() / scale);
        }
        const int denom = std::max(1, trials);
        records.push_back(json{{"n", n},
                               {"method", "structured"},
                               {"wall_time_s", structured_time / denom},
                               {"residual", structured_resid}});
        records.push_back(json{{"n", n},
                               {"method", "dense"},
                               {"wall_time_s", dense_time / denom},
                               {"residual", dense_resid}});
    }
    emit(json{{"seed", seed}, {"trials", trials}, {"records", records}}, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum mechanics over real Kahler spaces, differentially "
                 "verified against a complex-Hilbert-space oracle"};
    app.require_subcommand(1);

    // verify
    std::string suite = "all";
    kqm::VerifyOptions verify_opts;
    double tol = 0.0;
    std::string out_path;
    auto* verify = app.add_subcommand("verify", "Run a differential verification suite");
    std::vector<std::string> suite_choices(kqm::suite_names());
    suite_choices.push_back("all");
    verify->add_option("--suite", suite, "Suite name")
        ->check(CLI::IsMember(suite_choices))
        ->capture_default_str();
    verify->add_option("--dims", verify_opts.dims, "Complex dimensions to draw from")
        ->check(CLI::PositiveNumber);
    verify->add_option("--trials", verify_opts.trials, "Trial count (0 = suite default)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", verify_opts.seed, "Master seed")->capture_default_str();
    auto* tol_opt = verify->add_option("--tol", tol, "Override every check tolerance");
    verify->add_option("--out", out_path, "Write the JSON report to this path");

    // spectral
    std::string spectral_input, spectral_method = "structured", spectral_out;
    auto* spectral = app.add_subcommand("spectral", "Decompose a K-Hermitian operator");
    spectral->add_option("--input", spectral_input, "Operator JSON {n,S,A}")->required();
    spectral->add_option("--method", spectral_method, "Eigensolver route")
        ->check(CLI::IsMember({"structured", "closed-form", "dense"}))
        ->capture_default_str();
    spectral->add_option("--out", spectral_out, "Write decomposition JSON to this path");

    // correlate
    std::string query_path, correlate_out;
    auto* correlate = app.add_subcommand("correlate", "Evaluate a correlation query both ways");
    correlate->add_option("--query", query_path, "Query JSON {operators,psi,phi}")->required();
    correlate->add_option("--out", correlate_out, "Write the result to this path");

    // simulate bell
    int shots = 100000;
    std::uint64_t sim_seed = 1;
    bool rank_divisor = false;
    std::string sim_out;
    auto* simulate = app.add_subcommand("simulate", "Sample measurement outcomes");
    auto* bell = simulate->add_subcommand("bell", "Bell-state register measurement");
    bell->add_option("--shots", shots, "Number of samples")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    bell->add_option("--seed", sim_seed, "Sampling seed")->capture_default_str();
    bell->add_flag("--born-rank-divisor", rank_divisor,
                   "Divide each probability by its projector rank (inspection mode)");
    bell->add_option("--out", sim_out, "Write the result to this path");
    simulate->require_subcommand(1);

    // group check
    std::string group_input, group_out;
    auto* group = app.add_subcommand("group", "Group membership utilities");
    auto* check = group->add_subcommand("check", "Test Kahler-unitary memberships");
    check->add_option("--input", group_input, "Matrix JSON {matrix: [[...]]}")->required();
    check->add_option("--out", group_out, "Write the membership set to this path");
    group->require_subcommand(1);

    // bench
    std::vector<int> bench_dims;
    int bench_trials = 5;
    std::uint64_t bench_seed = 1;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "Time structured vs dense eigensolvers");
    bench->add_option("--dims", bench_dims, "Complex dimensions to benchmark")
        ->check(CLI::PositiveNumber);
    bench->add_option("--trials", bench_trials, "Instances per dimension")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", bench_seed, "Instance seed")->capture_default_str();
    bench->add_option("--out", bench_out, "Write records to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            if (*tol_opt) verify_opts.tol_override = tol;
            return cmd_verify(suite, verify_opts, out_path);
        }
        if (*spectral) return cmd_spectral(spectral_input, spectral_method, spectral_out);
        if (*correlate) return cmd_correlate(query_path, correlate_out);
        if (*simulate) return cmd_simulate_bell(shots, sim_seed, rank_divisor, sim_out);
        if (*group) return cmd_group_check(group_input, group_out);
        if (*bench) return cmd_bench(bench_dims, bench_trials, bench_seed, bench_out);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
